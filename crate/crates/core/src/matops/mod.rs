//! Dense complex matrices, Hermitian spectra, and density matrices.

mod eigen;
mod matrix;
mod random;
mod state;

pub use eigen::hermitian_eigenvalues;
pub use matrix::{tensor, ComplexMatrix};
pub use random::{random_density, random_pure};
pub use state::{purity, validate_state, vn_entropy, DensityMatrix};

pub(crate) use state::{entropy_of_spectrum, shannon_bits};
