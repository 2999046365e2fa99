//! Bloch-vector Hilbert-Schmidt geometry and coherence quantifiers for
//! multi-qudit states.
//!
//! States are expanded in tensor products of generalized Gell-Mann matrices.
//! With the rescaled Bloch vector the Hilbert-Schmidt distance is a plain
//! Euclidean distance, and the Hilbert-Schmidt coherence is the norm of the
//! components that carry at least one off-diagonal generator.
//!
//! Everything is generic over [`Real`] (`f64` and `f32`). The `*64` and `*32`
//! aliases below fix the scalar.
//!
//! ```
//! use qudit_coherence::{coherence, ComplexMatrix64, DensityMatrix64};
//!
//! let plus = DensityMatrix64::from_matrix(
//!     ComplexMatrix64::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap(),
//! )
//! .unwrap();
//! let r = coherence::report(&plus);
//! assert!((r.c_l1 - 1.0).abs() < 1e-12);
//! assert!((r.c_hs - 0.5f64.sqrt()).abs() < 1e-12);
//! ```

// Tolerance checks are written `!(x <= tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bloch;
pub mod channels;
pub mod coherence;
pub mod error;
pub mod gellmann;
pub mod matops;
pub mod nmutp;
pub mod scalar;

pub use bloch::{from_bloch, hsd_bloch, hsd_direct, to_bloch, BlochVector, Reconstruction};
pub use channels::{ad_channel, pd_channel, rho_w, sweep, DampingFamily, KrausChannel, SweepResult, SweepRow};
pub use coherence::{dephase, hsc, l1c, rec, CoherenceReport};
pub use error::{Error, Result};
pub use gellmann::{build_basis, GeneratorBasis, GeneratorClass, MultiIndex, ProductBasis};
pub use matops::{hermitian_eigenvalues, purity, tensor, vn_entropy, ComplexMatrix, DensityMatrix};
pub use nmutp::{Ensemble, NmutpEstimate, Quartet};
pub use scalar::Real;

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type DensityMatrix32 = DensityMatrix<f32>;
pub type BlochVector64 = BlochVector<f64>;
pub type BlochVector32 = BlochVector<f32>;
pub type GeneratorBasis64 = GeneratorBasis<f64>;
pub type ProductBasis64 = ProductBasis<f64>;
pub type KrausChannel64 = KrausChannel<f64>;
pub type CoherenceReport64 = CoherenceReport<f64>;
