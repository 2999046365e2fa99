use num_complex::Complex;

use super::eigen::hermitian_eigenvalues;
use super::matrix::{tensor, ComplexMatrix};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A validated multi-qudit density matrix.
///
/// `dims` lists the subsystem dimensions; their product is the matrix side.
/// Construction checks Hermiticity, unit trace and positivity against the
/// tolerances of the scalar type.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    dims: Vec<usize>,
    mat: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(dims: Vec<usize>, mat: ComplexMatrix<T>) -> Result<Self> {
        check_dims(&dims, &mat)?;
        validate_state(&mat)?;
        Ok(Self { dims, mat })
    }

    /// Single-system state whose dimension is the matrix side.
    pub fn from_matrix(mat: ComplexMatrix<T>) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare { rows: mat.rows(), cols: mat.cols() });
        }
        Self::new(vec![mat.side()], mat)
    }

    /// Skips the spectral check. Callers guarantee the invariants by construction.
    pub(crate) fn from_parts_unchecked(dims: Vec<usize>, mat: ComplexMatrix<T>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), mat.rows());
        Self { dims, mat }
    }

    /// `|ψ><ψ|` for a (not necessarily normalized) vector.
    pub fn pure(dims: Vec<usize>, psi: &[Complex<T>]) -> Result<Self> {
        let norm_sq: T = psi.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq == T::zero() || psi.is_empty() {
            return Err(Error::OutOfRange { name: "state vector norm", value: 0.0, range: "(0, inf)" });
        }
        let inv = T::one() / norm_sq.sqrt();
        let normalized: Vec<_> = psi.iter().map(|z| z * inv).collect();
        let mat = ComplexMatrix::outer(&normalized);
        check_dims(&dims, &mat)?;
        Ok(Self { dims, mat })
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Result<Self> {
        let d: usize = dims.iter().product();
        let mat = ComplexMatrix::identity(d.max(1)).scale(T::one() / T::lit(d as f64));
        check_dims(&dims, &mat)?;
        Ok(Self { dims, mat })
    }

    /// Incoherent state with the given populations.
    pub fn diagonal(dims: Vec<usize>, populations: &[T]) -> Result<Self> {
        Self::new(dims, ComplexMatrix::from_diagonal(populations))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.mat[(i, j)]
    }

    /// Real diagonal (the populations).
    pub fn populations(&self) -> Vec<T> {
        self.mat.diagonal().into_iter().map(|z| z.re).collect()
    }

    pub fn eigenvalues(&self) -> Vec<T> {
        hermitian_eigenvalues(&self.mat).expect("validated state is Hermitian")
    }

    /// `ρ ⊗ σ`, with the subsystem lists concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        Self { dims, mat: tensor(&self.mat, &other.mat) }
    }

    pub fn purity(&self) -> T {
        purity(self)
    }

    pub fn entropy(&self) -> T {
        vn_entropy(self)
    }

    pub fn cast<U: Real>(&self) -> DensityMatrix<U> {
        DensityMatrix { dims: self.dims.clone(), mat: self.mat.cast() }
    }
}

fn check_dims<T: Real>(dims: &[usize], mat: &ComplexMatrix<T>) -> Result<()> {
    if !mat.is_square() {
        return Err(Error::NotSquare { rows: mat.rows(), cols: mat.cols() });
    }
    if let Some(&bad) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::SubsystemDimension(bad));
    }
    let product: usize = dims.iter().product();
    if dims.is_empty() || product != mat.side() {
        return Err(Error::DimsProduct { dims: dims.to_vec(), product, side: mat.side() });
    }
    Ok(())
}

/// Checks Hermiticity, unit trace and positivity in that order.
pub fn validate_state<T: Real>(mat: &ComplexMatrix<T>) -> Result<()> {
    let deviation = mat.hermitian_deviation();
    if !(deviation <= T::hermitian_tol()) {
        return Err(Error::NotHermitian { deviation: deviation.as_f64() });
    }
    let trace = mat.trace().re;
    if !((trace - T::one()).abs() <= T::trace_tol()) {
        return Err(Error::Trace { trace: trace.as_f64() });
    }
    let min = hermitian_eigenvalues(mat)?[0];
    if min < -T::psd_tol() {
        return Err(Error::NotPositive { min_eigenvalue: min.as_f64() });
    }
    Ok(())
}

/// `Tr ρ²`.
pub fn purity<T: Real>(rho: &DensityMatrix<T>) -> T {
    rho.matrix().frobenius_sq()
}

/// von Neumann entropy in bits, `-Σ λ log₂ λ`, with eigenvalues below
/// [`Real::eigen_clamp`] dropped.
pub fn vn_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    entropy_of_spectrum(&rho.eigenvalues(), rho.dim())
}

pub(crate) fn entropy_of_spectrum<T: Real>(spectrum: &[T], dim: usize) -> T {
    let s: T = spectrum.iter().filter(|&&l| l > T::eigen_clamp()).map(|&l| -l * l.log2()).sum();
    s.max(T::zero()).min(T::lit(dim as f64).log2())
}

/// Shannon entropy in bits of a probability vector, with `0 log 0 = 0`.
pub(crate) fn shannon_bits<T: Real>(probs: &[T]) -> T {
    probs.iter().filter(|&&p| p > T::zero()).map(|&p| -p * p.log2()).sum::<T>().max(T::zero())
}
