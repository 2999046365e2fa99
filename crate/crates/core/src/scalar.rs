//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All matrix code is written against [`Real`], implemented for `f64` and
//! `f32`. The validation thresholds are part of the scalar because the
//! achievable accuracy depends on the precision.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar usable as the component type of complex matrices.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Default + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Largest accepted `|m_ij - conj(m_ji)|`.
    fn hermitian_tol() -> Self;
    /// Largest accepted `|Tr ρ - 1|`.
    fn trace_tol() -> Self;
    /// Most negative eigenvalue still accepted as positive semidefinite.
    fn psd_tol() -> Self;
    /// Eigenvalues below this are treated as exact zeros in entropies.
    fn eigen_clamp() -> Self;
    /// Largest imaginary residue tolerated in a mean value of a Hermitian observable.
    fn real_residue_tol() -> Self;
    /// Distance differences at or below this count as ties.
    fn tie_tol() -> Self;

    /// Converts an `f64` literal into this scalar.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn hermitian_tol() -> Self {
        1e-12
    }
    fn trace_tol() -> Self {
        1e-12
    }
    fn psd_tol() -> Self {
        1e-10
    }
    fn eigen_clamp() -> Self {
        1e-12
    }
    fn real_residue_tol() -> Self {
        1e-10
    }
    fn tie_tol() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn hermitian_tol() -> Self {
        1e-5
    }
    fn trace_tol() -> Self {
        1e-5
    }
    fn psd_tol() -> Self {
        1e-4
    }
    fn eigen_clamp() -> Self {
        1e-6
    }
    fn real_residue_tol() -> Self {
        1e-4
    }
    fn tie_tol() -> Self {
        1e-5
    }
}
