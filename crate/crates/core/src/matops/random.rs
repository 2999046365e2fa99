//! Seeded random states.
//!
//! Gaussian draws are taken in `f64` and converted, so a given stream yields
//! the same state (up to rounding) for every scalar type.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::matrix::ComplexMatrix;
use super::state::DensityMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(T::lit(re), T::lit(im))
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::SubsystemDimension(d));
    }
    Ok(())
}

/// Ginibre state `G G† / Tr(G G†)` with `G` a `d×d` matrix of independent
/// standard complex Gaussians, drawn row-major from `rng`. This samples the
/// Hilbert-Schmidt measure.
pub fn random_density<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<DensityMatrix<T>> {
    check_dim(d)?;
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian::<T, _>(rng));
    let mut w = ComplexMatrix::<T>::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let z = g
                .row(i)
                .iter()
                .zip(g.row(j))
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b.conj());
            w[(i, j)] = z;
            w[(j, i)] = z.conj();
        }
        w[(i, i)] = Complex::new(w[(i, i)].re, T::zero());
    }
    let trace = w.trace().re;
    Ok(DensityMatrix::from_parts_unchecked(vec![d], w.scale(T::one() / trace)))
}

/// Haar-random pure state of dimension `d`.
pub fn random_pure<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<DensityMatrix<T>> {
    check_dim(d)?;
    let psi: Vec<Complex<T>> = (0..d).map(|_| gaussian(rng)).collect();
    DensityMatrix::pure(vec![d], &psi)
}
