//! Non-monotonicity of the Hilbert-Schmidt distance under tensor products.
//!
//! A quartet `(ρ, σ, ξ, η)` is inverted when the ordering of `d(ρ,σ)` and
//! `d(ξ,η)` flips after every state is replaced by two copies of itself.
//! The event is symmetric in the two pairs.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{StandardNormal, Uniform};
use rayon::prelude::*;

use crate::bloch::hsd_direct;
use crate::coherence::{dephase, hsc, qubit_state};
use crate::error::{Error, Result};
use crate::matops::{random_density, random_pure, ComplexMatrix, DensityMatrix};
use crate::scalar::Real;

/// `d(ρ⊗ρ, σ⊗σ) = √(Tr(ρ²)² + Tr(σ²)² - 2 Tr(ρσ)²)`.
pub fn hsd_tensor_power<T: Real>(rho: &DensityMatrix<T>, sigma: &DensityMatrix<T>) -> Result<T> {
    if rho.dims() != sigma.dims() {
        return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: sigma.dims().to_vec() });
    }
    let pr = rho.purity();
    let ps = sigma.purity();
    let overlap = rho.matrix().trace_of_product(sigma.matrix()).re;
    let sq = pr * pr + ps * ps - T::lit(2.0) * overlap * overlap;
    Ok(sq.max(T::zero()).sqrt())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quartet<T> {
    rho: DensityMatrix<T>,
    sigma: DensityMatrix<T>,
    xi: DensityMatrix<T>,
    eta: DensityMatrix<T>,
}

impl<T: Real> Quartet<T> {
    pub fn new(
        rho: DensityMatrix<T>,
        sigma: DensityMatrix<T>,
        xi: DensityMatrix<T>,
        eta: DensityMatrix<T>,
    ) -> Result<Self> {
        for other in [&sigma, &xi, &eta] {
            if other.dims() != rho.dims() {
                return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: other.dims().to_vec() });
            }
        }
        Ok(Self { rho, sigma, xi, eta })
    }

    pub fn states(&self) -> [&DensityMatrix<T>; 4] {
        [&self.rho, &self.sigma, &self.xi, &self.eta]
    }

    /// `(d₁, d₂, D₁, D₂)`: single-copy then two-copy distances of both pairs.
    pub fn distances(&self) -> (T, T, T, T) {
        let d = |a, b| hsd_direct(a, b).expect("quartet dims checked");
        let dd = |a, b| hsd_tensor_power(a, b).expect("quartet dims checked");
        (d(&self.rho, &self.sigma), d(&self.xi, &self.eta), dd(&self.rho, &self.sigma), dd(&self.xi, &self.eta))
    }
}

/// `(d₁ - d₂)(D₁ - D₂) < 0`, where differences within [`Real::tie_tol`]
/// count as ties.
pub fn is_inverted<T: Real>(q: &Quartet<T>) -> bool {
    let (d1, d2, big1, big2) = q.distances();
    let single = d1 - d2;
    let double = big1 - big2;
    if single.abs() <= T::tie_tol() || double.abs() <= T::tie_tol() {
        return false;
    }
    single * double < T::zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ensemble {
    /// Hilbert-Schmidt measure, see [`random_density`].
    Ginibre,
    /// Haar-random pure states.
    Pure,
    /// Qubits whose Bloch vectors lie on one random axis through the origin.
    /// Only defined for `d = 2`.
    CollinearQubit,
}

/// Independent stream for sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn sample_quartet<T: Real>(ensemble: Ensemble, d: usize, seed: u64, index: u64) -> Result<Quartet<T>> {
    let mut rng = sample_rng(seed, index);
    let rng = &mut rng;
    match ensemble {
        Ensemble::Ginibre => Quartet::new(
            random_density(d, rng)?,
            random_density(d, rng)?,
            random_density(d, rng)?,
            random_density(d, rng)?,
        ),
        Ensemble::Pure => {
            Quartet::new(random_pure(d, rng)?, random_pure(d, rng)?, random_pure(d, rng)?, random_pure(d, rng)?)
        }
        Ensemble::CollinearQubit => {
            if d != 2 {
                return Err(Error::DimensionMismatch { left: vec![d], right: vec![2] });
            }
            let axis = loop {
                let v: [f64; 3] = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
                let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                if n > 1e-6 {
                    break v.map(|x| x / n);
                }
            };
            let coord = Uniform::new_inclusive(-1.0, 1.0).expect("valid range");
            let mut next = || {
                let x: f64 = rng.sample(coord);
                collinear_qubit::<T>(axis, x)
            };
            Quartet::new(next()?, next()?, next()?, next()?)
        }
    }
}

/// `(I + x n·σ)/2` for a unit axis `n` and `x ∈ [-1, 1]`.
fn collinear_qubit<T: Real>(n: [f64; 3], x: f64) -> Result<DensityMatrix<T>> {
    let h = 0.5;
    let mat = ComplexMatrix::from_fn(2, 2, |i, j| {
        let z = match (i, j) {
            (0, 0) => Complex::new(h * (1.0 + x * n[2]), 0.0),
            (1, 1) => Complex::new(h * (1.0 - x * n[2]), 0.0),
            (0, 1) => Complex::new(h * x * n[0], -h * x * n[1]),
            _ => Complex::new(h * x * n[0], h * x * n[1]),
        };
        Complex::new(T::lit(z.re), T::lit(z.im))
    });
    DensityMatrix::new(vec![2], mat)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NmutpEstimate {
    pub dim: usize,
    pub samples: u64,
    pub hits: u64,
    pub percent: f64,
    pub seed: u64,
}

impl NmutpEstimate {
    /// Binomial standard error of `percent`.
    pub fn standard_error(&self) -> f64 {
        let p = self.hits as f64 / self.samples as f64;
        100.0 * (p * (1.0 - p) / self.samples as f64).sqrt()
    }
}

/// Ginibre quartets, see [`estimate_ensemble`].
pub fn estimate<T: Real>(d: usize, samples: u64, seed: u64, workers: usize) -> Result<NmutpEstimate> {
    estimate_ensemble::<T>(Ensemble::Ginibre, d, samples, seed, workers)
}

/// Counts inverted quartets over `samples` draws, sample `i` using
/// [`sample_rng`]`(seed, i)`. The count does not depend on `workers`.
pub fn estimate_ensemble<T: Real>(
    ensemble: Ensemble,
    d: usize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<NmutpEstimate> {
    if samples == 0 {
        return Err(Error::OutOfRange { name: "samples", value: 0.0, range: "[1, inf)" });
    }
    if workers == 0 {
        return Err(Error::OutOfRange { name: "workers", value: 0.0, range: "[1, inf)" });
    }
    // Surface dimension errors before fanning out.
    sample_quartet::<T>(ensemble, d, seed, 0)?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| Error::ThreadPool(e.to_string()))?;
    let hits = pool.install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| sample_quartet::<T>(ensemble, d, seed, i).map(|q| is_inverted(&q) as u64))
            .try_reduce(|| 0, |a, b| Ok(a + b))
    })?;
    Ok(NmutpEstimate { dim: d, samples, hits, percent: 100.0 * hits as f64 / samples as f64, seed })
}

/// Coherences of the two-qubit inversion example, each computed directly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InversionDemo<T> {
    pub c_rho: T,
    pub c_xi: T,
    pub c_rhorho: T,
    pub c_xixi: T,
    /// `d(ρ⊗ρ, ι_ρ⊗ι_ρ)`.
    pub d_rhorho: T,
    /// `d(ξ⊗ξ, ι_ξ⊗ι_ξ)`.
    pub d_xixi: T,
}

impl<T: Real> InversionDemo<T> {
    /// `c_ρ > c_ξ` while `c_ρρ < c_ξξ`.
    pub fn inverted(&self) -> bool {
        self.c_rho > self.c_xi && self.c_rhorho < self.c_xixi
    }
}

/// `ρ` has `<Γˢ> = <Γᵃ> = 0.34`, `<Γᵈ> = 0`; `ξ` has `<Γˢ> = <Γᵃ> = 0.33`,
/// `<Γᵈ> = 0.7`.
pub fn coherence_inversion_demo<T: Real>() -> Result<InversionDemo<T>> {
    let rho = qubit_state(T::zero(), T::lit(0.34), T::lit(0.34))?;
    let xi = qubit_state(T::lit(0.7), T::lit(0.33), T::lit(0.33))?;
    let two_copy_distance = |x: &DensityMatrix<T>| {
        let iota = dephase(x);
        hsd_direct(&x.tensor(x), &iota.tensor(&iota))
    };
    Ok(InversionDemo {
        c_rho: hsc(&rho),
        c_xi: hsc(&xi),
        c_rhorho: hsc(&rho.tensor(&rho)),
        c_xixi: hsc(&xi.tensor(&xi)),
        d_rhorho: two_copy_distance(&rho)?,
        d_xixi: two_copy_distance(&xi)?,
    })
}
