//! Qutrit phase-damping and amplitude-damping channels and coherence sweeps.

use num_complex::Complex;
use rayon::prelude::*;

use crate::coherence::{hsc, l1c, rec};
use crate::error::{Error, Result};
use crate::matops::{ComplexMatrix, DensityMatrix};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelLabel {
    PhaseDamping,
    AmplitudeDamping,
    Custom,
}

/// Completely positive trace-preserving map given by Kraus operators.
#[derive(Clone, Debug)]
pub struct KrausChannel<T> {
    dim: usize,
    kraus: Vec<ComplexMatrix<T>>,
    label: ChannelLabel,
}

impl<T: Real> KrausChannel<T> {
    /// Checks shapes and completeness `Σ K†K = I`.
    pub fn new(label: ChannelLabel, kraus: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let first = kraus.first().ok_or(Error::Incomplete { deviation: 1.0 })?;
        if !first.is_square() {
            return Err(Error::NotSquare { rows: first.rows(), cols: first.cols() });
        }
        let dim = first.side();
        if let Some(bad) = kraus.iter().find(|k| k.rows() != dim || k.cols() != dim) {
            return Err(Error::DimensionMismatch { left: vec![dim, dim], right: vec![bad.rows(), bad.cols()] });
        }
        let channel = Self { dim, kraus, label };
        let deviation = channel.completeness_deviation();
        if !(deviation <= T::hermitian_tol()) {
            return Err(Error::Incomplete { deviation: deviation.as_f64() });
        }
        Ok(channel)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> ChannelLabel {
        self.label
    }

    pub fn kraus(&self) -> &[ComplexMatrix<T>] {
        &self.kraus
    }

    /// `max |Σ K†K - I|` entry-wise.
    pub fn completeness_deviation(&self) -> T {
        let sum =
            self.kraus.iter().fold(ComplexMatrix::zeros(self.dim, self.dim), |acc, k| &acc + &k.adjoint().matmul(k));
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    /// `Σ_j K_j ρ K_j†`.
    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        apply(self, rho)
    }
}

pub fn apply<T: Real>(ch: &KrausChannel<T>, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    if rho.dim() != ch.dim {
        return Err(Error::DimensionMismatch { left: vec![ch.dim], right: rho.dims().to_vec() });
    }
    let out = ch
        .kraus
        .iter()
        .fold(ComplexMatrix::zeros(ch.dim, ch.dim), |acc, k| &acc + &k.matmul(rho.matrix()).matmul(&k.adjoint()));
    DensityMatrix::new(rho.dims().to_vec(), out)
}

fn check_probability<T: Real>(name: &'static str, p: T) -> Result<()> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::OutOfRange { name, value: p.as_f64(), range: "[0, 1]" });
    }
    Ok(())
}

/// `K₀ = √(1-p) I₃`, `K_j = √p |j><j|` for `j = 1, 2, 3`.
pub fn pd_channel<T: Real>(p: T) -> Result<KrausChannel<T>> {
    check_probability("p", p)?;
    let mut kraus = vec![ComplexMatrix::identity(3).scale((T::one() - p).sqrt())];
    kraus.extend((0..3).map(|j| ComplexMatrix::unit(3, j, j).scale(p.sqrt())));
    KrausChannel::new(ChannelLabel::PhaseDamping, kraus)
}

/// `K₀ = |1><1| + √(1-p)(|2><2| + |3><3|)`, `K₁ = √p |1><2|`, `K₂ = √p |1><3|`.
pub fn ad_channel<T: Real>(p: T) -> Result<KrausChannel<T>> {
    check_probability("p", p)?;
    let q = (T::one() - p).sqrt();
    let k0 = ComplexMatrix::from_diagonal(&[T::one(), q, q]);
    let k1 = ComplexMatrix::unit(3, 0, 1).scale(p.sqrt());
    let k2 = ComplexMatrix::unit(3, 0, 2).scale(p.sqrt());
    KrausChannel::new(ChannelLabel::AmplitudeDamping, vec![k0, k1, k2])
}

/// `(1-w) I₃/3 + w |ψ><ψ|` with `|ψ> = (|1> + |2> + |3>)/√3`.
pub fn rho_w<T: Real>(w: T) -> Result<DensityMatrix<T>> {
    check_probability("w", w)?;
    let third = T::one() / T::lit(3.0);
    let mat = ComplexMatrix::from_fn(3, 3, |i, j| Complex::new(if i == j { third } else { w * third }, T::zero()));
    DensityMatrix::new(vec![3], mat)
}

/// Off-diagonal mean values of a qutrit, pairs ordered (1,2), (1,3), (2,3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QutritOffDiagonal<T> {
    pub sym: [T; 3],
    pub anti: [T; 3],
}

impl<T: Real> QutritOffDiagonal<T> {
    /// `<Γˢ_kl> = 2 Re ρ_kl`, `<Γᵃ_kl> = -2 Im ρ_kl`.
    pub fn of(rho: &DensityMatrix<T>) -> Result<Self> {
        if rho.dims() != [3] {
            return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: vec![3] });
        }
        let two = T::lit(2.0);
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let sym = pairs.map(|(k, l)| two * rho.entry(k, l).re);
        let anti = pairs.map(|(k, l)| -two * rho.entry(k, l).im);
        Ok(Self { sym, anti })
    }

    fn pair_norm_sq(&self, i: usize) -> T {
        self.sym[i] * self.sym[i] + self.anti[i] * self.anti[i]
    }
}

/// Closed-form `(C_l1, C_hs)` of the amplitude-damped qutrit.
pub fn ad_coherence_closed<T: Real>(p: T, mv: &QutritOffDiagonal<T>) -> Result<(T, T)> {
    check_probability("p", p)?;
    let q = T::one() - p;
    let [n12, n13, n23] = [0, 1, 2].map(|i| mv.pair_norm_sq(i));
    let c_l1 = q.sqrt() * (n12.sqrt() + n13.sqrt()) + q * n23.sqrt();
    let c_hs = (q * (n12 + n13) + q * q * n23).sqrt() / T::lit(2.0).sqrt();
    Ok((c_l1, c_hs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DampingFamily {
    PhaseDamping,
    AmplitudeDamping,
}

impl DampingFamily {
    pub fn channel<T: Real>(self, p: T) -> Result<KrausChannel<T>> {
        match self {
            Self::PhaseDamping => pd_channel(p),
            Self::AmplitudeDamping => ad_channel(p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow<T> {
    pub p: T,
    pub c_hs: T,
    pub c_l1: T,
    pub c_re: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult<T> {
    pub rows: Vec<SweepRow<T>>,
}

/// Coherences of the evolved state on the uniform grid `p = k/(steps-1)`.
pub fn sweep<T: Real>(family: DampingFamily, rho0: &DensityMatrix<T>, steps: usize) -> Result<SweepResult<T>> {
    if steps < 2 {
        return Err(Error::OutOfRange { name: "steps", value: steps as f64, range: "[2, inf)" });
    }
    let last = T::lit((steps - 1) as f64);
    let rows = (0..steps)
        .into_par_iter()
        .map(|k| {
            let p = T::lit(k as f64) / last;
            let rho = family.channel(p)?.apply(rho0)?;
            Ok(SweepRow { p, c_hs: hsc(&rho), c_l1: l1c(&rho), c_re: rec(&rho) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { rows })
}
