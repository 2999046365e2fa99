//! Coherence quantifiers in the computational product basis.
//!
//! * Hilbert-Schmidt coherence: the norm of the coherence vector, i.e. the
//!   rescaled Bloch components carrying at least one symmetric or
//!   antisymmetric factor. The closest incoherent state keeps the identity and
//!   diagonal-generator components only, which is the dephased state.
//! * l1-norm coherence: sum of off-diagonal moduli.
//! * Relative entropy of coherence: `S(Δρ) - S(ρ)` in bits.
//!
//! Composite closed forms (two-qubit split, two copies of a qubit) are
//! derived from the rescaled-vector normalization, which gives every
//! two-qubit mean value square a coefficient of `1/4`.

use crate::bloch::{from_bloch, matrix_hsd, to_bloch, BlochVector};
use crate::error::{Error, Result};
use crate::gellmann::{GeneratorClass, MultiIndex, ProductBasis};
use crate::matops::{entropy_of_spectrum, shannon_bits, ComplexMatrix, DensityMatrix};
use crate::scalar::Real;

/// Rescaled Bloch components on the coherence indices, in flat order.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceVector<T> {
    pub entries: Vec<(MultiIndex, T)>,
}

impl<T: Real> CoherenceVector<T> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn norm_sq(&self) -> T {
        self.entries.iter().map(|(_, r)| *r * *r).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherenceReport<T> {
    pub c_hs: T,
    pub c_l1: T,
    /// Bits.
    pub c_re: T,
}

pub fn report<T: Real>(rho: &DensityMatrix<T>) -> CoherenceReport<T> {
    CoherenceReport { c_hs: hsc(rho), c_l1: l1c(rho), c_re: rec(rho) }
}

/// `Δ(ρ) = Σ_j |j><j| ρ |j><j|`.
pub fn dephase<T: Real>(rho: &DensityMatrix<T>) -> DensityMatrix<T> {
    let diag = ComplexMatrix::from_diagonal(&rho.populations());
    DensityMatrix::from_parts_unchecked(rho.dims().to_vec(), diag)
}

/// Closest incoherent state under the Hilbert-Schmidt distance, built by
/// truncating the Bloch expansion to identity/diagonal generators.
pub fn incoherent_optimum<T: Real>(rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    let mut v = to_bloch(rho)?;
    for flat in 0..v.len() {
        if v.is_coherence(flat) {
            v.set_mean_value(flat, T::zero());
        }
    }
    from_bloch(&v)?.into_state()
}

pub fn coherence_vector<T: Real>(rho: &DensityMatrix<T>) -> Result<CoherenceVector<T>> {
    let basis = ProductBasis::<T>::new(rho.dims())?;
    let v = crate::bloch::to_bloch_with(&basis, rho)?;
    let entries = (0..v.len())
        .filter(|&flat| v.is_coherence(flat))
        .map(|flat| (basis.multi_index(flat), v.rescaled(flat)))
        .collect();
    Ok(CoherenceVector { entries })
}

/// Hilbert-Schmidt coherence `‖C‖`.
pub fn hsc<T: Real>(rho: &DensityMatrix<T>) -> T {
    coherence_vector(rho).expect("validated state has a real Bloch vector").norm()
}

/// Sum of off-diagonal moduli.
pub fn l1c<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = rho.dim();
    let mut acc = T::zero();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                acc = acc + rho.entry(i, j).norm();
            }
        }
    }
    acc
}

/// Relative entropy of coherence in bits.
pub fn rec<T: Real>(rho: &DensityMatrix<T>) -> T {
    let s_diag = shannon_bits(&rho.populations());
    let s = entropy_of_spectrum(&rho.eigenvalues(), rho.dim());
    (s_diag - s).max(T::zero())
}

fn binary_entropy<T: Real>(p: T) -> T {
    shannon_bits(&[p, T::one() - p])
}

fn check_finite<T: Real>(name: &'static str, x: T) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::OutOfRange { name, value: x.as_f64(), range: "finite reals" });
    }
    Ok(())
}

/// Closed-form qubit REC from the population parameter `a = <Γ₁ᵈ>` and the
/// l1-norm coherence `c`: `H₂((1+a)/2) - H₂((1+G)/2)` with `G = √(a²+c²)`.
pub fn qubit_rec_closed<T: Real>(a: T, c: T) -> Result<T> {
    check_finite("a", a)?;
    check_finite("c_l1", c)?;
    if c < T::zero() {
        return Err(Error::OutOfRange { name: "c_l1", value: c.as_f64(), range: "[0, 1]" });
    }
    let g_sq = a * a + c * c;
    if g_sq > T::one() + T::trace_tol() {
        return Err(Error::OutOfRange { name: "a² + c_l1²", value: g_sq.as_f64(), range: "[0, 1] (Bloch ball)" });
    }
    let half = T::lit(0.5);
    let g = g_sq.sqrt().min(T::one());
    let diag = binary_entropy(half * (T::one() + a));
    let spectrum = binary_entropy(half * (T::one() + g));
    Ok((diag - spectrum).max(T::zero()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecCurvePoint<T> {
    pub a: T,
    pub c_re: T,
    /// `√(a² + c_l1²)`.
    pub bloch_norm: T,
}

/// REC along the cylinder of fixed l1-norm coherence, with `a` running
/// uniformly over `[-√(1-c²), √(1-c²)]`. A degenerate range (c = 1) yields
/// the single point `a = 0`.
pub fn rec_curve<T: Real>(c_l1: T, steps: usize) -> Result<Vec<RecCurvePoint<T>>> {
    check_finite("c_l1", c_l1)?;
    if !(T::zero()..=T::one()).contains(&c_l1) {
        return Err(Error::OutOfRange { name: "c_l1", value: c_l1.as_f64(), range: "[0, 1]" });
    }
    if steps < 2 {
        return Err(Error::OutOfRange { name: "steps", value: steps as f64, range: "[2, inf)" });
    }
    let half_width = (T::one() - c_l1 * c_l1).max(T::zero()).sqrt();
    let points: Vec<T> = if half_width.is_zero() {
        vec![T::zero()]
    } else {
        let last = T::lit((steps - 1) as f64);
        (0..steps).map(|k| half_width * (T::lit(2.0 * k as f64) - last) / last).collect()
    };
    points
        .into_iter()
        .map(|a| Ok(RecCurvePoint { a, c_re: qubit_rec_closed(a, c_l1)?, bloch_norm: (a * a + c_l1 * c_l1).sqrt() }))
        .collect()
}

/// Squared two-qubit HSC split into local and non-local parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitSplit<T> {
    pub local: T,
    pub nonlocal: T,
}

impl<T: Real> TwoQubitSplit<T> {
    /// `C_hs²`.
    pub fn total(&self) -> T {
        self.local + self.nonlocal
    }
}

pub fn two_qubit_split<T: Real>(rho: &DensityMatrix<T>) -> Result<TwoQubitSplit<T>> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: vec![2, 2] });
    }
    let basis = ProductBasis::<T>::new(&[2, 2])?;
    let v = crate::bloch::to_bloch_with(&basis, rho)?;
    let total: T = (0..v.len()).filter(|&i| v.is_coherence(i)).map(|i| v.rescaled(i).powi(2)).sum();
    let local: T = [GeneratorClass::Symmetric(1, 2), GeneratorClass::Antisymmetric(1, 2)]
        .into_iter()
        .flat_map(|k| [vec![GeneratorClass::Identity, k], vec![k, GeneratorClass::Identity]])
        .map(|classes| {
            let flat = basis.position(&MultiIndex(classes)).expect("qubit generator");
            v.rescaled(flat).powi(2)
        })
        .sum();
    Ok(TwoQubitSplit { local, nonlocal: total - local })
}

/// Coherences of `ρ ⊗ ρ` for a qubit `ρ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoCopyCoherence<T> {
    pub local: T,
    pub nonlocal: T,
    pub l1_pair: T,
}

/// Closed forms for two copies of a qubit with `a = <Γ₁ᵈ>` and `c2 = C_hs²`:
/// local `c2`, non-local `c2 (a² + c2)`, l1 `(1 + √(2 c2))² - 1`.
pub fn two_copy_closed_forms<T: Real>(a: T, c2: T) -> Result<TwoCopyCoherence<T>> {
    check_finite("a", a)?;
    check_finite("c2", c2)?;
    let two = T::lit(2.0);
    if c2 < T::zero() || a * a + two * c2 > T::one() + T::trace_tol() {
        return Err(Error::OutOfRange {
            name: "a² + 2·c2",
            value: (a * a + two * c2).as_f64(),
            range: "[0, 1] with c2 >= 0",
        });
    }
    let l1 = (two * c2).sqrt();
    Ok(TwoCopyCoherence { local: c2, nonlocal: c2 * (a * a + c2), l1_pair: (T::one() + l1).powi(2) - T::one() })
}

/// Direct evaluation on the explicit `ρ ⊗ ρ`.
pub fn two_copy_direct<T: Real>(rho: &DensityMatrix<T>) -> Result<TwoCopyCoherence<T>> {
    if rho.dims() != [2] {
        return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: vec![2] });
    }
    let pair = rho.tensor(rho);
    let split = two_qubit_split(&pair)?;
    Ok(TwoCopyCoherence { local: split.local, nonlocal: split.nonlocal, l1_pair: l1c(&pair) })
}

/// One-qubit state from `<Γ₁ᵈ>`, `<Γˢ₁₂>`, `<Γᵃ₁₂>`, validated.
pub fn qubit_state<T: Real>(diag: T, sym: T, anti: T) -> Result<DensityMatrix<T>> {
    from_bloch(&BlochVector::qubit(diag, sym, anti))?.into_state()
}

/// Hilbert-Schmidt distance between `ρ` and its dephased state.
pub fn dephasing_distance<T: Real>(rho: &DensityMatrix<T>) -> T {
    matrix_hsd(rho.matrix(), dephase(rho).matrix())
}

/// `Σ_{i≠j} |ρ_ij|²`.
pub fn off_diagonal_mass<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = rho.dim();
    (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| rho.entry(i, j).norm_sqr())
        .sum()
}
