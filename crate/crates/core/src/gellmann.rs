//! Generalized Gell-Mann generators and multi-qudit index spaces.
//!
//! Generator labels use 1-based level indices (`|1>, ..., |d>`), while the
//! flat position of a generator inside a basis is 0-based:
//!
//! | position                          | generator                  |
//! |-----------------------------------|----------------------------|
//! | `0`                               | identity                   |
//! | `1 ..= d-1`                       | `Diagonal(j)`, `j = pos`   |
//! | `d ..= d-1 + d(d-1)/2`            | `Symmetric(k,l)`, lex order |
//! | remaining `d(d-1)/2`              | `Antisymmetric(k,l)`, lex order |
//!
//! A product space over `dims = [d_1, ..., d_n]` enumerates multi-indices
//! lexicographically with the first subsystem most significant, so position
//! `0` is the all-identity index.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matops::{tensor, ComplexMatrix};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorClass {
    Identity,
    /// `Diagonal(j)`, `1 <= j <= d-1`.
    Diagonal(usize),
    /// `|k><l| + |l><k|`, `1 <= k < l <= d`.
    Symmetric(usize, usize),
    /// `-i(|k><l| - |l><k|)`, `1 <= k < l <= d`.
    Antisymmetric(usize, usize),
}

impl GeneratorClass {
    /// True for the symmetric and antisymmetric (off-diagonal) sets.
    pub fn is_off_diagonal(self) -> bool {
        matches!(self, Self::Symmetric(..) | Self::Antisymmetric(..))
    }

    pub fn is_identity(self) -> bool {
        self == Self::Identity
    }

    /// `Tr(Γ²)`: `d` for the identity, `2` otherwise.
    pub fn square_trace(self, d: usize) -> usize {
        if self.is_identity() {
            d
        } else {
            2
        }
    }
}

impl fmt::Display for GeneratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => write!(f, "I"),
            Self::Diagonal(j) => write!(f, "d{j}"),
            Self::Symmetric(k, l) => write!(f, "s{k}{l}"),
            Self::Antisymmetric(k, l) => write!(f, "a{k}{l}"),
        }
    }
}

/// All `d²` generator labels of dimension `d` in canonical order.
pub fn generator_classes(d: usize) -> Result<Vec<GeneratorClass>> {
    if d < 2 {
        return Err(Error::SubsystemDimension(d));
    }
    let pairs: Vec<(usize, usize)> = (1..=d).flat_map(|k| ((k + 1)..=d).map(move |l| (k, l))).collect();
    let mut out = Vec::with_capacity(d * d);
    out.push(GeneratorClass::Identity);
    out.extend((1..d).map(GeneratorClass::Diagonal));
    out.extend(pairs.iter().map(|&(k, l)| GeneratorClass::Symmetric(k, l)));
    out.extend(pairs.iter().map(|&(k, l)| GeneratorClass::Antisymmetric(k, l)));
    Ok(out)
}

/// Flat position of `class` in the canonical order for dimension `d`.
pub fn class_position(d: usize, class: GeneratorClass) -> Option<usize> {
    let pair_rank = |k: usize, l: usize| -> Option<usize> {
        (1 <= k && k < l && l <= d).then(|| (1..k).map(|k2| d - k2).sum::<usize>() + (l - k - 1))
    };
    let n_pairs = d * (d - 1) / 2;
    match class {
        GeneratorClass::Identity => Some(0),
        GeneratorClass::Diagonal(j) => (1..d).contains(&j).then_some(j),
        GeneratorClass::Symmetric(k, l) => pair_rank(k, l).map(|r| d + r),
        GeneratorClass::Antisymmetric(k, l) => pair_rank(k, l).map(|r| d + n_pairs + r),
    }
}

/// Matrix of a single generator in dimension `d`.
pub fn generator_matrix<T: Real>(d: usize, class: GeneratorClass) -> ComplexMatrix<T> {
    let one = Complex::new(T::one(), T::zero());
    match class {
        GeneratorClass::Identity => ComplexMatrix::identity(d),
        GeneratorClass::Diagonal(j) => {
            let jf = T::lit(j as f64);
            let scale = (T::lit(2.0) / (jf * (jf + T::one()))).sqrt();
            let diag: Vec<T> = (1..=d)
                .map(|k| match k {
                    k if k <= j => scale,
                    k if k == j + 1 => -jf * scale,
                    _ => T::zero(),
                })
                .collect();
            ComplexMatrix::from_diagonal(&diag)
        }
        GeneratorClass::Symmetric(k, l) => {
            let mut m = ComplexMatrix::zeros(d, d);
            m[(k - 1, l - 1)] = one;
            m[(l - 1, k - 1)] = one;
            m
        }
        GeneratorClass::Antisymmetric(k, l) => {
            let i = Complex::new(T::zero(), T::one());
            let mut m = ComplexMatrix::zeros(d, d);
            m[(k - 1, l - 1)] = -i;
            m[(l - 1, k - 1)] = i;
            m
        }
    }
}

/// Identity plus the `d² - 1` generalized Gell-Mann matrices of one qudit.
#[derive(Clone, Debug)]
pub struct GeneratorBasis<T> {
    dim: usize,
    gens: Vec<(GeneratorClass, ComplexMatrix<T>)>,
}

impl<T: Real> GeneratorBasis<T> {
    pub fn new(d: usize) -> Result<Self> {
        build_basis(d)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn class(&self, pos: usize) -> GeneratorClass {
        self.gens[pos].0
    }

    pub fn matrix(&self, pos: usize) -> &ComplexMatrix<T> {
        &self.gens[pos].1
    }

    pub fn get(&self, class: GeneratorClass) -> Option<&ComplexMatrix<T>> {
        class_position(self.dim, class).map(|p| &self.gens[p].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorClass, &ComplexMatrix<T>)> {
        self.gens.iter().map(|(c, m)| (*c, m))
    }

    /// Expansion coefficients `Tr(m Γ_j) / Tr(Γ_j²)` of a square matrix.
    pub fn coefficients(&self, m: &ComplexMatrix<T>) -> Vec<Complex<T>> {
        self.gens.iter().map(|(c, g)| m.trace_of_product(g) / T::lit(c.square_trace(self.dim) as f64)).collect()
    }

    /// Inverse of [`coefficients`](Self::coefficients).
    pub fn synthesize(&self, coeffs: &[Complex<T>]) -> ComplexMatrix<T> {
        assert_eq!(coeffs.len(), self.len());
        self.gens
            .iter()
            .zip(coeffs)
            .fold(ComplexMatrix::zeros(self.dim, self.dim), |acc, ((_, g), &c)| &acc + &g.scale_complex(c))
    }
}

/// Builds the canonical generator basis for dimension `d >= 2`.
pub fn build_basis<T: Real>(d: usize) -> Result<GeneratorBasis<T>> {
    let gens = generator_classes(d)?.into_iter().map(|c| (c, generator_matrix(d, c))).collect();
    Ok(GeneratorBasis { dim: d, gens })
}

/// One generator label per subsystem.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<GeneratorClass>);

impl MultiIndex {
    pub fn classes(&self) -> &[GeneratorClass] {
        &self.0
    }

    /// At least one factor comes from the symmetric or antisymmetric set.
    pub fn is_coherence(&self) -> bool {
        self.0.iter().any(|c| c.is_off_diagonal())
    }

    /// Number of identity factors, `Σ δ_{0 j_s}`.
    pub fn identity_count(&self) -> usize {
        self.0.iter().filter(|c| c.is_identity()).count()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn is_coherence_index(mi: &MultiIndex) -> bool {
    mi.is_coherence()
}

/// All multi-indices over `dims`, lexicographic in the per-subsystem canonical order.
pub fn multi_index_space(dims: &[usize]) -> Result<Vec<MultiIndex>> {
    let per: Vec<Vec<GeneratorClass>> = dims.iter().map(|&d| generator_classes(d)).collect::<Result<_>>()?;
    let total: usize = per.iter().map(Vec::len).product();
    Ok((0..total)
        .map(|flat| MultiIndex(mixed_radix(flat, dims).into_iter().zip(&per).map(|(k, p)| p[k]).collect()))
        .collect())
}

/// Digits of `flat` in the mixed radix `d_s²`, most significant first.
fn mixed_radix(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (slot, &d) in digits.iter_mut().zip(dims).rev() {
        *slot = flat % (d * d);
        flat /= d * d;
    }
    digits
}

/// `Tr((⊗Γ)²)` of the product generator at `flat`, computed from the digits alone.
pub fn product_normalization(dims: &[usize], flat: usize) -> usize {
    mixed_radix(flat, dims).iter().zip(dims).map(|(&k, &d)| if k == 0 { d } else { 2 }).product()
}

/// Whether the product generator at `flat` has an off-diagonal factor.
pub fn is_coherence_position(dims: &[usize], flat: usize) -> bool {
    // Off-diagonal generators occupy positions >= d in each subsystem.
    mixed_radix(flat, dims).iter().zip(dims).any(|(&k, &d)| k >= d)
}

/// Generator bases for every subsystem of a composite system.
#[derive(Clone, Debug)]
pub struct ProductBasis<T> {
    dims: Vec<usize>,
    bases: Vec<GeneratorBasis<T>>,
}

impl<T: Real> ProductBasis<T> {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::DimsProduct { dims: vec![], product: 1, side: 0 });
        }
        let bases = dims.iter().map(|&d| build_basis(d)).collect::<Result<_>>()?;
        Ok(Self { dims: dims.to_vec(), bases })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension `d = Π d_s`.
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Number of multi-indices, `d²`.
    pub fn len(&self) -> usize {
        self.dim() * self.dim()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn digits(&self, flat: usize) -> Vec<usize> {
        mixed_radix(flat, &self.dims)
    }

    pub fn multi_index(&self, flat: usize) -> MultiIndex {
        MultiIndex(self.digits(flat).iter().zip(&self.bases).map(|(&k, b)| b.class(k)).collect())
    }

    pub fn position(&self, mi: &MultiIndex) -> Option<usize> {
        if mi.0.len() != self.dims.len() {
            return None;
        }
        mi.0.iter().zip(&self.dims).try_fold(0usize, |acc, (&c, &d)| class_position(d, c).map(|p| acc * d * d + p))
    }

    pub fn is_coherence(&self, flat: usize) -> bool {
        is_coherence_position(&self.dims, flat)
    }

    /// `Tr((⊗Γ)²) = 2^{n - Σδ} Π d_s^{δ}`.
    pub fn normalization(&self, flat: usize) -> T {
        T::lit(product_normalization(&self.dims, flat) as f64)
    }

    /// The product generator `Γ_{j1} ⊗ ... ⊗ Γ_{jn}`.
    pub fn generator(&self, flat: usize) -> ComplexMatrix<T> {
        let digits = self.digits(flat);
        let mut it = digits.iter().zip(&self.bases);
        let (&k0, b0) = it.next().expect("non-empty dims");
        it.fold(b0.matrix(k0).clone(), |acc, (&k, b)| tensor(&acc, b.matrix(k)))
    }

    pub fn subsystem(&self, s: usize) -> &GeneratorBasis<T> {
        &self.bases[s]
    }
}
