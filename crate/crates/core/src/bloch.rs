//! Bloch-vector representation of multi-qudit states and the
//! Hilbert-Schmidt distance.
//!
//! A state is stored through the mean values `<Γ_{j1} ⊗ ... ⊗ Γ_{jn}>` of
//! every product generator. The raw expansion coefficients and the rescaled
//! components follow from the normalization `N = Tr((⊗Γ)²)`:
//!
//! ```text
//! r = <⊗Γ> / N        R = <⊗Γ> / √N        ρ = Σ r ⊗Γ
//! ```
//!
//! With this scaling the Hilbert-Schmidt distance is the Euclidean distance
//! between rescaled vectors.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gellmann::{is_coherence_position, product_normalization, MultiIndex, ProductBasis};
use crate::matops::{validate_state, ComplexMatrix, DensityMatrix};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct BlochVector<T> {
    dims: Vec<usize>,
    mean_values: Vec<T>,
}

impl<T: Real> BlochVector<T> {
    /// Wraps a full list of mean values in flat multi-index order.
    pub fn new(dims: Vec<usize>, mean_values: Vec<T>) -> Result<Self> {
        if let Some(&bad) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::SubsystemDimension(bad));
        }
        let d: usize = dims.iter().product();
        if dims.is_empty() || mean_values.len() != d * d {
            return Err(Error::ComponentCount { expected: d * d, got: mean_values.len() });
        }
        Ok(Self { dims, mean_values })
    }

    /// Vector of `I/d`: only the all-identity mean value (equal to 1) is set.
    pub fn maximally_mixed(dims: Vec<usize>) -> Result<Self> {
        let d: usize = dims.iter().product();
        let mut values = vec![T::zero(); d * d];
        if let Some(v) = values.first_mut() {
            *v = T::one();
        }
        Self::new(dims, values)
    }

    /// One-qubit vector from `<Γ₁ᵈ>`, `<Γˢ₁₂>`, `<Γᵃ₁₂>`.
    pub fn qubit(diag: T, sym: T, anti: T) -> Self {
        Self { dims: vec![2], mean_values: vec![T::one(), diag, sym, anti] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn len(&self) -> usize {
        self.mean_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean_values.is_empty()
    }

    pub fn mean_values(&self) -> &[T] {
        &self.mean_values
    }

    /// `<⊗Γ>` at flat position `flat`.
    pub fn mean_value(&self, flat: usize) -> T {
        self.mean_values[flat]
    }

    pub fn set_mean_value(&mut self, flat: usize, value: T) {
        self.mean_values[flat] = value;
    }

    fn normalization(&self, flat: usize) -> T {
        T::lit(product_normalization(&self.dims, flat) as f64)
    }

    /// Expansion coefficient `r`.
    pub fn component(&self, flat: usize) -> T {
        self.mean_values[flat] / self.normalization(flat)
    }

    /// Rescaled component `R`.
    pub fn rescaled(&self, flat: usize) -> T {
        self.mean_values[flat] / self.normalization(flat).sqrt()
    }

    pub fn rescaled_vector(&self) -> Vec<T> {
        (0..self.len()).map(|i| self.rescaled(i)).collect()
    }

    pub fn is_coherence(&self, flat: usize) -> bool {
        is_coherence_position(&self.dims, flat)
    }

    /// Looks up the flat position of a multi-index.
    pub fn position(&self, mi: &MultiIndex) -> Option<usize> {
        let basis = ProductBasis::<T>::new(&self.dims).ok()?;
        basis.position(mi)
    }

    pub fn mean_value_at(&self, mi: &MultiIndex) -> Option<T> {
        self.position(mi).map(|p| self.mean_values[p])
    }

    /// Euclidean distance between rescaled vectors.
    pub fn distance(&self, other: &Self) -> Result<T> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch { left: self.dims.clone(), right: other.dims.clone() });
        }
        let sq: T = (0..self.len())
            .map(|i| {
                let diff = self.rescaled(i) - other.rescaled(i);
                diff * diff
            })
            .sum();
        Ok(sq.sqrt())
    }
}

/// Mean values of every product generator, using a prebuilt basis.
pub fn to_bloch_with<T: Real>(basis: &ProductBasis<T>, rho: &DensityMatrix<T>) -> Result<BlochVector<T>> {
    if basis.dims() != rho.dims() {
        return Err(Error::DimensionMismatch { left: basis.dims().to_vec(), right: rho.dims().to_vec() });
    }
    let deviation = rho.matrix().hermitian_deviation();
    if !(deviation <= T::hermitian_tol()) {
        return Err(Error::NotHermitian { deviation: deviation.as_f64() });
    }
    let mean_values = (0..basis.len())
        .map(|flat| {
            let z = rho.matrix().trace_of_product(&basis.generator(flat));
            if z.im.abs() > T::real_residue_tol() {
                return Err(Error::ComplexMeanValue { index: flat, imag: z.im.as_f64() });
            }
            Ok(z.re)
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(BlochVector { dims: rho.dims().to_vec(), mean_values })
}

pub fn to_bloch<T: Real>(rho: &DensityMatrix<T>) -> Result<BlochVector<T>> {
    to_bloch_with(&ProductBasis::new(rho.dims())?, rho)
}

/// Matrix rebuilt from a Bloch vector together with the outcome of the
/// density-matrix checks. Arbitrary vectors may leave the state set, so
/// an invalid reconstruction is reported rather than repaired.
#[derive(Clone, Debug)]
pub struct Reconstruction<T> {
    pub dims: Vec<usize>,
    pub matrix: ComplexMatrix<T>,
    pub violation: Option<Error>,
}

impl<T: Real> Reconstruction<T> {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_state(self) -> Result<DensityMatrix<T>> {
        match self.violation {
            Some(e) => Err(e),
            None => DensityMatrix::new(self.dims, self.matrix),
        }
    }
}

/// `ρ = Σ r_{j1...jn} Γ_{j1} ⊗ ... ⊗ Γ_{jn}`.
pub fn from_bloch<T: Real>(v: &BlochVector<T>) -> Result<Reconstruction<T>> {
    let basis = ProductBasis::new(&v.dims)?;
    let d = basis.dim();
    let mut acc = ComplexMatrix::<T>::zeros(d, d);
    for flat in 0..basis.len() {
        let r = v.component(flat);
        if r.is_zero() {
            continue;
        }
        acc = &acc + &basis.generator(flat).scale_complex(Complex::new(r, T::zero()));
    }
    let violation = validate_state(&acc).err();
    Ok(Reconstruction { dims: v.dims.clone(), matrix: acc, violation })
}

fn check_same_dims<T: Real>(rho: &DensityMatrix<T>, zeta: &DensityMatrix<T>) -> Result<()> {
    if rho.dims() != zeta.dims() {
        return Err(Error::DimensionMismatch { left: rho.dims().to_vec(), right: zeta.dims().to_vec() });
    }
    Ok(())
}

/// `√Tr((ρ-ζ)²)`, evaluated as the Frobenius norm of the Hermitian difference.
pub fn hsd_direct<T: Real>(rho: &DensityMatrix<T>, zeta: &DensityMatrix<T>) -> Result<T> {
    check_same_dims(rho, zeta)?;
    Ok(matrix_hsd(rho.matrix(), zeta.matrix()))
}

pub(crate) fn matrix_hsd<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> T {
    (a - b).frobenius()
}

/// `‖R - Z‖` over rescaled Bloch vectors.
pub fn hsd_bloch<T: Real>(rho: &DensityMatrix<T>, zeta: &DensityMatrix<T>) -> Result<T> {
    check_same_dims(rho, zeta)?;
    let basis = ProductBasis::new(rho.dims())?;
    to_bloch_with(&basis, rho)?.distance(&to_bloch_with(&basis, zeta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gellmann::GeneratorClass;

    type M = ComplexMatrix<f64>;

    fn plus() -> DensityMatrix<f64> {
        DensityMatrix::from_matrix(M::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap()).unwrap()
    }

    #[test]
    fn ground_state_components() {
        let v = to_bloch(&DensityMatrix::diagonal(vec![2], &[1.0f64, 0.0]).unwrap()).unwrap();
        assert_eq!(v.mean_values(), &[1.0, 1.0, 0.0, 0.0]);
        assert!((v.component(1) - 0.5).abs() < 1e-15);
        assert!((v.component(0) - 0.5).abs() < 1e-15);
        assert!((v.rescaled(0) - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn plus_state_components() {
        let v = to_bloch(&plus()).unwrap();
        let sym = v.mean_value_at(&MultiIndex(vec![GeneratorClass::Symmetric(1, 2)])).unwrap();
        let anti = v.mean_value_at(&MultiIndex(vec![GeneratorClass::Antisymmetric(1, 2)])).unwrap();
        assert!((sym - 1.0).abs() < 1e-15);
        assert!(anti.abs() < 1e-15);
    }

    #[test]
    fn maximally_mixed_has_no_other_components() {
        for dims in [vec![2], vec![3], vec![2, 3]] {
            let v = to_bloch(&DensityMatrix::<f64>::maximally_mixed(dims.clone()).unwrap()).unwrap();
            assert!((v.mean_value(0) - 1.0).abs() < 1e-15);
            let d: f64 = dims.iter().product::<usize>() as f64;
            assert!((v.component(0) - 1.0 / d).abs() < 1e-15);
            assert!((v.rescaled(0) - 1.0 / d.sqrt()).abs() < 1e-15);
            assert!(v.mean_values()[1..].iter().all(|x| x.abs() < 1e-15));
        }
    }

    #[test]
    fn identity_only_vector_rebuilds_maximally_mixed() {
        let v = BlochVector::<f64>::maximally_mixed(vec![2, 3]).unwrap();
        let rec = from_bloch(&v).unwrap();
        assert!(rec.is_valid());
        assert!(rec.matrix.max_abs_diff(&M::identity(6).scale(1.0 / 6.0)) < 1e-15);
    }

    #[test]
    fn qubit_vector_rebuilds_ground_state() {
        let rec = from_bloch(&BlochVector::qubit(1.0, 0.0, 0.0)).unwrap();
        assert!(rec.matrix.max_abs_diff(&M::from_diagonal(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn out_of_ball_vector_is_flagged_not_repaired() {
        let rec = from_bloch(&BlochVector::qubit(1.0f64, 1.0, 0.0)).unwrap();
        assert!(!rec.is_valid());
        assert!(matches!(rec.violation, Some(Error::NotPositive { .. })));
        // Entries are exactly the expansion, not a projection.
        assert!((rec.matrix[(0, 1)].re - 0.5).abs() < 1e-15);
        assert!(rec.into_state().is_err());
    }

    #[test]
    fn missing_components_rejected() {
        assert!(matches!(
            BlochVector::new(vec![2], vec![1.0, 0.0, 0.0]),
            Err(Error::ComponentCount { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn distance_examples() {
        let e1 = DensityMatrix::diagonal(vec![2], &[1.0f64, 0.0]).unwrap();
        let e2 = DensityMatrix::diagonal(vec![2], &[0.0, 1.0]).unwrap();
        let mixed = DensityMatrix::maximally_mixed(vec![2]).unwrap();
        let cases = [(&e1, &e2, 2f64.sqrt()), (&e1, &e1, 0.0), (&plus(), &mixed, 0.5f64.sqrt())];
        for (a, b, expected) in cases {
            assert!((hsd_direct(a, b).unwrap() - expected).abs() < 1e-15);
            assert!((hsd_bloch(a, b).unwrap() - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn mismatched_dims_rejected() {
        let a = DensityMatrix::<f64>::maximally_mixed(vec![2, 2]).unwrap();
        let b = DensityMatrix::<f64>::maximally_mixed(vec![4]).unwrap();
        assert!(matches!(hsd_direct(&a, &b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(hsd_bloch(&a, &b), Err(Error::DimensionMismatch { .. })));
    }
}
