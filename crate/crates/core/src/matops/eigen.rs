//! Eigenvalues of small Hermitian matrices by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then annihilates it with a real Givens rotation. Sweeps run over
//! all pairs `p < q` until the off-diagonal mass falls to rounding level.

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// All eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Input whose Hermitian deviation exceeds [`Real::hermitian_tol`] is rejected.
pub fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let deviation = m.hermitian_deviation();
    if !(deviation <= T::hermitian_tol()) {
        return Err(Error::NotHermitian { deviation: deviation.as_f64() });
    }
    let n = m.side();
    let half = T::lit(0.5);
    // Symmetrize so rounding asymmetry in the input cannot bias the sweep.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * half);

    let total = a.frobenius_sq();
    let threshold = total * T::epsilon() * T::epsilon();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged && off_diagonal_sq(&a) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut values: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    values.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(values)
}

fn off_diagonal_sq<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.side();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + a[(i, j)].norm_sqr();
            }
        }
    }
    acc
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let n = a.side();
    let apq = a[(p, q)];
    let modulus = apq.norm();
    if modulus.is_zero() {
        return;
    }

    // Diagonal unitary U with U_qq = conj(phase): makes the pivot real.
    let phase = apq / modulus;
    let phase_conj = phase.conj();
    for k in 0..n {
        a[(k, q)] = a[(k, q)] * phase_conj;
    }
    for k in 0..n {
        a[(q, k)] = a[(q, k)] * phase;
    }

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (modulus + modulus);
    let t = theta.signum() / (theta.abs() + theta.hypot(T::one()));
    let c = T::one() / t.hypot(T::one());
    let s = t * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * s;
        a[(k, q)] = akp * s + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * s + aqk * c;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
}
