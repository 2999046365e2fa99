#![allow(dead_code)]

use qudit_coherence::matops::random_density;
use qudit_coherence::{ComplexMatrix, DensityMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DIMS: [&[usize]; 5] = [&[2], &[3], &[4], &[2, 2], &[2, 3]];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ginibre state on the given subsystem layout.
pub fn state(dims: &[usize], rng: &mut ChaCha8Rng) -> DensityMatrix<f64> {
    let d = dims.iter().product();
    let rho: DensityMatrix<f64> = random_density(d, rng).unwrap();
    DensityMatrix::new(dims.to_vec(), rho.into_matrix()).unwrap()
}

pub fn seeded_state(dims: &[usize], seed: u64) -> DensityMatrix<f64> {
    state(dims, &mut rng(seed))
}

/// Random Hermitian matrix with entries of order one.
pub fn hermitian(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix<f64> {
    use rand::Rng;
    let mut m = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        m[(i, i)] = num_complex::Complex::new(rng.random_range(-1.0..1.0), 0.0);
        for j in i + 1..d {
            let z = num_complex::Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

fn diagonal_distance(rho: &DensityMatrix<f64>, diag: &[f64]) -> f64 {
    let d = rho.dim();
    let mut acc = 0.0;
    for (i, &di) in diag.iter().enumerate() {
        for j in 0..d {
            let target = if i == j { di } else { 0.0 };
            acc += (rho.entry(i, j) - num_complex::Complex::new(target, 0.0)).norm_sqr();
        }
    }
    acc.sqrt()
}

fn simplex_point(free: &[f64]) -> Option<Vec<f64>> {
    let rest = 1.0 - free.iter().sum::<f64>();
    if free.iter().any(|&t| t < 0.0) || rest < -1e-15 {
        return None;
    }
    let mut p = free.to_vec();
    p.push(rest.max(0.0));
    Some(p)
}

/// Minimum of the Hilbert-Schmidt distance from `rho` (qubit or qutrit) to
/// diagonal states: a step-0.01 grid over the simplex, then compass search
/// from the best grid point.
pub fn brute_force_incoherent_distance(rho: &DensityMatrix<f64>) -> f64 {
    let d = rho.dim();
    assert!(d == 2 || d == 3);
    let eval = |free: &[f64]| simplex_point(free).map(|p| diagonal_distance(rho, &p)).unwrap_or(f64::INFINITY);
    let mut best = (f64::INFINITY, vec![0.0; d - 1]);
    for i in 0..=100 {
        let t1 = i as f64 / 100.0;
        if d == 2 {
            let v = eval(&[t1]);
            if v < best.0 {
                best = (v, vec![t1]);
            }
            continue;
        }
        for j in 0..=(100 - i) {
            let t = [t1, j as f64 / 100.0];
            let v = eval(&t);
            if v < best.0 {
                best = (v, t.to_vec());
            }
        }
    }
    let (mut value, mut x) = best;
    let mut step = 0.01;
    while step > 1e-9 {
        let mut improved = false;
        for k in 0..x.len() {
            for sign in [-1.0, 1.0] {
                let mut y = x.clone();
                y[k] += sign * step;
                let v = eval(&y);
                if v < value {
                    value = v;
                    x = y;
                    improved = true;
                }
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    value
}
