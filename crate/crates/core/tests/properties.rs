mod common;

use common::{hermitian, rng, seeded_state};
use proptest::prelude::*;
use qudit_coherence::channels::{ad_channel, ad_coherence_closed, pd_channel, rho_w, QutritOffDiagonal};
use qudit_coherence::coherence::{
    dephase, hsc, l1c, off_diagonal_mass, qubit_rec_closed, rec, two_copy_closed_forms, two_copy_direct,
};
use qudit_coherence::nmutp::{hsd_tensor_power, sample_quartet, Ensemble};
use qudit_coherence::{build_basis, from_bloch, hsd_bloch, hsd_direct, tensor, to_bloch, ComplexMatrix, DensityMatrix};

fn dims_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![Just(vec![2]), Just(vec![3]), Just(vec![4]), Just(vec![2, 2]), Just(vec![2, 3])]
}

fn qubit_or_qutrit() -> impl Strategy<Value = usize> {
    prop_oneof![Just(2usize), Just(3usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative_and_multiplies_traces(d in qubit_or_qutrit(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (hermitian(d, &mut r), hermitian(2, &mut r), hermitian(d, &mut r));
        let left = tensor(&tensor(&a, &b), &c);
        let right = tensor(&a, &tensor(&b, &c));
        prop_assert!(left.max_abs_diff(&right) < 1e-12);
        let t = tensor(&a, &b).trace() - a.trace() * b.trace();
        prop_assert!(t.norm() < 1e-12);
    }

    #[test]
    fn kron_is_bilinear(d in qubit_or_qutrit(), seed in any::<u64>(), s in -2.0f64..2.0) {
        let mut r = rng(seed);
        let (a, a2, b) = (hermitian(d, &mut r), hermitian(d, &mut r), hermitian(d, &mut r));
        let lhs = tensor(&(&a.scale(s) + &a2), &b);
        let rhs = &tensor(&a, &b).scale(s) + &tensor(&a2, &b);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let lhs = tensor(&b, &(&a + &a2));
        let rhs = &tensor(&b, &a) + &tensor(&b, &a2);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn spectrum_of_states_lies_in_unit_interval(dims in dims_strategy(), seed in any::<u64>()) {
        let rho = seeded_state(&dims, seed);
        let ev = rho.eigenvalues();
        prop_assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        prop_assert!(ev.iter().all(|&l| (-1e-10..=1.0 + 1e-10).contains(&l)));
        prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn entropy_is_additive(d in qubit_or_qutrit(), seed in any::<u64>()) {
        let rho = seeded_state(&[d], seed);
        prop_assert!((rho.tensor(&rho).entropy() - 2.0 * rho.entropy()).abs() < 1e-9);
        prop_assert!(rho.entropy() >= 0.0 && rho.entropy() <= (d as f64).log2() + 1e-12);
    }

    #[test]
    fn purity_is_bounded(dims in dims_strategy(), seed in any::<u64>()) {
        let rho = seeded_state(&dims, seed);
        let p = rho.purity();
        prop_assert!(p >= 1.0 / rho.dim() as f64 - 1e-12 && p <= 1.0 + 1e-12);
    }

    #[test]
    fn hermitian_matrices_are_recovered_from_coefficients(d in 2usize..=4, seed in any::<u64>()) {
        let m = hermitian(d, &mut rng(seed));
        let basis = build_basis::<f64>(d).unwrap();
        let coeffs = basis.coefficients(&m);
        prop_assert!(coeffs.iter().all(|c| c.im.abs() < 1e-12));
        prop_assert!(basis.synthesize(&coeffs).max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn bloch_round_trip(dims in dims_strategy(), seed in any::<u64>()) {
        let rho = seeded_state(&dims, seed);
        let v = to_bloch(&rho).unwrap();
        prop_assert!((v.rescaled(0) - 1.0 / (rho.dim() as f64).sqrt()).abs() < 1e-12);
        let back = from_bloch(&v).unwrap();
        prop_assert!(back.is_valid());
        prop_assert!(back.matrix.max_abs_diff(rho.matrix()) < 1e-11);
    }

    #[test]
    fn hsd_routes_agree_and_satisfy_triangle(dims in dims_strategy(), s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (seeded_state(&dims, s1), seeded_state(&dims, s2), seeded_state(&dims, s3));
        let ab = hsd_direct(&a, &b).unwrap();
        prop_assert!((hsd_bloch(&a, &b).unwrap() - ab).abs() < 1e-10);
        let ac = hsd_direct(&a, &c).unwrap();
        let cb = hsd_direct(&c, &b).unwrap();
        prop_assert!(ab <= ac + cb + 1e-10);
        prop_assert!((hsd_direct(&b, &a).unwrap() - ab).abs() < 1e-15);
    }

    #[test]
    fn hsc_is_distance_to_dephased_state(dims in dims_strategy(), seed in any::<u64>()) {
        let rho = seeded_state(&dims, seed);
        let c = hsc(&rho);
        prop_assert!((c - hsd_direct(&rho, &dephase(&rho)).unwrap()).abs() < 1e-10);
        prop_assert!((c * c - off_diagonal_mass(&rho)).abs() < 1e-10);
        prop_assert!(hsc(&dephase(&rho)) == 0.0);
        prop_assert!(c >= 0.0);
    }

    #[test]
    fn qubit_l1_is_root_two_hsc(seed in any::<u64>()) {
        let rho = seeded_state(&[2], seed);
        prop_assert!((l1c(&rho) - 2f64.sqrt() * hsc(&rho)).abs() < 1e-12);
    }

    #[test]
    fn rec_is_additive_and_bounded(d in qubit_or_qutrit(), seed in any::<u64>()) {
        let rho = seeded_state(&[d], seed);
        let r = rec(&rho);
        prop_assert!((rec(&rho.tensor(&rho)) - 2.0 * r).abs() < 1e-9);
        prop_assert!(r >= 0.0 && r <= (d as f64).log2() + 1e-12);
    }

    #[test]
    fn qubit_rec_matches_closed_form(seed in any::<u64>()) {
        let rho = seeded_state(&[2], seed);
        let a = to_bloch(&rho).unwrap().mean_value(1);
        prop_assert!((qubit_rec_closed(a, l1c(&rho)).unwrap() - rec(&rho)).abs() < 1e-10);
    }

    #[test]
    fn qubit_rec_increases_with_population_imbalance(c in 0.05f64..0.95, t in 0.0f64..1.0) {
        let top = (1.0 - c * c).sqrt();
        let (a1, a2) = (top * t * 0.9, top * (t * 0.9 + 0.05));
        prop_assert!(qubit_rec_closed(a2, c).unwrap() > qubit_rec_closed(a1, c).unwrap());
        prop_assert!((qubit_rec_closed(-a1, c).unwrap() - qubit_rec_closed(a1, c).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn two_copy_closed_forms_match_tensor(seed in any::<u64>()) {
        let rho = seeded_state(&[2], seed);
        let a = to_bloch(&rho).unwrap().mean_value(1);
        let c = hsc(&rho);
        let closed = two_copy_closed_forms(a, c * c).unwrap();
        let direct = two_copy_direct(&rho).unwrap();
        prop_assert!((closed.local - direct.local).abs() < 1e-10);
        prop_assert!((closed.nonlocal - direct.nonlocal).abs() < 1e-10);
        prop_assert!((closed.l1_pair - direct.l1_pair).abs() < 1e-10);
    }

    #[test]
    fn channels_preserve_states(p in 0.0f64..=1.0, seed in any::<u64>()) {
        let rho = seeded_state(&[3], seed);
        for ch in [pd_channel(p).unwrap(), ad_channel(p).unwrap()] {
            let out = ch.apply(&rho).unwrap();
            prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
            prop_assert!(out.eigenvalues()[0] > -1e-10);
        }
    }

    #[test]
    fn phase_damping_commutes_with_dephasing(p in 0.0f64..=1.0, seed in any::<u64>()) {
        let rho = seeded_state(&[3], seed);
        let ch = pd_channel(p).unwrap();
        let a = dephase(&ch.apply(&rho).unwrap());
        let b = ch.apply(&dephase(&rho)).unwrap();
        prop_assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-12);
    }

    #[test]
    fn phase_damping_scales_both_quantifiers(p in 0.0f64..=1.0, seed in any::<u64>()) {
        let rho = seeded_state(&[3], seed);
        let out = pd_channel(p).unwrap().apply(&rho).unwrap();
        prop_assert!((l1c(&out) - (1.0 - p) * l1c(&rho)).abs() < 1e-10);
        prop_assert!((hsc(&out) - (1.0 - p) * hsc(&rho)).abs() < 1e-10);
    }

    #[test]
    fn amplitude_damping_closed_form(p in 0.0f64..=1.0, seed in any::<u64>()) {
        let rho = seeded_state(&[3], seed);
        let out = ad_channel(p).unwrap().apply(&rho).unwrap();
        let (c_l1, c_hs) = ad_coherence_closed(p, &QutritOffDiagonal::of(&rho).unwrap()).unwrap();
        prop_assert!((c_l1 - l1c(&out)).abs() < 1e-10);
        prop_assert!((c_hs - hsc(&out)).abs() < 1e-10);
    }

    #[test]
    fn tensor_power_distance_matches_explicit(d in qubit_or_qutrit(), seed in any::<u64>(), index in 0u64..1000) {
        let q = sample_quartet::<f64>(Ensemble::Ginibre, d, seed, index).unwrap();
        let [a, b, _, _] = q.states();
        let explicit = hsd_direct(&a.tensor(a), &b.tensor(b)).unwrap();
        prop_assert!((hsd_tensor_power(a, b).unwrap() - explicit).abs() < 1e-10);
    }
}

#[test]
fn hsc_to_l1_ratio_is_constant_only_under_phase_damping() {
    for w in [0.5, 1.0] {
        let rho = rho_w(w).unwrap();
        let ratio = |ch: qudit_coherence::KrausChannel<f64>| {
            let out = ch.apply(&rho).unwrap();
            hsc(&out) / l1c(&out)
        };
        let pd: Vec<f64> = [0.0, 0.3, 0.6, 0.9].iter().map(|&p| ratio(pd_channel(p).unwrap())).collect();
        assert!(pd.iter().all(|r| (r - pd[0]).abs() < 1e-12));
        let ad: Vec<f64> = [0.0, 0.3, 0.6, 0.9].iter().map(|&p| ratio(ad_channel(p).unwrap())).collect();
        assert!(ad.windows(2).all(|w| (w[1] - w[0]).abs() > 1e-6));
    }
}

#[test]
fn f32_instantiation_agrees_with_f64() {
    let rho = seeded_state(&[3], 17);
    let rho32: DensityMatrix<f32> = rho.cast();
    assert!((hsc(&rho32) as f64 - hsc(&rho)).abs() < 1e-5);
    assert!((l1c(&rho32) as f64 - l1c(&rho)).abs() < 1e-5);
    assert!((rec(&rho32) as f64 - rec(&rho)).abs() < 1e-4);
    let m: ComplexMatrix<f32> = rho.matrix().cast();
    assert!(DensityMatrix::new(vec![3], m).is_ok());
}
