use pezzo_core::galois::{
    brute_force_ell, compute_ell, paired_cycle, pairing_swap, random_pairing_permutation,
    validate_action, CurveSystem, GaloisAction,
};
use pezzo_core::orbifold::{embedding_descriptor, h0_anti_plurigenus};
use pezzo_core::poly::{rational_roots, UnivariatePoly};
use pezzo_core::rational::rat;
use pezzo_core::verdict::{classify, feasible_ell};
use pezzo_core::{ModelKind, SurfaceModel, TriState};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model_params() -> impl Strategy<Value = (i64, i64, ModelKind)> {
    (2i64..=7, 0i64..=3, any::<bool>()).prop_map(|(m, d, plane)| {
        if plane {
            (m, m + 4, ModelKind::Plane)
        } else {
            (m, m + 2 + d, ModelKind::Hirzebruch)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_is_bilinear_and_symmetric(
        (m, n, kind) in model_params(),
        seed in any::<u64>(),
    ) {
        let model = SurfaceModel::build(m, n, kind).unwrap();
        let r = model.rank();
        let mut x = seed;
        let mut next = || { x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((x >> 33) % 9) as i64 - 4 };
        let a = model.class((0..r).map(|_| next()).collect()).unwrap();
        let b = model.class((0..r).map(|_| next()).collect()).unwrap();
        let c = model.class((0..r).map(|_| next()).collect()).unwrap();
        let ab = model.intersect(&a, &b).unwrap();
        prop_assert_eq!(ab, model.intersect(&b, &a).unwrap());
        let sum = &a + &c;
        prop_assert_eq!(
            model.intersect(&sum, &b).unwrap(),
            ab + model.intersect(&c, &b).unwrap()
        );
    }

    #[test]
    fn anticanonical_degree_matches_rank((m, n, kind) in model_params()) {
        let model = SurfaceModel::build(m, n, kind).unwrap();
        let k2 = model.self_intersection(model.anticanonical()).unwrap();
        prop_assert_eq!(k2 + model.rank() as i64, 10);
    }

    #[test]
    fn h0_matches_hilbert_function(m in 2i64..=10, j in 1i64..=12) {
        let e = embedding_descriptor(m).unwrap();
        let hf = e.hilbert_function(j as usize);
        prop_assert_eq!(h0_anti_plurigenus(m, m + 4, j).unwrap(), hf[j as usize - 1]);
    }

    #[test]
    fn rational_roots_recover_linear_factors(
        roots in prop::collection::vec((-6i64..=6, 1i64..=4), 1..5),
        extra in 1i64..=5,
    ) {
        // Multiply out (t - p/q) factors and an irreducible t^2 + extra.
        let mut p = UnivariatePoly::from_ints(&[extra, 0, 1]);
        let mut expected: Vec<_> = roots.iter().map(|&(a, b)| rat(a, b)).collect();
        for r in &expected {
            p = p.mul(&UnivariatePoly::linear_root(r));
        }
        expected.sort();
        expected.dedup();
        let found: Vec<_> = rational_roots(&p).unwrap().into_iter().map(|r| r.value).collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn random_actions_are_valid_and_engines_agree(
        m in 2i64..=4,
        seed in any::<u64>(),
    ) {
        let (n, kind) = (m + 4, ModelKind::Plane);
        let model = SurfaceModel::build(m, n, kind).unwrap();
        let system = CurveSystem::auto(model).unwrap();
        let k = (m + 4) as usize;
        prop_assume!(system.len() == 2 * k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = random_pairing_permutation(k, &mut rng);
        let action = GaloisAction::new(system.len(), vec![perm]).unwrap();
        prop_assert!(validate_action(&system, &action).is_valid());
        let fast = compute_ell(&system, &action).unwrap();
        let slow = brute_force_ell(&system, &action).unwrap();
        prop_assert_eq!(fast.ell, slow.ell);
        prop_assert_eq!(fast.witness, slow.witness);
    }

    #[test]
    fn verdict_never_drops_back_to_irrational(m in 2i64..=8, n_off in 4i64..=5) {
        let n = m + n_off;
        let ells: Vec<i64> = feasible_ell(m, n).unwrap().into_iter().collect();
        let mut seen_rational = false;
        for ell in ells {
            let v = classify(m, n, Some(ell), TriState::Yes).unwrap();
            prop_assert!(
                !(seen_rational && v.rational == TriState::No),
                "irrational verdict above a rational one at m={} n={} ell={}", m, n, ell
            );
            seen_rational |= v.rational == TriState::Yes;
            prop_assert!(v.rational != TriState::No || v.cylindrical == TriState::No);
        }
    }
}

#[test]
fn structured_pairings_are_valid() {
    for m in 2..=5 {
        let model = SurfaceModel::build(m, m + 4, ModelKind::Plane).unwrap();
        let system = CurveSystem::auto(model).unwrap();
        let k = (m + 4) as usize;
        for perm in [paired_cycle(k), pairing_swap(k)] {
            let action = GaloisAction::new(2 * k, vec![perm]).unwrap();
            assert!(validate_action(&system, &action).is_valid());
        }
    }
}
