use hopfcyc::cyclic::{build_generic, verify_relations};
use hopfcyc::rep::generate::{perturb_coaction, random_modcomod, yd_coefficients};
use hopfcyc::rep::{check_center, check_stability, check_yd, phi, phi_inv, stability_with_power, twist_module, yd_routes, ModuleObject};
use hopfcyc::trace::{tau_zero, TraceInstance, TraceVariance};
use hopfcyc::{HopfAlgebra, LeftModule, ModuleAlgebra, ModuleCoalgebra};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn hopf(k: usize) -> HopfAlgebra {
    let all = HopfAlgebra::builtins();
    all[k % all.len()].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn yd_routes_agree(k in 0usize..6, seed: u64, i in -2i64..=2) {
        let h = hopf(k);
        let m = random_modcomod(&h, 3, &mut ChaCha8Rng::seed_from_u64(seed));
        let r = yd_routes(&h, &m, i).unwrap();
        prop_assert_eq!(r.route1, r.route2);
    }

    #[test]
    fn stability_parity(k in 0usize..6, seed: u64, i in -2i64..=2) {
        let h = hopf(k);
        let m = random_modcomod(&h, 3, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(check_stability(&h, &m, i), stability_with_power(&h, &m, 2 * i - 1));
    }

    #[test]
    fn phi_is_invertible(k in 0usize..6, seed: u64) {
        let h = hopf(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_modcomod(&h, 3, &mut rng);
        let probe = random_modcomod(&h, 2, &mut rng).module().clone();
        for v in [LeftModule::regular(&h), probe] {
            let there = phi(&h, &m, &v);
            let back = phi_inv(&h, &m, &v);
            prop_assert!((&back * &there).is_identity());
            prop_assert!((&there * &back).is_identity());
        }
    }

    #[test]
    fn twist_round_trip(k in 0usize..6, seed: u64, t in -3i64..=3) {
        let h = hopf(k);
        let v = random_modcomod(&h, 3, &mut ChaCha8Rng::seed_from_u64(seed)).module().clone();
        prop_assert_eq!(twist_module(&h, &twist_module(&h, &v, t), -t), v);
    }

    #[test]
    fn antipode_powers_add(k in 0usize..6, a in -4i64..=4, b in -4i64..=4) {
        let h = hopf(k);
        prop_assert_eq!(&h.s_power(a) * &h.s_power(b), h.s_power(a + b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn center_matches_opposite_yd(seed: u64, i in -1i64..=1, perturb: bool) {
        let h = HopfAlgebra::sweedler();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pool = yd_coefficients(&h, -i, 2, &mut rng);
        let mut m = pool[(seed % pool.len() as u64) as usize].clone();
        if perturb {
            m = perturb_coaction(&m, &mut rng);
        }
        let center = check_center(&h, &m, i, &[LeftModule::regular(&h)]).unwrap();
        prop_assert_eq!(center, check_yd(&h, &m, -i).unwrap());
    }

    #[test]
    fn stable_coefficients_give_cyclic_towers(k in 0usize..6, seed: u64, contra: bool, coalg: bool) {
        let h = hopf(k);
        let variance = if contra { TraceVariance::Contravariant } else { TraceVariance::Covariant };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let stable: Vec<_> = yd_coefficients(&h, variance.yd_index(), 3, &mut rng)
            .into_iter()
            .filter(|m| m.dim() <= 2 && check_stability(&h, m, variance.stability_index()))
            .collect();
        prop_assume!(!stable.is_empty());
        let m = stable[(seed % stable.len() as u64) as usize].clone();
        let t = TraceInstance::new(h.clone(), m, variance).unwrap();
        prop_assert!(tau_zero(&t).unwrap().is_identity());
        let obj = if coalg {
            ModuleObject::Coalgebra(ModuleCoalgebra::regular(&h))
        } else {
            ModuleObject::Algebra(ModuleAlgebra::ground(&h))
        };
        let r = verify_relations(&build_generic(&t, &obj, 2).unwrap());
        prop_assert!(r.passed(), "{:?}", r.families());
    }
}
