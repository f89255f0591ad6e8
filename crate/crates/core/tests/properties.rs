use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hopflab::builders::{drinfeld_double, dual_group_algebra, GroupTable};
use hopflab::corpus::find;
use hopflab::ff::{Fe, Field};
use hopflab::indicators::{indicator_table, sweedler_power};
use hopflab::integrals::IntegralOptions;
use hopflab::pipeline::{analyze, Analysis, PipelineOptions};
use hopflab::twist::{dual_bicharacter_twist, gauge_invariance_check, Twist};
use hopflab::HopfAlgebra;

fn double_s3() -> Analysis {
    let h = drinfeld_double(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap();
    analyze(&h, PipelineOptions::default()).unwrap()
}

fn element(h: &HopfAlgebra, coeffs: &[u64]) -> Vec<Fe> {
    let f = h.field();
    coeffs.iter().map(|&c| f.element(c % f.order())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn antipode_square_is_conjugation_by_u(coeffs in prop::collection::vec(0u64..7, 36)) {
        let a = double_s3();
        let h = &a.algebra;
        let x = element(h, &coeffs);
        let lhs = h.antipode(&h.antipode(&x));
        let rhs = h.mul(&h.mul(&a.integrals.u, &x), &a.integrals.u_inv);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn powers_of_integral_are_central(n in -6i64..=6) {
        let a = double_s3();
        let h = &a.algebra;
        let p = sweedler_power(h, &a.integrals.integral, n);
        prop_assert!(h.is_central(&p));
        prop_assert_eq!(h.antipode(&p), p);
    }

    #[test]
    fn table_ignores_integral_scale(c in 1u64..7) {
        let a = double_s3();
        let h = &a.algebra;
        let id = a.integrals.rescaled(h, h.field().element(c), IntegralOptions::default()).unwrap();
        let wd = hopflab::wedderburn::WedderburnData::compute(h, &id, &mut ChaCha8Rng::seed_from_u64(c)).unwrap();
        prop_assert_eq!(
            indicator_table(h, &a.integrals, &a.wedderburn, (-3, 3)).unwrap(),
            indicator_table(h, &id, &wd, (-3, 3)).unwrap()
        );
    }

    #[test]
    fn group_indicators_are_periodic_in_the_exponent(n in -8i64..=8) {
        let e = find("d4_gf5").unwrap();
        let h = e.build().unwrap();
        let a = analyze(&h, PipelineOptions::default()).unwrap();
        let t = indicator_table(&h, &a.integrals, &a.wedderburn, (n, n + 4)).unwrap();
        for i in 0..a.wedderburn.len() {
            prop_assert_eq!(t.value(i, n), t.value(i, n + 4));
        }
    }

    #[test]
    fn every_bicharacter_twist_is_gauge_trivial(form in prop::array::uniform4(0u64..3)) {
        let g = GroupTable::product(&GroupTable::cyclic(3), &GroupTable::cyclic(3));
        let h = dual_group_algebra(&g, &Field::prime(7).unwrap()).unwrap();
        let f = h.field().clone();
        let w = f.root_of_unity(3).unwrap();
        let beta = |x: usize, y: usize| {
            let (x1, x2, y1, y2) = ((x / 3) as u64, (x % 3) as u64, (y / 3) as u64, (y % 3) as u64);
            f.pow(w, form[0] * x1 * y1 + form[1] * x1 * y2 + form[2] * x2 * y1 + form[3] * x2 * y2)
        };
        let (j, j_inv) = dual_bicharacter_twist(&h, &g, beta).unwrap();
        let t = Twist::validate(&h, j, Some(j_inv)).unwrap();
        let r = gauge_invariance_check(&h, &t, (-2, 3), &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        prop_assert!(r.all_passed());
    }
}
