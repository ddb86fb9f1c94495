mod common;

use std::collections::BTreeMap;

use common::*;
use leekh_core::diagram::{connect_sum_pd, mirror};
use leekh_core::khovanov::{build_lee_complex, lee_module};
use leekh_core::oracle::{jones_euler, khovanov_t0, lee_rank_t1, LaurentPoly, ORACLE_LIMIT};
use leekh_core::{Error, FieldSpec};

/// `p · (1 + q^-2)`: a free generator of `F[X]` at `j` spans `j` and `j - 2` once `X^2 = 0`.
fn with_x_squared_zero(p: &BTreeMap<i32, i64>) -> LaurentPoly {
    let mut out = LaurentPoly::new();
    for (&j, &c) in p {
        *out.entry(j).or_default() += c;
        *out.entry(j - 2).or_default() += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

#[test]
fn lee_rank_is_two_to_the_components() {
    for (name, d) in fixtures() {
        let expected = 1 << d.components().len();
        assert_eq!(lee_rank_t1(&d, FieldSpec::Rational).unwrap(), expected, "{name}");
        assert_eq!(lee_rank_t1(&d, FieldSpec::Prime(7)).unwrap(), expected, "{name}");
    }
}

#[test]
fn jones_is_the_euler_characteristic() {
    for (name, d) in fixtures() {
        let jones = jones_euler(&d).unwrap();
        let t0 = khovanov_t0(&d, FieldSpec::Rational).unwrap();
        assert_eq!(t0.euler(), jones, "{name}");
        let c = build_lee_complex(&d, FieldSpec::Rational).unwrap();
        assert_eq!(with_x_squared_zero(&c.graded_euler()), jones, "{name}");
    }
}

#[test]
fn jones_of_known_knots() {
    // unnormalized: (q + q^-1) times the Jones polynomial in q
    let unknot: LaurentPoly = [(-1, 1), (1, 1)].into();
    assert_eq!(jones_euler(&pd("")).unwrap(), unknot);
    let right = jones_euler(&mirror(&pd(TREFOIL))).unwrap();
    let expected: LaurentPoly = [(1, 1), (3, 1), (5, 1), (9, -1)].into();
    assert_eq!(right, expected);
}

#[test]
fn t0_dimension_matches_the_module() {
    for (name, d) in fixtures() {
        let m = lee_module(&d, FieldSpec::Rational).unwrap();
        let t0 = khovanov_t0(&d, FieldSpec::Rational).unwrap();
        assert_eq!(t0.total(), m.t0_dimension(), "{name}");
    }
}

#[test]
fn thin_knots_have_two_plus_twice_the_torsion_count() {
    for (name, d) in knots() {
        let m = lee_module(&d, FieldSpec::Rational).unwrap();
        if m.max_torsion_order() > 1 {
            continue;
        }
        let t0 = khovanov_t0(&d, FieldSpec::Rational).unwrap();
        assert_eq!(t0.total(), 2 + 2 * m.torsion.len(), "{name}");
    }
}

#[test]
fn order_two_torsion_counts_four() {
    let m = lee_module(&pd(K8_19), FieldSpec::Rational).unwrap();
    let t0 = khovanov_t0(&pd(K8_19), FieldSpec::Rational).unwrap();
    assert_eq!(m.torsion.len(), 2);
    assert_eq!(t0.total(), 8);
}

#[test]
fn oracle_has_a_size_cap() {
    let t = pd(TREFOIL);
    let d = connect_sum_pd(&connect_sum_pd(&t, &t), &connect_sum_pd(&t, &t));
    assert!(d.crossing_count() > ORACLE_LIMIT);
    assert!(matches!(khovanov_t0(&d, FieldSpec::Rational), Err(Error::ResourceLimit { .. })));
    assert!(matches!(lee_rank_t1(&d, FieldSpec::Rational), Err(Error::ResourceLimit { .. })));
}
