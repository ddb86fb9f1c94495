mod common;

use common::*;
use leekh_core::algebra::{
    decompose_homology, decompose_homology_with, gaussian_reduce, Bigrading, ModuleDecomposition, PivotOrder, Torsion,
};
use leekh_core::diagram::{connect_sum_pd, mirror, LinkDiagram};
use leekh_core::invariants::{connect_sum_module, extortion_order, s_invariant};
use leekh_core::khovanov::{build_lee_complex_with, lee_module, lee_module_with, BuildOptions, BuildStrategy};
use leekh_core::FieldSpec;

const FIELDS: [FieldSpec; 2] = [FieldSpec::Rational, FieldSpec::Prime(3)];

fn with(strategy: BuildStrategy) -> BuildOptions {
    BuildOptions { strategy, ..Default::default() }
}

fn module_by(d: &LinkDiagram, field: FieldSpec, strategy: BuildStrategy) -> ModuleDecomposition {
    lee_module_with(d, field, &with(strategy)).unwrap()
}

#[test]
fn scan_matches_cube_on_fixtures() {
    for (name, d) in fixtures() {
        for field in FIELDS {
            assert_eq!(
                module_by(&d, field, BuildStrategy::Scan),
                module_by(&d, field, BuildStrategy::Cube),
                "{name} over {field}"
            );
        }
    }
}

#[test]
fn scan_matches_cube_on_torus_knots() {
    for (strands, word) in [(2, vec![1; 7]), (3, [1, 2].repeat(5)), (3, [1, -2].repeat(3))] {
        let d = braid_closure(strands, &word);
        assert_eq!(
            module_by(&d, FieldSpec::Rational, BuildStrategy::Scan),
            module_by(&d, FieldSpec::Rational, BuildStrategy::Cube),
            "{word:?}"
        );
    }
}

#[test]
fn every_basepoint_gives_the_same_knot_module() {
    for (name, d) in knots() {
        let base = lee_module(&d, FieldSpec::Rational).unwrap();
        for &a in d.arcs() {
            let moved = d.with_basepoint(a).unwrap();
            for strategy in [BuildStrategy::Scan, BuildStrategy::Cube] {
                assert_eq!(module_by(&moved, FieldSpec::Rational, strategy), base, "{name} at arc {a}");
            }
        }
    }
}

#[test]
fn pivot_order_does_not_matter() {
    for (name, d) in fixtures() {
        let c = build_lee_complex_with(&d, FieldSpec::Rational, &with(BuildStrategy::Cube)).unwrap();
        assert_eq!(
            decompose_homology_with(&c, PivotOrder::Lexicographic),
            decompose_homology_with(&c, PivotOrder::Reverse),
            "{name}"
        );
    }
}

#[test]
fn reduction_keeps_the_euler_characteristic() {
    for (name, d) in fixtures() {
        for strategy in [BuildStrategy::Cube, BuildStrategy::Scan] {
            let c = build_lee_complex_with(&d, FieldSpec::Rational, &with(strategy)).unwrap();
            c.check_d_squared().unwrap();
            let r = gaussian_reduce(&c);
            assert_eq!(c.graded_euler(), r.graded_euler(), "{name}");
        }
    }
}

/// Mirroring sends `Σ^{0,j}F[X]` to `Σ^{0,2-j}F[X]` and `Σ^{i,j}F[X]/X^n` to
/// `Σ^{1-i,2n+2-j}F[X]/X^n`.
fn mirror_module(m: &ModuleDecomposition) -> ModuleDecomposition {
    ModuleDecomposition::new(
        m.field,
        m.towers.iter().map(|b| Bigrading::new(-b.i, 2 - b.j)).collect(),
        m.torsion.iter().map(|t| Torsion { i: 1 - t.i, j: 2 * t.n as i32 + 2 - t.j, n: t.n }).collect(),
    )
}

#[test]
fn mirror_duality() {
    for (name, d) in knots() {
        let m = lee_module(&d, FieldSpec::Rational).unwrap();
        let mm = lee_module(&mirror(&d), FieldSpec::Rational).unwrap();
        assert_eq!(mirror_module(&m), mm, "{name}");
        assert_eq!(s_invariant(&m).unwrap(), -s_invariant(&mm).unwrap());
    }
}

#[test]
fn known_s_and_xo() {
    let expect = [
        ("unknot", 0, 0),
        ("kink+", 0, 0),
        ("kink-", 0, 0),
        ("two kinks", 0, 0),
        ("3_1 left", -2, 1),
        ("3_1 right", 2, 1),
        ("4_1", 0, 1),
        ("5_1", -4, 1),
        ("5_2", -2, 1),
        ("6_1", 0, 1),
        ("8_19", 6, 2),
    ];
    for ((name, d), (ename, s, xo)) in knots().into_iter().zip(expect) {
        assert_eq!(name, ename);
        for field in FIELDS {
            let m = lee_module(&d, field).unwrap();
            assert_eq!((s_invariant(&m).unwrap(), extortion_order(&m).unwrap()), (s, xo), "{name} over {field}");
        }
    }
}

#[test]
fn connect_sums_match_the_formula() {
    let t = pd(TREFOIL);
    let e = pd(FIGURE_EIGHT);
    let k = pd(K8_19);
    for (a, b) in [(&t, &t), (&t, &mirror(&t)), (&e, &t), (&e, &e), (&k, &mirror(&k)), (&k, &t)] {
        let d = connect_sum_pd(a, b);
        let direct = module_by(&d, FieldSpec::Rational, BuildStrategy::Scan);
        let formula =
            connect_sum_module(&lee_module(a, FieldSpec::Rational).unwrap(), &lee_module(b, FieldSpec::Rational).unwrap())
                .unwrap();
        assert_eq!(direct, formula, "{}", d.to_pd_string());
    }
}

#[test]
fn split_unions_multiply_by_v() {
    let knot = lee_module(&pd(TREFOIL), FieldSpec::Rational).unwrap();
    let with_circle = lee_module(&pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(7)"), FieldSpec::Rational).unwrap();
    let mut towers: Vec<_> = knot.towers.iter().flat_map(|b| [b.shifted(0, 1), b.shifted(0, -1)]).collect();
    towers.sort();
    let torsion: Vec<_> = knot.torsion.iter().flat_map(|t| [t.shifted(0, 1), t.shifted(0, -1)]).collect();
    assert_eq!(with_circle, ModuleDecomposition::new(FieldSpec::Rational, towers, torsion));
}

#[test]
fn large_diagrams_use_the_scan() {
    let k = pd(K8_19);
    let d = connect_sum_pd(&k, &mirror(&k));
    assert_eq!(d.crossing_count(), 16);
    let m = lee_module(&d, FieldSpec::Prime(5)).unwrap();
    assert_eq!(s_invariant(&m), Ok(0));
    assert_eq!(extortion_order(&m), Ok(2));
    let too_big = with(BuildStrategy::Auto);
    let huge = connect_sum_pd(&d, &pd(TREFOIL));
    assert!(lee_module_with(&huge, FieldSpec::Rational, &too_big).is_err());
    let raised = BuildOptions { max_crossings: 19, ..too_big };
    assert!(lee_module_with(&huge, FieldSpec::Rational, &raised).is_ok());
}

#[test]
fn homology_of_the_minimal_complex_is_the_module() {
    let m = lee_module(&pd(K8_19), FieldSpec::Rational).unwrap();
    assert_eq!(decompose_homology(&minimal_complex(&m)), m);
}
