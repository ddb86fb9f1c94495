mod common;

use common::*;
use leekh_core::algebra::{homology_image, x_power_image, Bigrading, ChainMap};
use leekh_core::cobordism::{
    compose, event_chain_map, verify_neck_cutting, DotSign, DottedCobordismSpec, ElementaryEvent, NeckSite,
};
use leekh_core::diagram::{checkerboard, default_outer_face, saddle};
use leekh_core::khovanov::{lee_module, LeeComplex};
use leekh_core::FieldSpec;
use proptest::prelude::*;

fn lee(d: &leekh_core::diagram::LinkDiagram) -> LeeComplex {
    LeeComplex::build(d, FieldSpec::Rational).unwrap()
}

fn dot(c: &LeeComplex, arc: u32, signed: bool) -> ChainMap {
    let e = if signed {
        let col = checkerboard(c.diagram(), default_outer_face(c.diagram())).unwrap();
        ElementaryEvent::colored_dot(&col, arc).unwrap()
    } else {
        ElementaryEvent::Dot { arc, sign: DotSign::Unsigned }
    };
    event_chain_map(c, &e).unwrap().0
}

#[test]
fn dot_squared_is_t() {
    for (name, d) in fixtures() {
        let c = lee(&d);
        let id = ChainMap::identity(c.shared_complex().clone());
        for &a in d.arcs() {
            for signed in [false, true] {
                let f = dot(&c, a, signed);
                assert_eq!(f.compose(&f).unwrap(), id.times_x(2), "{name} arc {a}");
            }
        }
    }
}

#[test]
fn colored_dots_agree_on_homology() {
    for (name, d) in knots() {
        let c = lee(&d);
        let base = dot(&c, d.basepoint(), true);
        for &a in d.arcs() {
            let diff = dot(&c, a, true).sub(&base).unwrap();
            assert!(homology_image(&diff).is_zero(), "{name} arc {a}");
        }
    }
}

#[test]
fn unsigned_dots_agree_up_to_sign() {
    for (name, d) in knots() {
        let c = lee(&d);
        let base = dot(&c, d.basepoint(), false);
        for &a in d.arcs() {
            let f = dot(&c, a, false);
            let same = homology_image(&f.sub(&base).unwrap()).is_zero();
            let opposite = homology_image(&f.add(&base).unwrap()).is_zero();
            assert!(same || opposite, "{name} arc {a}");
        }
    }
}

#[test]
fn repeated_dots_give_x_power_images() {
    for (name, d) in knots() {
        let c = lee(&d);
        let m = lee_module(&d, FieldSpec::Rational).unwrap();
        let f = dot(&c, d.basepoint(), false);
        let mut g = ChainMap::identity(c.shared_complex().clone());
        for k in 0..4 {
            assert_eq!(homology_image(&g), x_power_image(&m, k), "{name} d={k}");
            g = f.compose(&g).unwrap();
        }
    }
}

#[test]
fn neck_cutting_sites() {
    let trefoil_plus_circle = pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(7)");
    let sites = [
        (pd("O(1) O(2)"), NeckSite::Circle(2)),
        (trefoil_plus_circle.clone(), NeckSite::Circle(7)),
        (pd(""), NeckSite::Saddle(1, 1)),
        (pd("O(1) O(2)"), NeckSite::Saddle(1, 2)),
        (trefoil_plus_circle.clone(), NeckSite::Saddle(7, 1)),
        (trefoil_plus_circle, NeckSite::Saddle(3, 7)),
    ];
    for (d, site) in sites {
        let c = lee(&d);
        let col = checkerboard(&d, default_outer_face(&d)).unwrap();
        for coloring in [None, Some(&col)] {
            let r = verify_neck_cutting(&c, site, coloring).unwrap();
            assert!(r.holds_up_to_sign, "{} {site:?}", d.to_pd_string());
        }
    }
}

#[test]
fn neck_cutting_on_trefoil_saddles() {
    let d = pd(TREFOIL);
    let c = lee(&d);
    let mut checked = 0;
    for &p in d.arcs() {
        for &q in d.arcs() {
            if p >= q || saddle(&d, p, q).is_err() {
                continue;
            }
            let r = verify_neck_cutting(&c, NeckSite::Saddle(p, q), None).unwrap();
            assert!(r.holds_up_to_sign, "saddle {p},{q}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn bad_sites_are_refused() {
    let c = lee(&pd(TREFOIL));
    assert!(verify_neck_cutting(&c, NeckSite::Circle(1), None).is_err());
    assert!(verify_neck_cutting(&c, NeckSite::Saddle(1, 99), None).is_err());
}

fn event() -> impl Strategy<Value = u8> {
    0u8..4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bigrading_law(choices in prop::collection::vec(event(), 1..6)) {
        let mut d = pd(TREFOIL);
        let mut events = Vec::new();
        let mut born: Vec<u32> = Vec::new();
        let mut next = 50;
        for k in choices {
            let e = match k {
                0 => {
                    next += 1;
                    born.push(next);
                    ElementaryEvent::Birth { arc: Some(next) }
                }
                1 if !born.is_empty() => ElementaryEvent::Death { arc: born.pop().unwrap() },
                2 if !born.is_empty() => ElementaryEvent::Saddle { p: *born.last().unwrap(), q: 1 },
                _ => ElementaryEvent::Dot { arc: d.arcs()[d.arcs().len() / 2], sign: DotSign::Plus },
            };
            if let ElementaryEvent::Saddle { .. } = e {
                born.pop();
            }
            d = e.apply(&d).unwrap();
            events.push(e);
        }
        let spec = DottedCobordismSpec { source: pd(TREFOIL), events };
        let (f, end) = spec.chain_map(FieldSpec::Rational).unwrap();
        let chi = spec.euler_characteristic();
        prop_assert_eq!(f.shift(), Bigrading::new(0, chi - 2 * spec.dot_count() as i32));
        prop_assert_eq!(end.diagram(), &d);
        let parts: Vec<ChainMap> = {
            let mut cur = lee(&spec.source);
            let mut v = Vec::new();
            for e in &spec.events {
                let (g, n) = event_chain_map(&cur, e).unwrap();
                v.push(g);
                cur = n;
            }
            v
        };
        prop_assert_eq!(compose(&parts).unwrap(), f);
    }
}
