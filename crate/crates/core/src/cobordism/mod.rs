//! Chain maps of elementary dotted cobordisms on a fixed diagram: births, deaths, saddles
//! and dots, plus the two neck-cutting identities.
//!
//! Every event keeps the crossings, so states of source and target correspond one to one.
//! Per state the map is the Frobenius operation on the circles at the site; other circles
//! are carried along by their arcs.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Bigrading, ChainMap, Monomial};
use crate::diagram::{birth, birth_at, death, saddle, ArcId, CircleSet, LinkDiagram, RegionColoring};
use crate::field::{FieldElement, FieldSpec};
use crate::khovanov::{counit, dot, merge, split, LeeComplex};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DotSign {
    Plus,
    Minus,
    /// Treated as `+1`; identities are then checked up to an overall sign.
    Unsigned,
}

impl DotSign {
    pub fn from_sign(s: i8) -> Self {
        if s < 0 {
            DotSign::Minus
        } else {
            DotSign::Plus
        }
    }

    fn value(self, field: FieldSpec) -> FieldElement {
        match self {
            DotSign::Minus => field.from_i64(-1),
            _ => field.one(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventKind {
    Birth,
    Death,
    MergeSaddle,
    SplitSaddle,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryEvent {
    /// A new free circle, labeled `arc` or the next unused label.
    Birth { arc: Option<ArcId> },
    /// Removes the free circle `arc`.
    Death { arc: ArcId },
    /// Oriented saddle between two arcs; `p == q` splits a small circle off `p`.
    Saddle { p: ArcId, q: ArcId },
    Dot { arc: ArcId, sign: DotSign },
}

impl ElementaryEvent {
    /// Dot on `arc` with the sign of a checkerboard coloring.
    pub fn colored_dot(coloring: &RegionColoring, arc: ArcId) -> Result<Self> {
        let s = coloring.sign(arc).ok_or_else(|| Error::InvalidSite(format!("no arc {}", arc)))?;
        Ok(ElementaryEvent::Dot { arc, sign: DotSign::from_sign(s) })
    }

    /// Kind of the event on `d`. A saddle merges iff its arcs lie on different components.
    pub fn kind(&self, d: &LinkDiagram) -> Result<EventKind> {
        Ok(match *self {
            ElementaryEvent::Birth { .. } => EventKind::Birth,
            ElementaryEvent::Death { .. } => EventKind::Death,
            ElementaryEvent::Dot { .. } => EventKind::Dot,
            ElementaryEvent::Saddle { p, q } => {
                let cp = d.component_of(p).ok_or_else(|| Error::InvalidSite(format!("no arc {}", p)))?;
                let cq = d.component_of(q).ok_or_else(|| Error::InvalidSite(format!("no arc {}", q)))?;
                if cp == cq {
                    EventKind::SplitSaddle
                } else {
                    EventKind::MergeSaddle
                }
            }
        })
    }

    /// Euler characteristic of the underlying surface piece.
    pub fn euler(&self) -> i32 {
        match self {
            ElementaryEvent::Birth { .. } | ElementaryEvent::Death { .. } => 1,
            ElementaryEvent::Saddle { .. } => -1,
            ElementaryEvent::Dot { .. } => 0,
        }
    }

    pub fn bigrading(&self) -> Bigrading {
        match self {
            ElementaryEvent::Dot { .. } => Bigrading::new(0, -2),
            e => Bigrading::new(0, e.euler()),
        }
    }

    /// Diagram after the event.
    pub fn apply(&self, d: &LinkDiagram) -> Result<LinkDiagram> {
        match *self {
            ElementaryEvent::Birth { arc: None } => Ok(birth(d).0),
            ElementaryEvent::Birth { arc: Some(a) } => birth_at(d, a),
            ElementaryEvent::Death { arc } => death(d, arc),
            ElementaryEvent::Saddle { p, q } => Ok(saddle(d, p, q)?.diagram),
            ElementaryEvent::Dot { arc, .. } => {
                if d.arc_index(arc).is_none() {
                    return Err(Error::InvalidSite(format!("no arc {}", arc)));
                }
                Ok(d.clone())
            }
        }
    }
}

/// A movie of elementary events starting at `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedCobordismSpec {
    pub source: LinkDiagram,
    pub events: Vec<ElementaryEvent>,
}

impl DottedCobordismSpec {
    pub fn euler_characteristic(&self) -> i32 {
        self.events.iter().map(|e| e.euler()).sum()
    }

    pub fn dot_count(&self) -> u32 {
        self.events.iter().filter(|e| matches!(e, ElementaryEvent::Dot { .. })).count() as u32
    }

    /// `(0, χ - 2δ)`.
    pub fn bigrading(&self) -> Bigrading {
        Bigrading::new(0, self.euler_characteristic() - 2 * self.dot_count() as i32)
    }

    /// Checks that every event applies to the diagram before it; returns the final diagram.
    pub fn target(&self) -> Result<LinkDiagram> {
        self.events.iter().try_fold(self.source.clone(), |d, e| e.apply(&d))
    }

    /// The composite chain map, with the complex of the final diagram.
    pub fn chain_map(&self, field: FieldSpec) -> Result<(ChainMap, LeeComplex)> {
        let start = LeeComplex::build(&self.source, field)?;
        let mut f = ChainMap::identity(start.shared_complex().clone());
        let mut current = start;
        for e in &self.events {
            let (g, next) = event_chain_map(&current, e)?;
            f = g.compose(&f)?;
            current = next;
        }
        Ok((f, current))
    }
}

/// Composite of maps given in the order they are applied.
pub fn compose(maps: &[ChainMap]) -> Result<ChainMap> {
    let (first, rest) = maps.split_first().ok_or_else(|| Error::Mismatch("empty composition".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| g.compose(&acc))
}

/// One term of a per-state map: target labeling and power of `T`.
type LocalTerm = (u64, u32);

/// Chain map of one event out of `c`, together with the complex of the resulting diagram.
pub fn event_chain_map(c: &LeeComplex, e: &ElementaryEvent) -> Result<(ChainMap, LeeComplex)> {
    let d = c.diagram();
    let field = c.complex().field();
    let target_diagram = e.apply(d)?;
    let target = if target_diagram == *d { c.clone() } else { LeeComplex::build(&target_diagram, field)? };
    let mut coeff = field.one();
    if let ElementaryEvent::Dot { sign, .. } = e {
        coeff = sign.value(field);
    }
    let strands = match *e {
        ElementaryEvent::Saddle { p, q } => Some(saddle(d, p, q)?.strands),
        _ => None,
    };

    let mut entries = Vec::new();
    for s in 0..c.state_count() as u64 {
        let (from, to) = (c.circles(s), target.circles(s));
        let circle = |set: &CircleSet, a: ArcId| set.circle_of(a).expect("site arcs lie on circles");
        let (skip, local): (Vec<usize>, _) = match *e {
            ElementaryEvent::Birth { .. } => (Vec::new(), Local::Birth),
            ElementaryEvent::Death { arc } => (alloc::vec![circle(from, arc)], Local::Death(circle(from, arc))),
            ElementaryEvent::Dot { arc, .. } => {
                let k = circle(from, arc);
                (alloc::vec![k], Local::Dot(k, circle(to, arc)))
            }
            ElementaryEvent::Saddle { p, q } => {
                let (a, b) = (circle(from, p), circle(from, q));
                let (sp, sq) = strands.expect("saddle strands");
                let (a2, b2) = (circle(to, sp), circle(to, sq));
                let expected = if a == b { from.len() + 1 } else { from.len() - 1 };
                if to.len() != expected {
                    return Err(Error::InvalidSite(format!("saddle at arcs {} and {} is not orientable", p, q)));
                }
                if a == b {
                    (alloc::vec![a], Local::Split(a, a2, b2))
                } else {
                    (alloc::vec![a, b], Local::Merge(a, b, a2))
                }
            }
        };
        let carry = carry(from, to, &skip);
        for g in c.state_range(s) {
            let (_, labels) = c.generator(g);
            let base = carry_bits(labels, &carry);
            let bit = |k: usize| labels >> k & 1 == 1;
            let terms: Vec<LocalTerm> = match local {
                Local::Birth => alloc::vec![(base, 0)],
                Local::Death(k) => counit(bit(k)).map(|t| (base, t)).into_iter().collect(),
                Local::Dot(k, k2) => {
                    let (x, t) = dot(bit(k));
                    alloc::vec![(base | (x as u64) << k2, t)]
                }
                Local::Merge(a, b, a2) => {
                    let (x, t) = merge(bit(a), bit(b));
                    alloc::vec![(base | (x as u64) << a2, t)]
                }
                Local::Split(a, a2, b2) => split(bit(a))
                    .iter()
                    .map(|&(x, y, t)| (base | (x as u64) << a2 | (y as u64) << b2, t))
                    .collect(),
            };
            for (lab, t) in terms {
                let (h, p) = target.locate(s, lab);
                entries.push((g, h, Monomial::new(coeff.clone(), p + 2 * t)));
            }
        }
    }
    let map = ChainMap::new(c.shared_complex().clone(), target.shared_complex().clone(), e.bigrading(), entries)?;
    Ok((map, target))
}

#[derive(Clone, Copy)]
enum Local {
    Birth,
    Death(usize),
    Dot(usize, usize),
    Merge(usize, usize, usize),
    Split(usize, usize, usize),
}

/// For every circle of `from` outside `skip`, the circle of `to` through the same arcs.
fn carry(from: &CircleSet, to: &CircleSet, skip: &[usize]) -> Vec<Option<usize>> {
    from.circles()
        .iter()
        .enumerate()
        .map(|(k, arcs)| {
            if skip.contains(&k) {
                None
            } else {
                arcs.iter().find_map(|a| to.circle_of(*a))
            }
        })
        .collect()
}

fn carry_bits(labels: u64, carry: &[Option<usize>]) -> u64 {
    carry
        .iter()
        .enumerate()
        .filter_map(|(k, t)| t.map(|t| (labels >> k & 1) << t))
        .fold(0, |acc, b| acc | b)
}

/// Where a neck-cutting identity is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeckSite {
    /// A free circle (not the basepoint): `±Id = birth∘death∘dot + dot∘birth∘death`.
    Circle(ArcId),
    /// An oriented saddle: `±(S'∘S) = dot_p + dot_q`, with `S'` the reverse saddle.
    Saddle(ArcId, ArcId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeckCutting {
    pub holds_up_to_sign: bool,
    /// `σ` with `lhs = σ·rhs`, when the identity holds.
    pub resolved_sign: Option<i8>,
}

/// Checks a neck-cutting identity at chain level. Dots take their signs from `coloring`
/// when given, and are unsigned otherwise.
pub fn verify_neck_cutting(c: &LeeComplex, site: NeckSite, coloring: Option<&RegionColoring>) -> Result<NeckCutting> {
    let d = c.diagram();
    let dot_on = |arc: ArcId| -> Result<ElementaryEvent> {
        match coloring {
            Some(col) => ElementaryEvent::colored_dot(col, arc),
            None => Ok(ElementaryEvent::Dot { arc, sign: DotSign::Unsigned }),
        }
    };
    let (lhs, rhs) = match site {
        NeckSite::Circle(u) => {
            if !d.is_loop(u) || u == d.basepoint() {
                return Err(Error::InvalidSite(format!("arc {} is not a free circle away from the basepoint", u)));
            }
            let dot = dot_on(u)?;
            let run = |events: &[ElementaryEvent]| -> Result<ChainMap> {
                let mut f = ChainMap::identity(c.shared_complex().clone());
                let mut cur = c.clone();
                for e in events {
                    let (g, next) = event_chain_map(&cur, e)?;
                    f = g.compose(&f)?;
                    cur = next;
                }
                Ok(f)
            };
            let (kill, reborn) = (ElementaryEvent::Death { arc: u }, ElementaryEvent::Birth { arc: Some(u) });
            let a = run(&[dot, kill, reborn])?;
            let b = run(&[kill, reborn, dot])?;
            (ChainMap::identity(c.shared_complex().clone()), a.add(&b)?)
        }
        NeckSite::Saddle(p, q) => {
            let out = saddle(d, p, q)?;
            let (s1, mid) = event_chain_map(c, &ElementaryEvent::Saddle { p, q })?;
            let (sp, sq) = out.strands;
            let (s2, end) = event_chain_map(&mid, &ElementaryEvent::Saddle { p: sp, q: sq })?;
            if end.diagram() != d {
                return Err(Error::InvalidSite(format!("reverse saddle at {} and {} does not restore the diagram", sp, sq)));
            }
            let (dp, _) = event_chain_map(c, &dot_on(p)?)?;
            let (dq, _) = event_chain_map(c, &dot_on(q)?)?;
            (s2.compose(&s1)?, dp.add(&dq)?)
        }
    };
    let resolved_sign = if lhs == rhs {
        Some(1)
    } else if lhs == rhs.neg() {
        Some(-1)
    } else {
        None
    };
    Ok(NeckCutting { holds_up_to_sign: resolved_sign.is_some(), resolved_sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{homology_image, ModuleDecomposition};
    use crate::diagram::{checkerboard, default_outer_face, parse_pd};

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn lee(pd: &str) -> LeeComplex {
        LeeComplex::build(&parse_pd(pd).unwrap(), q()).unwrap()
    }

    #[test]
    fn dot_on_unknot_is_x() {
        let c = lee("");
        let (f, _) = event_chain_map(&c, &ElementaryEvent::Dot { arc: 1, sign: DotSign::Unsigned }).unwrap();
        assert_eq!(f, ChainMap::identity(c.shared_complex().clone()).times_x(1));
        let img = homology_image(&f);
        assert_eq!(img, ModuleDecomposition::unknot(q()).shifted(0, -2));
    }

    #[test]
    fn birth_then_death_is_zero() {
        let c = lee(TREFOIL);
        let spec = DottedCobordismSpec {
            source: c.diagram().clone(),
            events: alloc::vec![ElementaryEvent::Birth { arc: Some(9) }, ElementaryEvent::Death { arc: 9 }],
        };
        let (f, end) = spec.chain_map(q()).unwrap();
        assert_eq!(end.diagram(), c.diagram());
        assert!(f.is_zero());
        assert_eq!(f.shift(), spec.bigrading());
        assert_eq!(spec.bigrading(), Bigrading::new(0, 2));
    }

    #[test]
    fn events_check_sites() {
        let c = lee(TREFOIL);
        assert!(event_chain_map(&c, &ElementaryEvent::Death { arc: 2 }).is_err());
        assert!(event_chain_map(&c, &ElementaryEvent::Dot { arc: 40, sign: DotSign::Plus }).is_err());
        assert!(event_chain_map(&c, &ElementaryEvent::Birth { arc: Some(3) }).is_err());
    }

    #[test]
    fn neck_cutting_on_unlink() {
        let c = lee("O(1) O(2)");
        let r = verify_neck_cutting(&c, NeckSite::Circle(2), None).unwrap();
        assert_eq!(r.resolved_sign, Some(1));
        assert!(verify_neck_cutting(&c, NeckSite::Circle(1), None).is_err());
        let r = verify_neck_cutting(&c, NeckSite::Saddle(1, 2), None).unwrap();
        assert!(r.holds_up_to_sign);
    }

    #[test]
    fn saddle_on_round_unknot() {
        let c = lee("");
        let col = checkerboard(c.diagram(), default_outer_face(c.diagram())).unwrap();
        let r = verify_neck_cutting(&c, NeckSite::Saddle(1, 1), Some(&col)).unwrap();
        assert!(r.holds_up_to_sign);
    }

    #[test]
    fn merge_then_split_kinds() {
        let c = lee("O(1) O(2)");
        let e = ElementaryEvent::Saddle { p: 1, q: 2 };
        assert_eq!(e.kind(c.diagram()), Ok(EventKind::MergeSaddle));
        let (f, mid) = event_chain_map(&c, &e).unwrap();
        assert_eq!(f.shift(), Bigrading::new(0, -1));
        assert_eq!(mid.diagram().components().len(), 1);
        assert_eq!(ElementaryEvent::Saddle { p: 1, q: 1 }.kind(mid.diagram()), Ok(EventKind::SplitSaddle));
    }

    #[test]
    fn compose_sums_bigradings() {
        let c = lee(TREFOIL);
        let (a, _) = event_chain_map(&c, &ElementaryEvent::Dot { arc: 2, sign: DotSign::Minus }).unwrap();
        let (b, _) = event_chain_map(&c, &ElementaryEvent::Dot { arc: 5, sign: DotSign::Plus }).unwrap();
        let f = compose(&[a.clone(), b]).unwrap();
        assert_eq!(f.shift(), Bigrading::new(0, -4));
        let id = ChainMap::identity(c.shared_complex().clone());
        assert_eq!(compose(&[id, a.clone()]).unwrap(), a);
        assert!(compose(&[]).is_err());
    }
}
