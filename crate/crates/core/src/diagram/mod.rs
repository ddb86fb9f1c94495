//! Oriented planar link diagrams given by PD codes.
//!
//! A crossing `X(a,b,c,d)` lists its four arcs counterclockwise starting at the incoming
//! under-strand, so the under-strand runs `a → c`. The over-strand runs `d → b` at a positive
//! crossing and `b → d` at a negative one. The 0-smoothing joins `(a,b)` and `(c,d)`; the
//! 1-smoothing joins `(a,d)` and `(b,c)`. A free circle with no crossings is written `O(a)`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

mod faces;
mod ops;
mod parse;
pub(crate) mod resolve;

pub use faces::{check_planar, checkerboard, default_outer_face, faces, Dart, Faces, RegionColoring};
pub use ops::{birth, birth_at, connect_sum_pd, death, mirror, saddle, SaddleOutcome};
pub use parse::parse_pd;
pub use resolve::{resolve_state, CircleSet, State};

pub type ArcId = u32;

/// Position of an arc end: `(crossing index, slot 0..4)`.
pub type Slot = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    pub sign: i8,
}

impl Crossing {
    /// Whether the strand at `slot` enters the crossing.
    pub fn is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            3 => self.sign > 0,
            1 => self.sign < 0,
            _ => panic!("slot out of range"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ArcEnds {
    tail: Slot,
    head: Slot,
}

/// An oriented link diagram with a basepoint arc.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    loops: Vec<ArcId>,
    basepoint: ArcId,
    arcs: Vec<ArcId>,
    ends: BTreeMap<ArcId, ArcEnds>,
    components: Vec<Vec<ArcId>>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.loops == other.loops && self.basepoint == other.basepoint
    }
}

impl Eq for LinkDiagram {}

impl LinkDiagram {
    /// Builds a diagram from unoriented PD tuples, solving for orientations.
    pub fn from_pd(tuples: &[[ArcId; 4]], loops: &[ArcId], basepoint: Option<ArcId>) -> Result<Self> {
        check_multiplicity(tuples, loops)?;
        let signs = solve_orientation(tuples)?;
        let crossings = tuples.iter().zip(signs).map(|(arcs, sign)| Crossing { arcs: *arcs, sign }).collect();
        Self::from_oriented(crossings, loops.to_vec(), basepoint)
    }

    /// Builds a diagram from crossings with known signs; the signs must orient every arc
    /// consistently.
    pub fn from_oriented(crossings: Vec<Crossing>, mut loops: Vec<ArcId>, basepoint: Option<ArcId>) -> Result<Self> {
        let tuples: Vec<[ArcId; 4]> = crossings.iter().map(|c| c.arcs).collect();
        check_multiplicity(&tuples, &loops)?;
        loops.sort_unstable();
        let mut tails: BTreeMap<ArcId, Slot> = BTreeMap::new();
        let mut heads: BTreeMap<ArcId, Slot> = BTreeMap::new();
        for (ci, c) in crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Orientation(format!("crossing {} has sign {}", ci, c.sign)));
            }
            for s in 0..4 {
                let slot_map = if c.is_incoming(s) { &mut heads } else { &mut tails };
                if slot_map.insert(c.arcs[s], (ci, s)).is_some() {
                    return Err(Error::Orientation(format!("arc {} has two heads or two tails", c.arcs[s])));
                }
            }
        }
        let ends: BTreeMap<ArcId, ArcEnds> =
            tails.iter().map(|(a, t)| (*a, ArcEnds { tail: *t, head: heads[a] })).collect();
        let mut arcs: Vec<ArcId> = ends.keys().copied().chain(loops.iter().copied()).collect();
        arcs.sort_unstable();
        let basepoint = basepoint.unwrap_or(arcs[0]);
        if arcs.binary_search(&basepoint).is_err() {
            return Err(Error::Basepoint(basepoint));
        }
        let mut d = LinkDiagram { crossings, loops, basepoint, arcs, ends, components: Vec::new() };
        d.components = d.trace_components();
        Ok(d)
    }

    fn trace_components(&self) -> Vec<Vec<ArcId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &a in &self.arcs {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = Vec::new();
            let mut cur = a;
            loop {
                seen.insert(cur);
                comp.push(cur);
                cur = match self.next_arc(cur) {
                    Some(n) => n,
                    None => break,
                };
                if cur == a {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// The arc following `a` along the orientation, `None` for a free circle.
    pub fn next_arc(&self, a: ArcId) -> Option<ArcId> {
        let (c, s) = self.ends.get(&a)?.head;
        Some(self.crossings[c].arcs[(s + 2) % 4])
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Free circles (arcs with no crossings).
    pub fn loops(&self) -> &[ArcId] {
        &self.loops
    }

    pub fn is_loop(&self, a: ArcId) -> bool {
        self.loops.binary_search(&a).is_ok()
    }

    /// All arc labels, ascending.
    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn arc_index(&self, a: ArcId) -> Option<usize> {
        self.arcs.binary_search(&a).ok()
    }

    pub fn max_arc(&self) -> ArcId {
        *self.arcs.last().expect("a diagram has at least one arc")
    }

    pub fn basepoint(&self) -> ArcId {
        self.basepoint
    }

    pub fn with_basepoint(&self, arc: ArcId) -> Result<Self> {
        if self.arc_index(arc).is_none() {
            return Err(Error::Basepoint(arc));
        }
        Ok(LinkDiagram { basepoint: arc, ..self.clone() })
    }

    /// Link components, each as its arcs in orientation order.
    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    pub fn component_of(&self, a: ArcId) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&a))
    }

    /// Start and end of an arc, as `(tail, head)` slots. `None` for free circles.
    pub fn arc_ends(&self, a: ArcId) -> Option<(Slot, Slot)> {
        self.ends.get(&a).map(|e| (e.tail, e.head))
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus() as i64 - self.n_minus() as i64
    }

    /// PD text that parses back to this diagram.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect();
        parts.extend(self.loops.iter().map(|a| format!("O[{}]", a)));
        parts.push(format!("bp={}", self.basepoint));
        parts.join(" ")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

fn check_multiplicity(tuples: &[[ArcId; 4]], loops: &[ArcId]) -> Result<()> {
    let mut count: BTreeMap<ArcId, usize> = BTreeMap::new();
    for t in tuples {
        for a in t {
            *count.entry(*a).or_insert(0) += 1;
        }
    }
    for (a, k) in &count {
        if *a == 0 {
            return Err(Error::MalformedPd("arc labels must be positive".into()));
        }
        if *k != 2 {
            return Err(Error::ArcMultiplicity { arc: *a, count: *k });
        }
    }
    let mut seen = BTreeSet::new();
    for a in loops {
        if *a == 0 {
            return Err(Error::MalformedPd("arc labels must be positive".into()));
        }
        if count.contains_key(a) || !seen.insert(*a) {
            let k = count.get(a).copied().unwrap_or(0) + 2;
            return Err(Error::ArcMultiplicity { arc: *a, count: k });
        }
    }
    if tuples.is_empty() && loops.is_empty() {
        return Err(Error::MalformedPd("empty diagram".into()));
    }
    Ok(())
}

/// Crossing signs from slot-level in/out propagation: slot 0 enters, slot 2 leaves, the two
/// over-strand slots are opposite, and the two ends of an arc are opposite.
fn solve_orientation(tuples: &[[ArcId; 4]]) -> Result<Vec<i8>> {
    let mut occ: BTreeMap<ArcId, Vec<Slot>> = BTreeMap::new();
    for (ci, t) in tuples.iter().enumerate() {
        for (s, a) in t.iter().enumerate() {
            occ.entry(*a).or_default().push((ci, s));
        }
    }
    let mut dir: Vec<[Option<bool>; 4]> = alloc::vec![[None; 4]; tuples.len()];
    let mut queue: VecDeque<(Slot, bool)> = VecDeque::new();

    fn set(dir: &mut [[Option<bool>; 4]], queue: &mut VecDeque<(Slot, bool)>, at: Slot, incoming: bool) -> Result<()> {
        match dir[at.0][at.1] {
            Some(v) if v != incoming => Err(Error::Orientation(format!(
                "conflicting directions at crossing {} slot {}",
                at.0, at.1
            ))),
            Some(_) => Ok(()),
            None => {
                dir[at.0][at.1] = Some(incoming);
                queue.push_back((at, incoming));
                Ok(())
            }
        }
    }

    let drain = |dir: &mut Vec<[Option<bool>; 4]>, queue: &mut VecDeque<(Slot, bool)>| -> Result<()> {
        while let Some(((c, s), incoming)) = queue.pop_front() {
            set(dir, queue, (c, (s + 2) % 4), !incoming)?;
            let a = tuples[c][s];
            for &other in &occ[&a] {
                if other != (c, s) {
                    set(dir, queue, other, !incoming)?;
                }
            }
        }
        Ok(())
    };

    for c in 0..tuples.len() {
        set(&mut dir, &mut queue, (c, 0), true)?;
    }
    drain(&mut dir, &mut queue)?;
    // Components that only pass over: guess from consecutive labels, then propagate.
    while let Some(c) = (0..tuples.len()).find(|c| dir[*c][1].is_none()) {
        let [_, b, _, d] = tuples[c];
        let enter_at_b = d == b.wrapping_add(1);
        set(&mut dir, &mut queue, (c, if enter_at_b { 1 } else { 3 }), true)?;
        drain(&mut dir, &mut queue)?;
    }
    Ok(dir.iter().map(|d| if d[3] == Some(true) { 1 } else { -1 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn trefoil_is_negative_knot() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arcs().len(), 6);
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.n_minus(), 3);
        assert_eq!(d.components()[0], alloc::vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn figure_eight_has_zero_writhe() {
        let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.components().len(), 1);
    }

    #[test]
    fn kinks() {
        let d = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(d.components().len(), 1);
        let d = parse_pd("X(1,2,2,3) X(3,4,4,1)").unwrap();
        assert_eq!(d.components().len(), 1);
    }

    #[test]
    fn rejects_bad_multiplicity() {
        let err = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]").unwrap_err();
        assert!(matches!(err, Error::ArcMultiplicity { .. }));
    }

    #[test]
    fn rejects_inconsistent_orientation() {
        // arc 1 enters at slot 0 twice
        let err = parse_pd("X[1,2,3,4] X[1,4,3,2]").unwrap_err();
        assert!(matches!(err, Error::Orientation(_)));
    }

    #[test]
    fn hopf_link_over_component_is_oriented() {
        let d = parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap();
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.writhe().abs(), 2);
    }

    #[test]
    fn pd_string_round_trips() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(9) bp=4").unwrap();
        assert_eq!(parse_pd(&d.to_pd_string()).unwrap(), d);
    }
}
