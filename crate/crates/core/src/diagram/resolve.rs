use alloc::vec::Vec;

use super::{ArcId, LinkDiagram};
use crate::{Error, Result};

/// A choice of smoothing at every crossing, in crossing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(pub Vec<bool>);

impl State {
    /// State whose crossing `k` is 1-smoothed iff bit `k` of `mask` is set.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        State((0..len).map(|k| mask >> k & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().enumerate().fold(0, |m, (k, b)| m | (*b as u64) << k)
    }

    /// Number of 1-smoothings.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }
}

/// The circles of a resolution. Each arc lies on exactly one circle; circles are numbered
/// by their smallest arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSet {
    arcs: Vec<ArcId>,
    circle_of: Vec<usize>,
    count: usize,
    basepoint_circle: usize,
}

impl CircleSet {
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn basepoint_circle(&self) -> usize {
        self.basepoint_circle
    }

    pub fn circle_of(&self, a: ArcId) -> Option<usize> {
        self.arcs.binary_search(&a).ok().map(|k| self.circle_of[k])
    }

    /// Circle of the arc with index `k` in [`LinkDiagram::arcs`].
    pub fn circle_of_index(&self, k: usize) -> usize {
        self.circle_of[k]
    }

    pub fn circles(&self) -> Vec<Vec<ArcId>> {
        let mut out = alloc::vec![Vec::new(); self.count];
        for (a, c) in self.arcs.iter().zip(&self.circle_of) {
            out[*c].push(*a);
        }
        out
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn resolve_state(d: &LinkDiagram, s: &State) -> Result<CircleSet> {
    if s.0.len() != d.crossing_count() {
        return Err(Error::StateMismatch { expected: d.crossing_count(), got: s.0.len() });
    }
    Ok(resolve_mask(d, |k| s.0[k]))
}

/// Resolution where crossing `k` takes its 1-smoothing iff `one(k)`.
pub(crate) fn resolve_mask(d: &LinkDiagram, one: impl Fn(usize) -> bool) -> CircleSet {
    let arcs = d.arcs();
    let idx = |a: ArcId| d.arc_index(a).expect("crossing arcs are indexed");
    let mut uf = UnionFind::new(arcs.len());
    for (k, c) in d.crossings().iter().enumerate() {
        let [a, b, cc, dd] = c.arcs.map(idx);
        if one(k) {
            uf.union(a, dd);
            uf.union(b, cc);
        } else {
            uf.union(a, b);
            uf.union(cc, dd);
        }
    }
    let mut number = alloc::vec![usize::MAX; arcs.len()];
    let mut circle_of = Vec::with_capacity(arcs.len());
    let mut count = 0;
    for k in 0..arcs.len() {
        let r = uf.find(k);
        if number[r] == usize::MAX {
            number[r] = count;
            count += 1;
        }
        circle_of.push(number[r]);
    }
    let basepoint_circle = circle_of[idx(d.basepoint())];
    CircleSet { arcs: arcs.to_vec(), circle_of, count, basepoint_circle }
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    #[test]
    fn unknot_has_one_circle() {
        let d = parse_pd("").unwrap();
        let c = resolve_state(&d, &State(Vec::new())).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.basepoint_circle(), 0);
    }

    #[test]
    fn trefoil_extreme_states() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let zero = resolve_state(&d, &State::from_mask(0, 3)).unwrap();
        let one = resolve_state(&d, &State::from_mask(7, 3)).unwrap();
        // negative crossings: the 1-smoothing is the oriented one
        assert_eq!((zero.len(), one.len()), (3, 2));
    }

    #[test]
    fn kink_states() {
        let d = parse_pd("X(1,1,2,2)").unwrap();
        let mut counts: Vec<usize> =
            (0..2).map(|m| resolve_state(&d, &State::from_mask(m, 1)).unwrap().len()).collect();
        counts.sort();
        assert_eq!(counts, [1, 2]);
    }

    #[test]
    fn state_length_is_checked() {
        let d = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(
            resolve_state(&d, &State(Vec::new())).unwrap_err(),
            Error::StateMismatch { expected: 1, got: 0 }
        );
    }
}
