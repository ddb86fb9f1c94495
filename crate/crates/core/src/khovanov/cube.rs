use alloc::sync::Arc;
use alloc::vec::Vec;

use super::frobenius::{merge, split};
use crate::algebra::{Bigrading, GradedFreeComplex, Monomial, SparseVec};
use crate::diagram::resolve::resolve_mask;
use crate::diagram::{CircleSet, LinkDiagram};
use crate::field::FieldSpec;
use crate::{Error, Result};

/// Diagrams up to this size get the full `d∘d = 0` check at construction.
const VERIFY_CROSSINGS: usize = 10;

/// The Lee complex of a diagram over `F[X]` built on the full cube of resolutions, with the
/// state and labeling behind every generator.
///
/// Generators are ordered by state mask, then by labeling. A labeling is a bitmask over the
/// circles of the state (bit set = `X`); the basepoint circle is always labeled `1`.
#[derive(Clone, Debug)]
pub struct LeeComplex {
    diagram: LinkDiagram,
    complex: Arc<GradedFreeComplex>,
    circles: Vec<CircleSet>,
    offsets: Vec<usize>,
}

impl LeeComplex {
    pub fn build(d: &LinkDiagram, field: FieldSpec) -> Result<Self> {
        field.validate()?;
        let n = d.crossing_count();
        if n >= 63 {
            return Err(Error::ResourceLimit { size: n, cap: 62 });
        }
        let states = 1usize << n;
        let circles: Vec<CircleSet> = (0..states as u64).map(|m| resolve_mask(d, |k| m >> k & 1 == 1)).collect();
        let mut offsets = Vec::with_capacity(states + 1);
        let mut total = 0usize;
        for c in &circles {
            offsets.push(total);
            total += 1 << (c.len() - 1);
        }
        offsets.push(total);

        let (n_plus, n_minus) = (d.n_plus() as i32, d.n_minus() as i32);
        let mut gradings = Vec::with_capacity(total);
        for (s, c) in circles.iter().enumerate() {
            let weight = (s as u64).count_ones() as i32;
            for r in 0..(1u64 << (c.len() - 1)) {
                let xs = r.count_ones() as i32;
                let ones = c.len() as i32 - xs;
                gradings.push(Bigrading::new(weight - n_minus, ones - xs + weight + n_plus - 2 * n_minus));
            }
        }

        let mut lee = LeeComplex {
            diagram: d.clone(),
            complex: Arc::new(GradedFreeComplex::with_zero_differential(field, Vec::new())),
            circles,
            offsets,
        };
        let one = field.one();
        let minus_one = field.from_i64(-1);
        let mut entries: Vec<(usize, usize, Monomial)> = Vec::new();
        for s in 0..states as u64 {
            for k in 0..n {
                if s >> k & 1 == 1 {
                    continue;
                }
                let t = s | 1 << k;
                let sign = if (s & ((1 << k) - 1)).count_ones() % 2 == 0 { &one } else { &minus_one };
                for (g, h, power) in lee.edge_terms(s, t, k) {
                    entries.push((g, h, Monomial::new(sign.clone(), power)));
                }
            }
        }
        lee.complex = Arc::new(if n <= VERIFY_CROSSINGS {
            GradedFreeComplex::new(field, gradings, entries)?
        } else {
            let mut rows: Vec<SparseVec> = (0..total).map(|_| SparseVec::new()).collect();
            for (g, h, m) in entries {
                crate::algebra::complex::check_homogeneous(gradings[g], gradings[h], m.power)?;
                rows[g].insert(h, m);
            }
            GradedFreeComplex::from_rows(field, gradings, rows)
        });
        Ok(lee)
    }

    /// `(source, target, X-power)` of the edge map from state `s` to `t = s + e_k`.
    fn edge_terms(&self, s: u64, t: u64, k: usize) -> Vec<(usize, usize, u32)> {
        let d = &self.diagram;
        let idx = |slot: usize| d.arc_index(d.crossings()[k].arcs[slot]).expect("crossing arcs are indexed");
        let (cs, ct) = (&self.circles[s as usize], &self.circles[t as usize]);
        let (a, b) = (cs.circle_of_index(idx(0)), cs.circle_of_index(idx(2)));
        let (a2, b2) = (ct.circle_of_index(idx(0)), ct.circle_of_index(idx(1)));
        let carry = self.carry_map(cs, ct, &[a, b]);
        let mut out = Vec::new();
        for r in 0..(1u64 << (cs.len() - 1)) {
            let g = self.offsets[s as usize] + r as usize;
            let labels = expand(r, cs.basepoint_circle());
            let base = carry_labels(labels, &carry);
            if a != b {
                let (m, tp) = merge(labels >> a & 1 == 1, labels >> b & 1 == 1);
                let lab = base | (m as u64) << a2;
                let (h, p) = self.locate(t, lab);
                out.push((g, h, p + 2 * tp));
            } else {
                for (x, y, tp) in split(labels >> a & 1 == 1) {
                    let lab = base | (x as u64) << a2 | (y as u64) << b2;
                    let (h, p) = self.locate(t, lab);
                    out.push((g, h, p + 2 * tp));
                }
            }
        }
        out
    }

    /// For each circle of `from` not in `skip`, the circle of `to` through the same arcs.
    pub(crate) fn carry_map(&self, from: &CircleSet, to: &CircleSet, skip: &[usize]) -> Vec<Option<usize>> {
        carry_map(self.diagram.arcs().len(), from, to, skip)
    }

    /// Generator of `state` with the given labeling, after moving an `X` on the basepoint
    /// circle into the coefficient: `(index, X-power)`.
    pub fn locate(&self, state: u64, labels: u64) -> (usize, u32) {
        let c = &self.circles[state as usize];
        let bp = c.basepoint_circle();
        let power = (labels >> bp & 1) as u32;
        let r = compress(labels & !(1 << bp), bp);
        (self.offsets[state as usize] + r as usize, power)
    }

    pub fn complex(&self) -> &GradedFreeComplex {
        &self.complex
    }

    pub fn shared_complex(&self) -> &Arc<GradedFreeComplex> {
        &self.complex
    }

    pub fn into_complex(self) -> GradedFreeComplex {
        Arc::try_unwrap(self.complex).unwrap_or_else(|c| (*c).clone())
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn state_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circles(&self, state: u64) -> &CircleSet {
        &self.circles[state as usize]
    }

    /// `(state mask, labeling)` of generator `k`.
    pub fn generator(&self, k: usize) -> (u64, u64) {
        let s = self.offsets.partition_point(|o| *o <= k) - 1;
        let r = (k - self.offsets[s]) as u64;
        (s as u64, expand(r, self.circles[s].basepoint_circle()))
    }

    /// Generators of one state, as a contiguous index range.
    pub fn state_range(&self, state: u64) -> core::ops::Range<usize> {
        self.offsets[state as usize]..self.offsets[state as usize + 1]
    }
}

pub(crate) fn carry_map(arcs: usize, from: &CircleSet, to: &CircleSet, skip: &[usize]) -> Vec<Option<usize>> {
    let mut out = alloc::vec![None; from.len()];
    for k in 0..arcs {
        let c = from.circle_of_index(k);
        if out[c].is_none() && !skip.contains(&c) {
            out[c] = Some(to.circle_of_index(k));
        }
    }
    out
}

pub(crate) fn carry_labels(labels: u64, carry: &[Option<usize>]) -> u64 {
    let mut out = 0;
    for (c, t) in carry.iter().enumerate() {
        if let Some(t) = t {
            out |= (labels >> c & 1) << t;
        }
    }
    out
}

/// Inserts a zero bit at position `bp`.
fn expand(r: u64, bp: usize) -> u64 {
    let low = r & ((1 << bp) - 1);
    let high = r >> bp;
    low | high << (bp + 1)
}

/// Removes bit `bp` (assumed zero).
fn compress(labels: u64, bp: usize) -> u64 {
    let low = labels & ((1 << bp) - 1);
    let high = labels >> (bp + 1);
    low | high << bp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn unknot_is_one_generator() {
        let lee = LeeComplex::build(&parse_pd("").unwrap(), FieldSpec::Rational).unwrap();
        assert_eq!(lee.complex().gradings(), &[Bigrading::new(0, 1)]);
        assert_eq!(lee.complex().nnz(), 0);
    }

    #[test]
    fn generator_round_trip() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let lee = LeeComplex::build(&d, FieldSpec::Rational).unwrap();
        for k in 0..lee.complex().len() {
            let (s, labels) = lee.generator(k);
            assert_eq!(lee.locate(s, labels), (k, 0));
        }
        let count: usize = (0..8).map(|s| 1usize << (lee.circles(s).len() - 1)).sum();
        assert_eq!(lee.complex().len(), count);
        assert_eq!(lee.complex().degrees().len(), 4);
    }

    #[test]
    fn expand_compress() {
        for bp in 0..5 {
            for r in 0..16u64 {
                assert_eq!(compress(expand(r, bp), bp), r);
                assert_eq!(expand(r, bp) >> bp & 1, 0);
            }
        }
    }
}
