//! Brute-force cross-checks that share nothing with the main pipeline beyond diagram parsing.
//!
//! The cube here is the plain Khovanov cube over `F` with `V = F[X]/(X² = t)` on every circle,
//! for `t = 0` (Khovanov homology) or `t = 1` (Lee homology). Ranks come from a separate
//! sparse elimination.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::LinkDiagram;
use crate::field::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Largest diagram the cube oracles accept.
pub const ORACLE_LIMIT: usize = 10;

/// Largest diagram [`jones_euler`] accepts.
pub const JONES_LIMIT: usize = 20;

/// A Laurent polynomial in `q`: exponent to coefficient, zero coefficients omitted.
pub type LaurentPoly = BTreeMap<i32, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `T = 0`: bigraded, keys are `(i, j)`.
    T0,
    /// `T = 1`: only `j mod 4` survives, keys are `(i, j mod 4)`.
    T1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedHomology {
    pub specialization: Specialization,
    pub dims: BTreeMap<(i32, i32), usize>,
}

impl SpecializedHomology {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// `Σ (-1)^i q^j dim` (only meaningful at `T = 0`).
    pub fn euler(&self) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for (&(i, j), &n) in &self.dims {
            *out.entry(j).or_default() += if i % 2 == 0 { n as i64 } else { -(n as i64) };
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

pub fn khovanov_t0(d: &LinkDiagram, field: FieldSpec) -> Result<SpecializedHomology> {
    specialized(d, field, Specialization::T0)
}

/// Total dimension of Lee homology (`T = 1`).
pub fn lee_rank_t1(d: &LinkDiagram, field: FieldSpec) -> Result<usize> {
    Ok(specialized(d, field, Specialization::T1)?.total())
}

/// Kauffman-bracket state sum `Σ_s (-1)^(|s|-n₋) q^(|s|+n₊-2n₋) (q + q⁻¹)^circles(s)`.
pub fn jones_euler(d: &LinkDiagram) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > JONES_LIMIT {
        return Err(Error::ResourceLimit { size: n, cap: JONES_LIMIT });
    }
    let cube = Cube::new(d);
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let mut out = LaurentPoly::new();
    for s in 0..1u64 << n {
        let w = s.count_ones() as i32;
        let sign = if (w - nm) % 2 == 0 { 1 } else { -1 };
        let c = cube.resolve(s).1;
        // (q + 1/q)^c = Σ_k C(c, k) q^(c - 2k)
        let mut binom = 1i64;
        for k in 0..=c {
            *out.entry(w + np - 2 * nm + c as i32 - 2 * k as i32).or_default() += sign * binom;
            binom = binom * (c - k) as i64 / (k + 1) as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

struct Cube {
    arcs: BTreeMap<u32, usize>,
    tuples: Vec<[usize; 4]>,
}

impl Cube {
    fn new(d: &LinkDiagram) -> Self {
        let mut arcs = BTreeMap::new();
        for c in d.crossings() {
            for a in c.arcs {
                let k = arcs.len();
                arcs.entry(a).or_insert(k);
            }
        }
        for &a in d.loops() {
            let k = arcs.len();
            arcs.entry(a).or_insert(k);
        }
        let tuples = d.crossings().iter().map(|c| c.arcs.map(|a| arcs[&a])).collect();
        Cube { arcs, tuples }
    }

    /// Circle index of every arc, and the circle count.
    fn resolve(&self, s: u64) -> (Vec<usize>, usize) {
        let mut parent: Vec<usize> = (0..self.arcs.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let mut join = |x: usize, y: usize| {
            let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
            parent[rx] = ry;
        };
        for (k, &[a, b, c, dd]) in self.tuples.iter().enumerate() {
            if s >> k & 1 == 1 {
                join(a, dd);
                join(b, c);
            } else {
                join(a, b);
                join(c, dd);
            }
        }
        let mut label = vec![usize::MAX; self.arcs.len()];
        let mut of = vec![0; self.arcs.len()];
        let mut count = 0;
        for x in 0..self.arcs.len() {
            let r = root(&mut parent, x);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            of[x] = label[r];
        }
        (of, count)
    }
}

fn specialized(d: &LinkDiagram, field: FieldSpec, spec: Specialization) -> Result<SpecializedHomology> {
    field.validate()?;
    let n = d.crossing_count();
    if n > ORACLE_LIMIT {
        return Err(Error::ResourceLimit { size: n, cap: ORACLE_LIMIT });
    }
    let t = match spec {
        Specialization::T0 => 0,
        Specialization::T1 => 1,
    };
    let cube = Cube::new(d);
    let states: Vec<(Vec<usize>, usize)> = (0..1u64 << n).map(|s| cube.resolve(s)).collect();
    let mut offsets = vec![0usize];
    for (_, c) in &states {
        offsets.push(offsets.last().unwrap() + (1usize << c));
    }
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let key = |s: u64, labels: usize, c: usize| {
        let w = s.count_ones() as i32;
        let xs = labels.count_ones() as i32;
        let j = c as i32 - 2 * xs + w + np - 2 * nm;
        (w - nm, if t == 0 { j } else { j.rem_euclid(4) })
    };

    // Generators grouped by key, with their position inside the group.
    let total = *offsets.last().unwrap();
    let mut keys = Vec::with_capacity(total);
    let mut position = Vec::with_capacity(total);
    let mut sizes: BTreeMap<(i32, i32), usize> = BTreeMap::new();
    for (s, (_, c)) in states.iter().enumerate() {
        for labels in 0..1usize << c {
            let k = key(s as u64, labels, *c);
            let slot = sizes.entry(k).or_default();
            keys.push(k);
            position.push(*slot);
            *slot += 1;
        }
    }

    let one = field.one();
    let minus = field.from_i64(-1);
    let mut blocks: BTreeMap<(i32, i32), Vec<Vec<(usize, FieldElement)>>> = BTreeMap::new();
    for s in 0..1u64 << n {
        let (of_s, cs) = &states[s as usize];
        for k in 0..n {
            if s >> k & 1 == 1 {
                continue;
            }
            let tt = s | 1 << k;
            let (of_t, _) = &states[tt as usize];
            let sign = if (s & ((1 << k) - 1)).count_ones() % 2 == 0 { &one } else { &minus };
            let [a, _, c, _] = cube.tuples[k];
            let (x, y) = (of_s[a], of_s[c]);
            let mut image = vec![usize::MAX; *cs];
            for arc in 0..of_s.len() {
                image[of_s[arc]] = of_t[arc];
            }
            for labels in 0..1usize << cs {
                let g = offsets[s as usize] + labels;
                let mut rest = 0usize;
                for circ in 0..*cs {
                    if circ != x && circ != y && labels >> circ & 1 == 1 {
                        rest |= 1 << image[circ];
                    }
                }
                let mut terms: Vec<usize> = Vec::new();
                let (lx, ly) = (labels >> x & 1 == 1, labels >> y & 1 == 1);
                if x != y {
                    let z = image[x];
                    match (lx, ly) {
                        (false, false) => terms.push(rest),
                        (true, true) => {
                            if t == 1 {
                                terms.push(rest);
                            }
                        }
                        _ => terms.push(rest | 1 << z),
                    }
                } else {
                    let (p, q) = (of_t[a], of_t[cube.tuples[k][1]]);
                    if lx {
                        terms.push(rest | 1 << p | 1 << q);
                        if t == 1 {
                            terms.push(rest);
                        }
                    } else {
                        terms.push(rest | 1 << p);
                        terms.push(rest | 1 << q);
                    }
                }
                let row = blocks.entry(keys[g]).or_insert_with(|| vec![Vec::new(); sizes[&keys[g]]]);
                for lab in terms {
                    let h = offsets[tt as usize] + lab;
                    row[position[g]].push((position[h], sign.clone()));
                }
            }
        }
    }

    let mut ranks: BTreeMap<(i32, i32), usize> = BTreeMap::new();
    for (k, rows) in blocks {
        ranks.insert(k, rank(rows));
    }
    let mut dims = BTreeMap::new();
    for (&(i, j), &size) in &sizes {
        let out = ranks.get(&(i, j)).copied().unwrap_or(0);
        let inc = ranks.get(&(i - 1, j)).copied().unwrap_or(0);
        let dim = size - out - inc;
        if dim > 0 {
            dims.insert((i, j), dim);
        }
    }
    Ok(SpecializedHomology { specialization: spec, dims })
}

/// Rank of a sparse matrix given by rows of `(column, value)`; repeated columns add up.
fn rank(rows: Vec<Vec<(usize, FieldElement)>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, FieldElement>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, FieldElement> = BTreeMap::new();
        for (c, v) in row {
            let sum = match r.get(&c) {
                Some(old) => old + &v,
                None => v,
            };
            if sum.is_zero() {
                r.remove(&c);
            } else {
                r.insert(c, sum);
            }
        }
        while let Some((&lead, lv)) = r.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = lv.inv().expect("nonzero");
                let r = r.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
                pivots.insert(lead, r);
                break;
            };
            let factor = lv.clone();
            for (c, pv) in p {
                let sub = &factor * pv;
                let new = match r.get(c) {
                    Some(old) => old - &sub,
                    None => -sub,
                };
                if new.is_zero() {
                    r.remove(c);
                } else {
                    r.insert(*c, new);
                }
            }
        }
    }
    pivots.len()
}
