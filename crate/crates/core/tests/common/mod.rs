#![allow(dead_code)]

use leekh_core::algebra::{Bigrading, GradedFreeComplex, ModuleDecomposition, Monomial, Torsion};
use leekh_core::diagram::{mirror, parse_pd, LinkDiagram};
use leekh_core::{FieldElement, FieldSpec};

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const K5_1: &str = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
pub const K5_2: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
pub const K6_1: &str = "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]";
pub const K8_19: &str =
    "X[2,5,4,1] X[3,7,6,5] X[6,9,8,4] X[7,11,10,9] X[10,13,12,8] X[11,15,14,13] X[14,17,1,12] X[15,3,2,17]";
pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";

pub fn pd(text: &str) -> LinkDiagram {
    parse_pd(text).unwrap()
}

/// Knot fixtures, `(name, diagram)`.
pub fn knots() -> Vec<(&'static str, LinkDiagram)> {
    vec![
        ("unknot", pd("")),
        ("kink+", pd("X[1,1,2,2]")),
        ("kink-", pd("X[1,2,2,1]")),
        ("two kinks", pd("X[1,1,2,3] X[2,4,4,3]")),
        ("3_1 left", pd(TREFOIL)),
        ("3_1 right", mirror(&pd(TREFOIL))),
        ("4_1", pd(FIGURE_EIGHT)),
        ("5_1", pd(K5_1)),
        ("5_2", pd(K5_2)),
        ("6_1", pd(K6_1)),
        ("8_19", pd(K8_19)),
    ]
}

/// Links with more than one component.
pub fn links() -> Vec<(&'static str, LinkDiagram)> {
    vec![
        ("unlink", pd("O(1) O(2)")),
        ("hopf", pd(HOPF)),
        ("3_1 + circle", pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(7)")),
        ("circle + 3_1", pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(7) bp=7")),
    ]
}

pub fn fixtures() -> Vec<(&'static str, LinkDiagram)> {
    let mut v = knots();
    v.extend(links());
    v
}

/// Closure of a braid word: `k` is `σ_k` and `-k` its inverse, strands numbered from 1.
pub fn braid_closure(strands: usize, word: &[i32]) -> LinkDiagram {
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut tuples = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (l, r) = (cur[i], cur[i + 1]);
        let (x, y) = (next, next + 1);
        next += 2;
        tuples.push(if g > 0 { [r, y, x, l] } else { [l, r, y, x] });
        cur[i] = x;
        cur[i + 1] = y;
    }
    let close = |a: u32| match cur.iter().position(|&c| c == a) {
        Some(k) => k as u32 + 1,
        None => a,
    };
    let tuples: Vec<[u32; 4]> = tuples.into_iter().map(|t| t.map(close)).collect();
    LinkDiagram::from_pd(&tuples, &[], None).unwrap()
}

/// The minimal complex of a module: a bare generator per tower, `p --X^n--> q` per torsion
/// summand generated by `q`.
pub fn minimal_complex(m: &ModuleDecomposition) -> GradedFreeComplex {
    let mut gradings = Vec::new();
    let mut entries = Vec::new();
    for t in &m.towers {
        gradings.push(*t);
    }
    for t in &m.torsion {
        let q = gradings.len();
        gradings.push(Bigrading::new(t.i, t.j));
        gradings.push(Bigrading::new(t.i - 1, t.j - 2 * t.n as i32));
        entries.push((q + 1, q, Monomial::new(m.field.one(), t.n)));
    }
    GradedFreeComplex::new(m.field, gradings, entries).unwrap()
}

pub fn module(field: FieldSpec, towers: &[(i32, i32)], torsion: &[(i32, i32, u32)]) -> ModuleDecomposition {
    ModuleDecomposition::new(
        field,
        towers.iter().map(|&(i, j)| Bigrading::new(i, j)).collect(),
        torsion.iter().map(|&(i, j, n)| Torsion { i, j, n }).collect(),
    )
}

/// Rank of a dense matrix over the field.
pub fn dense_rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] * &inv;
                for k in c..cols {
                    let sub = &f * &rows[rank][k];
                    rows[r][k] = &rows[r][k] - &sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim_F H(C ⊗ F[X]/X^k)`, by expanding every generator into `k` basis vectors.
pub fn truncated_homology_dim(c: &GradedFreeComplex, k: u32) -> usize {
    let n = c.len();
    let field = c.field();
    let k = k as usize;
    let mut m = vec![vec![field.zero(); n * k]; n * k];
    for (g, h, mono) in c.entries() {
        for a in 0..k {
            let b = a + mono.power as usize;
            if b < k {
                m[g * k + a][h * k + b] = &m[g * k + a][h * k + b] + &mono.coeff;
            }
        }
    }
    n * k - 2 * dense_rank(m)
}
