//! Sparse reduction of graded free complexes.
//!
//! Both stages pivot on a single entry `c·X^n` from `g` to `h` and apply the same update,
//! `d(g') -= (a/c)·X^(m-n)·d(g)` for every other `g'` with entry `a·X^m` into `h`, then drop
//! `g` and `h`. With `n = 0` this is Gaussian elimination (a homotopy equivalence). With
//! `n > 0` the pivot must have minimal power in its matrix; the update is then a graded change
//! of basis that splits off the summand `F[X]⟨g⟩ --X^n--> F[X]⟨h⟩`, i.e. torsion `F[X]/X^n`
//! generated in the bigrading of `h`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{add_entry, axpy, Bigrading, EntryChange, GradedFreeComplex, ModuleDecomposition, Monomial, SparseVec, Torsion};
use crate::field::FieldSpec;

/// Tie-breaking among admissible pivots. The decomposition never depends on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotOrder {
    /// Lexicographically smallest `(row, column)` = `(target, source)`.
    #[default]
    Lexicographic,
    /// Lexicographically largest.
    Reverse,
}

struct Pivot {
    target: usize,
    power: u32,
}

struct Reducer {
    field: FieldSpec,
    gradings: Vec<Bigrading>,
    out: Vec<SparseVec>,
    inc: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
    order: PivotOrder,
    /// Current basis vectors in original coordinates.
    basis: Option<Vec<SparseVec>>,
    /// Current coordinate functionals on original coordinates.
    coords: Option<Vec<SparseVec>>,
    torsion: Vec<(Pivot, Option<SparseVec>, Option<SparseVec>)>,
}

impl Reducer {
    fn new(c: &GradedFreeComplex, order: PivotOrder, track_basis: bool, track_coords: bool) -> Self {
        let n = c.len();
        let mut out: Vec<SparseVec> = (0..n).map(|_| BTreeMap::new()).collect();
        let mut inc: Vec<BTreeSet<usize>> = (0..n).map(|_| BTreeSet::new()).collect();
        for (g, h, m) in c.entries() {
            out[g].insert(h, m.clone());
            inc[h].insert(g);
        }
        let unit = |k: usize| {
            let mut v = BTreeMap::new();
            v.insert(k, Monomial::new(c.field().one(), 0));
            v
        };
        Reducer {
            field: c.field(),
            gradings: c.gradings().to_vec(),
            out,
            inc,
            alive: alloc::vec![true; n],
            order,
            basis: track_basis.then(|| (0..n).map(unit).collect()),
            coords: track_coords.then(|| (0..n).map(unit).collect()),
            torsion: Vec::new(),
        }
    }

    fn pivot(&mut self, g: usize, h: usize) {
        let piv = self.out[g][&h].clone();
        let cinv = piv.coeff.inv().expect("pivot entries are nonzero");
        let n = piv.power;
        let g_out: Vec<(usize, Monomial)> =
            self.out[g].iter().filter(|(t, _)| **t != h).map(|(t, m)| (*t, m.clone())).collect();
        let h_in: Vec<usize> = self.inc[h].iter().copied().filter(|s| *s != g).collect();

        for &g2 in &h_in {
            let a = self.out[g2].remove(&h).expect("incidence out of sync");
            // g2 ← g2 - λ g with λ = (a/c) X^(m-n)
            let lambda = Monomial { coeff: -&(&a.coeff * &cinv), power: a.power - n };
            for (h2, b) in &g_out {
                match add_entry(&mut self.out[g2], *h2, lambda.mul(b)) {
                    EntryChange::Inserted => {
                        self.inc[*h2].insert(g2);
                    }
                    EntryChange::Removed => {
                        self.inc[*h2].remove(&g2);
                    }
                    EntryChange::Unchanged => {}
                }
            }
            if let Some(basis) = self.basis.as_mut() {
                let src = basis[g].clone();
                axpy(&mut basis[g2], &lambda, &src);
            }
        }
        self.inc[h].retain(|s| *s == g);

        // h ← h + Σ μ h2 with μ = (b/c) X^(k-n); coordinates of h2 change by -μ x_h.
        let mus: Vec<(usize, Monomial)> = g_out
            .iter()
            .map(|(h2, b)| (*h2, Monomial { coeff: &b.coeff * &cinv, power: b.power - n }))
            .collect();
        if let Some(coords) = self.coords.as_mut() {
            let src = coords[h].clone();
            for (h2, mu) in &mus {
                axpy(&mut coords[*h2], &mu.neg(), &src);
            }
        }
        if n > 0 {
            let cycle = self.basis.as_mut().map(|basis| {
                let mut v = basis[h].clone();
                for (h2, mu) in &mus {
                    axpy(&mut v, mu, &basis[*h2]);
                }
                v
            });
            let coord = self.coords.as_ref().map(|c| c[h].clone());
            self.torsion.push((Pivot { target: h, power: n }, cycle, coord));
        }
        self.remove(g);
        self.remove(h);
    }

    fn remove(&mut self, k: usize) {
        let out = core::mem::take(&mut self.out[k]);
        for t in out.keys() {
            self.inc[*t].remove(&k);
        }
        let inc = core::mem::take(&mut self.inc[k]);
        for s in inc {
            self.out[s].remove(&k);
        }
        self.alive[k] = false;
    }

    fn unit_target(&self, g: usize) -> Option<usize> {
        let candidates = self.out[g].iter().filter(|(_, m)| m.is_unit()).map(|(h, _)| *h);
        // Prefer the sparsest column; ties by index.
        match self.order {
            PivotOrder::Lexicographic => candidates.min_by_key(|h| (self.inc[*h].len(), *h)),
            PivotOrder::Reverse => candidates.min_by_key(|h| (self.inc[*h].len(), usize::MAX - *h)),
        }
    }

    fn eliminate_units(&mut self) {
        let n = self.out.len();
        loop {
            let mut progressed = false;
            let sources: Vec<usize> = match self.order {
                PivotOrder::Lexicographic => (0..n).collect(),
                PivotOrder::Reverse => (0..n).rev().collect(),
            };
            for g in sources {
                if !self.alive[g] {
                    continue;
                }
                if let Some(h) = self.unit_target(g) {
                    self.pivot(g, h);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
    }

    fn smith(&mut self) {
        loop {
            let mut best: Option<(u32, usize, usize)> = None;
            for (g, row) in self.out.iter().enumerate() {
                for (h, m) in row {
                    let better = match best {
                        None => true,
                        Some((p, bh, bg)) => {
                            m.power < p
                                || (m.power == p
                                    && match self.order {
                                        PivotOrder::Lexicographic => (*h, g) < (bh, bg),
                                        PivotOrder::Reverse => (*h, g) > (bh, bg),
                                    })
                        }
                    };
                    if better {
                        best = Some((m.power, *h, g));
                    }
                }
            }
            match best {
                Some((_, h, g)) => self.pivot(g, h),
                None => break,
            }
        }
    }

    fn survivors(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|k| self.alive[*k]).collect()
    }

    fn remaining_complex(&self) -> (GradedFreeComplex, Vec<usize>) {
        let keep = self.survivors();
        let mut index = BTreeMap::new();
        for (new, old) in keep.iter().enumerate() {
            index.insert(*old, new);
        }
        let gradings = keep.iter().map(|k| self.gradings[*k]).collect();
        let rows = keep
            .iter()
            .map(|k| self.out[*k].iter().map(|(t, m)| (index[t], m.clone())).collect())
            .collect();
        (GradedFreeComplex::from_rows(self.field, gradings, rows), keep)
    }

    fn decomposition(&self) -> ModuleDecomposition {
        let towers = self.survivors().into_iter().map(|k| self.gradings[k]).collect();
        let torsion = self
            .torsion
            .iter()
            .map(|(p, _, _)| {
                let b = self.gradings[p.target];
                Torsion { i: b.i, j: b.j, n: p.power }
            })
            .collect();
        ModuleDecomposition::new(self.field, towers, torsion)
    }
}

/// Result of cancelling every unit entry, with the homotopy equivalence recorded.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub complex: GradedFreeComplex,
    /// `inclusion[k]`: generator `k` of the reduced complex as a vector in the original.
    pub inclusion: Vec<SparseVec>,
    /// `projection[k]`: covector on the original giving the `k`-th reduced coordinate.
    pub projection: Vec<SparseVec>,
}

/// Homotopy-equivalent complex with no unit entries.
pub fn gaussian_reduce(c: &GradedFreeComplex) -> GradedFreeComplex {
    let mut r = Reducer::new(c, PivotOrder::default(), false, false);
    r.eliminate_units();
    r.remaining_complex().0
}

/// [`gaussian_reduce`] that also returns the inclusion and projection chain maps.
pub fn gaussian_reduce_with(c: &GradedFreeComplex, order: PivotOrder) -> Reduction {
    let mut r = Reducer::new(c, order, true, true);
    r.eliminate_units();
    let (complex, keep) = r.remaining_complex();
    let basis = r.basis.take().unwrap();
    let coords = r.coords.take().unwrap();
    Reduction {
        complex,
        inclusion: keep.iter().map(|k| basis[*k].clone()).collect(),
        projection: keep.iter().map(|k| coords[*k].clone()).collect(),
    }
}

/// Homology of `c` as a graded `F[X]`-module.
pub fn decompose_homology(c: &GradedFreeComplex) -> ModuleDecomposition {
    decompose_homology_with(c, PivotOrder::default())
}

pub fn decompose_homology_with(c: &GradedFreeComplex, order: PivotOrder) -> ModuleDecomposition {
    let mut r = Reducer::new(c, order, false, false);
    r.eliminate_units();
    r.smith();
    r.decomposition()
}

/// A generator of homology: a tower (`order == None`) or a torsion class with `X^order` = 0.
#[derive(Clone, Debug)]
pub struct HomologyGenerator {
    pub grading: Bigrading,
    pub order: Option<u32>,
    /// Representing cycle in original coordinates (when basis tracking was requested).
    pub cycle: SparseVec,
    /// Coordinate of this generator, as a covector on original coordinates.
    pub coordinate: SparseVec,
}

/// Homology generators of a complex with representing cycles and coordinate functionals.
///
/// For a cycle `z`, its class is `Σ coordinate_k(z) · gen_k`, with torsion coordinates read
/// modulo `X^order`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub field: FieldSpec,
    pub generators: Vec<HomologyGenerator>,
}

impl NormalForm {
    pub fn decomposition(&self) -> ModuleDecomposition {
        let mut towers = Vec::new();
        let mut torsion = Vec::new();
        for g in &self.generators {
            match g.order {
                None => towers.push(g.grading),
                Some(n) => torsion.push(Torsion { i: g.grading.i, j: g.grading.j, n }),
            }
        }
        ModuleDecomposition::new(self.field, towers, torsion)
    }
}

pub fn normal_form(c: &GradedFreeComplex) -> NormalForm {
    normal_form_tracked(c, true, true)
}

pub(crate) fn normal_form_tracked(c: &GradedFreeComplex, track_basis: bool, track_coords: bool) -> NormalForm {
    let mut r = Reducer::new(c, PivotOrder::default(), track_basis, track_coords);
    r.eliminate_units();
    r.smith();
    let mut generators = Vec::new();
    let basis = r.basis.take();
    let coords = r.coords.take();
    for k in r.survivors() {
        generators.push(HomologyGenerator {
            grading: r.gradings[k],
            order: None,
            cycle: basis.as_ref().map(|b| b[k].clone()).unwrap_or_default(),
            coordinate: coords.as_ref().map(|c| c[k].clone()).unwrap_or_default(),
        });
    }
    for (p, cycle, coord) in core::mem::take(&mut r.torsion) {
        generators.push(HomologyGenerator {
            grading: r.gradings[p.target],
            order: Some(p.power),
            cycle: cycle.unwrap_or_default(),
            coordinate: coord.unwrap_or_default(),
        });
    }
    NormalForm { field: r.field, generators }
}
