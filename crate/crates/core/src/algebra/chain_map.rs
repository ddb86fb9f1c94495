use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::reduce::normal_form_tracked;
use super::{add_entry, axpy, pair, Bigrading, GradedFreeComplex, ModuleDecomposition, Monomial, SparseVec};
use crate::field::FieldElement;
use crate::{Error, Result};

/// A homogeneous `F[X]`-linear map between graded free complexes that commutes with `d`.
///
/// `shift` is the bigrading of the map: an entry `c·X^p` from `g` to `h` requires
/// `i(h) = i(g) + shift.i` and `j(h) - 2p = j(g) + shift.j`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Arc<GradedFreeComplex>,
    target: Arc<GradedFreeComplex>,
    shift: Bigrading,
    entries: Vec<SparseVec>,
}

impl ChainMap {
    pub fn new(
        source: Arc<GradedFreeComplex>,
        target: Arc<GradedFreeComplex>,
        shift: Bigrading,
        entries: impl IntoIterator<Item = (usize, usize, Monomial)>,
    ) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        let mut rows: Vec<SparseVec> = (0..source.len()).map(|_| BTreeMap::new()).collect();
        for (g, h, m) in entries {
            if g >= source.len() || h >= target.len() {
                return Err(Error::NotChainMap(format!("entry {} -> {} out of range", g, h)));
            }
            let (a, b) = (source.grading(g), target.grading(h));
            if b.i != a.i + shift.i || b.j - 2 * m.power as i32 != a.j + shift.j {
                return Err(Error::NotChainMap(format!(
                    "entry {} from {} to {} is not of degree {}",
                    m, a, b, shift
                )));
            }
            if rows[g].get(&h).is_some_and(|p| p.power != m.power) {
                return Err(Error::NotChainMap(format!("inhomogeneous entry {} -> {}", g, h)));
            }
            add_entry(&mut rows[g], h, m);
        }
        let f = ChainMap { source, target, shift, entries: rows };
        f.check_commutes()?;
        Ok(f)
    }

    pub fn identity(c: Arc<GradedFreeComplex>) -> Self {
        let one = c.field().one();
        let entries = (0..c.len())
            .map(|g| {
                let mut v = BTreeMap::new();
                v.insert(g, Monomial::new(one.clone(), 0));
                v
            })
            .collect();
        ChainMap { source: c.clone(), target: c, shift: Bigrading::new(0, 0), entries }
    }

    pub fn zero(source: Arc<GradedFreeComplex>, target: Arc<GradedFreeComplex>, shift: Bigrading) -> Self {
        let entries = (0..source.len()).map(|_| BTreeMap::new()).collect();
        ChainMap { source, target, shift, entries }
    }

    pub fn source(&self) -> &Arc<GradedFreeComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedFreeComplex> {
        &self.target
    }

    pub fn shift(&self) -> Bigrading {
        self.shift
    }

    /// `f(g)` as a vector in the target.
    pub fn image_of(&self, g: usize) -> &SparseVec {
        &self.entries[g]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = BTreeMap::new();
        for (g, a) in v {
            axpy(&mut out, a, &self.entries[*g]);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(|r| r.len()).sum()
    }

    fn check_commutes(&self) -> Result<()> {
        for g in 0..self.source.len() {
            let lhs = self.target.apply(&self.entries[g]);
            let mut unit = BTreeMap::new();
            unit.insert(g, Monomial::new(self.source.field().one(), 0));
            let rhs = self.apply(&self.source.apply(&unit));
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("d∘f ≠ f∘d on generator {}", g)));
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::Mismatch("composition of maps with mismatched complexes".into()));
        }
        let entries = first.entries.iter().map(|v| self.apply(v)).collect();
        Ok(ChainMap {
            source: first.source.clone(),
            target: self.target.clone(),
            shift: Bigrading::new(self.shift.i + first.shift.i, self.shift.j + first.shift.j),
            entries,
        })
    }

    fn same_shape(&self, other: &ChainMap) -> Result<()> {
        if self.source.as_ref() != other.source.as_ref()
            || self.target.as_ref() != other.target.as_ref()
            || self.shift != other.shift
        {
            return Err(Error::Mismatch("sum of maps with different source, target or degree".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.same_shape(other)?;
        let mut entries = self.entries.clone();
        let one = Monomial::new(self.source.field().one(), 0);
        for (row, o) in entries.iter_mut().zip(&other.entries) {
            axpy(row, &one, o);
        }
        Ok(ChainMap { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChainMap {
        self.scale(&-self.source.field().one())
    }

    pub fn scale(&self, c: &FieldElement) -> ChainMap {
        if c.is_zero() {
            return ChainMap::zero(self.source.clone(), self.target.clone(), self.shift);
        }
        let m = Monomial::new(c.clone(), 0);
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|(h, e)| (*h, m.mul(e))).collect())
            .collect();
        ChainMap { entries, ..self.clone() }
    }

    /// `X^k · self`, of degree `shift + (0, -2k)`.
    pub fn times_x(&self, k: u32) -> ChainMap {
        let m = Monomial::new(self.source.field().one(), k);
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|(h, e)| (*h, m.mul(e))).collect())
            .collect();
        ChainMap { entries, shift: self.shift.shifted(0, -2 * k as i32), ..self.clone() }
    }
}

impl PartialEq for ChainMap {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift
            && self.entries == other.entries
            && self.source.as_ref() == other.source.as_ref()
            && self.target.as_ref() == other.target.as_ref()
    }
}

/// The image of `f_*: H(C) → H(D)` as a graded `F[X]`-module, graded as a submodule of `H(D)`.
pub fn homology_image(f: &ChainMap) -> ModuleDecomposition {
    let field = f.source.field();
    let nf_c = normal_form_tracked(&f.source, true, false);
    let nf_d = normal_form_tracked(&f.target, false, true);

    let mut towers = Vec::new();
    let mut torsion = Vec::new();
    let degrees: alloc::collections::BTreeSet<i32> = nf_d.generators.iter().map(|g| g.grading.i).collect();
    for deg in degrees {
        let rows: Vec<usize> = (0..nf_d.generators.len()).filter(|k| nf_d.generators[*k].grading.i == deg).collect();
        let cols: Vec<usize> =
            (0..nf_c.generators.len()).filter(|a| nf_c.generators[*a].grading.i + f.shift.i == deg).collect();
        if cols.is_empty() {
            continue;
        }
        let images: Vec<SparseVec> = cols.iter().map(|a| f.apply(&nf_c.generators[*a].cycle)).collect();

        // Z: columns and relations at degree -1, rows of H(D) at degree 0.
        let mut gradings = Vec::new();
        let mut entries = Vec::new();
        for (ci, a) in cols.iter().enumerate() {
            let j = nf_c.generators[*a].grading.j + f.shift.j;
            gradings.push(Bigrading::new(-1, j));
            for (ri, k) in rows.iter().enumerate() {
                let gen = &nf_d.generators[*k];
                if let Some(m) = pair(&gen.coordinate, &images[ci]) {
                    if gen.order.is_none_or(|n| m.power < n) {
                        entries.push((ci, cols.len() + ri, m));
                    }
                }
            }
        }
        let rel_base = cols.len() + rows.len();
        for k in &rows {
            gradings.push(Bigrading::new(0, nf_d.generators[*k].grading.j));
        }
        let mut relations = 0;
        for (ri, k) in rows.iter().enumerate() {
            let gen = &nf_d.generators[*k];
            if let Some(n) = gen.order {
                gradings.push(Bigrading::new(-1, gen.grading.j - 2 * n as i32));
                entries.push((rel_base + relations, cols.len() + ri, Monomial::new(field.one(), n)));
                relations += 1;
            }
        }
        let z = GradedFreeComplex::new(field, gradings, entries).expect("image presentation is homogeneous");
        let kernel = normal_form_tracked(&z, true, false);

        // W: kernel generators at degree -1 mapping to the columns at degree 0.
        let mut w_gradings: Vec<Bigrading> = cols
            .iter()
            .map(|a| Bigrading::new(0, nf_c.generators[*a].grading.j + f.shift.j))
            .collect();
        let mut w_entries = Vec::new();
        for g in kernel.generators.iter().filter(|g| g.grading.i == -1) {
            debug_assert!(g.order.is_none());
            let idx = w_gradings.len();
            w_gradings.push(g.grading);
            for (c, m) in g.cycle.range(..cols.len()) {
                w_entries.push((idx, *c, m.clone()));
            }
        }
        let w = GradedFreeComplex::new(field, w_gradings, w_entries).expect("kernel presentation is homogeneous");
        let image = normal_form_tracked(&w, false, false).decomposition();
        debug_assert!(image.towers.iter().all(|b| b.i == 0));
        towers.extend(image.towers.iter().map(|b| Bigrading::new(deg, b.j)));
        torsion.extend(image.torsion.iter().map(|t| super::Torsion { i: deg, j: t.j, n: t.n }));
    }
    ModuleDecomposition::new(field, towers, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::algebra::{decompose_homology, x_power_image, Torsion};
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn mono(c: i64, p: u32) -> Monomial {
        Monomial::new(q().from_i64(c), p)
    }

    fn sample() -> Arc<GradedFreeComplex> {
        // tower at (0, 1) and F[X]/X^2 at (1, 4)
        Arc::new(
            GradedFreeComplex::new(
                q(),
                vec![Bigrading::new(0, 1), Bigrading::new(0, 0), Bigrading::new(1, 4)],
                vec![(1, 2, mono(1, 2))],
            )
            .unwrap(),
        )
    }

    #[test]
    fn identity_image_is_whole_homology() {
        let c = sample();
        let id = ChainMap::identity(c.clone());
        assert_eq!(homology_image(&id), decompose_homology(&c));
    }

    #[test]
    fn x_power_image_matches_closed_form() {
        let c = sample();
        let id = ChainMap::identity(c.clone());
        let h = decompose_homology(&c);
        for d in 0..4 {
            assert_eq!(homology_image(&id.times_x(d)), x_power_image(&h, d), "d = {}", d);
        }
    }

    #[test]
    fn rejects_non_chain_map() {
        let c = sample();
        // sending the tower generator onto the torsion source is not closed
        let err = ChainMap::new(c.clone(), c.clone(), Bigrading::new(0, 0), vec![(0, 1, mono(1, 0))]);
        assert!(matches!(err, Err(Error::NotChainMap(_))));
    }

    #[test]
    fn projection_onto_torsion() {
        // F[X] at (1,4) → F[X]/X^2 at (1,4)
        let src = Arc::new(GradedFreeComplex::with_zero_differential(q(), vec![Bigrading::new(1, 4)]));
        let f = ChainMap::new(src, sample(), Bigrading::new(0, 0), vec![(0, 2, mono(1, 0))]).unwrap();
        let im = homology_image(&f);
        assert!(im.towers.is_empty());
        assert_eq!(im.torsion, vec![Torsion { i: 1, j: 4, n: 2 }]);
    }

    #[test]
    fn compose_and_add() {
        let c = sample();
        let id = ChainMap::identity(c.clone());
        let two = id.add(&id).unwrap();
        assert_eq!(two, id.scale(&q().from_i64(2)));
        assert_eq!(id.compose(&id).unwrap(), id);
        assert!(id.sub(&id).unwrap().is_zero());
    }
}
