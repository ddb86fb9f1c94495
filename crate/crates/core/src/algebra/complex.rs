use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::{add_entry, Bigrading, Monomial, SparseVec};
use crate::field::FieldSpec;
use crate::{Error, Result};

/// A chain complex of free graded `F[X]`-modules, one generator per basis element.
///
/// The differential raises `i` by one and preserves `j`; every entry is a single monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeComplex {
    field: FieldSpec,
    gradings: Vec<Bigrading>,
    differential: Vec<Vec<(usize, Monomial)>>,
}

impl GradedFreeComplex {
    /// Builds and validates a complex from `(source, target, entry)` triples. Duplicate
    /// entries are summed; zero entries are dropped.
    pub fn new(
        field: FieldSpec,
        gradings: Vec<Bigrading>,
        entries: impl IntoIterator<Item = (usize, usize, Monomial)>,
    ) -> Result<Self> {
        field.validate()?;
        let n = gradings.len();
        let mut rows: Vec<SparseVec> = (0..n).map(|_| BTreeMap::new()).collect();
        for (g, h, m) in entries {
            if g >= n || h >= n {
                return Err(Error::InvalidComplex(format!("entry {} -> {} out of range", g, h)));
            }
            if m.coeff.spec() != field {
                return Err(Error::FieldMismatch(m.coeff.spec(), field));
            }
            check_homogeneous(gradings[g], gradings[h], m.power)?;
            if let Some(prev) = rows[g].get(&h) {
                if prev.power != m.power {
                    return Err(Error::InvalidComplex(format!("inhomogeneous entry {} -> {}", g, h)));
                }
            }
            add_entry(&mut rows[g], h, m);
        }
        let c = Self::from_rows(field, gradings, rows);
        c.check_d_squared()?;
        Ok(c)
    }

    pub(crate) fn from_rows(field: FieldSpec, gradings: Vec<Bigrading>, rows: Vec<SparseVec>) -> Self {
        let differential = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        GradedFreeComplex { field, gradings, differential }
    }

    /// Complex with the given generators and zero differential.
    pub fn with_zero_differential(field: FieldSpec, gradings: Vec<Bigrading>) -> Self {
        let differential = gradings.iter().map(|_| Vec::new()).collect();
        GradedFreeComplex { field, gradings, differential }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.gradings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gradings.is_empty()
    }

    pub fn grading(&self, g: usize) -> Bigrading {
        self.gradings[g]
    }

    pub fn gradings(&self) -> &[Bigrading] {
        &self.gradings
    }

    /// Outgoing entries of `d(g)`, sorted by target.
    pub fn differential(&self, g: usize) -> &[(usize, Monomial)] {
        &self.differential[g]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Monomial)> + '_ {
        self.differential
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().map(move |(h, m)| (g, *h, m)))
    }

    pub fn nnz(&self) -> usize {
        self.differential.iter().map(|r| r.len()).sum()
    }

    pub fn degrees(&self) -> BTreeSet<i32> {
        self.gradings.iter().map(|b| b.i).collect()
    }

    /// `d` applied to a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = BTreeMap::new();
        for (&g, a) in v {
            for (h, m) in &self.differential[g] {
                add_entry(&mut out, *h, a.mul(m));
            }
        }
        out
    }

    pub fn check_d_squared(&self) -> Result<()> {
        for g in 0..self.len() {
            let mut v = BTreeMap::new();
            v.insert(g, Monomial::new(self.field.one(), 0));
            let dd = self.apply(&self.apply(&v));
            if let Some((h, _)) = dd.iter().next() {
                return Err(Error::InvalidComplex(format!("d∘d ≠ 0 from generator {} to {}", g, h)));
            }
        }
        Ok(())
    }

    /// `Σ (-1)^i q^j` over generators, as a map from `j` to coefficient.
    pub fn graded_euler(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for b in &self.gradings {
            let sign = if b.i.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(b.j).or_insert(0) += sign;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Upward bigrading shift of every generator.
    pub fn shifted(&self, di: i32, dj: i32) -> Self {
        GradedFreeComplex {
            field: self.field,
            gradings: self.gradings.iter().map(|b| b.shifted(di, dj)).collect(),
            differential: self.differential.clone(),
        }
    }
}

pub(crate) fn check_homogeneous(src: Bigrading, tgt: Bigrading, power: u32) -> Result<()> {
    let dj = tgt.j - src.j;
    if tgt.i != src.i + 1 || dj < 0 || dj % 2 != 0 || (dj / 2) as u32 != power {
        return Err(Error::InvalidComplex(format!(
            "entry X^{} from {} to {} is not homogeneous",
            power, src, tgt
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn rejects_inhomogeneous_entry() {
        let gr = vec![Bigrading::new(0, 0), Bigrading::new(1, 2)];
        let err = GradedFreeComplex::new(q(), gr, vec![(0, 1, Monomial::new(q().one(), 0))]);
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn rejects_nonzero_d_squared() {
        let gr = vec![Bigrading::new(0, 0), Bigrading::new(1, 0), Bigrading::new(2, 0)];
        let one = Monomial::new(q().one(), 0);
        let err = GradedFreeComplex::new(q(), gr, vec![(0, 1, one.clone()), (1, 2, one)]);
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn duplicate_entries_sum_and_cancel() {
        let gr = vec![Bigrading::new(0, 0), Bigrading::new(1, 0)];
        let one = Monomial::new(q().one(), 0);
        let c = GradedFreeComplex::new(q(), gr, vec![(0, 1, one.clone()), (0, 1, one.neg())]).unwrap();
        assert_eq!(c.nnz(), 0);
    }

    #[test]
    fn rejects_characteristic_two() {
        let err = GradedFreeComplex::new(FieldSpec::Prime(2), vec![], vec![]);
        assert_eq!(err, Err(Error::CharacteristicTwo));
    }
}
