//! Graded free complexes over `F[X]` with monomial differentials, their reduction, and the
//! decomposition of homology into towers and torsion summands.
//!
//! `X` has bigrading `(0, -2)`. A differential entry `c·X^n` from `g` to `h` is homogeneous iff
//! `i(h) = i(g) + 1` and `j(h) - 2n = j(g)`.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::field::FieldElement;

mod chain_map;
pub(crate) mod complex;
mod module;
mod reduce;

pub use chain_map::{homology_image, ChainMap};
pub use complex::GradedFreeComplex;
pub use module::{tor_torsion, x_power_image, ModuleDecomposition, Torsion};
pub use reduce::{
    decompose_homology, decompose_homology_with, gaussian_reduce, gaussian_reduce_with, normal_form,
    HomologyGenerator, NormalForm, PivotOrder, Reduction,
};

/// Homological and quantum grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bigrading {
    pub i: i32,
    pub j: i32,
}

impl Bigrading {
    pub const fn new(i: i32, j: i32) -> Self {
        Bigrading { i, j }
    }

    pub const fn shifted(self, di: i32, dj: i32) -> Self {
        Bigrading { i: self.i + di, j: self.j + dj }
    }
}

impl fmt::Display for Bigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// `coeff · X^power` with `coeff != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: FieldElement,
    pub power: u32,
}

impl Monomial {
    pub fn new(coeff: FieldElement, power: u32) -> Self {
        debug_assert!(!coeff.is_zero(), "zero monomial");
        Monomial { coeff, power }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { coeff: &self.coeff * &other.coeff, power: self.power + other.power }
    }

    pub fn neg(&self) -> Monomial {
        Monomial { coeff: -&self.coeff, power: self.power }
    }

    pub fn is_unit(&self) -> bool {
        self.power == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}X", self.coeff),
            n => write!(f, "{}X^{}", self.coeff, n),
        }
    }
}

/// Sparse vector (or covector) over `F[X]` indexed by generator.
pub type SparseVec = BTreeMap<usize, Monomial>;

/// `target += scale · source`, dropping cancelled entries. Powers must agree where entries meet.
pub(crate) fn axpy(target: &mut SparseVec, scale: &Monomial, source: &SparseVec) {
    for (&k, m) in source {
        add_entry(target, k, scale.mul(m));
    }
}

/// `target[k] += m`, removing the entry if it cancels.
pub(crate) fn add_entry(target: &mut SparseVec, k: usize, m: Monomial) -> EntryChange {
    use alloc::collections::btree_map::Entry;
    match target.entry(k) {
        Entry::Vacant(v) => {
            if m.coeff.is_zero() {
                EntryChange::Unchanged
            } else {
                v.insert(m);
                EntryChange::Inserted
            }
        }
        Entry::Occupied(mut o) => {
            assert_eq!(o.get().power, m.power, "inhomogeneous sum of monomials");
            let c = &o.get().coeff + &m.coeff;
            if c.is_zero() {
                o.remove();
                EntryChange::Removed
            } else {
                o.get_mut().coeff = c;
                EntryChange::Unchanged
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum EntryChange {
    Inserted,
    Removed,
    Unchanged,
}

/// Pairing of a covector with a vector: `Σ_k f[k]·v[k]`. `None` if the result is zero.
pub(crate) fn pair(functional: &SparseVec, vector: &SparseVec) -> Option<Monomial> {
    let (small, large, flip) = if functional.len() <= vector.len() {
        (functional, vector, false)
    } else {
        (vector, functional, true)
    };
    let mut acc: Option<Monomial> = None;
    for (k, a) in small {
        if let Some(b) = large.get(k) {
            let term = if flip { b.mul(a) } else { a.mul(b) };
            acc = match acc {
                None => Some(term),
                Some(prev) => {
                    assert_eq!(prev.power, term.power, "inhomogeneous pairing");
                    Some(Monomial { coeff: &prev.coeff + &term.coeff, power: prev.power })
                }
            };
        }
    }
    acc.filter(|m| !m.coeff.is_zero())
}
