//! Knot invariants read off the `F[X]`-module: the s-invariant, the extortion order, the
//! ribbon-distance lower bound it gives, and the connect-sum formula.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{tor_torsion, Bigrading, ModuleDecomposition};
use crate::diagram::LinkDiagram;
use crate::field::FieldSpec;
use crate::khovanov::{lee_module_with, BuildOptions};
use crate::{Error, Result};

/// Largest torsion order, 0 for a torsion-free module.
pub fn extortion_order(m: &ModuleDecomposition) -> Result<u32> {
    if m.field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    Ok(m.max_torsion_order())
}

/// Quantum grading of the unique tower, minus one.
pub fn s_invariant(m: &ModuleDecomposition) -> Result<i32> {
    match m.towers.as_slice() {
        [t] => Ok(t.j - 1),
        ts => Err(Error::NotKnotModule(ts.len())),
    }
}

/// `d(K, U) ≥ xo(K)`.
pub fn ribbon_lower_bound(m: &ModuleDecomposition) -> Result<u32> {
    s_invariant(m)?;
    extortion_order(m)
}

/// Smallest page `E_k` at which the Lee spectral sequence can collapse given `xo ∈ {2k-3, 2k-2}`.
pub fn collapse_page_bound(xo: u32) -> u32 {
    if xo == 0 {
        1
    } else {
        (xo + 3) / 2
    }
}

/// Module of `K # K'` from the modules of `K` and `K'`:
/// `Σ^{0,s+s'+1}F[X] ⊕ Σ^{0,s'}T(K) ⊕ Σ^{0,s}T(K') ⊕ Σ^{0,-1}Tor(T(K), T(K'))`.
pub fn connect_sum_module(a: &ModuleDecomposition, b: &ModuleDecomposition) -> Result<ModuleDecomposition> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    if a.field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let (sa, sb) = (s_invariant(a)?, s_invariant(b)?);
    let mut torsion: Vec<_> = a.torsion.iter().map(|t| t.shifted(0, sb)).collect();
    torsion.extend(b.torsion.iter().map(|t| t.shifted(0, sa)));
    torsion.extend(tor_torsion(&a.torsion, &b.torsion).into_iter().map(|t| t.shifted(0, -1)));
    Ok(ModuleDecomposition::new(a.field, alloc::vec![Bigrading::new(0, sa + sb + 1)], torsion))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotInvariantReport {
    pub s: i32,
    pub xo: u32,
    pub ribbon_lower_bound: u32,
    pub collapse_page_bound: u32,
    pub decomposition: ModuleDecomposition,
}

impl KnotInvariantReport {
    pub fn from_module(decomposition: ModuleDecomposition) -> Result<Self> {
        let s = s_invariant(&decomposition)?;
        let xo = extortion_order(&decomposition)?;
        Ok(KnotInvariantReport {
            s,
            xo,
            ribbon_lower_bound: xo,
            collapse_page_bound: collapse_page_bound(xo),
            decomposition,
        })
    }

    pub fn semantics(&self) -> String {
        format!("d(K, unknot) ≥ {}", self.ribbon_lower_bound)
    }
}

pub fn report(d: &LinkDiagram, field: FieldSpec) -> Result<KnotInvariantReport> {
    report_with(d, field, &BuildOptions::default())
}

pub fn report_with(d: &LinkDiagram, field: FieldSpec, opts: &BuildOptions) -> Result<KnotInvariantReport> {
    if d.components().len() != 1 {
        return Err(Error::NotKnotModule(d.components().len()));
    }
    KnotInvariantReport::from_module(lee_module_with(d, field, opts)?)
}
