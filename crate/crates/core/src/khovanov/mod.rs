//! The Lee complex of a diagram as a complex of free `F[X]`-modules.
//!
//! Gradings: `i = |s| - n₋` and `j = #1 - #X + |s| + n₊ - 2n₋`. Cube edges carry the sign
//! `(-1)^(number of 1-smoothings before the flipped crossing)`. The basepoint circle is
//! labeled `1` in every generator; `X` acts through the coefficient ring.

mod cube;
mod frobenius;
mod scan;

pub use cube::LeeComplex;
pub(crate) use frobenius::{counit, dot, merge, split};
pub use frobenius::{frobenius_eval, FrobeniusOp, Label, Term};

use crate::algebra::{decompose_homology, gaussian_reduce, GradedFreeComplex, ModuleDecomposition};
use crate::diagram::LinkDiagram;
use crate::field::FieldSpec;
use crate::{Error, Result};

/// Largest diagram built on the full cube under [`BuildStrategy::Auto`].
pub const CUBE_LIMIT: usize = 14;

pub const DEFAULT_MAX_CROSSINGS: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BuildStrategy {
    /// Cube up to [`CUBE_LIMIT`] crossings, scanning beyond.
    #[default]
    Auto,
    Cube,
    /// Crossing-by-crossing tangle build with delooping and elimination after each step.
    Scan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub strategy: BuildStrategy,
    pub max_crossings: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { strategy: BuildStrategy::Auto, max_crossings: DEFAULT_MAX_CROSSINGS }
    }
}

pub fn build_lee_complex(d: &LinkDiagram, field: FieldSpec) -> Result<GradedFreeComplex> {
    build_lee_complex_with(d, field, &BuildOptions::default())
}

pub fn build_lee_complex_with(d: &LinkDiagram, field: FieldSpec, opts: &BuildOptions) -> Result<GradedFreeComplex> {
    field.validate()?;
    let n = d.crossing_count();
    if n > opts.max_crossings {
        return Err(Error::ResourceLimit { size: n, cap: opts.max_crossings });
    }
    match opts.strategy {
        BuildStrategy::Cube => Ok(LeeComplex::build(d, field)?.into_complex()),
        BuildStrategy::Scan => scan::build(d, field),
        BuildStrategy::Auto if n <= CUBE_LIMIT => Ok(LeeComplex::build(d, field)?.into_complex()),
        BuildStrategy::Auto => scan::build(d, field),
    }
}

/// Homology of the Lee complex as a graded `F[X]`-module.
pub fn lee_module(d: &LinkDiagram, field: FieldSpec) -> Result<ModuleDecomposition> {
    lee_module_with(d, field, &BuildOptions::default())
}

pub fn lee_module_with(d: &LinkDiagram, field: FieldSpec, opts: &BuildOptions) -> Result<ModuleDecomposition> {
    let c = build_lee_complex_with(d, field, opts)?;
    Ok(decompose_homology(&gaussian_reduce(&c)))
}
