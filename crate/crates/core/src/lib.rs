#![no_std]

//! Lee-deformed Khovanov homology of knots as a graded module over `F[X]`.
//!
//! The pipeline is: parse a PD code into a [`diagram::LinkDiagram`], build the
//! Lee complex over `F[X]` ([`khovanov`]), reduce it and split its homology into
//! free towers and `F[X]/X^n` torsion summands ([`algebra`]), and read off the
//! s-invariant, the extortion order and the ribbon-distance lower bound
//! ([`invariants`]). Elementary cobordism maps live in [`cobordism`]; brute-force
//! cross-checks in [`oracle`].

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod cobordism;
pub mod diagram;
mod error;
pub mod field;
pub mod invariants;
pub mod khovanov;
pub mod oracle;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
