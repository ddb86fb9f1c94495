//! The Frobenius algebra `V = F[T][X]/(X² = T)` on the basis `{1, X}`.
//!
//! Labels are stored as bits: `false` for `1`, `true` for `X`. Every structure constant is
//! `1`, so a term is a labeling together with a power of `T`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    X,
}

impl Label {
    pub fn is_x(self) -> bool {
        self == Label::X
    }

    fn from_bit(b: bool) -> Self {
        if b {
            Label::X
        } else {
            Label::One
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusOp {
    Merge,
    Split,
    Unit,
    Counit,
}

/// One term of a formal sum: a labeling with coefficient `X^x_power` (`T` written as `X²`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub labels: Vec<Label>,
    pub x_power: u32,
}

/// `m`, `Δ`, unit or counit applied to a labeling of its input circles.
///
/// Panics if the number of inputs does not match the operation (2, 1, 0, 1).
pub fn frobenius_eval(op: FrobeniusOp, inputs: &[Label]) -> Vec<Term> {
    let term = |labels: Vec<Label>, t: u32| Term { labels, x_power: 2 * t };
    match (op, inputs) {
        (FrobeniusOp::Merge, [a, b]) => {
            let (c, t) = merge(a.is_x(), b.is_x());
            vec![term(vec![Label::from_bit(c)], t)]
        }
        (FrobeniusOp::Split, [a]) => split(a.is_x())
            .iter()
            .map(|(b, c, t)| term(vec![Label::from_bit(*b), Label::from_bit(*c)], *t))
            .collect(),
        (FrobeniusOp::Unit, []) => vec![term(vec![Label::One], 0)],
        (FrobeniusOp::Counit, [a]) => match counit(a.is_x()) {
            Some(t) => vec![term(Vec::new(), t)],
            None => Vec::new(),
        },
        _ => panic!("wrong number of inputs for {:?}", op),
    }
}

/// `m(a ⊗ b) = T^t · c`.
pub(crate) fn merge(a: bool, b: bool) -> (bool, u32) {
    match (a, b) {
        (false, false) => (false, 0),
        (true, true) => (false, 1),
        _ => (true, 0),
    }
}

/// `Δ(1) = 1⊗X + X⊗1`, `Δ(X) = X⊗X + T·1⊗1`.
pub(crate) fn split(a: bool) -> [(bool, bool, u32); 2] {
    if a {
        [(true, true, 0), (false, false, 1)]
    } else {
        [(false, true, 0), (true, false, 0)]
    }
}

/// `ε(1) = 0`, `ε(X) = 1`: `Some(T power)` when nonzero.
pub(crate) fn counit(a: bool) -> Option<u32> {
    a.then_some(0)
}

/// Multiplication by `X`: `1 ↦ X`, `X ↦ T·1`.
pub(crate) fn dot(a: bool) -> (bool, u32) {
    if a {
        (false, 1)
    } else {
        (true, 0)
    }
}
