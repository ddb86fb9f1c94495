use alloc::vec::Vec;
use core::fmt;

use super::Bigrading;
use crate::field::FieldSpec;

/// The summand `Σ^{i,j} F[X]/X^n`, generated in bigrading `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Torsion {
    pub i: i32,
    pub j: i32,
    pub n: u32,
}

impl Torsion {
    pub const fn shifted(self, di: i32, dj: i32) -> Self {
        Torsion { i: self.i + di, j: self.j + dj, n: self.n }
    }
}

/// A finitely generated graded `F[X]`-module: free towers plus `F[X]/X^n` summands.
///
/// Summands are kept sorted, so equality is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDecomposition {
    pub towers: Vec<Bigrading>,
    pub torsion: Vec<Torsion>,
    pub field: FieldSpec,
}

impl ModuleDecomposition {
    /// Sorts the summands. Torsion summands with `n = 0` are zero and are dropped.
    pub fn new(field: FieldSpec, mut towers: Vec<Bigrading>, mut torsion: Vec<Torsion>) -> Self {
        towers.sort();
        torsion.retain(|t| t.n > 0);
        torsion.sort();
        ModuleDecomposition { towers, torsion, field }
    }

    pub fn zero(field: FieldSpec) -> Self {
        ModuleDecomposition { towers: Vec::new(), torsion: Vec::new(), field }
    }

    /// `Σ^{0,1} F[X]`, the module of the unknot.
    pub fn unknot(field: FieldSpec) -> Self {
        ModuleDecomposition { towers: alloc::vec![Bigrading::new(0, 1)], torsion: Vec::new(), field }
    }

    pub fn is_zero(&self) -> bool {
        self.towers.is_empty() && self.torsion.is_empty()
    }

    /// Largest torsion order, 0 when torsion-free.
    pub fn max_torsion_order(&self) -> u32 {
        self.torsion.iter().map(|t| t.n).max().unwrap_or(0)
    }

    pub fn shifted(&self, di: i32, dj: i32) -> Self {
        ModuleDecomposition::new(
            self.field,
            self.towers.iter().map(|b| b.shifted(di, dj)).collect(),
            self.torsion.iter().map(|t| t.shifted(di, dj)).collect(),
        )
    }

    /// Total dimension over `F` after setting `T = X^2 = 0`, i.e. of the derived tensor
    /// product with `F[X]/X^2`: 2 per tower and `2·min(n, 2)` per torsion summand.
    pub fn t0_dimension(&self) -> usize {
        2 * self.towers.len() + self.torsion.iter().map(|t| 2 * t.n.min(2) as usize).sum::<usize>()
    }
}

impl fmt::Display for ModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.towers {
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            write!(f, "Σ^{{{},{}}}F[X]", t.i, t.j)?;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            write!(f, "Σ^{{{},{}}}F[X]/X^{}", t.i, t.j, t.n)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `X^d · m`: towers move down by `2d`; torsion of order `n` becomes order `n - d` (or vanishes).
pub fn x_power_image(m: &ModuleDecomposition, d: u32) -> ModuleDecomposition {
    let shift = -2 * d as i32;
    ModuleDecomposition::new(
        m.field,
        m.towers.iter().map(|b| b.shifted(0, shift)).collect(),
        m.torsion
            .iter()
            .filter(|t| t.n > d)
            .map(|t| Torsion { i: t.i, j: t.j + shift, n: t.n - d })
            .collect(),
    )
}

/// Homology of the tensor product of the two-step free resolutions of two torsion modules.
///
/// For `F[X]/X^n` at `(i, j)` and `F[X]/X^m` at `(i', j')` the tensor product of
/// `⟨p⟩ --X^n--> ⟨q⟩` and `⟨p'⟩ --X^m--> ⟨q'⟩` splits into two copies of the order-`min(n, m)`
/// complex, with homology generated by `q⊗q'` at `(i+i', j+j')` and by
/// `p⊗q' ∓ X^(n-m) q⊗p'` at `(i+i'-1, j+j'-2·max(n, m))`.
pub fn tor_torsion(a: &[Torsion], b: &[Torsion]) -> Vec<Torsion> {
    let mut out = Vec::with_capacity(2 * a.len() * b.len());
    for x in a {
        for y in b {
            let k = x.n.min(y.n);
            let big = x.n.max(y.n) as i32;
            out.push(Torsion { i: x.i + y.i, j: x.j + y.j, n: k });
            out.push(Torsion { i: x.i + y.i - 1, j: x.j + y.j - 2 * big, n: k });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn x_power_of_unknot() {
        let u = ModuleDecomposition::unknot(q());
        assert_eq!(x_power_image(&u, 0), u);
        assert_eq!(x_power_image(&u, 3).towers, vec![Bigrading::new(0, -5)]);
    }

    #[test]
    fn x_power_at_order_kills_torsion() {
        let m = ModuleDecomposition::new(
            q(),
            vec![Bigrading::new(0, 7)],
            vec![Torsion { i: 2, j: 11, n: 2 }, Torsion { i: 3, j: 9, n: 1 }],
        );
        let xo = m.max_torsion_order();
        assert!(x_power_image(&m, xo).torsion.is_empty());
        assert_eq!(x_power_image(&m, xo - 1).torsion, vec![Torsion { i: 2, j: 9, n: 1 }]);
    }

    #[test]
    fn tor_of_empty_is_empty() {
        let t = [Torsion { i: 1, j: 1, n: 3 }];
        assert!(tor_torsion(&[], &t).is_empty());
        assert!(tor_torsion(&t, &[]).is_empty());
    }

    #[test]
    fn tor_splits_into_two_copies_of_smaller_order() {
        let a = [Torsion { i: 0, j: 0, n: 2 }];
        let b = [Torsion { i: 0, j: 0, n: 1 }];
        let t = tor_torsion(&a, &b);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|x| x.n == 1));
        assert_eq!(tor_torsion(&a, &b), tor_torsion(&b, &a));
    }

    #[test]
    fn t0_dimension_counts() {
        let m = ModuleDecomposition::new(
            q(),
            vec![Bigrading::new(0, 1)],
            vec![Torsion { i: 1, j: 1, n: 1 }, Torsion { i: 2, j: 5, n: 3 }],
        );
        assert_eq!(m.t0_dimension(), 2 + 2 + 4);
    }
}
