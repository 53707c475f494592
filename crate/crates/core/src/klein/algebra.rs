//! The six-dimensional algebra `GF(2)[D] / (w^3)` with `w = y - 1`, and
//! the five-dimensional module `J` inside it.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{ActionSpec, Gf2Space, Gf2Vector, Matrix};
use crate::group::{DihedralElement, Group, PairGenerator};
use crate::ring::GroupRing;
use crate::scalar::Gf2;

/// Labels of the monomial basis `y^i x^j`, `i < 3`, `j < 2`.
pub const ALGEBRA_LABELS: [&str; 6] = ["1", "y", "y^2", "x", "y*x", "y^2*x"];

/// Labels of the basis of `J`.
pub const J_LABELS: [&str; 5] = ["v", "w", "wx", "w2", "w2x"];

/// An element of `GF(2)[D] / (w^3)` in the monomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuotientElement([Gf2; 6]);

fn index(y: usize, x: usize) -> usize {
    y + 3 * x
}

impl QuotientElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.0[i] = Gf2::ONE;
        e
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn coords(&self) -> [Gf2; 6] {
        self.0
    }

    /// The class of `y^n x^e`: exponents of `y` are taken mod 4 and
    /// `y^3 = 1 + y + y^2`.
    pub fn monomial(y_exp: i64, x_flag: bool) -> Self {
        let j = usize::from(x_flag);
        match y_exp.rem_euclid(4) {
            3 => Self::basis(index(0, j)) + Self::basis(index(1, j)) + Self::basis(index(2, j)),
            n => Self::basis(index(n as usize, j)),
        }
    }

    pub fn from_dihedral(g: &DihedralElement) -> Self {
        Self::monomial(g.y_exp(), g.x_flag())
    }

    pub fn from_ring(r: &GroupRing<DihedralElement, Gf2>) -> Self {
        r.terms().filter(|(_, c)| **c == Gf2::ONE).fold(Self::zero(), |acc, (g, _)| acc + Self::from_dihedral(g))
    }

    pub fn augmentation(&self) -> Gf2 {
        self.0.iter().fold(Gf2::ZERO, |acc, &c| acc + c)
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl std::ops::Add for QuotientElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        out
    }
}

impl std::ops::Mul for QuotientElement {
    type Output = Self;

    /// Multiplies monomials with `x y = y^3 x` and `x^2 = 1`, then rewrites.
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in (0..6).filter(|&i| self.0[i] == Gf2::ONE) {
            for j in (0..6).filter(|&j| rhs.0[j] == Gf2::ONE) {
                let (a, b) = ((i % 3) as i64, i / 3);
                let (c, d) = ((j % 3) as i64, j / 3);
                let yy = if b == 1 { a + 3 * c } else { a + c };
                out = out + Self::monomial(yy, (b + d) % 2 == 1);
            }
        }
        out
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = (0..6).filter(|&i| self.0[i] == Gf2::ONE).map(|i| ALGEBRA_LABELS[i]).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn j_space() -> Gf2Space {
    Gf2Space::new(J_LABELS)
}

/// The basis `v = 1 + x, w = 1 + y, wx, w^2, w^2 x` of `J` inside the algebra.
pub fn j_basis() -> [QuotientElement; 5] {
    let m = QuotientElement::monomial;
    let w = m(0, false) + m(1, false);
    let x = m(0, true);
    [m(0, false) + x, w, w * x, w * w, w * w * x]
}

/// Coordinates in the `J` basis of an augmentation-zero algebra element.
pub fn j_coordinates(e: &QuotientElement) -> Result<Gf2Vector> {
    if e.augmentation() != Gf2::ZERO {
        return Err(Error::NotInAugmentationIdeal(e.to_string()));
    }
    let cols: Vec<Gf2Vector> = j_basis().iter().map(|b| b.coords().to_vec()).collect();
    let a = Matrix::from_columns(6, &cols)?;
    a.solve(&e.coords())?.ok_or_else(|| Error::DimensionMismatch(format!("{e} is not in J")))
}

/// `(a, b) . m = a m b^-1` on `J`, computed inside the algebra.
pub fn oracle_j_action() -> Result<ActionSpec> {
    let basis = j_basis();
    PairGenerator::ALL
        .iter()
        .map(|g| {
            let p = g.to_dihedral_pair();
            let (a, b) = (QuotientElement::from_dihedral(&p.left), QuotientElement::from_dihedral(&p.right.inv()));
            let cols = basis.iter().map(|m| j_coordinates(&(a * *m * b))).collect::<Result<Vec<_>>>()?;
            Ok((*g, Matrix::from_columns(5, &cols)?))
        })
        .collect()
}

/// The image of `y^n - 1` in `J` by the mod-4 rule.
fn rotation_minus_one(n: i64) -> Gf2Vector {
    let s = j_space();
    let label = match n.rem_euclid(4) {
        0 => "0",
        1 => "w",
        2 => "w2",
        _ => "w+w2",
    };
    s.parse(label).expect("valid label")
}

/// The image of `g - 1` in `J`, using `y^n x - 1 = (y^n - 1) x + (x - 1)`.
pub fn reduce_generator(g: &DihedralElement) -> Gf2Vector {
    let r = rotation_minus_one(g.y_exp());
    if !g.x_flag() {
        return r;
    }
    // right multiplication by x sends w -> wx and w2 -> w2x
    vec![Gf2::ONE, Gf2::ZERO, r[1], Gf2::ZERO, r[3]]
}

/// Reduces an element of `I(D; Z/2)` to `J` by the rules, as the linear
/// extension over `sum c_g (g - 1)`.
pub fn reduce_to_j(e: &GroupRing<DihedralElement, Gf2>) -> Result<Gf2Vector> {
    if !e.in_augmentation_ideal() {
        return Err(Error::NotInAugmentationIdeal(e.to_string()));
    }
    let mut out = vec![Gf2::ZERO; 5];
    for (g, c) in e.terms() {
        if *c == Gf2::ONE {
            out = crate::f2::add(&out, &reduce_generator(g));
        }
    }
    Ok(out)
}

/// Reduces through the algebra instead of the rules.
pub fn reduce_to_j_via_algebra(e: &GroupRing<DihedralElement, Gf2>) -> Result<Gf2Vector> {
    if !e.in_augmentation_ideal() {
        return Err(Error::NotInAugmentationIdeal(e.to_string()));
    }
    j_coordinates(&QuotientElement::from_ring(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, x: bool) -> DihedralElement {
        DihedralElement::new(n, x)
    }

    fn minus_one(g: DihedralElement) -> GroupRing<DihedralElement, Gf2> {
        GroupRing::minus_one(g)
    }

    #[test]
    fn rewriting_rules() {
        let m = QuotientElement::monomial;
        assert_eq!(m(4, false), QuotientElement::one());
        assert_eq!(m(3, false), m(0, false) + m(1, false) + m(2, false));
        assert_eq!(m(0, true) * m(0, true), QuotientElement::one());
        assert_eq!(m(0, true) * m(1, false), m(3, false) * m(0, true));
    }

    #[test]
    fn associative_on_all_basis_triples() {
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    let (a, b, c) = (QuotientElement::basis(i), QuotientElement::basis(j), QuotientElement::basis(k));
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn augmentation_kernel_is_j() {
        let basis = j_basis();
        let cols: Vec<Gf2Vector> = basis.iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(Matrix::from_columns(6, &cols).unwrap().rank(), 5);
        assert!(basis.iter().all(|b| b.augmentation() == Gf2::ZERO));
        assert!(j_coordinates(&QuotientElement::one()).is_err());
    }

    #[test]
    fn w_cubed_vanishes() {
        let w = j_basis()[1];
        assert!((w * w * w).is_zero());
    }

    #[test]
    fn reduction_examples() {
        let s = j_space();
        assert_eq!(reduce_to_j(&minus_one(d(3, false))).unwrap(), s.parse("w+w2").unwrap());
        assert_eq!(reduce_to_j(&minus_one(d(-1, false))).unwrap(), s.parse("w+w2").unwrap());
        assert_eq!(reduce_to_j(&minus_one(d(2, true))).unwrap(), s.parse("w2x+v").unwrap());
        assert!(reduce_to_j(&GroupRing::element(d(1, false))).is_err());
    }

    #[test]
    fn both_reductions_agree_on_generators() {
        for n in -9..=9 {
            for x in [false, true] {
                let e = minus_one(d(n, x));
                assert_eq!(reduce_to_j(&e).unwrap(), reduce_to_j_via_algebra(&e).unwrap(), "y^{n} x^{x}");
            }
        }
    }

    #[test]
    fn oracle_entries() {
        let s = j_space();
        let action = oracle_j_action().unwrap();
        let col = |g: PairGenerator, j: usize| action.iter().find(|(h, _)| *h == g).unwrap().1.column(j);
        assert_eq!(col(PairGenerator::X1, 1), s.parse("wx+w2x").unwrap());
        assert_eq!(col(PairGenerator::YBar2, 0), s.parse("v+w+wx+w2x").unwrap());
        assert_eq!(col(PairGenerator::X2, 1), s.parse("wx").unwrap());
    }
}
