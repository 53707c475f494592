use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CyclicTwoElement, DihedralElement, Group};

/// An element `y^b x^a` of the Klein bottle group `<x, y | yxy = x>`.
///
/// Since `x y = y^-1 x`, every element has a unique spelling with the
/// `y`-power first. The derived ordering is lexicographic on `(b, a)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct KleinElement {
    y_exp: i64,
    x_exp: i64,
}

impl KleinElement {
    pub const fn new(y_exp: i64, x_exp: i64) -> Self {
        KleinElement { y_exp, x_exp }
    }

    pub const fn x() -> Self {
        KleinElement::new(0, 1)
    }

    pub const fn y() -> Self {
        KleinElement::new(1, 0)
    }

    pub fn y_exp(&self) -> i64 {
        self.y_exp
    }

    pub fn x_exp(&self) -> i64 {
        self.x_exp
    }

    /// Image under `G -> D`, the quotient by `x^2`.
    pub fn to_dihedral(&self) -> DihedralElement {
        DihedralElement::new(self.y_exp, self.x_exp.rem_euclid(2) == 1)
    }

    /// Image under `G -> Y = <y | y^2>`, obtained by killing `x`.
    pub fn to_cyclic_two(&self) -> CyclicTwoElement {
        CyclicTwoElement::new(self.y_exp.rem_euclid(2) == 1)
    }
}

fn sign_of_x_power(a: i64) -> i64 {
    if a.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl Group for KleinElement {
    fn identity() -> Self {
        KleinElement::new(0, 0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (y^b x^a)(y^d x^c) = y^(b + (-1)^a d) x^(a + c)
        KleinElement::new(
            self.y_exp + sign_of_x_power(self.x_exp) * rhs.y_exp,
            self.x_exp + rhs.x_exp,
        )
    }

    fn inv(&self) -> Self {
        KleinElement::new(-sign_of_x_power(self.x_exp) * self.y_exp, -self.x_exp)
    }

    fn orientation_sign(&self) -> Option<i64> {
        Some(sign_of_x_power(self.x_exp))
    }
}

pub(crate) fn write_power(f: &mut fmt::Formatter<'_>, base: &str, exp: i64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{base}")
    } else {
        write!(f, "{base}^{exp}")
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.y_exp, self.x_exp) {
            (0, 0) => write!(f, "1"),
            (b, 0) => write_power(f, "y", b),
            (0, a) => write_power(f, "x", a),
            (b, a) => {
                write_power(f, "y", b)?;
                write!(f, "*")?;
                write_power(f, "x", a)
            }
        }
    }
}
