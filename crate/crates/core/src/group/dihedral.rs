use std::fmt;

use serde::{Deserialize, Serialize};

use super::klein::write_power;
use super::Group;

/// An element `y^n x^e` (`e` in {0, 1}) of the infinite dihedral group
/// `D = <x, y | yxy = x, x^2 = 1>`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct DihedralElement {
    y_exp: i64,
    x_flag: bool,
}

impl DihedralElement {
    pub const fn new(y_exp: i64, x_flag: bool) -> Self {
        DihedralElement { y_exp, x_flag }
    }

    pub fn y_exp(&self) -> i64 {
        self.y_exp
    }

    pub fn x_flag(&self) -> bool {
        self.x_flag
    }
}

impl Group for DihedralElement {
    fn identity() -> Self {
        DihedralElement::new(0, false)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let incoming = if self.x_flag { -rhs.y_exp } else { rhs.y_exp };
        DihedralElement::new(self.y_exp + incoming, self.x_flag ^ rhs.x_flag)
    }

    fn inv(&self) -> Self {
        if self.x_flag {
            *self
        } else {
            DihedralElement::new(-self.y_exp, false)
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.y_exp, self.x_flag) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "x"),
            (n, false) => write_power(f, "y", n),
            (n, true) => {
                write_power(f, "y", n)?;
                write!(f, "*x")
            }
        }
    }
}

/// An element of `Y = <y | y^2 = 1>`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CyclicTwoElement {
    flag: bool,
}

impl CyclicTwoElement {
    pub const fn new(flag: bool) -> Self {
        CyclicTwoElement { flag }
    }

    pub fn flag(&self) -> bool {
        self.flag
    }
}

impl Group for CyclicTwoElement {
    fn identity() -> Self {
        CyclicTwoElement::new(false)
    }

    fn mul(&self, rhs: &Self) -> Self {
        CyclicTwoElement::new(self.flag ^ rhs.flag)
    }

    fn inv(&self) -> Self {
        *self
    }
}

impl fmt::Display for CyclicTwoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.flag { "y" } else { "1" })
    }
}
