//! Coefficient scalars for group rings, tensors and matrices.
//!
//! Everything in the crate is generic over [`Scalar`]; the two instances
//! that the certification actually uses are `i64` (signed integral
//! arithmetic, needed for the orientation-twisted cycle checks) and [`Gf2`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// An exact commutative coefficient ring.
pub trait Scalar:
    Copy
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + Send
    + Sync
    + 'static
{
    /// The image of an integer under the unique ring map from `Z`.
    fn from_i64(n: i64) -> Self;

    /// Splits into (is-negative, magnitude) for rendering.
    fn split_sign(self) -> (bool, Self) {
        (false, self)
    }
}

/// A scalar ring in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }

    fn split_sign(self) -> (bool, Self) {
        (self < 0, self.abs())
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Gf2(bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn new(bit: bool) -> Self {
        Gf2(bit)
    }

    pub fn bit(self) -> bool {
        self.0
    }
}

impl Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl From<bool> for Gf2 {
    fn from(b: bool) -> Self {
        Gf2(b)
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }

    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

impl Add for Gf2 {
    type Output = Gf2;

    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf2 {
    fn add_assign(&mut self, rhs: Gf2) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Gf2 {
    type Output = Gf2;

    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;

    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;

    fn neg(self) -> Gf2 {
        self
    }
}

impl Scalar for Gf2 {
    fn from_i64(n: i64) -> Self {
        Gf2(n.rem_euclid(2) == 1)
    }
}

impl Field for Gf2 {
    fn inverse(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_tables() {
        assert_eq!(Gf2::ONE + Gf2::ONE, Gf2::ZERO);
        assert_eq!(Gf2::ONE * Gf2::ONE, Gf2::ONE);
        assert_eq!(Gf2::ONE * Gf2::ZERO, Gf2::ZERO);
        assert_eq!(-Gf2::ONE, Gf2::ONE);
        assert_eq!(Gf2::ZERO.inverse(), None);
    }

    #[test]
    fn reduction_from_integers() {
        assert_eq!(Gf2::from_i64(-3), Gf2::ONE);
        assert_eq!(Gf2::from_i64(4), Gf2::ZERO);
        assert_eq!((-5i64).split_sign(), (true, 5));
    }
}
