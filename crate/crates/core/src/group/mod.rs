//! Groups with canonical normal forms.

mod dihedral;
mod free;
mod klein;
mod pair;

pub use dihedral::{CyclicTwoElement, DihedralElement};
pub use free::FreeWord;
pub use klein::KleinElement;
pub use pair::{Pair, PairGenerator};

use std::fmt::{Debug, Display};
use std::hash::Hash;

/// A group whose elements are stored in a unique normal form, so that
/// structural equality is group equality.
pub trait Group: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static {
    fn identity() -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn inv(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Sign by which the element acts on the orientation module, when the
    /// group carries one.
    fn orientation_sign(&self) -> Option<i64> {
        None
    }
}

/// A left action of `Self` on the elements of `H` (by permutations).
///
/// Linear extension gives the module structures on group rings and
/// their tensor powers.
pub trait ActsOn<H> {
    fn act_on(&self, h: &H) -> H;
}

macro_rules! self_acting {
    ($($t:ty),*) => {
        $(
            impl ActsOn<$t> for $t {
                fn act_on(&self, h: &$t) -> $t {
                    self.mul(h)
                }
            }
        )*
    };
}

self_acting!(KleinElement, DihedralElement, CyclicTwoElement, FreeWord);
