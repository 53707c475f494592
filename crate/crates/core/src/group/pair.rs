use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ActsOn, DihedralElement, Group, KleinElement};

/// An element `(a, b)` of the direct product `pi x pi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Pair<G> {
    pub left: G,
    pub right: G,
}

impl<G: Group> Pair<G> {
    pub fn new(left: G, right: G) -> Self {
        Pair { left, right }
    }

    /// `(g, 1)`
    pub fn first(g: G) -> Self {
        Pair::new(g, G::identity())
    }

    /// `(1, g)`
    pub fn second(g: G) -> Self {
        Pair::new(G::identity(), g)
    }

    pub fn map<H: Group>(&self, f: impl Fn(&G) -> H) -> Pair<H> {
        Pair::new(f(&self.left), f(&self.right))
    }
}

impl<G: Group> Group for Pair<G> {
    fn identity() -> Self {
        Pair::new(G::identity(), G::identity())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Pair::new(self.left.mul(&rhs.left), self.right.mul(&rhs.right))
    }

    fn inv(&self) -> Self {
        Pair::new(self.left.inv(), self.right.inv())
    }

    fn orientation_sign(&self) -> Option<i64> {
        Some(self.left.orientation_sign()? * self.right.orientation_sign()?)
    }
}

/// The bi-action `(a, b) . g = a g b^-1` of `pi x pi` on `pi`.
impl<G: Group> ActsOn<G> for Pair<G> {
    fn act_on(&self, h: &G) -> G {
        self.left.mul(h).mul(&self.right.inv())
    }
}

impl<G: fmt::Display> fmt::Display for Pair<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// The six generators of `D x D` used to present its action on the
/// finite quotient modules, in the row order of the action tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum PairGenerator {
    X1,
    X2,
    Y1,
    Y2,
    YBar1,
    YBar2,
}

impl PairGenerator {
    pub const ALL: [PairGenerator; 6] = [
        PairGenerator::X1,
        PairGenerator::X2,
        PairGenerator::Y1,
        PairGenerator::Y2,
        PairGenerator::YBar1,
        PairGenerator::YBar2,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            PairGenerator::X1 => "(x,1)",
            PairGenerator::X2 => "(1,x)",
            PairGenerator::Y1 => "(y,1)",
            PairGenerator::Y2 => "(1,y)",
            PairGenerator::YBar1 => "(ybar,1)",
            PairGenerator::YBar2 => "(1,ybar)",
        }
    }

    /// A lift to `G x G`.
    pub fn to_klein_pair(&self) -> Pair<KleinElement> {
        let x = KleinElement::x();
        let y = KleinElement::y();
        match self {
            PairGenerator::X1 => Pair::first(x),
            PairGenerator::X2 => Pair::second(x),
            PairGenerator::Y1 => Pair::first(y),
            PairGenerator::Y2 => Pair::second(y),
            PairGenerator::YBar1 => Pair::first(y.inv()),
            PairGenerator::YBar2 => Pair::second(y.inv()),
        }
    }

    pub fn to_dihedral_pair(&self) -> Pair<DihedralElement> {
        self.to_klein_pair().map(KleinElement::to_dihedral)
    }

    /// The generator acting as the inverse of this one.
    pub fn inverse(&self) -> PairGenerator {
        match self {
            PairGenerator::X1 => PairGenerator::X1,
            PairGenerator::X2 => PairGenerator::X2,
            PairGenerator::Y1 => PairGenerator::YBar1,
            PairGenerator::Y2 => PairGenerator::YBar2,
            PairGenerator::YBar1 => PairGenerator::Y1,
            PairGenerator::YBar2 => PairGenerator::Y2,
        }
    }
}

impl fmt::Display for PairGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PairGenerator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PairGenerator::ALL
            .into_iter()
            .find(|g| g.label() == s.trim())
            .ok_or_else(|| format!("unknown generator label {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bi_action_on_elements() {
        let x = KleinElement::x();
        let y = KleinElement::y();
        assert_eq!(Pair::first(y).act_on(&x), y.mul(&x));
        // x y^-1 = y x
        assert_eq!(Pair::second(y).act_on(&x), KleinElement::new(1, 1));
        let a = KleinElement::new(3, -1);
        assert!(Pair::new(a, a).act_on(&KleinElement::identity()).is_identity());
    }

    #[test]
    fn left_and_right_factors_commute() {
        let x1 = Pair::first(KleinElement::x());
        let y2 = Pair::second(KleinElement::y());
        assert_eq!(x1.mul(&y2), y2.mul(&x1));
    }

    #[test]
    fn generator_labels_round_trip() {
        for g in PairGenerator::ALL {
            assert_eq!(g.label().parse::<PairGenerator>().unwrap(), g);
            let p = g.to_dihedral_pair();
            assert!(p.mul(&g.inverse().to_dihedral_pair()).is_identity());
        }
    }

    #[test]
    fn orientation_of_pairs() {
        let p = Pair::new(KleinElement::x(), KleinElement::new(2, 1));
        assert_eq!(p.orientation_sign(), Some(1));
        assert_eq!(Pair::first(KleinElement::x()).orientation_sign(), Some(-1));
    }
}
