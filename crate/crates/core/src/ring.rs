//! Group rings `C[G]` with exact, finitely supported coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::group::{ActsOn, Group, Pair};
use crate::scalar::{Gf2, Scalar};

/// A finite sum `sum c_g g` with no zero coefficients stored.
///
/// Terms are kept in the group's normal-form order, so structural equality
/// is ring equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupRing<G, C> {
    terms: BTreeMap<G, C>,
}

impl<G: Group, C: Scalar> Default for GroupRing<G, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<G: Group, C: Scalar> GroupRing<G, C> {
    pub fn zero() -> Self {
        GroupRing { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::element(G::identity())
    }

    pub fn element(g: G) -> Self {
        Self::monomial(C::one(), g)
    }

    pub fn monomial(c: C, g: G) -> Self {
        let mut r = Self::zero();
        r.add_term(g, c);
        r
    }

    /// `g - 1`, the standard spanning element of the augmentation ideal.
    pub fn minus_one(g: G) -> Self {
        &Self::element(g) - &Self::one()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (G, C)>) -> Self {
        let mut r = Self::zero();
        for (g, c) in terms {
            r.add_term(g, c);
        }
        r
    }

    pub fn add_term(&mut self, g: G, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &G> {
        self.terms.keys()
    }

    pub fn coefficient(&self, g: &G) -> C {
        self.terms.get(g).copied().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The augmentation `sum c_g`.
    pub fn augmentation(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, &c| acc + c)
    }

    pub fn in_augmentation_ideal(&self) -> bool {
        self.augmentation().is_zero()
    }

    pub fn scale(&self, c: C) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, &d)| (g.clone(), c * d)))
    }

    pub fn left_mul(&self, a: &G) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, &c)| (a.mul(g), c)))
    }

    pub fn right_mul(&self, b: &G) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, &c)| (g.mul(b), c)))
    }

    /// Linear extension of a permutation action on the support.
    pub fn act<A: ActsOn<G>>(&self, a: &A) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, &c)| (a.act_on(g), c)))
    }

    /// `(a, b) . sum c_g g = sum c_g a g b^-1`.
    pub fn bi_act(&self, pair: &Pair<G>) -> Self {
        self.act(pair)
    }

    /// Pushes the support forward along a group homomorphism.
    pub fn map_group<H: Group>(&self, f: impl Fn(&G) -> H) -> GroupRing<H, C> {
        GroupRing::from_terms(self.terms.iter().map(|(g, &c)| (f(g), c)))
    }

    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(C) -> D) -> GroupRing<G, D> {
        GroupRing::from_terms(self.terms.iter().map(|(g, &c)| (g.clone(), f(c))))
    }
}

impl<G: Group> GroupRing<G, i64> {
    /// Reduction of coefficients modulo 2.
    pub fn to_gf2(&self) -> GroupRing<G, Gf2> {
        self.map_coefficients(Gf2::from_i64)
    }
}

impl<'a, G: Group, C: Scalar> Add<&'a GroupRing<G, C>> for &'a GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn add(self, rhs: &'a GroupRing<G, C>) -> GroupRing<G, C> {
        let mut out = self.clone();
        for (g, &c) in &rhs.terms {
            out.add_term(g.clone(), c);
        }
        out
    }
}

impl<'a, G: Group, C: Scalar> Sub<&'a GroupRing<G, C>> for &'a GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn sub(self, rhs: &'a GroupRing<G, C>) -> GroupRing<G, C> {
        let mut out = self.clone();
        for (g, &c) in &rhs.terms {
            out.add_term(g.clone(), -c);
        }
        out
    }
}

impl<'a, G: Group, C: Scalar> Mul<&'a GroupRing<G, C>> for &'a GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn mul(self, rhs: &'a GroupRing<G, C>) -> GroupRing<G, C> {
        let mut out = GroupRing::zero();
        for (g, &c) in &self.terms {
            for (h, &d) in &rhs.terms {
                out.add_term(g.mul(h), c * d);
            }
        }
        out
    }
}

impl<G: Group, C: Scalar> Neg for &GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn neg(self) -> GroupRing<G, C> {
        self.scale(-C::one())
    }
}

impl<G: Group, C: Scalar> Add for GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<G: Group, C: Scalar> Sub for GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<G: Group, C: Scalar> Mul for GroupRing<G, C> {
    type Output = GroupRing<G, C>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<G: Group, C: Scalar> Zero for GroupRing<G, C> {
    fn zero() -> Self {
        GroupRing::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<G: Group, C: Scalar> One for GroupRing<G, C> {
    fn one() -> Self {
        GroupRing::one()
    }
}

/// Renders as `-1 + y`, terms ascending in normal-form order.
impl<G: Group, C: Scalar> fmt::Display for GroupRing<G, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, &c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.split_sign();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag.is_one(), g.is_identity()) {
                (true, _) => write!(f, "{g}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{g}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::KleinElement;

    type ZG = GroupRing<KleinElement, i64>;

    fn k(b: i64, a: i64) -> KleinElement {
        KleinElement::new(b, a)
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let u = ZG::minus_one(k(1, 0));
        let v = &u - &u;
        assert!(v.is_zero());
        assert_eq!(v.len(), 0);
        let w = ZG::from_terms([(k(1, 0), 2), (k(1, 0), -2), (k(0, 1), 1)]);
        assert_eq!(w, ZG::element(k(0, 1)));
    }

    #[test]
    fn bi_action_examples() {
        let x_minus_1 = ZG::minus_one(KleinElement::x());
        let y = KleinElement::y();
        let left = x_minus_1.bi_act(&Pair::first(y));
        assert_eq!(left, &ZG::element(k(1, 1)) - &ZG::element(y));
        let right = x_minus_1.bi_act(&Pair::second(y));
        assert_eq!(right, &ZG::element(k(1, 1)) - &ZG::element(k(-1, 0)));
        let a = k(2, -3);
        assert_eq!(ZG::one().bi_act(&Pair::new(a, a)), ZG::one());
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let u = ZG::from_terms([(k(1, 1), 3), (k(0, -2), -1)]);
        let v = ZG::from_terms([(k(-1, 0), 5), (k(4, 1), 2)]);
        assert_eq!((&u * &v).augmentation(), u.augmentation() * v.augmentation());
    }

    #[test]
    fn parity_reduction() {
        let u = ZG::from_terms([(k(1, 0), 3), (k(0, 1), -2), (k(0, 0), -1)]);
        let r = u.to_gf2();
        assert_eq!(r, GroupRing::from_terms([(k(1, 0), Gf2::ONE), (k(0, 0), Gf2::ONE)]));
    }

    #[test]
    fn rendering() {
        let u = ZG::minus_one(KleinElement::y());
        assert_eq!(u.to_string(), "-1 + y");
        let v = ZG::from_terms([(k(1, 1), 2), (k(-1, 0), -1)]);
        assert_eq!(v.to_string(), "-y^-1 + 2*y*x");
        let w = GroupRing::<KleinElement, Gf2>::minus_one(KleinElement::y());
        assert_eq!(w.to_string(), "1 + y");
    }
}
