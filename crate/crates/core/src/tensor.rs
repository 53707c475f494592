//! Tensor powers `C[G]^{(x) k}` in expanded form.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;


use crate::error::{Error, Result};
use crate::group::{ActsOn, Group};
use crate::ring::GroupRing;
use crate::scalar::{Gf2, Scalar};

/// A finitely supported function from `k`-tuples of group elements to
/// coefficients, i.e. an element of the `k`-fold tensor power of `C[G]`
/// written in the basis of pure tensors `g_1 (x) ... (x) g_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor<G, C> {
    rank: usize,
    terms: BTreeMap<Vec<G>, C>,
}

impl<G: Group, C: Scalar> Tensor<G, C> {
    pub fn zero(rank: usize) -> Self {
        Tensor { rank, terms: BTreeMap::new() }
    }

    /// The unit of the rank-0 tensor algebra.
    pub fn unit() -> Self {
        let mut t = Self::zero(0);
        t.add_term(Vec::new(), C::one());
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<G>, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tuple: &[G]) -> C {
        self.terms.get(tuple).copied().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, tuple: Vec<G>, c: C) {
        assert_eq!(tuple.len(), self.rank, "tuple length must equal tensor rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
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

    /// Expands `u_1 (x) ... (x) u_k` over the product of the supports,
    /// without checking augmentation.
    pub fn pure(factors: &[GroupRing<G, C>]) -> Self {
        let mut acc = Self::unit();
        for u in factors {
            acc = acc.tensor(&Self::from_ring(u));
        }
        acc
    }

    /// Expands a pure tensor of augmentation-ideal elements.
    ///
    /// Rejects any factor with nonzero augmentation.
    pub fn expand(factors: &[GroupRing<G, C>]) -> Result<Self> {
        if let Some(i) = factors.iter().position(|u| !u.in_augmentation_ideal()) {
            return Err(Error::NotInAugmentationIdeal(format!(
                "factor {} ({}) has augmentation {}",
                i + 1,
                factors[i],
                factors[i].augmentation()
            )));
        }
        Ok(Self::pure(factors))
    }

    pub fn from_ring(u: &GroupRing<G, C>) -> Self {
        let mut t = Self::zero(1);
        for (g, &c) in u.terms() {
            t.add_term(vec![g.clone()], c);
        }
        t
    }

    /// The tensor product, concatenating tuples.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank + other.rank);
        for (s, &c) in &self.terms {
            for (t, &d) in &other.terms {
                let mut tuple = s.clone();
                tuple.extend(t.iter().cloned());
                out.add_term(tuple, c * d);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "cannot add tensors of different rank");
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.rank, other.rank, "cannot add tensors of different rank");
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), c);
        }
    }

    pub fn scale(&self, c: C) -> Self {
        let mut out = Self::zero(self.rank);
        for (t, &d) in &self.terms {
            out.add_term(t.clone(), c * d);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-C::one())
    }

    /// Diagonal action: `a` acts on every slot simultaneously.
    pub fn act<A: ActsOn<G>>(&self, a: &A) -> Self {
        let mut out = Self::zero(self.rank);
        for (t, &c) in &self.terms {
            out.add_term(t.iter().map(|g| a.act_on(g)).collect(), c);
        }
        out
    }

    /// Applies a group homomorphism slotwise.
    pub fn map_group<H: Group>(&self, f: impl Fn(&G) -> H) -> Tensor<H, C> {
        let mut out = Tensor::zero(self.rank);
        for (t, &c) in &self.terms {
            out.add_term(t.iter().map(&f).collect(), c);
        }
        out
    }

    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(C) -> D) -> Tensor<G, D> {
        let mut out = Tensor::zero(self.rank);
        for (t, &c) in &self.terms {
            out.add_term(t.clone(), f(c));
        }
        out
    }

    /// Checks membership in the `k`-th tensor power of the augmentation
    /// ideal: for every slot and every choice of the remaining coordinates,
    /// the coefficients along that slot sum to zero.
    pub fn slot_marginals_vanish(&self) -> bool {
        (0..self.rank).all(|slot| {
            let mut sums: HashMap<Vec<&G>, C> = HashMap::new();
            for (t, &c) in &self.terms {
                let key: Vec<&G> = t.iter().enumerate().filter(|(i, _)| *i != slot).map(|(_, g)| g).collect();
                *sums.entry(key).or_insert_with(C::zero) += c;
            }
            sums.values().all(|c| c.is_zero())
        })
    }
}

impl<G: Group> Tensor<G, i64> {
    pub fn to_gf2(&self) -> Tensor<G, Gf2> {
        self.map_coefficients(Gf2::from_i64)
    }
}

impl<G: Group, C: Scalar> fmt::Display for Tensor<G, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, &c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.split_sign();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let slots: Vec<String> = t.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", slots.join(" (x) "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{KleinElement, Pair};

    type F2G = GroupRing<KleinElement, Gf2>;

    fn k(b: i64, a: i64) -> KleinElement {
        KleinElement::new(b, a)
    }

    fn diff(g: KleinElement, h: KleinElement) -> F2G {
        &F2G::element(g) - &F2G::element(h)
    }

    #[test]
    fn rank_one_expansion() {
        let t = Tensor::expand(&[F2G::minus_one(KleinElement::y())]).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.coefficient(&[KleinElement::y()]), Gf2::ONE);
        assert_eq!(t.coefficient(&[k(0, 0)]), Gf2::ONE);
    }

    #[test]
    fn four_slot_expansion_has_sixteen_terms() {
        let one = k(0, 0);
        let yx = k(1, 1);
        let ybar = k(-1, 0);
        let t = Tensor::expand(&[diff(yx, one), diff(one, yx), diff(ybar, one), diff(one, ybar)]).unwrap();
        assert_eq!(t.len(), 16);
        assert!(t.terms().all(|(_, &c)| c == Gf2::ONE));
        assert!(t.slot_marginals_vanish());
    }

    #[test]
    fn zero_factor_gives_zero() {
        let t = Tensor::expand(&[F2G::minus_one(KleinElement::x()), F2G::zero()]).unwrap();
        assert!(t.is_zero());
        assert_eq!(t.rank(), 2);
    }

    #[test]
    fn rejects_non_augmentation_factor() {
        let err = Tensor::expand(&[F2G::element(KleinElement::x())]).unwrap_err();
        assert!(matches!(err, Error::NotInAugmentationIdeal(_)));
    }

    #[test]
    fn diagonal_left_multiplication() {
        let xm = F2G::minus_one(KleinElement::x());
        let t = Tensor::expand(&[xm.clone(), xm]).unwrap();
        let acted = t.act(&Pair::first(KleinElement::y()));
        let ym = diff(k(1, 1), KleinElement::y());
        assert_eq!(acted, Tensor::expand(&[ym.clone(), ym]).unwrap());
        assert_eq!(t.act(&Pair::<KleinElement>::identity()), t);
    }
}
