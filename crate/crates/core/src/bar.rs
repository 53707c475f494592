//! The bar resolution `B_*(pi)` and the cochain calculus on it.
//!
//! Chains are finitely supported over symbols `g [a_1 | ... | a_n]` with a
//! group element `g` acting on the left, so `B_n(pi)` is modelled as the free
//! `Z[pi]`-module it is. The resolution is unnormalized: identity entries
//! are allowed.
//!
//! Cochains are rules `[a_1 | ... | a_n] -> M` on basis symbols, extended
//! `Z[pi]`-linearly. The value modules are tensor powers of group rings with
//! the diagonal action, which covers the canonical class `nu` and all of its
//! cup powers.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ActsOn, Group, Pair};
use crate::ring::GroupRing;
use crate::scalar::{Gf2, Scalar};
use crate::tensor::Tensor;

/// A basis symbol `[a_1 | ... | a_n]`.
pub type BarTuple<G> = Vec<G>;

/// An element of `B_n(pi)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarChain<G, C> {
    degree: usize,
    terms: BTreeMap<(BarTuple<G>, G), C>,
}

impl<G: Group, C: Scalar> BarChain<G, C> {
    pub fn zero(degree: usize) -> Self {
        BarChain { degree, terms: BTreeMap::new() }
    }

    /// The basis symbol with coefficient `1`.
    pub fn basis(tuple: BarTuple<G>) -> Self {
        let mut c = Self::zero(tuple.len());
        c.add_term(G::identity(), tuple, C::one());
        c
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (C, G, BarTuple<G>)>) -> Self {
        let mut c = Self::zero(degree);
        for (coeff, g, t) in terms {
            c.add_term(g, t, coeff);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(coefficient, group element, tuple)`.
    pub fn terms(&self) -> impl Iterator<Item = (C, &G, &BarTuple<G>)> {
        self.terms.iter().map(|((t, g), &c)| (c, g, t))
    }

    pub fn add_term(&mut self, g: G, tuple: BarTuple<G>, c: C) {
        assert_eq!(tuple.len(), self.degree, "tuple length must equal chain degree");
        if c.is_zero() {
            return;
        }
        match self.terms.entry((tuple, g)) {
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

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (c, g, t) in other.terms() {
            out.add_term(g.clone(), t.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: C) -> Self {
        let mut out = Self::zero(self.degree);
        for (c, g, t) in self.terms() {
            out.add_term(g.clone(), t.clone(), k * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-C::one()))
    }

    /// Left multiplication by a group element.
    pub fn act(&self, a: &G) -> Self {
        let mut out = Self::zero(self.degree);
        for (c, g, t) in self.terms() {
            out.add_term(a.mul(g), t.clone(), c);
        }
        out
    }

    /// Left multiplication by a group-ring element.
    pub fn ring_mul(&self, r: &GroupRing<G, C>) -> Self {
        let mut out = Self::zero(self.degree);
        for (a, &k) in r.terms() {
            for (c, g, t) in self.terms() {
                out.add_term(a.mul(g), t.clone(), k * c);
            }
        }
        out
    }

    /// `d[a_1|...|a_n] = a_1 [a_2|...|a_n] + sum_i (-1)^i [...|a_i a_{i+1}|...]
    /// + (-1)^n [a_1|...|a_{n-1}]`, extended linearly.
    pub fn boundary(&self) -> Result<Self> {
        let n = self.degree;
        if n == 0 {
            return Err(Error::BoundaryOfDegreeZero);
        }
        let mut out = Self::zero(n - 1);
        for (c, g, t) in self.terms() {
            out.add_term(g.mul(&t[0]), t[1..].to_vec(), c);
            for i in 1..n {
                let mut face = t[..i - 1].to_vec();
                face.push(t[i - 1].mul(&t[i]));
                face.extend_from_slice(&t[i + 1..]);
                out.add_term(g.clone(), face, alternating::<C>(i) * c);
            }
            out.add_term(g.clone(), t[..n - 1].to_vec(), alternating::<C>(n) * c);
        }
        Ok(out)
    }

    /// Pushes forward along a group homomorphism applied to every entry.
    pub fn map_group<H: Group>(&self, f: impl Fn(&G) -> H) -> BarChain<H, C> {
        let mut out = BarChain::zero(self.degree);
        for (c, g, t) in self.terms() {
            out.add_term(f(g), t.iter().map(&f).collect(), c);
        }
        out
    }
}

pub(crate) fn alternating<C: Scalar>(i: usize) -> C {
    if i % 2 == 0 {
        C::one()
    } else {
        -C::one()
    }
}

fn render_tuple<G: fmt::Display>(t: &[G]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join("|"))
}

/// Renders as `+[y|x] +[y*x|y]`, terms sorted by tuple rendering.
impl<G: Group, C: Scalar> fmt::Display for BarChain<G, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut rendered: Vec<(String, String)> = self
            .terms()
            .map(|(c, g, t)| {
                let (neg, mag) = c.split_sign();
                let mut s = String::from(if neg { "-" } else { "+" });
                if !mag.is_one() {
                    s.push_str(&format!("{mag}*"));
                }
                if !g.is_identity() {
                    s.push_str(&format!("{g} "));
                }
                let tuple = render_tuple(t);
                s.push_str(&tuple);
                (tuple, s)
            })
            .collect();
        rendered.sort();
        let parts: Vec<String> = rendered.into_iter().map(|(_, s)| s).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// One summand `[a_1|...|a_i] (x) (a_1...a_i)[a_{i+1}|...|a_n]` of the
/// Alexander-Whitney diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AwTerm<G> {
    pub left: BarTuple<G>,
    pub shift: G,
    pub right: BarTuple<G>,
}

pub fn aw_diagonal<G: Group>(tuple: &[G]) -> Vec<AwTerm<G>> {
    let mut shift = G::identity();
    let mut out = Vec::with_capacity(tuple.len() + 1);
    for i in 0..=tuple.len() {
        if i > 0 {
            shift = shift.mul(&tuple[i - 1]);
        }
        out.push(AwTerm { left: tuple[..i].to_vec(), shift: shift.clone(), right: tuple[i..].to_vec() });
    }
    out
}

/// An element of `B_*(pi) (x) B_*(pi)`, over symbols
/// `g[L] (x) h[R]`, not necessarily homogeneous.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorChain<G, C> {
    terms: BTreeMap<(G, BarTuple<G>, G, BarTuple<G>), C>,
}

impl<G: Group, C: Scalar> TensorChain<G, C> {
    pub fn zero() -> Self {
        TensorChain { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (G, BarTuple<G>, G, BarTuple<G>), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    /// `d (x) 1 + (-1)^{|L|} 1 (x) d`, with `d = 0` on degree 0.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero();
        for ((g, l, h, r), &c) in &self.terms {
            if !l.is_empty() {
                let dl = BarChain::from_terms(l.len(), [(c, g.clone(), l.clone())]).boundary().expect("degree > 0");
                for (k, g2, l2) in dl.terms() {
                    out.add_term((g2.clone(), l2.clone(), h.clone(), r.clone()), k);
                }
            }
            if !r.is_empty() {
                let sign = alternating::<C>(l.len());
                let dr = BarChain::from_terms(r.len(), [(c, h.clone(), r.clone())]).boundary().expect("degree > 0");
                for (k, h2, r2) in dr.terms() {
                    out.add_term((g.clone(), l.clone(), h2.clone(), r2.clone()), sign * k);
                }
            }
        }
        out
    }
}

/// The Alexander-Whitney diagonal on a chain, `Z[pi]`-linear for the
/// diagonal action.
pub fn aw_chain<G: Group, C: Scalar>(chain: &BarChain<G, C>) -> TensorChain<G, C> {
    let mut out = TensorChain::zero();
    for (c, g, t) in chain.terms() {
        for term in aw_diagonal(t) {
            out.add_term((g.clone(), term.left, g.mul(&term.shift), term.right), c);
        }
    }
    out
}

/// The `(i, n - i)` shuffles of `a (x) b`, as signed tuples over `pi x pi`,
/// enumerated with the positions of the `a`-entries in lexicographic order.
pub fn ez_terms<G: Group>(a: &[G], b: &[G]) -> Vec<(i64, BarTuple<Pair<G>>)> {
    let (i, n) = (a.len(), a.len() + b.len());
    let mut out = Vec::new();
    for positions in combinations(n, i) {
        // sign of the shuffle = (-1)^(number of (b before a) pairs)
        let inversions: usize = positions.iter().enumerate().map(|(k, &p)| p - k).sum();
        let mut tuple = Vec::with_capacity(n);
        let (mut ai, mut bi) = (0, 0);
        for slot in 0..n {
            if positions.contains(&slot) {
                tuple.push(Pair::first(a[ai].clone()));
                ai += 1;
            } else {
                tuple.push(Pair::second(b[bi].clone()));
                bi += 1;
            }
        }
        out.push((if inversions % 2 == 0 { 1 } else { -1 }, tuple));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            if n - p < k - cur.len() {
                break;
            }
            cur.push(p);
            go(p + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `EZ([a] (x) [b])` as a chain over `pi x pi`.
pub fn ez_map<G: Group, C: Scalar>(a: &[G], b: &[G]) -> BarChain<Pair<G>, C> {
    BarChain::from_terms(
        a.len() + b.len(),
        ez_terms(a, b).into_iter().map(|(s, t)| (C::from_i64(s), Pair::identity(), t)),
    )
}

/// Bilinear extension of `EZ`: `g[a] (x) h[b] -> (g, h) EZ([a] (x) [b])`.
pub fn ez_chain<G: Group, C: Scalar>(left: &BarChain<G, C>, right: &BarChain<G, C>) -> BarChain<Pair<G>, C> {
    let mut out = BarChain::zero(left.degree() + right.degree());
    for (c, g, a) in left.terms() {
        for (d, h, b) in right.terms() {
            let shift = Pair::new(g.clone(), h.clone());
            for (s, t) in ez_terms(a, b) {
                out.add_term(shift.clone(), t, C::from_i64(s) * c * d);
            }
        }
    }
    out
}

type Rule<G, H, C> = dyn Fn(&[G]) -> Tensor<H, C> + Send + Sync;

/// A degree-`n` cochain on `B_*(pi)` with values in the rank-`r` tensor
/// power of `C[H]`, on which `pi` acts diagonally through `ActsOn`.
#[derive(Clone)]
pub struct Cochain<G, H, C> {
    degree: usize,
    rank: usize,
    rule: Arc<Rule<G, H, C>>,
}

impl<G, H, C> fmt::Debug for Cochain<G, H, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain").field("degree", &self.degree).field("rank", &self.rank).finish()
    }
}

impl<G, H, C> Cochain<G, H, C>
where
    G: Group + ActsOn<H>,
    H: Group,
    C: Scalar,
{
    pub fn new(degree: usize, rank: usize, rule: impl Fn(&[G]) -> Tensor<H, C> + Send + Sync + 'static) -> Self {
        Cochain { degree, rank, rule: Arc::new(rule) }
    }

    pub fn zero(degree: usize, rank: usize) -> Self {
        Self::new(degree, rank, move |_| Tensor::zero(rank))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Value on a basis symbol.
    pub fn apply(&self, tuple: &[G]) -> Tensor<H, C> {
        assert_eq!(tuple.len(), self.degree, "cochain applied to a tuple of the wrong degree");
        (self.rule)(tuple)
    }

    /// `Z[pi]`-linear extension: `sum c g[t] -> sum c g . alpha([t])`.
    pub fn apply_chain(&self, chain: &BarChain<G, C>) -> Result<Tensor<H, C>> {
        if chain.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, actual: chain.degree() });
        }
        let mut out = Tensor::zero(self.rank);
        for (c, g, t) in chain.terms() {
            out.add_assign(&self.apply(t).act(g).scale(c));
        }
        Ok(out)
    }

    /// `delta_n alpha = (-1)^{n+1} alpha . d_{n+1}`.
    pub fn coboundary(&self) -> Self {
        let this = self.clone();
        let sign = alternating::<C>(self.degree + 1);
        Self::new(self.degree + 1, self.rank, move |t| {
            let d = BarChain::basis(t.to_vec()).boundary().expect("degree >= 1");
            this.apply_chain(&d).expect("degrees agree").scale(sign)
        })
    }

    /// `alpha u beta = (-1)^{i(n-i)} (alpha (x) beta) . Delta`; only the
    /// `(i, n - i)` summand of the diagonal pairs nontrivially.
    pub fn cup(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let (i, j) = (self.degree, other.degree);
        let sign = alternating::<C>(i * j);
        Self::new(i + j, self.rank + other.rank, move |t| {
            let shift = t[..i].iter().fold(G::identity(), |acc, g| acc.mul(g));
            a.apply(&t[..i]).tensor(&b.apply(&t[i..]).act(&shift)).scale(sign)
        })
    }
}

/// `nu([(a, b)]) = a b^-1 - 1`.
pub fn nu_value<G: Group, C: Scalar>(p: &Pair<G>) -> GroupRing<G, C> {
    GroupRing::minus_one(p.left.mul(&p.right.inv()))
}

/// The canonical degree-1 cocycle `nu : B_1(pi x pi) -> I(pi)`.
pub fn nu_cocycle<G: Group, C: Scalar>() -> Cochain<Pair<G>, G, C> {
    Cochain::new(1, 1, |t: &[Pair<G>]| Tensor::from_ring(&nu_value(&t[0])))
}

/// The closed form of the `n`-th power of `nu` on `[(a_1,b_1)|...|(a_n,b_n)]`:
/// the sign `(-1)^{n(n-1)/2}` and the factors
/// `(a_1...a_{i-1}) (a_i b_i^-1 - 1) (b_{i-1}^-1 ... b_1^-1)`.
pub fn nu_power_factors<G: Group, C: Scalar>(tuple: &[Pair<G>]) -> (C, Vec<GroupRing<G, C>>) {
    let n = tuple.len();
    let sign = alternating::<C>(n * n.saturating_sub(1) / 2);
    let mut prefix = Pair::<G>::identity();
    let mut factors = Vec::with_capacity(n);
    for p in tuple {
        factors.push(nu_value::<G, C>(p).bi_act(&prefix));
        prefix = prefix.mul(p);
    }
    (sign, factors)
}

pub fn nu_power_value<G: Group, C: Scalar>(tuple: &[Pair<G>]) -> Tensor<G, C> {
    let (sign, factors) = nu_power_factors::<G, C>(tuple);
    Tensor::pure(&factors).scale(sign)
}

/// `nu^n` as a cochain, by the closed form.
pub fn nu_power<G: Group, C: Scalar>(n: usize) -> Cochain<Pair<G>, G, C> {
    Cochain::new(n, n, |t: &[Pair<G>]| nu_power_value(t))
}

/// `((nu u nu) u nu) u ...`, `n` factors, by the cup product.
pub fn nu_iterated_cup<G: Group, C: Scalar>(n: usize) -> Cochain<Pair<G>, G, C> {
    assert!(n >= 1);
    let nu = nu_cocycle::<G, C>();
    let mut acc = nu.clone();
    for _ in 1..n {
        acc = acc.cup(&nu);
    }
    acc
}

/// Coefficient modules for chains with coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CoefficientModule {
    /// `Z/2` with trivial action.
    TrivialGf2,
    /// The orientation module `Z~`: `g . t = w(g) t` with `w` the orientation character.
    OrientationZtilde,
}

impl CoefficientModule {
    pub fn name(&self) -> &'static str {
        match self {
            CoefficientModule::TrivialGf2 => "Z/2",
            CoefficientModule::OrientationZtilde => "Z~",
        }
    }

    fn scalar_of<G: Group>(&self, g: &G) -> Result<i64> {
        match self {
            CoefficientModule::TrivialGf2 => Ok(1),
            CoefficientModule::OrientationZtilde => g.orientation_sign().ok_or(Error::ModuleMismatch(self.name())),
        }
    }
}

/// A chain tensored with a coefficient module, as integer coefficients on
/// basis tuples (reduced mod 2 for `Z/2`).
///
/// Uses `g[t] (x) m = [t] (x) g^-1 m`; both modules have `g^-1` acting
/// like `g`.
pub fn with_coefficients<G: Group>(
    chain: &BarChain<G, i64>,
    module: CoefficientModule,
) -> Result<BTreeMap<BarTuple<G>, i64>> {
    let mut out: BTreeMap<BarTuple<G>, i64> = BTreeMap::new();
    for (c, g, t) in chain.terms() {
        *out.entry(t.clone()).or_insert(0) += c * module.scalar_of(g)?;
    }
    if module == CoefficientModule::TrivialGf2 {
        out.values_mut().for_each(|c| *c = c.rem_euclid(2));
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Whether `chain (x)_pi M` is a cycle.
pub fn cycle_check<G: Group>(chain: &BarChain<G, i64>, module: CoefficientModule) -> Result<bool> {
    if chain.degree() == 0 {
        return Ok(true);
    }
    Ok(with_coefficients(&chain.boundary()?, module)?.is_empty())
}

/// Value of a cochain on a chain with coefficients, as a representative
/// in the coinvariants `M_values (x)_pi M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evaluation<H> {
    Gf2(Tensor<H, Gf2>),
    Twisted(Tensor<H, i64>),
}

impl<H: Group> Evaluation<H> {
    pub fn is_zero(&self) -> bool {
        match self {
            Evaluation::Gf2(t) => t.is_zero(),
            Evaluation::Twisted(t) => t.is_zero(),
        }
    }
}

/// Applies `alpha (x) id` to `chain (x)_pi M`, moving each coefficient
/// element across the tensor sign: `alpha(g[t]) (x) m = alpha([t]) (x) g^-1 m`.
pub fn evaluate<G, H>(
    alpha: &Cochain<G, H, i64>,
    chain: &BarChain<G, i64>,
    module: CoefficientModule,
) -> Result<Evaluation<H>>
where
    G: Group + ActsOn<H>,
    H: Group,
{
    if chain.degree() != alpha.degree() {
        return Err(Error::DegreeMismatch { expected: alpha.degree(), actual: chain.degree() });
    }
    let mut acc = Tensor::zero(alpha.rank());
    for (t, c) in with_coefficients(chain, module)? {
        acc.add_assign(&alpha.apply(&t).scale(c));
    }
    Ok(match module {
        CoefficientModule::TrivialGf2 => Evaluation::Gf2(acc.to_gf2()),
        CoefficientModule::OrientationZtilde => Evaluation::Twisted(acc),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::KleinElement;

    type K = KleinElement;
    type ZG = GroupRing<K, i64>;

    fn k(b: i64, a: i64) -> K {
        K::new(b, a)
    }

    fn kappa() -> BarChain<K, i64> {
        let (x, y) = (K::x(), K::y());
        BarChain::basis(vec![y, x]).add(&BarChain::basis(vec![y.mul(&x), y]))
    }

    #[test]
    fn boundary_of_degree_one() {
        let a = k(2, 1);
        let d = BarChain::<K, i64>::basis(vec![a]).boundary().unwrap();
        let expected = BarChain::from_terms(0, [(1, a, vec![]), (-1, K::identity(), vec![])]);
        assert_eq!(d, expected);
    }

    #[test]
    fn boundary_rejects_degree_zero() {
        assert!(matches!(BarChain::<K, i64>::basis(vec![]).boundary(), Err(Error::BoundaryOfDegreeZero)));
    }

    #[test]
    fn kappa_boundary_in_bar_one() {
        // d(kappa) = (y - 1)[x] + (1 + yx)[y]
        let (x, y) = (K::x(), K::y());
        let lhs = kappa().boundary().unwrap();
        let rhs = BarChain::basis(vec![x])
            .ring_mul(&ZG::minus_one(y))
            .add(&BarChain::basis(vec![y]).ring_mul(&(&ZG::one() + &ZG::element(k(1, 1)))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kappa_is_a_cycle_with_both_modules() {
        assert!(cycle_check(&kappa(), CoefficientModule::TrivialGf2).unwrap());
        assert!(cycle_check(&kappa(), CoefficientModule::OrientationZtilde).unwrap());
        // but not over Z with trivial action: [y|x] alone is not closed
        let single = BarChain::<K, i64>::basis(vec![K::y(), K::x()]);
        assert!(!cycle_check(&single, CoefficientModule::TrivialGf2).unwrap());
    }

    #[test]
    fn diagonal_low_degrees() {
        assert_eq!(aw_diagonal::<K>(&[]), vec![AwTerm { left: vec![], shift: K::identity(), right: vec![] }]);
        let a = k(1, 1);
        let d = aw_diagonal(&[a]);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], AwTerm { left: vec![], shift: K::identity(), right: vec![a] });
        assert_eq!(d[1], AwTerm { left: vec![a], shift: a, right: vec![] });
    }

    #[test]
    fn diagonal_is_a_chain_map_on_a_fixed_tuple() {
        let t = vec![k(1, 0), k(0, 1), k(-2, 1)];
        let c = BarChain::<K, i64>::basis(t);
        let lhs = aw_chain(&c.boundary().unwrap());
        let rhs = aw_chain(&c).boundary();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shuffle_examples() {
        let (a, b) = (k(1, 0), k(0, 1));
        let terms = ez_terms(&[a], &[b]);
        assert_eq!(terms, vec![(1, vec![Pair::first(a), Pair::second(b)]), (-1, vec![Pair::second(b), Pair::first(a)])]);
        assert_eq!(ez_terms::<K>(&[], &[b]), vec![(1, vec![Pair::second(b)])]);
        assert_eq!(ez_terms(&[a, a], &[b, b]).len(), 6);
    }

    #[test]
    fn nu_examples() {
        let y = K::y();
        assert_eq!(nu_value::<K, i64>(&Pair::first(y)), ZG::minus_one(y));
        let a = k(3, -1);
        assert!(nu_value::<K, i64>(&Pair::new(a, a)).is_zero());
        let v = nu_value::<K, i64>(&Pair::new(k(1, 1), y));
        assert_eq!(v, ZG::minus_one(k(2, 1)));
    }

    #[test]
    fn nu_power_first_table_row() {
        // [y1|x1|y2|x2] -> (y-1)(x)(yx-y)(x)(y^2x-yx)(x)(1-y^2x)
        let (x, y) = (K::x(), K::y());
        let t = [Pair::first(y), Pair::first(x), Pair::second(y), Pair::second(x)];
        let (sign, f) = nu_power_factors::<K, i64>(&t);
        assert_eq!(sign, 1);
        assert_eq!(f[0], ZG::minus_one(y));
        assert_eq!(f[1], &ZG::element(k(1, 1)) - &ZG::element(y));
        assert_eq!(f[2], &ZG::element(k(2, 1)) - &ZG::element(k(1, 1)));
        assert_eq!(f[3], &ZG::one() - &ZG::element(k(2, 1)));
    }

    #[test]
    fn nu_power_one_is_nu() {
        let p = Pair::new(k(2, 1), k(-1, 3));
        assert_eq!(nu_power::<K, i64>(1).apply(&[p]), nu_cocycle::<K, i64>().apply(&[p]));
    }

    #[test]
    fn cup_square_matches_closed_form() {
        let t = [Pair::first(K::y()), Pair::first(K::x())];
        assert_eq!(nu_iterated_cup::<K, i64>(2).apply(&t), nu_power::<K, i64>(2).apply(&t));
    }

    #[test]
    fn cup_with_zero_is_zero() {
        let nu = nu_cocycle::<K, i64>();
        let z = Cochain::zero(1, 1);
        let t = [Pair::first(K::y()), Pair::second(K::x())];
        assert!(nu.cup(&z).apply(&t).is_zero());
        assert!(z.cup(&nu).apply(&t).is_zero());
    }

    #[test]
    fn nu_is_a_cocycle_on_a_fixed_tuple() {
        let t = [Pair::new(k(1, 1), k(-2, 0)), Pair::new(k(0, 3), k(1, -1))];
        assert!(nu_cocycle::<K, i64>().coboundary().apply(&t).is_zero());
    }

    #[test]
    fn evaluate_zero_chain() {
        let z = BarChain::<Pair<K>, i64>::zero(4);
        let v = evaluate(&nu_power::<K, i64>(4), &z, CoefficientModule::TrivialGf2).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn evaluate_rejects_missing_orientation() {
        use crate::group::DihedralElement;
        let p = Pair::first(DihedralElement::new(1, false));
        let c = BarChain::<Pair<DihedralElement>, i64>::basis(vec![p]);
        let err = evaluate(&nu_cocycle::<DihedralElement, i64>(), &c, CoefficientModule::OrientationZtilde);
        assert!(matches!(err, Err(Error::ModuleMismatch(_))));
        let err = evaluate(&nu_power::<DihedralElement, i64>(2), &c, CoefficientModule::TrivialGf2);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn rendering_of_kappa() {
        assert_eq!(kappa().to_string(), "+[y*x|y] +[y|x]");
    }
}
