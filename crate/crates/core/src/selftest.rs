//! Seeded randomized property suites, runnable from the command line.
//!
//! Every suite draws from its own ChaCha stream derived from the seed and
//! the suite index, so results do not depend on scheduling.

use std::thread;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bar::{aw_chain, ez_chain, nu_cocycle, nu_iterated_cup, nu_power, nu_value, BarChain};
use crate::f2::{self, exterior_cube, image_sum, Gf2Vector, Matrix};
use crate::fox::{fox_derivative, FreeRingElement};
use crate::group::{DihedralElement, FreeWord, Group, KleinElement, Pair, PairGenerator};
use crate::klein::algebra::oracle_j_action;
use crate::klein::golden::Goldens;
use crate::klein::pipeline::build_cube_quotient;
use crate::klein::projection::project;
use crate::ring::GroupRing;
use crate::scalar::{Gf2, Scalar};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Suite = fn(&mut ChaCha8Rng, usize) -> (usize, Vec<String>);

/// Suite names in run order.
pub const SUITES: [(&str, Suite); 18] = [
    ("groupLaws", group_laws),
    ("projectionHomomorphisms", projection_homomorphisms),
    ("biActionIsAnAction", bi_action),
    ("augmentation", augmentation),
    ("slotInvariant", slot_invariant),
    ("boundarySquaredZero", boundary_squared),
    ("awChainMap", aw_chain_map),
    ("ezChainMap", ez_chain_map),
    ("nuCocycle", nu_is_cocycle),
    ("nuPower≡cup", nu_power_is_cup),
    ("nuDiagonal", nu_diagonal),
    ("rankNullity", rank_nullity),
    ("coinvariantOrder", coinvariant_order),
    ("cubeRelations", cube_relations),
    ("quotientEquivariance", quotient_equivariance),
    ("projectionEquivariance", projection_equivariance),
    ("foxProductRule", fox_product_rule),
    ("foxFundamentalIdentity", fox_fundamental),
];

/// Runs every suite with `iterations` random cases each, in parallel,
/// returning reports in the fixed suite order.
pub fn run_all(seed: u64, iterations: usize) -> Vec<SuiteReport> {
    thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .enumerate()
            .map(|(i, (name, suite))| {
                s.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i as u64);
                    let (cases, failures) = suite(&mut rng, iterations);
                    SuiteReport { name, cases, failures }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    })
}

fn klein(rng: &mut ChaCha8Rng) -> KleinElement {
    KleinElement::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6))
}

fn small_klein(rng: &mut ChaCha8Rng) -> KleinElement {
    KleinElement::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2))
}

fn dihedral(rng: &mut ChaCha8Rng) -> DihedralElement {
    DihedralElement::new(rng.gen_range(-6..=6), rng.gen())
}

fn pair(rng: &mut ChaCha8Rng) -> Pair<KleinElement> {
    Pair::new(small_klein(rng), small_klein(rng))
}

fn ring(rng: &mut ChaCha8Rng) -> GroupRing<KleinElement, i64> {
    let n = rng.gen_range(0..=4);
    GroupRing::from_terms((0..n).map(|_| (small_klein(rng), rng.gen_range(-3..=3))))
}

/// A random element of the augmentation ideal, `sum c (g - 1)`.
fn ideal_element<C: Scalar>(rng: &mut ChaCha8Rng, max_terms: usize) -> GroupRing<KleinElement, C> {
    let n = rng.gen_range(1..=max_terms);
    (0..n).fold(GroupRing::zero(), |acc, _| {
        &acc + &GroupRing::minus_one(small_klein(rng)).scale(C::from_i64(rng.gen_range(-2..=2)))
    })
}

fn chain<G: Group>(rng: &mut ChaCha8Rng, degree: usize, elem: impl Fn(&mut ChaCha8Rng) -> G) -> BarChain<G, i64> {
    let n = rng.gen_range(1..=3);
    let mut c = BarChain::zero(degree);
    for _ in 0..n {
        let g = elem(rng);
        let t = (0..degree).map(|_| elem(rng)).collect();
        c.add_term(g, t, rng.gen_range(-2..=2));
    }
    c
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok && failures.len() < 5 {
        failures.push(what());
    }
}

fn group_laws(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    fn laws<G: Group>(a: &G, b: &G, c: &G) -> bool {
        a.mul(b).mul(c) == a.mul(&b.mul(c))
            && a.mul(&G::identity()) == *a
            && G::identity().mul(a) == *a
            && a.mul(&a.inv()).is_identity()
            && a.inv().mul(a).is_identity()
    }
    let mut f = Vec::new();
    for _ in 0..n {
        let (a, b, c) = (klein(rng), klein(rng), klein(rng));
        check(&mut f, laws(&a, &b, &c), || format!("Klein: {a}, {b}, {c}"));
        let (a, b, c) = (dihedral(rng), dihedral(rng), dihedral(rng));
        check(&mut f, laws(&a, &b, &c), || format!("dihedral: {a}, {b}, {c}"));
        let (a, b, c) = (Pair::new(klein(rng), klein(rng)), Pair::new(klein(rng), klein(rng)), Pair::new(klein(rng), klein(rng)));
        check(&mut f, laws(&a, &b, &c), || format!("pair: {a}, {b}, {c}"));
    }
    (n, f)
}

fn projection_homomorphisms(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let (a, b) = (klein(rng), klein(rng));
        let ab = a.mul(&b);
        check(&mut f, ab.to_dihedral() == a.to_dihedral().mul(&b.to_dihedral()), || format!("to D: {a}, {b}"));
        check(&mut f, ab.to_cyclic_two() == a.to_cyclic_two().mul(&b.to_cyclic_two()), || format!("to Y: {a}, {b}"));
    }
    (n, f)
}

fn bi_action(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let (p, q, u) = (pair(rng), pair(rng), ring(rng));
        check(&mut f, u.bi_act(&p.mul(&q)) == u.bi_act(&q).bi_act(&p), || format!("{p}, {q}, {u}"));
    }
    (n, f)
}

fn augmentation(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let (u, v) = (ring(rng), ring(rng));
        check(&mut f, (&u * &v).augmentation() == u.augmentation() * v.augmentation(), || format!("{u}, {v}"));
        let i: GroupRing<KleinElement, Gf2> = ideal_element(rng, 3);
        let r = ring(rng).to_gf2();
        check(&mut f, (&i * &r).in_augmentation_ideal() && (&r * &i).in_augmentation_ideal(), || format!("ideal: {i}, {r}"));
    }
    (n, f)
}

fn slot_invariant(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let factors: Vec<GroupRing<KleinElement, i64>> = (0..rng.gen_range(1..=4)).map(|_| ideal_element(rng, 2)).collect();
        let t = Tensor::expand(&factors).expect("ideal factors");
        check(&mut f, t.slot_marginals_vanish(), || format!("expand of {} factors", factors.len()));
        let tuple: Vec<Pair<KleinElement>> = (0..4).map(|_| pair(rng)).collect();
        let v = nu_power::<KleinElement, i64>(4).apply(&tuple);
        check(&mut f, v.slot_marginals_vanish(), || "nu^4 value".into());
    }
    (n, f)
}

fn boundary_squared(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let d = rng.gen_range(2..=5);
        let c = chain(rng, d, klein);
        check(&mut f, c.boundary().and_then(|b| b.boundary()).map(|b| b.is_zero()).unwrap_or(false), || format!("over G: {c}"));
        let c = chain(rng, d, pair);
        check(&mut f, c.boundary().and_then(|b| b.boundary()).map(|b| b.is_zero()).unwrap_or(false), || format!("over GxG: {c}"));
    }
    (n, f)
}

fn aw_chain_map(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let d = rng.gen_range(1..=4);
        let c = chain(rng, d, small_klein);
        let lhs = aw_chain(&c.boundary().expect("degree >= 1"));
        check(&mut f, lhs == aw_chain(&c).boundary(), || format!("{c}"));
    }
    (n, f)
}

fn ez_chain_map(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let boundary_or_zero = |c: &BarChain<KleinElement, i64>| {
        if c.degree() == 0 {
            None
        } else {
            Some(c.boundary().expect("degree >= 1"))
        }
    };
    let mut f = Vec::new();
    for _ in 0..n {
        let total = rng.gen_range(1..=4);
        let p = rng.gen_range(0..=total);
        let (a, b) = (chain(rng, p, small_klein), chain(rng, total - p, small_klein));
        let lhs = ez_chain(&a, &b).boundary().expect("degree >= 1");
        let mut rhs = BarChain::zero(total - 1);
        if let Some(da) = boundary_or_zero(&a) {
            rhs = rhs.add(&ez_chain(&da, &b));
        }
        if let Some(db) = boundary_or_zero(&b) {
            rhs = rhs.add(&ez_chain(&a, &db).scale(if p % 2 == 0 { 1 } else { -1 }));
        }
        check(&mut f, lhs == rhs, || format!("{a} (x) {b}"));
    }
    (n, f)
}

fn nu_is_cocycle(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let delta = nu_cocycle::<KleinElement, i64>().coboundary();
    let mut f = Vec::new();
    for _ in 0..n {
        let t = [pair(rng), pair(rng)];
        check(&mut f, delta.apply(&t).is_zero(), || format!("[{}|{}]", t[0], t[1]));
    }
    (n, f)
}

fn nu_power_is_cup(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let cochains: Vec<_> =
        (1..=4).map(|k| (nu_power::<KleinElement, i64>(k), nu_iterated_cup::<KleinElement, i64>(k))).collect();
    let mut f = Vec::new();
    for _ in 0..n {
        for (k, (closed, cup)) in cochains.iter().enumerate() {
            let t: Vec<Pair<KleinElement>> = (0..=k).map(|_| pair(rng)).collect();
            check(&mut f, closed.apply(&t) == cup.apply(&t), || format!("n = {}", k + 1));
        }
    }
    (n * 4, f)
}

fn nu_diagonal(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let a = klein(rng);
        check(&mut f, nu_value::<KleinElement, i64>(&Pair::new(a, a)).is_zero(), || format!("{a}"));
    }
    (n, f)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Gf2> {
    let data: Vec<Vec<Gf2>> = (0..rows).map(|_| (0..cols).map(|_| Gf2::new(rng.gen())).collect()).collect();
    Matrix::from_rows(&data).expect("rectangular")
}

fn rank_nullity(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let (r, c) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let m = random_matrix(rng, r, c);
        let kernel = m.kernel();
        let ok = m.rank() + kernel.len() == c
            && kernel.iter().all(|v| m.apply(v).map(|w| f2::is_zero(&w)).unwrap_or(false));
        check(&mut f, ok, || format!("{r}x{c}:\n{m}"));
    }
    (n, f)
}

fn cube_action() -> f2::ActionSpec {
    Goldens::embedded().expect("embedded tables").cube.action
}

fn coinvariant_order(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let base = cube_action();
    let reference = f2::span_basis(6, &image_sum(6, &base).expect("square")).expect("span");
    let mut f = Vec::new();
    for _ in 0..n {
        let mut action = base.clone();
        action.shuffle(rng);
        let basis = f2::span_basis(6, &image_sum(6, &action).expect("square")).expect("span");
        check(&mut f, basis == reference && basis.len() == 3, || "relation span depends on generator order".into());
    }
    (n, f)
}

fn cube_relations(_: &mut ChaCha8Rng, _: usize) -> (usize, Vec<String>) {
    let j = oracle_j_action().expect("oracle");
    let (_, cube) = exterior_cube(&crate::klein::algebra::j_space(), &j).expect("dim 5");
    let get = |g: PairGenerator| cube.iter().find(|(h, _)| *h == g).map(|(_, m)| m.clone()).expect("generator");
    let id = Matrix::identity(10);
    let mut f = Vec::new();
    let mut cases = 0;
    for g in [PairGenerator::X1, PairGenerator::X2] {
        cases += 1;
        check(&mut f, get(g).mul(&get(g)).ok() == Some(id.clone()), || format!("{g} does not square to 1"));
    }
    for (a, b) in [(PairGenerator::Y1, PairGenerator::YBar1), (PairGenerator::Y2, PairGenerator::YBar2)] {
        cases += 1;
        check(&mut f, get(a).mul(&get(b)).ok() == Some(id.clone()), || format!("{a} and {b} are not inverse"));
    }
    (cases, f)
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Gf2Vector {
    (0..n).map(|_| Gf2::new(rng.gen())).collect()
}

fn quotient_equivariance(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let c = build_cube_quotient(&oracle_j_action().expect("oracle")).expect("stable");
    let mut f = Vec::new();
    for _ in 0..n {
        let v = random_vector(rng, 10);
        for ((g, m), (_, qm)) in c.cube_action.iter().zip(&c.quotient.action) {
            let lhs = c.quotient.project(&m.apply(&v).expect("dim"));
            let rhs = qm.apply(&c.quotient.project(&v)).expect("dim");
            check(&mut f, lhs == rhs, || format!("{g}"));
        }
    }
    (n, f)
}

fn projection_equivariance(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let j = oracle_j_action().expect("oracle");
    let (_, cube) = exterior_cube(&crate::klein::algebra::j_space(), &j).expect("dim 5");
    let mut f = Vec::new();
    for _ in 0..n {
        let factors: Vec<GroupRing<KleinElement, Gf2>> = (0..4).map(|_| ideal_element(rng, 2)).collect();
        let t = Tensor::expand(&factors).expect("ideal factors");
        let before = project(&t).to_cube_of_j();
        for (g, m) in &cube {
            let p = g.to_klein_pair();
            let acted = t.act(&p);
            let lhs = project(&acted).to_cube_of_j();
            let rhs = m.apply(&before).expect("dim");
            check(&mut f, lhs == rhs, || format!("{g} on a tensor with {} terms", t.len()));
        }
    }
    (n, f)
}

fn word(rng: &mut ChaCha8Rng) -> FreeWord {
    let n = rng.gen_range(0..=8);
    let syllables: Vec<(usize, i64)> = (0..n).map(|_| (rng.gen_range(0..3), rng.gen_range(-2..=2))).collect();
    FreeWord::from_syllables(&syllables)
}

fn fox_product_rule(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let (u, v, i) = (word(rng), word(rng), rng.gen_range(0..3));
        let lhs = fox_derivative(&u.mul(&v), i);
        let rhs = &fox_derivative(&u, i) + &fox_derivative(&v, i).left_mul(&u);
        check(&mut f, lhs == rhs, || format!("{u}, {v}, a{}", i + 1));
    }
    (n, f)
}

fn fox_fundamental(rng: &mut ChaCha8Rng, n: usize) -> (usize, Vec<String>) {
    let mut f = Vec::new();
    for _ in 0..n {
        let w = word(rng);
        let sum = (0..3).fold(FreeRingElement::zero(), |acc, i| {
            &acc + &(&fox_derivative(&w, i) * &FreeRingElement::minus_one(FreeWord::generator(i)))
        });
        check(&mut f, sum == FreeRingElement::minus_one(w.clone()), || format!("{w}"));
    }
    (n, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_a_small_run() {
        for r in run_all(7, 10) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn runs_are_reproducible() {
        assert_eq!(run_all(3, 5), run_all(3, 5));
    }

    #[test]
    fn suite_names_are_unique() {
        let mut names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }
}
