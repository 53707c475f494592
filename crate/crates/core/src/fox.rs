//! Fox calculus and the short free resolutions of the non-orientable
//! surface groups.
//!
//! Differentials use row vectors: `d1[i]` is the coefficient of `e0` in
//! the boundary of the `i`-th degree-one generator, and `d2[i]` is the
//! coefficient of that generator in the boundary of the top cell.
//!
//! For genus at least three the entries live in the free group ring and
//! equalities are checked after free reduction only. That is enough for
//! the identities used here, which hold literally as words.

use std::fmt;

use crate::bar::BarChain;
use crate::error::{Error, Result};
use crate::f2::Matrix;
use crate::group::{FreeWord, Group, KleinElement};
use crate::ring::GroupRing;
use crate::scalar::{Gf2, Scalar};

/// An element of the integral group ring of a free group.
pub type FreeRingElement = GroupRing<FreeWord, i64>;

/// The Fox derivative `d w / d a_i`.
pub fn fox_derivative(w: &FreeWord, i: usize) -> FreeRingElement {
    let mut out = FreeRingElement::zero();
    for (k, &(g, s)) in w.letters().iter().enumerate() {
        if g != i {
            continue;
        }
        if s > 0 {
            out.add_term(w.prefix(k), 1);
        } else {
            out.add_term(w.prefix(k + 1), -1);
        }
    }
    out
}

/// The relator `a_1^2 ... a_g^2` of the non-orientable surface of genus `g`.
pub fn surface_relator(genus: usize) -> FreeWord {
    FreeWord::from_syllables(&(0..genus).map(|i| (i, 2)).collect::<Vec<_>>())
}

/// The relator `y x y x^-1` of the Klein bottle group, with `x = a1`, `y = a2`.
pub fn klein_relator() -> FreeWord {
    FreeWord::from_syllables(&[(1, 1), (0, 1), (1, 1), (0, -1)])
}

/// A free resolution `P2 -> P1 -> P0` with one generator in degrees 0 and 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Resolution<G> {
    pub name: String,
    pub labels: (String, Vec<String>, String),
    pub d1: Vec<GroupRing<G, i64>>,
    pub d2: Vec<GroupRing<G, i64>>,
}

impl<G: Group> Resolution<G> {
    pub fn ranks(&self) -> (usize, usize, usize) {
        (1, self.d1.len(), 1)
    }

    /// `d1 . d2` as the single entry `sum_i d2[i] d1[i]`.
    pub fn composite(&self) -> GroupRing<G, i64> {
        self.d2.iter().zip(&self.d1).fold(GroupRing::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// The differentials with every group element sent to `1`, mod 2:
    /// `d1` as an `r1 x 1` matrix and `d2` as `1 x r1`.
    pub fn augment_mod2(&self) -> (Matrix<Gf2>, Matrix<Gf2>) {
        let aug = |r: &GroupRing<G, i64>| Gf2::from_i64(r.augmentation());
        let d1 = Matrix::from_rows(&self.d1.iter().map(|r| vec![aug(r)]).collect::<Vec<_>>()).expect("rectangular");
        let d2 = Matrix::from_rows(&[self.d2.iter().map(aug).collect()]).expect("rectangular");
        (d1, d2)
    }
}

impl<G: Group> fmt::Display for Resolution<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r0, r1, r2) = self.ranks();
        writeln!(f, "resolution {}: ranks ({r0}, {r1}, {r2})", self.name)?;
        let (e0, ones, top) = &self.labels;
        for (label, entry) in ones.iter().zip(&self.d1) {
            writeln!(f, "d1({label}) = ({entry}) {e0}")?;
        }
        let terms: Vec<String> = ones.iter().zip(&self.d2).map(|(label, entry)| format!("({entry}) {label}")).collect();
        writeln!(f, "d2({top}) = {}", terms.join(" + "))
    }
}

/// The resolution of the Klein bottle group from its one-relator
/// presentation, with entries in normal form.
pub fn klein_resolution() -> Resolution<KleinElement> {
    let images = [KleinElement::x(), KleinElement::y()];
    let r = klein_relator();
    Resolution {
        name: "K".to_string(),
        labels: ("e0".to_string(), vec!["e1_1".to_string(), "e1_2".to_string()], "e2".to_string()),
        d1: images.iter().map(|&g| GroupRing::minus_one(g)).collect(),
        d2: (0..2).map(|i| fox_derivative(&r, i).map_group(|w| w.evaluate(&images))).collect(),
    }
}

/// The resolution `M^g` of the genus-`g` surface group, over the free group ring.
pub fn surface_resolution(genus: usize) -> Result<Resolution<FreeWord>> {
    if genus < 2 {
        return Err(Error::GenusOutOfScope { genus: genus as i64, reason: "the resolution needs genus >= 2".into() });
    }
    let alpha = surface_relator(genus);
    Ok(Resolution {
        name: format!("M^{genus}"),
        labels: ("e0".to_string(), (1..=genus).map(|i| format!("f{i}")).collect(), format!("w{genus}")),
        d1: (0..genus).map(|i| GroupRing::minus_one(FreeWord::generator(i))).collect(),
        d2: (0..genus).map(|i| fox_derivative(&alpha, i)).collect(),
    })
}

/// The images `e0 -> [], e1_1 -> [x], e1_2 -> [y], e2 -> [y|x] + [yx|y]`
/// of the Klein resolution in the bar resolution.
pub fn klein_bar_images() -> (BarChain<KleinElement, i64>, Vec<BarChain<KleinElement, i64>>, BarChain<KleinElement, i64>) {
    let (x, y) = (KleinElement::x(), KleinElement::y());
    let top = BarChain::basis(vec![y, x]).add(&BarChain::basis(vec![y.mul(&x), y]));
    (BarChain::basis(vec![]), vec![BarChain::basis(vec![x]), BarChain::basis(vec![y])], top)
}

/// Checks that the Klein resolution maps to the bar resolution, degree by degree.
pub fn verify_klein_bar_map() -> Result<bool> {
    let res = klein_resolution();
    let (e0, ones, top) = klein_bar_images();
    for (img, d) in ones.iter().zip(&res.d1) {
        if img.boundary()? != e0.ring_mul(d) {
            return Ok(false);
        }
    }
    let pushed = ones.iter().zip(&res.d2).fold(BarChain::zero(1), |acc, (img, d)| acc.add(&img.ring_mul(d)));
    Ok(top.boundary()? == pushed)
}

/// The homomorphism `a_i -> a_i (i < g), a_g -> 1` on words.
pub fn phi_word(w: &FreeWord, genus: usize) -> FreeWord {
    let images: Vec<FreeWord> =
        (0..genus).map(|i| if i + 1 == genus { FreeWord::identity() } else { FreeWord::generator(i) }).collect();
    w.evaluate(&images)
}

/// The chain map `M^g -> M^{g-1}` over `phi`: identity on `e0`, `f_i -> f_i`
/// for `i < g`, `f_g -> 0`, `w_g -> w_{g-1}`. Matrices are given in degrees
/// 0, 1, 2 with rows indexed by the source basis.
#[derive(Clone, Debug)]
pub struct PhiChainMap {
    pub genus: usize,
    pub degree0: Vec<Vec<FreeRingElement>>,
    pub degree1: Vec<Vec<FreeRingElement>>,
    pub degree2: Vec<Vec<FreeRingElement>>,
}

pub fn phi_chain_map(genus: usize) -> Result<PhiChainMap> {
    if genus < 3 {
        return Err(Error::GenusOutOfScope { genus: genus as i64, reason: "the reduction map needs genus >= 3".into() });
    }
    let one = || vec![vec![FreeRingElement::one()]];
    let degree1 = (0..genus)
        .map(|i| (0..genus - 1).map(|j| if i == j { FreeRingElement::one() } else { FreeRingElement::zero() }).collect())
        .collect();
    Ok(PhiChainMap { genus, degree0: one(), degree1, degree2: one() })
}

fn mat_mul(a: &[Vec<FreeRingElement>], b: &[Vec<FreeRingElement>]) -> Vec<Vec<FreeRingElement>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(FreeRingElement::zero(), |acc, k| &acc + &(&row[k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Checks `phi(D_k^g) F_{k-1} = F_k D_k^{g-1}` for `k = 1, 2` as free-ring
/// matrices, after free reduction.
pub fn verify_phi_chain_map(map: &PhiChainMap) -> Result<bool> {
    let g = map.genus;
    let src = surface_resolution(g)?;
    let dst = surface_resolution(g - 1)?;
    let phi = |r: &FreeRingElement| r.map_group(|w| phi_word(w, g));
    let column = |v: &[FreeRingElement]| v.iter().map(|r| vec![r.clone()]).collect::<Vec<_>>();
    let d1_src: Vec<Vec<FreeRingElement>> = src.d1.iter().map(|r| vec![phi(r)]).collect();
    let d2_src: Vec<Vec<FreeRingElement>> = vec![src.d2.iter().map(phi).collect()];
    let ok1 = mat_mul(&d1_src, &map.degree0) == mat_mul(&map.degree1, &column(&dst.d1));
    let ok2 = mat_mul(&d2_src, &map.degree1) == mat_mul(&map.degree2, std::slice::from_ref(&dst.d2));
    Ok(ok1 && ok2)
}

/// Dimensions of `H_0, H_1, H_2` of the surface with `GF(2)` coefficients.
pub fn mod2_homology(genus: usize) -> Result<(usize, usize, usize)> {
    let (d1, d2) = surface_resolution(genus)?.augment_mod2();
    let (r1, r2) = (d1.rank(), d2.rank());
    Ok((1 - r1, genus - r1 - r2, 1 - r2))
}

/// The map `H_2(N_g; Z/2) -> H_2(N_{g-1}; Z/2)` induced by `phi`, in the
/// bases of the kernels of `d2` mod 2.
pub fn h2_induced_map(genus: usize) -> Result<Matrix<Gf2>> {
    let map = phi_chain_map(genus)?;
    let (_, d2_src) = surface_resolution(genus)?.augment_mod2();
    let (_, d2_dst) = surface_resolution(genus - 1)?.augment_mod2();
    // row-vector maps: kernels of v -> v D2 are kernels of D2^T
    let ker_src = d2_src.transpose().kernel();
    let ker_dst = d2_dst.transpose().kernel();
    let f2 = Gf2::from_i64(map.degree2[0][0].augmentation());
    let basis_dst = Matrix::from_columns(1, &ker_dst)?;
    let mut cols = Vec::new();
    for v in &ker_src {
        let image = vec![v[0] * f2];
        let coords = basis_dst
            .solve(&image)?
            .ok_or_else(|| Error::DimensionMismatch("image of a cycle is not a cycle".into()))?;
        cols.push(coords);
    }
    Matrix::from_columns(ker_dst.len(), &cols)
}

/// The isomorphism between the two presentations of the Klein bottle group:
/// `a1 -> yx, a2 -> x^-1` kills `a1^2 a2^2`, and `x -> a2^-1, y -> a1 a2`
/// carries `y x y x^-1` to exactly `a1^2 a2^2`.
pub fn verify_genus_two_presentation() -> bool {
    let (x, y) = (KleinElement::x(), KleinElement::y());
    let forward = [y.mul(&x), x.inv()];
    let kills = surface_relator(2).evaluate(&forward).is_identity();
    let a1 = FreeWord::generator(0);
    let a2 = FreeWord::generator(1);
    let backward = [a2.inv(), a1.mul(&a2)];
    let carries = klein_relator().evaluate(&backward) == surface_relator(2);
    kills && carries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::ring_element;
    use proptest::prelude::*;

    fn a(i: usize) -> FreeWord {
        FreeWord::generator(i)
    }

    fn words() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0usize..3, -2i64..=2), 0..8).prop_map(|s| FreeWord::from_syllables(&s))
    }

    #[test]
    fn fox_axioms() {
        assert_eq!(fox_derivative(&a(0), 0), FreeRingElement::one());
        assert!(fox_derivative(&a(1), 0).is_zero());
        assert_eq!(fox_derivative(&a(0).inv(), 0), FreeRingElement::monomial(-1, a(0).inv()));
    }

    #[test]
    fn surface_relator_derivative() {
        let d = fox_derivative(&surface_relator(2), 0);
        assert_eq!(d, &FreeRingElement::one() + &FreeRingElement::element(a(0)));
    }

    #[test]
    fn klein_relator_derivatives() {
        let r = klein_relator();
        let (x, y) = (a(0), a(1));
        assert_eq!(fox_derivative(&r, 1), &FreeRingElement::one() + &FreeRingElement::element(y.mul(&x)));
        assert_eq!(
            fox_derivative(&r, 0),
            &FreeRingElement::element(y.clone()) - &FreeRingElement::element(r.clone())
        );
    }

    #[test]
    fn klein_resolution_matches_display() {
        let res = klein_resolution();
        assert_eq!(res.d2, vec![ring_element("y-1").unwrap(), ring_element("1+yx").unwrap()]);
        assert_eq!(res.d1, vec![ring_element("x-1").unwrap(), ring_element("y-1").unwrap()]);
        assert!(res.composite().is_zero());
        assert!(verify_klein_bar_map().unwrap());
    }

    #[test]
    fn surface_resolution_entries() {
        let m2 = surface_resolution(2).unwrap();
        let (a1, a2) = (a(0), a(1));
        let a1sq = a1.mul(&a1);
        assert_eq!(m2.d2[0], &FreeRingElement::one() + &FreeRingElement::element(a1.clone()));
        assert_eq!(m2.d2[1], &FreeRingElement::element(a1sq.clone()) + &FreeRingElement::element(a1sq.mul(&a2)));
        assert!(matches!(surface_resolution(1), Err(Error::GenusOutOfScope { .. })));
        for g in 2..=10 {
            let m = surface_resolution(g).unwrap();
            assert_eq!(m.ranks(), (1, g, 1));
            assert!(m.d1.iter().all(|r| r.augmentation() == 0));
            // telescopes to alpha - 1, which one use of the relator kills
            assert_eq!(m.composite(), FreeRingElement::minus_one(surface_relator(g)));
            let (d1, d2) = m.augment_mod2();
            assert!(d1.is_zero() && d2.is_zero());
        }
    }

    #[test]
    fn homology_and_reduction() {
        assert_eq!(mod2_homology(2).unwrap(), (1, 2, 1));
        assert_eq!(mod2_homology(5).unwrap(), (1, 5, 1));
        for g in 3..=10 {
            assert!(verify_phi_chain_map(&phi_chain_map(g).unwrap()).unwrap());
            assert_eq!(h2_induced_map(g).unwrap(), Matrix::identity(1));
        }
        assert!(phi_chain_map(2).is_err());
    }

    #[test]
    fn phi_on_genus_three_entries() {
        let m3 = surface_resolution(3).unwrap();
        let phi = |r: &FreeRingElement| r.map_group(|w| phi_word(w, 3));
        assert_eq!(phi(&m3.d2[1]), m3.d2[1]);
        let a1a2sq = surface_relator(2);
        assert_eq!(phi(&m3.d2[2]), FreeRingElement::monomial(2, a1a2sq));
    }

    #[test]
    fn presentations_agree_in_genus_two() {
        assert!(verify_genus_two_presentation());
    }

    #[test]
    fn rendering() {
        let text = surface_resolution(2).unwrap().to_string();
        assert_eq!(
            text,
            "resolution M^2: ranks (1, 2, 1)\n\
             d1(f1) = (-1 + a1) e0\n\
             d1(f2) = (-1 + a2) e0\n\
             d2(w2) = (1 + a1) f1 + (a1^2 + a1^2*a2) f2\n"
        );
    }

    proptest! {
        #[test]
        fn product_rule(u in words(), v in words(), i in 0usize..3) {
            let lhs = fox_derivative(&u.mul(&v), i);
            let rhs = &fox_derivative(&u, i) + &fox_derivative(&v, i).left_mul(&u);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn fundamental_identity(w in words()) {
            let sum = (0..3).fold(FreeRingElement::zero(), |acc, i| {
                &acc + &(&fox_derivative(&w, i) * &FreeRingElement::minus_one(a(i)))
            });
            prop_assert_eq!(sum, FreeRingElement::minus_one(w));
        }
    }
}
