//! The projection `I(G)^{(x)4} -> I(Y) (x) /\^3 I(D) = /\^3 I(D)` and its
//! reduction to `/\^3 J`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::f2::{self, Gf2Vector};
use crate::group::{DihedralElement, Group, KleinElement};
use crate::ring::GroupRing;
use crate::scalar::Gf2;
use crate::tensor::Tensor;

use super::algebra::reduce_generator;

/// An element of `/\^3 I(D; Z/2)` in the basis `(g1 - 1) ^ (g2 - 1) ^ (g3 - 1)`
/// over sorted triples of distinct non-identity elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DihedralWedge {
    terms: BTreeMap<[DihedralElement; 3], Gf2>,
}

impl DihedralWedge {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = &[DihedralElement; 3]> {
        self.terms.keys()
    }

    /// Adds `(g1 - 1) ^ (g2 - 1) ^ (g3 - 1)`, which vanishes when an entry
    /// is the identity or two entries coincide.
    pub fn add_basis(&mut self, g: [DihedralElement; 3]) {
        let mut t = g;
        t.sort();
        if t.iter().any(Group::is_identity) || t[0] == t[1] || t[1] == t[2] {
            return;
        }
        if self.terms.remove(&t).is_none() {
            self.terms.insert(t, Gf2::ONE);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for t in other.terms() {
            out.add_basis(*t);
        }
        out
    }

    /// `u1 ^ u2 ^ u3` for augmentation-zero elements, expanded in the
    /// `g - 1` basis.
    pub fn wedge(u: [&GroupRing<DihedralElement, Gf2>; 3]) -> Self {
        let mut out = Self::zero();
        for (a, _) in u[0].terms() {
            for (b, _) in u[1].terms() {
                for (c, _) in u[2].terms() {
                    out.add_basis([*a, *b, *c]);
                }
            }
        }
        out
    }

    /// The image in `/\^3 J`, in the lexicographic basis of 3-subsets of
    /// `(v, w, wx, w2, w2x)`.
    pub fn to_cube_of_j(&self) -> Gf2Vector {
        let mut out = vec![Gf2::ZERO; 10];
        for [a, b, c] in self.terms() {
            let w = f2::wedge(5, &reduce_generator(a), &reduce_generator(b), &reduce_generator(c));
            out = f2::add(&out, &w);
        }
        out
    }
}

impl fmt::Display for DihedralWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|[a, b, c]| format!("({a}-1)^({b}-1)^({c}-1)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The projection of a rank-4 tensor over `G`.
///
/// The first slot goes to `I(Y; Z/2) = Z/2` through the parity of the
/// `y`-exponent; the other three go to `D` and are wedged. Tuples with an
/// identity entry in slots 2 to 4 carry no `g - 1` coordinate and drop out.
pub fn project(t: &Tensor<KleinElement, Gf2>) -> DihedralWedge {
    let mut out = DihedralWedge::zero();
    for (tuple, c) in t.terms() {
        if *c == Gf2::ONE && tuple[0].y_exp().rem_euclid(2) == 1 {
            out.add_basis([tuple[1].to_dihedral(), tuple[2].to_dihedral(), tuple[3].to_dihedral()]);
        }
    }
    out
}

/// The same projection computed factor by factor on a pure tensor
/// `u1 (x) u2 (x) u3 (x) u4`.
pub fn project_pure(factors: &[GroupRing<KleinElement, Gf2>; 4]) -> Result<DihedralWedge> {
    let y_coord = factors[0]
        .terms()
        .filter(|(g, c)| **c == Gf2::ONE && g.y_exp().rem_euclid(2) == 1)
        .fold(Gf2::ZERO, |acc, _| acc + Gf2::ONE);
    if y_coord == Gf2::ZERO {
        return Ok(DihedralWedge::zero());
    }
    let d: Vec<GroupRing<DihedralElement, Gf2>> =
        factors[1..].iter().map(|u| u.map_group(KleinElement::to_dihedral)).collect();
    Ok(DihedralWedge::wedge([&d[0], &d[1], &d[2]]))
}
