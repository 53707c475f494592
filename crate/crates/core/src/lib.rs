//! Exact certification of the lower bound `TC >= 4` for the Klein bottle
//! and the higher-genus non-orientable surfaces.

pub mod bar;
pub mod cli;
pub mod error;
pub mod f2;
pub mod fox;
pub mod group;
pub mod klein;
pub mod parse;
pub mod ring;
pub mod scalar;
pub mod selftest;
pub mod tensor;

pub use error::{Error, Result};
pub use group::{ActsOn, CyclicTwoElement, DihedralElement, FreeWord, Group, KleinElement, Pair, PairGenerator};
pub use ring::GroupRing;
pub use scalar::{Field, Gf2, Scalar};
pub use tensor::Tensor;

/// Integral group ring of the Klein bottle group.
pub type IntGroupRing<G = KleinElement> = GroupRing<G, i64>;
/// Mod-2 group ring.
pub type Gf2GroupRing<G = KleinElement> = GroupRing<G, Gf2>;
pub type IntTensor<G = KleinElement> = Tensor<G, i64>;
pub type Gf2Tensor<G = KleinElement> = Tensor<G, Gf2>;
pub type KleinPair = Pair<KleinElement>;
/// Integral bar chains on `pi x pi` for the Klein bottle group.
pub type KleinPairChain = bar::BarChain<KleinPair, i64>;
