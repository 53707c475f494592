//! Linear algebra over `GF(2)` and finite modules over `GF(2)[D x D]`.

mod matrix;
mod space;

pub use matrix::{Echelon, Matrix};
pub use space::*;
