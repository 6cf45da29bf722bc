//! Exact rational linear algebra: vectors, matrices, rank, kernels and
//! orthogonal complements. No floating point.

mod elimination;
mod matrix;
mod rational;
mod vector;

pub use elimination::{bareiss_determinant, IntegerEchelon};
pub use matrix::{orthocomplement_basis, ExactMatrix};
pub use rational::{ParseRationalError, Rational};
pub use vector::{inner_product, ExactVector};

pub(crate) use vector::make_primitive;
