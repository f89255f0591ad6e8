//! Exact dense linear algebra and univariate polynomials over [`crate::ff::Field`].

mod matrix;
mod poly;

pub use matrix::{Matrix, Solution};
pub use poly::Poly;
