//! Exact computation of integrals, the antipode-squared unit, Wedderburn data
//! and higher Frobenius-Schur indicators of finite-dimensional semisimple Hopf
//! algebras over finite fields.

pub mod error;
pub mod ff;
pub mod builders;
pub mod corpus;
pub mod hopf;
pub mod indicators;
pub mod integrals;
pub mod io;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod twist;
pub mod wedderburn;

pub use error::{Error, Result};
pub use ff::{Fe, Field, Modulus};
pub use hopf::{HopfAlgebra, ModuleRep, Tensor};
pub use report::Report;
