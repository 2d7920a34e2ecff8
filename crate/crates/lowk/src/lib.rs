//! Lower algebraic K-theory of the finite subgroups of sphere braid groups,
//! and a verified model of `B4(S^2)` as an amalgamated free product.

pub mod amalgam;
pub mod b4;
pub mod census;
pub mod classify;
pub mod error;
pub mod fconj;
pub mod freeprod;
pub mod galois;
pub mod groups;
pub mod lowerk;
pub mod report;

pub use error::{Error, Result};
