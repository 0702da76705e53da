//! Constructive commutative algebra over towers
//! `R = k[z] ⊂ B = R[x, y^{±1}] ⊂ B[t] ⊂ A = B[t, f^{-1}]`,
//! with an exact Groebner engine, certified normalization automorphisms,
//! lift-and-certify pipelines, and replayable JSON certificates.

pub mod applications;
pub mod automorphism;
pub mod certificate;
pub mod element;
pub mod error;
pub mod groebner;
pub mod lifting;
pub mod order;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod tower;
pub mod transforms;

pub use error::{Error, Result};
pub use scalar::{Scalar, ScalarDomain};
