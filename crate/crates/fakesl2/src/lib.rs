//! Exact modular representation theory of the restricted enveloping algebra
//! of the characteristic-2 fake sl(2).
//!
//! The algebra is 32-dimensional, generated by a, b, c with
//! ab + ba = c, ac + ca = a, bc + cb = b, a^4 = b^4 = 0, c^2 = c over a
//! field of characteristic 2. This crate constructs all of its
//! finite-dimensional indecomposable modules, decomposes arbitrary tensor
//! products into indecomposables by exact linear algebra over GF(2^m), and
//! realizes the resulting Green ring both as closed-form fusion rules and as
//! an integer polynomial quotient with a normal-form rewriter, together with
//! the semisimplification onto C2 x Z graded lines.
//!
//! Start with the runnable examples (`cargo run --example catalog_tour`) or
//! the [`catalog`], [`green`], and [`decomp`] modules.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod field;
pub mod green;
pub mod linalg;
pub mod rep;
pub mod rng;

pub use algebra::AlgebraContext;
pub use catalog::Label;
pub use decomp::Decomposer;
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement, ProjPoint};
pub use green::GreenElement;
pub use linalg::{Matrix, Subspace};
pub use rep::Representation;
