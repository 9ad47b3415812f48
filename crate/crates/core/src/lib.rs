//! Exact verification engine for finitely presented associative algebras over
//! the Gaussian rationals.
//!
//! Relations are oriented into rewrite rules under the deg-lex order, normal
//! forms are computed by rewriting, and confluence is certified by resolving
//! every critical pair. Homomorphisms given by generator images are verified
//! by normalizing the images of the source relations; exact matrix
//! representations provide an independent check of every identity.

pub mod algebras;
pub mod arith;
pub mod error;
pub mod fixtures;
pub mod freealg;
pub mod front;
pub mod homs;
pub mod repmat;
pub mod report;
pub mod rewrite;
pub mod sample;
pub mod suites;

pub use arith::{GaussianRational, Rational};
pub use error::{Error, Result};
pub use freealg::{Alphabet, NCPoly, Word};
pub use rewrite::{check_confluence, critical_pairs, orient, RewriteRule, RewriteSystem};
