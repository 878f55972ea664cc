//! Standard monomial theory at desk scale.
//!
//! The crate computes, with exact integer arithmetic, the combinatorial and
//! linear-algebraic data attached to Bott-Samelson varieties of `GL_n` and
//! to Schubert and Richardson varieties in the flag variety:
//!
//! * [`weyl`] — permutations, words in simple reflections, Bruhat order;
//! * [`exactalg`] — polynomials in the matrix entries `x[r,c]`, minors, the
//!   diagonal term order and fraction-free elimination;
//! * [`tableaux`] — column sets, tableaux of shape `(j, m)`, straightness,
//!   the grid text format and the opposite-side involution;
//! * [`sections`] — section spaces as spans of tableau polynomials,
//!   restriction to subwords, flag standard monomials and sampling oracles;
//! * [`degeneration`] — leading-monomial (initial algebra) checks;
//! * [`fiberprod`] — graded pieces of the fiber product over a Richardson
//!   variety.
//!
//! Everything is `no_std` with `alloc`; IO lives in the companion `stdmono`
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod degeneration;
pub mod error;
pub mod exactalg;
pub mod fiberprod;
pub mod sections;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
