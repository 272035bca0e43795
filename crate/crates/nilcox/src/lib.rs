//! Exact verification of the bimodule calculus of nilCoxeter algebras:
//! induction/restriction bimodules, the defining isomorphism of the
//! categorified Weyl algebra, adjunctions, dualities, Mackey-style
//! decompositions, and their decategorified shadows over Q(q).
//!
//! Everything is computed over exact rationals; every positive answer
//! carries an explicit certificate (a verified intertwining matrix) and
//! every negative answer carries a finite witness.

pub mod algebra;
pub mod bialgebra;
pub mod bimodule;
pub mod decat;
pub mod functor;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod report;
pub mod wreath;
