//! Workbench for a four-sorted elementary theory of functions.
//!
//! The language has one number sort `N` and three function sorts `F1`,
//! `F2`, `F3` (total functions on naturals of arity 1-3). Terms are built
//! from `0`, number variables, the successor `S`, and applications of
//! function variables; atomic formulas are equations between number terms.
//!
//! Modules:
//! - [`syntax`]: terms, formulas, parsing, printing, substitution.
//! - [`theories`]: the axiom systems (COM_fcn ⊂ COMI_fcn ⊂ PRA_fcn ⊂ ETF)
//!   and standalone statements (WPRA, MIN1-3, PERM).
//! - [`kernel`]: trusted checker for Hilbert-style proof scripts.
//! - [`tactics`]: proof- and term-producing procedures (term
//!   internalization, equational/open induction, the open-formula
//!   compiler, conditional definitions).
//! - [`model`]: the standard model over the naturals; recursion
//!   combinators, the arithmetic function suites, pairing, permutation
//!   extension, and the minimization/permutation pipelines.
//! - [`harness`]: named property suites over everything above, with
//!   machine-readable reports.

pub mod harness;
pub mod kernel;
pub mod model;
pub mod syntax;
pub mod tactics;
pub mod theories;
