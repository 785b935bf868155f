//! Exact-arithmetic Möbius machinery on locally finite posets.
//!
//! The crate provides:
//!
//! - [`poset`] — poset views with interval enumeration, Möbius values,
//!   convolution and the zeta/Möbius transform pair, all over exact
//!   rationals;
//! - [`zoo`] — the built-in poset families (divisibility, antichain, linear
//!   order, finite subsets, subspaces of F_q^∞, products, two counterexample
//!   constructions) and a loader for finite posets from files;
//! - [`checkers`] — bounded-frontier witnesses and experiments for the
//!   support-growth properties of Möbius pairs, plus the two certification
//!   suites;
//! - [`reduced`] — the four reduced sequence algebras (Dirichlet, linear
//!   order, binomial, q-binomial) with structure coefficients, triangular
//!   Möbius solving and brute-force verification against the posets.

pub mod checkers;
pub mod error;
pub mod gf;
pub mod key;
pub mod poset;
pub mod rational;
pub mod reduced;
pub mod report;
pub mod seeded;
pub mod zoo;

pub use error::{Error, Result};
pub use key::{ElementKey, Letter, PElem, QElem, SubspaceKey};
pub use poset::{PairFn, PosetOracle, PosetView, SupportedFunction};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use report::{LadderReport, Verdict};
pub use zoo::{FamilySpec, FinitePosetFile};
