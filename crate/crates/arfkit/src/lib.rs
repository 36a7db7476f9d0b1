//! Exact arithmetic for numerical semigroups, their relative ideals, and
//! the blow-up calculus of Arf theory.
//!
//! A numerical semigroup `S` models the one-dimensional local domain
//! `k[[t^S]]`; a relative ideal (a set of integers with `E + S ⊆ E` and a
//! minimum) models a rank-one monomial module over it. On that model the
//! crate computes duals, biduals, traces, endomorphism rings and blow-ups
//! exactly, decides the Arf property along three independent routes, and
//! mechanically classifies the reflexive rank-one modules: over an Arf
//! semigroup they are precisely the semigroups infinitely near it (the
//! members of the blow-up chain), and all of them are self-dual.
//!
//! ```
//! use arfkit::{lipman_chain, ArfMethod, NumericalSemigroup, RelativeIdeal};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5])?;
//! assert_eq!(s.genus(), 4);
//! assert!(!s.is_arf(ArfMethod::Pattern));
//! assert_eq!(s.arf_closure().minimal_generators(), &[3, 5, 7]);
//!
//! // Hom(m, R) at value level: the endomorphism ring of the maximal ideal
//! let m = RelativeIdeal::from_elements(&s, &[3, 5])?;
//! assert_eq!(m.end_semigroup().minimal_generators(), &[3, 5, 7]);
//! assert!(m.is_reflexive() && !m.is_self_dual());
//!
//! // the chain of iterated blow-ups ends at the naturals
//! let chain = lipman_chain(&s);
//! assert_eq!(chain.multiplicity_sequence(), &[3, 2, 1]);
//! # Ok::<(), arfkit::Error>(())
//! ```
//!
//! Modules:
//!
//! * [`semigroup`] — construction, invariants, the three Arf tests, Arf
//!   closure.
//! * [`ideal`] — the full relative-ideal calculus (sum, colon, dual,
//!   trace, stability, blow-up, integral closure, conductors).
//! * [`lipman`] — maximal ideals and chains of iterated blow-ups.
//! * [`verify`] — enumeration of normalized ideals and the theorem checks.
//! * [`mod@census`] — the semigroup tree and the census pipeline.
//! * [`cli`] — the command-line front end (see the `arfkit` binary).
//!
//! The runnable examples under `examples/` walk through each capability;
//! `cargo run --example classify_reflexives` is a good starting point.

pub mod census;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod lipman;
pub mod semigroup;
pub mod verify;

pub use census::{
    census, census_record, counts_by_genus, enumerate_semigroups, CensusFormat, CensusRecord,
    CensusSummary, SemigroupTree, TheoremAStatus, DEFAULT_GENUS_CAP,
};
pub use error::{Error, Result};
pub use ideal::{conductor_ideal, truncation_ideal, RelativeIdeal};
pub use lipman::{lipman_chain, maximal_ideal, LipmanChain};
pub use semigroup::{ArfMethod, NumericalSemigroup};
pub use verify::{
    enumerate_normalized_ideals, enumerate_normalized_ideals_bounded, verify_all,
    verify_dual_descent, verify_stablechar, verify_theorem_a, verify_theorem_b,
    verify_trace_conductor, CheckCounts, CheckStatus, IdealFilter, VerificationReport,
};
