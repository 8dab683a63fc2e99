//! Exact-arithmetic kernel for checking matrix-interpretation proofs of
//! termination and polynomial derivational-complexity bounds for term
//! rewrite systems.
//!
//! Everything in this crate is pure and deterministic. All arithmetic is
//! arbitrary precision (`BigInt` entries, `BigRational` intermediates);
//! floating point is never used on a certification path. The crate is
//! `no_std` (with `alloc`); input/output, file formats, and the command
//! line live in the companion `matcert` crate.
//!
//! The main entry points are [`interp::certify_termination`] and
//! [`growth::certify_complexity`], which check a [`interp::LinearInterpretation`]
//! against a [`term::Trs`]. The [`rewrite`] module provides brute-force
//! derivation search used to cross-validate certified bounds at small term
//! sizes.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod growth;
pub mod interp;
pub mod matrix;
pub mod poly;
pub mod rewrite;
pub mod term;

pub use growth::{
    certify_complexity, check_triangular, coefficient_set, complexity_degree_spectral,
    constant_bound, exact_growth_degree, product_growth_measure, scc_analysis,
    spectral_radius_leq_one, CoefficientSet, ComplexityCertificate, ComplexityVerdict,
    ComponentClass, Criterion, GrowthDegree, GrowthError, GrowthRejection, GrowthReport,
    SccAnalysis, SpectralOutcome, TriangularOutcome, DEFAULT_PRODUCT_BUDGET,
    DEFAULT_REPORT_LENGTHS,
};
pub use interp::{
    certify_termination, check_monotone, check_rule_orientation, eval, interpret_bound,
    linear_form, Assignment, InterpError, LinearForm, LinearInterpretation, RuleOrientation,
    SymbolInterpretation, TerminationFailure, TerminationVerdict,
};
pub use matrix::{GuardedMatrix, MatrixError, Scalar};
pub use poly::{cayley_hamilton_holds, char_poly, Coeff, PolyError, Polynomial};
pub use rewrite::{
    derivational_complexity, enumerate_ground_terms, fresh_constant_symbol,
    longest_derivation_steps, rewrite_successors, DerivationSearch, NonterminationEvidence,
};
pub use term::{match_term, Rule, Substitution, Term, Trs, TrsError};
