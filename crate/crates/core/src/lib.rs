//! Mordell-Tornheim zeta values as combinations of multiple zeta values.
//!
//! [`reduce`] rewrites `T(s_1, ..., s_r; s)` with positive integer arguments
//! into a combination of multiple zeta values of the same weight and depth
//! with positive integer coefficients. [`truncated`] provides the exact
//! verification oracle, [`numeric`] floating-point values with error bounds,
//! and [`convergence`] the absolute-convergence criteria.

pub mod combination;
pub mod convergence;
pub mod error;
pub mod index;
pub mod numeric;
pub mod partial_fraction;
pub mod rational;
pub mod reduce;
pub mod render;
pub mod syntax;
pub mod truncated;

pub use combination::{Combination, MzvCombination, TlCombination};
pub use convergence::{mt_convergence_check, mzv_convergence_check, ConvergenceQuery};
pub use error::{Error, Result};
pub use index::{MtIndex, MzvIndex, TlIndex};
pub use numeric::{eval_combination_float, eval_mt_float, eval_mzv_float, FloatEstimate};
pub use partial_fraction::{
    lemma_identity_holds, multinomial_m, partial_fraction_terms, PartialFractionTerm,
};
pub use rational::Rational;
pub use reduce::{
    base_case, closed_form_ones, opposite_parity, product_to_mzv, reduce, reduce_level, reduce_top,
    reduce_with_trace, ReductionTrace,
};
pub use render::OutputFormat;
pub use syntax::{parse_literal, Literal};
pub use truncated::{
    eval_combination_truncated, truncated_mt, truncated_mzv, truncated_tl, verify_reduction,
    VerificationReport,
};
