//! Rewriting a Mordell-Tornheim value into multiple zeta values.
//!
//! The pipeline is `T(s_1..s_r; s)` -> level `r-1` intermediate sums -> ...
//! -> level 1 -> `zeta` with reversed arguments. Every stage applies the
//! partial fraction expansion to the variables that still appear on their
//! own and merges equal keys before the next stage.

use crate::combination::{MzvCombination, TlCombination};
use crate::error::{Error, Result};
use crate::index::{MtIndex, MzvIndex, TlIndex};
use crate::partial_fraction::partial_fraction_terms;
use crate::rational::Rational;

/// Expands `prod_k m_k^{-s_k} * n_r^{-last}` over all pivots. Each key keeps
/// the surviving exponents in their original order and puts
/// `last + s_j + A_j` on the running total. `last = 0` is the plain product.
fn expand_free_variables(args: &[u32], last: u32) -> Result<TlCombination> {
    let depth = args.len();
    let mut out = TlCombination::new();
    for j in 1..=depth {
        for term in partial_fraction_terms(args, j)? {
            let mut key = term.remaining_exponents(args);
            key.push(last + term.pivot_exponent);
            out.add_term(TlIndex::new(key, depth - 1)?, Rational::from(term.m));
        }
    }
    Ok(out)
}

/// First rewrite: `T(s_1..s_r; s)` as a combination of `T_{r-1}` sums.
pub fn reduce_top(t: &MtIndex) -> Result<TlCombination> {
    if t.depth() < 2 {
        return Err(Error::Precondition(
            "reduce_top needs depth at least 2; depth 1 is zeta(s_1 + s)",
        ));
    }
    expand_free_variables(t.args(), t.last())
}

/// One level down: `T_l` as a combination of `T_{l-1}`. Positions after `l`
/// are copied unchanged and the pivot's new exponent lands at position `l`.
pub fn reduce_level(t: &TlIndex) -> Result<TlCombination> {
    let level = t.level();
    if level < 2 {
        return Err(Error::Precondition(
            "reduce_level needs level at least 2; use base_case at level 1",
        ));
    }
    let (free, tail) = t.args().split_at(level);
    let mut out = TlCombination::new();
    for j in 1..=level {
        for term in partial_fraction_terms(free, j)? {
            let mut key = term.remaining_exponents(free);
            key.push(term.pivot_exponent);
            key.extend_from_slice(tail);
            out.add_term(TlIndex::new(key, level - 1)?, Rational::from(term.m));
        }
    }
    Ok(out)
}

/// `T_1(s_1..s_r) = zeta(s_r, ..., s_1)`.
pub fn base_case(t: &TlIndex) -> Result<MzvIndex> {
    if t.level() != 1 {
        return Err(Error::Precondition("base_case needs level 1"));
    }
    MzvIndex::new(t.args().iter().rev().copied().collect())
}

/// Applies [`reduce_level`] to every key and merges.
pub fn reduce_level_combination(c: &TlCombination) -> Result<TlCombination> {
    let mut out = TlCombination::new();
    for (key, coeff) in c {
        out.add_scaled(&reduce_level(key)?, coeff);
    }
    Ok(out)
}

/// Applies [`base_case`] to every key of a level-1 combination.
pub fn base_case_combination(c: &TlCombination) -> Result<MzvCombination> {
    let mut out = MzvCombination::new();
    for (key, coeff) in c {
        out.add_term(base_case(key)?, coeff.clone());
    }
    Ok(out)
}

/// Every intermediate combination of one reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace {
    pub input: MtIndex,
    /// Levels `r-1, r-2, ..., 1`. Empty for depth 1.
    pub stages: Vec<TlCombination>,
    pub result: MzvCombination,
}

fn descend(first: TlCombination) -> Result<(Vec<TlCombination>, MzvCombination)> {
    let mut stages = vec![first];
    while stages
        .last()
        .and_then(TlCombination::level)
        .is_some_and(|l| l > 1)
    {
        let next = reduce_level_combination(stages.last().unwrap())?;
        stages.push(next);
    }
    let result = base_case_combination(stages.last().unwrap())?;
    Ok((stages, result))
}

pub fn reduce_with_trace(t: &MtIndex) -> Result<ReductionTrace> {
    if t.depth() == 1 {
        let z = MzvIndex::new(vec![t.args()[0] + t.last()])?;
        return Ok(ReductionTrace {
            input: t.clone(),
            stages: Vec::new(),
            result: MzvCombination::single(z, Rational::one()),
        });
    }
    let (stages, result) = descend(reduce_top(t)?)?;
    Ok(ReductionTrace {
        input: t.clone(),
        stages,
        result,
    })
}

/// Expresses `T(s_1..s_r; s)` as a combination of multiple zeta values of
/// the same weight and depth. All coefficients are positive integers and
/// every output index is admissible.
pub fn reduce(t: &MtIndex) -> MzvCombination {
    // Inputs are validated by MtIndex, so every internal constructor succeeds.
    reduce_with_trace(t)
        .expect("reduction of a valid MtIndex cannot fail")
        .result
}

/// `T(1,...,1; s) = r! zeta(s+1, 1, ..., 1)`, independent of the rewrite.
pub fn closed_form_ones(r: usize, s: u32) -> Result<MzvCombination> {
    if r == 0 || s == 0 {
        return Err(Error::Precondition(
            "closed_form_ones needs r >= 1 and s >= 1",
        ));
    }
    let mut args = vec![1u32; r];
    args[0] = s + 1;
    let factorial = (1..=r as i64).fold(Rational::one(), |acc, k| acc * Rational::from(k));
    Ok(MzvCombination::single(MzvIndex::new(args)?, factorial))
}

/// `prod_j zeta(s_j)` as a combination of depth-`r` multiple zeta values,
/// by summing the partial fraction expansion over all positive integers.
pub fn product_to_mzv(s: &[u32]) -> Result<MzvCombination> {
    if s.is_empty() {
        return Err(Error::EmptyIndex);
    }
    if let Some(&bad) = s.iter().find(|&&v| v < 2) {
        return Err(Error::DivergentFactor(bad));
    }
    if s.len() == 1 {
        return Ok(MzvCombination::single(
            MzvIndex::new(s.to_vec())?,
            Rational::one(),
        ));
    }
    let (_, result) = descend(expand_free_variables(s, 0)?)?;
    Ok(result)
}

/// Weight and depth have different parities.
pub fn opposite_parity(weight: u32, depth: usize) -> bool {
    (weight % 2) as usize != depth % 2
}
