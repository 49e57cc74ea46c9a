//! Exact truncated sums.
//!
//! Mordell-Tornheim sums and intermediate `T_l` sums are cut off at
//! `m_1 + ... + m_r <= N`; multiple zeta values at `n_1 <= N`. Every rewrite
//! of the reducer is a bijection on these finite index sets, so the truncated
//! values on both sides of a rewrite agree exactly for every `N`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combination::{MzvCombination, TlCombination};
use crate::error::{Error, Result};
use crate::index::{MtIndex, MzvIndex, TlIndex};
use crate::rational::Rational;
use crate::reduce::reduce;

/// Sums of reciprocals `1 / prod f_i^{e_i}` with all `f_i <= N` and
/// `sum e_i = weight`, accumulated over the common denominator
/// `lcm(1..=N)^weight` so that each term is a single big-integer product.
struct CommonDenominatorSum {
    scale: BigUint,
    /// `powers[e][f] = (lcm / f)^e`
    powers: Vec<Vec<BigUint>>,
    acc: BigUint,
}

impl CommonDenominatorSum {
    fn new(n_max: u64, max_exponent: u32, weight: u32) -> Self {
        let lcm = (1..=n_max).fold(BigUint::one(), |acc, k| acc.lcm(&BigUint::from(k)));
        let quotients: Vec<BigUint> = (0..=n_max)
            .map(|f| {
                if f == 0 {
                    BigUint::zero()
                } else {
                    &lcm / BigUint::from(f)
                }
            })
            .collect();
        let mut powers = vec![vec![BigUint::one(); quotients.len()]];
        for e in 1..=max_exponent as usize {
            let row = powers[e - 1]
                .iter()
                .zip(&quotients)
                .map(|(p, q)| p * q)
                .collect();
            powers.push(row);
        }
        CommonDenominatorSum {
            scale: num_traits::pow(lcm, weight as usize),
            powers,
            acc: BigUint::zero(),
        }
    }

    fn factor(&self, base: u64, exponent: u32) -> &BigUint {
        &self.powers[exponent as usize][base as usize]
    }

    fn finish(self) -> Rational {
        Rational::new(self.acc, self.scale)
    }
}

/// Brute-force enumeration of every `(m_1, ..., m_r)` with `m_k >= 1` and
/// `n_r <= N`. Position `k` contributes `m_k^{-exps[k]}` when `k < free`
/// and `n_k^{-exps[k]}` otherwise; `n_r^{-extra}` multiplies every term.
fn enumerate_sum(exps: &[u32], free: usize, extra: u32, n_max: u64) -> Rational {
    let weight = exps.iter().sum::<u32>() + extra;
    let max_exp = exps.iter().copied().chain([extra]).max().unwrap_or(0);
    let mut sum = CommonDenominatorSum::new(n_max, max_exp, weight);

    #[allow(clippy::too_many_arguments)]
    fn visit(
        sum: &mut CommonDenominatorSum,
        exps: &[u32],
        free: usize,
        extra: u32,
        n_max: u64,
        pos: usize,
        running: u64,
        partial: &BigUint,
    ) {
        if pos == exps.len() {
            let term = partial * sum.factor(running, extra);
            sum.acc += term;
            return;
        }
        // the remaining positions each need at least 1
        let remaining = (exps.len() - pos - 1) as u64;
        let mut m = 1;
        while running + m + remaining <= n_max {
            let n = running + m;
            let base = if pos < free { m } else { n };
            let next = partial * sum.factor(base, exps[pos]);
            visit(sum, exps, free, extra, n_max, pos + 1, n, &next);
            m += 1;
        }
    }

    if (exps.len() as u64) <= n_max {
        visit(&mut sum, exps, free, extra, n_max, 0, 0, &BigUint::one());
    }
    sum.finish()
}

/// `sum_{N >= n_1 > ... > n_r > 0} prod_j n_j^{-s_j}`, by nested partial sums.
pub fn truncated_mzv(z: &MzvIndex, n_max: u64) -> Rational {
    let args = z.args();
    // below[j] = sum over n_{j} > ... > n_r with n_j < current n
    let mut below = vec![Rational::zero(); args.len()];
    for n in 1..=n_max {
        let mut inner = Rational::one();
        let mut terms = Vec::with_capacity(args.len());
        for j in (0..args.len()).rev() {
            let term = &inner * &Rational::inverse_power(n, args[j]);
            inner = below[j].clone();
            terms.push((j, term));
        }
        for (j, term) in terms {
            below[j] += term;
        }
    }
    below.swap_remove(0)
}

/// `T(s_1..s_r; s)` restricted to `m_1 + ... + m_r <= N`.
pub fn truncated_mt(t: &MtIndex, n_max: u64) -> Rational {
    enumerate_sum(t.args(), t.depth(), t.last(), n_max)
}

/// `T_l(s_1..s_r)` restricted to `n_r <= N`.
pub fn truncated_tl(t: &TlIndex, n_max: u64) -> Rational {
    enumerate_sum(t.args(), t.level(), 0, n_max)
}

pub fn eval_combination_truncated(c: &MzvCombination, n_max: u64) -> Rational {
    c.iter()
        .map(|(key, coeff)| coeff * &truncated_mzv(key, n_max))
        .sum()
}

pub fn eval_tl_combination_truncated(c: &TlCombination, n_max: u64) -> Rational {
    c.iter()
        .map(|(key, coeff)| coeff * &truncated_tl(key, n_max))
        .sum()
}

/// Exact values of both sides at one cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffCheck {
    pub cutoff: u64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CutoffCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub input: MtIndex,
    pub reduced: MzvCombination,
    pub checks: Vec<CutoffCheck>,
    /// True iff every check holds.
    pub verdict: bool,
}

/// Reduces `t` and compares the truncated sums of both sides exactly at
/// each cutoff. A false verdict means a bug in the reducer.
pub fn verify_reduction(t: &MtIndex, cutoffs: &[u64]) -> Result<VerificationReport> {
    if cutoffs.is_empty() {
        return Err(Error::NoCutoffs);
    }
    if cutoffs.contains(&0) {
        return Err(Error::Precondition("cutoffs must be positive"));
    }
    let reduced = reduce(t);
    let checks: Vec<CutoffCheck> = cutoffs
        .iter()
        .map(|&n| CutoffCheck {
            cutoff: n,
            lhs: truncated_mt(t, n),
            rhs: eval_combination_truncated(&reduced, n),
        })
        .collect();
    let verdict = checks.iter().all(CutoffCheck::holds);
    Ok(VerificationReport {
        input: t.clone(),
        reduced,
        checks,
        verdict,
    })
}
