//! The partial fraction expansion of `prod_j x_j^{-s_j}` in powers of
//! `x = x_1 + ... + x_r`:
//!
//! ```text
//! prod_j x_j^{-s_j} = sum_j sum_{a} M_j x^{-(s_j + A_j)} prod_{k != j} x_k^{a_k - s_k}
//! ```
//!
//! where each `a_k` ranges over `0..s_k`, `A_j = sum_{k != j} a_k`, and
//! `M_j = (s_j + A_j - 1)! / ((s_j - 1)! prod_{k != j} a_k!)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Factorials `0!, 1!, ..., n!` built by ascending products.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    values: Vec<BigUint>,
}

impl FactorialTable {
    pub fn up_to(n: u32) -> Self {
        let mut values = Vec::with_capacity(n as usize + 1);
        values.push(BigUint::one());
        for k in 1..=n {
            let next = &values[k as usize - 1] * BigUint::from(k);
            values.push(next);
        }
        FactorialTable { values }
    }

    pub fn get(&self, n: u32) -> &BigUint {
        &self.values[n as usize]
    }

    /// `(s + A - 1)! / ((s - 1)! prod a_k!)`. Requires `s >= 1` and the table
    /// to reach `s + A - 1`.
    fn multinomial(&self, s_pivot: u32, a: &[u32]) -> BigUint {
        let total: u32 = a.iter().sum();
        let numer = self.get(s_pivot + total - 1);
        let denom = a
            .iter()
            .fold(self.get(s_pivot - 1).clone(), |acc, &ak| acc * self.get(ak));
        let (quot, rem) = numer.div_rem(&denom);
        assert!(rem.is_zero(), "multinomial ratio is not an integer");
        quot
    }
}

/// `M = (s_pivot + A - 1)! / ((s_pivot - 1)! prod a_k!)` with `A = sum a_k`.
pub fn multinomial_m(s_pivot: u32, a: &[u32]) -> Result<BigUint> {
    if s_pivot == 0 {
        return Err(Error::Precondition("pivot exponent must be at least 1"));
    }
    let total: u32 = a.iter().sum();
    let table = FactorialTable::up_to(s_pivot + total - 1);
    Ok(table.multinomial(s_pivot, a))
}

/// One summand of the expansion for a fixed pivot `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionTerm {
    /// 1-based pivot position.
    pub pivot: usize,
    /// `a_k` for every `k != pivot`, in ascending `k`.
    pub a: Vec<u32>,
    /// `A_j = sum a_k`.
    pub a_total: u32,
    /// Multinomial coefficient `M_j`.
    pub m: BigUint,
    /// Exponent `s_j + A_j` carried by the total `x`.
    pub pivot_exponent: u32,
}

impl PartialFractionTerm {
    /// The surviving exponents `s_k - a_k` for `k != pivot`, in ascending `k`.
    pub fn remaining_exponents(&self, s: &[u32]) -> Vec<u32> {
        s.iter()
            .enumerate()
            .filter(|&(k, _)| k + 1 != self.pivot)
            .zip(&self.a)
            .map(|((_, &sk), &ak)| sk - ak)
            .collect()
    }
}

fn check_exponents(s: &[u32]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyIndex);
    }
    match s.iter().position(|&v| v == 0) {
        Some(i) => Err(Error::NonPositiveArgument {
            position: i + 1,
            value: 0,
        }),
        None => Ok(()),
    }
}

/// All terms for pivot `j` (1-based). The tuples `(a_k)_{k != j}` are
/// enumerated lexicographically with `k` ascending, so there are
/// `prod_{k != j} s_k` of them.
pub fn partial_fraction_terms(s: &[u32], j: usize) -> Result<Vec<PartialFractionTerm>> {
    check_exponents(s)?;
    if j == 0 || j > s.len() {
        return Err(Error::PivotOutOfRange {
            pivot: j,
            len: s.len(),
        });
    }
    let s_pivot = s[j - 1];
    let bounds: Vec<u32> = s
        .iter()
        .enumerate()
        .filter(|&(k, _)| k + 1 != j)
        .map(|(_, &sk)| sk)
        .collect();
    let max_total: u32 = bounds.iter().map(|b| b - 1).sum();
    let table = FactorialTable::up_to(s_pivot + max_total - 1);

    let count: usize = bounds.iter().map(|&b| b as usize).product();
    let mut terms = Vec::with_capacity(count);
    let mut a = vec![0u32; bounds.len()];
    loop {
        let a_total: u32 = a.iter().sum();
        terms.push(PartialFractionTerm {
            pivot: j,
            a: a.clone(),
            a_total,
            m: table.multinomial(s_pivot, &a),
            pivot_exponent: s_pivot + a_total,
        });
        // odometer, last position fastest
        let mut pos = a.len();
        loop {
            if pos == 0 {
                return Ok(terms);
            }
            pos -= 1;
            if a[pos] + 1 < bounds[pos] {
                a[pos] += 1;
                a[pos + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// Every term of the expansion, pivot by pivot.
pub fn all_partial_fraction_terms(s: &[u32]) -> Result<Vec<PartialFractionTerm>> {
    let mut out = Vec::new();
    for j in 1..=s.len() {
        out.extend(partial_fraction_terms(s, j)?);
    }
    Ok(out)
}

fn signed_power(x: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        x.pow(exp as u32)
    } else {
        x.recip().pow((-exp) as u32)
    }
}

/// Evaluates both sides of the expansion exactly at `x` and compares them.
pub fn lemma_identity_holds(x: &[Rational], s: &[u32]) -> Result<bool> {
    if x.len() != s.len() {
        return Err(Error::LengthMismatch {
            x: x.len(),
            s: s.len(),
        });
    }
    check_exponents(s)?;
    if let Some(k) = x.iter().position(Rational::is_zero) {
        return Err(Error::ZeroVariable(k + 1));
    }
    let total: Rational = x.iter().sum();
    if total.is_zero() {
        return Err(Error::ZeroTotal);
    }

    let lhs = x.iter().zip(s).fold(Rational::one(), |acc, (xk, &sk)| {
        acc * signed_power(xk, -(sk as i64))
    });

    let mut rhs = Rational::zero();
    for term in all_partial_fraction_terms(s)? {
        let mut value =
            Rational::from(term.m.clone()) * signed_power(&total, -(term.pivot_exponent as i64));
        let others = x
            .iter()
            .zip(s)
            .enumerate()
            .filter(|&(k, _)| k + 1 != term.pivot)
            .map(|(_, pair)| pair);
        for ((xk, &sk), &ak) in others.zip(&term.a) {
            value = value * signed_power(xk, ak as i64 - sk as i64);
        }
        rhs += value;
    }
    Ok(lhs == rhs)
}
