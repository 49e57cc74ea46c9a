//! Floating-point evaluation with explicit error bounds.
//!
//! The main route splits the iterated integral of an admissible multiple
//! zeta value at `1/2`. Writing the index as a word in the forms
//! `a = dt/t` and `b = dt/(1-t)` (`s_j` becomes `a^{s_j - 1} b`),
//!
//! ```text
//! zeta(w) = sum_{i=0}^{|w|} L(dual(w_1..w_i)) * L(w_{i+1}..w_|w|)
//! ```
//!
//! where `dual` reverses a word and swaps `a <-> b`, and `L(u)` is the
//! multiple polylogarithm of `u` at `1/2`, a nested sum weighted by `2^{-n_1}`.
//! Every factor lies in `[0, 1]` and all summands are positive, so the
//! truncation error of each factor is easy to bound and does not amplify.
//!
//! [`eval_mzv_float_direct`] is a second, slower route that truncates the
//! defining series and bounds the tail by an integral. It shares no code with
//! the main route and serves as a cross-check.

use crate::combination::MzvCombination;
use crate::error::{Error, Result};
use crate::index::{MtIndex, MzvIndex};
use crate::reduce::reduce;

/// Smallest error bound a caller may request.
pub const EPS_FLOOR: f64 = 1e-10;

/// Largest cutoff the direct route will try.
pub const DIRECT_MAX_CUTOFF: u64 = 1 << 24;

/// An approximation together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatEstimate {
    pub value: f64,
    pub error_bound: f64,
    /// Truncation point used for the innermost series.
    pub cutoff: u64,
}

fn check_eps(eps: f64) -> Result<()> {
    if !eps.is_finite() || eps < EPS_FLOOR {
        return Err(Error::EpsTooSmall {
            requested: eps,
            achievable: EPS_FLOOR,
        });
    }
    Ok(())
}

/// `true` is the form `dt/t`, `false` is `dt/(1-t)`.
fn to_word(args: &[u32]) -> Vec<bool> {
    let mut word = Vec::new();
    for &s in args {
        word.extend(std::iter::repeat_n(true, s as usize - 1));
        word.push(false);
    }
    word
}

/// Inverse of [`to_word`]; the word must end in `dt/(1-t)`.
fn from_word(word: &[bool]) -> Vec<u32> {
    let mut args = Vec::new();
    let mut run = 0;
    for &letter in word {
        if letter {
            run += 1;
        } else {
            args.push(run + 1);
            run = 0;
        }
    }
    debug_assert_eq!(run, 0, "word must end in dt/(1-t)");
    args
}

fn dual(word: &[bool]) -> Vec<bool> {
    word.iter().rev().map(|&letter| !letter).collect()
}

/// Bound on `sum_{n > N} 2^{-n} n^{depth-1}`, valid for `N >= 2 depth`.
fn half_tail_bound(n_max: u64, depth: usize) -> f64 {
    let n = (n_max + 1) as f64;
    6.0 * 0.5f64.powf(n) * n.powi(depth as i32 - 1)
}

fn half_cutoff(depth: usize, target: f64) -> u64 {
    let mut n = 2 * depth as u64;
    while half_tail_bound(n, depth) > target {
        n += 1;
    }
    n
}

/// `sum_{N >= n_1 > ... > n_m > 0} 2^{-n_1} prod_j n_j^{-t_j}`.
fn polylog_half_truncated(index: &[u32], n_max: u64) -> f64 {
    if index.is_empty() {
        return 1.0;
    }
    let depth = index.len();
    let mut below = vec![0.0f64; depth];
    let mut scratch = vec![0.0f64; depth];
    let mut weight = 1.0f64;
    for n in 1..=n_max {
        weight *= 0.5;
        let nf = n as f64;
        let mut inner = 1.0;
        for j in (0..depth).rev() {
            scratch[j] = inner * nf.powi(-(index[j] as i32));
            inner = below[j];
        }
        scratch[0] *= weight;
        for j in 0..depth {
            below[j] += scratch[j];
        }
    }
    below[0]
}

/// Approximates an admissible multiple zeta value to within `eps`.
pub fn eval_mzv_float(z: &MzvIndex, eps: f64) -> Result<FloatEstimate> {
    check_eps(eps)?;
    eval_mzv_to(z, eps)
}

/// Like [`eval_mzv_float`] without the floor on `eps`; fails only when
/// rounding makes the target unreachable.
fn eval_mzv_to(z: &MzvIndex, eps: f64) -> Result<FloatEstimate> {
    if !z.is_admissible() {
        return Err(Error::NotAdmissible(z.to_string()));
    }
    let word = to_word(z.args());
    let pieces = word.len() + 1;
    // half the budget for truncation, split over 2 factors per piece
    let target = eps / (4.0 * pieces as f64);
    let depth_cap = z.depth().max(word.len() - z.depth());
    let cutoff = half_cutoff(depth_cap.max(1), target);

    let mut value = 0.0;
    let mut bound = 0.0;
    for i in 0..=word.len() {
        let left = from_word(&dual(&word[..i]));
        let right = from_word(&word[i..]);
        value += polylog_half_truncated(&left, cutoff) * polylog_half_truncated(&right, cutoff);
        for factor in [&left, &right] {
            if !factor.is_empty() {
                let ops = (cutoff as usize * factor.len() + 2) as f64;
                bound += half_tail_bound(cutoff, factor.len()) + 4.0 * ops * f64::EPSILON;
            }
        }
        bound += 2.0 * f64::EPSILON;
    }
    if bound > eps {
        return Err(Error::EpsTooSmall {
            requested: eps,
            achievable: bound,
        });
    }
    Ok(FloatEstimate {
        value,
        error_bound: bound,
        cutoff,
    })
}

/// Approximates `sum coeff * zeta(key)` to within `eps`.
pub fn eval_combination_float(c: &MzvCombination, eps: f64) -> Result<FloatEstimate> {
    check_eps(eps)?;
    let total_weight: f64 = c.iter().map(|(_, q)| q.abs().to_f64()).sum();
    let per_term = if total_weight > 0.0 {
        eps / total_weight
    } else {
        eps
    };
    let mut value = 0.0;
    let mut bound = 0.0;
    let mut cutoff = 0;
    for (key, coeff) in c {
        let est = eval_mzv_to(key, per_term)?;
        let q = coeff.to_f64();
        value += q * est.value;
        bound += q.abs() * est.error_bound;
        cutoff = cutoff.max(est.cutoff);
    }
    bound += c.len() as f64 * 2.0 * f64::EPSILON * value.abs();
    if bound > eps {
        return Err(Error::EpsTooSmall {
            requested: eps,
            achievable: bound,
        });
    }
    Ok(FloatEstimate {
        value,
        error_bound: bound,
        cutoff,
    })
}

/// Approximates a Mordell-Tornheim value through its reduction.
pub fn eval_mt_float(t: &MtIndex, eps: f64) -> Result<FloatEstimate> {
    eval_combination_float(&reduce(t), eps)
}

/// Bound on `sum_{n > N} n^{-s} (1 + ln n)^q / q!`, via the integral over
/// `[N, inf)`, which is in closed form through the incomplete gamma function.
/// Needs the summand to be decreasing past `N`: `1 + ln N >= q / s`.
fn integral_tail_bound(n_max: u64, s: u32, q: usize) -> f64 {
    let n = n_max as f64;
    let sm1 = (s - 1) as f64;
    let x = sm1 * (1.0 + n.ln());
    let mut partial = 0.0;
    let mut term = 1.0;
    for k in 0..=q {
        if k > 0 {
            term *= x / k as f64;
        }
        partial += term;
    }
    n.powf(-sm1) / sm1.powi(q as i32 + 1) * partial
}

fn mzv_truncated_f64(args: &[u32], n_max: u64) -> f64 {
    let depth = args.len();
    let mut below = vec![0.0f64; depth];
    let mut scratch = vec![0.0f64; depth];
    for n in 1..=n_max {
        let nf = n as f64;
        let mut inner = 1.0;
        for j in (0..depth).rev() {
            scratch[j] = inner * nf.powi(-(args[j] as i32));
            inner = below[j];
        }
        for j in 0..depth {
            below[j] += scratch[j];
        }
    }
    below[0]
}

/// Direct truncation at `n_1 <= N` with the outer tail bounded by
/// `int_N^inf x^{-s_1} (1 + ln x)^{r-1} / (r-1)! dx`, doubling `N` until the
/// bound meets `eps`. Converges like `log(N)^{r-1} / N^{s_1 - 1}`, so small
/// `eps` is only reachable for large leading exponents.
pub fn eval_mzv_float_direct(z: &MzvIndex, eps: f64) -> Result<FloatEstimate> {
    check_eps(eps)?;
    if !z.is_admissible() {
        return Err(Error::NotAdmissible(z.to_string()));
    }
    let s = z.args()[0];
    let q = z.depth() - 1;
    let mut cutoff: u64 = 64;
    while (1.0 + (cutoff as f64).ln()) < q as f64 / s as f64 {
        cutoff *= 2;
    }
    loop {
        let tail = integral_tail_bound(cutoff, s, q);
        let rounding = 4.0 * (cutoff as f64) * (z.depth() as f64) * f64::EPSILON * 2.0;
        let bound = tail / 2.0 + rounding;
        if bound <= eps {
            let partial = mzv_truncated_f64(z.args(), cutoff);
            return Ok(FloatEstimate {
                value: partial + tail / 2.0,
                error_bound: bound,
                cutoff,
            });
        }
        if cutoff >= DIRECT_MAX_CUTOFF {
            return Err(Error::EpsTooSmall {
                requested: eps,
                achievable: bound,
            });
        }
        cutoff *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use std::f64::consts::PI;

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    fn z(args: &[u32]) -> MzvIndex {
        MzvIndex::new(args.to_vec()).unwrap()
    }

    #[test]
    fn word_round_trip() {
        let args = [3, 1, 2];
        assert_eq!(from_word(&to_word(&args)), args.to_vec());
        // dual of zeta(2,1) is zeta(3)
        assert_eq!(from_word(&dual(&to_word(&[2, 1]))), vec![3]);
    }

    #[test]
    fn single_values() {
        let est = eval_mzv_float(&z(&[2]), 1e-6).unwrap();
        assert!((est.value - PI * PI / 6.0).abs() < 1e-6);
        let est = eval_mzv_float(&z(&[4]), 1e-8).unwrap();
        assert!((est.value - PI.powi(4) / 90.0).abs() < 1e-8);
        assert!(est.error_bound <= 1e-8);
    }

    #[test]
    fn known_depth_two_and_three() {
        let est = eval_mzv_float(&z(&[2, 1]), 1e-4).unwrap();
        assert!((est.value - ZETA3).abs() < 1e-4);
        // zeta(3,1) = pi^4/360, zeta(2,1,1) = zeta(4)
        let est = eval_mzv_float(&z(&[3, 1]), 1e-10).unwrap();
        assert!((est.value - PI.powi(4) / 360.0).abs() < 1e-10);
        let est = eval_mzv_float(&z(&[2, 1, 1]), 1e-10).unwrap();
        assert!((est.value - PI.powi(4) / 90.0).abs() < 1e-10);
        // zeta(2,2) = pi^4/120
        let est = eval_mzv_float(&z(&[2, 2]), 1e-10).unwrap();
        assert!((est.value - PI.powi(4) / 120.0).abs() < 1e-10);
    }

    #[test]
    fn mt_values() {
        let t = MtIndex::new(vec![1, 1], 1).unwrap();
        let est = eval_mt_float(&t, 1e-4).unwrap();
        assert!((est.value - 2.0 * ZETA3).abs() < 1e-4);
        let t = MtIndex::new(vec![1], 1).unwrap();
        assert!((eval_mt_float(&t, 1e-6).unwrap().value - PI * PI / 6.0).abs() < 1e-6);
        // T(1,1;2) = 2 zeta(3,1) = 3 zeta(4) - zeta(2)^2
        let t = MtIndex::new(vec![1, 1], 2).unwrap();
        let expected = 3.0 * PI.powi(4) / 90.0 - (PI * PI / 6.0).powi(2);
        assert!((eval_mt_float(&t, 1e-4).unwrap().value - expected).abs() < 1e-4);
    }

    #[test]
    fn rejects_small_eps_and_non_admissible() {
        assert!(matches!(
            eval_mzv_float(&z(&[2]), 1e-12),
            Err(Error::EpsTooSmall { achievable, .. }) if achievable == EPS_FLOOR
        ));
        assert!(eval_mzv_float(&z(&[2]), f64::NAN).is_err());
        assert!(matches!(
            eval_mzv_float(&z(&[1, 2]), 1e-4),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn direct_route_agrees() {
        for (args, eps) in [
            (&[2][..], 1e-5),
            (&[4][..], 1e-8),
            (&[2, 1][..], 1e-4),
            (&[3, 1, 1][..], 1e-6),
        ] {
            let direct = eval_mzv_float_direct(&z(args), eps).unwrap();
            let main = eval_mzv_float(&z(args), 1e-10).unwrap();
            assert!(direct.error_bound <= eps);
            assert!((direct.value - main.value).abs() <= eps + 1e-10, "{args:?}");
        }
    }

    #[test]
    fn direct_route_reports_achievable_bound() {
        match eval_mzv_float_direct(&z(&[2, 1, 1, 1]), 1e-9) {
            Err(Error::EpsTooSmall { achievable, .. }) => assert!(achievable > 1e-9),
            other => panic!("expected EpsTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn shrinking_eps_is_cauchy() {
        let zi = z(&[3, 1, 2]);
        let coarse = eval_mzv_float(&zi, 1e-4).unwrap();
        let fine = eval_mzv_float(&zi, 1e-10).unwrap();
        assert!((coarse.value - fine.value).abs() <= coarse.error_bound + fine.error_bound);
    }

    #[test]
    fn combination_with_fraction() {
        let c: MzvCombination = [
            (z(&[2]), Rational::new(1, 2)),
            (z(&[4]), Rational::from(-3)),
        ]
        .into_iter()
        .collect();
        let est = eval_combination_float(&c, 1e-8).unwrap();
        let expected = PI * PI / 12.0 - 3.0 * PI.powi(4) / 90.0;
        assert!((est.value - expected).abs() < 1e-8);
    }
}
