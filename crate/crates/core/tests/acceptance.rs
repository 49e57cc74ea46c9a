//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use mtzv_core::reduce::reduce_level;
use mtzv_core::truncated::eval_tl_combination_truncated;
use mtzv_core::{
    closed_form_ones, eval_combination_float, eval_combination_truncated, eval_mt_float,
    lemma_identity_holds, mt_convergence_check, mzv_convergence_check, opposite_parity,
    product_to_mzv, reduce, reduce_top, truncated_mt, truncated_tl, ConvergenceQuery, MtIndex,
    MzvCombination, MzvIndex, Rational, TlIndex,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const CUTOFFS: [u64; 3] = [10, 25, 50];
const STAGE_CUTOFFS: [u64; 2] = [10, 25];
const STAGE_SAMPLES: usize = 20;
const LEMMA_SAMPLES: usize = 1000;
const PERMUTATION_SAMPLES: usize = 100;
const FLOAT_TOL: f64 = 1e-4;
const EULER_FLOAT_TOL: f64 = 1e-6;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// All compositions of `total` into `parts` positive integers.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (1..=total.saturating_sub(parts as u32 - 1))
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Every MT index with depth <= 3 and weight <= 8.
fn sweep() -> Vec<MtIndex> {
    let mut out = Vec::new();
    for depth in 1..=3usize {
        for weight in (depth as u32 + 1)..=8 {
            for parts in compositions(weight, depth + 1) {
                let (args, last) = parts.split_at(depth);
                out.push(MtIndex::new(args.to_vec(), last[0]).unwrap());
            }
        }
    }
    out
}

/// One rewrite: the truncated value of `left` must equal that of `right`.
#[derive(Clone)]
enum Rewrite {
    Top(MtIndex),
    Level(TlIndex),
}

fn stage_rewrites(t: &MtIndex) -> Vec<Rewrite> {
    if t.depth() < 2 {
        return Vec::new();
    }
    let mut out = vec![Rewrite::Top(t.clone())];
    let mut frontier: Vec<TlIndex> = reduce_top(t).unwrap().keys().cloned().collect();
    while frontier.first().is_some_and(|k| k.level() >= 2) {
        let mut next = Vec::new();
        for key in frontier {
            next.extend(reduce_level(&key).unwrap().keys().cloned());
            out.push(Rewrite::Level(key));
        }
        next.sort();
        next.dedup();
        frontier = next;
    }
    out
}

fn criterion_1(sweep: &[MtIndex], reduced: &[MzvCombination]) -> Outcome {
    let failures: Vec<String> = sweep
        .par_iter()
        .zip(reduced)
        .flat_map_iter(|(t, c)| {
            CUTOFFS
                .iter()
                .filter(move |&&n| truncated_mt(t, n) != eval_combination_truncated(c, n))
                .map(move |n| format!("{t} at N={n}"))
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "{} indices x N in {:?}, exact equality; mismatches: {:?}",
            sweep.len(),
            CUTOFFS,
            failures
        ),
    )
}

fn criterion_2(sweep: &[MtIndex]) -> Outcome {
    let mut all: Vec<Rewrite> = sweep.iter().flat_map(stage_rewrites).collect();
    let tops = all.iter().filter(|r| matches!(r, Rewrite::Top(_))).count();
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    all.shuffle(&mut rng);
    // keep both kinds of rewrite in the sample
    let mut sample: Vec<Rewrite> = all
        .iter()
        .filter(|r| matches!(r, Rewrite::Top(_)))
        .take(STAGE_SAMPLES / 2)
        .cloned()
        .collect();
    sample.extend(
        all.iter()
            .filter(|r| matches!(r, Rewrite::Level(_)))
            .take(STAGE_SAMPLES - sample.len())
            .cloned(),
    );

    let failures: Vec<String> = sample
        .par_iter()
        .flat_map_iter(|rw| {
            STAGE_CUTOFFS.iter().filter_map(move |&n| match rw {
                Rewrite::Top(t) => {
                    let rhs = eval_tl_combination_truncated(&reduce_top(t).unwrap(), n);
                    (truncated_mt(t, n) != rhs).then(|| format!("top {t} N={n}"))
                }
                Rewrite::Level(k) => {
                    let rhs = eval_tl_combination_truncated(&reduce_level(k).unwrap(), n);
                    (truncated_tl(k, n) != rhs).then(|| format!("level {k} N={n}"))
                }
            })
        })
        .collect();
    outcome(
        failures.is_empty() && sample.len() == STAGE_SAMPLES,
        format!(
            "{} sampled of {} rewrites ({} top), N in {:?}; mismatches: {:?}",
            sample.len(),
            all.len(),
            tops,
            STAGE_CUTOFFS,
            failures
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for r in 1..=5 {
        for s in 1..=4 {
            let t = MtIndex::ones(r, s).unwrap();
            if reduce(&t) != closed_form_ones(r, s).unwrap() {
                failures.push(t.to_string());
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("r<=5, s<=4; mismatches: {failures:?}"),
    )
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k as i64).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// zeta(s)zeta(t) = sum_{a<s} C(a+t-1,t-1) zeta(t+a,s-a) + sum_{a<t} C(a+s-1,s-1) zeta(s+a,t-a)
fn euler_decomposition(s: u32, t: u32) -> MzvCombination {
    let mut c = MzvCombination::new();
    for a in 0..s {
        c.add_term(
            MzvIndex::new(vec![t + a, s - a]).unwrap(),
            Rational::from(binomial(a + t - 1, t - 1)),
        );
    }
    for a in 0..t {
        c.add_term(
            MzvIndex::new(vec![s + a, t - a]).unwrap(),
            Rational::from(binomial(a + s - 1, s - 1)),
        );
    }
    c
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for s in 2..=6 {
        for t in 2..=6 {
            if product_to_mzv(&[s, t]).unwrap() != euler_decomposition(s, t) {
                failures.push((s, t));
            }
        }
    }
    let est = eval_combination_float(&product_to_mzv(&[2, 2]).unwrap(), 1e-8).unwrap();
    let target = PI.powi(4) / 36.0;
    let err = (est.value - target).abs();
    outcome(
        failures.is_empty() && err <= EULER_FLOAT_TOL,
        format!("2<=s,t<=6 mismatches: {failures:?}; |P(2,2) - pi^4/36| = {err:.2e} (tol {EULER_FLOAT_TOL:e})"),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    let mut failures = Vec::new();
    while checked < LEMMA_SAMPLES {
        let r = rng.gen_range(1..=4);
        let s: Vec<u32> = (0..r).map(|_| rng.gen_range(1..=4)).collect();
        let x: Vec<Rational> = (0..r)
            .map(|_| {
                let mut p = 0;
                while p == 0 {
                    p = rng.gen_range(-9i64..=9);
                }
                Rational::new(p, rng.gen_range(1i64..=9))
            })
            .collect();
        if x.iter().sum::<Rational>().is_zero() {
            continue;
        }
        checked += 1;
        if !lemma_identity_holds(&x, &s).unwrap() {
            failures.push((x, s));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} random inputs, r<=4, s_k<=4; failures: {}",
            failures.len()
        ),
    )
}

fn criterion_6(sweep: &[MtIndex], reduced: &[MzvCombination]) -> Outcome {
    let mut failures = Vec::new();
    for (t, c) in sweep.iter().zip(reduced) {
        let ok = !c.is_empty()
            && c.iter().all(|(key, coeff)| {
                coeff.is_integer()
                    && coeff.is_positive()
                    && key.weight() == t.weight()
                    && key.depth() == t.depth()
                    && key.is_admissible()
                    && mzv_convergence_check(
                        &key.args()
                            .iter()
                            .map(|&v| Rational::from(v as i64))
                            .collect::<Vec<_>>(),
                    )
            });
        if !ok {
            failures.push(t.to_string());
        }
    }
    outcome(
        failures.is_empty(),
        format!("{} reductions; violations: {failures:?}", sweep.len()),
    )
}

fn criterion_7(sweep: &[MtIndex]) -> Outcome {
    let counter = ConvergenceQuery::mzv(vec![
        Rational::from(2),
        Rational::from(0),
        Rational::from(2),
    ]);
    let counter_ok = counter.first_failing_k() == Some(2);

    let mt_fail: Vec<String> = sweep
        .iter()
        .filter(|t| {
            let sigmas: Vec<Rational> =
                t.args().iter().map(|&v| Rational::from(v as i64)).collect();
            !mt_convergence_check(&sigmas, &Rational::from(t.last() as i64))
        })
        .map(|t| t.to_string())
        .collect();

    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut perm_fail = 0;
    for _ in 0..PERMUTATION_SAMPLES {
        let r = rng.gen_range(1..=6);
        let sigmas: Vec<Rational> = (0..r)
            .map(|_| Rational::new(rng.gen_range(-6i64..=8), rng.gen_range(1i64..=4)))
            .collect();
        let last = Rational::new(rng.gen_range(-2i64..=6), rng.gen_range(1i64..=3));
        let mut shuffled = sigmas.clone();
        shuffled.shuffle(&mut rng);
        if mt_convergence_check(&sigmas, &last) != mt_convergence_check(&shuffled, &last) {
            perm_fail += 1;
        }
    }
    outcome(
        counter_ok && mt_fail.is_empty() && perm_fail == 0,
        format!(
            "(2,0,2) fails at k={:?}; MT sweep failures: {mt_fail:?}; permutation mismatches: {perm_fail}/{PERMUTATION_SAMPLES}",
            counter.first_failing_k()
        ),
    )
}

/// Riemann zeta at an integer `s >= 2` by Euler-Maclaurin summation, with
/// no dependence on the library.
fn zeta_single(s: u32) -> f64 {
    const BERNOULLI: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let s_f = s as f64;
    let n = 20.0f64;
    let mut sum: f64 = (1..20).map(|k| (k as f64).powf(-s_f)).sum();
    sum += n.powf(1.0 - s_f) / (s_f - 1.0) + 0.5 * n.powf(-s_f);
    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    let mut rising = s_f;
    let mut factorial = 2.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = k + 1;
        if k > 1 {
            rising *= (s_f + 2.0 * k as f64 - 3.0) * (s_f + 2.0 * k as f64 - 2.0);
            factorial *= (2 * k - 1) as f64 * (2 * k) as f64;
        }
        sum += b / factorial * rising * n.powf(-s_f - 2.0 * k as f64 + 1.0);
    }
    sum
}

fn factorial(r: usize) -> f64 {
    (1..=r).map(|k| k as f64).product()
}

fn criterion_8() -> Outcome {
    // the oracle itself against closed forms
    let oracle_ok = (zeta_single(2) - PI * PI / 6.0).abs() < 1e-12
        && (zeta_single(4) - PI.powi(4) / 90.0).abs() < 1e-12
        && (zeta_single(3) - 1.202_056_903_159_594_3).abs() < 1e-12;

    let mut worst: f64 = 0.0;
    let mut lines = Vec::new();
    for r in 1..=4usize {
        let rf = r as f64;
        let one = eval_mt_float(&MtIndex::ones(r, 1).unwrap(), 1e-8)
            .unwrap()
            .value;
        let expected_one = factorial(r) * zeta_single(r as u32 + 1);
        let two = eval_mt_float(&MtIndex::ones(r, 2).unwrap(), 1e-8)
            .unwrap()
            .value;
        let products: f64 = (1..r)
            .map(|k| zeta_single(k as u32 + 1) * zeta_single((r + 1 - k) as u32))
            .sum();
        let expected_two =
            factorial(r) * ((rf + 1.0) / 2.0 * zeta_single(r as u32 + 2) - 0.5 * products);
        let e1 = (one - expected_one).abs();
        let e2 = (two - expected_two).abs();
        worst = worst.max(e1).max(e2);
        lines.push(format!("r={r}: {e1:.1e}/{e2:.1e}"));
    }
    outcome(
        oracle_ok && worst <= FLOAT_TOL,
        format!(
            "s=1/s=2 identities, r<=4, max error {worst:.2e} (tol {FLOAT_TOL:e}); {}",
            lines.join(", ")
        ),
    )
}

fn criterion_9(sweep: &[MtIndex], reduced: &[MzvCombination]) -> Outcome {
    let mut predicate_fail = Vec::new();
    for r in 1..=6usize {
        for w in 1..=12u32 {
            if opposite_parity(w, r) != ((w as usize + r) % 2 == 1) {
                predicate_fail.push((w, r));
            }
        }
    }
    let relation_fail: Vec<String> = sweep
        .iter()
        .zip(reduced)
        .filter(|(t, c)| {
            let want = opposite_parity(t.weight(), t.depth());
            c.keys()
                .any(|k| opposite_parity(k.weight(), k.depth()) != want)
        })
        .map(|(t, _)| t.to_string())
        .collect();
    outcome(
        predicate_fail.is_empty() && relation_fail.is_empty(),
        format!("predicate mismatches: {predicate_fail:?}; parity changes under reduction: {relation_fail:?}"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sweep = sweep();
    let reduced: Vec<MzvCombination> = sweep.iter().map(reduce).collect();

    let criteria: Vec<Criterion> = vec![
        (
            "1 exact truncation equivalence",
            Box::new(|| criterion_1(&sweep, &reduced)),
        ),
        (
            "2 stagewise truncation equivalence",
            Box::new(|| criterion_2(&sweep)),
        ),
        ("3 all-ones closed form", Box::new(criterion_3)),
        ("4 Euler decomposition", Box::new(criterion_4)),
        ("5 partial fraction identity", Box::new(criterion_5)),
        (
            "6 structural invariants",
            Box::new(|| criterion_6(&sweep, &reduced)),
        ),
        ("7 convergence criteria", Box::new(|| criterion_7(&sweep))),
        ("8 all-ones float identities", Box::new(criterion_8)),
        (
            "9 parity predicate",
            Box::new(|| criterion_9(&sweep, &reduced)),
        ),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let t0 = Instant::now();
        let result = run();
        let status = if result.passed { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {name} ({:.1}s): {}",
            t0.elapsed().as_secs_f64(),
            result.detail
        );
        if !result.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
