//! Sufficient conditions for absolute convergence, decided exactly over
//! rational real parts.

use crate::rational::Rational;

/// Real parts of the arguments. `sigma_last` is present for a
/// Mordell-Tornheim query and absent for a multiple zeta query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceQuery {
    pub sigmas: Vec<Rational>,
    pub sigma_last: Option<Rational>,
}

impl ConvergenceQuery {
    pub fn mzv(sigmas: Vec<Rational>) -> Self {
        ConvergenceQuery {
            sigmas,
            sigma_last: None,
        }
    }

    pub fn mt(sigmas: Vec<Rational>, sigma_last: Rational) -> Self {
        ConvergenceQuery {
            sigmas,
            sigma_last: Some(sigma_last),
        }
    }

    /// First `k` (1-based) where the criterion fails, or `None` when it
    /// certifies absolute convergence. MT queries are sorted ascending first.
    pub fn first_failing_k(&self) -> Option<usize> {
        match &self.sigma_last {
            None => first_failing_prefix(&self.sigmas, Rational::zero()),
            Some(last) => {
                let mut sorted = self.sigmas.clone();
                sorted.sort();
                first_failing_prefix(&sorted, last.clone())
            }
        }
    }

    pub fn converges(&self) -> bool {
        self.first_failing_k().is_none()
    }
}

/// Smallest `k` with `offset + sigma_1 + ... + sigma_k <= k`.
fn first_failing_prefix(sigmas: &[Rational], offset: Rational) -> Option<usize> {
    let mut partial = offset;
    for (i, sigma) in sigmas.iter().enumerate() {
        partial += sigma;
        let k = i + 1;
        if partial <= Rational::from(k as i64) {
            return Some(k);
        }
    }
    None
}

/// `sum_{j<=k} sigma_j > k` for every `k`. The order of `sigmas` matters.
pub fn mzv_convergence_check(sigmas: &[Rational]) -> bool {
    first_failing_prefix(sigmas, Rational::zero()).is_none()
}

/// After sorting ascending, `sigma + sum_{j<=k} sigma_j > k` for every `k`.
pub fn mt_convergence_check(sigmas: &[Rational], sigma_last: &Rational) -> bool {
    ConvergenceQuery::mt(sigmas.to_vec(), sigma_last.clone()).converges()
}
