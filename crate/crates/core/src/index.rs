//! Argument tuples for the three kinds of sums the reducer manipulates.

use std::fmt;

use crate::error::{Error, Result};

fn check_positive(args: &[u32]) -> Result<()> {
    if args.is_empty() {
        return Err(Error::EmptyIndex);
    }
    match args.iter().position(|&s| s == 0) {
        Some(i) => Err(Error::NonPositiveArgument {
            position: i + 1,
            value: 0,
        }),
        None => Ok(()),
    }
}

fn join(args: &[u32]) -> String {
    args.iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Arguments `(s_1, ..., s_r; s)` of the Mordell-Tornheim sum
///
/// ```text
/// T(s_1,...,s_r; s) = sum_{m_1,...,m_r >= 1} 1 / (m_1^{s_1} ... m_r^{s_r} (m_1 + ... + m_r)^s)
/// ```
///
/// With every argument a positive integer the series converges absolutely.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MtIndex {
    args: Vec<u32>,
    last: u32,
}

impl MtIndex {
    pub fn new(args: Vec<u32>, last: u32) -> Result<Self> {
        check_positive(&args)?;
        if last == 0 {
            return Err(Error::NonPositiveArgument {
                position: args.len() + 1,
                value: 0,
            });
        }
        Ok(MtIndex { args, last })
    }

    /// `T(1,...,1; s)` with `r` ones.
    pub fn ones(r: usize, last: u32) -> Result<Self> {
        MtIndex::new(vec![1; r], last)
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn last(&self) -> u32 {
        self.last
    }

    pub fn depth(&self) -> usize {
        self.args.len()
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum::<u32>() + self.last
    }
}

impl fmt::Display for MtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({};{})", join(&self.args), self.last)
    }
}

/// Arguments of the multiple zeta value
///
/// ```text
/// zeta(s_1,...,s_r) = sum_{n_1 > n_2 > ... > n_r > 0} n_1^{-s_1} ... n_r^{-s_r}
/// ```
///
/// The first argument belongs to the largest summation variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MzvIndex {
    args: Vec<u32>,
}

impl MzvIndex {
    pub fn new(args: Vec<u32>) -> Result<Self> {
        check_positive(&args)?;
        Ok(MzvIndex { args })
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn depth(&self) -> usize {
        self.args.len()
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }

    /// First argument at least 2; with the remaining arguments positive this
    /// is enough for convergence.
    pub fn is_admissible(&self) -> bool {
        self.args[0] >= 2
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z({})", join(&self.args))
    }
}

/// The intermediate sum
///
/// ```text
/// T_l(s_1,...,s_r) = sum_{m_1,...,m_r >= 1} prod_{k <= l} m_k^{-s_k} * prod_{k > l} n_k^{-s_k}
/// ```
///
/// where `n_k = m_1 + ... + m_k`. The first `l` variables appear on their own,
/// the remaining ones only through the running sums.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TlIndex {
    args: Vec<u32>,
    level: usize,
}

impl TlIndex {
    /// Requires `1 <= level <= depth - 1`. Depth 1 is accepted with level 1,
    /// where the sum is the single zeta value `zeta(s_1)`.
    pub fn new(args: Vec<u32>, level: usize) -> Result<Self> {
        check_positive(&args)?;
        let depth = args.len();
        let max_level = depth.saturating_sub(1).max(1);
        if level == 0 || level > max_level {
            return Err(Error::LevelOutOfRange { level, depth });
        }
        Ok(TlIndex { args, level })
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn depth(&self) -> usize {
        self.args.len()
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }
}

impl fmt::Display for TlIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}({})", self.level, join(&self.args))
    }
}
