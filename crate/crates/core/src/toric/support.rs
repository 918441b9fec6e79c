use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, ToricError};

/// Largest ambient dimension for which supports can be enumerated at all.
/// Front ends apply their own, usually much smaller, cap.
pub const MAX_AMBIENT_DIM: usize = 24;

/// Default cap on the ambient dimension for `2^n` support enumeration.
pub const DEFAULT_SUPPORT_CAP: usize = 12;

pub(crate) fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_AMBIENT_DIM {
        return Err(ToricError::SupportCapExceeded {
            n,
            cap: MAX_AMBIENT_DIM,
        });
    }
    Ok(())
}

/// A set of coordinate indices (0-based), stored as a bit mask.
///
/// The total order sorts by cardinality, then lexicographically by the
/// sorted index lists. It is a linear extension of inclusion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Support(u64);

impl Support {
    pub fn empty() -> Support {
        Support(0)
    }

    pub fn full(n: usize) -> Support {
        debug_assert!(n < 64);
        Support((1u64 << n) - 1)
    }

    pub fn from_indices(indices: &[usize]) -> Support {
        Support(indices.iter().fold(0, |m, &i| m | 1 << i))
    }

    pub fn from_mask(mask: u64) -> Support {
        Support(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `self`, sorted by the support order.
    pub fn subsets(self) -> Vec<Support> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = self.0;
        loop {
            out.push(Support(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.0;
        }
        out.sort();
        out
    }

    /// Positions of `self`'s elements inside `within` (both sorted); this is
    /// how a sub-support is addressed in the local coordinates of `within`.
    pub fn local_indices(self, within: Support) -> Vec<usize> {
        debug_assert!(self.is_subset_of(within));
        within
            .indices()
            .iter()
            .enumerate()
            .filter(|(_, &g)| self.contains(g))
            .map(|(l, _)| l)
            .collect()
    }

    /// Inverse of [`Support::local_indices`].
    pub fn from_local(local: &[usize], within: Support) -> Support {
        let global = within.indices();
        Support::from_indices(&local.iter().map(|&l| global[l]).collect::<Vec<_>>())
    }

    /// 1-based indices, the convention used in all user-facing output.
    pub fn one_based(self) -> Vec<usize> {
        self.indices().into_iter().map(|i| i + 1).collect()
    }
}

impl Ord for Support {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.one_based().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
