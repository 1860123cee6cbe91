//! Brute-force combinatorial definitions of the q-Stirling numbers, and the
//! two statistic-preserving bijections.
//!
//! This module is deliberately the slow oracle: `S2[n,k]` is summed over set
//! partitions weighted by crossings (equivalently rook placements weighted by
//! inversions), `S1[n,k]` over permutations weighted by special inversions.
//! Everything else in the crate is checked against these sums.
//!
//! Enumeration orders are deterministic: set partitions are generated as
//! restricted-growth strings in lexicographic order, permutations in
//! lexicographic order, so failure reports are reproducible.

mod dyck;
mod partitions;
mod permutations;
mod rooks;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::exactmath::QPoly;

pub use dyck::{
    bounding_path, for_each_weighted_dyck_path, perm_to_weighted_path, weight_matches_stats,
    weighted_path_to_perm, DownWeight, DyckStep, WeightedDyckPath,
};
pub use partitions::{crossings, for_each_set_partition, SetPartition};
pub use permutations::{for_each_permutation, perm_stats, PermStats, Permutation};
pub use rooks::{for_each_rook_placement, partition_to_rooks, rook_inversions, RookPlacement};

/// Default bound on `n` for set-partition enumeration (Bell growth).
pub const DEFAULT_PARTITION_BOUND: usize = 12;
/// Default bound on `n` for permutation enumeration (factorial growth).
pub const DEFAULT_PERMUTATION_BOUND: usize = 10;

/// Errors from the enumeration module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    /// `n` exceeds the enumeration bound for this operation.
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    /// Not a permutation of `1..=n`.
    #[error("images are not a permutation of 1..=n")]
    InvalidPermutation,
    /// Blocks do not partition `{1..=n}`.
    #[error("blocks do not partition 1..=n: {0}")]
    InvalidPartition(String),
    /// Rooks outside the staircase or clashing in a row or column.
    #[error("invalid rook placement: {0}")]
    InvalidPlacement(String),
    /// A weighted Dyck path violating the weight rules.
    #[error("invalid weighted path: {0}")]
    InvalidPath(String),
}

/// `S2[n,k]` by direct enumeration: the sum of `q^crossings` over set
/// partitions of `{1..=n}` with `k` blocks. `S2[0,0] = 1`; zero for `k > n`
/// or (`n >= 1`, `k = 0`).
pub fn s2_enum(n: usize, k: usize) -> Result<QPoly, EnumError> {
    s2_enum_with_bound(n, k, DEFAULT_PARTITION_BOUND)
}

/// [`s2_enum`] with an explicit enumeration bound.
pub fn s2_enum_with_bound(n: usize, k: usize, bound: usize) -> Result<QPoly, EnumError> {
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    let row = s2_row_cached(n);
    Ok(row.get(k).cloned().unwrap_or_else(QPoly::zero))
}

/// The whole row `S2[n, 0..=n]` in one sweep over all set partitions of
/// `{1..=n}`.
pub fn s2_enum_row(n: usize) -> Result<Vec<QPoly>, EnumError> {
    if n > DEFAULT_PARTITION_BOUND {
        return Err(EnumError::BoundExceeded {
            n,
            bound: DEFAULT_PARTITION_BOUND,
        });
    }
    Ok(s2_row_cached(n))
}

/// `S1[n,k]` by direct enumeration: the sum of `q^special_inversions` over
/// permutations of `{1..=n}` with `k` right-to-left maxima.
pub fn s1_enum(n: usize, k: usize) -> Result<QPoly, EnumError> {
    s1_enum_with_bound(n, k, DEFAULT_PERMUTATION_BOUND)
}

/// [`s1_enum`] with an explicit enumeration bound.
pub fn s1_enum_with_bound(n: usize, k: usize, bound: usize) -> Result<QPoly, EnumError> {
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    let row = s1_row_cached(n);
    Ok(row.get(k).cloned().unwrap_or_else(QPoly::zero))
}

/// The whole row `S1[n, 0..=n]` in one sweep over all permutations.
pub fn s1_enum_row(n: usize) -> Result<Vec<QPoly>, EnumError> {
    if n > DEFAULT_PERMUTATION_BOUND {
        return Err(EnumError::BoundExceeded {
            n,
            bound: DEFAULT_PERMUTATION_BOUND,
        });
    }
    Ok(s1_row_cached(n))
}

// Rows are deterministic, so memoize them; the identity verifications query
// many single cells from the same few rows.
fn s2_row_cached(n: usize) -> Vec<QPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<QPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let row = partitions::s2_row_sweep(n);
    cache.lock().unwrap().insert(n, row.clone());
    row
}

fn s1_row_cached(n: usize) -> Vec<QPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<QPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let row = permutations::s1_row_sweep(n);
    cache.lock().unwrap().insert(n, row.clone());
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QPoly;

    #[test]
    fn s2_enum_table_values() {
        assert_eq!(s2_enum(4, 2).unwrap(), QPoly::from_coeffs([6, 1]));
        assert_eq!(s2_enum(5, 2).unwrap(), QPoly::from_coeffs([10, 4, 1]));
        for n in 0..=7 {
            assert_eq!(s2_enum(n, n).unwrap(), QPoly::one());
        }
        assert_eq!(s2_enum(0, 0).unwrap(), QPoly::one());
        assert_eq!(s2_enum(3, 0).unwrap(), QPoly::zero());
        assert_eq!(s2_enum(3, 7).unwrap(), QPoly::zero());
    }

    #[test]
    fn s1_enum_table_values() {
        assert_eq!(s1_enum(4, 1).unwrap(), QPoly::from_coeffs([1, 2, 2, 1]));
        assert_eq!(s1_enum(5, 2).unwrap(), QPoly::from_coeffs([10, 18, 15, 7]));
        for n in 0..=7 {
            assert_eq!(s1_enum(n, n).unwrap(), QPoly::one());
        }
        assert_eq!(s1_enum(4, 0).unwrap(), QPoly::zero());
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(
            s2_enum(13, 2),
            Err(EnumError::BoundExceeded { n: 13, bound: 12 })
        );
        assert_eq!(
            s1_enum(11, 2),
            Err(EnumError::BoundExceeded { n: 11, bound: 10 })
        );
        assert!(s2_enum_with_bound(4, 2, 3).is_err());
    }
}
