use crate::exactmath::QPoly;
use num_bigint::BigInt;

use super::EnumError;

/// A permutation of `{1..=n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validate one-line images `sigma(1), ..., sigma(n)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, EnumError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(EnumError::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// The two statistics of a permutation used by `S1[n,k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermStats {
    /// Special inversions: inversions `(i,j)` with some `k > j` satisfying
    /// `sigma(k) > sigma(i)` — equivalently, inversion cells strictly below
    /// the bounding path of the permutation graph.
    pub special_inversions: usize,
    /// Right-to-left maxima: positions `i` with `sigma(i) > sigma(j)` for
    /// every `j > i`.
    pub rlm: usize,
}

/// Compute both statistics in `O(n^2)` via suffix maxima: the inversion
/// `(i,j)` is special iff `sigma(i) < max(sigma(j+1..=n))`.
pub fn perm_stats(p: &Permutation) -> PermStats {
    stats_of(p.images())
}

pub(super) fn stats_of(sigma: &[usize]) -> PermStats {
    let n = sigma.len();
    // suffix_max[j] = max of sigma[j..], with suffix_max[n] = 0
    let mut suffix_max = vec![0usize; n + 1];
    for j in (0..n).rev() {
        suffix_max[j] = suffix_max[j + 1].max(sigma[j]);
    }
    let rlm = (0..n).filter(|&i| sigma[i] > suffix_max[i + 1]).count();
    let mut special = 0;
    for j in 1..n {
        let cap = suffix_max[j + 1];
        for i in 0..j {
            if sigma[i] > sigma[j] && sigma[i] < cap {
                special += 1;
            }
        }
    }
    PermStats {
        special_inversions: special,
        rlm,
    }
}

/// Visit the permutations of `{1..=n}` in lexicographic order.
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !next_permutation(&mut p.images) {
            break;
        }
    }
}

/// In-place lexicographic successor; `false` once the last permutation (the
/// decreasing one) has been visited.
fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// One sweep over all permutations of `{1..=n}`, bucketing
/// `q^special_inversions` by the number of right-to-left maxima. Index `k`
/// of the result holds `S1[n,k]`.
pub(super) fn s1_row_sweep(n: usize) -> Vec<QPoly> {
    let max_inv = if n >= 2 { n * (n - 1) / 2 } else { 0 };
    let mut counts = vec![vec![0u64; max_inv + 1]; n + 1];
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        let st = stats_of(&images);
        counts[st.rlm][st.special_inversions] += 1;
        if !next_permutation(&mut images) {
            break;
        }
    }
    counts
        .into_iter()
        .map(|row| QPoly::from_big_coeffs(row.into_iter().map(BigInt::from).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_permutation_stats() {
        let p = Permutation::from_images(vec![8, 6, 9, 2, 3, 7, 5, 1, 4]).unwrap();
        let st = perm_stats(&p);
        assert_eq!(st.special_inversions, 5);
        assert_eq!(st.rlm, 4);
    }

    #[test]
    fn extreme_permutations() {
        // The identity has no inversions and a single right-to-left maximum
        // (only the last position); the decreasing permutation has every
        // position as a right-to-left maximum and no special inversions.
        for n in 1..=6 {
            let id = perm_stats(&Permutation::identity(n));
            assert_eq!((id.special_inversions, id.rlm), (0, 1));
            let dec = perm_stats(&Permutation::decreasing(n));
            assert_eq!((dec.special_inversions, dec.rlm), (0, n));
        }
        let empty = perm_stats(&Permutation::identity(0));
        assert_eq!((empty.special_inversions, empty.rlm), (0, 0));
    }

    #[test]
    fn lexicographic_order_and_count() {
        let mut seen = Vec::new();
        for_each_permutation(3, |p| seen.push(p.images().to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
        let mut count = 0;
        for_each_permutation(6, |_| count += 1);
        assert_eq!(count, 720);
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![1, 3]).is_err());
        assert!(Permutation::from_images(vec![2, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_ok());
    }
}
