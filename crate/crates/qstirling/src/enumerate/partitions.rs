use num_bigint::BigInt;

use crate::exactmath::QPoly;

use super::EnumError;

/// A set partition of `{1..=n}`.
///
/// Blocks are stored sorted (each block ascending, blocks ordered by their
/// minimum), so equal partitions compare equal. The derived *arcs* join
/// consecutive elements of each block: the partition `156|24|38|79A` has arcs
/// `(1,5), (5,6), (2,4), (3,8), (7,9), (9,10)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validate and normalize a family of blocks covering `{1..=n}`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, EnumError> {
        let mut seen = vec![false; n + 1];
        let mut total = 0usize;
        let mut norm: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(EnumError::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &e in &b {
                if e == 0 || e > n {
                    return Err(EnumError::InvalidPartition(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                if seen[e] {
                    return Err(EnumError::InvalidPartition(format!("element {e} repeated")));
                }
                seen[e] = true;
                total += 1;
            }
            norm.push(b);
        }
        if total != n {
            return Err(EnumError::InvalidPartition(format!(
                "{total} elements covered, expected {n}"
            )));
        }
        norm.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Arcs between consecutive elements of each block, `(i, j)` with `i < j`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.n - self.blocks.len());
        for b in &self.blocks {
            for w in b.windows(2) {
                arcs.push((w[0], w[1]));
            }
        }
        arcs
    }
}

/// Number of crossings: pairs of arcs `(i,k)`, `(j,l)` with `i < j < k < l`.
pub fn crossings(p: &SetPartition) -> usize {
    let arcs = p.arcs();
    count_arc_crossings(&arcs)
}

fn count_arc_crossings(arcs: &[(usize, usize)]) -> usize {
    let mut count = 0;
    for (t, &(i, k)) in arcs.iter().enumerate() {
        for &(j, l) in &arcs[t + 1..] {
            let (i, k, j, l) = if i < j { (i, k, j, l) } else { (j, l, i, k) };
            if i < j && j < k && k < l {
                count += 1;
            }
        }
    }
    count
}

/// Visit every set partition of `{1..=n}` in restricted-growth-string order.
pub fn for_each_set_partition<F: FnMut(&SetPartition)>(n: usize, mut f: F) {
    for_each_rgs(n, |rgs| {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (idx, &b) in rgs.iter().enumerate() {
            blocks[b].push(idx + 1);
        }
        f(&SetPartition { n, blocks });
    });
}

/// Visit every restricted-growth string of length `n`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. For `n = 0` the empty string is visited once.
pub(super) fn for_each_rgs<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut a = vec![0usize; n];
    rgs_rec(&mut a, 0, 0, &mut f);
}

fn rgs_rec<F: FnMut(&[usize])>(a: &mut [usize], pos: usize, max_used: usize, f: &mut F) {
    if pos == a.len() {
        f(a);
        return;
    }
    for v in 0..=max_used {
        a[pos] = v;
        rgs_rec(a, pos + 1, max_used.max(v + 1), f);
    }
}

/// One sweep over all partitions of `{1..=n}`, bucketing `q^crossings` by
/// block count. Index `k` of the result holds `S2[n,k]`.
pub(super) fn s2_row_sweep(n: usize) -> Vec<QPoly> {
    // crossings <= C(n-1, 2); counts fit u64 comfortably up to the bound
    let max_cro = if n >= 2 { (n - 1) * (n - 2) / 2 } else { 0 };
    let mut counts = vec![vec![0u64; max_cro + 1]; n + 1];
    let mut last_of_block = vec![0usize; n + 1];
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n);
    for_each_rgs(n, |rgs| {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        arcs.clear();
        for b in last_of_block.iter_mut().take(k) {
            *b = 0;
        }
        for (idx, &b) in rgs.iter().enumerate() {
            let e = idx + 1;
            if last_of_block[b] != 0 {
                arcs.push((last_of_block[b], e));
            }
            last_of_block[b] = e;
        }
        let cro = count_arc_crossings(&arcs);
        counts[k][cro] += 1;
    });
    counts
        .into_iter()
        .map(|row| QPoly::from_big_coeffs(row.into_iter().map(BigInt::from).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_partition() -> SetPartition {
        // 156|24|38|79A with A = 10
        SetPartition::from_blocks(
            10,
            vec![vec![1, 5, 6], vec![2, 4], vec![3, 8], vec![7, 9, 10]],
        )
        .unwrap()
    }

    #[test]
    fn crossings_examples() {
        assert_eq!(crossings(&figure_partition()), 3);
        let singletons = SetPartition::from_blocks(5, (1..=5).map(|e| vec![e]).collect()).unwrap();
        assert_eq!(crossings(&singletons), 0);
        let two_arcs = SetPartition::from_blocks(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(crossings(&two_arcs), 1);
    }

    #[test]
    fn arcs_are_consecutive_elements() {
        let p = figure_partition();
        assert_eq!(
            p.arcs(),
            vec![(1, 5), (5, 6), (2, 4), (3, 8), (7, 9), (9, 10)]
        );
        assert_eq!(p.arcs().len(), p.n() - p.block_count());
    }

    #[test]
    fn from_blocks_rejects_bad_input() {
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2, 4]]).is_err());
        assert!(SetPartition::from_blocks(2, vec![vec![1, 2], vec![]]).is_err());
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let mut count = 0;
            for_each_set_partition(n, |_| count += 1);
            assert_eq!(count, b, "Bell({n})");
        }
    }
}
