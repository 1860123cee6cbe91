use super::{EnumError, SetPartition};

/// A rook placement in the staircase diagram `delta_size`.
///
/// The staircase has rows of lengths `size, size-1, ..., 1` from bottom to
/// top (French notation). Cells are `(column, row)`, both 1-based with row 1
/// at the bottom, so cell `(c, r)` lies in the staircase iff
/// `c + r <= size + 1`. At most one rook per row and per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RookPlacement {
    size: usize,
    rooks: Vec<(usize, usize)>,
}

impl RookPlacement {
    pub fn new(size: usize, mut rooks: Vec<(usize, usize)>) -> Result<Self, EnumError> {
        rooks.sort_unstable();
        let mut col_used = vec![false; size + 1];
        let mut row_used = vec![false; size + 1];
        for &(c, r) in &rooks {
            if c == 0 || r == 0 || c + r > size + 1 {
                return Err(EnumError::InvalidPlacement(format!(
                    "cell ({c},{r}) outside the staircase of size {size}"
                )));
            }
            if col_used[c] {
                return Err(EnumError::InvalidPlacement(format!("two rooks in column {c}")));
            }
            if row_used[r] {
                return Err(EnumError::InvalidPlacement(format!("two rooks in row {r}")));
            }
            col_used[c] = true;
            row_used[r] = true;
        }
        Ok(RookPlacement { size, rooks })
    }

    /// Staircase size (number of rows).
    pub fn size(&self) -> usize {
        self.size
    }

    /// Rooks as `(column, row)` cells, sorted.
    pub fn rooks(&self) -> &[(usize, usize)] {
        &self.rooks
    }
}

/// The bijection from set partitions of `{1..=n}` with `k` blocks to rook
/// placements in the staircase of size `n-1` with `n-k` rooks.
///
/// Outer corners of the staircase are labeled `1..=n` from the top-left
/// corner to the bottom-right one; the arc `(i,j)` places a rook in the
/// column below corner `i` and the row right of corner `j`, i.e. at cell
/// `(i, n+1-j)`. Crossings of the partition map to inversions of the
/// placement.
pub fn partition_to_rooks(p: &SetPartition) -> RookPlacement {
    let n = p.n();
    let rooks = p.arcs().iter().map(|&(i, j)| (i, n + 1 - j)).collect();
    RookPlacement::new(n.saturating_sub(1), rooks)
        .expect("arcs of a set partition always give a valid placement")
}

/// Number of inversions: staircase cells with a rook strictly to the left in
/// the same row and another strictly below in the same column. The witnessing
/// cell itself may or may not hold a rook (it never does, since rows hold at
/// most one rook).
pub fn rook_inversions(r: &RookPlacement) -> usize {
    let m = r.size();
    let mut rook_in_col = vec![0usize; m + 1]; // column -> row of its rook
    let mut rook_in_row = vec![0usize; m + 1]; // row -> column of its rook
    for &(c, row) in r.rooks() {
        rook_in_col[c] = row;
        rook_in_row[row] = c;
    }
    let mut count = 0;
    for c in 1..=m {
        let below = rook_in_col[c];
        if below == 0 {
            continue;
        }
        for row in below + 1..=m {
            if c + row > m + 1 {
                break;
            }
            let left = rook_in_row[row];
            if left != 0 && left < c {
                count += 1;
            }
        }
    }
    count
}

/// Visit every placement of exactly `num_rooks` rooks in the staircase of
/// the given size, row by row from the bottom.
pub fn for_each_rook_placement<F: FnMut(&RookPlacement)>(size: usize, num_rooks: usize, mut f: F) {
    let mut col_used = vec![false; size + 1];
    let mut rooks: Vec<(usize, usize)> = Vec::with_capacity(num_rooks);
    fn rec<F: FnMut(&RookPlacement)>(
        size: usize,
        num_rooks: usize,
        row: usize,
        col_used: &mut [bool],
        rooks: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) {
        if rooks.len() == num_rooks {
            let mut sorted = rooks.clone();
            sorted.sort_unstable();
            f(&RookPlacement { size, rooks: sorted });
            return;
        }
        // remaining rows row..=size must be able to host the missing rooks
        if row > size || size + 1 - row < num_rooks - rooks.len() {
            return;
        }
        // skip this row
        rec(size, num_rooks, row + 1, col_used, rooks, f);
        // or place a rook in each free column of this row
        let row_len = size + 1 - row;
        for c in 1..=row_len {
            if !col_used[c] {
                col_used[c] = true;
                rooks.push((c, row));
                rec(size, num_rooks, row + 1, col_used, rooks, f);
                rooks.pop();
                col_used[c] = false;
            }
        }
    }
    rec(size, num_rooks, 1, &mut col_used, &mut rooks, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{crossings, for_each_set_partition};

    fn figure_partition() -> SetPartition {
        SetPartition::from_blocks(
            10,
            vec![vec![1, 5, 6], vec![2, 4], vec![3, 8], vec![7, 9, 10]],
        )
        .unwrap()
    }

    #[test]
    fn figure_placement_and_inversions() {
        let r = partition_to_rooks(&figure_partition());
        assert_eq!(r.size(), 9);
        let mut expect = vec![(1, 6), (2, 7), (3, 3), (5, 5), (7, 2), (9, 1)];
        expect.sort_unstable();
        assert_eq!(r.rooks(), &expect[..]);
        assert_eq!(rook_inversions(&r), 3);
    }

    #[test]
    fn degenerate_placements() {
        let singletons =
            SetPartition::from_blocks(4, (1..=4).map(|e| vec![e]).collect()).unwrap();
        let r = partition_to_rooks(&singletons);
        assert!(r.rooks().is_empty());
        assert_eq!(rook_inversions(&r), 0);

        let pair = SetPartition::from_blocks(2, vec![vec![1, 2]]).unwrap();
        let r = partition_to_rooks(&pair);
        assert_eq!(r.size(), 1);
        assert_eq!(r.rooks(), &[(1, 1)]);
        assert_eq!(rook_inversions(&r), 0);

        let single = RookPlacement::new(4, vec![(2, 2)]).unwrap();
        assert_eq!(rook_inversions(&single), 0);
    }

    #[test]
    fn placement_validation() {
        assert!(RookPlacement::new(3, vec![(3, 2)]).is_err()); // outside staircase
        assert!(RookPlacement::new(3, vec![(1, 1), (1, 2)]).is_err()); // column clash
        assert!(RookPlacement::new(3, vec![(1, 1), (2, 1)]).is_err()); // row clash
        assert!(RookPlacement::new(3, vec![(1, 3), (2, 2), (3, 1)]).is_ok());
    }

    #[test]
    fn bijection_preserves_statistic_small() {
        for n in 1..=7 {
            for_each_set_partition(n, |p| {
                let r = partition_to_rooks(p);
                assert_eq!(r.rooks().len(), n - p.block_count());
                assert_eq!(rook_inversions(&r), crossings(p), "partition {p:?}");
            });
        }
    }

    #[test]
    fn placement_enumeration_counts() {
        // placements of m rooks in delta_{n-1} are counted by S2(n, n-m)
        let mut total = 0usize;
        for m in 0..=3 {
            let mut count = 0;
            for_each_rook_placement(3, m, |_| count += 1);
            total += count;
        }
        // sum over m equals Bell(4) = 15 via the bijection
        assert_eq!(total, 15);
    }
}
