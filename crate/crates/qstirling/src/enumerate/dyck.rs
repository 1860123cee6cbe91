use super::{EnumError, PermStats, Permutation};

/// One step of a Dyck path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DyckStep {
    Up,
    Down,
}

/// Weight of a down-step: the symbol `x` (for a down-step directly after an
/// up-step, i.e. a peak) or a power `q^j` (after another down-step).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DownWeight {
    X,
    Q(usize),
}

/// A Dyck path of length `2n` with one weight per down-step, subject to the
/// rules of the permutation bijection:
///
/// - a down-step following an up-step carries the weight `x`;
/// - a down-step following a down-step, starting at height `h`, carries
///   `q^j` with `0 <= j <= h-1`.
///
/// The total weight is the monomial `q^(sum of j) * x^(number of peaks)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedDyckPath {
    steps: Vec<DyckStep>,
    down_weights: Vec<DownWeight>,
}

impl WeightedDyckPath {
    pub fn new(steps: Vec<DyckStep>, down_weights: Vec<DownWeight>) -> Result<Self, EnumError> {
        let downs = steps.iter().filter(|s| **s == DyckStep::Down).count();
        if downs * 2 != steps.len() {
            return Err(EnumError::InvalidPath(
                "unbalanced up/down steps".to_string(),
            ));
        }
        if down_weights.len() != downs {
            return Err(EnumError::InvalidPath(format!(
                "{} weights for {} down-steps",
                down_weights.len(),
                downs
            )));
        }
        let mut height: isize = 0;
        let mut prev: Option<DyckStep> = None;
        let mut d = 0usize;
        for &s in &steps {
            match s {
                DyckStep::Up => height += 1,
                DyckStep::Down => {
                    if height == 0 {
                        return Err(EnumError::InvalidPath(
                            "path dips below the axis".to_string(),
                        ));
                    }
                    let w = down_weights[d];
                    d += 1;
                    match (prev, w) {
                        (Some(DyckStep::Up), DownWeight::X) => {}
                        (Some(DyckStep::Up), DownWeight::Q(_)) => {
                            return Err(EnumError::InvalidPath(
                                "down-step after an up-step must carry weight x".to_string(),
                            ));
                        }
                        (Some(DyckStep::Down), DownWeight::Q(j)) => {
                            if j + 1 > height as usize {
                                return Err(EnumError::InvalidPath(format!(
                                    "weight q^{j} exceeds height {height} - 1"
                                )));
                            }
                        }
                        (Some(DyckStep::Down), DownWeight::X) => {
                            return Err(EnumError::InvalidPath(
                                "down-step after a down-step must carry a power of q".to_string(),
                            ));
                        }
                        (None, _) => {
                            return Err(EnumError::InvalidPath(
                                "path starts with a down-step".to_string(),
                            ));
                        }
                    }
                    height -= 1;
                }
            }
            prev = Some(s);
        }
        if height != 0 {
            return Err(EnumError::InvalidPath("path does not return to 0".to_string()));
        }
        Ok(WeightedDyckPath {
            steps,
            down_weights,
        })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    pub fn down_weights(&self) -> &[DownWeight] {
        &self.down_weights
    }

    /// Half-length `n` of the path.
    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// Exponents `(a, b)` of the total weight `q^a x^b`.
    pub fn weight_exponents(&self) -> (usize, usize) {
        let mut q = 0;
        let mut x = 0;
        for w in &self.down_weights {
            match w {
                DownWeight::X => x += 1,
                DownWeight::Q(j) => q += j,
            }
        }
        (q, x)
    }
}

/// The bounding path of a permutation, already rotated into Dyck form
/// (East -> up, South -> down).
///
/// In the permutation graph, the path is the lowest East/South staircase
/// from `(0,n)` to `(n,0)` with every dot `(i, sigma(i))` below it: its
/// height over column `i` is the suffix maximum `max(sigma(i..=n))`.
pub fn bounding_path(p: &Permutation) -> Vec<DyckStep> {
    let n = p.n();
    let sigma = p.images();
    let mut suffix_max = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(sigma[i]);
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut cur = n; // suffix_max[0] = n: the path starts flat at the top
    for i in 0..n {
        debug_assert_eq!(cur, suffix_max[i]);
        steps.push(DyckStep::Up);
        let target = suffix_max[i + 1]; // 0 after the last column
        for _ in target..cur {
            steps.push(DyckStep::Down);
        }
        cur = target;
    }
    steps
}

/// The bijection from permutations to weighted Dyck paths: the underlying
/// path is the bounding path; the `i`-th down-step carries `x` after an
/// up-step, else `q^j` where `j` counts the special inversions in the `i`-th
/// row from the top of the permutation graph. The total weight is
/// `q^special_inversions x^rlm`.
pub fn perm_to_weighted_path(p: &Permutation) -> WeightedDyckPath {
    let n = p.n();
    let sigma = p.images();
    let mut suffix_max = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(sigma[i]);
    }
    // specials_at[v]: special inversions (i,j) whose cell sits in row v,
    // i.e. with sigma(i) = v
    let mut specials_at = vec![0usize; n + 1];
    for j in 1..n {
        let cap = suffix_max[j + 1];
        for i in 0..j {
            if sigma[i] > sigma[j] && sigma[i] < cap {
                specials_at[sigma[i]] += 1;
            }
        }
    }
    let steps = bounding_path(p);
    let mut weights = Vec::with_capacity(n);
    let mut prev = None;
    let mut down_index = 0usize;
    for &s in &steps {
        if s == DyckStep::Down {
            down_index += 1;
            let row_value = n + 1 - down_index; // i-th row from the top
            let w = match prev {
                Some(DyckStep::Up) => DownWeight::X,
                _ => DownWeight::Q(specials_at[row_value]),
            };
            weights.push(w);
        }
        prev = Some(s);
    }
    WeightedDyckPath::new(steps, weights)
        .expect("the bounding path of a permutation is always validly weighted")
}

/// The inverse bijection: rebuild the permutation graph row by row from the
/// top. A weight `x` puts the dot just left of the bounding path; a weight
/// `q^j` puts it in the `(j+1)`-th free column counted from the right among
/// columns left of the path with no dot above.
pub fn weighted_path_to_perm(path: &WeightedDyckPath) -> Permutation {
    let n = path.half_length();
    // ups_before[i]: number of up-steps before the (i+1)-th down-step;
    // the columns left of the path in that row are 1..=ups_before[i]
    let mut ups_before = Vec::with_capacity(n);
    let mut ups = 0usize;
    for &s in path.steps() {
        match s {
            DyckStep::Up => ups += 1,
            DyckStep::Down => ups_before.push(ups),
        }
    }
    let mut images = vec![0usize; n];
    let mut col_taken = vec![false; n + 1];
    for (i, &w) in path.down_weights().iter().enumerate() {
        let row_value = n - i; // row n+1-(i+1), counting rows from the top
        let extent = ups_before[i];
        let col = match w {
            DownWeight::X => extent,
            DownWeight::Q(j) => {
                let mut remaining = j;
                let mut found = 0;
                for c in (1..=extent).rev() {
                    if !col_taken[c] {
                        if remaining == 0 {
                            found = c;
                            break;
                        }
                        remaining -= 1;
                    }
                }
                assert!(found > 0, "validated weights always leave a free column");
                found
            }
        };
        debug_assert!(!col_taken[col]);
        col_taken[col] = true;
        images[col - 1] = row_value;
    }
    Permutation::from_images(images).expect("every column receives exactly one dot")
}

/// Visit every validly weighted Dyck path of half-length `n`: all Dyck step
/// sequences, and for each, every admissible assignment of `q^j` weights.
pub fn for_each_weighted_dyck_path<F: FnMut(&WeightedDyckPath)>(n: usize, mut f: F) {
    let mut steps = Vec::with_capacity(2 * n);
    dyck_rec(n, 0, 0, &mut steps, &mut f);
}

fn dyck_rec<F: FnMut(&WeightedDyckPath)>(
    n: usize,
    ups: usize,
    downs: usize,
    steps: &mut Vec<DyckStep>,
    f: &mut F,
) {
    if ups == n && downs == n {
        weight_choices(steps, f);
        return;
    }
    if ups < n {
        steps.push(DyckStep::Up);
        dyck_rec(n, ups + 1, downs, steps, f);
        steps.pop();
    }
    if downs < ups {
        steps.push(DyckStep::Down);
        dyck_rec(n, ups, downs + 1, steps, f);
        steps.pop();
    }
}

fn weight_choices<F: FnMut(&WeightedDyckPath)>(steps: &[DyckStep], f: &mut F) {
    // Per down-step: the number of admissible weights (1 for a forced x,
    // the starting height for a run of q-powers).
    let mut slots: Vec<usize> = Vec::new();
    let mut height = 0usize;
    let mut prev = None;
    for &s in steps {
        match s {
            DyckStep::Up => height += 1,
            DyckStep::Down => {
                match prev {
                    Some(DyckStep::Up) => slots.push(0), // forced x, one choice
                    _ => slots.push(height),             // q^0 .. q^(height-1)
                }
                height -= 1;
            }
        }
        prev = Some(s);
    }
    let mut choice = vec![0usize; slots.len()];
    loop {
        let weights: Vec<DownWeight> = slots
            .iter()
            .zip(&choice)
            .map(|(&cap, &j)| if cap == 0 { DownWeight::X } else { DownWeight::Q(j) })
            .collect();
        let path = WeightedDyckPath {
            steps: steps.to_vec(),
            down_weights: weights,
        };
        f(&path);
        // odometer over the q-weight choices
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if slots[pos] == 0 {
                continue;
            }
            if choice[pos] + 1 < slots[pos] {
                choice[pos] += 1;
                for c in choice[pos + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Check that a path's weight matches the permutation statistics it encodes.
pub fn weight_matches_stats(path: &WeightedDyckPath, stats: &PermStats) -> bool {
    path.weight_exponents() == (stats.special_inversions, stats.rlm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{for_each_permutation, perm_stats};

    use DownWeight::{Q, X};
    use DyckStep::{Down, Up};

    fn figure_perm() -> Permutation {
        Permutation::from_images(vec![8, 6, 9, 2, 3, 7, 5, 1, 4]).unwrap()
    }

    #[test]
    fn figure_bounding_path() {
        let steps = bounding_path(&figure_perm());
        let expect = vec![
            Up, Up, Up, Down, Down, Up, Up, Up, Down, Down, Up, Down, Up, Up, Down, Down, Down,
            Down,
        ];
        assert_eq!(steps, expect);
    }

    #[test]
    fn figure_weights() {
        let path = perm_to_weighted_path(&figure_perm());
        assert_eq!(
            path.down_weights(),
            &[X, Q(1), X, Q(2), X, X, Q(1), Q(1), Q(0)]
        );
        assert_eq!(path.weight_exponents(), (5, 4));
    }

    #[test]
    fn figure_round_trip() {
        let path = perm_to_weighted_path(&figure_perm());
        assert_eq!(weighted_path_to_perm(&path), figure_perm());
    }

    #[test]
    fn singleton_path() {
        let p = Permutation::identity(1);
        let path = perm_to_weighted_path(&p);
        assert_eq!(path.steps(), &[Up, Down]);
        assert_eq!(path.down_weights(), &[X]);
        assert_eq!(weighted_path_to_perm(&path), p);
    }

    #[test]
    fn weight_validation() {
        // down after up must be x
        assert!(WeightedDyckPath::new(vec![Up, Down], vec![Q(0)]).is_err());
        // q exponent bounded by starting height - 1
        assert!(WeightedDyckPath::new(vec![Up, Up, Down, Down], vec![X, Q(1)]).is_err());
        assert!(WeightedDyckPath::new(vec![Up, Up, Down, Down], vec![X, Q(0)]).is_ok());
        // not a Dyck path
        assert!(WeightedDyckPath::new(vec![Down, Up], vec![X]).is_err());
        assert!(WeightedDyckPath::new(vec![Up, Up], vec![]).is_err());
    }

    #[test]
    fn weights_match_stats_exhaustively() {
        for n in 0..=6 {
            for_each_permutation(n, |p| {
                let path = perm_to_weighted_path(p);
                let st = perm_stats(p);
                assert!(weight_matches_stats(&path, &st), "{:?}", p.images());
            });
        }
    }

    #[test]
    fn round_trips_both_ways() {
        for n in 0..=5 {
            for_each_permutation(n, |p| {
                assert_eq!(&weighted_path_to_perm(&perm_to_weighted_path(p)), p);
            });
            let mut count = 0usize;
            for_each_weighted_dyck_path(n, |path| {
                count += 1;
                let p = weighted_path_to_perm(path);
                assert_eq!(&perm_to_weighted_path(&p), path);
            });
            let factorial: usize = (1..=n).product();
            assert_eq!(count, factorial.max(1), "|P_{n}|");
        }
    }
}
