//! Integer partitions, the box B_n, boundary paths of Young diagrams, Durfee
//! squares, hook decompositions, the peak-to-hook bijection ψ, and
//! hook-placement enumeration.
//!
//! The box B_n has ⌊n/2⌋ rows and ⌈n/2⌉ columns with its lower-left corner at
//! the origin. The Young diagram of a partition occupies the upper-left
//! region of the box and its lower-right boundary, read from (0,0) to the
//! upper-right corner, is a Grand Dyck path; the area of the box strictly
//! above the path equals the size of the partition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{LatticePath, Step};

/// A weakly decreasing sequence of positive parts; empty is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The integer being partitioned, m = Σ parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at a 1-indexed row, 0 beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Side of the largest k×k square inside the diagram.
    pub fn durfee_side(&self) -> usize {
        (1..=self.parts.len())
            .take_while(|&k| self.parts[k - 1] >= k)
            .count()
    }

    /// Peels hooks (first row + first column) off the diagram, recording the
    /// cell count of each. Returned ascending, so the outermost hook is last;
    /// consecutive entries always differ by more than 1.
    pub fn hook_decomposition(&self) -> HookDecomposition {
        let mut hooks = Vec::new();
        let mut parts = self.parts.clone();
        while let Some(&first) = parts.first() {
            hooks.push(first + parts.len() - 1);
            parts = parts[1..]
                .iter()
                .map(|&p| p - 1)
                .filter(|&p| p > 0)
                .collect();
        }
        hooks.reverse();
        HookDecomposition { hooks }
    }

    pub fn fits_in(&self, spec: &BoxSpec) -> bool {
        self.num_parts() <= spec.height() && self.part(1) <= spec.width()
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", words.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("non-integer part {tok:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// The ⌊n/2⌋ × ⌈n/2⌉ box B_n.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BoxSpec {
    n: usize,
}

impl BoxSpec {
    pub fn new(n: usize) -> Self {
        BoxSpec { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.n.div_ceil(2)
    }

    pub fn height(&self) -> usize {
        self.n / 2
    }
}

/// The hook sizes i_1 < i_2 < … < i_k of a partition, gaps strictly greater
/// than 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookDecomposition {
    hooks: Vec<usize>,
}

impl HookDecomposition {
    pub fn new(hooks: Vec<usize>) -> Result<Self> {
        if hooks.first().is_some_and(|&h| h == 0) {
            return Err(Error::InvalidHookSet);
        }
        if hooks.windows(2).any(|w| w[1] <= w[0] + 1) {
            return Err(Error::InvalidHookSet);
        }
        Ok(HookDecomposition { hooks })
    }

    pub fn hooks(&self) -> &[usize] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.hooks.iter().sum()
    }
}

impl fmt::Display for HookDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.hooks.iter().map(|h| h.to_string()).collect();
        write!(f, "{{{}}}", words.join(","))
    }
}

impl fmt::Debug for HookDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HookDecomposition{self}")
    }
}

/// The lower-right boundary of the Young diagram of λ inside B_n, read from
/// the box's lower-left corner to its upper-right corner.
pub fn boundary_path(lambda: &Partition, spec: &BoxSpec) -> Result<LatticePath> {
    if !lambda.fits_in(spec) {
        return Err(Error::DoesNotFit);
    }
    let (w, h) = (spec.width(), spec.height());
    let mut steps = Vec::with_capacity(spec.n());
    let mut x = 0;
    // rows of the box from bottom to top; row i of the partition counted from
    // the top has length λ_i, so the bottom box row sees λ_h (padded with 0)
    for i in (1..=h).rev() {
        let target = lambda.part(i);
        steps.extend(std::iter::repeat_n(Step::E, target - x));
        steps.push(Step::N);
        x = target;
    }
    steps.extend(std::iter::repeat_n(Step::E, w - x));
    Ok(LatticePath::new(steps))
}

/// Recovers the partition whose boundary inside B_n is `path`.
pub fn partition_from_boundary(path: &LatticePath) -> Result<Partition> {
    if !path.is_grand() {
        return Err(Error::NotGrand);
    }
    let mut x = 0;
    let mut parts_bottom_up = Vec::new();
    for &s in path.steps() {
        match s {
            Step::E => x += 1,
            Step::N => parts_bottom_up.push(x),
        }
    }
    let parts: Vec<usize> = parts_bottom_up
        .into_iter()
        .rev()
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

/// Area of the box strictly above the boundary path; equals the partition
/// size by the boundary convention.
pub fn area_above(path: &LatticePath) -> Result<usize> {
    Ok(partition_from_boundary(path)?.size())
}

/// ψ: maps a partition inside B_n to the unique Grand Dyck path whose peak
/// set is hd(λ).
///
/// The boundary path is split at M = (k, ⌊n/2⌋−k), where k is the Durfee
/// side. Counting E steps of the first piece backwards from M gives positions
/// a_1 < … < a_k, counting N steps of the second piece forwards from M gives
/// b_1 < … < b_k, and the image is the unique path in G_n with peaks at
/// (b_j − 1, a_j). Each peak label is then a_j + b_j − 1 = i_j.
pub fn psi(lambda: &Partition, spec: &BoxSpec) -> Result<LatticePath> {
    if !lambda.fits_in(spec) {
        return Err(Error::DoesNotFit);
    }
    let (w, h) = (spec.width(), spec.height());
    let boundary = boundary_path(lambda, spec)?;
    let first = &boundary.steps()[..h];
    let second = &boundary.steps()[h..];

    let a: Vec<usize> = (1..=h).filter(|&p| first[h - p] == Step::E).collect();
    let b: Vec<usize> = (1..=w).filter(|&p| second[p - 1] == Step::N).collect();
    debug_assert_eq!(a.len(), b.len());
    debug_assert_eq!(a.len(), lambda.durfee_side());

    let peaks: Vec<(usize, usize)> = b.iter().zip(&a).map(|(&bj, &aj)| (bj - 1, aj)).collect();
    Ok(path_with_peaks(&peaks, w, h))
}

/// The unique no-extra-peak path through the given peak vertices: an E-run
/// then an N-run up to each peak in turn, then a trailing E-run and N-run.
fn path_with_peaks(peaks: &[(usize, usize)], w: usize, h: usize) -> LatticePath {
    let mut steps = Vec::with_capacity(w + h);
    let (mut x, mut y) = (0, 0);
    for &(px, py) in peaks {
        steps.extend(std::iter::repeat_n(Step::E, px - x));
        steps.extend(std::iter::repeat_n(Step::N, py - y));
        (x, y) = (px, py);
    }
    steps.extend(std::iter::repeat_n(Step::E, w - x));
    steps.extend(std::iter::repeat_n(Step::N, h - y));
    LatticePath::new(steps)
}

/// ψ⁻¹: reads the peak coordinates of a Grand Dyck path back into the
/// boundary of the matching partition.
pub fn psi_inverse(grand: &LatticePath) -> Result<Partition> {
    if !grand.is_grand() {
        return Err(Error::NotGrand);
    }
    let n = grand.len();
    let (w, h) = (n.div_ceil(2), n / 2);
    let peaks = grand.peak_coordinates();
    let a: Vec<usize> = peaks.iter().map(|&(_, y)| y).collect();
    let b: Vec<usize> = peaks.iter().map(|&(x, _)| x + 1).collect();

    let mut first = vec![Step::N; h];
    for &p in &a {
        first[h - p] = Step::E;
    }
    let mut second = vec![Step::E; w];
    for &p in &b {
        second[p - 1] = Step::N;
    }
    first.extend(second);
    partition_from_boundary(&LatticePath::new(first))
}

/// All partitions whose Young diagram fits inside the box, largest-first
/// within each branch; the stream is restartable by calling again.
pub fn enumerate_in_box(spec: &BoxSpec) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_bounded(spec.width(), spec.height(), &mut prefix, &mut out);
    out.into_iter()
}

fn collect_bounded(
    max_part: usize,
    rows_left: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition {
        parts: prefix.clone(),
    });
    if rows_left == 0 {
        return;
    }
    let bound = prefix.last().copied().unwrap_or(max_part);
    for p in (1..=bound).rev() {
        prefix.push(p);
        collect_bounded(max_part, rows_left - 1, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of m inside the box.
pub fn count_of_size(spec: &BoxSpec, m: usize) -> u64 {
    enumerate_in_box(spec).filter(|p| p.size() == m).count() as u64
}

/// All partitions of m, generated by the same bounded-part recursion with no
/// box restriction.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=bound.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    rec(m, m.max(1), &mut prefix, &mut out);
    out
}

/// p(m), computed by exhaustive generation.
pub fn partition_count(m: usize) -> u64 {
    partitions_of(m).len() as u64
}

/// All partitions (no box) with the given hook decomposition, built by
/// bending each hook around the previous ones from the inside out.
pub fn partitions_with_hd(hd: &HookDecomposition) -> Vec<Partition> {
    let mut current = vec![Vec::<usize>::new()];
    for &hook in hd.hooks() {
        let mut next = Vec::new();
        for delta in &current {
            let first_row = delta.first().copied().unwrap_or(0);
            let first_col = delta.len();
            // new first row R and first column C with R + C = hook + 1 must
            // strictly contain the previous diagram's first row and column
            for new_row in first_row + 1..=hook - first_col {
                let new_col = hook + 1 - new_row;
                let mut parts = Vec::with_capacity(new_col);
                parts.push(new_row);
                parts.extend(delta.iter().map(|&p| p + 1));
                parts.resize(new_col, 1);
                next.push(parts);
            }
        }
        current = next;
    }
    current
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// i_1 · Π (i_j − i_{j−1} − 1): the number of partitions with hook
/// decomposition {i_1 < … < i_k}.
pub fn hd_count_formula(hd: &HookDecomposition) -> Result<u64> {
    let mut count: u64 = 1;
    for (j, &hook) in hd.hooks().iter().enumerate() {
        let factor = if j == 0 {
            hook as u64
        } else {
            (hook - hd.hooks()[j - 1] - 1) as u64
        };
        count = count.checked_mul(factor).ok_or(Error::Overflow)?;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn hd(hooks: &[usize]) -> HookDecomposition {
        HookDecomposition::new(hooks.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(part("4,4,3,3,2").parts(), &[4, 4, 3, 3, 2]);
        assert_eq!(part("").parts(), &[] as &[usize]);
        assert!("3,4".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(part("4,4,3,3,2").to_string(), "4,4,3,3,2");
    }

    #[test]
    fn hook_decomposition_examples() {
        assert_eq!(part("4,4,3,3,2").hook_decomposition(), hd(&[2, 6, 8]));
        assert_eq!(Partition::empty().hook_decomposition(), hd(&[]));
        assert_eq!(part("7,4,3,3,1,1").hook_decomposition(), hd(&[2, 5, 12]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(part("4,4,3,3,2").durfee_side(), 3);
        assert_eq!(Partition::empty().durfee_side(), 0);
        assert_eq!(part("1").durfee_side(), 1);
    }

    #[test]
    fn hd_properties_in_box() {
        for n in 0..=14 {
            let spec = BoxSpec::new(n);
            for lambda in enumerate_in_box(&spec) {
                let h = lambda.hook_decomposition();
                assert_eq!(h.sum(), lambda.size(), "{lambda}");
                assert_eq!(h.len(), lambda.durfee_side(), "{lambda}");
                assert!(h.hooks().windows(2).all(|w| w[1] > w[0] + 1));
            }
        }
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundary_path(&part("4,4,3,3,2"), &BoxSpec::new(12)).unwrap(),
            path("NEENENNENNEE")
        );
        assert_eq!(
            boundary_path(&Partition::empty(), &BoxSpec::new(2)).unwrap(),
            path("NE")
        );
        assert_eq!(
            boundary_path(&part("2,2"), &BoxSpec::new(4)).unwrap(),
            path("EENN")
        );
        assert_eq!(
            boundary_path(&part("3"), &BoxSpec::new(4)),
            Err(Error::DoesNotFit)
        );
    }

    #[test]
    fn boundary_inverse_examples() {
        assert_eq!(
            partition_from_boundary(&path("NEENENNENNEE")).unwrap(),
            part("4,4,3,3,2")
        );
        assert_eq!(
            partition_from_boundary(&path("NE")).unwrap(),
            Partition::empty()
        );
        assert!(partition_from_boundary(&path("NNE")).is_err());
    }

    #[test]
    fn boundary_round_trip_and_area() {
        for n in 0..=14 {
            let spec = BoxSpec::new(n);
            for lambda in enumerate_in_box(&spec) {
                let b = boundary_path(&lambda, &spec).unwrap();
                assert!(b.is_grand());
                assert_eq!(b.len(), n);
                assert_eq!(partition_from_boundary(&b).unwrap(), lambda);
                assert_eq!(area_above(&b).unwrap(), lambda.size());
            }
        }
    }

    #[test]
    fn psi_examples() {
        let image = psi(&part("7,4,3,3,1,1"), &BoxSpec::new(14)).unwrap();
        assert_eq!(image, path("NNEENEEEENNNEN"));
        assert_eq!(image.peak_set(), vec![2, 5, 12]);

        assert_eq!(
            psi(&Partition::empty(), &BoxSpec::new(7)).unwrap(),
            path("EEEENNN")
        );

        let image = psi(&part("4,4,3,3,2"), &BoxSpec::new(12)).unwrap();
        assert_eq!(image, path("NNEENNENEEEN"));
        assert_eq!(image.peak_set(), vec![2, 6, 8]);
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(
            psi_inverse(&path("NNEENNENEEEN")).unwrap(),
            part("4,4,3,3,2")
        );
        assert_eq!(psi_inverse(&path("EEENN")).unwrap(), Partition::empty());
        assert_eq!(
            psi_inverse(&path("NNEENEEEENNNEN")).unwrap(),
            part("7,4,3,3,1,1")
        );
        assert!(psi_inverse(&path("NN")).is_err());
    }

    #[test]
    fn psi_round_trip_with_hooks() {
        for n in 0..=14 {
            let spec = BoxSpec::new(n);
            for lambda in enumerate_in_box(&spec) {
                let g = psi(&lambda, &spec).unwrap();
                assert!(g.is_grand());
                assert_eq!(
                    g.peak_set(),
                    lambda.hook_decomposition().hooks(),
                    "{lambda}"
                );
                assert_eq!(psi_inverse(&g).unwrap(), lambda);
            }
            for g in crate::path::enumerate_paths(crate::path::PathKind::Grand, n) {
                let lambda = psi_inverse(&g).unwrap();
                assert_eq!(psi(&lambda, &spec).unwrap(), g);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let b4 = BoxSpec::new(4);
        assert_eq!(enumerate_in_box(&b4).count(), 6);
        assert_eq!(count_of_size(&b4, 2), 2);
        assert_eq!(partition_count(4), 5);
        let expected_p = [1u64, 1, 2, 3, 5, 7, 11, 15, 22];
        for (m, &want) in expected_p.iter().enumerate() {
            assert_eq!(partition_count(m), want);
        }
    }

    #[test]
    fn box_counts_are_binomials() {
        for n in 0..=10 {
            let total = enumerate_in_box(&BoxSpec::new(n)).count() as u64;
            assert_eq!(
                total,
                crate::poly::binomial(n as u64, (n / 2) as u64).unwrap()
            );
        }
    }

    #[test]
    fn partitions_with_hd_examples() {
        let two: Vec<Partition> = partitions_with_hd(&hd(&[2]));
        assert_eq!(two.len(), 2);
        assert!(two.contains(&part("2")));
        assert!(two.contains(&part("1,1")));

        assert_eq!(partitions_with_hd(&hd(&[])), vec![Partition::empty()]);

        assert_eq!(partitions_with_hd(&hd(&[2, 6, 8])).len(), 6);
        assert_eq!(hd_count_formula(&hd(&[2, 6, 8])).unwrap(), 6);
    }

    #[test]
    fn invalid_hook_sets_rejected() {
        assert_eq!(
            HookDecomposition::new(vec![2, 3]),
            Err(Error::InvalidHookSet)
        );
        assert_eq!(HookDecomposition::new(vec![0]), Err(Error::InvalidHookSet));
    }

    #[test]
    fn hook_placement_matches_peeling() {
        // every valid hook set with max ≤ 8: placements are exactly the
        // partitions of ΣS whose peel gives S back, and all fit in B_n for
        // n = 2(i_k - k + 1)
        for mask in 0u32..(1 << 8) {
            let hooks: Vec<usize> = (1..=8).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
            let Ok(h) = HookDecomposition::new(hooks) else {
                continue;
            };
            let placed = partitions_with_hd(&h);
            assert_eq!(placed.len() as u64, hd_count_formula(&h).unwrap());
            let by_peel: Vec<Partition> = partitions_of(h.sum())
                .into_iter()
                .filter(|p| p.hook_decomposition() == h)
                .collect();
            let mut placed_sorted = placed.clone();
            placed_sorted.sort();
            let mut by_peel = by_peel;
            by_peel.sort();
            assert_eq!(placed_sorted, by_peel, "{h}");
            if let Some(&max) = h.hooks().last() {
                let n = 2 * (max - h.len() + 1);
                let spec = BoxSpec::new(n);
                assert!(placed.iter().all(|p| p.fits_in(&spec)), "{h}");
            }
        }
    }
}
