//! Point/line incidence structures and their structural checks.
//!
//! A [`LinearSystem`] is a finite family of lines (point sets) over a dense
//! point range `0..num_points`. The defining property of a *linear* system is
//! that two distinct lines share at most one point; [`LinearSystem::validate`]
//! diagnoses violations instead of refusing to construct them, so parsed or
//! adversarial inputs can be inspected.
//!
//! Side partitions witness r-partiteness: the points split into `r` sides and
//! every line meets each side exactly once. [`find_partition`] decides
//! existence exactly by backtracking over point colorings.

use crate::bits::BitSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite incidence structure: `num_points` points and an ordered list of
/// lines, each a set of point indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearSystem {
    num_points: usize,
    lines: Vec<BitSet>,
}

impl LinearSystem {
    /// Builds a system from explicit index lists.
    ///
    /// Panics if a point index is out of range; duplicate, empty or
    /// non-linear lines are representable and reported by [`Self::validate`].
    pub fn new<L, P>(num_points: usize, lines: L) -> Self
    where
        L: IntoIterator<Item = P>,
        P: IntoIterator<Item = usize>,
    {
        let lines = lines
            .into_iter()
            .map(|pts| BitSet::from_indices(num_points, pts))
            .collect();
        LinearSystem { num_points, lines }
    }

    pub fn from_bitsets(num_points: usize, lines: Vec<BitSet>) -> Self {
        for l in &lines {
            assert_eq!(l.capacity(), num_points);
        }
        LinearSystem { num_points, lines }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn line(&self, i: usize) -> &BitSet {
        &self.lines[i]
    }

    pub fn lines(&self) -> &[BitSet] {
        &self.lines
    }

    pub fn line_indices(&self, i: usize) -> Vec<usize> {
        self.lines[i].indices()
    }

    /// Lines as plain index lists, ascending within each line.
    pub fn lines_as_vecs(&self) -> Vec<Vec<usize>> {
        self.lines.iter().map(|l| l.indices()).collect()
    }

    pub fn degree(&self, p: usize) -> usize {
        self.lines.iter().filter(|l| l.contains(p)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_points];
        for l in &self.lines {
            for p in l.iter() {
                deg[p] += 1;
            }
        }
        deg
    }

    /// Mask of lines through each point.
    pub fn lines_through(&self) -> Vec<BitSet> {
        let m = self.lines.len();
        let mut thru = vec![BitSet::new(m); self.num_points];
        for (li, l) in self.lines.iter().enumerate() {
            for p in l.iter() {
                thru[p].insert(li);
            }
        }
        thru
    }

    /// Checks every structural invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport {
            num_points: self.num_points,
            num_lines: self.lines.len(),
            empty_lines: Vec::new(),
            duplicate_lines: Vec::new(),
            nonlinear_pairs: Vec::new(),
            uniform: None,
        };
        for (i, l) in self.lines.iter().enumerate() {
            if l.is_empty() {
                report.empty_lines.push(i);
            }
        }
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let shared = self.lines[i].intersection_len(&self.lines[j]);
                if self.lines[i] == self.lines[j] && !self.lines[i].is_empty() {
                    report.duplicate_lines.push((i, j));
                } else if shared >= 2 {
                    report.nonlinear_pairs.push((i, j));
                }
            }
        }
        let mut sizes = self.lines.iter().map(|l| l.len());
        if let Some(first) = sizes.next() {
            if sizes.all(|s| s == first) {
                report.uniform = Some(first);
            }
        }
        report
    }

    /// True when every two distinct lines meet in at least one point.
    /// Vacuously true with fewer than two lines.
    pub fn is_intersecting(&self) -> bool {
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                if self.lines[i].is_disjoint(&self.lines[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Removes degree-0 points, remapping the survivors in index order.
    /// Returns the stripped system and the kept points' original indices.
    pub fn strip_isolated(&self) -> (LinearSystem, Vec<usize>) {
        let deg = self.degrees();
        let kept: Vec<usize> = (0..self.num_points).filter(|&p| deg[p] > 0).collect();
        if kept.len() == self.num_points {
            return (self.clone(), kept);
        }
        let mut new_index = vec![usize::MAX; self.num_points];
        for (ni, &p) in kept.iter().enumerate() {
            new_index[p] = ni;
        }
        let lines = self
            .lines
            .iter()
            .map(|l| BitSet::from_indices(kept.len(), l.iter().map(|p| new_index[p])))
            .collect();
        (
            LinearSystem {
                num_points: kept.len(),
                lines,
            },
            kept,
        )
    }
}

/// Diagnostic outcome of [`LinearSystem::validate`]; never aborts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub num_points: usize,
    pub num_lines: usize,
    /// Indices of empty lines.
    pub empty_lines: Vec<usize>,
    /// Pairs of identical lines.
    pub duplicate_lines: Vec<(usize, usize)>,
    /// Distinct, non-identical line pairs sharing two or more points.
    pub nonlinear_pairs: Vec<(usize, usize)>,
    /// `Some(r)` when all lines have size `r` (and there is at least one line).
    pub uniform: Option<usize>,
}

impl ValidationReport {
    pub fn is_linear(&self) -> bool {
        self.nonlinear_pairs.is_empty() && self.duplicate_lines.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.is_linear() && self.empty_lines.is_empty()
    }
}

/// An r-coloring of the points such that every line sees each side once.
/// Side indices are 1-based.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SidePartition {
    pub r: usize,
    pub side_of: Vec<u16>,
}

impl SidePartition {
    /// Verifies `|F ∩ X_i| = 1` for every line `F` and side `i`.
    pub fn check(&self, sys: &LinearSystem) -> std::result::Result<(), String> {
        if self.side_of.len() != sys.num_points() {
            return Err(format!(
                "partition covers {} points, system has {}",
                self.side_of.len(),
                sys.num_points()
            ));
        }
        for (p, &s) in self.side_of.iter().enumerate() {
            if s == 0 || s as usize > self.r {
                return Err(format!("point {p} has side {s}, valid range is 1..={}", self.r));
            }
        }
        for (li, line) in sys.lines().iter().enumerate() {
            let mut seen = vec![0usize; self.r + 1];
            for p in line.iter() {
                seen[self.side_of[p] as usize] += 1;
            }
            for side in 1..=self.r {
                if seen[side] != 1 {
                    return Err(format!(
                        "line {li} meets side {side} in {} points, expected 1",
                        seen[side]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, sys: &LinearSystem) -> bool {
        self.check(sys).is_ok()
    }

    /// Points of side `i` (1-based).
    pub fn side(&self, i: usize) -> Vec<usize> {
        self.side_of
            .iter()
            .enumerate()
            .filter(|(_, &s)| s as usize == i)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Maximum degree, maximum degree after excluding one maximizer, and the
/// full degree map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub delta: usize,
    pub delta_prime: usize,
    pub degree_of: Vec<usize>,
}

/// Degree statistics. Exactly one maximum-degree point is excluded for
/// `delta_prime`; when several points attain the maximum, `delta_prime`
/// equals `delta`.
pub fn degree_profile(sys: &LinearSystem) -> DegreeProfile {
    let degree_of = sys.degrees();
    let delta = degree_of.iter().copied().max().unwrap_or(0);
    let max_count = degree_of.iter().filter(|&&d| d == delta).count();
    let delta_prime = if max_count >= 2 {
        delta
    } else {
        degree_of
            .iter()
            .copied()
            .filter(|&d| d != delta)
            .max()
            .unwrap_or(0)
    };
    DegreeProfile {
        delta,
        delta_prime,
        degree_of,
    }
}

/// Decides exactly whether `sys` is r-partite and returns a witnessing
/// partition if so.
///
/// Points sharing a line must take pairwise distinct sides; for an r-uniform
/// system this is precisely a proper r-coloring of the collinearity graph.
/// Backtracking colors the most constrained point first and only opens one
/// fresh color per step, so the output is deterministic.
///
/// Degree-0 points do not constrain any line and are assigned side 1.
pub fn find_partition(sys: &LinearSystem, r: usize) -> Result<Option<SidePartition>> {
    let report = sys.validate();
    if report.uniform != Some(r) {
        return Err(Error::NotUniform {
            expected: r,
            found: report.uniform,
        });
    }

    let (stripped, kept) = sys.strip_isolated();
    let n = stripped.num_points();

    // Collinearity adjacency.
    let mut adj = vec![BitSet::new(n); n];
    for line in stripped.lines() {
        for p in line.iter() {
            adj[p].union_with(line);
        }
    }
    for (p, a) in adj.iter_mut().enumerate() {
        a.remove(p);
    }

    let mut color = vec![0u16; n]; // 0 = uncolored
    if !color_backtrack(&adj, r, &mut color, 0) {
        return Ok(None);
    }

    let mut side_of = vec![1u16; sys.num_points()];
    for (ni, &p) in kept.iter().enumerate() {
        side_of[p] = color[ni];
    }
    let partition = SidePartition { r, side_of };
    debug_assert!(partition.is_valid_for(sys));
    Ok(Some(partition))
}

pub(crate) fn color_backtrack(adj: &[BitSet], r: usize, color: &mut [u16], used_max: u16) -> bool {
    let n = adj.len();
    // Most constrained point: fewest available colors, ties by index.
    let mut pick = None;
    let mut pick_avail = usize::MAX;
    for p in 0..n {
        if color[p] != 0 {
            continue;
        }
        let mut used = vec![false; r + 1];
        for q in adj[p].iter() {
            used[color[q] as usize] = true;
        }
        let avail = (1..=r).filter(|&c| !used[c]).count();
        if avail == 0 {
            return false;
        }
        if avail < pick_avail {
            pick_avail = avail;
            pick = Some((p, used));
        }
    }
    let Some((p, used)) = pick else {
        return true; // all colored
    };
    // Colors are interchangeable: allow at most one brand-new color.
    let cap = (used_max + 1).min(r as u16);
    for c in 1..=cap {
        if used[c as usize] {
            continue;
        }
        color[p] = c;
        if color_backtrack(adj, r, color, used_max.max(c)) {
            return true;
        }
        color[p] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 7-point projective plane in its cyclic difference-set labeling.
    pub(crate) fn fano() -> LinearSystem {
        let lines: Vec<Vec<usize>> = (0..7)
            .map(|i| {
                let mut l = vec![i % 7, (i + 1) % 7, (i + 3) % 7];
                l.sort_unstable();
                l
            })
            .collect();
        LinearSystem::new(7, lines)
    }

    #[test]
    fn fano_is_linear_and_uniform() {
        let report = fano().validate();
        assert!(report.is_valid());
        assert_eq!(report.uniform, Some(3));
        assert!(report.nonlinear_pairs.is_empty());
    }

    #[test]
    fn single_line_is_linear() {
        let sys = LinearSystem::new(3, [[0, 1, 2]]);
        let report = sys.validate();
        assert!(report.is_valid());
        assert_eq!(report.uniform, Some(3));
    }

    #[test]
    fn shared_pair_is_flagged() {
        let sys = LinearSystem::new(4, [[0, 1, 2], [0, 1, 3]]);
        let report = sys.validate();
        assert!(!report.is_linear());
        assert_eq!(report.nonlinear_pairs, vec![(0, 1)]);
    }

    #[test]
    fn duplicates_and_empties_are_flagged() {
        let sys = LinearSystem::new(3, vec![vec![0, 1], vec![0, 1], vec![]]);
        let report = sys.validate();
        assert_eq!(report.duplicate_lines, vec![(0, 1)]);
        assert_eq!(report.empty_lines, vec![2]);
        assert!(!report.is_valid());
    }

    #[test]
    fn intersecting_checks() {
        assert!(fano().is_intersecting());
        let disjoint = LinearSystem::new(6, [[0, 1, 2], [3, 4, 5]]);
        assert!(!disjoint.is_intersecting());
        let single = LinearSystem::new(3, [[0, 1, 2]]);
        assert!(single.is_intersecting());
    }

    #[test]
    fn degree_profile_examples() {
        let p = degree_profile(&fano());
        assert_eq!((p.delta, p.delta_prime), (3, 3));

        let single = LinearSystem::new(3, [[0, 1, 2]]);
        let p = degree_profile(&single);
        assert_eq!((p.delta, p.delta_prime), (1, 1));

        // Three lines concurrent at point 0.
        let concurrent = LinearSystem::new(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]);
        let p = degree_profile(&concurrent);
        assert_eq!((p.delta, p.delta_prime), (3, 1));
    }

    #[test]
    fn degree_sum_equals_line_size_sum() {
        let sys = fano();
        let total: usize = sys.degrees().iter().sum();
        let sizes: usize = sys.lines().iter().map(|l| l.len()).sum();
        assert_eq!(total, sizes);
    }

    #[test]
    fn fano_is_not_three_partite() {
        assert_eq!(find_partition(&fano(), 3).unwrap(), None);
    }

    #[test]
    fn single_line_partitions_into_singletons() {
        let sys = LinearSystem::new(3, [[0, 1, 2]]);
        let part = find_partition(&sys, 3).unwrap().unwrap();
        assert!(part.is_valid_for(&sys));
        let mut sides: Vec<u16> = part.side_of.clone();
        sides.sort_unstable();
        assert_eq!(sides, vec![1, 2, 3]);
    }

    #[test]
    fn partition_rejects_wrong_uniformity() {
        let sys = LinearSystem::new(3, [[0, 1, 2]]);
        assert!(matches!(
            find_partition(&sys, 4),
            Err(Error::NotUniform { .. })
        ));
    }

    #[test]
    fn triangle_shape_is_three_partite() {
        let sys = LinearSystem::new(6, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]);
        let part = find_partition(&sys, 3).unwrap().unwrap();
        assert!(part.is_valid_for(&sys));
    }

    #[test]
    fn strip_isolated_remaps_in_order() {
        let sys = LinearSystem::new(6, [[1, 3], [3, 5]]);
        let (stripped, kept) = sys.strip_isolated();
        assert_eq!(kept, vec![1, 3, 5]);
        assert_eq!(stripped.num_points(), 3);
        assert_eq!(stripped.lines_as_vecs(), vec![vec![0, 1], vec![1, 2]]);
    }
}
