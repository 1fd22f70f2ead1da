//! Isomorphism-invariant canonical forms.
//!
//! Two systems receive equal keys exactly when one can be turned into the
//! other by relabeling points (lines follow automatically, since a line is
//! its point set). Degree-0 points are stripped first so padding never
//! perturbs the key.
//!
//! The search refines point colors to an equitable partition, then
//! individualizes one point of the first non-singleton cell and recurses,
//! taking the lexicographically least serialization over all leaves. The
//! refinement and target-cell rules are isomorphism-invariant, which makes
//! the minimum leaf a class invariant. Worst-case cost is exponential; the
//! intended scale is the search sizes used here (tens of points).

use crate::bits::BitSet;
use crate::system::LinearSystem;

/// Total-order key; equal iff the underlying systems are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

pub fn canonical_form(sys: &LinearSystem) -> CanonicalForm {
    let (stripped, _) = sys.strip_isolated();
    let n = stripped.num_points();
    let mut ctx = Ctx {
        sys: &stripped,
        best: None,
    };
    let colors = vec![0u32; n];
    ctx.search(refine(&stripped, colors));
    CanonicalForm(ctx.best.unwrap_or_else(|| serialize(&stripped, &[])))
}

struct Ctx<'a> {
    sys: &'a LinearSystem,
    best: Option<Vec<u8>>,
}

impl Ctx<'_> {
    fn search(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let ncolors = colors.iter().map(|&c| c + 1).max().unwrap_or(0) as usize;
        if ncolors == n {
            // Discrete: the color of a point is its canonical label.
            let leaf = serialize(self.sys, &colors);
            if self.best.as_ref().is_none_or(|b| leaf < *b) {
                self.best = Some(leaf);
            }
            return;
        }
        // First non-singleton cell, by color value.
        let mut counts = vec![0usize; ncolors];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = counts.iter().position(|&c| c > 1).expect("non-discrete");
        for p in 0..n {
            if colors[p] as usize != target {
                continue;
            }
            let mut child: Vec<u32> = colors.iter().map(|&c| c * 2 + 1).collect();
            child[p] -= 1;
            self.search(refine(self.sys, child));
        }
    }
}

/// Equitable refinement: repeatedly recolor each point by its current color
/// together with the multiset of (size, point-color multiset) signatures of
/// its incident lines. Color values are ranks, so cell order is stable.
fn refine(sys: &LinearSystem, mut colors: Vec<u32>) -> Vec<u32> {
    let n = sys.num_points();
    if n == 0 {
        return colors;
    }
    normalize(&mut colors);
    loop {
        let before = 1 + colors.iter().copied().max().unwrap_or(0);
        let mut line_sigs: Vec<(usize, Vec<u32>)> = Vec::with_capacity(sys.num_lines());
        for line in sys.lines() {
            let mut cs: Vec<u32> = line.iter().map(|p| colors[p]).collect();
            cs.sort_unstable();
            line_sigs.push((line.len(), cs));
        }
        let mut sigs: Vec<(u32, Vec<&(usize, Vec<u32>)>, usize)> = (0..n)
            .map(|p| (colors[p], Vec::new(), p))
            .collect();
        for (li, line) in sys.lines().iter().enumerate() {
            for p in line.iter() {
                sigs[p].1.push(&line_sigs[li]);
            }
        }
        for s in sigs.iter_mut() {
            s.1.sort_unstable();
        }
        sigs.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut next = 0u32;
        let mut new_colors = vec![0u32; n];
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            new_colors[sigs[i].2] = next;
        }
        let after = next + 1;
        colors = new_colors;
        if after == before {
            return colors;
        }
    }
}

fn normalize(colors: &mut [u32]) {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).unwrap() as u32;
    }
}

fn serialize(sys: &LinearSystem, labels: &[u32]) -> Vec<u8> {
    let mut lines: Vec<Vec<u16>> = sys
        .lines()
        .iter()
        .map(|l| {
            let mut pts: Vec<u16> = l.iter().map(|p| labels[p] as u16).collect();
            pts.sort_unstable();
            pts
        })
        .collect();
    lines.sort_unstable();
    let mut out = Vec::with_capacity(4 + lines.iter().map(|l| 2 + 2 * l.len()).sum::<usize>());
    out.extend_from_slice(&(sys.num_points() as u16).to_be_bytes());
    out.extend_from_slice(&(sys.num_lines() as u16).to_be_bytes());
    for l in &lines {
        out.extend_from_slice(&(l.len() as u16).to_be_bytes());
        for p in l {
            out.extend_from_slice(&p.to_be_bytes());
        }
    }
    out
}

/// Relabels points by `perm` (`perm[p]` is the new index of `p`).
pub fn apply_point_permutation(sys: &LinearSystem, perm: &[usize]) -> LinearSystem {
    assert_eq!(perm.len(), sys.num_points());
    let n = sys.num_points();
    let lines: Vec<BitSet> = sys
        .lines()
        .iter()
        .map(|l| BitSet::from_indices(n, l.iter().map(|p| perm[p])))
        .collect();
    LinearSystem::from_bitsets(n, lines)
}

/// Factorial-time isomorphism test by explicit permutation search, usable as
/// an independent oracle at small sizes. Degree-0 points are ignored, to
/// match [`canonical_form`].
pub fn are_isomorphic_bruteforce(a: &LinearSystem, b: &LinearSystem) -> bool {
    let (a, _) = a.strip_isolated();
    let (b, _) = b.strip_isolated();
    if a.num_points() != b.num_points() || a.num_lines() != b.num_lines() {
        return false;
    }
    let mut deg_a = a.degrees();
    let mut deg_b = b.degrees();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut b_lines: Vec<Vec<usize>> = b.lines_as_vecs();
    b_lines.sort_unstable();

    let n = a.num_points();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(&a, &b_lines, &mut perm, 0)
}

fn permute_check(a: &LinearSystem, b_lines: &[Vec<usize>], perm: &mut Vec<usize>, k: usize) -> bool {
    let n = perm.len();
    if k == n {
        let mut mapped: Vec<Vec<usize>> = a
            .lines()
            .iter()
            .map(|l| {
                let mut pts: Vec<usize> = l.iter().map(|p| perm[p]).collect();
                pts.sort_unstable();
                pts
            })
            .collect();
        mapped.sort_unstable();
        return mapped == b_lines;
    }
    for i in k..n {
        perm.swap(k, i);
        if permute_check(a, b_lines, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> LinearSystem {
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
    fn relabeled_copy_has_equal_key() {
        let sys = fano();
        let perm = vec![3, 0, 6, 2, 5, 1, 4];
        let relabeled = apply_point_permutation(&sys, &perm);
        assert_eq!(canonical_form(&sys), canonical_form(&relabeled));
        assert!(are_isomorphic_bruteforce(&sys, &relabeled));
    }

    #[test]
    fn different_line_counts_differ() {
        let triangle = LinearSystem::new(6, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]);
        assert_ne!(canonical_form(&fano()), canonical_form(&triangle));
        assert!(!are_isomorphic_bruteforce(&fano(), &triangle));
    }

    #[test]
    fn isolated_points_do_not_change_key() {
        let sys = LinearSystem::new(4, [[0, 1], [1, 2]]);
        let padded = LinearSystem::new(9, [[3, 7], [7, 8]]);
        assert_eq!(canonical_form(&sys), canonical_form(&padded));
    }

    #[test]
    fn non_isomorphic_same_parameters_differ() {
        // Both: 5 points, 2 lines of size 2; one pair meets, the other not.
        let meeting = LinearSystem::new(5, [[0, 1], [1, 2]]);
        let disjoint = LinearSystem::new(5, [[0, 1], [2, 3]]);
        assert!(!are_isomorphic_bruteforce(&meeting, &disjoint));
        assert_ne!(canonical_form(&meeting), canonical_form(&disjoint));
    }

    #[test]
    fn line_order_is_irrelevant() {
        let a = LinearSystem::new(5, [[0, 1, 2], [2, 3, 4]]);
        let b = LinearSystem::new(5, [[2, 3, 4], [0, 1, 2]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn empty_and_tiny_systems() {
        let empty = LinearSystem::new(0, Vec::<Vec<usize>>::new());
        let one = LinearSystem::new(1, Vec::<Vec<usize>>::new());
        // Both strip to zero points, zero lines.
        assert_eq!(canonical_form(&empty), canonical_form(&one));
    }
}
