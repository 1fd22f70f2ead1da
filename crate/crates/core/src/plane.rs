//! Projective planes over GF(q) and their truncations.
//!
//! Points are the 1-dimensional subspaces of GF(q)^3 and lines the
//! 2-dimensional ones, with incidence by containment. Representatives are
//! normalized so the first nonzero coordinate is 1 and enumerated in
//! lexicographic order, which fixes the serialization.

use crate::bits::BitSet;
use crate::field::{make_field, FieldTables};
use crate::system::{LinearSystem, SidePartition};
use crate::{Error, Result};

/// A generated plane together with its coordinate labels.
#[derive(Clone, Debug)]
pub struct PlaneHandle {
    pub q: usize,
    pub system: LinearSystem,
    /// Homogeneous coordinates of each point, normalized.
    pub point_coords: Vec<[u16; 3]>,
    /// Dual coordinates of each line, normalized.
    pub line_coords: Vec<[u16; 3]>,
}

/// Builds the projective plane of order `q`: q²+q+1 points and lines,
/// q+1 points per line, any two lines meeting in exactly one point.
pub fn projective_plane(q: usize) -> Result<PlaneHandle> {
    let f = make_field(q)?;
    let coords = normalized_triples(q);
    let expected = q * q + q + 1;
    debug_assert_eq!(coords.len(), expected);

    let mut lines = Vec::with_capacity(expected);
    for lc in &coords {
        let mut line = BitSet::new(expected);
        for (pi, pc) in coords.iter().enumerate() {
            if incident(&f, lc, pc) {
                line.insert(pi);
            }
        }
        lines.push(line);
    }
    Ok(PlaneHandle {
        q,
        system: LinearSystem::from_bitsets(expected, lines),
        point_coords: coords.clone(),
        line_coords: coords,
    })
}

/// All triples over GF(q) whose first nonzero coordinate is 1,
/// in lexicographic order.
fn normalized_triples(q: usize) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for a in 0..q as u16 {
        for b in 0..q as u16 {
            for c in 0..q as u16 {
                let t = [a, b, c];
                let first = t.iter().find(|&&x| x != 0);
                if first == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn incident(f: &FieldTables, line: &[u16; 3], point: &[u16; 3]) -> bool {
    let mut acc = 0usize;
    for i in 0..3 {
        acc = f.add(acc, f.mul(line[i] as usize, point[i] as usize));
    }
    acc == 0
}

/// Removes point `p` and every line through it. The q+1 deleted lines,
/// minus `p`, become the sides of the returned partition, so the result is
/// an intersecting (q+1)-partite system with (q+1)q points and q² lines.
pub fn truncate(plane: &PlaneHandle, p: usize) -> Result<(LinearSystem, SidePartition)> {
    let sys = &plane.system;
    if p >= sys.num_points() {
        return Err(Error::PointOutOfRange(p));
    }
    let q = plane.q;
    let r = q + 1;

    let kept_points: Vec<usize> = (0..sys.num_points()).filter(|&x| x != p).collect();
    let mut new_index = vec![usize::MAX; sys.num_points()];
    for (ni, &x) in kept_points.iter().enumerate() {
        new_index[x] = ni;
    }

    let mut side_of = vec![0u16; kept_points.len()];
    let mut side = 0u16;
    let mut kept_lines = Vec::new();
    for line in sys.lines() {
        if line.contains(p) {
            side += 1;
            for x in line.iter().filter(|&x| x != p) {
                side_of[new_index[x]] = side;
            }
        } else {
            kept_lines.push(BitSet::from_indices(
                kept_points.len(),
                line.iter().map(|x| new_index[x]),
            ));
        }
    }
    debug_assert_eq!(side as usize, r);
    debug_assert_eq!(kept_lines.len(), q * q);

    let truncated = LinearSystem::from_bitsets(kept_points.len(), kept_lines);
    let partition = SidePartition { r, side_of };
    debug_assert!(partition.is_valid_for(&truncated));
    Ok((truncated, partition))
}

/// Truncation at the canonical first point.
pub fn truncated_plane(q: usize) -> Result<(LinearSystem, SidePartition)> {
    let plane = projective_plane(q)?;
    truncate(&plane, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic_bruteforce, canonical_form};
    use crate::system::find_partition;

    #[test]
    fn fano_counts() {
        let plane = projective_plane(2).unwrap();
        assert_eq!(plane.system.num_points(), 7);
        assert_eq!(plane.system.num_lines(), 7);
        assert!(plane.system.lines().iter().all(|l| l.len() == 3));
    }

    #[test]
    fn fano_matches_difference_set_labeling() {
        let plane = projective_plane(2).unwrap();
        let cyclic: Vec<Vec<usize>> = (0..7)
            .map(|i| {
                let mut l = vec![i % 7, (i + 1) % 7, (i + 3) % 7];
                l.sort_unstable();
                l
            })
            .collect();
        let fano = LinearSystem::new(7, cyclic);
        assert!(are_isomorphic_bruteforce(&plane.system, &fano));
        assert_eq!(canonical_form(&plane.system), canonical_form(&fano));
    }

    #[test]
    fn plane_invariants_small_orders() {
        for q in [2usize, 3, 4] {
            let plane = projective_plane(q).unwrap();
            let sys = &plane.system;
            let expected = q * q + q + 1;
            assert_eq!(sys.num_points(), expected);
            assert_eq!(sys.num_lines(), expected);
            assert!(sys.lines().iter().all(|l| l.len() == q + 1));
            assert!(sys.degrees().iter().all(|&d| d == q + 1));
            for i in 0..sys.num_lines() {
                for j in i + 1..sys.num_lines() {
                    assert_eq!(sys.line(i).intersection_len(sys.line(j)), 1);
                }
            }
        }
    }

    #[test]
    fn plane_duality_two_points_one_line() {
        let plane = projective_plane(3).unwrap();
        let sys = &plane.system;
        for a in 0..sys.num_points() {
            for b in a + 1..sys.num_points() {
                let common = sys
                    .lines()
                    .iter()
                    .filter(|l| l.contains(a) && l.contains(b))
                    .count();
                assert_eq!(common, 1, "points {a},{b}");
            }
        }
    }

    #[test]
    fn truncation_counts_and_structure() {
        for q in [2usize, 3, 4] {
            let r = q + 1;
            let (sys, part) = truncated_plane(q).unwrap();
            assert_eq!(sys.num_points(), r * (r - 1));
            assert_eq!(sys.num_lines(), (r - 1) * (r - 1));
            assert!(sys.validate().is_valid());
            assert_eq!(sys.validate().uniform, Some(r));
            assert!(sys.is_intersecting());
            assert!(part.is_valid_for(&sys));
            // An independent exact partition decision must agree.
            assert!(find_partition(&sys, r).unwrap().is_some());
        }
    }

    #[test]
    fn truncate_rejects_bad_point() {
        let plane = projective_plane(2).unwrap();
        assert!(matches!(
            truncate(&plane, 7),
            Err(Error::PointOutOfRange(7))
        ));
    }
}
