//! Edge-clique-partition encoding of intersecting linear systems.
//!
//! In an intersecting linear system any two lines meet in exactly one
//! point, so the lines behave like the vertices of a complete graph K_m in
//! which every point of degree d >= 2 is a clique on the d lines through
//! it, and those cliques partition the edge set. Degree-1 points carry no
//! pairwise information and are re-added as padding during realization.
//!
//! The encoding makes exhaustive search tractable: vertex-labeled
//! partitions of K_m are generated by assigning each edge, in lexicographic
//! order, to a compatible existing clique or to a fresh one — every labeled
//! partition is produced exactly once — and isomorph reduction keeps the
//! first representative of each canonical class. Transversal and 2-packing
//! numbers are computed directly on the partition, by routes independent
//! of the point/line solvers.

use crate::bits::BitSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::system::{LinearSystem, SidePartition};
use crate::{Error, Result};
use std::collections::HashSet;

/// A partition of the edges of K_m into cliques of size >= 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    m: usize,
    cliques: Vec<Vec<u16>>,
}

impl CliquePartition {
    /// Builds and validates a partition. Cliques are normalized: members
    /// ascending, cliques sorted lexicographically.
    pub fn new(m: usize, mut cliques: Vec<Vec<u16>>) -> Result<Self> {
        for c in cliques.iter_mut() {
            c.sort_unstable();
        }
        cliques.sort();
        let cp = CliquePartition { m, cliques };
        cp.validate()?;
        Ok(cp)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cliques(&self) -> &[Vec<u16>] {
        &self.cliques
    }

    /// Number of cliques through each vertex.
    pub fn cliques_per_vertex(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.m];
        for c in &self.cliques {
            for &v in c {
                counts[v as usize] += 1;
            }
        }
        counts
    }

    fn validate(&self) -> Result<()> {
        let mut covered = vec![vec![false; self.m]; self.m];
        for c in &self.cliques {
            if c.len() < 2 {
                return Err(Error::InvalidPartition(format!(
                    "clique {c:?} has fewer than 2 vertices"
                )));
            }
            let mut seen = vec![false; self.m];
            for &v in c {
                if v as usize >= self.m {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for m={}",
                        self.m
                    )));
                }
                if seen[v as usize] {
                    return Err(Error::InvalidPartition(format!(
                        "clique {c:?} repeats vertex {v}"
                    )));
                }
                seen[v as usize] = true;
            }
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    let (a, b) = (c[i] as usize, c[j] as usize);
                    if covered[a][b] {
                        return Err(Error::InvalidPartition(format!(
                            "edge {{{a},{b}}} covered twice"
                        )));
                    }
                    covered[a][b] = true;
                }
            }
        }
        for a in 0..self.m {
            for b in a + 1..self.m {
                if !covered[a][b] {
                    return Err(Error::InvalidPartition(format!(
                        "edge {{{a},{b}}} not covered"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The partition viewed as a linear system: points are the m vertices,
    /// lines are the cliques. Used for canonical keys.
    pub fn dual_system(&self) -> LinearSystem {
        LinearSystem::new(
            self.m,
            self.cliques
                .iter()
                .map(|c| c.iter().map(|&v| v as usize).collect::<Vec<_>>()),
        )
    }

    pub fn canonical_key(&self) -> CanonicalForm {
        canonical_form(&self.dual_system())
    }

    /// One-line text form: `m K; c1; c2; ...`.
    pub fn to_line(&self) -> String {
        let cliques: Vec<String> = self
            .cliques
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("{} {}; {}", self.m, self.cliques.len(), cliques.join("; "))
    }

    pub fn from_line(text: &str) -> Result<Self> {
        let mut parts = text.split(';').map(str::trim);
        let header = parts
            .next()
            .ok_or_else(|| Error::InvalidPartition("empty partition text".into()))?;
        let mut nums = header.split_whitespace();
        let bad_header =
            || Error::InvalidPartition(format!("expected `m K` header, got `{header}`"));
        let m: usize = nums
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(bad_header)?;
        let k: usize = nums
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(bad_header)?;
        let mut cliques = Vec::with_capacity(k);
        for chunk in parts {
            if chunk.is_empty() {
                continue;
            }
            let clique: std::result::Result<Vec<u16>, _> =
                chunk.split_whitespace().map(str::parse).collect();
            cliques.push(clique.map_err(|_| {
                Error::InvalidPartition(format!("bad clique row `{chunk}`"))
            })?);
        }
        if cliques.len() != k {
            return Err(Error::InvalidPartition(format!(
                "header promises {k} cliques, found {}",
                cliques.len()
            )));
        }
        CliquePartition::new(m, cliques)
    }
}

/// Converts an intersecting linear system into its clique partition.
/// Returns the partition and, per line, the number of dropped degree-1
/// points.
pub fn to_clique_partition(sys: &LinearSystem) -> Result<(CliquePartition, Vec<usize>)> {
    let m = sys.num_lines();
    if m < 2 {
        return Err(Error::Precondition(format!(
            "clique representation needs at least 2 lines, got {m}"
        )));
    }
    for i in 0..m {
        for j in i + 1..m {
            if sys.line(i).is_disjoint(sys.line(j)) {
                return Err(Error::NotIntersecting(i, j));
            }
        }
    }
    let thru = sys.lines_through();
    let mut cliques = Vec::new();
    let mut padding = vec![0usize; m];
    for p in 0..sys.num_points() {
        let deg = thru[p].len();
        if deg >= 2 {
            cliques.push(thru[p].iter().map(|li| li as u16).collect());
        } else if deg == 1 {
            padding[thru[p].first().unwrap()] += 1;
        }
    }
    let cp = CliquePartition::new(m, cliques)?;
    Ok((cp, padding))
}

/// An r-partite linear system realizing a clique partition: one point per
/// clique plus degree-1 padding points bringing every line up to size r.
#[derive(Clone, Debug)]
pub struct Realization {
    pub system: LinearSystem,
    pub sides: SidePartition,
    /// The first `clique_points` points correspond to cliques, in order.
    pub clique_points: usize,
}

/// Realizes a partition as an intersecting r-partite linear system, or
/// returns `None` when no r-partite realization exists.
///
/// Cliques sharing a vertex are points on a common line and need distinct
/// sides, so realizability is exactly proper r-colorability of that
/// conflict graph; padding points then take each line's unused sides.
pub fn from_clique_partition(cp: &CliquePartition, r: usize) -> Result<Option<Realization>> {
    let m = cp.m();
    let k = cp.cliques().len();
    let per_vertex = cp.cliques_per_vertex();
    if let Some((line, &count)) = per_vertex.iter().enumerate().find(|(_, &c)| c > r) {
        return Err(Error::RealizationInfeasible { line, count, r });
    }

    // Conflict graph: cliques adjacent iff they share a vertex.
    let mut adj = vec![BitSet::new(k); k];
    for i in 0..k {
        for j in i + 1..k {
            if cp.cliques()[i].iter().any(|v| cp.cliques()[j].contains(v)) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut color = vec![0u16; k];
    if !crate::system::color_backtrack(&adj, r, &mut color, 0) {
        return Ok(None);
    }

    let num_padding: usize = per_vertex.iter().map(|&c| r - c).sum();
    let num_points = k + num_padding;
    let mut side_of = vec![0u16; num_points];
    for (ci, &c) in color.iter().enumerate() {
        side_of[ci] = c;
    }

    let mut lines = Vec::with_capacity(m);
    let mut next_padding = k;
    for v in 0..m {
        let mut pts = Vec::with_capacity(r);
        let mut used = vec![false; r + 1];
        for (ci, clique) in cp.cliques().iter().enumerate() {
            if clique.contains(&(v as u16)) {
                pts.push(ci);
                used[color[ci] as usize] = true;
            }
        }
        for side in 1..=r as u16 {
            if !used[side as usize] {
                pts.push(next_padding);
                side_of[next_padding] = side;
                next_padding += 1;
            }
        }
        pts.sort_unstable();
        lines.push(pts);
    }
    debug_assert_eq!(next_padding, num_points);

    let system = LinearSystem::new(num_points, lines);
    let sides = SidePartition { r, side_of };
    debug_assert!(sides.is_valid_for(&system));
    debug_assert!(system.is_intersecting());
    debug_assert!(system.validate().is_valid());
    Ok(Some(Realization {
        system,
        sides,
        clique_points: k,
    }))
}

/// Transversal number in the clique representation: a minimum-cost cover
/// of the m lines, where each clique covers its member lines at cost 1 and
/// any single line can be covered at cost 1 by a degree-1 point. Solved by
/// dynamic programming over line subsets.
pub fn tau_rep(cp: &CliquePartition) -> usize {
    let m = cp.m();
    assert!(m <= 22, "set-cover table supports at most 22 lines, got {m}");
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let mut clique_masks: Vec<u32> = Vec::with_capacity(cp.cliques().len());
    for c in cp.cliques() {
        clique_masks.push(c.iter().fold(0u32, |acc, &v| acc | 1 << v));
    }
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); m];
    for &cm in &clique_masks {
        for v in 0..m {
            if cm >> v & 1 == 1 {
                by_vertex[v].push(cm);
            }
        }
    }
    let mut dp = vec![u8::MAX; (full as usize) + 1];
    dp[0] = 0;
    for mask in 0..=full {
        let cost = dp[mask as usize];
        if cost == u8::MAX {
            continue;
        }
        if mask == full {
            break;
        }
        let v = (!mask).trailing_zeros() as usize;
        let relax = |dp: &mut Vec<u8>, next: u32| {
            if cost + 1 < dp[next as usize] {
                dp[next as usize] = cost + 1;
            }
        };
        relax(&mut dp, mask | 1 << v);
        for &cm in &by_vertex[v] {
            relax(&mut dp, mask | cm);
        }
    }
    dp[full as usize] as usize
}

/// 2-packing number in the clique representation: the largest vertex set
/// of K_m meeting every clique in at most two vertices. Exhaustive scan
/// over vertex subsets.
pub fn nu2_rep(cp: &CliquePartition) -> usize {
    let m = cp.m();
    assert!(m <= 20, "subset scan supports at most 20 lines, got {m}");
    let clique_masks: Vec<u32> = cp
        .cliques()
        .iter()
        .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    let mut best = 0;
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize <= best {
            continue;
        }
        if clique_masks
            .iter()
            .all(|&cm| (cm & mask).count_ones() <= 2)
        {
            best = mask.count_ones() as usize;
        }
    }
    best
}

/// Result of an exhaustive, isomorph-reduced enumeration run.
#[derive(Clone, Debug)]
pub struct EnumerationOutcome {
    pub m: usize,
    pub cap: usize,
    /// One representative per isomorphism class, in discovery order.
    pub partitions: Vec<CliquePartition>,
    /// Vertex-labeled partitions visited (a class count only when complete).
    pub labeled_count: u64,
    pub nodes: u64,
    pub budget: u64,
    /// False when the node budget stopped the search early.
    pub complete: bool,
}

/// Enumerates every edge-clique partition of K_m with at most `cap`
/// cliques through any vertex, exactly once per isomorphism class.
///
/// Edges are processed in lexicographic order; each uncovered edge {u,v}
/// either joins an existing clique whose least vertex is u and whose
/// members all miss v so far, or starts a new clique. Every labeled
/// partition has exactly one generation path, and canonical keys reduce
/// the labeled stream to class representatives. A budget overrun aborts
/// with `complete = false`, never with a silently truncated stream.
pub fn enumerate_partitions(m: usize, cap: usize, budget: u64) -> EnumerationOutcome {
    assert!((2..=32).contains(&m), "enumeration supports 2 <= m <= 32");
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
        .collect();
    let mut state = EnumState {
        m,
        cap,
        pairs,
        covered: vec![0u64; m],
        blocks: Vec::new(),
        block_count: vec![0u8; m],
        seen: HashSet::new(),
        out: EnumerationOutcome {
            m,
            cap,
            partitions: Vec::new(),
            labeled_count: 0,
            nodes: 0,
            budget,
            complete: true,
        },
    };
    state.dfs(0);
    state.out
}

struct EnumState {
    m: usize,
    cap: usize,
    pairs: Vec<(usize, usize)>,
    /// covered[v] = bitmask of vertices w with edge {v,w} already covered.
    covered: Vec<u64>,
    blocks: Vec<Vec<u16>>,
    block_count: Vec<u8>,
    seen: HashSet<CanonicalForm>,
    out: EnumerationOutcome,
}

impl EnumState {
    fn dfs(&mut self, mut idx: usize) {
        if !self.out.complete {
            return;
        }
        self.out.nodes += 1;
        if self.out.nodes > self.out.budget {
            self.out.complete = false;
            return;
        }
        while idx < self.pairs.len() {
            let (u, v) = self.pairs[idx];
            if self.covered[u] >> v & 1 == 1 {
                idx += 1;
            } else {
                break;
            }
        }
        if idx == self.pairs.len() {
            self.emit();
            return;
        }
        let (u, v) = self.pairs[idx];

        // Join an existing block: least vertex u, all members missing v.
        if (self.block_count[v] as usize) < self.cap {
            for bi in 0..self.blocks.len() {
                let b = &self.blocks[bi];
                if b[0] as usize != u {
                    continue;
                }
                if b.iter().any(|&w| self.covered[v] >> w & 1 == 1) {
                    continue;
                }
                let members = self.blocks[bi].clone();
                for &w in &members {
                    self.cover(w as usize, v);
                }
                self.blocks[bi].push(v as u16);
                self.block_count[v] += 1;
                self.dfs(idx + 1);
                self.block_count[v] -= 1;
                self.blocks[bi].pop();
                for &w in &members {
                    self.uncover(w as usize, v);
                }
                if !self.out.complete {
                    return;
                }
            }
        }

        // Start a new block {u, v}.
        if (self.block_count[u] as usize) < self.cap && (self.block_count[v] as usize) < self.cap {
            self.cover(u, v);
            self.blocks.push(vec![u as u16, v as u16]);
            self.block_count[u] += 1;
            self.block_count[v] += 1;
            self.dfs(idx + 1);
            self.block_count[u] -= 1;
            self.block_count[v] -= 1;
            self.blocks.pop();
            self.uncover(u, v);
        }
    }

    fn cover(&mut self, a: usize, b: usize) {
        self.covered[a] |= 1 << b;
        self.covered[b] |= 1 << a;
    }

    fn uncover(&mut self, a: usize, b: usize) {
        self.covered[a] &= !(1 << b);
        self.covered[b] &= !(1 << a);
    }

    fn emit(&mut self) {
        self.out.labeled_count += 1;
        let cp = CliquePartition::new(self.m, self.blocks.clone())
            .expect("generated partitions are valid by construction");
        let key = cp.canonical_key();
        if self.seen.insert(key) {
            self.out.partitions.push(cp);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::gen::triangle;
    use crate::invariants::{nu2_exact, tau_exact};
    use crate::plane::{projective_plane, truncated_plane};

    #[test]
    fn triangle_partition_is_three_two_cliques() {
        let (cp, padding) = to_clique_partition(&triangle()).unwrap();
        assert_eq!(cp.m(), 3);
        assert_eq!(
            cp.cliques(),
            &[vec![0u16, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(padding, vec![1, 1, 1]);
    }

    #[test]
    fn fano_partition_is_seven_triples() {
        let fano = projective_plane(2).unwrap().system;
        let (cp, padding) = to_clique_partition(&fano).unwrap();
        assert_eq!(cp.m(), 7);
        assert_eq!(cp.cliques().len(), 7);
        assert!(cp.cliques().iter().all(|c| c.len() == 3));
        assert!(padding.iter().all(|&p| p == 0));
    }

    #[test]
    fn truncated_plane_three_partition_counts() {
        let (sys, _) = truncated_plane(3).unwrap();
        let (cp, _) = to_clique_partition(&sys).unwrap();
        assert_eq!(cp.m(), 9);
        assert_eq!(cp.cliques().len(), 12);
        assert!(cp.cliques().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn non_intersecting_is_rejected() {
        let sys = LinearSystem::new(6, [[0, 1, 2], [3, 4, 5]]);
        assert!(matches!(
            to_clique_partition(&sys),
            Err(Error::NotIntersecting(0, 1))
        ));
    }

    #[test]
    fn triangle_partition_realizes_at_r3() {
        let (cp, _) = to_clique_partition(&triangle()).unwrap();
        let real = from_clique_partition(&cp, 3).unwrap().unwrap();
        assert_eq!(real.system.num_points(), 6);
        assert_eq!(real.system.num_lines(), 3);
        assert_eq!(canonical_form(&real.system), canonical_form(&triangle()));
        assert!(real.sides.is_valid_for(&real.system));
    }

    #[test]
    fn fano_partition_has_no_three_partite_realization() {
        let fano = projective_plane(2).unwrap().system;
        let (cp, _) = to_clique_partition(&fano).unwrap();
        assert!(from_clique_partition(&cp, 3).unwrap().is_none());
    }

    #[test]
    fn pigeonhole_infeasibility_is_an_error() {
        let fano = projective_plane(2).unwrap().system;
        let (cp, _) = to_clique_partition(&fano).unwrap();
        // Every vertex lies in 3 cliques; r = 2 cannot host them.
        assert!(matches!(
            from_clique_partition(&cp, 2),
            Err(Error::RealizationInfeasible { .. })
        ));
    }

    #[test]
    fn truncated_plane_roundtrip_is_isomorphic() {
        let (sys, _) = truncated_plane(3).unwrap();
        let (cp, _) = to_clique_partition(&sys).unwrap();
        let real = from_clique_partition(&cp, 4).unwrap().unwrap();
        assert_eq!(canonical_form(&real.system), canonical_form(&sys));
    }

    #[test]
    fn tau_rep_examples() {
        let (cp, _) = to_clique_partition(&triangle()).unwrap();
        assert_eq!(tau_rep(&cp), 2);

        let fano = projective_plane(2).unwrap().system;
        let (cp, _) = to_clique_partition(&fano).unwrap();
        assert_eq!(tau_rep(&cp), 3);
        assert_eq!(tau_exact(&fano).value, 3);

        let k2 = CliquePartition::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(tau_rep(&k2), 1);
    }

    #[test]
    fn nu2_rep_examples() {
        let fano = projective_plane(2).unwrap().system;
        let (cp, _) = to_clique_partition(&fano).unwrap();
        assert_eq!(nu2_rep(&cp), 4);
        assert_eq!(nu2_exact(&fano).value, 4);

        let (cp, _) = to_clique_partition(&triangle()).unwrap();
        assert_eq!(nu2_rep(&cp), 3);

        let k2 = CliquePartition::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(nu2_rep(&k2), 2);
    }

    #[test]
    fn enumerate_k3_gives_two_classes() {
        let out = enumerate_partitions(3, 3, 1 << 20);
        assert!(out.complete);
        assert_eq!(out.partitions.len(), 2);
        let sizes: Vec<Vec<usize>> = out
            .partitions
            .iter()
            .map(|cp| cp.cliques().iter().map(|c| c.len()).collect())
            .collect();
        assert!(sizes.contains(&vec![2, 2, 2]));
        assert!(sizes.contains(&vec![3]));
    }

    #[test]
    fn enumerate_k4_cap3_includes_triangle_plus_star() {
        let out = enumerate_partitions(4, 3, 1 << 20);
        assert!(out.complete);
        assert_eq!(out.partitions.len(), 3);
        // One class is a triangle plus three 2-cliques at the fourth vertex.
        let shape: Vec<Vec<usize>> = out
            .partitions
            .iter()
            .map(|cp| {
                let mut s: Vec<usize> = cp.cliques().iter().map(|c| c.len()).collect();
                s.sort_unstable();
                s
            })
            .collect();
        assert!(shape.contains(&vec![2, 2, 2, 3]));
        // No partition exceeds the vertex cap.
        for cp in &out.partitions {
            assert!(cp.cliques_per_vertex().iter().all(|&c| c <= 3));
        }
    }

    #[test]
    fn enumerate_k4_cap2_leaves_only_the_full_clique() {
        let out = enumerate_partitions(4, 2, 1 << 20);
        assert!(out.complete);
        assert_eq!(out.partitions.len(), 1);
        assert_eq!(out.partitions[0].cliques(), &[vec![0u16, 1, 2, 3]]);
    }

    #[test]
    fn enumeration_budget_aborts_honestly() {
        let out = enumerate_partitions(6, 6, 10);
        assert!(!out.complete);
        assert!(out.nodes >= 10);
    }

    #[test]
    fn partition_line_roundtrip() {
        let (cp, _) = to_clique_partition(&triangle()).unwrap();
        let text = cp.to_line();
        assert_eq!(text, "3 3; 0 1; 0 2; 1 2");
        let back = CliquePartition::from_line(&text).unwrap();
        assert_eq!(cp, back);
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        assert!(CliquePartition::new(3, vec![vec![0, 1]]).is_err()); // edge {0,2} missing
        assert!(CliquePartition::new(3, vec![vec![0, 1], vec![0, 1], vec![0, 2], vec![1, 2]]).is_err());
        assert!(CliquePartition::new(2, vec![vec![0], vec![0, 1]]).is_err());
    }
}
