//! Definition-level witness checking.
//!
//! These checkers work on plain index lists and deliberately share no code
//! with the branch-and-bound solvers, so a certificate accepted here is
//! vouched for by an independent route.

/// Does `witness` (a point set) meet every line?
pub fn check_transversal(lines: &[Vec<usize>], witness: &[usize]) -> bool {
    lines
        .iter()
        .all(|line| line.iter().any(|p| witness.contains(p)))
}

/// Are the lines indexed by `witness` pairwise disjoint?
pub fn check_matching(lines: &[Vec<usize>], witness: &[usize]) -> bool {
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            if a == b || a >= lines.len() || b >= lines.len() {
                return false;
            }
            if lines[a].iter().any(|p| lines[b].contains(p)) {
                return false;
            }
        }
    }
    witness.iter().all(|&i| i < lines.len())
}

/// Does every point lie on at most two of the lines indexed by `witness`?
pub fn check_two_packing(lines: &[Vec<usize>], witness: &[usize]) -> bool {
    if witness.iter().any(|&i| i >= lines.len()) {
        return false;
    }
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            if a == b {
                return false;
            }
            for &c in &witness[..i] {
                // any common point of lines a, b, c?
                if lines[a]
                    .iter()
                    .any(|p| lines[b].contains(p) && lines[c].contains(p))
                {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_lines() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5]]
    }

    #[test]
    fn transversal_checking() {
        let lines = triangle_lines();
        assert!(check_transversal(&lines, &[0, 1]));
        assert!(check_transversal(&lines, &[0, 2]));
        assert!(!check_transversal(&lines, &[0]));
        assert!(!check_transversal(&lines, &[3, 4]));
    }

    #[test]
    fn matching_checking() {
        let lines = vec![vec![0, 1], vec![2, 3], vec![1, 2]];
        assert!(check_matching(&lines, &[0, 1]));
        assert!(!check_matching(&lines, &[0, 2]));
        assert!(!check_matching(&lines, &[0, 0]));
        assert!(!check_matching(&lines, &[0, 9]));
    }

    #[test]
    fn two_packing_checking() {
        // Three lines through a common point 0.
        let bundle = vec![vec![0, 1], vec![0, 2], vec![0, 3]];
        assert!(check_two_packing(&bundle, &[0, 1]));
        assert!(!check_two_packing(&bundle, &[0, 1, 2]));
        let lines = triangle_lines();
        assert!(check_two_packing(&lines, &[0, 1, 2]));
    }
}
