//! Small hand-built witnesses and seeded random linear systems.

use crate::bits::BitSet;
use crate::system::LinearSystem;
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Three lines pairwise meeting in three distinct points, each line padded
/// to size 3 with a private degree-1 point. Intersecting, 3-partite, and
/// the smallest intersecting 3-partite system with transversal number 2.
pub fn triangle() -> LinearSystem {
    LinearSystem::new(6, [[0, 1, 3], [0, 2, 4], [1, 2, 5]])
}

/// `m` distinct r-subsets of `n` points, pairwise sharing at most one
/// point, via seeded rejection sampling. Deterministic per seed; reports
/// infeasibility explicitly once the rejection budget is spent.
pub fn random_linear_system(n: usize, m: usize, r: usize, seed: u64) -> Result<LinearSystem> {
    if r < 2 || n < r || m < 1 {
        return Err(Error::Precondition(format!(
            "need n >= r >= 2 and m >= 1, got n={n}, m={m}, r={r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_attempts: u64 = 10_000 + 2_000 * m as u64;
    let mut attempts: u64 = 0;
    let mut lines: Vec<BitSet> = Vec::with_capacity(m);

    while lines.len() < m {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::RandomInfeasible {
                placed: lines.len(),
                requested: m,
                attempts,
            });
        }
        let picks = rand::seq::index::sample(&mut rng, n, r);
        let candidate = BitSet::from_indices(n, picks.iter());
        if lines.iter().all(|l| l.intersection_len(&candidate) <= 1) {
            lines.push(candidate);
        }
    }
    Ok(LinearSystem::from_bitsets(n, lines))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_shape() {
        let t = triangle();
        assert_eq!(t.num_points(), 6);
        assert_eq!(t.num_lines(), 3);
        assert!(t.validate().is_valid());
        assert!(t.is_intersecting());
        let deg = t.degrees();
        assert_eq!(deg, vec![2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let a = random_linear_system(9, 3, 3, 1).unwrap();
        let b = random_linear_system(9, 3, 3, 1).unwrap();
        assert_eq!(a, b);
        let c = random_linear_system(9, 3, 3, 2).unwrap();
        assert!(a == c || a != c); // different seed may or may not collide; just must not panic
    }

    #[test]
    fn random_output_is_always_linear() {
        for seed in 0..20 {
            let sys = random_linear_system(12, 6, 3, seed).unwrap();
            let report = sys.validate();
            assert!(report.is_valid(), "seed {seed}");
            assert_eq!(report.uniform, Some(3));
        }
    }

    #[test]
    fn infeasible_demand_is_an_error() {
        // On 4 points any two distinct triples share two points.
        let err = random_linear_system(4, 20, 3, 1).unwrap_err();
        assert!(matches!(err, Error::RandomInfeasible { .. }));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            random_linear_system(3, 1, 1, 0),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            random_linear_system(2, 1, 3, 0),
            Err(Error::Precondition(_))
        ));
    }
}
