//! Finite field arithmetic tables for small orders.
//!
//! Supported orders are the primes {2,3,5,7,11,13} and the prime powers
//! {4,8,9,16}. Elements of GF(p^k) are encoded as integers in `0..q` whose
//! base-p digits are the coefficients of a degree-<k polynomial over GF(p);
//! multiplication reduces modulo a fixed irreducible polynomial per order.
//! Every table is small enough to verify the field axioms exhaustively,
//! which the test suite does for all supported orders.

use crate::{Error, Result};

/// Irreducible monic polynomials, low-degree coefficient first.
/// GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1.
const IRREDUCIBLE: &[(usize, &[u16])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
];

const SUPPORTED: &[usize] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Addition/multiplication/inverse tables for GF(q).
#[derive(Clone, Debug)]
pub struct FieldTables {
    q: usize,
    p: usize,
    k: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl FieldTables {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no multiplicative inverse");
        self.inv[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }
}

/// Builds the arithmetic tables for GF(q).
pub fn make_field(q: usize) -> Result<FieldTables> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    if !SUPPORTED.contains(&q) {
        return Err(Error::UnsupportedOrder(q));
    }
    let (p, k) = factor_prime_power(q);
    let reduce: Option<&[u16]> = IRREDUCIBLE
        .iter()
        .find(|(order, _)| *order == q)
        .map(|(_, poly)| *poly);

    let digits = |mut e: usize| -> Vec<usize> {
        let mut d = vec![0usize; k];
        for slot in d.iter_mut() {
            *slot = e % p;
            e /= p;
        }
        d
    };
    let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };

    let add_elems = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a), digits(b));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        undigits(&sum)
    };

    let mul_elems = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a), digits(b));
        // Polynomial product, then reduction by the irreducible polynomial.
        let mut prod = vec![0usize; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        if let Some(poly) = reduce {
            for deg in (k..prod.len()).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                // x^deg = -(poly minus leading term) * x^(deg-k)
                for (i, &coef) in poly.iter().take(k).enumerate() {
                    let sub = (c * coef as usize) % p;
                    prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
                }
            }
        } else {
            debug_assert_eq!(k, 1);
            prod[0] %= p;
        }
        undigits(&prod[..k])
    };

    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for a in 0..q {
        for b in 0..q {
            add[a * q + b] = add_elems(a, b) as u16;
            mul[a * q + b] = mul_elems(a, b) as u16;
        }
    }
    let mut neg = vec![0u16; q];
    let mut inv = vec![0u16; q];
    for a in 0..q {
        neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16;
        if a != 0 {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16;
        }
    }

    Ok(FieldTables {
        q,
        p,
        k,
        add,
        mul,
        neg,
        inv,
    })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn is_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|&d| q % d == 0).unwrap();
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1 && is_prime(p)
}

fn factor_prime_power(q: usize) -> (usize, usize) {
    let p = (2..=q).find(|&d| q % d == 0).unwrap();
    let mut k = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        k += 1;
    }
    (p, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_addition_is_xor() {
        let f = make_field(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(a, b), a ^ b);
            }
        }
    }

    #[test]
    fn gf4_has_characteristic_two() {
        let f = make_field(4).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.characteristic(), 2);
        // x * x = x + 1 under x^2+x+1.
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(matches!(make_field(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(make_field(12), Err(Error::NotPrimePower(12))));
        assert!(matches!(make_field(1), Err(Error::NotPrimePower(1))));
    }

    #[test]
    fn rejects_unsupported_prime_power() {
        assert!(matches!(make_field(25), Err(Error::UnsupportedOrder(25))));
        assert!(matches!(make_field(17), Err(Error::UnsupportedOrder(17))));
    }

    #[test]
    fn axioms_hold_exhaustively_for_all_supported_orders() {
        for &q in SUPPORTED {
            let f = make_field(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "inverse fails in GF({q})");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity fails in GF({q})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for &q in &[4usize, 8, 9, 16] {
            let f = make_field(q).unwrap();
            // Some element must generate all q-1 nonzero elements.
            let mut found = false;
            for g in 1..q {
                let mut seen = vec![false; q];
                let mut x = 1usize;
                for _ in 0..q - 1 {
                    x = f.mul(x, g);
                    seen[x] = true;
                }
                if (1..q).all(|e| seen[e]) {
                    found = true;
                    break;
                }
            }
            assert!(found, "no generator in GF({q})");
        }
    }
}
