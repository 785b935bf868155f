//! Arithmetic in the finite field F_q for a prime power q.
//!
//! Elements are encoded as integers in `0..q`: the base-p digits of an
//! element are its coefficients over the prime subfield. For prime q this
//! degenerates to plain modular arithmetic; for proper prime powers
//! multiplication reduces modulo an irreducible polynomial found by
//! exhaustive search (any irreducible of the right degree yields the same
//! field up to isomorphism, and the search is deterministic).

use crate::error::{Error, Result};

/// Returns `(p, k)` with `q = p^k` when q is a prime power, `None` otherwise.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut m = q;
    for cand in 2.. {
        if cand * cand > q {
            break;
        }
        if m.is_multiple_of(cand) {
            p = cand;
            break;
        }
    }
    if p == 0 {
        return Some((q, 1)); // q itself prime
    }
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    if m == 1 { Some((p, k)) } else { None }
}

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u64,
    deg: u32,
    q: u64,
    /// Coefficients of the monic irreducible modulus, degree-ascending,
    /// length `deg + 1`; empty for prime fields.
    modulus: Vec<u64>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, deg) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let modulus = if deg == 1 {
            Vec::new()
        } else {
            find_irreducible(p, deg)
        };
        Ok(GaloisField { p, deg, q, modulus })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let mut out = vec![0; self.deg as usize];
        let mut a = a;
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn undigits(&self, ds: &[u64]) -> u64 {
        ds.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.deg == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.deg == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.deg == 1 {
            return (a * b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let n = self.deg as usize;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the monic irreducible
        for i in (n..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(n) {
                let idx = i - n + j;
                prod[idx] = (prod[idx] + c * (self.p - m)) % self.p;
            }
        }
        self.undigits(&prod[..n])
    }

    /// Multiplicative inverse of a nonzero element, via a^(q-2).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        let mut result = 1;
        let mut base = a;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

/// Remainder of polynomial division over F_p; both polynomials degree-ascending.
fn poly_rem(mut f: Vec<u64>, g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let lead_inv = mod_inv(g[dg], p);
    while f.len() > dg {
        let df = f.len() - 1;
        let c = (f[df] * lead_inv) % p;
        if c != 0 {
            for (j, &gj) in g.iter().enumerate() {
                let idx = df - dg + j;
                f[idx] = (f[idx] + c * (p - gj)) % p;
            }
        }
        f.pop();
        while f.len() > dg && *f.last().unwrap() == 0 {
            f.pop();
        }
    }
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Smallest monic irreducible of degree `deg` over F_p, by trial division
/// against all monic polynomials of degree up to deg/2.
fn find_irreducible(p: u64, deg: u32) -> Vec<u64> {
    let deg = deg as usize;
    'candidate: for low in 0..p.pow(deg as u32) {
        let mut f: Vec<u64> = Vec::with_capacity(deg + 1);
        let mut m = low;
        for _ in 0..deg {
            f.push(m % p);
            m /= p;
        }
        f.push(1); // monic
        for d in 1..=deg / 2 {
            for glow in 0..p.pow(d as u32) {
                let mut g: Vec<u64> = Vec::with_capacity(d + 1);
                let mut m = glow;
                for _ in 0..d {
                    g.push(m % p);
                    m /= p;
                }
                g.push(1);
                let r = poly_rem(f.clone(), &g, p);
                if r.len() == 1 && r[0] == 0 {
                    continue 'candidate;
                }
            }
        }
        return f;
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    fn check_field_axioms(q: u64) {
        let gf = GaloisField::new(q).unwrap();
        for a in 0..q {
            assert_eq!(gf.add(a, 0), a);
            assert_eq!(gf.mul(a, 1), a);
            assert_eq!(gf.add(a, gf.neg(a)), 0);
            if a != 0 {
                assert_eq!(gf.mul(a, gf.inv(a)), 1, "inverse failed for {a} in F_{q}");
            }
            for b in 0..q {
                assert_eq!(gf.mul(a, b), gf.mul(b, a));
                for c in 0..q {
                    assert_eq!(gf.mul(a, gf.add(b, c)), gf.add(gf.mul(a, b), gf.mul(a, c)));
                }
            }
        }
        // nonzero elements form a group: no zero divisors
        for a in 1..q {
            for b in 1..q {
                assert_ne!(gf.mul(a, b), 0);
            }
        }
    }

    #[test]
    fn small_fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            check_field_axioms(q);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(10).is_err());
    }
}
