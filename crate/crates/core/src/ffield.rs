//! Small finite fields F_{p^k}, p < 256, p^k <= 65536.
//!
//! Elements are packed into a `u16`: the base-p digits of the packed value
//! are the coefficients of the residue polynomial, constant digit first.
//! F_8 uses u^3+u+1 and F_9 uses u^2+1; other extension degrees take the
//! lexicographically first monic irreducible, so encodings are reproducible.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unsupported field size {p}^{k}")]
    TooLarge { p: u32, k: u32 },
    #[error("bad element literal '{0}'")]
    BadLiteral(String),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A fixed field F_{p^k}: the prime, the degree, and the monic modulus
/// (digit vector of length k+1, constant first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u16,
    pub k: u8,
    modulus: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.k)
    }
}

impl FieldSpec {
    pub fn new(p: u32, k: u32) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > 255 || k == 0 || k > 4 || (p as u64).pow(k) > 65536 {
            return Err(FieldError::TooLarge { p, k });
        }
        let modulus = match (p, k) {
            (_, 1) => vec![0, 1],
            (2, 3) => vec![1, 1, 0, 1], // u^3 + u + 1
            (3, 2) => vec![1, 0, 1],    // u^2 + 1
            _ => first_irreducible(p as u16, k as u8),
        };
        Ok(FieldSpec { p: p as u16, k: k as u8, modulus })
    }

    pub fn q(&self) -> u32 {
        (self.p as u32).pow(self.k as u32)
    }

    pub fn zero(&self) -> u16 {
        0
    }

    pub fn one(&self) -> u16 {
        1
    }

    fn digits(&self, mut v: u16) -> Vec<u16> {
        let mut d = vec![0u16; self.k as usize];
        for slot in d.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u16]) -> u16 {
        let mut v = 0u32;
        for &di in d.iter().rev() {
            v = v * self.p as u32 + di as u32;
        }
        v as u16
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.k == 1 {
            return ((a as u32 + b as u32) % self.p as u32) as u16;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u16> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&s)
    }

    pub fn neg(&self, a: u16) -> u16 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let d: Vec<u16> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&d)
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if self.k == 1 {
            return ((a as u32 * b as u32) % self.p as u32) as u16;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u32 * y as u32) % self.p as u32;
            }
        }
        // reduce modulo the monic modulus
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.modulus.iter().enumerate().take(k) {
                let idx = i - k + j;
                let t = (c * (self.p as u32 - mj as u32)) % self.p as u32;
                prod[idx] = (prod[idx] + t) % self.p as u32;
            }
        }
        let d: Vec<u16> = prod[..k].iter().map(|&x| x as u16).collect();
        self.pack(&d)
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u16) -> Option<u16> {
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.q() as u64 - 2))
    }

    /// All elements, in packed-value order.
    pub fn elements(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.q()).map(move |v| {
            if self.k == 1 {
                v as u16
            } else {
                v as u16
            }
        })
    }

    /// Parse "p:k:v" where v packs the digit vector in base p.
    pub fn parse_elem(&self, s: &str) -> Result<u16, FieldError> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || FieldError::BadLiteral(s.to_string());
        if parts.len() != 3 {
            return Err(bad());
        }
        let p: u16 = parts[0].parse().map_err(|_| bad())?;
        let k: u8 = parts[1].parse().map_err(|_| bad())?;
        let v: u32 = parts[2].parse().map_err(|_| bad())?;
        if p != self.p || k != self.k || v >= self.q() {
            return Err(bad());
        }
        Ok(v as u16)
    }

    pub fn show_elem(&self, a: u16) -> String {
        format!("{}:{}:{}", self.p, self.k, a)
    }
}

// Lexicographically first monic irreducible of degree k over F_p, found by
// checking for roots (k <= 3) or quadratic/linear factors (k = 4) via
// exhaustive trial multiplication. Fields here are tiny.
fn first_irreducible(p: u16, k: u8) -> Vec<u16> {
    let pk = (p as u32).pow(k as u32);
    'cand: for low in 0..pk {
        // candidate = u^k + (digits of low)
        let mut cand = vec![0u16; k as usize + 1];
        let mut v = low;
        for slot in cand.iter_mut().take(k as usize) {
            *slot = (v % p as u32) as u16;
            v /= p as u32;
        }
        cand[k as usize] = 1;
        // trial division by every monic polynomial of degree 1..=k/2
        for d in 1..=(k / 2).max(1) {
            let pd = (p as u32).pow(d as u32);
            for dl in 0..pd {
                let mut div = vec![0u16; d as usize + 1];
                let mut w = dl;
                for slot in div.iter_mut().take(d as usize) {
                    *slot = (w % p as u32) as u16;
                    w /= p as u32;
                }
                div[d as usize] = 1;
                if poly_divides(p, &div, &cand) {
                    continue 'cand;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn poly_divides(p: u16, div: &[u16], num: &[u16]) -> bool {
    let mut rem: Vec<u32> = num.iter().map(|&x| x as u32).collect();
    let dd = div.len() - 1;
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for (j, &mj) in div.iter().enumerate().take(dd) {
            let idx = i - dd + j;
            let t = (c * (p as u32 - mj as u32)) % p as u32;
            rem[idx] = (rem[idx] + t) % p as u32;
        }
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f8_is_the_standard_model() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        // u^3 = u + 1 under u^3+u+1: packed u = 2, u+1 = 3
        let u = 2u16;
        assert_eq!(f8.mul(f8.mul(u, u), u), 3);
        // nonzero elements form a cyclic group of order 7: u is a generator
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u16;
        for _ in 0..7 {
            x = f8.mul(x, u);
            seen.insert(x);
        }
        assert_eq!(seen.len(), 7);
        assert_eq!(x, 1);
    }

    #[test]
    fn f9_squares() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        // u^2 = -1 under u^2+1: packed u = 3, -1 = 2
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.q(), 9);
    }

    #[test]
    fn frobenius_fixes_everything() {
        for (p, k) in [(2u32, 3u32), (3, 2), (7, 1), (2, 4), (5, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, f.q() as u64), a, "x^q != x in F_{}^{}", p, k);
            }
        }
    }

    #[test]
    fn inverses_and_field_axioms() {
        let f = FieldSpec::new(2, 3).unwrap();
        for a in 1..f.q() as u16 {
            let i = f.inv(a).unwrap();
            assert_eq!(f.mul(a, i), 1);
        }
        assert_eq!(f.inv(0), None);
        // spot-check distributivity exhaustively (64 triples per pair set)
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn literal_roundtrip() {
        let f = FieldSpec::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.parse_elem(&f.show_elem(a)).unwrap(), a);
        }
        assert!(f.parse_elem("3:2:9").is_err());
        assert!(f.parse_elem("2:2:1").is_err());
        assert!(f.parse_elem("x").is_err());
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(FieldSpec::new(6, 1), Err(FieldError::NotPrime(6)));
        assert!(FieldSpec::new(257, 2).is_err());
    }
}
