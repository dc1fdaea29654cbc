//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Elements are stored in the power basis `zeta^0 .. zeta^{phi(n)-1}` with
//! coefficients fully reduced modulo the n-th cyclotomic polynomial. Mixed
//! conductors are handled by raising both operands to the lcm; results are
//! never lowered back to a minimal conductor, and equality raises both sides
//! before comparing coordinates. Everything here is immutable and exact.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational n/d, d != 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

// ---- dense integer polynomials, used only to build cyclotomic polynomials ----

fn zpoly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

// Exact division of integer polynomials, panics if not exact (never happens
// for the x^d - 1 factor tower below).
fn zpoly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem: Vec<Int> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one() || den[dd] == -Int::one());
    let lead_neg = den[dd] == -Int::one();
    let mut quo = vec![Int::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let mut c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        if lead_neg {
            c = -c;
        }
        quo[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let t = &c * dj;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quo
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Coefficients of the n-th cyclotomic polynomial Phi_n, constant term first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<Int>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Int>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1);
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![Int::zero(); n as usize + 1];
    num[0] = -Int::one();
    num[n as usize] = Int::one();
    let mut den = vec![Int::one()];
    for d in divisors(n) {
        if d < n {
            den = zpoly_mul(&den, &cyclotomic_poly(d));
        }
    }
    let quo = if n == 1 { num } else { zpoly_div_exact(&num, &den) };
    let arc = Arc::new(quo);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

// Canonical forms of zeta_n^j for 0 <= j < n, as coefficient vectors of
// length phi(n). Built lazily per conductor; read-heavy.
fn power_table(n: u32) -> Arc<Vec<Vec<Rat>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Vec<Rat>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let phi = euler_phi(n) as usize;
    let cp = cyclotomic_poly(n);
    let mut table: Vec<Vec<Rat>> = Vec::with_capacity(n as usize);
    let mut cur = vec![Rat::zero(); phi];
    cur[0] = Rat::one();
    for _ in 0..n {
        table.push(cur.clone());
        // multiply by zeta: shift up, reduce the overflow coefficient
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = Rat::zero();
        if !top.is_zero() {
            // zeta^phi = -(cp[0] + cp[1] zeta + ... + cp[phi-1] zeta^{phi-1})
            for i in 0..phi {
                let c = Rat::from_integer(cp[i].clone());
                cur[i] -= &top * c;
            }
        }
    }
    let arc = Arc::new(table);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("conductor {0} is not allowed here")]
    BadConductor(u32),
    #[error("galois exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of Q(zeta_n), canonically reduced modulo Phi_n.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Vec<Rat>, // length phi(n)
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { n: 1, c: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        Cyclo { n: 1, c: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclo { n: 1, c: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(rat_int(k))
    }

    /// zeta_n^k (k may be any integer; reduced mod n).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let j = k.rem_euclid(n as i64) as usize;
        let t = power_table(n);
        Cyclo { n, c: t[j].clone() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Raw power-basis coordinates at the stored conductor.
    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// True if the canonical form has no zeta component. Values of Q that
    /// happen to be stored at a higher conductor still answer true, because
    /// reduction mod Phi_n leaves them with a bare constant coordinate.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Coordinate-wise rational scaling (cheaper than a full product).
    pub fn scale_rat(&self, r: &Rat) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Cyclo {
        self.scale_rat(&rat_int(k))
    }

    /// Re-express at conductor m, where n | m. Never lowers.
    pub fn raised_to(&self, m: u32) -> Cyclo {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "can only raise conductors ({} -> {})", self.n, m);
        let step = (m / self.n) as usize;
        let t = power_table(m);
        let phi_m = euler_phi(m) as usize;
        let mut out = vec![Rat::zero(); phi_m];
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, tj) in t[i * step % m as usize].iter().enumerate() {
                if !tj.is_zero() {
                    out[j] += ci * tj;
                }
            }
        }
        Cyclo { n: m, c: out }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo, u32) {
        let m = a.n.lcm(&b.n);
        (a.raised_to(m), b.raised_to(m), m)
    }

    /// Ring homomorphism zeta_n -> zeta_n^k, gcd(k, n) = 1. k = -1 is complex
    /// conjugation.
    pub fn galois(&self, k: i64) -> Result<Cyclo, CycloError> {
        let n = self.n;
        let kk = k.rem_euclid(n as i64) as u32;
        if n > 1 && kk.gcd(&n) != 1 {
            return Err(CycloError::NotCoprime { k, n });
        }
        let t = power_table(n);
        let phi = euler_phi(n) as usize;
        let mut out = vec![Rat::zero(); phi];
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let target = (i as u64 * kk as u64 % n as u64) as usize;
            for (j, tj) in t[target].iter().enumerate() {
                if !tj.is_zero() {
                    out[j] += ci * tj;
                }
            }
        }
        Ok(Cyclo { n, c: out })
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1).expect("-1 is a unit mod every conductor")
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        let mut acc = Cyclo::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_n in Q[x]; Phi_n is irreducible, so any nonzero element is a unit.
    pub fn inv(&self) -> Result<Cyclo, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(Cyclo {
                n: self.n,
                c: {
                    let mut v = vec![Rat::zero(); self.c.len()];
                    v[0] = Rat::one() / r;
                    v
                },
            });
        }
        let phi: Vec<Rat> = cyclotomic_poly(self.n)
            .iter()
            .map(|z| Rat::from_integer(z.clone()))
            .collect();
        let f: Vec<Rat> = self.c.clone();
        // extended gcd: maintain r0 = Phi, r1 = f, and s-coefficients for f
        let (mut r0, mut r1) = (phi, trim(f));
        let (mut s0, mut s1) = (vec![], vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, rem) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant c with s0 * f = c mod Phi
        assert!(r0.len() == 1, "Phi_n must be coprime to any nonzero residue");
        let c = r0[0].clone();
        let phi_n = euler_phi(self.n) as usize;
        let mut out = vec![Rat::zero(); phi_n];
        for (i, s) in s0.iter().enumerate() {
            out[i] = s / &c;
        }
        Ok(Cyclo { n: self.n, c: out })
    }

    /// Deterministic comparison key: coordinates after raising to `m`
    /// (the caller supplies a conductor divisible by self.n).
    pub fn sort_key(&self, m: u32) -> Vec<Rat> {
        self.raised_to(m).c
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] = ai.clone();
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn qpoly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<Rat> = a.to_vec();
    if rem.len() <= db {
        return (vec![], trim(rem));
    }
    let mut quo = vec![Rat::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = &rem[i] / lead;
        quo[i - db] = q.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = &q * bj;
            rem[i - db + j] -= t;
        }
    }
    (trim(quo), trim(rem))
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b, _) = Cyclo::common(self, other);
        a.c == b.c
    }
}
impl Eq for Cyclo {}

impl std::ops::Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (mut a, b, _) = Cyclo::common(self, rhs);
        for (x, y) in a.c.iter_mut().zip(b.c.iter()) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let (mut a, b, _) = Cyclo::common(self, rhs);
        for (x, y) in a.c.iter_mut().zip(b.c.iter()) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl std::ops::Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        // fast paths: rational scalar on either side
        if self.is_rational() {
            let r = &self.c[0];
            if r.is_zero() {
                return Cyclo::zero();
            }
            return Cyclo { n: rhs.n, c: rhs.c.iter().map(|x| x * r).collect() };
        }
        if rhs.is_rational() {
            let r = &rhs.c[0];
            if r.is_zero() {
                return Cyclo::zero();
            }
            return Cyclo { n: self.n, c: self.c.iter().map(|x| x * r).collect() };
        }
        let (a, b, m) = Cyclo::common(self, rhs);
        let phi = euler_phi(m) as usize;
        let mut conv = vec![Rat::zero(); 2 * phi - 1];
        for (i, ai) in a.c.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.c.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        // reduce powers >= phi via the power table
        let t = power_table(m);
        let mut out: Vec<Rat> = conv[..phi].to_vec();
        for (i, ci) in conv.iter().enumerate().skip(phi) {
            if ci.is_zero() {
                continue;
            }
            for (j, tj) in t[i % m as usize].iter().enumerate() {
                if !tj.is_zero() {
                    out[j] += ci * tj;
                }
            }
        }
        Cyclo { n: m, c: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl std::ops::$tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.n, self)
    }
}

// ---- printing in the expression grammar ----

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    /// Deterministic rendering in the expression grammar, ascending powers.
    /// A leading minus sign is emitted for a negative first term; the parser
    /// accepts that extension.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_rat(&mag))?;
                }
                if i == 1 {
                    write!(f, "E({})", self.n)?;
                } else {
                    write!(f, "E({})^{}", self.n, i)?;
                }
            }
        }
        Ok(())
    }
}

// ---- parsing ----

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, CycloError> {
        Err(CycloError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), CycloError> {
        match self.bump() {
            Some(x) if x == c => Ok(()),
            _ => self.err(&format!("expected '{}'", c as char)),
        }
    }

    fn integer(&mut self) -> Result<Int, CycloError> {
        self.skip_ws();
        let mut neg = false;
        if self.s.get(self.pos) == Some(&b'-') {
            neg = true;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let mut v: Int = digits.parse().unwrap();
        if neg {
            v = -v;
        }
        Ok(v)
    }

    fn rational(&mut self) -> Result<Rat, CycloError> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let d = self.integer()?;
            if d <= Int::zero() {
                return self.err("denominator must be a positive integer");
            }
            Ok(Rat::new(n, d))
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    // atom := 'E(' int ')' ('^' int)?
    fn atom(&mut self) -> Result<Cyclo, CycloError> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let n = self.integer()?;
        self.expect(b')')?;
        if n <= Int::zero() {
            return Err(CycloError::BadConductor(0));
        }
        let n: u32 = n.to_string().parse().map_err(|_| CycloError::BadConductor(u32::MAX))?;
        let mut k: i64 = 1;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            k = e
                .to_string()
                .parse()
                .map_err(|_| CycloError::Parse { pos: self.pos, msg: "exponent too large".into() })?;
        }
        Ok(Cyclo::root_of_unity(n, k))
    }

    // term := rat '*' atom | rat | atom
    fn term(&mut self) -> Result<Cyclo, CycloError> {
        match self.peek() {
            Some(b'E') => self.atom(),
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let r = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.bump();
                    let a = self.atom()?;
                    Ok(&Cyclo::from_rat(r) * &a)
                } else {
                    Ok(Cyclo::from_rat(r))
                }
            }
            _ => self.err("expected a term"),
        }
    }

    fn expr(&mut self) -> Result<Cyclo, CycloError> {
        // leading '-' accepted as an extension (the printer uses it)
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                Some(_) => return self.err("trailing input"),
                None => return Ok(acc),
            }
        }
    }
}

/// Parse an expression in the grammar
/// `expr := term (('+'|'-') term)*; term := rat | rat '*' atom | atom;
/// atom := 'E(' int ')' ('^' int)?; rat := int | int '/' posint`
/// into canonical form. Printing and reparsing is the identity.
pub fn cyclo_canonical(expr: &str) -> Result<Cyclo, CycloError> {
    let mut p = Parser { s: expr.as_bytes(), pos: 0 };
    let out = p.expr()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cyclo {
        cyclo_canonical(s).unwrap()
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(c("E(4)^2"), Cyclo::from_int(-1));
        assert!(c("E(4)^2").is_rational());
    }

    #[test]
    fn quadratic_gauss_period_in_conductor_7() {
        // x = zeta7 + zeta7^2 + zeta7^4 satisfies x^2 + x + 2 = 0
        let x = c("E(7)+E(7)^2+E(7)^4");
        let lhs = &(&x * &x) + &(&x + &Cyclo::from_int(2));
        assert!(lhs.is_zero());
    }

    #[test]
    fn conductor_six_embedding() {
        // E(6) = 1 + E(3) after raising both to conductor 6
        let a = c("E(6)");
        let b = c("1+E(3)");
        assert_eq!(a, b);
    }

    #[test]
    fn phi_n_kills_zeta_n() {
        for n in [2u32, 3, 4, 5, 6, 7, 8, 9, 12, 15, 56, 84] {
            let z = Cyclo::root_of_unity(n, 1);
            let cp = cyclotomic_poly(n);
            let mut acc = Cyclo::zero();
            let mut p = Cyclo::one();
            for coef in cp.iter() {
                acc = &acc + &(&p * &Cyclo::from_rat(Rat::from_integer(coef.clone())));
                p = &p * &z;
            }
            assert!(acc.is_zero(), "Phi_{}(zeta_{}) != 0", n, n);
            assert_eq!(z.pow(n), Cyclo::one(), "zeta_{}^{} != 1", n, n);
        }
    }

    #[test]
    fn galois_is_a_ring_map_and_conj_is_involutive() {
        let x = c("1/2+3*E(7)^2-E(7)^3");
        let y = c("E(7)+2/5");
        let k = 3;
        let gx = x.galois(k).unwrap();
        let gy = y.galois(k).unwrap();
        assert_eq!((&x * &y).galois(k).unwrap(), &gx * &gy);
        assert_eq!((&x + &y).galois(k).unwrap(), &gx + &gy);
        assert_eq!(x.conj().conj(), x);
        assert_eq!(Cyclo::from_rat(rat(5, 3)).galois(2).unwrap(), Cyclo::from_rat(rat(5, 3)));
    }

    #[test]
    fn galois_conjugate_of_gauss_period() {
        // the two conjugates of (-1+sqrt(-7))/2 sum to -1 and multiply to 2
        let x = c("E(7)+E(7)^2+E(7)^4");
        let y = x.galois(-1).unwrap();
        assert_eq!(&x + &y, Cyclo::from_int(-1));
        assert_eq!(&x * &y, Cyclo::from_int(2));
    }

    #[test]
    fn galois_rejects_non_units() {
        let x = c("E(6)");
        assert!(matches!(x.galois(2), Err(CycloError::NotCoprime { .. })));
    }

    #[test]
    fn inverse_of_nonzero() {
        for s in ["E(7)", "1+E(5)", "E(8)-E(8)^3", "2/3", "E(12)^5-4"] {
            let x = c(s);
            let i = x.inv().unwrap();
            assert_eq!(&x * &i, Cyclo::one(), "inverse failed for {}", s);
        }
        assert_eq!(Cyclo::zero().inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn print_parse_roundtrip() {
        for s in [
            "0",
            "-1",
            "5/3",
            "E(7)",
            "-E(7)+2*E(7)^3",
            "1/2-1/2*E(4)",
            "E(9)^2+E(9)^4-3",
        ] {
            let x = c(s);
            let printed = x.to_string();
            let reparsed = c(&printed);
            assert_eq!(x, reparsed, "roundtrip failed: {} -> {}", s, printed);
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(cyclo_canonical("E(0)"), Err(CycloError::BadConductor(_))));
        assert!(cyclo_canonical("E(").is_err());
        assert!(cyclo_canonical("1+").is_err());
        assert!(cyclo_canonical("1/0").is_err());
        assert!(cyclo_canonical("2 2").is_err());
    }

    #[test]
    fn mixed_conductor_arithmetic_raises_to_lcm() {
        let x = c("E(4)");
        let y = c("E(6)");
        let p = &x * &y;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, c("E(12)^5"));
    }

    #[test]
    fn sqrt_minus_seven() {
        // 2*(zeta7+zeta7^2+zeta7^4) + 1 squares to -7
        let s = &(&c("E(7)+E(7)^2+E(7)^4") * &Cyclo::from_int(2)) + &Cyclo::one();
        assert_eq!(&s * &s, Cyclo::from_int(-7));
    }
}
