//! Character tables with exact cyclotomic entries, the line-oriented ctab
//! text format, and the invariant gate every table must pass before use.
//! The gate is the trust boundary for external data: a table that fails any
//! orthogonality, integrality, or power-map relation is rejected with the
//! violated relation named.

use crate::cyclo::{cyclo_canonical, Cyclo, Rat};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Dixon,
    File,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("ctab parse error at line {0}: {1}")]
    Parse(usize, String),
    #[error("table invariant violated: {0}")]
    Violation(String),
    #[error("no Dixon prime p = 1 mod {exponent} with p > {lower} below {cap}")]
    NoPrime { exponent: u32, lower: u64, cap: u64 },
    #[error("Dixon lift inconsistency: {0}")]
    Lift(String),
}

#[derive(Debug)]
pub struct CharTable {
    pub group: String,
    pub order: usize,
    pub sizes: Vec<usize>,
    pub orders: Vec<u32>,
    /// Power maps class -> class of the p-th power, for every prime p
    /// below the largest element order (enough to resolve any g^t).
    pub powmaps: BTreeMap<u32, Vec<usize>>,
    /// Rows are irreducible characters, columns follow the class order.
    pub rows: Vec<Vec<Cyclo>>,
    pub provenance: Provenance,
}

impl CharTable {
    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    /// Index of the class of the identity.
    pub fn identity_class(&self) -> usize {
        self.orders.iter().position(|&o| o == 1).expect("identity class present")
    }

    pub fn degree(&self, row: usize) -> usize {
        let v = &self.rows[row][self.identity_class()];
        let r = v.as_rat().expect("degree is rational");
        assert!(r.is_integer() && r.numer().is_positive());
        r.to_integer().try_into().expect("degree fits usize")
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.rows.len()).map(|r| self.degree(r)).collect()
    }

    /// Class of g^t for g in class i, through the prime power maps.
    pub fn class_power(&self, i: usize, t: u64) -> usize {
        let m = self.orders[i] as u64;
        let mut t = t % m;
        if t == 0 {
            return self.identity_class();
        }
        let mut cur = i;
        let mut p = 2u64;
        while t > 1 {
            while t % p == 0 {
                let map = self
                    .powmaps
                    .get(&(p as u32))
                    .unwrap_or_else(|| panic!("power map for prime {} missing", p));
                cur = map[cur];
                t /= p;
            }
            p += 1;
        }
        cur
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        let m = self.orders[i] as u64;
        self.class_power(i, m - 1)
    }

    /// Weighted inner product of two class functions over this table.
    pub fn inner(&self, f: &[Cyclo], g: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for i in 0..self.num_classes() {
            let t = &f[i] * &g[i].conj();
            acc = &acc + &t.scale_int(self.sizes[i] as i64);
        }
        acc.scale_rat(&Rat::new(BigInt::one(), BigInt::from(self.order)))
    }

    /// The full invariant gate. Every constructor calls this; external
    /// callers may re-run it at will (it is read-only).
    pub fn validate(&self) -> Result<(), TableError> {
        let k = self.num_classes();
        let fail = |msg: String| Err(TableError::Violation(msg));
        if self.orders.len() != k || self.rows.len() != k {
            return fail(format!(
                "shape: {} sizes, {} orders, {} rows",
                k,
                self.orders.len(),
                self.rows.len()
            ));
        }
        if self.rows.iter().any(|r| r.len() != k) {
            return fail("shape: ragged character rows".into());
        }
        if self.sizes.iter().sum::<usize>() != self.order {
            return fail(format!(
                "class equation: sizes sum {} != order {}",
                self.sizes.iter().sum::<usize>(),
                self.order
            ));
        }
        let ids: Vec<usize> =
            (0..k).filter(|&i| self.orders[i] == 1).collect();
        if ids.len() != 1 || self.sizes[ids[0]] != 1 {
            return fail("identity class: need exactly one class of order 1 and size 1".into());
        }
        let id0 = ids[0];
        // degrees: positive integers, dividing |G|, squares summing to |G|
        let mut sqsum = 0usize;
        for (r, row) in self.rows.iter().enumerate() {
            let d = match row[id0].as_rat() {
                Some(x) if x.is_integer() && x.numer().is_positive() => x.to_integer(),
                _ => return fail(format!("degree of row {} is not a positive integer", r)),
            };
            let d: usize = d.try_into().map_err(|_| {
                TableError::Violation(format!("degree of row {} out of range", r))
            })?;
            if self.order % d != 0 {
                return fail(format!("degree {} of row {} does not divide |G|", d, r));
            }
            sqsum += d * d;
        }
        if sqsum != self.order {
            return fail(format!("sum of squared degrees {} != |G| {}", sqsum, self.order));
        }
        // integrality of all values (algebraic integers have integer
        // coordinates in the power basis)
        for (r, row) in self.rows.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                if v.coeffs().iter().any(|c| !c.is_integer()) {
                    return fail(format!("value at row {} class {} is not integral", r, i));
                }
            }
        }
        // exactly one trivial row
        let trivial = self
            .rows
            .iter()
            .filter(|row| row.iter().all(|v| v == &Cyclo::one()))
            .count();
        if trivial != 1 {
            return fail(format!("expected exactly one trivial character, found {}", trivial));
        }
        // power map coverage and order consistency
        let max_order = *self.orders.iter().max().unwrap();
        let mut p = 2u32;
        while p < max_order {
            if is_prime(p) {
                let map = match self.powmaps.get(&p) {
                    Some(m) if m.len() == k => m,
                    Some(_) => return fail(format!("power map for {} has wrong length", p)),
                    None => return fail(format!("power map for prime {} missing", p)),
                };
                for i in 0..k {
                    if map[i] >= k {
                        return fail(format!("power map for {} escapes the class list", p));
                    }
                    let m = self.orders[i];
                    let want = m / num::integer::gcd(m, p);
                    if self.orders[map[i]] != want {
                        return fail(format!(
                            "power map for {} sends an order-{} class to order {}",
                            p, m, self.orders[map[i]]
                        ));
                    }
                }
            }
            p += 1;
        }
        // row orthogonality
        for r in 0..k {
            for s in r..k {
                let ip = self.inner(&self.rows[r], &self.rows[s]);
                let want = if r == s { Cyclo::one() } else { Cyclo::zero() };
                if ip != want {
                    return fail(format!("row orthogonality fails for rows {} and {}", r, s));
                }
            }
        }
        // column orthogonality
        for i in 0..k {
            for j in i..k {
                let mut acc = Cyclo::zero();
                for row in &self.rows {
                    let t = &row[i] * &row[j].conj();
                    acc = &acc + &t;
                }
                let want = if i == j {
                    Cyclo::from_rat(Rat::new(
                        BigInt::from(self.order),
                        BigInt::from(self.sizes[i]),
                    ))
                } else {
                    Cyclo::zero()
                };
                if acc != want {
                    return fail(format!("column orthogonality fails for classes {} and {}", i, j));
                }
            }
        }
        // conjugate closure: the conjugate of each row is again a row
        for (r, row) in self.rows.iter().enumerate() {
            let conj: Vec<Cyclo> = row.iter().map(|v| v.conj()).collect();
            if !self.rows.iter().any(|s| s == &conj) {
                return fail(format!("conjugate of row {} is not in the table", r));
            }
        }
        // Frobenius-Schur indicators must make sense for every row
        for r in 0..k {
            let mut acc = Cyclo::zero();
            for i in 0..k {
                let sq = self.class_power(i, 2);
                acc = &acc + &self.rows[r][sq].scale_int(self.sizes[i] as i64);
            }
            let acc = acc.scale_rat(&Rat::new(BigInt::one(), BigInt::from(self.order)));
            match acc.as_rat() {
                Some(x)
                    if x.is_integer()
                        && (x.to_integer() == BigInt::from(-1)
                            || x.to_integer() == BigInt::zero()
                            || x.to_integer() == BigInt::one()) => {}
                _ => {
                    return fail(format!(
                        "Frobenius-Schur indicator of row {} is not in {{-1,0,1}}",
                        r
                    ))
                }
            }
        }
        Ok(())
    }

    /// Render in the ctab text format.
    pub fn to_ctab(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "group {} order {} classes {}",
            self.group,
            self.order,
            self.num_classes()
        );
        let join = |v: Vec<String>| v.join(" ");
        let _ = writeln!(s, "sizes: {}", join(self.sizes.iter().map(|x| x.to_string()).collect()));
        let _ =
            writeln!(s, "orders: {}", join(self.orders.iter().map(|x| x.to_string()).collect()));
        for (p, map) in &self.powmaps {
            let _ = writeln!(s, "pow {}: {}", p, join(map.iter().map(|x| x.to_string()).collect()));
        }
        for row in &self.rows {
            let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "chi: {}", vals.join(" | "));
        }
        s
    }

    /// Parse and validate a ctab file.
    pub fn from_ctab(text: &str) -> Result<CharTable, TableError> {
        let mut group = None;
        let mut order = None;
        let mut classes = None;
        let mut sizes: Option<Vec<usize>> = None;
        let mut orders: Option<Vec<u32>> = None;
        let mut powmaps = BTreeMap::new();
        let mut rows: Vec<Vec<Cyclo>> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lno = ln + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("group ") {
                // header: group <name> order <n> classes <k>
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 5 || toks[1] != "order" || toks[3] != "classes" {
                    return Err(TableError::Parse(lno, "malformed header".into()));
                }
                group = Some(toks[0].to_string());
                order = Some(
                    toks[2]
                        .parse::<usize>()
                        .map_err(|_| TableError::Parse(lno, "bad order".into()))?,
                );
                classes = Some(
                    toks[4]
                        .parse::<usize>()
                        .map_err(|_| TableError::Parse(lno, "bad class count".into()))?,
                );
            } else if let Some(rest) = line.strip_prefix("sizes:") {
                sizes = Some(parse_ints(lno, rest)?);
            } else if let Some(rest) = line.strip_prefix("orders:") {
                orders = Some(parse_ints(lno, rest)?);
            } else if let Some(rest) = line.strip_prefix("pow ") {
                let (p, map) = rest
                    .split_once(':')
                    .ok_or_else(|| TableError::Parse(lno, "malformed pow line".into()))?;
                let p: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| TableError::Parse(lno, "bad prime".into()))?;
                powmaps.insert(p, parse_ints(lno, map)?);
            } else if let Some(rest) = line.strip_prefix("chi:") {
                let mut row = Vec::new();
                for tok in rest.split('|') {
                    let v = cyclo_canonical(tok.trim())
                        .map_err(|e| TableError::Parse(lno, format!("value: {}", e)))?;
                    row.push(v);
                }
                rows.push(row);
            } else {
                return Err(TableError::Parse(lno, format!("unrecognized line '{}'", line)));
            }
        }
        let t = CharTable {
            group: group.ok_or(TableError::Parse(0, "missing header".into()))?,
            order: order.unwrap(),
            sizes: sizes.ok_or(TableError::Parse(0, "missing sizes".into()))?,
            orders: orders.ok_or(TableError::Parse(0, "missing orders".into()))?,
            powmaps,
            rows,
            provenance: Provenance::File,
        };
        if t.num_classes() != classes.unwrap() {
            return Err(TableError::Violation(format!(
                "header declares {} classes, file carries {}",
                classes.unwrap(),
                t.num_classes()
            )));
        }
        t.validate()?;
        Ok(t)
    }
}

fn parse_ints<T: std::str::FromStr>(lno: usize, s: &str) -> Result<Vec<T>, TableError> {
    s.split_whitespace()
        .map(|t| t.parse::<T>().map_err(|_| TableError::Parse(lno, format!("bad int '{}'", t))))
        .collect()
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
