//! Derived quantities over a validated character table: symmetric power
//! characters, decomposition into irreducibles, Frobenius-Schur
//! indicators, Molien dimensions, minimal faithful dimensions, and the
//! rational realization bound. Class functions are plain value vectors
//! indexed by the table's class order.

use super::table::{CharTable, TableError};
use crate::cyclo::{rat, Cyclo};
use num::{BigInt, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Complex,
    Real,
}

impl CharTable {
    pub fn row(&self, r: usize) -> &[Cyclo] {
        &self.rows[r]
    }

    /// Index of the all-ones row.
    pub fn trivial_row(&self) -> usize {
        self.rows
            .iter()
            .position(|row| row.iter().all(|v| v == &Cyclo::one()))
            .expect("validated tables carry the trivial character")
    }

    /// Rows of a given degree.
    pub fn rows_of_degree(&self, d: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.degree(r) == d).collect()
    }

    /// Character of the d-th symmetric power, by the Newton recursion
    /// s_d(g) = (1/d) sum_{t=1..d} f(g^t) s_{d-t}(g).
    pub fn sym_power(&self, f: &[Cyclo], d: usize) -> Vec<Cyclo> {
        let k = self.num_classes();
        let mut layers: Vec<Vec<Cyclo>> = vec![vec![Cyclo::one(); k]];
        for dd in 1..=d {
            let mut cur = Vec::with_capacity(k);
            for i in 0..k {
                let mut acc = Cyclo::zero();
                for t in 1..=dd {
                    let fi = &f[self.class_power(i, t as u64)];
                    acc = &acc + &(fi * &layers[dd - t][i]);
                }
                cur.push(acc.scale_rat(&rat(1, dd as i64)));
            }
            layers.push(cur);
        }
        layers.pop().unwrap()
    }

    /// Character of the alternating square, (f(g)^2 - f(g^2)) / 2.
    pub fn alt_square(&self, f: &[Cyclo]) -> Vec<Cyclo> {
        (0..self.num_classes())
            .map(|i| {
                let sq = &f[i] * &f[i];
                let d = &sq - &f[self.class_power(i, 2)];
                d.scale_rat(&rat(1, 2))
            })
            .collect()
    }

    /// Multiplicities of the irreducibles in a class function. Rejects
    /// any input whose multiplicities are not nonnegative integers;
    /// that always signals an upstream computation error, never data.
    pub fn decompose(&self, f: &[Cyclo]) -> Result<Vec<(usize, usize)>, TableError> {
        let mut out = Vec::new();
        for r in 0..self.rows.len() {
            let m = self.inner(f, &self.rows[r]);
            let m = match m.as_rat() {
                Some(x) if x.is_integer() && !x.numer().is_negative() => x.to_integer(),
                _ => {
                    return Err(TableError::Violation(format!(
                        "multiplicity of row {} is {}, not a nonnegative integer",
                        r, m
                    )))
                }
            };
            if !m.is_zero() {
                out.push((r, m.try_into().expect("multiplicity fits usize")));
            }
        }
        Ok(out)
    }

    /// Frobenius-Schur indicator of a row: +1 real, -1 quaternionic,
    /// 0 for a complex (non-self-conjugate) character.
    pub fn fs_indicator(&self, r: usize) -> i64 {
        let mut acc = Cyclo::zero();
        for i in 0..self.num_classes() {
            let sq = self.class_power(i, 2);
            acc = &acc + &self.rows[r][sq].scale_int(self.sizes[i] as i64);
        }
        let v = acc.scale_rat(&rat(1, self.order as i64));
        let v = v.as_rat().expect("indicator is rational");
        assert!(v.is_integer());
        let v: i64 = v.to_integer().try_into().expect("indicator is small");
        assert!((-1..=1).contains(&v), "indicator out of range");
        v
    }

    /// Dimension of the degree-d invariants of a representation with
    /// character f, as the multiplicity of the trivial character in
    /// the d-th symmetric power.
    pub fn molien_dim(&self, f: &[Cyclo], d: usize) -> Result<usize, TableError> {
        let s = self.sym_power(f, d);
        let triv = vec![Cyclo::one(); self.num_classes()];
        let m = self.inner(&s, &triv);
        match m.as_rat() {
            Some(x) if x.is_integer() && !x.numer().is_negative() => {
                Ok(x.to_integer().try_into().expect("dimension fits usize"))
            }
            _ => Err(TableError::Violation(format!(
                "invariant dimension at degree {} is {}, not a nonnegative integer",
                d, m
            ))),
        }
    }

    /// Classes on which a row takes its degree value, as a bitmask;
    /// these are exactly the classes in the kernel of the representation.
    fn kernel_mask(&self, r: usize) -> u64 {
        let id0 = self.identity_class();
        let deg = &self.rows[r][id0];
        let mut mask = 0u64;
        for i in 0..self.num_classes() {
            if &self.rows[r][i] == deg {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Minimal dimension of a faithful representation over the given
    /// field, allowing direct sums of irreducibles. Over the reals a
    /// row with indicator 0 or -1 costs twice its degree.
    pub fn min_faithful_dim(&self, field: FieldKind) -> usize {
        let k = self.num_classes();
        assert!(k <= 64, "kernel masks are stored in u64");
        let id0 = self.identity_class();
        let full: u64 = if k == 64 { u64::MAX } else { (1 << k) - 1 };
        let target: u64 = 1 << id0;
        let mut arms: Vec<(u64, usize)> = Vec::new();
        for r in 0..self.rows.len() {
            let mask = self.kernel_mask(r);
            if mask == full {
                continue; // the trivial row never shrinks a kernel
            }
            let d = self.degree(r);
            let cost = match field {
                FieldKind::Complex => d,
                FieldKind::Real => {
                    if self.fs_indicator(r) == 1 {
                        d
                    } else {
                        2 * d
                    }
                }
            };
            arms.push((mask, cost));
        }
        let mut dist: HashMap<u64, usize> = HashMap::new();
        let mut heap = BinaryHeap::new();
        dist.insert(full, 0);
        heap.push(Reverse((0usize, full)));
        while let Some(Reverse((cost, mask))) = heap.pop() {
            if mask == target {
                return cost;
            }
            if dist.get(&mask).is_some_and(|&c| c < cost) {
                continue;
            }
            for &(am, ac) in &arms {
                let nm = mask & am;
                let nc = cost + ac;
                if dist.get(&nm).is_none_or(|&c| c > nc) {
                    dist.insert(nm, nc);
                    heap.push(Reverse((nc, nm)));
                }
            }
        }
        unreachable!("the regular representation is faithful")
    }

    /// Degree of the character field Q(chi) over Q, as the size of the
    /// Galois orbit of the value vector.
    pub fn char_field_degree(&self, r: usize) -> usize {
        let row = &self.rows[r];
        let mut n = 1u64;
        for v in row {
            if !v.is_rational() {
                n = num::integer::lcm(n, v.conductor() as u64);
            }
        }
        if n == 1 {
            return 1;
        }
        let mut seen: Vec<Vec<Cyclo>> = Vec::new();
        for t in 1..n {
            if num::integer::gcd(t, n) != 1 {
                continue;
            }
            let img: Vec<Cyclo> = row
                .iter()
                .map(|v| {
                    if v.is_rational() {
                        v.clone()
                    } else {
                        v.galois(t as i64).expect("coprime exponent")
                    }
                })
                .collect();
            if !seen.iter().any(|s| s == &img) {
                seen.push(img);
            }
        }
        seen.len()
    }

    /// Dimension of the rational representation affording multiples of
    /// this character: degree times the character field degree. This
    /// assumes the Schur index over Q is 1, which holds for every group
    /// treated here; callers surface that assumption in their reports.
    pub fn rational_realization_dim(&self, r: usize) -> usize {
        self.degree(r) * self.char_field_degree(r)
    }

    /// Minimum of the rational realization dimensions over the
    /// nontrivial rows.
    pub fn min_rational_dim(&self) -> usize {
        let triv = self.trivial_row();
        (0..self.rows.len())
            .filter(|&r| r != triv)
            .map(|r| self.rational_realization_dim(r))
            .min()
            .expect("a nontrivial row exists")
    }
}

/// Pointwise product of two class functions (tensor product character).
pub fn tensor(f: &[Cyclo], g: &[Cyclo]) -> Vec<Cyclo> {
    f.iter().zip(g).map(|(a, b)| a * b).collect()
}

/// Pointwise sum (direct sum character).
pub fn direct_sum(f: &[Cyclo], g: &[Cyclo]) -> Vec<Cyclo> {
    f.iter().zip(g).map(|(a, b)| a + b).collect()
}

/// Pointwise complex conjugate (dual character).
pub fn dual(f: &[Cyclo]) -> Vec<Cyclo> {
    f.iter().map(|v| v.conj()).collect()
}

/// Value of a class function at the identity class, as an integer.
pub fn degree_at(f: &[Cyclo], id0: usize) -> BigInt {
    f[id0].as_rat().expect("degree rational").to_integer()
}
