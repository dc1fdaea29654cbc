//! Sparse multivariate polynomials over an exact scalar ring.
//!
//! Terms live in a BTreeMap keyed by exponent vectors under graded
//! lexicographic order (total degree first, then lex with the earlier
//! variable dominating), so iteration and printing are deterministic and the
//! leading term is the map's last entry. No zero coefficient is ever stored.

use crate::cyclo::{Cyclo, Int, Rat};
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Scalar contract: an exact commutative ring with decidable zero and
/// optional inversion (fields return Some for every nonzero element).
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn show(&self) -> String;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(<Rat as One>::one() / self)
        }
    }
    fn show(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Scalar for Cyclo {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        Cyclo::inv(self).ok()
    }
    fn show(&self) -> String {
        self.to_string()
    }
}

/// Exponent vector with graded-lex ordering.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Expo(pub Vec<u16>);

impl Expo {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, o: &Expo) -> Expo {
        Expo(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of the given total degree, descending graded-lex.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Expo> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(cur: &mut Vec<u16>, i: usize, left: u32, out: &mut Vec<Expo>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Expo(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(cur, i + 1, left - e, out);
        }
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Expo(vec![]));
        }
        return out;
    }
    rec(&mut cur, 0, degree, &mut out);
    out
}

#[derive(Clone, PartialEq)]
pub struct MPoly<S: Scalar> {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Expo, S>,
}

impl<S: Scalar> MPoly<S> {
    pub fn zero(vars: Arc<Vec<String>>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<Vec<String>>, c: S) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Expo(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn var(vars: Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0u16; vars.len()];
        e[i] = 1;
        Self::term(vars, Expo(e), S::one())
    }

    pub fn term(vars: Arc<Vec<String>>, e: Expo, c: S) -> Self {
        assert_eq!(e.0.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(vars: Arc<Vec<String>>, it: impl IntoIterator<Item = (Expo, S)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Expo) -> Option<&S> {
        self.terms.get(e)
    }

    /// Leading term under graded-lex.
    pub fn leading(&self) -> Option<(&Expo, &S)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn add_term(&mut self, e: Expo, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars, "mixed variable sets");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars, "mixed variable sets");
        let mut out = Self::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.mul(e2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), S::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MPoly<T> {
        let mut out = MPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let ei = e.0[i];
            if ei == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.0[i] -= 1;
            let mut k = S::zero();
            for _ in 0..ei {
                k = k.add(&S::one());
            }
            out.add_term(e2, c.mul(&k));
        }
        out
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &ei) in e.0.iter().enumerate() {
                for _ in 0..ei {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute x_i -> sum_j rows[i][j] * x_j (the linear map with matrix
    /// `rows` applied to the variable column). Powers of each image are
    /// cached, so many-term inputs stay tractable.
    pub fn subst_linear(&self, rows: &[Vec<S>]) -> Self {
        let n = self.vars.len();
        assert_eq!(rows.len(), n, "matrix dimension mismatch");
        for r in rows {
            assert_eq!(r.len(), n, "matrix dimension mismatch");
        }
        let images: Vec<MPoly<S>> = rows
            .iter()
            .map(|r| {
                let mut p = Self::zero(self.vars.clone());
                for (j, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        let mut e = vec![0u16; n];
                        e[j] = 1;
                        p.add_term(Expo(e), c.clone());
                    }
                }
                p
            })
            .collect();
        let max_e: Vec<u16> = (0..n)
            .map(|i| self.terms.keys().map(|e| e.0[i]).max().unwrap_or(0))
            .collect();
        // powers[i][e] = images[i]^e, built once
        let powers: Vec<Vec<MPoly<S>>> = images
            .iter()
            .zip(&max_e)
            .map(|(img, &me)| {
                let mut v = vec![Self::constant(self.vars.clone(), S::one())];
                for e in 1..=me {
                    let next = v[(e - 1) as usize].mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut t = Self::constant(self.vars.clone(), c.clone());
            for (i, &ei) in e.0.iter().enumerate() {
                if ei > 0 {
                    t = t.mul(&powers[i][ei as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Coefficient vector on the monomial list `basis` (zeros included);
    /// panics if a term falls outside the basis.
    pub fn coeff_vector(&self, basis: &[Expo]) -> Vec<S> {
        let pos: std::collections::HashMap<&Expo, usize> =
            basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut v = vec![S::zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = *pos.get(e).expect("term outside basis");
            v[i] = c.clone();
        }
        v
    }
}

/// Exact determinant of a square matrix of polynomials by cofactor expansion
/// along the first column. Sizes in this crate stay at or below 4.
pub fn matpoly_det<S: Scalar>(m: &[Vec<MPoly<S>>]) -> MPoly<S> {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    assert!(n > 0);
    let vars = m[0][0].vars().clone();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MPoly::zero(vars);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly<S>>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let cof = m[i][0].mul(&matpoly_det(&minor));
        acc = if i % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

impl MPoly<Rat> {
    /// Primitive integer form: coefficients cleared to integers with content
    /// 1 and a positive leading coefficient in graded-lex order. Returns the
    /// zero polynomial unchanged.
    pub fn primitive_integer(&self) -> MPoly<Rat> {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = Int::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = Int::zero();
        for c in self.terms.values() {
            let cleared = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&cleared);
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        if self.leading().unwrap().1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

impl<S: Scalar> fmt::Display for MPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let cs = c.show();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &ei)| ei > 0)
                .map(|(i, &ei)| {
                    if ei == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], ei)
                    }
                })
                .collect();
            let needs_coeff = mono.is_empty() || mag != "1";
            let wrapped = if mag.contains(['+', '-']) && !mono.is_empty() {
                format!("({})", mag)
            } else {
                mag
            };
            if needs_coeff {
                write!(f, "{}", wrapped)?;
                if !mono.is_empty() {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", mono.join("*"))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for MPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Shared variable list constructor.
pub fn varset(names: &[&str]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat_int;

    fn xyz() -> Arc<Vec<String>> {
        varset(&["x", "y", "z"])
    }

    fn p(vars: &Arc<Vec<String>>, terms: &[(&[u16], i64)]) -> MPoly<Rat> {
        MPoly::from_terms(
            vars.clone(),
            terms.iter().map(|(e, c)| (Expo(e.to_vec()), rat_int(*c))),
        )
    }

    #[test]
    fn graded_lex_leading_term() {
        let v = xyz();
        // x*y^3 vs x^2*y: degree 4 vs 3, then x^3 vs x*y^3: lex
        let f = p(&v, &[(&[1, 3, 0], 1), (&[2, 1, 0], 5), (&[3, 0, 0], 2)]);
        assert_eq!(f.leading().unwrap().0, &Expo(vec![1, 3, 0]));
        // same degree: lex tie-break, earlier variable dominates
        let g = p(&v, &[(&[3, 0, 0], 1), (&[1, 2, 0], 1)]);
        assert_eq!(g.leading().unwrap().0, &Expo(vec![3, 0, 0]));
    }

    #[test]
    fn diagonal_determinant() {
        let v = xyz();
        let six = |i: usize| {
            let mut e = vec![0u16; 3];
            e[i] = 1;
            MPoly::term(v.clone(), Expo(e), rat_int(6))
        };
        let zero = MPoly::zero(v.clone());
        let m = vec![
            vec![six(0), zero.clone(), zero.clone()],
            vec![zero.clone(), six(1), zero.clone()],
            vec![zero.clone(), zero.clone(), six(2)],
        ];
        let d = matpoly_det(&m);
        assert_eq!(d, p(&v, &[(&[1, 1, 1], 216)]));
        assert_eq!(d.to_string(), "216*x*y*z");
    }

    #[test]
    fn determinant_alternating() {
        let v = xyz();
        let f = p(&v, &[(&[1, 0, 0], 1), (&[0, 2, 0], 3)]);
        let g = p(&v, &[(&[0, 1, 0], 2), (&[0, 0, 1], -1)]);
        let m1 = vec![vec![f.clone(), g.clone()], vec![g.clone(), f.clone()]];
        let m2 = vec![vec![g.clone(), f.clone()], vec![f.clone(), g.clone()]];
        assert_eq!(matpoly_det(&m1), matpoly_det(&m2).neg());
        let rep = vec![vec![f.clone(), f.clone()], vec![g.clone(), g.clone()]];
        assert!(matpoly_det(&rep).is_zero());
    }

    #[test]
    fn mul_agrees_with_eval() {
        let v = xyz();
        let f = p(&v, &[(&[2, 0, 0], 3), (&[0, 1, 1], -2), (&[0, 0, 0], 7)]);
        let g = p(&v, &[(&[1, 1, 0], 1), (&[0, 0, 2], 5)]);
        let pt = [rat_int(3), rat_int(-1), rat_int(4)];
        assert_eq!(f.mul(&g).eval(&pt), f.eval(&pt) * g.eval(&pt));
    }

    #[test]
    fn partial_derivative() {
        let v = xyz();
        let f = p(&v, &[(&[1, 3, 0], 1)]);
        assert_eq!(f.partial(1), p(&v, &[(&[1, 2, 0], 3)]));
        assert!(f.partial(2).is_zero());
    }

    #[test]
    fn substitution_is_a_right_action() {
        // act(M, f) = f(Mx): act(M1, act(M2, f)) = act(M2*M1, f)
        let v = xyz();
        let f = p(&v, &[(&[1, 3, 0], 1), (&[0, 1, 2], -4), (&[2, 0, 1], 2)]);
        let m1: Vec<Vec<Rat>> = vec![
            vec![rat_int(1), rat_int(2), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(-1)],
            vec![rat_int(3), rat_int(0), rat_int(1)],
        ];
        let m2: Vec<Vec<Rat>> = vec![
            vec![rat_int(0), rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(0), rat_int(2)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ];
        let lhs = f.subst_linear(&m2).subst_linear(&m1);
        // product m2*m1
        let prod: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| (0..3).map(|k| &m2[i][k] * &m1[k][j]).sum())
                    .collect()
            })
            .collect();
        let rhs = f.subst_linear(&prod);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn primitive_integer_form() {
        let v = xyz();
        let f = MPoly::from_terms(
            v.clone(),
            vec![
                (Expo(vec![2, 0, 0]), crate::cyclo::rat(-3, 4)),
                (Expo(vec![0, 1, 0]), crate::cyclo::rat(9, 2)),
            ],
        );
        let g = f.primitive_integer();
        // leading term is x^2 (degree 2 beats degree 1): coefficient must be +1
        assert_eq!(g.coeff(&Expo(vec![2, 0, 0])), Some(&rat_int(1)));
        assert_eq!(g.coeff(&Expo(vec![0, 1, 0])), Some(&rat_int(-6)));
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials(3, 4).len(), 15);
        assert_eq!(monomials(4, 2).len(), 10);
        let ms = monomials(3, 2);
        // descending graded-lex starts at x^2 and ends at z^2
        assert_eq!(ms[0], Expo(vec![2, 0, 0]));
        assert_eq!(ms[ms.len() - 1], Expo(vec![0, 0, 2]));
    }
}
