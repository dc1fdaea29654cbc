//! Group elements: permutations on points 0..m-1, matrices over a small
//! finite field, or matrices over a cyclotomic field at a fixed conductor.
//! An element is stored without its domain; the owning model carries one
//! `Domain` that fixes the interpretation, so equality and hashing stay
//! structural and cheap.

use crate::cyclo::Cyclo;
use crate::ffield::FieldSpec;
use std::hash::{Hash, Hasher};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElemError {
    #[error("permutation image list is not a bijection")]
    NotBijective,
    #[error("matrix is singular")]
    Singular,
    #[error("element does not fit the declared domain")]
    DomainMismatch,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Domain {
    Perm { degree: usize },
    MatFf { field: FieldSpec, dim: usize },
    MatCyc { conductor: u32, dim: usize },
}

impl Domain {
    pub fn describe(&self) -> String {
        match self {
            Domain::Perm { degree } => format!("perm {}", degree),
            Domain::MatFf { field, dim } => format!("mat {} ff {}:{}", dim, field.p, field.k),
            Domain::MatCyc { conductor, dim } => format!("mat {} cyclo {}", dim, conductor),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ElemData {
    Perm(Vec<u16>),
    MatFf(Vec<u16>),
    MatCyc(Vec<Cyclo>),
}

impl PartialEq for ElemData {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ElemData::Perm(a), ElemData::Perm(b)) => a == b,
            (ElemData::MatFf(a), ElemData::MatFf(b)) => a == b,
            (ElemData::MatCyc(a), ElemData::MatCyc(b)) => {
                // entries of one model share a conductor, so coordinate
                // comparison is exact equality
                a.len() == b.len()
                    && a.iter().zip(b).all(|(x, y)| {
                        x.conductor() == y.conductor() && x.coeffs() == y.coeffs()
                    })
            }
            _ => false,
        }
    }
}
impl Eq for ElemData {}

impl Hash for ElemData {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            ElemData::Perm(v) => {
                state.write_u8(0);
                v.hash(state);
            }
            ElemData::MatFf(v) => {
                state.write_u8(1);
                v.hash(state);
            }
            ElemData::MatCyc(v) => {
                state.write_u8(2);
                for c in v {
                    state.write_u32(c.conductor());
                    for r in c.coeffs() {
                        r.hash(state);
                    }
                }
            }
        }
    }
}

impl Domain {
    pub fn identity(&self) -> ElemData {
        match self {
            Domain::Perm { degree } => ElemData::Perm((0..*degree as u16).collect()),
            Domain::MatFf { field, dim } => {
                let mut m = vec![0u16; dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = field.one();
                }
                ElemData::MatFf(m)
            }
            Domain::MatCyc { conductor, dim } => {
                let mut m = vec![Cyclo::zero().raised_to(*conductor); dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = Cyclo::one().raised_to(*conductor);
                }
                ElemData::MatCyc(m)
            }
        }
    }

    pub fn validate(&self, e: &ElemData) -> Result<(), ElemError> {
        match (self, e) {
            (Domain::Perm { degree }, ElemData::Perm(v)) => {
                if v.len() != *degree {
                    return Err(ElemError::DomainMismatch);
                }
                let mut seen = vec![false; *degree];
                for &i in v {
                    if (i as usize) >= *degree || seen[i as usize] {
                        return Err(ElemError::NotBijective);
                    }
                    seen[i as usize] = true;
                }
                Ok(())
            }
            (Domain::MatFf { dim, .. }, ElemData::MatFf(v)) => {
                if v.len() != dim * dim {
                    return Err(ElemError::DomainMismatch);
                }
                self.inverse(e).map(|_| ())
            }
            (Domain::MatCyc { conductor, dim }, ElemData::MatCyc(v)) => {
                if v.len() != dim * dim || v.iter().any(|c| c.conductor() != *conductor) {
                    return Err(ElemError::DomainMismatch);
                }
                self.inverse(e).map(|_| ())
            }
            _ => Err(ElemError::DomainMismatch),
        }
    }

    /// Product a*b. For permutations, (a*b)(i) = a(b(i)); for matrices, the
    /// ordinary matrix product.
    pub fn compose(&self, a: &ElemData, b: &ElemData) -> ElemData {
        match (self, a, b) {
            (Domain::Perm { .. }, ElemData::Perm(pa), ElemData::Perm(pb)) => {
                ElemData::Perm(pb.iter().map(|&i| pa[i as usize]).collect())
            }
            (Domain::MatFf { field, dim }, ElemData::MatFf(ma), ElemData::MatFf(mb)) => {
                let d = *dim;
                let mut out = vec![0u16; d * d];
                for i in 0..d {
                    for k in 0..d {
                        let aik = ma[i * d + k];
                        if aik == 0 {
                            continue;
                        }
                        for j in 0..d {
                            let t = field.mul(aik, mb[k * d + j]);
                            out[i * d + j] = field.add(out[i * d + j], t);
                        }
                    }
                }
                ElemData::MatFf(out)
            }
            (Domain::MatCyc { conductor, dim }, ElemData::MatCyc(ma), ElemData::MatCyc(mb)) => {
                let d = *dim;
                // accumulate at the domain conductor so structural equality
                // of the product is meaningful
                let mut out = vec![Cyclo::zero().raised_to(*conductor); d * d];
                for i in 0..d {
                    for k in 0..d {
                        if ma[i * d + k].is_zero() {
                            continue;
                        }
                        for j in 0..d {
                            if mb[k * d + j].is_zero() {
                                continue;
                            }
                            let t = &ma[i * d + k] * &mb[k * d + j];
                            out[i * d + j] = &out[i * d + j] + &t;
                        }
                    }
                }
                ElemData::MatCyc(out)
            }
            _ => panic!("element does not match domain"),
        }
    }

    pub fn inverse(&self, a: &ElemData) -> Result<ElemData, ElemError> {
        match (self, a) {
            (Domain::Perm { .. }, ElemData::Perm(p)) => {
                let mut inv = vec![0u16; p.len()];
                for (i, &pi) in p.iter().enumerate() {
                    inv[pi as usize] = i as u16;
                }
                Ok(ElemData::Perm(inv))
            }
            (Domain::MatFf { field, dim }, ElemData::MatFf(m)) => {
                let d = *dim;
                // Gauss-Jordan over the field on [m | I]
                let mut a: Vec<u16> = m.clone();
                let mut b = match self.identity() {
                    ElemData::MatFf(v) => v,
                    _ => unreachable!(),
                };
                for col in 0..d {
                    let piv = (col..d).find(|&r| a[r * d + col] != 0).ok_or(ElemError::Singular)?;
                    if piv != col {
                        for j in 0..d {
                            a.swap(piv * d + j, col * d + j);
                            b.swap(piv * d + j, col * d + j);
                        }
                    }
                    let s = field.inv(a[col * d + col]).unwrap();
                    for j in 0..d {
                        a[col * d + j] = field.mul(a[col * d + j], s);
                        b[col * d + j] = field.mul(b[col * d + j], s);
                    }
                    for r in 0..d {
                        if r == col || a[r * d + col] == 0 {
                            continue;
                        }
                        let f = a[r * d + col];
                        for j in 0..d {
                            let ta = field.mul(f, a[col * d + j]);
                            a[r * d + j] = field.sub(a[r * d + j], ta);
                            let tb = field.mul(f, b[col * d + j]);
                            b[r * d + j] = field.sub(b[r * d + j], tb);
                        }
                    }
                }
                Ok(ElemData::MatFf(b))
            }
            (Domain::MatCyc { conductor, dim }, ElemData::MatCyc(m)) => {
                let d = *dim;
                let mut a: Vec<Cyclo> = m.clone();
                let mut b = match self.identity() {
                    ElemData::MatCyc(v) => v,
                    _ => unreachable!(),
                };
                for col in 0..d {
                    let piv =
                        (col..d).find(|&r| !a[r * d + col].is_zero()).ok_or(ElemError::Singular)?;
                    if piv != col {
                        for j in 0..d {
                            a.swap(piv * d + j, col * d + j);
                            b.swap(piv * d + j, col * d + j);
                        }
                    }
                    let s = a[col * d + col].inv().map_err(|_| ElemError::Singular)?;
                    for j in 0..d {
                        a[col * d + j] = &a[col * d + j] * &s;
                        b[col * d + j] = &b[col * d + j] * &s;
                    }
                    for r in 0..d {
                        if r == col || a[r * d + col].is_zero() {
                            continue;
                        }
                        let f = a[r * d + col].clone();
                        for j in 0..d {
                            let ta = &f * &a[col * d + j];
                            a[r * d + j] = &a[r * d + j] - &ta;
                            let tb = &f * &b[col * d + j];
                            b[r * d + j] = &b[r * d + j] - &tb;
                        }
                    }
                }
                // canonical conductor on every inverse entry
                let b = b.into_iter().map(|c| c.raised_to(*conductor)).collect();
                Ok(ElemData::MatCyc(b))
            }
            _ => Err(ElemError::DomainMismatch),
        }
    }

    /// Trace of a matrix element over the cyclotomics (permutations report
    /// their fixed-point count, finite-field matrices are unsupported here).
    pub fn trace_cyclo(&self, a: &ElemData) -> Option<Cyclo> {
        match (self, a) {
            (Domain::MatCyc { dim, .. }, ElemData::MatCyc(m)) => {
                let mut t = Cyclo::zero();
                for i in 0..*dim {
                    t = &t + &m[i * dim + i];
                }
                Some(t)
            }
            (Domain::Perm { .. }, ElemData::Perm(p)) => {
                let fixed = p.iter().enumerate().filter(|(i, &pi)| *i == pi as usize).count();
                Some(Cyclo::from_int(fixed as i64))
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_compose_applies_right_factor_first() {
        let d = Domain::Perm { degree: 3 };
        let a = ElemData::Perm(vec![1, 2, 0]);
        let b = ElemData::Perm(vec![0, 2, 1]);
        // (a*b)(1) = a(b(1)) = a(2) = 0
        assert_eq!(d.compose(&a, &b), ElemData::Perm(vec![1, 0, 2]));
        let inv = d.inverse(&a).unwrap();
        assert_eq!(d.compose(&a, &inv), d.identity());
    }

    #[test]
    fn matrix_inverse_over_f7() {
        let f = FieldSpec::new(7, 1).unwrap();
        let d = Domain::MatFf { field: f, dim: 2 };
        let a = ElemData::MatFf(vec![1, 1, 0, 1]);
        let inv = d.inverse(&a).unwrap();
        assert_eq!(inv, ElemData::MatFf(vec![1, 6, 0, 1]));
        assert_eq!(d.compose(&a, &inv), d.identity());
        let sing = ElemData::MatFf(vec![1, 1, 1, 1]);
        assert_eq!(d.inverse(&sing), Err(ElemError::Singular));
    }

    #[test]
    fn cyclotomic_matrix_inverse() {
        let d = Domain::MatCyc { conductor: 7, dim: 2 };
        let z = Cyclo::root_of_unity(7, 1);
        let a = ElemData::MatCyc(vec![z.clone(), Cyclo::one(), Cyclo::zero(), z.pow(3)]);
        let inv = d.inverse(&a).unwrap();
        assert_eq!(d.compose(&a, &inv), d.identity());
        assert_eq!(d.compose(&inv, &a), d.identity());
    }

    #[test]
    fn bijection_validation() {
        let d = Domain::Perm { degree: 3 };
        assert!(d.validate(&ElemData::Perm(vec![0, 0, 1])).is_err());
        assert!(d.validate(&ElemData::Perm(vec![2, 0, 1])).is_ok());
        assert!(d.validate(&ElemData::Perm(vec![0, 1])).is_err());
    }
}
