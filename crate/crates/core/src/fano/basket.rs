//! Baskets of terminal cyclic quotient singularities.
//!
//! A terminal 3-fold singularity deforms locally to a finite collection of
//! cyclic quotient points of type 1/r(1, b, -b); the multiset of those
//! virtual points is the basket. Everything Riemann-Roch needs about the
//! singular locus is a function of the basket alone, so the types here are
//! purely combinatorial: no geometry, just validated (r, b) pairs and the
//! exact rational sums over them.

use crate::cyclo::{rat, rat_int, Rat};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasketError {
    #[error("basket point needs index r >= 2, got r = {0}")]
    IndexTooSmall(u32),
    #[error("basket point needs 0 < b < r, got (r, b) = ({0}, {1})")]
    ResidueOutOfRange(u32, u32),
    #[error("basket point needs gcd(b, r) = 1, got (r, b) = ({0}, {1})")]
    NotCoprime(u32, u32),
    #[error("Fano numerics need (-K)^3 > 0, got {0}")]
    NonPositiveDegree(Rat),
    #[error("every index is 2, so 2K is Cartier and 2(-K)^3 must be an integer, got (-K)^3 = {0}")]
    HalfIntegerViolation(Rat),
}

/// One virtual singular point of type 1/r(1, b, -b).
///
/// (r, b) and (r, r-b) name the same singularity (replace the group
/// generator by its inverse), so the constructor stores b <= r/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasketPoint {
    r: u32,
    b: u32,
}

impl BasketPoint {
    pub fn new(r: u32, b: u32) -> Result<Self, BasketError> {
        if r < 2 {
            return Err(BasketError::IndexTooSmall(r));
        }
        if b == 0 || b >= r {
            return Err(BasketError::ResidueOutOfRange(r, b));
        }
        if gcd(r, b) != 1 {
            return Err(BasketError::NotCoprime(r, b));
        }
        Ok(BasketPoint { r, b: b.min(r - b) })
    }

    /// The point 1/2(1, 1, 1), the only index-2 type.
    pub fn half() -> Self {
        BasketPoint { r: 2, b: 1 }
    }

    pub fn index(&self) -> u32 {
        self.r
    }

    pub fn residue(&self) -> u32 {
        self.b
    }

    /// r - 1/r, the summand of the Bogomolov-Miyaoka bound.
    pub fn bm_term(&self) -> Rat {
        let r = self.r as i64;
        rat_int(r) - rat(1, r)
    }

    /// b(r - b) / (2r), the summand of the anticanonical dimension formula.
    pub fn anticanonical_term(&self) -> Rat {
        let (r, b) = (self.r as i64, self.b as i64);
        rat(b * (r - b), 2 * r)
    }
}

impl fmt::Display for BasketPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},{},-{})", self.r, 1, self.b, self.b)
    }
}

/// Finite multiset of basket points, kept sorted so equal baskets compare
/// equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Basket {
    points: Vec<BasketPoint>,
}

impl Basket {
    pub fn new(mut points: Vec<BasketPoint>) -> Self {
        points.sort();
        Basket { points }
    }

    /// n copies of 1/2(1, 1, 1).
    pub fn halves(n: usize) -> Self {
        Basket { points: vec![BasketPoint::half(); n] }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasketPoint> {
        self.points.iter()
    }

    pub fn all_index_two(&self) -> bool {
        self.points.iter().all(|p| p.index() == 2)
    }

    /// Sum of (r - 1/r) over the basket, the quantity bounded by 24.
    pub fn bm_sum(&self) -> Rat {
        self.points.iter().map(|p| p.bm_term()).fold(Rat::zero(), |a, t| a + t)
    }

    /// Sum of b(r - b)/(2r) over the basket.
    pub fn anticanonical_sum(&self) -> Rat {
        self.points
            .iter()
            .map(|p| p.anticanonical_term())
            .fold(Rat::zero(), |a, t| a + t)
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "(empty)");
        }
        let mut runs: Vec<(BasketPoint, usize)> = Vec::new();
        for p in &self.points {
            match runs.last_mut() {
                Some((q, n)) if q == p => *n += 1,
                _ => runs.push((*p, 1)),
            }
        }
        let parts: Vec<String> = runs
            .iter()
            .map(|(p, n)| if *n == 1 { p.to_string() } else { format!("{}x{}", n, p) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// True iff the basket satisfies the strict Bogomolov-Miyaoka bound
/// sum(r - 1/r) < 24. Every geometric terminal Fano basket does; the caller
/// uses this to discard numerics that cannot come from a variety.
pub fn bm_filter(basket: &Basket) -> bool {
    basket.bm_sum() < rat_int(24)
}

/// -K.c2 recovered from the basket via the m = 1 Riemann-Roch identity
/// 24 = -K.c2 + sum(r - 1/r). Positive for every geometric basket.
pub fn kc2_from_basket(basket: &Basket) -> Rat {
    rat_int(24) - basket.bm_sum()
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basket_point_validation_and_canonical_form() {
        assert_eq!(BasketPoint::new(1, 1).unwrap_err(), BasketError::IndexTooSmall(1));
        assert_eq!(
            BasketPoint::new(4, 0).unwrap_err(),
            BasketError::ResidueOutOfRange(4, 0)
        );
        assert_eq!(
            BasketPoint::new(4, 4).unwrap_err(),
            BasketError::ResidueOutOfRange(4, 4)
        );
        assert_eq!(BasketPoint::new(4, 2).unwrap_err(), BasketError::NotCoprime(4, 2));
        // (5, 3) and (5, 2) are the same singularity
        assert_eq!(BasketPoint::new(5, 3).unwrap(), BasketPoint::new(5, 2).unwrap());
        assert_eq!(BasketPoint::new(2, 1).unwrap(), BasketPoint::half());
    }

    #[test]
    fn bm_sum_and_filter() {
        // empty basket: -K.c2 = 24
        assert_eq!(kc2_from_basket(&Basket::default()), rat_int(24));
        // 13 half points: 24 - 13*(3/2) = 9/2
        assert_eq!(kc2_from_basket(&Basket::halves(13)), rat(9, 2));
        // 15 half points pass (22.5 < 24), 16 sit exactly on the bound and fail
        assert!(bm_filter(&Basket::halves(15)));
        assert!(!bm_filter(&Basket::halves(16)));
        assert_eq!(kc2_from_basket(&Basket::halves(16)), rat_int(0));
        // mixed indices, exact arithmetic: 7*(8/3) + 3/2 = 121/6 < 24
        let mixed = Basket::new(
            std::iter::repeat(BasketPoint::new(3, 1).unwrap())
                .take(7)
                .chain(std::iter::once(BasketPoint::half()))
                .collect(),
        );
        assert_eq!(mixed.bm_sum(), rat(121, 6));
        assert!(bm_filter(&mixed));
    }

    #[test]
    fn basket_order_is_canonical() {
        let a = Basket::new(vec![
            BasketPoint::new(3, 1).unwrap(),
            BasketPoint::half(),
            BasketPoint::new(5, 2).unwrap(),
        ]);
        let b = Basket::new(vec![
            BasketPoint::new(5, 3).unwrap(),
            BasketPoint::new(3, 2).unwrap(),
            BasketPoint::half(),
        ]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2(1,1,-1) + 1/3(1,1,-1) + 1/5(1,2,-2)");
    }
}
