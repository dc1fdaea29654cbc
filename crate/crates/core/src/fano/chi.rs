//! Orbifold Riemann-Roch on terminal Fano 3-folds.
//!
//! For X with terminal singularities and basket B, every multiple of the
//! canonical class has exact Euler characteristic
//!
//! ```text
//! chi(mK) = (1/12) m (m-1) (2m-1) K^3 + (m/12) K.c2 + 1 + sum_P c_P(mK)
//! ```
//!
//! where the local term of a point 1/r(1, b, -b) is
//!
//! ```text
//! c_P(mK) = -mbar (r^2-1)/(12r) + sum_{j=0}^{mbar-1} bjbar (r - bjbar)/(2r)
//! ```
//!
//! with `xbar` the smallest residue of x in {0, ..., r-1}. The inner
//! summand runs over bj for j = 0, ..., mbar-1; that convention is pinned
//! by three independent checks in the tests: the closed form for c_P(-K),
//! the identity chi(K) = -1 (Serre duality), and the m = 1 specialization
//! 24 = -K.c2 + sum(r - 1/r) which the `kc2_from_basket` oracle encodes.
//!
//! Everything downstream stores the positive degree (-K)^3 and negates at
//! this module's boundary, since K^3 itself is negative for Fano.

use super::basket::{kc2_from_basket, Basket, BasketError, BasketPoint};
use crate::cyclo::{rat, rat_int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChiError {
    #[error("linear system dimension came out non-integral ({0}); K^3 and basket are inconsistent")]
    NonIntegralDimension(Rat),
}

/// Local Riemann-Roch contribution c_P(mK) of one basket point, any m.
pub fn local_contribution(m: i64, p: BasketPoint) -> Rat {
    let r = p.index() as i64;
    let b = p.residue() as i64;
    let mbar = m.rem_euclid(r);
    let mut sum = Rat::zero();
    for j in 0..mbar {
        let bj = (b * j).rem_euclid(r);
        sum += rat(bj * (r - bj), 2 * r);
    }
    rat(-mbar * (r * r - 1), 12 * r) + sum
}

/// c_P(-K) in closed form: (r^2-1)/(12r) - b(r-b)/(2r). Must agree with
/// `local_contribution(-1, p)`; the reconciliation test is mandatory
/// because the two expressions look nothing alike.
pub fn local_anticanonical(p: BasketPoint) -> Rat {
    let r = p.index() as i64;
    rat(r * r - 1, 12 * r) - p.anticanonical_term()
}

/// The numerical data Riemann-Roch needs about a terminal Fano 3-fold:
/// the positive degree (-K)^3 and the basket. -K.c2 is derived, never
/// stored, so the m = 1 identity cannot drift out of sync.
#[derive(Debug, Clone, PartialEq)]
pub struct FanoNumerics {
    k3: Rat,
    basket: Basket,
}

impl FanoNumerics {
    /// Validates (-K)^3 > 0, and when every basket index is 2 (so 2K is
    /// Cartier) that 2(-K)^3 is an integer.
    pub fn new(k3: Rat, basket: Basket) -> Result<Self, BasketError> {
        if !k3.is_positive() {
            return Err(BasketError::NonPositiveDegree(k3));
        }
        if basket.all_index_two() && !(rat_int(2) * &k3).is_integer() {
            return Err(BasketError::HalfIntegerViolation(k3));
        }
        Ok(FanoNumerics { k3, basket })
    }

    /// (-K)^3, positive.
    pub fn degree(&self) -> &Rat {
        &self.k3
    }

    pub fn basket(&self) -> &Basket {
        &self.basket
    }

    /// -K.c2, from the basket.
    pub fn kc2(&self) -> Rat {
        kc2_from_basket(&self.basket)
    }

    pub fn passes_bm(&self) -> bool {
        super::basket::bm_filter(&self.basket)
    }

    /// The conjectural strengthening -K.c2 >= (1/4)(-K)^3. Informational
    /// only: the literature leaves room for exceptions, so nothing in this
    /// crate filters on it.
    pub fn satisfies_conjectural_quarter_bound(&self) -> bool {
        self.kc2() >= rat(1, 4) * &self.k3
    }
}

/// Exact chi(mK). chi(0) = 1 always; chi(1) = -1 for any basket.
pub fn rr_chi(m: i64, f: &FanoNumerics) -> Rat {
    let k3 = -f.degree().clone();
    let kc2 = -f.kc2();
    let cubic = rat_int(m) * rat_int(m - 1) * rat_int(2 * m - 1) / rat_int(12);
    let local: Rat = f
        .basket()
        .iter()
        .map(|p| local_contribution(m, *p))
        .fold(Rat::zero(), |a, t| a + t);
    cubic * k3 + rat(m, 12) * kc2 + Rat::one() + local
}

/// dim |-K| by the closed anticanonical formula
/// -(1/2) K^3 + 2 - sum b(r-b)/(2r).
/// Agrees with `dim_pluri_anticanonical(1, f)`; errors when the value is
/// not an integer, which signals an inconsistent (K^3, basket) pair.
pub fn dim_anticanonical(f: &FanoNumerics) -> Result<i64, ChiError> {
    let value = rat(1, 2) * f.degree() + rat_int(2) - f.basket().anticanonical_sum();
    as_dimension(value)
}

/// dim |-mK| = chi(-mK) - 1 for m >= 1, using Kawamata-Viehweg vanishing
/// on the ample multiple.
pub fn dim_pluri_anticanonical(m: u32, f: &FanoNumerics) -> Result<i64, ChiError> {
    as_dimension(rr_chi(-(m as i64), f) - Rat::one())
}

/// dim |-K| when 2K is Cartier and the basket is N half points:
/// (1/2)(-K)^3 + 2 - N/4.
pub fn index2_dim_anticanonical(k3: &Rat, n: usize) -> Rat {
    rat(1, 2) * k3 + rat_int(2) - rat(n as i64, 4)
}

/// dim |-2K| under the same hypotheses: (5/2)(-K)^3 + 4 - N/4.
pub fn index2_dim_double(k3: &Rat, n: usize) -> Rat {
    rat(5, 2) * k3 + rat_int(4) - rat(n as i64, 4)
}

fn as_dimension(value: Rat) -> Result<i64, ChiError> {
    if !value.is_integer() {
        return Err(ChiError::NonIntegralDimension(value));
    }
    Ok(value
        .to_integer()
        .to_i64()
        .expect("linear system dimensions are small"))
}
