//! Substitution action of matrices on polynomials, plus the small helpers
//! for moving coefficients between the rational and cyclotomic scalars.
//!
//! `act_on_poly(m, f)` substitutes x_i -> sum_j m[i][j] x_j. Composing two
//! substitutions multiplies the matrices in reverse, so this is a right
//! action: act(a, act(b, f)) = act(b * a, f). Invariance statements are
//! unaffected, but orbit code must compose accordingly.

use crate::cyclo::{Cyclo, Rat};
use crate::mpoly::MPoly;

pub fn act_on_poly(m: &[Vec<Cyclo>], f: &MPoly<Cyclo>) -> MPoly<Cyclo> {
    f.subst_linear(m)
}

/// Sign with which `m` carries `f` to itself: `Some(1)` if fixed exactly,
/// `Some(-1)` if negated, `None` if the image is neither.
pub fn invariance_sign(m: &[Vec<Cyclo>], f: &MPoly<Cyclo>) -> Option<i8> {
    let img = act_on_poly(m, f);
    if img == *f {
        Some(1)
    } else if img == f.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Lift rational coefficients into the cyclotomic scalar.
pub fn cyclotomic_poly(f: &MPoly<Rat>) -> MPoly<Cyclo> {
    f.map_coeffs(|r| Cyclo::one().scale_rat(r))
}

/// Project back to rational coefficients; `None` if any coefficient has a
/// nontrivial cyclotomic part.
pub fn rational_poly(f: &MPoly<Cyclo>) -> Option<MPoly<Rat>> {
    let mut out = MPoly::zero(f.vars().clone());
    for (e, c) in f.terms() {
        let r = c.as_rat()?;
        out = out.add(&MPoly::term(f.vars().clone(), e.clone(), r));
    }
    Some(out)
}

/// Two nonzero polynomials spanning the same line, i.e. equal up to a
/// scalar from the coefficient field.
pub fn proportional(f: &MPoly<Cyclo>, g: &MPoly<Cyclo>) -> bool {
    match (f.leading(), g.leading()) {
        (None, None) => true,
        (Some((ef, cf)), Some((eg, cg))) => {
            if ef != eg {
                return false;
            }
            let scale = cg * &cf.inv().expect("leading coefficient is nonzero");
            f.map_coeffs(|c| c * &scale) == *g
        }
        _ => false,
    }
}
