//! Covariant constructions on ternary forms, and the classical generator
//! chain they produce for the quartic x1*x2^3 + x2*x3^3 + x3*x1^3: its
//! Hessian of degree 6, a degree-14 invariant from the bordered Hessian,
//! and a degree-21 invariant from the Jacobian of the first three. Every
//! output is put in primitive integer form (integer coefficients, content
//! one, positive leading coefficient), so the named invariants are pinned
//! exactly rather than up to scale.

use std::sync::{Arc, OnceLock};

use crate::cyclo::Rat;
use crate::mpoly::{matpoly_det, varset, Expo, MPoly};

/// Determinant of the matrix of second partials, in primitive integer form.
/// For a ternary cubic this is the classical check case
/// hessian(x^3 + y^3 + z^3) = x*y*z.
pub fn hessian(f: &MPoly<Rat>) -> MPoly<Rat> {
    let n = f.nvars();
    let m: Vec<Vec<MPoly<Rat>>> =
        (0..n).map(|i| (0..n).map(|j| f.partial(i).partial(j)).collect()).collect();
    matpoly_det(&m).primitive_integer()
}

/// Determinant of the Hessian of `f` bordered by the gradient of `h`:
/// the 4x4 block matrix [[d2f/dxi dxj, dh/dxi], [dh/dxj, 0]], primitive
/// integer form. Every determinant term takes two Hessian entries and two
/// gradient entries, so for ternary f of degree a and h of degree b the
/// result is homogeneous of degree 2(a-2) + 2(b-1); (4,6) gives 14.
pub fn bordered_hessian(f: &MPoly<Rat>, h: &MPoly<Rat>) -> MPoly<Rat> {
    let n = f.nvars();
    assert_eq!(n, h.nvars(), "forms must share a variable set");
    let zero = MPoly::zero(f.vars().clone());
    let mut m: Vec<Vec<MPoly<Rat>>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<MPoly<Rat>> = (0..n).map(|j| f.partial(i).partial(j)).collect();
        row.push(h.partial(i));
        m.push(row);
    }
    let mut last: Vec<MPoly<Rat>> = (0..n).map(|j| h.partial(j)).collect();
    last.push(zero);
    m.push(last);
    matpoly_det(&m).primitive_integer()
}

/// Determinant of the Jacobian matrix of n forms in n variables, primitive
/// integer form. jacobian_det(x, y, z) = 1, and any repeated argument gives
/// the zero polynomial.
pub fn jacobian_det(fs: &[&MPoly<Rat>]) -> MPoly<Rat> {
    let n = fs.len();
    assert!(n > 0 && fs.iter().all(|f| f.nvars() == n), "need n forms in n variables");
    let m: Vec<Vec<MPoly<Rat>>> =
        fs.iter().map(|f| (0..n).map(|j| f.partial(j)).collect()).collect();
    matpoly_det(&m).primitive_integer()
}

fn ternary_vars() -> Arc<Vec<String>> {
    static CELL: OnceLock<Arc<Vec<String>>> = OnceLock::new();
    CELL.get_or_init(|| varset(&["x1", "x2", "x3"])).clone()
}

/// The smooth plane quartic x1*x2^3 + x2*x3^3 + x3*x1^3 whose symmetry
/// group is the 168-element simple group; the fundamental invariant of
/// degree 4.
pub fn klein_quartic() -> MPoly<Rat> {
    let one = Rat::from_integer(1.into());
    MPoly::from_terms(
        ternary_vars(),
        vec![
            (Expo(vec![1, 3, 0]), one.clone()),
            (Expo(vec![0, 1, 3]), one.clone()),
            (Expo(vec![3, 0, 1]), one),
        ],
    )
}

/// Degree-6 invariant: the Hessian of the quartic.
pub fn klein_sextic() -> &'static MPoly<Rat> {
    static CELL: OnceLock<MPoly<Rat>> = OnceLock::new();
    CELL.get_or_init(|| hessian(&klein_quartic()))
}

/// Degree-14 invariant: bordered Hessian of the quartic by the sextic.
pub fn klein_deg14() -> &'static MPoly<Rat> {
    static CELL: OnceLock<MPoly<Rat>> = OnceLock::new();
    CELL.get_or_init(|| bordered_hessian(&klein_quartic(), klein_sextic()))
}

/// Degree-21 invariant: Jacobian determinant of the three below it. A
/// substitution multiplies a Jacobian by its determinant, and the group
/// sits inside SL(3), so this is an exact invariant despite the odd degree.
pub fn klein_deg21() -> &'static MPoly<Rat> {
    static CELL: OnceLock<MPoly<Rat>> = OnceLock::new();
    CELL.get_or_init(|| jacobian_det(&[&klein_quartic(), klein_sextic(), klein_deg14()]))
}
