//! Exact bases of invariant polynomial subspaces.
//!
//! For a matrix group given by generators, the degree-d invariants are the
//! simultaneous fixed space of the substitution operators S_g on the span
//! of the degree-d monomials. Averaging over the whole group would need
//! |G| substitutions per monomial; intersecting the kernels of (S_g - 1)
//! over the generators alone gives the same subspace with a handful of
//! linear solves, because a vector fixed by every generator is fixed by
//! every word. Diagonal generators come first in the bundled files, so the
//! first cut is cheap and later eliminations run on thin matrices.

use std::sync::Arc;

use thiserror::Error;

use crate::cyclo::Cyclo;
use crate::mpoly::{monomials, MPoly};

/// Monomial-space guard; degree-14 ternary space is 120, well inside.
pub const MONOMIAL_SPACE_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum ReynoldsError {
    #[error("monomial space of dimension {0} exceeds the cap {1}")]
    SpaceTooLarge(usize, usize),
    #[error("generator is {got}x{got} but the variable set has {want} entries")]
    DimMismatch { got: usize, want: usize },
}

/// Basis of the degree-`degree` invariants of the group generated by
/// `gens`, as polynomials over `vars`. Each basis element is scaled to a
/// leading coefficient of 1 in graded-lex order, so the output is
/// deterministic and comparisons against named invariants are one
/// proportionality check away.
pub fn invariant_basis(
    gens: &[Vec<Vec<Cyclo>>],
    vars: &Arc<Vec<String>>,
    degree: u32,
) -> Result<Vec<MPoly<Cyclo>>, ReynoldsError> {
    let nv = vars.len();
    for g in gens {
        if g.len() != nv || g.iter().any(|r| r.len() != nv) {
            return Err(ReynoldsError::DimMismatch { got: g.len(), want: nv });
        }
    }
    let basis = monomials(nv, degree);
    let n = basis.len();
    if n > MONOMIAL_SPACE_CAP {
        return Err(ReynoldsError::SpaceTooLarge(n, MONOMIAL_SPACE_CAP));
    }

    // columns of the current candidate subspace, coordinates on `basis`
    let mut cols: Vec<Vec<Cyclo>> = (0..n)
        .map(|j| {
            let mut v = vec![Cyclo::zero(); n];
            v[j] = Cyclo::one();
            v
        })
        .collect();

    for g in gens {
        if cols.is_empty() {
            break;
        }
        // images of the monomials under S_g, as columns
        let sg: Vec<Vec<Cyclo>> = basis
            .iter()
            .map(|e| {
                MPoly::term(vars.clone(), e.clone(), Cyclo::one())
                    .subst_linear(g)
                    .coeff_vector(&basis)
            })
            .collect();
        // residual (S_g - 1) v for each candidate column v
        let resid: Vec<Vec<Cyclo>> = cols
            .iter()
            .map(|v| {
                let mut out: Vec<Cyclo> = v.iter().map(|c| -c).collect();
                for (j, vj) in v.iter().enumerate() {
                    if vj.is_zero() {
                        continue;
                    }
                    for (i, s) in sg[j].iter().enumerate() {
                        if !s.is_zero() {
                            out[i] = &out[i] + &(s * vj);
                        }
                    }
                }
                out
            })
            .collect();
        let null = nullspace(n, &resid);
        // V <- V * X restricts the candidate space to the kernel
        cols = null
            .iter()
            .map(|x| {
                let mut v = vec![Cyclo::zero(); n];
                for (j, xj) in x.iter().enumerate() {
                    if xj.is_zero() {
                        continue;
                    }
                    for (i, cij) in cols[j].iter().enumerate() {
                        if !cij.is_zero() {
                            v[i] = &v[i] + &(cij * xj);
                        }
                    }
                }
                v
            })
            .collect();
    }

    Ok(cols
        .into_iter()
        .map(|v| {
            let p = MPoly::from_terms(
                vars.clone(),
                basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
            );
            normalize_leading(p)
        })
        .collect())
}

fn normalize_leading(p: MPoly<Cyclo>) -> MPoly<Cyclo> {
    match p.leading() {
        None => p,
        Some((_, c)) => {
            let s = c.inv().expect("leading coefficient is nonzero");
            p.map_coeffs(|x| x * &s)
        }
    }
}

/// Nullspace of the n x k matrix whose columns are `cols`, returned as
/// coordinate vectors (length k) of a basis. Plain fraction-full Gaussian
/// elimination; the sizes here never warrant anything smarter.
fn nullspace(n: usize, cols: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let k = cols.len();
    // row-major working copy, rows = n, cols = k
    let mut m: Vec<Vec<Cyclo>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut row = 0usize;
    for col in 0..k {
        if row >= n {
            break;
        }
        let pr = (row..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pr else { continue };
        m.swap(row, pr);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for c in col..k {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..k {
                    let sub = &m[row][c] * &f;
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut out = Vec::new();
    for free in 0..k {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Cyclo::zero(); k];
        v[free] = Cyclo::one();
        for (col, pv) in pivot_of_col.iter().enumerate() {
            if let Some(pr) = pv {
                v[col] = -&m[*pr][free];
            }
        }
        out.push(v);
    }
    out
}
