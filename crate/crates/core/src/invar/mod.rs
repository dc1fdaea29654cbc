//! Invariant theory of the two linear actions behind the geometric side of
//! the verification suite: the 168-element symmetry group of a plane
//! quartic acting on three variables, and the 336-element Weil-matrix
//! image of SL(2,7) acting on four.
//!
//! The module deliberately computes the same objects twice by unrelated
//! routes. Dimensions of invariant spaces come analytically from character
//! tables (symmetric-power inner products) and constructively from exact
//! kernel intersections on monomial spaces; named invariants come from
//! classical covariant formulas (Hessians, Jacobians) and must land in the
//! constructively computed spaces. Smoothness of the cut-out hypersurfaces
//! is then certified by modular rank computations. Agreement across these
//! routes is what the test suite asserts.

pub mod act;
pub mod classical;
pub mod rep;
pub mod reynolds;
pub mod smooth;

pub use act::{act_on_poly, cyclotomic_poly, invariance_sign, proportional, rational_poly};
pub use classical::{
    bordered_hessian, hessian, jacobian_det, klein_deg14, klein_deg21, klein_quartic,
    klein_sextic,
};
pub use rep::{klein_rep, weil_rep, MatrixRep, RepError};
pub use reynolds::{invariant_basis, ReynoldsError, MONOMIAL_SPACE_CAP};
pub use smooth::{certify_smooth, certify_smooth_rat, SmoothError, SmoothnessCertificate, Verdict};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{dixon_table, CharTable};
    use crate::cyclo::{Cyclo, Rat};
    use crate::groups::{load_bundled_group, ClassData};
    use crate::mpoly::{varset, Expo, MPoly};

    fn int(k: i64) -> Rat {
        Rat::from_integer(k.into())
    }

    fn table_of(key: &str) -> CharTable {
        let g = load_bundled_group(key).unwrap();
        let cd = ClassData::new(&g);
        dixon_table(&g, &cd).unwrap()
    }

    #[test]
    fn quartic_symmetry_group_closes_and_carries_a_degree_three_character() {
        let rep = klein_rep();
        assert_eq!(rep.order(), 168);
        assert_eq!(rep.classes.num_classes(), 6);
        let table = table_of("psl27");
        let hits = rep.match_character(&table).unwrap();
        // exactly the two Galois-twin rows of degree 3
        assert_eq!(hits, table.rows_of_degree(3));
    }

    #[test]
    fn weil_group_closes_and_carries_a_degree_four_character() {
        let rep = weil_rep();
        assert_eq!(rep.order(), 336);
        assert_eq!(rep.classes.num_classes(), 11);
        let table = table_of("sl27");
        let hits = rep.match_character(&table).unwrap();
        assert_eq!(hits, table.rows_of_degree(4));
    }

    #[test]
    fn every_generator_fixes_the_quartic_exactly() {
        let f = cyclotomic_poly(&klein_quartic());
        for g in klein_rep().generator_rows() {
            assert_eq!(invariance_sign(&g, &f), Some(1));
        }
    }

    #[test]
    fn derived_invariants_are_fixed_exactly_including_odd_degree() {
        // every generator has determinant one, so even the odd-degree
        // Jacobian picks up no sign anywhere
        let rep = klein_rep();
        let gens = rep.generator_rows();
        for f in [klein_sextic(), klein_deg14(), klein_deg21()] {
            let fc = cyclotomic_poly(f);
            for g in &gens {
                assert_eq!(invariance_sign(g, &fc), Some(1));
            }
        }
    }

    #[test]
    fn hessian_of_the_fermat_cubic_is_the_coordinate_product() {
        let vs = varset(&["x", "y", "z"]);
        let f = MPoly::from_terms(
            vs.clone(),
            vec![
                (Expo(vec![3, 0, 0]), int(1)),
                (Expo(vec![0, 3, 0]), int(1)),
                (Expo(vec![0, 0, 3]), int(1)),
            ],
        );
        let h = hessian(&f);
        assert_eq!(h, MPoly::term(vs, Expo(vec![1, 1, 1]), int(1)));
    }

    #[test]
    fn jacobian_of_the_coordinates_is_one_and_repeats_kill_it() {
        let vs = varset(&["x", "y", "z"]);
        let x = MPoly::var(vs.clone(), 0);
        let y = MPoly::var(vs.clone(), 1);
        let z = MPoly::var(vs.clone(), 2);
        assert_eq!(jacobian_det(&[&x, &y, &z]), MPoly::constant(vs.clone(), int(1)));
        let f = klein_quartic();
        let g = klein_sextic();
        assert!(jacobian_det(&[&f, &f, g]).is_zero());
    }

    #[test]
    fn named_invariants_have_the_classical_degrees() {
        assert_eq!(klein_quartic().total_degree(), Some(4));
        assert_eq!(klein_sextic().total_degree(), Some(6));
        assert_eq!(klein_deg14().total_degree(), Some(14));
        assert_eq!(klein_deg21().total_degree(), Some(21));
        assert!(!klein_deg21().is_zero());
    }

    #[test]
    fn invariant_space_dimensions_match_the_character_computation() {
        let rep = klein_rep();
        let gens = rep.generator_rows();
        let vs = klein_quartic().vars().clone();
        let table = table_of("psl27");
        let row = rep.match_character(&table).unwrap()[0];
        for d in 1..=8u32 {
            let basis = invariant_basis(&gens, &vs, d).unwrap();
            let analytic = table.molien_dim(&table.rows[row], d as usize).unwrap();
            assert_eq!(basis.len(), analytic, "degree {d}");
        }
    }

    #[test]
    fn lowest_invariants_span_the_classical_lines() {
        let rep = klein_rep();
        let gens = rep.generator_rows();
        let vs = klein_quartic().vars().clone();
        let b4 = invariant_basis(&gens, &vs, 4).unwrap();
        assert_eq!(b4.len(), 1);
        assert!(proportional(&b4[0], &cyclotomic_poly(&klein_quartic())));
        let b6 = invariant_basis(&gens, &vs, 6).unwrap();
        assert_eq!(b6.len(), 1);
        assert!(proportional(&b6[0], &cyclotomic_poly(klein_sextic())));
    }

    #[test]
    fn degree_fourteen_space_contains_the_bordered_hessian_and_the_square_sum() {
        // the degree-14 invariants are 2-dimensional: the bordered Hessian
        // line plus the obvious product of lower invariants
        let rep = klein_rep();
        let gens = rep.generator_rows();
        let vs = klein_quartic().vars().clone();
        let b14 = invariant_basis(&gens, &vs, 14).unwrap();
        assert_eq!(b14.len(), 2);
        let f4 = cyclotomic_poly(&klein_quartic());
        let f6 = cyclotomic_poly(klein_sextic());
        let f14 = cyclotomic_poly(klein_deg14());
        let product = f4.mul(&f4).mul(&f6);
        for target in [&f14, &product] {
            assert!(
                in_span(&b14, target),
                "named degree-14 element outside the computed space"
            );
        }
        // and the bordered Hessian is not a multiple of the product, so the
        // two really span
        assert!(!proportional(&f14, &product));
    }

    #[test]
    fn weil_action_has_no_small_odd_invariants_and_single_lines_at_four_and_six() {
        let rep = weil_rep();
        let gens = rep.generator_rows();
        let vs = varset(&["y1", "y2", "y3", "y4"]);
        let table = table_of("sl27");
        let row = rep.match_character(&table).unwrap()[0];
        for d in 1..=8u32 {
            let basis = invariant_basis(&gens, &vs, d).unwrap();
            let analytic = table.molien_dim(&table.rows[row], d as usize).unwrap();
            assert_eq!(basis.len(), analytic, "degree {d}");
            if d % 2 == 1 {
                assert!(basis.is_empty(), "odd degree {d} should have no invariants");
            }
        }
        let quartic = &invariant_basis(&gens, &vs, 4).unwrap()[0];
        // Galois stability of the line forces a rational representative
        assert!(rational_poly(quartic).is_some());
    }

    #[test]
    fn smoothness_certificates_for_the_bundled_hypersurfaces() {
        let vs = varset(&["x", "y", "z"]);
        let fermat = MPoly::from_terms(
            vs,
            vec![
                (Expo(vec![4, 0, 0]), int(1)),
                (Expo(vec![0, 4, 0]), int(1)),
                (Expo(vec![0, 0, 4]), int(1)),
            ],
        );
        let cert = certify_smooth_rat(&fermat, 5, 7).unwrap();
        assert!(cert.certifies_smooth());

        let cert = certify_smooth_rat(&klein_quartic(), 11, 9).unwrap();
        assert!(cert.certifies_smooth());

        // a visibly singular cone stays inconclusive rather than "singular"
        let vs = varset(&["x", "y", "z"]);
        let cone = MPoly::from_terms(
            vs,
            vec![(Expo(vec![2, 2, 0]), int(1)), (Expo(vec![0, 0, 4]), int(1))],
        );
        let cert = certify_smooth_rat(&cone, 11, 9).unwrap();
        assert!(!cert.certifies_smooth());
        match cert.verdict {
            Verdict::Inconclusive { ref missing_monomials } => {
                assert!(!missing_monomials.is_empty())
            }
            Verdict::Smooth => panic!("cone certified smooth"),
        }
    }

    #[test]
    fn certificate_rejects_degenerate_inputs() {
        let vs = varset(&["x", "y", "z"]);
        let zero: MPoly<Rat> = MPoly::zero(vs.clone());
        assert!(matches!(certify_smooth_rat(&zero, 5, 7), Err(SmoothError::ZeroPoly)));
        let f = klein_quartic();
        assert!(matches!(
            certify_smooth_rat(&f, 11, 3),
            Err(SmoothError::DegreeTooLow { .. })
        ));
        let seven_f = f.scale(&int(7));
        assert!(matches!(
            certify_smooth_rat(&seven_f, 7, 9),
            Err(SmoothError::BadPrime { .. })
        ));
        let mixed = MPoly::from_terms(
            vs,
            vec![(Expo(vec![2, 0, 0]), int(1)), (Expo(vec![1, 0, 0]), int(1))],
        );
        assert!(matches!(
            certify_smooth_rat(&mixed, 5, 7),
            Err(SmoothError::NotHomogeneous)
        ));
    }

    #[test]
    fn weil_quartic_invariant_cuts_a_smooth_threefold_hypersurface() {
        let rep = weil_rep();
        let gens = rep.generator_rows();
        let vs = varset(&["y1", "y2", "y3", "y4"]);
        let quartic = &invariant_basis(&gens, &vs, 4).unwrap()[0];
        let q = rational_poly(quartic).expect("rational representative").primitive_integer();
        let cert = certify_smooth_rat(&q, 13, 9).unwrap();
        assert!(cert.certifies_smooth());
    }

    fn in_span(basis: &[MPoly<Cyclo>], f: &MPoly<Cyclo>) -> bool {
        // row-reduce the coefficient vectors of basis ++ [f]; f is in the
        // span iff the rank does not grow
        let mut monos: std::collections::BTreeSet<Expo> = Default::default();
        for p in basis.iter().chain([f]) {
            for (e, _) in p.terms() {
                monos.insert(e.clone());
            }
        }
        let monos: Vec<Expo> = monos.into_iter().collect();
        let rows: Vec<Vec<Cyclo>> = basis.iter().map(|p| p.coeff_vector(&monos)).collect();
        let with: Vec<Vec<Cyclo>> = rows
            .iter()
            .cloned()
            .chain([f.coeff_vector(&monos)])
            .collect();
        rank_cyclo(rows) == rank_cyclo(with)
    }

    fn rank_cyclo(mut m: Vec<Vec<Cyclo>>) -> usize {
        let ncols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, pr);
            let inv = m[rank][col].inv().unwrap();
            for c in col..ncols {
                m[rank][c] = &m[rank][c] * &inv;
            }
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..ncols {
                        let sub = &m[rank][c] * &f;
                        m[r][c] = &m[r][c] - &sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
