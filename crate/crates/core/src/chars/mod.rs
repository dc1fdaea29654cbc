//! Ordinary character theory in exact cyclotomic arithmetic. Tables come
//! from two sources: Dixon's modular algorithm for groups we can generate
//! and close, and validated table files for groups too large to enumerate.
//! Both paths funnel through the same invariant gate, so downstream code
//! never sees an unverified table.

mod data;
mod dixon;
mod ops;
mod table;

pub use data::{bundled_table_source, load_bundled_table};
pub use dixon::dixon_table;
pub use ops::{degree_at, direct_sum, dual, tensor, FieldKind};
pub use table::{CharTable, Provenance, TableError};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclo;
    use crate::groups::{load_bundled_group, ClassData, GroupModel};

    fn table_of(key: &str) -> CharTable {
        let g = load_bundled_group(key).unwrap();
        let cd = ClassData::new(&g);
        dixon_table(&g, &cd).unwrap()
    }

    #[test]
    fn degree_multisets_of_the_small_simple_groups() {
        let t = table_of("psl27");
        assert_eq!(t.degrees(), vec![1, 3, 3, 6, 7, 8]);
        assert_eq!(t.provenance, Provenance::Dixon);

        let t = table_of("sl27");
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8]);

        let t = table_of("c7c3");
        assert_eq!(t.degrees(), vec![1, 1, 1, 3, 3]);
    }

    #[test]
    fn frobenius_schur_splits_the_three_dimensional_pair() {
        let t = table_of("psl27");
        let fs: Vec<i64> = (0..6).map(|r| t.fs_indicator(r)).collect();
        assert_eq!(fs, vec![1, 0, 0, 1, 1, 1]);
        // the two degree-3 rows are each other's conjugates
        let conj: Vec<Cyclo> = t.row(1).iter().map(|v| v.conj()).collect();
        assert_eq!(conj, t.row(2));
    }

    #[test]
    fn minimal_faithful_dimensions() {
        let t = table_of("psl27");
        assert_eq!(t.min_faithful_dim(FieldKind::Complex), 3);
        assert_eq!(t.min_faithful_dim(FieldKind::Real), 6);

        let t = table_of("c7c9");
        assert_eq!(t.min_faithful_dim(FieldKind::Complex), 3);
        assert_eq!(t.min_faithful_dim(FieldKind::Real), 6);

        let t = table_of("c7c3xc3");
        assert_eq!(t.min_faithful_dim(FieldKind::Complex), 3);
        assert_eq!(t.min_faithful_dim(FieldKind::Real), 6);

        let c2 = GroupModel::generate(
            "C2",
            crate::groups::Domain::Perm { degree: 2 },
            vec![crate::groups::ElemData::Perm(vec![1, 0])],
            Some(2),
        )
        .unwrap();
        let cd = ClassData::new(&c2);
        let t = dixon_table(&c2, &cd).unwrap();
        assert_eq!(t.min_faithful_dim(FieldKind::Real), 1);
    }

    #[test]
    fn rational_realization_dims() {
        let t = table_of("psl27");
        // degree-3 rows have a quadratic character field, the rest are
        // rational valued
        let dims: Vec<usize> = (0..6).map(|r| t.rational_realization_dim(r)).collect();
        assert_eq!(dims, vec![1, 6, 6, 6, 7, 8]);
        assert_eq!(t.min_rational_dim(), 6);
    }

    #[test]
    fn tensor_square_splits_into_symmetric_and_alternating() {
        let t = table_of("psl27");
        for r in 0..6 {
            let f = t.row(r).to_vec();
            let sym = t.sym_power(&f, 2);
            let alt = t.alt_square(&f);
            let sq = tensor(&f, &f);
            assert_eq!(direct_sum(&sym, &alt), sq);
        }
    }

    #[test]
    fn norm_one_and_self_pairing() {
        let t = table_of("sl27");
        for r in 0..t.rows.len() {
            let f = t.row(r).to_vec();
            let prod = tensor(&f, &dual(&f));
            let dec = t.decompose(&prod).unwrap();
            let triv = t.trivial_row();
            let m = dec.iter().find(|(row, _)| *row == triv).map(|&(_, m)| m);
            assert_eq!(m, Some(1), "chi times conj(chi) contains one trivial summand");
        }
    }

    #[test]
    fn symmetric_power_degrees_are_binomials() {
        let t = table_of("psl27");
        let f = t.row(1).to_vec(); // degree 3
        let id0 = t.identity_class();
        for d in 0..=6usize {
            let s = t.sym_power(&f, d);
            let want = (d + 1) * (d + 2) / 2; // C(3+d-1, d)
            assert_eq!(ops::degree_at(&s, id0), num::BigInt::from(want));
        }
    }

    #[test]
    fn molien_dims_for_the_three_dimensional_representation() {
        let t = table_of("psl27");
        let f = t.row(1).to_vec();
        let dims: Vec<usize> = (1..=8).map(|d| t.molien_dim(&f, d).unwrap()).collect();
        assert_eq!(dims, vec![0, 0, 0, 1, 0, 1, 0, 1]);
        // at degree 14 both the fundamental degree-14 invariant and
        // quartic^2 * sextic contribute
        assert_eq!(t.molien_dim(&f, 14).unwrap(), 2);
    }

    #[test]
    fn molien_dims_for_the_four_dimensional_representation() {
        let t = table_of("sl27");
        for r in t.rows_of_degree(4) {
            let f = t.row(r).to_vec();
            for d in [1usize, 3, 5, 7] {
                assert_eq!(t.molien_dim(&f, d).unwrap(), 0, "odd degree {}", d);
            }
            assert_eq!(t.molien_dim(&f, 2).unwrap(), 0);
            assert_eq!(t.molien_dim(&f, 4).unwrap(), 1);
            assert_eq!(t.molien_dim(&f, 6).unwrap(), 1);
        }
    }

    #[test]
    fn ctab_roundtrip_preserves_the_table() {
        let t = table_of("c7c3");
        let text = t.to_ctab();
        let u = CharTable::from_ctab(&text).unwrap();
        assert_eq!(u.provenance, Provenance::File);
        assert_eq!(u.sizes, t.sizes);
        assert_eq!(u.orders, t.orders);
        assert_eq!(u.powmaps, t.powmaps);
        assert_eq!(u.rows, t.rows);
    }

    #[test]
    fn tampered_tables_are_rejected() {
        let t = table_of("c7c3");
        let good = t.to_ctab();
        // corrupt one character value: swap a degree
        let bad = good.replacen("chi: 1 | 1 | 1 | 1 | 1", "chi: 1 | 1 | 1 | 1 | -1", 1);
        assert_ne!(good, bad);
        let err = CharTable::from_ctab(&bad).unwrap_err();
        assert!(matches!(err, TableError::Violation(_)), "got {err}");
    }

    #[test]
    fn larger_tables_close_under_the_gate() {
        // SL2(8): 9 classes, all indicators +1 (every character is real)
        let t = table_of("sl28");
        assert_eq!(t.degrees(), vec![1, 7, 7, 7, 7, 8, 9, 9, 9]);
        for r in 0..9 {
            assert_eq!(t.fs_indicator(r), 1);
        }
    }
}
