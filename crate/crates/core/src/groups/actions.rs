//! Orbit-size feasibility queries on top of the subgroup lattice: which
//! transitive actions a group admits below a size bound (with double
//! transitivity flagged), and which point-orbit lengths can occur on a curve
//! where stabilizers are cyclic.

use super::lattice::{span, SubgroupClass};
use super::model::GroupModel;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Indices [G:H] of proper subgroups up to `bound`, each flagged true when
/// some subgroup of that index yields a doubly transitive coset action.
/// The regular action (index |G|) comes from the trivial subgroup; index 1
/// is never reported.
pub fn transitive_action_sizes(
    g: &GroupModel,
    classes: &[SubgroupClass],
    bound: usize,
) -> BTreeMap<usize, bool> {
    let mut out: BTreeMap<usize, bool> = BTreeMap::new();
    for c in classes {
        if c.order == g.order() || c.index > bound {
            continue;
        }
        let dt = is_doubly_transitive(g, &c.rep);
        let e = out.entry(c.index).or_insert(false);
        *e = *e || dt;
    }
    out
}

/// Rank of the coset action of G on G/H equals the number of H-orbits on
/// cosets; the action is doubly transitive exactly when the rank is 2.
fn is_doubly_transitive(g: &GroupModel, h: &[u32]) -> bool {
    if h.len() == g.order() {
        return false;
    }
    let n = g.order();
    // canonical coset labels: smallest element id in gH
    let mut coset_key = vec![u32::MAX; n];
    for e in 0..n as u32 {
        if coset_key[e as usize] != u32::MAX {
            continue;
        }
        let members: Vec<u32> = h.iter().map(|&x| g.mul(e, x)).collect();
        let key = *members.iter().min().unwrap();
        for m in members {
            coset_key[m as usize] = key;
        }
    }
    // H-orbits on cosets by left multiplication
    let mut orbit_of: HashMap<u32, u32> = HashMap::new();
    let mut orbits = 0u32;
    let keys: BTreeSet<u32> = coset_key.iter().copied().collect();
    for &k in &keys {
        if orbit_of.contains_key(&k) {
            continue;
        }
        orbits += 1;
        let mut stack = vec![k];
        orbit_of.insert(k, orbits);
        while let Some(c) = stack.pop() {
            for &x in h {
                let img = coset_key[g.mul(x, c) as usize];
                if !orbit_of.contains_key(&img) {
                    orbit_of.insert(img, orbits);
                    stack.push(img);
                }
            }
        }
    }
    orbits == 2
}

/// Orbit lengths on a curve with cyclic stabilizers: |G|/d over the element
/// orders d occurring in G.
pub fn curve_orbit_lengths(g: &GroupModel) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for e in 0..g.order() as u32 {
        out.insert(g.order() / g.elem_order(e) as usize);
    }
    out
}

pub fn element_orders_present(g: &GroupModel) -> BTreeSet<u32> {
    (0..g.order() as u32).map(|e| g.elem_order(e)).collect()
}

pub fn element_of_order(g: &GroupModel, n: u32) -> Option<u32> {
    (0..g.order() as u32).find(|&e| g.elem_order(e) == n)
}

/// Order of the normalizer of the subgroup spanned by `gens`, by direct scan.
pub fn normalizer_order_of_span(g: &GroupModel, gens: &[u32]) -> usize {
    let h = span(g, gens);
    let mut count = 0;
    for x in 0..g.order() as u32 {
        let mut img: Vec<u32> = h.iter().map(|&y| g.conj(x, y)).collect();
        img.sort_unstable();
        if img == h {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::elem::{Domain, ElemData};
    use super::super::lattice::subgroup_classes;

    #[test]
    fn s4_action_sizes() {
        let g = GroupModel::generate(
            "S4",
            Domain::Perm { degree: 4 },
            vec![ElemData::Perm(vec![1, 0, 2, 3]), ElemData::Perm(vec![1, 2, 3, 0])],
            Some(24),
        )
        .unwrap();
        let classes = subgroup_classes(&g, 1).unwrap();
        let sizes = transitive_action_sizes(&g, &classes, 24);
        let all: Vec<usize> = sizes.keys().copied().collect();
        assert_eq!(all, vec![2, 3, 4, 6, 8, 12, 24]);
        // natural action on 4 points is doubly transitive, and so is the
        // index-3 action (it factors through S3 on 3 points); the degree-6
        // actions cannot be (24 < 6*5) and neither can the regular one
        assert_eq!(sizes[&4], true);
        assert_eq!(sizes[&3], true);
        assert_eq!(sizes[&6], false);
        assert_eq!(sizes[&24], false);
        assert!(!all.contains(&1));
    }

    #[test]
    fn frobenius21_orbit_lengths() {
        let g = GroupModel::generate(
            "F21",
            Domain::Perm { degree: 7 },
            vec![
                ElemData::Perm(vec![1, 2, 3, 4, 5, 6, 0]),
                ElemData::Perm(vec![0, 2, 4, 6, 1, 3, 5]),
            ],
            Some(21),
        )
        .unwrap();
        let lens: Vec<usize> = curve_orbit_lengths(&g).into_iter().collect();
        assert_eq!(lens, vec![3, 7, 21]);
        assert_eq!(element_orders_present(&g).into_iter().collect::<Vec<_>>(), vec![1, 3, 7]);
    }

    #[test]
    fn cyclic_orbit_lengths_are_divisors() {
        let g = GroupModel::generate(
            "C12",
            Domain::Perm { degree: 12 },
            vec![ElemData::Perm((0..12).map(|i| ((i + 1) % 12) as u16).collect())],
            Some(12),
        )
        .unwrap();
        let lens: Vec<usize> = curve_orbit_lengths(&g).into_iter().collect();
        assert_eq!(lens, vec![1, 2, 3, 4, 6, 12]);
    }
}
