//! Complete subgroup lattice of a modest group, organised into conjugacy
//! classes of subgroups. Every subgroup is the join of its cyclic
//! subgroups, so iterating joins of the cyclic ones against everything found
//! so far reaches a fixpoint that is the whole lattice. Intended for orders
//! up to about a thousand; the verification targets sit well inside that.

use super::model::{GroupError, GroupModel};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Full lattice enumeration is only attempted up to this order.
pub const LATTICE_MAX_ORDER: usize = 1000;

/// One conjugacy class of subgroups.
pub struct SubgroupClass {
    /// Sorted element ids of a representative.
    pub rep: Vec<u32>,
    pub order: usize,
    pub index: usize,
    /// Number of conjugates, equal to the index of the normalizer.
    pub count: usize,
    pub normalizer_order: usize,
    pub is_normal: bool,
    pub is_maximal: bool,
    /// Structure description, e.g. "C7:C3" or "D4"; `order<N>` when the
    /// recognizer has no name for it.
    pub structure: String,
    pub abelian: bool,
}

/// Closure of a generating set inside the model, as a sorted id vector.
pub fn span(g: &GroupModel, gens: &[u32]) -> Vec<u32> {
    let mut seen = HashSet::new();
    seen.insert(0u32);
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut v: Vec<u32> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

fn contains_sorted(hay: &[u32], needle: &[u32]) -> bool {
    needle.iter().all(|x| hay.binary_search(x).is_ok())
}

/// All subgroups, as sorted id vectors paired with a small generating set.
fn all_subgroups(g: &GroupModel) -> Vec<(Vec<u32>, Vec<u32>)> {
    let n = g.order() as u32;
    // cyclic subgroups, deduplicated
    let mut cyclic: HashMap<Vec<u32>, u32> = HashMap::new();
    for a in 1..n {
        let mut pows = vec![0u32];
        let mut x = a;
        while x != 0 {
            pows.push(x);
            x = g.mul(x, a);
        }
        pows.sort_unstable();
        pows.dedup();
        cyclic.entry(pows).or_insert(a);
    }
    let cyclic: Vec<(Vec<u32>, u32)> = {
        let mut v: Vec<_> = cyclic.into_iter().collect();
        v.sort();
        v
    };

    let trivial = vec![0u32];
    let mut known: HashSet<Vec<u32>> = HashSet::new();
    known.insert(trivial.clone());
    let mut out: Vec<(Vec<u32>, Vec<u32>)> = vec![(trivial, Vec::new())];
    let mut queue: Vec<usize> = Vec::new();
    for (set, gen) in &cyclic {
        if known.insert(set.clone()) {
            out.push((set.clone(), vec![*gen]));
            queue.push(out.len() - 1);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let idx = queue[head];
        head += 1;
        if out[idx].0.len() == g.order() {
            continue;
        }
        for (cset, cgen) in &cyclic {
            if contains_sorted(&out[idx].0, cset) {
                continue;
            }
            let mut gens = out[idx].1.clone();
            gens.push(*cgen);
            let joined = span(g, &gens);
            if known.insert(joined.clone()) {
                out.push((joined, gens));
                queue.push(out.len() - 1);
            }
        }
    }
    out
}

/// Element-order multiset as (order, multiplicity) pairs.
fn order_multiset(g: &GroupModel, set: &[u32]) -> Vec<(u32, usize)> {
    let mut m: HashMap<u32, usize> = HashMap::new();
    for &x in set {
        *m.entry(g.elem_order(x)).or_insert(0) += 1;
    }
    let mut v: Vec<_> = m.into_iter().collect();
    v.sort_unstable();
    v
}

fn is_abelian(g: &GroupModel, set: &[u32]) -> bool {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// Derived subgroup of the given subgroup as an element set.
fn derived(g: &GroupModel, set: &[u32]) -> Vec<u32> {
    let mut comms = BTreeSet::new();
    for &a in set {
        for &b in set {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            comms.insert(c);
        }
    }
    let gens: Vec<u32> = comms.into_iter().collect();
    span(g, &gens)
}

/// Isomorphism fingerprint used for structure naming: order, element-order
/// multiset, abelianization order, and the order multiset of the derived
/// subgroup. Distinguishes every pair of groups this crate needs to tell
/// apart (it is not a general isomorphism test).
#[derive(PartialEq, Eq, Hash, Debug, Clone)]
pub struct IsoTag {
    pub order: usize,
    pub orders: Vec<(u32, usize)>,
    pub ab_order: usize,
    pub derived_orders: Vec<(u32, usize)>,
}

pub fn iso_tag(g: &GroupModel, set: &[u32]) -> IsoTag {
    let d = derived(g, set);
    IsoTag {
        order: set.len(),
        orders: order_multiset(g, set),
        ab_order: set.len() / d.len(),
        derived_orders: order_multiset(g, &d),
    }
}

fn cyclic_tag(n: usize) -> IsoTag {
    let mut m: HashMap<u32, usize> = HashMap::new();
    for k in 0..n {
        let o = n / num::integer::gcd(n, k) as usize;
        *m.entry(o as u32).or_insert(0) += 1;
    }
    let mut orders: Vec<_> = m.into_iter().collect();
    orders.sort_unstable();
    IsoTag { order: n, orders, ab_order: n, derived_orders: vec![(1, 1)] }
}

/// Reference fingerprints for the structures that actually occur in the
/// lattices this crate certifies.
fn reference_tags() -> Vec<(IsoTag, String)> {
    use super::elem::{Domain, ElemData};
    let mut out = Vec::new();
    for n in 1..=24usize {
        out.push((cyclic_tag(n), format!("C{}", n)));
    }
    let mut named = |name: &str, degree: usize, gens: Vec<Vec<u16>>| {
        let g = GroupModel::generate(
            name,
            Domain::Perm { degree },
            gens.into_iter().map(ElemData::Perm).collect(),
            None,
        )
        .expect("reference group generates");
        let all: Vec<u32> = (0..g.order() as u32).collect();
        out.push((iso_tag(&g, &all), name.to_string()));
    };
    named("C2xC2", 4, vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]]);
    named("C2xC2xC2", 6, vec![vec![1, 0, 2, 3, 4, 5], vec![0, 1, 3, 2, 4, 5], vec![0, 1, 2, 3, 5, 4]]);
    named("C2xC4", 6, vec![vec![1, 0, 2, 3, 4, 5], vec![0, 1, 3, 4, 5, 2]]);
    named("C3xC3", 6, vec![vec![1, 2, 0, 3, 4, 5], vec![0, 1, 2, 4, 5, 3]]);
    named("S3", 3, vec![vec![1, 0, 2], vec![1, 2, 0]]);
    named("D4", 4, vec![vec![1, 2, 3, 0], vec![1, 0, 3, 2]]);
    named("D5", 5, vec![vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]);
    named("D6", 6, vec![vec![1, 2, 3, 4, 5, 0], vec![0, 5, 4, 3, 2, 1]]);
    named("D7", 7, vec![vec![1, 2, 3, 4, 5, 6, 0], vec![0, 6, 5, 4, 3, 2, 1]]);
    named("D9", 9, vec![
        vec![1, 2, 3, 4, 5, 6, 7, 8, 0],
        vec![0, 8, 7, 6, 5, 4, 3, 2, 1],
    ]);
    // Q8 in its regular action, points 1,i,j,k,-1,-i,-j,-k; generators are
    // left multiplication by i and by j
    named("Q8", 8, vec![vec![1, 4, 3, 6, 5, 0, 7, 2], vec![2, 7, 4, 1, 6, 3, 0, 5]]);
    named("A4", 4, vec![vec![1, 0, 3, 2], vec![1, 2, 0, 3]]);
    named("S4", 4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]);
    named("A5", 5, vec![vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]);
    named("C7:C3", 7, vec![vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]]);
    named("C7:C6", 7, vec![vec![1, 2, 3, 4, 5, 6, 0], vec![0, 3, 6, 2, 5, 1, 4]]);
    named("C2^3:C7", 8, vec![
        // translation by 1 and multiplication by a generator of F8*
        vec![1, 0, 3, 2, 5, 4, 7, 6],
        vec![0, 2, 4, 6, 3, 1, 7, 5],
    ]);
    named("C3xS3", 9, vec![
        vec![1, 2, 0, 3, 4, 5, 6, 7, 8],
        vec![0, 1, 2, 4, 3, 5, 6, 7, 8],
        vec![0, 1, 2, 4, 5, 3, 6, 7, 8],
    ]);
    out
}

fn structure_name(tag: &IsoTag, refs: &[(IsoTag, String)]) -> String {
    for (t, name) in refs {
        if t == tag {
            return name.clone();
        }
    }
    format!("order{}", tag.order)
}

/// Conjugacy classes of subgroups of order at least `min_order`, sorted by
/// (order, count, representative). Enumeration is always complete (the join
/// fixpoint reaches every subgroup); `min_order` filters the report.
/// Normalizer orders are recomputed by direct scan and checked against the
/// orbit size, so the two routes confirm each other.
pub fn subgroup_classes(
    g: &GroupModel,
    min_order: usize,
) -> Result<Vec<SubgroupClass>, GroupError> {
    if g.order() > LATTICE_MAX_ORDER {
        return Err(GroupError::TooLarge(LATTICE_MAX_ORDER));
    }
    let subs = all_subgroups(g);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut classes: Vec<(Vec<u32>, usize)> = Vec::new(); // rep, orbit size
    let mut orbits: Vec<Vec<Vec<u32>>> = Vec::new();
    for (set, _) in &subs {
        if seen.contains(set) {
            continue;
        }
        // conjugation orbit
        let mut orbit: Vec<Vec<u32>> = vec![set.clone()];
        let mut inorbit: HashSet<Vec<u32>> = orbit.iter().cloned().collect();
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            head += 1;
            for &gen in &g.gens {
                let mut img: Vec<u32> = cur.iter().map(|&x| g.conj(gen, x)).collect();
                img.sort_unstable();
                if inorbit.insert(img.clone()) {
                    orbit.push(img);
                }
            }
        }
        for s in &orbit {
            seen.insert(s.clone());
        }
        let rep = orbit.iter().min().unwrap().clone();
        classes.push((rep, orbit.len()));
        orbits.push(orbit);
    }
    let mut idx: Vec<usize> = (0..classes.len()).collect();
    idx.sort_by(|&a, &b| {
        (classes[a].0.len(), classes[a].1, &classes[a].0)
            .cmp(&(classes[b].0.len(), classes[b].1, &classes[b].0))
    });
    let refs = reference_tags();
    let n = g.order();
    let mut out = Vec::new();
    for &i in &idx {
        let (rep, count) = (&classes[i].0, classes[i].1);
        // normalizer by scan over the whole group
        let mut norm = 0usize;
        for x in 0..n as u32 {
            let mut img: Vec<u32> = rep.iter().map(|&y| g.conj(x, y)).collect();
            img.sort_unstable();
            if &img == rep {
                norm += 1;
            }
        }
        assert_eq!(norm * count, n, "orbit size must equal normalizer index");
        let tag = iso_tag(g, rep);
        out.push(SubgroupClass {
            rep: rep.clone(),
            order: rep.len(),
            index: n / rep.len(),
            count,
            normalizer_order: norm,
            is_normal: count == 1,
            is_maximal: false,
            structure: structure_name(&tag, &refs),
            abelian: is_abelian(g, rep),
        });
    }
    // maximality: H < G proper is maximal when no proper K strictly between,
    // up to conjugacy (checked against every conjugate of every larger class)
    for i in 0..out.len() {
        if out[i].order == n {
            continue;
        }
        let h = &out[i].rep;
        let mut covered = false;
        'outer: for (j, &cj) in idx.iter().enumerate() {
            if out[j].order == n || out[j].order <= out[i].order || out[j].order % out[i].order != 0
            {
                continue;
            }
            for conj in &orbits[cj] {
                if contains_sorted(conj, h) {
                    covered = true;
                    break 'outer;
                }
            }
        }
        out[i].is_maximal = !covered;
    }
    // lattice class equation: orbit sizes account for every subgroup found
    let accounted: usize = out.iter().map(|c| c.count).sum();
    assert_eq!(accounted, subs.len(), "subgroup orbits must partition the lattice");
    out.retain(|c| c.order >= min_order);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::elem::{Domain, ElemData};

    fn s4() -> GroupModel {
        GroupModel::generate(
            "S4",
            Domain::Perm { degree: 4 },
            vec![ElemData::Perm(vec![1, 0, 2, 3]), ElemData::Perm(vec![1, 2, 3, 0])],
            Some(24),
        )
        .unwrap()
    }

    #[test]
    fn s4_lattice() {
        let g = s4();
        let classes = subgroup_classes(&g, 1).unwrap();
        // S4 has 11 conjugacy classes of subgroups
        assert_eq!(classes.len(), 11);
        let total: usize = classes.iter().map(|c| c.count).sum();
        assert_eq!(total, 30);
        let names: Vec<(&str, usize, usize)> =
            classes.iter().map(|c| (c.structure.as_str(), c.order, c.count)).collect();
        assert_eq!(
            names,
            vec![
                ("C1", 1, 1),
                ("C2", 2, 3),
                ("C2", 2, 6),
                ("C3", 3, 4),
                ("C2xC2", 4, 1),
                ("C2xC2", 4, 3),
                ("C4", 4, 3),
                ("S3", 6, 4),
                ("D4", 8, 3),
                ("A4", 12, 1),
                ("S4", 24, 1),
            ]
        );
        for c in &classes {
            assert_eq!(c.normalizer_order * c.count, 24);
        }
        let maximal: Vec<&str> = classes
            .iter()
            .filter(|c| c.is_maximal && c.order < 24)
            .map(|c| c.structure.as_str())
            .collect();
        assert_eq!(maximal, vec!["S3", "D4", "A4"]);
        let normal: Vec<usize> =
            classes.iter().filter(|c| c.is_normal).map(|c| c.order).collect();
        assert_eq!(normal, vec![1, 4, 12, 24]);
    }

    #[test]
    fn q8_is_recognized() {
        // quaternion group inside the regular representation
        let g = GroupModel::generate(
            "Q8",
            Domain::Perm { degree: 8 },
            vec![
                ElemData::Perm(vec![1, 4, 3, 6, 5, 0, 7, 2]),
                ElemData::Perm(vec![2, 7, 4, 1, 6, 3, 0, 5]),
            ],
            Some(8),
        )
        .unwrap();
        let all: Vec<u32> = (0..8).collect();
        let tag = iso_tag(&g, &all);
        // one element of order 2, six of order 4
        assert_eq!(tag.orders, vec![(1, 1), (2, 1), (4, 6)]);
        assert_eq!(tag.ab_order, 4);
        let refs = reference_tags();
        assert_eq!(structure_name(&tag, &refs), "Q8");
    }
}
