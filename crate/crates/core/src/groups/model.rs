//! Concrete group models: the full element list of a finite group generated
//! by explicit permutations or matrices, with fast multiplication through a
//! dense table when the order permits, and conjugacy data on top.
//!
//! Everything downstream (subgroup lattices, character tables, genus
//! spectra) works through element indices into one of these models, so the
//! heavy arithmetic of the underlying domain is paid once during closure.

use super::elem::{Domain, ElemData, ElemError};
use std::collections::HashMap;
use thiserror::Error;

/// Hard ceiling on closure size; generation aborts beyond it.
pub const MAX_ORDER: usize = 1_000_000;

/// Dense multiplication tables are only built up to this order; beyond it
/// products go through element hashing.
const MULT_TABLE_MAX: usize = 4096;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    TooLarge(usize),
    #[error("generated order {got} does not match declared order {want}")]
    WrongOrder { got: usize, want: usize },
    #[error("generator invalid: {0}")]
    BadGenerator(#[from] ElemError),
    #[error("no generators given")]
    NoGenerators,
}

pub struct GroupModel {
    pub name: String,
    pub domain: Domain,
    elems: Vec<ElemData>,
    index: HashMap<ElemData, u32>,
    pub gens: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl GroupModel {
    /// Breadth-first closure of the generators. Element 0 is the identity
    /// and generator products are visited in a fixed order, so indices are
    /// reproducible for a given input.
    pub fn generate(
        name: &str,
        domain: Domain,
        gens: Vec<ElemData>,
        expected_order: Option<usize>,
    ) -> Result<GroupModel, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for g in &gens {
            domain.validate(g)?;
        }
        let mut elems = vec![domain.identity()];
        let mut index = HashMap::new();
        index.insert(elems[0].clone(), 0u32);
        let mut gen_ids = Vec::new();
        for g in &gens {
            let next = elems.len() as u32;
            let id = *index.entry(g.clone()).or_insert_with(|| {
                elems.push(g.clone());
                next
            });
            gen_ids.push(id);
        }
        let mut head = 0usize;
        while head < elems.len() {
            let cur = elems[head].clone();
            for g in &gens {
                let prod = domain.compose(&cur, g);
                if !index.contains_key(&prod) {
                    if elems.len() >= MAX_ORDER {
                        return Err(GroupError::TooLarge(MAX_ORDER));
                    }
                    index.insert(prod.clone(), elems.len() as u32);
                    elems.push(prod);
                }
            }
            head += 1;
        }
        if let Some(want) = expected_order {
            if elems.len() != want {
                return Err(GroupError::WrongOrder { got: elems.len(), want });
            }
        }
        let n = elems.len();
        let mut inv = vec![0u32; n];
        for (i, e) in elems.iter().enumerate() {
            let ei = domain.inverse(e).expect("group element has an inverse");
            inv[i] = index[&ei.canonical(&domain)];
        }
        let mut model = GroupModel {
            name: name.to_string(),
            domain,
            elems,
            index,
            gens: gen_ids,
            inv,
            orders: Vec::new(),
            table: None,
        };
        // cyclotomic matrix products are orders of magnitude costlier than
        // index lookups, so an n^2 table would dominate the build time there
        let want_table = n <= MULT_TABLE_MAX && !matches!(model.domain, Domain::MatCyc { .. });
        if want_table {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let p = model.domain.compose(&model.elems[a], &model.elems[b]);
                    table[a * n + b] = model.index[&p];
                }
            }
            model.table = Some(table);
        }
        let mut orders = vec![0u32; n];
        for a in 0..n as u32 {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = model.mul(x, a);
                k += 1;
            }
            orders[a as usize] = k;
        }
        model.orders = orders;
        Ok(model)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: u32) -> &ElemData {
        &self.elems[i as usize]
    }

    pub fn id_of(&self, e: &ElemData) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.table {
            t[a as usize * self.elems.len() + b as usize]
        } else {
            let p = self.domain.compose(&self.elems[a as usize], &self.elems[b as usize]);
            self.index[&p]
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn elem_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u64, |acc, &o| num::integer::lcm(acc, o as u64)) as u32
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let o = self.orders[a as usize] as u64;
        k %= o;
        let mut acc = 0u32;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }
}

impl ElemData {
    /// Matrix entries produced by inversion may sit at a sub-conductor;
    /// pull them back to the domain conductor so hashing agrees.
    fn canonical(self, domain: &Domain) -> ElemData {
        match (domain, self) {
            (Domain::MatCyc { conductor, .. }, ElemData::MatCyc(v)) => {
                ElemData::MatCyc(v.into_iter().map(|c| c.raised_to(*conductor)).collect())
            }
            (_, e) => e,
        }
    }
}

/// Conjugacy classes of a model, in a deterministic order: sorted by
/// (element order, class size, smallest member index). Powers of class
/// representatives are tracked per class, which is what character-theoretic
/// consumers need.
pub struct ClassData {
    pub class_of: Vec<usize>,
    pub reps: Vec<u32>,
    pub sizes: Vec<usize>,
    pub orders: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    pub inverse_class: Vec<usize>,
}

impl ClassData {
    pub fn new(g: &GroupModel) -> ClassData {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != usize::MAX {
                continue;
            }
            let cid = raw.len();
            class_of[start as usize] = cid;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &gen in &g.gens {
                    let y = g.conj(gen, x);
                    if class_of[y as usize] == usize::MAX {
                        class_of[y as usize] = cid;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (g.elem_order(raw[c][0]), raw[c].len(), raw[c][0]));
        let mut members = Vec::with_capacity(raw.len());
        let mut relabel = vec![0usize; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
            members.push(std::mem::take(&mut raw[old]));
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c];
        }
        let reps: Vec<u32> = members.iter().map(|m| m[0]).collect();
        let sizes: Vec<usize> = members.iter().map(|m| m.len()).collect();
        let orders: Vec<u32> = reps.iter().map(|&r| g.elem_order(r)).collect();
        let inverse_class: Vec<usize> = reps.iter().map(|&r| class_of[g.inv(r) as usize]).collect();
        ClassData { class_of, reps, sizes, orders, members, inverse_class }
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    /// Class of rep^k, for the power maps printed alongside character tables.
    pub fn power_class(&self, g: &GroupModel, class: usize, k: u64) -> usize {
        self.class_of[g.pow(self.reps[class], k) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupModel {
        GroupModel::generate(
            "S3",
            Domain::Perm { degree: 3 },
            vec![ElemData::Perm(vec![1, 0, 2]), ElemData::Perm(vec![1, 2, 0])],
            Some(6),
        )
        .unwrap()
    }

    #[test]
    fn s3_basics() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let mut orders: Vec<u32> = (0..6).map(|i| g.elem_order(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
        for a in 0..6u32 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6u32 {
                for c in 0..6u32 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let cd = ClassData::new(&g);
        assert_eq!(cd.sizes, vec![1, 3, 2]);
        assert_eq!(cd.orders, vec![1, 2, 3]);
        assert_eq!(cd.inverse_class, vec![0, 1, 2]);
        // class equation
        let total: usize = cd.sizes.iter().sum();
        assert_eq!(total, 6);
        // squaring a 2-element lands on the identity class
        assert_eq!(cd.power_class(&g, 1, 2), 0);
        assert_eq!(cd.power_class(&g, 2, 2), 2);
    }

    #[test]
    fn wrong_declared_order_is_refused() {
        let r = GroupModel::generate(
            "bad",
            Domain::Perm { degree: 3 },
            vec![ElemData::Perm(vec![1, 0, 2])],
            Some(3),
        );
        assert!(matches!(r, Err(GroupError::WrongOrder { got: 2, want: 3 })));
    }

    #[test]
    fn frobenius21_classes() {
        // affine maps x -> ax+b on F_7 with a in {1,2,4}
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
        let cd = ClassData::new(&g);
        assert_eq!(cd.num_classes(), 5);
        assert_eq!(cd.orders, vec![1, 3, 3, 7, 7]);
        assert_eq!(cd.sizes, vec![1, 7, 7, 3, 3]);
        // the two 7-classes are swapped by inversion, the 3-classes too
        assert_eq!(cd.inverse_class[3], 4);
        assert_eq!(cd.inverse_class[1], 2);
    }
}
