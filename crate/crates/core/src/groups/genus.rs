//! Riemann-Hurwitz genus spectrum: for which g does the group act
//! faithfully on a genus-g curve. A signature (g0; m_1..m_r) contributes
//! through 2g - 2 = |G| (2 g0 - 2 + sum(1 - 1/m_i))
//! and is realized exactly when a generating vector exists: elements x_i of
//! the prescribed orders, together with g0 handle pairs (a_j, b_j), whose
//! product prod [a_j,b_j] prod x_i is the identity and which generate the
//! whole group. The search conjugates the first slot down to class
//! representatives; remaining slots range over full classes and, when
//! periods are present, the last one is forced by the product relation.

use super::model::{ClassData, GroupModel};
use num::integer::Integer;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenusError {
    #[error("generating-vector search for signature ({g0}; {periods:?}) exceeded {cap} tuples")]
    SearchCap { g0: usize, periods: Vec<u32>, cap: u64 },
}

const TUPLE_CAP: u64 = 100_000_000;

/// Candidate (g0, periods, genus) triples from signature arithmetic alone.
fn admissible_signatures(g: &GroupModel, g_max: usize) -> Vec<(usize, Vec<u32>, usize)> {
    let n = g.order() as i64;
    let orders: Vec<u32> = {
        let set: BTreeSet<u32> = (0..g.order() as u32).map(|e| g.elem_order(e)).collect();
        set.into_iter().filter(|&m| m > 1).collect()
    };
    let hi = 2 * g_max as i64 - 2;
    let denom: i64 = orders.iter().fold(1i64, |a, &m| a.lcm(&(m as i64)));
    let mut out = Vec::new();
    let mut g0 = 0usize;
    loop {
        let base = n * (2 * g0 as i64 - 2);
        if base > hi {
            break;
        }
        // depth-first over nondecreasing period tuples; num tracks
        // denom * (2g - 2) accumulated so far
        let mut stack: Vec<(Vec<u32>, i64)> = vec![(Vec::new(), base * denom)];
        while let Some((periods, num)) = stack.pop() {
            if num % denom == 0 {
                let tg2 = num / denom;
                if (-2..=hi).contains(&tg2) && tg2 % 2 == 0 {
                    out.push((g0, periods.clone(), ((tg2 + 2) / 2) as usize));
                }
            }
            let min_m = periods.last().copied().unwrap_or(2);
            for &m in orders.iter().filter(|&&m| m >= min_m) {
                let add = n * (denom - denom / m as i64);
                if num + add > hi * denom {
                    continue;
                }
                let mut p = periods.clone();
                p.push(m);
                stack.push((p, num + add));
            }
        }
        g0 += 1;
    }
    out
}

/// Genus values admissible by signature arithmetic only (no existence
/// search); always a superset of the realized spectrum.
pub fn genus_candidates(g: &GroupModel, g_max: usize) -> BTreeSet<usize> {
    admissible_signatures(g, g_max).into_iter().map(|(_, _, gen)| gen).collect()
}

/// The realized genus spectrum up to g_max.
pub fn genus_spectrum(
    g: &GroupModel,
    cd: &ClassData,
    g_max: usize,
) -> Result<BTreeSet<usize>, GenusError> {
    let mut sigs = admissible_signatures(g, g_max);
    // cheapest searches first so common genera resolve before the wide ones
    sigs.sort_by_key(|(g0, p, _)| (*g0, p.len(), p.clone()));
    let mut out = BTreeSet::new();
    for (g0, periods, genus) in sigs {
        if out.contains(&genus) {
            continue;
        }
        if generating_vector_exists(g, cd, g0, &periods)? {
            out.insert(genus);
        }
    }
    Ok(out)
}

fn order_elements(g: &GroupModel, m: u32) -> Vec<u32> {
    (0..g.order() as u32).filter(|&e| g.elem_order(e) == m).collect()
}

/// Depth-first search for a generating vector of type (g0; periods).
pub fn generating_vector_exists(
    g: &GroupModel,
    cd: &ClassData,
    g0: usize,
    periods: &[u32],
) -> Result<bool, GenusError> {
    let n = g.order() as u32;
    let r = periods.len();
    if g0 == 0 && r == 0 {
        return Ok(g.order() == 1);
    }
    // free slots: the 2*g0 handle entries and, when r >= 1, the periods
    // except the last (which the product relation forces)
    let mut slots: Vec<Vec<u32>> = Vec::new();
    let full: Vec<u32> = (0..n).collect();
    for _ in 0..2 * g0 {
        slots.push(full.clone());
    }
    for &m in &periods[..r.saturating_sub(1)] {
        slots.push(order_elements(g, m));
    }
    // conjugating a solution moves its first entry within its class, so the
    // first slot only needs class representatives
    if g0 > 0 {
        slots[0] = (0..cd.num_classes()).map(|c| cd.reps[c]).collect();
    } else {
        let m0 = periods[0];
        slots[0] = (0..cd.num_classes())
            .filter(|&c| cd.orders[c] == m0)
            .map(|c| cd.reps[c])
            .collect();
    }
    let budget: u64 = slots.iter().map(|s| s.len().max(1) as u64).product();
    if budget > TUPLE_CAP {
        return Err(GenusError::SearchCap { g0, periods: periods.to_vec(), cap: TUPLE_CAP });
    }
    let forced_period = if r >= 1 { Some(*periods.last().unwrap()) } else { None };
    let mut chosen: Vec<u32> = Vec::with_capacity(slots.len() + 1);
    Ok(dfs(g, g0, forced_period, &slots, &mut chosen))
}

fn dfs(
    g: &GroupModel,
    g0: usize,
    forced_period: Option<u32>,
    slots: &[Vec<u32>],
    chosen: &mut Vec<u32>,
) -> bool {
    if chosen.len() == slots.len() {
        let residue = relation_residue(g, g0, chosen);
        return match forced_period {
            Some(m) => {
                // last period entry must be residue^{-1} of prescribed order
                let x = g.inv(residue);
                if g.elem_order(x) != m {
                    return false;
                }
                chosen.push(x);
                let ok = generates(g, chosen);
                chosen.pop();
                ok
            }
            // pure handles: the relation must already close
            None => residue == 0 && generates(g, chosen),
        };
    }
    for &cand in &slots[chosen.len()] {
        chosen.push(cand);
        if dfs(g, g0, forced_period, slots, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// prod [a_i, b_i] * prod x_j over the chosen prefix.
fn relation_residue(g: &GroupModel, g0: usize, chosen: &[u32]) -> u32 {
    let mut prod = 0u32;
    for i in 0..g0 {
        let (a, b) = (chosen[2 * i], chosen[2 * i + 1]);
        let comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        prod = g.mul(prod, comm);
    }
    for &x in &chosen[2 * g0..] {
        prod = g.mul(prod, x);
    }
    prod
}

fn generates(g: &GroupModel, tuple: &[u32]) -> bool {
    let mut gens: Vec<u32> = tuple.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut count = 1usize;
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                if count == g.order() {
                    return true;
                }
                stack.push(y);
            }
        }
    }
    count == g.order()
}

/// Smallest g >= 2 satisfying the Hurwitz bound |Aut| <= 84(g-1).
pub fn hurwitz_min_genus(order: usize) -> usize {
    let q = order.div_ceil(84).max(1);
    q + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::elem::{Domain, ElemData};

    fn c2() -> GroupModel {
        GroupModel::generate(
            "C2",
            Domain::Perm { degree: 2 },
            vec![ElemData::Perm(vec![1, 0])],
            Some(2),
        )
        .unwrap()
    }

    #[test]
    fn c2_spectrum_is_everything() {
        let g = c2();
        let cd = ClassData::new(&g);
        let s = genus_spectrum(&g, &cd, 5).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 5]);
        assert!(genus_candidates(&g, 5).is_superset(&genus_spectrum(&g, &cd, 5).unwrap()));
    }

    #[test]
    fn c3_realizes_each_small_genus() {
        let g = GroupModel::generate(
            "C3",
            Domain::Perm { degree: 3 },
            vec![ElemData::Perm(vec![1, 2, 0])],
            Some(3),
        )
        .unwrap();
        let cd = ClassData::new(&g);
        let s = genus_spectrum(&g, &cd, 4).unwrap();
        // g=0 via (0;3,3), g=1 via the torus, g=2 via (0;3,3,3,3) with
        // x, x, x^2, x^2, g=3 via five period-3 points, g=4 via six
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn hurwitz_thresholds() {
        assert_eq!(hurwitz_min_genus(168), 3);
        assert_eq!(hurwitz_min_genus(504), 7);
        assert_eq!(hurwitz_min_genus(2520), 31);
        assert_eq!(hurwitz_min_genus(25920), 310);
        assert_eq!(hurwitz_min_genus(2), 2);
        assert_eq!(hurwitz_min_genus(84), 2);
        assert_eq!(hurwitz_min_genus(85), 3);
    }

    #[test]
    fn s3_small_genera() {
        let g = GroupModel::generate(
            "S3",
            Domain::Perm { degree: 3 },
            vec![ElemData::Perm(vec![1, 0, 2]), ElemData::Perm(vec![1, 2, 0])],
            Some(6),
        )
        .unwrap();
        let cd = ClassData::new(&g);
        let s = genus_spectrum(&g, &cd, 4).unwrap();
        // (0;2,2,3) closes at genus 0; (0;2,2,2,2) with t,t,t',t' covers
        // genus 1 even though no commuting pair generates; (0;2,2,3,3)
        // reaches genus 2
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    }
}
