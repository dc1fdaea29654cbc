//! Orbit configurations of index-2 singular points under the 168-element
//! simple group, and the two enumerations built on them: the admissible
//! singular-locus shapes, and the numerics with empty anticanonical system.
//!
//! The vocabulary is small. A configuration is a multiset of orbits; each
//! orbit has a length (a transitive action size of the group), a reality
//! tag (equal to its own conjugate, or one half of a conjugate pair), and
//! a singularity kind (the half quotient 1/2(1,1,1), or a moderate point
//! of some axial weight, which feeds `axial_weight` half points into the
//! basket per singular point). Admissibility encodes three upstream facts
//! about the group action plus the Riemann-Roch budget:
//!
//! * an order-21 subgroup fixes no real point, so a conjugation-stable
//!   orbit of length 1 is impossible;
//! * a singular point fixed by an order-21 subgroup must be the half
//!   quotient, so lengths 1 and 8 (whose stabilizers contain one) admit no
//!   moderate points;
//! * the order-21 stabilizer of a length-8 orbit is self-normalizing, so
//!   the orbit has a unique point fixed by it; a conjugation-stable
//!   8-orbit would make that point real and fixed, which the first fact
//!   forbids;
//! * the index-2 Bogomolov-Miyaoka budget: (3/2) x basket length < 24,
//!   so at most 15 basket points in total.
//!
//! Everything else (which axial weights survive, which mixtures are
//! possible, the familiar six-shape table) falls out of the enumeration
//! rather than being written down.

use super::basket::Basket;
use super::chi::{
    dim_pluri_anticanonical, index2_dim_anticanonical, index2_dim_double, FanoNumerics,
};
use crate::cyclo::{rat, rat_int, Rat};
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// Orbit lengths realizable by a transitive action of the group: subgroup
/// indices up to 42, plus the trivial orbit. Cross-checked in the tests
/// against the subgroup lattice computation.
pub const TRANSITIVE_LENGTHS: [u32; 8] = [1, 7, 8, 14, 21, 24, 28, 42];

/// Largest index-2 basket compatible with the strict bound
/// sum(r - 1/r) = (3/2) n < 24.
pub const MAX_INDEX2_BASKET: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointKind {
    /// Cyclic quotient 1/2(1,1,1): one basket point per singular point.
    HalfQuotient,
    /// Moderate index-2 point: `axial_weight` basket points per singular
    /// point, weight at least 2 (weight 1 is just a cyclic quotient).
    Moderate { axial_weight: u32 },
}

impl PointKind {
    fn basket_multiplicity(&self) -> u32 {
        match self {
            PointKind::HalfQuotient => 1,
            PointKind::Moderate { axial_weight } => *axial_weight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    /// The orbit equals its own complex conjugate.
    RealStable,
    /// The orbit and its conjugate are disjoint; the entry counts both.
    ConjugatePair,
}

/// One group orbit of singular points (together with its conjugate when
/// the two differ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitSpec {
    pub length: u32,
    pub symmetry: Symmetry,
    pub kind: PointKind,
}

impl OrbitSpec {
    /// Singular points contributed to the variety.
    pub fn num_points(&self) -> u32 {
        match self.symmetry {
            Symmetry::RealStable => self.length,
            Symmetry::ConjugatePair => 2 * self.length,
        }
    }

    /// Half points contributed to the basket.
    pub fn basket_points(&self) -> u32 {
        self.num_points() * self.kind.basket_multiplicity()
    }
}

impl fmt::Display for OrbitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PointKind::HalfQuotient => "half-quotient".to_string(),
            PointKind::Moderate { axial_weight } => {
                format!("moderate aw {}", axial_weight)
            }
        };
        match (self.symmetry, self.length) {
            (Symmetry::RealStable, 1) => write!(f, "real fixed point ({kind})"),
            (Symmetry::RealStable, n) => write!(f, "real {n}-orbit ({kind})"),
            (Symmetry::ConjugatePair, 1) => write!(f, "conjugate pair of fixed points ({kind})"),
            (Symmetry::ConjugatePair, n) => write!(f, "conjugate pair of {n}-orbits ({kind})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Length is not a transitive action size of the group.
    UnrealizableLength(u32),
    /// A conjugation-stable fixed point would be a real point fixed by an
    /// order-21 subgroup.
    RealFixedPoint,
    /// Orbit lengths 1 and 8 have stabilizers containing an order-21
    /// subgroup, which forces the half-quotient type on singular points.
    ModerateForbiddenByStabilizer(u32),
    /// Moderate axial weight below 2 describes a cyclic quotient, not a
    /// moderate point.
    AxialWeightTooSmall(u32),
    /// A conjugation-stable 8-orbit contains a unique point fixed by the
    /// order-21 stabilizer, which would then be real and fixed.
    RealStableEightOrbit,
    /// Total basket breaks (3/2) n < 24.
    BasketBudget(u32),
}

/// A multiset of orbits describing the whole singular locus. Orbits are
/// kept sorted so configurations compare by content.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaConfig {
    orbits: Vec<OrbitSpec>,
}

impl SigmaConfig {
    pub fn new(mut orbits: Vec<OrbitSpec>) -> Self {
        orbits.sort();
        SigmaConfig { orbits }
    }

    pub fn orbits(&self) -> &[OrbitSpec] {
        &self.orbits
    }

    /// Total number of singular points, |Sigma|.
    pub fn num_points(&self) -> u32 {
        self.orbits.iter().map(|o| o.num_points()).sum()
    }

    /// Total basket length.
    pub fn basket_len(&self) -> u32 {
        self.orbits.iter().map(|o| o.basket_points()).sum()
    }

    /// The basket: all index-2 half points here.
    pub fn basket(&self) -> Basket {
        Basket::halves(self.basket_len() as usize)
    }

    pub fn has_moderate(&self) -> bool {
        self.orbits
            .iter()
            .any(|o| matches!(o.kind, PointKind::Moderate { .. }))
    }

    /// All rule violations; empty means admissible.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for o in &self.orbits {
            if !TRANSITIVE_LENGTHS.contains(&o.length) {
                out.push(Violation::UnrealizableLength(o.length));
            }
            if o.length == 1 && o.symmetry == Symmetry::RealStable {
                out.push(Violation::RealFixedPoint);
            }
            if o.length == 8 && o.symmetry == Symmetry::RealStable {
                out.push(Violation::RealStableEightOrbit);
            }
            if let PointKind::Moderate { axial_weight } = o.kind {
                if axial_weight < 2 {
                    out.push(Violation::AxialWeightTooSmall(axial_weight));
                }
                if o.length == 1 || o.length == 8 {
                    out.push(Violation::ModerateForbiddenByStabilizer(o.length));
                }
            }
        }
        let basket = self.basket_len();
        if basket > MAX_INDEX2_BASKET {
            out.push(Violation::BasketBudget(basket));
        }
        out.dedup();
        out
    }

    pub fn is_admissible(&self) -> bool {
        !self.orbits.is_empty() && self.violations().is_empty()
    }

    /// Which of the six recurring shapes this configuration has, if any.
    pub fn shape(&self) -> Option<ConfigShape> {
        if !self.is_admissible() {
            return None;
        }
        let mut pairs = 0u32;
        let mut real7 = 0u32;
        let mut conj7 = 0u32;
        let mut real14 = 0u32;
        let mut moderate7 = 0u32;
        for o in &self.orbits {
            match (o.length, o.symmetry, o.kind) {
                (1, Symmetry::ConjugatePair, PointKind::HalfQuotient) => pairs += 1,
                (7, Symmetry::RealStable, PointKind::HalfQuotient) => real7 += 1,
                (7, Symmetry::ConjugatePair, PointKind::HalfQuotient) => conj7 += 1,
                (14, Symmetry::RealStable, PointKind::HalfQuotient) => real14 += 1,
                (7, Symmetry::RealStable, PointKind::Moderate { axial_weight: 2 }) => {
                    moderate7 += 1
                }
                _ => return None,
            }
        }
        match (moderate7, pairs, real7, conj7, real14) {
            (1, 0, 0, 0, 0) => Some(ConfigShape::ModerateSevenOrbit),
            (0, k, 0, 0, 0) if k >= 1 => Some(ConfigShape::FixedPairs { pairs: k }),
            (0, k, 1, 0, 0) => Some(ConfigShape::SevenOrbitWithPairs { pairs: k }),
            (0, 0, 2, 0, 0) => Some(ConfigShape::TwoRealSevenOrbits),
            (0, 0, 0, 1, 0) => Some(ConfigShape::ConjugateSevenOrbits),
            (0, 0, 0, 0, 1) => Some(ConfigShape::FourteenOrbit),
            _ => None,
        }
    }
}

impl fmt::Display for SigmaConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.orbits.len() {
            let mut j = i;
            while j < self.orbits.len() && self.orbits[j] == self.orbits[i] {
                j += 1;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{} x ", j - i)?;
            }
            write!(f, "{}", self.orbits[i])?;
            i = j;
        }
        Ok(())
    }
}

/// The six shapes every admissible configuration falls into, in the
/// conventional presentation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConfigShape {
    /// Real 7-orbit of moderate points of axial weight 2.
    ModerateSevenOrbit,
    /// k conjugate pairs of fixed half quotients, 1 <= k <= 7.
    FixedPairs { pairs: u32 },
    /// Real 7-orbit of half quotients plus k fixed pairs, 0 <= k <= 4.
    SevenOrbitWithPairs { pairs: u32 },
    /// Two real 7-orbits of half quotients.
    TwoRealSevenOrbits,
    /// A conjugate pair of 7-orbits of half quotients.
    ConjugateSevenOrbits,
    /// A single 14-orbit of half quotients.
    FourteenOrbit,
}

impl ConfigShape {
    /// Presentation row this shape belongs to, 1 through 6.
    pub fn row(&self) -> usize {
        match self {
            ConfigShape::ModerateSevenOrbit => 1,
            ConfigShape::FixedPairs { .. } => 2,
            ConfigShape::SevenOrbitWithPairs { .. } => 3,
            ConfigShape::TwoRealSevenOrbits => 4,
            ConfigShape::ConjugateSevenOrbits => 5,
            ConfigShape::FourteenOrbit => 6,
        }
    }
}

/// Every admissible configuration: multisets over the orbit vocabulary
/// whose basket fits the budget. The expansion of the six shapes, with
/// every k spelled out, is exactly this list.
pub fn enumerate_sigma_configs() -> Vec<SigmaConfig> {
    let mut vocab = Vec::new();
    for &length in &TRANSITIVE_LENGTHS {
        for symmetry in [Symmetry::RealStable, Symmetry::ConjugatePair] {
            for kind in [
                PointKind::HalfQuotient,
                PointKind::Moderate { axial_weight: 2 },
                PointKind::Moderate { axial_weight: 3 },
            ] {
                let spec = OrbitSpec { length, symmetry, kind };
                // keep only specs that are free of orbit-level violations
                // and could ever fit the budget
                if SigmaConfig::new(vec![spec]).is_admissible() {
                    vocab.push(spec);
                }
            }
        }
    }
    let mut found = BTreeSet::new();
    let mut current = Vec::new();
    fn recurse(
        vocab: &[OrbitSpec],
        start: usize,
        budget_used: u32,
        current: &mut Vec<OrbitSpec>,
        found: &mut BTreeSet<SigmaConfig>,
    ) {
        for i in start..vocab.len() {
            let used = budget_used + vocab[i].basket_points();
            if used > MAX_INDEX2_BASKET {
                continue;
            }
            current.push(vocab[i]);
            found.insert(SigmaConfig::new(current.clone()));
            recurse(vocab, i, used, current, found);
            current.pop();
        }
    }
    recurse(&vocab, 0, 0, &mut current, &mut found);
    found.into_iter().collect()
}

/// One row of the empty-anticanonical enumeration: numerics forced by
/// dim |-K| = -1 on an all-index-2 variety, with the realizing locus
/// shape and the resulting dim |-2K|.
#[derive(Debug, Clone, PartialEq)]
pub struct EmptyAnticanonicalRow {
    /// (-K)^3.
    pub k3: Rat,
    /// |Sigma|, the number of singular points.
    pub num_points: u32,
    /// Whether the points are moderate (otherwise half quotients).
    pub moderate: bool,
    /// Basket length N.
    pub basket_len: u32,
    /// dim |-2K|.
    pub dim_double: i64,
}

/// All (K3, singular locus) pairs on which the anticanonical system is
/// empty: candidates are half-integer degrees against admissible
/// configurations, filtered by dim |-K| = -1 and the Bogomolov-Miyaoka
/// bound, then collapsed to distinct (degree, |Sigma|, kind) rows sorted
/// by (degree, |Sigma|).
pub fn enumerate_empty_anticanonical() -> Vec<EmptyAnticanonicalRow> {
    rows_with_constraint_order(&[0, 1, 2])
}

/// Same enumeration with the three constraints applied in an arbitrary
/// order; the output must not depend on it. Exposed for the stability
/// property test.
pub fn rows_with_constraint_order(order: &[usize]) -> Vec<EmptyAnticanonicalRow> {
    assert_eq!(order.len(), 3);
    let configs = enumerate_sigma_configs();
    // degrees on the half-integer grid; the budget caps baskets at 15, so
    // dim |-K| = -1 cannot hold beyond (-K)^3 = (15 - 12)/2 and the grid
    // is generous
    let grid: Vec<Rat> = (1..=10).map(|t| rat(t, 2)).collect();
    let constraints: [&dyn Fn(&Rat, &SigmaConfig) -> bool; 3] = [
        // anticanonical system empty (integrally equal to -1)
        &|k3, config| {
            index2_dim_anticanonical(k3, config.basket_len() as usize) == -Rat::one()
        },
        // strict Bogomolov-Miyaoka bound on the induced basket
        &|_, config| super::basket::bm_filter(&config.basket()),
        // locus admissible for the group action
        &|_, config| config.is_admissible(),
    ];
    let mut rows: Vec<EmptyAnticanonicalRow> = Vec::new();
    for k3 in &grid {
        for config in &configs {
            if !order.iter().all(|&i| constraints[i](k3, config)) {
                continue;
            }
            let n = config.basket_len();
            let f = FanoNumerics::new(k3.clone(), Basket::halves(n as usize))
                .expect("grid degrees are half-integral");
            let dim_double = dim_pluri_anticanonical(2, &f)
                .expect("index-2 double dimension is integral");
            debug_assert_eq!(rat_int(dim_double), index2_dim_double(k3, n as usize));
            let row = EmptyAnticanonicalRow {
                k3: k3.clone(),
                num_points: config.num_points(),
                moderate: config.has_moderate(),
                basket_len: n,
                dim_double,
            };
            if !rows.contains(&row) {
                rows.push(row);
            }
        }
    }
    rows.sort_by(|a, b| (&a.k3, a.num_points).cmp(&(&b.k3, b.num_points)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{load_bundled_group, subgroup_classes, transitive_action_sizes};

    fn orbit(length: u32, symmetry: Symmetry, kind: PointKind) -> OrbitSpec {
        OrbitSpec { length, symmetry, kind }
    }

    const HQ: PointKind = PointKind::HalfQuotient;
    const MOD2: PointKind = PointKind::Moderate { axial_weight: 2 };

    #[test]
    fn vocabulary_lengths_match_the_group_lattice() {
        let g = load_bundled_group("psl27").unwrap();
        let classes = subgroup_classes(&g, 1).unwrap();
        let mut sizes: Vec<u32> = transitive_action_sizes(&g, &classes, 42)
            .keys()
            .map(|&k| k as u32)
            .collect();
        sizes.push(1);
        sizes.sort();
        assert_eq!(sizes, TRANSITIVE_LENGTHS.to_vec());
    }

    #[test]
    fn the_sixteen_admissible_configurations_group_into_six_shapes() {
        let configs = enumerate_sigma_configs();
        assert_eq!(configs.len(), 16);
        let mut per_row = [0usize; 6];
        for c in &configs {
            let shape = c.shape().expect("every admissible config has a shape");
            per_row[shape.row() - 1] += 1;
        }
        // moderate, pairs k=1..7, 7-orbit plus pairs k=0..4, two real
        // 7-orbits, conjugate 7-orbits, one 14-orbit
        assert_eq!(per_row, [1, 7, 5, 1, 1, 1]);
    }

    #[test]
    fn quotient_point_counts_match_the_expected_set() {
        let mut counts: Vec<u32> = enumerate_sigma_configs()
            .iter()
            .filter(|c| !c.has_moderate())
            .map(|c| c.num_points())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        counts.sort();
        assert_eq!(counts, vec![2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]);
    }

    #[test]
    fn moderate_locus_is_unique_and_has_fourteen_basket_points() {
        let moderates: Vec<_> = enumerate_sigma_configs()
            .into_iter()
            .filter(|c| c.has_moderate())
            .collect();
        assert_eq!(moderates.len(), 1);
        let m = &moderates[0];
        assert_eq!(m.num_points(), 7);
        assert_eq!(m.basket_len(), 14);
        assert_eq!(m.shape(), Some(ConfigShape::ModerateSevenOrbit));
        // adding even one fixed pair would push the basket to 16
        let mut orbits = m.orbits().to_vec();
        orbits.push(orbit(1, Symmetry::ConjugatePair, HQ));
        let crowded = SigmaConfig::new(orbits);
        assert_eq!(crowded.violations(), vec![Violation::BasketBudget(16)]);
    }

    #[test]
    fn rejected_configurations_report_their_violations() {
        // |Sigma| = 9 as a real fixed point plus a real 8-orbit: both
        // orbits break the fixed-point rules
        let c = SigmaConfig::new(vec![
            orbit(1, Symmetry::RealStable, HQ),
            orbit(8, Symmetry::RealStable, HQ),
        ]);
        assert!(!c.is_admissible());
        assert_eq!(
            c.violations(),
            vec![Violation::RealFixedPoint, Violation::RealStableEightOrbit]
        );
        // |Sigma| = 16 as eight fixed pairs: budget only
        let c = SigmaConfig::new(vec![orbit(1, Symmetry::ConjugatePair, HQ); 8]);
        assert_eq!(c.violations(), vec![Violation::BasketBudget(16)]);
        // moderate points on an 8-orbit: stabilizer rule
        let c = SigmaConfig::new(vec![orbit(8, Symmetry::ConjugatePair, MOD2)]);
        assert!(c
            .violations()
            .contains(&Violation::ModerateForbiddenByStabilizer(8)));
        // a 9-orbit does not exist for this group at all
        let c = SigmaConfig::new(vec![orbit(9, Symmetry::RealStable, HQ)]);
        assert!(c.violations().contains(&Violation::UnrealizableLength(9)));
    }

    #[test]
    fn empty_anticanonical_rows_are_the_expected_four() {
        let rows = enumerate_empty_anticanonical();
        let summary: Vec<(Rat, u32, bool, u32, i64)> = rows
            .iter()
            .map(|r| (r.k3.clone(), r.num_points, r.moderate, r.basket_len, r.dim_double))
            .collect();
        assert_eq!(
            summary,
            vec![
                (rat(1, 2), 13, false, 13, 2),
                (rat_int(1), 7, true, 14, 3),
                (rat_int(1), 14, false, 14, 3),
                (rat(3, 2), 15, false, 15, 4),
            ]
        );
        // no row at (-K)^3 = 2: that would need a 16-point basket, which
        // the Bogomolov-Miyaoka budget forbids
        assert!(rows.iter().all(|r| r.k3 != rat_int(2)));
    }

    #[test]
    fn empty_anticanonical_rows_ignore_constraint_order() {
        let reference = rows_with_constraint_order(&[0, 1, 2]);
        for order in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert_eq!(rows_with_constraint_order(&order), reference);
        }
    }
}
