//! Finite group machinery: element domains, full enumeration from
//! generators, conjugacy classes with power maps, complete subgroup lattices
//! up to conjugacy, coset-action feasibility, and the Riemann-Hurwitz genus
//! spectrum. Groups here are small enough (at most 51840 elements) that
//! full enumeration beats cleverness; every derived fact is recomputed from
//! the multiplication itself rather than trusted from presentations.

mod actions;
mod data;
mod elem;
mod genus;
mod lattice;
mod model;

pub use actions::{
    curve_orbit_lengths, element_of_order, element_orders_present, normalizer_order_of_span,
    transitive_action_sizes,
};
pub use data::{
    bundled_group_source, load_bundled_group, parse_group_file, DataError, GroupFile,
    BUNDLED_GROUPS,
};
pub use elem::{Domain, ElemData, ElemError};
pub use genus::{
    generating_vector_exists, genus_candidates, genus_spectrum, hurwitz_min_genus, GenusError,
};
pub use lattice::{iso_tag, span, subgroup_classes, IsoTag, SubgroupClass, LATTICE_MAX_ORDER};
pub use model::{ClassData, GroupError, GroupModel, MAX_ORDER};
