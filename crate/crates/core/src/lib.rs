//! fanocheck re-derives, in exact arithmetic, the finite computations a
//! classification of Fano threefold symmetries rests on: subgroup lattices
//! and character tables of the small simple groups involved, the invariant
//! theory of the Klein quartic, orbifold Riemann-Roch bookkeeping for
//! terminal Fano threefolds, and a registry of Diophantine case audits.
//! The `verify` binary runs everything and reports pass/fail per claim.

pub mod chars;
pub mod cyclo;
pub mod ffield;
pub mod groups;
pub mod invar;
pub mod mpoly;
