//! Exact-arithmetic machinery for affine Weyl groups.
//!
//! The crate has four layers:
//!
//! - [`geometry`] / [`root_system`]: rational ambient vectors, the standard
//!   and Killing-normalized inner products, and hard-coded coordinate tables
//!   for the root systems A_n, B_n, C_n, D_n, G₂ in both basis orderings.
//! - [`affine`]: elements of the affine Weyl group Ŵ_q as (translation,
//!   finite part) pairs, alcove forms, the length formula, orbit
//!   characterization of a regular base point, and a breadth-first
//!   enumeration oracle.
//! - [`kostant`] / [`series`]: the set of dominant weights contributing to
//!   the dim 𝔤-th power of the Euler product ∏(1−xᵐ), the per-type Euclidean
//!   decomposition algorithms with their sign rules, the Weyl dimension
//!   formula, and coefficient-exact verification of the expansion.
//! - [`zperm`]: affine Weyl groups as permutations of ℤ determined by a
//!   window on a set of residue representatives, with membership tests and
//!   round-trips back to group elements.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod affine;
pub mod geometry;
pub mod kostant;
pub mod root_system;
pub mod series;
pub mod zperm;

pub use geometry::{Lattice, Rat, Vector};
pub use root_system::{BasisOrder, RootSystem, TypeTag};

/// Domain errors. Contract violations that indicate bugs (dimension
/// mismatches, non-integral exponents) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported root system: type {} rank {1}", .0.letter())]
    Unsupported(TypeTag, usize),
    #[error("the point lies on an affine hyperplane (not {0}-regular)")]
    NotRegular(i64),
    #[error("the point is not in the orbit of the base point")]
    NotInOrbit,
    #[error("the weight is not dominant")]
    NotDominant,
    #[error("invalid finite Weyl element table: {0}")]
    BadFiniteElement(String),
    #[error("malformed window: {0}")]
    BadWindow(String),
    #[error("window rejected: {0}")]
    NotMember(String),
}
