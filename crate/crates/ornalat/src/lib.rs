//! Pointed building sets and their ornamentation lattices.
//!
//! A pointed building set on the ground set `{0, .., n-1}` is a family of
//! pointed subsets `(S, i)` with `i ∈ S` that contains every singleton, is
//! transitively closed, and has every fiber closed under nonempty unions.
//! An ornamentation assigns to each point `i` a member of its fiber so that
//! `j ∈ ρ(i)` forces `ρ(j) ⊆ ρ(i)`; under componentwise inclusion these
//! assignments form a lattice.
//!
//! The crate provides:
//!
//! * bitset ground-set machinery and digraph/graph reachability ([`universe`]),
//! * validated building sets and the standard constructors ([`building`]),
//! * ornamentations with meet, join, and principal embeddings ([`ornament`]),
//! * full lattice enumeration, cover relations, semidistributivity and
//!   isomorphism checks ([`lattice`]),
//! * duality for directed trees, projections between nested building sets,
//!   and the bridge to the weak order on permutations ([`maps`]),
//! * group actions, invariant sublattices, and the cyclic Tamari lattices
//!   ([`symmetry`]),
//! * root vectors, biclosed ornamentations, and quasitrivial operations
//!   ([`geometry`]),
//! * the end-to-end verification suite backing `ornalat verify-all`
//!   ([`verify`]).
//!
//! Ground sets are capped at 64 points so subsets fit in one machine word.
//! All public I/O (JSON, DOT, diagnostics) is 1-based; the API itself is
//! 0-based.

pub mod building;
pub mod geometry;
pub mod lattice;
pub mod maps;
pub mod ornament;
pub mod poset;
pub mod symmetry;
pub mod universe;
pub mod verify;

pub use building::{PointedBuildingSet, PointedSet};
pub use lattice::OrnLattice;
pub use ornament::Ornamentation;
pub use universe::{Digraph, Graph, SubsetMask};
