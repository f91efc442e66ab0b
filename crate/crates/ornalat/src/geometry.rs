//! Root-vector geometry of decorations: each building set spans a set of
//! type-A roots, a decoration selects a subset, and the biclosed selections
//! form a distinguished subposet of the lattice.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::building::PointedBuildingSet;
use crate::lattice::{LatticeError, OrnLattice};
use crate::ornament::Ornamentation;
use crate::poset::{BoundFailure, BoundKind, FinitePoset};
use crate::universe::{Digraph, SubsetMask};

/// The root `e_pos - e_neg` with `pos != neg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    pub pos: usize,
    pub neg: usize,
}

impl std::fmt::Display for RootVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e{}-e{}", self.pos + 1, self.neg + 1)
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GeometryError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// For each point, the other points of its largest fiber member; row `i`
/// holds the `j` with `e_j - e_i` in the root set.
fn phi_masks(b: &PointedBuildingSet) -> Vec<SubsetMask> {
    (0..b.n()).map(|i| b.fiber_max(i).without(i)).collect()
}

fn v_masks(rho: &Ornamentation) -> Vec<SubsetMask> {
    (0..rho.n()).map(|i| rho.value(i).without(i)).collect()
}

/// The full root set of the building set.
pub fn phi(b: &PointedBuildingSet) -> BTreeSet<RootVector> {
    phi_masks(b)
        .iter()
        .enumerate()
        .flat_map(|(i, m)| m.iter().map(move |j| RootVector { pos: j, neg: i }))
        .collect()
}

/// The roots selected by a decoration.
pub fn v_of(rho: &Ornamentation) -> BTreeSet<RootVector> {
    v_masks(rho)
        .iter()
        .enumerate()
        .flat_map(|(i, m)| m.iter().map(move |j| RootVector { pos: j, neg: i }))
        .collect()
}

/// Closure under addition: if `e_k - e_i` and `e_j - e_k` are selected and
/// their sum is a root, the sum must be selected. This always holds for
/// decorations, but is checked rather than assumed.
pub fn is_closed(b: &PointedBuildingSet, rho: &Ornamentation) -> bool {
    let phi = phi_masks(b);
    let v = v_masks(rho);
    (0..b.n()).all(|i| {
        v[i].iter().all(|k| {
            v[k].iter()
                .all(|j| j == i || !phi[i].contains(j) || v[i].contains(j))
        })
    })
}

/// Co-closure: a selected root `e_k - e_i` may only split through a third
/// point `j` (with both `e_j - e_i` and `e_k - e_j` roots) if one of the
/// two parts is selected.
pub fn is_coclosed(b: &PointedBuildingSet, rho: &Ornamentation) -> bool {
    let phi = phi_masks(b);
    let v = v_masks(rho);
    (0..b.n()).all(|i| {
        v[i].iter().all(|k| {
            phi[i]
                .iter()
                .filter(|&j| j != k && phi[j].contains(k))
                .all(|j| v[i].contains(j) || v[j].contains(k))
        })
    })
}

pub fn is_biclosed(b: &PointedBuildingSet, rho: &Ornamentation) -> bool {
    is_closed(b, rho) && is_coclosed(b, rho)
}

/// Indices of the biclosed elements in canonical order.
pub fn bicl_indices(lat: &OrnLattice) -> Vec<usize> {
    (0..lat.len())
        .filter(|&x| is_biclosed(lat.building(), lat.element(x)))
        .collect()
}

/// The biclosed elements with the induced order, plus the first pair with
/// no least upper or greatest lower bound inside the subposet, if any.
#[derive(Clone, Debug)]
pub struct BiclSubposet {
    pub indices: Vec<usize>,
    pub poset: FinitePoset,
    pub bound_failure: Option<BoundFailure>,
}

pub fn bicl_subposet(lat: &OrnLattice) -> BiclSubposet {
    let indices = bicl_indices(lat);
    let poset = lat.poset().induced(&indices);
    let bound_failure = poset.pairwise_bounds_exist().err();
    BiclSubposet {
        indices,
        poset,
        bound_failure,
    }
}

/// The magma `i * j = j` if `j` is in `rho(i)`, else `i`. Every value is
/// one of the arguments, and the diagonal is idempotent by construction.
pub fn quasitrivial_op(rho: &Ornamentation) -> Vec<Vec<usize>> {
    let n = rho.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if rho.value(i).contains(j) { j } else { i })
                .collect()
        })
        .collect()
}

/// First triple breaking `(x*y)*z = x*(y*z)`, if any.
pub fn associativity_violation(table: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    let n = table.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// A biclosed pair with a missing bound inside its biclosed subposet.
#[derive(Clone, Debug)]
pub struct BiclWitness {
    pub digraph: Digraph,
    pub left: Ornamentation,
    pub right: Ornamentation,
    pub kind: BoundKind,
}

/// Scan loopless digraphs by vertex count, then by arc bitmask, skipping
/// digraphs whose degree-pair multiset was already seen, and report the
/// first biclosed subposet that fails to be a lattice.
pub fn find_bicl_non_lattice(
    max_n: usize,
    cap: usize,
) -> Result<Option<BiclWitness>, LatticeError> {
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        assert!(slots.len() < 31, "digraph scan is limited to small grounds");
        let mut seen_degrees: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        for mask in 0u64..(1u64 << slots.len()) {
            let arcs: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &arc)| arc)
                .collect();
            let d = Digraph::new(n, &arcs).expect("slots are valid arcs");
            let mut degrees: Vec<(usize, usize)> = (0..n)
                .map(|v| (d.out(v).len(), d.opposite().out(v).len()))
                .collect();
            degrees.sort();
            if !seen_degrees.insert(degrees) {
                continue;
            }
            let lat = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d), cap)?;
            let sub = bicl_subposet(&lat);
            if let Some(failure) = sub.bound_failure {
                return Ok(Some(BiclWitness {
                    digraph: d,
                    left: lat.element(sub.indices[failure.a]).clone(),
                    right: lat.element(sub.indices[failure.b]).clone(),
                    kind: failure.kind,
                }));
            }
        }
    }
    Ok(None)
}
