//! Symmetries of ornamentation lattices: permutation actions on the ground
//! set, invariant sublattices, and the cyclically symmetric picture built
//! from a signed cycle.
//!
//! Signed ground sets `{1, .., n, -1, .., -n}` are relabeled to `{0, ..,
//! 2n-1}` with `k` becoming `k-1` and `-k` becoming `n+k-1`; the sign flip
//! is then rotation by `n` and the ambient digraph is the plain directed
//! cycle on `2n` vertices.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::building::PointedBuildingSet;
use crate::lattice::{LatticeError, OrnLattice};
use crate::ornament::Ornamentation;
use crate::poset::FinitePoset;
use crate::universe::{Digraph, SubsetMask};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SymmetryError {
    #[error("generator {g} is not a permutation of the ground set")]
    NotAPermutation { g: usize },
    #[error("generator {g} maps ({set},{}) outside the building set", point + 1)]
    ActionDoesNotPreserveBuildingSet {
        g: usize,
        set: SubsetMask,
        point: usize,
    },
}

/// A permutation group acting on the ground set, given by generators.
/// Invariance checks only quantify over generators, which suffices.
#[derive(Clone, Debug)]
pub struct GroupAction {
    n: usize,
    generators: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(n: usize, generators: Vec<Vec<usize>>) -> Result<GroupAction, SymmetryError> {
        for (g, perm) in generators.iter().enumerate() {
            if perm.len() != n {
                return Err(SymmetryError::NotAPermutation { g });
            }
            let mut seen = SubsetMask::EMPTY;
            for &x in perm {
                if x >= n || seen.contains(x) {
                    return Err(SymmetryError::NotAPermutation { g });
                }
                seen = seen.with(x);
            }
        }
        Ok(GroupAction { n, generators })
    }

    /// The cyclic group generated by `v -> v + shift (mod n)`.
    pub fn rotation(n: usize, shift: usize) -> GroupAction {
        let perm = (0..n).map(|v| (v + shift) % n).collect();
        GroupAction::new(n, vec![perm]).expect("rotation is a permutation")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn apply_point(&self, g: usize, v: usize) -> usize {
        self.generators[g][v]
    }

    pub fn apply_mask(&self, g: usize, mask: SubsetMask) -> SubsetMask {
        mask.iter()
            .fold(SubsetMask::EMPTY, |m, v| m.with(self.generators[g][v]))
    }

    /// Every generator must permute the pointed sets of `b`.
    pub fn check_preserves(&self, b: &PointedBuildingSet) -> Result<(), SymmetryError> {
        assert_eq!(self.n, b.n());
        for g in 0..self.generators.len() {
            for i in 0..b.n() {
                for &s in b.fiber(i) {
                    if !b.fiber_contains(self.apply_point(g, i), self.apply_mask(g, s)) {
                        return Err(SymmetryError::ActionDoesNotPreserveBuildingSet {
                            g,
                            set: s,
                            point: i,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// An ornamentation is fixed when relabeling commutes with decoration:
    /// `rho(g(i)) = g(rho(i))` for every generator.
    pub fn fixes(&self, rho: &Ornamentation) -> bool {
        (0..self.generators.len()).all(|g| {
            (0..rho.n()).all(|i| rho.value(self.apply_point(g, i)) == self.apply_mask(g, rho.value(i)))
        })
    }
}

/// Indices of the elements fixed by the action. The fixed elements are
/// closed under meet and join (the action permutes the lattice preserving
/// order), which is re-verified pair by pair.
pub fn invariant_elements(
    action: &GroupAction,
    lat: &OrnLattice,
) -> Result<Vec<usize>, SymmetryError> {
    action.check_preserves(lat.building())?;
    let fixed: Vec<usize> = (0..lat.len())
        .filter(|&x| action.fixes(lat.element(x)))
        .collect();
    let b = lat.building();
    for &x in &fixed {
        for &y in &fixed {
            let meet = Ornamentation::meet2(b, lat.element(x), lat.element(y));
            let join = Ornamentation::join2(b, lat.element(x), lat.element(y));
            for o in [meet, join] {
                let idx = lat.index_of(&o).expect("meet and join are elements");
                assert!(
                    fixed.binary_search(&idx).is_ok(),
                    "fixed elements must be closed under meet and join"
                );
            }
        }
    }
    Ok(fixed)
}

/// The fixed elements as a lattice of their own.
pub fn invariant_sublattice(
    action: &GroupAction,
    lat: &OrnLattice,
) -> Result<OrnLattice, SymmetryError> {
    let fixed = invariant_elements(action, lat)?;
    let elements: Vec<Ornamentation> = fixed.iter().map(|&x| lat.element(x).clone()).collect();
    Ok(OrnLattice::from_elements(lat.building(), elements))
}

/// The directed `2n`-cycle together with the sign flip (rotation by `n`).
pub fn signed_cycle(n: usize) -> (Digraph, GroupAction) {
    assert!((1..=32).contains(&n), "signed ground set needs 1 <= n <= 32");
    let d = Digraph::cycle(2 * n).expect("2n >= 2 vertices");
    (d, GroupAction::rotation(2 * n, n))
}

/// Human-readable signed name of a relabeled vertex: `0..n-1` are the
/// positives `1..n`, the rest are `-1..-n`.
pub fn signed_label(n: usize, v: usize) -> i64 {
    assert!(v < 2 * n);
    if v < n {
        (v + 1) as i64
    } else {
        -((v - n + 1) as i64)
    }
}

/// The cyclically symmetric lattice: sign-invariant decorations of the
/// signed cycle.
pub fn csym_atam(n: usize, cap: usize) -> Result<OrnLattice, LatticeError> {
    let (d, action) = signed_cycle(n);
    let lat = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d), cap)?;
    Ok(invariant_sublattice(&action, &lat).expect("rotations preserve cycle fibers"))
}

/// Size convention on the signed cycle: the full vertex set counts as
/// `n + 1`, every proper arc by its cardinality.
fn conventional_size(n: usize, mask: SubsetMask) -> usize {
    if mask == SubsetMask::full(2 * n) {
        n + 1
    } else {
        mask.len()
    }
}

/// Rank-like statistic on sign-invariant decorations: total conventional
/// size of the positive coordinates, discounted by a binomial in the number
/// of full coordinates. Strictly increasing along covers.
pub fn chain_statistic(n: usize, rho: &Ornamentation) -> usize {
    assert_eq!(rho.n(), 2 * n);
    let full = SubsetMask::full(2 * n);
    let sum: usize = (0..n).map(|i| conventional_size(n, rho.value(i))).sum();
    let k = (0..n).filter(|&i| rho.value(i) == full).count();
    sum - k * (k.saturating_sub(1)) / 2
}

/// A torsion-class-like set of arcs `(i, j)` on the infinite cyclic quiver,
/// recorded by representatives with `1 <= i <= n` and `i < j <= i + n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcTorsionClass {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl ArcTorsionClass {
    /// Build the class for a length vector `d`, taking the arcs
    /// `(i, i+1), .., (i, i+d[i-1])` at each left endpoint `i`.
    pub fn from_lengths(n: usize, d: &[usize]) -> ArcTorsionClass {
        assert_eq!(d.len(), n);
        assert!(d.iter().all(|&x| x <= n));
        let mut arcs = BTreeSet::new();
        for i in 1..=n {
            for t in 1..=d[i - 1] {
                arcs.insert((i, i + t));
            }
        }
        ArcTorsionClass { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn lengths(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|i| self.arcs.iter().filter(|&&(a, _)| a == i).count())
            .collect()
    }

    pub fn is_subset_of(&self, other: &ArcTorsionClass) -> bool {
        assert_eq!(self.n, other.n);
        self.arcs.is_subset(&other.arcs)
    }
}

impl std::fmt::Display for ArcTorsionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body = self
            .arcs
            .iter()
            .map(|&(a, b)| format!("({a},{b})"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{body}}}")
    }
}

/// Composition closure for a length vector on the cyclic quiver: whenever
/// the arc `(i, j)` is present and the class also holds an arc of length
/// `t` out of `j` (read modulo `n` on left endpoints), the composite
/// `(i, j+t)` must be present as long as its length stays within `n`.
fn lengths_are_composition_closed(n: usize, d: &[usize]) -> bool {
    for i in 1..=n {
        for ell in 1..=d[i - 1] {
            let j = i + ell;
            let j_rep = if j > n { j - n } else { j };
            let needed = ell + d[j_rep - 1].min(n - ell);
            if d[i - 1] < needed {
                return false;
            }
        }
    }
    true
}

/// All composition-closed arc classes with lengths at most `n`, ordered by
/// containment; the canonical element order is lexicographic on length
/// vectors.
#[derive(Clone, Debug)]
pub struct CyclicTamari {
    n: usize,
    lengths: Vec<Vec<usize>>,
    elements: Vec<ArcTorsionClass>,
    poset: FinitePoset,
    covers: Vec<(usize, usize)>,
}

pub fn cyclic_tamari(n: usize) -> CyclicTamari {
    assert!((1..=8).contains(&n), "class enumeration needs 1 <= n <= 8");
    let mut lengths = Vec::new();
    let mut d = vec![0usize; n];
    loop {
        if lengths_are_composition_closed(n, &d) {
            lengths.push(d.clone());
        }
        // Mixed-radix increment with digits 0..=n, most significant first.
        let mut k = n;
        loop {
            if k == 0 {
                let elements: Vec<ArcTorsionClass> = lengths
                    .iter()
                    .map(|d| ArcTorsionClass::from_lengths(n, d))
                    .collect();
                let poset = FinitePoset::from_leq(elements.len(), |a, b| {
                    elements[a].is_subset_of(&elements[b])
                });
                let covers = poset.covers();
                return CyclicTamari {
                    n,
                    lengths,
                    elements,
                    poset,
                    covers,
                };
            }
            k -= 1;
            if d[k] < n {
                d[k] += 1;
                d[k + 1..].fill(0);
                break;
            }
        }
    }
}

impl CyclicTamari {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lengths(&self) -> &[Vec<usize>] {
        &self.lengths
    }

    pub fn elements(&self) -> &[ArcTorsionClass] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &ArcTorsionClass {
        &self.elements[k]
    }

    pub fn index_of(&self, class: &ArcTorsionClass) -> Option<usize> {
        self.elements.iter().position(|e| e == class)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn longest_chain(&self) -> usize {
        self.poset.longest_chain()
    }
}

/// Translate a sign-invariant decoration into an arc class: each positive
/// coordinate contributes the arcs out of it with lengths up to its
/// conventional size minus one.
pub fn csym_to_ctam(n: usize, rho: &Ornamentation) -> ArcTorsionClass {
    assert_eq!(rho.n(), 2 * n);
    let d: Vec<usize> = (0..n)
        .map(|i| conventional_size(n, rho.value(i)) - 1)
        .collect();
    ArcTorsionClass::from_lengths(n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_validation() {
        assert!(GroupAction::new(3, vec![vec![1, 2, 0]]).is_ok());
        assert_eq!(
            GroupAction::new(3, vec![vec![1, 1, 0]]).unwrap_err(),
            SymmetryError::NotAPermutation { g: 0 }
        );
        assert_eq!(
            GroupAction::new(3, vec![vec![0, 1]]).unwrap_err(),
            SymmetryError::NotAPermutation { g: 0 }
        );
    }

    #[test]
    fn preservation_check_and_witness() {
        let rot = GroupAction::rotation(3, 1);
        let c3 = PointedBuildingSet::digraphical(&Digraph::cycle(3).unwrap());
        assert!(rot.check_preserves(&c3).is_ok());
        let path = PointedBuildingSet::digraphical(&Digraph::path(3).unwrap());
        let err = rot.check_preserves(&path).unwrap_err();
        assert_eq!(
            err,
            SymmetryError::ActionDoesNotPreserveBuildingSet {
                g: 0,
                set: SubsetMask::from_elements([0, 1, 2]),
                point: 0,
            }
        );
    }

    #[test]
    fn fixed_elements_of_the_two_cycle() {
        let (d, action) = signed_cycle(1);
        let lat = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d), 100).unwrap();
        assert_eq!(lat.len(), 4);
        let fixed = invariant_elements(&action, &lat).unwrap();
        assert_eq!(fixed.len(), 2);
        let sub = invariant_sublattice(&action, &lat).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.longest_chain(), 2);
    }

    #[test]
    fn signed_labels() {
        assert_eq!(
            (0..4).map(|v| signed_label(2, v)).collect::<Vec<_>>(),
            vec![1, 2, -1, -2]
        );
    }

    #[test]
    fn small_symmetric_lattices() {
        let one = csym_atam(1, 1000).unwrap();
        assert_eq!(one.len(), 2);
        let two = csym_atam(2, 10_000).unwrap();
        assert_eq!(two.len(), 6);
        assert_eq!(two.longest_chain(), 4);
        // Length vectors of the six elements, in canonical order.
        let mut seen: Vec<Vec<usize>> = two
            .elements()
            .iter()
            .map(|o| csym_to_ctam(2, o).lengths())
            .collect();
        seen.sort();
        assert_eq!(
            seen,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![2, 0],
                vec![2, 2]
            ]
        );
    }

    #[test]
    fn chain_statistic_is_strict_on_covers() {
        for n in 1..=3 {
            let sub = csym_atam(n, 1_000_000).unwrap();
            for &(lo, hi) in sub.covers() {
                assert!(
                    chain_statistic(n, sub.element(lo)) < chain_statistic(n, sub.element(hi))
                );
            }
            assert_eq!(chain_statistic(n, sub.element(0)), n);
            assert_eq!(
                chain_statistic(n, sub.element(sub.len() - 1)),
                n * (n + 1) - n * (n - 1) / 2
            );
            assert_eq!(sub.longest_chain(), n * (n + 1) / 2 + 1);
        }
    }

    #[test]
    fn arc_class_enumeration() {
        assert_eq!(cyclic_tamari(1).len(), 2);
        let ct2 = cyclic_tamari(2);
        assert_eq!(ct2.len(), 6);
        assert_eq!(
            ct2.lengths(),
            &[
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![2, 0],
                vec![2, 2]
            ]
        );
        // The two-sided class {(1,2),(2,3)} is not composition closed.
        assert!(!lengths_are_composition_closed(2, &[1, 1]));
        let top = ArcTorsionClass::from_lengths(2, &[2, 2]);
        assert_eq!(top.arcs().len(), 4);
        assert_eq!(top.to_string(), "{(1,2),(1,3),(2,3),(2,4)}");
        assert_eq!(top.lengths(), vec![2, 2]);
    }

    #[test]
    fn symmetric_lattice_matches_arc_classes() {
        for n in 1..=3 {
            let sub = csym_atam(n, 1_000_000).unwrap();
            let ct = cyclic_tamari(n);
            assert_eq!(sub.len(), ct.len());
            let images: Vec<usize> = sub
                .elements()
                .iter()
                .map(|o| ct.index_of(&csym_to_ctam(n, o)).expect("image is a class"))
                .collect();
            let mut distinct = images.clone();
            distinct.sort();
            distinct.dedup();
            assert_eq!(distinct.len(), ct.len());
            for x in 0..sub.len() {
                for y in 0..sub.len() {
                    assert_eq!(sub.leq(x, y), ct.leq(images[x], images[y]));
                }
            }
        }
    }

    #[test]
    fn different_cycles_same_invariant_shape() {
        // Rotation by 2 on the 4-cycle and on the 6-cycle leave isomorphic
        // sublattices even though the ambient lattices differ.
        let l4 = OrnLattice::enumerate(
            &PointedBuildingSet::digraphical(&Digraph::cycle(4).unwrap()),
            100_000,
        )
        .unwrap();
        let l6 = OrnLattice::enumerate(
            &PointedBuildingSet::digraphical(&Digraph::cycle(6).unwrap()),
            1_000_000,
        )
        .unwrap();
        let s4 = invariant_sublattice(&GroupAction::rotation(4, 2), &l4).unwrap();
        let s6 = invariant_sublattice(&GroupAction::rotation(6, 2), &l6).unwrap();
        assert_eq!(s4.len(), 6);
        assert!(s4.iso_check(&s6, false).is_some());
    }
}
