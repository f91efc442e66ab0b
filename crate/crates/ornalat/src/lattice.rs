//! Enumeration of the full ornamentation lattice and its structure theory.
//!
//! Elements are generated by backtracking over coordinates: points are
//! processed in decreasing order of fiber-maximum size, each candidate value
//! is checked for transitivity against the coordinates already fixed, and a
//! full validation runs at every leaf. Branches under the first coordinate
//! are independent and run in parallel; the result is sorted into the
//! canonical (lexicographic) order afterwards, so the output does not depend
//! on thread count.
//!
//! Canonical order is a linear extension: index 0 is the minimum and the
//! last index is the maximum.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::building::PointedBuildingSet;
use crate::ornament::Ornamentation;
use crate::poset::{andnot_into, FinitePoset};
use crate::universe::SubsetMask;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LatticeError {
    #[error("enumeration cap {cap} exceeded: found at least {found} elements")]
    CapExceeded { cap: usize, found: usize },
    #[error("building set is not acyclic")]
    PreconditionNotAcyclic,
}

/// A fully enumerated ornamentation lattice.
#[derive(Clone, Debug)]
pub struct OrnLattice {
    building: PointedBuildingSet,
    elements: Vec<Ornamentation>,
    poset: FinitePoset,
    covers: Vec<(usize, usize)>,
}

impl OrnLattice {
    /// Enumerate every ornamentation of `b`, failing once more than `cap`
    /// elements have been found. The `found` value reported on failure is a
    /// lower bound for the true count.
    pub fn enumerate(b: &PointedBuildingSet, cap: usize) -> Result<OrnLattice, LatticeError> {
        let n = b.n();
        // Wide fibers first; their choices constrain the most.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(b.fiber_max(i).len()), i));
        let counter = AtomicUsize::new(0);

        let first = order[0];
        let branches: Result<Vec<Vec<Ornamentation>>, LatticeError> = b
            .fiber(first)
            .par_iter()
            .map(|&s| {
                let mut values = vec![SubsetMask::EMPTY; n];
                values[first] = s;
                let mut found = Vec::new();
                backtrack(
                    b,
                    &order,
                    1,
                    &mut values,
                    SubsetMask::singleton(first),
                    &mut found,
                    &counter,
                    cap,
                )?;
                Ok(found)
            })
            .collect();

        let mut elements: Vec<Ornamentation> = branches?.into_iter().flatten().collect();
        elements.sort();
        debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
        Ok(OrnLattice::from_sorted_elements(b.clone(), elements))
    }

    /// Build the order data for an explicit element list, e.g. an invariant
    /// sublattice. Elements must be distinct valid ornamentations of `b`.
    pub fn from_elements(b: &PointedBuildingSet, mut elements: Vec<Ornamentation>) -> OrnLattice {
        elements.sort();
        elements.dedup();
        debug_assert!(elements
            .iter()
            .all(|o| Ornamentation::validate(b, o.values().to_vec()).is_ok()));
        OrnLattice::from_sorted_elements(b.clone(), elements)
    }

    fn from_sorted_elements(
        building: PointedBuildingSet,
        elements: Vec<Ornamentation>,
    ) -> OrnLattice {
        let poset = FinitePoset::from_leq(elements.len(), |a, b| elements[a].leq(&elements[b]));
        let covers = poset.covers();
        OrnLattice {
            building,
            elements,
            poset,
            covers,
        }
    }

    pub fn building(&self) -> &PointedBuildingSet {
        &self.building
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Ornamentation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Ornamentation {
        &self.elements[k]
    }

    pub fn index_of(&self, o: &Ornamentation) -> Option<usize> {
        self.elements.binary_search(o).ok()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Cover pairs `(lo, hi)` as indices into `elements`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// Number of elements on a longest chain.
    pub fn longest_chain(&self) -> usize {
        self.poset.longest_chain()
    }

    /// Elements that are not the join of the elements strictly below them;
    /// in a finite lattice, exactly those with one lower cover. The bottom
    /// (the empty join) does not count.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let mut lower_covers = vec![0usize; self.len()];
        for &(_, hi) in &self.covers {
            lower_covers[hi] += 1;
        }
        (0..self.len())
            .filter(|&x| lower_covers[x] == 1)
            .collect()
    }

    /// Every element is a join of atoms. Computed on the lattice and
    /// cross-checked against fiberwise atomicity of the building set, which
    /// agrees by the structure of principal embeddings.
    pub fn is_atomic(&self) -> bool {
        let lattice_atomic = self.lattice_atomic();
        debug_assert_eq!(lattice_atomic, self.fibers_atomic());
        lattice_atomic
    }

    fn lattice_atomic(&self) -> bool {
        let m = self.len();
        if m == 0 {
            return true;
        }
        let atoms: Vec<usize> = self
            .covers
            .iter()
            .filter(|&&(lo, _)| lo == 0)
            .map(|&(_, hi)| hi)
            .collect();
        (0..m).all(|x| {
            let below: Vec<&Ornamentation> = atoms
                .iter()
                .filter(|&&a| self.poset.leq(a, x))
                .map(|&a| &self.elements[a])
                .collect();
            Ornamentation::join(&self.building, below.into_iter()) == self.elements[x]
        })
    }

    fn fibers_atomic(&self) -> bool {
        let b = &self.building;
        (0..b.n()).all(|i| {
            let fiber = b.fiber(i);
            let single = SubsetMask::singleton(i);
            // Fiber atoms: members whose only strict fiber subset is {i}.
            let atoms: Vec<SubsetMask> = fiber
                .iter()
                .copied()
                .filter(|&s| {
                    s != single
                        && fiber
                            .iter()
                            .all(|&t| !(t.is_subset_of(s) && t != s && t != single))
                })
                .collect();
            fiber.iter().all(|&s| {
                atoms
                    .iter()
                    .copied()
                    .filter(|a| a.is_subset_of(s))
                    .fold(single, SubsetMask::union)
                    == s
            })
        })
    }

    /// Semidistributivity via cover intervals: for every cover `x ⋖ y` the
    /// down-set difference must have a unique minimal element and the up-set
    /// difference a unique maximal one. Returns the first violation.
    pub fn semidistributivity_violation(&self) -> Option<SdViolation> {
        let words = self.poset.words();
        let mut buf = vec![0u64; words];
        for &(lo, hi) in &self.covers {
            andnot_into(&mut buf, self.poset.down_row(hi), self.poset.down_row(lo));
            if self.poset.minimals_in(&buf).0 != 1 {
                return Some(SdViolation {
                    lo,
                    hi,
                    side: SdSide::Join,
                });
            }
            andnot_into(&mut buf, self.poset.up_row(lo), self.poset.up_row(hi));
            if self.poset.maximals_in(&buf).0 != 1 {
                return Some(SdViolation {
                    lo,
                    hi,
                    side: SdSide::Meet,
                });
            }
        }
        None
    }

    pub fn is_semidistributive(&self) -> bool {
        self.semidistributivity_violation().is_none()
    }

    /// For an acyclic building set, each cover must change exactly one
    /// coordinate, and the changed coordinate must either be assembled from
    /// the lower element (`σ(i) = ⋃_{j∈S} ρ(j)` for some fiber member `S`)
    /// or be a cover step inside its own fiber.
    pub fn cover_law_report(&self) -> Result<CoverReport, LatticeError> {
        if !self.building.is_acyclic() {
            return Err(LatticeError::PreconditionNotAcyclic);
        }
        let mut violations = Vec::new();
        for &(lo, hi) in &self.covers {
            let rho = &self.elements[lo];
            let sigma = &self.elements[hi];
            let changed: Vec<usize> = (0..rho.n())
                .filter(|&i| rho.value(i) != sigma.value(i))
                .collect();
            if changed.len() != 1 {
                violations.push(CoverViolation {
                    lo,
                    hi,
                    kind: CoverViolationKind::MultipleCoordinates { changed },
                });
                continue;
            }
            let i = changed[0];
            let assembled = self.building.fiber(i).iter().any(|&s| {
                s.iter()
                    .fold(SubsetMask::EMPTY, |acc, j| acc.union(rho.value(j)))
                    == sigma.value(i)
            });
            let fiber_cover = rho.value(i).is_subset_of(sigma.value(i))
                && self.building.fiber(i).iter().all(|&t| {
                    !(rho.value(i).is_subset_of(t)
                        && t.is_subset_of(sigma.value(i))
                        && t != rho.value(i)
                        && t != sigma.value(i))
                });
            if !assembled && !fiber_cover {
                violations.push(CoverViolation {
                    lo,
                    hi,
                    kind: CoverViolationKind::DichotomyFails { coordinate: i },
                });
            }
        }
        Ok(CoverReport {
            checked: self.covers.len(),
            violations,
        })
    }

    /// Order isomorphism witness between two lattices, or order-reversing
    /// when `anti`. `None` means no such bijection exists.
    pub fn iso_check(&self, other: &OrnLattice, anti: bool) -> Option<Vec<usize>> {
        self.poset.iso(&other.poset, anti)
    }

    /// Hasse diagram in DOT format; node labels are the 1-based value lists.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ornamentation_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (k, o) in self.elements.iter().enumerate() {
            out.push_str(&format!("  e{k} [label=\"{o}\"];\n"));
        }
        for &(lo, hi) in &self.covers {
            out.push_str(&format!("  e{lo} -> e{hi};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// `{"elements": .., "covers": ..}`: elements as 1-based value lists in
    /// canonical order, covers as 0-based index pairs into that order.
    pub fn to_json_string(&self) -> String {
        let elements: Vec<Vec<Vec<usize>>> = self
            .elements
            .iter()
            .map(|o| o.values().iter().map(|v| v.to_one_based()).collect())
            .collect();
        serde_json::json!({
            "elements": elements,
            "covers": self.covers,
        })
        .to_string()
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    b: &PointedBuildingSet,
    order: &[usize],
    depth: usize,
    values: &mut Vec<SubsetMask>,
    assigned: SubsetMask,
    out: &mut Vec<Ornamentation>,
    counter: &AtomicUsize,
    cap: usize,
) -> Result<(), LatticeError> {
    if depth == order.len() {
        let o = Ornamentation::validate(b, values.clone())
            .expect("incremental pruning must preserve validity");
        let found = counter.fetch_add(1, Ordering::Relaxed) + 1;
        if found > cap {
            return Err(LatticeError::CapExceeded { cap, found });
        }
        out.push(o);
        return Ok(());
    }
    let i = order[depth];
    'candidates: for &s in b.fiber(i) {
        for j in assigned.iter() {
            let vj = values[j];
            if s.contains(j) && !vj.is_subset_of(s) {
                continue 'candidates;
            }
            if vj.contains(i) && !s.is_subset_of(vj) {
                continue 'candidates;
            }
        }
        values[i] = s;
        backtrack(b, order, depth + 1, values, assigned.with(i), out, counter, cap)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdSide {
    Join,
    Meet,
}

/// A cover interval witnessing a semidistributivity failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SdViolation {
    pub lo: usize,
    pub hi: usize,
    pub side: SdSide,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolationKind {
    MultipleCoordinates { changed: Vec<usize> },
    DichotomyFails { coordinate: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverViolation {
    pub lo: usize,
    pub hi: usize,
    pub kind: CoverViolationKind,
}

/// Outcome of the cover-law verification over every cover of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub checked: usize,
    pub violations: Vec<CoverViolation>,
}

impl CoverReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::{Digraph, Graph};

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().copied())
    }

    fn tam(n: usize) -> OrnLattice {
        OrnLattice::enumerate(&PointedBuildingSet::left_segment(n).unwrap(), 100_000).unwrap()
    }

    #[test]
    fn interval_counts_match_recursive_oracle() {
        // Independent count: o(n) = Σ o(k-1) * o(n-k), the number of binary
        // bracketings, computed without touching the lattice machinery.
        fn oracle(n: usize) -> usize {
            let mut c = vec![1usize; n + 1];
            for k in 1..=n {
                c[k] = (1..=k).map(|j| c[j - 1] * c[k - j]).sum();
            }
            c[n]
        }
        let frozen = [1, 1, 2, 5, 14, 42, 132];
        for n in 1..=6 {
            assert_eq!(oracle(n), frozen[n]);
            assert_eq!(tam(n).len(), frozen[n]);
        }
    }

    #[test]
    fn canonical_order_has_extremes_at_the_ends() {
        let lat = tam(4);
        let b = lat.building().clone();
        assert_eq!(lat.element(0), &Ornamentation::minimum(&b));
        assert_eq!(lat.element(lat.len() - 1), &Ornamentation::maximum(&b));
        // Covers always point upwards in canonical order.
        assert!(lat.covers().iter().all(|&(lo, hi)| lo < hi));
    }

    #[test]
    fn cap_is_enforced() {
        let b = PointedBuildingSet::left_segment(4).unwrap();
        match OrnLattice::enumerate(&b, 5) {
            Err(LatticeError::CapExceeded { cap: 5, found }) => assert!(found > 5),
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(OrnLattice::enumerate(&b, 14).is_ok());
    }

    #[test]
    fn chain_lengths() {
        // A chain-shaped lattice: one fiber, nested values.
        let b = PointedBuildingSet::left_segment(1).unwrap();
        assert_eq!(OrnLattice::enumerate(&b, 10).unwrap().longest_chain(), 1);
        assert_eq!(tam(3).longest_chain(), 4);
        let c3 = PointedBuildingSet::digraphical(&Digraph::cycle(3).unwrap());
        assert_eq!(
            OrnLattice::enumerate(&c3, 1000).unwrap().longest_chain(),
            6
        );
    }

    #[test]
    fn join_irreducibles_match_definition_and_principal_embeddings() {
        for lat in [
            tam(3),
            tam(4),
            OrnLattice::enumerate(
                &PointedBuildingSet::graphical(&Graph::complete(3).unwrap()),
                1000,
            )
            .unwrap(),
        ] {
            let b = lat.building().clone();
            let ji = lat.join_irreducibles();
            // Definition-based oracle: x differs from the join of everything
            // strictly below it.
            for x in 0..lat.len() {
                let strictly_below: Vec<&Ornamentation> = (0..lat.len())
                    .filter(|&y| y != x && lat.leq(y, x))
                    .map(|y| lat.element(y))
                    .collect();
                let joined = Ornamentation::join(&b, strictly_below.into_iter());
                assert_eq!(
                    ji.contains(&x),
                    &joined != lat.element(x),
                    "element {x} of {}",
                    lat.element(x)
                );
            }
            // Principal characterization: fiber members with a unique lower
            // cover inside their fiber, embedded principally.
            let mut expected = Vec::new();
            for i in 0..b.n() {
                let fiber = b.fiber(i);
                for &s in fiber {
                    let lower = fiber
                        .iter()
                        .filter(|&&t| t != s && t.is_subset_of(s))
                        .filter(|&&t| {
                            fiber
                                .iter()
                                .all(|&u| !(t.is_subset_of(u) && u.is_subset_of(s) && u != t && u != s))
                        })
                        .count();
                    if lower == 1 {
                        let p = crate::building::PointedSet::new(s, i).unwrap();
                        let e = Ornamentation::principal_embed(&b, &p).unwrap();
                        expected.push(lat.index_of(&e).unwrap());
                    }
                }
            }
            expected.sort();
            assert_eq!(ji, expected);
        }
    }

    #[test]
    fn atomicity_examples() {
        // Boolean-shaped: complete graph on 2 points.
        let k2 = PointedBuildingSet::graphical(&Graph::complete(2).unwrap());
        assert!(OrnLattice::enumerate(&k2, 100).unwrap().is_atomic());
        // Complete-graph fibers are unions of their two-element members.
        let k3 = PointedBuildingSet::graphical(&Graph::complete(3).unwrap());
        assert!(OrnLattice::enumerate(&k3, 1000).unwrap().is_atomic());
        // Interval fibers are chains, so the three-element top is not a
        // union of fiber atoms.
        assert!(!tam(3).is_atomic());
    }

    #[test]
    fn semidistributivity_examples() {
        assert!(tam(4).is_semidistributive());
        let c3 = PointedBuildingSet::digraphical(&Digraph::cycle(3).unwrap());
        assert!(OrnLattice::enumerate(&c3, 1000).unwrap().is_semidistributive());
        // The Boolean lattice is distributive, in particular semidistributive.
        let k2 = PointedBuildingSet::graphical(&Graph::complete(2).unwrap());
        assert!(OrnLattice::enumerate(&k2, 100).unwrap().is_semidistributive());
    }

    #[test]
    fn cover_laws_on_acyclic_cases() {
        let report = tam(4).cover_law_report().unwrap();
        assert!(report.ok());
        assert_eq!(report.checked, tam(4).covers().len());

        let k3 = PointedBuildingSet::graphical(&Graph::complete(3).unwrap());
        let lat = OrnLattice::enumerate(&k3, 1000).unwrap();
        assert_eq!(
            lat.cover_law_report(),
            Err(LatticeError::PreconditionNotAcyclic)
        );
    }

    #[test]
    fn two_coordinate_cover_without_acyclicity() {
        // In the complete-graph lattice on three points a cover can change
        // two coordinates at once.
        let k3 = PointedBuildingSet::graphical(&Graph::complete(3).unwrap());
        let lat = OrnLattice::enumerate(&k3, 1000).unwrap();
        let full = m(&[0, 1, 2]);
        let rho = Ornamentation::validate(&k3, vec![m(&[0, 1]), m(&[0, 1]), full]).unwrap();
        let sigma = Ornamentation::maximum(&k3);
        let lo = lat.index_of(&rho).unwrap();
        let hi = lat.index_of(&sigma).unwrap();
        assert!(lat.covers().contains(&(lo, hi)));
        let changed = (0..3).filter(|&i| rho.value(i) != sigma.value(i)).count();
        assert_eq!(changed, 2);
    }

    #[test]
    fn iso_check_between_lattices() {
        let a = tam(3);
        // Reversed path gives an isomorphic (indeed equal-shaped) lattice.
        let rev = PointedBuildingSet::digraphical(&Digraph::path(3).unwrap().opposite());
        let b = OrnLattice::enumerate(&rev, 100).unwrap();
        assert!(a.iso_check(&b, false).is_some());
        // The pentagon is self-dual.
        assert!(a.iso_check(&a, true).is_some());
        assert!(a.iso_check(&tam(4), false).is_none());
    }

    #[test]
    fn dot_and_json_shapes() {
        let lat = tam(3);
        let dot = lat.to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches(" -> ").count(), lat.covers().len());
        assert!(dot.contains("({1},{2},{3})"));
        let json: serde_json::Value = serde_json::from_str(&lat.to_json_string()).unwrap();
        assert_eq!(json["elements"].as_array().unwrap().len(), 5);
        assert_eq!(json["covers"].as_array().unwrap().len(), lat.covers().len());
    }

    #[test]
    fn enumeration_is_insensitive_to_input_fiber_order() {
        let b = PointedBuildingSet::graphical(&Graph::path(3).unwrap());
        let mut shuffled: Vec<Vec<SubsetMask>> =
            b.fibers().iter().map(|f| f.iter().rev().copied().collect()).collect();
        shuffled[1].swap(0, 1);
        let b2 = PointedBuildingSet::validate(3, shuffled).unwrap();
        assert_eq!(b, b2);
        let l1 = OrnLattice::enumerate(&b, 1000).unwrap();
        let l2 = OrnLattice::enumerate(&b2, 1000).unwrap();
        assert_eq!(l1.elements(), l2.elements());
        assert_eq!(l1.covers(), l2.covers());
    }
}
