//! Pointed building sets: validation, constructors, and structural tests.
//!
//! A pointed building set `B` on `{0, .., n-1}` is given by its fibers
//! `B|_i = { S : (S, i) ∈ B }`. The axioms are
//!
//! 1. every singleton `{i}` lies in `B|_i`,
//! 2. transitivity: `(S, i), (T, j) ∈ B` with `j ∈ S` forces `(S ∪ T, i) ∈ B`,
//! 3. each fiber is closed under nonempty unions.
//!
//! For a finite ground set axiom 2 applied to two sets from the same fiber
//! already yields axiom 3; the validator still checks same-fiber unions
//! separately so diagnostics can name the union axiom when that is the one
//! an input misses.
//!
//! Fibers are stored sorted by numeric mask value, which refines inclusion,
//! so the last entry of a valid fiber is its inclusion-maximum.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::universe::{Digraph, Graph, SubsetMask, UniverseError, MAX_GROUND};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BuildingError {
    #[error("ground set size {n} out of range (must be 1..={MAX_GROUND})")]
    GroundSize { n: usize },
    #[error("expected {n} fibers, got {got}")]
    FiberCount { n: usize, got: usize },
    #[error("fiber {} lists {set}, which has members outside the ground set of size {n}", i + 1)]
    MemberOutOfRange { i: usize, set: SubsetMask, n: usize },
    #[error("fiber {} lists {set}, which does not contain the point {}", i + 1, i + 1)]
    PointMissing { i: usize, set: SubsetMask },
    #[error("missing singleton: fiber {} does not contain {{{}}}", i + 1, i + 1)]
    MissingSingleton { i: usize },
    #[error(
        "transitivity violation: ({s},{}) and ({t},{}) are present and {} ∈ {s}, \
         but their union is missing from fiber {}",
        i + 1, j + 1, j + 1, i + 1
    )]
    TransitivityViolation {
        s: SubsetMask,
        i: usize,
        t: SubsetMask,
        j: usize,
    },
    #[error(
        "union violation: fiber {} contains {s} and {t} but not their union",
        i + 1
    )]
    UnionViolation {
        s: SubsetMask,
        t: SubsetMask,
        i: usize,
    },
    #[error("not a building set: {reason}")]
    NotABuildingSet { reason: String },
}

/// A set together with a distinguished member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSet {
    set: SubsetMask,
    point: usize,
}

impl PointedSet {
    pub fn new(set: SubsetMask, point: usize) -> Result<PointedSet, BuildingError> {
        if !set.contains(point) {
            return Err(BuildingError::PointMissing { i: point, set });
        }
        Ok(PointedSet { set, point })
    }

    pub fn set(&self) -> SubsetMask {
        self.set
    }

    pub fn point(&self) -> usize {
        self.point
    }
}

impl fmt::Display for PointedSet {
    /// `({1,2},1)` with 1-based members.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.set, self.point + 1)
    }
}

impl fmt::Debug for PointedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A validated pointed building set, stored fiber by fiber.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedBuildingSet {
    n: usize,
    fibers: Vec<Vec<SubsetMask>>,
}

impl PointedBuildingSet {
    /// Normalize a candidate fiber family (sort, dedup) and check the three
    /// axioms, reporting the first violation in axiom order.
    pub fn validate(
        n: usize,
        mut fibers: Vec<Vec<SubsetMask>>,
    ) -> Result<PointedBuildingSet, BuildingError> {
        if n == 0 || n > MAX_GROUND {
            return Err(BuildingError::GroundSize { n });
        }
        if fibers.len() != n {
            return Err(BuildingError::FiberCount {
                n,
                got: fibers.len(),
            });
        }
        let full = SubsetMask::full(n);
        for (i, fiber) in fibers.iter_mut().enumerate() {
            fiber.sort();
            fiber.dedup();
            for &set in fiber.iter() {
                if !set.is_subset_of(full) {
                    return Err(BuildingError::MemberOutOfRange { i, set, n });
                }
                if !set.contains(i) {
                    return Err(BuildingError::PointMissing { i, set });
                }
            }
        }
        let b = PointedBuildingSet { n, fibers };
        b.check_axioms()?;
        Ok(b)
    }

    /// For constructors whose output is correct by construction; fibers must
    /// already be sorted and deduped.
    fn from_fibers_unchecked(n: usize, fibers: Vec<Vec<SubsetMask>>) -> PointedBuildingSet {
        let b = PointedBuildingSet { n, fibers };
        debug_assert_eq!(b.check_axioms(), Ok(()));
        b
    }

    /// Re-check the three axioms on an already well-formed fiber family.
    pub fn check_axioms(&self) -> Result<(), BuildingError> {
        for i in 0..self.n {
            if !self.fiber_contains(i, SubsetMask::singleton(i)) {
                return Err(BuildingError::MissingSingleton { i });
            }
        }
        // Transitivity across distinct points. Same-point pairs are covered
        // by the union check below, and together the two checks are
        // equivalent to the unrestricted transitivity axiom.
        for i in 0..self.n {
            for &s in &self.fibers[i] {
                for j in s.iter() {
                    if j == i {
                        continue;
                    }
                    for &t in &self.fibers[j] {
                        if !self.fiber_contains(i, s.union(t)) {
                            return Err(BuildingError::TransitivityViolation { s, i, t, j });
                        }
                    }
                }
            }
        }
        for i in 0..self.n {
            let fiber = &self.fibers[i];
            for (a, &s) in fiber.iter().enumerate() {
                for &t in &fiber[a + 1..] {
                    if !self.fiber_contains(i, s.union(t)) {
                        return Err(BuildingError::UnionViolation { s, t, i });
                    }
                }
            }
        }
        Ok(())
    }

    /// Fibers of a digraph: `B|_v` holds every `S ∋ v` such that each member
    /// of `S` is reachable from `v` by a directed path inside `S`.
    pub fn digraphical(d: &Digraph) -> PointedBuildingSet {
        let n = d.n();
        let full = SubsetMask::full(n);
        let fibers = (0..n)
            .map(|v| {
                let reach = d.reachable_from(v, full).expect("v is in the full set");
                let mut fiber = Vec::new();
                for sub in reach.without(v).subsets() {
                    let s = sub.with(v);
                    if d.reachable_from(v, s).expect("v ∈ s") == s {
                        fiber.push(s);
                    }
                }
                fiber
            })
            .collect();
        PointedBuildingSet::from_fibers_unchecked(n, fibers)
    }

    /// Fibers of an undirected graph: `B|_i` holds every connected `S ∋ i`.
    pub fn graphical(g: &Graph) -> PointedBuildingSet {
        let n = g.n();
        let full = SubsetMask::full(n);
        let fibers = (0..n)
            .map(|v| {
                let reach = g.component_within(v, full).expect("v is in the full set");
                let mut fiber = Vec::new();
                for sub in reach.without(v).subsets() {
                    let s = sub.with(v);
                    if g.component_within(v, s).expect("v ∈ s") == s {
                        fiber.push(s);
                    }
                }
                fiber
            })
            .collect();
        PointedBuildingSet::from_fibers_unchecked(n, fibers)
    }

    /// Point every member of an (unpointed) building set at each of its
    /// elements: `B = { (S, i) : S ∈ X, i ∈ S }`.
    pub fn from_building_set_all_points(
        n: usize,
        sets: &[SubsetMask],
    ) -> Result<PointedBuildingSet, BuildingError> {
        check_building_set(n, sets)?;
        let mut fibers = vec![Vec::new(); n];
        let mut sorted: Vec<SubsetMask> = sets.to_vec();
        sorted.sort();
        sorted.dedup();
        for &s in &sorted {
            for i in s.iter() {
                fibers[i].push(s);
            }
        }
        PointedBuildingSet::validate(n, fibers)
    }

    /// Point every member of an (unpointed) building set at its minimum:
    /// `B = { (S, min S) : S ∈ X } ∪ { ({i}, i) }`. Validated, not assumed.
    pub fn from_building_set_min_points(
        n: usize,
        sets: &[SubsetMask],
    ) -> Result<PointedBuildingSet, BuildingError> {
        check_building_set(n, sets)?;
        let mut fibers: Vec<Vec<SubsetMask>> = (0..n)
            .map(|i| vec![SubsetMask::singleton(i)])
            .collect();
        for &s in sets {
            let i = s.min_element().expect("building set members are nonempty");
            fibers[i].push(s);
        }
        PointedBuildingSet::validate(n, fibers)
    }

    /// Intervals of `{0, .., n-1}` pointed at their left endpoint:
    /// `B|_a = { [a, b] : a <= b < n }`. Equals `digraphical` of the
    /// increasing path.
    pub fn left_segment(n: usize) -> Result<PointedBuildingSet, BuildingError> {
        if n == 0 || n > MAX_GROUND {
            return Err(BuildingError::GroundSize { n });
        }
        let fibers = (0..n)
            .map(|a| {
                (a..n)
                    .map(|b| SubsetMask::from_elements(a..=b))
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(PointedBuildingSet::from_fibers_unchecked(n, fibers))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fiber(&self, i: usize) -> &[SubsetMask] {
        &self.fibers[i]
    }

    pub fn fibers(&self) -> &[Vec<SubsetMask>] {
        &self.fibers
    }

    pub fn fiber_contains(&self, i: usize, set: SubsetMask) -> bool {
        self.fibers[i].binary_search(&set).is_ok()
    }

    /// The inclusion-maximum of fiber `i` (the union of all its members).
    pub fn fiber_max(&self, i: usize) -> SubsetMask {
        *self.fibers[i].last().expect("fibers are never empty")
    }

    /// Total number of pointed sets, counting `(S, i)` and `(S, j)` apart.
    pub fn size(&self) -> usize {
        self.fibers.iter().map(|f| f.len()).sum()
    }

    pub fn pointed_sets(&self) -> impl Iterator<Item = PointedSet> + '_ {
        self.fibers.iter().enumerate().flat_map(|(i, fiber)| {
            fiber
                .iter()
                .map(move |&set| PointedSet { set, point: i })
        })
    }

    /// `(S, i), (T, j) ∈ B` with `i ∈ T` and `j ∈ S` only when `i = j`.
    /// Equivalent check on fiber maxima, since fibers are union-closed.
    pub fn is_acyclic(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.fiber_max(i).contains(j) && self.fiber_max(j).contains(i) {
                    return false;
                }
            }
        }
        true
    }

    /// Every fiber totally ordered by inclusion. Checked on consecutive
    /// entries: numeric order refines inclusion, so a sorted fiber is a
    /// chain iff each entry contains the previous one.
    pub fn fibers_are_chains(&self) -> bool {
        self.fibers
            .iter()
            .all(|fiber| fiber.windows(2).all(|w| w[0].is_subset_of(w[1])))
    }

    /// Fiberwise containment: every pointed set of `self` is one of `other`.
    pub fn is_sub_building_of(&self, other: &PointedBuildingSet) -> bool {
        self.n == other.n
            && (0..self.n)
                .all(|i| self.fibers[i].iter().all(|&s| other.fiber_contains(i, s)))
    }

    pub fn to_json_string(&self) -> String {
        let fibers = self
            .fibers
            .iter()
            .map(|fiber| fiber.iter().map(|s| s.to_one_based()).collect())
            .collect();
        serde_json::to_string_pretty(&BuildingJson { n: self.n, fibers })
            .expect("serialization of plain data cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<PointedBuildingSet, BuildingJsonError> {
        let raw: BuildingJson = serde_json::from_str(text)?;
        let mut fibers = Vec::with_capacity(raw.fibers.len());
        for fiber in &raw.fibers {
            let mut masks = Vec::with_capacity(fiber.len());
            for members in fiber {
                masks.push(SubsetMask::from_one_based(members, raw.n)?);
            }
            fibers.push(masks);
        }
        Ok(PointedBuildingSet::validate(raw.n, fibers)?)
    }
}

/// On-disk schema: 1-based member lists, fiber `k` belongs to point `k`.
#[derive(Serialize, Deserialize)]
struct BuildingJson {
    n: usize,
    fibers: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum BuildingJsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Member(#[from] UniverseError),
    #[error(transparent)]
    Invalid(#[from] BuildingError),
}

/// An (unpointed) building set: nonempty subsets containing all singletons
/// and closed under unions of intersecting pairs.
fn check_building_set(n: usize, sets: &[SubsetMask]) -> Result<(), BuildingError> {
    if n == 0 || n > MAX_GROUND {
        return Err(BuildingError::GroundSize { n });
    }
    let full = SubsetMask::full(n);
    let mut sorted: Vec<SubsetMask> = sets.to_vec();
    sorted.sort();
    sorted.dedup();
    for &s in &sorted {
        if s.is_empty() {
            return Err(BuildingError::NotABuildingSet {
                reason: "contains the empty set".to_string(),
            });
        }
        if !s.is_subset_of(full) {
            return Err(BuildingError::NotABuildingSet {
                reason: format!("{s} has members outside the ground set of size {n}"),
            });
        }
    }
    for i in 0..n {
        if sorted.binary_search(&SubsetMask::singleton(i)).is_err() {
            return Err(BuildingError::NotABuildingSet {
                reason: format!("missing singleton {{{}}}", i + 1),
            });
        }
    }
    for (a, &s) in sorted.iter().enumerate() {
        for &t in &sorted[a + 1..] {
            if !s.intersection(t).is_empty() && sorted.binary_search(&s.union(t)).is_err() {
                return Err(BuildingError::NotABuildingSet {
                    reason: format!("{s} and {t} intersect but their union is missing"),
                });
            }
        }
    }
    Ok(())
}

/// Close each point's family under nonempty unions. The result is raw fiber
/// material and need not satisfy the other axioms; feed it to `validate`.
pub fn pointwise_union_closure(n: usize, pointed: &[PointedSet]) -> Vec<Vec<SubsetMask>> {
    let mut fibers: Vec<Vec<SubsetMask>> = vec![Vec::new(); n];
    for p in pointed {
        fibers[p.point()].push(p.set());
    }
    for fiber in &mut fibers {
        fiber.sort();
        fiber.dedup();
        loop {
            let mut new = Vec::new();
            for (a, &s) in fiber.iter().enumerate() {
                for &t in &fiber[a + 1..] {
                    let u = s.union(t);
                    if fiber.binary_search(&u).is_err() && !new.contains(&u) {
                        new.push(u);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            fiber.extend(new);
            fiber.sort();
        }
    }
    fibers
}
