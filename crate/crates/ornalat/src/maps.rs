//! Maps between ornamentation lattices: duality for directed trees,
//! projections onto sub-building-sets, and the bridge to the weak order on
//! total orders via inversion sets.

use itertools::Itertools;
use thiserror::Error;

use crate::building::PointedBuildingSet;
use crate::lattice::{LatticeError, OrnLattice};
use crate::ornament::{OrnError, Ornamentation};
use crate::poset::FinitePoset;
use crate::universe::{Digraph, SubsetMask};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum MapsError {
    #[error("digraph is not a directed tree")]
    NotATree,
    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("fiber {} member {set} is missing from the enclosing building set", i + 1)]
    NotASubBuildingSet { i: usize, set: SubsetMask },
    #[error(
        "order is not 312-avoiding: ({},{}) and ({},{}) are inversions but ({},{}) is not",
        a + 1, c + 1, b + 1, c + 1, a + 1, b + 1
    )]
    Not312Avoiding { a: usize, b: usize, c: usize },
    #[error("sequence is not a permutation of 1..=n with n at most 64")]
    NotAPermutation,
    #[error(transparent)]
    Orn(#[from] OrnError),
}

/// Order-reversing duality between the ornamentation lattices of a directed
/// tree and of its opposite tree.
#[derive(Clone, Debug)]
pub struct TreeDual {
    d: Digraph,
    d_op: Digraph,
    b: PointedBuildingSet,
    b_op: PointedBuildingSet,
}

impl TreeDual {
    /// Requires a directed tree: `n - 1` arcs, no two arcs on the same
    /// vertex pair, connected underlying graph.
    pub fn new(d: &Digraph) -> Result<TreeDual, MapsError> {
        let n = d.n();
        if d.arc_count() != n - 1 {
            return Err(MapsError::NotATree);
        }
        let d_op = d.opposite();
        for v in 0..n {
            if !d.out(v).intersection(d_op.out(v)).is_empty() {
                return Err(MapsError::NotATree);
            }
        }
        // Symmetrized reachability from vertex 0 must cover everything.
        let mut sym_arcs = d.arcs();
        sym_arcs.extend(d_op.arcs());
        let sym = Digraph::new(n, &sym_arcs).expect("arcs of a valid digraph stay valid");
        let full = SubsetMask::full(n);
        if sym.reachable_from(0, full).expect("0 is a vertex") != full {
            return Err(MapsError::NotATree);
        }
        let b = PointedBuildingSet::digraphical(d);
        let b_op = PointedBuildingSet::digraphical(&d_op);
        Ok(TreeDual {
            d: d.clone(),
            d_op,
            b,
            b_op,
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.d
    }

    pub fn opposite_digraph(&self) -> &Digraph {
        &self.d_op
    }

    pub fn building(&self) -> &PointedBuildingSet {
        &self.b
    }

    pub fn dual_building(&self) -> &PointedBuildingSet {
        &self.b_op
    }

    /// The dual of an ornamentation of the tree, an ornamentation of the
    /// opposite tree. Order-reversing and inverse to [`TreeDual::apply_reverse`].
    pub fn apply(&self, rho: &Ornamentation) -> Ornamentation {
        debug_assert!(Ornamentation::validate(&self.b, rho.values().to_vec()).is_ok());
        dual_values(rho, &self.d_op, &self.b_op)
    }

    /// The dual map in the other direction.
    pub fn apply_reverse(&self, rho: &Ornamentation) -> Ornamentation {
        debug_assert!(Ornamentation::validate(&self.b_op, rho.values().to_vec()).is_ok());
        dual_values(rho, &self.d, &self.b)
    }
}

/// Core of the duality: the blocked-ancestor set of `u` collects `u` itself
/// plus every ancestor whose decoration avoids `u`; the image coordinate is
/// the largest target fiber member inside it.
fn dual_values(
    rho: &Ornamentation,
    target_d: &Digraph,
    target_b: &PointedBuildingSet,
) -> Ornamentation {
    let n = target_d.n();
    let full = SubsetMask::full(n);
    let mut values = Vec::with_capacity(n);
    for u in 0..n {
        let ancestors = target_d
            .reachable_from(u, full)
            .expect("u is a vertex")
            .without(u);
        let mut omega = SubsetMask::singleton(u);
        for v in ancestors.iter() {
            if !rho.value(v).contains(u) {
                omega = omega.with(v);
            }
        }
        values.push(
            target_b
                .fiber(u)
                .iter()
                .copied()
                .filter(|s| s.is_subset_of(omega))
                .fold(SubsetMask::EMPTY, SubsetMask::union),
        );
    }
    Ornamentation::validate(target_b, values).expect("dual of an ornamentation is an ornamentation")
}

/// Shorthand for a one-off application of the tree duality.
pub fn tree_dual(d: &Digraph, rho: &Ornamentation) -> Result<Ornamentation, MapsError> {
    Ok(TreeDual::new(d)?.apply(rho))
}

/// Project an ornamentation of `source` onto a fiberwise-contained building
/// set `target`: each coordinate becomes the largest target fiber member
/// inside it. Monotone, and functorial along chains of containments.
pub fn project(
    target: &PointedBuildingSet,
    source: &PointedBuildingSet,
    rho: &Ornamentation,
) -> Result<Ornamentation, MapsError> {
    if target.n() != source.n() {
        return Err(MapsError::GroundMismatch {
            left: target.n(),
            right: source.n(),
        });
    }
    for i in 0..target.n() {
        for &s in target.fiber(i) {
            if !source.fiber_contains(i, s) {
                return Err(MapsError::NotASubBuildingSet { i, set: s });
            }
        }
    }
    if rho.n() != source.n() {
        return Err(MapsError::GroundMismatch {
            left: rho.n(),
            right: source.n(),
        });
    }
    let values: Vec<SubsetMask> = (0..target.n())
        .map(|i| {
            target
                .fiber(i)
                .iter()
                .copied()
                .filter(|s| s.is_subset_of(rho.value(i)))
                .fold(SubsetMask::EMPTY, SubsetMask::union)
        })
        .collect();
    Ok(Ornamentation::validate(target, values)?)
}

/// A total order on `{0, .., n-1}`, stored as the sequence of elements from
/// smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalOrder {
    seq: Vec<usize>,
}

impl TotalOrder {
    pub fn new(seq: Vec<usize>) -> Result<TotalOrder, MapsError> {
        let n = seq.len();
        if n == 0 || n > 64 {
            return Err(MapsError::NotAPermutation);
        }
        let mut seen = SubsetMask::EMPTY;
        for &x in &seq {
            if x >= n || seen.contains(x) {
                return Err(MapsError::NotAPermutation);
            }
            seen = seen.with(x);
        }
        Ok(TotalOrder { seq })
    }

    pub fn identity(n: usize) -> TotalOrder {
        TotalOrder::new((0..n).collect()).expect("identity is a permutation")
    }

    /// All `n!` total orders, lexicographic by sequence. Guarded to small `n`.
    pub fn all(n: usize) -> Vec<TotalOrder> {
        assert!((1..=8).contains(&n), "full order enumeration needs 1 <= n <= 8");
        (0..n)
            .permutations(n)
            .map(|seq| TotalOrder { seq })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn position(&self, x: usize) -> usize {
        self.seq.iter().position(|&y| y == x).expect("x is ordered")
    }

    /// Inverted pairs `(a, b)` with `a < b` numerically but `b` ordered first.
    pub fn inversions(&self) -> InversionSet {
        let n = self.n();
        let mut pos = vec![0usize; n];
        for (k, &x) in self.seq.iter().enumerate() {
            pos[x] = k;
        }
        let mut above = vec![SubsetMask::EMPTY; n];
        for a in 0..n {
            for b in a + 1..n {
                if pos[b] < pos[a] {
                    above[a] = above[a].with(b);
                }
            }
        }
        InversionSet { n, above }
    }
}

impl std::fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = self.seq.iter().map(|x| (x + 1).to_string()).join(",");
        write!(f, "{text}")
    }
}

/// A set of inverted pairs, row `a` holding the partners above `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    n: usize,
    above: Vec<SubsetMask>,
}

impl InversionSet {
    pub fn empty(n: usize) -> InversionSet {
        InversionSet {
            n,
            above: vec![SubsetMask::EMPTY; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < b);
        self.above[a].contains(b)
    }

    pub fn above(&self, a: usize) -> SubsetMask {
        self.above[a]
    }

    pub fn count(&self) -> usize {
        self.above.iter().map(|m| m.len()).sum()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.above[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn is_subset_of(&self, other: &InversionSet) -> bool {
        assert_eq!(self.n, other.n);
        self.above
            .iter()
            .zip(&other.above)
            .all(|(x, y)| x.is_subset_of(*y))
    }

    pub fn union(&self, other: &InversionSet) -> InversionSet {
        assert_eq!(self.n, other.n);
        InversionSet {
            n: self.n,
            above: self
                .above
                .iter()
                .zip(&other.above)
                .map(|(x, y)| x.union(*y))
                .collect(),
        }
    }

    /// Close under chaining `(a,b), (b,c) => (a,c)`. One descending pass
    /// suffices because partners only increase.
    pub fn transitive_closure(&self) -> InversionSet {
        let mut above = self.above.clone();
        for a in (0..self.n).rev() {
            for b in above[a].iter().collect::<Vec<_>>() {
                above[a] = above[a].union(above[b]);
            }
        }
        InversionSet { n: self.n, above }
    }

    pub fn is_closed(&self) -> bool {
        (0..self.n).all(|a| self.above[a].iter().all(|b| self.above[b].is_subset_of(self.above[a])))
    }

    /// `(a,c)` present forces `(a,b)` or `(b,c)` for every `a < b < c`.
    pub fn is_coclosed(&self) -> bool {
        (0..self.n).all(|a| {
            self.above[a].iter().all(|c| {
                (a + 1..c).all(|b| self.above[a].contains(b) || self.above[b].contains(c))
            })
        })
    }

    /// Reconstruct the unique total order with these inversions. The set
    /// must be closed and coclosed; the result is verified by recomputing
    /// its inversions.
    pub fn to_order(&self) -> TotalOrder {
        assert!(self.is_closed(), "inversion set is not transitively closed");
        assert!(self.is_coclosed(), "inversion set is not transitively coclosed");
        let mut seq: Vec<usize> = (0..self.n).collect();
        seq.sort_by(|&x, &y| {
            let precedes = if x < y {
                !self.contains(x, y)
            } else {
                self.contains(y, x)
            };
            if precedes {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        let order = TotalOrder { seq };
        assert_eq!(
            &order.inversions(),
            self,
            "inversion set is not realizable as a total order"
        );
        order
    }
}

/// Interval decorations of a 312-avoiding order: each element is decorated
/// by itself plus its inversion partners above.
pub fn order_to_orn(t: &TotalOrder) -> Result<Ornamentation, MapsError> {
    let n = t.n();
    let inv = t.inversions();
    for a in 0..n {
        for c in inv.above(a).iter() {
            for b in a + 1..c {
                if inv.contains(b, c) && !inv.contains(a, b) {
                    return Err(MapsError::Not312Avoiding { a, b, c });
                }
            }
        }
    }
    let b = PointedBuildingSet::left_segment(n).expect("1 <= n <= 64 after permutation check");
    let values: Vec<SubsetMask> = (0..n).map(|a| inv.above(a).with(a)).collect();
    Ok(Ornamentation::validate(&b, values)?)
}

/// Inverse of [`order_to_orn`]: read the inversion pairs off an interval
/// decoration and sort the ground set accordingly.
pub fn orn_to_order(rho: &Ornamentation) -> TotalOrder {
    let n = rho.n();
    let above: Vec<SubsetMask> = (0..n)
        .map(|a| {
            let v = rho.value(a);
            debug_assert_eq!(v.min_element(), Some(a));
            v.without(a)
        })
        .collect();
    InversionSet { n, above }.to_order()
}

/// Join in the weak order: union the inversion sets, close transitively,
/// and check the result is still coclosed before reading the order back.
pub fn weak_join<'a, I>(n: usize, orders: I) -> TotalOrder
where
    I: IntoIterator<Item = &'a TotalOrder>,
{
    let mut inv = InversionSet::empty(n);
    for t in orders {
        assert_eq!(t.n(), n);
        inv = inv.union(&t.inversions());
    }
    let closed = inv.transitive_closure();
    assert!(
        closed.is_coclosed(),
        "closure of a union of inversion sets must stay coclosed"
    );
    closed.to_order()
}

/// All total orders with the containment order on inversion sets.
pub fn weak_order_poset(n: usize) -> (Vec<TotalOrder>, FinitePoset) {
    let orders = TotalOrder::all(n);
    let inv: Vec<InversionSet> = orders.iter().map(TotalOrder::inversions).collect();
    let poset = FinitePoset::from_leq(orders.len(), |a, b| inv[a].is_subset_of(&inv[b]));
    (orders, poset)
}

/// Check that the 312-avoiding orders under the weak order are a copy of
/// the interval-decoration lattice: same elements under [`order_to_orn`],
/// with containment of inversion sets matching the lattice order exactly.
pub fn weak312_iso_check(n: usize) -> bool {
    let b = PointedBuildingSet::left_segment(n).expect("small ground");
    let lat = OrnLattice::enumerate(&b, 100_000).expect("interval lattices are small");
    let avoiders: Vec<(TotalOrder, Ornamentation)> = TotalOrder::all(n)
        .into_iter()
        .filter_map(|t| order_to_orn(&t).ok().map(|o| (t, o)))
        .collect();
    let mut image: Vec<&Ornamentation> = avoiders.iter().map(|(_, o)| o).collect();
    image.sort();
    image.dedup();
    if image.len() != lat.len() || !image.iter().zip(lat.elements()).all(|(a, b)| *a == b) {
        return false;
    }
    avoiders.iter().all(|(s, so)| {
        avoiders.iter().all(|(t, to)| {
            s.inversions().is_subset_of(&t.inversions()) == so.leq(to)
        })
    })
}

/// True iff some relabeling of the vertices turns `a` into `b`.
pub fn digraphs_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return false;
    }
    let n = a.n();
    (0..n).permutations(n).any(|p| {
        (0..n).all(|u| {
            let image = a.out(u).iter().fold(SubsetMask::EMPTY, |m, v| m.with(p[v]));
            image == b.out(p[u])
        })
    })
}

/// A self-converse acyclic digraph whose ornamentation lattice admits no
/// order-reversing bijection onto the lattice of the opposite digraph.
#[derive(Clone, Debug)]
pub struct DualityFailure {
    pub digraph: Digraph,
    pub lattice_size: usize,
}

/// Scan acyclic digraphs by vertex count, then by arc bitmask, and return
/// the first self-converse one whose lattice is not self-dual. This is the
/// witness that tree duality does not extend to acyclic digraphs.
pub fn find_duality_failure(
    max_n: usize,
    cap: usize,
) -> Result<Option<DualityFailure>, LatticeError> {
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        assert!(slots.len() < 31, "digraph scan is limited to small grounds");
        for mask in 0u64..(1u64 << slots.len()) {
            let arcs: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &arc)| arc)
                .collect();
            let d = Digraph::new(n, &arcs).expect("slots are valid arcs");
            if d.has_directed_cycle() {
                continue;
            }
            let d_op = d.opposite();
            if !digraphs_isomorphic(&d, &d_op) {
                continue;
            }
            let lat = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d), cap)?;
            let lat_op = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d_op), cap)?;
            // Isomorphic digraphs always give isomorphic lattices; the
            // question is whether the duality direction reverses.
            debug_assert!(lat.poset().iso(lat_op.poset(), false).is_some());
            if lat.poset().iso(lat_op.poset(), true).is_none() {
                return Ok(Some(DualityFailure {
                    digraph: d,
                    lattice_size: lat.len(),
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().copied())
    }

    #[test]
    fn tree_detection() {
        assert!(TreeDual::new(&Digraph::path(3).unwrap()).is_ok());
        assert!(TreeDual::new(&Digraph::path(1).unwrap()).is_ok());
        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(TreeDual::new(&star).is_ok());
        assert_eq!(
            TreeDual::new(&Digraph::cycle(3).unwrap()).unwrap_err(),
            MapsError::NotATree
        );
        // Right count but an opposite pair.
        let two_cycle = Digraph::new(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(TreeDual::new(&two_cycle).unwrap_err(), MapsError::NotATree);
        // Forest, not connected.
        let forest = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(TreeDual::new(&forest).unwrap_err(), MapsError::NotATree);
    }

    #[test]
    fn path_duality_swaps_extremes_and_reverses_order() {
        let dual = TreeDual::new(&Digraph::path(3).unwrap()).unwrap();
        let lat = OrnLattice::enumerate(dual.building(), 100).unwrap();
        let lat_op = OrnLattice::enumerate(dual.dual_building(), 100).unwrap();
        assert_eq!(
            dual.apply(&Ornamentation::minimum(dual.building())),
            Ornamentation::maximum(dual.dual_building())
        );
        assert_eq!(
            dual.apply(&Ornamentation::maximum(dual.building())),
            Ornamentation::minimum(dual.dual_building())
        );
        let images: Vec<usize> = lat
            .elements()
            .iter()
            .map(|o| lat_op.index_of(&dual.apply(o)).expect("image is an element"))
            .collect();
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), lat_op.len());
        for x in 0..lat.len() {
            for y in 0..lat.len() {
                assert_eq!(lat.leq(x, y), lat_op.leq(images[y], images[x]));
            }
            let there = dual.apply(lat.element(x));
            assert_eq!(&dual.apply_reverse(&there), lat.element(x));
        }
    }

    #[test]
    fn star_duality_is_a_bijection() {
        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let dual = TreeDual::new(&star).unwrap();
        let lat = OrnLattice::enumerate(dual.building(), 100).unwrap();
        let lat_op = OrnLattice::enumerate(dual.dual_building(), 100).unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(lat_op.len(), 4);
        let mut images: Vec<Ornamentation> =
            lat.elements().iter().map(|o| dual.apply(o)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 4);
        for o in lat.elements() {
            assert_eq!(&dual.apply_reverse(&dual.apply(o)), o);
        }
    }

    #[test]
    fn projection_examples() {
        let big = PointedBuildingSet::left_segment(3).unwrap();
        let small = PointedBuildingSet::digraphical(&Digraph::new(3, &[(0, 1)]).unwrap());
        let lat = OrnLattice::enumerate(&big, 100).unwrap();
        // Identity projection changes nothing.
        for o in lat.elements() {
            assert_eq!(&project(&big, &big, o).unwrap(), o);
        }
        // Coordinate 0 collapses onto {0} or {0,1}; the rest go to singletons.
        let top = Ornamentation::maximum(&big);
        let image = project(&small, &big, &top).unwrap();
        assert_eq!(image.value(0), m(&[0, 1]));
        assert_eq!(image.value(1), m(&[1]));
        assert_eq!(image.value(2), m(&[2]));
        // Monotone on every comparable pair.
        let images: Vec<Ornamentation> = lat
            .elements()
            .iter()
            .map(|o| project(&small, &big, o).unwrap())
            .collect();
        for x in 0..lat.len() {
            for y in 0..lat.len() {
                if lat.leq(x, y) {
                    assert!(images[x].leq(&images[y]));
                }
            }
        }
    }

    #[test]
    fn projection_rejects_non_sub_building() {
        let k3 = PointedBuildingSet::graphical(&crate::universe::Graph::complete(3).unwrap());
        let seg = PointedBuildingSet::left_segment(3).unwrap();
        let rho = Ornamentation::maximum(&seg);
        assert_eq!(
            project(&k3, &seg, &rho).unwrap_err(),
            MapsError::NotASubBuildingSet {
                i: 0,
                set: m(&[0, 2])
            }
        );
        let seg2 = PointedBuildingSet::left_segment(2).unwrap();
        assert!(matches!(
            project(&seg2, &seg, &rho).unwrap_err(),
            MapsError::GroundMismatch { .. }
        ));
    }

    #[test]
    fn total_order_basics() {
        assert_eq!(TotalOrder::all(3).len(), 6);
        assert_eq!(TotalOrder::all(3)[0], TotalOrder::identity(3));
        assert!(TotalOrder::new(vec![0, 0, 1]).is_err());
        assert!(TotalOrder::new(vec![0, 3]).is_err());
        assert!(TotalOrder::new(vec![]).is_err());
        let t = TotalOrder::new(vec![1, 0, 2]).unwrap();
        assert_eq!(t.to_string(), "2,1,3");
        assert_eq!(t.inversions().pairs(), vec![(0, 1)]);
        assert_eq!(t.position(2), 2);
    }

    #[test]
    fn inversion_closure_and_coclosure() {
        // {(0,1), (1,2)} chains to (0,2).
        let t = TotalOrder::new(vec![2, 1, 0]).unwrap();
        assert_eq!(t.inversions().count(), 3);
        let partial = InversionSet {
            n: 3,
            above: vec![m(&[1]), m(&[2]), SubsetMask::EMPTY],
        };
        assert!(!partial.is_closed());
        let closed = partial.transitive_closure();
        assert!(closed.is_closed());
        assert_eq!(closed.count(), 3);
        // {(0,2)} alone is closed but not coclosed.
        let gap = InversionSet {
            n: 3,
            above: vec![m(&[2]), SubsetMask::EMPTY, SubsetMask::EMPTY],
        };
        assert!(gap.is_closed());
        assert!(!gap.is_coclosed());
    }

    #[test]
    fn order_round_trips_through_decorations() {
        for n in 1..=5 {
            for t in TotalOrder::all(n) {
                if let Ok(o) = order_to_orn(&t) {
                    assert_eq!(orn_to_order(&o), t);
                }
            }
        }
    }

    #[test]
    fn the_pattern_witness_is_reported() {
        let t = TotalOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(
            order_to_orn(&t).unwrap_err(),
            MapsError::Not312Avoiding { a: 0, b: 1, c: 2 }
        );
    }

    #[test]
    fn weak_join_of_adjacent_swaps_is_the_long_element() {
        let s1 = TotalOrder::new(vec![1, 0, 2]).unwrap();
        let s2 = TotalOrder::new(vec![0, 2, 1]).unwrap();
        let j = weak_join(3, [&s1, &s2]);
        assert_eq!(j, TotalOrder::new(vec![2, 1, 0]).unwrap());
        // Empty join is the identity.
        assert_eq!(weak_join(3, []), TotalOrder::identity(3));
    }

    #[test]
    fn weak_join_matches_brute_force_least_upper_bound() {
        for n in 2..=4 {
            let orders = TotalOrder::all(n);
            let invs: Vec<InversionSet> = orders.iter().map(TotalOrder::inversions).collect();
            for s in &orders {
                for t in &orders {
                    let j = weak_join(n, [s, t]);
                    let ji = j.inversions();
                    let si = s.inversions();
                    let ti = t.inversions();
                    assert!(si.is_subset_of(&ji) && ti.is_subset_of(&ji));
                    for (u, ui) in orders.iter().zip(&invs) {
                        if si.is_subset_of(ui) && ti.is_subset_of(ui) {
                            assert!(ji.is_subset_of(ui), "join of {s} and {t} vs {u}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weak_312_sublattice_matches_interval_decorations() {
        for n in 1..=4 {
            assert!(weak312_iso_check(n), "n = {n}");
        }
    }

    #[test]
    fn duality_fails_first_on_three_vertices() {
        let w = find_duality_failure(5, 10_000).unwrap().expect("witness exists");
        let d = w.digraph;
        assert_eq!(d.n(), 3);
        assert_eq!(d.arc_count(), 3);
        assert!(!d.has_directed_cycle());
        assert!(digraphs_isomorphic(&d, &d.opposite()));
        assert_eq!(w.lattice_size, 7);
        let lat = OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d), 100).unwrap();
        let lat_op =
            OrnLattice::enumerate(&PointedBuildingSet::digraphical(&d.opposite()), 100).unwrap();
        assert!(lat.iso_check(&lat_op, false).is_some());
        assert!(lat.iso_check(&lat_op, true).is_none());
    }

    #[test]
    fn digraph_isomorphism_examples() {
        let p = Digraph::path(3).unwrap();
        assert!(digraphs_isomorphic(&p, &p.opposite()));
        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!digraphs_isomorphic(&star, &star.opposite()));
        assert!(!digraphs_isomorphic(&p, &star));
    }
}
