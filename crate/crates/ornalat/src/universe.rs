//! Ground sets, subsets as machine words, and (di)graph reachability.
//!
//! Everything downstream manipulates subsets of a ground set `{0, .., n-1}`
//! with `n <= 64`, so a subset is one `u64` and the hot operations (union,
//! intersection, containment) are single instructions.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported ground set; a subset must fit in one machine word.
pub const MAX_GROUND: usize = 64;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum UniverseError {
    #[error("ground set size {n} out of range (must be 1..={MAX_GROUND})")]
    GroundSize { n: usize },
    #[error("vertex {} out of range for ground set of size {n}", v + 1)]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {}", v + 1)]
    SelfLoop { v: usize },
    #[error("start vertex {} lies outside the restriction set {within}", start + 1)]
    SourceOutsideWithin { start: usize, within: SubsetMask },
    #[error("subset {mask} has members outside the ground set of size {n}")]
    MaskOutOfRange { mask: SubsetMask, n: usize },
}

/// A subset of `{0, .., 63}` packed into a `u64`.
///
/// The derived `Ord` is numeric, which refines inclusion: `a ⊆ b` implies
/// `a <= b`. Sorting a fiber therefore puts its inclusion-maximum last.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn singleton(i: usize) -> SubsetMask {
        assert!(i < MAX_GROUND, "element {i} out of range");
        SubsetMask(1 << i)
    }

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> SubsetMask {
        assert!(n <= MAX_GROUND, "ground set size {n} out of range");
        if n == MAX_GROUND {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> SubsetMask {
        let mut mask = SubsetMask::EMPTY;
        for i in elements {
            mask = mask.with(i);
        }
        mask
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn from_raw(bits: u64) -> SubsetMask {
        SubsetMask(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> SubsetMask {
        assert!(i < MAX_GROUND, "element {i} out of range");
        SubsetMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> SubsetMask {
        assert!(i < MAX_GROUND, "element {i} out of range");
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing numeric order (starts with the
    /// empty set, ends with `self`).
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let universe = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let sub = next?;
            next = if sub == universe {
                None
            } else {
                Some((sub.wrapping_sub(universe)) & universe)
            };
            Some(SubsetMask(sub))
        })
    }

    /// Members as 1-based indices, increasing. This is the I/O convention.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Parse a 1-based member list, rejecting members outside `{1, .., n}`.
    pub fn from_one_based(members: &[usize], n: usize) -> Result<SubsetMask, UniverseError> {
        let mut mask = SubsetMask::EMPTY;
        for &m in members {
            if m == 0 || m > n {
                return Err(UniverseError::VertexOutOfRange {
                    v: m.wrapping_sub(1),
                    n,
                });
            }
            mask = mask.with(m - 1);
        }
        Ok(mask)
    }
}

impl fmt::Display for SubsetMask {
    /// 1-based member list, e.g. `{1,3,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersection(rhs)
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> SubsetMask {
        SubsetMask::from_elements(iter)
    }
}

fn check_ground(n: usize) -> Result<(), UniverseError> {
    if n == 0 || n > MAX_GROUND {
        Err(UniverseError::GroundSize { n })
    } else {
        Ok(())
    }
}

fn check_edges(n: usize, edges: &[(usize, usize)]) -> Result<(), UniverseError> {
    for &(u, v) in edges {
        if u >= n {
            return Err(UniverseError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(UniverseError::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(UniverseError::SelfLoop { v: u });
        }
    }
    Ok(())
}

/// A loopless digraph on `{0, .., n-1}` stored as out-neighbor masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<SubsetMask>,
}

impl Digraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Digraph, UniverseError> {
        check_ground(n)?;
        check_edges(n, edges)?;
        let mut out = vec![SubsetMask::EMPTY; n];
        for &(u, v) in edges {
            out[u] = out[u].with(v);
        }
        Ok(Digraph { n, out })
    }

    /// `0 -> 1 -> .. -> n-1`.
    pub fn path(n: usize) -> Result<Digraph, UniverseError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Digraph::new(n, &edges)
    }

    /// The oriented cycle `0 -> 1 -> .. -> n-1 -> 0`; needs `n >= 2`.
    pub fn cycle(n: usize) -> Result<Digraph, UniverseError> {
        if n < 2 {
            return Err(UniverseError::SelfLoop { v: 0 });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Digraph::new(n, &edges)
    }

    /// Arcs `i -> j` for every `i < j` (the complete digraph in natural order).
    pub fn transitive_tournament(n: usize) -> Result<Digraph, UniverseError> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Digraph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out(&self, v: usize) -> SubsetMask {
        self.out[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.len()).sum()
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in self.out[u].iter() {
                arcs.push((u, v));
            }
        }
        arcs
    }

    /// The digraph with every arc reversed.
    pub fn opposite(&self) -> Digraph {
        let mut out = vec![SubsetMask::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.out[u].iter() {
                out[v] = out[v].with(u);
            }
        }
        Digraph { n: self.n, out }
    }

    /// Vertices reachable from `source` by directed paths that stay inside
    /// `within`, including `source` itself.
    pub fn reachable_from(
        &self,
        source: usize,
        within: SubsetMask,
    ) -> Result<SubsetMask, UniverseError> {
        if !within.is_subset_of(SubsetMask::full(self.n)) {
            return Err(UniverseError::MaskOutOfRange {
                mask: within,
                n: self.n,
            });
        }
        if !within.contains(source) {
            return Err(UniverseError::SourceOutsideWithin { start: source, within });
        }
        let mut seen = SubsetMask::singleton(source);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = SubsetMask::EMPTY;
            for v in frontier.iter() {
                next = next | self.out[v];
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen | frontier;
        }
        Ok(seen)
    }

    /// Arc `u -> v` in the result iff a nonempty directed path `u -> .. -> v`
    /// exists with `u != v`; paths from a vertex back to itself are dropped
    /// because the representation is loopless.
    pub fn transitive_closure(&self) -> Digraph {
        let full = SubsetMask::full(self.n);
        let mut out = Vec::with_capacity(self.n);
        for v in 0..self.n {
            // Everything reachable by a nonempty path: BFS seeded from the
            // out-neighbors rather than from v.
            let mut seen = self.out[v];
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = SubsetMask::EMPTY;
                for u in frontier.iter() {
                    next = next | self.out[u];
                }
                frontier = next.intersection(full).difference(seen);
                seen = seen | frontier;
            }
            out.push(seen.without(v));
        }
        Digraph { n: self.n, out }
    }

    /// True iff some nonempty directed path returns to its start.
    pub fn has_directed_cycle(&self) -> bool {
        (0..self.n).any(|v| {
            let mut seen = self.out[v];
            let mut frontier = seen;
            while !frontier.is_empty() && !seen.contains(v) {
                let mut next = SubsetMask::EMPTY;
                for u in frontier.iter() {
                    next = next | self.out[u];
                }
                frontier = next.difference(seen);
                seen = seen | frontier;
            }
            seen.contains(v)
        })
    }
}

/// A simple undirected graph on `{0, .., n-1}` stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<SubsetMask>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, UniverseError> {
        check_ground(n)?;
        check_edges(n, edges)?;
        let mut adj = vec![SubsetMask::EMPTY; n];
        for &(u, v) in edges {
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Graph, UniverseError> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges)
    }

    /// `0 - 1 - .. - n-1`.
    pub fn path(n: usize) -> Result<Graph, UniverseError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// The n-cycle; needs `n >= 3` to stay simple.
    pub fn cycle(n: usize) -> Result<Graph, UniverseError> {
        if n < 3 {
            return Err(UniverseError::SelfLoop { v: 0 });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adj(&self, v: usize) -> SubsetMask {
        self.adj[v]
    }

    /// The connected component of `source` in the subgraph induced on
    /// `within`, including `source`.
    pub fn component_within(
        &self,
        source: usize,
        within: SubsetMask,
    ) -> Result<SubsetMask, UniverseError> {
        if !within.is_subset_of(SubsetMask::full(self.n)) {
            return Err(UniverseError::MaskOutOfRange {
                mask: within,
                n: self.n,
            });
        }
        if !within.contains(source) {
            return Err(UniverseError::SourceOutsideWithin { start: source, within });
        }
        let mut seen = SubsetMask::singleton(source);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = SubsetMask::EMPTY;
            for v in frontier.iter() {
                next = next | self.adj[v];
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen | frontier;
        }
        Ok(seen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().copied())
    }

    #[test]
    fn mask_basics() {
        let a = m(&[0, 2, 3]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(2));
        assert!(!a.contains(1));
        assert_eq!(a.to_one_based(), vec![1, 3, 4]);
        assert_eq!(a.to_string(), "{1,3,4}");
        assert_eq!(SubsetMask::full(64).len(), 64);
        assert_eq!(SubsetMask::full(3), m(&[0, 1, 2]));
        assert_eq!(a.min_element(), Some(0));
        assert_eq!(SubsetMask::EMPTY.min_element(), None);
    }

    #[test]
    fn mask_order_refines_inclusion() {
        let a = m(&[0, 2]);
        let b = m(&[0, 1, 2]);
        assert!(a.is_subset_of(b));
        assert!(a < b);
    }

    #[test]
    fn subsets_enumerates_all() {
        let subs: Vec<_> = m(&[0, 2]).subsets().collect();
        assert_eq!(subs, vec![m(&[]), m(&[0]), m(&[2]), m(&[0, 2])]);
    }

    #[test]
    fn one_based_rejects_out_of_range() {
        assert!(SubsetMask::from_one_based(&[1, 4], 3).is_err());
        assert!(SubsetMask::from_one_based(&[0], 3).is_err());
        assert_eq!(SubsetMask::from_one_based(&[3, 1], 3).unwrap(), m(&[0, 2]));
    }

    #[test]
    fn digraph_constructor_rejections() {
        assert_eq!(
            Digraph::new(0, &[]),
            Err(UniverseError::GroundSize { n: 0 })
        );
        assert_eq!(
            Digraph::new(2, &[(0, 2)]),
            Err(UniverseError::VertexOutOfRange { v: 2, n: 2 })
        );
        assert_eq!(
            Digraph::new(2, &[(1, 1)]),
            Err(UniverseError::SelfLoop { v: 1 })
        );
    }

    #[test]
    fn reachability_on_a_path() {
        let d = Digraph::path(3).unwrap();
        let full = SubsetMask::full(3);
        assert_eq!(d.reachable_from(0, full).unwrap(), m(&[0, 1, 2]));
        assert_eq!(d.reachable_from(1, full).unwrap(), m(&[1, 2]));
        // Removing the middle vertex cuts the path.
        assert_eq!(d.reachable_from(0, m(&[0, 2])).unwrap(), m(&[0]));
        assert_eq!(
            d.reachable_from(0, m(&[1, 2])),
            Err(UniverseError::SourceOutsideWithin {
                start: 0,
                within: m(&[1, 2]),
            })
        );
    }

    #[test]
    fn closure_of_cycle_is_complete() {
        let d = Digraph::cycle(3).unwrap();
        let c = d.transitive_closure();
        for u in 0..3 {
            assert_eq!(c.out(u), SubsetMask::full(3).without(u));
        }
        assert!(d.has_directed_cycle());
        assert!(!Digraph::path(4).unwrap().has_directed_cycle());
    }

    #[test]
    fn closure_of_path_is_increasing_pairs() {
        let c = Digraph::path(4).unwrap().transitive_closure();
        for u in 0..4 {
            assert_eq!(c.out(u), SubsetMask::from_elements(u + 1..4));
        }
        let edgeless = Digraph::new(3, &[]).unwrap();
        assert_eq!(edgeless.transitive_closure(), edgeless);
    }

    #[test]
    fn opposite_reverses_arcs() {
        let d = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(d.opposite().arcs(), vec![(1, 0), (2, 1)]);
        assert_eq!(d.opposite().opposite(), d);
    }

    #[test]
    fn graph_components() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let full = SubsetMask::full(4);
        assert_eq!(g.component_within(0, full).unwrap(), m(&[0, 1]));
        assert_eq!(g.component_within(3, full).unwrap(), m(&[2, 3]));
        assert_eq!(g.component_within(0, m(&[0, 2, 3])).unwrap(), m(&[0]));
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |edges| Digraph::new(n, &edges).unwrap())
        })
    }

    proptest! {
        // Shrinking `within` can only shrink the reachable set.
        #[test]
        fn reachability_monotone_in_within(d in arb_digraph(6), bits in any::<u64>()) {
            let n = d.n();
            let full = SubsetMask::full(n);
            let within = SubsetMask::from_raw(bits).intersection(full).with(0);
            let r_small = d.reachable_from(0, within).unwrap();
            let r_full = d.reachable_from(0, full).unwrap();
            prop_assert!(r_small.is_subset_of(r_full));
            prop_assert!(r_small.is_subset_of(within));
            prop_assert!(r_small.contains(0));
        }

        #[test]
        fn closure_is_idempotent(d in arb_digraph(6)) {
            let c = d.transitive_closure();
            prop_assert_eq!(c.transitive_closure(), c);
        }

        // Closure out-sets are exactly reachability minus the source.
        #[test]
        fn closure_matches_reachability(d in arb_digraph(6)) {
            let c = d.transitive_closure();
            let full = SubsetMask::full(d.n());
            for v in 0..d.n() {
                let r = d.reachable_from(v, full).unwrap();
                prop_assert_eq!(c.out(v), r.without(v));
            }
        }
    }
}
