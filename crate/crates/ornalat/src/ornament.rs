//! Ornamentations of a pointed building set and their meet and join.
//!
//! An ornamentation picks a value `ρ(i)` in fiber `B|_i` for every point,
//! subject to transitivity: `j ∈ ρ(i)` forces `ρ(j) ⊆ ρ(i)`. Ordered by
//! componentwise inclusion these form a complete lattice.
//!
//! The meet is computed fiberwise: `(⋀Ω)(i)` is the largest fiber member
//! contained in `⋂_{ρ∈Ω} ρ(i)`, which exists because fibers are closed
//! under nonempty unions. The componentwise union `σ` of a family is not
//! transitive in general, so the join closes it off: walk the digraph with
//! an arc `i -> j` for every `j ∈ σ(i)` and take `(⋁Ω)(i)` to be the union
//! of `σ(j)` over all `j` reachable from `i`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::building::{PointedBuildingSet, PointedSet};
use crate::universe::{SubsetMask, UniverseError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum OrnError {
    #[error("expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("value {set} at point {} is not in that point's fiber", i + 1)]
    NotInFiber { i: usize, set: SubsetMask },
    #[error(
        "not transitive: {} lies in the value at {}, but the value at {} is not contained in it",
        j + 1, i + 1, j + 1
    )]
    NotTransitive { i: usize, j: usize },
}

/// A transitive fiberwise choice, one subset per point.
///
/// The derived `Ord` is lexicographic on the value masks. Componentwise
/// inclusion implies componentwise numeric order, so this is a linear
/// extension of the lattice order; sorted element lists start at the
/// minimum and end at the maximum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornamentation {
    values: Vec<SubsetMask>,
}

impl Ornamentation {
    /// Check fiber membership and transitivity for a candidate value list.
    pub fn validate(
        b: &PointedBuildingSet,
        values: Vec<SubsetMask>,
    ) -> Result<Ornamentation, OrnError> {
        if values.len() != b.n() {
            return Err(OrnError::SizeMismatch {
                expected: b.n(),
                got: values.len(),
            });
        }
        for (i, &v) in values.iter().enumerate() {
            if !b.fiber_contains(i, v) {
                return Err(OrnError::NotInFiber { i, set: v });
            }
        }
        for (i, &v) in values.iter().enumerate() {
            for j in v.iter() {
                if !values[j].is_subset_of(v) {
                    return Err(OrnError::NotTransitive { i, j });
                }
            }
        }
        Ok(Ornamentation { values })
    }

    /// For internally computed values that are transitive by construction.
    pub(crate) fn from_values_unchecked(
        b: &PointedBuildingSet,
        values: Vec<SubsetMask>,
    ) -> Ornamentation {
        debug_assert!(Ornamentation::validate(b, values.clone()).is_ok());
        let _ = b;
        Ornamentation { values }
    }

    /// Every point keeps its singleton; the bottom of the lattice.
    pub fn minimum(b: &PointedBuildingSet) -> Ornamentation {
        let values = (0..b.n()).map(SubsetMask::singleton).collect();
        Ornamentation::from_values_unchecked(b, values)
    }

    /// Every point takes its fiber's maximum; the top of the lattice.
    /// Transitive because `j ∈ max_i` makes everything reachable from `j`
    /// reachable from `i` through the transitivity axiom.
    pub fn maximum(b: &PointedBuildingSet) -> Ornamentation {
        let values = (0..b.n()).map(|i| b.fiber_max(i)).collect();
        Ornamentation::from_values_unchecked(b, values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize) -> SubsetMask {
        self.values[i]
    }

    pub fn values(&self) -> &[SubsetMask] {
        &self.values
    }

    /// Componentwise inclusion, the lattice order.
    pub fn leq(&self, other: &Ornamentation) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.is_subset_of(*b))
    }

    /// `(S, i)` embedded as the smallest ornamentation with value `S` at `i`:
    /// `S` there, singletons everywhere else.
    pub fn principal_embed(
        b: &PointedBuildingSet,
        pointed: &PointedSet,
    ) -> Result<Ornamentation, OrnError> {
        let i = pointed.point();
        let s = pointed.set();
        if i >= b.n() || !b.fiber_contains(i, s) {
            return Err(OrnError::NotInFiber { i, set: s });
        }
        let values = (0..b.n())
            .map(|j| if j == i { s } else { SubsetMask::singleton(j) })
            .collect();
        Ornamentation::validate(b, values)
    }

    /// Greatest lower bound of a family; the empty family yields the top.
    pub fn meet<'a, I>(b: &PointedBuildingSet, omega: I) -> Ornamentation
    where
        I: IntoIterator<Item = &'a Ornamentation>,
    {
        let full = SubsetMask::full(b.n());
        let mut caps = vec![full; b.n()];
        for rho in omega {
            assert_eq!(rho.n(), b.n(), "ornamentation over a different ground set");
            for i in 0..b.n() {
                caps[i] = caps[i].intersection(rho.values[i]);
            }
        }
        // Largest fiber member inside the intersection: the union of all
        // such members, which union closure keeps in the fiber.
        let values = (0..b.n())
            .map(|i| {
                b.fiber(i)
                    .iter()
                    .copied()
                    .filter(|s| s.is_subset_of(caps[i]))
                    .fold(SubsetMask::EMPTY, SubsetMask::union)
            })
            .collect();
        Ornamentation::from_values_unchecked(b, values)
    }

    /// Least upper bound of a family; the empty family yields the bottom.
    pub fn join<'a, I>(b: &PointedBuildingSet, omega: I) -> Ornamentation
    where
        I: IntoIterator<Item = &'a Ornamentation>,
    {
        let n = b.n();
        let mut sigma = vec![SubsetMask::EMPTY; n];
        let mut empty = true;
        for rho in omega {
            assert_eq!(rho.n(), n, "ornamentation over a different ground set");
            empty = false;
            for i in 0..n {
                sigma[i] = sigma[i].union(rho.values[i]);
            }
        }
        if empty {
            return Ornamentation::minimum(b);
        }
        // Close σ transitively: ν(i) unions σ over everything reachable
        // from i in the digraph with arcs i -> j for j ∈ σ(i).
        let values = (0..n)
            .map(|i| {
                let mut seen = SubsetMask::singleton(i);
                let mut frontier = seen;
                while !frontier.is_empty() {
                    let mut next = SubsetMask::EMPTY;
                    for v in frontier.iter() {
                        next = next | sigma[v];
                    }
                    frontier = next.difference(seen);
                    seen = seen | frontier;
                }
                seen.iter()
                    .fold(SubsetMask::EMPTY, |acc, j| acc.union(sigma[j]))
            })
            .collect();
        Ornamentation::from_values_unchecked(b, values)
    }

    pub fn meet2(b: &PointedBuildingSet, x: &Ornamentation, y: &Ornamentation) -> Ornamentation {
        Ornamentation::meet(b, [x, y])
    }

    pub fn join2(b: &PointedBuildingSet, x: &Ornamentation, y: &Ornamentation) -> Ornamentation {
        Ornamentation::join(b, [x, y])
    }

    pub fn to_json_string(&self) -> String {
        let values = self.values.iter().map(|v| v.to_one_based()).collect();
        serde_json::to_string_pretty(&OrnJson { values })
            .expect("serialization of plain data cannot fail")
    }

    pub fn from_json_str(
        b: &PointedBuildingSet,
        text: &str,
    ) -> Result<Ornamentation, OrnJsonError> {
        let raw: OrnJson = serde_json::from_str(text)?;
        let mut values = Vec::with_capacity(raw.values.len());
        for members in &raw.values {
            values.push(SubsetMask::from_one_based(members, b.n())?);
        }
        Ok(Ornamentation::validate(b, values)?)
    }

    /// Inverse of [`Display`](std::fmt::Display): parse `({1},{1,2},{3})`
    /// back into a validated ornamentation of `b`. `None` on malformed text
    /// or an invalid decoration.
    pub fn parse_display(b: &PointedBuildingSet, text: &str) -> Option<Ornamentation> {
        let inner = text.strip_prefix('(')?.strip_suffix(')')?;
        let mut values = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body_and_on = rest.strip_prefix('{')?;
            let (body, on) = body_and_on.split_once('}')?;
            let mut members = Vec::new();
            for tok in body.split(',') {
                members.push(tok.trim().parse::<usize>().ok()?);
            }
            values.push(SubsetMask::from_one_based(&members, b.n()).ok()?);
            rest = on.strip_prefix(',').unwrap_or(on);
        }
        Ornamentation::validate(b, values).ok()
    }
}

impl fmt::Display for Ornamentation {
    /// `({1},{1,2},{3})` with 1-based members, coordinates in point order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ornamentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// On-disk schema: entry `k` is the 1-based member list of the value at
/// point `k`.
#[derive(Serialize, Deserialize)]
struct OrnJson {
    values: Vec<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum OrnJsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Member(#[from] UniverseError),
    #[error(transparent)]
    Invalid(#[from] OrnError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Graph;

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().copied())
    }

    fn orn(b: &PointedBuildingSet, values: &[SubsetMask]) -> Ornamentation {
        Ornamentation::validate(b, values.to_vec()).unwrap()
    }

    /// Brute-force reference enumeration: every fiber combination that
    /// validates. Quadratic and unbatched on purpose; only for tests.
    fn enumerate_by_filter(b: &PointedBuildingSet) -> Vec<Ornamentation> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::<SubsetMask>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == b.n() {
                if let Ok(o) = Ornamentation::validate(b, prefix) {
                    out.push(o);
                }
                continue;
            }
            let i = prefix.len();
            for &s in b.fiber(i).iter().rev() {
                let mut next = prefix.clone();
                next.push(s);
                stack.push(next);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn validation_examples() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        assert!(Ornamentation::validate(
            &tam3,
            vec![m(&[0]), m(&[1]), m(&[2])]
        )
        .is_ok());
        assert!(Ornamentation::validate(&tam3, vec![m(&[0, 1]), m(&[1]), m(&[2])]).is_ok());
        // 1 ∈ ρ(0) but ρ(1) ⊄ ρ(0).
        assert_eq!(
            Ornamentation::validate(&tam3, vec![m(&[0, 1]), m(&[1, 2]), m(&[2])]),
            Err(OrnError::NotTransitive { i: 0, j: 1 })
        );
        assert_eq!(
            Ornamentation::validate(&tam3, vec![m(&[0, 2]), m(&[1]), m(&[2])]),
            Err(OrnError::NotInFiber {
                i: 0,
                set: m(&[0, 2])
            })
        );
        assert_eq!(
            Ornamentation::validate(&tam3, vec![m(&[0]), m(&[1])]),
            Err(OrnError::SizeMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn extremes_and_order() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        let bot = Ornamentation::minimum(&tam3);
        let top = Ornamentation::maximum(&tam3);
        assert_eq!(bot.to_string(), "({1},{2},{3})");
        assert_eq!(top.to_string(), "({1,2,3},{2,3},{3})");
        assert!(bot.leq(&top));
        assert!(!top.leq(&bot));
        for o in enumerate_by_filter(&tam3) {
            assert!(bot.leq(&o) && o.leq(&top));
        }
    }

    #[test]
    fn join_closes_off_transitivity() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        let a = orn(&tam3, &[m(&[0, 1]), m(&[1]), m(&[2])]);
        let b = orn(&tam3, &[m(&[0]), m(&[1, 2]), m(&[2])]);
        // The raw componentwise union ({1,2},{2,3},{3}) is not transitive;
        // the join pushes {2,3} into the value at the first point.
        let j = Ornamentation::join2(&tam3, &a, &b);
        assert_eq!(j, orn(&tam3, &[m(&[0, 1, 2]), m(&[1, 2]), m(&[2])]));
        let meet = Ornamentation::meet2(&tam3, &a, &b);
        assert_eq!(meet, Ornamentation::minimum(&tam3));
    }

    #[test]
    fn meet_picks_largest_fiber_member_in_intersection() {
        let k3 = PointedBuildingSet::graphical(&Graph::complete(3).unwrap());
        let full = m(&[0, 1, 2]);
        let x = orn(&k3, &[full, full, full]);
        let y = orn(&k3, &[m(&[0, 1]), m(&[0, 1]), m(&[2])]);
        let meet = Ornamentation::meet2(&k3, &x, &y);
        assert_eq!(meet, y);
        // Intersection {0,1} ∩ {0,2} = {0} at the first point.
        let z = orn(&k3, &[m(&[0, 2]), m(&[1]), m(&[0, 2])]);
        assert_eq!(
            Ornamentation::meet2(&k3, &y, &z),
            Ornamentation::minimum(&k3)
        );
    }

    #[test]
    fn empty_and_singleton_families() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        assert_eq!(
            Ornamentation::meet(&tam3, []),
            Ornamentation::maximum(&tam3)
        );
        assert_eq!(
            Ornamentation::join(&tam3, []),
            Ornamentation::minimum(&tam3)
        );
        let a = orn(&tam3, &[m(&[0, 1]), m(&[1]), m(&[2])]);
        assert_eq!(Ornamentation::meet(&tam3, [&a]), a);
        assert_eq!(Ornamentation::join(&tam3, [&a]), a);
    }

    #[test]
    fn principal_embedding() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        let p = PointedSet::new(m(&[0, 1]), 0).unwrap();
        let e = Ornamentation::principal_embed(&tam3, &p).unwrap();
        assert_eq!(e, orn(&tam3, &[m(&[0, 1]), m(&[1]), m(&[2])]));
        // Principal embeddings are the smallest elements with that value.
        for o in enumerate_by_filter(&tam3) {
            if o.value(0) == m(&[0, 1]) {
                assert!(e.leq(&o));
            }
        }
        let q = PointedSet::new(m(&[0, 2]), 0).unwrap();
        assert_eq!(
            Ornamentation::principal_embed(&tam3, &q),
            Err(OrnError::NotInFiber {
                i: 0,
                set: m(&[0, 2])
            })
        );
    }

    #[test]
    fn lattice_laws_exhaustive_on_small_cases() {
        let cases = [
            PointedBuildingSet::left_segment(4).unwrap(),
            PointedBuildingSet::graphical(&Graph::complete(3).unwrap()),
            PointedBuildingSet::digraphical(&crate::universe::Digraph::cycle(3).unwrap()),
        ];
        for b in &cases {
            let all = enumerate_by_filter(b);
            for x in &all {
                assert_eq!(&Ornamentation::join2(b, x, x), x);
                assert_eq!(&Ornamentation::meet2(b, x, x), x);
                for y in &all {
                    let jxy = Ornamentation::join2(b, x, y);
                    let mxy = Ornamentation::meet2(b, x, y);
                    assert_eq!(jxy, Ornamentation::join2(b, y, x));
                    assert_eq!(mxy, Ornamentation::meet2(b, y, x));
                    // Absorption.
                    assert_eq!(&Ornamentation::meet2(b, x, &jxy), x);
                    assert_eq!(&Ornamentation::join2(b, x, &mxy), x);
                    // Outputs stay inside the element set.
                    assert!(all.binary_search(&jxy).is_ok());
                    assert!(all.binary_search(&mxy).is_ok());
                    // Bounds.
                    assert!(mxy.leq(x) && mxy.leq(y));
                    assert!(x.leq(&jxy) && y.leq(&jxy));
                    for z in &all {
                        assert_eq!(
                            Ornamentation::join2(b, &jxy, z),
                            Ornamentation::join2(b, x, &Ornamentation::join2(b, y, z))
                        );
                        assert_eq!(
                            Ornamentation::meet2(b, &mxy, z),
                            Ornamentation::meet2(b, x, &Ornamentation::meet2(b, y, z))
                        );
                        // Universality.
                        if z.leq(x) && z.leq(y) {
                            assert!(z.leq(&mxy));
                        }
                        if x.leq(z) && y.leq(z) {
                            assert!(jxy.leq(z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        let a = orn(&tam3, &[m(&[0, 1]), m(&[1]), m(&[2])]);
        let back = Ornamentation::from_json_str(&tam3, &a.to_json_string()).unwrap();
        assert_eq!(a, back);
        assert!(Ornamentation::from_json_str(&tam3, "{\"values\": [[1]]}").is_err());
    }

    #[test]
    fn display_round_trip() {
        let tam3 = PointedBuildingSet::left_segment(3).unwrap();
        let a = orn(&tam3, &[m(&[0, 1]), m(&[1]), m(&[2])]);
        assert_eq!(a.to_string(), "({1,2},{2},{3})");
        assert_eq!(Ornamentation::parse_display(&tam3, &a.to_string()), Some(a));
        assert_eq!(Ornamentation::parse_display(&tam3, "({1},{2})"), None);
        assert_eq!(Ornamentation::parse_display(&tam3, "garbage"), None);
        // Valid syntax, invalid decoration: {1,3} is not an interval fiber member.
        assert_eq!(Ornamentation::parse_display(&tam3, "({1,3},{2},{3})"), None);
    }
}
