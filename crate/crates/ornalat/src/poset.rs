//! Finite posets as bit matrices, with covers, chains, lattice checks, and
//! isomorphism search.
//!
//! This is the order-theoretic engine shared by the ornamentation lattice,
//! the weak order on permutations, arc lattices, and the biclosed subposet.
//! Elements are indices `0..m`; the order is stored twice (up-sets and
//! down-sets) so both directions are row scans.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

/// Row-major bit matrix; row `r` is a set over `0..cols`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> BitMatrix {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }
}

pub fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub fn and_into(dest: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dest.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

pub fn andnot_into(dest: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dest.iter_mut().zip(a).zip(b) {
        *d = x & !y;
    }
}

pub fn count_ones(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

pub fn iter_ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &bits)| {
        let mut rest = bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// A finite poset on `0..m` with precomputed up-sets and down-sets
/// (both reflexive).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    m: usize,
    up: BitMatrix,
    down: BitMatrix,
}

impl FinitePoset {
    /// Build from a comparison closure, which must already be a partial
    /// order (reflexivity is forced; antisymmetry and transitivity are the
    /// caller's obligation and are checked in debug builds).
    pub fn from_leq<F: Fn(usize, usize) -> bool>(m: usize, leq: F) -> FinitePoset {
        let mut up = BitMatrix::new(m, m);
        let mut down = BitMatrix::new(m, m);
        for a in 0..m {
            for b in 0..m {
                if a == b || leq(a, b) {
                    up.set(a, b);
                    down.set(b, a);
                }
            }
        }
        let p = FinitePoset { m, up, down };
        debug_assert!(p.respects_order_axioms());
        p
    }

    fn respects_order_axioms(&self) -> bool {
        for a in 0..self.m {
            for b in iter_ones(self.up.row(a)) {
                if a != b && self.get_leq(b, a) {
                    return false;
                }
                // up[b] ⊆ up[a] is transitivity.
                if and_count(self.up.row(b), self.up.row(a)) != count_ones(self.up.row(b)) {
                    return false;
                }
            }
        }
        true
    }

    fn get_leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.get_leq(a, b)
    }

    pub fn up_row(&self, a: usize) -> &[u64] {
        self.up.row(a)
    }

    pub fn down_row(&self, a: usize) -> &[u64] {
        self.down.row(a)
    }

    pub fn words(&self) -> usize {
        self.up.words()
    }

    /// The same elements with the order reversed.
    pub fn reversed(&self) -> FinitePoset {
        FinitePoset {
            m: self.m,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Cover pairs `(lo, hi)` sorted lexicographically: `hi` covers `lo`
    /// iff the interval `[lo, hi]` has exactly the two endpoints.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.m {
            for hi in iter_ones(self.up.row(lo)) {
                if hi != lo && and_count(self.up.row(lo), self.down.row(hi)) == 2 {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// Number of elements on a longest chain (1 for a single point).
    pub fn longest_chain(&self) -> usize {
        if self.m == 0 {
            return 0;
        }
        // Down-set size is a strictly monotone rank, so sorting by it gives
        // a linear extension.
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&x| count_ones(self.down.row(x)));
        let mut len = vec![1usize; self.m];
        for &x in &order {
            for y in iter_ones(self.down.row(x)) {
                if y != x {
                    len[x] = len[x].max(len[y] + 1);
                }
            }
        }
        len.into_iter().max().unwrap()
    }

    /// Minimal elements of `set` (a row over `0..m`): count capped at 2
    /// plus the first witness.
    pub fn minimals_in(&self, set: &[u64]) -> (usize, Option<usize>) {
        let mut count = 0;
        let mut first = None;
        for z in iter_ones(set) {
            if and_count(self.down.row(z), set) == 1 {
                count += 1;
                if first.is_none() {
                    first = Some(z);
                }
                if count == 2 {
                    break;
                }
            }
        }
        (count, first)
    }

    pub fn maximals_in(&self, set: &[u64]) -> (usize, Option<usize>) {
        let mut count = 0;
        let mut first = None;
        for z in iter_ones(set) {
            if and_count(self.up.row(z), set) == 1 {
                count += 1;
                if first.is_none() {
                    first = Some(z);
                }
                if count == 2 {
                    break;
                }
            }
        }
        (count, first)
    }

    /// Restrict to a subset of elements (indices into `self`, ascending);
    /// element `k` of the result is `members[k]`.
    pub fn induced(&self, members: &[usize]) -> FinitePoset {
        FinitePoset::from_leq(members.len(), |a, b| self.leq(members[a], members[b]))
    }

    /// Check that every pair has a least upper bound and a greatest lower
    /// bound inside this poset; on failure return an offending pair and
    /// which bound is missing.
    pub fn pairwise_bounds_exist(&self) -> Result<(), BoundFailure> {
        let words = self.words();
        let mut buf = vec![0u64; words];
        for a in 0..self.m {
            for b in a + 1..self.m {
                // A join exists iff the common upper bounds have a unique
                // minimal element (zero means no upper bound at all).
                and_into(&mut buf, self.up.row(a), self.up.row(b));
                if self.minimals_in(&buf).0 != 1 {
                    return Err(BoundFailure {
                        a,
                        b,
                        kind: BoundKind::Join,
                    });
                }
                and_into(&mut buf, self.down.row(a), self.down.row(b));
                if self.maximals_in(&buf).0 != 1 {
                    return Err(BoundFailure {
                        a,
                        b,
                        kind: BoundKind::Meet,
                    });
                }
            }
        }
        Ok(())
    }

    /// Iteratively refined structural fingerprints; equal under isomorphism.
    fn signatures(&self) -> Vec<u64> {
        let covers = self.covers();
        let mut cov_up: Vec<Vec<usize>> = vec![Vec::new(); self.m];
        let mut cov_down: Vec<Vec<usize>> = vec![Vec::new(); self.m];
        for &(lo, hi) in &covers {
            cov_up[lo].push(hi);
            cov_down[hi].push(lo);
        }
        let mut sig: Vec<u64> = (0..self.m)
            .map(|x| {
                let mut h = DefaultHasher::new();
                count_ones(self.down.row(x)).hash(&mut h);
                count_ones(self.up.row(x)).hash(&mut h);
                cov_down[x].len().hash(&mut h);
                cov_up[x].len().hash(&mut h);
                h.finish()
            })
            .collect();
        // Refine until the partition into equal-signature classes is stable.
        let mut classes = distinct_count(&sig);
        loop {
            let next: Vec<u64> = (0..self.m)
                .map(|x| {
                    let mut h = DefaultHasher::new();
                    sig[x].hash(&mut h);
                    let mut below: Vec<u64> = cov_down[x].iter().map(|&y| sig[y]).collect();
                    below.sort_unstable();
                    below.hash(&mut h);
                    let mut above: Vec<u64> = cov_up[x].iter().map(|&y| sig[y]).collect();
                    above.sort_unstable();
                    above.hash(&mut h);
                    h.finish()
                })
                .collect();
            let next_classes = distinct_count(&next);
            sig = next;
            if next_classes == classes {
                break;
            }
            classes = next_classes;
        }
        sig
    }

    /// Order isomorphism (or anti-isomorphism) witness: a bijection
    /// `f: self -> other` with `a ⪯ b` iff `f(a) ⪯ f(b)` (reversed when
    /// `anti`). Exhaustive backtracking over signature-compatible images,
    /// so `None` means no such map exists.
    pub fn iso(&self, other: &FinitePoset, anti: bool) -> Option<Vec<usize>> {
        if self.m != other.m {
            return None;
        }
        let target = if anti { other.reversed() } else { other.clone() };
        let sig_a = self.signatures();
        let sig_b = target.signatures();
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return None;
        }
        // Candidate images per element, most constrained first.
        let candidates: Vec<Vec<usize>> = (0..self.m)
            .map(|a| (0..self.m).filter(|&b| sig_b[b] == sig_a[a]).collect())
            .collect();
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&a| (candidates[a].len(), a));
        let mut image: Vec<Option<usize>> = vec![None; self.m];
        let mut used: Vec<bool> = vec![false; self.m];
        let mut assigned: Vec<usize> = Vec::with_capacity(self.m);
        if self.iso_backtrack(&target, &candidates, &order, 0, &mut image, &mut used, &mut assigned)
        {
            Some(image.into_iter().map(|b| b.unwrap()).collect())
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_backtrack(
        &self,
        target: &FinitePoset,
        candidates: &[Vec<usize>],
        order: &[usize],
        depth: usize,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        assigned: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for &b in &candidates[a] {
            if used[b] {
                continue;
            }
            let consistent = assigned.iter().all(|&a2| {
                let b2 = image[a2].unwrap();
                self.leq(a, a2) == target.leq(b, b2) && self.leq(a2, a) == target.leq(b2, b)
            });
            if !consistent {
                continue;
            }
            image[a] = Some(b);
            used[b] = true;
            assigned.push(a);
            if self.iso_backtrack(target, candidates, order, depth + 1, image, used, assigned) {
                return true;
            }
            assigned.pop();
            used[b] = false;
            image[a] = None;
        }
        false
    }
}

fn distinct_count(sig: &[u64]) -> usize {
    let mut v = sig.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

/// A pair with no least upper bound (or no greatest lower bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundFailure {
    pub a: usize,
    pub b: usize,
    pub kind: BoundKind,
}
