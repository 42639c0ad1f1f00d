//! Candidates, partial orders, profiles, and the order-construction
//! utilities shared by every other module.
//!
//! Partial orders are stored as their strict part, transitively closed at
//! construction time. All values are immutable once built.

use crate::error::{Error, Result};
use std::fmt;

/// Default cap on completion enumeration. Exceeding a cap is an error,
/// never silent truncation.
pub const DEFAULT_COMPLETION_CAP: u64 = 1_000_000;

/// The candidate roster of an election: dense indices `0..m` with unique
/// display labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    labels: Vec<String>,
}

impl CandidateSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyInput { what: "candidate set" });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].iter().any(|b| b == a) {
                return Err(Error::DuplicateCandidate { index: i });
            }
        }
        Ok(CandidateSet { labels })
    }

    /// Roster with generated labels `c0, c1, ...`.
    pub fn generic(m: usize) -> Self {
        CandidateSet { labels: (0..m).map(|i| format!("c{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A strict partial order over candidate indices `0..m`, kept transitively
/// closed. Irreflexive and acyclic by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    m: usize,
    rel: Vec<bool>, // rel[a * m + b] <=> a precedes b
}

impl fmt::Debug for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialOrder(m={}, {:?})", self.m, self.pairs())
    }
}

impl PartialOrder {
    /// Builds the transitive closure of `pairs`, rejecting cycles and
    /// out-of-range indices.
    pub fn new(m: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![false; m * m];
        for &(a, b) in pairs {
            if a >= m {
                return Err(Error::Range { index: a, m });
            }
            if b >= m {
                return Err(Error::Range { index: b, m });
            }
            rel[a * m + b] = true;
        }
        let mut p = PartialOrder { m, rel };
        p.close()?;
        Ok(p)
    }

    pub fn empty(m: usize) -> Self {
        PartialOrder { m, rel: vec![false; m * m] }
    }

    fn close(&mut self) -> Result<()> {
        let m = self.m;
        for k in 0..m {
            for a in 0..m {
                if self.rel[a * m + k] {
                    for b in 0..m {
                        if self.rel[k * m + b] {
                            self.rel[a * m + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..m {
            if self.rel[a * m + a] {
                return Err(Error::Cycle { candidate: a });
            }
        }
        Ok(())
    }

    pub fn candidate_count(&self) -> usize {
        self.m
    }

    /// Whether `a` is constrained to precede `b`.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.m + b]
    }

    /// All ordered pairs of the closure, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in 0..self.m {
                if self.rel[a * self.m + b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn pair_count(&self) -> usize {
        self.rel.iter().filter(|&&x| x).count()
    }

    /// Union of two orders over the same candidates; fails on induced cycles.
    pub fn union(&self, other: &PartialOrder) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::Range { index: other.m, m: self.m });
        }
        let mut rel = self.rel.clone();
        for (i, &x) in other.rel.iter().enumerate() {
            rel[i] |= x;
        }
        let mut p = PartialOrder { m: self.m, rel };
        p.close()?;
        Ok(p)
    }

    /// The reversed order: `(a, b)` is present iff `(b, a)` was.
    pub fn reversed(&self) -> Self {
        let m = self.m;
        let mut rel = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                rel[b * m + a] = self.rel[a * m + b];
            }
        }
        PartialOrder { m, rel }
    }

    /// Re-indexes the order into a larger candidate space via `map`
    /// (old index -> new index).
    pub fn embed(&self, new_m: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.m {
            return Err(Error::LengthMismatch { left: map.len(), right: self.m });
        }
        let mut pairs = Vec::with_capacity(self.pair_count());
        for a in 0..self.m {
            for b in 0..self.m {
                if self.rel[a * self.m + b] {
                    pairs.push((map[a], map[b]));
                }
            }
        }
        PartialOrder::new(new_m, &pairs)
    }

    pub fn is_extended_by(&self, t: &LinearOrder) -> bool {
        if t.candidate_count() != self.m {
            return false;
        }
        for a in 0..self.m {
            for b in 0..self.m {
                if self.rel[a * self.m + b] && t.position_of(a) > t.position_of(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Streams every linear extension exactly once, lexicographically by the
    /// top-down candidate sequence.
    pub fn extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// Number of linear extensions, or `None` once the count exceeds `cap`.
    pub fn count_extensions(&self, cap: u64) -> Option<u64> {
        let mut used = vec![false; self.m];
        let mut count = 0u64;
        if self.count_rec(&mut used, 0, cap, &mut count) {
            Some(count)
        } else {
            None
        }
    }

    fn count_rec(&self, used: &mut [bool], depth: usize, cap: u64, count: &mut u64) -> bool {
        if depth == self.m {
            *count += 1;
            return *count <= cap;
        }
        for c in 0..self.m {
            if !used[c] && self.placeable(c, used) {
                used[c] = true;
                let ok = self.count_rec(used, depth + 1, cap, count);
                used[c] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn placeable(&self, c: usize, used: &[bool]) -> bool {
        (0..self.m).all(|a| !self.rel[a * self.m + c] || used[a])
    }
}

/// A total order on candidates: `order[p]` is the candidate at (0-based)
/// position `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    order: Vec<usize>,
    pos: Vec<usize>, // inverse permutation
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder{:?}", self.order)
    }
}

impl LinearOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let m = order.len();
        let mut pos = vec![usize::MAX; m];
        for (p, &c) in order.iter().enumerate() {
            if c >= m {
                return Err(Error::Range { index: c, m });
            }
            if pos[c] != usize::MAX {
                return Err(Error::DuplicateCandidate { index: c });
            }
            pos[c] = p;
        }
        Ok(LinearOrder { order, pos })
    }

    /// The ascending order `0, 1, ..., m-1`.
    pub fn identity(m: usize) -> Self {
        LinearOrder { order: (0..m).collect(), pos: (0..m).collect() }
    }

    pub fn candidate_count(&self) -> usize {
        self.order.len()
    }

    /// Candidate at 0-based position `p`.
    pub fn candidate_at(&self, p: usize) -> usize {
        self.order[p]
    }

    /// 0-based position of candidate `c`.
    pub fn position_of(&self, c: usize) -> usize {
        self.pos[c]
    }

    /// Whether `a` is ranked above `b`.
    pub fn ranks_above(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        LinearOrder::new(order).expect("reversal preserves permutations")
    }

    pub fn as_partial_order(&self) -> PartialOrder {
        let m = self.order.len();
        let mut rel = vec![false; m * m];
        for i in 0..m {
            for j in i + 1..m {
                rel[self.order[i] * m + self.order[j]] = true;
            }
        }
        PartialOrder { m, rel }
    }

    /// Re-indexes into a larger candidate space; the result ranks unmapped
    /// candidates nowhere, so `map` must cover all of `new_m` for a total
    /// order. Used with `map` a bijection.
    pub fn embed(&self, new_m: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.order.len() || new_m != self.order.len() {
            return Err(Error::LengthMismatch { left: map.len(), right: self.order.len() });
        }
        LinearOrder::new(self.order.iter().map(|&c| map[c]).collect())
    }
}

/// Rotation `M_i`: sends `(a_1, ..., a_t)` to `(a_i, ..., a_t, a_1, ..., a_{i-1})`
/// for 1-based `i`.
pub fn rotate<T: Clone>(i: usize, items: &[T]) -> Result<Vec<T>> {
    let t = items.len();
    if i < 1 || i > t {
        return Err(Error::Range { index: i, m: t });
    }
    let mut out = Vec::with_capacity(t);
    out.extend_from_slice(&items[i - 1..]);
    out.extend_from_slice(&items[..i - 1]);
    Ok(out)
}

/// The `i`th circular vote of a full order.
pub fn circular_vote(i: usize, seq: &LinearOrder) -> Result<LinearOrder> {
    LinearOrder::new(rotate(i, seq.as_slice())?)
}

/// Partial order placing every member of an earlier block before every
/// member of a later block; candidates absent from all blocks are
/// unconstrained.
pub fn partitioned_order(m: usize, blocks: &[Vec<usize>]) -> Result<PartialOrder> {
    check_blocks(m, blocks)?;
    let mut pairs = Vec::new();
    for (i, early) in blocks.iter().enumerate() {
        for late in &blocks[i + 1..] {
            for &a in early {
                for &b in late {
                    pairs.push((a, b));
                }
            }
        }
    }
    PartialOrder::new(m, &pairs)
}

/// Deterministic completion of a partitioned order: ascending index within
/// each block, candidates absent from all blocks trailing in ascending
/// order.
pub fn partitioned_completion(m: usize, blocks: &[Vec<usize>]) -> Result<LinearOrder> {
    check_blocks(m, blocks)?;
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for block in blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for c in sorted {
            seen[c] = true;
            order.push(c);
        }
    }
    for c in 0..m {
        if !seen[c] {
            order.push(c);
        }
    }
    LinearOrder::new(order)
}

fn check_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; m];
    for block in blocks {
        for &c in block {
            if c >= m {
                return Err(Error::Range { index: c, m });
            }
            if seen[c] {
                return Err(Error::Overlap { candidate: c });
            }
            seen[c] = true;
        }
    }
    Ok(())
}

/// One linear order per voter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteProfile {
    m: usize,
    votes: Vec<LinearOrder>,
}

impl CompleteProfile {
    pub fn new(m: usize, votes: Vec<LinearOrder>) -> Result<Self> {
        for v in &votes {
            if v.candidate_count() != m {
                return Err(Error::LengthMismatch { left: v.candidate_count(), right: m });
            }
        }
        Ok(CompleteProfile { m, votes })
    }

    pub fn candidate_count(&self) -> usize {
        self.m
    }

    pub fn voter_count(&self) -> usize {
        self.votes.len()
    }

    pub fn votes(&self) -> &[LinearOrder] {
        &self.votes
    }

    pub fn concat(&self, other: &CompleteProfile) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::LengthMismatch { left: other.m, right: self.m });
        }
        let mut votes = self.votes.clone();
        votes.extend(other.votes.iter().cloned());
        Ok(CompleteProfile { m: self.m, votes })
    }

    pub fn as_partial(&self) -> PartialProfile {
        PartialProfile {
            voters: self.votes.iter().map(|v| v.as_partial_order()).collect(),
        }
    }
}

/// One partial order per voter, all over the same candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProfile {
    voters: Vec<PartialOrder>,
}

impl PartialProfile {
    pub fn new(voters: Vec<PartialOrder>) -> Result<Self> {
        if voters.is_empty() {
            return Err(Error::EmptyInput { what: "profile" });
        }
        let m = voters[0].candidate_count();
        for v in &voters {
            if v.candidate_count() != m {
                return Err(Error::LengthMismatch { left: v.candidate_count(), right: m });
            }
        }
        Ok(PartialProfile { voters })
    }

    pub fn candidate_count(&self) -> usize {
        self.voters[0].candidate_count()
    }

    pub fn voter_count(&self) -> usize {
        self.voters.len()
    }

    pub fn voters(&self) -> &[PartialOrder] {
        &self.voters
    }

    pub fn reversed(&self) -> Self {
        PartialProfile { voters: self.voters.iter().map(|v| v.reversed()).collect() }
    }

    pub fn concat(&self, other: &PartialProfile) -> Result<Self> {
        let mut voters = self.voters.clone();
        voters.extend(other.voters.iter().cloned());
        PartialProfile::new(voters)
    }

    /// Number of completions, or `None` once the product exceeds `cap`.
    pub fn count_completions(&self, cap: u64) -> Option<u64> {
        let mut total = 1u64;
        for v in &self.voters {
            let per = v.count_extensions(cap)?;
            total = total.checked_mul(per)?;
            if total > cap {
                return None;
            }
        }
        Some(total)
    }

    /// Streams every completion (Cartesian product of per-voter extensions,
    /// first voter most significant). Fails upfront if the count exceeds
    /// `cap`.
    pub fn completions(&self, cap: u64) -> Result<Completions> {
        if self.count_completions(cap).is_none() {
            return Err(Error::Limit { what: "completion enumeration", cap });
        }
        let per_voter: Vec<Vec<LinearOrder>> =
            self.voters.iter().map(|v| v.extensions().collect()).collect();
        Ok(Completions { m: self.candidate_count(), per_voter, index: None })
    }
}

/// Iterator over completions of a partial profile.
pub struct Completions {
    m: usize,
    per_voter: Vec<Vec<LinearOrder>>,
    index: Option<Vec<usize>>, // odometer; None = not started
}

impl Completions {
    /// Per-voter extension lists backing the enumeration.
    pub fn per_voter(&self) -> &[Vec<LinearOrder>] {
        &self.per_voter
    }

    fn current(&self) -> CompleteProfile {
        let idx = self.index.as_ref().unwrap();
        let votes = idx.iter().zip(&self.per_voter).map(|(&i, v)| v[i].clone()).collect();
        CompleteProfile { m: self.m, votes }
    }
}

impl Iterator for Completions {
    type Item = CompleteProfile;

    fn next(&mut self) -> Option<CompleteProfile> {
        match &mut self.index {
            None => {
                self.index = Some(vec![0; self.per_voter.len()]);
                Some(self.current())
            }
            Some(idx) => {
                // advance the odometer, last voter fastest
                for i in (0..idx.len()).rev() {
                    idx[i] += 1;
                    if idx[i] < self.per_voter[i].len() {
                        return Some(self.current());
                    }
                    idx[i] = 0;
                }
                None
            }
        }
    }
}

/// Lazy lexicographic enumeration of linear extensions.
pub struct LinearExtensions<'a> {
    p: &'a PartialOrder,
    prefix: Vec<usize>,
    used: Vec<bool>,
    next_try: Vec<usize>,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(p: &'a PartialOrder) -> Self {
        let m = p.candidate_count();
        LinearExtensions {
            p,
            prefix: Vec::with_capacity(m),
            used: vec![false; m],
            next_try: vec![0; m + 1],
            done: false,
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let m = self.p.candidate_count();
        if self.done {
            return None;
        }
        if m == 0 {
            self.done = true;
            return Some(LinearOrder::new(Vec::new()).unwrap());
        }
        loop {
            let depth = self.prefix.len();
            if depth == m {
                let out = LinearOrder::new(self.prefix.clone()).unwrap();
                // backtrack so the next call resumes the search
                let last = self.prefix.pop().unwrap();
                self.used[last] = false;
                self.next_try[self.prefix.len()] = last + 1;
                return Some(out);
            }
            let mut advanced = false;
            let start = self.next_try[depth];
            for c in start..m {
                if !self.used[c] && self.p.placeable(c, &self.used) {
                    self.used[c] = true;
                    self.prefix.push(c);
                    self.next_try[depth] = c; // remember where we are
                    self.next_try[depth + 1] = 0;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                match self.prefix.pop() {
                    Some(last) => {
                        self.used[last] = false;
                        self.next_try[self.prefix.len()] = last + 1;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(m: usize, pairs: &[(usize, usize)]) -> PartialOrder {
        PartialOrder::new(m, pairs).unwrap()
    }

    #[test]
    fn closure_adds_transitive_pair() {
        let p = order(3, &[(0, 1), (1, 2)]);
        assert!(p.prefers(0, 2));
        assert_eq!(p.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn empty_order_has_no_pairs() {
        let p = order(2, &[]);
        assert!(p.pairs().is_empty());
    }

    #[test]
    fn antisymmetry_violation_is_a_cycle() {
        assert!(matches!(PartialOrder::new(2, &[(0, 1), (1, 0)]), Err(Error::Cycle { .. })));
    }

    #[test]
    fn out_of_range_pair_rejected() {
        assert!(matches!(PartialOrder::new(2, &[(0, 5)]), Err(Error::Range { .. })));
    }

    #[test]
    fn extensions_of_empty_order_are_all_permutations() {
        let p = PartialOrder::empty(3);
        let all: Vec<_> = p.extensions().collect();
        assert_eq!(all.len(), 6);
        // lexicographic by top-down candidate sequence
        assert_eq!(all[0].as_slice(), &[0, 1, 2]);
        assert_eq!(all[5].as_slice(), &[2, 1, 0]);
    }

    #[test]
    fn total_order_extends_only_to_itself() {
        let t = LinearOrder::new(vec![2, 0, 1]).unwrap();
        let p = t.as_partial_order();
        let all: Vec<_> = p.extensions().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], t);
    }

    #[test]
    fn extension_count_matches_brute_force_filter() {
        // brute force: filter all 6 permutations of 3 elements
        let p = order(3, &[(0, 1)]);
        let mut expect = 0;
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let t = LinearOrder::new(perm.to_vec()).unwrap();
            if p.is_extended_by(&t) {
                expect += 1;
            }
        }
        assert_eq!(expect, 3);
        assert_eq!(p.extensions().count(), 3);
        assert_eq!(p.count_extensions(100), Some(3));
    }

    #[test]
    fn extension_cap_is_detected() {
        let p = PartialOrder::empty(4);
        assert_eq!(p.count_extensions(23), None);
        assert_eq!(p.count_extensions(24), Some(24));
    }

    #[test]
    fn completions_are_the_cartesian_product() {
        let pp = PartialProfile::new(vec![PartialOrder::empty(2), PartialOrder::empty(2)]).unwrap();
        assert_eq!(pp.count_completions(100), Some(4));
        assert_eq!(pp.completions(100).unwrap().count(), 4);
    }

    #[test]
    fn complete_profile_has_one_completion() {
        let t = LinearOrder::new(vec![0, 1, 2]).unwrap();
        let pp = PartialProfile::new(vec![t.as_partial_order()]).unwrap();
        assert_eq!(pp.count_completions(10), Some(1));
    }

    #[test]
    fn mixed_profile_completion_count() {
        // voter 1 constrained by one pair (3 extensions), voter 2 free (6)
        let pp =
            PartialProfile::new(vec![order(3, &[(0, 1)]), PartialOrder::empty(3)]).unwrap();
        assert_eq!(pp.count_completions(1000), Some(18));
        assert_eq!(pp.completions(1000).unwrap().count(), 18);
    }

    #[test]
    fn completions_cap_errors() {
        let pp = PartialProfile::new(vec![PartialOrder::empty(3); 2]).unwrap();
        assert!(matches!(pp.completions(10), Err(Error::Limit { .. })));
    }

    #[test]
    fn partitioned_order_examples() {
        let p = partitioned_order(3, &[vec![0], vec![1, 2]]).unwrap();
        assert_eq!(p.pairs(), vec![(0, 1), (0, 2)]);
        let q = partitioned_order(3, &[vec![0, 1, 2]]).unwrap();
        assert!(q.pairs().is_empty());
    }

    #[test]
    fn partitioned_completion_is_ascending_within_blocks() {
        let t = partitioned_completion(3, &[vec![2], vec![0, 1]]).unwrap();
        assert_eq!(t.as_slice(), &[2, 0, 1]);
    }

    #[test]
    fn partitioned_overlap_rejected() {
        assert!(matches!(
            partitioned_order(3, &[vec![0, 1], vec![1]]),
            Err(Error::Overlap { candidate: 1 })
        ));
    }

    #[test]
    fn circular_votes() {
        let abc = LinearOrder::new(vec![0, 1, 2]).unwrap();
        assert_eq!(circular_vote(1, &abc).unwrap().as_slice(), &[0, 1, 2]);
        assert_eq!(circular_vote(2, &abc).unwrap().as_slice(), &[1, 2, 0]);
        assert_eq!(circular_vote(3, &abc).unwrap().as_slice(), &[2, 0, 1]);
        assert!(circular_vote(4, &abc).is_err());
        assert!(circular_vote(0, &abc).is_err());
    }

    #[test]
    fn reverse_order_swaps_pairs() {
        let p = order(2, &[(0, 1)]);
        assert_eq!(p.reversed().pairs(), vec![(1, 0)]);
        assert_eq!(PartialOrder::empty(2).reversed().pairs(), vec![]);
        let t = LinearOrder::new(vec![0, 1, 2]).unwrap();
        assert_eq!(t.reversed().as_slice(), &[2, 1, 0]);
        let tp = t.as_partial_order().reversed();
        assert_eq!(tp, t.reversed().as_partial_order());
    }

    #[test]
    fn every_extension_contains_the_order() {
        let p = order(4, &[(2, 0), (1, 3)]);
        for t in p.extensions() {
            assert!(p.is_extended_by(&t));
            for (a, b) in p.pairs() {
                assert!(t.position_of(a) < t.position_of(b));
            }
        }
    }

    #[test]
    fn union_detects_cycles() {
        let p = order(2, &[(0, 1)]);
        let q = order(2, &[(1, 0)]);
        assert!(matches!(p.union(&q), Err(Error::Cycle { .. })));
    }
}
