//! Joint score tuples a candidate sequence can realize across completions,
//! built per voter by scheduling feasibility and folded by point-wise sums.

use crate::error::{Error, Result};
use crate::model::{PartialOrder, PartialProfile};
use crate::rules::{PositionalRule, Score};
use crate::solvers::scheduling::{schedule_unit_tasks, SchedulingInstance};
use std::collections::BTreeSet;

/// Cap on intermediate and final tuple-set sizes. Rules without polynomial
/// scores void the usual size guarantee, so the fold is guarded.
#[derive(Debug, Clone)]
pub struct SolverLimits {
    pub max_tuples: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_tuples: 1_000_000 }
    }
}

/// A set of joint `q`-dimensional integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreTupleSet {
    q: usize,
    tuples: BTreeSet<Vec<Score>>,
}

impl ScoreTupleSet {
    pub fn new(q: usize) -> Self {
        ScoreTupleSet { q, tuples: BTreeSet::new() }
    }

    pub fn from_tuples(q: usize, tuples: BTreeSet<Vec<Score>>) -> Self {
        ScoreTupleSet { q, tuples }
    }

    pub fn arity(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[Score]) -> bool {
        self.tuples.contains(tuple)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Score>> {
        self.tuples.iter()
    }

    pub fn into_tuples(self) -> BTreeSet<Vec<Score>> {
        self.tuples
    }

    /// Point-wise Minkowski sum, deduplicated.
    fn fold(&self, other: &ScoreTupleSet, cap: usize) -> Result<ScoreTupleSet> {
        let mut tuples = BTreeSet::new();
        for a in &self.tuples {
            for b in &other.tuples {
                let sum: Vec<Score> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                tuples.insert(sum);
                if tuples.len() > cap {
                    return Err(Error::Limit { what: "score tuple set", cap: cap as u64 });
                }
            }
        }
        Ok(ScoreTupleSet { q: self.q, tuples })
    }
}

fn check_sequence(m: usize, seq: &[usize]) -> Result<()> {
    for (i, &c) in seq.iter().enumerate() {
        if c >= m {
            return Err(Error::Range { index: c, m });
        }
        if seq[..i].contains(&c) {
            return Err(Error::DuplicateCandidate { index: c });
        }
    }
    Ok(())
}

/// Whether one extension of `voter` gives each `seq[i]` exactly score
/// `scores[i]`. Equal scores occupy a contiguous position window of the
/// monotone vector, so this is a unit-task scheduling question.
pub fn score_tuple_feasible_single(
    voter: &PartialOrder,
    seq: &[usize],
    scores: &[Score],
    rule: &PositionalRule,
) -> Result<bool> {
    if seq.len() != scores.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: scores.len() });
    }
    let m = voter.candidate_count();
    check_sequence(m, seq)?;
    let vector = rule.vector(m)?;
    let mut inst = SchedulingInstance::unconstrained(voter.clone());
    for (&c, &target) in seq.iter().zip(scores) {
        let first = (0..m).find(|&j| vector[j] as Score == target);
        let last = (0..m).rev().find(|&j| vector[j] as Score == target);
        match (first, last) {
            (Some(f), Some(l)) => inst.set_window(c, f + 1, l + 2),
            _ => return Ok(false), // target is not a value of the vector
        }
    }
    Ok(schedule_unit_tasks(&inst).is_some())
}

fn single_voter_tuples(
    voter: &PartialOrder,
    seq: &[usize],
    rule: &PositionalRule,
) -> Result<ScoreTupleSet> {
    let m = voter.candidate_count();
    let values = rule.distinct_values(m)?;
    let q = seq.len();
    let mut tuples = BTreeSet::new();
    let mut combo = vec![0usize; q];
    loop {
        let scores: Vec<Score> = combo.iter().map(|&i| values[i] as Score).collect();
        if score_tuple_feasible_single(voter, seq, &scores, rule)? {
            tuples.insert(scores);
        }
        // odometer over value indices
        let mut pos = q;
        loop {
            if pos == 0 {
                return Ok(ScoreTupleSet { q, tuples });
            }
            pos -= 1;
            combo[pos] += 1;
            if combo[pos] < values.len() {
                break;
            }
            combo[pos] = 0;
        }
    }
}

/// The exact set of joint scores `seq` can obtain across completions of
/// `profile`.
pub fn possible_score_tuples(
    profile: &PartialProfile,
    seq: &[usize],
    rule: &PositionalRule,
    limits: &SolverLimits,
) -> Result<ScoreTupleSet> {
    check_sequence(profile.candidate_count(), seq)?;
    let mut acc: Option<ScoreTupleSet> = None;
    for voter in profile.voters() {
        let per = single_voter_tuples(voter, seq, rule)?;
        acc = Some(match acc {
            None => per,
            Some(a) => a.fold(&per, limits.max_tuples)?,
        });
    }
    Ok(acc.expect("profiles have at least one voter"))
}

/// Whether one extension of `voter` places each `seq[i]` within the top
/// `thresholds[i]` positions exactly when `hits[i] == 1`. Any hit outside
/// `{0, 1}` is infeasible for a single voter.
pub fn bucklin_count_tuple_feasible_single(
    voter: &PartialOrder,
    seq: &[usize],
    thresholds: &[usize],
    hits: &[Score],
) -> Result<bool> {
    if seq.len() != thresholds.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: thresholds.len() });
    }
    if seq.len() != hits.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: hits.len() });
    }
    let m = voter.candidate_count();
    check_sequence(m, seq)?;
    for &r in thresholds {
        if r > m {
            return Err(Error::Range { index: r, m });
        }
    }
    if hits.iter().any(|h| *h != 0 && *h != 1) {
        return Ok(false);
    }
    let mut inst = SchedulingInstance::unconstrained(voter.clone());
    for ((&c, &r), &h) in seq.iter().zip(thresholds).zip(hits) {
        if h == 1 {
            if r == 0 {
                return Ok(false); // nobody is within the top 0
            }
            inst.set_window(c, 1, r + 1);
        } else {
            if r == m {
                return Ok(false); // everybody is within the top m
            }
            inst.set_window(c, r + 1, m + 1);
        }
    }
    Ok(schedule_unit_tasks(&inst).is_some())
}

fn single_voter_counts(
    voter: &PartialOrder,
    seq: &[usize],
    thresholds: &[usize],
) -> Result<ScoreTupleSet> {
    let q = seq.len();
    let mut tuples = BTreeSet::new();
    for mask in 0..(1u32 << q) {
        let hits: Vec<Score> = (0..q).map(|i| ((mask >> i) & 1) as Score).collect();
        if bucklin_count_tuple_feasible_single(voter, seq, thresholds, &hits)? {
            tuples.insert(hits);
        }
    }
    Ok(ScoreTupleSet { q, tuples })
}

/// The exact set of joint top-`r_i` voter counts `seq` can realize across
/// completions.
pub fn bucklin_possible_counts(
    profile: &PartialProfile,
    seq: &[usize],
    thresholds: &[usize],
    limits: &SolverLimits,
) -> Result<ScoreTupleSet> {
    check_sequence(profile.candidate_count(), seq)?;
    let mut acc: Option<ScoreTupleSet> = None;
    for voter in profile.voters() {
        let per = single_voter_counts(voter, seq, thresholds)?;
        acc = Some(match acc {
            None => per,
            Some(a) => a.fold(&per, limits.max_tuples)?,
        });
    }
    Ok(acc.expect("profiles have at least one voter"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PartialProfile;
    use crate::rules::PositionalRule;

    fn free(m: usize) -> PartialOrder {
        PartialOrder::empty(m)
    }

    fn set_of(tuples: &[&[Score]]) -> BTreeSet<Vec<Score>> {
        tuples.iter().map(|t| t.to_vec()).collect()
    }

    #[test]
    fn single_voter_feasibility_examples() {
        let plu = PositionalRule::plurality();
        assert!(score_tuple_feasible_single(&free(3), &[0], &[1], &plu).unwrap());
        assert!(!score_tuple_feasible_single(&free(3), &[0, 1], &[1, 1], &plu).unwrap());
        let borda = PositionalRule::borda();
        // (a, c, b) gives a two points and b zero
        assert!(score_tuple_feasible_single(&free(3), &[0, 1], &[2, 0], &borda).unwrap());
        // brute-force cross-check over the 6 extensions
        let mut found = false;
        for t in free(3).extensions() {
            let v = borda.vector(3).unwrap();
            if v[t.position_of(0)] == 2 && v[t.position_of(1)] == 0 {
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn score_not_in_vector_is_infeasible() {
        let plu = PositionalRule::plurality();
        assert!(!score_tuple_feasible_single(&free(3), &[0], &[7], &plu).unwrap());
    }

    #[test]
    fn mismatched_lengths_error() {
        let plu = PositionalRule::plurality();
        assert!(matches!(
            score_tuple_feasible_single(&free(3), &[0, 1], &[1], &plu),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn plurality_pair_tuples() {
        let pp = PartialProfile::new(vec![free(3)]).unwrap();
        let got =
            possible_score_tuples(&pp, &[0, 1], &PositionalRule::plurality(), &Default::default())
                .unwrap();
        assert_eq!(got.into_tuples(), set_of(&[&[1, 0], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn veto_pair_tuples() {
        let pp = PartialProfile::new(vec![free(3)]).unwrap();
        let got =
            possible_score_tuples(&pp, &[0, 1], &PositionalRule::veto(), &Default::default())
                .unwrap();
        assert_eq!(got.into_tuples(), set_of(&[&[1, 1], &[1, 0], &[0, 1]]));
    }

    #[test]
    fn borda_singleton_matches_brute_force() {
        let pp = PartialProfile::new(vec![free(2), free(2)]).unwrap();
        let got = possible_score_tuples(&pp, &[0], &PositionalRule::borda(), &Default::default())
            .unwrap();
        assert_eq!(got.into_tuples(), set_of(&[&[0], &[1], &[2]]));
    }

    #[test]
    fn tuple_sets_match_completion_enumeration() {
        use rand::Rng;
        let mut rng = crate::gen::rng(23);
        for _ in 0..60 {
            let m = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let pp = crate::gen::random_partial_profile(&mut rng, m, n, m);
            let q = rng.gen_range(1..=2.min(m));
            let seq: Vec<usize> = (0..q).collect();
            for rule in
                [PositionalRule::plurality(), PositionalRule::borda(), PositionalRule::veto()]
            {
                let got = possible_score_tuples(&pp, &seq, &rule, &Default::default()).unwrap();
                let vector = rule.vector(m).unwrap();
                let mut expect = BTreeSet::new();
                for t in pp.completions(100_000).unwrap() {
                    let tuple: Vec<Score> = seq
                        .iter()
                        .map(|&c| {
                            t.votes()
                                .iter()
                                .map(|v| vector[v.position_of(c)] as Score)
                                .sum()
                        })
                        .collect();
                    expect.insert(tuple);
                }
                assert_eq!(got.into_tuples(), expect, "rule {:?}", rule.family);
            }
        }
    }

    #[test]
    fn bucklin_single_voter_examples() {
        assert!(bucklin_count_tuple_feasible_single(&free(2), &[0], &[1], &[1]).unwrap());
        assert!(!bucklin_count_tuple_feasible_single(&free(2), &[0], &[1], &[2]).unwrap());
        // a forced before b: b cannot be on top
        let v = PartialOrder::new(2, &[(0, 1)]).unwrap();
        assert!(!bucklin_count_tuple_feasible_single(&v, &[1], &[1], &[1]).unwrap());
    }

    #[test]
    fn bucklin_pair_counts() {
        let pp = PartialProfile::new(vec![free(2)]).unwrap();
        let got =
            bucklin_possible_counts(&pp, &[0, 1], &[1, 1], &Default::default()).unwrap();
        assert_eq!(got.into_tuples(), set_of(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn bucklin_fixed_voters_sum() {
        let vote = crate::model::LinearOrder::new(vec![0, 1]).unwrap().as_partial_order();
        let pp = PartialProfile::new(vec![vote.clone(), vote]).unwrap();
        let got = bucklin_possible_counts(&pp, &[0], &[1], &Default::default()).unwrap();
        assert_eq!(got.into_tuples(), set_of(&[&[2]]));
    }

    #[test]
    fn bucklin_counts_match_completion_enumeration() {
        use rand::Rng;
        let mut rng = crate::gen::rng(29);
        for _ in 0..60 {
            let m = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let pp = crate::gen::random_partial_profile(&mut rng, m, n, m);
            let q = rng.gen_range(1..=2.min(m));
            let seq: Vec<usize> = (0..q).collect();
            let thresholds: Vec<usize> = (0..q).map(|_| rng.gen_range(0..=m)).collect();
            let got =
                bucklin_possible_counts(&pp, &seq, &thresholds, &Default::default()).unwrap();
            let mut expect = BTreeSet::new();
            for t in pp.completions(100_000).unwrap() {
                let tuple: Vec<Score> = seq
                    .iter()
                    .zip(&thresholds)
                    .map(|(&c, &r)| {
                        t.votes().iter().filter(|v| v.position_of(c) < r).count() as Score
                    })
                    .collect();
                expect.insert(tuple);
            }
            assert_eq!(got.into_tuples(), expect);
        }
    }
}
