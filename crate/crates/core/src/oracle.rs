//! Ground-truth computation of rank sets and extremal ranks.
//!
//! Two exact strategies back every query. When the completion space fits
//! under the cap, completions are enumerated directly. Otherwise the oracle
//! switches to an exact dynamic program over achievable per-rule statistics
//! (score tables for positional rules, top-`t` counts for Bucklin, pairwise
//! win counts for Copeland and Maximin): a candidate's rank depends on a
//! completion only through that statistic, and statistics add up voter by
//! voter, so the reachable set is a fold of per-voter Minkowski sums. Both
//! strategies are exhaustive; nothing here samples or approximates. Above
//! both caps the oracle refuses with a limit error.

use crate::error::{Error, Result};
use crate::model::{CompleteProfile, LinearOrder, PartialOrder, PartialProfile};
use crate::rules::{Score, ScoreTable, ScoringRule};
use std::collections::{BTreeSet, HashSet};

/// Caps for the two oracle strategies.
#[derive(Debug, Clone)]
pub struct OracleLimits {
    /// Maximum number of completions for direct enumeration.
    pub max_completions: u64,
    /// Above this many completions the statistic DP usually wins; both
    /// strategies stay exact, so this only steers engine choice.
    pub prefer_enumeration_below: u64,
    /// Maximum size of any reachable-statistic set in the DP strategy.
    pub max_statistics: usize,
    /// Maximum total statistics retained across DP layers for witness
    /// reconstruction; above this, verdicts come back without a witness.
    pub witness_statistics: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_completions: crate::model::DEFAULT_COMPLETION_CAP,
            prefer_enumeration_below: 20_000,
            max_statistics: 2_000_000,
            witness_statistics: 500_000,
        }
    }
}

impl OracleLimits {
    pub fn with_completion_cap(cap: u64) -> Self {
        OracleLimits { max_completions: cap, ..Default::default() }
    }
}

/// Which exact strategy answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleEngine {
    Enumeration,
    StatisticDp,
}

/// Whether a query asks about the minimal or maximal rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Comparison direction of a rank query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Gt,
}

/// A decision query: compare the minimal or maximal rank of `candidate`
/// against `k`. Values of `k` outside `[1, m]` are allowed; the answer is
/// then forced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankQuery {
    pub candidate: usize,
    pub extremum: Extremum,
    pub cmp: Cmp,
    pub k: i64,
}

/// The outcome of a decision, with a certifying completion where one
/// exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    /// A completion achieving the queried rank, for affirmative `min < k` /
    /// `max > k` answers. The first certifier in enumeration order when the
    /// enumeration strategy ran.
    pub witness: Option<CompleteProfile>,
    /// The computed extremal rank, when the query was not forced.
    pub achieved_rank: Option<usize>,
    pub engine: Option<OracleEngine>,
}

// ---------------------------------------------------------------------------
// statistic extraction
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum StatKind {
    Positional,
    Bucklin,
    Pairwise,
}

fn stat_kind(rule: &ScoringRule) -> StatKind {
    match rule {
        ScoringRule::Positional(_) => StatKind::Positional,
        ScoringRule::Bucklin => StatKind::Bucklin,
        ScoringRule::Copeland | ScoringRule::Maximin => StatKind::Pairwise,
    }
}

fn stat_dims(kind: StatKind, m: usize) -> usize {
    match kind {
        StatKind::Positional => m,
        StatKind::Bucklin | StatKind::Pairwise => m * m,
    }
}

fn vote_statistic(kind: StatKind, vote: &LinearOrder, vector: &[i64]) -> Vec<Score> {
    let m = vote.candidate_count();
    match kind {
        StatKind::Positional => (0..m).map(|c| vector[vote.position_of(c)] as Score).collect(),
        StatKind::Bucklin => {
            // out[c * m + (t - 1)] = 1 iff c is within the top t positions
            let mut out = vec![0; m * m];
            for c in 0..m {
                for t in vote.position_of(c) + 1..=m {
                    out[c * m + t - 1] = 1;
                }
            }
            out
        }
        StatKind::Pairwise => {
            let mut out = vec![0; m * m];
            for i in 0..m {
                for j in i + 1..m {
                    out[vote.candidate_at(i) * m + vote.candidate_at(j)] = 1;
                }
            }
            out
        }
    }
}

fn table_from_statistic(rule: &ScoringRule, stat: &[Score], m: usize, n: usize) -> ScoreTable {
    let n = n as Score;
    let scores: Vec<Score> = match rule {
        ScoringRule::Positional(_) => stat.to_vec(),
        ScoringRule::Bucklin => (0..m)
            .map(|c| {
                (1..=m)
                    .find(|t| 2 * stat[c * m + t - 1] > n)
                    .expect("every candidate is within the top m") as Score
            })
            .collect(),
        ScoringRule::Copeland => (0..m)
            .map(|c| (0..m).filter(|&o| o != c && 2 * stat[c * m + o] > n).count() as Score)
            .collect(),
        ScoringRule::Maximin => (0..m)
            .map(|c| (0..m).filter(|&o| o != c).map(|o| stat[c * m + o]).min().unwrap())
            .collect(),
    };
    ScoreTable::new(scores, rule.lower_score_is_better())
}

fn positional_vector(rule: &ScoringRule, m: usize) -> Result<Vec<i64>> {
    match rule {
        ScoringRule::Positional(p) => p.vector(m),
        _ => Ok(Vec::new()),
    }
}

// ---------------------------------------------------------------------------
// enumeration strategy
// ---------------------------------------------------------------------------

/// Per-voter extension lists, validated to stay under the completion cap.
struct Enumeration {
    per_voter: Vec<Vec<LinearOrder>>,
}

impl Enumeration {
    fn build(profile: &PartialProfile) -> Self {
        Enumeration {
            per_voter: profile.voters().iter().map(|v| v.extensions().collect()).collect(),
        }
    }

    /// Visits every completion in lexicographic order; stop early by
    /// returning `false` from the visitor.
    fn for_each(&self, mut f: impl FnMut(&[&LinearOrder]) -> bool) {
        let n = self.per_voter.len();
        let mut idx = vec![0usize; n];
        let mut current: Vec<&LinearOrder> = self.per_voter.iter().map(|v| &v[0]).collect();
        loop {
            if !f(&current) {
                return;
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < self.per_voter[pos].len() {
                    current[pos] = &self.per_voter[pos][idx[pos]];
                    break;
                }
                idx[pos] = 0;
                current[pos] = &self.per_voter[pos][0];
            }
        }
    }
}

fn table_of_votes(
    rule: &ScoringRule,
    votes: &[&LinearOrder],
    m: usize,
    vector: &[i64],
) -> ScoreTable {
    let n = votes.len();
    let scores: Vec<Score> = match rule {
        ScoringRule::Positional(_) => (0..m)
            .map(|c| votes.iter().map(|v| vector[v.position_of(c)] as Score).sum())
            .collect(),
        ScoringRule::Bucklin => (0..m)
            .map(|c| {
                let mut per_position = vec![0usize; m];
                for v in votes {
                    per_position[v.position_of(c)] += 1;
                }
                let mut within = 0usize;
                let mut score = m;
                for t in 1..=m {
                    within += per_position[t - 1];
                    if 2 * within > n {
                        score = t;
                        break;
                    }
                }
                score as Score
            })
            .collect(),
        ScoringRule::Copeland | ScoringRule::Maximin => {
            let mut wins = vec![0usize; m * m];
            for v in votes {
                for i in 0..m {
                    for j in i + 1..m {
                        wins[v.candidate_at(i) * m + v.candidate_at(j)] += 1;
                    }
                }
            }
            if matches!(rule, ScoringRule::Copeland) {
                (0..m)
                    .map(|c| {
                        (0..m).filter(|&o| o != c && 2 * wins[c * m + o] > n).count() as Score
                    })
                    .collect()
            } else {
                (0..m)
                    .map(|c| {
                        (0..m)
                            .filter(|&o| o != c)
                            .map(|o| wins[c * m + o] as Score)
                            .min()
                            .unwrap()
                    })
                    .collect()
            }
        }
    };
    ScoreTable::new(scores, rule.lower_score_is_better())
}

// ---------------------------------------------------------------------------
// statistic-DP strategy
// ---------------------------------------------------------------------------

struct VoterOptions {
    /// Deduplicated (statistic, representative extension) pairs, in
    /// extension-enumeration order.
    options: Vec<(Vec<Score>, LinearOrder)>,
}

/// Reachable sums are tracked only on the statistic coordinates where some
/// voter's options actually disagree; everything else accumulates into the
/// full-dimension offset once.
struct DpRun {
    offset: Vec<Score>,
    /// Statistic indices represented in the projected vectors.
    varying: Vec<usize>,
    fixed_votes: Vec<(usize, LinearOrder)>,
    free_voters: Vec<(usize, VoterOptions)>,
    /// Reachable projected sums over the free voters, sorted.
    finals: Vec<Vec<Score>>,
    /// Reachable sets after each free-voter layer, for witness backtracking.
    layers: Option<Vec<Vec<Vec<Score>>>>,
}

fn voter_options(
    voter: &PartialOrder,
    kind: StatKind,
    vector: &[i64],
    limits: &OracleLimits,
) -> Result<VoterOptions> {
    if voter.count_extensions(limits.max_statistics as u64).is_none() {
        return Err(Error::Limit {
            what: "per-voter extension enumeration",
            cap: limits.max_statistics as u64,
        });
    }
    let mut seen = HashSet::new();
    let mut options = Vec::new();
    for ext in voter.extensions() {
        let stat = vote_statistic(kind, &ext, vector);
        if seen.insert(stat.clone()) {
            options.push((stat, ext));
        }
    }
    Ok(VoterOptions { options })
}

fn run_dp(
    profile: &PartialProfile,
    rule: &ScoringRule,
    limits: &OracleLimits,
    keep_layers: bool,
) -> Result<DpRun> {
    let m = profile.candidate_count();
    let kind = stat_kind(rule);
    let vector = positional_vector(rule, m)?;
    let dims = stat_dims(kind, m);

    let mut offset = vec![0 as Score; dims];
    let mut fixed_votes = Vec::new();
    let mut free_voters = Vec::new();
    let mut varies = vec![false; dims];
    for (i, voter) in profile.voters().iter().enumerate() {
        let mut opts = voter_options(voter, kind, &vector, limits)?;
        if opts.options.len() == 1 {
            let (stat, ext) = opts.options.pop().unwrap();
            for (o, s) in offset.iter_mut().zip(&stat) {
                *o += s;
            }
            fixed_votes.push((i, ext));
        } else {
            let first = opts.options[0].0.clone();
            for (opt, _) in &opts.options[1..] {
                for d in 0..dims {
                    varies[d] |= opt[d] != first[d];
                }
            }
            free_voters.push((i, opts));
        }
    }

    // coordinates every option agrees on contribute through the offset
    let varying: Vec<usize> = (0..dims).filter(|&d| varies[d]).collect();
    for (_, opts) in &mut free_voters {
        for d in 0..dims {
            if !varies[d] {
                offset[d] += opts.options[0].0[d];
            }
        }
        for (stat, _) in &mut opts.options {
            *stat = varying.iter().map(|&d| stat[d]).collect();
        }
    }
    let dims = varying.len();

    let mut reachable: HashSet<Vec<Score>> = HashSet::new();
    reachable.insert(vec![0; dims]);
    let mut layers: Option<Vec<Vec<Vec<Score>>>> =
        if keep_layers { Some(vec![sorted_vec(&reachable)]) } else { None };
    let mut retained = 1usize;
    for (_, opts) in &free_voters {
        let mut next = HashSet::with_capacity(reachable.len() * opts.options.len());
        for stat in &reachable {
            for (opt, _) in &opts.options {
                let mut sum = stat.clone();
                for (s, o) in sum.iter_mut().zip(opt) {
                    *s += o;
                }
                next.insert(sum);
            }
        }
        if next.len() > limits.max_statistics {
            return Err(Error::Limit {
                what: "reachable statistic set",
                cap: limits.max_statistics as u64,
            });
        }
        reachable = next;
        if let Some(ls) = &mut layers {
            retained += reachable.len();
            if retained > limits.witness_statistics {
                layers = None;
            } else {
                ls.push(sorted_vec(&reachable));
            }
        }
    }

    Ok(DpRun { offset, varying, fixed_votes, free_voters, finals: sorted_vec(&reachable), layers })
}

fn sorted_vec(set: &HashSet<Vec<Score>>) -> Vec<Vec<Score>> {
    let mut v: Vec<Vec<Score>> = set.iter().cloned().collect();
    v.sort_unstable();
    v
}

impl DpRun {
    fn total(&self, partial: &[Score]) -> Vec<Score> {
        let mut out = self.offset.clone();
        for (slot, &d) in self.varying.iter().enumerate() {
            out[d] += partial[slot];
        }
        out
    }

    /// Rebuilds a completion realizing `target` (a reachable free-voter
    /// sum), choosing the first matching option per voter.
    fn witness_for(&self, target: &[Score], n: usize, m: usize) -> Option<CompleteProfile> {
        let layers = self.layers.as_ref()?;
        let mut votes: Vec<Option<LinearOrder>> = vec![None; n];
        for (i, ext) in &self.fixed_votes {
            votes[*i] = Some(ext.clone());
        }
        let mut remaining = target.to_vec();
        for (li, (voter_idx, opts)) in self.free_voters.iter().enumerate().rev() {
            let prev = &layers[li];
            let mut chosen = None;
            for (opt, ext) in &opts.options {
                let back: Vec<Score> = remaining.iter().zip(opt).map(|(r, o)| r - o).collect();
                if prev.binary_search(&back).is_ok() {
                    chosen = Some((back, ext.clone()));
                    break;
                }
            }
            let (back, ext) = chosen?;
            votes[*voter_idx] = Some(ext);
            remaining = back;
        }
        let votes: Vec<LinearOrder> = votes.into_iter().map(|v| v.unwrap()).collect();
        Some(CompleteProfile::new(m, votes).expect("witness votes share m"))
    }
}

// ---------------------------------------------------------------------------
// shared walk over achievable score tables
// ---------------------------------------------------------------------------

/// Engine selection: small spaces enumerate, larger ones run the DP; when
/// custom caps stop the DP but the completion count is still under its own
/// cap, enumeration serves as the fallback. Exactness is identical either
/// way.
fn choose_engine(
    profile: &PartialProfile,
    rule: &ScoringRule,
    limits: &OracleLimits,
    keep_layers: bool,
) -> Result<(Option<Enumeration>, Option<DpRun>)> {
    let count = profile.count_completions(limits.max_completions);
    if matches!(count, Some(c) if c <= limits.prefer_enumeration_below) {
        return Ok((Some(Enumeration::build(profile)), None));
    }
    match run_dp(profile, rule, limits, keep_layers) {
        Ok(run) => Ok((None, Some(run))),
        Err(_) if count.is_some() => Ok((Some(Enumeration::build(profile)), None)),
        Err(e) => Err(e),
    }
}

fn for_each_table(
    profile: &PartialProfile,
    rule: &ScoringRule,
    limits: &OracleLimits,
    mut f: impl FnMut(&ScoreTable) -> bool,
) -> Result<OracleEngine> {
    let m = profile.candidate_count();
    match choose_engine(profile, rule, limits, false)? {
        (Some(en), _) => {
            let vector = positional_vector(rule, m)?;
            en.for_each(|votes| f(&table_of_votes(rule, votes, m, &vector)));
            Ok(OracleEngine::Enumeration)
        }
        (_, Some(run)) => {
            let n = profile.voter_count();
            for partial in &run.finals {
                if !f(&table_from_statistic(rule, &run.total(partial), m, n)) {
                    break;
                }
            }
            Ok(OracleEngine::StatisticDp)
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// The set of ranks `c` attains across all completions.
pub fn rank_set(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for_each_table(profile, rule, limits, |table| {
        out.insert(table.rank_of(c, tie));
        true
    })?;
    Ok(out)
}

/// Rank sets of every candidate, from one pass over the completion space.
pub fn rank_sets(
    profile: &PartialProfile,
    tie: &LinearOrder,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<Vec<BTreeSet<usize>>> {
    let m = profile.candidate_count();
    let mut out = vec![BTreeSet::new(); m];
    for_each_table(profile, rule, limits, |table| {
        for (c, set) in out.iter_mut().enumerate() {
            set.insert(table.rank_of(c, tie));
        }
        true
    })?;
    Ok(out)
}

pub fn min_rank(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<usize> {
    Ok(*rank_set(profile, c, tie, rule, limits)?.iter().next().unwrap())
}

pub fn max_rank(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<usize> {
    Ok(*rank_set(profile, c, tie, rule, limits)?.iter().next_back().unwrap())
}

fn compare(extreme: usize, cmp: Cmp, k: i64) -> bool {
    match cmp {
        Cmp::Lt => (extreme as i64) < k,
        Cmp::Gt => (extreme as i64) > k,
    }
}

/// Answers `min/max rank cmp k`, with a certifying completion for
/// affirmative existential answers. Queries forced by `k` (ranks always lie
/// in `[1, m]`) are answered without touching the completion space.
pub fn decide(
    profile: &PartialProfile,
    tie: &LinearOrder,
    rule: &ScoringRule,
    query: &RankQuery,
    limits: &OracleLimits,
) -> Result<Verdict> {
    let m = profile.candidate_count() as i64;
    let forced = match query.cmp {
        Cmp::Lt if query.k <= 1 => Some(false),
        Cmp::Lt if query.k > m => Some(true),
        Cmp::Gt if query.k >= m => Some(false),
        Cmp::Gt if query.k < 1 => Some(true),
        _ => None,
    };
    if let Some(answer) = forced {
        return Ok(Verdict { answer, witness: None, achieved_rank: None, engine: None });
    }

    let c = query.candidate;
    let wants_witness = matches!(
        (query.extremum, query.cmp),
        (Extremum::Min, Cmp::Lt) | (Extremum::Max, Cmp::Gt)
    );
    let mcount = profile.candidate_count();

    let (enumeration, dp_run) = choose_engine(profile, rule, limits, wants_witness)?;
    if let Some(en) = enumeration {
        let vector = positional_vector(rule, mcount)?;
        let mut extreme: Option<usize> = None;
        let mut witness: Option<CompleteProfile> = None;
        en.for_each(|votes| {
            let r = table_of_votes(rule, votes, mcount, &vector).rank_of(c, tie);
            extreme = Some(match (extreme, query.extremum) {
                (None, _) => r,
                (Some(e), Extremum::Min) => e.min(r),
                (Some(e), Extremum::Max) => e.max(r),
            });
            if wants_witness && witness.is_none() && compare(r, query.cmp, query.k) {
                let vs: Vec<LinearOrder> = votes.iter().map(|&v| v.clone()).collect();
                witness = Some(CompleteProfile::new(mcount, vs).expect("same m"));
            }
            true
        });
        let extreme = extreme.expect("profiles have at least one completion");
        let answer = compare(extreme, query.cmp, query.k);
        return Ok(Verdict {
            answer,
            witness: if answer { witness } else { None },
            achieved_rank: Some(extreme),
            engine: Some(OracleEngine::Enumeration),
        });
    }

    let run = dp_run.expect("one engine is always chosen");
    let n = profile.voter_count();
    let mut extreme: Option<usize> = None;
    let mut certifier: Option<Vec<Score>> = None;
    for partial in &run.finals {
        let r = table_from_statistic(rule, &run.total(partial), mcount, n).rank_of(c, tie);
        extreme = Some(match (extreme, query.extremum) {
            (None, _) => r,
            (Some(e), Extremum::Min) => e.min(r),
            (Some(e), Extremum::Max) => e.max(r),
        });
        if wants_witness && certifier.is_none() && compare(r, query.cmp, query.k) {
            certifier = Some(partial.clone());
        }
    }
    let extreme = extreme.expect("profiles have at least one completion");
    let answer = compare(extreme, query.cmp, query.k);
    let witness =
        if answer { certifier.and_then(|t| run.witness_for(&t, n, mcount)) } else { None };
    Ok(Verdict {
        answer,
        witness,
        achieved_rank: Some(extreme),
        engine: Some(OracleEngine::StatisticDp),
    })
}

/// `c` wins (score-based co-winner) in at least one completion.
pub fn possible_winner(
    profile: &PartialProfile,
    c: usize,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<bool> {
    let mut found = false;
    for_each_table(profile, rule, limits, |table| {
        found = table.is_winner(c);
        !found
    })?;
    Ok(found)
}

/// `c` wins in every completion.
pub fn necessary_winner(
    profile: &PartialProfile,
    c: usize,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<bool> {
    let mut all = true;
    for_each_table(profile, rule, limits, |table| {
        all = table.is_winner(c);
        all
    })?;
    Ok(all)
}

/// `c` is the unique winner in at least one completion.
pub fn possible_unique_winner(
    profile: &PartialProfile,
    c: usize,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<bool> {
    let mut found = false;
    for_each_table(profile, rule, limits, |table| {
        found = table.is_unique_winner(c);
        !found
    })?;
    Ok(found)
}

/// `c` is the unique winner in every completion.
pub fn necessary_unique_winner(
    profile: &PartialProfile,
    c: usize,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<bool> {
    let mut all = true;
    for_each_table(profile, rule, limits, |table| {
        all = table.is_unique_winner(c);
        all
    })?;
    Ok(all)
}

/// Forces the statistic-DP strategy; test hook for cross-validating the two
/// strategies.
pub fn rank_sets_via_dp(
    profile: &PartialProfile,
    tie: &LinearOrder,
    rule: &ScoringRule,
    limits: &OracleLimits,
) -> Result<Vec<BTreeSet<usize>>> {
    let run = run_dp(profile, rule, limits, false)?;
    let m = profile.candidate_count();
    let n = profile.voter_count();
    let mut out = vec![BTreeSet::new(); m];
    for partial in &run.finals {
        let table = table_from_statistic(rule, &run.total(partial), m, n);
        for (c, set) in out.iter_mut().enumerate() {
            set.insert(table.rank_of(c, tie));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{partitioned_completion, PartialOrder, PartialProfile};
    use crate::rules::PositionalRule;

    fn plurality() -> ScoringRule {
        ScoringRule::Positional(PositionalRule::plurality())
    }

    fn borda() -> ScoringRule {
        ScoringRule::Positional(PositionalRule::borda())
    }

    fn free_profile(m: usize, n: usize) -> PartialProfile {
        PartialProfile::new(vec![PartialOrder::empty(m); n]).unwrap()
    }

    #[test]
    fn rank_set_of_free_two_candidate_race() {
        let pp = free_profile(2, 1);
        let tie = LinearOrder::identity(2);
        let limits = OracleLimits::default();
        let set = rank_set(&pp, 0, &tie, &plurality(), &limits).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn complete_profile_has_singleton_rank_set() {
        let t = LinearOrder::new(vec![1, 0]).unwrap();
        let pp = PartialProfile::new(vec![t.as_partial_order()]).unwrap();
        let tie = LinearOrder::identity(2);
        let set = rank_set(&pp, 0, &tie, &plurality(), &OracleLimits::default()).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn free_borda_candidate_reaches_every_rank() {
        let pp = free_profile(3, 1);
        let tie = LinearOrder::identity(3);
        let set = rank_set(&pp, 2, &tie, &borda(), &OracleLimits::default()).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn min_and_max_bound_the_set() {
        let pp = free_profile(2, 1);
        let tie = LinearOrder::identity(2);
        let limits = OracleLimits::default();
        assert_eq!(min_rank(&pp, 0, &tie, &plurality(), &limits).unwrap(), 1);
        assert_eq!(max_rank(&pp, 0, &tie, &plurality(), &limits).unwrap(), 2);
    }

    #[test]
    fn forced_queries_skip_enumeration() {
        // a profile far beyond any cap: decide must still answer forced
        // queries instantly
        let pp = free_profile(10, 10);
        let tie = LinearOrder::identity(10);
        let limits = OracleLimits {
            max_completions: 10,
            max_statistics: 10,
            witness_statistics: 10,
            ..Default::default()
        };
        let q = RankQuery { candidate: 0, extremum: Extremum::Min, cmp: Cmp::Lt, k: 1 };
        assert!(!decide(&pp, &tie, &plurality(), &q, &limits).unwrap().answer);
        let q = RankQuery { candidate: 0, extremum: Extremum::Max, cmp: Cmp::Gt, k: 10 };
        assert!(!decide(&pp, &tie, &plurality(), &q, &limits).unwrap().answer);
        let q = RankQuery { candidate: 0, extremum: Extremum::Min, cmp: Cmp::Lt, k: 11 };
        assert!(decide(&pp, &tie, &plurality(), &q, &limits).unwrap().answer);
        // non-forced query now exceeds both caps
        let q = RankQuery { candidate: 0, extremum: Extremum::Min, cmp: Cmp::Lt, k: 5 };
        assert!(decide(&pp, &tie, &plurality(), &q, &limits).is_err());
    }

    #[test]
    fn witness_certifies_and_is_first_in_order() {
        let pp = free_profile(2, 1);
        let tie = LinearOrder::identity(2);
        let q = RankQuery { candidate: 1, extremum: Extremum::Min, cmp: Cmp::Lt, k: 2 };
        let v = decide(&pp, &tie, &plurality(), &q, &OracleLimits::default()).unwrap();
        assert!(v.answer);
        let w = v.witness.unwrap();
        assert_eq!(w.votes()[0].as_slice(), &[1, 0]);
        assert_eq!(v.achieved_rank, Some(1));
    }

    #[test]
    fn dp_and_enumeration_agree_on_small_instances() {
        let voters = vec![
            PartialOrder::new(3, &[(0, 1)]).unwrap(),
            PartialOrder::new(3, &[(2, 0)]).unwrap(),
            PartialOrder::empty(3),
        ];
        let pp = PartialProfile::new(voters).unwrap();
        let tie = LinearOrder::new(vec![1, 2, 0]).unwrap();
        let limits = OracleLimits::default();
        for rule in [
            plurality(),
            borda(),
            ScoringRule::Positional(PositionalRule::veto()),
            ScoringRule::Bucklin,
            ScoringRule::Copeland,
            ScoringRule::Maximin,
        ] {
            let via_enum = rank_sets(&pp, &tie, &rule, &limits).unwrap();
            let via_dp = rank_sets_via_dp(&pp, &tie, &rule, &limits).unwrap();
            assert_eq!(via_enum, via_dp, "rule {rule}");
        }
    }

    #[test]
    fn dp_witness_certifies() {
        // force the DP path with a tiny completion cap
        let pp = free_profile(3, 2);
        let tie = LinearOrder::identity(3);
        let limits = OracleLimits { max_completions: 4, ..Default::default() };
        let q = RankQuery { candidate: 2, extremum: Extremum::Max, cmp: Cmp::Gt, k: 2 };
        let v = decide(&pp, &tie, &borda(), &q, &limits).unwrap();
        assert_eq!(v.engine, Some(OracleEngine::StatisticDp));
        assert!(v.answer);
        let w = v.witness.unwrap();
        assert_eq!(crate::rules::rank(&w, 2, &tie, &borda()).unwrap(), 3);
    }

    #[test]
    fn possible_winner_matches_min_rank_with_favoring_tie() {
        let voters = vec![PartialOrder::new(3, &[(1, 0)]).unwrap(), PartialOrder::empty(3)];
        let pp = PartialProfile::new(voters).unwrap();
        let limits = OracleLimits::default();
        for rule in [plurality(), borda(), ScoringRule::Bucklin, ScoringRule::Maximin] {
            for c in 0..3 {
                let tie_first = partitioned_completion(3, &[vec![c]]).unwrap();
                let pw = possible_winner(&pp, c, &rule, &limits).unwrap();
                let mr = min_rank(&pp, c, &tie_first, &rule, &limits).unwrap();
                assert_eq!(pw, mr == 1, "rule {rule} candidate {c}");
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        let pp = free_profile(3, 2);
        let tie = LinearOrder::identity(3);
        let limits = OracleLimits::default();
        let mut last = false;
        for k in 0..=4 {
            let q = RankQuery { candidate: 1, extremum: Extremum::Min, cmp: Cmp::Lt, k };
            let ans = decide(&pp, &tie, &borda(), &q, &limits).unwrap().answer;
            assert!(ans || !last, "min<k must be monotone nondecreasing in k");
            last = ans;
        }
    }
}
