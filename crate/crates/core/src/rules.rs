//! Scoring rules: positional families plus Bucklin, Copeland, and Maximin,
//! with per-profile score tables and tie-broken rank computation.
//!
//! Score totals use `i128` throughout, which is wide enough that no sum of
//! per-voter `i64` vector entries can overflow.

use crate::error::{Error, Result};
use crate::model::{CompleteProfile, LinearOrder};
use std::collections::BTreeMap;
use std::fmt;

/// Score totals. Wide on purpose: `n * max_entry` always fits.
pub type Score = i128;

/// A coefficient of the `(a, b)`-reversal transform, as a function of the
/// candidate count `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RevCoeff {
    Const(i64),
    /// The base rule's top score for the given `m`.
    TopScore,
    /// The candidate count `m` itself.
    CandidateCount,
}

impl RevCoeff {
    fn eval(&self, m: usize, base_vector: &[i64]) -> i64 {
        match self {
            RevCoeff::Const(c) => *c,
            RevCoeff::TopScore => base_vector[0],
            RevCoeff::CandidateCount => m as i64,
        }
    }
}

/// A positional family: a generator of one score vector per candidate count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Plurality,
    Veto,
    TApproval(usize),
    TVeto(usize),
    Borda,
    /// Explicit per-m vectors.
    Custom { name: String, vectors: BTreeMap<usize, Vec<i64>> },
    /// The `(a, b)`-reversal of another family, canonicalized to a zero
    /// minimum entry.
    Reversed { base: Box<Family>, a: RevCoeff, b: RevCoeff },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Plurality => write!(f, "plurality"),
            Family::Veto => write!(f, "veto"),
            Family::TApproval(t) => write!(f, "{t}-approval"),
            Family::TVeto(t) => write!(f, "{t}-veto"),
            Family::Borda => write!(f, "borda"),
            Family::Custom { name, .. } => write!(f, "custom:{name}"),
            Family::Reversed { base, .. } => write!(f, "reversed({base})"),
        }
    }
}

/// Positional scoring rule plus the metadata the solvers and gadgets rely
/// on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionalRule {
    pub family: Family,
    pub strongly_pure: bool,
    pub polynomial_scores: bool,
    pub p_valued: Option<u32>,
}

impl PositionalRule {
    pub fn plurality() -> Self {
        PositionalRule {
            family: Family::Plurality,
            strongly_pure: true,
            polynomial_scores: true,
            p_valued: Some(2),
        }
    }

    pub fn veto() -> Self {
        PositionalRule {
            family: Family::Veto,
            strongly_pure: true,
            polynomial_scores: true,
            p_valued: Some(2),
        }
    }

    pub fn t_approval(t: usize) -> Self {
        PositionalRule {
            family: Family::TApproval(t),
            strongly_pure: true,
            polynomial_scores: true,
            p_valued: Some(2),
        }
    }

    pub fn t_veto(t: usize) -> Self {
        PositionalRule {
            family: Family::TVeto(t),
            strongly_pure: true,
            polynomial_scores: true,
            p_valued: Some(2),
        }
    }

    pub fn borda() -> Self {
        PositionalRule {
            family: Family::Borda,
            strongly_pure: true,
            polynomial_scores: true,
            p_valued: None,
        }
    }

    /// A rule from explicit vectors. Metadata flags are caller-asserted;
    /// vectors are validated on first use.
    pub fn custom(
        name: impl Into<String>,
        vectors: BTreeMap<usize, Vec<i64>>,
        strongly_pure: bool,
        polynomial_scores: bool,
        p_valued: Option<u32>,
    ) -> Self {
        PositionalRule {
            family: Family::Custom { name: name.into(), vectors },
            strongly_pure,
            polynomial_scores,
            p_valued,
        }
    }

    /// The family's score vector for `m` candidates.
    pub fn vector(&self, m: usize) -> Result<Vec<i64>> {
        let v = family_vector(&self.family, m)?;
        validate_vector(&self.family, m, &v)?;
        Ok(v)
    }

    /// Distinct score values of the vector, descending.
    pub fn distinct_values(&self, m: usize) -> Result<Vec<i64>> {
        let mut v = self.vector(m)?;
        v.dedup();
        Ok(v)
    }
}

fn family_vector(family: &Family, m: usize) -> Result<Vec<i64>> {
    if m < 2 {
        return Err(Error::Family {
            family: family.to_string(),
            m,
            reason: "need at least two candidates".into(),
        });
    }
    match family {
        Family::Plurality => {
            let mut v = vec![0; m];
            v[0] = 1;
            Ok(v)
        }
        Family::Veto => {
            let mut v = vec![1; m];
            v[m - 1] = 0;
            Ok(v)
        }
        Family::TApproval(t) => {
            if *t == 0 || *t >= m {
                return Err(Error::Family {
                    family: family.to_string(),
                    m,
                    reason: format!("t-approval needs 0 < t < m, got t={t}"),
                });
            }
            let mut v = vec![0; m];
            v[..*t].fill(1);
            Ok(v)
        }
        Family::TVeto(t) => {
            if *t == 0 || *t >= m {
                return Err(Error::Family {
                    family: family.to_string(),
                    m,
                    reason: format!("t-veto needs 0 < t < m, got t={t}"),
                });
            }
            let mut v = vec![1; m];
            v[m - t..].fill(0);
            Ok(v)
        }
        Family::Borda => Ok((0..m).rev().map(|x| x as i64).collect()),
        Family::Custom { name, vectors } => vectors.get(&m).cloned().ok_or(Error::Family {
            family: format!("custom:{name}"),
            m,
            reason: "no vector for this candidate count".into(),
        }),
        Family::Reversed { base, a, b } => {
            let bv = family_vector(base, m)?;
            let av = a.eval(m, &bv);
            let bvv = b.eval(m, &bv);
            if bvv <= 0 {
                return Err(Error::DegenerateRule {
                    reason: format!("reversal needs b(m) > 0, got {bvv}"),
                });
            }
            let mut w: Vec<i64> = (0..m).map(|i| av - bvv * bv[m - 1 - i]).collect();
            // canonicalize to a zero minimum so named identities such as
            // reversed-plurality = veto hold as vector equality
            let min = *w.iter().min().unwrap();
            for x in &mut w {
                *x -= min;
            }
            Ok(w)
        }
    }
}

fn validate_vector(family: &Family, m: usize, v: &[i64]) -> Result<()> {
    let bad = |reason: String| match family {
        Family::Reversed { .. } => Error::DegenerateRule { reason },
        _ => Error::Family { family: family.to_string(), m, reason },
    };
    if v.len() != m {
        return Err(bad(format!("vector length {} != m={m}", v.len())));
    }
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad("vector is not non-increasing".into()));
    }
    if v[0] <= v[m - 1] {
        return Err(bad("top score must exceed bottom score".into()));
    }
    if v[m - 1] < 0 {
        return Err(bad("negative score entries".into()));
    }
    Ok(())
}

/// The `(a, b)`-reversed rule of a positional rule.
///
/// Strong purity survives constant coefficients; the distinct-value count
/// and polynomial-score bounds survive any affine transform.
pub fn reversed_rule(rule: &PositionalRule, a: RevCoeff, b: RevCoeff) -> Result<PositionalRule> {
    if let RevCoeff::Const(c) = b {
        if c <= 0 {
            return Err(Error::DegenerateRule {
                reason: format!("reversal needs b(m) > 0, got {c}"),
            });
        }
    }
    let consts = matches!(a, RevCoeff::Const(_)) && matches!(b, RevCoeff::Const(_));
    Ok(PositionalRule {
        family: Family::Reversed { base: Box::new(rule.family.clone()), a, b },
        strongly_pure: rule.strongly_pure && consts,
        polynomial_scores: rule.polynomial_scores,
        p_valued: rule.p_valued,
    })
}

/// A scoring rule: positional, or one of the three non-positional rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScoringRule {
    Positional(PositionalRule),
    Bucklin,
    Copeland,
    Maximin,
}

impl fmt::Display for ScoringRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoringRule::Positional(p) => write!(f, "{}", p.family),
            ScoringRule::Bucklin => write!(f, "bucklin"),
            ScoringRule::Copeland => write!(f, "copeland"),
            ScoringRule::Maximin => write!(f, "maximin"),
        }
    }
}

impl ScoringRule {
    pub fn positional(&self) -> Option<&PositionalRule> {
        match self {
            ScoringRule::Positional(p) => Some(p),
            _ => None,
        }
    }

    /// Bucklin ranks candidates by ascending score; the others descending.
    pub fn lower_score_is_better(&self) -> bool {
        matches!(self, ScoringRule::Bucklin)
    }
}

/// Per-voter positional score of candidate `c`.
pub fn positional_vote_score(vote: &LinearOrder, c: usize, vector: &[i64]) -> Score {
    vector[vote.position_of(c)] as Score
}

/// Total positional score of `c` in a complete profile.
pub fn positional_score(profile: &CompleteProfile, c: usize, rule: &PositionalRule) -> Result<Score> {
    let vector = rule.vector(profile.candidate_count())?;
    Ok(profile.votes().iter().map(|v| positional_vote_score(v, c, &vector)).sum())
}

/// Bucklin score: the smallest `t` such that a strict majority of voters
/// rank `c` within the top `t` positions. Always lands in `[1, m]`.
pub fn bucklin_score(profile: &CompleteProfile, c: usize) -> Score {
    let n = profile.voter_count();
    let m = profile.candidate_count();
    let mut per_position = vec![0usize; m];
    for v in profile.votes() {
        per_position[v.position_of(c)] += 1;
    }
    let mut within = 0usize;
    for t in 1..=m {
        within += per_position[t - 1];
        if 2 * within > n {
            return t as Score;
        }
    }
    m as Score
}

/// Number of voters ranking `a` ahead of `b`.
pub fn pairwise_wins(profile: &CompleteProfile, a: usize, b: usize) -> usize {
    profile.votes().iter().filter(|v| v.ranks_above(a, b)).count()
}

/// The matrix `N` of pairwise win counts and `D = 2N - n` of margins.
pub fn pairwise_matrices(profile: &CompleteProfile) -> (Vec<Vec<Score>>, Vec<Vec<Score>>) {
    let m = profile.candidate_count();
    let n = profile.voter_count() as Score;
    let mut wins = vec![vec![0 as Score; m]; m];
    for v in profile.votes() {
        for i in 0..m {
            for j in i + 1..m {
                let a = v.candidate_at(i);
                let b = v.candidate_at(j);
                wins[a][b] += 1;
            }
        }
    }
    let mut margins = vec![vec![0 as Score; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                margins[a][b] = 2 * wins[a][b] - n;
            }
        }
    }
    (wins, margins)
}

/// Copeland score: rivals beaten by strict pairwise majority.
pub fn copeland_score(profile: &CompleteProfile, c: usize) -> Score {
    let n = profile.voter_count();
    (0..profile.candidate_count())
        .filter(|&o| o != c && 2 * pairwise_wins(profile, c, o) > n)
        .count() as Score
}

/// Maximin score in N-form: the minimum over rivals of the number of votes
/// ranking `c` ahead.
pub fn maximin_score(profile: &CompleteProfile, c: usize) -> Score {
    (0..profile.candidate_count())
        .filter(|&o| o != c)
        .map(|o| pairwise_wins(profile, c, o) as Score)
        .min()
        .expect("maximin needs at least two candidates")
}

/// Maximin score in margin form, `min_{c'} D(c, c')`; an order-preserving
/// transform of the N-form.
pub fn maximin_margin_score(profile: &CompleteProfile, c: usize) -> Score {
    2 * maximin_score(profile, c) - profile.voter_count() as Score
}

/// All candidates' scores under a rule, together with the sort direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreTable {
    scores: Vec<Score>,
    ascending: bool,
}

impl ScoreTable {
    pub fn new(scores: Vec<Score>, ascending: bool) -> Self {
        ScoreTable { scores, ascending }
    }

    pub fn scores(&self) -> &[Score] {
        &self.scores
    }

    pub fn score(&self, c: usize) -> Score {
        self.scores[c]
    }

    fn better(&self, a: Score, b: Score) -> bool {
        if self.ascending {
            a < b
        } else {
            a > b
        }
    }

    /// Whether `a` precedes `b` in the score-then-tiebreaker order `R_T`.
    pub fn defeats(&self, a: usize, b: usize, tie: &LinearOrder) -> bool {
        self.better(self.scores[a], self.scores[b])
            || (self.scores[a] == self.scores[b] && tie.ranks_above(a, b))
    }

    /// 1-based rank of `c` in `R_T`.
    pub fn rank_of(&self, c: usize, tie: &LinearOrder) -> usize {
        1 + (0..self.scores.len()).filter(|&o| o != c && self.defeats(o, c, tie)).count()
    }

    /// Whether `c` is a co-winner (no rival has a strictly better score).
    pub fn is_winner(&self, c: usize) -> bool {
        self.scores.iter().all(|&s| !self.better(s, self.scores[c]))
    }

    /// Whether `c`'s score is strictly better than every rival's.
    pub fn is_unique_winner(&self, c: usize) -> bool {
        (0..self.scores.len()).all(|o| o == c || self.better(self.scores[c], self.scores[o]))
    }
}

/// Score table of a complete profile under any rule.
pub fn score_table(profile: &CompleteProfile, rule: &ScoringRule) -> Result<ScoreTable> {
    let m = profile.candidate_count();
    let scores = match rule {
        ScoringRule::Positional(p) => {
            let vector = p.vector(m)?;
            (0..m)
                .map(|c| {
                    profile.votes().iter().map(|v| positional_vote_score(v, c, &vector)).sum()
                })
                .collect()
        }
        ScoringRule::Bucklin => (0..m).map(|c| bucklin_score(profile, c)).collect(),
        ScoringRule::Copeland => {
            let n = profile.voter_count();
            let (wins, _) = pairwise_matrices(profile);
            (0..m)
                .map(|c| {
                    (0..m).filter(|&o| o != c && 2 * wins[c][o] > n as Score).count() as Score
                })
                .collect()
        }
        ScoringRule::Maximin => {
            let (wins, _) = pairwise_matrices(profile);
            (0..m)
                .map(|c| (0..m).filter(|&o| o != c).map(|o| wins[c][o]).min().unwrap())
                .collect()
        }
    };
    Ok(ScoreTable::new(scores, rule.lower_score_is_better()))
}

/// Tie-broken rank of `c` under `rule`.
pub fn rank(
    profile: &CompleteProfile,
    c: usize,
    tie: &LinearOrder,
    rule: &ScoringRule,
) -> Result<usize> {
    Ok(score_table(profile, rule)?.rank_of(c, tie))
}
