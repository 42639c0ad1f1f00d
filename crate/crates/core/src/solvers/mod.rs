//! Polynomial decision procedures for the tractable rank queries, each
//! contractually equivalent to the oracle on its rule domain.

mod flow;
mod maximin;
mod scheduling;
mod tuples;

pub use flow::polygamous_matching;
pub use maximin::maximin_max_rank_gt_1;
pub use scheduling::{schedule_unit_tasks, SchedulingInstance};
pub use tuples::{
    bucklin_count_tuple_feasible_single, bucklin_possible_counts, possible_score_tuples,
    score_tuple_feasible_single, ScoreTupleSet, SolverLimits,
};

use crate::error::{Error, Result};
use crate::model::{LinearOrder, PartialOrder, PartialProfile};
use crate::rules::{reversed_rule, PositionalRule, RevCoeff, Score};

/// How a score vector reduces to per-voter slot counting: plurality-shaped
/// vectors pay for the top slot, veto-shaped vectors penalize the bottom
/// slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlurVetoShape {
    Plurality,
    Veto,
}

/// Classifies a vector as plurality-shaped (`(h, l, ..., l)`) or
/// veto-shaped (`(h, ..., h, l)`). Two-candidate vectors count as
/// plurality-shaped.
pub fn plur_veto_shape(vector: &[i64]) -> Option<PlurVetoShape> {
    let m = vector.len();
    if m < 2 {
        return None;
    }
    if vector[0] > vector[1] && vector[1..].windows(2).all(|w| w[0] == w[1]) {
        return Some(PlurVetoShape::Plurality);
    }
    if vector[m - 2] > vector[m - 1] && vector[..m - 1].windows(2).all(|w| w[0] == w[1]) {
        return Some(PlurVetoShape::Veto);
    }
    None
}

fn shape_of(rule: &PositionalRule, m: usize, solver: &'static str) -> Result<PlurVetoShape> {
    plur_veto_shape(&rule.vector(m)?).ok_or_else(|| Error::RuleDomain {
        solver,
        rule: rule.family.to_string(),
    })
}

fn eligible(voter: &PartialOrder, c: usize, shape: PlurVetoShape) -> bool {
    let m = voter.candidate_count();
    match shape {
        PlurVetoShape::Plurality => (0..m).all(|a| !voter.prefers(a, c)),
        PlurVetoShape::Veto => (0..m).all(|b| !voter.prefers(c, b)),
    }
}

/// Feasibility of per-candidate slot-count boxes: is there a completion in
/// which each candidate `c` takes the counted slot (top for plurality
/// shape, bottom for veto shape) between `lo[c]` and `hi[c]` times?
fn feasible_count_boxes(
    profile: &PartialProfile,
    shape: PlurVetoShape,
    lo: &[i64],
    hi: &[i64],
) -> bool {
    let m = profile.candidate_count();
    let n = profile.voter_count() as i64;
    let mut alpha = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    for c in 0..m {
        let a = lo[c].max(0);
        let b = hi[c].min(n);
        if a > b {
            return false;
        }
        alpha.push(a as u64);
        beta.push(b as u64);
    }
    let mut edges = Vec::new();
    for (i, voter) in profile.voters().iter().enumerate() {
        for c in 0..m {
            if eligible(voter, c, shape) {
                edges.push((i, c));
            }
        }
    }
    polygamous_matching(profile.voter_count(), m, &edges, &alpha, &beta).is_some()
}

fn div_floor(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

/// Is there a completion whose score table satisfies
/// `gamma[c] <= s(T, c) <= delta[c]` for every candidate? Defined for
/// plurality- and veto-shaped positional rules.
pub fn feasible_scores_plurality_veto(
    profile: &PartialProfile,
    gamma: &[Score],
    delta: &[Score],
    rule: &PositionalRule,
) -> Result<bool> {
    let m = profile.candidate_count();
    if gamma.len() != m || delta.len() != m {
        return Err(Error::LengthMismatch { left: gamma.len().min(delta.len()), right: m });
    }
    let vector = rule.vector(m)?;
    let shape = shape_of(rule, m, "feasible_scores_plurality_veto")?;
    let n = profile.voter_count() as i128;
    let high = vector[0] as i128;
    let low = vector[m - 1] as i128;
    let step = match shape {
        PlurVetoShape::Plurality => high - vector[1] as i128,
        PlurVetoShape::Veto => vector[m - 2] as i128 - low,
    };
    // translate score boxes into counted-slot boxes
    let mut lo = Vec::with_capacity(m);
    let mut hi = Vec::with_capacity(m);
    for c in 0..m {
        let (a, b) = match shape {
            // s = n*low + step*tops
            PlurVetoShape::Plurality => (
                div_ceil(gamma[c] - n * low, step),
                div_floor(delta[c] - n * low, step),
            ),
            // s = n*high - step*bottoms
            PlurVetoShape::Veto => (
                div_ceil(n * high - delta[c], step),
                div_floor(n * high - gamma[c], step),
            ),
        };
        if b < 0 || a > n {
            return Ok(false);
        }
        lo.push(a.clamp(0, n) as i64);
        hi.push(b.clamp(0, n) as i64);
    }
    Ok(feasible_count_boxes(profile, shape, &lo, &hi))
}

/// Visits subsets of `items` of the given size in lexicographic order until
/// the visitor returns `true`.
fn any_subset(items: &[usize], size: usize, f: &mut impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        current: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if current.len() == size {
            return f(current);
        }
        let needed = size - current.len();
        for i in start..items.len() {
            if items.len() - i < needed {
                break;
            }
            current.push(items[i]);
            if rec(items, size, i + 1, current, f)? {
                current.pop();
                return Ok(true);
            }
            current.pop();
        }
        Ok(false)
    }
    rec(items, size, 0, &mut Vec::with_capacity(size), f)
}

/// Decides `min rank(c) < k` for plurality- and veto-shaped rules: some
/// completion must let `c` defeat at least `m - k + 1` rivals, tested via
/// slot-count boxes for every rival subset and every count threshold.
pub fn min_rank_lt_plurality_veto(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    k: i64,
    rule: &PositionalRule,
) -> Result<bool> {
    let m = profile.candidate_count();
    let shape = shape_of(rule, m, "min_rank_lt_plurality_veto")?;
    let subset_size = m as i64 - k + 1;
    if subset_size <= 0 {
        return Ok(true); // k > m: every rank qualifies
    }
    if subset_size > m as i64 - 1 {
        return Ok(false); // k <= 1: ranks never drop below 1
    }
    let subset_size = subset_size as usize;
    let n = profile.voter_count() as i64;
    let rivals: Vec<usize> = (0..m).filter(|&o| o != c).collect();

    any_subset(&rivals, subset_size, &mut |defeated| {
        for x in 0..=n {
            let mut lo = vec![0i64; m];
            let mut hi = vec![n; m];
            match shape {
                PlurVetoShape::Plurality => {
                    // c collects at least x top slots; defeated rivals at
                    // most x (strictly fewer when the tiebreaker favors
                    // them)
                    lo[c] = x;
                    for &d in defeated {
                        hi[d] = if tie.ranks_above(c, d) { x } else { x - 1 };
                    }
                }
                PlurVetoShape::Veto => {
                    // c takes at most x bottom slots; defeated rivals at
                    // least x (strictly more when the tiebreaker favors
                    // them)
                    hi[c] = x;
                    for &d in defeated {
                        lo[d] = if tie.ranks_above(c, d) { x } else { x + 1 };
                    }
                }
            }
            if feasible_count_boxes(profile, shape, &lo, &hi) {
                return Ok(true);
            }
        }
        Ok(false)
    })
}

/// Decides `max rank(c) > k` for positional rules by searching for `k`
/// rivals that can jointly defeat `c` in one completion, via the exact
/// joint-score-tuple sets.
pub fn max_rank_gt_poly(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    k: i64,
    rule: &PositionalRule,
    limits: &SolverLimits,
) -> Result<bool> {
    let m = profile.candidate_count();
    if k < 1 {
        return Ok(true); // ranks start at 1
    }
    if k >= m as i64 {
        return Ok(false); // ranks never exceed m
    }
    let k = k as usize;
    let rivals: Vec<usize> = (0..m).filter(|&o| o != c).collect();

    any_subset(&rivals, k, &mut |chosen| {
        let mut seq: Vec<usize> = chosen.to_vec();
        seq.push(c);
        let tuples = possible_score_tuples(profile, &seq, rule, limits)?;
        for tuple in tuples.iter() {
            let target = tuple[k];
            let all_defeat = (0..k).all(|i| {
                tuple[i] > target || (tuple[i] == target && tie.ranks_above(chosen[i], c))
            });
            if all_defeat {
                return Ok(true);
            }
        }
        Ok(false)
    })
}

/// The reversed instance of Lemma-style reductions: every voter's order
/// reversed, the tiebreaker reversed, and the `(a, b)`-reversed rule. For
/// every completion, ranks of the reversed instance mirror the original:
/// `rank' = m + 1 - rank`.
pub fn reverse_instance(
    profile: &PartialProfile,
    tie: &LinearOrder,
    rule: &PositionalRule,
    a: RevCoeff,
    b: RevCoeff,
) -> Result<(PartialProfile, LinearOrder, PositionalRule)> {
    Ok((profile.reversed(), tie.reversed(), reversed_rule(rule, a, b)?))
}

/// Decides `min rank(c) < m - k + 1` for positional rules with polynomial
/// scores, through the reversed instance: the minimum dips below the k-th
/// position from the bottom iff `k` reversed rivals can defeat `c`.
pub fn min_rank_lt_kbar(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    k: i64,
    rule: &PositionalRule,
    limits: &SolverLimits,
) -> Result<bool> {
    let (rp, rtie, rrule) = reverse_instance(profile, tie, rule, RevCoeff::TopScore, RevCoeff::Const(1))?;
    max_rank_gt_poly(&rp, c, &rtie, k, &rrule, limits)
}

/// Decides `max rank(c) > m - k + 1` for plurality- and veto-shaped rules
/// through the reversed instance.
pub fn max_rank_gt_kbar_plurality_veto(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    k: i64,
    rule: &PositionalRule,
) -> Result<bool> {
    let (rp, rtie, rrule) =
        reverse_instance(profile, tie, rule, RevCoeff::Const(1), RevCoeff::Const(1))?;
    min_rank_lt_plurality_veto(&rp, c, &rtie, k, &rrule)
}

/// Decides `max rank(c) > k` under Bucklin: for each rival subset and each
/// candidate score level `t`, the joint top-count sets reveal whether all
/// chosen rivals can reach Bucklin scores no worse than `c`'s.
pub fn bucklin_max_rank_gt_k(
    profile: &PartialProfile,
    c: usize,
    tie: &LinearOrder,
    k: i64,
    limits: &SolverLimits,
) -> Result<bool> {
    let m = profile.candidate_count();
    if k < 1 {
        return Ok(true);
    }
    if k >= m as i64 {
        return Ok(false);
    }
    let k = k as usize;
    let n = profile.voter_count() as Score;
    let rivals: Vec<usize> = (0..m).filter(|&o| o != c).collect();

    any_subset(&rivals, k, &mut |chosen| {
        let mut seq: Vec<usize> = chosen.to_vec();
        seq.push(c);
        for t in 1..=m {
            // rival threshold t keeps its score <= t (enough on a favoring
            // tiebreaker), t-1 forces strictly better; c capped below a
            // majority at t-1 keeps its score >= t
            let mut thresholds: Vec<usize> = chosen
                .iter()
                .map(|&ci| if tie.ranks_above(ci, c) { t } else { t - 1 })
                .collect();
            thresholds.push(t - 1);
            let counts = bucklin_possible_counts(profile, &seq, &thresholds, limits)?;
            for h in counts.iter() {
                if 2 * h[k] <= n && (0..k).all(|i| 2 * h[i] > n) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    })
}
