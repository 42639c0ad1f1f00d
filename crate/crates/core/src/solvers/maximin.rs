//! Maximin necessary-winner style decision: can any rival ever defeat the
//! distinguished candidate?
//!
//! For a fixed rival `e` and a fixed rival-of-`c` pair `y*`, the search
//! space collapses to canonical completions: every voter either ranks `e`
//! maximally (only forced predecessors above it, `y*` above `c` whenever the
//! order allows), or additionally pulls `y*` and its forced predecessors
//! above `e` when `c` is forced above `e` but not above `y*`. Over such
//! completions, `min_y N(e, y) + #(pulled voters)` is monotone in the pulled
//! set, so pulling in every eligible voter is optimal and each `(e, y*)`
//! pair reduces to one counting check.

use crate::model::{LinearOrder, PartialProfile};

/// Decides whether some completion ranks any candidate above `c`, i.e.
/// whether the maximal Maximin rank of `c` exceeds 1.
pub fn maximin_max_rank_gt_1(profile: &PartialProfile, c: usize, tie: &LinearOrder) -> bool {
    let m = profile.candidate_count();
    let voters = profile.voters();

    for e in (0..m).filter(|&e| e != c) {
        // e defeats c on equal scores only if the tiebreaker favors e
        let margin = if tie.ranks_above(e, c) { 0i64 } else { 1i64 };

        // base[y] = max over completions of N(e, y), reached by ranking e
        // above everything it is not forced below
        let mut base = vec![0i64; m];
        for v in voters {
            for y in 0..m {
                if y != e && !v.prefers(y, e) {
                    base[y] += 1;
                }
            }
        }

        for ystar in (0..m).filter(|&y| y != c) {
            let mut hard_forced = 0i64; // voters with c forced above y*
            let mut coverage = base.clone();
            for v in voters {
                if v.prefers(c, ystar) {
                    hard_forced += 1;
                } else if v.prefers(c, e) && !v.prefers(ystar, e) {
                    // pulled voter: y* and its forced predecessors move
                    // above e so that y* can pass c
                    coverage[ystar] -= 1;
                    for y in 0..m {
                        if y != ystar && y != e && v.prefers(y, ystar) && !v.prefers(y, e) {
                            coverage[y] -= 1;
                        }
                    }
                }
            }
            let score_e =
                (0..m).filter(|&y| y != e).map(|y| coverage[y]).min().expect("m >= 2");
            if score_e >= hard_forced + margin {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{PartialOrder, PartialProfile};
    use crate::oracle::{self, OracleLimits};
    use crate::rules::ScoringRule;

    #[test]
    fn fixed_loser_can_be_overtaken() {
        let vote = LinearOrder::new(vec![0, 1]).unwrap();
        let pp = PartialProfile::new(vec![vote.as_partial_order()]).unwrap();
        let tie = LinearOrder::identity(2);
        assert!(maximin_max_rank_gt_1(&pp, 1, &tie));
    }

    #[test]
    fn fixed_winner_with_favoring_tie_stays_first() {
        let vote = LinearOrder::new(vec![0, 1]).unwrap();
        let pp = PartialProfile::new(vec![vote.as_partial_order()]).unwrap();
        let tie = LinearOrder::identity(2);
        assert!(!maximin_max_rank_gt_1(&pp, 0, &tie));
    }

    #[test]
    fn matches_oracle_on_random_instances() {
        use rand::Rng;
        let mut rng = crate::gen::rng(31);
        let limits = OracleLimits::default();
        for _ in 0..400 {
            let m = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let pp = crate::gen::random_partial_profile(&mut rng, m, n, m);
            let tie = crate::gen::random_linear_order(&mut rng, m);
            let c = rng.gen_range(0..m);
            let expect =
                oracle::max_rank(&pp, c, &tie, &ScoringRule::Maximin, &limits).unwrap() > 1;
            assert_eq!(
                maximin_max_rank_gt_1(&pp, c, &tie),
                expect,
                "m={m} n={n} c={c} profile={pp:?} tie={tie:?}"
            );
        }
    }
}
