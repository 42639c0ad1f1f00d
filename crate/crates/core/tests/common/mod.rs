//! Shared corpus builders and an independent completion walker for the
//! acceptance suite. The walker deliberately avoids the library's
//! extension/completion enumeration so that cross-checks exercise two
//! separate code paths.

use rankspan::gen;
use rankspan::model::{LinearOrder, PartialOrder, PartialProfile};
use rand::Rng;

/// Every partial order over `m` candidates buildable from at most two
/// input pairs.
pub fn exhaustive_orders(m: usize) -> Vec<PartialOrder> {
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                pairs.push((a, b));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut push = |p: PartialOrder, out: &mut Vec<PartialOrder>| {
        if seen.insert(p.pairs()) {
            out.push(p);
        }
    };
    push(PartialOrder::empty(m), &mut out);
    for i in 0..pairs.len() {
        if let Ok(p) = PartialOrder::new(m, &[pairs[i]]) {
            push(p, &mut out);
        }
        for j in i + 1..pairs.len() {
            if let Ok(p) = PartialOrder::new(m, &[pairs[i], pairs[j]]) {
                push(p, &mut out);
            }
        }
    }
    out
}

/// All profiles of `n` voters drawn from the exhaustive per-voter orders.
pub fn exhaustive_profiles(m: usize, n: usize) -> Vec<PartialProfile> {
    let orders = exhaustive_orders(m);
    let mut out = Vec::new();
    let mut indices = vec![0usize; n];
    loop {
        out.push(
            PartialProfile::new(indices.iter().map(|&i| orders[i].clone()).collect()).unwrap(),
        );
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < orders.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

pub struct RandomInstance {
    pub profile: PartialProfile,
    pub candidate: usize,
    pub tie: LinearOrder,
}

/// Seeded random instances with `m <= 4`, `n <= 3`; constraint counts are
/// biased upward to keep completion spaces small.
pub fn random_instances(count: usize, seed: u64) -> Vec<RandomInstance> {
    let mut rng = gen::rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let profile = gen::random_partial_profile(&mut rng, m, n, m + 2);
            let candidate = rng.gen_range(0..m);
            let tie = gen::random_linear_order(&mut rng, m);
            RandomInstance { profile, candidate, tie }
        })
        .collect()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let m = used.len();
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for c in 0..m {
            if !used[c] {
                used[c] = true;
                current.push(c);
                rec(current, used, out);
                current.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Independent linear-extension listing: filter raw permutations against
/// the order's pair set.
pub fn extensions_by_filter(p: &PartialOrder) -> Vec<LinearOrder> {
    let m = p.candidate_count();
    permutations(m)
        .into_iter()
        .filter(|perm| {
            let pos: Vec<usize> = {
                let mut pos = vec![0; m];
                for (i, &c) in perm.iter().enumerate() {
                    pos[c] = i;
                }
                pos
            };
            (0..m).all(|a| (0..m).all(|b| !p.prefers(a, b) || pos[a] < pos[b]))
        })
        .map(|perm| LinearOrder::new(perm).unwrap())
        .collect()
}

/// Independent completion walk over the Cartesian product of filtered
/// permutations.
pub fn for_each_completion_by_filter(
    profile: &PartialProfile,
    mut f: impl FnMut(&[&LinearOrder]),
) {
    let per_voter: Vec<Vec<LinearOrder>> =
        profile.voters().iter().map(extensions_by_filter).collect();
    let n = per_voter.len();
    let mut idx = vec![0usize; n];
    loop {
        let current: Vec<&LinearOrder> =
            idx.iter().zip(&per_voter).map(|(&i, v)| &v[i]).collect();
        f(&current);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < per_voter[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
