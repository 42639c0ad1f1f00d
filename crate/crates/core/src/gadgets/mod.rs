//! Hardness-proof constructions emitted as concrete, oracle-checkable rank
//! instances.
//!
//! Each constructor returns a [`GadgetInstance`]: a partial profile,
//! tiebreaker, rule, and focus candidate, together with the claims that tie
//! a graph or covering property of the source input to a rank property of
//! the instance. [`verify_instance`] replays every claim against the
//! brute-force set oracles on one side and the rank oracle on the other.

mod graph;
mod mcgarvey;

pub use graph::{x3c_exists, Graph, GRAPH_ORACLE_LIMIT};
pub use mcgarvey::mcgarvey;

use crate::error::{Error, Result};
use crate::model::{
    partitioned_completion, partitioned_order, rotate, CandidateSet, CompleteProfile,
    LinearOrder, PartialOrder, PartialProfile,
};
use crate::oracle::{self, Cmp, Extremum, OracleLimits, RankQuery};
use crate::rules::{pairwise_matrices, PositionalRule, Score, ScoringRule};

/// An inner possible/necessary-winner instance wrapped by the padding
/// gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PwCore {
    pub candidates: CandidateSet,
    pub profile: PartialProfile,
    pub focus: usize,
}

impl PwCore {
    pub fn new(candidates: CandidateSet, profile: PartialProfile, focus: usize) -> Result<Self> {
        if candidates.len() != profile.candidate_count() {
            return Err(Error::LengthMismatch {
                left: candidates.len(),
                right: profile.candidate_count(),
            });
        }
        if focus >= candidates.len() {
            return Err(Error::Range { index: focus, m: candidates.len() });
        }
        Ok(PwCore { candidates, profile, focus })
    }
}

/// The source property a gadget claim relates to a rank property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimSource {
    /// Minimum vertex cover of the source graph is at most `k`.
    VertexCoverAtMost(Graph),
    /// Maximum independent set of the source graph is at least `k`.
    IndependentSetAtLeast(Graph),
    /// Minimum dominating set of the source graph is at most `k`.
    DominatingSetAtMost(Graph),
    /// The wrapped core has the focus as a possible winner under the rule.
    PossibleWinner(PwCore, ScoringRule),
    /// The wrapped core has the focus as a necessary winner under the rule.
    NecessaryWinner(PwCore, ScoringRule),
    /// An exact cover by 3-sets of `0..universe` exists among `triples`.
    ExactCover { universe: usize, triples: Vec<[usize; 3]> },
}

/// `source(k)  <=>  extremum rank(focus) cmp (k + offset)`; `k` sweeps for
/// graph-parameterized gadgets and is pinned for padding-style gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub source: ClaimSource,
    pub extremum: Extremum,
    pub cmp: Cmp,
    pub offset: i64,
}

/// Oracle-verifiability of a gadget construction precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreconditionStatus {
    Verified,
    /// The precondition could not be checked within the oracle caps.
    Unverified,
    Violated,
}

/// A constructed instance plus the claims it embeds.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub name: &'static str,
    pub candidates: CandidateSet,
    pub profile: PartialProfile,
    pub tie: LinearOrder,
    pub rule: ScoringRule,
    pub focus: usize,
    /// The construction parameter `k`, for gadgets whose profile depends on
    /// it; `None` for gadgets whose single instance covers every `k`.
    pub parameter: Option<i64>,
    pub claims: Vec<Claim>,
    /// Set by constructions with caller-asserted preconditions.
    pub precondition: Option<PreconditionStatus>,
}

/// One evaluated biconditional side pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claim_index: usize,
    pub k: i64,
    pub lhs: bool,
    pub rhs: bool,
}

impl ClaimCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn claim_lhs(source: &ClaimSource, k: i64, limits: &OracleLimits) -> Result<bool> {
    match source {
        ClaimSource::VertexCoverAtMost(g) => Ok(g.min_vertex_cover()? as i64 <= k),
        ClaimSource::IndependentSetAtLeast(g) => Ok(g.max_independent_set()? as i64 >= k),
        ClaimSource::DominatingSetAtMost(g) => Ok(g.min_dominating_set()? as i64 <= k),
        ClaimSource::PossibleWinner(core, rule) => {
            oracle::possible_winner(&core.profile, core.focus, rule, limits)
        }
        ClaimSource::NecessaryWinner(core, rule) => {
            oracle::necessary_winner(&core.profile, core.focus, rule, limits)
        }
        ClaimSource::ExactCover { universe, triples } => x3c_exists(*universe, triples),
    }
}

/// Replays every claim: swept gadgets over `sweep`, pinned gadgets at their
/// construction parameter. The graph/winner side runs on the independent
/// brute-force oracles, the rank side on the rank oracle; the oracle pass
/// over the instance happens once and answers every threshold.
pub fn verify_instance(
    inst: &GadgetInstance,
    sweep: &[i64],
    limits: &OracleLimits,
) -> Result<Vec<ClaimCheck>> {
    let ks: Vec<i64> = match inst.parameter {
        Some(k) => vec![k],
        None => sweep.to_vec(),
    };
    let set = oracle::rank_set(&inst.profile, inst.focus, &inst.tie, &inst.rule, limits)?;
    let min = *set.iter().next().unwrap() as i64;
    let max = *set.iter().next_back().unwrap() as i64;
    let mut checks = Vec::new();
    for (claim_index, claim) in inst.claims.iter().enumerate() {
        for &k in &ks {
            let lhs = claim_lhs(&claim.source, k, limits)?;
            let bound = k + claim.offset;
            let extreme = match claim.extremum {
                Extremum::Min => min,
                Extremum::Max => max,
            };
            let rhs = match claim.cmp {
                Cmp::Lt => extreme < bound,
                Cmp::Gt => extreme > bound,
            };
            checks.push(ClaimCheck { claim_index, k, lhs, rhs });
        }
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// shared construction helpers
// ---------------------------------------------------------------------------

fn vertex_labels(nv: usize) -> Vec<String> {
    (1..=nv).map(|i| format!("u{i}")).collect()
}

/// The last 1-based index of the zero-normalized vector that still carries
/// a positive score; its successor scores zero.
fn last_positive_index(rule: &PositionalRule, m: usize) -> Result<usize> {
    let vector = rule.vector(m)?;
    let bottom = vector[m - 1];
    Ok((1..=m)
        .rev()
        .find(|&j| vector[j - 1] - bottom > 0)
        .expect("top score exceeds bottom score"))
}

/// Voter with `rotated` pinned around two free candidates occupying
/// positions `ell` and `ell + 1` (1-based).
fn edge_voter(m: usize, rotated: &[usize], ell: usize, u: usize, w: usize) -> Result<PartialOrder> {
    let mut pairs = Vec::new();
    for i in 0..rotated.len() {
        for j in i + 1..rotated.len() {
            pairs.push((rotated[i], rotated[j]));
        }
    }
    for (idx, &r) in rotated.iter().enumerate() {
        if idx < ell - 1 {
            pairs.push((r, u));
            pairs.push((r, w));
        } else {
            pairs.push((u, r));
            pairs.push((w, r));
        }
    }
    PartialOrder::new(m, &pairs)
}

fn require_edges(graph: &Graph) -> Result<()> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyInput { what: "graph edge set" });
    }
    Ok(())
}

/// The per-edge blocks shared by the vertex-cover and independent-set
/// gadgets: each edge contributes `nv` voters keeping its endpoints free
/// across positions `ell` and `ell + 1` while the other candidates rotate.
fn edge_blocks(graph: &Graph, m: usize, ell: usize) -> Result<Vec<PartialOrder>> {
    let mut voters = Vec::new();
    for (u, w) in graph.edges() {
        let others: Vec<usize> = (0..m).filter(|&c| c != u && c != w).collect();
        for i in 1..=others.len() {
            let rotated = rotate(i, &others)?;
            voters.push(edge_voter(m, &rotated, ell, u, w)?);
        }
    }
    Ok(voters)
}

/// The fixed rotation block with `d` and `cstar` pinned at positions `ell`
/// and `ell + 1`.
fn pinned_rotation_block(
    m: usize,
    nv: usize,
    ell: usize,
    d: usize,
    cstar: usize,
) -> Result<Vec<PartialOrder>> {
    let verts: Vec<usize> = (0..nv).collect();
    let mut block = Vec::with_capacity(nv);
    for i in 1..=nv {
        let rotated = rotate(i, &verts)?;
        let mut seq = Vec::with_capacity(m);
        seq.extend_from_slice(&rotated[..ell - 1]);
        seq.push(d);
        seq.push(cstar);
        seq.extend_from_slice(&rotated[ell - 1..]);
        block.push(LinearOrder::new(seq)?.as_partial_order());
    }
    Ok(block)
}

// ---------------------------------------------------------------------------
// positional-rule graph gadgets
// ---------------------------------------------------------------------------

/// Vertex-cover gadget: on a regular graph, the minimal vertex-cover size
/// is at most `k` iff the focus candidate can reach rank `k + 2`.
///
/// Candidates are the vertices plus the focus `c*` and a dominator `d`;
/// each edge's voters choose which endpoint takes the last paying position.
pub fn vc_gadget(graph: &Graph, rule: &PositionalRule) -> Result<GadgetInstance> {
    require_edges(graph)?;
    let delta = graph.regular_degree().ok_or(Error::NotRegular)?;
    let nv = graph.vertex_count();
    let m = nv + 2;
    let cstar = nv;
    let d = nv + 1;
    let ell = last_positive_index(rule, m)?;

    let mut voters = edge_blocks(graph, m, ell)?;
    let block = pinned_rotation_block(m, nv, ell, d, cstar)?;
    for _ in 0..delta {
        voters.extend(block.iter().cloned());
    }

    let mut labels = vertex_labels(nv);
    labels.push("c*".into());
    labels.push("d".into());
    Ok(GadgetInstance {
        name: "vc",
        candidates: CandidateSet::new(labels)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(m, &[vec![cstar, d], (0..nv).collect()])?,
        rule: ScoringRule::Positional(rule.clone()),
        focus: cstar,
        parameter: None,
        claims: vec![Claim {
            source: ClaimSource::VertexCoverAtMost(graph.clone()),
            extremum: Extremum::Min,
            cmp: Cmp::Lt,
            offset: 3, // min <= k + 2
        }],
        precondition: None,
    })
}

/// Independent-set gadget: on a regular graph, an independent set of size
/// `k` exists iff the focus candidate can fall to rank `k + 1`.
pub fn is_gadget(graph: &Graph, rule: &PositionalRule) -> Result<GadgetInstance> {
    require_edges(graph)?;
    let delta = graph.regular_degree().ok_or(Error::NotRegular)?;
    let nv = graph.vertex_count();
    let m = nv + 2;
    let cstar = nv;
    let d = nv + 1;
    let ell = last_positive_index(rule, m)?;

    let mut voters = edge_blocks(graph, m, ell)?;
    let t2 = pinned_rotation_block(m, nv, ell, d, cstar)?;
    for _ in 0..delta {
        voters.extend(t2.iter().cloned());
    }

    // rotations of (u_1, ..., u_nv, d, c*), with d and c* swapped in the
    // one voter that puts them on the paying boundary
    let mut base: Vec<usize> = (0..nv).collect();
    base.push(d);
    base.push(cstar);
    let mut t3 = Vec::with_capacity(m);
    for i in 1..=m {
        let mut seq = rotate(i, &base)?;
        if seq[ell - 1] == d && seq[ell] == cstar {
            seq.swap(ell - 1, ell);
        }
        t3.push(LinearOrder::new(seq)?.as_partial_order());
    }
    for _ in 0..delta * nv {
        voters.extend(t3.iter().cloned());
    }

    let mut labels = vertex_labels(nv);
    labels.push("c*".into());
    labels.push("d".into());
    Ok(GadgetInstance {
        name: "is",
        candidates: CandidateSet::new(labels)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(m, &[(0..nv).collect(), vec![cstar, d]])?,
        rule: ScoringRule::Positional(rule.clone()),
        focus: cstar,
        parameter: None,
        claims: vec![Claim {
            source: ClaimSource::IndependentSetAtLeast(graph.clone()),
            extremum: Extremum::Max,
            cmp: Cmp::Gt,
            offset: 0, // max >= k + 1
        }],
        precondition: None,
    })
}

/// Dominating-set gadget under plurality: a dominating set of size `k`
/// exists iff the focus candidate can reach a rank below `k + 2`. Each
/// vertex contributes one voter that can only top-rank dominators of that
/// vertex.
pub fn ds_gadget(graph: &Graph) -> Result<GadgetInstance> {
    let nv = graph.vertex_count();
    if nv == 0 {
        return Err(Error::EmptyInput { what: "graph vertex set" });
    }
    let m = nv + 1;
    let cstar = nv;
    let mut voters = Vec::with_capacity(nv);
    for u in 0..nv {
        let closed = graph.closed_neighborhood(u);
        let rest: Vec<usize> = (0..nv).filter(|v| !closed.contains(v)).collect();
        voters.push(partitioned_order(m, &[closed, rest, vec![cstar]])?);
    }
    let mut labels = vertex_labels(nv);
    labels.push("c*".into());
    Ok(GadgetInstance {
        name: "ds",
        candidates: CandidateSet::new(labels)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(m, &[vec![cstar], (0..nv).collect()])?,
        rule: ScoringRule::Positional(PositionalRule::plurality()),
        focus: cstar,
        parameter: None,
        claims: vec![Claim {
            source: ClaimSource::DominatingSetAtMost(graph.clone()),
            extremum: Extremum::Min,
            cmp: Cmp::Lt,
            offset: 2, // min < k + 2
        }],
        precondition: None,
    })
}

// ---------------------------------------------------------------------------
// padding gadgets
// ---------------------------------------------------------------------------

/// Splits the `k - 1` pad insertions of a strongly pure rule into top and
/// bottom counts by comparing consecutive score vectors.
fn insertion_split(rule: &PositionalRule, m: usize, mprime: usize) -> Result<usize> {
    let mut top = 0;
    for step in m..mprime {
        let small = rule.vector(step)?;
        let big = rule.vector(step + 1)?;
        if big[1..] == small[..] {
            top += 1;
        } else if big[..step] != small[..] {
            return Err(Error::PurityMetadata { family: rule.family.to_string(), m: step });
        }
    }
    Ok(top)
}

fn pad_labels(core: &PwCore, pads: usize) -> Result<CandidateSet> {
    let mut labels = core.candidates.labels().to_vec();
    for i in 1..=pads {
        labels.push(format!("d{i}"));
    }
    CandidateSet::new(labels)
}

/// Possible-winner padding for strongly pure positional rules: adds `k - 1`
/// pad candidates pinned to the top ranks so that the core's possible
/// winner question becomes `min rank < k + 1` on the padded instance.
pub fn pw_padding_gadget(
    core: &PwCore,
    k: i64,
    rule: &PositionalRule,
) -> Result<GadgetInstance> {
    if k < 2 {
        return Err(Error::Parameter { what: "padding k", value: k });
    }
    let k = k as usize;
    let m = core.profile.candidate_count();
    let mprime = m + k - 1;
    let top = insertion_split(rule, m, mprime)?;
    let identity: Vec<usize> = (0..m).collect();
    let inner: Vec<usize> = (0..m).collect();
    let pads: Vec<usize> = (m..mprime).collect();
    let top_pads: Vec<usize> = pads[..top].to_vec();
    let bottom_pads: Vec<usize> = pads[top..].to_vec();

    let mut voters = Vec::new();
    for voter in core.profile.voters() {
        let embedded = voter.embed(mprime, &identity)?;
        let frame =
            partitioned_order(mprime, &[top_pads.clone(), inner.clone(), bottom_pads.clone()])?;
        voters.push(embedded.union(&frame)?);
    }

    // filler block: every pad rotation over every inner rotation, repeated
    // enough times to pin the pads above the core candidates
    let copies = core.profile.voter_count() * rule.vector(mprime)?[0] as usize;
    let mut block = Vec::new();
    for i in 1..=k - 1 {
        let pad_rot = rotate(i, &pads)?;
        for j in 1..=m {
            let inner_rot = rotate(j, &inner)?;
            let mut seq = pad_rot.clone();
            seq.extend_from_slice(&inner_rot);
            block.push(LinearOrder::new(seq)?.as_partial_order());
        }
    }
    for _ in 0..copies {
        voters.extend(block.iter().cloned());
    }

    let focus = core.focus;
    let others: Vec<usize> = (0..m).filter(|&c| c != focus).collect();
    Ok(GadgetInstance {
        name: "pw-padding",
        candidates: pad_labels(core, k - 1)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(mprime, &[pads.clone(), vec![focus], others])?,
        rule: ScoringRule::Positional(rule.clone()),
        focus,
        parameter: Some(k as i64),
        claims: vec![Claim {
            source: ClaimSource::PossibleWinner(
                core.clone(),
                ScoringRule::Positional(rule.clone()),
            ),
            extremum: Extremum::Min,
            cmp: Cmp::Lt,
            offset: 1, // min < k + 1
        }],
        precondition: None,
    })
}

fn top_padding_profile(core: &PwCore, pads: usize) -> Result<(PartialProfile, usize)> {
    let m = core.profile.candidate_count();
    let mprime = m + pads;
    let identity: Vec<usize> = (0..m).collect();
    let pad_ids: Vec<usize> = (m..mprime).collect();
    let mut voters = Vec::new();
    for voter in core.profile.voters() {
        let embedded = voter.embed(mprime, &identity)?;
        let frame = partitioned_order(mprime, &[pad_ids.clone(), identity.clone()])?;
        voters.push(embedded.union(&frame)?);
    }
    Ok((PartialProfile::new(voters)?, mprime))
}

fn padding_tie(mprime: usize, m: usize, focus: usize) -> Result<LinearOrder> {
    let pads: Vec<usize> = (m..mprime).collect();
    let others: Vec<usize> = (0..m).filter(|&c| c != focus).collect();
    partitioned_completion(mprime, &[pads, vec![focus], others])
}

/// Copeland padding: `k - 1` pad candidates ranked above everyone by every
/// voter turn possible winning into `min rank < k + 1` and necessary
/// winning into `max rank < k + 1`.
pub fn copeland_padding(core: &PwCore, k: i64) -> Result<GadgetInstance> {
    if k < 1 {
        return Err(Error::Parameter { what: "padding k", value: k });
    }
    let pads = (k - 1) as usize;
    let m = core.profile.candidate_count();
    let (profile, mprime) = top_padding_profile(core, pads)?;
    Ok(GadgetInstance {
        name: "copeland-padding",
        candidates: pad_labels(core, pads)?,
        profile,
        tie: padding_tie(mprime, m, core.focus)?,
        rule: ScoringRule::Copeland,
        focus: core.focus,
        parameter: Some(k),
        claims: vec![
            Claim {
                source: ClaimSource::PossibleWinner(core.clone(), ScoringRule::Copeland),
                extremum: Extremum::Min,
                cmp: Cmp::Lt,
                offset: 1,
            },
            Claim {
                source: ClaimSource::NecessaryWinner(core.clone(), ScoringRule::Copeland),
                extremum: Extremum::Max,
                cmp: Cmp::Lt,
                offset: 1,
            },
        ],
        precondition: None,
    })
}

/// Bucklin padding, the same top-pad shape as the Copeland reduction.
pub fn bucklin_padding(core: &PwCore, k: i64) -> Result<GadgetInstance> {
    if k < 1 {
        return Err(Error::Parameter { what: "padding k", value: k });
    }
    let pads = (k - 1) as usize;
    let m = core.profile.candidate_count();
    let (profile, mprime) = top_padding_profile(core, pads)?;
    Ok(GadgetInstance {
        name: "bucklin-padding",
        candidates: pad_labels(core, pads)?,
        profile,
        tie: padding_tie(mprime, m, core.focus)?,
        rule: ScoringRule::Bucklin,
        focus: core.focus,
        parameter: Some(k),
        claims: vec![Claim {
            source: ClaimSource::PossibleWinner(core.clone(), ScoringRule::Bucklin),
            extremum: Extremum::Min,
            cmp: Cmp::Lt,
            offset: 1,
        }],
        precondition: None,
    })
}

// ---------------------------------------------------------------------------
// Bucklin independent-set gadget
// ---------------------------------------------------------------------------

/// Bucklin independent-set gadget on a 3-regular graph: an independent set
/// of size `k` exists iff the focus candidate can fall to rank
/// `k + |F| + 1`, where `F` holds `nv - 1` filler candidates that always
/// defeat it.
pub fn bucklin_is_gadget(graph: &Graph) -> Result<GadgetInstance> {
    require_edges(graph)?;
    if graph.regular_degree() != Some(3) {
        return Err(Error::NotRegular);
    }
    let nv = graph.vertex_count();
    let ne = graph.edge_count();
    let m = 2 * nv + 1;
    let cstar = nv;
    let d = nv + 1;
    let fillers: Vec<usize> = (nv + 2..m).collect(); // nv - 1 of them

    let mut voters = Vec::new();
    for (idx, (u, w)) in graph.edges().enumerate() {
        let rest: Vec<usize> = (0..nv).filter(|&v| v != u && v != w).collect();
        // only the edge pair is undetermined; three swapped voters park the
        // focus last instead of d
        let mut before = fillers.clone();
        let mut after = rest;
        if idx < 3 {
            before.push(d);
            after.push(cstar);
        } else {
            before.push(cstar);
            after.push(d);
        }
        let pinned: Vec<usize> = before.iter().chain(after.iter()).copied().collect();
        let mut pairs = Vec::new();
        for i in 0..pinned.len() {
            for j in i + 1..pinned.len() {
                pairs.push((pinned[i], pinned[j]));
            }
        }
        for &b in &before {
            pairs.push((b, u));
            pairs.push((b, w));
        }
        for &a in &after {
            pairs.push((u, a));
            pairs.push((w, a));
        }
        voters.push(PartialOrder::new(m, &pairs)?);
    }
    let t2 = partitioned_completion(
        m,
        &[(0..nv).collect(), vec![cstar], fillers.clone(), vec![d]],
    )?
    .as_partial_order();
    for _ in 0..ne - 4 {
        voters.push(t2.clone());
    }

    let mut labels = vertex_labels(nv);
    labels.push("c*".into());
    labels.push("d".into());
    for i in 1..nv {
        labels.push(format!("f{i}"));
    }
    Ok(GadgetInstance {
        name: "bucklin-is",
        candidates: CandidateSet::new(labels)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(
            m,
            &[fillers, (0..nv).collect(), vec![cstar], vec![d]],
        )?,
        rule: ScoringRule::Bucklin,
        focus: cstar,
        parameter: None,
        claims: vec![Claim {
            source: ClaimSource::IndependentSetAtLeast(graph.clone()),
            extremum: Extremum::Max,
            cmp: Cmp::Gt,
            offset: nv as i64 - 1, // max >= k + |F| + 1 with |F| = nv - 1
        }],
        precondition: None,
    })
}

// ---------------------------------------------------------------------------
// Maximin gadgets
// ---------------------------------------------------------------------------

/// Margin target in `{-1, 0, 1}` with the parity of `base`: zero when
/// parity allows, otherwise +1 oriented by ascending candidate index.
fn free_margin(base: Score, a: usize, b: usize) -> Score {
    if base % 2 == 0 {
        0
    } else if a < b {
        1
    } else {
        -1
    }
}

fn maximin_core_precondition(core: &PwCore, limits: &OracleLimits) -> PreconditionStatus {
    match core.profile.completions(limits.max_completions) {
        Err(_) => PreconditionStatus::Unverified,
        Ok(completions) => {
            for t in completions {
                if crate::rules::maximin_margin_score(&t, core.focus) > -2 {
                    return PreconditionStatus::Violated;
                }
            }
            PreconditionStatus::Verified
        }
    }
}

/// Maximin padding: `k - 1` pad candidates appended below every voter's
/// ranking, with a margin-fixing profile keeping every pad's score near
/// zero. Inherits the cited hardness instances' precondition that the
/// focus margin score never exceeds -2; the constructor verifies it by
/// enumeration when the core is small enough and otherwise flags the
/// instance.
pub fn maximin_padding(core: &PwCore, k: i64, limits: &OracleLimits) -> Result<GadgetInstance> {
    if k < 1 {
        return Err(Error::Parameter { what: "padding k", value: k });
    }
    let pads = (k - 1) as usize;
    let m = core.profile.candidate_count();
    let mprime = m + pads;
    let n1 = core.profile.voter_count() as Score;
    let identity: Vec<usize> = (0..m).collect();

    let mut voters = Vec::new();
    for voter in core.profile.voters() {
        let embedded = voter.embed(mprime, &identity)?;
        // inner candidates above d_1 above d_2 ...
        let mut blocks: Vec<Vec<usize>> = vec![identity.clone()];
        for p in m..mprime {
            blocks.push(vec![p]);
        }
        voters.push(embedded.union(&partitioned_order(mprime, &blocks)?)?);
    }

    // margin fix-up: pads end up within one vote of everyone, inner
    // margins untouched
    let mut deltas = vec![vec![0 as Score; mprime]; mprime];
    for p in m..mprime {
        for x in 0..mprime {
            if x == p {
                continue;
            }
            let fixed = if x < m {
                -n1 // inner candidates precede pads in every voter
            } else if p < x {
                n1 // earlier pads precede later pads
            } else {
                -n1
            };
            deltas[p][x] = free_margin(fixed, p, x) - fixed;
            deltas[x][p] = -deltas[p][x];
        }
    }
    let fixup = mcgarvey(&CompleteProfile::new(mprime, Vec::new())?, &deltas)?;
    for vote in fixup.votes() {
        voters.push(vote.as_partial_order());
    }

    Ok(GadgetInstance {
        name: "maximin-padding",
        candidates: pad_labels(core, pads)?,
        profile: PartialProfile::new(voters)?,
        tie: padding_tie(mprime, m, core.focus)?,
        rule: ScoringRule::Maximin,
        focus: core.focus,
        parameter: Some(k),
        claims: vec![Claim {
            source: ClaimSource::PossibleWinner(core.clone(), ScoringRule::Maximin),
            extremum: Extremum::Min,
            cmp: Cmp::Lt,
            offset: 1,
        }],
        precondition: Some(maximin_core_precondition(core, limits)),
    })
}

/// Exact-cover gadget under Maximin: a cover exists iff the focus
/// candidate's rank can exceed `k`. Ranking the floating pad `d_k` above a
/// triple's elements marks the triple as chosen.
pub fn x3c_gadget(universe: usize, triples: &[[usize; 3]], k: i64) -> Result<GadgetInstance> {
    if triples.is_empty() {
        return Err(Error::EmptyInput { what: "triple collection" });
    }
    if universe == 0 || universe % 3 != 0 {
        return Err(Error::Parameter { what: "universe size", value: universe as i64 });
    }
    if k < 2 {
        return Err(Error::Parameter { what: "x3c k", value: k });
    }
    for t in triples {
        for &x in t {
            if x >= universe {
                return Err(Error::Range { index: x, m: universe });
            }
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::DuplicateCandidate { index: t[0] });
        }
    }
    let k = k as usize;
    let q = (universe / 3) as Score;
    let ne = triples.len() as Score;
    let m = universe + 2 + k;
    let cstar = universe;
    let w = universe + 1;
    let pads: Vec<usize> = (universe + 2..m).collect(); // d_1 ... d_k
    let dlast = pads[k - 1];

    // canonical completions T_e = O(w, c*, U \ e, e, d_1, ..., d_k)
    let mut canonical = Vec::new();
    let mut voters = Vec::new();
    for t in triples {
        let mut e: Vec<usize> = t.to_vec();
        e.sort_unstable();
        let rest: Vec<usize> = (0..universe).filter(|v| !e.contains(v)).collect();
        let mut blocks = vec![vec![w], vec![cstar], rest, e.clone()];
        for &p in &pads {
            blocks.push(vec![p]);
        }
        let total = partitioned_completion(m, &blocks)?;
        // freeing d_k against the triple and the other pads marks cover
        // membership
        let freed: Vec<usize> = e.iter().chain(pads[..k - 1].iter()).copied().collect();
        let pairs: Vec<(usize, usize)> = total
            .as_partial_order()
            .pairs()
            .into_iter()
            .filter(|&(a, b)| !(b == dlast && freed.contains(&a)))
            .collect();
        voters.push(PartialOrder::new(m, &pairs)?);
        canonical.push(total);
    }

    let base = CompleteProfile::new(m, canonical)?;
    let (_, dbase) = pairwise_matrices(&base);
    let mut targets = vec![vec![0 as Score; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                targets[a][b] = free_margin(dbase[a][b], a, b);
            }
        }
    }
    let mut pin = |a: usize, b: usize, v: Score| {
        targets[a][b] = v;
        targets[b][a] = -v;
    };
    pin(w, cstar, ne);
    pin(w, pads[0], -ne - 2);
    for u in 0..universe {
        pin(w, u, ne + 2);
        pin(dlast, u, -ne - 2);
    }
    for &p in &pads[..k - 1] {
        // pinned so that raising d_k past p in the q cover voters lands
        // the pair's margin exactly at -ne
        pin(p, dlast, 2 * q - ne);
    }
    let fixup = mcgarvey(&base, &targets)?;
    for vote in fixup.votes() {
        voters.push(vote.as_partial_order());
    }

    let mut labels = vertex_labels(universe);
    labels.push("c*".into());
    labels.push("w".into());
    for i in 1..=k {
        labels.push(format!("d{i}"));
    }
    let mut tie_blocks = vec![pads.clone(), vec![cstar]];
    tie_blocks.push((0..universe).chain([w]).collect());
    Ok(GadgetInstance {
        name: "x3c",
        candidates: CandidateSet::new(labels)?,
        profile: PartialProfile::new(voters)?,
        tie: partitioned_completion(m, &tie_blocks)?,
        rule: ScoringRule::Maximin,
        focus: cstar,
        parameter: Some(k as i64),
        claims: vec![Claim {
            source: ClaimSource::ExactCover { universe, triples: triples.to_vec() },
            extremum: Extremum::Max,
            cmp: Cmp::Gt,
            offset: 0,
        }],
        precondition: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PartialOrder;
    use crate::rules::{rank, ScoringRule};

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    fn assert_all_hold(inst: &GadgetInstance, sweep: &[i64]) {
        for check in verify_instance(inst, sweep, &limits()).unwrap() {
            assert!(
                check.holds(),
                "{} claim {} at k={} lhs={} rhs={}",
                inst.name,
                check.claim_index,
                check.k,
                check.lhs,
                check.rhs
            );
        }
    }

    #[test]
    fn vc_gadget_on_triangle_plurality() {
        let g = Graph::complete(3);
        let inst = vc_gadget(&g, &PositionalRule::plurality()).unwrap();
        // alpha(K3) = 2: reachable at k = 2 but not k = 1
        let q2 = RankQuery { candidate: inst.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 5 };
        assert!(oracle::decide(&inst.profile, &inst.tie, &inst.rule, &q2, &limits())
            .unwrap()
            .answer);
        let q1 = RankQuery { candidate: inst.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 4 };
        assert!(!oracle::decide(&inst.profile, &inst.tie, &inst.rule, &q1, &limits())
            .unwrap()
            .answer);
        assert_all_hold(&inst, &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn vc_gadget_dominator_always_wins() {
        let g = Graph::complete(3);
        let inst = vc_gadget(&g, &PositionalRule::plurality()).unwrap();
        let d = inst.candidates.index_of("d").unwrap();
        for t in inst.profile.completions(1 << 12).unwrap() {
            assert_eq!(rank(&t, d, &inst.tie, &inst.rule).unwrap(), 1);
        }
    }

    #[test]
    fn is_gadget_on_triangle() {
        let g = Graph::complete(3);
        let inst = is_gadget(&g, &PositionalRule::plurality()).unwrap();
        // beta(K3) = 1: rank 2 reachable, rank 3 not
        let set =
            oracle::rank_set(&inst.profile, inst.focus, &inst.tie, &inst.rule, &limits()).unwrap();
        assert!(set.contains(&2));
        assert!(!set.contains(&3));
        assert_all_hold(&inst, &[0, 1, 2, 3]);
    }

    #[test]
    fn is_gadget_dominated_always_loses() {
        let g = Graph::complete(3);
        let inst = is_gadget(&g, &PositionalRule::plurality()).unwrap();
        let d = inst.candidates.index_of("d").unwrap();
        let m = inst.profile.candidate_count();
        for t in inst.profile.completions(1 << 12).unwrap() {
            assert_eq!(rank(&t, d, &inst.tie, &inst.rule).unwrap(), m);
        }
    }

    #[test]
    fn is_gadget_on_four_cycle() {
        let g = Graph::cycle(4);
        let inst = is_gadget(&g, &PositionalRule::plurality()).unwrap();
        // beta(C4) = 2
        let set =
            oracle::rank_set(&inst.profile, inst.focus, &inst.tie, &inst.rule, &limits()).unwrap();
        assert!(set.contains(&3));
        assert_all_hold(&inst, &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn ds_gadget_on_path() {
        let g = Graph::path(3);
        let inst = ds_gadget(&g).unwrap();
        // gamma(P3) = 1
        let q = RankQuery { candidate: inst.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 3 };
        assert!(oracle::decide(&inst.profile, &inst.tie, &inst.rule, &q, &limits())
            .unwrap()
            .answer);
        let q0 = RankQuery { candidate: inst.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 2 };
        assert!(!oracle::decide(&inst.profile, &inst.tie, &inst.rule, &q0, &limits())
            .unwrap()
            .answer);
        assert_all_hold(&inst, &[0, 1, 2, 3]);
    }

    #[test]
    fn ds_gadget_on_single_vertex() {
        let inst = ds_gadget(&Graph::new(1, &[]).unwrap()).unwrap();
        assert_all_hold(&inst, &[0, 1, 2]);
    }

    fn two_candidate_core(fixed: bool) -> PwCore {
        let profile = if fixed {
            // single voter already ranking the focus last
            PartialProfile::new(vec![PartialOrder::new(2, &[(1, 0)]).unwrap()]).unwrap()
        } else {
            PartialProfile::new(vec![PartialOrder::empty(2)]).unwrap()
        };
        PwCore::new(CandidateSet::new(vec!["a".into(), "b".into()]).unwrap(), profile, 0).unwrap()
    }

    #[test]
    fn pw_padding_positive_and_negative() {
        let rule = PositionalRule::borda();
        let open = pw_padding_gadget(&two_candidate_core(false), 2, &rule).unwrap();
        assert_all_hold(&open, &[]);
        let q = RankQuery { candidate: open.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 3 };
        assert!(oracle::decide(&open.profile, &open.tie, &open.rule, &q, &limits())
            .unwrap()
            .answer);

        let blocked = pw_padding_gadget(&two_candidate_core(true), 2, &rule).unwrap();
        assert_all_hold(&blocked, &[]);
        let min =
            oracle::min_rank(&blocked.profile, blocked.focus, &blocked.tie, &blocked.rule, &limits())
                .unwrap();
        assert_eq!(min, 3);
    }

    #[test]
    fn pw_padding_pads_hold_top_ranks() {
        let rule = PositionalRule::borda();
        let inst = pw_padding_gadget(&two_candidate_core(false), 3, &rule).unwrap();
        let m = inst.profile.candidate_count();
        for t in inst.profile.completions(1 << 14).unwrap() {
            for pad in 2..m {
                assert!(rank(&t, pad, &inst.tie, &inst.rule).unwrap() <= 2);
            }
        }
    }

    #[test]
    fn pw_padding_requires_k_at_least_two() {
        let rule = PositionalRule::borda();
        assert!(matches!(
            pw_padding_gadget(&two_candidate_core(false), 1, &rule),
            Err(Error::Parameter { .. })
        ));
    }

    #[test]
    fn copeland_padding_claims() {
        for k in 1..=3 {
            assert_all_hold(&copeland_padding(&two_candidate_core(false), k).unwrap(), &[]);
            assert_all_hold(&copeland_padding(&two_candidate_core(true), k).unwrap(), &[]);
        }
        // fixed single voter ranking focus first: necessary Copeland winner
        let core = PwCore::new(
            CandidateSet::new(vec!["a".into(), "b".into()]).unwrap(),
            PartialProfile::new(vec![PartialOrder::new(2, &[(0, 1)]).unwrap()]).unwrap(),
            0,
        )
        .unwrap();
        let inst = copeland_padding(&core, 1).unwrap();
        let max =
            oracle::max_rank(&inst.profile, inst.focus, &inst.tie, &inst.rule, &limits()).unwrap();
        assert_eq!(max, 1);
        assert_all_hold(&inst, &[]);
    }

    #[test]
    fn copeland_pads_defeat_core_candidates_pairwise() {
        let inst = copeland_padding(&two_candidate_core(false), 3).unwrap();
        let n = inst.profile.voter_count();
        for t in inst.profile.completions(1 << 12).unwrap() {
            for pad in 2..4 {
                for c in 0..2 {
                    assert!(2 * crate::rules::pairwise_wins(&t, pad, c) > n);
                }
            }
        }
    }

    #[test]
    fn bucklin_padding_claims() {
        for k in 1..=3 {
            assert_all_hold(&bucklin_padding(&two_candidate_core(false), k).unwrap(), &[]);
            assert_all_hold(&bucklin_padding(&two_candidate_core(true), k).unwrap(), &[]);
        }
    }

    #[test]
    fn bucklin_is_gadget_on_k4() {
        let inst = bucklin_is_gadget(&Graph::complete(4)).unwrap();
        // beta(K4) = 1, |F| = 3: rank 5 reachable, rank 6 not
        let set =
            oracle::rank_set(&inst.profile, inst.focus, &inst.tie, &inst.rule, &limits()).unwrap();
        assert!(set.contains(&5));
        assert!(!set.contains(&6));
        assert_all_hold(&inst, &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn bucklin_is_fillers_always_defeat_focus() {
        let inst = bucklin_is_gadget(&Graph::complete(4)).unwrap();
        let table_rule = inst.rule.clone();
        for t in inst.profile.completions(1 << 10).unwrap() {
            let table = crate::rules::score_table(&t, &table_rule).unwrap();
            for f in inst.candidates.labels().iter().enumerate().filter_map(|(i, l)| {
                l.starts_with('f').then_some(i)
            }) {
                assert!(table.defeats(f, inst.focus, &inst.tie));
            }
        }
    }

    #[test]
    fn bucklin_is_rejects_irregular_graphs() {
        assert!(matches!(bucklin_is_gadget(&Graph::cycle(5)), Err(Error::NotRegular)));
    }

    fn maximin_negative_core() -> PwCore {
        // five identical voters ranking the focus last: margin -5
        let vote = PartialOrder::new(2, &[(1, 0)]).unwrap();
        PwCore::new(
            CandidateSet::new(vec!["a".into(), "b".into()]).unwrap(),
            PartialProfile::new(vec![vote; 5]).unwrap(),
            0,
        )
        .unwrap()
    }

    fn maximin_positive_core() -> PwCore {
        // two copies of a three-cycle: every margin is 2, everyone scores
        // -2, all are co-winners
        let votes = [
            vec![0usize, 1, 2],
            vec![2, 0, 1],
            vec![1, 2, 0],
            vec![0, 1, 2],
            vec![2, 0, 1],
            vec![1, 2, 0],
        ];
        let voters = votes
            .iter()
            .map(|v| LinearOrder::new(v.clone()).unwrap().as_partial_order())
            .collect();
        PwCore::new(
            CandidateSet::new(vec!["a".into(), "b".into(), "c".into()]).unwrap(),
            PartialProfile::new(voters).unwrap(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn maximin_padding_negative_core() {
        let inst = maximin_padding(&maximin_negative_core(), 2, &limits()).unwrap();
        assert_eq!(inst.precondition, Some(PreconditionStatus::Verified));
        let min =
            oracle::min_rank(&inst.profile, inst.focus, &inst.tie, &inst.rule, &limits()).unwrap();
        assert!(min >= 3);
        assert_all_hold(&inst, &[]);
    }

    #[test]
    fn maximin_padding_positive_core() {
        let core = maximin_positive_core();
        assert!(oracle::possible_winner(&core.profile, 0, &ScoringRule::Maximin, &limits())
            .unwrap());
        let inst = maximin_padding(&core, 2, &limits()).unwrap();
        assert_eq!(inst.precondition, Some(PreconditionStatus::Verified));
        assert_all_hold(&inst, &[]);
    }

    #[test]
    fn maximin_padding_flags_violated_precondition() {
        let core = two_candidate_core(false); // focus can reach margin 1
        let inst = maximin_padding(&core, 2, &limits()).unwrap();
        assert_eq!(inst.precondition, Some(PreconditionStatus::Violated));
    }

    #[test]
    fn x3c_gadget_single_triple() {
        let inst = x3c_gadget(3, &[[0, 1, 2]], 2).unwrap();
        let q = RankQuery { candidate: inst.focus, extremum: Extremum::Max, cmp: Cmp::Gt, k: 2 };
        assert!(oracle::decide(&inst.profile, &inst.tie, &inst.rule, &q, &limits())
            .unwrap()
            .answer);
        assert_all_hold(&inst, &[]);
    }

    #[test]
    fn x3c_gadget_negative_instance() {
        // two overlapping triples cannot cover six elements
        let inst = x3c_gadget(6, &[[0, 1, 2], [2, 3, 4]], 2).unwrap();
        assert_all_hold(&inst, &[]);
    }

    #[test]
    fn x3c_gadget_rejects_empty_collection() {
        assert!(matches!(x3c_gadget(3, &[], 2), Err(Error::EmptyInput { .. })));
    }
}
