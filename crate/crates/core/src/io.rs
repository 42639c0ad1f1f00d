//! The on-disk instance document: one election instance per JSON file,
//! strict about unknown fields so experiment typos surface instead of
//! silently changing semantics.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "candidates": ["a", "b", "c"],
//!   "voters": [[["a", "b"], ["b", "c"]], []],
//!   "tiebreaker": ["a", "b", "c"],
//!   "rule": { "type": "positional", "family": "borda" },
//!   "query": { "candidate": "a", "extremum": "min", "cmp": "<", "k": 2 }
//! }
//! ```
//!
//! Gadget-emitted documents additionally carry a `provenance` block naming
//! the construction, its source graph / covering instance / wrapped core,
//! and the parameter `k`, from which `rebuild_gadget` reconstructs the
//! instance for verification.

use crate::error::{Error, Result};
use crate::gadgets::{
    bucklin_is_gadget, bucklin_padding, copeland_padding, ds_gadget, is_gadget, maximin_padding,
    pw_padding_gadget, vc_gadget, x3c_gadget, GadgetInstance, Graph, PreconditionStatus, PwCore,
};
use crate::model::{
    partitioned_completion, CandidateSet, LinearOrder, PartialOrder, PartialProfile,
};
use crate::oracle::{Cmp, Extremum, OracleLimits, RankQuery};
use crate::rules::{Family, PositionalRule, RevCoeff, ScoringRule};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub format_version: String,
    pub candidates: Vec<String>,
    /// One pair list per voter; each pair is `[earlier, later]`.
    pub voters: Vec<Vec<[String; 2]>>,
    pub tiebreaker: Vec<String>,
    pub rule: RuleDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum RuleDescriptor {
    Positional {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        /// Keys are candidate counts, as strings for JSON compatibility.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vectors: Option<BTreeMap<String, Vec<i64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<RuleDescriptor>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<CoeffDescriptor>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<CoeffDescriptor>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        strongly_pure: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        polynomial_scores: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p_valued: Option<u32>,
    },
    Bucklin,
    Copeland,
    Maximin,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDescriptor {
    Const(i64),
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDescriptor {
    pub candidate: String,
    pub extremum: String,
    pub cmp: String,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub gadget: String,
    pub focus: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x3c: Option<X3cDescriptor>,
    /// The wrapped possible/necessary-winner core, itself a full instance
    /// document whose query names the inner focus.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<Box<InstanceDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precondition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDescriptor {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct X3cDescriptor {
    pub universe: usize,
    pub triples: Vec<[usize; 3]>,
}

/// Fully validated domain objects parsed from a document.
#[derive(Debug, Clone)]
pub struct ParsedInstance {
    pub candidates: CandidateSet,
    pub profile: PartialProfile,
    pub tie: LinearOrder,
    pub rule: ScoringRule,
    pub query: Option<RankQuery>,
    pub provenance: Option<Provenance>,
}

fn parse_err(context: impl Into<String>) -> Error {
    Error::Parse { context: context.into() }
}

// ---------------------------------------------------------------------------
// rule conversions
// ---------------------------------------------------------------------------

fn coeff_to_descriptor(c: &RevCoeff) -> CoeffDescriptor {
    match c {
        RevCoeff::Const(v) => CoeffDescriptor::Const(*v),
        RevCoeff::TopScore => CoeffDescriptor::Named("top-score".into()),
        RevCoeff::CandidateCount => CoeffDescriptor::Named("candidate-count".into()),
    }
}

fn descriptor_to_coeff(c: &CoeffDescriptor) -> Result<RevCoeff> {
    match c {
        CoeffDescriptor::Const(v) => Ok(RevCoeff::Const(*v)),
        CoeffDescriptor::Named(s) if s == "top-score" => Ok(RevCoeff::TopScore),
        CoeffDescriptor::Named(s) if s == "candidate-count" => Ok(RevCoeff::CandidateCount),
        CoeffDescriptor::Named(s) => Err(Error::UnknownRule { name: format!("coefficient {s}") }),
    }
}

fn family_to_descriptor(rule: &PositionalRule) -> RuleDescriptor {
    let (family, t, name, vectors, base, a, b) = match &rule.family {
        Family::Plurality => ("plurality".into(), None, None, None, None, None, None),
        Family::Veto => ("veto".into(), None, None, None, None, None, None),
        Family::TApproval(t) => ("t-approval".into(), Some(*t), None, None, None, None, None),
        Family::TVeto(t) => ("t-veto".into(), Some(*t), None, None, None, None, None),
        Family::Borda => ("borda".into(), None, None, None, None, None, None),
        Family::Custom { name, vectors } => (
            "custom".into(),
            None,
            Some(name.clone()),
            Some(vectors.iter().map(|(m, v)| (m.to_string(), v.clone())).collect()),
            None,
            None,
            None,
        ),
        Family::Reversed { base, a, b } => {
            let base_rule = PositionalRule {
                family: (**base).clone(),
                strongly_pure: false,
                polynomial_scores: false,
                p_valued: None,
            };
            let mut desc = family_to_descriptor(&base_rule);
            // base metadata is recomputed on parse; strip the placeholder flags
            if let RuleDescriptor::Positional { strongly_pure, polynomial_scores, p_valued, .. } =
                &mut desc
            {
                *strongly_pure = None;
                *polynomial_scores = None;
                *p_valued = None;
            }
            (
                "reversed".into(),
                None,
                None,
                None,
                Some(Box::new(desc)),
                Some(coeff_to_descriptor(a)),
                Some(coeff_to_descriptor(b)),
            )
        }
    };
    RuleDescriptor::Positional {
        family,
        t,
        name,
        vectors,
        base,
        a,
        b,
        strongly_pure: Some(rule.strongly_pure),
        polynomial_scores: Some(rule.polynomial_scores),
        p_valued: rule.p_valued,
    }
}

pub fn rule_to_descriptor(rule: &ScoringRule) -> RuleDescriptor {
    match rule {
        ScoringRule::Positional(p) => family_to_descriptor(p),
        ScoringRule::Bucklin => RuleDescriptor::Bucklin,
        ScoringRule::Copeland => RuleDescriptor::Copeland,
        ScoringRule::Maximin => RuleDescriptor::Maximin,
    }
}

pub fn descriptor_to_rule(desc: &RuleDescriptor) -> Result<ScoringRule> {
    match desc {
        RuleDescriptor::Bucklin => Ok(ScoringRule::Bucklin),
        RuleDescriptor::Copeland => Ok(ScoringRule::Copeland),
        RuleDescriptor::Maximin => Ok(ScoringRule::Maximin),
        RuleDescriptor::Positional {
            family,
            t,
            name,
            vectors,
            base,
            a,
            b,
            strongly_pure,
            polynomial_scores,
            p_valued,
        } => {
            let need_t =
                || t.ok_or_else(|| Error::UnknownRule { name: format!("{family} without t") });
            let rule = match family.as_str() {
                "plurality" => PositionalRule::plurality(),
                "veto" => PositionalRule::veto(),
                "borda" => PositionalRule::borda(),
                "t-approval" => PositionalRule::t_approval(need_t()?),
                "t-veto" => PositionalRule::t_veto(need_t()?),
                "custom" => {
                    let raw = vectors
                        .as_ref()
                        .ok_or_else(|| Error::UnknownRule { name: "custom without vectors".into() })?;
                    let mut parsed_vectors = BTreeMap::new();
                    for (key, v) in raw {
                        let m: usize = key
                            .parse()
                            .map_err(|_| parse_err(format!("vector key {key:?} is not a candidate count")))?;
                        parsed_vectors.insert(m, v.clone());
                    }
                    PositionalRule::custom(
                        name.clone().unwrap_or_else(|| "unnamed".into()),
                        parsed_vectors,
                        strongly_pure.unwrap_or(false),
                        polynomial_scores.unwrap_or(false),
                        *p_valued,
                    )
                }
                "reversed" => {
                    let base = base
                        .as_ref()
                        .ok_or_else(|| Error::UnknownRule { name: "reversed without base".into() })?;
                    let base_rule = match descriptor_to_rule(base)? {
                        ScoringRule::Positional(p) => p,
                        _ => {
                            return Err(Error::UnknownRule {
                                name: "reversed of a non-positional rule".into(),
                            })
                        }
                    };
                    let a = descriptor_to_coeff(
                        a.as_ref()
                            .ok_or_else(|| Error::UnknownRule { name: "reversed without a".into() })?,
                    )?;
                    let b = descriptor_to_coeff(
                        b.as_ref()
                            .ok_or_else(|| Error::UnknownRule { name: "reversed without b".into() })?,
                    )?;
                    crate::rules::reversed_rule(&base_rule, a, b)?
                }
                other => return Err(Error::UnknownRule { name: other.into() }),
            };
            Ok(ScoringRule::Positional(rule))
        }
    }
}

// ---------------------------------------------------------------------------
// document <-> domain
// ---------------------------------------------------------------------------

pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let doc: InstanceDocument =
        serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    instance_from_document(&doc)
}

pub fn instance_from_document(doc: &InstanceDocument) -> Result<ParsedInstance> {
    if doc.format_version != FORMAT_VERSION {
        return Err(parse_err(format!(
            "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
            doc.format_version
        )));
    }
    let candidates = CandidateSet::new(doc.candidates.clone())
        .map_err(|e| parse_err(format!("candidates: {e}")))?;
    let m = candidates.len();
    let resolve = |label: &str| {
        candidates
            .index_of(label)
            .ok_or_else(|| parse_err(format!("unknown candidate label {label:?}")))
    };

    if doc.voters.is_empty() {
        return Err(parse_err("at least one voter required"));
    }
    let mut voters = Vec::with_capacity(doc.voters.len());
    for (i, pair_list) in doc.voters.iter().enumerate() {
        let mut pairs = Vec::with_capacity(pair_list.len());
        for [earlier, later] in pair_list {
            pairs.push((resolve(earlier)?, resolve(later)?));
        }
        // cycles surface as CycleError with the voter index in context
        let order = PartialOrder::new(m, &pairs).map_err(|e| match e {
            Error::Cycle { .. } => e,
            other => parse_err(format!("voter {i}: {other}")),
        })?;
        voters.push(order);
    }
    let profile = PartialProfile::new(voters)?;

    if doc.tiebreaker.len() != m {
        return Err(parse_err(format!(
            "tiebreaker lists {} candidates, expected {m}",
            doc.tiebreaker.len()
        )));
    }
    let mut tie_order = Vec::with_capacity(m);
    for label in &doc.tiebreaker {
        tie_order.push(resolve(label)?);
    }
    let tie = LinearOrder::new(tie_order)
        .map_err(|_| parse_err("tiebreaker is not a permutation of the candidates"))?;

    let rule = descriptor_to_rule(&doc.rule)?;

    let query = match &doc.query {
        None => None,
        Some(q) => {
            let extremum = match q.extremum.as_str() {
                "min" => Extremum::Min,
                "max" => Extremum::Max,
                other => return Err(parse_err(format!("extremum must be min or max, got {other:?}"))),
            };
            let cmp = match q.cmp.as_str() {
                "<" => Cmp::Lt,
                ">" => Cmp::Gt,
                other => return Err(parse_err(format!("cmp must be < or >, got {other:?}"))),
            };
            Some(RankQuery { candidate: resolve(&q.candidate)?, extremum, cmp, k: q.k })
        }
    };

    Ok(ParsedInstance {
        candidates,
        profile,
        tie,
        rule,
        query,
        provenance: doc.provenance.clone(),
    })
}

pub fn document_from_parts(
    candidates: &CandidateSet,
    profile: &PartialProfile,
    tie: &LinearOrder,
    rule: &ScoringRule,
    query: Option<&RankQuery>,
    provenance: Option<Provenance>,
) -> InstanceDocument {
    let label = |c: usize| candidates.label(c).to_string();
    InstanceDocument {
        format_version: FORMAT_VERSION.into(),
        candidates: candidates.labels().to_vec(),
        voters: profile
            .voters()
            .iter()
            .map(|v| v.pairs().into_iter().map(|(a, b)| [label(a), label(b)]).collect())
            .collect(),
        tiebreaker: tie.as_slice().iter().map(|&c| label(c)).collect(),
        rule: rule_to_descriptor(rule),
        query: query.map(|q| QueryDescriptor {
            candidate: label(q.candidate),
            extremum: match q.extremum {
                Extremum::Min => "min".into(),
                Extremum::Max => "max".into(),
            },
            cmp: match q.cmp {
                Cmp::Lt => "<".into(),
                Cmp::Gt => ">".into(),
            },
            k: q.k,
        }),
        provenance,
    }
}

pub fn to_json(doc: &InstanceDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

// ---------------------------------------------------------------------------
// gadget provenance
// ---------------------------------------------------------------------------

fn graph_descriptor(g: &Graph) -> GraphDescriptor {
    GraphDescriptor {
        vertices: g.vertex_count(),
        edges: g.edges().map(|(a, b)| [a, b]).collect(),
    }
}

pub fn graph_from_descriptor(d: &GraphDescriptor) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = d.edges.iter().map(|&[a, b]| (a, b)).collect();
    Graph::new(d.vertices, &edges)
}

fn core_document(core: &PwCore, rule: &ScoringRule) -> InstanceDocument {
    // the inner instance, stated as its own decidable document: the focus
    // is a possible winner iff its minimal rank under a favoring
    // tiebreaker stays below 2
    let m = core.candidates.len();
    let tie = partitioned_completion(m, &[vec![core.focus]]).expect("focus in range");
    let query = RankQuery { candidate: core.focus, extremum: Extremum::Min, cmp: Cmp::Lt, k: 2 };
    document_from_parts(&core.candidates, &core.profile, &tie, rule, Some(&query), None)
}

fn core_from_document(doc: &InstanceDocument) -> Result<(PwCore, ScoringRule)> {
    let parsed = instance_from_document(doc)?;
    let focus = parsed
        .query
        .as_ref()
        .ok_or_else(|| parse_err("core document needs a query naming the focus"))?
        .candidate;
    Ok((PwCore::new(parsed.candidates, parsed.profile, focus)?, parsed.rule))
}

/// Serializes a gadget instance together with the provenance needed to
/// rebuild and verify it.
pub fn gadget_document(inst: &GadgetInstance) -> InstanceDocument {
    use crate::gadgets::ClaimSource;
    let mut graph = None;
    let mut x3c = None;
    let mut core = None;
    match &inst.claims[0].source {
        ClaimSource::VertexCoverAtMost(g)
        | ClaimSource::IndependentSetAtLeast(g)
        | ClaimSource::DominatingSetAtMost(g) => graph = Some(graph_descriptor(g)),
        ClaimSource::PossibleWinner(c, rule) | ClaimSource::NecessaryWinner(c, rule) => {
            core = Some(Box::new(core_document(c, rule)))
        }
        ClaimSource::ExactCover { universe, triples } => {
            x3c = Some(X3cDescriptor { universe: *universe, triples: triples.clone() })
        }
    }
    let provenance = Provenance {
        gadget: inst.name.to_string(),
        focus: inst.candidates.label(inst.focus).to_string(),
        k: inst.parameter,
        graph,
        x3c,
        core,
        precondition: inst.precondition.map(|p| {
            match p {
                PreconditionStatus::Verified => "verified",
                PreconditionStatus::Unverified => "unverified",
                PreconditionStatus::Violated => "violated",
            }
            .to_string()
        }),
    };
    document_from_parts(
        &inst.candidates,
        &inst.profile,
        &inst.tie,
        &inst.rule,
        None,
        Some(provenance),
    )
}

/// Rebuilds the gadget named by a parsed document's provenance, so that
/// verification replays the construction rather than trusting the file.
pub fn rebuild_gadget(parsed: &ParsedInstance, limits: &OracleLimits) -> Result<GadgetInstance> {
    let prov = parsed
        .provenance
        .as_ref()
        .ok_or_else(|| parse_err("document carries no provenance block"))?;
    let need_graph = || {
        prov.graph
            .as_ref()
            .ok_or_else(|| parse_err("provenance needs a graph"))
            .and_then(graph_from_descriptor)
    };
    let need_k =
        || prov.k.ok_or_else(|| parse_err("provenance needs the construction parameter k"));
    let need_core = || {
        prov.core
            .as_ref()
            .ok_or_else(|| parse_err("provenance needs the wrapped core"))
            .and_then(|doc| core_from_document(doc))
    };
    let positional = || {
        parsed
            .rule
            .positional()
            .cloned()
            .ok_or_else(|| parse_err("gadget document must carry a positional rule"))
    };

    let inst = match prov.gadget.as_str() {
        "vc" => vc_gadget(&need_graph()?, &positional()?)?,
        "is" => is_gadget(&need_graph()?, &positional()?)?,
        "ds" => ds_gadget(&need_graph()?)?,
        "bucklin-is" => bucklin_is_gadget(&need_graph()?)?,
        "pw-padding" => pw_padding_gadget(&need_core()?.0, need_k()?, &positional()?)?,
        "copeland-padding" => copeland_padding(&need_core()?.0, need_k()?)?,
        "bucklin-padding" => bucklin_padding(&need_core()?.0, need_k()?)?,
        "maximin-padding" => maximin_padding(&need_core()?.0, need_k()?, limits)?,
        "x3c" => {
            let d = prov.x3c.as_ref().ok_or_else(|| parse_err("provenance needs x3c data"))?;
            x3c_gadget(d.universe, &d.triples, need_k()?)?
        }
        other => return Err(parse_err(format!("unknown gadget {other:?}"))),
    };

    if inst.profile != parsed.profile || inst.tie != parsed.tie || inst.rule != parsed.rule {
        return Err(parse_err("provenance does not reproduce the stored instance"));
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets;

    const MINIMAL: &str = r#"{
        "format_version": "1",
        "candidates": ["a", "b"],
        "voters": [[]],
        "tiebreaker": ["a", "b"],
        "rule": { "type": "positional", "family": "plurality" }
    }"#;

    #[test]
    fn minimal_document_parses() {
        let parsed = parse_instance(MINIMAL).unwrap();
        assert_eq!(parsed.candidates.len(), 2);
        assert_eq!(parsed.profile.voter_count(), 1);
        assert!(parsed.query.is_none());
    }

    #[test]
    fn duplicate_label_rejected() {
        let text = MINIMAL.replace("\"a\", \"b\"", "\"a\", \"a\"");
        assert!(parse_instance(&text).is_err());
    }

    #[test]
    fn cyclic_voter_pairs_rejected() {
        let text = MINIMAL.replace("[[]]", r#"[[["a","b"],["b","a"]]]"#);
        assert!(matches!(parse_instance(&text), Err(Error::Cycle { .. })));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = MINIMAL.replace("\"format_version\"", "\"surprise\": 1, \"format_version\"");
        assert!(matches!(parse_instance(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_rule_rejected() {
        let text = MINIMAL.replace("plurality", "dowdall");
        assert!(matches!(parse_instance(&text), Err(Error::UnknownRule { .. })));
    }

    #[test]
    fn bad_tiebreaker_rejected() {
        let text = MINIMAL.replace(r#""tiebreaker": ["a", "b"]"#, r#""tiebreaker": ["a", "a"]"#);
        assert!(parse_instance(&text).is_err());
    }

    #[test]
    fn round_trip_preserves_domain_objects() {
        let candidates = CandidateSet::new(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let profile = PartialProfile::new(vec![
            PartialOrder::new(3, &[(0, 1), (1, 2)]).unwrap(),
            PartialOrder::empty(3),
        ])
        .unwrap();
        let tie = LinearOrder::new(vec![2, 0, 1]).unwrap();
        for rule in [
            ScoringRule::Positional(PositionalRule::t_approval(2)),
            ScoringRule::Positional(
                crate::rules::reversed_rule(
                    &PositionalRule::borda(),
                    RevCoeff::CandidateCount,
                    RevCoeff::Const(1),
                )
                .unwrap(),
            ),
            ScoringRule::Bucklin,
            ScoringRule::Maximin,
        ] {
            let query =
                RankQuery { candidate: 1, extremum: Extremum::Max, cmp: Cmp::Gt, k: 2 };
            let doc =
                document_from_parts(&candidates, &profile, &tie, &rule, Some(&query), None);
            let text = to_json(&doc);
            let parsed = parse_instance(&text).unwrap();
            assert_eq!(parsed.candidates, candidates);
            assert_eq!(parsed.profile, profile);
            assert_eq!(parsed.tie, tie);
            assert_eq!(parsed.rule, rule);
            assert_eq!(parsed.query.unwrap(), query);
        }
    }

    #[test]
    fn custom_rule_round_trip() {
        let mut vectors = BTreeMap::new();
        vectors.insert(3usize, vec![4, 1, 0]);
        vectors.insert(4usize, vec![4, 4, 1, 0]);
        let rule = ScoringRule::Positional(PositionalRule::custom(
            "steps",
            vectors,
            false,
            true,
            Some(3),
        ));
        let desc = rule_to_descriptor(&rule);
        let text = serde_json::to_string(&desc).unwrap();
        let back: RuleDescriptor = serde_json::from_str(&text).unwrap();
        assert_eq!(descriptor_to_rule(&back).unwrap(), rule);
    }

    #[test]
    fn gadget_documents_round_trip_and_rebuild() {
        let limits = OracleLimits::default();
        let g = Graph::complete(3);
        let instances = vec![
            gadgets::vc_gadget(&g, &PositionalRule::plurality()).unwrap(),
            gadgets::ds_gadget(&Graph::path(3)).unwrap(),
            gadgets::x3c_gadget(3, &[[0, 1, 2]], 2).unwrap(),
        ];
        for inst in instances {
            let doc = gadget_document(&inst);
            let text = to_json(&doc);
            let parsed = parse_instance(&text).unwrap();
            let rebuilt = rebuild_gadget(&parsed, &limits).unwrap();
            assert_eq!(rebuilt.profile, inst.profile);
            assert_eq!(rebuilt.claims, inst.claims);
        }
    }

    #[test]
    fn padding_gadget_documents_rebuild() {
        let limits = OracleLimits::default();
        let core = PwCore::new(
            CandidateSet::new(vec!["a".into(), "b".into()]).unwrap(),
            PartialProfile::new(vec![PartialOrder::empty(2)]).unwrap(),
            0,
        )
        .unwrap();
        for inst in [
            gadgets::pw_padding_gadget(&core, 2, &PositionalRule::borda()).unwrap(),
            gadgets::copeland_padding(&core, 2).unwrap(),
            gadgets::bucklin_padding(&core, 2).unwrap(),
        ] {
            let text = to_json(&gadget_document(&inst));
            let parsed = parse_instance(&text).unwrap();
            let rebuilt = rebuild_gadget(&parsed, &limits).unwrap();
            assert_eq!(rebuilt.profile, inst.profile);
        }
    }

    #[test]
    fn tampered_gadget_document_fails_rebuild() {
        let inst = gadgets::ds_gadget(&Graph::path(3)).unwrap();
        let mut doc = gadget_document(&inst);
        doc.voters[0].clear(); // tamper with the stored profile
        let parsed = instance_from_document(&doc).unwrap();
        assert!(rebuild_gadget(&parsed, &OracleLimits::default()).is_err());
    }
}
