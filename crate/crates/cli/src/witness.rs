//! JSON witness documents for relation checks.
//!
//! ```json
//! {
//!   "relation": "bipartite_minor",
//!   "holds": true,
//!   "source": "EhEG",
//!   "target": "Dl_",
//!   "labeling_convention": "compact-min-position",
//!   "steps": [{ "op": "admissible_contract", "u": 0, "v": 2, "w": 1 }]
//! }
//! ```
//!
//! `source` is the host graph `G` and `target` the contained graph `H`, both as
//! labelled graph6. For `bipartite_minor` and `subgraph`, `steps` is the list of
//! operations that turns `G` into a copy of `H`, with vertex labels taken from
//! the graph just before each step; deletions close up indices and a contracted
//! pair lands at the smaller label. For `minor`, `steps` maps each target
//! vertex to its sorted branch set in `G`. A document with `holds: false`
//! carries an empty step list.

use std::collections::BTreeMap;

use bipminor_core::canonical::are_isomorphic;
use bipminor_core::structure::subgraph_embedding;
use bipminor_core::{is_bipartite_minor, is_minor, Graph, MinorModel, Op, OpTrace, Relation, SearchOptions};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};

pub const LABELING_CONVENTION: &str = "compact-min-position";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub relation: String,
    pub holds: bool,
    pub source: String,
    pub target: String,
    pub labeling_convention: String,
    pub steps: Steps,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Steps {
    Trace(Vec<StepRecord>),
    BranchSets(#[serde(deserialize_with = "numeric_keys")] BTreeMap<usize, Vec<usize>>),
}

// untagged enums buffer map keys as strings, so parse them back by hand
fn numeric_keys<'de, D: serde::Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, Vec<usize>>, D::Error> {
    BTreeMap::<String, Vec<usize>>::deserialize(d)?
        .into_iter()
        .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(serde::de::Error::custom))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum StepRecord {
    DeleteVertex { v: usize },
    DeleteEdge { u: usize, v: usize },
    AdmissibleContract { u: usize, v: usize, w: usize },
}

impl From<Op> for StepRecord {
    fn from(op: Op) -> Self {
        match op {
            Op::DeleteVertex(v) => StepRecord::DeleteVertex { v },
            Op::DeleteEdge(u, v) => StepRecord::DeleteEdge { u, v },
            Op::Contract { u, v, w } => StepRecord::AdmissibleContract { u, v, w },
        }
    }
}

impl From<StepRecord> for Op {
    fn from(r: StepRecord) -> Self {
        match r {
            StepRecord::DeleteVertex { v } => Op::DeleteVertex(v),
            StepRecord::DeleteEdge { u, v } => Op::DeleteEdge(u, v),
            StepRecord::AdmissibleContract { u, v, w } => Op::Contract { u, v, w },
        }
    }
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
    #[error("unsupported labeling convention {0:?}")]
    Convention(String),
    #[error("bad graph6 in witness: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("replay failed: {0}")]
    Replay(#[from] bipminor_core::Error),
    #[error("replayed graph is not isomorphic to the target")]
    NotIsomorphic,
    #[error("invalid minor model: {0}")]
    Model(&'static str),
    #[error("step list does not match the relation")]
    WrongStepKind,
    #[error("a negative verdict must not carry steps")]
    StepsOnNegative,
}

pub fn parse_relation(name: &str) -> Option<Relation> {
    match name {
        "bipminor" | "bipartite_minor" | "bipartite-minor" => Some(Relation::BipartiteMinor),
        "minor" => Some(Relation::Minor),
        "subgraph" => Some(Relation::Subgraph),
        _ => None,
    }
}

/// Deletions that cut `g` down to the image of an embedding of `h`: unused
/// edges first, then unused vertices from the top so earlier labels stay put.
pub fn embedding_to_trace(h: &Graph, g: &Graph, image: &[usize]) -> OpTrace {
    let mut steps = Vec::new();
    for (a, b) in g.edges() {
        let used = h.edges().any(|(x, y)| {
            let (p, q) = (image[x], image[y]);
            (p.min(q), p.max(q)) == (a, b)
        });
        if !used {
            steps.push(Op::DeleteEdge(a, b));
        }
    }
    for v in (0..g.vertex_count()).rev() {
        if !image.contains(&v) {
            steps.push(Op::DeleteVertex(v));
        }
    }
    OpTrace { steps }
}

/// Decides `h ≤ g` under `relation` and packages the verdict with its witness.
pub fn check(relation: Relation, h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<WitnessDocument, WitnessError> {
    let steps = match relation {
        Relation::BipartiteMinor => is_bipartite_minor(h, g, opts)?.map(trace_steps),
        Relation::Subgraph => subgraph_embedding(h, g, opts)?.map(|img| trace_steps(embedding_to_trace(h, g, &img))),
        Relation::Minor => is_minor(h, g, opts)?.map(|m| Steps::BranchSets(m.branch_sets.into_iter().enumerate().collect())),
    };
    Ok(WitnessDocument {
        relation: relation.name().to_string(),
        holds: steps.is_some(),
        source: emit_graph6(g)?,
        target: emit_graph6(h)?,
        labeling_convention: LABELING_CONVENTION.to_string(),
        steps: steps.unwrap_or(Steps::Trace(Vec::new())),
    })
}

fn trace_steps(t: OpTrace) -> Steps {
    Steps::Trace(t.steps.into_iter().map(StepRecord::from).collect())
}

/// Re-checks a document from its graph6 strings alone: traces are replayed
/// step by step (each contraction re-verified as admissible) and the result
/// compared to the target up to isomorphism; branch sets are checked against
/// the model invariants.
pub fn validate(doc: &WitnessDocument, opts: &SearchOptions) -> Result<(), WitnessError> {
    let relation = parse_relation(&doc.relation).ok_or_else(|| WitnessError::UnknownRelation(doc.relation.clone()))?;
    if doc.labeling_convention != LABELING_CONVENTION {
        return Err(WitnessError::Convention(doc.labeling_convention.clone()));
    }
    let g = parse_graph6(&doc.source)?;
    let h = parse_graph6(&doc.target)?;
    if !doc.holds {
        let empty = match &doc.steps {
            Steps::Trace(t) => t.is_empty(),
            Steps::BranchSets(m) => m.is_empty(),
        };
        return if empty { Ok(()) } else { Err(WitnessError::StepsOnNegative) };
    }
    match (&doc.steps, relation) {
        (Steps::Trace(records), Relation::BipartiteMinor | Relation::Subgraph) => {
            if relation == Relation::Subgraph
                && records.iter().any(|r| matches!(r, StepRecord::AdmissibleContract { .. }))
            {
                return Err(WitnessError::WrongStepKind);
            }
            let trace = OpTrace { steps: records.iter().copied().map(Op::from).collect() };
            let end = trace.replay(&g, opts)?;
            if are_isomorphic(&end, &h)? {
                Ok(())
            } else {
                Err(WitnessError::NotIsomorphic)
            }
        }
        (Steps::BranchSets(sets), Relation::Minor) => {
            if sets.keys().copied().ne(0..h.vertex_count()) {
                return Err(WitnessError::Model("branch sets must be keyed 0..|V(H)|"));
            }
            let model = MinorModel { branch_sets: sets.values().cloned().collect() };
            model.validate(&h, &g).map_err(WitnessError::Model)
        }
        // an empty trace also parses as the trace variant
        (Steps::Trace(t), Relation::Minor) if t.is_empty() && h.vertex_count() == 0 => Ok(()),
        _ => Err(WitnessError::WrongStepKind),
    }
}
