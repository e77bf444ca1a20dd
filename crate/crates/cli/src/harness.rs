//! Reproduces the bull, dog, antichain, forest, preservation and block results
//! as a list of individually checked claims.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use bipminor_core::canonical::{are_isomorphic, canonical_form, isomorphism};
use bipminor_core::families::{bull, cycle, dog, h_tree_with, HTreeArms};
use bipminor_core::structure::{blocks, is_k_connected, ConnectivityMode};
use bipminor_core::{
    admissible_contract, admissible_pairs, bipartite_minor_closure, compare_family, CanonicalForm, Graph, Op,
    Relation, SearchOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerate::{connected_bipartite, random_connected, random_graph, random_permutation, trees};
use crate::graph6::emit_graph6;
use crate::witness::{self, StepRecord, Steps, WitnessDocument, LABELING_CONVENTION};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bull,
    Dog,
    Antichain,
    Forest,
    Preservation,
    Blocks,
    Properties,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] =
        ["bull", "dog", "antichain", "forest", "preservation", "blocks", "properties", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bull => "bull",
            Suite::Dog => "dog",
            Suite::Antichain => "antichain",
            Suite::Forest => "forest",
            Suite::Preservation => "preservation",
            Suite::Blocks => "blocks",
            Suite::Properties => "properties",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "bull" => Suite::Bull,
            "dog" => Suite::Dog,
            "antichain" => Suite::Antichain,
            "forest" => Suite::Forest,
            "preservation" => Suite::Preservation,
            "blocks" => Suite::Blocks,
            "properties" => Suite::Properties,
            "all" => Suite::All,
            _ => {
                return Err(CliError::Usage(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    /// Acceptance criterion this claim belongs to (1..=11).
    pub criterion: u8,
    pub parameters: Value,
    pub expected: Value,
    pub computed: Value,
    pub passed: bool,
    pub runtime_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity_mode: Option<&'static str>,
    /// Supporting data not part of the verdict, such as a full matrix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub size_cap: usize,
    pub passed: bool,
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn criterion_passed(&self, criterion: u8) -> Option<bool> {
        let mut claims = self.claims.iter().filter(|c| c.criterion == criterion).peekable();
        claims.peek()?;
        Some(claims.all(|c| c.passed))
    }
}

pub fn verify_harness(suite: Suite, opts: &SearchOptions) -> Result<VerificationReport, CliError> {
    let mut h = Harness { opts: *opts, claims: Vec::new(), replayed: 0, replay_failures: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Bull {
        h.bull_suite()?;
    }
    if all || suite == Suite::Dog {
        h.dog_suite()?;
    }
    if all || suite == Suite::Antichain {
        h.antichain_suite()?;
    }
    if all || suite == Suite::Forest {
        h.forest_suite()?;
    }
    if all || suite == Suite::Preservation {
        h.preservation_suite()?;
    }
    if all || suite == Suite::Blocks {
        h.blocks_suite()?;
    }
    if all || suite == Suite::Properties {
        h.properties_suite()?;
    }
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        size_cap: opts.size_cap,
        passed: h.claims.iter().all(|c| c.passed),
        claims: h.claims,
    })
}

struct Harness {
    opts: SearchOptions,
    claims: Vec<ClaimRecord>,
    // witness documents re-validated since the last flush
    replayed: usize,
    replay_failures: Vec<String>,
}

impl Harness {
    fn claim(
        &mut self,
        id: impl Into<String>,
        criterion: u8,
        parameters: Value,
        expected: Value,
        start: Instant,
        computed: Value,
    ) {
        self.claim_in_mode(id, criterion, parameters, expected, start, computed, None)
    }

    #[allow(clippy::too_many_arguments)]
    fn claim_in_mode(
        &mut self,
        id: impl Into<String>,
        criterion: u8,
        parameters: Value,
        expected: Value,
        start: Instant,
        computed: Value,
        mode: Option<ConnectivityMode>,
    ) {
        let passed = expected == computed;
        self.claims.push(ClaimRecord {
            id: id.into(),
            criterion,
            parameters,
            expected,
            computed,
            passed,
            runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            connectivity_mode: mode.map(ConnectivityMode::name),
            details: None,
        });
    }

    fn attach(&mut self, details: Value) {
        if let Some(last) = self.claims.last_mut() {
            last.details = Some(details);
        }
    }

    /// Decides `h ≤ g`; a positive verdict's witness is pushed through JSON
    /// and re-validated from its graph6 strings alone.
    fn decide(&mut self, relation: Relation, h: &Graph, g: &Graph) -> Result<Option<WitnessDocument>, CliError> {
        let doc = witness::check(relation, h, g, &self.opts)?;
        if !doc.holds {
            return Ok(None);
        }
        self.revalidate(&doc)?;
        Ok(Some(doc))
    }

    fn revalidate(&mut self, doc: &WitnessDocument) -> Result<(), CliError> {
        let text = serde_json::to_string(doc)?;
        let back: WitnessDocument = serde_json::from_str(&text)?;
        self.replayed += 1;
        if let Err(e) = witness::validate(&back, &self.opts) {
            self.replay_failures.push(format!("{} {} <= {}: {e}", doc.relation, doc.target, doc.source));
        }
        Ok(())
    }

    /// Closes the running witness-replay tally as one claim.
    fn flush_replays(&mut self, suite: &str, start: Instant) {
        let checked = std::mem::take(&mut self.replayed);
        let failures = std::mem::take(&mut self.replay_failures);
        self.claim(
            format!("{suite}.witness_replay"),
            11,
            json!({ "witnesses": checked }),
            json!([]),
            start,
            json!(failures),
        );
    }

    fn bull_suite(&mut self) -> Result<(), CliError> {
        let suite_start = Instant::now();
        let pairs: Vec<(usize, usize)> =
            (3..=6).flat_map(|l| [1, 2].map(move |h| (l, h))).filter(|&(l, h)| l + 2 * h <= 10).collect();

        for &(l, horn) in &pairs {
            let start = Instant::now();
            let b = bull(l, &[horn])?;
            let c = cycle(l + 2 * horn)?;
            let computed = match self.decide(Relation::BipartiteMinor, &b, &c)? {
                Some(doc) => {
                    json!({ "holds": true, "admissible_contractions": contraction_count(&doc) })
                }
                None => json!({ "holds": false }),
            };
            self.claim(
                format!("bull.bipartite_minor.B({l},{horn})<=C{}", l + 2 * horn),
                1,
                json!({ "l": l, "l1": horn, "cycle": l + 2 * horn }),
                json!({ "holds": true, "admissible_contractions": horn }),
                start,
                computed,
            );
        }

        for &(l, horn) in &pairs {
            let start = Instant::now();
            let b = bull(l, &[horn])?;
            let mut minors = Vec::new();
            for p in 3..=12 {
                if self.decide(Relation::Minor, &b, &cycle(p)?)?.is_some() {
                    minors.push(p);
                }
            }
            self.claim(
                format!("bull.not_minor.B({l},{horn})"),
                2,
                json!({ "l": l, "l1": horn, "cycles": "C3..=C12" }),
                json!({ "minor_of_cycles": [] }),
                start,
                json!({ "minor_of_cycles": minors }),
            );
        }

        // C6 with a distance-2 pair identified is B(4,1)
        let start = Instant::now();
        let c6 = cycle(6)?;
        let contracted = c6.contract_set(&[0, 2])?;
        let admissible = admissible_contract(&c6, 0, 2, &self.opts).is_ok();
        let iso = are_isomorphic(&contracted, &bull(4, &[1])?)?;
        self.claim(
            "bull.replay.C6/{0,2}=B(4,1)",
            3,
            json!({ "source": "C6", "pair": [0, 2] }),
            json!({ "admissible": true, "isomorphic_to_B(4,1)": true }),
            start,
            json!({ "admissible": admissible, "isomorphic_to_B(4,1)": iso }),
        );

        let start = Instant::now();
        let computed = self.two_step_replay()?;
        self.claim(
            "bull.replay.C8->B(6,1)->B(4,2)",
            3,
            json!({ "source": "C8", "steps": 2 }),
            json!({ "first_is_B(6,1)": true, "second_is_B(4,2)": true, "witness_valid": true }),
            start,
            computed,
        );

        self.flush_replays("bull", suite_start);
        Ok(())
    }

    /// Two admissible contractions from C8, checking the intermediate graph
    /// and the result exactly up to isomorphism.
    fn two_step_replay(&mut self) -> Result<Value, CliError> {
        let c8 = cycle(8)?;
        let b61 = bull(6, &[1])?;
        let b42 = bull(4, &[2])?;
        let mut found: Option<(Op, Op)> = None;
        'outer: for p in admissible_pairs(&c8, &self.opts)? {
            let mid = c8.contract_set(&[p.u, p.v])?;
            if !are_isomorphic(&mid, &b61)? {
                continue;
            }
            for q in admissible_pairs(&mid, &self.opts)? {
                if are_isomorphic(&mid.contract_set(&[q.u, q.v])?, &b42)? {
                    found = Some((Op::Contract { u: p.u, v: p.v, w: p.w }, Op::Contract { u: q.u, v: q.v, w: q.w }));
                    break 'outer;
                }
            }
        }
        let Some((first, second)) = found else {
            return Ok(json!({ "first_is_B(6,1)": false, "second_is_B(4,2)": false, "witness_valid": false }));
        };
        let doc = WitnessDocument {
            relation: Relation::BipartiteMinor.name().to_string(),
            holds: true,
            source: emit_graph6(&c8)?,
            target: emit_graph6(&b42)?,
            labeling_convention: LABELING_CONVENTION.to_string(),
            steps: Steps::Trace(vec![first.into(), second.into()]),
        };
        let before = self.replay_failures.len();
        self.revalidate(&doc)?;
        let mid = first.apply(&c8, &self.opts)?;
        let end = second.apply(&mid, &self.opts)?;
        Ok(json!({
            "first_is_B(6,1)": are_isomorphic(&mid, &b61)?,
            "second_is_B(4,2)": are_isomorphic(&end, &b42)?,
            "witness_valid": self.replay_failures.len() == before,
        }))
    }

    fn dog_suite(&mut self) -> Result<(), CliError> {
        let suite_start = Instant::now();
        for (l, k) in [(5, 1), (5, 2), (6, 1), (6, 2)] {
            for e in [3, 4] {
                let start = Instant::now();
                let small = dog(l, &[e, e])?;
                let big = dog(l + k, &[e, e])?;
                let minor = self.decide(Relation::Minor, &small, &big)?.is_some();
                let bip = self.decide(Relation::BipartiteMinor, &small, &big)?.is_some();
                self.claim(
                    format!("dog.D({l},{e},{e})<=D({},{e},{e})", l + k),
                    4,
                    json!({ "l": l, "k": k, "ears": [e, e], "host_vertices": big.vertex_count() }),
                    json!({ "minor": true, "bipartite_minor": false }),
                    start,
                    json!({ "minor": minor, "bipartite_minor": bip }),
                );
            }
        }
        self.flush_replays("dog", suite_start);
        Ok(())
    }

    fn antichain_suite(&mut self) -> Result<(), CliError> {
        let suite_start = Instant::now();
        let snouts = [4, 6, 8];
        let dogs: Vec<Graph> = snouts.iter().map(|&l| dog(l, &[4, 4])).collect::<Result<_, _>>()?;

        let start = Instant::now();
        let cmp = compare_family(&dogs, Relation::BipartiteMinor, &self.opts)?;
        self.claim(
            "antichain.dogs.bipartite_minor",
            5,
            json!({ "family": ["D(4,4,4)", "D(6,4,4)", "D(8,4,4)"] }),
            json!({ "antichain": true, "matrix": [[true, false, false], [false, true, false], [false, false, true]] }),
            start,
            json!({ "antichain": cmp.is_antichain(), "matrix": cmp.matrix }),
        );
        for (&l, g) in snouts.iter().zip(&dogs) {
            let start = Instant::now();
            self.claim(
                format!("antichain.D({l},4,4).bipartite"),
                5,
                json!({ "graph": format!("D({l},4,4)") }),
                json!(true),
                start,
                json!(g.is_bipartite().is_some()),
            );
            for mode in [ConnectivityMode::PaperLiteral, ConnectivityMode::Standard] {
                let start = Instant::now();
                let two = is_k_connected(g, 2, mode)?;
                self.claim_in_mode(
                    format!("antichain.D({l},4,4).2-connected.{}", mode.name()),
                    5,
                    json!({ "graph": format!("D({l},4,4)"), "k": 2 }),
                    json!(true),
                    start,
                    json!(two),
                    Some(mode),
                );
            }
        }
        // reflexivity witnesses for the diagonal
        for g in &dogs {
            self.decide(Relation::BipartiteMinor, g, g)?;
        }

        for (arms, label) in [(HTreeArms::ThreeVertex, "three_vertex_arms"), (HTreeArms::FourVertex, "four_vertex_arms")] {
            let family: Vec<Graph> = (2..=5).map(|l| h_tree_with(l, arms)).collect::<Result<_, _>>()?;
            let start = Instant::now();
            let sub = compare_family(&family, Relation::Subgraph, &self.opts)?;
            self.claim(
                format!("antichain.h_trees.{label}.subgraph"),
                7,
                json!({ "connectors": [2, 3, 4, 5], "arms": label }),
                json!({ "antichain": true }),
                start,
                json!({ "antichain": sub.is_antichain() }),
            );
            self.attach(json!({ "matrix": sub.matrix }));
            let start = Instant::now();
            let minor = compare_family(&family, Relation::Minor, &self.opts)?;
            self.claim(
                format!("antichain.h_trees.{label}.minor"),
                7,
                json!({ "connectors": [2, 3, 4, 5], "arms": label }),
                json!({ "increasing_chain": true }),
                start,
                json!({ "increasing_chain": minor.is_increasing_chain() }),
            );
            self.attach(json!({ "matrix": minor.matrix }));
            for (i, a) in family.iter().enumerate() {
                for b in &family[i..] {
                    self.decide(Relation::Minor, a, b)?;
                }
            }
        }
        self.flush_replays("antichain", suite_start);
        Ok(())
    }

    fn forest_suite(&mut self) -> Result<(), CliError> {
        let suite_start = Instant::now();
        let start = Instant::now();
        let all: Vec<Graph> = (1..=7).flat_map(trees).collect();
        let mut mismatches = Vec::new();
        let mut positives = 0;
        for a in &all {
            for b in &all {
                let bip = self.decide(Relation::BipartiteMinor, a, b)?.is_some();
                let sub = self.decide(Relation::Subgraph, a, b)?.is_some();
                positives += usize::from(bip);
                if bip != sub {
                    mismatches.push(format!("{} vs {}", emit_graph6(a)?, emit_graph6(b)?));
                }
            }
        }
        self.claim(
            "forest.trees_up_to_7",
            6,
            json!({ "trees": all.len(), "ordered_pairs": all.len() * all.len(), "related_pairs": positives }),
            json!({ "mismatches": [] }),
            start,
            json!({ "mismatches": mismatches }),
        );
        self.flush_replays("forest", suite_start);
        Ok(())
    }

    fn preservation_suite(&mut self) -> Result<(), CliError> {
        for n in 1..=7 {
            let start = Instant::now();
            let graphs = connected_bipartite(n);
            let mut members = 0;
            let mut violations = Vec::new();
            for g in &graphs {
                let closure = bipartite_minor_closure(g, &self.opts)?;
                members += closure.len();
                for f in &closure {
                    if f.to_graph().is_bipartite().is_none() {
                        violations.push(format!("{} <= {}", emit_graph6(&f.to_graph())?, emit_graph6(g)?));
                    }
                }
            }
            self.claim(
                format!("preservation.connected_bipartite.n{n}"),
                8,
                json!({ "vertices": n, "graphs": graphs.len(), "closure_members": members }),
                json!({ "non_bipartite_members": [] }),
                start,
                json!({ "non_bipartite_members": violations }),
            );
        }
        Ok(())
    }

    fn blocks_suite(&mut self) -> Result<(), CliError> {
        // every 2-connected bipartite minor already lives inside one block
        let start = Instant::now();
        let seed = 9;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        let mut violations = Vec::new();
        for _ in 0..200 {
            let n = rng.gen_range(3..=9);
            let g = random_connected(&mut rng, n, 0.2);
            let mut from_blocks = BTreeSet::new();
            for b in blocks(&g).blocks {
                from_blocks.extend(bipartite_minor_closure(&b.to_graph(&g), &self.opts)?);
            }
            for f in bipartite_minor_closure(&g, &self.opts)? {
                if !is_k_connected(&f.to_graph(), 2, ConnectivityMode::Standard)? {
                    continue;
                }
                checked += 1;
                if !from_blocks.contains(&f) {
                    violations.push(format!("{} <= {}", emit_graph6(&f.to_graph())?, emit_graph6(&g)?));
                }
            }
        }
        self.claim_in_mode(
            "blocks.random_connected",
            9,
            json!({ "graphs": 200, "vertices": "3..=9", "extra_edge_probability": 0.2, "seed": seed, "two_connected_members": checked }),
            json!({ "violations": [] }),
            start,
            json!({ "violations": violations }),
            Some(ConnectivityMode::Standard),
        );

        let start = Instant::now();
        let c8 = bipartite_minor_closure(&cycle(8)?, &self.opts)?;
        let two = two_connected_members(&c8, ConnectivityMode::Standard)?;
        self.claim_in_mode(
            "blocks.closure(C8).two_connected",
            10,
            json!({ "graph": "C8" }),
            json!(["C4", "C6", "C8"]),
            start,
            json!(describe_all(&two)?),
            Some(ConnectivityMode::Standard),
        );
        self.paper_literal_extras("C8", &c8, &two)?;

        let start = Instant::now();
        let d = bipartite_minor_closure(&dog(6, &[4])?, &self.opts)?;
        let two = two_connected_members(&d, ConnectivityMode::Standard)?;
        let names = describe_all(&two)?;
        let odd: Vec<&String> = names.iter().filter(|s| !s.starts_with('C') && !s.starts_with("D(")).collect();
        self.claim_in_mode(
            "blocks.closure(D(6,4)).two_connected",
            10,
            json!({ "graph": "D(6,4)" }),
            json!({ "neither_cycle_nor_one_eared_dog": [] }),
            start,
            json!({ "neither_cycle_nor_one_eared_dog": odd }),
            Some(ConnectivityMode::Standard),
        );
        self.attach(json!({ "members": names }));
        self.paper_literal_extras("D(6,4)", &d, &two)?;
        Ok(())
    }

    /// Members that only count as 2-connected under the literal reading;
    /// listed for information, never failing.
    fn paper_literal_extras(
        &mut self,
        name: &str,
        closure: &BTreeSet<CanonicalForm>,
        standard: &[CanonicalForm],
    ) -> Result<(), CliError> {
        let start = Instant::now();
        let literal = two_connected_members(closure, ConnectivityMode::PaperLiteral)?;
        let extras: Vec<CanonicalForm> = literal.into_iter().filter(|f| !standard.contains(f)).collect();
        let names = describe_all(&extras)?;
        self.claim_in_mode(
            format!("blocks.closure({name}).paper_literal_extras"),
            10,
            json!({ "graph": name, "informational": true }),
            json!(names),
            start,
            json!(names),
            Some(ConnectivityMode::PaperLiteral),
        );
        Ok(())
    }

    fn properties_suite(&mut self) -> Result<(), CliError> {
        let suite_start = Instant::now();
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut broken = Vec::new();
        for i in 0..50 {
            let n = 1 + i % 12;
            let p = [0.2, 0.4, 0.6][i % 3];
            let g = random_graph(&mut rng, n, p);
            let form = canonical_form(&g)?;
            for _ in 0..100 {
                let perm = random_permutation(&mut rng, n);
                if canonical_form(&g.permute(&perm))? != form {
                    broken.push(format!("{} under {perm:?}", emit_graph6(&g)?));
                }
            }
        }
        self.claim(
            "properties.canonical_relabel_invariance",
            11,
            json!({ "graphs": 50, "permutations_each": 100, "vertices": "1..=12", "seed": 11 }),
            json!({ "failures": [] }),
            start,
            json!({ "failures": broken }),
        );

        for relation in [Relation::BipartiteMinor, Relation::Minor] {
            let start = Instant::now();
            let mut rng = ChaCha8Rng::seed_from_u64(13);
            let mut failures = Vec::new();
            for _ in 0..200 {
                let n = rng.gen_range(1..=6);
                let c = random_graph(&mut rng, n, 0.5);
                let b = walk(&mut rng, relation, &c, 2, &self.opts)?;
                let a = walk(&mut rng, relation, &b, 2, &self.opts)?;
                let ab = self.decide(relation, &a, &b)?.is_some();
                let bc = self.decide(relation, &b, &c)?.is_some();
                let ac = self.decide(relation, &a, &c)?.is_some();
                if !(ab && bc && ac) {
                    failures.push(format!("{} {} {}", emit_graph6(&a)?, emit_graph6(&b)?, emit_graph6(&c)?));
                }
            }
            self.claim(
                format!("properties.transitivity.{}", relation.name()),
                11,
                json!({ "triples": 200, "max_vertices": 6, "seed": 13 }),
                json!({ "failures": [] }),
                start,
                json!({ "failures": failures }),
            );
        }
        self.flush_replays("properties", suite_start);
        Ok(())
    }
}

fn contraction_count(doc: &WitnessDocument) -> usize {
    match &doc.steps {
        Steps::Trace(t) => t.iter().filter(|s| matches!(s, StepRecord::AdmissibleContract { .. })).count(),
        Steps::BranchSets(_) => 0,
    }
}

/// A random descending walk of up to `steps` single operations of `relation`.
fn walk(rng: &mut impl Rng, relation: Relation, g: &Graph, steps: usize, opts: &SearchOptions) -> Result<Graph, CliError> {
    let mut cur = g.clone();
    for _ in 0..steps {
        let next: Vec<Graph> = match relation {
            Relation::BipartiteMinor => {
                bipminor_core::relations::successors(&cur, opts)?.into_iter().map(|(_, g)| g).collect()
            }
            _ => {
                let mut out: Vec<Graph> =
                    (0..cur.vertex_count()).map(|v| cur.delete_vertex(v)).collect::<Result<_, _>>()?;
                for (u, v) in cur.edges() {
                    out.push(cur.delete_edge(u, v)?);
                    if relation == Relation::Minor {
                        out.push(cur.contract_set(&[u, v])?);
                    }
                }
                out
            }
        };
        if next.is_empty() {
            break;
        }
        cur = next[rng.gen_range(0..next.len())].clone();
    }
    Ok(cur)
}

fn two_connected_members(
    closure: &BTreeSet<CanonicalForm>,
    mode: ConnectivityMode,
) -> Result<Vec<CanonicalForm>, CliError> {
    let mut out = Vec::new();
    for f in closure {
        if is_k_connected(&f.to_graph(), 2, mode)? {
            out.push(f.clone());
        }
    }
    // smallest first
    out.sort_by_key(|f| (f.vertex_count(), f.edge_count()));
    Ok(out)
}

fn describe_all(forms: &[CanonicalForm]) -> Result<Vec<String>, CliError> {
    forms.iter().map(|f| describe(&f.to_graph())).collect()
}

/// A short name for small recognisable graphs (`K_n` for n ≤ 2, cycles,
/// one-eared dogs); graph6 otherwise.
pub fn describe(g: &Graph) -> Result<String, CliError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 2 && m == n * n.saturating_sub(1) / 2 {
        return Ok(format!("K{n}"));
    }
    if n >= 3 && m == n && isomorphism(g, &cycle(n)?)?.is_some() {
        return Ok(format!("C{n}"));
    }
    if m == n + 1 {
        for l in (3..n).rev() {
            let e = n + 2 - l;
            if e >= 3 && are_isomorphic(g, &dog(l, &[e])?)? {
                return Ok(format!("D({l},{e})"));
            }
        }
    }
    Ok(emit_graph6(g)?)
}
