//! Admissible contractions and the subgraph, minor and bipartite minor relations.
//!
//! A contraction of two vertices `u`, `v` is admissible when they have a common
//! neighbour `w` such that `u, w, v` lies on an induced non-separating cycle.
//! `H` is a bipartite minor of `G` when `G` can be turned into `H` by vertex
//! deletions, edge deletions and admissible contractions.
//!
//! Both decision procedures are exhaustive searches over graphs reachable from
//! `G`, memoised on canonical forms. Every operation strictly lowers `|V| + |E|`
//! and never raises the cycle rank `|E| - |V| + c`, so states smaller than the
//! target in any of `|V|`, `|E|` or cycle rank are dropped.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::canonical::{canonical_labeling_unchecked, CanonicalForm};
use crate::structure::{check_cap, embed, peripheral_cycles_unchecked, CycleSeq};
use crate::{Error, Graph, Result};

/// Default vertex cap for exhaustive searches.
pub const DEFAULT_SEARCH_CAP: usize = 14;

/// Limits for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest vertex count accepted by searches and enumerations (at most 64).
    pub size_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { size_cap: DEFAULT_SEARCH_CAP }
    }
}

impl SearchOptions {
    pub fn with_cap(size_cap: usize) -> Self {
        SearchOptions { size_cap }
    }
}

/// A pair `{u, v}` (with `u < v`) whose contraction is admissible, together
/// with one witness: the common neighbour `w` and a peripheral cycle on which
/// `u, w, v` are consecutive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissiblePair {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub cycle: CycleSeq,
}

/// All admissible pairs, sorted by `(u, v)`. The witness for each pair is the
/// smallest `w`, then the smallest normalised cycle.
pub fn admissible_pairs(g: &Graph, opts: &SearchOptions) -> Result<Vec<AdmissiblePair>> {
    check_cap(g, opts)?;
    Ok(admissible_pairs_unchecked(g))
}

fn admissible_pairs_unchecked(g: &Graph) -> Vec<AdmissiblePair> {
    let mut best: BTreeMap<(usize, usize), (usize, CycleSeq)> = BTreeMap::new();
    for cycle in peripheral_cycles_unchecked(g) {
        for (a, w, c) in cycle.triples() {
            let key = (a.min(c), a.max(c));
            let better = match best.get(&key) {
                None => true,
                Some((bw, bc)) => (w, &cycle) < (*bw, bc),
            };
            if better {
                best.insert(key, (w, cycle.clone()));
            }
        }
    }
    best.into_iter().map(|((u, v), (w, cycle))| AdmissiblePair { u, v, w, cycle }).collect()
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, vertex_count: g.vertex_count() })
    }
}

/// Contracts `u` and `v` if that is admissible, reporting whether the pair
/// lacks a common neighbour or just a peripheral cycle through one.
pub fn admissible_contract(g: &Graph, u: usize, v: usize, opts: &SearchOptions) -> Result<Graph> {
    check_cap(g, opts)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::SameVertex { vertex: u });
    }
    if (g.neighbor_mask(u) & g.neighbor_mask(v)) == 0 {
        return Err(Error::NoCommonNeighbor { u, v });
    }
    let cycles = peripheral_cycles_unchecked(g);
    if !cycles.iter().any(|c| c.triples().any(|(a, _, b)| (a == u && b == v) || (a == v && b == u))) {
        return Err(Error::NoPeripheralCycle { u, v });
    }
    g.contract_set(&[u, v])
}

/// One step of an operation sequence. Vertex labels refer to the graph just
/// before the step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    /// Admissible contraction of `u` and `v` witnessed by the common neighbour `w`.
    Contract { u: usize, v: usize, w: usize },
}

impl Op {
    /// Applies the step, checking that a contraction is admissible with the
    /// recorded witness.
    pub fn apply(&self, g: &Graph, opts: &SearchOptions) -> Result<Graph> {
        match *self {
            Op::DeleteVertex(v) => g.delete_vertex(v),
            Op::DeleteEdge(u, v) => g.delete_edge(u, v),
            Op::Contract { u, v, w } => {
                check_cap(g, opts)?;
                for x in [u, v, w] {
                    check_vertex(g, x)?;
                }
                if u == v {
                    return Err(Error::SameVertex { vertex: u });
                }
                if !(g.has_edge(u, w) && g.has_edge(v, w)) {
                    return Err(Error::InvalidWitness { u, v, w });
                }
                if !peripheral_cycles_unchecked(g).iter().any(|c| c.has_consecutive(u, w, v)) {
                    return Err(Error::InvalidWitness { u, v, w });
                }
                g.contract_set(&[u, v])
            }
        }
    }
}

/// A sequence of deletions and admissible contractions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpTrace {
    pub steps: Vec<Op>,
}

impl OpTrace {
    /// Replays the steps from `source`, validating each one.
    pub fn replay(&self, source: &Graph, opts: &SearchOptions) -> Result<Graph> {
        self.steps.iter().try_fold(source.clone(), |g, op| op.apply(&g, opts))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn contraction_count(&self) -> usize {
        self.steps.iter().filter(|op| matches!(op, Op::Contract { .. })).count()
    }
}

/// Branch sets proving `H ≤_M G`: `branch_sets[x]` is the sorted set of
/// vertices of `G` that vertex `x` of `H` comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    /// Checks every model invariant against `h` and `g`.
    pub fn validate(&self, h: &Graph, g: &Graph) -> core::result::Result<(), &'static str> {
        if self.branch_sets.len() != h.vertex_count() {
            return Err("one branch set per target vertex required");
        }
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (x, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err("empty branch set");
            }
            for &v in set {
                if v >= g.vertex_count() {
                    return Err("branch set vertex out of range");
                }
                if owner[v] != usize::MAX {
                    return Err("branch sets overlap");
                }
                owner[v] = x;
            }
        }
        for set in &self.branch_sets {
            let mut reached = vec![set[0]];
            let mut i = 0;
            while i < reached.len() {
                let a = reached[i];
                i += 1;
                for b in g.neighbors(a) {
                    if set.contains(&b) && !reached.contains(&b) {
                        reached.push(b);
                    }
                }
            }
            if reached.len() != set.len() {
                return Err("branch set is not connected");
            }
        }
        for (x, y) in h.edges() {
            let covered =
                self.branch_sets[x].iter().any(|&a| self.branch_sets[y].iter().any(|&b| g.has_edge(a, b)));
            if !covered {
                return Err("target edge has no source edge between its branch sets");
            }
        }
        Ok(())
    }
}

fn canon(g: &Graph) -> CanonicalForm {
    canonical_labeling_unchecked(g).0
}

fn check_pair(h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<()> {
    check_cap(g, opts)?;
    check_cap(h, opts)
}

/// All single-step successors of `g` under deletions and admissible
/// contractions, one per isomorphism class, keyed by canonical form. The
/// recorded step is the first that produced the class, in the order vertex
/// deletions, edge deletions, contractions.
fn bipartite_moves(g: &Graph) -> BTreeMap<CanonicalForm, (Op, Graph)> {
    let mut out = BTreeMap::new();
    let mut offer = |op: Op, child: Graph| {
        out.entry(canon(&child)).or_insert((op, child));
    };
    for v in 0..g.vertex_count() {
        offer(Op::DeleteVertex(v), g.delete_vertex(v).expect("vertex in range"));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in edges {
        offer(Op::DeleteEdge(u, v), g.delete_edge(u, v).expect("edge exists"));
    }
    for p in admissible_pairs_unchecked(g) {
        offer(Op::Contract { u: p.u, v: p.v, w: p.w }, g.contract_set(&[p.u, p.v]).expect("pair in range"));
    }
    out
}

struct Floor {
    n: usize,
    m: usize,
    rank: usize,
}

impl Floor {
    fn of(h: &Graph) -> Self {
        Floor { n: h.vertex_count(), m: h.edge_count(), rank: h.cycle_rank() }
    }

    fn admits(&self, g: &Graph) -> bool {
        g.vertex_count() >= self.n && g.edge_count() >= self.m && g.cycle_rank() >= self.rank
    }
}

/// Decides `H ≤_B G`. Returns an operation sequence turning `g` into a graph
/// isomorphic to `h` when the relation holds.
pub fn is_bipartite_minor(h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<Option<OpTrace>> {
    check_pair(h, g, opts)?;
    let floor = Floor::of(h);
    if !floor.admits(g) {
        return Ok(None);
    }
    let target = canon(h);
    let start = canon(g);
    let mut visited = BTreeSet::new();
    visited.insert(start.clone());
    let found = bip_dfs(g, &start, &target, &floor, &mut visited);
    Ok(found.map(|mut steps| {
        steps.reverse();
        OpTrace { steps }
    }))
}

// Returns the steps in reverse order.
fn bip_dfs(
    g: &Graph,
    form: &CanonicalForm,
    target: &CanonicalForm,
    floor: &Floor,
    visited: &mut BTreeSet<CanonicalForm>,
) -> Option<Vec<Op>> {
    if form == target {
        return Some(Vec::new());
    }
    // every step lowers |V| + |E|, so a state the size of the target is final
    if g.vertex_count() == floor.n && g.edge_count() == floor.m {
        return None;
    }
    for (child_form, (op, child)) in bipartite_moves(g) {
        if !floor.admits(&child) || !visited.insert(child_form.clone()) {
            continue;
        }
        if let Some(mut steps) = bip_dfs(&child, &child_form, target, floor, visited) {
            steps.push(op);
            return Some(steps);
        }
    }
    None
}

/// Every graph (up to isomorphism, `g` included) reachable from `g` by
/// deletions and admissible contractions, found breadth first.
pub fn bipartite_minor_closure(g: &Graph, opts: &SearchOptions) -> Result<BTreeSet<CanonicalForm>> {
    check_cap(g, opts)?;
    let mut seen = BTreeSet::new();
    seen.insert(canon(g));
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(state) = queue.pop_front() {
        for (form, (_, child)) in bipartite_moves(&state) {
            if seen.insert(form) {
                queue.push_back(child);
            }
        }
    }
    Ok(seen)
}

/// Decides `H ≤_M G` and returns branch sets when it holds.
///
/// `H` is a minor of `G` exactly when it is a subgraph of some graph obtained
/// from `G` by edge contractions alone, so the search walks contraction
/// quotients (memoised on canonical form) and tests subgraph containment at
/// each. Branch sets are carried along the contractions.
pub fn is_minor(h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<Option<MinorModel>> {
    check_pair(h, g, opts)?;
    let floor = Floor::of(h);
    if !floor.admits(g) {
        return Ok(None);
    }
    let branches: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    let mut visited = BTreeSet::new();
    visited.insert(canon(g));
    Ok(minor_dfs(h, g, branches, &floor, &mut visited).map(|mut branch_sets| {
        for set in &mut branch_sets {
            set.sort_unstable();
        }
        MinorModel { branch_sets }
    }))
}

fn minor_dfs(
    h: &Graph,
    g: &Graph,
    branches: Vec<Vec<usize>>,
    floor: &Floor,
    visited: &mut BTreeSet<CanonicalForm>,
) -> Option<Vec<Vec<usize>>> {
    if let Some(image) = embed(h, g) {
        return Some(image.into_iter().map(|v| branches[v].clone()).collect());
    }
    let mut children: BTreeMap<CanonicalForm, (Graph, Vec<Vec<usize>>)> = BTreeMap::new();
    for (a, b) in g.edges() {
        let child = g.contract_set(&[a, b]).expect("edge endpoints in range");
        if !floor.admits(&child) {
            continue;
        }
        let form = canon(&child);
        if children.contains_key(&form) || visited.contains(&form) {
            continue;
        }
        let mut next = branches.clone();
        let merged = next.remove(b);
        next[a].extend(merged);
        children.insert(form, (child, next));
    }
    for (form, (child, next)) in children {
        if !visited.insert(form) {
            continue;
        }
        if let Some(found) = minor_dfs(h, &child, next, floor, visited) {
            return Some(found);
        }
    }
    None
}

/// The three containment relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    BipartiteMinor,
    Minor,
    Subgraph,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::BipartiteMinor => "bipartite_minor",
            Relation::Minor => "minor",
            Relation::Subgraph => "subgraph",
        }
    }

    /// Whether `h ≤ g` under this relation.
    pub fn holds(self, h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<bool> {
        Ok(match self {
            Relation::BipartiteMinor => is_bipartite_minor(h, g, opts)?.is_some(),
            Relation::Minor => is_minor(h, g, opts)?.is_some(),
            Relation::Subgraph => crate::structure::is_subgraph(h, g, opts)?,
        })
    }
}

/// Pairwise comparisons within a family: `matrix[i][j]` is `graphs[i] ≤ graphs[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparability {
    pub relation: Relation,
    pub matrix: Vec<Vec<bool>>,
}

impl Comparability {
    /// No off-diagonal entry holds.
    pub fn is_antichain(&self) -> bool {
        self.off_diagonal().all(|(_, _, x)| !x)
    }

    /// `graphs[i] ≤ graphs[j]` exactly when `i <= j`.
    pub fn is_increasing_chain(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == (i <= j)))
    }

    fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.matrix
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(move |(j, _)| *j != i).map(move |(j, &x)| (i, j, x)))
    }
}

pub fn compare_family(graphs: &[Graph], relation: Relation, opts: &SearchOptions) -> Result<Comparability> {
    for g in graphs {
        check_cap(g, opts)?;
    }
    let mut matrix = vec![vec![false; graphs.len()]; graphs.len()];
    for (i, a) in graphs.iter().enumerate() {
        for (j, b) in graphs.iter().enumerate() {
            matrix[i][j] = relation.holds(a, b, opts)?;
        }
    }
    Ok(Comparability { relation, matrix })
}

/// Every graph obtainable from `g` by one step, as a labelled graph, without
/// isomorphism dedup. Useful for random walks.
pub fn successors(g: &Graph, opts: &SearchOptions) -> Result<Vec<(Op, Graph)>> {
    check_cap(g, opts)?;
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        out.push((Op::DeleteVertex(v), g.delete_vertex(v)?));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in edges {
        out.push((Op::DeleteEdge(u, v), g.delete_edge(u, v)?));
    }
    for p in admissible_pairs_unchecked(g) {
        out.push((Op::Contract { u: p.u, v: p.v, w: p.w }, g.contract_set(&[p.u, p.v])?));
    }
    Ok(out)
}
