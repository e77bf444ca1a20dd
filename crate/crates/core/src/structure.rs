//! Connectivity, blocks, induced and non-separating cycles, subgraph containment.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BitIter, MASK_LIMIT};
use crate::relations::SearchOptions;
use crate::{Error, Graph, Result};

/// Which reading of "k-connected" to use.
///
/// `PaperLiteral` only asks that deleting any set of at most `k - 1` vertices
/// leaves a connected graph, which makes `K_1` and `K_2` 2-connected.
/// `Standard` additionally requires at least `k + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ConnectivityMode {
    #[default]
    PaperLiteral,
    Standard,
}

impl ConnectivityMode {
    pub fn name(self) -> &'static str {
        match self {
            ConnectivityMode::PaperLiteral => "paper",
            ConnectivityMode::Standard => "standard",
        }
    }
}

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Number of connected components; 0 for the empty graph.
pub fn component_count(g: &Graph) -> usize {
    count_components_without(g, &vec![false; g.vertex_count()])
}

fn count_components_without(g: &Graph, removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut seen = removed.to_vec();
    let mut stack = Vec::new();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Component count of `g` minus the vertices in `removed`, on graphs with at
/// most 64 vertices.
pub(crate) fn component_count_masked(g: &Graph, removed: u64) -> usize {
    let n = g.vertex_count();
    let all = full_mask(n);
    let mut left = all & !removed;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        left &= !frontier;
        while frontier != 0 {
            let mut next = 0;
            for x in BitIter(frontier) {
                next |= g.neighbor_mask(x);
            }
            next &= left;
            left &= !next;
            frontier = next;
        }
    }
    count
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected in the literal sense: every pair of vertices is joined by a path.
/// The empty graph and `K_1` are connected.
pub fn is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

/// Whether `g - U` is connected for every vertex set `U` with `|U| <= k - 1`.
/// In [`ConnectivityMode::Standard`] the graph must also have at least `k + 1` vertices.
pub fn is_k_connected(g: &Graph, k: usize, mode: ConnectivityMode) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidConnectivity);
    }
    let n = g.vertex_count();
    if mode == ConnectivityMode::Standard && n < k + 1 {
        return Ok(false);
    }
    let mut removed = vec![false; n];
    Ok(all_small_deletions_connected(g, &mut removed, 0, k - 1))
}

fn all_small_deletions_connected(g: &Graph, removed: &mut [bool], from: usize, budget: usize) -> bool {
    if count_components_without(g, removed) > 1 {
        return false;
    }
    if budget == 0 {
        return true;
    }
    for v in from..g.vertex_count() {
        removed[v] = true;
        let ok = all_small_deletions_connected(g, removed, v + 1, budget - 1);
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// One biconnected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    /// Sorted edges `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    /// A block consisting of a single edge.
    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }

    /// The block as a graph on its own, relabelled by vertex order.
    pub fn to_graph(&self, host: &Graph) -> Graph {
        // blocks are induced subgraphs, so this cannot fail on the host they came from
        host.induced_subgraph(&self.vertices).expect("block vertices belong to host")
    }
}

/// Blocks and cut vertices of a graph. Isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected components via the edge-stack DFS of Hopcroft and Tarjan.
/// Blocks are ordered by their smallest vertex, then by vertex list.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<Block> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            if i < adj[v].len() {
                frame.2 += 1;
                let w = adj[v][i];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        edges.sort_unstable();
                        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        found.push(Block { vertices, edges });
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut membership = vec![0usize; n];
    for b in &found {
        for &v in &b.vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] > 1).collect();
    BlockDecomposition { blocks: found, cut_vertices }
}

/// A cycle given as a cyclic vertex sequence.
///
/// Sequences built by this crate are normalised: they start at their smallest
/// vertex and continue towards the smaller of its two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSeq(Vec<usize>);

impl CycleSeq {
    /// Checks that `vertices` is a cycle of `g` (length at least 3, distinct
    /// vertices, consecutive pairs adjacent) and normalises it.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::NotACycle);
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in vertices {
            if v >= g.vertex_count() || seen[v] {
                return Err(Error::NotACycle);
            }
            seen[v] = true;
        }
        if (0..len).any(|i| !g.has_edge(vertices[i], vertices[(i + 1) % len])) {
            return Err(Error::NotACycle);
        }
        Ok(Self::normalized(vertices))
    }

    fn normalized(vertices: &[usize]) -> Self {
        let len = vertices.len();
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let fwd = vertices[(start + 1) % len];
        let back = vertices[(start + len - 1) % len];
        let seq = if fwd <= back {
            (0..len).map(|i| vertices[(start + i) % len]).collect()
        } else {
            (0..len).map(|i| vertices[(start + len - i) % len]).collect()
        };
        CycleSeq(seq)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `u, w, v` appear consecutively, in either direction.
    pub fn has_consecutive(&self, u: usize, w: usize, v: usize) -> bool {
        let len = self.0.len();
        (0..len).any(|i| {
            let (a, b, c) = (self.0[i], self.0[(i + 1) % len], self.0[(i + 2) % len]);
            b == w && ((a == u && c == v) || (a == v && c == u))
        })
    }

    /// Consecutive triples `(a, b, c)` going round the cycle once.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let len = self.0.len();
        (0..len).map(move |i| (self.0[i], self.0[(i + 1) % len], self.0[(i + 2) % len]))
    }
}

/// No edge of `g` joins two non-consecutive vertices of `cycle`.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> Result<bool> {
    let c = CycleSeq::new(g, cycle)?;
    let vs = c.vertices();
    let len = vs.len();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if g.has_edge(vs[i], vs[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `g - set` has no more components than `g`. Out-of-range members are ignored.
pub fn is_nonseparating(g: &Graph, set: &[usize]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &v in set {
        if v < removed.len() {
            removed[v] = true;
        }
    }
    count_components_without(g, &removed) <= component_count(g)
}

pub(crate) fn check_cap(g: &Graph, opts: &SearchOptions) -> Result<()> {
    let cap = opts.size_cap.min(MASK_LIMIT);
    if g.vertex_count() > cap {
        Err(Error::SizeCapExceeded { vertex_count: g.vertex_count(), cap })
    } else {
        Ok(())
    }
}

/// Calls `emit` once for every induced cycle of `g`, passing it normalised
/// (smallest vertex first, then its smaller cycle neighbour). Needs at most 64 vertices.
pub(crate) fn for_each_induced_cycle(g: &Graph, mut emit: impl FnMut(&[usize])) {
    let n = g.vertex_count();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let allowed = full_mask(n) & !full_mask(s + 1);
        let ns = g.neighbor_mask(s);
        path.clear();
        path.push(s);
        for p1 in BitIter(ns & allowed) {
            path.push(p1);
            extend_induced(g, &mut path, ns, allowed & !(1 << p1), 0, &mut emit);
            path.pop();
        }
    }
}

// `blocked` holds the neighbours of the interior path vertices other than the
// last one; a new vertex adjacent to any of them would create a chord.
fn extend_induced(
    g: &Graph,
    path: &mut Vec<usize>,
    start_nbrs: u64,
    allowed: u64,
    blocked: u64,
    emit: &mut impl FnMut(&[usize]),
) {
    let last = path[path.len() - 1];
    let p1 = path[1];
    let cands = g.neighbor_mask(last) & allowed & !blocked;
    for x in BitIter(cands) {
        if start_nbrs & (1 << x) != 0 {
            if p1 < x {
                path.push(x);
                emit(path);
                path.pop();
            }
        } else {
            path.push(x);
            extend_induced(g, path, start_nbrs, allowed & !(1 << x), blocked | g.neighbor_mask(last), emit);
            path.pop();
        }
    }
}

/// Every induced non-separating cycle, normalised and sorted.
pub fn peripheral_cycles(g: &Graph, opts: &SearchOptions) -> Result<Vec<CycleSeq>> {
    check_cap(g, opts)?;
    Ok(peripheral_cycles_unchecked(g))
}

pub(crate) fn peripheral_cycles_unchecked(g: &Graph) -> Vec<CycleSeq> {
    let base = component_count_masked(g, 0);
    let mut out = Vec::new();
    for_each_induced_cycle(g, |c| {
        let mask = c.iter().fold(0u64, |m, &v| m | (1 << v));
        if component_count_masked(g, mask) <= base {
            out.push(CycleSeq(c.to_vec()));
        }
    });
    out.sort();
    out
}

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn is_subgraph(h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<bool> {
    Ok(subgraph_embedding(h, g, opts)?.is_some())
}

/// An injective map `f` from the vertices of `h` into those of `g` such that
/// every edge `xy` of `h` has `f(x)f(y)` in `g`, if one exists.
pub fn subgraph_embedding(h: &Graph, g: &Graph, opts: &SearchOptions) -> Result<Option<Vec<usize>>> {
    check_cap(g, opts)?;
    check_cap(h, opts)?;
    Ok(embed(h, g))
}

pub(crate) fn embed(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    let hn = h.vertex_count();
    if hn > g.vertex_count() || h.edge_count() > g.edge_count() {
        return None;
    }
    let dh = h.degree_sequence();
    let dg = g.degree_sequence();
    if dh.iter().zip(&dg).any(|(a, b)| a > b) {
        return None;
    }
    let order = embedding_order(h);
    let mut image = vec![usize::MAX; hn];
    if place(h, g, &order, 0, &mut image, 0) {
        Some(image)
    } else {
        None
    }
}

// Highest degree first, then repeatedly the vertex with the most already
// ordered neighbours.
fn embedding_order(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = h.neighbors(v).filter(|&u| placed[u]).count();
                (linked, h.degree(v), core::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn place(h: &Graph, g: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut cands = full_mask(g.vertex_count()) & !used;
    for y in h.neighbors(x) {
        if image[y] != usize::MAX {
            cands &= g.neighbor_mask(image[y]);
        }
    }
    let need = h.degree(x);
    for c in BitIter(cands) {
        if g.degree(c) < need {
            continue;
        }
        image[x] = c;
        if place(h, g, order, depth + 1, image, used | (1 << c)) {
            return true;
        }
    }
    image[x] = usize::MAX;
    false
}
