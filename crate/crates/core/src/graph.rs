//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Every mutating operation returns a fresh graph whose vertices are
//! relabelled compactly: surviving vertices keep their relative order and the
//! indices close up over the gaps. A contracted set is represented by a new
//! vertex sitting at the position of the smallest contracted vertex.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest vertex count for which adjacency rows fit in a single `u64` mask.
pub const MASK_LIMIT: usize = 64;

/// A finite simple undirected graph with labelled vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph { n, words, rows: vec![0; n * words], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// endpoints outside `0..n`. The order of the list does not matter.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
                }
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from pairs that may repeat; loops and out-of-range
    /// endpoints are still bugs.
    pub(crate) fn from_pairs_merging(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            debug_assert!(u != v && u < n && v < n);
            if !g.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.m += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| BitIter(word).map(move |b| i * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Sorted degree sequence (non-increasing).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Neighbourhood of `v` as a bit mask. Only valid for graphs with at most
    /// [`MASK_LIMIT`] vertices.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(self.n <= MASK_LIMIT, "neighbor_mask needs at most {MASK_LIMIT} vertices");
        self.rows[v]
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.n })
        }
    }

    /// Applies a map from old to new vertex indices; `None` drops the vertex.
    /// Edges whose endpoints collide are discarded and parallel edges merge.
    fn remap(&self, new_n: usize, map: &[Option<usize>]) -> Graph {
        Graph::from_pairs_merging(
            new_n,
            self.edges().filter_map(|(u, v)| match (map[u], map[v]) {
                (Some(a), Some(b)) if a != b => Some((a, b)),
                _ => None,
            }),
        )
    }

    /// `G - v`: removes `v` and its incident edges; higher indices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|x| match x.cmp(&v) {
                core::cmp::Ordering::Less => Some(x),
                core::cmp::Ordering::Equal => None,
                core::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        Ok(self.remap(self.n - 1, &map))
    }

    /// Removes every vertex in `set`, relabelling compactly.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<Graph> {
        let mut gone = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut next = 0;
        let map: Vec<Option<usize>> = gone
            .iter()
            .map(|&g| {
                if g {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        Ok(self.remap(next, &map))
    }

    /// `G - uv`; the vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.rows[u * g.words + v / 64] &= !(1 << (v % 64));
        g.rows[v * g.words + u / 64] &= !(1 << (u % 64));
        g.m -= 1;
        Ok(g)
    }

    /// `G / U`: replaces the vertices of `set` by a single vertex adjacent to
    /// every outside neighbour of the set. The new vertex takes the position of
    /// `min(set)`; repeated members are ignored.
    pub fn contract_set(&self, set: &[usize]) -> Result<Graph> {
        let &first = set.iter().min().ok_or(Error::EmptyContraction)?;
        let mut inside = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let mut next = 0;
        let mut map = vec![None; self.n];
        for (x, slot) in map.iter_mut().enumerate() {
            if !inside[x] || x == first {
                *slot = Some(next);
                next += 1;
            }
        }
        let merged = map[first];
        for (x, slot) in map.iter_mut().enumerate() {
            if inside[x] {
                *slot = merged;
            }
        }
        Ok(self.remap(next, &map))
    }

    /// The subgraph induced by `vertices`, relabelled by their position in
    /// the sorted list.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep = vec![false; self.n];
        for &v in vertices {
            self.check_vertex(v)?;
            keep[v] = true;
        }
        let gone: Vec<usize> = (0..self.n).filter(|&v| !keep[v]).collect();
        self.delete_vertices(&gone)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::from_pairs_merging(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted up by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        Graph::from_pairs_merging(
            self.n + other.n,
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
    }

    /// Two-colours the graph, or returns `None` if it has an odd cycle. The
    /// lowest vertex of every component is placed in class 0.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<u8>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap_or(0);
                for y in self.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(1 - sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition { side: side.into_iter().map(|s| s.unwrap_or(0)).collect() })
    }

    /// `|E| - |V| + (number of components)`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.m + crate::structure::component_count(self) - self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// A proper two-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    /// Class (0 or 1) of vertex `v`.
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Whether no edge of `g` joins two vertices of the same class.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count() && g.edges().all(|(u, v)| self.side[u] != self.side[v])
    }
}

/// Iterates over the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
