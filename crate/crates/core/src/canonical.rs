//! Canonical forms and isomorphism testing for small graphs.
//!
//! A canonical form is the adjacency upper triangle of the graph under a
//! canonical vertex order, read column by column: column `k` holds the bits
//! `adj(p_0, p_k), ..., adj(p_{k-1}, p_k)` where `p_i` is the vertex placed at
//! position `i`. The canonical order is found by branch and bound:
//!
//! * components are canonised separately and concatenated, largest first;
//! * inside a component, positions are filled by colour class, where colours
//!   come from degree refinement (degree, then multiset of neighbour colours,
//!   iterated to a fixed point);
//! * within a colour class, the column sequence is maximised lexicographically;
//!   a candidate is only expanded if its column is the best possible at that
//!   depth, and twins (vertices with equal neighbourhoods apart from each
//!   other) are expanded once.
//!
//! Both inputs and outputs are deterministic functions of the isomorphism
//! class, so equal forms mean isomorphic graphs and vice versa.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{BitIter, MASK_LIMIT};
use crate::structure::components;
use crate::{Error, Graph, Result};

/// Default vertex cap for canonical forms.
pub const DEFAULT_CANON_CAP: usize = 16;

/// Isomorphism-invariant fingerprint of a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    vertex_count: usize,
    columns: Vec<u64>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.columns.iter().map(|c| c.count_ones() as usize).sum()
    }

    /// Column `k` of the canonical upper triangle; bit `k - 1 - i` is the
    /// adjacency between positions `i` and `k`.
    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for (k, &col) in self.columns.iter().enumerate() {
            for b in BitIter(col) {
                pairs.push((k - 1 - b, k));
            }
        }
        Graph::from_pairs_merging(self.vertex_count, pairs)
    }

    /// Upper-triangle bits in column order, as used by graph6.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.columns.iter().enumerate().flat_map(|(k, &col)| (0..k).map(move |i| col >> (k - 1 - i) & 1 == 1))
    }
}

/// Canonical form with the default cap of [`DEFAULT_CANON_CAP`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    check(g, cap)?;
    Ok(canonical_labeling_unchecked(g).0)
}

/// Canonical form together with the canonical order: `order[i]` is the vertex
/// of `g` placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check(g, DEFAULT_CANON_CAP)?;
    Ok(canonical_labeling_unchecked(g))
}

fn check(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MASK_LIMIT);
    if g.vertex_count() > cap {
        return Err(Error::SizeCapExceeded { vertex_count: g.vertex_count(), cap });
    }
    Ok(())
}

/// Whether an edge-preserving bijection exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(isomorphism(g, h)?.is_some())
}

/// A bijection `f` with `uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h)`, if any.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    check(g, DEFAULT_CANON_CAP)?;
    check(h, DEFAULT_CANON_CAP)?;
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let (fg, og) = canonical_labeling_unchecked(g);
    let (fh, oh) = canonical_labeling_unchecked(h);
    if fg != fh {
        return Ok(None);
    }
    let mut map = vec![0; g.vertex_count()];
    for (pos, &v) in og.iter().enumerate() {
        map[v] = oh[pos];
    }
    Ok(Some(map))
}

pub(crate) fn canonical_labeling_unchecked(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let mut parts: Vec<(usize, Vec<u64>, Vec<usize>)> = components(g)
        .into_iter()
        .map(|comp| {
            let sub = g.induced_subgraph(&comp).expect("component vertices are in range");
            let (cols, local) = canonise_connected(&sub);
            let order = local.into_iter().map(|i| comp[i]).collect();
            (comp.len(), cols, order)
        })
        .collect();
    parts.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
    let order: Vec<usize> = parts.into_iter().flat_map(|p| p.2).collect();
    let columns = columns_for(g, &order);
    (CanonicalForm { vertex_count: g.vertex_count(), columns }, order)
}

fn columns_for(g: &Graph, order: &[usize]) -> Vec<u64> {
    (0..order.len())
        .map(|k| {
            (0..k).fold(0u64, |acc, i| acc | (u64::from(g.has_edge(order[i], order[k])) << (k - 1 - i)))
        })
        .collect()
}

/// Colour refinement starting from degrees; colours are ranks of the
/// refinement keys, so they are invariant under relabelling.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut distinct: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
            distinct.sort();
            distinct.dedup();
            distinct.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
        };
        let next: Vec<usize> = keys.iter().map(|k| ranks[k]).collect();
        if ranks.len() == classes {
            return colour;
        }
        classes = ranks.len();
        colour = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    slot_colour: Vec<usize>,
    twin_class: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

fn canonise_connected(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let colour = refine_colours(g);
    // higher colours first: higher degrees lead
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable_by(|a, b| b.cmp(a));
    let twin_class: Vec<usize> = (0..n)
        .map(|v| {
            let nv = g.neighbor_mask(v);
            (0..v)
                .find(|&u| {
                    let nu = g.neighbor_mask(u);
                    nu & !(1 << v) == nv & !(1 << u)
                })
                .unwrap_or(v)
        })
        .collect();
    let mut s = Search { g, colour, slot_colour, twin_class, best: None };
    let mut order = Vec::with_capacity(n);
    let mut cols = Vec::with_capacity(n);
    s.dfs(&mut order, 0, &mut cols);
    let (cols, order) = s.best.expect("a connected non-empty graph has at least one ordering");
    (cols, order)
}

impl Search<'_> {
    fn dfs(&mut self, order: &mut Vec<usize>, placed: u64, cols: &mut Vec<u64>) {
        let n = self.g.vertex_count();
        let depth = order.len();
        if depth == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => cols.as_slice() > b.as_slice(),
            };
            if better {
                self.best = Some((cols.clone(), order.clone()));
            }
            return;
        }
        let want = self.slot_colour[depth];
        let mut cands: Vec<(usize, u64)> = Vec::new();
        let mut seen_twins: u64 = 0;
        for v in 0..n {
            if placed & (1 << v) != 0 || self.colour[v] != want {
                continue;
            }
            let t = self.twin_class[v];
            if seen_twins & (1 << t) != 0 {
                continue;
            }
            seen_twins |= 1 << t;
            let nv = self.g.neighbor_mask(v);
            let col = order
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &u)| acc | (((nv >> u) & 1) << (depth - 1 - i)));
            cands.push((v, col));
        }
        let Some(top) = cands.iter().map(|c| c.1).max() else {
            return;
        };
        if let Some((best, _)) = &self.best {
            let ord = cols.as_slice().cmp(&best[..depth]).then(top.cmp(&best[depth]));
            if ord == Ordering::Less {
                return;
            }
        }
        for (v, col) in cands {
            if col != top {
                continue;
            }
            order.push(v);
            cols.push(col);
            self.dfs(order, placed | (1 << v), cols);
            cols.pop();
            order.pop();
        }
    }
}
