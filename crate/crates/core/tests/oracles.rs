//! Cross-checks against brute-force oracles that share no code with the
//! implementation under test.

use bipminor_core::canonical::{are_isomorphic, canonical_form, isomorphism};
use bipminor_core::families::{bull, cycle, dog};
use bipminor_core::structure::{
    blocks, component_count, is_induced_cycle, is_k_connected, is_nonseparating, is_subgraph, peripheral_cycles,
    ConnectivityMode,
};
use bipminor_core::{Graph, SearchOptions};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::new(n, &e).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(g.vertex_count()).into_iter().any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

/// All injective maps from `0..k` into `0..n`.
fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for m in &out {
            for x in 0..n {
                if !m.contains(&x) {
                    let mut m2 = m.clone();
                    m2.push(x);
                    next.push(m2);
                }
            }
        }
        out = next;
    }
    out
}

fn brute_subgraph(h: &Graph, g: &Graph) -> bool {
    injections(h.vertex_count(), g.vertex_count()).into_iter().any(|f| h.edges().all(|(u, v)| g.has_edge(f[u], f[v])))
}

/// Every simple cycle as a vertex sequence, each cycle once per rotation and direction.
fn all_cycle_sequences(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, path[0]) {
            out.push(path.clone());
        }
        for x in g.neighbors(last).collect::<Vec<_>>() {
            if !path.contains(&x) {
                path.push(x);
                grow(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        grow(g, &mut vec![s], &mut out);
    }
    out
}

fn normal(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        for dir in [1, n - 1] {
            let seq: Vec<usize> = (0..n).map(|i| c[(start + i * dir) % n]).collect();
            if best.as_ref().is_none_or(|b| &seq < b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap()
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(0..=7);
        let g = random_graph(&mut rng, n, 0.45);
        // half of the time compare against a relabelled copy with one edge flipped
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut h = g.permute(&perm);
        if rng.gen_bool(0.5) && n >= 2 {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                h = if h.has_edge(a, b) {
                    h.delete_edge(a, b).unwrap()
                } else {
                    let mut e: Vec<_> = h.edges().collect();
                    e.push((a, b));
                    Graph::new(n, &e).unwrap()
                };
            }
        }
        let expect = brute_isomorphic(&g, &h);
        assert_eq!(are_isomorphic(&g, &h).unwrap(), expect, "{g:?} vs {h:?}");
        assert_eq!(canonical_form(&g).unwrap() == canonical_form(&h).unwrap(), expect);
        if let Some(f) = isomorphism(&g, &h).unwrap() {
            assert!(g.edges().all(|(u, v)| h.has_edge(f[u], f[v])));
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // small vertex and edge counts make isomorphic triples common
    let pool: Vec<Graph> = (0..60).map(|_| random_graph(&mut rng, 5, 0.3)).collect();
    for a in &pool {
        assert!(are_isomorphic(a, a).unwrap());
    }
    for _ in 0..500 {
        let a = pool.choose(&mut rng).unwrap();
        let b = pool.choose(&mut rng).unwrap();
        let c = pool.choose(&mut rng).unwrap();
        let ab = are_isomorphic(a, b).unwrap();
        assert_eq!(ab, are_isomorphic(b, a).unwrap());
        if ab && are_isomorphic(b, c).unwrap() {
            assert!(are_isomorphic(a, c).unwrap());
        }
    }
}

#[test]
fn canonical_form_is_relabel_invariant_on_family_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs = [dog(10, &[4, 4]).unwrap(), dog(6, &[3, 6, 5]).unwrap(), bull(4, &[1, 2, 3]).unwrap(), cycle(16).unwrap()];
    for g in &graphs {
        let f = canonical_form(g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.permute(&perm)).unwrap(), f);
        }
    }
}

fn has_odd_cycle(g: &Graph) -> bool {
    all_cycle_sequences(g).iter().any(|c| c.len() % 2 == 1)
}

#[test]
fn bipartition_matches_odd_cycle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(0..=8);
        let g = random_graph(&mut rng, n, 0.3);
        match g.is_bipartite() {
            Some(b) => {
                assert!(!has_odd_cycle(&g));
                assert!(b.is_valid_for(&g));
            }
            None => assert!(has_odd_cycle(&g)),
        }
    }
}

#[test]
fn peripheral_cycles_match_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let opts = SearchOptions::default();
    for round in 0..250 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, if round % 2 == 0 { 0.35 } else { 0.6 });
        let expect: BTreeSet<Vec<usize>> = all_cycle_sequences(&g)
            .into_iter()
            .filter(|c| is_induced_cycle(&g, c).unwrap() && is_nonseparating(&g, c))
            .map(|c| normal(&c))
            .collect();
        let got: Vec<Vec<usize>> = peripheral_cycles(&g, &opts).unwrap().into_iter().map(|c| c.vertices().to_vec()).collect();
        let got_set: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
        assert_eq!(got.len(), got_set.len(), "duplicates in {got:?}");
        assert_eq!(got_set, expect, "{g:?}");
    }
}

#[test]
fn subgraph_matches_injective_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let opts = SearchOptions::default();
    for _ in 0..300 {
        let gn = rng.gen_range(0..=6);
        let hn = rng.gen_range(0..=gn.min(5));
        let g = random_graph(&mut rng, gn, 0.5);
        let h = random_graph(&mut rng, hn, 0.4);
        assert_eq!(is_subgraph(&h, &g, &opts).unwrap(), brute_subgraph(&h, &g), "{h:?} in {g:?}");
    }
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    component_count(&g.delete_vertex(v).unwrap()) > component_count(g) - usize::from(g.degree(v) == 0)
}

#[test]
fn block_decomposition_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let n = rng.gen_range(0..=9);
        let g = random_graph(&mut rng, n, 0.3);
        let bd = blocks(&g);
        let mut union: Vec<(usize, usize)> = bd.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        union.sort();
        assert_eq!(union, g.edges().collect::<Vec<_>>(), "blocks partition the edges");
        for (i, a) in bd.blocks.iter().enumerate() {
            for b in &bd.blocks[i + 1..] {
                assert!(a.vertices.iter().filter(|v| b.vertices.contains(v)).count() <= 1);
            }
            if !a.is_trivial() {
                let bg = a.to_graph(&g);
                assert!(is_k_connected(&bg, 2, ConnectivityMode::Standard).unwrap());
            }
        }
        let cuts: Vec<usize> = (0..n).filter(|&v| is_cut_vertex(&g, v)).collect();
        assert_eq!(bd.cut_vertices, cuts);
    }
}

#[test]
fn contraction_and_deletion_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let v = rng.gen_range(0..n);
        assert_eq!(g.delete_vertex(v).unwrap().vertex_count(), n - 1);
        if let Some((a, b)) = g.edges().next() {
            assert_eq!(g.delete_edge(a, b).unwrap().edge_count(), g.edge_count() - 1);
            let c = g.contract_set(&[a, b]).unwrap();
            assert!(c.vertex_count() + c.edge_count() < g.vertex_count() + g.edge_count());
        }
        let k = rng.gen_range(1..=n);
        let mut set: Vec<usize> = (0..n).collect();
        set.shuffle(&mut rng);
        set.truncate(k);
        let c = g.contract_set(&set).unwrap();
        assert_eq!(c.vertex_count(), n - k + 1);
        // the merged vertex sits at min(set) and sees exactly the outside neighbours
        let lo = *set.iter().min().unwrap();
        let outside: BTreeSet<usize> = set
            .iter()
            .flat_map(|&s| g.neighbors(s).collect::<Vec<_>>())
            .filter(|x| !set.contains(x))
            .collect();
        let relabel = |x: usize| x - set.iter().filter(|&&s| s < x).count() + usize::from(x > lo);
        let got: BTreeSet<usize> = c.neighbors(lo).collect();
        assert_eq!(got, outside.into_iter().map(relabel).collect());
    }
}

proptest! {
    #[test]
    fn canonical_form_invariant_under_permutation(
        n in 0usize..10,
        bits in proptest::collection::vec(any::<bool>(), 45),
        seed in any::<u64>(),
    ) {
        let mut e = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k] { e.push((i, j)); }
                k += 1;
            }
        }
        let g = Graph::new(n, &e).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&canonical_form(&g).unwrap().to_graph(), &g).unwrap());
    }

    #[test]
    fn build_accepts_any_simple_edge_set(n in 0usize..12, raw in proptest::collection::btree_set((0usize..12, 0usize..12), 0..30)) {
        let edges: BTreeSet<(usize, usize)> = raw.into_iter()
            .filter(|&(a, b)| a < n && b < n && a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let list: Vec<_> = edges.iter().copied().collect();
        let g = Graph::new(n, &list).unwrap();
        prop_assert_eq!(g.edge_count(), list.len());
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), list);
    }
}
