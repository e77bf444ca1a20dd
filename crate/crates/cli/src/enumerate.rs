//! Small exhaustive and random graph sources used by the harness.

use std::collections::BTreeMap;

use bipminor_core::canonical::canonical_form;
use bipminor_core::structure::is_connected;
use bipminor_core::{CanonicalForm, Graph};
use rand::Rng;

/// One representative per isomorphism class of trees on `n` vertices, in
/// canonical-form order.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut classes = BTreeMap::new();
    match n {
        0 => {}
        1 | 2 => {
            let g = Graph::new(n, if n == 2 { &[(0, 1)] } else { &[] }).expect("valid tree");
            classes.insert(canonical_form(&g).expect("small graph"), g);
        }
        _ => {
            let mut seq = vec![0usize; n - 2];
            loop {
                let g = prufer_tree(n, &seq);
                classes.entry(canonical_form(&g).expect("small graph")).or_insert(g);
                if !bump(&mut seq, n) {
                    break;
                }
            }
        }
    }
    classes.into_values().collect()
}

// odometer increment over 0..base; false once it wraps
fn bump(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a tree")
}

/// One representative per isomorphism class of connected bipartite graphs on
/// `n` vertices.
pub fn connected_bipartite(n: usize) -> Vec<Graph> {
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    if n == 1 {
        let g = Graph::empty(1);
        classes.insert(canonical_form(&g).expect("small graph"), g);
    }
    for a in 1..=n / 2 {
        let b = n - a;
        let slots: Vec<(usize, usize)> = (0..a).flat_map(|i| (a..n).map(move |j| (i, j))).collect();
        for mask in 0u64..1 << (a * b) {
            let edges: Vec<(usize, usize)> =
                slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            if edges.len() + 1 < n {
                continue;
            }
            let g = Graph::new(n, &edges).expect("valid bipartite graph");
            if is_connected(&g) {
                classes.entry(canonical_form(&g).expect("small graph")).or_insert(g);
            }
        }
    }
    classes.into_values().collect()
}

/// A connected graph on `n` vertices: a random recursive spanning tree plus
/// each remaining pair independently with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for j in 0..n {
        for i in 0..j {
            if !edges.contains(&(i, j)) && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("distinct pairs")
}

/// A graph on `n` vertices with each pair present with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges).expect("distinct pairs")
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23]);
        for t in trees(6) {
            assert!(is_connected(&t) && t.edge_count() == 5);
        }
    }

    #[test]
    fn connected_bipartite_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_bipartite(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 3, 5, 17, 44]);
        for g in connected_bipartite(6) {
            assert!(g.is_bipartite().is_some() && is_connected(&g));
        }
    }

    #[test]
    fn random_connected_is_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1..12 {
            assert!(is_connected(&random_connected(&mut rng, n, 0.1)));
        }
        let p = random_permutation(&mut rng, 9);
        let mut sorted = p.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..9).collect::<Vec<_>>());
    }
}
