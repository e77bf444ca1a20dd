//! Generators for cycles, paths, bulls, dogs and H-trees.
//!
//! Labelling is fixed so that generated graphs can be compared as labelled
//! graphs:
//!
//! * `cycle(k)`: vertex `i` adjacent to `(i + 1) mod k`.
//! * `path(k)`: vertex `i` adjacent to `i + 1`.
//! * `bull(l, horns)`: snout `0..l` as a cycle; horn `i` is a path of
//!   `horns[i]` new vertices whose first vertex is joined to snout vertex `i`.
//! * `dog(l, ears)`: snout `0..l` as a cycle; ear `i` shares the snout edge
//!   `(2i, 2i + 1)` and contributes `ears[i] - 2` new vertices forming the path
//!   `2i, x_1, ..., x_{e-2}, 2i + 1`.
//! * `h_tree(l)`: connector path `0..l`; vertices `0` and `l - 1` each get two
//!   pendant arms.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Which kind of graph a [`FamilySpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cycle,
    Path,
    Bull,
    Dog,
    HTree,
}

/// How long the two arms at each end of an H-tree are.
///
/// `ThreeVertex` reads the side paths as 3-vertex paths joined at their middle
/// vertex, giving two leaves at each end. `FourVertex` reads them as 4-vertex
/// paths joined at an internal vertex, giving one leaf and one 2-vertex pendant
/// path at each end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HTreeArms {
    #[default]
    ThreeVertex,
    FourVertex,
}

/// Parameters of a family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Cycle or path length, snout length, or H-tree connector length.
    pub length: usize,
    /// Horn lengths (bulls) or ear lengths (dogs); empty otherwise.
    pub appendages: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, length: usize, appendages: &[usize]) -> Self {
        FamilySpec { kind, length, appendages: appendages.to_vec() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidFamily(msg));
        let l = self.length;
        let a = &self.appendages;
        match self.kind {
            FamilyKind::Cycle | FamilyKind::Path | FamilyKind::HTree if !a.is_empty() => {
                bad(format!("{:?} takes no appendages", self.kind))
            }
            FamilyKind::Cycle if l < 3 => bad(format!("cycle length {l} < 3")),
            FamilyKind::Path if l < 1 => bad(format!("path length {l} < 1")),
            FamilyKind::HTree if l < 2 => bad(format!("connector length {l} < 2")),
            FamilyKind::Bull if l < 3 => bad(format!("snout length {l} < 3")),
            FamilyKind::Bull if a.is_empty() || a.len() > l => {
                bad(format!("a bull with snout {l} needs 1..={l} horns, got {}", a.len()))
            }
            FamilyKind::Bull if a.contains(&0) => bad(format!("horn lengths must be at least 1, got {a:?}")),
            FamilyKind::Dog if l < 3 => bad(format!("snout length {l} < 3")),
            FamilyKind::Dog if a.is_empty() || a.len() > l / 2 => {
                bad(format!("a dog with snout {l} needs 1..={} ears, got {}", l / 2, a.len()))
            }
            FamilyKind::Dog if a.iter().any(|&e| e < 3) => bad(format!("ear lengths must be at least 3, got {a:?}")),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match self.kind {
            FamilyKind::Cycle => build_cycle(self.length),
            FamilyKind::Path => build_path(self.length),
            FamilyKind::Bull => build_bull(self.length, &self.appendages),
            FamilyKind::Dog => build_dog(self.length, &self.appendages),
            FamilyKind::HTree => build_h_tree(self.length, HTreeArms::ThreeVertex),
        })
    }
}

/// `C_k`.
pub fn cycle(k: usize) -> Result<Graph> {
    FamilySpec::new(FamilyKind::Cycle, k, &[]).build()
}

/// `P_k`, the path on `k` vertices.
pub fn path(k: usize) -> Result<Graph> {
    FamilySpec::new(FamilyKind::Path, k, &[]).build()
}

/// `B(l, horns...)`.
pub fn bull(l: usize, horns: &[usize]) -> Result<Graph> {
    FamilySpec::new(FamilyKind::Bull, l, horns).build()
}

/// `D(l, ears...)`.
pub fn dog(l: usize, ears: &[usize]) -> Result<Graph> {
    FamilySpec::new(FamilyKind::Dog, l, ears).build()
}

/// H-tree with an `l`-vertex connector and 3-vertex side paths.
pub fn h_tree(l: usize) -> Result<Graph> {
    h_tree_with(l, HTreeArms::ThreeVertex)
}

pub fn h_tree_with(l: usize, arms: HTreeArms) -> Result<Graph> {
    FamilySpec::new(FamilyKind::HTree, l, &[]).validate()?;
    Ok(build_h_tree(l, arms))
}

fn build_cycle(k: usize) -> Graph {
    Graph::from_pairs_merging(k, (0..k).map(|i| (i, (i + 1) % k)))
}

fn build_path(k: usize) -> Graph {
    Graph::from_pairs_merging(k, (1..k).map(|i| (i - 1, i)))
}

fn build_bull(l: usize, horns: &[usize]) -> Graph {
    let n = l + horns.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let mut next = l;
    for (i, &len) in horns.iter().enumerate() {
        let mut prev = i;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_pairs_merging(n, edges)
}

fn build_dog(l: usize, ears: &[usize]) -> Graph {
    let n = l + ears.iter().map(|e| e - 2).sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let mut next = l;
    for (i, &len) in ears.iter().enumerate() {
        let (a, b) = (2 * i, 2 * i + 1);
        let mut prev = a;
        for _ in 0..len - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
    }
    Graph::from_pairs_merging(n, edges)
}

fn build_h_tree(l: usize, arms: HTreeArms) -> Graph {
    let extra = match arms {
        HTreeArms::ThreeVertex => 4,
        HTreeArms::FourVertex => 6,
    };
    let mut edges: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
    let mut next = l;
    for end in [0, l - 1] {
        edges.push((end, next));
        edges.push((end, next + 1));
        match arms {
            HTreeArms::ThreeVertex => next += 2,
            HTreeArms::FourVertex => {
                edges.push((next + 1, next + 2));
                next += 3;
            }
        }
    }
    Graph::from_pairs_merging(l + extra, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::structure::{blocks, component_count, is_k_connected, ConnectivityMode};

    #[test]
    fn small_members() {
        let c3 = cycle(3).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let c8 = cycle(8).unwrap();
        assert_eq!((c8.vertex_count(), c8.edge_count()), (8, 8));
        assert!(c8.is_bipartite().is_some());
        assert_eq!(path(1).unwrap(), Graph::empty(1));
        assert_eq!(path(2).unwrap(), Graph::new(2, &[(0, 1)]).unwrap());
        let p4 = path(4).unwrap();
        assert_eq!((0..4).filter(|&v| p4.degree(v) == 2).count(), 2);
    }

    #[test]
    fn bulls() {
        let b = bull(3, &[1, 1]).unwrap();
        assert_eq!(b, Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap());
        assert_eq!(bull(4, &[1, 2, 3]).unwrap().vertex_count(), 10);
    }

    #[test]
    fn dogs() {
        let d = dog(10, &[4, 4]).unwrap();
        assert_eq!(d.vertex_count(), 14);
        assert_eq!(dog(6, &[3, 6, 5]).unwrap().vertex_count(), 14);
        let d44 = dog(4, &[4, 4]).unwrap();
        assert_eq!((d44.vertex_count(), d44.edge_count()), (8, 10));
        assert!(d44.is_bipartite().is_some());
        assert_eq!(dog(6, &[4]).unwrap().edges().count(), 9);
    }

    #[test]
    fn h_trees() {
        for l in 2..7 {
            let t = h_tree(l).unwrap();
            assert_eq!(t.vertex_count(), l + 4);
            assert_eq!(t.edge_count(), l + 3);
            assert_eq!(component_count(&t), 1);
            let t4 = h_tree_with(l, HTreeArms::FourVertex).unwrap();
            assert_eq!((t4.vertex_count(), t4.edge_count()), (l + 6, l + 5));
            assert_eq!(component_count(&t4), 1);
        }
        assert_eq!(t_degrees(&h_tree(2).unwrap()), vec![3, 3, 1, 1, 1, 1]);
    }

    fn t_degrees(g: &Graph) -> Vec<usize> {
        g.degree_sequence()
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(bull(2, &[1]).is_err());
        assert!(bull(3, &[1, 1, 1, 1]).is_err());
        assert!(bull(3, &[0]).is_err());
        assert!(bull(3, &[]).is_err());
        assert!(dog(5, &[3, 3, 3]).is_err());
        assert!(dog(6, &[2]).is_err());
        assert!(dog(3, &[3]).is_ok());
        assert!(h_tree(1).is_err());
        assert!(FamilySpec::new(FamilyKind::Cycle, 4, &[1]).build().is_err());
    }

    #[test]
    fn counts_blocks_and_bipartiteness_over_parameter_ranges() {
        for l in 3..=8 {
            for k in 1..=l.min(3) {
                for horns in (0..3usize.pow(k as u32)).map(|code| {
                    (0..k).map(|i| 1 + (code / 3usize.pow(i as u32)) % 3).collect::<Vec<_>>()
                }) {
                    let b = bull(l, &horns).unwrap();
                    let total: usize = horns.iter().sum();
                    assert_eq!(b.vertex_count(), l + total);
                    assert_eq!(b.edge_count(), l + total);
                    let bd = blocks(&b);
                    assert_eq!(bd.blocks.iter().filter(|x| !x.is_trivial()).count(), 1);
                }
            }
        }
        for l in 3..=10 {
            for k in 1..=(l / 2).min(3) {
                for code in 0..4usize.pow(k as u32) {
                    let ears: Vec<usize> = (0..k).map(|i| 3 + (code / 4usize.pow(i as u32)) % 4).collect();
                    let d = dog(l, &ears).unwrap();
                    if d.vertex_count() > 14 {
                        continue;
                    }
                    assert_eq!(d.vertex_count(), l + ears.iter().map(|e| e - 2).sum::<usize>());
                    assert_eq!(d.edge_count(), l + ears.iter().map(|e| e - 1).sum::<usize>());
                    assert_eq!(blocks(&d).blocks.len(), 1);
                    assert!(is_k_connected(&d, 2, ConnectivityMode::PaperLiteral).unwrap());
                    let even = l % 2 == 0 && ears.iter().all(|e| e % 2 == 0);
                    assert_eq!(d.is_bipartite().is_some(), even, "D({l},{ears:?})");
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(dog(8, &[5, 3]).unwrap(), dog(8, &[5, 3]).unwrap());
        assert_eq!(bull(5, &[2, 1]).unwrap(), bull(5, &[2, 1]).unwrap());
    }
}
