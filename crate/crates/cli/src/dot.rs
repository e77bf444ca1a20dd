use std::fmt::Write;

use bipminor_core::Graph;

/// Vertices and edges to draw emphasised.
#[derive(Debug, Clone, Default)]
pub struct Highlight {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Highlight {
    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }
}

/// Undirected DOT text: one node line per vertex, then one edge line per
/// edge, both in increasing order.
pub fn emit_dot(g: &Graph, highlight: Option<&Highlight>) -> String {
    let empty = Highlight::default();
    let hl = highlight.unwrap_or(&empty);
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        if hl.vertices.contains(&v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=orange];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if hl.has_edge(u, v) {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=3];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipminor_core::families::{bull, cycle};

    fn node_lines(s: &str) -> usize {
        s.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count()
    }

    fn edge_lines(s: &str) -> usize {
        s.lines().filter(|l| l.contains("--")).count()
    }

    #[test]
    fn line_counts() {
        let s = emit_dot(&cycle(4).unwrap(), None);
        assert_eq!(node_lines(&s), 4);
        assert_eq!(edge_lines(&s), 4);
        assert!(s.starts_with("graph G {"));
        assert_eq!(edge_lines(&emit_dot(&bull(3, &[1, 1]).unwrap(), None)), 5);
    }

    #[test]
    fn highlighting_marks_both_endpoints() {
        let hl = Highlight { vertices: vec![0, 2], edges: vec![(1, 0)] };
        let s = emit_dot(&cycle(6).unwrap(), Some(&hl));
        assert!(s.contains("  0 [style=filled"));
        assert!(s.contains("  2 [style=filled"));
        assert!(!s.contains("  1 [style"));
        assert!(s.contains("  0 -- 1 [penwidth=3];"));
        assert_eq!(s.matches("penwidth").count(), 1);
    }
}
