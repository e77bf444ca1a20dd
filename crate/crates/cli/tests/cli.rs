use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use bipminor::{emit_graph6, parse_graph6, WitnessDocument};
use bipminor_core::canonical::are_isomorphic;
use bipminor_core::families::{bull, cycle, dog};
use bipminor_core::Graph;
use proptest::prelude::*;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipminor")).args(args).env_remove("BIPMINOR_SIZE_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let p = dir.join(name);
    fs::write(&p, emit_graph6(g).unwrap() + "\n").unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_prints_one_graph6_line() {
    let o = bin(&["gen", "dog", "10", "4", "4", "--format", "g6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert_eq!(parse_graph6(text.trim_end()).unwrap(), dog(10, &[4, 4]).unwrap());

    let o = bin(&["gen", "h-tree", "3", "--four-vertex-arms"]);
    assert_eq!(parse_graph6(stdout(&o).trim_end()).unwrap().vertex_count(), 9);
    let o = bin(&["gen", "cycle", "4", "--format", "dot"]);
    assert_eq!(stdout(&o).matches("--").count(), 4);
}

#[test]
fn check_writes_a_replayable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let h = write_graph(dir.path(), "h.g6", &bull(4, &[1]).unwrap());
    let g = write_graph(dir.path(), "g.g6", &cycle(6).unwrap());
    let w = dir.path().join("w.json");
    let o = bin(&["check", "bipminor", &h, &g, "--witness", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "holds\n");

    // independent replay: parse, apply each step, compare up to isomorphism
    let doc: WitnessDocument = serde_json::from_str(&fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(doc.labeling_convention, "compact-min-position");
    let mut cur = parse_graph6(&doc.source).unwrap();
    let bipminor::Steps::Trace(steps) = &doc.steps else { panic!("expected a trace") };
    for s in steps {
        cur = match *s {
            bipminor::StepRecord::DeleteVertex { v } => cur.delete_vertex(v).unwrap(),
            bipminor::StepRecord::DeleteEdge { u, v } => cur.delete_edge(u, v).unwrap(),
            bipminor::StepRecord::AdmissibleContract { u, v, w } => {
                assert!(cur.has_edge(u, w) && cur.has_edge(v, w));
                cur.contract_set(&[u, v]).unwrap()
            }
        };
    }
    assert!(are_isomorphic(&cur, &parse_graph6(&doc.target).unwrap()).unwrap());

    let o = bin(&["replay", w.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "valid\n"));

    // tampering is caught
    let bad = fs::read_to_string(&w).unwrap().replace("\"v\": 2", "\"v\": 3");
    fs::write(&w, bad).unwrap();
    assert_eq!(bin(&["replay", w.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let h = write_graph(dir.path(), "h.g6", &bull(4, &[1]).unwrap());
    let g = write_graph(dir.path(), "g.g6", &cycle(6).unwrap());
    assert_eq!(bin(&["check", "minor", &h, &g]).status.code(), Some(1));
    assert_eq!(bin(&["check", "subgraph", &g, &g]).status.code(), Some(0));
    assert_eq!(bin(&["check", "nonsense", &h, &g]).status.code(), Some(2));
    assert_eq!(bin(&["check", "minor", &h, "/nonexistent/g.g6"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["gen", "bull", "2", "1"]).status.code(), Some(2));

    let junk = dir.path().join("junk.g6");
    fs::write(&junk, "D?? trailing\n").unwrap();
    let o = bin(&["blocks", junk.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = Command::new(env!("CARGO_BIN_EXE_bipminor"))
        .args(["check", "bipminor", &h, &g])
        .env("BIPMINOR_SIZE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn antichain_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("dogs.g6");
    let lines: Vec<String> = [4, 6, 8].iter().map(|&l| emit_graph6(&dog(l, &[4, 4]).unwrap()).unwrap()).collect();
    fs::write(&file, lines.join("\n") + "\n").unwrap();
    let o = bin(&["antichain", file.to_str().unwrap(), "--relation", "bipminor"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 0 0\n0 1 0\n0 0 1\nantichain: yes\n");
    let o = bin(&["antichain", file.to_str().unwrap(), "--relation", "minor"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "g.g6", &dog(6, &[4]).unwrap());
    for args in [vec!["closure", &g], vec!["admissible", &g], vec!["blocks", &g], vec!["gen", "bull", "5", "2", "1"]] {
        let a = bin(&args);
        let b = bin(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let h = write_graph(dir.path(), "h.g6", &cycle(4).unwrap());
    let (w1, w2) = (dir.path().join("1.json"), dir.path().join("2.json"));
    bin(&["check", "bipminor", &h, &g, "--witness", w1.to_str().unwrap()]);
    bin(&["check", "bipminor", &h, &g, "--witness", w2.to_str().unwrap()]);
    assert_eq!(fs::read(w1).unwrap(), fs::read(w2).unwrap());
}

#[test]
fn closure_filters_by_connectivity_mode() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "g.g6", &cycle(8).unwrap());
    let standard = stdout(&bin(&["closure", &g, "--two-connected-only", "--mode", "standard"]));
    let paper = stdout(&bin(&["closure", &g, "--two-connected-only", "--mode", "paper"]));
    assert_eq!(standard.lines().count(), 3);
    // K0, K1 and K2 as well
    assert_eq!(paper.lines().count(), 6);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=20).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let s = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
    }
}
