use std::io::Write;
use std::process::{Command, Output, Stdio};

use jumpgraph::preimage::build_dissipation_tree;
use jumpgraph::{from_graph6, is_isomorphic, to_graph6};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumpgraph")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn jump_prints_graph6_that_round_trips() {
    let o = run(&["jump", "--in", "g6:Dhc"]);
    assert_eq!(code(&o), 0);
    let j = from_graph6(stdout(&o).trim()).unwrap();
    assert!(is_isomorphic(&j, &jumpgraph::families::cycle(5)));
    assert_eq!(to_graph6(&j), stdout(&o).trim());
}

#[test]
fn jump_reads_files_and_stdin() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "n 6\n0 1\n1 2\n2 3\n3 0\n4 5").unwrap();
    let from_file = run(&["jump", "--in", f.path().to_str().unwrap(), "--out-format", "edges"]);
    assert_eq!(code(&from_file), 0);
    assert!(stdout(&from_file).starts_with("n 5"), "{}", stdout(&from_file));

    let mut child = Command::new(env!("CARGO_BIN_EXE_jumpgraph"))
        .args(["jump", "--in", "-", "--format", "graph6"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Ch\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(from_graph6(stdout(&o).trim()).unwrap().vertex_count(), 3);
}

#[test]
fn iterate_prints_trace_lines() {
    let o = run(&["iterate", "--in", "edges:0-1,1-2,2-3,3-0,4-5", "--steps", "7"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().map(|l| l.split('\t').map(String::from).collect()).collect();
    assert_eq!(rows.len(), 8);
    let edges: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(edges, ["5", "6", "5", "4", "2", "1", "0", "0"]);
    for (k, r) in rows.iter().enumerate() {
        assert_eq!(r[0], k.to_string());
        let g = from_graph6(&r[3]).unwrap();
        assert_eq!(g.vertex_count().to_string(), r[1]);
    }
}

#[test]
fn classify_verdicts_and_exit_codes() {
    let o = run(&["classify", "--in", "edges:0-1,1-2,2-3,3-4,4-5", "--witness"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("DIVERGES k=1 target=C5\n"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("witness ")));

    let o = run(&["classify", "--in", "edges:0-1,1-2,2-3,3-0,4-5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("DISSIPATES d=7"));

    let o = run(&["classify", "--in", "g6:Dhc"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("CONVERGES"));

    let o = run(&["classify", "--in", "edges:0-1,1-2,2-3,3-0,4-5", "--max-k", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("UNRESOLVED"));
}

#[test]
fn environment_overrides_limits() {
    let o = Command::new(env!("CARGO_BIN_EXE_jumpgraph"))
        .args(["classify", "--in", "edges:0-1,1-2,2-3,3-0,4-5"])
        .env("JUMPGRAPH_MAX_K", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    let o = Command::new(env!("CARGO_BIN_EXE_jumpgraph"))
        .args(["classify", "--in", "edges:0-1,1-2,2-3,3-0,4-5"])
        .env("JUMPGRAPH_MAX_K", "1")
        .args(["--max-k", "12"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn d_value_finite_and_infinite() {
    assert_eq!(stdout(&run(&["d-value", "--in", "edges:0-1,1-2,2-3"])).trim(), "3");
    assert_eq!(stdout(&run(&["d-value", "--in", "edges:0-1,0-2,0-3,0-4"])).trim(), "2");
    assert_eq!(stdout(&run(&["d-value", "--in", "g6:Dhc"])).trim(), "INFINITE");
}

#[test]
fn snipped_witness_or_not() {
    let o = run(&["snipped", "--h", "g6:Dhc", "--g", "edges:0-1,1-2,2-3,3-4,4-5,5-0"]);
    assert_eq!(code(&o), 0);
    assert_ne!(stdout(&o).trim(), "NOT-SNIPPED");
    let o = run(&["snipped", "--h", "g6:Dhc", "--g", "g6:Bw"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "NOT-SNIPPED");
}

#[test]
fn preimages_of_three_isolated_vertices() {
    let o = run(&["preimage", "--in", "edges:3:"]);
    assert_eq!(code(&o), 0);
    let got: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(got.len(), 2);
    let triangle = jumpgraph::families::complete(3);
    let claw = jumpgraph::families::star(3);
    let parsed: Vec<_> = got.iter().map(|s| from_graph6(s).unwrap()).collect();
    assert!(parsed.iter().any(|g| is_isomorphic(g, &triangle)));
    assert!(parsed.iter().any(|g| is_isomorphic(g, &claw)));
}

#[test]
fn tree_manifest_and_dot_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("tree.dot");
    let o = run(&["tree", "--max-edges", "6", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let tree = build_dissipation_tree(6).unwrap();
    assert_eq!(stdout(&o), tree.manifest());
    let text = std::fs::read_to_string(&dot).unwrap();
    let mut ids: Vec<&str> = text
        .split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|w| w.len() == 13 && w.starts_with('n') && w[1..].chars().all(|c| c.is_ascii_hexdigit()))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), tree.nodes.len());
}

#[test]
fn verify_machine_report() {
    let o = run(&["verify", "--n-max", "5", "--machine"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    for l in out.lines() {
        let f: Vec<&str> = l.split('\t').collect();
        assert_eq!(f.len(), 4);
        assert_eq!((f[2], f[3]), ("0", "PASS"), "{l}");
    }
    let o = run(&["verify", "--n-max", "4", "--checks", "v1,V9", "--machine"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn render_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("g.dot");
    let trace = dir.path().join("t.dot");
    assert_eq!(code(&run(&["render", "--in", "g6:Dhc", "--dot", single.to_str().unwrap()])), 0);
    assert_eq!(
        code(&run(&["render", "--in", "edges:0-1,1-2,2-3,3-0,4-5", "--dot", trace.to_str().unwrap(), "--steps", "3"])),
        0
    );
    assert!(std::fs::read_to_string(&single).unwrap().contains("--"));
    let t = std::fs::read_to_string(&trace).unwrap();
    assert_eq!(t.matches("subgraph cluster").count(), 4);
}

#[test]
fn usage_errors_exit_two_with_hint() {
    for args in [
        vec!["jump", "--in", "g6:!!"],
        vec!["jump", "--in", "/nonexistent/graph.g6"],
        vec!["jump", "--in", "edges:0-0"],
        vec!["tree", "--max-edges", "9"],
        vec!["verify", "--checks", "V11"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!String::from_utf8_lossy(&o.stderr).is_empty(), "{args:?}");
    }
    let o = run(&["jump", "--in", "g6:!!"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("hint:"));
}
