use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use jumpgraph::catalog::{generate, isolated_free_by_edges};
use jumpgraph::classify::validate_accumulation;
use jumpgraph::dot::tree_to_dot;
use jumpgraph::families::*;
use jumpgraph::preimage::{build_dissipation_tree, normalize};
use jumpgraph::verify::{run_checks, CheckId};
use jumpgraph::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let t = Instant::now();
        let v = f();
        best = best.min(t.elapsed());
        out = Some(v);
    }
    (out.unwrap(), best)
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn worked_examples() -> Outcome {
    let limit = Duration::from_millis(1);
    let cases: [(&str, Graph, usize, Graph); 3] = [
        ("J(C4+K2)", c4_plus_k2(), 1, bowtie()),
        ("J(K23)", complete_bipartite(2, 3), 1, cycle(6)),
        ("J^2(C4+K2)", c4_plus_k2(), 2, h_shape()),
    ];
    let mut notes = Vec::new();
    for (name, g, steps, want) in cases {
        let (got, t) = best_of(20, || {
            let mut cur = g.clone();
            for _ in 0..steps {
                cur = cur.jump().unwrap();
            }
            cur
        });
        ensure(is_isomorphic(&got, &want), format!("{name} = {} is not the expected graph", to_graph6(&got)))?;
        ensure(t < limit, format!("{name} took {t:?}"))?;
        notes.push(format!("{name} {t:?}"));
    }
    Ok(notes.join(", "))
}

fn dissipation_numbers() -> Outcome {
    let limit = Duration::from_millis(10);
    let mut cases = vec![("C4+K2".to_string(), c4_plus_k2(), 7)];
    cases.extend((1..=10).map(|n| (format!("S{n}"), star(n), 2)));
    let mut slowest = Duration::ZERO;
    for (name, g, want) in cases {
        let (got, t) = best_of(10, || dissipation_number(&g, 12).unwrap());
        ensure(got == Dissipation::Finite(want), format!("d({name}) = {got:?}, expected {want}"))?;
        ensure(t < limit, format!("d({name}) took {t:?}"))?;
        slowest = slowest.max(t);
    }
    Ok(format!("d(C4+K2)=7, d(S1..S10)=2, slowest {slowest:?}"))
}

fn fixed_point_census() -> Outcome {
    let catalog = generate(7).map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    let (mut fixed, mut truncated) = (Vec::new(), 0);
    for e in catalog.entries() {
        let s = e.graph.strip_isolated();
        if s.is_empty() || !seen.insert(canonical_form(&s)) {
            continue;
        }
        let p = find_periodic(&s, 3);
        match p.period {
            Some(1) => fixed.push(s),
            Some(k) => return Err(format!("{} returns after {k} jumps", to_graph6(&s))),
            None if p.truncated => truncated += 1,
            None => {}
        }
    }
    ensure(fixed.len() == 2, format!("{} fixed points", fixed.len()))?;
    for t in Target::BOTH {
        ensure(fixed.iter().any(|g| is_isomorphic(g, &t.graph())), format!("{} not fixed", t.name()))?;
    }
    Ok(format!("{} graphs, fixed points C5 and N only, {truncated} cut off by the vertex limit", seen.len()))
}

fn trichotomy() -> Outcome {
    let catalog = generate(6).map_err(|e| e.to_string())?;
    let (mut d, mut c, mut v) = (0, 0, 0);
    for e in catalog.entries() {
        let g = &e.graph;
        let cls = classify(g, 12).map_err(|err| format!("{}: {err}", to_graph6(g)))?;
        let member = catalog_membership(g).map(|m| m.d);
        match &cls.verdict {
            Verdict::Dissipates { d: k } => {
                ensure(member == Some(*k), format!("{}: d={k} but membership {member:?}", to_graph6(g)))?;
                d += 1;
            }
            Verdict::Converges { .. } => {
                ensure(member.is_none(), format!("{} converges but is listed", to_graph6(g)))?;
                c += 1;
            }
            Verdict::Diverges(acc) => {
                ensure(member.is_none(), format!("{} diverges but is listed", to_graph6(g)))?;
                ensure(validate_accumulation(g, acc), format!("{} has a bad witness", to_graph6(g)))?;
                v += 1;
            }
        }
    }
    Ok(format!("{} graphs: {d} dissipate, {c} converge, {v} diverge, 0 unresolved", catalog.len()))
}

fn report_line(n_max: usize, ids: &[CheckId]) -> Outcome {
    let catalog = generate(n_max).map_err(|e| e.to_string())?;
    let t = Instant::now();
    let report = run_checks(&catalog, 12, ids).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let summary: Vec<String> =
        report.checks.iter().map(|c| format!("{} {}/{}", c.id, c.tested - c.failures.len(), c.tested)).collect();
    if !report.passed() {
        return Err(report.to_text(false));
    }
    Ok(format!("{} in {elapsed:.1?}", summary.join(", ")))
}

fn diameter_suite() -> Outcome {
    report_line(7, &[CheckId::V7])
}

fn growth() -> Outcome {
    let cases: [(&str, Graph, i64); 3] = [
        ("C5+chord", c5_chord(), 2),
        ("N+pendant at corner", with_pendants(&net(), 0, 1), 1),
        ("N+pendant at tip", with_pendants(&net(), 3, 1), 1),
    ];
    let mut notes = Vec::new();
    for (name, g, min_delta) in cases {
        let r = growth_check(&g, 12);
        let edges: Vec<usize> = r.steps.iter().map(|s| s.edges).collect();
        // deltas from the first iterate onward
        for s in r.steps.iter().skip(2) {
            let delta = s.delta.unwrap();
            ensure(delta >= min_delta, format!("{name}: delta {delta} at k={} in {edges:?}", s.k))?;
        }
        ensure(r.steps.len() >= 5, format!("{name}: only {} steps", r.steps.len()))?;
        notes.push(format!("{name} {edges:?}"));
    }
    Ok(notes.join("; "))
}

fn property_suites() -> Outcome {
    let t = Instant::now();
    let line = report_line(6, &[CheckId::V1, CheckId::V2, CheckId::V3, CheckId::V9, CheckId::V10])?;
    ensure(t.elapsed() < Duration::from_secs(120), format!("took {:?}", t.elapsed()))?;
    Ok(line)
}

fn tree_reproduction() -> Outcome {
    let tree = build_dissipation_tree(6).map_err(|e| e.to_string())?;
    for node in &tree.nodes {
        let g6 = to_graph6(&node.graph);
        let d = dissipation_number(&node.graph, 12).map_err(|e| e.to_string())?;
        ensure(d == Dissipation::Finite(node.level), format!("{g6}: level {} but {d:?}", node.level))?;
        match node.parent {
            None => ensure(node.graph.is_empty(), format!("{g6} has no parent"))?,
            Some(p) => {
                let img = canonical_form(&normalize(&node.graph.jump().unwrap()));
                ensure(img == tree.nodes[p].canonical, format!("{g6}: parent is not its jump"))?;
            }
        }
    }
    let mut expected: BTreeSet<CanonicalForm> = BTreeSet::new();
    expected.insert(canonical_form(&Graph::empty()));
    expected.insert(canonical_form(&Graph::new(1).unwrap()));
    for g in isolated_free_by_edges(6).map_err(|e| e.to_string())?.iter().flatten() {
        if classify(g, 12).map_err(|e| e.to_string())?.d_value().is_some() {
            expected.insert(canonical_form(g));
        }
    }
    let got: BTreeSet<CanonicalForm> = tree.nodes.iter().map(|n| n.canonical.clone()).collect();
    ensure(got.len() == tree.nodes.len(), "duplicate tree nodes")?;
    ensure(got == expected, format!("tree has {} nodes, classification finds {}", got.len(), expected.len()))?;
    let dot = tree_to_dot(&tree);
    let arrows = dot.lines().filter(|l| l.contains("->")).count();
    ensure(arrows + 1 == tree.nodes.len(), format!("DOT has {arrows} arrows"))?;
    Ok(format!("{} nodes, height {}, all re-verified", tree.nodes.len(), tree.height()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples),
        ("dissipation numbers", dissipation_numbers),
        ("fixed-point census n<=7", fixed_point_census),
        ("trichotomy n<=6", trichotomy),
        ("diameter suite n<=7", diameter_suite),
        ("growth", growth),
        ("property suites n<=6", property_suites),
        ("tree reproduction E=6", tree_reproduction),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
