use jumpgraph::catalog::generate;
use jumpgraph::classify::{dissipating_nodes, Target};
use jumpgraph::families::*;
use jumpgraph::preimage::{forbidden_catalog, has_jump_preimage, is_line_graph};
use jumpgraph::snipped::named_graphs;
use jumpgraph::verify::diameter_two_dissipating;
use jumpgraph::*;

fn d(g: &Graph) -> Option<usize> {
    classify(g, 12).unwrap().d_value()
}

#[test]
fn four_cycle_plus_edge_jumps_to_bowtie_then_h() {
    let gamma = c4_plus_k2();
    let j1 = gamma.jump().unwrap();
    assert!(is_isomorphic(&j1, &bowtie()));
    let j2 = j1.jump().unwrap();
    assert!(is_isomorphic(&j2, &h_shape()));
    assert_eq!((j2.vertex_count(), j2.edge_count()), (6, 5));
}

#[test]
fn k23_jumps_to_six_cycle() {
    assert!(is_isomorphic(&complete_bipartite(2, 3).jump().unwrap(), &cycle(6)));
}

#[test]
fn dissipation_numbers() {
    assert_eq!(d(&c4_plus_k2()), Some(7));
    for n in 1..=10 {
        assert_eq!(d(&star(n)), Some(2), "S_{n}");
    }
    assert_eq!(d(&path(4)), Some(3));
    assert_eq!(d(&path(5)), Some(4));
    assert_eq!(d(&bowtie()), Some(6));
    assert_eq!(d(&Graph::empty()), Some(0));
    assert_eq!(d(&edgeless(3)), Some(1));
}

#[test]
fn c5_and_net_are_fixed() {
    for t in Target::BOTH {
        let g = t.graph();
        assert!(is_isomorphic(&g.jump().unwrap(), &g));
        assert_eq!(classify(&g, 12).unwrap().fixed_point(), Some(t));
    }
}

#[test]
fn certificate_graphs_accumulate_c5() {
    let k23 = complete_bipartite(2, 3);
    assert!(find_snipped(&cycle(5), &k23.jump().unwrap()).is_some());
    for x in named_graphs() {
        let j = x.graph.jump().unwrap();
        match x.tag {
            NamedTag::Bug | NamedTag::Pendulum => assert!(find_snipped(&k23, &j).is_some(), "{}", x.tag),
            NamedTag::Stickman => assert!(find_subgraph(&k23, &j, false).is_some()),
            _ => {}
        }
        let c = classify(&x.graph, 12).unwrap();
        let want = if x.tag == NamedTag::Net { Target::Net } else { Target::C5 };
        match c.verdict {
            Verdict::Converges { fixed_point } => assert_eq!(fixed_point, want),
            Verdict::Diverges(acc) => assert_eq!(acc.target, want, "{}", x.tag),
            other => panic!("{} gave {other:?}", x.tag),
        }
    }
}

#[test]
fn triangle_and_claw_share_a_jump_graph() {
    assert!(is_isomorphic(&complete(3).jump().unwrap(), &star(3).jump().unwrap()));
    assert_eq!(complete(3).jump().unwrap().edge_count(), 0);
}

#[test]
fn forbidden_graphs_of_jump_graphs() {
    let c = forbidden_catalog();
    assert_eq!(c.jump_forbidden.len(), 9);
    for (i, f) in c.jump_forbidden.iter().enumerate() {
        assert!(!has_jump_preimage(f), "complement {i}");
        for v in 0..f.vertex_count() {
            assert!(has_jump_preimage(&f.without_vertex(v)), "complement {i} minus {v}");
        }
        assert!(is_isomorphic(&f.complement(), &c.line_forbidden[i]));
    }
    assert!(matches!(is_line_graph(&c.line_forbidden[0]), preimage::LineGraphTest::Forbidden { index: 0, .. }));
}

#[test]
fn diameter_two_dissipating_list_is_exact() {
    let c = generate(7).unwrap();
    for e in c.entries() {
        let g = &e.graph;
        if g.has_isolated() || !g.is_connected() || g.diameter().ok() != Some(Diameter::Finite(2)) {
            continue;
        }
        assert_eq!(d(g).is_some(), diameter_two_dissipating(g), "{}", e.canonical);
    }
    assert!(diameter_two_dissipating(&with_pendants(&diamond(), 0, 1)));
    assert!(!diameter_two_dissipating(&with_pendants(&diamond(), 1, 1)));
}

#[test]
fn spider_is_the_dense_diameter_three_exception() {
    for k in 1..=12 {
        let s = spider(k);
        assert_eq!(s.diameter().unwrap(), Diameter::Finite(3));
        assert_eq!(d(&s), Some(3), "k = {k}");
    }
}

#[test]
fn catalog_nodes_land_on_their_parents() {
    for node in dissipating_nodes() {
        assert_eq!(d(&node.graph), Some(node.d), "{}", node.name);
    }
}
