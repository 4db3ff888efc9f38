//! Each worked position is checked twice: once through the chain of
//! detector results that explains it, once with the exhaustive solvers.

use shannon_core::detect::{
    dead_edges, mutual_pair_reduce, pairset_reduce, supports, threat_by_triangles, threatens,
    Fact, FactKind, Rule,
};
use shannon_core::figures::{self, Figure};
use shannon_core::hex::{annotate, to_graph, Mark};
use shannon_core::solver::{is_dead_edge_oracle, solve_graph};
use shannon_core::{dominates, is_captured, is_lost, MultiGame, MultiOutcome, Player, VertexSet};

fn one(f: &Figure, name: &str) -> VertexSet {
    f.set(&[name])
}

fn has(facts: &[Fact], kind: FactKind) -> bool {
    facts.iter().any(|x| x.kind == kind)
}

#[test]
fn capture_and_loss() {
    let f = figures::capture_and_loss();
    let g = &f.graph;
    let bc = f.set(&["b", "c"]);
    let all = f.set(&["a", "b", "c", "d"]);
    assert!(has(&mutual_pair_reduce(g), FactKind::Captured(bc)));
    assert!(is_captured(g, bc).unwrap());
    assert!(is_lost(g, all).unwrap());
    assert!(!is_captured(g, all).unwrap());
}

#[test]
fn mutually_dominating_pairs() {
    let f = figures::lost_pair();
    let ab = f.set(&["a", "b"]);
    assert!(has(&mutual_pair_reduce(&f.graph), FactKind::Lost(ab)));
    assert!(is_lost(&f.graph, ab).unwrap());

    let f = figures::captured_pair();
    let ab = f.set(&["a", "b"]);
    assert!(has(&mutual_pair_reduce(&f.graph), FactKind::Captured(ab)));
    assert!(is_captured(&f.graph, ab).unwrap());
}

#[test]
fn domination_is_a_property_of_the_whole_set() {
    let f = figures::domination();
    let g = &f.graph;
    let (a, b, c) = (f.v("a"), f.v("b"), f.v("c"));
    let ab = f.set(&["a", "b"]);
    let ac = f.set(&["a", "c"]);
    let abc = f.set(&["a", "b", "c"]);

    let surrounded = Fact::new(FactKind::DeadEdge(a.min(c), a.max(c)), Rule::SurroundedVertex);
    assert!(dead_edges(g).contains(&surrounded));
    assert!(is_dead_edge_oracle(g, a, c).unwrap());

    // cutting b leaves a with a clique neighbourhood
    assert!(threatens(g, one(&f, "b"), one(&f, "a")).unwrap());
    assert!(dominates(g, b, ab).unwrap().cut);

    // cutting a (or c) leaves a lost pair behind
    assert!(has(&mutual_pair_reduce(&g.cut(a).unwrap()), FactKind::Lost(f.set(&["b", "c"]))));
    assert!(has(&mutual_pair_reduce(&g.cut(c).unwrap()), FactKind::Lost(ab)));
    assert!(dominates(g, a, abc).unwrap().cut);
    assert!(dominates(g, c, abc).unwrap().cut);

    assert!(!threatens(g, one(&f, "a"), one(&f, "b")).unwrap());
    assert!(!dominates(g, a, ab).unwrap().cut);
    assert!(!dominates(g, a, ac).unwrap().cut);
}

#[test]
fn dead_edge_then_lost_pairs() {
    let f = figures::dead_edge_vw();
    let g = &f.graph;
    let (v, w) = (f.v("v"), f.v("w"));
    let found = dead_edges(g);
    assert!(found
        .iter()
        .any(|x| x.kind == FactKind::DeadEdge(v.min(w), v.max(w)) && x.rule == Rule::WalkSurround));
    assert!(is_dead_edge_oracle(g, v, w).unwrap());

    let h = g.minus_edge(v, w).unwrap();
    let pairs = mutual_pair_reduce(&h);
    for pair in [f.set(&["a", "v"]), f.set(&["v", "b"])] {
        assert!(has(&pairs, FactKind::Lost(pair)));
        assert!(is_lost(&h, pair).unwrap());
    }
    assert!(is_lost(&h, f.set(&["a", "v", "b"])).unwrap());
    for p in [Player::Short, Player::Cut] {
        assert_eq!(solve_graph(g, p).unwrap(), solve_graph(&h, p).unwrap());
    }
}

#[test]
fn pair_set_without_mutual_pairs() {
    let f = figures::pair_set();
    let g = &f.graph;
    let area = f.set(&["a", "b", "c", "d"]);
    assert!(threatens(g, one(&f, "a"), one(&f, "c")).unwrap());
    assert!(threatens(g, one(&f, "b"), one(&f, "d")).unwrap());
    assert!(threatens(g, f.set(&["c", "d"]), f.set(&["a", "b"])).unwrap());
    // no two area vertices threaten or support each other
    assert!(mutual_pair_reduce(g).iter().all(|x| match x.kind {
        FactKind::Lost(s) | FactKind::Captured(s) => !s.is_subset(area),
        _ => true,
    }));
    let pairs = [(f.v("a"), f.v("c")), (f.v("b"), f.v("d"))];
    let fact = pairset_reduce(g, &pairs, Player::Cut).unwrap();
    assert_eq!(fact.map(|x| x.kind), Some(FactKind::Lost(area)));
    assert!(is_lost(g, area).unwrap());
}

#[test]
fn pair_set_after_dead_edge() {
    let f = figures::pair_set_after_dead_edge();
    let g = &f.graph;
    let area = f.set(&["a", "b", "c", "d"]);
    let (c, d) = (f.v("c"), f.v("d"));
    assert!(threatens(g, one(&f, "a"), one(&f, "c")).unwrap());
    assert!(!threatens(g, one(&f, "b"), one(&f, "d")).unwrap());
    assert!(dead_edges(g).iter().any(|x| x.kind == FactKind::DeadEdge(c, d)));
    assert!(is_dead_edge_oracle(g, c, d).unwrap());

    let h = g.minus_edge(c, d).unwrap();
    assert!(threatens(&h, one(&f, "b"), one(&f, "d")).unwrap());
    let cd = f.set(&["c", "d"]);
    for x in ["a", "b"] {
        assert!(h.is_clique(h.neighbours(f.v(x)) - cd));
    }
    assert!(threatens(&h, cd, f.set(&["a", "b"])).unwrap());
    let pairs = [(f.v("a"), c), (f.v("b"), d)];
    let fact = pairset_reduce(&h, &pairs, Player::Cut).unwrap();
    assert_eq!(fact.map(|x| x.kind), Some(FactKind::Lost(area)));

    // Cut wins the local game moving second, in the original graph
    let m = MultiGame::new(g, area).unwrap();
    assert!(m.solve(Player::Short).is_cut_win());
    assert!(is_lost(g, area).unwrap());
}

#[test]
fn supporting_sets() {
    let f = figures::supporting_sets();
    let g = &f.graph;
    let area = f.set(&["e", "f", "g", "h"]);
    assert!(mutual_pair_reduce(g).iter().all(|x| match x.kind {
        FactKind::Lost(s) | FactKind::Captured(s) => !s.is_subset(area),
        _ => true,
    }));
    for x in ["f", "g", "h"] {
        assert!(supports(g, one(&f, "e"), one(&f, x)).unwrap());
    }
    let after_f = g.short(f.v("f")).unwrap();
    assert!(has(&mutual_pair_reduce(&after_f), FactKind::Captured(f.set(&["g", "h"]))));
    assert!(dominates(g, f.v("f"), f.set(&["f", "g", "h"])).unwrap().short);
    assert!(supports(g, f.set(&["f", "g", "h"]), one(&f, "e")).unwrap());

    let m = MultiGame::new(g, area).unwrap();
    assert_eq!(m.solve(Player::Cut), MultiOutcome::ShortWin);
    assert!(is_captured(g, area).unwrap());

    // the edge g r1 changes no outcome, yet it is not dead for the detectors
    let spectator = g.minus_edge(f.v("g"), f.v("r1")).unwrap();
    assert!(is_captured(&spectator, area).unwrap());
}

#[test]
fn hex_threat_pair() {
    let board = figures::hex_threat_pair();
    assert!(board.is_balanced());
    let g = to_graph(&board).unwrap();
    let (x, y) = (board.cell_index(1, 1), board.cell_index(2, 0));
    let pair = VertexSet::from_iter([x, y]);
    assert!(g.has_edge(x, y));
    assert!(threat_by_triangles(&g, x, VertexSet::singleton(y)).unwrap());
    assert!(threat_by_triangles(&g, y, VertexSet::singleton(x)).unwrap());
    assert!(has(&mutual_pair_reduce(&g), FactKind::Lost(pair)));
    assert!(is_lost(&g, pair).unwrap());

    let a = annotate(&board).unwrap();
    assert_eq!(a.marks[x], Mark::Lost);
    assert_eq!(a.marks[y], Mark::Lost);
}
