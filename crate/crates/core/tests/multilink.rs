use shannon_core::figures;
use shannon_core::multilink::{
    and_rule, find_pivots, link_strength, or_rule, verify_link, MultiLink, Strength,
};
use shannon_core::census::enumerate_connected;
use shannon_core::{is_captured, Graph, VertexSet};

/// The derivation for the four-terminal local game: two single-vertex
/// weak links OR into a strong one, which ANDs with the clique through
/// `f` into a weak link pivoted by `f`; ORing that with `e` gives a strong
/// link over the whole area.
#[test]
fn supporting_sets_derivation() {
    let f = figures::supporting_sets();
    let g = &f.graph;
    let left = f.set(&["l1", "l2", "f"]);

    let via_h = MultiLink::weak(f.set(&["h"]), left, f.set(&["h"]));
    let via_g = MultiLink::weak(f.set(&["g"]), left, f.set(&["g"]));
    assert!(verify_link(g, &via_h).unwrap());
    assert!(verify_link(g, &via_g).unwrap());

    let left_strong = or_rule(&[via_h, via_g]).unwrap();
    assert_eq!(left_strong, MultiLink::strong(f.set(&["g", "h"]), left));
    assert!(verify_link(g, &left_strong).unwrap());

    let right_clique = MultiLink::strong(VertexSet::EMPTY, f.set(&["f", "r1", "r2"]));
    assert!(verify_link(g, &right_clique).unwrap());

    let across = and_rule(&left_strong, &right_clique).unwrap();
    let outer = f.set(&["l1", "l2", "r1", "r2"]);
    assert_eq!(across.carrier, f.set(&["f", "g", "h"]));
    assert_eq!(across.terminals, outer);
    assert_eq!(across.pivots, f.set(&["f"]));
    assert!(verify_link(g, &across).unwrap());

    let via_e = MultiLink::weak(f.set(&["e"]), outer, f.set(&["e"]));
    assert!(verify_link(g, &via_e).unwrap());
    let whole = or_rule(&[via_e, across]).unwrap();
    let area = f.set(&["e", "f", "g", "h"]);
    assert_eq!(whole, MultiLink::strong(area, outer));
    assert!(verify_link(g, &whole).unwrap());

    assert_eq!(g.neighbourhood(area), outer);
    assert!(is_captured(g, area).unwrap());
}

#[test]
fn weak_link_pivots_are_exactly_the_strengthening_moves() {
    let f = figures::supporting_sets();
    let g = &f.graph;
    let carrier = f.set(&["f", "g", "h"]);
    let outer = f.set(&["l1", "l2", "r1", "r2"]);
    assert_eq!(link_strength(g, carrier, outer).unwrap(), Some(Strength::Weak));
    assert_eq!(find_pivots(g, carrier, outer).unwrap(), f.set(&["f"]));
    assert!(!verify_link(g, &MultiLink::weak(carrier, outer, f.set(&["g"]))).unwrap());
}

#[test]
fn and_rule_output_on_a_path_is_weak() {
    // On a path a middle vertex is only a weak link between its
    // neighbours, and two edges sharing a vertex AND into a weak link
    // pivoted by that vertex.
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let l1 = MultiLink::strong(VertexSet::from_iter([1]), VertexSet::from_iter([0, 2]));
    assert_eq!(
        link_strength(&g, l1.carrier, l1.terminals).unwrap(),
        Some(Strength::Weak)
    );
    assert!(!verify_link(&g, &l1).unwrap());
    let e1 = MultiLink::strong(VertexSet::EMPTY, VertexSet::from_iter([1, 2]));
    let e2 = MultiLink::strong(VertexSet::EMPTY, VertexSet::from_iter([2, 3]));
    let joined = and_rule(&e1, &e2).unwrap();
    assert_eq!(joined.terminals, VertexSet::from_iter([1, 3]));
    assert!(verify_link(&g, &joined).unwrap());
}

/// Every way of labelling the vertices of every connected graph on up to
/// `max_n` vertices with `parts` labels; label sets are returned by label.
fn labelled_graphs(max_n: usize, parts: u32) -> impl Iterator<Item = (Graph, Vec<VertexSet>)> {
    (1..=max_n).flat_map(move |n| {
        enumerate_connected(n).unwrap().into_iter().flat_map(move |g| {
            (0..parts.pow(n as u32)).map(move |mut code| {
                let mut sets = vec![VertexSet::EMPTY; parts as usize];
                for v in 0..n {
                    sets[(code % parts) as usize].insert(v);
                    code /= parts;
                }
                (g.clone(), sets)
            })
        })
    })
}

#[test]
fn or_rule_output_is_strong() {
    let mut checked = 0;
    // 1, 2: carriers; 3: terminals
    for (g, p) in labelled_graphs(6, 4) {
        let (c1, c2, t) = (p[1], p[2], p[3]);
        if t.len() < 2 || c1.is_empty() || c2.is_empty() {
            continue;
        }
        let (Some(_), Some(_)) = (
            link_strength(&g, c1, t).unwrap(),
            link_strength(&g, c2, t).unwrap(),
        ) else {
            continue;
        };
        let l = or_rule(&[
            MultiLink::weak(c1, t, VertexSet::EMPTY),
            MultiLink::weak(c2, t, VertexSet::EMPTY),
        ])
        .unwrap();
        assert_eq!(
            link_strength(&g, l.carrier, l.terminals).unwrap(),
            Some(Strength::Strong),
            "{c1} or {c2} to {t} on {g:?}"
        );
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn and_rule_output_is_at_least_weak() {
    let mut checked = 0;
    // 1, 2: carriers; 3: first terminals only; 4: second only; 5: shared
    for (g, p) in labelled_graphs(6, 6) {
        let (c1, c2) = (p[1], p[2]);
        let (t1, t2) = (p[3] | p[5], p[4] | p[5]);
        if p[5].is_empty() || t1.len() < 2 || t2.len() < 2 {
            continue;
        }
        let strong = |c, t| link_strength(&g, c, t).unwrap() == Some(Strength::Strong);
        if !strong(c1, t1) || !strong(c2, t2) {
            continue;
        }
        let l = and_rule(&MultiLink::strong(c1, t1), &MultiLink::strong(c2, t2)).unwrap();
        let actual = link_strength(&g, l.carrier, l.terminals).unwrap();
        assert!(actual.is_some(), "{l} on {g:?}");
        if actual == Some(Strength::Weak) {
            let pivots = find_pivots(&g, l.carrier, l.terminals).unwrap();
            assert!(l.pivots.is_subset(pivots), "{l} has pivots {pivots} on {g:?}");
        }
        checked += 1;
    }
    assert!(checked > 100);
}
