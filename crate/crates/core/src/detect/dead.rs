//! Dead edges and dead vertices.

use std::collections::BTreeMap;

use crate::detect::{Fact, FactKind, Rule};
use crate::graph::{Graph, VertexSet};

/// Dead edges present in `g`, one fact per edge, by the first rule in the
/// order: terminal-neighbour edge, surrounded vertex (2-walk count),
/// walk surround (3-walk count), transverse edge.
pub fn dead_edges(g: &Graph) -> Vec<Fact> {
    let mut found: BTreeMap<(usize, usize), Rule> = BTreeMap::new();
    let mut mark = |u: usize, v: usize, rule: Rule| {
        found.entry((u.min(v), u.max(v))).or_insert(rule);
    };
    let terminals = g.terminals();
    let free = g.non_terminals();

    for t in terminals.iter() {
        let nb = g.neighbours(t);
        for u in nb.iter() {
            for v in (g.neighbours(u) & nb).iter().filter(|&v| v > u) {
                mark(u, v, Rule::TerminalNeighbourEdge);
            }
        }
    }

    // w surrounds the non-terminal v: every other neighbour of v is a
    // neighbour of w.
    for v in free.iter() {
        let d = g.degree(v);
        for w in g.neighbours(v).iter() {
            if g.two_walks(v, w) == d - 1 {
                mark(v, w, Rule::SurroundedVertex);
            }
        }
    }

    // Every 2-walk from v ends in Γ[w]; then w surrounds Γ[v] \ {w}.
    for v in free.iter() {
        let closed = g.neighbourhood_closed(VertexSet::singleton(v));
        if closed.intersects(terminals) {
            continue;
        }
        let total: usize = g.neighbours(v).iter().map(|x| g.degree(x)).sum();
        for w in g.alive().without(v).iter() {
            if g.three_walks(v, w) == total - g.two_walks(v, w) {
                for x in (closed & g.neighbours(w)).iter() {
                    mark(x, w, Rule::WalkSurround);
                }
            }
        }
    }

    for v in free.iter() {
        let closed = g.neighbourhood_closed(VertexSet::singleton(v)) - terminals;
        for w in g.alive().without(v).iter() {
            let u = closed.without(w);
            if g.surrounds(w, u) {
                for x in (u & g.neighbours(w)).iter() {
                    mark(x, w, Rule::Transverse);
                }
            }
        }
    }

    found
        .into_iter()
        .map(|((u, v), rule)| Fact::new(FactKind::DeadEdge(u, v), rule))
        .collect()
}

/// Deletes dead edges one at a time, re-detecting after each deletion,
/// until none remain.
pub(crate) fn strip_dead_edges(g: &Graph) -> Graph {
    let mut h = g.clone();
    while let Some(f) = dead_edges(&h).into_iter().next() {
        if let FactKind::DeadEdge(u, v) = f.kind {
            h.remove_edge(u, v).expect("detected edge is alive");
        }
    }
    h
}

/// Dead non-terminal vertices, one fact per vertex.
pub fn dead_vertices(g: &Graph) -> Vec<Fact> {
    let mut found: BTreeMap<usize, Rule> = BTreeMap::new();
    let terminals = g.terminals();
    let free = g.non_terminals();
    let mut mark_all = |s: VertexSet, rule: Rule| {
        for v in s.iter() {
            found.entry(v).or_insert(rule);
        }
    };

    for v in free.iter() {
        if g.is_clique(g.neighbours(v)) {
            mark_all(VertexSet::singleton(v), Rule::Simplicial);
        }
    }

    let mut candidates: Vec<VertexSet> = free
        .iter()
        .map(|v| g.neighbourhood_closed(VertexSet::singleton(v)) - terminals)
        .collect();
    candidates.extend(g.connected_components(free));
    // Pieces split off by a single vertex or an edge.
    for x in g.alive().iter() {
        candidates.extend(g.connected_components(free.without(x)));
        for y in (g.neighbours(x) - VertexSet::range(x + 1)).iter() {
            candidates.extend(g.connected_components(free.without(x).without(y)));
        }
    }
    candidates.sort();
    candidates.dedup();
    for &c in &candidates {
        if g.is_clique(g.neighbourhood(c)) {
            mark_all(c, Rule::CliqueNeighbourhood);
        }
    }

    for t in terminals.iter() {
        let mut local: Vec<VertexSet> = free.iter().map(VertexSet::singleton).collect();
        local.extend(candidates.iter().copied());
        local.extend(g.connected_components(free - g.neighbours(t)));
        for c in local {
            if g.surrounds(t, c) {
                mark_all(c, Rule::TerminalSurround);
            }
        }
    }

    let stripped = strip_dead_edges(g);
    for v in free.iter() {
        if stripped.degree(v) == 0 {
            mark_all(VertexSet::singleton(v), Rule::IncidentEdgesDead);
        }
    }

    found
        .into_iter()
        .map(|(v, rule)| Fact::new(FactKind::DeadVertex(v), rule))
        .collect()
}
