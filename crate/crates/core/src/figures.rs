//! Small worked positions with named vertices, used by the tests, the
//! benches and the command-line examples.
//!
//! Terminals are named `t1`, `t2` (or `l1`, `l2`, `r1`, `r2` for the
//! four-terminal local game). Each position is built so that the property
//! noted on its constructor can be read off the graph directly.

use crate::graph::{Graph, VertexSet};
use crate::hex::{Cell, HexBoard};

#[derive(Clone, Debug)]
pub struct Figure {
    pub name: &'static str,
    pub graph: Graph,
    names: Vec<&'static str>,
}

impl Figure {
    fn build(
        name: &'static str,
        names: &[&'static str],
        edges: &[(&str, &str)],
        terminals: &[&str],
    ) -> Figure {
        let index = |v: &str| {
            names
                .iter()
                .position(|n| *n == v)
                .unwrap_or_else(|| panic!("{name}: unknown vertex {v}"))
        };
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        let terminals: Vec<usize> = terminals.iter().map(|&t| index(t)).collect();
        let graph = Graph::with_terminals(names.len(), &edges, &terminals)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        Figure {
            name,
            graph,
            names: names.to_vec(),
        }
    }

    /// Index of the named vertex. Panics on an unknown name.
    pub fn v(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| *n == name)
            .unwrap_or_else(|| panic!("{}: unknown vertex {name}", self.name))
    }

    pub fn set(&self, names: &[&str]) -> VertexSet {
        names.iter().map(|n| self.v(n)).collect()
    }

    pub fn name_of(&self, v: usize) -> &'static str {
        self.names[v]
    }
}

/// `{b, c}` is captured and `{a, b, c, d}` is lost: the area is a diamond
/// hung between a vertex on `t1` and a vertex on `t2`.
pub fn capture_and_loss() -> Figure {
    Figure::build(
        "capture-and-loss",
        &["t1", "t2", "a", "b", "c", "d"],
        &[("t1", "a"), ("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "t2")],
        &["t1", "t2"],
    )
}

/// Two adjacent vertices of degree two, `a` and `b`, cut-dominate each
/// other and are lost.
pub fn lost_pair() -> Figure {
    Figure::build(
        "lost-pair",
        &["t1", "t2", "a", "b", "c"],
        &[("t1", "a"), ("a", "b"), ("b", "t2"), ("t1", "c"), ("c", "t2")],
        &["t1", "t2"],
    )
}

/// Two non-adjacent vertices of degree two with the same neighbours, `a`
/// and `b`, short-dominate each other and are captured.
pub fn captured_pair() -> Figure {
    Figure::build(
        "captured-pair",
        &["t1", "t2", "x", "y", "a", "b"],
        &[("t1", "x"), ("x", "a"), ("x", "b"), ("a", "y"), ("b", "y"), ("y", "t2")],
        &["t1", "t2"],
    )
}

/// `c` surrounds `a`, so the edge `ac` is dead. `b` cut-dominates `{a, b}`
/// and `a`, `c` cut-dominate `{a, b, c}`, yet `a` does not cut-dominate
/// `{a, b}`.
pub fn domination() -> Figure {
    Figure::build(
        "domination",
        &["t1", "t2", "a", "b", "c", "x", "y"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "y"),
            ("b", "c"),
            ("b", "x"),
            ("c", "y"),
            ("t1", "x"),
            ("y", "t2"),
        ],
        &["t1", "t2"],
    )
}

/// `w` surrounds the triangle `{p, q, r}` seen from `v`: every edge from
/// `w` into the closed neighbourhood of `v` is transverse.
pub fn surround() -> Figure {
    Figure::build(
        "surround",
        &["t1", "t2", "v", "p", "q", "r", "u", "w"],
        &[
            ("v", "p"),
            ("v", "q"),
            ("v", "r"),
            ("r", "p"),
            ("r", "q"),
            ("u", "p"),
            ("u", "q"),
            ("w", "v"),
            ("w", "p"),
            ("w", "q"),
            ("w", "r"),
            ("t1", "p"),
            ("t2", "q"),
        ],
        &["t1", "t2"],
    )
}

/// `v` is dead although shorting it changes the graph: its neighbours
/// `x`, `y` already share the neighbours `t1` and `z`.
pub fn dead_vertex() -> Figure {
    Figure::build(
        "dead-vertex",
        &["t1", "t2", "v", "x", "y", "z"],
        &[
            ("t1", "x"),
            ("t1", "y"),
            ("v", "x"),
            ("v", "y"),
            ("x", "z"),
            ("y", "z"),
            ("z", "t2"),
        ],
        &["t1", "t2"],
    )
}

/// The edge `vw` is dead by the walk count around `v`; once it is gone
/// `{a, v}` and `{v, b}` are threat pairs, hence lost.
pub fn dead_edge_vw() -> Figure {
    Figure::build(
        "dead-edge-vw",
        &["t1", "t2", "v", "w", "a", "b"],
        &[
            ("t1", "w"),
            ("w", "t2"),
            ("a", "v"),
            ("v", "b"),
            ("t1", "a"),
            ("w", "v"),
            ("t2", "b"),
        ],
        &["t1", "t2"],
    )
}

/// `a` threatens `c`, `b` threatens `d` and `{c, d}` threatens `{a, b}`,
/// so the pair-set `{a, c}`, `{b, d}` makes `{a, b, c, d}` lost, though
/// no two of its vertices threaten each other.
pub fn pair_set() -> Figure {
    Figure::build(
        "pair-set",
        &["a", "b", "c", "d", "t1", "t2", "x"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "x"),
            ("b", "d"),
            ("b", "t1"),
            ("c", "t2"),
            ("d", "t2"),
            ("t1", "x"),
        ],
        &["t1", "t2"],
    )
}

/// Like [`pair_set`], except that `b` threatens `d` only after the dead
/// edge `cd` is deleted. With `a`, `b` non-adjacent, `{c, d}` threatens
/// `{a, b}` because both `Γ(a) ∖ {c, d}` and `Γ(b) ∖ {c, d}` are cliques.
pub fn pair_set_after_dead_edge() -> Figure {
    Figure::build(
        "pair-set-after-dead-edge",
        &["a", "b", "c", "d", "t1", "t2", "x"],
        &[
            ("a", "c"),
            ("a", "d"),
            ("a", "t1"),
            ("a", "x"),
            ("b", "c"),
            ("b", "d"),
            ("b", "t2"),
            ("c", "d"),
            ("d", "t1"),
            ("t1", "x"),
        ],
        &["t1", "t2"],
    )
}

/// A four-terminal local game on `{e, f, g, h}` that Short wins moving
/// second. `e` supports each of `f`, `g`, `h`; after `f` is shorted, `g`
/// and `h` support each other. The edge `g r1` is a spectator.
pub fn supporting_sets() -> Figure {
    Figure::build(
        "supporting-sets",
        &["e", "f", "g", "h", "l1", "l2", "r1", "r2"],
        &[
            ("e", "f"),
            ("e", "g"),
            ("e", "h"),
            ("e", "l1"),
            ("e", "l2"),
            ("e", "r1"),
            ("e", "r2"),
            ("f", "g"),
            ("f", "h"),
            ("f", "r1"),
            ("f", "r2"),
            ("g", "l1"),
            ("g", "l2"),
            ("g", "r1"),
            ("h", "l1"),
            ("h", "l2"),
            ("l1", "l2"),
            ("r1", "r2"),
        ],
        &[],
    )
}

/// Two empty cells next to a Black stone and hemmed in by White that
/// threaten each other, as found by the triangle count.
pub fn hex_threat_pair() -> HexBoard {
    let mut b = HexBoard::new(3).expect("valid size");
    b.set(0, 0, Cell::White);
    b.set(0, 1, Cell::White);
    b.set(1, 0, Cell::Black);
    b.set(2, 1, Cell::White);
    b.set(2, 2, Cell::Black);
    b
}

/// Every named position.
pub fn all() -> Vec<Figure> {
    vec![
        capture_and_loss(),
        lost_pair(),
        captured_pair(),
        domination(),
        surround(),
        dead_vertex(),
        dead_edge_vw(),
        pair_set(),
        pair_set_after_dead_edge(),
        supporting_sets(),
    ]
}
