//! Benchmark fixtures shared by the criterion benches.

use shannon_core::hex::{to_graph, HexBoard};
use shannon_core::{Graph, VertexSet};

/// Empty hex board of size `m` as a Shannon graph.
pub fn empty_hex(m: usize) -> Graph {
    to_graph(&HexBoard::new(m).expect("board size")).expect("lattice graph")
}

/// A mid-game 4x4 position with a few stones on each side.
pub fn hex_midgame() -> Graph {
    let b = HexBoard::parse("hex 4\n.B..\n.W..\n..B.\nW...\n").expect("board");
    to_graph(&b).expect("lattice graph")
}

/// Deterministic pseudo-random graph on `n` vertices with terminals 0 and
/// `n - 1`. Edges are picked by a fixed xorshift stream.
pub fn random_graph(n: usize, per_mille: u64, seed: u64) -> Graph {
    let mut state = seed | 1;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state % 1000 < per_mille {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::from_edges(n, &edges).expect("edges in range");
    g.set_terminals(VertexSet::from_iter([0, n - 1]))
        .expect("two terminals");
    g
}
