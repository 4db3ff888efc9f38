//! Whole-game wins that can be read off the graph.

use crate::detect::threat::threats_to_vertex;
use crate::detect::{Fact, FactKind, Rule, Win};
use crate::graph::{Graph, VertexSet};

/// Kuhn's augmenting-path matching of `left` vertices onto candidate
/// representatives. Returns the representative of each left vertex.
fn max_matching(left: &[usize], options: &[VertexSet]) -> Vec<Option<usize>> {
    fn augment(
        i: usize,
        options: &[VertexSet],
        owner: &mut [Option<usize>; 128],
        seen: &mut VertexSet,
    ) -> bool {
        for x in options[i].iter() {
            if seen.contains(x) {
                continue;
            }
            seen.insert(x);
            if owner[x].is_none_or(|j| augment(j, options, owner, seen)) {
                owner[x] = Some(i);
                return true;
            }
        }
        false
    }

    let mut owner = [None; 128];
    for i in 0..left.len() {
        let mut seen = VertexSet::EMPTY;
        augment(i, options, &mut owner, &mut seen);
    }
    let mut rep = vec![None; left.len()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            rep[*i] = Some(x);
        }
    }
    rep
}

/// If every neighbour of a terminal is threatened by its own vertex, Cut
/// wins as second player; if all but one are, Cut wins moving first by
/// cutting the odd one out. Representatives are drawn from non-terminal
/// vertices outside the closed neighbourhood of the terminal and matched
/// by maximum bipartite matching.
pub fn terminal_cut_win(g: &Graph) -> Option<Fact> {
    let (t1, t2) = g.terminal_pair()?;
    if g.has_edge(t1, t2) {
        return None;
    }
    let mut first = None;
    for t in [t1, t2] {
        let nb: Vec<usize> = g.neighbours(t).iter().collect();
        let outside = g.non_terminals() - g.neighbourhood_closed(VertexSet::singleton(t));
        let options: Vec<VertexSet> = nb.iter().map(|&u| threats_to_vertex(g, u) & outside).collect();
        let rep = max_matching(&nb, &options);
        let unmatched: Vec<usize> = nb
            .iter()
            .zip(&rep)
            .filter(|(_, r)| r.is_none())
            .map(|(&u, _)| u)
            .collect();
        match unmatched.as_slice() {
            [] => {
                return Some(Fact::new(
                    FactKind::CutWins(Win::SecondPlayer),
                    Rule::TerminalThreatMatching,
                ))
            }
            [u] if first.is_none() => {
                first = Some(Fact::new(
                    FactKind::CutWins(Win::FirstPlayer(Some(*u))),
                    Rule::TerminalThreatMatchingFirst,
                ));
            }
            _ => {}
        }
    }
    first
}

/// Short wins outright when the terminals are adjacent, as second player
/// when they share two or more neighbours, and as first player by shorting
/// the single common neighbour.
pub fn short_win(g: &Graph) -> Option<Fact> {
    let (t1, t2) = g.terminal_pair()?;
    if g.has_edge(t1, t2) {
        return Some(Fact::new(
            FactKind::ShortWins(Win::SecondPlayer),
            Rule::TerminalsAdjacent,
        ));
    }
    let common = g.neighbours(t1) & g.neighbours(t2);
    match common.len() {
        0 => None,
        1 => Some(Fact::new(
            FactKind::ShortWins(Win::FirstPlayer(common.first())),
            Rule::SingleTwoWalk,
        )),
        _ => Some(Fact::new(
            FactKind::ShortWins(Win::SecondPlayer),
            Rule::TwoWalkConnect,
        )),
    }
}
