//! Fill-in: apply every detector as a free move until nothing changes.

use crate::detect::{
    dead_edges, dead_vertices, degree3_collapse, find_or_rule_capture, find_pairset,
    mutual_pair_reduce, short_win, terminal_cut_win, verify_fact, Fact, FactKind, Verdict,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::solver::shannon_terminals;

/// A fact together with the graph it was detected in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub fact: Fact,
    pub graph: Graph,
}

impl Step {
    pub fn verify(&self) -> Result<Verdict> {
        verify_fact(&self.graph, &self.fact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectionReport {
    pub steps: Vec<Step>,
    /// The graph after all dead-edge deletions, dead-vertex and lost-set
    /// cuts, and captured-set shorts.
    pub reduced: Graph,
}

impl DetectionReport {
    pub fn facts(&self) -> impl Iterator<Item = &Fact> {
        self.steps.iter().map(|s| &s.fact)
    }

    /// One line per fact, sorted.
    pub fn lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.facts().map(|f| f.to_string()).collect();
        lines.sort();
        lines.dedup();
        lines
    }
}

fn decided(g: &Graph, t1: usize, t2: usize) -> bool {
    g.has_edge(t1, t2) || !g.reach(t1, g.alive()).contains(t2)
}

/// Repeatedly deletes dead edges (one at a time, re-detecting after each),
/// cuts dead vertices, cuts lost sets and shorts captured sets, in that
/// order of preference, until no detector fires or the game is decided.
/// Dominations and whole-game wins are then reported for the final graph.
pub fn fill_in(g: &Graph) -> Result<DetectionReport> {
    let (t1, t2) = shannon_terminals(g)?;
    let mut h = g.clone();
    let mut steps = Vec::new();
    while !decided(&h, t1, t2) {
        let Some(batch) = next_reduction(&h)? else {
            break;
        };
        let before = h.clone();
        for fact in batch {
            match fact.kind {
                FactKind::DeadEdge(u, v) => h.remove_edge(u, v)?,
                FactKind::DeadVertex(v) => h.delete_unchecked(v),
                FactKind::Lost(s) => h = h.cut_set(s)?,
                FactKind::Captured(s) => h = h.short_set(s)?,
                _ => unreachable!("only reducing facts are applied"),
            }
            steps.push(Step {
                fact,
                graph: before.clone(),
            });
        }
    }
    let mut tail: Vec<Fact> = Vec::new();
    if !decided(&h, t1, t2) {
        tail.extend(
            degree3_collapse(&h)
                .into_iter()
                .filter(|f| matches!(f.kind, FactKind::CutDominates(..))),
        );
    }
    tail.extend(terminal_cut_win(&h));
    tail.extend(short_win(&h));
    steps.extend(tail.into_iter().map(|fact| Step {
        fact,
        graph: h.clone(),
    }));
    Ok(DetectionReport { steps, reduced: h })
}

/// The next batch of reducing facts, all valid in `h`.
fn next_reduction(h: &Graph) -> Result<Option<Vec<Fact>>> {
    if let Some(f) = dead_edges(h).into_iter().next() {
        return Ok(Some(vec![f]));
    }
    let dead = dead_vertices(h);
    if !dead.is_empty() {
        return Ok(Some(dead));
    }
    let reducing = |f: &Fact| matches!(f.kind, FactKind::Lost(_) | FactKind::Captured(_));
    let first = mutual_pair_reduce(h)
        .into_iter()
        .chain(degree3_collapse(h).into_iter().filter(reducing))
        .chain(find_pairset(h))
        .next();
    if let Some(f) = first {
        return Ok(Some(vec![f]));
    }
    Ok(find_or_rule_capture(h)?.into_iter().next().map(|f| vec![f]))
}
