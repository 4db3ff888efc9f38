//! Polynomial-time detectors for threats, supports, captured and lost sets,
//! dead edges and vertices, and simple forced wins, plus the fill-in engine
//! that applies them to a fixpoint.

mod capture;
mod dead;
mod fill;
mod threat;
mod wins;

use std::fmt;

pub use capture::{find_or_rule_capture, or_rule_capture, or_rule_candidates};
pub use dead::{dead_edges, dead_vertices};
pub use fill::{fill_in, DetectionReport, Step};
pub use threat::{
    degree3_collapse, find_pairset, mutual_pair_reduce, pairset_reduce, supports,
    supports_by_definition, threat_by_triangles, threat_transfer, threatens,
    threatens_by_definition, threats_to_vertex,
};
pub use wins::{short_win, terminal_cut_win};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solver::{
    dominates, is_captured, is_dead_edge_oracle, is_dead_vertex_oracle, is_lost, Player,
    Position, Solver, COLOURING_CAP,
};

/// The rule that certifies a fact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `w` surrounds the non-terminal `v`, counted with 2-walks.
    SurroundedVertex,
    /// `w` surrounds `Γ[v]`, counted with 3-walks.
    WalkSurround,
    /// `w` surrounds a terminal-free set of the form `Γ[v] \ T \ {w}`.
    Transverse,
    /// Both ends are neighbours of the same terminal.
    TerminalNeighbourEdge,
    /// Non-terminal vertex with a clique neighbourhood.
    Simplicial,
    /// Terminal-free set whose neighbourhood is a clique.
    CliqueNeighbourhood,
    /// Terminal-free set surrounded by a terminal.
    TerminalSurround,
    /// Every incident edge is dead.
    IncidentEdgesDead,
    MutualThreat,
    MutualSupport,
    /// Degree-3 vertex threatening all its neighbours.
    Degree3Threat,
    /// Degree-3 vertex threatening exactly two of its neighbours.
    Degree3Dominate,
    /// Disjoint dominated pairs whose dominated halves threaten (support)
    /// the dominating halves.
    PairSet,
    /// Short wins first-player games on subsets with empty intersection.
    OrRule,
    /// Neighbours of a terminal threatened by distinct vertices.
    TerminalThreatMatching,
    /// All but one neighbour of a terminal threatened by distinct vertices.
    TerminalThreatMatchingFirst,
    TerminalsAdjacent,
    /// Two or more 2-walks between the terminals.
    TwoWalkConnect,
    /// Exactly one 2-walk between the terminals.
    SingleTwoWalk,
    /// Neighbour counting with triangle numbers.
    TriangleCount,
    /// Per-component clique test on `Γ(B) \ A`.
    ThreatClique,
    /// Neighbours of `B` that do not surround it are adjacent to `A`.
    SupportNeighbours,
    /// A threat moved to the neighbourhood of the threatening set.
    ThreatTransfer,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::SurroundedVertex => "surrounded-vertex",
            Rule::WalkSurround => "walk-surround",
            Rule::Transverse => "transverse",
            Rule::TerminalNeighbourEdge => "terminal-neighbour-edge",
            Rule::Simplicial => "simplicial",
            Rule::CliqueNeighbourhood => "clique-neighbourhood",
            Rule::TerminalSurround => "terminal-surround",
            Rule::IncidentEdgesDead => "incident-edges-dead",
            Rule::MutualThreat => "mutual-threat",
            Rule::MutualSupport => "mutual-support",
            Rule::Degree3Threat => "degree3-threat",
            Rule::Degree3Dominate => "degree3-dominate",
            Rule::PairSet => "pair-set",
            Rule::OrRule => "or-rule",
            Rule::TerminalThreatMatching => "terminal-threat-matching",
            Rule::TerminalThreatMatchingFirst => "terminal-threat-matching-first",
            Rule::TerminalsAdjacent => "terminals-adjacent",
            Rule::TwoWalkConnect => "two-walk-connect",
            Rule::SingleTwoWalk => "single-two-walk",
            Rule::TriangleCount => "triangle-count",
            Rule::ThreatClique => "threat-clique",
            Rule::SupportNeighbours => "support-neighbours",
            Rule::ThreatTransfer => "threat-transfer",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Who wins a whole Shannon game and from which seat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Win {
    /// Wins whoever moves first.
    SecondPlayer,
    /// Wins when moving first, starting with the given move. `None` when no
    /// move is needed.
    FirstPlayer(Option<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactKind {
    Threat { a: VertexSet, b: VertexSet },
    Support { a: VertexSet, b: VertexSet },
    DeadEdge(usize, usize),
    DeadVertex(usize),
    Captured(VertexSet),
    Lost(VertexSet),
    CutDominates(usize, VertexSet),
    ShortDominates(usize, VertexSet),
    CutWins(Win),
    ShortWins(Win),
}

impl FactKind {
    pub fn label(&self) -> &'static str {
        match self {
            FactKind::Threat { .. } => "THREAT",
            FactKind::Support { .. } => "SUPPORT",
            FactKind::DeadEdge(..) => "DEAD-EDGE",
            FactKind::DeadVertex(_) => "DEAD-VERTEX",
            FactKind::Captured(_) => "CAPTURED",
            FactKind::Lost(_) => "LOST",
            FactKind::CutDominates(..) => "CUT-DOMINATES",
            FactKind::ShortDominates(..) => "SHORT-DOMINATES",
            FactKind::CutWins(_) => "CUT-WINS",
            FactKind::ShortWins(_) => "SHORT-WINS",
        }
    }
}

/// A detected property of a graph together with the rule that certifies it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fact {
    pub kind: FactKind,
    pub rule: Rule,
}

impl Fact {
    pub fn new(kind: FactKind, rule: Rule) -> Fact {
        Fact { kind, rule }
    }
}

fn write_win(f: &mut fmt::Formatter<'_>, w: &Win) -> fmt::Result {
    match w {
        Win::SecondPlayer => f.write_str("2nd"),
        Win::FirstPlayer(None) => f.write_str("1st"),
        Win::FirstPlayer(Some(v)) => write!(f, "1st {v}"),
    }
}

/// `<KIND> <tag> <vertex list>`; two-set facts separate the sets with `/`.
impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ", self.kind.label(), self.rule)?;
        match &self.kind {
            FactKind::Threat { a, b } | FactKind::Support { a, b } => write!(f, "{a} / {b}"),
            FactKind::DeadEdge(u, v) => write!(f, "{u} {v}"),
            FactKind::DeadVertex(v) => write!(f, "{v}"),
            FactKind::Captured(s) | FactKind::Lost(s) => write!(f, "{s}"),
            FactKind::CutDominates(v, s) | FactKind::ShortDominates(v, s) => {
                write!(f, "{v} / {s}")
            }
            FactKind::CutWins(w) | FactKind::ShortWins(w) => write_win(f, w),
        }
    }
}

/// Result of checking a fact against the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Refuted,
    /// Too large for the oracle.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Largest playing area handed to the multi-game oracle when verifying.
pub const VERIFY_AREA_CAP: usize = 14;

/// Checks `fact` on the graph it was detected in using the game solvers.
pub fn verify_fact(g: &Graph, fact: &Fact) -> Result<Verdict> {
    let area_ok = |s: VertexSet| s.len() <= VERIFY_AREA_CAP;
    let colouring_ok = g.non_terminals().len() <= COLOURING_CAP;
    let verdict = |b: bool| if b { Verdict::Confirmed } else { Verdict::Refuted };
    Ok(match &fact.kind {
        FactKind::Threat { a, b } => verdict(threatens_by_definition(g, *a, *b)?),
        FactKind::Support { a, b } => verdict(supports_by_definition(g, *a, *b)?),
        FactKind::DeadEdge(u, v) if colouring_ok => verdict(is_dead_edge_oracle(g, *u, *v)?),
        FactKind::DeadVertex(v) if colouring_ok => verdict(is_dead_vertex_oracle(g, *v)?),
        FactKind::Captured(s) if area_ok(*s) => verdict(is_captured(g, *s)?),
        FactKind::Lost(s) if area_ok(*s) => verdict(is_lost(g, *s)?),
        FactKind::CutDominates(v, s) if area_ok(*s) => verdict(dominates(g, *v, *s)?.cut),
        FactKind::ShortDominates(v, s) if area_ok(*s) => verdict(dominates(g, *v, *s)?.short),
        FactKind::CutWins(w) if g.non_terminals().len() <= COLOURING_CAP => {
            verdict(check_win(g, Player::Cut, *w)?)
        }
        FactKind::ShortWins(w) if g.non_terminals().len() <= COLOURING_CAP => {
            verdict(check_win(g, Player::Short, *w)?)
        }
        _ => Verdict::Skipped,
    })
}

fn check_win(g: &Graph, winner: Player, w: Win) -> Result<bool> {
    let mut solver = Solver::new();
    Ok(match w {
        Win::SecondPlayer => [Player::Cut, Player::Short].into_iter().all(|first| {
            let p = Position::new(g.clone(), first).expect("two terminals");
            solver.solve(&p) == winner
        }),
        Win::FirstPlayer(None) => solver.solve(&Position::new(g.clone(), winner)?) == winner,
        Win::FirstPlayer(Some(v)) => {
            let after = match winner {
                Player::Cut => g.cut(v)?,
                Player::Short => g.short(v)?,
            };
            solver.solve(&Position::new(after, winner.other())?) == winner
        }
    })
}

/// Runs every detector once on `g` without modifying it.
pub fn detect_all(g: &Graph) -> Result<Vec<Fact>> {
    let mut facts = Vec::new();
    facts.extend(dead_edges(g));
    facts.extend(dead_vertices(g));
    facts.extend(mutual_pair_reduce(g));
    facts.extend(degree3_collapse(g));
    facts.extend(find_pairset(g));
    facts.extend(find_or_rule_capture(g)?);
    if g.terminal_pair().is_some() {
        facts.extend(terminal_cut_win(g));
        facts.extend(short_win(g));
    }
    facts.sort();
    facts.dedup();
    Ok(facts)
}
