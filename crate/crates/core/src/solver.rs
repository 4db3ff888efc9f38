//! Exact game solvers used as ground truth: the Shannon game itself, the
//! multi-Shannon game on a playing area, and the complete-colouring oracles
//! that define dead edges and dead vertices.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The two players. Short connects the terminals, Cut separates them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Cut = 0,
    Short = 1,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Cut => Player::Short,
            Player::Short => Player::Cut,
        }
    }

    /// Applies this player's move at `v` in place.
    pub(crate) fn play(self, g: &mut Graph, v: usize) {
        match self {
            Player::Short => g.short_unchecked(v),
            Player::Cut => g.delete_unchecked(v),
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Cut => "cut",
            Player::Short => "short",
        })
    }
}

impl FromStr for Player {
    type Err = Error;
    fn from_str(s: &str) -> Result<Player> {
        match s.to_ascii_lowercase().as_str() {
            "short" => Ok(Player::Short),
            "cut" => Ok(Player::Cut),
            other => Err(Error::Parse {
                line: 0,
                reason: format!("unknown player `{other}` (expected short or cut)"),
            }),
        }
    }
}

/// A Shannon game position: a reduced graph with two terminals and the
/// player to move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    graph: Graph,
    to_move: Player,
}

impl Position {
    pub fn new(graph: Graph, to_move: Player) -> Result<Position> {
        if graph.terminal_pair().is_none() {
            return Err(Error::PreconditionFailed(format!(
                "a Shannon position needs exactly two terminals, found {}",
                graph.terminals().len()
            )));
        }
        Ok(Position { graph, to_move })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }
}

type StateKey = (bool, Box<[u128]>);

fn state_key(g: &Graph, live: VertexSet, to_move: Player) -> StateKey {
    let mut key = Vec::with_capacity(live.len() + 1);
    key.push(live.bits());
    key.extend(live.iter().map(|v| g.neighbours(v).bits()));
    (to_move == Player::Short, key.into_boxed_slice())
}

/// Memoised minimax solver for Shannon positions.
#[derive(Default)]
pub struct Solver {
    memo: FxHashMap<StateKey, bool>,
    nodes: u64,
}

impl Solver {
    pub fn new() -> Solver {
        Solver::default()
    }

    /// Number of positions expanded so far (memo hits excluded).
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// The player holding a winning strategy.
    pub fn solve(&mut self, p: &Position) -> Player {
        let (t1, t2) = p.graph.terminal_pair().expect("validated position");
        if self.short_wins(&p.graph, p.to_move, t1, t2) {
            Player::Short
        } else {
            Player::Cut
        }
    }

    /// First winning move for the player to move, in move order. `None` if
    /// the mover loses or the game is already decided.
    pub fn winning_move(&mut self, p: &Position) -> Option<usize> {
        let (t1, t2) = p.graph.terminal_pair()?;
        if decided(&p.graph, t1, t2).is_some() {
            return None;
        }
        move_order(&p.graph, t1, t2).into_iter().find(|&v| {
            let mut next = p.graph.clone();
            p.to_move.play(&mut next, v);
            let short = self.short_wins(&next, p.to_move.other(), t1, t2);
            short == (p.to_move == Player::Short)
        })
    }

    fn short_wins(&mut self, g: &Graph, to_move: Player, t1: usize, t2: usize) -> bool {
        if let Some(w) = decided(g, t1, t2) {
            return w == Player::Short;
        }
        let key = state_key(g, g.alive(), to_move);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        self.nodes += 1;
        let moves = move_order(g, t1, t2);
        let result = match to_move {
            Player::Short => moves.iter().any(|&v| {
                let mut next = g.clone();
                next.short_unchecked(v);
                self.short_wins(&next, Player::Cut, t1, t2)
            }),
            Player::Cut => moves.iter().all(|&v| {
                let mut next = g.clone();
                next.delete_unchecked(v);
                self.short_wins(&next, Player::Short, t1, t2)
            }),
        };
        self.memo.insert(key, result);
        result
    }
}

/// Terminal-state check: adjacent terminals are a Short win, separated
/// terminals a Cut win.
fn decided(g: &Graph, t1: usize, t2: usize) -> Option<Player> {
    if g.has_edge(t1, t2) {
        Some(Player::Short)
    } else if !g.reach(t1, g.alive()).contains(t2) {
        Some(Player::Cut)
    } else {
        None
    }
}

/// Neighbours of the terminals first, then the rest; each group ascending.
fn move_order(g: &Graph, t1: usize, t2: usize) -> Vec<usize> {
    let free = g.non_terminals();
    let near = (g.neighbours(t1) | g.neighbours(t2)) & free;
    near.iter().chain((free - near).iter()).collect()
}

/// Solves a Shannon position with a fresh solver.
pub fn solve(p: &Position) -> Player {
    Solver::new().solve(p)
}

/// Solves `g` for the given mover.
pub fn solve_graph(g: &Graph, to_move: Player) -> Result<Player> {
    Ok(solve(&Position::new(g.clone(), to_move)?))
}

/// Result of a multi-Shannon game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultiOutcome {
    ShortWin,
    CutWin,
    Draw,
    /// Both targets coincide, so every play reaches both.
    BothWin,
}

impl MultiOutcome {
    fn rank(self) -> u8 {
        match self {
            MultiOutcome::CutWin => 0,
            MultiOutcome::Draw => 1,
            MultiOutcome::ShortWin => 2,
            MultiOutcome::BothWin => 3,
        }
    }

    pub fn is_short_win(self) -> bool {
        matches!(self, MultiOutcome::ShortWin | MultiOutcome::BothWin)
    }

    pub fn is_cut_win(self) -> bool {
        matches!(self, MultiOutcome::CutWin | MultiOutcome::BothWin)
    }
}

impl fmt::Display for MultiOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MultiOutcome::ShortWin => "short-win",
            MultiOutcome::CutWin => "cut-win",
            MultiOutcome::Draw => "draw",
            MultiOutcome::BothWin => "both-win",
        })
    }
}

/// Exhaustive solver for games played on an area with fixed link terminals.
/// Short aims for the adjacency pattern `short_goal` among the terminals;
/// Cut aims for `cut_goal`, or simply to stop Short when there is none.
pub(crate) struct LocalGame {
    terminals: VertexSet,
    short_goal: Vec<VertexSet>,
    cut_goal: Option<Vec<VertexSet>>,
    memo: FxHashMap<StateKey, MultiOutcome>,
}

impl LocalGame {
    pub(crate) fn new(
        terminals: VertexSet,
        short_goal: Vec<VertexSet>,
        cut_goal: Option<Vec<VertexSet>>,
    ) -> LocalGame {
        LocalGame {
            terminals,
            short_goal,
            cut_goal,
            memo: FxHashMap::default(),
        }
    }

    /// `g` must be induced on `area ∪ terminals`.
    pub(crate) fn outcome(&mut self, g: &Graph, area: VertexSet, to_move: Player) -> MultiOutcome {
        let now = g.pattern_on(self.terminals);
        let cut_possible = self.cut_goal.as_ref().is_none_or(|c| *c == now);
        if now == self.short_goal {
            return MultiOutcome::ShortWin;
        }
        let mut all_short = g.clone();
        for v in area.iter() {
            all_short.short_unchecked(v);
        }
        // The terminal pattern only grows, and shorting everything left is
        // the largest pattern still reachable.
        if all_short.pattern_on(self.terminals) != self.short_goal {
            if self.cut_goal.is_none() || (cut_possible && area.is_empty()) {
                return MultiOutcome::CutWin;
            }
            if !cut_possible {
                return MultiOutcome::Draw;
            }
        }
        self.search(g, area, to_move)
    }

    fn search(&mut self, g: &Graph, area: VertexSet, to_move: Player) -> MultiOutcome {
        let key = state_key(g, g.alive(), to_move);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let mut best: Option<MultiOutcome> = None;
        for v in area.iter() {
            let mut next = g.clone();
            to_move.play(&mut next, v);
            let r = self.outcome(&next, area.without(v), to_move.other());
            let better = match best {
                None => true,
                Some(b) => match to_move {
                    Player::Short => r.rank() > b.rank(),
                    Player::Cut => r.rank() < b.rank(),
                },
            };
            if better {
                best = Some(r);
            }
            let done = match to_move {
                Player::Short => r == MultiOutcome::ShortWin,
                Player::Cut => r == MultiOutcome::CutWin,
            };
            if done {
                break;
            }
        }
        let r = best.unwrap_or(MultiOutcome::Draw);
        self.memo.insert(key, r);
        r
    }
}

/// The multi-Shannon game on playing area `S` with link terminals `Γ(S)`.
#[derive(Clone, Debug)]
pub struct MultiGame {
    graph: Graph,
    area: VertexSet,
    link_terminals: VertexSet,
    short_target: Vec<VertexSet>,
    cut_target: Vec<VertexSet>,
}

impl MultiGame {
    /// The area must be nonempty, alive and terminal-free.
    pub fn new(g: &Graph, area: VertexSet) -> Result<MultiGame> {
        if area.is_empty() {
            return Err(Error::PreconditionFailed("playing area is empty".into()));
        }
        g.check_vertices(area)?;
        if let Some(t) = (area & g.terminals()).first() {
            return Err(Error::TerminalInSet(t));
        }
        let link_terminals = g.neighbourhood(area);
        let graph = g.induced(area | link_terminals);
        let short_target = graph.short_set_unchecked(area).pattern_on(link_terminals);
        let cut_target = graph.cut_set_unchecked(area).pattern_on(link_terminals);
        Ok(MultiGame {
            graph,
            area,
            link_terminals,
            short_target,
            cut_target,
        })
    }

    pub fn area(&self) -> VertexSet {
        self.area
    }

    pub fn link_terminals(&self) -> VertexSet {
        self.link_terminals
    }

    /// Adjacency among the link terminals after shorting the whole area.
    pub fn short_target(&self) -> &[VertexSet] {
        &self.short_target
    }

    /// Adjacency among the link terminals after cutting the whole area.
    pub fn cut_target(&self) -> &[VertexSet] {
        &self.cut_target
    }

    /// The induced subgraph on `S ∪ Γ(S)`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// True when shorting and cutting the whole area give the same result,
    /// i.e. the area is dead.
    pub fn targets_coincide(&self) -> bool {
        self.short_target == self.cut_target
    }

    /// True when the link terminals split into pieces that the area does
    /// not connect in the induced subgraph.
    pub fn has_disconnected_neighbourhood(&self) -> bool {
        !self.graph.is_connected()
    }

    fn engine(&self) -> LocalGame {
        LocalGame::new(
            self.link_terminals,
            self.short_target.clone(),
            Some(self.cut_target.clone()),
        )
    }

    /// Outcome with `first` to move.
    pub fn solve(&self, first: Player) -> MultiOutcome {
        if self.targets_coincide() {
            return MultiOutcome::BothWin;
        }
        self.engine().outcome(&self.graph, self.area, first)
    }

    /// Outcome of the final position in which `shorted` is shorted and the
    /// rest of the area cut.
    pub fn final_outcome(&self, shorted: VertexSet) -> Result<MultiOutcome> {
        if !shorted.is_subset(self.area) {
            return Err(Error::PreconditionFailed(format!(
                "{shorted} is not contained in the playing area"
            )));
        }
        if self.targets_coincide() {
            return Ok(MultiOutcome::BothWin);
        }
        let end = self
            .graph
            .short_set_unchecked(shorted)
            .cut_set_unchecked(self.area - shorted)
            .pattern_on(self.link_terminals);
        Ok(if end == self.short_target {
            MultiOutcome::ShortWin
        } else if end == self.cut_target {
            MultiOutcome::CutWin
        } else {
            MultiOutcome::Draw
        })
    }

    /// Outcome after `player` opens at `v`, with the opponent to move.
    pub fn solve_after(&self, player: Player, v: usize) -> Result<MultiOutcome> {
        if !self.area.contains(v) {
            return Err(Error::PreconditionFailed(format!(
                "vertex {v} is not in the playing area"
            )));
        }
        if self.targets_coincide() {
            return Ok(MultiOutcome::BothWin);
        }
        let mut g = self.graph.clone();
        player.play(&mut g, v);
        Ok(self
            .engine()
            .outcome(&g, self.area.without(v), player.other()))
    }
}

impl Graph {
    pub(crate) fn short_set_unchecked(&self, s: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in s.iter() {
            g.short_unchecked(v);
        }
        g
    }

    pub(crate) fn cut_set_unchecked(&self, s: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in s.iter() {
            g.delete_unchecked(v);
        }
        g
    }
}

pub fn solve_multi(m: &MultiGame, first: Player) -> MultiOutcome {
    m.solve(first)
}

/// Short has a second-player win of the multi-Shannon game on `s`.
pub fn is_captured(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(MultiGame::new(g, s)?.solve(Player::Cut).is_short_win())
}

/// Cut has a second-player win of the multi-Shannon game on `s`.
pub fn is_lost(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(MultiGame::new(g, s)?.solve(Player::Short).is_cut_win())
}

/// Which players dominate a set by opening at a given vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domination {
    pub short: bool,
    pub cut: bool,
}

impl Domination {
    pub fn for_player(self, p: Player) -> bool {
        match p {
            Player::Short => self.short,
            Player::Cut => self.cut,
        }
    }
}

/// Whether opening at `v` wins the multi-Shannon game on `s` for each player.
pub fn dominates(g: &Graph, v: usize, s: VertexSet) -> Result<Domination> {
    let m = MultiGame::new(g, s)?;
    Ok(Domination {
        short: m.solve_after(Player::Short, v)?.is_short_win(),
        cut: m.solve_after(Player::Cut, v)?.is_cut_win(),
    })
}

/// Winner of the final position reached by shorting `short_coloured` and
/// cutting every other non-terminal vertex.
pub fn winner_of_colouring(g: &Graph, short_coloured: VertexSet) -> Result<Player> {
    let (t1, t2) = shannon_terminals(g)?;
    g.check_playable(short_coloured)?;
    let cut_coloured = g.non_terminals() - short_coloured;
    let reduced = g.short_set(short_coloured)?.cut_set(cut_coloured)?;
    Ok(if reduced.has_edge(t1, t2) {
        Player::Short
    } else {
        Player::Cut
    })
}

/// Colouring-model winner: Short wins iff a path joins the terminals
/// through Short-coloured vertices.
#[inline]
pub(crate) fn short_connects(g: &Graph, t1: usize, t2: usize, black: VertexSet) -> bool {
    g.reach(t1, black.with(t1).with(t2)).contains(t2)
}

pub(crate) fn shannon_terminals(g: &Graph) -> Result<(usize, usize)> {
    g.terminal_pair().ok_or_else(|| {
        Error::PreconditionFailed(format!(
            "expected exactly two terminals, found {}",
            g.terminals().len()
        ))
    })
}

/// Largest number of uncoloured vertices the colouring oracles enumerate.
pub const COLOURING_CAP: usize = 22;

/// Calls `f` with every subset of `free` (as the Short-coloured set).
fn for_each_colouring(free: VertexSet, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    let members = free.to_vec();
    let k = members.len();
    for mask in 0u64..(1u64 << k) {
        let mut black = VertexSet::EMPTY;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            black.insert(members[i]);
            m &= m - 1;
        }
        if !f(black) {
            return false;
        }
    }
    true
}

fn check_colouring_size(free: VertexSet) -> Result<()> {
    if free.len() > COLOURING_CAP {
        return Err(Error::TooLarge {
            what: "uncoloured vertex set",
            size: free.len(),
            cap: COLOURING_CAP,
        });
    }
    Ok(())
}

/// Brute-force dead-edge test over all complete colourings. A non-edge is
/// tested in `G + e`.
pub fn is_dead_edge_oracle(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let (t1, t2) = shannon_terminals(g)?;
    let with = if g.has_edge(u, v) {
        g.clone()
    } else {
        g.plus_edge(u, v)?
    };
    let without = with.minus_edge(u, v)?;
    let free = g.non_terminals();
    check_colouring_size(free)?;
    Ok(for_each_colouring(free, |black| {
        short_connects(&with, t1, t2, black) == short_connects(&without, t1, t2, black)
    }))
}

/// Brute-force dead-vertex test: the winner of every complete colouring is
/// independent of the colour of `v`.
pub fn is_dead_vertex_oracle(g: &Graph, v: usize) -> Result<bool> {
    let (t1, t2) = shannon_terminals(g)?;
    g.check_playable(VertexSet::from_iter([v]))?;
    let free = g.non_terminals().without(v);
    check_colouring_size(free)?;
    Ok(for_each_colouring(free, |black| {
        short_connects(g, t1, t2, black) == short_connects(g, t1, t2, black.with(v))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn pos(n: usize, edges: &[(usize, usize)], t: [usize; 2], p: Player) -> Position {
        Position::new(Graph::with_terminals(n, edges, &t).unwrap(), p).unwrap()
    }

    #[test]
    fn adjacent_terminals_short_wins() {
        for p in [Player::Short, Player::Cut] {
            assert_eq!(solve(&pos(3, &[(0, 1), (1, 2), (0, 2)], [0, 2], p)), Player::Short);
        }
    }

    #[test]
    fn separated_terminals_cut_wins() {
        for p in [Player::Short, Player::Cut] {
            assert_eq!(solve(&pos(4, &[(0, 1), (2, 3)], [0, 3], p)), Player::Cut);
        }
    }

    #[test]
    fn two_disjoint_two_paths_short_wins_second() {
        // t1=0, t2=3, middles 1 and 2
        let p = pos(4, &[(0, 1), (1, 3), (0, 2), (2, 3)], [0, 3], Player::Cut);
        assert_eq!(solve(&p), Player::Short);
    }

    #[test]
    fn single_path_mover_wins() {
        for p in [Player::Short, Player::Cut] {
            let position = pos(3, &[(0, 1), (1, 2)], [0, 2], p);
            let mut s = Solver::new();
            assert_eq!(s.solve(&position), p);
            assert_eq!(s.winning_move(&position), Some(1));
        }
    }

    #[test]
    fn position_requires_two_terminals() {
        let g = Graph::with_terminals(3, &[(0, 1)], &[0]).unwrap();
        assert!(Position::new(g, Player::Short).is_err());
    }

    #[test]
    fn capture_and_loss_on_diamond_chain() {
        // t1=0 - a=1 - {b=2, c=3} - d=4 - t2=5
        let g = Graph::with_terminals(
            6,
            &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
            &[0, 5],
        )
        .unwrap();
        let bc = set(&[2, 3]);
        let m = MultiGame::new(&g, bc).unwrap();
        assert_eq!(m.solve(Player::Cut), MultiOutcome::ShortWin);
        assert!(is_captured(&g, bc).unwrap());
        let abcd = set(&[1, 2, 3, 4]);
        let m = MultiGame::new(&g, abcd).unwrap();
        assert_eq!(m.solve(Player::Short), MultiOutcome::CutWin);
        assert!(is_lost(&g, abcd).unwrap());
        assert!(!is_captured(&g, abcd).unwrap());
    }

    #[test]
    fn clique_neighbourhood_is_both_win() {
        let g = Graph::with_terminals(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], &[1, 3]).unwrap();
        // vertex 0 is simplicial
        let m = MultiGame::new(&g, set(&[0])).unwrap();
        assert_eq!(m.solve(Player::Short), MultiOutcome::BothWin);
        assert!(is_captured(&g, set(&[0])).unwrap());
        assert!(is_lost(&g, set(&[0])).unwrap());
    }

    #[test]
    fn multigame_rejects_bad_areas() {
        let g = Graph::with_terminals(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap();
        assert!(MultiGame::new(&g, VertexSet::EMPTY).is_err());
        assert_eq!(MultiGame::new(&g, set(&[0, 1])).err(), Some(Error::TerminalInSet(0)));
    }

    #[test]
    fn colouring_winners() {
        let g = Graph::with_terminals(4, &[(0, 1), (1, 2), (2, 3)], &[0, 3]).unwrap();
        assert_eq!(winner_of_colouring(&g, set(&[1, 2])).unwrap(), Player::Short);
        assert_eq!(winner_of_colouring(&g, VertexSet::EMPTY).unwrap(), Player::Cut);
        assert_eq!(winner_of_colouring(&g, set(&[1])).unwrap(), Player::Cut);
        assert!(winner_of_colouring(&g, set(&[0])).is_err());
    }

    #[test]
    fn colouring_model_matches_reduced_graph_model() {
        let g = Graph::with_terminals(
            6,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5)],
            &[0, 5],
        )
        .unwrap();
        for mask in 0u32..16 {
            let black: VertexSet = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let w = winner_of_colouring(&g, black).unwrap();
            assert_eq!(w == Player::Short, short_connects(&g, 0, 5, black));
        }
    }

    #[test]
    fn dead_oracles_basic() {
        // t1=0 adjacent to 1 and 2, which are adjacent; both lead to t2=4 via 3.
        let g = Graph::with_terminals(
            6,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5)],
            &[0, 4],
        )
        .unwrap();
        assert!(is_dead_edge_oracle(&g, 1, 2).unwrap());
        // pendant vertex 5
        assert!(is_dead_vertex_oracle(&g, 5).unwrap());
        // bridge edge 3-4 is alive
        assert!(!is_dead_edge_oracle(&g, 3, 4).unwrap());
        assert!(!is_dead_vertex_oracle(&g, 3).unwrap());
    }

    #[test]
    fn dominates_on_pair() {
        // path t1=0 - a=1 - b=2 - t2=3 plus t1 - c=4 - t2: {a,b} is lost
        let g = Graph::with_terminals(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)], &[0, 3]).unwrap();
        let d = dominates(&g, 1, set(&[1, 2])).unwrap();
        assert!(d.cut);
        assert!(!d.short);
        assert!(is_lost(&g, set(&[1, 2])).unwrap());
    }
}
