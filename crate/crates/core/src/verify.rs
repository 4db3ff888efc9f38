//! Exhaustive cross-checks of the detectors and domination results against the exact
//! solvers, run over whole families of small graphs. Shared by the test
//! suites and the `verify` command.

use rayon::prelude::*;

use crate::detect::{
    detect_all, fill_in, supports, supports_by_definition, threat_by_triangles, threatens,
    threatens_by_definition, verify_fact, Verdict,
};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solver::{
    dominates, is_captured, is_dead_edge_oracle, is_dead_vertex_oracle, is_lost, solve_graph,
    MultiGame, Player,
};

/// Failures kept per suite; the count is always exact.
const KEEP_FAILURES: usize = 20;

#[derive(Clone, Debug, Default)]
pub struct SuiteResult {
    pub name: &'static str,
    /// Number of individual checks performed.
    pub checks: u64,
    pub failure_count: u64,
    /// The first few failures, each with the graph it occurred on.
    pub failures: Vec<String>,
    /// Checks the oracle could not decide within its size caps.
    pub skipped: u64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn merge(mut self, other: SuiteResult) -> SuiteResult {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        self.skipped += other.skipped;
        for f in other.failures {
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(f);
            }
        }
        self
    }
}

/// Per-graph accumulator handed to each check.
#[derive(Default)]
struct Tally {
    inner: SuiteResult,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.inner.checks += 1;
        if !ok {
            self.inner.failure_count += 1;
            if self.inner.failures.len() < KEEP_FAILURES {
                self.inner.failures.push(describe());
            }
        }
    }

    fn verdict(&mut self, v: Verdict, describe: impl FnOnce() -> String) {
        match v {
            Verdict::Skipped => self.inner.skipped += 1,
            v => self.check(v == Verdict::Confirmed, describe),
        }
    }
}

fn run<F>(name: &'static str, graphs: &[Graph], f: F) -> SuiteResult
where
    F: Fn(&Graph, &mut Tally) -> Result<()> + Sync,
{
    let mut result = graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            if let Err(e) = f(g, &mut t) {
                t.check(false, || format!("error {e} on {}", one_line(g)));
            }
            t.inner
        })
        .reduce(SuiteResult::default, SuiteResult::merge);
    result.name = name;
    result
}

/// Compact single-line rendering of a graph for failure messages.
pub fn one_line(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("[n={} t={} e={}]", g.order(), g.terminals(), edges.join(","))
}

/// Every choice of two terminals on `g`.
pub fn terminal_placements(g: &Graph) -> Vec<Graph> {
    let alive = g.alive().to_vec();
    let mut out = Vec::new();
    for (i, &a) in alive.iter().enumerate() {
        for &b in &alive[i + 1..] {
            let mut h = g.clone();
            h.set_terminals(VertexSet::from_iter([a, b])).expect("alive vertices");
            out.push(h);
        }
    }
    out
}

fn without_terminals(g: &Graph) -> Graph {
    let mut h = g.clone();
    h.set_terminals(VertexSet::EMPTY).expect("empty set");
    h
}

fn subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = s.to_vec();
    (0u64..1 << members.len()).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Every fact from every detector, and every fill-in step, confirmed by the
/// oracles for all terminal placements.
pub fn detector_soundness(graphs: &[Graph]) -> SuiteResult {
    run("detector soundness", graphs, |base, t| {
        for g in terminal_placements(base) {
            for fact in detect_all(&g)? {
                let v = verify_fact(&g, &fact)?;
                t.verdict(v, || format!("{fact} on {}", one_line(&g)));
            }
            for step in fill_in(&g)?.steps {
                let v = step.verify()?;
                t.verdict(v, || format!("fill-in {} on {}", step.fact, one_line(&step.graph)));
            }
        }
        Ok(())
    })
}

/// Fill-in keeps the winner for both movers.
pub fn fill_in_preservation(graphs: &[Graph]) -> SuiteResult {
    run("fill-in preserves win value", graphs, |base, t| {
        for g in terminal_placements(base) {
            let reduced = fill_in(&g)?.reduced;
            for p in [Player::Short, Player::Cut] {
                let before = solve_graph(&g, p)?;
                let after = solve_graph(&reduced, p)?;
                t.check(before == after, || {
                    format!("{p} to move: {before} vs {after} on {}", one_line(&g))
                });
            }
        }
        Ok(())
    })
}

/// On two-vertex areas, domination coincides with threat and support.
pub fn domination_equivalence(graphs: &[Graph]) -> SuiteResult {
    run("two-vertex domination equals threat/support", graphs, |base, t| {
        let g = without_terminals(base);
        for v in g.alive().iter() {
            for w in g.alive().without(v).iter() {
                let pair = VertexSet::from_iter([v, w]);
                let d = dominates(&g, v, pair)?;
                let (a, b) = (VertexSet::singleton(v), VertexSet::singleton(w));
                let threat = threatens_by_definition(&g, a, b)?;
                let support = supports_by_definition(&g, a, b)?;
                t.check(d.cut == threat, || {
                    format!("{v} cut-dominates {pair}: {} vs threat {threat} on {}", d.cut, one_line(&g))
                });
                t.check(d.short == support, || {
                    format!("{v} short-dominates {pair}: {} vs support {support} on {}", d.short, one_line(&g))
                });
            }
        }
        Ok(())
    })
}

/// The fast threat, support and triangle tests agree with the defining
/// graph identities for all disjoint nonempty vertex sets.
pub fn fast_path_agreement(graphs: &[Graph]) -> SuiteResult {
    run("threat/support fast paths", graphs, |base, t| {
        let g = without_terminals(base);
        let n = g.alive().len() as u32;
        // Assign each vertex to A (1), B (2) or neither (0).
        for code in 0..3u64.pow(n) {
            let (mut a, mut b, mut c) = (VertexSet::EMPTY, VertexSet::EMPTY, code);
            for v in g.alive().iter() {
                match c % 3 {
                    1 => a.insert(v),
                    2 => b.insert(v),
                    _ => {}
                }
                c /= 3;
            }
            if b.is_empty() {
                continue;
            }
            let fast = threatens(&g, a, b)?;
            let slow = threatens_by_definition(&g, a, b)?;
            t.check(fast == slow, || format!("threat {a} -> {b} on {}", one_line(&g)));
            let fast = supports(&g, a, b)?;
            let slow = supports_by_definition(&g, a, b)?;
            t.check(fast == slow, || format!("support {a} -> {b} on {}", one_line(&g)));
        }
        for v in g.alive().iter() {
            for s in subsets(g.neighbours(v)) {
                let by_count = threat_by_triangles(&g, v, s)?;
                let by_clique = threatens(&g, s, VertexSet::singleton(v))?;
                t.check(by_count == by_clique, || {
                    format!("triangle test {s} -> {v} on {}", one_line(&g))
                });
            }
        }
        Ok(())
    })
}

fn three_and_four_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    subsets(g.alive()).filter(|s| s.len() == k).collect()
}

/// If two vertices of a three-vertex area dominate it for a player, so does
/// the third.
pub fn three_domination(graphs: &[Graph]) -> SuiteResult {
    run("three-vertex domination", graphs, |base, t| {
        let g = without_terminals(base);
        for s in three_and_four_sets(&g, 3) {
            let doms = s
                .iter()
                .map(|v| dominates(&g, v, s))
                .collect::<Result<Vec<_>>>()?;
            for p in [Player::Short, Player::Cut] {
                let count = doms.iter().filter(|d| d.for_player(p)).count();
                if count >= 2 {
                    t.check(count == 3, || format!("{p} on {s} in {}", one_line(&g)));
                }
            }
        }
        Ok(())
    })
}

/// If two vertices of a four-vertex area dominate it for a player, and the
/// final position with that player on exactly those two is not a win for
/// them, the player wins the area moving second.
pub fn four_domination(graphs: &[Graph]) -> SuiteResult {
    run("four-vertex domination", graphs, |base, t| {
        let g = without_terminals(base);
        for s in three_and_four_sets(&g, 4) {
            let m = MultiGame::new(&g, s)?;
            let members = s.to_vec();
            for p in [Player::Short, Player::Cut] {
                let dominating: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&v| dominates(&g, v, s).map(|d| d.for_player(p)).unwrap_or(false))
                    .collect();
                for (i, &a) in dominating.iter().enumerate() {
                    for &b in &dominating[i + 1..] {
                        let both = VertexSet::from_iter([a, b]);
                        let shorted = if p == Player::Short { both } else { s - both };
                        let end = m.final_outcome(shorted)?;
                        let p_wins_end = match p {
                            Player::Short => end.is_short_win(),
                            Player::Cut => end.is_cut_win(),
                        };
                        if p_wins_end {
                            continue;
                        }
                        let second = m.solve(p.other());
                        let ok = match p {
                            Player::Short => second.is_short_win(),
                            Player::Cut => second.is_cut_win(),
                        };
                        t.check(ok, || format!("{p} via {a},{b} on {s} in {}", one_line(&g)));
                    }
                }
            }
        }
        Ok(())
    })
}

/// A vertex is dead exactly when all its incident edges are dead.
pub fn dead_vertex_edge_consistency(graphs: &[Graph]) -> SuiteResult {
    run("dead vertex iff incident edges dead", graphs, |base, t| {
        for g in terminal_placements(base) {
            for v in g.non_terminals().iter() {
                let vertex = is_dead_vertex_oracle(&g, v)?;
                let mut edges = true;
                for w in g.neighbours(v).iter() {
                    edges &= is_dead_edge_oracle(&g, v, w)?;
                }
                t.check(vertex == edges, || format!("vertex {v} on {}", one_line(&g)));
            }
        }
        Ok(())
    })
}

/// Shorting a captured set or cutting a lost set keeps the winner.
pub fn capture_pruning(graphs: &[Graph]) -> SuiteResult {
    run("captured/lost sets may be filled in", graphs, |base, t| {
        for g in terminal_placements(base) {
            let winners = [
                solve_graph(&g, Player::Short)?,
                solve_graph(&g, Player::Cut)?,
            ];
            for s in subsets(g.non_terminals()).filter(|s| !s.is_empty()) {
                let mut check = |h: Graph, what: &str| -> Result<()> {
                    for (i, p) in [Player::Short, Player::Cut].into_iter().enumerate() {
                        let w = solve_graph(&h, p)?;
                        t.check(w == winners[i], || {
                            format!("{what} {s}, {p} to move, on {}", one_line(&g))
                        });
                    }
                    Ok(())
                };
                if is_captured(&g, s)? {
                    check(g.short_set(s)?, "captured")?;
                }
                if is_lost(&g, s)? {
                    check(g.cut_set(s)?, "lost")?;
                }
            }
        }
        Ok(())
    })
}

/// Adding an edge never turns a Short win into a Cut win.
pub fn edge_monotonicity(graphs: &[Graph]) -> SuiteResult {
    run("adding an edge helps Short", graphs, |base, t| {
        for g in terminal_placements(base) {
            let alive = g.alive().to_vec();
            for (i, &u) in alive.iter().enumerate() {
                for &v in &alive[i + 1..] {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let h = g.plus_edge(u, v)?;
                    for p in [Player::Short, Player::Cut] {
                        let before = solve_graph(&g, p)?;
                        let after = solve_graph(&h, p)?;
                        t.check(before == Player::Cut || after == Player::Short, || {
                            format!("adding {u}-{v}, {p} to move, on {}", one_line(&g))
                        });
                    }
                }
            }
        }
        Ok(())
    })
}

/// Threats survive any move outside the threatening set and Cut moves
/// inside it; supports survive any move outside the supporting set and
/// Short moves inside it.
pub fn robustness(graphs: &[Graph]) -> SuiteResult {
    run("threat/support robustness", graphs, |base, t| {
        let g = without_terminals(base);
        let n = g.alive().len() as u32;
        for code in 0..3u64.pow(n) {
            let (mut a, mut b, mut c) = (VertexSet::EMPTY, VertexSet::EMPTY, code);
            for v in g.alive().iter() {
                match c % 3 {
                    1 => a.insert(v),
                    2 => b.insert(v),
                    _ => {}
                }
                c /= 3;
            }
            if b.is_empty() {
                continue;
            }
            let threat = threatens_by_definition(&g, a, b)?;
            let support = supports_by_definition(&g, a, b)?;
            if !threat && !support {
                continue;
            }
            for x in g.alive().iter() {
                let rest = b.without(x);
                let moves: &[Player] = if a.contains(x) {
                    &[]
                } else {
                    &[Player::Short, Player::Cut]
                };
                for &p in moves {
                    if rest.is_empty() {
                        continue;
                    }
                    let h = if p == Player::Short { g.short(x)? } else { g.cut(x)? };
                    if threat {
                        t.check(threatens_by_definition(&h, a, rest)?, || {
                            format!("{a} threatens {b}, lost after {p} {x} on {}", one_line(&g))
                        });
                    }
                    if support {
                        t.check(supports_by_definition(&h, a, rest)?, || {
                            format!("{a} supports {b}, lost after {p} {x} on {}", one_line(&g))
                        });
                    }
                }
                if a.contains(x) {
                    let smaller = a.without(x);
                    if threat {
                        let h = g.cut(x)?;
                        t.check(threatens_by_definition(&h, smaller, b)?, || {
                            format!("{a} threatens {b}, lost after cut {x} on {}", one_line(&g))
                        });
                    }
                    if support {
                        let h = g.short(x)?;
                        t.check(supports_by_definition(&h, smaller, b)?, || {
                            format!("{a} supports {b}, lost after short {x} on {}", one_line(&g))
                        });
                    }
                }
            }
        }
        Ok(())
    })
}
