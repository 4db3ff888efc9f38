//! Threats and supports, and the captured/lost sets built from them.

use crate::detect::{Fact, FactKind, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::Player;

fn validate_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<()> {
    g.check_vertices(a | b)?;
    if let Some(t) = ((a | b) & g.terminals()).first() {
        return Err(Error::TerminalInSet(t));
    }
    if a.intersects(b) {
        return Err(Error::PreconditionFailed(format!(
            "sets {a} and {b} are not disjoint"
        )));
    }
    Ok(())
}

/// `A` threatens `B`: `G - A * B = G - A - B`. Decided per connected
/// component `Bᵢ` of `B` by testing whether `Γ(Bᵢ) \ A` is a clique.
pub fn threatens(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    validate_pair(g, a, b)?;
    Ok(g
        .connected_components(b)
        .into_iter()
        .all(|c| g.is_clique(g.neighbourhood(c) - a)))
}

/// The threat relation evaluated literally on reduced graphs.
pub fn threatens_by_definition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    validate_pair(g, a, b)?;
    let minus_a = g.cut_set_unchecked(a);
    Ok(minus_a.short_set_unchecked(b) == minus_a.cut_set_unchecked(b))
}

/// Neighbours of `B` adjacent to every other neighbour of `B`.
fn surrounding_neighbours(g: &Graph, b: VertexSet) -> VertexSet {
    let nb = g.neighbourhood(b);
    nb.iter()
        .filter(|&x| nb.without(x).is_subset(g.neighbours(x)))
        .collect()
}

/// `A` supports `B`: `G * A - B = G * A * B`.
///
/// When `A` is connected and not adjacent to `B`, this holds iff every
/// neighbour of each component of `B` that fails to surround it is adjacent
/// to `A`. Otherwise the components of `B` are re-examined in `G * A`.
pub fn supports(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    validate_pair(g, a, b)?;
    if g.is_connected_set(a) && !g.neighbourhood(a).intersects(b) {
        let na = g.neighbourhood(a);
        return Ok(g
            .connected_components(b)
            .into_iter()
            .all(|c| (g.neighbourhood(c) - surrounding_neighbours(g, c)).is_subset(na)));
    }
    let h = g.short_set_unchecked(a);
    Ok(h.connected_components(b)
        .into_iter()
        .all(|c| h.is_clique(h.neighbourhood(c))))
}

/// The support relation evaluated literally on reduced graphs.
pub fn supports_by_definition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    validate_pair(g, a, b)?;
    let star_a = g.short_set_unchecked(a);
    Ok(star_a.cut_set_unchecked(b) == star_a.short_set_unchecked(b))
}

#[inline]
pub(crate) fn vertex_threatens(g: &Graph, a: usize, b: usize) -> bool {
    g.is_clique(g.neighbours(b).without(a))
}

pub(crate) fn vertex_supports(g: &Graph, a: usize, b: usize) -> bool {
    let mut h = g.clone();
    h.short_unchecked(a);
    h.is_clique(h.neighbours(b))
}

/// Triangle-number test: the neighbours `s` of `v` threaten `v` iff they
/// carry `T(v) - (d-n)(d-n-1)/2 + m` 2-walks to `v` in total, where
/// `n = |s|` and `m` counts edges inside `s`.
pub fn threat_by_triangles(g: &Graph, v: usize, s: VertexSet) -> Result<bool> {
    validate_pair(g, s, VertexSet::singleton(v))?;
    if !s.is_subset(g.neighbours(v)) {
        return Err(Error::PreconditionFailed(format!(
            "{s} is not a subset of the neighbours of {v}"
        )));
    }
    let d = g.degree(v) as i64;
    let n = s.len() as i64;
    let m = (s.iter().map(|u| (g.neighbours(u) & s).len()).sum::<usize>() / 2) as i64;
    let x = g.triangle_count(v) as i64 - (d - n) * (d - n - 1) / 2;
    let walks = s.iter().map(|u| g.two_walks(u, v)).sum::<usize>() as i64;
    Ok(walks == x + m)
}

/// Non-terminal vertices that threaten `{v}` on their own. If `Γ(v)` is a
/// clique every other vertex does; otherwise only neighbours can, and they
/// are found with the single-neighbour triangle count.
pub fn threats_to_vertex(g: &Graph, v: usize) -> VertexSet {
    let nb = g.neighbours(v);
    let free = g.non_terminals().without(v);
    if g.is_clique(nb) {
        return free;
    }
    let d = nb.len();
    let need = g.triangle_count(v) as i64 - ((d - 1) * (d.saturating_sub(2)) / 2) as i64;
    (nb & free)
        .iter()
        .filter(|&u| g.two_walks(u, v) as i64 == need)
        .collect()
}

/// If `A` threatens `B`, then `Γ(A) \ B` threatens `A ∪ B` whenever the
/// union of the component neighbourhoods seen from `A` stays a clique. The
/// returned pair is checked, and a `PreconditionFailed` error reports a
/// pair for which the transfer does not hold.
pub fn threat_transfer(g: &Graph, a: VertexSet, b: VertexSet) -> Result<(VertexSet, VertexSet)> {
    if !threatens(g, a, b)? {
        return Err(Error::PreconditionFailed(format!("{a} does not threaten {b}")));
    }
    let new_a = g.neighbourhood(a) - b;
    if let Some(t) = (new_a & g.terminals()).first() {
        return Err(Error::PreconditionFailed(format!(
            "the neighbourhood of {a} contains terminal {t}"
        )));
    }
    let new_b = a | b;
    if !threatens(g, new_a, new_b)? {
        return Err(Error::PreconditionFailed(format!(
            "{new_a} does not threaten {new_b}: the threat on {b} does not transfer"
        )));
    }
    Ok((new_a, new_b))
}

/// Pairs of non-terminal vertices that threaten (support) each other are
/// lost (captured).
pub fn mutual_pair_reduce(g: &Graph) -> Vec<Fact> {
    let free = g.non_terminals();
    let mut facts = Vec::new();
    for u in free.iter() {
        for v in (free - VertexSet::range(u + 1)).iter() {
            let pair = VertexSet::from_iter([u, v]);
            if vertex_threatens(g, u, v) && vertex_threatens(g, v, u) {
                facts.push(Fact::new(FactKind::Lost(pair), Rule::MutualThreat));
            }
            if vertex_supports(g, u, v) && vertex_supports(g, v, u) {
                facts.push(Fact::new(FactKind::Captured(pair), Rule::MutualSupport));
            }
        }
    }
    facts
}

/// Degree-3 non-terminal vertices with non-terminal neighbours: threatening
/// all three neighbours makes the closed neighbourhood lost; threatening
/// exactly two puts the vertex in a set cut-dominated by the third.
pub fn degree3_collapse(g: &Graph) -> Vec<Fact> {
    let mut facts = Vec::new();
    for v in g.non_terminals().iter() {
        let nb = g.neighbours(v);
        if nb.len() != 3 || nb.intersects(g.terminals()) {
            continue;
        }
        let threatened: VertexSet = nb.iter().filter(|&a| vertex_threatens(g, v, a)).collect();
        let closed = nb.with(v);
        match threatened.len() {
            3 => facts.push(Fact::new(FactKind::Lost(closed), Rule::Degree3Threat)),
            2 => {
                let w = (nb - threatened).first().expect("one unthreatened neighbour");
                facts.push(Fact::new(FactKind::CutDominates(w, closed), Rule::Degree3Dominate));
            }
            _ => {}
        }
    }
    facts
}

/// Pair-set test for explicitly given pairs `(aᵢ, bᵢ)`. For Cut each `aᵢ`
/// must threaten `bᵢ` and `B` must threaten `A`, giving a lost set; for
/// Short each `aᵢ` must support `bᵢ` and `B` must support `A`, giving a
/// captured set.
pub fn pairset_reduce(g: &Graph, pairs: &[(usize, usize)], player: Player) -> Result<Option<Fact>> {
    let mut a_set = VertexSet::EMPTY;
    let mut b_set = VertexSet::EMPTY;
    for &(a, b) in pairs {
        validate_pair(g, VertexSet::singleton(a), VertexSet::singleton(b))?;
        if (a_set | b_set).contains(a) || (a_set | b_set).contains(b) {
            return Err(Error::PreconditionFailed(format!("pair ({a}, {b}) overlaps another pair")));
        }
        a_set.insert(a);
        b_set.insert(b);
    }
    if pairs.is_empty() {
        return Ok(None);
    }
    let dominated = |&(a, b): &(usize, usize)| match player {
        Player::Cut => vertex_threatens(g, a, b),
        Player::Short => vertex_supports(g, a, b),
    };
    if !pairs.iter().all(dominated) {
        return Ok(None);
    }
    Ok(match player {
        Player::Cut if threatens(g, b_set, a_set)? => {
            Some(Fact::new(FactKind::Lost(a_set | b_set), Rule::PairSet))
        }
        Player::Short if supports(g, b_set, a_set)? => {
            Some(Fact::new(FactKind::Captured(a_set | b_set), Rule::PairSet))
        }
        _ => None,
    })
}

/// Most dominated pairs considered by [`find_pairset`].
const PAIRSET_CANDIDATES: usize = 48;
/// Most pairs combined by [`find_pairset`].
const PAIRSET_MAX_PAIRS: usize = 3;

/// Searches combinations of two or three disjoint dominated pairs, in
/// ascending lexicographic order, for a pair-set certificate. Returns at
/// most one fact per player.
pub fn find_pairset(g: &Graph) -> Vec<Fact> {
    let free = g.non_terminals();
    let mut facts = Vec::new();
    for player in [Player::Cut, Player::Short] {
        let mut candidates = Vec::new();
        'outer: for a in free.iter() {
            for b in free.without(a).iter() {
                let ok = match player {
                    Player::Cut => vertex_threatens(g, a, b),
                    Player::Short => vertex_supports(g, a, b),
                };
                if ok {
                    candidates.push((a, b));
                    if candidates.len() == PAIRSET_CANDIDATES {
                        break 'outer;
                    }
                }
            }
        }
        let mut chosen = Vec::new();
        for k in 2..=PAIRSET_MAX_PAIRS {
            if let Some(f) = search_pairs(g, &candidates, player, k, 0, &mut chosen) {
                facts.push(f);
                break;
            }
        }
    }
    facts
}

fn search_pairs(
    g: &Graph,
    candidates: &[(usize, usize)],
    player: Player,
    k: usize,
    start: usize,
    chosen: &mut Vec<(usize, usize)>,
) -> Option<Fact> {
    if chosen.len() == k {
        return pairset_reduce(g, chosen, player).ok().flatten();
    }
    let used: VertexSet = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
    for i in start..candidates.len() {
        let (a, b) = candidates[i];
        if used.contains(a) || used.contains(b) {
            continue;
        }
        chosen.push((a, b));
        let found = search_pairs(g, candidates, player, k, i + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
