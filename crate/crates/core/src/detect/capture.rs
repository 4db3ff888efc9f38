//! Captured sets certified by Short first-player wins on subsets with empty
//! total intersection.

use std::collections::BTreeSet;

use crate::detect::{Fact, FactKind, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{LocalGame, MultiGame, Player, MultiOutcome};

/// Largest area whose subsets are enumerated.
const OR_RULE_AREA_CAP: usize = 12;
/// Largest subset tried as a Short connector.
const OR_RULE_SUBSET_CAP: usize = 4;
/// Largest area searched by [`find_or_rule_capture`].
const OR_RULE_SEARCH_CAP: usize = 4;

fn short_wins_on(m: &MultiGame, u: VertexSet) -> bool {
    let t = m.link_terminals();
    let mut game = LocalGame::new(t, m.short_target().to_vec(), None);
    let h = m.graph().induced(u | t);
    game.outcome(&h, u, Player::Short) == MultiOutcome::ShortWin
}

/// True iff Short wins the multi-Shannon game on `s` moving first while
/// play is confined to each of `subsets` in turn, and the subsets have an
/// empty common intersection. Then `s` is captured.
pub fn or_rule_capture(g: &Graph, s: VertexSet, subsets: &[VertexSet]) -> Result<bool> {
    let m = MultiGame::new(g, s)?;
    if let Some(u) = subsets.iter().find(|u| !u.is_subset(s)) {
        return Err(Error::PreconditionFailed(format!(
            "subset {u} is not contained in the area {s}"
        )));
    }
    if subsets.is_empty() {
        return Ok(false);
    }
    let common = subsets.iter().fold(s, |acc, &u| acc & u);
    Ok(common.is_empty() && subsets.iter().all(|&u| short_wins_on(&m, u)))
}

/// Connected subsets of `s` with at most four vertices that are adjacent to
/// every link terminal of the game on `s`.
pub fn or_rule_candidates(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>> {
    if s.len() > OR_RULE_AREA_CAP {
        return Err(Error::TooLarge {
            what: "or-rule area",
            size: s.len(),
            cap: OR_RULE_AREA_CAP,
        });
    }
    let t = g.neighbourhood(s);
    Ok(connected_subsets(g, s, OR_RULE_SUBSET_CAP)
        .into_iter()
        .filter(|&u| t.is_subset(g.neighbourhood(u)))
        .collect())
}

/// Connected induced subsets of `within` with between 1 and `max` members,
/// in ascending order.
pub(crate) fn connected_subsets(g: &Graph, within: VertexSet, max: usize) -> Vec<VertexSet> {
    let mut all: BTreeSet<VertexSet> = BTreeSet::new();
    let mut layer: BTreeSet<VertexSet> = within.iter().map(VertexSet::singleton).collect();
    for _ in 0..max {
        if layer.is_empty() {
            break;
        }
        let mut next = BTreeSet::new();
        for &c in &layer {
            if all.insert(c) && c.len() < max {
                for v in (g.neighbourhood(c) & within).iter() {
                    next.insert(c.with(v));
                }
            }
        }
        layer = next;
    }
    all.extend(layer);
    all.into_iter().collect()
}

/// Captured sets among connected terminal-free sets of two to four
/// vertices, certified with the subsets from [`or_rule_candidates`] on
/// which Short wins. Dead areas are left to the dead-vertex rules.
pub fn find_or_rule_capture(g: &Graph) -> Result<Vec<Fact>> {
    let mut facts = Vec::new();
    for s in connected_subsets(g, g.non_terminals(), OR_RULE_SEARCH_CAP) {
        if s.len() < 2 {
            continue;
        }
        let m = MultiGame::new(g, s)?;
        if m.targets_coincide() || m.link_terminals().len() < 2 {
            continue;
        }
        let mut common = s;
        let mut any = false;
        for u in or_rule_candidates(g, s)? {
            // A subset containing the running intersection cannot shrink it.
            if !common.is_subset(u) && short_wins_on(&m, u) {
                common &= u;
                any = true;
            }
            if any && common.is_empty() {
                break;
            }
        }
        if any && common.is_empty() {
            facts.push(Fact::new(FactKind::Captured(s), Rule::OrRule));
        }
    }
    Ok(facts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::is_captured;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn parallel_connectors() {
        // terminals 0 and 3 each joined to both 1 and 2, which are adjacent
        let g = Graph::with_terminals(4, &[(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)], &[0, 3])
            .unwrap();
        let s = set(&[1, 2]);
        assert!(or_rule_capture(&g, s, &[set(&[1]), set(&[2])]).unwrap());
        assert!(!or_rule_capture(&g, s, &[set(&[1]), set(&[1, 2])]).unwrap());
        assert!(is_captured(&g, s).unwrap());
        let found = find_or_rule_capture(&g).unwrap();
        assert!(found.contains(&Fact::new(FactKind::Captured(s), Rule::OrRule)));
    }

    #[test]
    fn subset_outside_area_rejected() {
        let g = Graph::with_terminals(4, &[(0, 1), (1, 3), (0, 2), (2, 3)], &[0, 3]).unwrap();
        assert!(or_rule_capture(&g, set(&[1]), &[set(&[2])]).is_err());
    }

    #[test]
    fn connected_subsets_of_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let subs = connected_subsets(&g, g.alive(), 2);
        assert_eq!(subs.len(), 7);
        assert!(!subs.contains(&set(&[0, 2])));
    }
}
