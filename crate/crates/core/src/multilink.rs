//! Multi-links: a carrier of free vertices on which Short can make a set of
//! link terminals into a clique, composed with the OR and AND rules.
//!
//! The restricted game behind a link is played on the subgraph induced by
//! carrier and terminals, with moves confined to the carrier. Short wins
//! when the terminals form a clique.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{LocalGame, MultiOutcome, Player};

/// Largest carrier [`verify_link`] will search.
pub const LINK_CARRIER_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strength {
    Weak,
    Strong,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strength::Weak => "weak",
            Strength::Strong => "strong",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiLink {
    pub carrier: VertexSet,
    pub terminals: VertexSet,
    pub strength: Strength,
    /// Carrier vertices whose shorting leaves a strong link. Empty for
    /// strong links.
    pub pivots: VertexSet,
}

impl MultiLink {
    pub fn strong(carrier: VertexSet, terminals: VertexSet) -> MultiLink {
        MultiLink {
            carrier,
            terminals,
            strength: Strength::Strong,
            pivots: VertexSet::EMPTY,
        }
    }

    pub fn weak(carrier: VertexSet, terminals: VertexSet, pivots: VertexSet) -> MultiLink {
        MultiLink {
            carrier,
            terminals,
            strength: Strength::Weak,
            pivots,
        }
    }
}

impl fmt::Display for MultiLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} -> {}", self.strength, self.carrier, self.terminals)?;
        if !self.pivots.is_empty() {
            write!(f, " pivots {}", self.pivots)?;
        }
        Ok(())
    }
}

fn check_link(g: &Graph, carrier: VertexSet, terminals: VertexSet) -> Result<()> {
    g.check_playable(carrier)?;
    g.check_vertices(terminals)?;
    if carrier.intersects(terminals) {
        return Err(Error::PreconditionFailed(format!(
            "carrier {carrier} meets the link terminals {terminals}"
        )));
    }
    if carrier.len() > LINK_CARRIER_CAP {
        return Err(Error::TooLarge {
            what: "link carrier",
            size: carrier.len(),
            cap: LINK_CARRIER_CAP,
        });
    }
    Ok(())
}

/// Whether Short makes `terminals` a clique in the restricted game.
fn short_links(g: &Graph, carrier: VertexSet, terminals: VertexSet, first: Player) -> bool {
    let goal: Vec<VertexSet> = terminals.iter().map(|t| terminals.without(t)).collect();
    let h = g.induced(carrier | terminals);
    LocalGame::new(terminals, goal, None).outcome(&h, carrier, first) == MultiOutcome::ShortWin
}

/// The strength of the link `carrier -> terminals`, or `None` when Short
/// cannot force the clique even moving first.
pub fn link_strength(g: &Graph, carrier: VertexSet, terminals: VertexSet) -> Result<Option<Strength>> {
    check_link(g, carrier, terminals)?;
    Ok(if short_links(g, carrier, terminals, Player::Cut) {
        Some(Strength::Strong)
    } else if short_links(g, carrier, terminals, Player::Short) {
        Some(Strength::Weak)
    } else {
        None
    })
}

/// Carrier vertices whose shorting turns the link into a strong one.
pub fn find_pivots(g: &Graph, carrier: VertexSet, terminals: VertexSet) -> Result<VertexSet> {
    check_link(g, carrier, terminals)?;
    Ok(carrier
        .iter()
        .filter(|&p| {
            let mut h = g.clone();
            h.short_unchecked(p);
            short_links(&h, carrier.without(p), terminals, Player::Cut)
        })
        .collect())
}

/// Plays the restricted game exactly. A strong link must be won by Short
/// moving first and second; a weak link moving first only, with every
/// listed pivot leaving a strong link.
pub fn verify_link(g: &Graph, link: &MultiLink) -> Result<bool> {
    let actual = link_strength(g, link.carrier, link.terminals)?;
    Ok(match link.strength {
        Strength::Strong => actual == Some(Strength::Strong),
        Strength::Weak => {
            actual == Some(Strength::Weak)
                && !link.pivots.is_empty()
                && link
                    .pivots
                    .is_subset(find_pivots(g, link.carrier, link.terminals)?)
        }
    })
}

/// Links with the same terminals and no carrier vertex common to all of
/// them combine into a strong link on the union of their carriers.
pub fn or_rule(links: &[MultiLink]) -> Result<MultiLink> {
    let Some(first) = links.first() else {
        return Err(Error::PreconditionFailed("or-rule needs at least one link".into()));
    };
    if let Some(l) = links.iter().find(|l| l.terminals != first.terminals) {
        return Err(Error::PreconditionFailed(format!(
            "link terminals differ: {} and {}",
            first.terminals, l.terminals
        )));
    }
    let common = links.iter().fold(first.carrier, |acc, l| acc & l.carrier);
    if !common.is_empty() {
        return Err(Error::PreconditionFailed(format!(
            "carriers share {common}"
        )));
    }
    let carrier = links.iter().fold(VertexSet::EMPTY, |acc, l| acc | l.carrier);
    Ok(MultiLink::strong(carrier, first.terminals))
}

/// Two strong links with disjoint carriers and overlapping terminals give
/// a weak link between the terminals they do not share, pivoted by any
/// shared terminal. The shared terminals become part of the carrier, since
/// the pivot must be playable.
pub fn and_rule(l1: &MultiLink, l2: &MultiLink) -> Result<MultiLink> {
    if l1.strength != Strength::Strong || l2.strength != Strength::Strong {
        return Err(Error::PreconditionFailed("and-rule needs two strong links".into()));
    }
    let shared = l1.terminals & l2.terminals;
    if shared.is_empty() {
        return Err(Error::PreconditionFailed("link terminals are disjoint".into()));
    }
    if l1.carrier.intersects(l2.carrier) {
        return Err(Error::PreconditionFailed(format!(
            "carriers share {}",
            l1.carrier & l2.carrier
        )));
    }
    if (l1.carrier | l2.carrier).intersects(l1.terminals | l2.terminals) {
        return Err(Error::PreconditionFailed(
            "a carrier meets the other link's terminals".into(),
        ));
    }
    Ok(MultiLink::weak(
        l1.carrier | l2.carrier | shared,
        l1.terminals ^ l2.terminals,
        shared,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn empty_carrier_on_clique_is_strong() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(verify_link(&g, &MultiLink::strong(VertexSet::EMPTY, set(&[0, 1, 2]))).unwrap());
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(link_strength(&g, VertexSet::EMPTY, set(&[0, 1, 2])).unwrap(), None);
    }

    #[test]
    fn single_connector_is_weak_with_itself_as_pivot() {
        let g = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let (c, t) = (set(&[3]), set(&[0, 1, 2]));
        assert_eq!(find_pivots(&g, c, t).unwrap(), c);
        assert!(verify_link(&g, &MultiLink::weak(c, t, c)).unwrap());
        assert!(!verify_link(&g, &MultiLink::strong(c, t)).unwrap());
    }

    #[test]
    fn parallel_connectors_or_to_strong() {
        let g = Graph::from_edges(4, &[(0, 2), (2, 1), (0, 3), (3, 1)]).unwrap();
        let t = set(&[0, 1]);
        let a = MultiLink::weak(set(&[2]), t, set(&[2]));
        let b = MultiLink::weak(set(&[3]), t, set(&[3]));
        let l = or_rule(&[a.clone(), b]).unwrap();
        assert_eq!(l, MultiLink::strong(set(&[2, 3]), t));
        assert!(verify_link(&g, &l).unwrap());
        assert!(or_rule(&[a.clone(), a]).is_err());
    }

    #[test]
    fn or_rule_rejects_mismatched_terminals() {
        let a = MultiLink::weak(set(&[2]), set(&[0, 1]), set(&[2]));
        let b = MultiLink::weak(set(&[3]), set(&[0, 4]), set(&[3]));
        assert!(or_rule(&[a, b]).is_err());
    }

    #[test]
    fn chained_strong_links_and_to_weak() {
        // 0 = {1,2} = 3 = {4,5} = 6: strong links to the midpoint 3
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        let l1 = MultiLink::strong(set(&[1, 2]), set(&[0, 3]));
        let l2 = MultiLink::strong(set(&[4, 5]), set(&[3, 6]));
        assert!(verify_link(&g, &l1).unwrap() && verify_link(&g, &l2).unwrap());
        let l = and_rule(&l1, &l2).unwrap();
        assert_eq!(l.terminals, set(&[0, 6]));
        assert_eq!(l.pivots, set(&[3]));
        assert!(verify_link(&g, &l).unwrap());
        assert!(and_rule(&l1, &l1).is_err());
    }

    #[test]
    fn oversized_carrier_rejected() {
        let g = Graph::new(16).unwrap();
        let err = link_strength(&g, VertexSet::range(13), set(&[14, 15])).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }
}
