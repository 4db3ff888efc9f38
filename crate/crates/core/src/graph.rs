//! Simple graphs with stable vertex indices, designated terminals, and the
//! two game transformations: cutting (deleting) and shorting a vertex.
//!
//! A removed vertex keeps its index; its alive bit is cleared and its
//! adjacency row and column are zeroed. Positions reached during play can
//! therefore be compared label-for-label with `==`.

use std::fmt;
use std::ops::{
    BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, BitXorAssign, Not, Sub, SubAssign,
};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 128;

/// A set of vertex indices in `0..128`, stored as a single bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u128 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        if n >= MAX_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated ascending indices; the empty set prints as `-`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
set_op!(BitXor, bitxor, BitXorAssign, bitxor_assign, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// A simple graph on vertex indices `0..order` with a liveness mask and a
/// terminal set. Equality is labelled equality, not isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    alive: VertexSet,
    adj: Vec<VertexSet>,
    terminals: VertexSet,
}

impl Graph {
    /// Edgeless graph with all `order` vertices alive and no terminals.
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            alive: VertexSet::range(order),
            adj: vec![VertexSet::EMPTY; order],
            terminals: VertexSet::EMPTY,
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph and designates terminals in one step.
    pub fn with_terminals(order: usize, edges: &[(usize, usize)], terminals: &[usize]) -> Result<Self> {
        let mut g = Graph::from_edges(order, edges)?;
        g.set_terminals(terminals.iter().collect())?;
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn alive(&self) -> VertexSet {
        self.alive
    }

    #[inline]
    pub fn terminals(&self) -> VertexSet {
        self.terminals
    }

    /// Alive vertices that are not terminals.
    #[inline]
    pub fn non_terminals(&self) -> VertexSet {
        self.alive - self.terminals
    }

    /// The two terminals of a Shannon game, if exactly two are designated.
    pub fn terminal_pair(&self) -> Option<(usize, usize)> {
        if self.terminals.len() != 2 {
            return None;
        }
        let mut it = self.terminals.iter();
        Some((it.next()?, it.next()?))
    }

    pub fn set_terminals(&mut self, terminals: VertexSet) -> Result<()> {
        self.check_vertices(terminals)?;
        self.terminals = terminals;
        Ok(())
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.alive.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alive.iter().flat_map(move |u| {
            (self.adj[u] - VertexSet::range(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        if !self.alive.contains(v) {
            return Err(Error::NotAlive(v));
        }
        Ok(())
    }

    pub(crate) fn check_vertices(&self, s: VertexSet) -> Result<()> {
        if let Some(v) = (s - VertexSet::range(self.order)).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        if let Some(v) = (s - self.alive).first() {
            return Err(Error::NotAlive(v));
        }
        Ok(())
    }

    /// Checks that `s` is alive and holds no terminal.
    pub(crate) fn check_playable(&self, s: VertexSet) -> Result<()> {
        self.check_vertices(s)?;
        if let Some(t) = (s & self.terminals).first() {
            return Err(Error::TerminalImmutable(t));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    /// `G + e`.
    pub fn plus_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// `G - e`.
    pub fn minus_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub(crate) fn delete_unchecked(&mut self, v: usize) {
        for u in self.adj[v].iter() {
            self.adj[u].remove(v);
        }
        self.adj[v] = VertexSet::EMPTY;
        self.alive.remove(v);
    }

    #[inline]
    pub(crate) fn short_unchecked(&mut self, v: usize) {
        let nb = self.adj[v];
        for u in nb.iter() {
            self.adj[u] |= nb.without(u);
        }
        self.delete_unchecked(v);
    }

    /// `G - v`: delete `v` and its incident edges.
    pub fn cut(&self, v: usize) -> Result<Graph> {
        self.check_playable(VertexSet::singleton_checked(v, self.order)?)?;
        let mut g = self.clone();
        g.delete_unchecked(v);
        Ok(g)
    }

    /// `G * v`: make the neighbourhood of `v` a clique, then delete `v`.
    pub fn short(&self, v: usize) -> Result<Graph> {
        self.check_playable(VertexSet::singleton_checked(v, self.order)?)?;
        let mut g = self.clone();
        g.short_unchecked(v);
        Ok(g)
    }

    /// `G - S`. Order-independent.
    pub fn cut_set(&self, s: VertexSet) -> Result<Graph> {
        self.check_playable(s)?;
        let mut g = self.clone();
        for v in s.iter() {
            g.delete_unchecked(v);
        }
        Ok(g)
    }

    /// `G * S`, shorting members in ascending index order.
    pub fn short_set(&self, s: VertexSet) -> Result<Graph> {
        self.check_playable(s)?;
        let mut g = self.clone();
        for v in s.iter() {
            g.short_unchecked(v);
        }
        Ok(g)
    }

    /// Open neighbourhood `Γ(S) = (∪ Γ(v)) \ S`.
    pub fn neighbourhood(&self, s: VertexSet) -> VertexSet {
        let mut n = VertexSet::EMPTY;
        for v in s.iter() {
            n |= self.adj[v];
        }
        n - s
    }

    /// Closed neighbourhood `Γ[S] = Γ(S) ∪ S`.
    pub fn neighbourhood_closed(&self, s: VertexSet) -> VertexSet {
        self.neighbourhood(s) | s
    }

    /// True iff every pair of members is adjacent. Empty sets and singletons
    /// are cliques.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// Number of triangles through `v`, i.e. edges inside `Γ(v)`.
    pub fn triangle_count(&self, v: usize) -> usize {
        let nb = self.adj[v];
        nb.iter().map(|u| (self.adj[u] & nb).len()).sum::<usize>() / 2
    }

    /// `A²(u, v)`: number of 2-walks between `u` and `v`.
    #[inline]
    pub fn two_walks(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).len()
    }

    /// `A³(u, v)`: number of 3-walks between `u` and `v`.
    pub fn three_walks(&self, u: usize, v: usize) -> usize {
        self.adj[v].iter().map(|x| self.two_walks(u, x)).sum()
    }

    /// True iff `w` surrounds `u`: `Γ(U) ⊆ Γ[w]`.
    pub fn surrounds(&self, w: usize, u: VertexSet) -> bool {
        self.neighbourhood(u)
            .is_subset(self.adj[w].with(w))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of the induced subgraph `G(S)`, ordered by smallest member.
    pub fn connected_components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s & self.alive;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.alive)
    }

    /// Induced subgraph on `s`: other vertices are removed but keep their
    /// indices. Terminals outside `s` are dropped.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let keep = s & self.alive;
        Graph {
            order: self.order,
            alive: keep,
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &row)| if keep.contains(v) { row & keep } else { VertexSet::EMPTY })
                .collect(),
            terminals: self.terminals & keep,
        }
    }

    /// Adjacency rows of the members of `s`, restricted to `s`.
    pub fn pattern_on(&self, s: VertexSet) -> Vec<VertexSet> {
        s.iter().map(|v| self.adj[v] & s).collect()
    }

    /// Parses the line-oriented text format (see [`Graph::to_text`]).
    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        let mut terminals: Option<(usize, VertexSet)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or("");
            let nums: Vec<usize> = parts
                .map(|p| {
                    p.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        reason: format!("expected a vertex index, found `{p}`"),
                    })
                })
                .collect::<Result<_>>()?;
            let parse_err = |reason: &str| Error::Parse {
                line: line_no,
                reason: reason.to_string(),
            };
            match tag {
                "n" => {
                    if g.is_some() {
                        return Err(parse_err("duplicate `n` line"));
                    }
                    if nums.len() != 1 {
                        return Err(parse_err("`n` takes exactly one value"));
                    }
                    g = Some(Graph::new(nums[0]).map_err(|e| parse_err(&e.to_string()))?);
                }
                "t" => {
                    if terminals.is_some() {
                        return Err(parse_err("duplicate `t` line"));
                    }
                    let set: VertexSet = nums.iter().collect();
                    if set.len() != nums.len() {
                        return Err(parse_err("repeated terminal"));
                    }
                    terminals = Some((line_no, set));
                }
                "e" => {
                    let graph = g.as_mut().ok_or_else(|| parse_err("`e` before `n`"))?;
                    if nums.len() != 2 {
                        return Err(parse_err("`e` takes exactly two vertices"));
                    }
                    graph
                        .add_edge(nums[0], nums[1])
                        .map_err(|e| parse_err(&e.to_string()))?;
                }
                other => return Err(parse_err(&format!("unknown record `{other}`"))),
            }
        }
        let mut g = g.ok_or(Error::Parse {
            line: 0,
            reason: "missing `n` line".into(),
        })?;
        if let Some((line, set)) = terminals {
            g.set_terminals(set).map_err(|e| Error::Parse {
                line,
                reason: e.to_string(),
            })?;
        }
        Ok(g)
    }

    /// Renders the text format: `n <N>`, `t <terminals...>`, then one
    /// `e <u> <v>` line per edge with `u < v`. Removed vertices appear only
    /// through their missing edges.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.order);
        s.push('t');
        for t in self.terminals.iter() {
            s.push_str(&format!(" {t}"));
        }
        s.push('\n');
        for (u, v) in self.edges() {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }
}

impl VertexSet {
    fn singleton_checked(v: usize, order: usize) -> Result<VertexSet> {
        if v >= order {
            Err(Error::VertexOutOfRange { vertex: v, order })
        } else {
            Ok(VertexSet::singleton(v))
        }
    }
}

/// Label-preserving equality of two graphs.
pub fn graphs_equal(g1: &Graph, g2: &Graph) -> bool {
    g1 == g2
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph {{ order: {}, alive: {:?}, terminals: {:?}, edges: {:?} }}",
            self.order,
            self.alive,
            self.terminals,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse_text(s)
    }
}
