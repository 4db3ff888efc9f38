//! Property counts over all connected graphs of a given order, read from
//! graph6 streams or produced by the built-in generator.

use std::fmt;
use std::io::BufRead;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Records decoded and classified per parallel batch.
const BATCH: usize = 1 << 16;

/// Largest order the built-in generator accepts.
pub const MAX_GENERATED_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Properties {
    /// No vertex has a clique neighbourhood.
    pub simplicial_free: bool,
    /// No edge `vw` with every other neighbour of `v` adjacent to `w`.
    pub transverse_free: bool,
    /// At least two vertices lie on no triangle.
    pub two_triangle_free: bool,
}

impl Properties {
    pub fn transverse_and_triangle_free(self) -> bool {
        self.transverse_free && self.two_triangle_free
    }
}

/// Classifies a terminal-free graph.
pub fn classify(g: &Graph) -> Properties {
    let alive = g.alive();
    let simplicial_free = alive.iter().all(|v| !g.is_clique(g.neighbours(v)));
    let transverse_free = g.edges().all(|(v, w)| {
        g.two_walks(v, w) + 1 != g.degree(v) && g.two_walks(v, w) + 1 != g.degree(w)
    });
    let triangle_free = alive.iter().filter(|&v| g.triangle_count(v) == 0).count();
    Properties {
        simplicial_free,
        transverse_free,
        two_triangle_free: triangle_free >= 2,
    }
}

/// One row of counts over the connected graphs of one order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusRow {
    pub order: usize,
    pub total: u64,
    pub simplicial_free: u64,
    pub transverse_free: u64,
    pub two_triangle_free: u64,
    /// Transverse-free with at least two triangle-free vertices.
    pub both: u64,
}

impl CensusRow {
    pub fn new(order: usize) -> CensusRow {
        CensusRow {
            order,
            ..CensusRow::default()
        }
    }

    pub fn add(&mut self, p: Properties) {
        self.total += 1;
        self.simplicial_free += p.simplicial_free as u64;
        self.transverse_free += p.transverse_free as u64;
        self.two_triangle_free += p.two_triangle_free as u64;
        self.both += p.transverse_and_triangle_free() as u64;
    }

    pub fn merge(mut self, other: CensusRow) -> CensusRow {
        self.total += other.total;
        self.simplicial_free += other.simplicial_free;
        self.transverse_free += other.transverse_free;
        self.two_triangle_free += other.two_triangle_free;
        self.both += other.both;
        self
    }

    /// Counts over an in-memory collection, in parallel.
    pub fn from_graphs(order: usize, graphs: &[Graph]) -> CensusRow {
        graphs
            .par_iter()
            .fold(
                || CensusRow::new(order),
                |mut row, g| {
                    row.add(classify(g));
                    row
                },
            )
            .reduce(|| CensusRow::new(order), CensusRow::merge)
    }
}

/// Tab-separated: order, total, simplicial-free, transverse-free,
/// two-triangle-free, both.
impl fmt::Display for CensusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.order,
            self.total,
            self.simplicial_free,
            self.transverse_free,
            self.two_triangle_free,
            self.both
        )
    }
}

fn classify_batch(order: usize, batch: &[(usize, String)]) -> Result<CensusRow> {
    batch
        .par_iter()
        .map(|(record, line)| {
            let g = graph6::decode(line, *record)?;
            if g.order() != order {
                return Err(Error::MalformedGraph6 {
                    record: *record,
                    reason: format!("order {} where {order} was expected", g.order()),
                });
            }
            let mut row = CensusRow::new(order);
            row.add(classify(&g));
            Ok(row)
        })
        .try_reduce(|| CensusRow::new(order), |a, b| Ok(a.merge(b)))
}

/// Counts over a graph6 stream holding the connected graphs of one order.
/// An optional `>>graph6<<` header is skipped; blank lines are ignored.
/// Record numbers in errors count from zero.
pub fn run_census<R: BufRead>(reader: R, order: usize) -> Result<CensusRow> {
    let mut row = CensusRow::new(order);
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(BATCH);
    let mut record = 0;
    for line in reader.lines() {
        let line = line.map_err(|e| Error::MalformedGraph6 {
            record,
            reason: e.to_string(),
        })?;
        let mut text = line.trim();
        if let Some(rest) = text.strip_prefix(graph6::HEADER) {
            text = rest;
        }
        if text.is_empty() {
            continue;
        }
        batch.push((record, text.to_string()));
        record += 1;
        if batch.len() == BATCH {
            row = row.merge(classify_batch(order, &batch)?);
            batch.clear();
        }
    }
    Ok(row.merge(classify_batch(order, &batch)?))
}

/// Adjacency rows of a graph on `0..n`, one bit per neighbour.
type Rows = [u16; MAX_GENERATED_ORDER];

/// Ordered partition refinement until every vertex in a cell sees the same
/// number of neighbours in every cell. Cells are split in order of those
/// counts, so the result depends only on the graph and the input order.
fn refine(rows: &Rows, cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<u8>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, u8)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (rows[v as usize] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

/// Upper-triangle bits of the graph relabelled by `order`, column by column.
fn code_of(rows: &Rows, order: &[u8]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | (rows[order[i] as usize] >> order[j] & 1) as u64;
        }
    }
    code
}

fn search(rows: &Rows, cells: Vec<Vec<u8>>, best: &mut u64) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).max(code_of(rows, &order));
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<u8> = Vec::new();
    for &v in cell {
        // Swapping twins fixes everything individualised so far, so their
        // subtrees give the same leaves.
        let twin = tried.iter().any(|&u| {
            let (ru, rv) = (rows[u as usize] & !(1 << v), rows[v as usize] & !(1 << u));
            ru == rv
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<u8> = cell.iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        refine(rows, &mut next);
        search(rows, next, best);
    }
}

/// A labelling-independent code: two graphs on `0..n` receive the same
/// code exactly when they are isomorphic.
fn canonical_code(n: usize, rows: &Rows) -> u64 {
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    refine(rows, &mut cells);
    let mut best = 0;
    search(rows, cells, &mut best);
    best
}

fn rows_of(g: &Graph) -> Rows {
    let mut rows = [0u16; MAX_GENERATED_ORDER];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn graph_of_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("order within range")
}

/// Canonical code of a terminal-free graph on `0..n`, `n ≤ 10`.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MAX_GENERATED_ORDER {
        return Err(Error::TooLarge {
            what: "graph for canonical labelling",
            size: n,
            cap: MAX_GENERATED_ORDER,
        });
    }
    Ok(canonical_code(n, &rows_of(g)))
}

/// All connected graphs on `n` vertices, one per isomorphism class, in
/// increasing order of canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so each class on `n` vertices arises by joining a new vertex to a
/// nonempty subset of some connected graph on `n - 1` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::TooLarge {
            what: "order for graph generation",
            size: n,
            cap: MAX_GENERATED_ORDER,
        });
    }
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let parents = level;
        let found: FxHashSet<u64> = parents
            .par_iter()
            .fold(FxHashSet::default, |mut seen, &code| {
                let parent = rows_of(&graph_of_code(k - 1, code));
                for subset in 1u16..1 << (k - 1) {
                    let mut rows = parent;
                    rows[k - 1] = subset;
                    for (u, row) in rows.iter_mut().enumerate().take(k - 1) {
                        *row |= (subset >> u & 1) << (k - 1);
                    }
                    seen.insert(canonical_code(k, &rows));
                }
                seen
            })
            .reduce(FxHashSet::default, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            });
        let mut codes: Vec<u64> = found.into_iter().collect();
        codes.sort_unstable();
        level = codes;
    }
    Ok(level.into_iter().map(|c| graph_of_code(n, c)).collect())
}
