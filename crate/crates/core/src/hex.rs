//! Hex positions as Shannon games. Black plays Short and joins the top edge
//! to the bottom edge; White plays Cut.
//!
//! Cell `(r, c)` of an `m × m` board is vertex `r * m + c`, counted row by
//! row from the top-left corner. The top terminal is vertex `m²`, the bottom
//! terminal `m² + 1`.
//!
//! Board text format: a line `hex <m>` followed by `m` rows of `m`
//! characters from `.` (empty), `B` and `W`. Whitespace inside a row is
//! ignored so indented drawings parse.

use std::fmt;
use std::str::FromStr;

use crate::detect::{fill_in, DetectionReport, FactKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Largest board whose graph fits in a [`VertexSet`].
pub const MAX_BOARD: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Black,
    White,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HexBoard {
    size: usize,
    cells: Vec<Cell>,
}

impl HexBoard {
    pub fn new(size: usize) -> Result<HexBoard> {
        if size == 0 || size > MAX_BOARD {
            return Err(Error::PreconditionFailed(format!(
                "board size {size} outside 1..={MAX_BOARD}"
            )));
        }
        Ok(HexBoard {
            size,
            cells: vec![Cell::Empty; size * size],
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cell_index(&self, row: usize, col: usize) -> usize {
        row * self.size + col
    }

    pub fn get(&self, row: usize, col: usize) -> Cell {
        self.cells[self.cell_index(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, cell: Cell) {
        let i = self.cell_index(row, col);
        self.cells[i] = cell;
    }

    /// Cells in vertex order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn top_terminal(&self) -> usize {
        self.size * self.size
    }

    pub fn bottom_terminal(&self) -> usize {
        self.size * self.size + 1
    }

    /// (black, white) stone counts.
    pub fn stone_counts(&self) -> (usize, usize) {
        let count = |c| self.cells.iter().filter(|&&x| x == c).count();
        (count(Cell::Black), count(Cell::White))
    }

    /// Whether the stone counts could arise from alternating play.
    pub fn is_balanced(&self) -> bool {
        let (b, w) = self.stone_counts();
        b.abs_diff(w) <= 1
    }

    pub fn parse(text: &str) -> Result<HexBoard> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            reason: "empty board".into(),
        })?;
        let size = header
            .strip_prefix("hex")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse {
                line,
                reason: format!("expected `hex <m>`, found `{header}`"),
            })?;
        let mut board = HexBoard::new(size).map_err(|e| Error::Parse {
            line,
            reason: e.to_string(),
        })?;
        let mut rows = 0;
        for (line, raw) in lines {
            if rows == size {
                return Err(Error::Parse {
                    line,
                    reason: format!("more than {size} rows"),
                });
            }
            let row: Vec<char> = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if row.len() != size {
                return Err(Error::Parse {
                    line,
                    reason: format!("row has {} cells, expected {size}", row.len()),
                });
            }
            for (col, ch) in row.into_iter().enumerate() {
                let cell = match ch {
                    '.' => Cell::Empty,
                    'B' => Cell::Black,
                    'W' => Cell::White,
                    other => {
                        return Err(Error::Parse {
                            line,
                            reason: format!("unknown cell `{other}`"),
                        })
                    }
                };
                board.set(rows, col, cell);
            }
            rows += 1;
        }
        if rows != size {
            return Err(Error::Parse {
                line: 0,
                reason: format!("found {rows} rows, expected {size}"),
            });
        }
        Ok(board)
    }

    pub fn to_text(&self) -> String {
        render(self.size, self.cells.iter().map(|c| match c {
            Cell::Empty => '.',
            Cell::Black => 'B',
            Cell::White => 'W',
        }))
    }
}

fn render(size: usize, chars: impl Iterator<Item = char>) -> String {
    let chars: Vec<char> = chars.collect();
    let mut s = format!("hex {size}\n");
    for row in chars.chunks(size) {
        s.extend(row);
        s.push('\n');
    }
    s
}

impl fmt::Display for HexBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for HexBoard {
    type Err = Error;
    fn from_str(s: &str) -> Result<HexBoard> {
        HexBoard::parse(s)
    }
}

/// Neighbouring cells of `(row, col)` on the hex lattice.
pub fn lattice_neighbours(size: usize, row: usize, col: usize) -> Vec<(usize, usize)> {
    const OFFSETS: [(isize, isize); 6] = [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, 1), (1, -1)];
    let m = size as isize;
    OFFSETS
        .iter()
        .map(|&(dr, dc)| (row as isize + dr, col as isize + dc))
        .filter(|&(r, c)| (0..m).contains(&r) && (0..m).contains(&c))
        .map(|(r, c)| (r as usize, c as usize))
        .collect()
}

/// The empty board's graph: the lattice plus the two terminals.
pub fn lattice_graph(size: usize) -> Result<Graph> {
    let cells = size * size;
    debug_assert!(cells + 2 <= MAX_ORDER);
    let mut edges = Vec::new();
    for r in 0..size {
        for c in 0..size {
            let v = r * size + c;
            for (r2, c2) in lattice_neighbours(size, r, c) {
                let w = r2 * size + c2;
                if v < w {
                    edges.push((v, w));
                }
            }
        }
    }
    for c in 0..size {
        edges.push((cells, c));
        edges.push((cells + 1, (size - 1) * size + c));
    }
    Graph::with_terminals(cells + 2, &edges, &[cells, cells + 1])
}

/// The reduced graph of a position: every Black cell shorted and every
/// White cell cut.
pub fn to_graph(b: &HexBoard) -> Result<Graph> {
    let g = lattice_graph(b.size)?;
    let pick = |want| -> VertexSet {
        (0..b.cells.len()).filter(|&i| b.cells[i] == want).collect()
    };
    g.short_set(pick(Cell::Black))?.cut_set(pick(Cell::White))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Empty,
    Black,
    White,
    Dead,
    Captured,
    Lost,
}

impl Mark {
    pub fn symbol(self) -> char {
        match self {
            Mark::Empty => '.',
            Mark::Black => 'B',
            Mark::White => 'W',
            Mark::Dead => 'd',
            Mark::Captured => 'c',
            Mark::Lost => 'l',
        }
    }
}

/// A board with fill-in results drawn on its empty cells.
#[derive(Clone, Debug)]
pub struct Annotation {
    pub size: usize,
    pub marks: Vec<Mark>,
    pub report: DetectionReport,
}

impl Annotation {
    pub fn to_text(&self) -> String {
        render(self.size, self.marks.iter().map(|m| m.symbol()))
    }
}

/// Runs fill-in on the position and marks dead, captured and lost cells.
pub fn annotate(b: &HexBoard) -> Result<Annotation> {
    let report = fill_in(&to_graph(b)?)?;
    let mut marks: Vec<Mark> = b
        .cells
        .iter()
        .map(|c| match c {
            Cell::Empty => Mark::Empty,
            Cell::Black => Mark::Black,
            Cell::White => Mark::White,
        })
        .collect();
    for fact in report.facts() {
        let (set, mark) = match fact.kind {
            FactKind::DeadVertex(v) => (VertexSet::singleton(v), Mark::Dead),
            FactKind::Captured(s) => (s, Mark::Captured),
            FactKind::Lost(s) => (s, Mark::Lost),
            _ => continue,
        };
        let cells = marks.len();
        for v in set.iter().filter(|&v| v < cells) {
            marks[v] = mark;
        }
    }
    Ok(Annotation {
        size: b.size,
        marks,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_graph, Player};

    #[test]
    fn lattice_degrees() {
        let g = lattice_graph(4).unwrap();
        // obtuse corners have two neighbours, acute corners three, interior six
        let cell = |r: usize, c: usize| r * 4 + c;
        let inner = g.non_terminals();
        assert_eq!((g.neighbours(cell(0, 0)) & inner).len(), 2);
        assert_eq!((g.neighbours(cell(0, 3)) & inner).len(), 3);
        assert_eq!((g.neighbours(cell(3, 0)) & inner).len(), 3);
        assert_eq!((g.neighbours(cell(3, 3)) & inner).len(), 2);
        assert_eq!((g.neighbours(cell(1, 1)) & inner).len(), 6);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn single_cell_goes_to_the_mover() {
        let g = to_graph(&HexBoard::new(1).unwrap()).unwrap();
        assert_eq!(solve_graph(&g, Player::Short).unwrap(), Player::Short);
        assert_eq!(solve_graph(&g, Player::Cut).unwrap(), Player::Cut);
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let text = "hex 3\n.B.\nW..\n..B\n";
        let b = HexBoard::parse(text).unwrap();
        assert_eq!(b.to_text(), text);
        assert_eq!(b.get(0, 1), Cell::Black);
        assert_eq!(b.stone_counts(), (2, 1));
        assert!(HexBoard::parse("hex 2\n..\n").is_err());
        assert!(HexBoard::parse("hex 2\n.x\n..\n").is_err());
        assert!(HexBoard::parse("board 2\n..\n..\n").is_err());
        assert!(HexBoard::parse("hex 2\n . .\n  . .\n").is_ok());
    }

    #[test]
    fn black_column_joins_terminals() {
        let mut b = HexBoard::new(2).unwrap();
        b.set(0, 0, Cell::Black);
        b.set(1, 0, Cell::Black);
        let g = to_graph(&b).unwrap();
        assert!(g.has_edge(b.top_terminal(), b.bottom_terminal()));
    }
}
