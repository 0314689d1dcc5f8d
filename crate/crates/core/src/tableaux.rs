//! Tableaux of normal and skew shape, row insertion and reverse bumping.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, structural, Error, Result};
use crate::partitions::{Cell, Partition, SkewShape};

/// Largest shape `enumerate_syt` accepts by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// A skew shape filled with distinct positive integers.
///
/// Rows are stored in full with `None` in the cells of the inner shape, so
/// `rows[i - 1][j - 1]` is the entry at cell `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Option<u32>>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<Option<u32>>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(SkewShape::new(raw.outer, raw.inner)?, raw.rows)
    }
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        let (outer, inner) = (t.shape.outer().clone(), t.shape.inner().clone());
        RawTableau {
            outer,
            inner,
            rows: t.rows,
        }
    }
}

/// How strongly the rows and columns are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Generalized,
    Partial,
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Normal,
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub order: Order,
    pub form: Form,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.order {
            Order::Generalized => "generalized",
            Order::Partial => "partial",
            Order::Standard => "standard",
        };
        let form = match self.form {
            Form::Normal => "normal",
            Form::Skew => "skew",
        };
        write!(f, "{order} {form}")
    }
}

impl Tableau {
    /// Checks that exactly the cells of `shape` carry entries and that all
    /// entries are distinct and positive.
    pub fn new(shape: SkewShape, rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        if rows.len() != shape.outer().num_rows() {
            return Err(structural!("{} rows given for shape {shape}", rows.len()));
        }
        let mut seen = HashSet::new();
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            if row.len() != shape.outer().row_len(r) {
                return Err(structural!(
                    "row {r} has {} cells, shape {shape} wants {}",
                    row.len(),
                    shape.outer().row_len(r)
                ));
            }
            for (j, v) in row.iter().enumerate() {
                let cell = Cell::new(r, j + 1);
                match (shape.contains(cell), v) {
                    (true, None) => return Err(structural!("cell {cell} has no entry")),
                    (false, Some(v)) => {
                        return Err(structural!("entry {v} at {cell} lies in the inner shape"))
                    }
                    (true, Some(0)) => return Err(structural!("entry at {cell} is zero")),
                    (true, Some(v)) => {
                        if !seen.insert(*v) {
                            return Err(structural!("duplicate entry {v}"));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// A tableau of normal shape from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::from_row_lengths(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(Vec::is_empty) && !shape.is_empty() {
            return Err(structural!("empty row inside a normal shape"));
        }
        let rows = rows
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.into_iter().map(Some).collect())
            .collect();
        Tableau::new(SkewShape::normal(shape), rows)
    }

    /// A tableau whose shape is read off the rows: leading `None`s form the
    /// inner shape.
    pub fn from_skew_rows(rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let outer = Partition::from_row_lengths(rows.iter().map(Vec::len).collect())?;
        let inner = Partition::from_row_lengths(
            rows.iter()
                .map(|r| r.iter().take_while(|v| v.is_none()).count())
                .collect(),
        )?;
        Tableau::new(SkewShape::new(outer, inner)?, rows)
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::default(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<Option<u32>>>) -> Self {
        debug_assert!(Tableau::new(shape.clone(), rows.clone()).is_ok());
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    /// Rows of a normal-shape tableau without the `Option` wrapping.
    pub fn normal_rows(&self) -> Option<Vec<Vec<u32>>> {
        if !self.shape.is_normal() {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|r| r.iter().map(|v| v.unwrap()).collect())
                .collect(),
        )
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
            .flatten()
    }

    /// Number of filled cells.
    pub fn len(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(j, v)| v.map(|v| (Cell::new(i + 1, j + 1), v)))
        })
    }

    pub fn position_of(&self, value: u32) -> Option<Cell> {
        self.entries().find(|&(_, v)| v == value).map(|(c, _)| c)
    }

    pub fn is_partial(&self) -> bool {
        self.entries().all(|(c, v)| {
            let right = self.get(Cell::new(c.row, c.col + 1));
            let below = self.get(Cell::new(c.row + 1, c.col));
            right.is_none_or(|r| v < r) && below.is_none_or(|b| v < b)
        })
    }

    /// Partial with entry set exactly `{1, …, n}`.
    pub fn is_standard(&self) -> bool {
        let n = self.len() as u32;
        self.is_partial() && self.entries().all(|(_, v)| v <= n)
    }

    /// Strongest class the tableau belongs to.
    pub fn classify(&self) -> Classification {
        let order = if self.is_standard() {
            Order::Standard
        } else if self.is_partial() {
            Order::Partial
        } else {
            Order::Generalized
        };
        let form = if self.shape.is_normal() {
            Form::Normal
        } else {
            Form::Skew
        };
        Classification { order, form }
    }

    /// Rows concatenated bottom to top.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .rev()
            .flat_map(|r| r.iter().flatten().copied())
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                match v {
                    Some(v) => write!(f, "{v}")?,
                    None => write!(f, "·")?,
                }
            }
        }
        Ok(())
    }
}

/// Classifies a tableau; structural problems are rejected when the tableau is built.
pub fn validate(t: &Tableau) -> Classification {
    t.classify()
}

pub fn reading_word(t: &Tableau) -> Vec<u32> {
    t.reading_word()
}

fn require_normal_partial(p: &Tableau) -> Result<Vec<Vec<u32>>> {
    if !p.is_partial() {
        return Err(domain!("tableau {p} is not partial"));
    }
    p.normal_rows()
        .ok_or_else(|| domain!("tableau of shape {} is not normal", p.shape()))
}

fn rows_to_tableau(rows: Vec<Vec<u32>>) -> Tableau {
    let shape = Partition::from_row_lengths(rows.iter().map(Vec::len).collect())
        .expect("bumping keeps a partition shape");
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(Some).collect())
        .collect();
    Tableau::from_parts_unchecked(SkewShape::normal(shape), rows)
}

/// Row bumping on raw increasing rows; returns the added cell.
pub(crate) fn insert_into_rows(rows: &mut Vec<Vec<u32>>, mut x: u32) -> Cell {
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(vec![x]);
            return Cell::new(i + 1, 1);
        }
        let row = &mut rows[i];
        // First entry greater than x is the smallest such in an increasing row.
        let pos = row.partition_point(|&y| y < x);
        if pos == row.len() {
            row.push(x);
            return Cell::new(i + 1, row.len());
        }
        x = std::mem::replace(&mut row[pos], x);
        i += 1;
    }
}

/// Inverse of [`insert_into_rows`]; `cell` must be an inner corner.
pub(crate) fn reverse_bump_rows(rows: &mut Vec<Vec<u32>>, cell: Cell) -> u32 {
    let mut x = rows[cell.row - 1].pop().expect("corner cell exists");
    if rows[cell.row - 1].is_empty() {
        rows.pop();
    }
    for k in (0..cell.row - 1).rev() {
        let row = &mut rows[k];
        // Largest entry smaller than x.
        let pos = row.partition_point(|&y| y < x) - 1;
        x = std::mem::replace(&mut row[pos], x);
    }
    x
}

/// Row-inserts `x` into a partial tableau of normal shape.
///
/// Returns the new tableau and the cell added to the shape.
pub fn row_insert(p: &Tableau, x: u32) -> Result<(Tableau, Cell)> {
    let mut rows = require_normal_partial(p)?;
    if x == 0 {
        return Err(domain!("cannot insert 0"));
    }
    if p.position_of(x).is_some() {
        return Err(domain!("{x} is already in the tableau"));
    }
    let added = insert_into_rows(&mut rows, x);
    Ok((rows_to_tableau(rows), added))
}

/// Removes the entry at inner corner `cell` and bumps it back out of the
/// top row; returns the restored tableau and the ejected value.
pub fn reverse_bump(p: &Tableau, cell: Cell) -> Result<(Tableau, u32)> {
    let mut rows = require_normal_partial(p)?;
    if !p.shape().outer().is_inner_corner(cell) {
        return Err(domain!("{cell} is not an inner corner of {}", p.shape()));
    }
    let x = reverse_bump_rows(&mut rows, cell);
    Ok((rows_to_tableau(rows), x))
}

/// All standard tableaux of `shape`, refusing shapes above
/// [`DEFAULT_ENUMERATION_BOUND`] cells.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_syt_bounded(shape, DEFAULT_ENUMERATION_BOUND)
}

/// Backtracking over fillings: cells in row-major order, candidate values ascending.
pub fn enumerate_syt_bounded(shape: &Partition, bound: usize) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n > bound {
        return Err(Error::Resource(format!(
            "shape {shape} has {n} cells, enumeration bound is {bound}"
        )));
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();

    fn go(
        k: usize,
        cells: &[Cell],
        grid: &mut Vec<Vec<u32>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(rows_to_tableau(grid.clone()));
            return;
        }
        let Cell { row, col } = cells[k];
        let left = if col > 1 { grid[row - 1][col - 2] } else { 0 };
        let above = if row > 1 { grid[row - 2][col - 1] } else { 0 };
        let floor = left.max(above);
        for v in (floor + 1)..used.len() as u32 {
            if used[v as usize] {
                continue;
            }
            used[v as usize] = true;
            grid[row - 1][col - 1] = v;
            go(k + 1, cells, grid, used, out);
            used[v as usize] = false;
        }
        grid[row - 1][col - 1] = 0;
    }

    go(0, &cells, &mut grid, &mut used, &mut out);
    Ok(out)
}
