//! Integer partitions, skew shapes, corners and hook lengths.
//!
//! Cells are addressed 1-based as `(row, col)`; row 1 is the top row.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};

/// A cell of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Manhattan-distance-one test.
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

// Cells travel as `[row, col]` pairs.
impl Serialize for Cell {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col] = <[usize; 2]>::deserialize(d)?;
        if row == 0 || col == 0 {
            return Err(serde::de::Error::custom("cell coordinates are 1-based"));
        }
        Ok(Cell { row, col })
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(structural!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(structural!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Builds a partition from row lengths that may end in zeros.
    pub fn from_row_lengths(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition::new(rows)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All rows have the same length.
    pub fn is_canonical(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| Cell::new(i, self.row_len(i)))
            .collect()
    }

    /// Cells whose addition yields a partition, top to bottom.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&i| i == 1 || self.row_len(i - 1) > self.row_len(i))
            .map(|i| Cell::new(i, self.row_len(i) + 1))
            .collect()
    }

    pub fn is_inner_corner(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && self.row_len(cell.row) == cell.col
            && self.row_len(cell.row + 1) < cell.col
    }

    pub fn is_outer_corner(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && self.row_len(cell.row) + 1 == cell.col
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    /// Removes an inner corner.
    pub fn without(&self, cell: Cell) -> Result<Partition> {
        if !self.is_inner_corner(cell) {
            return Err(structural!("{cell} is not an inner corner of {self}"));
        }
        let mut rows = self.parts.clone();
        rows[cell.row - 1] -= 1;
        Partition::from_row_lengths(rows)
    }

    /// Adds an outer corner.
    pub fn with(&self, cell: Cell) -> Result<Partition> {
        if !self.is_outer_corner(cell) {
            return Err(structural!("{cell} is not an outer corner of {self}"));
        }
        let mut rows = self.parts.clone();
        if cell.row > rows.len() {
            rows.push(1);
        } else {
            rows[cell.row - 1] += 1;
        }
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `3,2,1`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| structural!("bad part {t:?}: {e}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The cells of `outer` that are not in `inner`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkew {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(structural!(
                "inner shape {inner} is not contained in {outer}"
            ));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of the skew region in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let inner = &self.inner;
        self.outer.cells().filter(move |&c| !inner.contains_cell(c))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_normal() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Hook length of every cell, as rows of the diagram.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let conj = shape.conjugate();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (1..=len)
                .map(|j| (len - j) + (conj.row_len(j) - (i + 1)) + 1)
                .collect()
        })
        .collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux of the shape, by the hook length formula.
pub fn count_syt(shape: &Partition) -> BigUint {
    let hooks: BigUint = hook_lengths(shape)
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * h as u64);
    factorial(shape.size()) / hooks
}

/// Removes inner corners, scanned top to bottom.
pub fn inner_corners(shape: &Partition) -> Vec<Cell> {
    shape.inner_corners()
}

/// Addable cells, scanned top to bottom.
pub fn outer_corners(shape: &Partition) -> Vec<Cell> {
    shape.outer_corners()
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOfSquares {
    pub sum_of_squares: BigUint,
    pub factorial: BigUint,
    pub equal: bool,
}

/// Sums `count_syt(λ)²` over all `λ ⊢ n` and compares with `n!`.
pub fn verify_sum_squares(n: usize) -> SumOfSquares {
    let sum_of_squares = partitions_of(n)
        .iter()
        .map(|p| {
            let f = count_syt(p);
            &f * &f
        })
        .fold(BigUint::default(), |acc, x| acc + x);
    let factorial = factorial(n);
    let equal = sum_of_squares == factorial;
    SumOfSquares {
        sum_of_squares,
        factorial,
        equal,
    }
}
