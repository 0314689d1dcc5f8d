//! Jeu de taquin slides and rectification.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::partitions::{Cell, SkewShape};
use crate::tableaux::Tableau;

/// One move of the hole: `moved_entry` slides from `from` into `hole`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideStep {
    pub hole: Cell,
    pub moved_entry: u32,
    pub from: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slide {
    pub tableau: Tableau,
    /// Cell the hole ended in. For a forward slide it leaves the outer shape;
    /// for a backward slide it joins the inner shape.
    pub vacated: Cell,
    pub steps: Vec<SlideStep>,
}

fn entry(grid: &[Vec<Option<u32>>], cell: Cell) -> Option<u32> {
    grid.get(cell.row - 1)
        .and_then(|r| r.get(cell.col - 1))
        .copied()
        .flatten()
}

fn take(grid: &mut [Vec<Option<u32>>], cell: Cell) -> u32 {
    grid[cell.row - 1][cell.col - 1]
        .take()
        .expect("sliding entry exists")
}

/// Forward slide into `start`, an inner corner of the inner shape.
///
/// The hole repeatedly takes the smaller of its right and lower neighbours
/// until neither exists.
pub fn forward_slide(p: &Tableau, start: Cell) -> Result<Slide> {
    let outer = p.shape().outer();
    let inner = p.shape().inner();
    if !inner.is_inner_corner(start) {
        return Err(domain!(
            "{start} is not an inner corner of the inner shape {inner}"
        ));
    }
    let mut grid = p.rows().to_vec();
    let mut hole = start;
    let mut steps = Vec::new();
    loop {
        let right = Cell::new(hole.row, hole.col + 1);
        let below = Cell::new(hole.row + 1, hole.col);
        let next = match (entry(&grid, right), entry(&grid, below)) {
            (Some(r), Some(b)) => {
                assert_ne!(r, b, "tableau entries are distinct");
                if r < b {
                    right
                } else {
                    below
                }
            }
            (Some(_), None) => right,
            (None, Some(_)) => below,
            (None, None) => break,
        };
        let v = take(&mut grid, next);
        grid[hole.row - 1][hole.col - 1] = Some(v);
        steps.push(SlideStep {
            hole,
            moved_entry: v,
            from: next,
        });
        hole = next;
    }
    debug_assert!(outer.is_inner_corner(hole));
    grid[hole.row - 1].pop();
    while grid.last().is_some_and(Vec::is_empty) {
        grid.pop();
    }
    let shape = SkewShape::new(outer.without(hole)?, inner.without(start)?)?;
    Ok(Slide {
        tableau: Tableau::from_parts_unchecked(shape, grid),
        vacated: hole,
        steps,
    })
}

/// Backward slide from `start`, an outer corner of the outer shape.
///
/// The hole repeatedly takes the larger of its left and upper neighbours
/// inside the skew region until neither exists.
pub fn backward_slide(p: &Tableau, start: Cell) -> Result<Slide> {
    let outer = p.shape().outer();
    let inner = p.shape().inner();
    if !outer.is_outer_corner(start) {
        return Err(domain!("{start} is not an outer corner of {outer}"));
    }
    let mut grid = p.rows().to_vec();
    if start.row > grid.len() {
        grid.push(Vec::new());
    }
    grid[start.row - 1].push(None);
    let mut hole = start;
    let mut steps = Vec::new();
    loop {
        let left = (hole.col > 1).then(|| Cell::new(hole.row, hole.col - 1));
        let above = (hole.row > 1).then(|| Cell::new(hole.row - 1, hole.col));
        let l = left.and_then(|c| entry(&grid, c));
        let a = above.and_then(|c| entry(&grid, c));
        let next = match (l, a) {
            (Some(l), Some(a)) => {
                assert_ne!(l, a, "tableau entries are distinct");
                if l > a {
                    left.unwrap()
                } else {
                    above.unwrap()
                }
            }
            (Some(_), None) => left.unwrap(),
            (None, Some(_)) => above.unwrap(),
            (None, None) => break,
        };
        let v = take(&mut grid, next);
        grid[hole.row - 1][hole.col - 1] = Some(v);
        steps.push(SlideStep {
            hole,
            moved_entry: v,
            from: next,
        });
        hole = next;
    }
    let shape = SkewShape::new(outer.with(start)?, inner.with(hole)?)?;
    Ok(Slide {
        tableau: Tableau::from_parts_unchecked(shape, grid),
        vacated: hole,
        steps,
    })
}

/// Picks the lexicographically smallest inner corner.
pub fn first_corner(_corners: &[Cell]) -> usize {
    0
}

/// Forward-slides until the shape is normal. `policy` picks one of the
/// inner corners of the current inner shape (given top to bottom) by index.
pub fn rectify_with<F>(p: &Tableau, mut policy: F) -> Result<Tableau>
where
    F: FnMut(&[Cell]) -> usize,
{
    let mut cur = p.clone();
    while !cur.shape().is_normal() {
        let corners = cur.shape().inner().inner_corners();
        let k = policy(&corners);
        let start = *corners
            .get(k)
            .ok_or_else(|| domain!("policy chose corner {k} of {}", corners.len()))?;
        cur = forward_slide(&cur, start)?.tableau;
    }
    Ok(cur)
}

/// Rectification with the default policy; the result does not depend on it.
pub fn rectify(p: &Tableau) -> Tableau {
    rectify_with(p, first_corner).expect("default policy always picks a valid corner")
}

pub fn jdt_equivalent(p1: &Tableau, p2: &Tableau) -> bool {
    p1.len() == p2.len() && rectify(p1) == rectify(p2)
}
