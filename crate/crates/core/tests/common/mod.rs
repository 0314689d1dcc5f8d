//! Brute-force oracles shared by the integration tests. None of these call
//! the enumeration or counting routines they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use taquin::jdt::forward_slide;
use taquin::partitions::partitions_of;
use taquin::{Cell, Partition, SkewShape, Tableau};

/// Every permutation of `items`, by Heap's algorithm.
pub fn all_orders<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    fn heap<T: Clone>(k: usize, a: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut a = items.to_vec();
    let mut out = Vec::new();
    heap(a.len(), &mut a, &mut out);
    out
}

/// Fills `cells` with `values` in order and keeps the filling if rows and
/// columns increase inside the region.
fn fill(shape: &SkewShape, cells: &[Cell], values: &[u32]) -> Option<Tableau> {
    let mut rows: Vec<Vec<Option<u32>>> = shape
        .outer()
        .parts()
        .iter()
        .map(|&l| vec![None; l])
        .collect();
    for (c, &v) in cells.iter().zip(values) {
        rows[c.row - 1][c.col - 1] = Some(v);
    }
    for c in cells {
        let v = rows[c.row - 1][c.col - 1];
        if c.col > 1 {
            if let Some(l) = rows[c.row - 1][c.col - 2] {
                if Some(l) > v {
                    return None;
                }
            }
        }
        if c.row > 1 && c.col <= rows[c.row - 2].len() {
            if let Some(u) = rows[c.row - 2][c.col - 1] {
                if Some(u) > v {
                    return None;
                }
            }
        }
    }
    Some(Tableau::new(shape.clone(), rows).unwrap())
}

/// Standard fillings of a skew shape found by trying all `n!` assignments.
pub fn standard_fillings(shape: &SkewShape) -> Vec<Tableau> {
    let cells: Vec<Cell> = shape.cells().collect();
    let values: Vec<u32> = (1..=cells.len() as u32).collect();
    all_orders(&values)
        .into_iter()
        .filter_map(|vs| fill(shape, &cells, &vs))
        .collect()
}

/// Every skew shape `λ/μ` with `|λ| <= max_outer` and `μ` nonempty.
pub fn skew_shapes_nonempty_inner(max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=max_outer {
        for outer in partitions_of(n) {
            for k in 1..n {
                for inner in partitions_of(k) {
                    if outer.contains(&inner) {
                        out.push(SkewShape::new(outer.clone(), inner).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Every rectification reachable by some sequence of inner-corner choices.
pub fn all_rectifications(t: &Tableau) -> BTreeSet<Vec<Vec<Option<u32>>>> {
    if t.shape().is_normal() {
        return BTreeSet::from([t.rows().to_vec()]);
    }
    t.shape()
        .inner()
        .inner_corners()
        .into_iter()
        .flat_map(|c| all_rectifications(&forward_slide(t, c).unwrap().tableau))
        .collect()
}

/// Number of orderings of the cells of `λ` that respect the right and down
/// edges of its mesh graph.
pub fn linear_extensions(shape: &Partition) -> usize {
    let cells: Vec<Cell> = shape.cells().collect();
    let s = SkewShape::normal(shape.clone());
    let values: Vec<u32> = (1..=cells.len() as u32).collect();
    all_orders(&values)
        .into_iter()
        .filter(|vs| fill(&s, &cells, vs).is_some())
        .count()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
