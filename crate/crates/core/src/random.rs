//! Random instances for property runs. Every generator is driven by a
//! caller-supplied RNG, so a seeded RNG gives reproducible instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hms::{CapacityGrid, HmtState, TaskSet};
use crate::partitions::{partitions_of, Cell, Partition, SkewShape};
use crate::rational::Rational;
use crate::tableaux::Tableau;

/// A standard filling of `shape`, built as a random linear extension of
/// its cells (each step fills a uniformly chosen cell whose left and upper
/// neighbours in the region are already filled).
pub fn standard_tableau<R: Rng + ?Sized>(shape: &SkewShape, rng: &mut R) -> Tableau {
    let outer = shape.outer();
    let mut rows: Vec<Vec<Option<u32>>> = outer.parts().iter().map(|&l| vec![None; l]).collect();
    let filled = |rows: &Vec<Vec<Option<u32>>>, c: Cell| -> bool {
        !shape.contains(c) || rows[c.row - 1][c.col - 1].is_some()
    };
    for v in 1..=shape.size() as u32 {
        let ready: Vec<Cell> = shape
            .cells()
            .filter(|&c| rows[c.row - 1][c.col - 1].is_none())
            .filter(|&c| c.col == 1 || filled(&rows, Cell::new(c.row, c.col - 1)))
            .filter(|&c| c.row == 1 || filled(&rows, Cell::new(c.row - 1, c.col)))
            .collect();
        let c = *ready
            .choose(rng)
            .expect("a finite poset always has a minimal element");
        rows[c.row - 1][c.col - 1] = Some(v);
    }
    Tableau::new(shape.clone(), rows).expect("filling covers the shape")
}

/// A partition fitting in a `rows x cols` box with at least one cell.
pub fn partition_in_box<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Partition {
    let mut parts: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..=cols)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.is_empty() || parts[0] == 0 {
        parts = vec![1];
    }
    Partition::from_row_lengths(parts).unwrap()
}

/// A partition contained in `outer`.
pub fn sub_partition<R: Rng + ?Sized>(outer: &Partition, rng: &mut R) -> Partition {
    let mut cap = usize::MAX;
    let parts: Vec<usize> = outer
        .parts()
        .iter()
        .map(|&l| {
            let v = rng.gen_range(0..=l.min(cap));
            cap = v;
            v
        })
        .collect();
    Partition::from_row_lengths(parts).unwrap()
}

/// A skew shape with between 1 and `max_cells` cells; the inner shape is
/// nonempty when `nonempty_inner` is set.
pub fn skew_shape<R: Rng + ?Sized>(
    max_cells: usize,
    nonempty_inner: bool,
    rng: &mut R,
) -> SkewShape {
    loop {
        let n = rng.gen_range(1..=max_cells + 4);
        let outer = partitions_of(n).choose(rng).unwrap().clone();
        let inner = sub_partition(&outer, rng);
        let shape = SkewShape::new(outer, inner).unwrap();
        if (1..=max_cells).contains(&shape.size()) && (!nonempty_inner || !shape.is_normal()) {
            return shape;
        }
    }
}

/// A standard state of normal shape on a random grid of at most
/// `max_rows x max_cols`, holding tasks `1..=m`.
pub fn normal_state<R: Rng + ?Sized>(max_rows: usize, max_cols: usize, rng: &mut R) -> HmtState {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    let lam = partition_in_box(rows, cols, rng);
    let t = standard_tableau(&SkewShape::normal(lam), rng);
    HmtState::from_tableau(&Partition::rectangle(rows, cols), &t).unwrap()
}

/// A standard state of skew shape (nonempty inner shape) on a grid of at
/// most `max_rows x max_cols`.
pub fn skew_state<R: Rng + ?Sized>(max_rows: usize, max_cols: usize, rng: &mut R) -> HmtState {
    loop {
        let rows = rng.gen_range(1..=max_rows);
        let cols = rng.gen_range(1..=max_cols);
        let outer = partition_in_box(rows, cols, rng);
        let inner = sub_partition(&outer, rng);
        let shape = SkewShape::new(outer, inner).unwrap();
        if shape.is_normal() || shape.size() == 0 {
            continue;
        }
        let t = standard_tableau(&shape, rng);
        let state = HmtState::from_tableau(&Partition::rectangle(rows, cols), &t).unwrap();
        // Empty rows inside the inner shape can re-embed with a smaller inner shape.
        if state.embedded().is_ok_and(|(s, _)| !s.is_normal()) {
            return state;
        }
    }
}

/// Strictly hierarchical rates with small random numerators and denominators.
pub fn capacity_grid<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CapacityGrid {
    let mut rates = vec![vec![Rational::zero(); cols]; rows];
    for i in (0..rows).rev() {
        for j in (0..cols).rev() {
            let floor = match (rates.get(i + 1).map(|r| &r[j]), rates[i].get(j + 1)) {
                (Some(a), Some(b)) => a.clone().max(b.clone()),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Rational::zero(),
            };
            let step = Rational::new(rng.gen_range(1..=5), rng.gen_range(1..=4));
            rates[i][j] = floor + step;
        }
    }
    CapacityGrid::new(rates).expect("rates increase toward the top-left")
}

/// Arbitrary positive requirements for tasks `1..=m`.
pub fn requirements<R: Rng + ?Sized>(m: usize, rng: &mut R) -> TaskSet {
    let r = (0..m)
        .map(|_| Rational::new(rng.gen_range(1..=20), rng.gen_range(1..=6)))
        .collect();
    TaskSet::new(r).unwrap()
}

/// Requirements strictly decreasing in task ID.
pub fn sequential_requirements<R: Rng + ?Sized>(m: usize, rng: &mut R) -> TaskSet {
    let mut acc = Rational::zero();
    let mut r: Vec<Rational> = (0..m)
        .map(|_| {
            acc = &acc + &Rational::new(rng.gen_range(1..=9), rng.gen_range(1..=3));
            acc.clone()
        })
        .collect();
    r.reverse();
    TaskSet::sequential(r).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let shape = skew_shape(8, true, &mut rng);
            assert!(!shape.is_normal() && shape.size() <= 8);
            assert!(standard_tableau(&shape, &mut rng).is_standard());
            let s = normal_state(5, 5, &mut rng);
            assert!(s.is_standard() && s.is_normal());
            let s = skew_state(4, 4, &mut rng);
            assert!(s.is_standard() && !s.is_normal());
            capacity_grid(3, 4, &mut rng);
            assert!(sequential_requirements(5, &mut rng).is_priority_ordered());
        }
    }
}
