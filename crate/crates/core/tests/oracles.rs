//! Library results checked against brute-force enumeration.

mod common;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use taquin::hms::{
    descent_pairs, execution_cost, mesh_graph, rectify_assignment, rectify_assignment_with,
    turnaround_sequential,
};
use taquin::partitions::{count_syt, partitions_of};
use taquin::tableaux::enumerate_syt;
use taquin::{random, Cell, HmtState, Partition, SkewShape};

#[test]
fn hook_formula_matches_brute_force_fillings() {
    for n in 1..=7 {
        for shape in partitions_of(n) {
            let brute = common::standard_fillings(&SkewShape::normal(shape.clone())).len();
            assert_eq!(count_syt(&shape), BigUint::from(brute), "{shape}");
            assert_eq!(enumerate_syt(&shape).unwrap().len(), brute, "{shape}");
        }
    }
}

#[test]
fn standard_assignments_are_mesh_linear_extensions() {
    for n in 1..=7 {
        for shape in partitions_of(n) {
            let g = mesh_graph(&SkewShape::normal(shape.clone()), true);
            assert_eq!(g.vertices.len(), n);
            assert!(g.edges.iter().all(|(a, b)| a.is_adjacent(b) && a < b));
            assert_eq!(
                BigUint::from(common::linear_extensions(&shape)),
                count_syt(&shape),
                "{shape}"
            );
        }
    }
}

#[test]
fn rectification_ignores_corner_policy() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let s = random::skew_state(5, 5, &mut rng);
        let (shape, _) = s.embedded().unwrap();
        if shape.inner().size() > 4 {
            continue;
        }
        let first = rectify_assignment(&s).unwrap();
        let last = rectify_assignment_with(&s, |c| c.len() - 1).unwrap();
        assert_eq!(first.final_state().cells(), last.final_state().cells());
        assert_eq!(first.events.len(), shape.inner().size());
        first.check_relocations().unwrap();
        last.check_relocations().unwrap();
    }
}

/// Swapping the two tasks of a descent pair in a sequential assignment never
/// increases the total execution time.
#[test]
fn fixing_a_descent_pair_helps() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut seen = 0;
    for _ in 0..400 {
        let a0 = random::normal_state(4, 4, &mut rng);
        let m = a0.task_count();
        let caps = random::capacity_grid(a0.rows(), a0.cols(), &mut rng);
        let tasks = random::sequential_requirements(m, &mut rng);
        let mut cells: Vec<Option<u32>> = a0.cells().iter().flatten().copied().collect();
        use rand::seq::SliceRandom;
        let occupied: Vec<usize> = (0..cells.len()).filter(|&k| cells[k].is_some()).collect();
        let mut ids: Vec<u32> = occupied.iter().map(|&k| cells[k].unwrap()).collect();
        ids.shuffle(&mut rng);
        for (&k, &v) in occupied.iter().zip(&ids) {
            cells[k] = Some(v);
        }
        let grid = cells.chunks(a0.cols()).map(|r| r.to_vec()).collect();
        let g = HmtState::from_grid(grid).unwrap();
        for (a, b) in descent_pairs(&g) {
            let before = execution_cost(&g, &tasks, &caps).unwrap();
            let after = execution_cost(&g.swap_tasks(a, b), &tasks, &caps).unwrap();
            assert!(after < before, "{g}: swapping {a},{b}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn turnaround_matches_step_by_step_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let a0 = random::normal_state(4, 4, &mut rng);
        let m = a0.task_count() as u32;
        let caps = random::capacity_grid(a0.rows(), a0.cols(), &mut rng);
        let tasks = random::requirements(m as usize, &mut rng);
        let t1 = turnaround_sequential(&a0, &tasks, &caps, false).unwrap();
        let expected = execution_cost(&a0, &tasks, &caps).unwrap();
        assert_eq!(t1.total, expected);
        let t2 = turnaround_sequential(&a0, &tasks, &caps, true).unwrap();
        // Run in ID order, the next task always sits at the top-left processor.
        assert!(t2.per_task.iter().all(|r| r.cell == Cell::new(1, 1)));
    }
}

#[test]
fn maximal_embedding_of_skew_t1() {
    let t1: HmtState = serde_json::from_str(taquin::scenarios::fixtures::SKEW_T1).unwrap();
    let (shape, t) = t1.embedded().unwrap();
    assert_eq!(
        shape,
        SkewShape::new(
            Partition::new(vec![4, 3, 3, 2]).unwrap(),
            Partition::new(vec![2, 2]).unwrap()
        )
        .unwrap()
    );
    assert_eq!(HmtState::from_tableau(t1.shape(), &t).unwrap(), t1);
}
