//! Hierarchical 2D mesh systems.
//!
//! A processor grid of canonical (rectangular) shape has execution rates that
//! strictly decrease along rows and down columns. A task assignment is an
//! [`HmtState`]: each processor cell holds at most one task ID, and a lower ID
//! means a higher priority. When a task completes, its processor goes idle and
//! the greedy policy pulls the higher-priority of the right and lower
//! neighbours into it, repeating from the newly idle cell. That cascade is a
//! jeu de taquin slide on the tableau formed by the occupied cells.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, structural, Error, Result};
use crate::jdt::{first_corner, forward_slide};
use crate::partitions::{Cell, Partition, SkewShape};
use crate::rational::Rational;
use crate::tableaux::{Classification, Tableau};

/// Execution rates of a rectangular processor grid.
///
/// Rates strictly decrease to the right along every row and downward along
/// every column; anti-diagonal neighbours are unconstrained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Rational>>", into = "Vec<Vec<Rational>>")]
pub struct CapacityGrid {
    shape: Partition,
    rates: Vec<Vec<Rational>>,
}

impl TryFrom<Vec<Vec<Rational>>> for CapacityGrid {
    type Error = Error;

    fn try_from(rates: Vec<Vec<Rational>>) -> Result<Self> {
        CapacityGrid::new(rates)
    }
}

impl From<CapacityGrid> for Vec<Vec<Rational>> {
    fn from(c: CapacityGrid) -> Self {
        c.rates
    }
}

impl CapacityGrid {
    pub fn new(rates: Vec<Vec<Rational>>) -> Result<Self> {
        let shape = canonical_shape(rates.len(), rates.first().map_or(0, Vec::len))?;
        if rates.iter().any(|r| r.len() != shape.row_len(1)) {
            return Err(structural!("capacity rows have different lengths"));
        }
        for (i, row) in rates.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let cell = Cell::new(i + 1, j + 1);
                if !c.is_positive() {
                    return Err(domain!("capacity {c} at {cell} is not positive"));
                }
                if j > 0 && row[j - 1] <= *c {
                    return Err(domain!(
                        "capacities do not strictly decrease along row {}",
                        i + 1
                    ));
                }
                if i > 0 && rates[i - 1][j] <= *c {
                    return Err(domain!(
                        "capacities do not strictly decrease down column {}",
                        j + 1
                    ));
                }
            }
        }
        Ok(CapacityGrid { shape, rates })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rates(&self) -> &[Vec<Rational>] {
        &self.rates
    }

    pub fn rate(&self, cell: Cell) -> &Rational {
        &self.rates[cell.row - 1][cell.col - 1]
    }
}

fn canonical_shape(rows: usize, cols: usize) -> Result<Partition> {
    if rows == 0 || cols == 0 {
        return Err(structural!("processor grid must have at least one cell"));
    }
    Ok(Partition::rectangle(rows, cols))
}

/// `c(i, j) = 2^-(i + j - 2)`.
pub fn default_capacity_grid(shape: &Partition) -> Result<CapacityGrid> {
    if shape.is_empty() || !shape.is_canonical() {
        return Err(domain!("{shape} is not a canonical shape"));
    }
    let rates = (1..=shape.num_rows())
        .map(|i| {
            (1..=shape.row_len(1))
                .map(|j| Rational::new(1, 1i64 << (i + j - 2)))
                .collect()
        })
        .collect();
    CapacityGrid::new(rates)
}

/// A task assignment on a hierarchical mesh: a rectangular grid of optional task IDs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct HmtState {
    shape: Partition,
    cells: Vec<Vec<Option<u32>>>,
    capacities: Option<CapacityGrid>,
}

#[derive(Serialize, Deserialize)]
struct RawState {
    shape: Partition,
    cells: Vec<Vec<Option<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    capacities: Option<CapacityGrid>,
}

impl TryFrom<RawState> for HmtState {
    type Error = Error;

    fn try_from(raw: RawState) -> Result<Self> {
        HmtState::new(raw.shape, raw.cells, raw.capacities)
    }
}

impl From<HmtState> for RawState {
    fn from(s: HmtState) -> Self {
        RawState {
            shape: s.shape,
            cells: s.cells,
            capacities: s.capacities,
        }
    }
}

impl HmtState {
    pub fn new(
        shape: Partition,
        cells: Vec<Vec<Option<u32>>>,
        capacities: Option<CapacityGrid>,
    ) -> Result<Self> {
        if shape.is_empty() || !shape.is_canonical() {
            return Err(structural!("{shape} is not a canonical shape"));
        }
        if cells.len() != shape.num_rows() || cells.iter().any(|r| r.len() != shape.row_len(1)) {
            return Err(structural!("cell grid does not match shape {shape}"));
        }
        let mut seen = HashSet::new();
        for v in cells.iter().flatten().flatten() {
            if *v == 0 {
                return Err(structural!("task IDs must be positive"));
            }
            if !seen.insert(*v) {
                return Err(structural!("task {v} appears twice"));
            }
        }
        if let Some(c) = &capacities {
            if c.shape() != &shape {
                return Err(structural!(
                    "capacity grid {} does not match shape {shape}",
                    c.shape()
                ));
            }
        }
        Ok(HmtState {
            shape,
            cells,
            capacities,
        })
    }

    /// A state whose shape is the grid's bounding rectangle.
    pub fn from_grid(cells: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let shape = canonical_shape(cells.len(), cells.first().map_or(0, Vec::len))?;
        HmtState::new(shape, cells, None)
    }

    /// Places a tableau onto an empty grid of the given canonical shape.
    pub fn from_tableau(shape: &Partition, t: &Tableau) -> Result<Self> {
        let mut cells = vec![vec![None; shape.row_len(1)]; shape.num_rows()];
        for (c, v) in t.entries() {
            if !shape.contains_cell(c) {
                return Err(structural!("tableau cell {c} lies outside {shape}"));
            }
            cells[c.row - 1][c.col - 1] = Some(v);
        }
        HmtState::new(shape.clone(), cells, None)
    }

    pub fn with_capacities(mut self, capacities: CapacityGrid) -> Result<Self> {
        if capacities.shape() != &self.shape {
            return Err(structural!("capacity grid does not match {}", self.shape));
        }
        self.capacities = Some(capacities);
        Ok(self)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cells(&self) -> &[Vec<Option<u32>>] {
        &self.cells
    }

    pub fn capacities(&self) -> Option<&CapacityGrid> {
        self.capacities.as_ref()
    }

    pub fn rows(&self) -> usize {
        self.shape.num_rows()
    }

    pub fn cols(&self) -> usize {
        self.shape.row_len(1)
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.cells
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
            .flatten()
    }

    /// Occupied `(cell, task)` pairs in row-major order.
    pub fn tasks(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.cells.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(j, v)| v.map(|v| (Cell::new(i + 1, j + 1), v)))
        })
    }

    pub fn task_count(&self) -> usize {
        self.tasks().count()
    }

    pub fn position_of(&self, task: u32) -> Option<Cell> {
        self.tasks().find(|&(_, v)| v == task).map(|(c, _)| c)
    }

    fn set(&mut self, cell: Cell, v: Option<u32>) {
        self.cells[cell.row - 1][cell.col - 1] = v;
    }

    fn take(&mut self, cell: Cell) -> Option<u32> {
        self.cells[cell.row - 1][cell.col - 1].take()
    }

    /// Same grid and capacities with the tasks at `a` and `b` exchanged.
    pub fn swap_tasks(&self, a: Cell, b: Cell) -> HmtState {
        let mut s = self.clone();
        let (va, vb) = (s.get(a), s.get(b));
        s.set(a, vb);
        s.set(b, va);
        s
    }

    pub fn embedded(&self) -> Result<(SkewShape, Tableau)> {
        maximally_embedded(self)
    }

    /// Ordering class and form of the embedded tableau.
    pub fn classify(&self) -> Result<Classification> {
        Ok(self.embedded()?.1.classify())
    }

    /// Occupied cells form a tableau with rows and columns increasing.
    pub fn is_standard(&self) -> bool {
        self.embedded().is_ok_and(|(_, t)| t.is_partial())
    }

    pub fn is_normal(&self) -> bool {
        self.embedded().is_ok_and(|(s, _)| s.is_normal())
    }
}

impl fmt::Display for HmtState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.cells.iter().enumerate() {
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

/// Vertex-induced subgraph of the 2D mesh on the cells of a (skew) shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeshGraph {
    pub directed: bool,
    pub vertices: Vec<Cell>,
    /// Each edge points right or down; undirected graphs store the same pairs.
    pub edges: Vec<(Cell, Cell)>,
}

impl MeshGraph {
    /// Reads the skew shape back off the vertex set.
    pub fn shape(&self) -> Result<SkewShape> {
        let cells: HashSet<Cell> = self.vertices.iter().copied().collect();
        let rows = self.vertices.iter().map(|c| c.row).max().unwrap_or(0);
        let grid: Vec<Vec<Option<u8>>> = (1..=rows)
            .map(|i| {
                let width = self
                    .vertices
                    .iter()
                    .filter(|c| c.row == i)
                    .map(|c| c.col)
                    .max();
                (1..=width.unwrap_or(0))
                    .map(|j| cells.contains(&Cell::new(i, j)).then_some(1))
                    .collect()
            })
            .collect();
        skew_shape_of(&grid)
    }
}

pub fn mesh_graph(shape: &SkewShape, directed: bool) -> MeshGraph {
    let vertices: Vec<Cell> = shape.cells().collect();
    let mut edges = Vec::new();
    for &c in &vertices {
        for n in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
            if shape.contains(n) {
                edges.push((c, n));
            }
        }
    }
    MeshGraph {
        directed,
        vertices,
        edges,
    }
}

/// Skew shape formed by the occupied cells of a grid.
///
/// Each non-empty row must be one contiguous run. A wholly empty row `i` gets
/// `λ_i = μ_i` equal to the length of the next non-empty row below it (zero
/// when there is none), the smallest value that can keep both sequences
/// partitions.
fn skew_shape_of<T>(grid: &[Vec<Option<T>>]) -> Result<SkewShape> {
    let mut spans: Vec<Option<(usize, usize)>> = Vec::with_capacity(grid.len());
    for (i, row) in grid.iter().enumerate() {
        let occupied: Vec<usize> = (0..row.len()).filter(|&j| row[j].is_some()).collect();
        match (occupied.first(), occupied.last()) {
            (Some(&a), Some(&b)) => {
                if b - a + 1 != occupied.len() {
                    return Err(Error::InvalidState(format!(
                        "occupied cells of row {} are not contiguous",
                        i + 1
                    )));
                }
                spans.push(Some((a, b + 1)));
            }
            _ => spans.push(None),
        }
    }
    let mut outer = vec![0; spans.len()];
    let mut inner = vec![0; spans.len()];
    let mut below = 0;
    for i in (0..spans.len()).rev() {
        match spans[i] {
            Some((start, end)) => {
                inner[i] = start;
                outer[i] = end;
                below = end;
            }
            None => {
                inner[i] = below;
                outer[i] = below;
            }
        }
    }
    let not_skew =
        |e: Error| Error::InvalidState(format!("occupied cells are not a skew shape: {e}"));
    let outer = Partition::from_row_lengths(outer).map_err(not_skew)?;
    let inner = Partition::from_row_lengths(inner).map_err(not_skew)?;
    SkewShape::new(outer, inner).map_err(not_skew)
}

/// The skew shape of the occupied cells together with the tableau they form.
pub fn maximally_embedded(state: &HmtState) -> Result<(SkewShape, Tableau)> {
    let shape = skew_shape_of(&state.cells)?;
    let rows = (1..=shape.outer().num_rows())
        .map(|i| {
            (1..=shape.outer().row_len(i))
                .map(|j| state.get(Cell::new(i, j)))
                .collect()
        })
        .collect();
    let t = Tableau::new(shape.clone(), rows)?;
    Ok((shape, t))
}

/// Adjacent occupied pairs `(left/above, right/below)` where the
/// right/below task has the smaller ID. Sorted.
pub fn descent_pairs(state: &HmtState) -> Vec<(Cell, Cell)> {
    let mut out = Vec::new();
    for (c, v) in state.tasks() {
        for n in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
            if state.get(n).is_some_and(|w| w < v) {
                out.push((c, n));
            }
        }
    }
    out.sort();
    out
}

/// A task moved from a busy processor to an adjacent idle one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relocation {
    pub task: u32,
    pub from: Cell,
    pub to: Cell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trigger {
    Completed(u32),
    RectifyCorner(Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Event {
    pub trigger: Trigger,
    pub relocations: Vec<Relocation>,
    pub state: HmtState,
    /// Completion of the last remaining task; no reassignment follows it.
    #[serde(rename = "final", default, skip_serializing_if = "std::ops::Not::not")]
    pub is_final: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReassignmentTrace {
    pub initial: HmtState,
    pub events: Vec<Event>,
}

impl ReassignmentTrace {
    /// The reassignment sequence `A_0, A_1, …`: the initial state and every
    /// non-final event state.
    pub fn states(&self) -> Vec<&HmtState> {
        std::iter::once(&self.initial)
            .chain(self.events.iter().filter(|e| !e.is_final).map(|e| &e.state))
            .collect()
    }

    pub fn final_state(&self) -> &HmtState {
        self.events.last().map_or(&self.initial, |e| &e.state)
    }

    /// Replays every event from the previous state and checks that each
    /// relocation moves its task one step from a busy cell into an idle one,
    /// and that the replay reproduces the recorded state.
    pub fn check_relocations(&self) -> Result<()> {
        let mut cur = self.initial.clone();
        for (k, ev) in self.events.iter().enumerate() {
            if let Trigger::Completed(task) = ev.trigger {
                let cell = cur
                    .position_of(task)
                    .ok_or_else(|| domain!("event {k}: task {task} is not running"))?;
                cur.take(cell);
            }
            for r in &ev.relocations {
                if !r.from.is_adjacent(&r.to) {
                    return Err(domain!(
                        "event {k}: {} -> {} are not adjacent",
                        r.from,
                        r.to
                    ));
                }
                if cur.get(r.from) != Some(r.task) {
                    return Err(domain!("event {k}: task {} is not at {}", r.task, r.from));
                }
                if cur.get(r.to).is_some() {
                    return Err(domain!("event {k}: target {} is busy", r.to));
                }
                cur.take(r.from);
                cur.set(r.to, Some(r.task));
            }
            if cur.cells != ev.state.cells {
                return Err(domain!("event {k}: replay does not match recorded state"));
            }
        }
        Ok(())
    }
}

fn require_standard_normal(state: &HmtState) -> Result<()> {
    let (shape, t) = state.embedded()?;
    if !shape.is_normal() {
        return Err(domain!("state {state} is not of normal shape"));
    }
    if !t.is_partial() {
        return Err(domain!("state {state} is not standard"));
    }
    Ok(())
}

/// Greedy relocation from an idle cell: while an occupied right or lower
/// neighbour exists, the smaller task ID moves in.
fn cascade(state: &mut HmtState, mut hole: Cell) -> Vec<Relocation> {
    let mut moves = Vec::new();
    loop {
        let right = Cell::new(hole.row, hole.col + 1);
        let below = Cell::new(hole.row + 1, hole.col);
        let next = match (state.get(right), state.get(below)) {
            (Some(r), Some(b)) => {
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
        let task = state.take(next).unwrap();
        state.set(hole, Some(task));
        moves.push(Relocation {
            task,
            from: next,
            to: hole,
        });
        hole = next;
    }
    moves
}

/// Vacates `task`'s processor and runs the greedy cascade from it.
pub fn reassign_on_completion(state: &HmtState, task: u32) -> Result<(HmtState, Vec<Relocation>)> {
    require_standard_normal(state)?;
    let cell = state
        .position_of(task)
        .ok_or_else(|| domain!("task {task} is not in the assignment"))?;
    let mut next = state.clone();
    next.take(cell);
    let moves = cascade(&mut next, cell);
    debug_assert!(next.is_standard() && next.is_normal());
    Ok((next, moves))
}

/// Folds [`reassign_on_completion`] over a completion sequence.
///
/// Completing the last remaining task is recorded as a final event with no
/// relocations; it is not part of [`ReassignmentTrace::states`].
pub fn reassignment_sequence(a0: &HmtState, completions: &[u32]) -> Result<ReassignmentTrace> {
    require_standard_normal(a0)?;
    let mut cur = a0.clone();
    let mut events = Vec::with_capacity(completions.len());
    for &task in completions {
        let (next, relocations) = reassign_on_completion(&cur, task)?;
        let is_final = next.task_count() == 0;
        events.push(Event {
            trigger: Trigger::Completed(task),
            relocations,
            state: next.clone(),
            is_final,
        });
        cur = next;
    }
    Ok(ReassignmentTrace {
        initial: a0.clone(),
        events,
    })
}

/// Converts a skew assignment to normal shape, one forward slide per idle
/// cell of the embedded inner shape, using the lexicographically smallest
/// inner corner each time.
pub fn rectify_assignment(a0: &HmtState) -> Result<ReassignmentTrace> {
    rectify_assignment_with(a0, first_corner)
}

/// As [`rectify_assignment`], with `policy` choosing among the inner corners
/// (top to bottom) by index.
pub fn rectify_assignment_with<F>(a0: &HmtState, mut policy: F) -> Result<ReassignmentTrace>
where
    F: FnMut(&[Cell]) -> usize,
{
    let (_, mut t) = a0.embedded()?;
    if !t.is_partial() {
        return Err(domain!("state {a0} is not standard"));
    }
    let mut events = Vec::new();
    while !t.shape().is_normal() {
        let corners = t.shape().inner().inner_corners();
        let k = policy(&corners);
        let start = *corners
            .get(k)
            .ok_or_else(|| domain!("policy chose corner {k} of {}", corners.len()))?;
        let slide = forward_slide(&t, start)?;
        let relocations = slide
            .steps
            .iter()
            .map(|s| Relocation {
                task: s.moved_entry,
                from: s.from,
                to: s.hole,
            })
            .collect();
        let mut state = HmtState::from_tableau(a0.shape(), &slide.tableau)?;
        state.capacities = a0.capacities.clone();
        events.push(Event {
            trigger: Trigger::RectifyCorner(start),
            relocations,
            state,
            is_final: false,
        });
        t = slide.tableau;
    }
    Ok(ReassignmentTrace {
        initial: a0.clone(),
        events,
    })
}

/// Compacts every column upward, keeping the top-to-bottom order of its tasks.
pub fn naive_slide_up(a0: &HmtState) -> HmtState {
    let mut out = a0.clone();
    for j in 1..=a0.cols() {
        let column: Vec<u32> = (1..=a0.rows())
            .filter_map(|i| a0.get(Cell::new(i, j)))
            .collect();
        for i in 1..=a0.rows() {
            out.set(Cell::new(i, j), column.get(i - 1).copied());
        }
    }
    out
}

/// Both assignments rectify to the same final assignment.
pub fn reassignment_equivalent(s1: &HmtState, s2: &HmtState) -> Result<bool> {
    if s1.shape() != s2.shape() {
        return Err(domain!("shapes {} and {} differ", s1.shape(), s2.shape()));
    }
    let f1 = rectify_assignment(s1)?;
    let f2 = rectify_assignment(s2)?;
    Ok(f1.final_state().cells == f2.final_state().cells)
}

/// Resource requirements `r(1), …, r(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct TaskSet {
    requirements: Vec<Rational>,
}

impl TryFrom<Vec<Rational>> for TaskSet {
    type Error = Error;

    fn try_from(r: Vec<Rational>) -> Result<Self> {
        TaskSet::new(r)
    }
}

impl From<TaskSet> for Vec<Rational> {
    fn from(t: TaskSet) -> Self {
        t.requirements
    }
}

impl TaskSet {
    pub fn new(requirements: Vec<Rational>) -> Result<Self> {
        if let Some(k) = requirements.iter().position(|r| !r.is_positive()) {
            return Err(domain!("requirement of task {} is not positive", k + 1));
        }
        Ok(TaskSet { requirements })
    }

    /// Requirements for a sequential application: strictly decreasing in task ID.
    pub fn sequential(requirements: Vec<Rational>) -> Result<Self> {
        if requirements.windows(2).any(|w| w[0] <= w[1]) {
            return Err(domain!("requirements must strictly decrease with task ID"));
        }
        TaskSet::new(requirements)
    }

    pub fn len(&self) -> usize {
        self.requirements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.requirements.is_empty()
    }

    pub fn requirement(&self, task: u32) -> Option<&Rational> {
        (task as usize)
            .checked_sub(1)
            .and_then(|k| self.requirements.get(k))
    }

    pub fn is_priority_ordered(&self) -> bool {
        self.requirements.windows(2).all(|w| w[0] > w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskRun {
    pub task: u32,
    pub cell: Cell,
    pub duration: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Turnaround {
    pub total: Rational,
    pub per_task: Vec<TaskRun>,
}

fn duration(tasks: &TaskSet, caps: &CapacityGrid, task: u32, cell: Cell) -> Result<Rational> {
    let r = tasks
        .requirement(task)
        .ok_or_else(|| domain!("no requirement for task {task}"))?;
    Ok(r / caps.rate(cell))
}

/// `Σ r(i) / c(cell of i)` over every occupied cell; any ordering allowed.
pub fn execution_cost(state: &HmtState, tasks: &TaskSet, caps: &CapacityGrid) -> Result<Rational> {
    if caps.shape() != state.shape() {
        return Err(domain!("capacity grid does not match {}", state.shape()));
    }
    state
        .tasks()
        .map(|(c, v)| duration(tasks, caps, v, c))
        .collect::<Result<Vec<_>>>()
        .map(|d| d.into_iter().sum())
}

/// Turnaround time of tasks `1, …, m` run back to back in ID order.
///
/// Without relocation each task runs where `a0` put it. With relocation the
/// greedy cascade runs after every completion, and each task runs on the
/// processor it holds when its predecessor finishes.
pub fn turnaround_sequential(
    a0: &HmtState,
    tasks: &TaskSet,
    caps: &CapacityGrid,
    relocate: bool,
) -> Result<Turnaround> {
    require_standard_normal(a0)?;
    if caps.shape() != a0.shape() {
        return Err(domain!("capacity grid does not match {}", a0.shape()));
    }
    let m = a0.task_count() as u32;
    for task in 1..=m {
        if a0.position_of(task).is_none() {
            return Err(domain!("occupied tasks are not exactly 1..={m}"));
        }
        if tasks.requirement(task).is_none() {
            return Err(domain!("no requirement for task {task}"));
        }
    }
    let mut cur = a0.clone();
    let mut per_task = Vec::with_capacity(m as usize);
    for task in 1..=m {
        let cell = cur.position_of(task).expect("task present");
        per_task.push(TaskRun {
            task,
            cell,
            duration: duration(tasks, caps, task, cell)?,
        });
        if relocate && task < m {
            cur = reassign_on_completion(&cur, task)?.0;
        }
    }
    let total = per_task.iter().map(|r| r.duration.clone()).sum();
    Ok(Turnaround { total, per_task })
}
