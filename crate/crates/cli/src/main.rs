use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use taquin::hms::{
    default_capacity_grid, descent_pairs, reassignment_sequence, rectify_assignment,
    turnaround_sequential,
};
use taquin::json::to_canonical_string;
use taquin::partitions::{count_syt, hook_lengths, verify_sum_squares};
use taquin::rsk::{rsk, rsk_inverse};
use taquin::scenarios;
use taquin::{random, CapacityGrid, HmtState, Partition, Permutation, Tableau, TaskSet};

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        write!(std::io::stdout(), $($t)*)?;
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        writeln!(std::io::stdout(), $($t)*)?;
    }};
}

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(
    name = "taquin",
    version,
    about = "Young tableaux and greedy task reassignment on 2D meshes"
)]
struct Cli {
    /// Run every bundled worked scenario and diff against the golden files.
    #[arg(long)]
    figures: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of standard tableaux of a shape, with its hook lengths.
    Count {
        #[arg(long)]
        shape: Partition,
    },
    /// Compare the sum of squared tableau counts over shapes of N with N!.
    VerifyIdentity {
        #[arg(long)]
        n: usize,
    },
    /// Insertion and recording tableaux of a permutation, or the inverse map.
    Rsk {
        #[arg(long, required_unless_present = "inverse")]
        perm: Option<Permutation>,
        /// Recover the permutation from P and Q tableau files.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], conflicts_with = "perm")]
        inverse: Option<Vec<PathBuf>>,
    },
    /// Rectify a skew assignment by greedy relocation.
    Rectify {
        #[arg(long)]
        state: PathBuf,
        /// Write the trace here and print only the final state.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Replay a completion sequence on a normal assignment.
    Simulate {
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        completions: Vec<u32>,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Turnaround time of a sequential assignment, with and without relocation.
    Turnaround {
        #[arg(long, required_unless_present = "random")]
        state: Option<PathBuf>,
        #[arg(long, required_unless_present = "random")]
        requirements: Option<PathBuf>,
        #[arg(long)]
        capacities: Option<PathBuf>,
        /// Print both totals and their difference.
        #[arg(long)]
        compare: bool,
        /// Use a seeded random instance instead of input files.
        #[arg(long, conflicts_with_all = ["state", "requirements", "capacities"])]
        random: bool,
        #[arg(long, env = "TAQUIN_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Classification, embedded shape and descent pairs of an assignment.
    Check {
        #[arg(long)]
        state: PathBuf,
    },
    /// Run every bundled worked scenario and diff against the golden files.
    Figures {
        /// Print the named scenario instead of diffing.
        #[arg(long)]
        show: Option<String>,
    },
}

/// An error in the input rather than a failed property.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| InputError(e).into())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    input((|| {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    })())
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    out!("{}", to_canonical_string(value)?);
    Ok(())
}

fn write_or_print<T: Serialize>(
    trace: &T,
    out: Option<&Path>,
    summary: impl Serialize,
) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, to_canonical_string(trace)?)
                .with_context(|| format!("writing {}", path.display()))?;
            emit(&summary)
        }
        None => emit(trace),
    }
}

fn count(shape: &Partition) -> Result<bool> {
    outln!("shape {shape}");
    outln!("count {}", count_syt(shape));
    outln!("hooks");
    for row in hook_lengths(shape) {
        let cells: Vec<String> = row.iter().map(|h| h.to_string()).collect();
        outln!("{}", cells.join(" "));
    }
    Ok(true)
}

fn verify_identity(n: usize) -> Result<bool> {
    let s = verify_sum_squares(n);
    outln!("sum of squares {}", s.sum_of_squares);
    outln!("factorial {}", s.factorial);
    outln!("{}", if s.equal { "equal" } else { "NOT equal" });
    Ok(s.equal)
}

fn rsk_cmd(perm: Option<Permutation>, inverse: Option<Vec<PathBuf>>) -> Result<bool> {
    if let Some(files) = inverse {
        let p: Tableau = read_json(&files[0])?;
        let q: Tableau = read_json(&files[1])?;
        let pi = input(rsk_inverse(&p, &q).map_err(Into::into))?;
        outln!("{}", serde_json::to_string(&pi)?);
        return Ok(true);
    }
    let pi = perm.expect("clap requires --perm without --inverse");
    let (p, q) = rsk(&pi);
    emit(&json!({"perm": pi, "P": p.rows(), "Q": q.rows()}))?;
    Ok(true)
}

fn rectify_cmd(state: &Path, out: Option<&Path>) -> Result<bool> {
    let a0: HmtState = read_json(state)?;
    let trace = input(rectify_assignment(&a0).map_err(Into::into))?;
    let summary = json!({"events": trace.events.len(), "final": trace.final_state()});
    write_or_print(&trace, out, summary)?;
    Ok(trace.final_state().is_standard() && trace.final_state().is_normal())
}

fn simulate(state: &Path, completions: &[u32], out: Option<&Path>) -> Result<bool> {
    let a0: HmtState = read_json(state)?;
    let trace = input(reassignment_sequence(&a0, completions).map_err(Into::into))?;
    let summary = json!({"events": trace.events.len(), "final": trace.final_state()});
    write_or_print(&trace, out, summary)?;
    Ok(trace
        .states()
        .iter()
        .all(|s| s.is_standard() && s.is_normal()))
}

fn random_instance(seed: u64) -> (HmtState, TaskSet, CapacityGrid) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a0 = random::normal_state(5, 5, &mut rng);
        if a0.task_count() < 2 {
            continue;
        }
        let caps = random::capacity_grid(a0.rows(), a0.cols(), &mut rng);
        let tasks = random::requirements(a0.task_count(), &mut rng);
        return (a0, tasks, caps);
    }
}

fn turnaround(
    state: Option<PathBuf>,
    requirements: Option<PathBuf>,
    capacities: Option<PathBuf>,
    compare: bool,
    random: bool,
    seed: u64,
) -> Result<bool> {
    let (a0, tasks, caps) = if random {
        outln!("seed {seed}");
        random_instance(seed)
    } else {
        let a0: HmtState = read_json(state.as_deref().expect("required by clap"))?;
        let tasks: TaskSet = read_json(requirements.as_deref().expect("required by clap"))?;
        let caps = match (capacities, a0.capacities()) {
            (Some(path), _) => read_json(&path)?,
            (None, Some(c)) => c.clone(),
            (None, None) => input(default_capacity_grid(a0.shape()).map_err(Into::into))?,
        };
        (a0, tasks, caps)
    };
    let with = input(turnaround_sequential(&a0, &tasks, &caps, true).map_err(Into::into))?;
    if !compare {
        outln!("T2 {}", with.total);
        return Ok(true);
    }
    let without = input(turnaround_sequential(&a0, &tasks, &caps, false).map_err(Into::into))?;
    let diff = &without.total - &with.total;
    outln!("T1 {}", without.total);
    outln!("T2 {}", with.total);
    outln!("T1-T2 {diff}");
    Ok(a0.task_count() < 2 || with.total < without.total)
}

fn check(state: &Path) -> Result<bool> {
    let s: HmtState = read_json(state)?;
    let (shape, _) = input(s.embedded().map_err(Into::into))?;
    emit(&json!({
        "class": s.classify()?,
        "embedded_shape": shape,
        "descent_pairs": descent_pairs(&s),
    }))?;
    Ok(true)
}

fn run_figures(show: Option<String>) -> Result<bool> {
    if let Some(name) = show {
        match scenarios::render(&name) {
            Some(text) => out!("{}", text?),
            None => return input(Err(anyhow::anyhow!("unknown scenario {name:?}"))),
        }
        return Ok(true);
    }
    let mut ok = true;
    for ((name, got), (_, want)) in scenarios::render_all()?.iter().zip(scenarios::GOLDEN) {
        if got == want {
            outln!("ok   {name}");
        } else {
            ok = false;
            outln!("DIFF {name}");
            for (k, (a, b)) in want.lines().zip(got.lines()).enumerate() {
                if a != b {
                    outln!("  line {}: expected {a:?}, got {b:?}", k + 1);
                    break;
                }
            }
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    let command = match (cli.figures, cli.command) {
        (true, _) => Command::Figures { show: None },
        (false, Some(c)) => c,
        (false, None) => bail!(InputError(anyhow::anyhow!("no command given; see --help"))),
    };
    match command {
        Command::Count { shape } => count(&shape),
        Command::VerifyIdentity { n } => verify_identity(n),
        Command::Rsk { perm, inverse } => rsk_cmd(perm, inverse),
        Command::Rectify { state, trace } => rectify_cmd(&state, trace.as_deref()),
        Command::Simulate {
            state,
            completions,
            trace,
        } => simulate(&state, &completions, trace.as_deref()),
        Command::Turnaround {
            state,
            requirements,
            capacities,
            compare,
            random,
            seed,
        } => turnaround(state, requirements, capacities, compare, random, seed),
        Command::Check { state } => check(&state),
        Command::Figures { show } => run_figures(show),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<InputError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
