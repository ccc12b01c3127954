use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use dncount::counting::{a_count, d_count};
use dncount::mutation_class::{d_mutation_class, BfsOptions};
use dncount::polygon::{
    enumerate_triangulations, triangulation_classes, DEFAULT_TRIANGULATION_BOUND,
};
use dncount::trees::{enumerate_star_trees, DEFAULT_TREE_BOUND};
use dncount::{lambda, sigma, Diagonal, Quiver, StarTree, Step, TreeMutation, Triangulation};

mod verify;

pub const DEFAULT_QUIVER_BOUND: usize = 9;

#[derive(Parser)]
#[command(
    name = "dncount",
    version,
    about = "Count and enumerate the mutation class of type D_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
pub struct Bounds {
    /// Largest n for the quiver breadth-first search.
    #[arg(long, default_value_t = DEFAULT_QUIVER_BOUND)]
    pub quiver_bound: usize,
    /// Largest n for triangulation enumeration.
    #[arg(long, default_value_t = DEFAULT_TRIANGULATION_BOUND)]
    pub triangulation_bound: usize,
    /// Largest n for star tree enumeration.
    #[arg(long, default_value_t = DEFAULT_TREE_BOUND)]
    pub tree_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form count of the mutation class.
    Count {
        n: u64,
        #[arg(long = "type", value_enum, default_value_t = DynkinType::D)]
        kind: DynkinType,
    },
    /// Write one canonical representative per class as a JSON array.
    Enumerate {
        n: usize,
        #[arg(long, value_enum)]
        what: Objects,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Every triangulation instead of one per class.
        #[arg(long)]
        all: bool,
        /// Orientation bits of the D_n seed, one per edge.
        #[arg(long, default_value_t = 0)]
        seed_orientation: u64,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Convert a triangulation or tree (JSON) into another form.
    Convert {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Input file, `-` for standard input.
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every counting method for nmin..=nmax.
    Verify {
        nmin: u64,
        nmax: u64,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include wall-clock times (output is no longer reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = 0)]
        seed_orientation: u64,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Apply one mutation to a quiver, triangulation or tree (JSON).
    Mutate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex index for quivers; diagonal index or `arc:a:b`, `plain:a`,
        /// `notched:a` for triangulations; `type1:i`, `type2:i` or
        /// `type3:i:PATH` (PATH over L and R) for trees.
        #[arg(long)]
        at: String,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DynkinType {
    #[value(name = "D")]
    D,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Objects {
    Quivers,
    Triangulations,
    Trees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Triangulation,
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Quiver,
    Tree,
    Triangulation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Quiver,
    Triangulation,
    Tree,
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(anyhow::Error),
    Bound(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Bound(_) => 3,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<dncount::Error> for Failure {
    fn from(e: dncount::Error) -> Self {
        match e {
            dncount::Error::BoundExceeded { .. } | dncount::Error::ClassCapExceeded { .. } => {
                Failure::Bound(e.into())
            }
            _ => Failure::Usage(e.into()),
        }
    }
}

fn check_bound(n: usize, bound: usize) -> Result<(), Failure> {
    if n > bound {
        return Err(dncount::Error::BoundExceeded { n, bound }.into());
    }
    Ok(())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn parse<T: DeserializeOwned>(path: &Path, what: &str) -> anyhow::Result<T> {
    let text = read_input(path)?;
    serde_json::from_str(&text).with_context(|| format!("malformed {what} in {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn count(n: u64, kind: DynkinType) -> Result<(), Failure> {
    let (label, value) = match kind {
        DynkinType::D => ("D", d_count(n)?),
        DynkinType::A => ("A", a_count(n)?),
    };
    let value = value.to_string();
    let width = value.len().max(5);
    println!("type  {:>4}  {:>width$}", "n", "count");
    println!("{label:<4}  {n:>4}  {value:>width$}");
    Ok(())
}

fn enumerate(
    n: usize,
    what: Objects,
    out: Option<&Path>,
    all: bool,
    seed_orientation: u64,
    bounds: Bounds,
) -> Result<(), Failure> {
    let (len, json) = match what {
        Objects::Quivers => {
            check_bound(n, bounds.quiver_bound)?;
            let class = d_mutation_class(
                n,
                seed_orientation,
                &BfsOptions {
                    parallel: true,
                    ..BfsOptions::default()
                },
            )?;
            let reps: Vec<&Quiver> = class.representatives().collect();
            (reps.len(), to_json(&reps)?)
        }
        Objects::Triangulations => {
            if all {
                let ts = enumerate_triangulations(n, bounds.triangulation_bound)?;
                (ts.len(), to_json(&ts)?)
            } else {
                let classes = triangulation_classes(n, bounds.triangulation_bound)?;
                let reps: Vec<&Triangulation> = classes.values().collect();
                (reps.len(), to_json(&reps)?)
            }
        }
        Objects::Trees => {
            let trees = enumerate_star_trees(n, bounds.tree_bound)?;
            let reps: Vec<&StarTree> = trees.values().collect();
            (reps.len(), to_json(&reps)?)
        }
    };
    if let Some(p) = out {
        emit(Some(p), &json)?;
    }
    println!("{len}");
    Ok(())
}

fn render_quiver(q: &Quiver, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Dot => Ok(q.to_dot()),
        Format::Json => to_json(q),
    }
}

fn convert(
    from: Source,
    to: Target,
    format: Format,
    input: &Path,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if format == Format::Dot && to != Target::Quiver {
        return Err(anyhow!("DOT output is only available for quivers").into());
    }
    let text = match (from, to) {
        (Source::Triangulation, Target::Quiver) => {
            let t: Triangulation = parse(input, "triangulation")?;
            render_quiver(&t.quiver()?, format)?
        }
        (Source::Triangulation, Target::Tree) => {
            let t: Triangulation = parse(input, "triangulation")?;
            to_json(&sigma(&t)?.canonical())?
        }
        (Source::Tree, Target::Triangulation) => {
            let tree: StarTree = parse(input, "tree")?;
            to_json(&lambda(&tree, tree.leaves())?)?
        }
        (Source::Tree, Target::Quiver) => {
            let tree: StarTree = parse(input, "tree")?;
            render_quiver(&lambda(&tree, tree.leaves())?.quiver()?, format)?
        }
        (Source::Triangulation, Target::Triangulation) | (Source::Tree, Target::Tree) => {
            return Err(anyhow!("source and target are the same kind").into());
        }
    };
    emit(out, &text)?;
    Ok(())
}

fn parse_index(s: &str) -> anyhow::Result<usize> {
    s.parse().with_context(|| format!("not an index: {s:?}"))
}

fn parse_diagonal(s: &str) -> anyhow::Result<Diagonal> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["arc", a, b] => Ok(Diagonal::arc(parse_index(a)?, parse_index(b)?)),
        ["plain", a] => Ok(Diagonal::plain(parse_index(a)?)),
        ["notched", a] => Ok(Diagonal::notched(parse_index(a)?)),
        _ => bail!("expected arc:a:b, plain:a or notched:a, got {s:?}"),
    }
}

fn parse_tree_mutation(s: &str) -> anyhow::Result<TreeMutation> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["type1", i] => Ok(TreeMutation::SplitBead(parse_index(i)?)),
        ["type2", i] => Ok(TreeMutation::MergeBeads(parse_index(i)?)),
        ["type3", i, path] => {
            let path = path
                .chars()
                .map(|c| match c {
                    'L' => Ok(Step::Left),
                    'R' => Ok(Step::Right),
                    _ => Err(anyhow!("path steps are L or R, got {c:?}")),
                })
                .collect::<anyhow::Result<Vec<Step>>>()?;
            Ok(TreeMutation::RotateEdge {
                bead: parse_index(i)?,
                path,
            })
        }
        _ => bail!("expected type1:i, type2:i or type3:i:PATH, got {s:?}"),
    }
}

fn mutate(kind: Kind, at: &str, input: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let text = match kind {
        Kind::Quiver => {
            let q: Quiver = parse(input, "quiver")?;
            to_json(&q.mutate(parse_index(at)?)?)?
        }
        Kind::Triangulation => {
            let t: Triangulation = parse(input, "triangulation")?;
            let d = match at.parse::<usize>() {
                Ok(i) => *t
                    .diagonals()
                    .get(i)
                    .ok_or_else(|| anyhow!("no diagonal {i}, triangulation has {}", t.n()))?,
                Err(_) => parse_diagonal(at)?,
            };
            to_json(&t.flip(&d)?.0)?
        }
        Kind::Tree => {
            let tree: StarTree = parse(input, "tree")?;
            to_json(&tree.mutate(&parse_tree_mutation(at)?)?)?
        }
    };
    emit(out, &text)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { n, kind } => count(n, kind),
        Command::Enumerate {
            n,
            what,
            out,
            all,
            seed_orientation,
            bounds,
        } => enumerate(n, what, out.as_deref(), all, seed_orientation, bounds),
        Command::Convert {
            from,
            to,
            format,
            input,
            out,
        } => convert(from, to, format, &input, out.as_deref()),
        Command::Verify {
            nmin,
            nmax,
            json,
            timings,
            seed_orientation,
            bounds,
        } => verify::run(
            nmin,
            nmax,
            json.as_deref(),
            timings,
            seed_orientation,
            bounds,
        ),
        Command::Mutate {
            kind,
            at,
            input,
            out,
        } => mutate(kind, &at, &input, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification(msg) => eprintln!("verification failed: {msg}"),
                Failure::Usage(e) | Failure::Bound(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}
