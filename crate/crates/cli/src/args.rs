use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact determinants, characteristic polynomials and combinatorial counts for
/// inputs whose underlying graph has small treewidth.
///
/// Graph files use `p tw n m` (undirected) or `p dgr n m` (directed) headers with
/// 1-based vertex ids; decompositions use the `.td` format; matrices are `n`
/// followed by `n` rows of integers.
#[derive(Debug, Parser)]
#[command(name = "twcount", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Command {
    #[command(flatten)]
    Task(Task),
    /// Run another subcommand and check its result against an oracle.
    Verify {
        #[command(subcommand)]
        task: Task,
    },
}

impl Command {
    /// The task to run and whether an oracle check was requested.
    pub fn task(&self) -> (&Task, bool) {
        match self {
            Command::Task(t) => (t, t.common().verify),
            Command::Verify { task } => (task, true),
        }
    }
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Emit a JSON report instead of plain text.
    #[arg(long)]
    pub json: bool,
    /// Largest decomposition width the engine will accept.
    #[arg(long, value_name = "N")]
    pub max_width: Option<usize>,
    /// Recompute the result with an independent oracle and report MATCH or MISMATCH.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args, Clone)]
pub struct MatrixInput {
    /// Matrix file.
    #[arg(long, value_name = "FILE")]
    pub matrix: PathBuf,
    /// Tree decomposition of the matrix support; a min-fill heuristic is used otherwise.
    #[arg(long, value_name = "FILE")]
    pub td: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct GraphInput {
    /// Graph file.
    #[arg(long, value_name = "FILE")]
    pub graph: PathBuf,
    /// Tree decomposition of the graph; a min-fill heuristic is used otherwise.
    #[arg(long, value_name = "FILE")]
    pub td: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Arc list exactly as published.
    Literal,
    /// Self-loops everywhere plus arcs `s -> 1` and `t+1 -> t`.
    Reconciled,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Task {
    /// Compute a min-fill tree decomposition of a graph.
    Decomp {
        /// Graph file.
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Write the decomposition here instead of including it in the report.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a tree decomposition against a graph and report its width.
    Validate {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        td: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Determinant of an integer matrix.
    Det {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic polynomial det(xI - A), coefficients from x^0 upward.
    Charpoly {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        common: Common,
    },
    /// Trace of the k-th matrix power.
    Trace {
        #[command(flatten)]
        input: MatrixInput,
        /// Exponent.
        #[arg(long, value_name = "N")]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Cycle covers by number of cycles, for a graph (arc multiplicities) or a weighted matrix.
    Histogram {
        /// Graph file; undirected edges count in both directions.
        #[arg(long, value_name = "FILE", conflicts_with = "matrix", required_unless_present = "matrix")]
        graph: Option<PathBuf>,
        /// Matrix file; entries are arc weights.
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        td: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Spanning trees of an undirected multigraph.
    Spanning {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: Common,
    },
    /// Arborescences of a directed multigraph oriented toward a root.
    Arborescences {
        #[command(flatten)]
        input: GraphInput,
        /// Root vertex (1-based).
        #[arg(long, value_name = "V")]
        root: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Euler circuits of a directed multigraph, up to rotation.
    EulerDir {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Euler circuits of an undirected multigraph, up to rotation and reversal.
    EulerUndir {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Largest edge count for which Eulerian orientations are enumerated.
        #[arg(long, value_name = "N")]
        max_edges: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build the ordering gadget on the path 1..n and write it as a digraph file.
    GadgetOrd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Variant::Reconciled)]
        variant: Variant,
        /// Output file; the digraph is included in the report when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

impl Task {
    pub fn common(&self) -> &Common {
        match self {
            Task::Decomp { common, .. }
            | Task::Validate { common, .. }
            | Task::Det { common, .. }
            | Task::Charpoly { common, .. }
            | Task::Trace { common, .. }
            | Task::Histogram { common, .. }
            | Task::Spanning { common, .. }
            | Task::Arborescences { common, .. }
            | Task::EulerDir { common, .. }
            | Task::EulerUndir { common, .. }
            | Task::GadgetOrd { common, .. } => common,
        }
    }

    pub fn json(&self) -> bool {
        self.common().json
    }

    pub fn name(&self) -> &'static str {
        match self {
            Task::Decomp { .. } => "decomp",
            Task::Validate { .. } => "validate",
            Task::Det { .. } => "det",
            Task::Charpoly { .. } => "charpoly",
            Task::Trace { .. } => "trace",
            Task::Histogram { .. } => "histogram",
            Task::Spanning { .. } => "spanning",
            Task::Arborescences { .. } => "arborescences",
            Task::EulerDir { .. } => "euler-dir",
            Task::EulerUndir { .. } => "euler-undir",
            Task::GadgetOrd { .. } => "gadget-ord",
        }
    }
}
