use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use matchpoly::InputFormat;
use matchpoly_cli::*;

/// Skeletons of matching polytopes: adjacency, degrees and checks.
///
/// Graphs are read as edge lists (one `u v` pair per line, `#` comments,
/// optional `p n m` header) or graph6. Exit codes: 0 success, 1 a check
/// failed, 2 unreadable input or bad usage, 3 invalid matching, 4 too many
/// matchings for --max-vertices.
#[derive(Parser)]
#[command(name = "matchpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print size, matching count, skeleton statistics, bonds, pendant edges
    /// and whether the graph is a union of stars and triangles.
    Analyze(Common),
    /// Degree of one matching from its good paths and cycles, with the
    /// closed form when it applies.
    Degree {
        #[command(flatten)]
        common: Common,
        /// Matching as "u-v,u-v" over vertex labels or 1-based edge indices
        /// ("e1,e3" or "1,3"). Empty means the empty matching.
        #[arg(short, long, default_value = "")]
        matching: String,
    },
    /// Export the skeleton as DOT (default) or JSON.
    Skeleton(Common),
    /// Run every check; exit 0 iff all pass.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Instead of reading a graph, verify this many random graphs on 6-8
        /// vertices (edge probability 0.4) drawn from --seed.
        #[arg(long, value_name = "N", conflicts_with = "input")]
        random: Option<usize>,
    },
    /// List the matchings of minimum degree, cross-checked against the
    /// skeleton when it fits within --max-vertices.
    MinDegree(Common),
}

#[derive(Args)]
struct Common {
    /// Input file, or `-` for stdin.
    input: Option<PathBuf>,
    /// Input format.
    #[arg(short, long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Output format.
    #[arg(short, long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Refuse to build skeletons with more vertices (matchings) than this.
    #[arg(long, default_value_t = matchpoly::DEFAULT_MAX_VERTICES as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_vertices: u64,
    /// Seed for generated graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
    Dot,
}

impl Common {
    fn config(&self, random: Option<usize>) -> Result<CliConfig, String> {
        let input = match (&self.input, random) {
            (_, Some(count)) => Input::Random { count },
            (Some(p), None) if p.as_os_str() == "-" => Input::Stdin,
            (Some(p), None) => Input::Path(p.clone()),
            (None, None) => return Err("an input file (or `-` for stdin) is required".into()),
        };
        Ok(CliConfig {
            input,
            input_format: match self.format {
                Format::Edgelist => InputFormat::EdgeList,
                Format::Graph6 => InputFormat::Graph6,
                Format::Auto => InputFormat::Auto,
            },
            output_format: match self.output {
                Output::Text => OutputFormat::Text,
                Output::Json => OutputFormat::Json,
                Output::Dot => OutputFormat::Dot,
            },
            max_vertices: usize::try_from(self.max_vertices).unwrap_or(usize::MAX),
            seed: self.seed,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, random) = match &cli.command {
        Command::Analyze(c) | Command::Skeleton(c) | Command::MinDegree(c) => (c, None),
        Command::Degree { common, .. } => (common, None),
        Command::Verify { common, random } => (common, *random),
    };
    let outcome = match common.config(random) {
        Err(msg) => Outcome {
            code: EXIT_PARSE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Ok(config) => match &cli.command {
            Command::Analyze(_) => cmd_analyze(&config),
            Command::Degree { matching, .. } => cmd_degree(&config, matching),
            Command::Skeleton(_) => cmd_skeleton(&config),
            Command::Verify { .. } => cmd_verify(&config),
            Command::MinDegree(_) => cmd_min_degree(&config),
        },
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
