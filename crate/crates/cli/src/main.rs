use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pcdfs::oracle::{generate, GeneratorKind, GeneratorSpec};
use pcdfs::pcdg;
use pcdfs_cli::{
    parse_graph, run_bench, run_check, run_dfs, CheckSource, CliError, Format, Status,
};

/// Depth-first search on partially complemented digraphs.
#[derive(Parser)]
#[command(name = "pcdfs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a pcdg instance on standard output.
    Gen {
        #[arg(long, default_value = "random")]
        kind: GeneratorKind,
        #[arg(long)]
        n: u32,
        /// Arc count for `random`.
        #[arg(long, default_value_t = 0)]
        arcs: u64,
        #[arg(long, default_value_t = 0.5)]
        complement_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run DFS on a pcdg file (`-` for standard input).
    Dfs {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        count_ops: bool,
    },
    /// Compare against the brute-force oracle with invariant checks on.
    Check {
        /// Check this file instead of generated instances.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "random")]
        kind: GeneratorKind,
        #[arg(long, default_value_t = 64)]
        max_n: u32,
        #[arg(long, default_value_t = 0.5)]
        complement_prob: f64,
    },
    /// Time instrumented runs over a list of sizes.
    Bench {
        #[arg(long, default_value = "complete-complement")]
        kind: GeneratorKind,
        #[arg(long, value_delimiter = ',', default_value = "1024,4096,16384,65536")]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let origin = path.display();
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = match cli.command {
        Command::Gen {
            kind,
            n,
            arcs,
            complement_prob,
            seed,
        } => {
            let spec = GeneratorSpec {
                kind,
                n,
                arc_count: arcs,
                complement_prob,
                seed,
            };
            out.write_all(pcdg::serialize(&generate(&spec)?).as_bytes())?;
            Status::Ok
        }
        Command::Dfs {
            file,
            format,
            count_ops,
        } => {
            let g = parse_graph(&read_input(&file)?, &file.display().to_string())?;
            run_dfs(&g, format, count_ops, &mut out)?;
            Status::Ok
        }
        Command::Check {
            file,
            trials,
            seed,
            kind,
            max_n,
            complement_prob,
        } => {
            let source = match file {
                Some(path) => CheckSource::Graph(parse_graph(
                    &read_input(&path)?,
                    &path.display().to_string(),
                )?),
                None => CheckSource::Generated {
                    kind,
                    trials,
                    max_n,
                    complement_prob,
                    seed,
                },
            };
            run_check(&source, &mut out)?
        }
        Command::Bench { kind, sizes, seed } => {
            run_bench(kind, &sizes, seed, &mut out)?;
            Status::Ok
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status as u8),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(Status::InputError as u8)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
