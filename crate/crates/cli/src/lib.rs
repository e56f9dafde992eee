//! Command implementations behind the `pcdfs` binary. Each writes its report
//! to the given sink so it can be driven from tests.

use std::io::{self, Write};
use std::time::Instant;

use pcdfs::oracle::{
    forests_equal, generate, standard_dfs, GenerateError, GeneratorKind, GeneratorSpec, SeededRng,
};
use pcdfs::{materialize, pc_dfs_forest, pcdg, DfsForest, DfsOptions, OpCounters, PcDigraph};
use serde::Serialize;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
    InputError = 2,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

pub fn parse_graph(text: &str, origin: &str) -> Result<PcDigraph, CliError> {
    pcdg::parse(text).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

#[derive(Serialize)]
struct CounterReport {
    #[serde(flatten)]
    counters: OpCounters,
    ratio: f64,
}

#[derive(Serialize)]
struct JsonReport {
    parent: Vec<u32>,
    pre: Vec<u32>,
    post: Vec<u32>,
    roots: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counters: Option<CounterReport>,
}

/// `pcdfs dfs`: per-vertex rows of `(vertex, parent or 0, pre, post)`.
pub fn run_dfs(
    g: &PcDigraph,
    format: Format,
    count_ops: bool,
    out: &mut impl Write,
) -> io::Result<()> {
    let opts = if count_ops {
        DfsOptions::instrumented()
    } else {
        DfsOptions::default()
    };
    let (forest, counters) = pc_dfs_forest(g, opts).expect("no invariant checks requested");
    let parents: Vec<u32> = forest
        .parents()
        .iter()
        .map(|p| p.map_or(0, u32::from))
        .collect();
    let ratio = counters.ratio(g);
    match format {
        Format::Tsv => {
            writeln!(out, "vertex\tparent\tpre\tpost")?;
            for v in g.vertices() {
                let i = v.index();
                writeln!(
                    out,
                    "{v}\t{}\t{}\t{}",
                    parents[i],
                    forest.pre(v),
                    forest.post(v)
                )?;
            }
            if count_ops {
                let c = counters;
                for (k, x) in [
                    ("calls", c.calls),
                    ("fwd_steps", c.fwd_steps),
                    ("back_steps", c.back_steps),
                    ("deletions", c.deletions),
                    ("u_removals", c.u_removals),
                    ("restarts", c.restarts),
                ] {
                    writeln!(out, "# {k}\t{x}")?;
                }
                writeln!(out, "# ratio\t{ratio:.6}")?;
            }
        }
        Format::Json => {
            let report = JsonReport {
                parent: parents,
                pre: forest.pre_times().to_vec(),
                post: forest.post_times().to_vec(),
                roots: forest.roots().iter().map(|&r| r.into()).collect(),
                counters: count_ops.then_some(CounterReport { counters, ratio }),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Where `pcdfs check` gets its instances.
#[derive(Clone, Debug)]
pub enum CheckSource {
    Graph(PcDigraph),
    Generated {
        kind: GeneratorKind,
        trials: usize,
        max_n: u32,
        complement_prob: f64,
        seed: u64,
    },
}

fn check_one(g: &PcDigraph) -> Result<(), String> {
    let (forest, _) = pc_dfs_forest(g, DfsOptions::checked()).map_err(|e| e.to_string())?;
    compare(&forest, g)
}

fn compare(forest: &DfsForest, g: &PcDigraph) -> Result<(), String> {
    forests_equal(forest, &standard_dfs(&materialize(g))).map_err(|d| d.to_string())
}

fn trial_spec(rng: &mut SeededRng, kind: GeneratorKind, max_n: u32, p: f64) -> GeneratorSpec {
    if kind == GeneratorKind::Random {
        return GeneratorSpec::trial(rng, max_n, p);
    }
    let mut n = 1 + rng.below(max_n as u64) as u32;
    if kind == GeneratorKind::MatchingComplement && n % 2 == 1 {
        n += 1;
    }
    GeneratorSpec::new(kind, n)
}

/// `pcdfs check`: every instance must match the oracle with invariant checks
/// on. Stops at the first failure and prints the offending instance.
pub fn run_check(source: &CheckSource, out: &mut impl Write) -> Result<Status, CliError> {
    let (kind, trials, max_n, p, seed) = match source {
        CheckSource::Graph(g) => {
            return Ok(match check_one(g) {
                Ok(()) => {
                    writeln!(out, "check: 1/1 instances passed")?;
                    Status::Ok
                }
                Err(why) => {
                    writeln!(out, "check: FAILED: {why}")?;
                    Status::CheckFailed
                }
            });
        }
        CheckSource::Generated {
            kind,
            trials,
            max_n,
            complement_prob,
            seed,
        } => (*kind, *trials, *max_n, *complement_prob, *seed),
    };
    if max_n == 0 {
        return Err(CliError::Input("--max-n must be >= 1".into()));
    }
    let mut rng = SeededRng::new(seed);
    for trial in 0..trials {
        let spec = trial_spec(&mut rng, kind, max_n, p);
        let g = generate(&spec)?;
        if let Err(why) = check_one(&g) {
            writeln!(out, "check: FAILED at trial {trial} ({spec:?}): {why}")?;
            write!(out, "{}", pcdg::serialize(&g))?;
            return Ok(Status::CheckFailed);
        }
    }
    writeln!(
        out,
        "check: {trials}/{trials} instances passed ({kind}, n <= {max_n}, seed {seed})"
    )?;
    Ok(Status::Ok)
}

/// One row of `pcdfs bench`.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: u32,
    pub m_tilde: usize,
    pub elapsed_us: u128,
    pub counters: OpCounters,
    pub ratio: f64,
}

pub fn bench_rows(
    kind: GeneratorKind,
    sizes: &[u32],
    seed: u64,
) -> Result<Vec<BenchRow>, CliError> {
    sizes
        .iter()
        .map(|&n| {
            let g = generate(&GeneratorSpec::bench(kind, n, seed))?;
            let start = Instant::now();
            let (_, counters) = pc_dfs_forest(&g, DfsOptions::instrumented())
                .expect("no invariant checks requested");
            let elapsed_us = start.elapsed().as_micros();
            Ok(BenchRow {
                n,
                m_tilde: g.m_tilde(),
                elapsed_us,
                counters,
                ratio: counters.ratio(&g),
            })
        })
        .collect()
}

/// `pcdfs bench`: tab-separated `(n, m̃, elapsed, ops, ratio)` table.
pub fn run_bench(
    kind: GeneratorKind,
    sizes: &[u32],
    seed: u64,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let rows = bench_rows(kind, sizes, seed)?;
    writeln!(out, "kind\tn\tm_tilde\telapsed_us\tops\tratio")?;
    for r in rows {
        writeln!(
            out,
            "{kind}\t{}\t{}\t{}\t{}\t{:.6}",
            r.n,
            r.m_tilde,
            r.elapsed_us,
            r.counters.total(),
            r.ratio
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dfs_text(text: &str, format: Format, count_ops: bool) -> String {
        let g = parse_graph(text, "test").unwrap();
        let mut out = Vec::new();
        run_dfs(&g, format, count_ops, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn tsv_for_complete_digraph() {
        let rows = dfs_text(
            "pcdg 1\nn 4\nv 1 c :\nv 2 c :\nv 3 c :\nv 4 c :\n",
            Format::Tsv,
            false,
        );
        assert_eq!(
            rows,
            "vertex\tparent\tpre\tpost\n1\t0\t1\t4\n2\t1\t2\t3\n3\t2\t3\t2\n4\t3\t4\t1\n"
        );
    }

    #[test]
    fn tsv_for_edgeless() {
        let rows = dfs_text("pcdg 1\nn 2\nv 1 u :\nv 2 u :\n", Format::Tsv, false);
        assert_eq!(rows, "vertex\tparent\tpre\tpost\n1\t0\t1\t1\n2\t0\t2\t2\n");
    }

    #[test]
    fn json_report() {
        let text = "pcdg 1\nn 4\nv 1 c : 3\nv 2 u : 1\nv 3 u :\nv 4 u : 2\n";
        let json: serde_json::Value =
            serde_json::from_str(&dfs_text(text, Format::Json, true)).unwrap();
        assert_eq!(json["parent"], serde_json::json!([0, 1, 0, 1]));
        assert_eq!(json["pre"], serde_json::json!([1, 2, 4, 3]));
        assert_eq!(json["post"], serde_json::json!([3, 1, 4, 2]));
        assert_eq!(json["roots"], serde_json::json!([1, 3]));
        assert_eq!(json["counters"]["calls"], 4);
        assert!(json["counters"]["ratio"].as_f64().unwrap() > 0.0);
    }

    #[test]
    fn ratio_on_complete_complement_1024() {
        let rows = bench_rows(GeneratorKind::CompleteComplement, &[1024], 0).unwrap();
        assert!(rows[0].ratio <= 8.0);
    }

    #[test]
    fn check_reports_pass_for_generated_trials() {
        let mut out = Vec::new();
        let source = CheckSource::Generated {
            kind: GeneratorKind::Random,
            trials: 200,
            max_n: 32,
            complement_prob: 0.5,
            seed: 9,
        };
        assert_eq!(run_check(&source, &mut out).unwrap(), Status::Ok);
        assert!(String::from_utf8(out)
            .unwrap()
            .starts_with("check: 200/200"));
    }
}
