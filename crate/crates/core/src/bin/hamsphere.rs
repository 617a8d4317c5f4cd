use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use hamsphere::check::Outcome;
use hamsphere::counts;
use hamsphere::enumerate::{self, PolygonInstance};
use hamsphere::moments::{self, Seed};
use hamsphere::search::{find_spanning_sphere, SearchBudget, DEFAULT_NODE_LIMIT};
use hamsphere::sweep::{self, PGrid, SweepConfig};
use hamsphere::verify::{self, Suite, VerifyOptions};
use hamsphere::Complex2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hamsphere", version, about = "Spanning spheres in random 2-complexes")]
struct Cli {
    /// Master seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact counts: |S_n| with --n, or T(k, m) with --k and --m
    Count {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Lists labeled sphere triangulations (--n) or polygon triangulations (--m, --k)
    Enumerate {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Draws one complex from X(n, p)
    Sample {
        #[arg(long)]
        n: usize,
        /// Decimal or a/b
        #[arg(long)]
        p: String,
        /// Trial index within the seed's stream family
        #[arg(long, default_value_t = 0)]
        trial: u64,
    },
    /// Looks for a spanning sphere in a complex file ("-" reads stdin)
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        max_nodes: u64,
        #[arg(long)]
        max_seconds: Option<f64>,
    },
    /// Exact moments of the spanning sphere count
    Moments {
        #[arg(long)]
        n: usize,
        /// Rational a/b
        #[arg(long)]
        p: String,
    },
    /// Monte Carlo containment sweep over a grid of p
    Sweep {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 60)]
        trials: u64,
        /// Explicit p values
        #[arg(long, value_delimiter = ',', conflicts_with = "pc")]
        p: Vec<f64>,
        /// Multiples of the critical density (default 0.5,1,2)
        #[arg(long, value_delimiter = ',')]
        pc: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        max_nodes: u64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs verification suites: counts, appendix, planar, moments, search
    Verify {
        #[arg(long = "suite", value_delimiter = ',')]
        suites: Vec<String>,
        /// Every suite
        #[arg(long)]
        all: bool,
    },
}

fn parse_p(s: &str) -> anyhow::Result<f64> {
    if s.contains('/') {
        let q = moments::parse_rational(s)?;
        Ok(counts::rational_to_f64(&q))
    } else {
        s.parse().with_context(|| format!("bad probability {s:?}"))
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let csv = cli.format == Format::Csv;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());

    match cli.command {
        Command::Count { n, k, m } => {
            if csv {
                writeln!(out, "quantity,n,k,m,value")?;
            }
            if let Some(n) = n {
                let v = counts::labeled_sphere_count(n)?;
                if csv {
                    writeln!(out, "labeled_spheres,{n},,,{v}")?;
                } else {
                    writeln!(out, "labeled_spheres n={n} value={v}")?;
                }
            }
            match (k, m) {
                (Some(k), Some(m)) => {
                    let v = counts::polygon_triangulation_count(k, m)?;
                    if csv {
                        writeln!(out, "polygon_triangulations,,{k},{m},{v}")?;
                    } else {
                        writeln!(out, "polygon_triangulations k={k} m={m} value={v}")?;
                    }
                }
                (None, None) if n.is_some() => {}
                _ => bail!("give --n, or both --k and --m"),
            }
        }
        Command::Enumerate { n, m, k, count_only } => {
            let complexes: Vec<Complex2> = match (n, m) {
                (Some(n), None) => enumerate::enumerate_labeled_spheres_extended(n)?,
                (None, Some(m)) => enumerate::enumerate_polygon_triangulations(PolygonInstance { m, k })?
                    .into_iter()
                    .map(|ts| Complex2::new(m + k, ts))
                    .collect::<hamsphere::Result<_>>()?,
                _ => bail!("give exactly one of --n and --m"),
            };
            if count_only {
                writeln!(out, "{}", complexes.len())?;
            } else {
                for (i, c) in complexes.iter().enumerate() {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    write!(out, "{}", c.to_text())?;
                }
            }
        }
        Command::Sample { n, p, trial } => {
            let c = moments::sample_complex(n, parse_p(&p)?, Seed::new(cli.seed).trial(trial))?;
            write!(out, "{}", c.to_text())?;
        }
        Command::Search {
            file,
            max_nodes,
            max_seconds,
        } => {
            let c = Complex2::parse(&read_input(&file)?)?;
            let budget = SearchBudget {
                max_nodes,
                max_time: max_seconds.map(Duration::from_secs_f64),
            };
            let r = find_spanning_sphere(&c, budget);
            let ms = r.stats.elapsed.as_secs_f64() * 1e3;
            if csv {
                writeln!(out, "outcome,triangles,nodes,max_depth,elapsed_ms")?;
                let len = r.witness().map_or(0, <[_]>::len);
                writeln!(
                    out,
                    "{},{len},{},{},{ms:.3}",
                    r.outcome.label(),
                    r.stats.nodes,
                    r.stats.max_depth
                )?;
            } else {
                writeln!(out, "{}", r.outcome.label())?;
                for t in r.witness().unwrap_or_default() {
                    let [a, b, c] = t.vertices();
                    writeln!(out, "t {a} {b} {c}")?;
                }
                if let Some(reason) = &r.rejected {
                    writeln!(out, "rejected={reason}")?;
                }
                writeln!(
                    out,
                    "nodes={} max_depth={} elapsed_ms={ms:.3}",
                    r.stats.nodes, r.stats.max_depth
                )?;
            }
            out.flush()?;
            return Ok(r.outcome.exit_code() as u8);
        }
        Command::Moments { n, p } => {
            let report = moments::moment_report(n, &moments::parse_rational(&p)?)?;
            if csv {
                writeln!(out, "key,value")?;
                for l in report.to_string().lines() {
                    if let Some((key, value)) = l.split_once('=') {
                        writeln!(out, "{key},{value}")?;
                    }
                }
            } else {
                writeln!(out, "{}", report.to_string().trim_end())?;
            }
        }
        Command::Sweep {
            n,
            trials,
            p,
            pc,
            max_nodes,
            out: path,
        } => {
            let grid = if !p.is_empty() {
                PGrid::Explicit(p)
            } else if !pc.is_empty() {
                PGrid::CriticalMultiples(pc)
            } else {
                PGrid::CriticalMultiples(vec![0.5, 1.0, 2.0])
            };
            let cfg = SweepConfig {
                n,
                p: grid,
                trials,
                seed: cli.seed,
                budget: SearchBudget::nodes(max_nodes),
            };
            let records = sweep::run_sweep(&cfg)?;
            match path {
                Some(path) => {
                    let mut f = io::BufWriter::new(std::fs::File::create(&path)?);
                    sweep::emit_csv(&records, &mut f)?;
                    f.flush()?;
                }
                None => sweep::emit_csv(&records, &mut out)?,
            }
            if !csv {
                for (i, overlap) in sweep::monotonicity_flags(&records) {
                    let what = if overlap {
                        "within CI overlap"
                    } else {
                        "outside CI overlap"
                    };
                    writeln!(out, "# phat drops between rows {} and {} ({what})", i + 1, i + 2)?;
                }
            }
        }
        Command::Verify { suites, all } => {
            let suites: Vec<Suite> = if all {
                Suite::ALL.to_vec()
            } else {
                verify::parse_suites(&suites.join(","))?
            };
            let opts = VerifyOptions {
                seed: cli.seed,
                ..VerifyOptions::default()
            };
            let mut pass = true;
            if csv && !suites.is_empty() {
                writeln!(out, "check,outcome,witness")?;
            }
            for s in suites {
                for l in verify::run_suite(s, &opts)? {
                    pass &= l.outcome == Outcome::Pass;
                    if csv {
                        writeln!(
                            out,
                            "{},{},\"{}\"",
                            l.name,
                            l.outcome,
                            l.witness.replace('"', "'")
                        )?;
                    } else {
                        writeln!(out, "{l}")?;
                    }
                    out.flush()?;
                }
            }
            return Ok(u8::from(!pass));
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
