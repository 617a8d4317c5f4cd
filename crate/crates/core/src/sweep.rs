//! Monte Carlo threshold sweeps: sample `X(n, p)` on a grid of `p`, run the
//! complete search on each sample and tally the outcomes.

use std::io::Write;

use rayon::prelude::*;

use crate::counts::critical_probability;
use crate::error::{out_of_range, Error, Result};
use crate::moments::{sample_complex, Seed};
use crate::search::{find_spanning_sphere, SearchBudget, SearchOutcome};

pub const CSV_HEADER: &str = "n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes";

/// The `p` values of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum PGrid {
    Explicit(Vec<f64>),
    /// Multiples of the critical density `sqrt(e / (gamma n))`.
    CriticalMultiples(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub p: PGrid,
    pub trials: u64,
    pub seed: u64,
    pub budget: SearchBudget,
}

impl SweepConfig {
    pub fn p_values(&self) -> Vec<f64> {
        match &self.p {
            PGrid::Explicit(ps) => ps.clone(),
            PGrid::CriticalMultiples(ms) => {
                let pc = critical_probability(self.n as u64);
                ms.iter().map(|m| m * pc).collect()
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(out_of_range("a sweep needs at least one trial"));
        }
        if self.n == 0 {
            return Err(out_of_range("n must be at least 1"));
        }
        if let Some(p) = self.p_values().into_iter().find(|p| !(0.0..=1.0).contains(p)) {
            return Err(out_of_range(format!("p = {p} not in [0,1]")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub successes: u64,
    pub timeouts: u64,
    /// `successes / (trials - timeouts)`; 0 when every trial timed out.
    pub phat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub mean_nodes: f64,
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let phat = successes as f64 / n;
    let denom = 1.0 + z * z / n;
    let center = (phat + z * z / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    // the exact interval always contains phat; rounding can push an end past it
    ((center - half).clamp(0.0, phat), (center + half).clamp(phat, 1.0))
}

/// Runs every trial of the sweep. Trial `t` at grid index `i` samples with
/// stream `mix(seed, i * trials + t)`; records come back in grid order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    let ps = cfg.p_values();
    let master = Seed::new(cfg.seed);
    let jobs: Vec<(usize, u64)> = (0..ps.len())
        .flat_map(|i| (0..cfg.trials).map(move |t| (i, t)))
        .collect();
    let results: Vec<(SearchOutcome, u64)> = jobs
        .par_iter()
        .map(|&(i, t)| {
            let c = sample_complex(cfg.n, ps[i], master.trial(i as u64 * cfg.trials + t))
                .expect("validated config");
            let r = find_spanning_sphere(&c, cfg.budget);
            (r.outcome, r.stats.nodes)
        })
        .collect();
    Ok(ps
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let chunk = &results[i * cfg.trials as usize..(i + 1) * cfg.trials as usize];
            let successes = chunk
                .iter()
                .filter(|(o, _)| matches!(o, SearchOutcome::Found(_)))
                .count() as u64;
            let timeouts = chunk.iter().filter(|(o, _)| *o == SearchOutcome::Timeout).count() as u64;
            let decided = cfg.trials - timeouts;
            let phat = if decided == 0 {
                0.0
            } else {
                successes as f64 / decided as f64
            };
            let (ci_low, ci_high) = wilson_interval(successes, decided);
            let mean_nodes = chunk.iter().map(|&(_, k)| k as f64).sum::<f64>() / cfg.trials as f64;
            SweepRecord {
                n: cfg.n,
                p,
                trials: cfg.trials,
                successes,
                timeouts,
                phat,
                ci_low,
                ci_high,
                mean_nodes,
            }
        })
        .collect())
}

/// Adjacent grid points where `phat` drops, with whether the two Wilson
/// intervals still overlap.
pub fn monotonicity_flags(records: &[SweepRecord]) -> Vec<(usize, bool)> {
    records
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1].phat < w[0].phat)
        .map(|(i, w)| (i, w[1].ci_high >= w[0].ci_low))
        .collect()
}

/// `x` rounded to 10 significant digits, printed in plain decimal.
pub fn format_sig10(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

pub fn record_to_csv_row(r: &SweepRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.n,
        format_sig10(r.p),
        r.trials,
        r.successes,
        r.timeouts,
        format_sig10(r.phat),
        format_sig10(r.ci_low),
        format_sig10(r.ci_high),
        format_sig10(r.mean_nodes)
    )
}

pub fn to_csv_string(records: &[SweepRecord]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        s.push_str(&record_to_csv_row(r));
        s.push('\n');
    }
    s
}

pub fn emit_csv(records: &[SweepRecord], out: &mut impl Write) -> Result<()> {
    out.write_all(to_csv_string(records).as_bytes())
        .map_err(|e| Error::OutOfRange(format!("write failed: {e}")))
}

pub fn parse_csv(text: &str) -> Result<Vec<SweepRecord>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != CSV_HEADER {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unexpected header {header:?}"),
        });
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, line)| {
            let err = |msg: String| Error::Parse { line: i + 2, msg };
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 9 {
                return Err(err(format!("expected 9 fields, got {}", f.len())));
            }
            let int = |s: &str| s.parse::<u64>().map_err(|_| err(format!("bad integer {s:?}")));
            let float = |s: &str| s.parse::<f64>().map_err(|_| err(format!("bad number {s:?}")));
            Ok(SweepRecord {
                n: int(f[0])? as usize,
                p: float(f[1])?,
                trials: int(f[2])?,
                successes: int(f[3])?,
                timeouts: int(f[4])?,
                phat: float(f[5])?,
                ci_low: float(f[6])?,
                ci_high: float(f[7])?,
                mean_nodes: float(f[8])?,
            })
        })
        .collect()
}
