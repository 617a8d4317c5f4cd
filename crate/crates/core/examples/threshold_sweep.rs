//! Containment probability across the critical window, written as CSV.
//!
//! `cargo run --release --example threshold_sweep -- 14 200`

use std::io;

use hamsphere::search::SearchBudget;
use hamsphere::sweep::{emit_csv, monotonicity_flags, run_sweep, PGrid, SweepConfig};

fn main() -> hamsphere::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(12);
    let trials = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(100);

    let cfg = SweepConfig {
        n,
        p: PGrid::CriticalMultiples(vec![0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0]),
        trials,
        seed: 0,
        budget: SearchBudget::default(),
    };
    let records = run_sweep(&cfg)?;
    emit_csv(&records, &mut io::stdout().lock())?;
    for (i, overlap) in monotonicity_flags(&records) {
        eprintln!("phat drops after row {} (CI overlap: {overlap})", i + 1);
    }
    Ok(())
}
