//! Sample a random 2-complex and look for a spanning sphere inside it.
//!
//! `cargo run --release --example sample_and_search -- 14 0.35 7`

use hamsphere::counts::critical_probability;
use hamsphere::moments::{sample_complex, Seed};
use hamsphere::search::{find_spanning_sphere, quick_reject, SearchBudget};

fn main() -> hamsphere::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(12);
    let p: f64 = args
        .get(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2.0 * critical_probability(n as u64));
    let seed: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0);

    let c = sample_complex(n, p, Seed::new(seed))?;
    println!("X({n}, {p:.4}) with seed {seed}: {} triangles", c.len());
    if let Some(reason) = quick_reject(&c) {
        println!("rejected before search: {reason}");
    }

    let r = find_spanning_sphere(&c, SearchBudget::default());
    println!(
        "{} after {} nodes ({:?})",
        r.outcome.label(),
        r.stats.nodes,
        r.stats.elapsed
    );
    if let Some(w) = r.witness() {
        for t in w {
            let [a, b, c] = t.vertices();
            println!("  t {a} {b} {c}");
        }
    }
    Ok(())
}
