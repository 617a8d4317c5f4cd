//! Exact triangulation counts and the normalised sphere-count sequence.
//!
//! `cargo run --example count_triangulations`

use hamsphere::counts;

fn main() -> hamsphere::Result<()> {
    println!("T(k, m): triangulations of an m-gon with k labeled interior vertices");
    for m in 3..=6 {
        let row: Vec<String> = (0..=5)
            .map(|k| counts::polygon_triangulation_count(k, m).map(|t| t.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  m={m}: {}", row.join(" "));
    }

    println!("\n|S_n|: labeled sphere triangulations on n vertices");
    for n in 4..=12 {
        println!("  n={n:>2}: {}", counts::labeled_sphere_count(n)?);
    }

    println!("\n|S_n| / (n! gamma^n n^-7/2), certified enclosures");
    for (n, iv) in counts::sphere_count_ratios(14, 96) {
        println!("  n={n:>2}: {:.8}", iv.midpoint_f64());
    }

    let (lo, hi) = counts::threshold_probability(100, 0.1)?;
    println!(
        "\np_c(100) = {:.6}; 10% window [{lo:.6}, {hi:.6}]",
        counts::critical_probability(100)
    );
    Ok(())
}
