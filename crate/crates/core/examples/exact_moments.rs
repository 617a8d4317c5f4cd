//! Exact first and second moments of the number of spanning spheres, the
//! intersection identity, and a Monte Carlo comparison.

use hamsphere::moments::{
    containment_tally, exact_containment_polynomial, intersection_identity_check, moment_report,
    pair_profile, parse_rational,
};

fn main() -> hamsphere::Result<()> {
    let p = parse_rational("1/2")?;
    for n in 4..=6 {
        println!("{}\n", moment_report(n, &p)?);
    }

    println!("pair intersection profile at n=5 (shared triangles -> ordered pairs):");
    for (shared, pairs) in pair_profile(5)? {
        println!("  {shared}: {pairs}");
    }

    for q in ["1/3", "1/2", "2/3"] {
        let r = intersection_identity_check(5, &parse_rational(q)?)?;
        println!("identity at n=5, p={q}: {} ({} = {})", r.holds, r.left, r.right);
    }

    let poly = exact_containment_polynomial(5)?;
    println!("\nP[X(5,p) contains a sphere] = {poly}");
    let tally = containment_tally(5, 0.5, 200_000, 1)?;
    println!(
        "at p=1/2: exact {:.5}, sampled {:.5}; mean sphere count {:.5} (exact 5/32 = {:.5})",
        poly.eval_f64(0.5),
        tally.hits as f64 / tally.trials as f64,
        tally.spheres as f64 / tally.trials as f64,
        5.0 / 32.0
    );
    Ok(())
}
