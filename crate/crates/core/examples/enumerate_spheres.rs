//! Brute-force enumeration of labeled sphere triangulations, checked against
//! the closed-form count.

use std::time::Instant;

use hamsphere::complex::check_spanning_sphere;
use hamsphere::{counts, enumerate};

fn main() -> hamsphere::Result<()> {
    for n in 4..=7 {
        let t = Instant::now();
        let spheres = enumerate::enumerate_labeled_spheres(n)?;
        let all_valid = spheres.iter().all(|s| check_spanning_sphere(s).is_sphere);
        println!(
            "n={n}: {:>5} spheres (formula {:>5}), all valid: {all_valid}, {:.1} ms",
            spheres.len(),
            counts::labeled_sphere_count(n as u64)?,
            t.elapsed().as_secs_f64() * 1e3
        );
    }

    // the five-vertex spheres are the ten bipyramids
    let first = &enumerate::enumerate_labeled_spheres(5)?[0];
    print!("\nfirst sphere on 5 vertices:\n{}", first.to_text());
    Ok(())
}
