//! Polygon and annulus triangulations by brute force, and the injection
//! inequality between them.

use hamsphere::counts::polygon_triangulation_count;
use hamsphere::enumerate::{
    enumerate_annulus_triangulations, enumerate_polygon_triangulations, injection_inequality_check,
    PolygonInstance,
};

fn main() -> hamsphere::Result<()> {
    for m in 3..=5 {
        for k in 0..=3 {
            let found = enumerate_polygon_triangulations(PolygonInstance { m, k })?.len();
            let formula = polygon_triangulation_count(k as u64, m as u64)?;
            println!("m={m} k={k}: enumerated {found:>4}, formula {formula:>4}");
        }
    }
    println!();
    for (m1, m2) in [(3, 3), (3, 4), (4, 3), (4, 4)] {
        for k in 0..=2 {
            let a = enumerate_annulus_triangulations(m1, m2, k)?;
            let r = injection_inequality_check(m1, m2, k)?;
            println!(
                "annulus {m1}|{m2} k={k}: {:>4} triangulations; m2*lhs {} <= m2*rhs {}: {}",
                a.count(),
                r.lhs_times_m2,
                r.rhs_times_m2,
                r.holds
            );
        }
    }
    Ok(())
}
