//! The convolution, ratio, tail and lattice-sum inequalities, decided in
//! exact or certified interval arithmetic.

use hamsphere::appendix::{
    a4_sweep, asymptotic_ratio_check, banana_convolution_check, binomial_sweep, tail_sum_check, SweepConfig,
};
use hamsphere::counts::rational_to_f64;
use num_rational::BigRational;

fn main() {
    for r in 2..=4 {
        let b = banana_convolution_check(120, r);
        println!(
            "r={r}: convolution bound up to k=120 holds: {} (tightest {:.4} at k={})",
            b.holds,
            rational_to_f64(&b.tightest.1),
            b.tightest.0
        );
    }

    let upper = BigRational::new(21.into(), 20.into());
    let ratio = asymptotic_ratio_check(10..=200, &upper);
    println!(
        "ratio to the asymptotic form, k in 10..=200: {} within [{:.6}, {:.6}]",
        ratio.outcome, ratio.min_lower, ratio.max_upper
    );

    let (s, outcome) = tail_sum_check();
    println!("twenty-term tail sum {:.7}: {outcome}", rational_to_f64(&s));

    for d in [(1, 2), (1, 10)] {
        let delta = BigRational::new(d.0.into(), d.1.into());
        let b = binomial_sweep(&delta, 80, 80);
        println!(
            "delta={}/{}: C = 1 + 1/delta = {:.2} valid: {}, empirical {:.4}",
            d.0,
            d.1,
            b.closed_form(),
            b.closed_form_holds,
            b.empirical_c
        );
    }

    let a4 = a4_sweep(&SweepConfig::default());
    println!(
        "lattice-sum bound: {} over {} tuples ({} comparisons, max ratio {:.4})",
        a4.outcome(),
        a4.tuples,
        a4.comparisons,
        a4.tightest
    );
}
