//! Stated numeric constants, checked with certified or exact arithmetic.

use hamsphere::appendix::{self, quad_prefactor};
use hamsphere::check::Outcome;
use hamsphere::counts::{self, rational_to_f64};
use num_rational::BigRational;

#[test]
fn prefactor_is_about_4_853() {
    let z = quad_prefactor(128);
    let lo = BigRational::new(48525.into(), 10000.into());
    let hi = BigRational::new(48535.into(), 10000.into());
    assert!(z.lo() > &lo && z.hi() < &hi, "{}", z.midpoint_f64());
}

#[test]
fn ratio_bounds_for_k_at_least_ten() {
    let upper = BigRational::new(105.into(), 100.into());
    let r = appendix::asymptotic_ratio_check(10..=60, &upper);
    assert_eq!(r.outcome, Outcome::Pass);
    assert!(r.min_lower > 1.0 && r.max_upper < 1.05);
}

#[test]
fn twenty_term_tail_is_below_five_quarters() {
    let (s, outcome) = appendix::tail_sum_check();
    assert_eq!(outcome, Outcome::Pass);
    assert!(rational_to_f64(&s) < 1.25);
}

#[test]
fn growth_constant() {
    assert_eq!(counts::gamma(), BigRational::new(256.into(), 27.into()));
    let pc = counts::critical_probability(12);
    assert!((pc - (std::f64::consts::E * 27.0 / (256.0 * 12.0)).sqrt()).abs() < 1e-15);
}
