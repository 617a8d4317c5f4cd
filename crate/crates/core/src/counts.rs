//! Exact triangulation counts.
//!
//! `T(k, m)` is the number of simple triangulations of an `m`-gon with `k`
//! labeled interior vertices:
//!
//! ```text
//! T(k, m) = 2 (2m-3)! (2m+4k-5)! / ((m-1)! (m-3)! (2m+3k-3)!)
//! ```
//!
//! Removing a triangle from a labeled sphere triangulation leaves a triangulated
//! triangle, which gives `(2n-4) |S_n| = C(n,3) T(n-3, 3)`. The exhaustive
//! enumerator in [`crate::enumerate`] pins this convention for `n <= 7`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{out_of_range, Result};
use crate::interval::Interval;

/// An exact nonnegative count.
pub type BigCount = BigUint;

/// An exact rational, always in lowest terms with a positive denominator.
pub type ExactRatio = BigRational;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Growth constant `4^4 / 3^3`.
pub fn gamma() -> BigRational {
    BigRational::new(256.into(), 27.into())
}

/// Number of triangulations of an `m`-gon with `k` labeled interior vertices.
pub fn polygon_triangulation_count(k: u64, m: u64) -> Result<BigCount> {
    if m < 3 {
        return Err(out_of_range(format!("boundary length m = {m} < 3")));
    }
    let num = BigUint::from(2u32) * factorial(2 * m - 3) * factorial(2 * m + 4 * k - 5);
    let den = factorial(m - 1) * factorial(m - 3) * factorial(2 * m + 3 * k - 3);
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "T({k},{m}) is not an integer");
    Ok(q)
}

/// `T(k, 3) = 6 (4k+1)! / (3k+3)!`, the triangle specialisation.
pub fn triangle_triangulation_count(k: u64) -> BigCount {
    BigUint::from(6u32) * factorial(4 * k + 1) / factorial(3 * k + 3)
}

/// `T(k, 4) / k!`.
pub fn normalized_quad_count(k: u64) -> ExactRatio {
    let t = polygon_triangulation_count(k, 4).expect("m = 4 is valid");
    BigRational::new(BigInt::from(t), BigInt::from(factorial(k)))
}

/// Sphere triangulations on `n` labeled vertices with one triangle marked:
/// `C(n,3) T(n-3, 3)`.
pub fn distinguished_triangle_count(n: u64) -> Result<BigCount> {
    if n < 4 {
        return Err(out_of_range(format!("n = {n} < 4")));
    }
    Ok(binomial(n, 3) * polygon_triangulation_count(n - 3, 3)?)
}

/// `|S_n|`, the number of labeled triangulations of the sphere on `n`
/// vertices (as abstract simplicial complexes).
pub fn labeled_sphere_count(n: u64) -> Result<BigCount> {
    let marked = distinguished_triangle_count(n)?;
    let (q, r) = marked.div_rem(&BigUint::from(2 * n - 4));
    assert!(r.is_zero(), "marked count not divisible by 2n-4");
    Ok(q)
}

/// `n! gamma^n n^(-7/2)`, enclosed at `prec` bits.
pub fn asymptotic_normalizer(n: u64, prec: u32) -> Result<Interval> {
    if n < 4 {
        return Err(out_of_range(format!("n = {n} < 4")));
    }
    let exact = BigRational::from_integer(BigInt::from(factorial(n))) * num_traits::pow(gamma(), n as usize)
        / BigRational::from_integer(BigInt::from(n).pow(3));
    let root = Interval::from_int(n as i64, prec).sqrt();
    Ok(Interval::exact(exact, prec).div(&root))
}

/// `|S_n| / (n! gamma^n n^(-7/2))` for `4 <= n <= n_max`.
pub fn sphere_count_ratios(n_max: u64, prec: u32) -> Vec<(u64, Interval)> {
    (4..=n_max)
        .map(|n| {
            let count = BigRational::from_integer(BigInt::from(labeled_sphere_count(n).unwrap()));
            let norm = asymptotic_normalizer(n, prec).unwrap();
            (n, Interval::exact(count, prec).div(&norm))
        })
        .collect()
}

/// `sqrt(e / (gamma n))`, the critical density at `n` vertices.
pub fn critical_probability(n: u64) -> f64 {
    let gamma = 256.0 / 27.0;
    (std::f64::consts::E / (gamma * n as f64)).sqrt()
}

/// `((1-eps) p_c, (1+eps) p_c)` with `p_c = sqrt(e / (gamma n))`.
pub fn threshold_probability(n: u64, epsilon: f64) -> Result<(f64, f64)> {
    if n < 4 {
        return Err(out_of_range(format!("n = {n} < 4")));
    }
    if !(0.0..1.0).contains(&epsilon) {
        return Err(out_of_range(format!("epsilon = {epsilon} not in [0,1)")));
    }
    let pc = critical_probability(n);
    Ok(((1.0 - epsilon) * pc, (1.0 + epsilon) * pc))
}

/// Nearest `f64`, or NaN when out of range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    rational_to_f64(q)
}
