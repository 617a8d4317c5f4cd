//! The random complex `X(n, p)` on `n` vertices, and exact first and second
//! moments of the number of spanning spheres it contains.
//!
//! Moments are exact rationals. Sampling takes a real `p`, draws one `u64`
//! per triangle in lexicographic order and keeps the triangle iff the draw is
//! below `floor(p * 2^64)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{all_triangles, triangle_rank, Complex2};
use crate::counts::{binomial, labeled_sphere_count, ExactRatio};
use crate::enumerate::enumerate_labeled_spheres;
use crate::error::{out_of_range, Result};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stream seed for trial `index` under `master`:
/// `splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15)` (wrapping).
pub fn mix(master: u64, index: u64) -> u64 {
    splitmix64(master.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN)))
}

/// A master seed plus the index of one trial drawn from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    pub master: u64,
    pub trial: u64,
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed { master, trial: 0 }
    }

    pub fn trial(self, index: u64) -> Self {
        Seed { trial: index, ..self }
    }

    pub fn stream(self) -> u64 {
        mix(self.master, self.trial)
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.stream())
    }
}

fn threshold(p: f64) -> Result<u128> {
    if !(0.0..=1.0).contains(&p) {
        return Err(out_of_range(format!("p = {p} not in [0,1]")));
    }
    // p * 2^64 is exact in binary floating point; the cast floors it
    Ok(if p >= 1.0 {
        1u128 << 64
    } else {
        (p * 18446744073709551616.0) as u128
    })
}

/// Draws `X(n, p)` deterministically from `seed`.
pub fn sample_complex(n: usize, p: f64, seed: Seed) -> Result<Complex2> {
    if n == 0 {
        return Err(out_of_range("n must be at least 1"));
    }
    let cut = threshold(p)?;
    let mut rng = seed.rng();
    let kept: Vec<_> = all_triangles(n)
        .into_iter()
        .filter(|_| (rng.next_u64() as u128) < cut)
        .collect();
    Ok(Complex2::new(n, kept).expect("lexicographic triangles are distinct"))
}

/// Bitmask form of [`sample_complex`] for `n <= 8` (at most 56 triples).
pub fn sample_mask(n: usize, p: f64, seed: Seed) -> Result<u64> {
    if !(1..=8).contains(&n) {
        return Err(out_of_range(format!("mask sampling needs 1 <= n <= 8, got {n}")));
    }
    let cut = threshold(p)?;
    let mut rng = seed.rng();
    let total = binomial(n as u64, 3).iter_u64_digits().next().unwrap_or(0);
    Ok((0..total).fold(0u64, |m, i| {
        if (rng.next_u64() as u128) < cut {
            m | 1 << i
        } else {
            m
        }
    }))
}

/// Every labeled sphere on `n <= 7` vertices as a mask over triangle ranks.
pub fn sphere_masks(n: usize) -> Result<&'static [u64]> {
    static CACHE: [OnceLock<Vec<u64>>; 8] = [const { OnceLock::new() }; 8];
    if !(4..=7).contains(&n) {
        return Err(out_of_range(format!("sphere masks need 4 <= n <= 7, got {n}")));
    }
    Ok(CACHE[n].get_or_init(|| {
        enumerate_labeled_spheres(n)
            .expect("n in range")
            .iter()
            .map(|s| {
                s.triangles()
                    .iter()
                    .fold(0u64, |m, t| m | 1 << triangle_rank(n, t))
            })
            .collect()
    }))
}

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check_p(p: &BigRational, allow_zero: bool) -> Result<()> {
    let lo_ok = if allow_zero {
        !p.is_negative()
    } else {
        p.is_positive()
    };
    if !lo_ok || *p > BigRational::one() {
        let range = if allow_zero { "[0,1]" } else { "(0,1]" };
        return Err(out_of_range(format!("p = {p} not in {range}")));
    }
    Ok(())
}

/// `E[T] = |S_n| p^(2n-4)`.
pub fn first_moment(n: usize, p: &BigRational) -> Result<ExactRatio> {
    check_p(p, true)?;
    let count = labeled_sphere_count(n as u64)?;
    Ok(rational(count) * num_traits::pow(p.clone(), 2 * n - 4))
}

/// Ordered pairs `(s, s')` of spheres grouped by `|s ∩ s'|`.
pub fn pair_profile(n: usize) -> Result<BTreeMap<u32, u64>> {
    let masks = sphere_masks(n)?;
    let hist = masks
        .par_iter()
        .map(|&a| {
            let mut h = [0u64; 64];
            for &b in masks {
                h[(a & b).count_ones() as usize] += 1;
            }
            h
        })
        .reduce(
            || [0u64; 64],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += b;
                }
                x
            },
        );
    Ok(hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (i as u32, c))
        .collect())
}

/// `E[T^2] / E[T]^2 = |S_n|^-2 sum_{s,s'} p^(-|s ∩ s'|)`, for `4 <= n <= 7`.
pub fn second_moment_ratio(n: usize, p: &BigRational) -> Result<ExactRatio> {
    check_p(p, false)?;
    let profile = pair_profile(n)?;
    let inv = p.recip();
    let total: BigRational = profile
        .iter()
        .map(|(&h, &c)| rational(c) * num_traits::pow(inv.clone(), h as usize))
        .sum();
    let count = rational(labeled_sphere_count(n as u64)?);
    Ok(total / (count.clone() * count))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    /// `sum_F p^-|F| #{(s,s') : s ∩ s' = F}`
    pub left: ExactRatio,
    /// `sum_F (1/p - 1)^|F| #{(s,s') : F ⊆ s ∩ s'}`
    pub right: ExactRatio,
}

/// Both sides of the pair-intersection identity, each by its own route.
/// Supported for `4 <= n <= 6`.
pub fn intersection_identity_check(n: usize, p: &BigRational) -> Result<IdentityReport> {
    if !(4..=6).contains(&n) {
        return Err(out_of_range(format!("identity check needs 4 <= n <= 6, got {n}")));
    }
    check_p(p, false)?;
    let masks = sphere_masks(n)?;
    let inv = p.recip();

    // left: group ordered pairs by their exact intersection
    let mut exact: HashMap<u64, u64> = HashMap::new();
    for &a in masks {
        for &b in masks {
            *exact.entry(a & b).or_default() += 1;
        }
    }
    let left: BigRational = exact
        .iter()
        .map(|(f, &c)| rational(c) * num_traits::pow(inv.clone(), f.count_ones() as usize))
        .sum();

    // right: every F inside some sphere, weighted by (#spheres containing F)^2
    let mut subsets: HashSet<u64> = HashSet::new();
    for &s in masks {
        let mut f = s;
        loop {
            subsets.insert(f);
            if f == 0 {
                break;
            }
            f = (f - 1) & s;
        }
    }
    let q = inv - BigRational::one();
    let right: BigRational = subsets
        .iter()
        .map(|&f| {
            let containing = masks.iter().filter(|&&s| s & f == f).count() as u64;
            rational(containing * containing) * num_traits::pow(q.clone(), f.count_ones() as usize)
        })
        .sum();
    Ok(IdentityReport {
        holds: left == right,
        left,
        right,
    })
}

/// A polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + rational(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn add_term(&mut self, degree: usize, c: BigInt) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += c;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "p")?,
                (1, false) => write!(f, "{a}*p")?,
                (_, true) => write!(f, "p^{i}")?,
                (_, false) => write!(f, "{a}*p^{i}")?,
            }
        }
        Ok(())
    }
}

/// `Pr[X(n,p) contains a spanning sphere]` as an exact polynomial in `p`, by
/// inclusion-exclusion over the spheres. Supported for `3 <= n <= 5`.
pub fn exact_containment_polynomial(n: usize) -> Result<Polynomial> {
    if n == 3 {
        return Ok(Polynomial::zero());
    }
    if !(4..=5).contains(&n) {
        return Err(out_of_range(format!(
            "inclusion-exclusion needs 3 <= n <= 5, got {n}; use containment_polynomial_by_complexes for n = 6"
        )));
    }
    let masks = sphere_masks(n)?;
    let mut poly = Polynomial::zero();
    for subset in 1u32..(1 << masks.len()) {
        let union = masks
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .fold(0u64, |u, (_, &m)| u | m);
        let sign = if subset.count_ones() % 2 == 1 { 1 } else { -1 };
        poly.add_term(union.count_ones() as usize, BigInt::from(sign));
    }
    Ok(Polynomial::new(poly.coeffs))
}

/// The same probability by summing `p^|c| (1-p)^(C-|c|)` over every complex
/// `c` that contains a sphere. Supported for `4 <= n <= 6`.
pub fn containment_polynomial_by_complexes(n: usize) -> Result<Polynomial> {
    if !(4..=6).contains(&n) {
        return Err(out_of_range(format!(
            "complex summation needs 4 <= n <= 6, got {n}"
        )));
    }
    let masks = sphere_masks(n)?;
    let total = n * (n - 1) * (n - 2) / 6;
    let by_size: Vec<u64> = (0u64..1 << total)
        .into_par_iter()
        .fold(
            || vec![0u64; total + 1],
            |mut acc, c| {
                if masks.iter().any(|&s| s & c == s) {
                    acc[c.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; total + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let mut poly = Polynomial::zero();
    for (j, &count) in by_size.iter().enumerate() {
        if count == 0 {
            continue;
        }
        // count * p^j * sum_i C(total-j, i) (-p)^i
        for i in 0..=(total - j) {
            let c = BigInt::from(binomial((total - j) as u64, i as u64)) * count;
            poly.add_term(j + i, if i % 2 == 0 { c } else { -c });
        }
    }
    Ok(Polynomial::new(poly.coeffs))
}

/// Number of spheres (from [`sphere_masks`]) contained in the complex `mask`.
pub fn contained_sphere_count(n: usize, mask: u64) -> Result<usize> {
    Ok(sphere_masks(n)?.iter().filter(|&&s| s & mask == s).count())
}

/// Monte Carlo tallies over `trials` seeded samples of `X(n, p)`, `n <= 7`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentTally {
    pub trials: u64,
    /// Samples containing at least one sphere.
    pub hits: u64,
    /// Total spheres contained, summed over samples.
    pub spheres: u64,
}

pub fn containment_tally(n: usize, p: f64, trials: u64, master: u64) -> Result<ContainmentTally> {
    let masks = sphere_masks(n)?;
    threshold(p)?;
    let seed = Seed::new(master);
    let (hits, spheres) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let c = sample_mask(n, p, seed.trial(i)).expect("validated");
            let k = masks.iter().filter(|&&s| s & c == s).count() as u64;
            (u64::from(k > 0), k)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(ContainmentTally {
        trials,
        hits,
        spheres,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentReport {
    pub n: usize,
    pub p: BigRational,
    pub expected_count: ExactRatio,
    pub second_moment_ratio: Option<ExactRatio>,
    pub sphere_count_used: BigUint,
}

/// First moment for any `n >= 4`; second moment ratio too when `n <= 7`.
pub fn moment_report(n: usize, p: &BigRational) -> Result<MomentReport> {
    let expected_count = first_moment(n, p)?;
    let second_moment_ratio = if n <= 7 && p.is_positive() {
        Some(second_moment_ratio(n, p)?)
    } else {
        None
    };
    Ok(MomentReport {
        n,
        p: p.clone(),
        expected_count,
        second_moment_ratio,
        sphere_count_used: labeled_sphere_count(n as u64)?,
    })
}

impl fmt::Display for MomentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "p={}", self.p)?;
        writeln!(f, "sphere_count_used={}", self.sphere_count_used)?;
        writeln!(f, "expected_count={}", self.expected_count)?;
        writeln!(
            f,
            "expected_count_approx={:.10e}",
            crate::counts::to_f64(&self.expected_count)
        )?;
        match &self.second_moment_ratio {
            Some(r) => {
                writeln!(f, "second_moment_ratio={r}")?;
                write!(f, "second_moment_ratio_approx={:.10}", crate::counts::to_f64(r))
            }
            None => write!(f, "second_moment_ratio=NA"),
        }
    }
}

/// Parses `a/b` or an integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || crate::Error::Parse {
        line: 0,
        msg: format!("not a rational: {s:?}"),
    };
    let s = s.trim();
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let a: BigInt = a.parse().map_err(|_| bad())?;
    let b: BigInt = b.parse().map_err(|_| bad())?;
    if b.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(a, b))
}
