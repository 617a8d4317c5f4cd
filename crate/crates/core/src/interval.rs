//! Outward-rounded interval arithmetic over dyadic rationals.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result. Endpoints are rounded to `prec` significant bits after each step so
//! sizes stay bounded; lower endpoints round down and upper endpoints round up.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
    prec: u32,
}

/// Outcome of comparing an interval against a rational constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certified {
    Below,
    Above,
    Overlaps,
}

fn bits(x: &BigInt) -> i64 {
    x.bits() as i64
}

fn floor_scaled(q: &BigRational, shift: i64) -> BigInt {
    // floor(q * 2^shift)
    let (n, d) = (q.numer().clone(), q.denom().clone());
    if shift >= 0 {
        (n << shift as usize).div_floor(&d)
    } else {
        n.div_floor(&(d << (-shift) as usize))
    }
}

fn from_scaled(m: BigInt, shift: i64) -> BigRational {
    if shift >= 0 {
        BigRational::new(m, BigInt::one() << shift as usize)
    } else {
        BigRational::from_integer(m << (-shift) as usize)
    }
}

/// Largest dyadic with `prec` significant bits that is `<= q`.
pub fn round_down(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return q.clone();
    }
    let mag = bits(q.numer()) - bits(q.denom());
    let shift = prec as i64 - mag;
    from_scaled(floor_scaled(q, shift), shift)
}

/// Smallest dyadic with `prec` significant bits that is `>= q`.
pub fn round_up(q: &BigRational, prec: u32) -> BigRational {
    -round_down(&-q, prec)
}

impl Interval {
    pub fn exact(q: BigRational, prec: u32) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
            prec,
        }
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        Self::exact(BigRational::from_integer(v.into()), prec)
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        Self::exact(BigRational::new(num.into(), den.into()), prec).rounded()
    }

    /// Builds `[lo, hi]`; panics if `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi, prec }.rounded()
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    fn rounded(self) -> Self {
        Interval {
            lo: round_down(&self.lo, self.prec),
            hi: round_up(&self.hi, self.prec),
            prec: self.prec,
        }
    }

    fn with(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        Interval { lo, hi, prec }.rounded()
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Self::with(&self.lo + &o.lo, &self.hi + &o.hi, self.prec.max(o.prec))
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Self::with(&self.lo - &o.hi, &self.hi - &o.lo, self.prec.max(o.prec))
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self::with(lo, hi, self.prec.max(o.prec))
    }

    pub fn mul_rational(&self, q: &BigRational) -> Interval {
        self.mul(&Interval::exact(q.clone(), self.prec))
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, o: &Interval) -> Interval {
        assert!(
            o.lo.is_positive() || o.hi.is_negative(),
            "division by an interval containing zero"
        );
        let inv = Self::with(o.hi.recip(), o.lo.recip(), o.prec);
        self.mul(&inv)
    }

    pub fn powi(&self, e: u32) -> Interval {
        let mut acc = Interval::from_int(1, self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Square root of a nonnegative interval.
    pub fn sqrt(&self) -> Interval {
        assert!(!self.lo.is_negative(), "sqrt of negative interval");
        let prec = self.prec;
        Self::with(sqrt_down(&self.lo, prec), sqrt_up(&self.hi, prec), prec)
    }

    /// `e^x`, enclosed via a Taylor polynomial with a rigorous remainder bound.
    pub fn exp(&self) -> Interval {
        let prec = self.prec;
        Self::with(
            exp_bound(&self.lo, prec, false),
            exp_bound(&self.hi, prec, true),
            prec,
        )
    }

    pub fn pi(prec: u32) -> Interval {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let a = atan_inv(5, prec + 8);
        let b = atan_inv(239, prec + 8);
        let sixteen = BigRational::from_integer(16.into());
        let four = BigRational::from_integer(4.into());
        let lo = &a.0 * &sixteen - &b.1 * &four;
        let hi = &a.1 * &sixteen - &b.0 * &four;
        Self::with(lo, hi, prec)
    }

    /// Compares the whole interval against `q`.
    pub fn compare(&self, q: &BigRational) -> Certified {
        if &self.hi < q {
            Certified::Below
        } else if &self.lo > q {
            Certified::Above
        } else {
            Certified::Overlaps
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lo.to_f64().unwrap_or(f64::NAN);
        let hi = self.hi.to_f64().unwrap_or(f64::NAN);
        write!(f, "[{lo:.12e}, {hi:.12e}]")
    }
}

/// Interval over `f64` with one-ulp outward widening after every operation.
///
/// IEEE-754 `+ * / sqrt` are correctly rounded, so widening each result by one
/// ulp on both sides keeps the exact value enclosed. Only used for positive
/// finite quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FastInterval {
    pub fn point(v: f64) -> Self {
        FastInterval { lo: v, hi: v }
    }

    fn widen(lo: f64, hi: f64) -> Self {
        FastInterval {
            // enclosed values are never negative
            lo: lo.next_down().max(0.0),
            hi: hi.next_up(),
        }
    }

    pub fn add(self, o: Self) -> Self {
        Self::widen(self.lo + o.lo, self.hi + o.hi)
    }

    /// Product of two nonnegative intervals.
    pub fn mul(self, o: Self) -> Self {
        debug_assert!(self.lo >= 0.0 && o.lo >= 0.0);
        Self::widen(self.lo * o.lo, self.hi * o.hi)
    }

    /// Reciprocal of a positive interval.
    pub fn recip(self) -> Self {
        debug_assert!(self.lo > 0.0);
        Self::widen(1.0 / self.hi, 1.0 / self.lo)
    }

    pub fn sqrt(self) -> Self {
        Self::widen(self.lo.max(0.0).sqrt(), self.hi.sqrt())
    }
}

fn sqrt_down(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return q.clone();
    }
    let mag = bits(q.numer()) - bits(q.denom());
    let shift = prec as i64 + 2 - mag / 2;
    // floor(sqrt(floor(q * 4^shift))) / 2^shift
    let scaled = floor_scaled(q, 2 * shift);
    from_scaled(scaled.sqrt(), shift)
}

fn sqrt_up(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return q.clone();
    }
    let mag = bits(q.numer()) - bits(q.denom());
    let shift = prec as i64 + 2 - mag / 2;
    let scaled = -floor_scaled(&-q, 2 * shift);
    let mut r = scaled.sqrt();
    if &r * &r < scaled {
        r += 1;
    }
    from_scaled(r, shift)
}

/// A rational lower (`upper == false`) or upper bound for `e^x`.
fn exp_bound(x: &BigRational, prec: u32, upper: bool) -> BigRational {
    // Halve until |x| <= 1/2, evaluate the series, then square back up.
    let half = BigRational::new(1.into(), 2.into());
    let mut y = x.clone();
    let mut squarings = 0u32;
    while y.abs() > half {
        y /= BigRational::from_integer(2.into());
        squarings += 1;
    }
    let work = prec + 16 + 2 * squarings;
    let (lo, hi) = exp_small(&y, work);
    let mut v = if upper { hi } else { lo };
    for _ in 0..squarings {
        v = &v * &v;
        v = if upper {
            round_up(&v, work)
        } else {
            round_down(&v, work)
        };
    }
    v
}

/// Bounds on `e^y` for `|y| <= 1/2`.
fn exp_small(y: &BigRational, work: u32) -> (BigRational, BigRational) {
    let target = BigRational::new(BigInt::one(), BigInt::one() << (work as usize + 4));
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut j: u64 = 0;
    loop {
        sum += &term;
        j += 1;
        term = round_toward_zero(&(&term * y / BigRational::from_integer(j.into())), work + 8);
        // Remainder after stopping here: |y|^j/j! * 1/(1 - |y|/(j+1)) <= 2|term_exact|.
        if term.abs() < target {
            break;
        }
    }
    // `term` is the next term rounded toward zero; each of the j rounded terms
    // carries at most j relative roundings of 2^-(work+8).
    let tail = term.abs() * BigRational::from_integer(3.into())
        + BigRational::new(BigInt::from(j * j + 1), BigInt::one() << (work as usize + 8));
    (round_down(&(&sum - &tail), work), round_up(&(&sum + &tail), work))
}

fn round_toward_zero(q: &BigRational, prec: u32) -> BigRational {
    match q.numer().sign() {
        Sign::Minus => round_up(q, prec),
        _ => round_down(q, prec),
    }
}

/// Bounds on `atan(1/q)` for an integer `q >= 2` via the alternating series.
fn atan_inv(q: i64, prec: u32) -> (BigRational, BigRational) {
    let q2 = BigRational::from_integer((q * q).into());
    let mut power = BigRational::new(1.into(), q.into()); // 1/q^(2j+1)
    let mut lower = BigRational::zero();
    let mut upper;
    let mut j: i64 = 0;
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (prec as usize + 4));
    loop {
        let term = &power / BigRational::from_integer((2 * j + 1).into());
        if j % 2 == 0 {
            lower += &term;
        } else {
            lower -= &term;
        }
        j += 1;
        power /= &q2;
        let next = &power / BigRational::from_integer((2 * j + 1).into());
        // Partial sums of an alternating decreasing series bracket the limit.
        let other = if j % 2 == 0 {
            &lower + &next
        } else {
            &lower - &next
        };
        if next < eps {
            upper = other;
            break;
        }
    }
    if lower > upper {
        std::mem::swap(&mut lower, &mut upper);
    }
    (lower, upper)
}

/// Evaluates `f` at increasing precision until `decide` is conclusive.
///
/// Starts at `start` bits, doubles up to `cap`; returns the last interval and
/// whether a conclusive answer was found.
pub fn refine<F, D, T>(start: u32, cap: u32, mut f: F, mut decide: D) -> (Interval, Option<T>)
where
    F: FnMut(u32) -> Interval,
    D: FnMut(&Interval) -> Option<T>,
{
    let mut prec = start;
    loop {
        let iv = f(prec);
        if let Some(t) = decide(&iv) {
            return (iv, Some(t));
        }
        if prec >= cap {
            return (iv, None);
        }
        prec = (prec * 2).min(cap);
    }
}
