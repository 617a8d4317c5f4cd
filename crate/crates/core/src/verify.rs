//! Verification suites. Each suite produces [`CheckLine`]s of the form
//! `<check-name> PASS|FAIL|INCONCLUSIVE <witness>`.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::appendix;
use crate::check::{CheckLine, Outcome};
use crate::complex::{check_spanning_sphere, known, Complex2};
use crate::counts;
use crate::enumerate::{self, PolygonInstance};
use crate::error::{Error, Result};
use crate::moments::{self, Seed};
use crate::planar::{self, Color, EmbeddedColoredGraph};
use crate::search::{find_spanning_sphere, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Counts,
    Appendix,
    Planar,
    Moments,
    Search,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Counts,
        Suite::Appendix,
        Suite::Planar,
        Suite::Moments,
        Suite::Search,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Appendix => "appendix",
            Suite::Planar => "planar",
            Suite::Moments => "moments",
            Suite::Search => "search",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn line(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> CheckLine {
    CheckLine::new(name, Outcome::from_bool(ok), witness)
}

pub fn counts_suite() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();

    let mut mismatch = None;
    let mut cases = 0;
    for m in 3..=5 {
        for k in 0..=3 {
            let formula = counts::polygon_triangulation_count(k as u64, m as u64)?;
            let oracle = enumerate::enumerate_polygon_triangulations(PolygonInstance { m, k })?.len();
            cases += 1;
            if formula != oracle.into() && mismatch.is_none() {
                mismatch = Some((m, k, formula, oracle));
            }
        }
    }
    out.push(match mismatch {
        None => line("polygon_count_vs_enumeration", true, format!("cases={cases}")),
        Some((m, k, f, o)) => line(
            "polygon_count_vs_enumeration",
            false,
            format!("m={m},k={k},formula={f},oracle={o}"),
        ),
    });

    for n in 4..=6usize {
        let oracle = enumerate::enumerate_labeled_spheres(n)?.len();
        let formula = counts::labeled_sphere_count(n as u64)?;
        line_push(
            &mut out,
            format!("sphere_count_n{n}"),
            formula == oracle.into(),
            format!("formula={formula},oracle={oracle}"),
        );
    }

    let bad = (0..=100u64).find(|&k| {
        counts::triangle_triangulation_count(k) != counts::polygon_triangulation_count(k, 3).expect("m = 3")
    });
    line_push(
        &mut out,
        "triangle_specialisation_k100",
        bad.is_none(),
        bad.map_or("k<=100".to_string(), |k| format!("k={k}")),
    );

    let mut witness = Vec::new();
    let mut ok = true;
    for m1 in 3..=4 {
        for m2 in 3..=4 {
            for k in 0..=2 {
                let r = enumerate::injection_inequality_check(m1, m2, k)?;
                ok &= r.holds;
                if !r.holds {
                    witness.push(format!("m1={m1},m2={m2},k={k}"));
                }
            }
        }
    }
    line_push(
        &mut out,
        "annulus_injection",
        ok,
        if ok {
            "cases=12".to_string()
        } else {
            witness.join(";")
        },
    );
    Ok(out)
}

fn line_push(out: &mut Vec<CheckLine>, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
    out.push(line(name, ok, witness));
}

pub fn appendix_suite() -> Vec<CheckLine> {
    let mut out = Vec::new();

    let b = appendix::banana_convolution_check(200, 2);
    let tight = counts::to_f64(&b.tightest.1);
    out.push(line(
        "banana_convolution_r2_k200",
        b.holds,
        match b.first_counterexample {
            None => format!("tightest_k={},ratio={tight:.6}", b.tightest.0),
            Some(k) => format!("counterexample_k={k}"),
        },
    ));

    let r = appendix::asymptotic_ratio_check(10..=200, &q(21, 20));
    out.push(CheckLine::new(
        "asymptotic_ratio_k10_200",
        r.outcome,
        match r.failing_k {
            None => format!("range=[{:.6},{:.6}]", r.min_lower, r.max_upper),
            Some(k) => format!("k={k}"),
        },
    ));

    let (s, outcome) = appendix::tail_sum_check();
    out.push(CheckLine::new(
        "tail_sum_a20",
        outcome,
        format!("sum={:.7}", counts::to_f64(&s)),
    ));

    let sweep = appendix::binomial_sweep(&q(1, 2), 60, 60);
    out.push(line(
        "binomial_closed_form_delta_1_2",
        sweep.closed_form_holds,
        format!(
            "C={:.4},empirical={:.4},half_grid={:.4}",
            sweep.closed_form(),
            sweep.empirical_c,
            sweep.empirical_c_half
        ),
    ));

    let a4 = appendix::a4_sweep(&appendix::SweepConfig::default());
    let witness = match (a4.failures.first(), a4.inconclusive.first()) {
        (Some((parts, k)), _) | (None, Some((parts, k))) => format!("tuple={parts:?},k={k}"),
        _ => format!(
            "tuples={},comparisons={},tightest={:.6}",
            a4.tuples, a4.comparisons, a4.tightest
        ),
    };
    out.push(CheckLine::new("lattice_bound_w3_k50", a4.outcome(), witness));
    out
}

/// Sizes for the planar suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarSuiteConfig {
    pub random_maps: usize,
    pub random_m_max: usize,
    pub exhaustive_m_max: usize,
    pub seed: u64,
}

impl Default for PlanarSuiteConfig {
    fn default() -> Self {
        PlanarSuiteConfig {
            random_maps: 1000,
            random_m_max: 40,
            exhaustive_m_max: 8,
            seed: 0,
        }
    }
}

/// Running outcome of one check over many maps.
#[derive(Debug, Clone)]
struct Tally {
    outcome: Outcome,
    checked: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            outcome: Outcome::Pass,
            checked: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, o: Outcome, what: impl FnOnce() -> String) {
        self.checked += 1;
        if o != Outcome::Pass && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
        self.outcome = self.outcome.and(o);
    }

    fn line(self, name: &str) -> CheckLine {
        let witness = self
            .first_failure
            .unwrap_or_else(|| format!("maps={}", self.checked));
        CheckLine::new(name, self.outcome, witness)
    }
}

/// Vertex weights and white-face point allocations for one map.
fn map_inputs(g: &EmbeddedColoredGraph, rng: &mut ChaCha8Rng) -> (Vec<i64>, Vec<u64>) {
    let z = (0..g.vertex_count()).map(|_| rng.gen_range(0..20)).collect();
    let alloc = g
        .faces()
        .iter()
        .map(|f| {
            if f.color == Color::White {
                rng.gen_range(0..4)
            } else {
                0
            }
        })
        .collect();
    (z, alloc)
}

struct PlanarTallies {
    estimates: Tally,
    mckay: Tally,
    identity: Tally,
    deficit: Tally,
}

impl PlanarTallies {
    fn new() -> Self {
        PlanarTallies {
            estimates: Tally::new(),
            mckay: Tally::new(),
            identity: Tally::new(),
            deficit: Tally::new(),
        }
    }

    fn add(&mut self, g: &EmbeddedColoredGraph, rng: &mut ChaCha8Rng) -> Result<()> {
        let (z, alloc) = map_inputs(g, rng);
        let text = || g.to_text().replace('\n', ";");
        self.estimates
            .record(planar::planar_estimates_check(g).outcome, text);
        self.mckay.record(planar::mckay_check_map(g, &z)?.outcome, text);
        self.identity
            .record(planar::white_triangle_count(g, &alloc)?.outcome, text);
        if g.component_count() == 1 {
            let mut o = Outcome::Pass;
            for f in 0..g.face_count() {
                o = o.and(planar::bw_deficit_check(g, f)?.outcome);
            }
            self.deficit.record(o, text);
        }
        Ok(())
    }
}

pub fn planar_suite(cfg: &PlanarSuiteConfig) -> Result<Vec<CheckLine>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();

    let mut ex = PlanarTallies::new();
    for m in 3..=cfg.exhaustive_m_max {
        for g in planar::exhaustive_maps(m)? {
            ex.add(&g, &mut rng)?;
        }
    }
    let suffix = format!("exhaustive_m{}", cfg.exhaustive_m_max);
    out.push(ex.estimates.line(&format!("planar_estimates_{suffix}")));
    out.push(ex.mckay.line(&format!("mckay_bound_{suffix}")));
    out.push(ex.identity.line(&format!("white_triangle_identity_{suffix}")));
    out.push(ex.deficit.line(&format!("black_white_deficit_{suffix}")));

    let span = cfg.random_m_max.saturating_sub(2).max(1);
    let maps: Vec<EmbeddedColoredGraph> = (0..cfg.random_maps)
        .into_par_iter()
        .map(|i| {
            let m = 3 + i % span;
            planar::generate_random_colored_map(m, moments::mix(cfg.seed, i as u64))
        })
        .collect::<Result<_>>()?;
    let mut rnd = PlanarTallies::new();
    for g in &maps {
        rnd.add(g, &mut rng)?;
    }
    let suffix = format!("random_{}_m{}", cfg.random_maps, cfg.random_m_max);
    out.push(rnd.estimates.line(&format!("planar_estimates_{suffix}")));
    out.push(rnd.mckay.line(&format!("mckay_bound_{suffix}")));
    out.push(rnd.identity.line(&format!("white_triangle_identity_{suffix}")));
    out.push(rnd.deficit.line(&format!("black_white_deficit_{suffix}")));

    let mut cayley = Tally::new();
    for n in 2..=6 {
        for _ in 0..5 {
            let x: Vec<u64> = (0..n).map(|_| rng.gen_range(1..6)).collect();
            let r = planar::weighted_cayley_check(&x)?;
            cayley.record(r.outcome, || format!("x={x:?}"));
        }
    }
    let mut l = cayley.line("weighted_cayley_n6");
    if l.outcome == Outcome::Pass {
        l.witness = format!("weight_vectors={}", 25);
    }
    out.push(l);
    Ok(out)
}

/// `sum over ordered pairs (s, s') of p^-|s ∩ s'| / |S|^2`, by direct
/// iteration over sphere masks.
fn pairwise_second_moment(n: usize, p: &BigRational) -> Result<BigRational> {
    let masks = moments::sphere_masks(n)?;
    let inv = p.recip();
    let pows: Vec<BigRational> = (0..=64u32)
        .map(|e| num_traits::pow(inv.clone(), e as usize))
        .collect();
    let mut sum = BigRational::zero();
    for a in masks {
        for b in masks {
            sum += &pows[(a & b).count_ones() as usize];
        }
    }
    let s = BigInt::from(masks.len());
    Ok(sum / BigRational::from_integer(&s * &s))
}

pub fn moments_suite() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let half = q(1, 2);

    for n in 4..=6usize {
        let masks = moments::sphere_masks(n)?;
        let triangles = 2 * n - 4;
        let direct = BigRational::from_integer(masks.len().into()) * num_traits::pow(half.clone(), triangles);
        let f = moments::first_moment(n, &half)?;
        out.push(line(
            format!("first_moment_n{n}_p1_2"),
            f == direct,
            format!("value={f}"),
        ));
    }

    for n in 4..=6usize {
        let ours = moments::second_moment_ratio(n, &half)?;
        let oracle = pairwise_second_moment(n, &half)?;
        out.push(line(
            format!("second_moment_ratio_n{n}_p1_2"),
            ours == oracle,
            format!("value={ours},oracle={oracle}"),
        ));
    }

    for n in 4..=5usize {
        for p in [q(1, 3), q(1, 2), q(2, 3)] {
            let r = moments::intersection_identity_check(n, &p)?;
            out.push(line(
                format!("intersection_identity_n{n}_p{}_{}", p.numer(), p.denom()),
                r.holds,
                format!("left={},right={}", r.left, r.right),
            ));
        }
    }

    for n in 4..=5usize {
        let a = moments::exact_containment_polynomial(n)?;
        let b = moments::containment_polynomial_by_complexes(n)?;
        out.push(line(
            format!("containment_polynomial_n{n}"),
            a == b,
            format!("poly={a}"),
        ));
    }
    Ok(out)
}

/// Search-vs-oracle agreement over seeded samples, plus fixtures.
pub fn search_suite(seed: u64, trials: u64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let master = Seed::new(seed);
    for n in 4..=6usize {
        let mut disagreements = Vec::new();
        let mut index = 0;
        for p in [0.2, 0.5, 0.8] {
            let results: Vec<Result<Option<u64>>> = (index..index + trials)
                .into_par_iter()
                .map(|i| {
                    let s = master.trial(i);
                    let mask = moments::sample_mask(n, p, s)?;
                    let oracle = moments::contained_sphere_count(n, mask)? > 0;
                    let c = moments::sample_complex(n, p, s)?;
                    let r = find_spanning_sphere(&c, SearchBudget::unlimited());
                    let witness_ok = r
                        .witness()
                        .map_or(true, |w| crate::complex::is_spanning_sphere(n, w));
                    Ok((r.found() != oracle || !witness_ok).then_some(i))
                })
                .collect();
            for r in results {
                if let Some(i) = r? {
                    disagreements.push(i);
                }
            }
            index += trials;
        }
        out.push(line(
            format!("search_vs_oracle_n{n}"),
            disagreements.is_empty(),
            match disagreements.first() {
                None => format!("samples={index}"),
                Some(i) => format!("disagreements={},first_trial={i}", disagreements.len()),
            },
        ));
    }

    let fixtures: [(&str, Complex2, bool); 6] = [
        ("tetrahedron", known::tetrahedron(), true),
        ("octahedron", known::octahedron(), true),
        ("icosahedron", known::icosahedron(), true),
        ("csaszar_torus", known::csaszar_torus(), false),
        ("projective_plane", known::projective_plane(), false),
        ("complete_n8", Complex2::complete(8), true),
    ];
    for (name, c, expect) in fixtures {
        let r = find_spanning_sphere(&c, SearchBudget::default());
        let valid = match r.witness() {
            Some(w) => check_spanning_sphere(&Complex2::new(c.n(), w.iter().copied())?).is_sphere,
            None => true,
        };
        out.push(line(
            format!("search_fixture_{name}"),
            r.found() == expect && valid,
            format!("{},nodes={}", r.outcome.label(), r.stats.nodes),
        ));
    }
    Ok(out)
}

/// Options shared by all suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub search_trials: u64,
    pub planar: PlanarSuiteConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            search_trials: 300,
            planar: PlanarSuiteConfig::default(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckLine>> {
    match suite {
        Suite::Counts => counts_suite(),
        Suite::Appendix => Ok(appendix_suite()),
        Suite::Planar => planar_suite(&PlanarSuiteConfig {
            seed: opts.seed,
            ..opts.planar
        }),
        Suite::Moments => moments_suite(),
        Suite::Search => search_suite(opts.seed, opts.search_trials),
    }
}

/// Runs the suites in order, writing each line as it is produced. Returns
/// the process exit code: 0 iff every line passed.
pub fn run_verify(suites: &[Suite], opts: &VerifyOptions, out: &mut impl Write) -> Result<i32> {
    let mut all_pass = true;
    for &s in suites {
        for l in run_suite(s, opts)? {
            all_pass &= l.outcome == Outcome::Pass;
            writeln!(out, "{l}").map_err(|e| Error::OutOfRange(format!("write failed: {e}")))?;
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

/// Parses `counts,planar` style lists; the empty string is the empty list.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(Suite::from_str)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_list_prints_nothing() {
        let mut buf = Vec::new();
        let code = run_verify(&[], &VerifyOptions::default(), &mut buf).unwrap();
        assert_eq!(code, 0);
        assert!(buf.is_empty());
        assert!(parse_suites("").unwrap().is_empty());
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(parse_suites("counts,bogus").is_err());
        assert_eq!(
            parse_suites("counts, search").unwrap(),
            vec![Suite::Counts, Suite::Search]
        );
    }

    #[test]
    fn moments_suite_includes_identity_grid() {
        let lines = moments_suite().unwrap();
        let ids: Vec<_> = lines
            .iter()
            .filter(|l| l.name.starts_with("intersection_identity"))
            .collect();
        assert_eq!(ids.len(), 6);
        assert!(lines.iter().all(|l| l.outcome == Outcome::Pass), "{lines:?}");
    }

    #[test]
    fn small_planar_suite_passes() {
        let cfg = PlanarSuiteConfig {
            random_maps: 30,
            random_m_max: 20,
            exhaustive_m_max: 6,
            seed: 3,
        };
        let lines = planar_suite(&cfg).unwrap();
        assert!(lines.iter().all(|l| l.outcome == Outcome::Pass), "{lines:?}");
    }

    #[test]
    fn search_suite_agrees() {
        let lines = search_suite(1, 40).unwrap();
        assert!(lines.iter().all(|l| l.outcome == Outcome::Pass), "{lines:?}");
    }

    #[test]
    fn line_format() {
        let l = CheckLine::new("x", Outcome::Inconclusive, "w=1");
        assert_eq!(l.to_string(), "x INCONCLUSIVE w=1");
    }
}
