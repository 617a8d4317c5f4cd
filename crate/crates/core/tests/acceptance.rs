//! The twelve acceptance criteria, one pass/fail line each.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamsphere::appendix;
use hamsphere::check::Outcome;
use hamsphere::complex::{check_closed_surface, check_spanning_sphere, known, FailureReason};
use hamsphere::counts;
use hamsphere::enumerate::{self, PolygonInstance};
use hamsphere::moments::{self, Seed};
use hamsphere::search::{find_spanning_sphere, SearchBudget};
use hamsphere::sweep::{run_sweep, PGrid, SweepConfig};
use hamsphere::verify::{planar_suite, PlanarSuiteConfig};
use hamsphere::Triangle;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

type Verdict = (bool, String);

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn polygon_formula_vs_oracle() -> Verdict {
    let mut bad = Vec::new();
    for m in 3..=5usize {
        for k in 0..=2usize {
            let formula = counts::polygon_triangulation_count(k as u64, m as u64).unwrap();
            let oracle = enumerate::enumerate_polygon_triangulations(PolygonInstance { m, k })
                .unwrap()
                .len();
            if formula != BigUint::from(oracle) {
                bad.push(format!("(m={m},k={k}) {formula} vs {oracle}"));
            }
        }
    }
    let named = [(0, 4, 2u32), (1, 4, 5), (2, 3, 6)];
    for (k, m, v) in named {
        if counts::polygon_triangulation_count(k, m).unwrap() != BigUint::from(v) {
            bad.push(format!("T({k},{m}) != {v}"));
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "9 cases + 3 named values".into()
        } else {
            bad.join("; ")
        },
    )
}

fn sphere_counts() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, expect) in [(4usize, Some(1usize)), (5, Some(10)), (6, None), (7, None)] {
        let t = Instant::now();
        let got = enumerate::enumerate_labeled_spheres(n).unwrap().len();
        let elapsed = t.elapsed();
        let formula = counts::labeled_sphere_count(n as u64).unwrap();
        let limit = if n == 7 {
            Duration::from_secs(1800)
        } else {
            Duration::from_secs(60)
        };
        ok &= formula == BigUint::from(got) && expect.is_none_or(|e| e == got) && elapsed < limit;
        notes.push(format!("n={n}:{got} ({:.2}s)", elapsed.as_secs_f64()));
    }
    (ok, notes.join(", "))
}

fn banana() -> Verdict {
    let r = appendix::banana_convolution_check(200, 2);
    (
        r.holds,
        format!(
            "k<=200, max LHS/(8 T'_k) = {:.6} at k={}",
            counts::rational_to_f64(&r.tightest.1),
            r.tightest.0
        ),
    )
}

fn asymptotic_ratio() -> Verdict {
    let r = appendix::asymptotic_ratio_check(10..=200, &q(21, 20));
    (
        r.outcome == Outcome::Pass,
        format!("{} ratio in [{:.6}, {:.6}]", r.outcome, r.min_lower, r.max_upper),
    )
}

fn tail_sum() -> Verdict {
    let (s, outcome) = appendix::tail_sum_check();
    (
        outcome == Outcome::Pass && s < q(5, 4),
        format!("sum = {:.7} < 1.25", counts::rational_to_f64(&s)),
    )
}

/// `sum over ordered pairs of p^-|s ∩ s'|`, from triangle sets of the
/// enumerated spheres.
fn pair_sum(n: usize, p: &BigRational) -> (BigRational, usize) {
    let spheres: Vec<BTreeSet<Triangle>> = enumerate::enumerate_labeled_spheres(n)
        .unwrap()
        .into_iter()
        .map(|c| c.triangles().clone())
        .collect();
    let inv = p.recip();
    let mut sum = BigRational::zero();
    for a in &spheres {
        for b in &spheres {
            sum += num_traits::pow(inv.clone(), a.intersection(b).count());
        }
    }
    (sum, spheres.len())
}

fn first_moment() -> Verdict {
    let half = q(1, 2);
    let exact = moments::first_moment(5, &half).unwrap();
    let by_count = q(enumerate::enumerate_labeled_spheres(5).unwrap().len() as i64, 64);
    let t = Instant::now();
    let trials = 100_000u64;
    let tally = moments::containment_tally(5, 0.5, trials, 0).unwrap();
    let mean = tally.spheres as f64 / trials as f64;
    let (pairs, s) = pair_sum(5, &half);
    let second = (pairs / BigRational::from_integer(BigInt::from(s * s)))
        .to_f64()
        .unwrap();
    let mu = 5.0 / 32.0;
    let se = (mu * mu * (second - 1.0) / trials as f64).sqrt();
    let z = (mean - mu) / se;
    (
        exact == q(5, 32) && exact == by_count && z.abs() <= 4.0 && t.elapsed() < Duration::from_secs(300),
        format!("E = {exact}; empirical mean {mean:.5} over 1e5 samples, z = {z:.2}"),
    )
}

fn second_moment() -> Verdict {
    let half = q(1, 2);
    let ratio = moments::second_moment_ratio(5, &half).unwrap();
    let (pairs, s) = pair_sum(5, &half);
    let oracle = pairs / BigRational::from_integer(BigInt::from(s * s));
    let mut ok = ratio == oracle;
    let mut grid = Vec::new();
    for n in [4, 5] {
        for p in [q(1, 3), q(1, 2), q(2, 3)] {
            let r = moments::intersection_identity_check(n, &p).unwrap();
            ok &= r.holds && r.left == r.right && r.left == pair_sum(n, &p).0;
            grid.push(format!("({n},{p})"));
        }
    }
    (
        ok,
        format!(
            "ratio(5,1/2) = {ratio}, oracle {oracle}; identity exact at {}",
            grid.join(" ")
        ),
    )
}

fn recognizer() -> Verdict {
    let t = Instant::now();
    let accept = [
        known::tetrahedron(),
        known::bipyramid(5, [3, 4], [0, 1, 2]),
        known::octahedron(),
        known::icosahedron(),
    ]
    .iter()
    .all(|c| check_spanning_sphere(c).is_sphere);
    let torus = check_closed_surface(&known::csaszar_torus()).failure_reason;
    let rp2 = check_closed_surface(&known::projective_plane()).failure_reason;
    let pinched = check_closed_surface(&known::pinched_spheres()).failure_reason;
    let ok = accept
        && torus == Some(FailureReason::WrongEuler(0))
        && matches!(
            rp2,
            Some(FailureReason::NotPureDegree { .. }) | Some(FailureReason::WrongEuler(1))
        )
        && matches!(pinched, Some(FailureReason::LinkNotCycle(_)))
        && t.elapsed() < Duration::from_secs(1);
    let show = |r: Option<FailureReason>| r.map_or("none".to_string(), |r| r.to_string());
    (
        ok,
        format!(
            "4 spheres accepted; torus {}, RP2 {}, pinched {}",
            show(torus),
            show(rp2),
            show(pinched)
        ),
    )
}

fn search_completeness() -> Verdict {
    let mut disagreements = 0;
    let mut found = 0;
    let master = Seed::new(0);
    let mut index = 0u64;
    for n in [4usize, 5] {
        for p in [0.2, 0.5, 0.8] {
            for _ in 0..1000 {
                let s = master.trial(index);
                index += 1;
                let mask = moments::sample_mask(n, p, s).unwrap();
                let oracle = moments::contained_sphere_count(n, mask).unwrap() > 0;
                let c = moments::sample_complex(n, p, s).unwrap();
                let r = find_spanning_sphere(&c, SearchBudget::default());
                found += usize::from(r.found());
                if r.found() != oracle || r.is_timeout() {
                    disagreements += 1;
                }
            }
        }
    }
    (
        disagreements == 0,
        format!("{index} complexes, {found} contain a sphere, {disagreements} disagreements"),
    )
}

fn threshold_monotonicity() -> Verdict {
    let t = Instant::now();
    let cfg = SweepConfig {
        n: 12,
        p: PGrid::CriticalMultiples(vec![0.5, 1.0, 2.0]),
        trials: 60,
        seed: 0,
        budget: SearchBudget::default(),
    };
    let r = run_sweep(&cfg).unwrap();
    let phat: Vec<f64> = r.iter().map(|x| x.phat).collect();
    let timeouts: u64 = r.iter().map(|x| x.timeouts).sum();
    let rate = timeouts as f64 / 180.0;
    let ok = phat.windows(2).all(|w| w[0] <= w[1])
        && phat[2] - phat[0] >= 0.3
        && rate < 0.2
        && t.elapsed() < Duration::from_secs(3600);
    (
        ok,
        format!(
            "phat at (0.5,1,2)p_c = ({:.3}, {:.3}, {:.3}); timeout rate {:.1}%",
            phat[0],
            phat[1],
            phat[2],
            100.0 * rate
        ),
    )
}

fn planar_lemmas() -> Verdict {
    let t = Instant::now();
    let lines = planar_suite(&PlanarSuiteConfig::default()).unwrap();
    let failed: Vec<String> = lines
        .iter()
        .filter(|l| l.outcome != Outcome::Pass)
        .map(|l| l.to_string())
        .collect();
    let ok = failed.is_empty() && t.elapsed() < Duration::from_secs(600);
    (
        ok,
        if failed.is_empty() {
            format!(
                "{} checks over exhaustive m<=8 and 1000 random maps (m<=40)",
                lines.len()
            )
        } else {
            failed.join("; ")
        },
    )
}

fn lattice_bound() -> Verdict {
    let r = appendix::a4_sweep(&appendix::SweepConfig::default());
    (
        r.outcome() == Outcome::Pass,
        format!(
            "{} over {} tuples, {} comparisons",
            r.outcome(),
            r.tuples,
            r.comparisons
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("polygon formula vs enumeration", polygon_formula_vs_oracle),
        ("labeled sphere counts", sphere_counts),
        ("convolution bound r=2, k<=200", banana),
        ("certified asymptotic ratio", asymptotic_ratio),
        ("tail sum below 5/4", tail_sum),
        ("first moment", first_moment),
        ("second moment and identity grid", second_moment),
        ("surface recognizer", recognizer),
        ("search completeness", search_completeness),
        ("threshold monotonicity at n=12", threshold_monotonicity),
        ("planar lemma suites", planar_lemmas),
        ("lattice-sum bound grid", lattice_bound),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        failures += usize::from(!ok);
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.2}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
