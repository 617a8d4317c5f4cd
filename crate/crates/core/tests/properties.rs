use hamsphere::check::Outcome;
use hamsphere::complex::{check_closed_surface, euler_characteristic, is_spanning_sphere, known};
use hamsphere::counts;
use hamsphere::moments::{self, Seed};
use hamsphere::planar::{self, Color, EmbeddedColoredGraph};
use hamsphere::search::{find_spanning_sphere, SearchBudget};
use hamsphere::sweep::{run_sweep, PGrid, SweepConfig};
use hamsphere::Complex2;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complex_text_round_trips(n in 3usize..9, p in 0.0f64..1.0, seed in any::<u64>()) {
        let c = moments::sample_complex(n, p, Seed::new(seed)).unwrap();
        prop_assert_eq!(Complex2::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn search_matches_mask_oracle(n in 4usize..=6, p in 0.1f64..0.95, seed in any::<u64>()) {
        let s = Seed::new(seed);
        let mask = moments::sample_mask(n, p, s).unwrap();
        let expected = moments::contained_sphere_count(n, mask).unwrap() > 0;
        let c = moments::sample_complex(n, p, s).unwrap();
        let r = find_spanning_sphere(&c, SearchBudget::unlimited());
        prop_assert_eq!(r.found(), expected);
        if let Some(w) = r.witness() {
            prop_assert!(is_spanning_sphere(n, w));
            prop_assert_eq!(w.len(), 2 * n - 4);
            prop_assert!(w.iter().all(|t| c.contains(t)));
        }
    }

    #[test]
    fn search_outcome_is_relabeling_invariant(n in 5usize..=9, p in 0.2f64..0.9, seed in any::<u64>(), rot in 0usize..9) {
        let c = moments::sample_complex(n, p, Seed::new(seed)).unwrap();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).rev().collect();
        let a = find_spanning_sphere(&c, SearchBudget::default());
        let b = find_spanning_sphere(&c.relabel(&perm), SearchBudget::default());
        prop_assert_eq!(a.found(), b.found());
    }

    #[test]
    fn found_spheres_satisfy_the_surface_invariants(n in 6usize..=10, seed in any::<u64>()) {
        let c = moments::sample_complex(n, 0.8, Seed::new(seed)).unwrap();
        let r = find_spanning_sphere(&c, SearchBudget::default());
        if let Some(w) = r.witness() {
            let s = Complex2::new(n, w.iter().copied()).unwrap();
            let report = check_closed_surface(&s);
            prop_assert!(report.is_sphere);
            prop_assert_eq!(report.euler_characteristic, 2);
            prop_assert_eq!(report.faces, 2 * report.vertices_used - 4);
            prop_assert_eq!(euler_characteristic(s.triangles()), 2);
        }
    }

    #[test]
    fn first_moment_is_count_times_probability(n in 4usize..=7, a in 1i64..30, extra in 0i64..30) {
        let p = rational(a, a + extra);
        let expected = BigRational::from_integer(BigInt::from(counts::labeled_sphere_count(n as u64).unwrap()))
            * num_traits::pow(p.clone(), 2 * n - 4);
        prop_assert_eq!(moments::first_moment(n, &p).unwrap(), expected);
    }

    #[test]
    fn second_moment_ratio_is_at_least_one(n in 4usize..=6, a in 1i64..30, extra in 0i64..30) {
        let p = rational(a, a + extra);
        let r = moments::second_moment_ratio(n, &p).unwrap();
        prop_assert!(r >= BigRational::one());
        if extra == 0 {
            prop_assert!(r.is_one());
        }
    }

    #[test]
    fn polygon_counts_are_positive_and_grow(k in 0u64..30, m in 3u64..12) {
        let t = counts::polygon_triangulation_count(k, m).unwrap();
        prop_assert!(!t.is_zero());
        prop_assert!(counts::polygon_triangulation_count(k + 1, m).unwrap() > t);
    }

    #[test]
    fn random_maps_satisfy_map_invariants(m in 3usize..=40, seed in any::<u64>()) {
        let g = planar::generate_random_colored_map(m, seed).unwrap();
        prop_assert_eq!(g.vertex_count(), m);
        // Euler with r components: F - E + V = r + 1
        prop_assert_eq!(
            g.face_count() + g.vertex_count(),
            g.edge_count() + g.component_count() + 1
        );
        for (u, v) in g.edges() {
            let (a, b) = (g.face_left(u, v), g.face_left(v, u));
            prop_assert_ne!(g.color(a), g.color(b));
        }
        for v in 0..m {
            prop_assert!(g.rotation(v).len() >= 2 && g.rotation(v).len() % 2 == 0);
        }
        let back = EmbeddedColoredGraph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn planar_checks_hold_on_random_inputs(m in 3usize..=40, seed in any::<u64>(), w in proptest::collection::vec(0i64..50, 40), a in proptest::collection::vec(0u64..5, 200)) {
        let g = planar::generate_random_colored_map(m, seed).unwrap();
        let z = &w[..m];
        let alloc: Vec<u64> = g
            .faces()
            .iter()
            .zip(a.iter().cycle())
            .map(|(f, &k)| if f.color == Color::White { k } else { 0 })
            .collect();
        prop_assert_eq!(planar::planar_estimates_check(&g).outcome, Outcome::Pass);
        prop_assert_eq!(planar::mckay_check_map(&g, z).unwrap().outcome, Outcome::Pass);
        prop_assert_eq!(planar::white_triangle_count(&g, &alloc).unwrap().outcome, Outcome::Pass);
        if g.component_count() == 1 {
            for f in 0..g.face_count() {
                prop_assert_eq!(planar::bw_deficit_check(&g, f).unwrap().outcome, Outcome::Pass);
            }
        }
    }

    #[test]
    fn weighted_cayley_holds(x in proptest::collection::vec(1u64..10, 2..=6)) {
        prop_assert_eq!(planar::weighted_cayley_check(&x).unwrap().outcome, Outcome::Pass);
    }

    #[test]
    fn mckay_zero_weights_give_zero(m in 3usize..=20, seed in any::<u64>()) {
        let g = planar::generate_random_colored_map(m, seed).unwrap();
        let r = planar::mckay_check_map(&g, &vec![0; m]).unwrap();
        prop_assert_eq!(r.l, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn sweep_records_are_consistent(n in 5usize..=9, trials in 1u64..20, seed in any::<u64>()) {
        let cfg = SweepConfig {
            n,
            p: PGrid::Explicit(vec![0.2, 0.5, 0.9]),
            trials,
            seed,
            budget: SearchBudget::default(),
        };
        let records = run_sweep(&cfg).unwrap();
        prop_assert_eq!(records.len(), 3);
        for r in &records {
            prop_assert!(r.successes + r.timeouts <= r.trials);
            prop_assert!(r.ci_low <= r.phat && r.phat <= r.ci_high);
        }
        prop_assert_eq!(run_sweep(&cfg).unwrap(), records);
    }
}

#[test]
fn triangle_specialisation_matches_general_formula() {
    for k in 0..=100 {
        assert_eq!(
            counts::triangle_triangulation_count(k),
            counts::polygon_triangulation_count(k, 3).unwrap()
        );
    }
}

#[test]
fn known_spheres_found_and_surfaces_rejected() {
    for c in [known::tetrahedron(), known::octahedron(), known::icosahedron()] {
        assert!(find_spanning_sphere(&c, SearchBudget::default()).found());
    }
    for c in [
        known::csaszar_torus(),
        known::projective_plane(),
        known::pinched_spheres(),
    ] {
        let r = find_spanning_sphere(&c, SearchBudget::default());
        assert!(!r.found() && !r.is_timeout());
    }
}
