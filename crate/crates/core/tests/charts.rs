//! Chart construction and lift/projection behavior across all scenarios.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, LN_2, PI, TAU};
use vortex_core::charts::{build_chart, PolyhedralGroup, ReducedPoint, Scenario};
use vortex_core::dynamics;
use vortex_core::symmetry::fixture_residual;
use vortex_core::{Configuration, Error};

fn all_scenarios() -> Vec<Scenario> {
    vec![
        Scenario::SphereTwoRings {
            n: 3,
            ring_vorticity: 2.0,
            polar_vorticities: vec![],
            mu: 1.0,
        },
        Scenario::SphereTwoRings {
            n: 3,
            ring_vorticity: 2.0,
            polar_vorticities: vec![0.7, -0.4],
            mu: 0.8,
        },
        Scenario::SpherePairs { mu: 0.8 },
        Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 1.0, mu: 4.0 },
        Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 0.0, mu: 0.0 },
        Scenario::SphereFourRingsPoles { n: 3, pole_vorticity: 1.0, mu: 2.5 },
        Scenario::SphereThreePairs { mu: 1.5 },
        Scenario::SphereFourPairsZero,
        Scenario::PlaneTwoRingsCenter { n: 3, ring_vorticity: 1.0, center_vorticity: 0.5, mu: 1.0 },
        Scenario::PlaneTwoRingsCenter {
            n: 3,
            ring_vorticity: -5.0,
            center_vorticity: 0.0,
            mu: 1.0,
        },
        Scenario::DancingRing { n: 2 },
        Scenario::DancingRing { n: 4 },
        Scenario::StaggeredDoubleRings { n: 3 },
        Scenario::AlignedDoubleRings { n: 3 },
        Scenario::DihedralRings { n: 3, with_poles: true },
        Scenario::PolyhedralOrbit { group: PolyhedralGroup::T },
        Scenario::PolyhedralOrbit { group: PolyhedralGroup::Th },
        Scenario::PolyhedralOrbit { group: PolyhedralGroup::Td },
        Scenario::PolyhedralOrbit { group: PolyhedralGroup::O },
    ]
}

fn random_feasible(
    chart: &vortex_core::charts::Chart,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Vec<ReducedPoint> {
    let axes = chart.axes();
    let mut pts = Vec::new();
    let mut attempts = 0;
    while pts.len() < count && attempts < 4000 {
        attempts += 1;
        let u = rng.gen_range(axes.u_range.0..axes.u_range.1);
        let v = rng.gen_range(axes.v_range.0..axes.v_range.1);
        let p = ReducedPoint::new(u, v);
        // Stay clear of collision loci so projections are well-conditioned.
        if let Ok(cfg) = chart.lift(p) {
            if cfg.min_pair_distance() > 5e-2 {
                pts.push(p);
            }
        }
    }
    assert!(pts.len() == count, "only {} feasible samples found", pts.len());
    pts
}

#[test]
fn two_ring_chart_feasible_everywhere() {
    // N = 3, ring vorticity 2, mu = 1: the second-ring cosine stays within
    // [-1/3, 2/3] for every colatitude, so the whole band is feasible.
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let (lo, hi) = chart.axes().u_range;
    assert!(lo < 1e-12 && hi > PI - 1e-12, "expected the full colatitude range, got ({lo}, {hi})");
}

#[test]
fn opposite_pairs_feasibility_window() {
    // mu = 0.8: cos theta_2 = 0.4 - cos theta_1 within [-1, 1] iff
    // cos theta_1 >= -0.6.
    let chart = build_chart(Scenario::SpherePairs { mu: 0.8 }).unwrap();
    let (lo, hi) = chart.axes().u_range;
    assert!(lo < 1e-12);
    assert!((hi - (-0.6_f64).acos()).abs() < 1e-12);
}

#[test]
fn plane_negative_ring_unbounded_inner_radius() {
    let chart = build_chart(Scenario::PlaneTwoRingsCenter {
        n: 3,
        ring_vorticity: -5.0,
        center_vorticity: 0.0,
        mu: 1.0,
    })
    .unwrap();
    let lo = chart.axes().u_range.0;
    assert!((lo - (2.0_f64 / 3.0).sqrt()).abs() < 1e-12);
    // Radii below the floor are infeasible, above are feasible.
    assert!(!chart.feasible(ReducedPoint::new(lo - 1e-3, 1.0)));
    assert!(chart.feasible(ReducedPoint::new(lo + 0.3, 1.0)));
}

#[test]
fn empty_domains_are_rejected_by_name() {
    match build_chart(Scenario::SpherePairs { mu: 5.0 }) {
        Err(Error::EmptyDomain(msg)) => assert!(msg.contains("cos theta_2"), "{msg}"),
        other => panic!("expected empty domain, got {other:?}"),
    }
    match build_chart(Scenario::PlaneTwoRingsCenter {
        n: 3,
        ring_vorticity: 1.0,
        center_vorticity: 0.0,
        mu: -1.0,
    }) {
        Err(Error::EmptyDomain(msg)) => assert!(msg.contains("mu > 0"), "{msg}"),
        other => panic!("expected empty domain, got {other:?}"),
    }
}

#[test]
fn equatorial_lift_at_zero_momentum() {
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 0.0,
    })
    .unwrap();
    let cfg = chart.lift(ReducedPoint::new(FRAC_PI_2, 1.0)).unwrap();
    // Both rings equatorial.
    for i in 0..6 {
        let (colat, _) = cfg.angles(i).unwrap();
        assert!((colat - FRAC_PI_2).abs() < 1e-12);
    }
}

#[test]
fn ring_merge_at_doubled_pole_vorticity() {
    // mu = 2 lambda makes the two rings coincide in latitude: a semi-regular
    // 2N-gon.
    let chart =
        build_chart(Scenario::SphereTwoRingsPoles { n: 4, pole_vorticity: 1.5, mu: 3.0 }).unwrap();
    let cfg = chart.lift(ReducedPoint::new(1.1, 0.3)).unwrap();
    for j in 0..4 {
        let (c_plus, _) = cfg.angles(j).unwrap();
        let (c_minus, _) = cfg.angles(4 + j).unwrap();
        assert!((c_plus - 1.1).abs() < 1e-12);
        assert!((c_minus - 1.1).abs() < 1e-12);
    }
}

#[test]
fn three_pairs_small_momentum_nears_great_circle_triangle() {
    let chart = build_chart(Scenario::SphereThreePairs { mu: 1e-8 }).unwrap();
    let cfg = chart.lift(ReducedPoint::new(1.2, 1.9)).unwrap();
    let pts = cfg.sphere_points().unwrap();
    // x1 + x2 + x3 = mu/2 -> all pairwise dot products approach -1/2.
    for i in 0..3 {
        for j in (i + 1)..3 {
            assert!((pts[i].dot(&pts[j]) + 0.5).abs() < 1e-7);
        }
    }
}

#[test]
fn four_pairs_zero_momentum_and_unit_norms() {
    let chart = build_chart(Scenario::SphereFourPairsZero).unwrap();
    let cfg = chart.lift(ReducedPoint::new(1.3, 2.4)).unwrap();
    let pts = cfg.sphere_points().unwrap();
    for p in pts {
        assert!((p.norm() - 1.0).abs() < 1e-12);
    }
    let j = dynamics::momentum(chart.system(), &cfg).unwrap().as_sphere().unwrap();
    assert!(j.norm() < 1e-12);
    // The second colatitude solves the closure constraint
    // sin(t2) sin(t3) cos(p3) = -(1 + cos t3)(1 + cos t2).
    let (t2, _) = cfg.angles(1).unwrap();
    let lhs = t2.sin() * 1.3_f64.sin() * 2.4_f64.cos();
    let rhs = -(1.0 + 1.3_f64.cos()) * (1.0 + t2.cos());
    assert!((lhs - rhs).abs() < 1e-12);
}

#[test]
fn momentum_is_pinned_on_lifts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for scenario in all_scenarios() {
        let chart = build_chart(scenario.clone()).unwrap();
        for p in random_feasible(&chart, &mut rng, 5) {
            let cfg = chart.lift(p).unwrap();
            let j = dynamics::momentum(chart.system(), &cfg).unwrap();
            let dj = j.distance(&chart.pinned_momentum());
            assert!(dj < 1e-11, "{scenario:?}: momentum off by {dj:.2e}");
        }
    }
}

#[test]
fn lifts_are_fixed_by_the_symmetry_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for scenario in all_scenarios() {
        let chart = build_chart(scenario.clone()).unwrap();
        assert_eq!(chart.elements().len(), chart.group().full.order());
        for p in random_feasible(&chart, &mut rng, 3) {
            let cfg = chart.lift(p).unwrap();
            for e in chart.elements() {
                let r = fixture_residual(e, &cfg).unwrap();
                assert!(r < 1e-11, "{scenario:?}: isotropy residual {r:.2e}");
            }
        }
    }
}

#[test]
fn project_round_trips_lift() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for scenario in all_scenarios() {
        let chart = build_chart(scenario.clone()).unwrap();
        for p in random_feasible(&chart, &mut rng, 5) {
            let cfg = chart.lift(p).unwrap();
            let q = chart.project(&cfg).unwrap_or_else(|e| {
                panic!("{scenario:?}: projection failed at ({}, {}): {e}", p.u, p.v)
            });
            let du = (q.u - p.u).abs();
            let dv = match chart.axes().v_period {
                Some(period) => vortex_core::geom::angle_difference(q.v, p.v, period).abs(),
                None => (q.v - p.v).abs(),
            };
            assert!(du < 1e-10 && dv < 1e-10, "{scenario:?}: roundtrip off by ({du:.2e}, {dv:.2e})");
        }
    }
}

#[test]
fn projection_is_gauge_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    // Quotient scenarios: a global rotation about z must not change the
    // projected point.
    for scenario in [
        Scenario::SphereTwoRings { n: 3, ring_vorticity: 2.0, polar_vorticities: vec![], mu: 1.0 },
        Scenario::SpherePairs { mu: 0.8 },
        Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 1.0, mu: 4.0 },
        Scenario::SphereFourRingsPoles { n: 3, pole_vorticity: 1.0, mu: 6.0 },
        Scenario::SphereThreePairs { mu: 1.5 },
        Scenario::PlaneTwoRingsCenter { n: 3, ring_vorticity: 1.0, center_vorticity: 1.0, mu: 1.0 },
    ] {
        let chart = build_chart(scenario.clone()).unwrap();
        for p in random_feasible(&chart, &mut rng, 3) {
            let cfg = chart.lift(p).unwrap();
            let angle = rng.gen_range(0.0..TAU);
            let rotated = rotate_about_z(&cfg, angle);
            let q = chart.project(&rotated).unwrap();
            let du = (q.u - p.u).abs();
            let dv = match chart.axes().v_period {
                Some(period) => vortex_core::geom::angle_difference(q.v, p.v, period).abs(),
                None => (q.v - p.v).abs(),
            };
            assert!(du < 1e-9 && dv < 1e-9, "{scenario:?}: gauge moved point by ({du:.2e}, {dv:.2e})");
        }
    }
}

fn rotate_about_z(cfg: &Configuration, angle: f64) -> Configuration {
    match cfg {
        Configuration::Sphere(pts) => {
            let r = vortex_core::geom::rot_z(angle);
            Configuration::Sphere(pts.iter().map(|x| r * x).collect())
        }
        Configuration::Plane(pts) => Configuration::Plane(
            pts.iter()
                .map(|p| {
                    vortex_core::PlanePoint::new(
                        p.rho,
                        vortex_core::geom::wrap_angle(p.phi + angle),
                    )
                })
                .collect(),
        ),
    }
}

#[test]
fn perturbed_configuration_is_rejected() {
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let p = ReducedPoint::new(1.2, 2.0);
    let cfg = chart.lift(p).unwrap();
    let mut pts = cfg.sphere_points().unwrap().to_vec();
    pts[2] = (pts[2] + nalgebra::Vector3::new(1e-3, 0.0, 0.0)).normalize();
    let perturbed = Configuration::Sphere(pts);
    match chart.project(&perturbed) {
        Err(Error::OutsideFixedSpace { residual, .. }) => {
            assert!(residual > 1e-4, "residual suspiciously small: {residual:.2e}")
        }
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn reduced_hamiltonian_matches_lift_energy() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for scenario in all_scenarios().into_iter().take(9) {
        let chart = build_chart(scenario).unwrap();
        for p in random_feasible(&chart, &mut rng, 4) {
            let direct = chart.reduced_hamiltonian(p).unwrap();
            let via_lift =
                dynamics::hamiltonian(chart.system(), &chart.lift(p).unwrap()).unwrap();
            assert!((direct - via_lift).abs() < 1e-12);
        }
    }
}

#[test]
fn pole_vorticity_shifts_energy_by_constant() {
    // With mu = 2 lambda the minus-ring latitude equals the plus-ring one
    // and the reduced Hamiltonian differs from the pole-free mu = 0 chart by
    // exactly -lambda^2 ln 2.
    let lambda = 1.0;
    let with_poles =
        build_chart(Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: lambda, mu: 2.0 * lambda })
            .unwrap();
    let without =
        build_chart(Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 0.0, mu: 0.0 }).unwrap();
    for &(u, v) in &[(0.7, 0.5), (1.3, 2.0), (2.0, 4.0), (1.57, 1.0)] {
        let p = ReducedPoint::new(u, v);
        let h1 = with_poles.reduced_hamiltonian(p).unwrap();
        let h0 = without.reduced_hamiltonian(p).unwrap();
        assert!(
            (h1 - h0 + lambda * lambda * LN_2).abs() < 1e-11,
            "shift off at ({u}, {v}): {}",
            h1 - h0
        );
    }
}

#[test]
fn energy_diverges_at_collision_boundary() {
    // Two like-signed rings colliding: H -> -inf along a ray toward the
    // collision locus of the two-ring chart.
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    // Rings collide where both latitudes agree (cos = 1/9) at zero offset.
    let theta_star = (1.0_f64 / 9.0).acos();
    let h = chart.reduced_hamiltonian(ReducedPoint::new(theta_star, 1e-6)).unwrap();
    assert!(h < -50.0, "expected a deep well, got {h}");
}

#[test]
fn symmetric_point_has_vanishing_gradient() {
    let n = 3;
    let chart = build_chart(Scenario::SphereTwoRings {
        n,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 0.0,
    })
    .unwrap();
    let p = ReducedPoint::new(FRAC_PI_2, PI / n as f64);
    let g = chart.reduced_gradient(p).unwrap();
    assert!(g[0].abs() < 1e-8 && g[1].abs() < 1e-8, "gradient {g:?}");
}

#[test]
fn gradient_agrees_with_wider_stencil() {
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let p = ReducedPoint::new(1.1, 1.7);
    let g1 = chart.reduced_gradient(p).unwrap();
    // Five-point stencil at a 4x larger step.
    let hu = 4e-6 * chart.axes().u_width();
    let hv = 4e-6 * chart.axes().v_width();
    let f = |u: f64, v: f64| chart.reduced_hamiltonian(ReducedPoint::new(u, v)).unwrap();
    let g5u = (-f(p.u + 2.0 * hu, p.v) + 8.0 * f(p.u + hu, p.v) - 8.0 * f(p.u - hu, p.v)
        + f(p.u - 2.0 * hu, p.v))
        / (12.0 * hu);
    let g5v = (-f(p.u, p.v + 2.0 * hv) + 8.0 * f(p.u, p.v + hv) - 8.0 * f(p.u, p.v - hv)
        + f(p.u, p.v - 2.0 * hv))
        / (12.0 * hv);
    assert!((g1[0] - g5u).abs() < 1e-5 * (1.0 + g5u.abs()));
    assert!((g1[1] - g5v).abs() < 1e-5 * (1.0 + g5v.abs()));
}

#[test]
fn gradient_errors_near_boundary() {
    let chart = build_chart(Scenario::SpherePairs { mu: 0.8 }).unwrap();
    let hi = chart.axes().u_range.1;
    match chart.reduced_gradient(ReducedPoint::new(hi - 1e-12, 1.0)) {
        Err(Error::Infeasible { .. }) => {}
        other => panic!("expected boundary error, got {other:?}"),
    }
}

#[test]
fn staggered_rings_match_indexwise_formulas() {
    let n = 4usize;
    let chart = build_chart(Scenario::StaggeredDoubleRings { n: n as u32 }).unwrap();
    let (t0, p0) = (1.05, 0.31);
    let cfg = chart.lift(ReducedPoint::new(t0, p0)).unwrap();
    let nf = n as f64;
    for j in 1..=n {
        let (c_up_plus, l_up_plus) = cfg.angles(j - 1).unwrap();
        assert!((c_up_plus - t0).abs() < 1e-12);
        assert!(angle_eq(l_up_plus, TAU * j as f64 / nf - p0));
        let (c_lo_plus, l_lo_plus) = cfg.angles(n + j - 1).unwrap();
        assert!((c_lo_plus - (PI - t0)).abs() < 1e-12);
        assert!(angle_eq(l_lo_plus, TAU * j as f64 / nf + PI / nf + p0));
        let (c_up_minus, l_up_minus) = cfg.angles(2 * n + j - 1).unwrap();
        assert!((c_up_minus - t0).abs() < 1e-12);
        assert!(angle_eq(l_up_minus, TAU * j as f64 / nf + p0));
        let (c_lo_minus, l_lo_minus) = cfg.angles(3 * n + j - 1).unwrap();
        assert!((c_lo_minus - (PI - t0)).abs() < 1e-12);
        assert!(angle_eq(l_lo_minus, TAU * j as f64 / nf + PI / nf - p0));
    }
}

#[test]
fn aligned_rings_match_indexwise_formulas() {
    let n = 5usize;
    let chart = build_chart(Scenario::AlignedDoubleRings { n: n as u32 }).unwrap();
    let (t0, p0) = (0.8, 0.21);
    let cfg = chart.lift(ReducedPoint::new(t0, p0)).unwrap();
    let nf = n as f64;
    for j in 1..=n {
        let (_, l1) = cfg.angles(j - 1).unwrap();
        assert!(angle_eq(l1, TAU * j as f64 / nf + p0));
        let (c2, l2) = cfg.angles(n + j - 1).unwrap();
        assert!((c2 - (PI - t0)).abs() < 1e-12);
        assert!(angle_eq(l2, TAU * j as f64 / nf + PI / nf - p0));
        let (_, l3) = cfg.angles(2 * n + j - 1).unwrap();
        assert!(angle_eq(l3, TAU * j as f64 / nf + PI / nf - p0));
        let (c4, l4) = cfg.angles(3 * n + j - 1).unwrap();
        assert!((c4 - (PI - t0)).abs() < 1e-12);
        assert!(angle_eq(l4, TAU * j as f64 / nf + p0));
    }
}

fn angle_eq(a: f64, b: f64) -> bool {
    vortex_core::geom::angle_difference(a, b, TAU).abs() < 1e-12
}

#[test]
fn dancing_ring_alternates_signs_on_one_latitude() {
    let n = 4usize;
    let chart = build_chart(Scenario::DancingRing { n: n as u32 }).unwrap();
    let cfg = chart.lift(ReducedPoint::new(1.2, 0.2)).unwrap();
    for i in 0..2 * n {
        let (colat, _) = cfg.angles(i).unwrap();
        assert!((colat - 1.2).abs() < 1e-12);
    }
    // Longitudes interleave +/-: sorted by longitude the signs alternate.
    let mut lons: Vec<(f64, f64)> = (0..2 * n)
        .map(|i| {
            let (_, lon) = cfg.angles(i).unwrap();
            (lon, chart.system().vorticity(i))
        })
        .collect();
    lons.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    for w in lons.windows(2) {
        assert!(w[0].1 * w[1].1 < 0.0, "signs do not alternate");
    }
}
