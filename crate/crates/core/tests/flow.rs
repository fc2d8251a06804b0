//! Flow-level verification: conservation along trajectories, invariance of
//! fixed spaces, relative-periodicity detection, and consistency between the
//! integrated dynamics and the reduced level sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vortex_core::charts::{build_chart, PolyhedralGroup, ReducedPoint, Scenario};
use vortex_core::portrait::{extract_contours_refined, sample_field, PortraitOptions};
use vortex_core::trajectory::{
    integrate, invariant_drift, verify_fixed_space_invariance, verify_relative_periodicity,
    IntegratorOptions, RecurrenceOptions,
};
use vortex_core::{Configuration, Surface, VortexSystem};

fn random_sphere_config(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    loop {
        let pts: Vec<_> = (0..n)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let s = (1.0 - z * z).sqrt();
                nalgebra::Vector3::new(s * phi.cos(), s * phi.sin(), z)
            })
            .collect();
        let c = Configuration::sphere(pts);
        if c.min_pair_distance() > min_sep {
            return c;
        }
    }
}

#[test]
fn conservation_along_random_trajectories() {
    let opts = IntegratorOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2 {
        let sys = VortexSystem::identical(Surface::Sphere, 6).unwrap();
        let x0 = random_sphere_config(&mut rng, 6, 0.8);
        let traj = integrate(&sys, &x0, 40.0, &opts).unwrap();
        let (dh, dj) = invariant_drift(&traj);
        let rel = dh / traj.energies[0].abs().max(1.0);
        assert!(rel < 1e-8, "relative energy drift {rel:.2e}");
        assert!(dj < 1e-8, "momentum drift {dj:.2e}");
    }
    // Plane.
    let sys = VortexSystem::plane(vec![1.0, 1.0, -1.0, 2.0, 1.0]).unwrap();
    let x0 = Configuration::plane(
        [(0.9, 0.1), (-0.8, 0.7), (0.1, -1.1), (1.3, 1.2), (-1.2, -0.9)]
            .iter()
            .map(|&(x, y)| vortex_core::PlanePoint::from_cartesian(x, y))
            .collect(),
    );
    let traj = integrate(&sys, &x0, 40.0, &opts).unwrap();
    let (dh, dj) = invariant_drift(&traj);
    assert!(dh / traj.energies[0].abs().max(1.0) < 1e-8);
    assert!(dj < 1e-8);
}

#[test]
fn fixed_spaces_are_flow_invariant() {
    let opts = IntegratorOptions::default();
    for (scenario, point) in [
        (Scenario::PolyhedralOrbit { group: PolyhedralGroup::T }, ReducedPoint::new(0.9, 0.7)),
        (Scenario::StaggeredDoubleRings { n: 2 }, ReducedPoint::new(1.35, 0.55)),
        (Scenario::SphereThreePairs { mu: 1.5 }, ReducedPoint::new(0.9, 1.1)),
    ] {
        let chart = build_chart(scenario.clone()).unwrap();
        let x0 = chart.lift(point).unwrap();
        let dev =
            verify_fixed_space_invariance(chart.system(), chart.elements(), &x0, 20.0, &opts)
                .unwrap();
        assert!(dev < 1e-8, "{scenario:?}: deviation {dev:.2e}");
    }
}

#[test]
fn fixed_space_invariance_rejects_asymmetric_start() {
    let opts = IntegratorOptions::default();
    let chart = build_chart(Scenario::DancingRing { n: 2 }).unwrap();
    let x0 = chart.lift(ReducedPoint::new(1.0, 0.5)).unwrap();
    let mut pts = x0.sphere_points().unwrap().to_vec();
    pts[0] = (pts[0] + nalgebra::Vector3::new(1e-4, 0.0, 0.0)).normalize();
    let bad = Configuration::sphere(pts);
    assert!(verify_fixed_space_invariance(chart.system(), chart.elements(), &bad, 1.0, &opts)
        .is_err());
}

#[test]
fn dancing_ring_orbit_is_truly_periodic() {
    let opts = IntegratorOptions::default();
    let chart = build_chart(Scenario::DancingRing { n: 2 }).unwrap();
    let p0 = ReducedPoint::new(1.35, std::f64::consts::PI / 4.0 + 0.25);
    let x0 = chart.lift(p0).unwrap();
    let traj = integrate(chart.system(), &x0, 30.0, &opts).unwrap();
    let rep = verify_relative_periodicity(&chart, &traj, &RecurrenceOptions::default()).unwrap();
    assert!(rep.found, "no recurrence detected");
    assert!(rep.residual < 1e-6, "residual {:.2e}", rep.residual);
    assert!(rep.angle.abs() < 1e-6, "true periodic orbit should need no rotation");
    assert!(rep.period > 1.0);
}

#[test]
fn two_ring_contour_is_a_relative_periodic_orbit() {
    let opts = IntegratorOptions::default();
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    // A point on a closed contour around the staggered center.
    let p0 = ReducedPoint::new(0.6686 + 0.12, std::f64::consts::PI);
    let x0 = chart.lift(p0).unwrap();
    let traj = integrate(chart.system(), &x0, 30.0, &opts).unwrap();
    let rep = verify_relative_periodicity(&chart, &traj, &RecurrenceOptions::default()).unwrap();
    assert!(rep.found);
    assert!(rep.residual < 1e-6, "residual {:.2e}", rep.residual);
    assert!(rep.angle.abs() > 1e-3, "relative period should carry a rotation");
}

#[test]
fn tightening_tolerance_does_not_worsen_the_residual() {
    let chart = build_chart(Scenario::DancingRing { n: 2 }).unwrap();
    let p0 = ReducedPoint::new(1.3, 0.6);
    let x0 = chart.lift(p0).unwrap();
    let loose = IntegratorOptions { rel_tol: 1e-7, abs_tol: 1e-9, ..Default::default() };
    let tight = IntegratorOptions { rel_tol: 1e-9, abs_tol: 1e-11, ..Default::default() };
    let recurrence = RecurrenceOptions::default();
    let traj_loose = integrate(chart.system(), &x0, 30.0, &loose).unwrap();
    let traj_tight = integrate(chart.system(), &x0, 30.0, &tight).unwrap();
    let r_loose = verify_relative_periodicity(&chart, &traj_loose, &recurrence).unwrap();
    let r_tight = verify_relative_periodicity(&chart, &traj_tight, &recurrence).unwrap();
    assert!(r_loose.found && r_tight.found);
    assert!(
        r_tight.residual <= r_loose.residual * 1.5,
        "tight {:.2e} vs loose {:.2e}",
        r_tight.residual,
        r_loose.residual
    );
}

#[test]
fn projected_flow_follows_the_level_set() {
    // Integrate from a lift, project every sample: the reduced curve keeps
    // the reduced Hamiltonian constant and stays within a grid cell of the
    // marching-squares contour at that level.
    let opts = IntegratorOptions::default();
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let p0 = ReducedPoint::new(0.8, 2.6);
    let level = chart.reduced_hamiltonian(p0).unwrap();
    let x0 = chart.lift(p0).unwrap();
    let traj = integrate(chart.system(), &x0, 8.0, &opts).unwrap();

    let mut reduced: Vec<ReducedPoint> = Vec::new();
    for cfg in traj.configurations.iter().step_by(10) {
        let q = chart.project_with_tolerance(cfg, 1e-5).unwrap();
        let h = chart.reduced_hamiltonian(q).unwrap();
        assert!((h - level).abs() < 1e-7, "energy drifted along the reduced curve");
        reduced.push(q);
    }

    let options = PortraitOptions { resolution: (200, 200), ..Default::default() };
    let field = sample_field(&chart, &options).unwrap();
    let contours = extract_contours_refined(&field, level, Some(&chart)).unwrap();
    assert!(!contours.is_empty());
    let cell = field.grid.cell_diagonal();
    let period = field.grid.v_period().unwrap();
    for q in &reduced {
        let mut best = f64::INFINITY;
        for c in &contours {
            for p in &c.points {
                let du = p.u - q.u;
                let dv = vortex_core::geom::angle_difference(p.v, q.v, period);
                best = best.min(du.hypot(dv));
            }
        }
        assert!(best < cell, "projected sample {best:.3e} beyond one cell from the contour");
    }
}
