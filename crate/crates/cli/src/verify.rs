//! Named verification suites: equilibrium configurations, conservation of H
//! and J along random trajectories, flow invariance of fixed spaces, and
//! relative-periodicity checks. Each check prints one PASS/FAIL line.

use crate::config::VerifyConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use vortex_core::charts::{build_chart, PolyhedralGroup, ReducedPoint, Scenario};
use vortex_core::dynamics;
use vortex_core::geom::unit_vector;
use vortex_core::symmetry::orbit::orbit_of;
use vortex_core::symmetry::point_group::seeds;
use vortex_core::symmetry::{PointGroup, PolyhedralFamily};
use vortex_core::trajectory::{
    integrate, invariant_drift, verify_fixed_space_invariance, verify_relative_periodicity,
    IntegratorOptions, RecurrenceOptions,
};
use vortex_core::{Configuration, PlanePoint, Surface, VortexSystem};

pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn run_suite(config: &VerifyConfig, seed_override: Option<u64>) -> Vec<CheckResult> {
    let mut results = Vec::new();
    let seed = seed_override.unwrap_or(config.seed);
    match config.suite.as_str() {
        "equilibria" => equilibria(&mut results),
        "conservation" => conservation(&mut results, config, seed),
        "fixed-spaces" => fixed_spaces(&mut results, config),
        "recurrence" => recurrence(&mut results),
        _ => {
            equilibria(&mut results);
            conservation(&mut results, config, seed);
            fixed_spaces(&mut results, config);
            recurrence(&mut results);
        }
    }
    results
}

fn push(results: &mut Vec<CheckResult>, name: &str, passed: bool, detail: String) {
    results.push(CheckResult { name: name.to_string(), passed, detail });
}

/// Configurations that must be exact equilibria of the full vector field.
fn equilibria(results: &mut Vec<CheckResult>) {
    let cases: Vec<(&str, VortexSystem, Configuration)> = vec![
        (
            "antipodal opposite pair",
            VortexSystem::sphere(vec![1.0, -1.0]).unwrap(),
            Configuration::sphere(vec![nalgebra::Vector3::z(), -nalgebra::Vector3::z()]),
        ),
        ("equatorial ring with poles", {
            VortexSystem::identical(Surface::Sphere, 5).unwrap()
        }, {
            let mut pts: Vec<_> =
                (0..3).map(|k| unit_vector(FRAC_PI_2, TAU * k as f64 / 3.0)).collect();
            pts.push(nalgebra::Vector3::z());
            pts.push(-nalgebra::Vector3::z());
            Configuration::sphere(pts)
        }),
        ("octahedron vertices", VortexSystem::identical(Surface::Sphere, 6).unwrap(), {
            Configuration::sphere(orbit_of(
                &PointGroup::O.elements(),
                &seeds::vertex(PolyhedralFamily::Octahedral, false),
            ))
        }),
        ("icosahedron vertices", VortexSystem::identical(Surface::Sphere, 12).unwrap(), {
            Configuration::sphere(orbit_of(
                &PointGroup::I.elements(),
                &seeds::vertex(PolyhedralFamily::Icosahedral, false),
            ))
        }),
        ("alternating cube (dual tetrahedra)", {
            VortexSystem::sphere(vec![1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0]).unwrap()
        }, {
            let t = PointGroup::T.elements();
            let mut pts = orbit_of(&t, &seeds::vertex(PolyhedralFamily::Tetrahedral, false));
            pts.extend(orbit_of(&t, &seeds::vertex(PolyhedralFamily::Tetrahedral, true)));
            Configuration::sphere(pts)
        }),
    ];
    for (name, system, config) in cases {
        match dynamics::vector_field(&system, &config) {
            Ok(vel) => {
                let speed = dynamics::max_speed(&vel);
                push(
                    results,
                    &format!("equilibrium: {name}"),
                    speed < 1e-10,
                    format!("max field norm {speed:.3e} (bound 1e-10)"),
                );
            }
            Err(e) => push(results, &format!("equilibrium: {name}"), false, e.to_string()),
        }
    }
}

pub fn random_sphere_config(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    loop {
        let pts: Vec<_> = (0..n)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let phi: f64 = rng.gen_range(0.0..TAU);
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

pub fn random_plane_config(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    loop {
        let pts: Vec<_> = (0..n)
            .map(|_| PlanePoint::from_cartesian(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)))
            .collect();
        let c = Configuration::plane(pts);
        if c.min_pair_distance() > min_sep {
            return c;
        }
    }
}

fn conservation(results: &mut Vec<CheckResult>, config: &VerifyConfig, seed: u64) {
    let opts = IntegratorOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..5 {
        let sys = VortexSystem::identical(Surface::Sphere, 6).unwrap();
        let x0 = random_sphere_config(&mut rng, 6, 0.8);
        run_conservation_check(results, &format!("conservation sphere {trial}"), &sys, &x0, config, &opts);
    }
    for trial in 0..5 {
        let sys = VortexSystem::identical(Surface::Plane, 5).unwrap();
        let x0 = random_plane_config(&mut rng, 5, 0.6);
        run_conservation_check(results, &format!("conservation plane {trial}"), &sys, &x0, config, &opts);
    }
}

fn run_conservation_check(
    results: &mut Vec<CheckResult>,
    name: &str,
    sys: &VortexSystem,
    x0: &Configuration,
    config: &VerifyConfig,
    opts: &IntegratorOptions,
) {
    match integrate(sys, x0, config.t_end, opts) {
        Ok(traj) => {
            let (dh, dj) = invariant_drift(&traj);
            let rel = dh / traj.energies[0].abs().max(1.0);
            push(
                results,
                name,
                rel < config.tolerance && dj < config.tolerance,
                format!(
                    "relative |dH| = {rel:.3e}, |dJ| = {dj:.3e} over t = {} (bound {:.1e})",
                    config.t_end, config.tolerance
                ),
            );
        }
        Err(e) => push(results, name, false, e.to_string()),
    }
}

fn fixed_spaces(results: &mut Vec<CheckResult>, config: &VerifyConfig) {
    let opts = IntegratorOptions::default();
    let t_end = config.t_end.min(20.0);
    for (name, scenario, point) in [
        (
            "tetrahedral regular orbit",
            Scenario::PolyhedralOrbit { group: PolyhedralGroup::T },
            ReducedPoint::new(0.9, 0.7),
        ),
        (
            "staggered double rings",
            Scenario::StaggeredDoubleRings { n: 2 },
            ReducedPoint::new(1.35, 0.55),
        ),
        ("three antipodal pairs", Scenario::SphereThreePairs { mu: 1.5 }, ReducedPoint::new(0.9, 1.1)),
    ] {
        let check_name = format!("fixed space invariance: {name}");
        let chart = match build_chart(scenario) {
            Ok(c) => c,
            Err(e) => {
                push(results, &check_name, false, e.to_string());
                continue;
            }
        };
        match chart.lift(point).and_then(|x0| {
            verify_fixed_space_invariance(chart.system(), chart.elements(), &x0, t_end, &opts)
        }) {
            Ok(dev) => push(
                results,
                &check_name,
                dev < config.tolerance,
                format!("max residual {dev:.3e} over t = {t_end} (bound {:.1e})", config.tolerance),
            ),
            Err(e) => push(results, &check_name, false, e.to_string()),
        }
    }
}

fn recurrence(results: &mut Vec<CheckResult>) {
    let opts = IntegratorOptions::default();
    // True periodic orbit of the alternating ring.
    {
        let chart = build_chart(Scenario::DancingRing { n: 2 }).unwrap();
        let p0 = ReducedPoint::new(1.35, PI / 4.0 + 0.25);
        let name = "recurrence: alternating ring periodic orbit";
        match chart
            .lift(p0)
            .and_then(|x0| integrate(chart.system(), &x0, 30.0, &opts))
            .and_then(|traj| verify_relative_periodicity(&chart, &traj, &RecurrenceOptions::default()))
        {
            Ok(rep) => push(
                results,
                name,
                rep.found && rep.residual < 1e-6 && rep.angle.abs() < 1e-6,
                format!(
                    "T = {:.6}, rotation angle = {:.3e}, residual = {:.3e}",
                    rep.period, rep.angle, rep.residual
                ),
            ),
            Err(e) => push(results, name, false, e.to_string()),
        }
    }
    // Relative periodic orbit of the two-ring chart.
    {
        let chart = build_chart(Scenario::SphereTwoRings {
            n: 3,
            ring_vorticity: 2.0,
            polar_vorticities: vec![],
            mu: 1.0,
        })
        .unwrap();
        let p0 = ReducedPoint::new(0.7886, PI);
        let name = "recurrence: two-ring relative periodic orbit";
        match chart
            .lift(p0)
            .and_then(|x0| integrate(chart.system(), &x0, 30.0, &opts))
            .and_then(|traj| verify_relative_periodicity(&chart, &traj, &RecurrenceOptions::default()))
        {
            Ok(rep) => push(
                results,
                name,
                rep.found && rep.residual < 1e-6 && rep.angle.abs() > 1e-3,
                format!(
                    "T = {:.6}, rotation angle = {:.6}, residual = {:.3e}",
                    rep.period, rep.angle, rep.residual
                ),
            ),
            Err(e) => push(results, name, false, e.to_string()),
        }
    }
}
