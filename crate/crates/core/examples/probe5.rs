use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vortex_core::trajectory::{integrate, invariant_drift, IntegratorOptions};
use vortex_core::{Configuration, PlanePoint, Surface, VortexSystem};

fn random_sphere(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    loop {
        let cand: Vec<_> = (0..n)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let s = (1.0 - z * z).sqrt();
                nalgebra::Vector3::new(s * phi.cos(), s * phi.sin(), z)
            })
            .collect();
        let c = Configuration::sphere(cand);
        if c.min_pair_distance() > min_sep {
            return c;
        }
    }
}

fn random_plane(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    loop {
        let cand: Vec<_> = (0..n)
            .map(|_| {
                PlanePoint::from_cartesian(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))
            })
            .collect();
        let c = Configuration::plane(cand);
        if c.min_pair_distance() > min_sep {
            return c;
        }
    }
}

fn main() {
    let opts = IntegratorOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let mut worst_rel: f64 = 0.0;
    let mut worst_j: f64 = 0.0;
    for trial in 0..5 {
        let sys = VortexSystem::identical(Surface::Sphere, 6).unwrap();
        let x0 = random_sphere(&mut rng, 6, 0.8);
        let traj = integrate(&sys, &x0, 100.0, &opts).unwrap();
        let (dh, dj) = invariant_drift(&traj);
        let rel = dh / traj.energies[0].abs().max(1.0);
        worst_rel = worst_rel.max(rel);
        worst_j = worst_j.max(dj);
        println!("sphere {trial}: rel dH={rel:.2e} dJ={dj:.2e} steps={}", traj.len());
    }
    for trial in 0..5 {
        let sys = VortexSystem::identical(Surface::Plane, 5).unwrap();
        let x0 = random_plane(&mut rng, 5, 0.6);
        let traj = integrate(&sys, &x0, 100.0, &opts).unwrap();
        let (dh, dj) = invariant_drift(&traj);
        let rel = dh / traj.energies[0].abs().max(1.0);
        worst_rel = worst_rel.max(rel);
        worst_j = worst_j.max(dj);
        println!("plane {trial}: rel dH={rel:.2e} dJ={dj:.2e} steps={}", traj.len());
    }
    println!("worst rel dH = {worst_rel:.2e}, worst dJ = {worst_j:.2e}");
}
