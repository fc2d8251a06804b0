//! The N-vortex Hamiltonian, its vector field and the momentum map.
//!
//! Sphere (unit vectors x_i, vorticities λ_i):
//!
//! ```text
//! H  = Σ_{i<j} λ_i λ_j ln(‖x_i − x_j‖² / 2)
//! ẋ_i = Σ_{j≠i} λ_j (x_j × x_i) / (1 − x_i·x_j)
//! J  = Σ_j λ_j x_j
//! ```
//!
//! Plane (points z_j = ρ_j e^{iφ_j}):
//!
//! ```text
//! H  = −(1/4π) Σ_{i<j} λ_i λ_j ln |z_i − z_j|²
//! λ_j ẋ_j = ∂H/∂y_j,   λ_j ẏ_j = −∂H/∂x_j
//! J  = ½ Σ_j λ_j ρ_j²
//! ```
//!
//! The planar velocities are the classical Kirchhoff ones,
//! conj(ż_j) = (1/2πi) Σ_{k≠j} λ_k/(z_j − z_k), which is the form consistent
//! with the Hamiltonian above (H and J are conserved along the flow).

use crate::error::{Error, Result};
use crate::system::{Configuration, MomentumValue, VortexSystem};
use nalgebra::Vector3;
use std::f64::consts::PI;

/// Tangent velocities of every vortex: 3-vectors on the sphere (tangent to
/// S² at each point), Cartesian 2-vectors in the plane padded with z = 0.
pub type Velocities = Vec<Vector3<f64>>;

fn check(system: &VortexSystem, config: &Configuration) -> Result<()> {
    config.validate(system)
}

/// Total interaction energy. Errors on collisions instead of returning ±∞.
pub fn hamiltonian(system: &VortexSystem, config: &Configuration) -> Result<f64> {
    check(system, config)?;
    Ok(hamiltonian_unchecked(system, config))
}

/// [`hamiltonian`] without configuration validation, for inner loops that
/// maintain validity themselves.
pub fn hamiltonian_unchecked(system: &VortexSystem, config: &Configuration) -> f64 {
    let lam = system.vorticities();
    let n = config.len();
    let mut h = 0.0;
    match config {
        Configuration::Sphere(points) => {
            for i in 0..n {
                for j in (i + 1)..n {
                    let d2 = (points[i] - points[j]).norm_squared();
                    h += lam[i] * lam[j] * (d2 / 2.0).ln();
                }
            }
        }
        Configuration::Plane(points) => {
            for i in 0..n {
                for j in (i + 1)..n {
                    let (xi, yi) = points[i].cartesian();
                    let (xj, yj) = points[j].cartesian();
                    let d2 = (xi - xj).powi(2) + (yi - yj).powi(2);
                    h += lam[i] * lam[j] * d2.ln();
                }
            }
            h *= -1.0 / (4.0 * PI);
        }
    }
    h
}

/// Hamiltonian vector field at a configuration.
pub fn vector_field(system: &VortexSystem, config: &Configuration) -> Result<Velocities> {
    check(system, config)?;
    Ok(vector_field_unchecked(system, config))
}

/// Same as [`vector_field`] without re-validating the configuration; used in
/// the integrator's inner loop where validity is maintained by construction.
pub fn vector_field_unchecked(system: &VortexSystem, config: &Configuration) -> Velocities {
    let lam = system.vorticities();
    let n = config.len();
    let mut vel = vec![Vector3::zeros(); n];
    match config {
        Configuration::Sphere(points) => {
            for i in 0..n {
                let mut v = Vector3::zeros();
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let denom = 1.0 - points[i].dot(&points[j]);
                    v += lam[j] * points[j].cross(&points[i]) / denom;
                }
                vel[i] = v;
            }
        }
        Configuration::Plane(points) => {
            let xy: Vec<(f64, f64)> = points.iter().map(|p| p.cartesian()).collect();
            for i in 0..n {
                let (mut vx, mut vy) = (0.0, 0.0);
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let dx = xy[i].0 - xy[j].0;
                    let dy = xy[i].1 - xy[j].1;
                    let r2 = dx * dx + dy * dy;
                    vx -= lam[j] * dy / r2;
                    vy += lam[j] * dx / r2;
                }
                vel[i] = Vector3::new(vx / (2.0 * PI), vy / (2.0 * PI), 0.0);
            }
        }
    }
    vel
}

/// Momentum map value.
pub fn momentum(system: &VortexSystem, config: &Configuration) -> Result<MomentumValue> {
    if config.surface() != system.surface() || config.len() != system.count() {
        check(system, config)?;
    }
    let lam = system.vorticities();
    Ok(match config {
        Configuration::Sphere(points) => {
            let mut j = Vector3::zeros();
            for (x, l) in points.iter().zip(lam) {
                j += *l * x;
            }
            MomentumValue::Sphere(j)
        }
        Configuration::Plane(points) => {
            let mut j = 0.0;
            for (p, l) in points.iter().zip(lam) {
                j += 0.5 * l * p.rho * p.rho;
            }
            MomentumValue::Plane(j)
        }
    })
}

/// Minimum pairwise chordal (sphere) or Euclidean (plane) distance.
pub fn min_pair_distance(config: &Configuration) -> Result<f64> {
    if config.len() < 2 {
        return Err(Error::InvalidConfiguration(
            "pair distance requires at least two vortices".into(),
        ));
    }
    Ok(config.min_pair_distance())
}

/// Maximum velocity magnitude, a crude timescale for the integrator.
pub fn max_speed(vel: &Velocities) -> f64 {
    vel.iter().map(|v| v.norm()).fold(0.0, f64::max)
}
