//! Vortex systems and configurations.
//!
//! A [`VortexSystem`] is a surface tag plus the vorticity ledger
//! λ₁, …, λ_N. Sphere configurations store unit 3-vectors (chart-free, no
//! pole singularities); plane configurations store (ρ, φ) polar pairs with
//! Cartesian accessors. All values are immutable after construction and every
//! operation on them is a pure function.

use crate::error::{Error, Result};
use crate::geom;
use nalgebra::Vector3;

/// Default chordal distance below which two vortices count as collided.
pub const DEFAULT_COLLISION_THRESHOLD: f64 = 1e-9;

/// Tolerance for the unit-norm invariant of sphere configurations.
pub const UNIT_NORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    Sphere,
    Plane,
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Surface::Sphere => write!(f, "sphere"),
            Surface::Plane => write!(f, "plane"),
        }
    }
}

/// Surface tag, vortex count and vorticity ledger.
#[derive(Debug, Clone, PartialEq)]
pub struct VortexSystem {
    surface: Surface,
    vorticities: Vec<f64>,
    collision_threshold: f64,
}

impl VortexSystem {
    pub fn new(surface: Surface, vorticities: Vec<f64>) -> Result<Self> {
        Self::with_collision_threshold(surface, vorticities, DEFAULT_COLLISION_THRESHOLD)
    }

    pub fn with_collision_threshold(
        surface: Surface,
        vorticities: Vec<f64>,
        collision_threshold: f64,
    ) -> Result<Self> {
        if vorticities.is_empty() {
            return Err(Error::InvalidSystem("vorticity ledger is empty".into()));
        }
        if let Some(i) = vorticities.iter().position(|l| *l == 0.0 || !l.is_finite()) {
            return Err(Error::InvalidSystem(format!(
                "vorticity {i} must be finite and nonzero"
            )));
        }
        if !(collision_threshold > 0.0) {
            return Err(Error::InvalidSystem("collision threshold must be positive".into()));
        }
        Ok(Self { surface, vorticities, collision_threshold })
    }

    pub fn sphere(vorticities: Vec<f64>) -> Result<Self> {
        Self::new(Surface::Sphere, vorticities)
    }

    pub fn plane(vorticities: Vec<f64>) -> Result<Self> {
        Self::new(Surface::Plane, vorticities)
    }

    /// N identical unit vortices.
    pub fn identical(surface: Surface, count: usize) -> Result<Self> {
        Self::new(surface, vec![1.0; count])
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn count(&self) -> usize {
        self.vorticities.len()
    }

    pub fn vorticities(&self) -> &[f64] {
        &self.vorticities
    }

    pub fn vorticity(&self, i: usize) -> f64 {
        self.vorticities[i]
    }

    pub fn collision_threshold(&self) -> f64 {
        self.collision_threshold
    }
}

/// Planar point stored as a (ρ ≥ 0, φ) polar pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub rho: f64,
    pub phi: f64,
}

impl PlanePoint {
    pub fn new(rho: f64, phi: f64) -> Self {
        Self { rho, phi }
    }

    pub fn from_cartesian(x: f64, y: f64) -> Self {
        let rho = x.hypot(y);
        let phi = if rho == 0.0 { 0.0 } else { geom::wrap_angle(y.atan2(x)) };
        Self { rho, phi }
    }

    pub fn cartesian(&self) -> (f64, f64) {
        (self.rho * self.phi.cos(), self.rho * self.phi.sin())
    }
}

/// Positions of all vortices of a system.
#[derive(Debug, Clone, PartialEq)]
pub enum Configuration {
    /// Unit 3-vectors on S².
    Sphere(Vec<Vector3<f64>>),
    /// Polar pairs in the plane.
    Plane(Vec<PlanePoint>),
}

impl Configuration {
    pub fn sphere(points: Vec<Vector3<f64>>) -> Self {
        Configuration::Sphere(points)
    }

    /// Sphere configuration from (colatitude, longitude) pairs.
    pub fn sphere_from_angles(angles: &[(f64, f64)]) -> Self {
        Configuration::Sphere(angles.iter().map(|&(t, p)| geom::unit_vector(t, p)).collect())
    }

    pub fn plane(points: Vec<PlanePoint>) -> Self {
        Configuration::Plane(points)
    }

    pub fn len(&self) -> usize {
        match self {
            Configuration::Sphere(p) => p.len(),
            Configuration::Plane(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn surface(&self) -> Surface {
        match self {
            Configuration::Sphere(_) => Surface::Sphere,
            Configuration::Plane(_) => Surface::Plane,
        }
    }

    pub fn sphere_points(&self) -> Result<&[Vector3<f64>]> {
        match self {
            Configuration::Sphere(p) => Ok(p),
            Configuration::Plane(_) => {
                Err(Error::InvalidConfiguration("expected a sphere configuration".into()))
            }
        }
    }

    pub fn plane_points(&self) -> Result<&[PlanePoint]> {
        match self {
            Configuration::Plane(p) => Ok(p),
            Configuration::Sphere(_) => {
                Err(Error::InvalidConfiguration("expected a plane configuration".into()))
            }
        }
    }

    /// (colatitude, longitude) of vortex `i` on the sphere.
    pub fn angles(&self, i: usize) -> Result<(f64, f64)> {
        let p = self.sphere_points()?;
        Ok((geom::colatitude(&p[i]), geom::longitude(&p[i])))
    }

    /// Euclidean (sphere: chordal) distance between vortices `i` and `j`.
    pub fn pair_distance(&self, i: usize, j: usize) -> f64 {
        match self {
            Configuration::Sphere(p) => (p[i] - p[j]).norm(),
            Configuration::Plane(p) => {
                let (xi, yi) = p[i].cartesian();
                let (xj, yj) = p[j].cartesian();
                (xi - xj).hypot(yi - yj)
            }
        }
    }

    /// Minimum pairwise distance; +inf for fewer than two vortices.
    pub fn min_pair_distance(&self) -> f64 {
        let n = self.len();
        let mut min = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = self.pair_distance(i, j);
                if d < min {
                    min = d;
                }
            }
        }
        min
    }

    /// Validate the configuration against a system: matching surface and
    /// count, unit norms on the sphere, pairwise separation above the
    /// collision threshold.
    pub fn validate(&self, system: &VortexSystem) -> Result<()> {
        if self.surface() != system.surface() {
            return Err(Error::InvalidConfiguration(format!(
                "configuration surface {} does not match system surface {}",
                self.surface(),
                system.surface()
            )));
        }
        if self.len() != system.count() {
            return Err(Error::InvalidConfiguration(format!(
                "configuration holds {} vortices, system expects {}",
                self.len(),
                system.count()
            )));
        }
        if let Configuration::Sphere(points) = self {
            for (i, x) in points.iter().enumerate() {
                if (x.norm() - 1.0).abs() > UNIT_NORM_TOLERANCE {
                    return Err(Error::InvalidConfiguration(format!(
                        "vortex {i} is off the unit sphere by {:.3e}",
                        (x.norm() - 1.0).abs()
                    )));
                }
            }
        }
        if self.len() >= 2 {
            let min = self.min_pair_distance();
            if min < system.collision_threshold() {
                return Err(Error::Collision {
                    min_distance: min,
                    threshold: system.collision_threshold(),
                });
            }
        }
        Ok(())
    }
}

/// Value of the momentum map: a 3-vector Σ λ_j x_j on the sphere, the scalar
/// ½ Σ λ_j ρ_j² in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MomentumValue {
    Sphere(Vector3<f64>),
    Plane(f64),
}

impl MomentumValue {
    pub fn as_sphere(&self) -> Result<Vector3<f64>> {
        match self {
            MomentumValue::Sphere(v) => Ok(*v),
            MomentumValue::Plane(_) => {
                Err(Error::InvalidConfiguration("expected a sphere momentum".into()))
            }
        }
    }

    pub fn as_plane(&self) -> Result<f64> {
        match self {
            MomentumValue::Plane(v) => Ok(*v),
            MomentumValue::Sphere(_) => {
                Err(Error::InvalidConfiguration("expected a plane momentum".into()))
            }
        }
    }

    /// Norm of the difference, comparing like with like.
    pub fn distance(&self, other: &MomentumValue) -> f64 {
        match (self, other) {
            (MomentumValue::Sphere(a), MomentumValue::Sphere(b)) => (a - b).norm(),
            (MomentumValue::Plane(a), MomentumValue::Plane(b)) => (a - b).abs(),
            _ => f64::INFINITY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_vorticity() {
        assert!(VortexSystem::sphere(vec![1.0, 0.0]).is_err());
        assert!(VortexSystem::sphere(vec![]).is_err());
        assert!(VortexSystem::sphere(vec![1.0, -1.0]).is_ok());
    }

    #[test]
    fn validate_catches_collisions() {
        let sys = VortexSystem::identical(Surface::Sphere, 2).unwrap();
        let cfg = Configuration::sphere(vec![Vector3::z(), Vector3::z()]);
        match cfg.validate(&sys) {
            Err(Error::Collision { .. }) => {}
            other => panic!("expected collision, got {other:?}"),
        }
    }

    #[test]
    fn validate_catches_off_sphere() {
        let sys = VortexSystem::identical(Surface::Sphere, 1).unwrap();
        let cfg = Configuration::sphere(vec![Vector3::new(0.0, 0.0, 1.1)]);
        assert!(cfg.validate(&sys).is_err());
    }

    #[test]
    fn plane_point_round_trip() {
        let p = PlanePoint::new(2.0, 1.3);
        let (x, y) = p.cartesian();
        let q = PlanePoint::from_cartesian(x, y);
        assert!((p.rho - q.rho).abs() < 1e-14);
        assert!((p.phi - q.phi).abs() < 1e-14);
        // Origin has canonical angle zero.
        let o = PlanePoint::from_cartesian(0.0, 0.0);
        assert_eq!(o.phi, 0.0);
    }
}
