//! Finite symmetry groups acting on vortex configurations.
//!
//! A group element couples an orthogonal transformation A with a permutation
//! σ of the vortex labels: (A, σ)·(x_1, …, x_N) = (A x_{σ(1)}, …, A x_{σ(N)}).
//! The permutation must be compatible with the vorticity ledger, i.e.
//! λ_{σ(i)} = ε·λ_i for a common sign ε ∈ {+1, −1}. The symplectic character
//! χ(A, σ) = ε(σ)·det A decides whether the element preserves the symplectic
//! form; subgroups inside Ker χ leave the vector field equivariant and their
//! fixed-point sets are flow-invariant.

pub mod catalog;
pub mod fixed_space;
pub mod orbit;
pub mod point_group;
pub mod wiring;

pub use catalog::{normalizer_identity_component, NormalizerComponent};
pub use fixed_space::{fixed_space, fixed_space_from_reference, FixedSpace};
pub use orbit::{classify_point_orbit, orbit_of, OrbitLabel};
pub use point_group::{PointGroup, PolyhedralFamily};
pub use wiring::{elements_from_reference, enumerate_elements, OrbitSeed, OrbitSlot, Wiring};

use crate::error::{Error, Result};
use crate::system::{Configuration, PlanePoint};
use nalgebra::Matrix3;

/// Matching tolerance when identifying permutations from geometry.
pub const PERMUTATION_MATCH_TOLERANCE: f64 = 1e-6;

/// An orthogonal transformation coupled with a vorticity-compatible
/// permutation of the vortex labels.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    /// Orthogonal 3×3 matrix (plane systems use its upper-left 2×2 block).
    pub spatial: Matrix3<f64>,
    /// `act(g, x)[i] = spatial · x[permutation[i]]`.
    pub permutation: Vec<usize>,
    /// ε with λ_{σ(i)} = ε·λ_i.
    pub sign: f64,
}

impl GroupElement {
    pub fn identity(count: usize) -> Self {
        Self { spatial: Matrix3::identity(), permutation: (0..count).collect(), sign: 1.0 }
    }

    /// Symplectic character ε(σ)·det A, exactly ±1.
    pub fn chi(&self) -> f64 {
        self.sign * self.spatial.determinant().signum()
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let permutation =
            self.permutation.iter().map(|&i| other.permutation[i]).collect::<Vec<_>>();
        // act(g, act(h, x))_i = A_g A_h x_{σ_h(σ_g(i))}.
        GroupElement {
            spatial: self.spatial * other.spatial,
            permutation,
            sign: self.sign * other.sign,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0usize; self.permutation.len()];
        for (i, &p) in self.permutation.iter().enumerate() {
            inv[p] = i;
        }
        GroupElement { spatial: self.spatial.transpose(), permutation: inv, sign: self.sign }
    }

    pub fn is_identity(&self) -> bool {
        crate::geom::matrix_distance(&self.spatial, &Matrix3::identity())
            < point_group::MATRIX_TOLERANCE
            && self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Apply a group element to a configuration.
pub fn act(element: &GroupElement, config: &Configuration) -> Result<Configuration> {
    if element.permutation.len() != config.len() {
        return Err(Error::InvalidConfiguration(format!(
            "group element permutes {} labels, configuration has {}",
            element.permutation.len(),
            config.len()
        )));
    }
    Ok(match config {
        Configuration::Sphere(points) => Configuration::Sphere(
            element.permutation.iter().map(|&j| element.spatial * points[j]).collect(),
        ),
        Configuration::Plane(points) => {
            let m = &element.spatial;
            Configuration::Plane(
                element
                    .permutation
                    .iter()
                    .map(|&j| {
                        let (x, y) = points[j].cartesian();
                        PlanePoint::from_cartesian(
                            m[(0, 0)] * x + m[(0, 1)] * y,
                            m[(1, 0)] * x + m[(1, 1)] * y,
                        )
                    })
                    .collect(),
            )
        }
    })
}

/// Largest per-vortex displacement ‖act(g, x)_i − x_i‖; zero iff fixed.
pub fn fixture_residual(element: &GroupElement, config: &Configuration) -> Result<f64> {
    let moved = act(element, config)?;
    Ok(configuration_distance(&moved, config))
}

/// Max norm distance between two same-sized configurations.
pub fn configuration_distance(a: &Configuration, b: &Configuration) -> f64 {
    match (a, b) {
        (Configuration::Sphere(p), Configuration::Sphere(q)) => p
            .iter()
            .zip(q.iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max),
        (Configuration::Plane(p), Configuration::Plane(q)) => p
            .iter()
            .zip(q.iter())
            .map(|(x, y)| {
                let (xa, ya) = x.cartesian();
                let (xb, yb) = y.cartesian();
                (xa - xb).hypot(ya - yb)
            })
            .fold(0.0, f64::max),
        _ => f64::INFINITY,
    }
}

/// Recover the coupled permutation for a spatial transformation from a
/// reference configuration it is supposed to fix: σ(i) is the label whose
/// position Aᵀ·x_i occupies. Errors when no consistent vorticity-compatible
/// bijection exists.
pub fn element_from_spatial(
    spatial: &Matrix3<f64>,
    reference: &Configuration,
    vorticities: &[f64],
) -> Result<GroupElement> {
    let n = reference.len();
    if vorticities.len() != n {
        return Err(Error::Wiring(format!(
            "ledger has {} entries for {} vortices",
            vorticities.len(),
            n
        )));
    }
    let inv = spatial.transpose();
    let mut permutation = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for i in 0..n {
        let target = apply_point(&inv, reference, i);
        let mut best = (f64::INFINITY, usize::MAX);
        let mut second = f64::INFINITY;
        for j in 0..n {
            let d = point_distance(&target, reference, j);
            if d < best.0 {
                second = best.0;
                best = (d, j);
            } else if d < second {
                second = d;
            }
        }
        if best.0 > PERMUTATION_MATCH_TOLERANCE {
            return Err(Error::Wiring(format!(
                "transformation does not preserve the reference configuration \
                 (vortex {i} maps {:.3e} away from any label)",
                best.0
            )));
        }
        if second < 10.0 * PERMUTATION_MATCH_TOLERANCE {
            return Err(Error::Wiring(
                "reference configuration too degenerate to identify the permutation".into(),
            ));
        }
        if used[best.1] {
            return Err(Error::Wiring("matched permutation is not a bijection".into()));
        }
        used[best.1] = true;
        permutation[i] = best.1;
    }
    // λ_{σ(i)} = ε λ_i with one common ε.
    let sign = vorticities[permutation[0]] / vorticities[0];
    if (sign.abs() - 1.0).abs() > 1e-9 {
        return Err(Error::Wiring("vorticity magnitudes differ along the permutation".into()));
    }
    let sign = sign.signum();
    for i in 0..n {
        if (vorticities[permutation[i]] - sign * vorticities[i]).abs() > 1e-9 {
            return Err(Error::Wiring(format!(
                "permutation is not vorticity-compatible at vortex {i}"
            )));
        }
    }
    Ok(GroupElement { spatial: *spatial, permutation, sign })
}

fn apply_point(m: &Matrix3<f64>, config: &Configuration, i: usize) -> [f64; 3] {
    match config {
        Configuration::Sphere(p) => {
            let v = m * p[i];
            [v.x, v.y, v.z]
        }
        Configuration::Plane(p) => {
            let (x, y) = p[i].cartesian();
            [m[(0, 0)] * x + m[(0, 1)] * y, m[(1, 0)] * x + m[(1, 1)] * y, 0.0]
        }
    }
}

fn point_distance(target: &[f64; 3], config: &Configuration, j: usize) -> f64 {
    match config {
        Configuration::Sphere(p) => {
            let d = nalgebra::Vector3::new(target[0], target[1], target[2]) - p[j];
            d.norm()
        }
        Configuration::Plane(p) => {
            let (x, y) = p[j].cartesian();
            (target[0] - x).hypot(target[1] - y)
        }
    }
}

/// A named finite subgroup together with the sign-preserving part used for
/// ledgers of opposite vorticities: the pair (π(K), π(K_±)). `plus = None`
/// marks a system of identical vortices where K ≅ π(K).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupDescriptor {
    pub full: PointGroup,
    pub plus: Option<PointGroup>,
}

impl GroupDescriptor {
    pub fn plain(full: PointGroup) -> Self {
        Self { full, plus: None }
    }

    pub fn paired(full: PointGroup, plus: PointGroup) -> Self {
        Self { full, plus: Some(plus) }
    }
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.plus {
            None => write!(f, "{}", self.full),
            Some(p) => write!(f, "({}, {})", self.full, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rot_z, unit_vector};
    use std::f64::consts::{PI, TAU};

    #[test]
    fn chi_examples() {
        // Identity.
        let id = GroupElement::identity(3);
        assert_eq!(id.chi(), 1.0);
        // Inversion coupled with the +/- exchange: ε = −1, det = −1 so χ = +1.
        let inv = GroupElement {
            spatial: -Matrix3::identity(),
            permutation: vec![1, 0],
            sign: -1.0,
        };
        assert_eq!(inv.chi(), 1.0);
        // Plain reflection on identical vortices: χ = −1.
        let refl = GroupElement {
            spatial: crate::geom::mirror_horizontal(),
            permutation: vec![0, 1],
            sign: 1.0,
        };
        assert_eq!(refl.chi(), -1.0);
    }

    #[test]
    fn act_composition_law() {
        let config = Configuration::sphere(vec![
            unit_vector(0.4, 0.0),
            unit_vector(0.4, TAU / 3.0),
            unit_vector(0.4, 2.0 * TAU / 3.0),
        ]);
        let g = GroupElement { spatial: rot_z(TAU / 3.0), permutation: vec![2, 0, 1], sign: 1.0 };
        let h = g.compose(&g);
        let via_two = act(&g, &act(&g, &config).unwrap()).unwrap();
        let via_one = act(&h, &config).unwrap();
        assert!(configuration_distance(&via_two, &via_one) < 1e-13);
        let ginv = g.inverse();
        assert!(g.compose(&ginv).is_identity());
    }

    #[test]
    fn rotation_moves_longitude() {
        let cfg = Configuration::sphere(vec![unit_vector(PI / 2.0, 0.0)]);
        let g = GroupElement { spatial: rot_z(PI), permutation: vec![0], sign: 1.0 };
        let out = act(&g, &cfg).unwrap();
        let (colat, lon) = out.angles(0).unwrap();
        assert!((colat - PI / 2.0).abs() < 1e-14);
        assert!((lon - PI).abs() < 1e-14);
    }

    #[test]
    fn antipodal_pair_is_fixed_by_inversion_exchange() {
        let cfg = Configuration::sphere(vec![nalgebra::Vector3::z(), -nalgebra::Vector3::z()]);
        let g = element_from_spatial(&(-Matrix3::identity()), &cfg, &[1.0, -1.0]).unwrap();
        assert_eq!(g.permutation, vec![1, 0]);
        assert_eq!(g.sign, -1.0);
        assert!(fixture_residual(&g, &cfg).unwrap() < 1e-14);
    }

    #[test]
    fn matching_rejects_incompatible_ledger() {
        let cfg = Configuration::sphere(vec![nalgebra::Vector3::z(), -nalgebra::Vector3::z()]);
        assert!(element_from_spatial(&(-Matrix3::identity()), &cfg, &[1.0, -2.0]).is_err());
    }
}
