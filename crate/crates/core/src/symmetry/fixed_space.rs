//! Dimension of the fixed-point set of a symmetry subgroup, computed as the
//! nullity of the linearized fixed-point equations at a generic point of the
//! set.

use super::wiring::{enumerate_elements, Wiring};
use super::{fixture_residual, GroupDescriptor, GroupElement};
use crate::error::{Error, Result};
use crate::system::{Configuration, VortexSystem};
use nalgebra::{DMatrix, Matrix3, Vector3};

/// Singular values below this count as zero in the rank computation.
const RANK_TOLERANCE: f64 = 1e-8;

/// The fixed-point set of a subgroup at a generic wiring: its dimension as a
/// manifold and the representative configuration the computation used (the
/// parametrization handle for chart construction).
#[derive(Debug, Clone)]
pub struct FixedSpace {
    pub dimension: usize,
    pub representative: Configuration,
}

/// Compute the fixed-space dimension for a group acting through a wiring.
///
/// Errors when the subgroup contains non-symplectic elements (χ = −1):
/// symmetric reduction is only available inside Ker χ.
pub fn fixed_space(
    descriptor: &GroupDescriptor,
    system: &VortexSystem,
    wiring: &Wiring,
) -> Result<FixedSpace> {
    let reference = wiring.reference(&descriptor.full, system)?;
    let elements = enumerate_elements(descriptor, system, wiring)?;
    fixed_space_at(descriptor, &elements, reference)
}

/// Fixed space from an explicit K-invariant reference configuration (used
/// for arrangements, like the sign-alternating ones, that are easier to
/// write down than to wire up).
pub fn fixed_space_from_reference(
    descriptor: &GroupDescriptor,
    system: &VortexSystem,
    reference: &Configuration,
) -> Result<FixedSpace> {
    let elements =
        super::wiring::elements_from_reference(descriptor, system, reference)?;
    fixed_space_at(descriptor, &elements, reference.clone())
}

fn fixed_space_at(
    descriptor: &GroupDescriptor,
    elements: &[GroupElement],
    reference: Configuration,
) -> Result<FixedSpace> {
    for e in elements {
        if e.chi() < 0.0 {
            return Err(Error::Group(format!(
                "{descriptor} contains anti-symplectic elements (χ = −1); \
                 its fixed space is not a Hamiltonian subsystem"
            )));
        }
        debug_assert!(fixture_residual(e, &reference)? < 1e-9);
    }
    let dimension = fixed_space_dimension(elements, &reference)?;
    Ok(FixedSpace { dimension, representative: reference })
}

/// Nullity of the stacked constraints (dΦ_g − I)v = 0 over a generating set.
pub fn fixed_space_dimension(
    elements: &[GroupElement],
    reference: &Configuration,
) -> Result<usize> {
    // A generating subset suffices: anything fixed by the generators is
    // fixed by the whole group. Greedily grow one from the element list.
    use super::point_group::{closure, contains};
    let mut gens: Vec<&GroupElement> = Vec::new();
    let mut gen_mats = Vec::new();
    let mut span = vec![nalgebra::Matrix3::identity()];
    for e in elements {
        if !contains(&span, &e.spatial) {
            gens.push(e);
            gen_mats.push(e.spatial);
            span = closure(&gen_mats);
            if span.len() == elements.len() {
                break;
            }
        }
    }
    let active: Vec<&GroupElement> = if gens.is_empty() {
        elements.iter().filter(|e| !e.is_identity()).collect()
    } else {
        gens
    };

    let n = reference.len();
    let dof = 2 * n;
    if active.is_empty() {
        return Ok(dof);
    }

    let bases = tangent_bases(reference);
    let mut rows: Vec<f64> = Vec::new();
    let mut n_rows = 0usize;
    for g in &active {
        for i in 0..n {
            let j = g.permutation[i];
            // Constraint: A v_j − v_i = 0, projected on the tangent plane at
            // the i-th reference point.
            for a in 0..2 {
                let mut row = vec![0.0; dof];
                for b in 0..2 {
                    let col = bases[j][b];
                    let image = apply_tangent(&g.spatial, &col, reference);
                    row[2 * j + b] += bases[i][a].dot(&image);
                    if j == i && a == b {
                        // fallthrough, subtracted below
                    }
                }
                row[2 * i + a] -= 1.0;
                rows.extend_from_slice(&row);
                n_rows += 1;
            }
        }
    }
    let m = DMatrix::from_row_slice(n_rows, dof, &rows);
    let rank = m.rank(RANK_TOLERANCE);
    Ok(dof - rank)
}

fn apply_tangent(
    m: &Matrix3<f64>,
    v: &Vector3<f64>,
    reference: &Configuration,
) -> Vector3<f64> {
    match reference {
        Configuration::Sphere(_) => m * v,
        Configuration::Plane(_) => Vector3::new(
            m[(0, 0)] * v.x + m[(0, 1)] * v.y,
            m[(1, 0)] * v.x + m[(1, 1)] * v.y,
            0.0,
        ),
    }
}

/// Orthonormal tangent pairs at each configuration point.
fn tangent_bases(reference: &Configuration) -> Vec<[Vector3<f64>; 2]> {
    match reference {
        Configuration::Sphere(points) => points
            .iter()
            .map(|x| {
                let helper = if x.z.abs() > 0.9 { Vector3::x() } else { Vector3::z() };
                let t1 = helper.cross(x).normalize();
                let t2 = x.cross(&t1);
                [t1, t2]
            })
            .collect(),
        Configuration::Plane(points) => {
            points.iter().map(|_| [Vector3::x(), Vector3::y()]).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::wiring::{OrbitSeed, OrbitSlot};
    use crate::symmetry::PointGroup;
    use crate::system::Surface;

    #[test]
    fn single_ring_has_two_dimensions() {
        let n = 4;
        let sys = VortexSystem::identical(Surface::Sphere, n).unwrap();
        let wiring = Wiring::rings_and_poles(&[(1.1, 0.3)], n, 0);
        let fs = fixed_space(&GroupDescriptor::plain(PointGroup::C(n as u32)), &sys, &wiring)
            .unwrap();
        assert_eq!(fs.dimension, 2);
    }

    #[test]
    fn pole_orbit_is_zero_dimensional() {
        let sys = VortexSystem::identical(Surface::Sphere, 1).unwrap();
        let wiring = Wiring::new(vec![OrbitSlot { seed: OrbitSeed::NorthPole, indices: vec![0] }]);
        let fs =
            fixed_space(&GroupDescriptor::plain(PointGroup::C(3)), &sys, &wiring).unwrap();
        assert_eq!(fs.dimension, 0);
    }

    #[test]
    fn two_rings_have_four_dimensions() {
        let n = 3usize;
        let sys = VortexSystem::identical(Surface::Sphere, 2 * n).unwrap();
        let wiring = Wiring::rings_and_poles(&[(0.9, 0.1), (2.0, 0.7)], n, 0);
        let fs = fixed_space(&GroupDescriptor::plain(PointGroup::C(n as u32)), &sys, &wiring)
            .unwrap();
        assert_eq!(fs.dimension, 4);
    }

    #[test]
    fn anti_symplectic_subgroup_rejected() {
        // C_nv on identical vortices couples mirrors with ε = +1 so χ = −1.
        let n = 3usize;
        let sys = VortexSystem::identical(Surface::Sphere, 2 * n).unwrap();
        let wiring = Wiring::rings_and_poles(&[(1.2, 0.15)], 2 * n, 0);
        let err = fixed_space(&GroupDescriptor::plain(PointGroup::Cv(n as u32)), &sys, &wiring);
        assert!(err.is_err());
    }

    #[test]
    fn plane_ring_dimension() {
        let n = 3usize;
        let sys = VortexSystem::identical(Surface::Plane, n).unwrap();
        let wiring = Wiring::new(vec![OrbitSlot {
            seed: OrbitSeed::PlaneRing { radius: 1.3, phase: 0.2 },
            indices: vec![0, 1, 2],
        }]);
        let fs = fixed_space(&GroupDescriptor::plain(PointGroup::C(n as u32)), &sys, &wiring)
            .unwrap();
        assert_eq!(fs.dimension, 2);
    }
}
