//! Wiring: the assignment of vortex labels to point-orbit slots of a group,
//! and full element enumeration from it.
//!
//! A wiring places each orbit by a seed (generic point, pole, polyhedral
//! stratum point) and lists the vortex indices occupying the orbit points in
//! generated order. The reference configuration built this way pins the
//! permutation of every spatial group element, including the sign-flipping
//! ones of ledgers with opposite vorticities.

use super::orbit::orbit_of;
use super::point_group::{seeds, PointGroup};
use super::{element_from_spatial, GroupDescriptor, GroupElement};
use crate::error::{Error, Result};
use crate::system::{Configuration, PlanePoint, Surface, VortexSystem};
use crate::geom;
use nalgebra::Vector3;

/// Where a point-orbit sits on the surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitSeed {
    /// Generic seed at (colatitude, longitude); its group orbit fills the slot.
    Point { colat: f64, lon: f64 },
    NorthPole,
    SouthPole,
    /// North then south pole, as one slot.
    PolePair,
    /// Polyhedral vertex stratum (dual picks the opposite tetrahedron).
    PolyVertex { dual: bool },
    PolyEdge,
    PolyFace,
    /// Planar ring of radius ρ with phase offset; orbit under the planar
    /// rotations. Only valid on plane systems.
    PlaneRing { radius: f64, phase: f64 },
    /// Central vortex of a planar system.
    PlaneCenter,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSlot {
    pub seed: OrbitSeed,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Wiring {
    pub slots: Vec<OrbitSlot>,
}

impl Wiring {
    pub fn new(slots: Vec<OrbitSlot>) -> Self {
        Self { slots }
    }

    /// Canonical wiring for `rings` generic ring orbits followed by the
    /// poles: ring j takes indices j·size … j·size + size − 1, poles last.
    pub fn rings_and_poles(ring_seeds: &[(f64, f64)], orbit_size: usize, poles: usize) -> Self {
        let mut slots = Vec::new();
        let mut next = 0usize;
        for &(colat, lon) in ring_seeds {
            slots.push(OrbitSlot {
                seed: OrbitSeed::Point { colat, lon },
                indices: (next..next + orbit_size).collect(),
            });
            next += orbit_size;
        }
        match poles {
            0 => {}
            1 => slots.push(OrbitSlot { seed: OrbitSeed::NorthPole, indices: vec![next] }),
            2 => slots
                .push(OrbitSlot { seed: OrbitSeed::PolePair, indices: vec![next, next + 1] }),
            _ => panic!("at most two poles"),
        }
        Self { slots }
    }

    /// Total number of vortex labels covered.
    pub fn count(&self) -> usize {
        self.slots.iter().map(|s| s.indices.len()).sum()
    }

    /// Check that the slots cover 0..N exactly once.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for slot in &self.slots {
            for &i in &slot.indices {
                if i >= n {
                    return Err(Error::Wiring(format!("index {i} out of range for N = {n}")));
                }
                if seen[i] {
                    return Err(Error::Wiring(format!("index {i} assigned twice")));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Wiring(format!(
                "orbit sizes sum to {}, leaving index {missing} unassigned",
                self.count()
            )));
        }
        Ok(())
    }

    /// Build the reference configuration: every slot's orbit points in
    /// generated order, written at the slot's indices.
    pub fn reference(&self, group: &PointGroup, system: &VortexSystem) -> Result<Configuration> {
        self.validate(system.count())?;
        match system.surface() {
            Surface::Sphere => {
                let mats = group.elements();
                let mut points = vec![Vector3::zeros(); system.count()];
                for slot in &self.slots {
                    let orbit: Vec<Vector3<f64>> = match slot.seed {
                        OrbitSeed::Point { colat, lon } => {
                            orbit_of(&mats, &geom::unit_vector(colat, lon))
                        }
                        OrbitSeed::NorthPole => vec![Vector3::z()],
                        OrbitSeed::SouthPole => vec![-Vector3::z()],
                        OrbitSeed::PolePair => vec![Vector3::z(), -Vector3::z()],
                        OrbitSeed::PolyVertex { dual } => {
                            let fam = poly_family(group)?;
                            orbit_of(&mats, &seeds::vertex(fam, dual))
                        }
                        OrbitSeed::PolyEdge => {
                            let fam = poly_family(group)?;
                            orbit_of(&mats, &seeds::edge_midpoint(fam))
                        }
                        OrbitSeed::PolyFace => {
                            let fam = poly_family(group)?;
                            orbit_of(&mats, &seeds::face_center(fam))
                        }
                        OrbitSeed::PlaneRing { .. } | OrbitSeed::PlaneCenter => {
                            return Err(Error::Wiring(
                                "plane orbit seed used on a sphere system".into(),
                            ))
                        }
                    };
                    if orbit.len() != slot.indices.len() {
                        return Err(Error::Wiring(format!(
                            "orbit of {:?} under {group} has {} points, slot lists {} indices",
                            slot.seed,
                            orbit.len(),
                            slot.indices.len()
                        )));
                    }
                    for (&i, p) in slot.indices.iter().zip(orbit.iter()) {
                        points[i] = *p;
                    }
                }
                Ok(Configuration::Sphere(points))
            }
            Surface::Plane => {
                let n_fold = match group {
                    PointGroup::C(n) | PointGroup::D(n) => *n as usize,
                    _ => {
                        return Err(Error::Wiring(format!(
                            "plane systems support C_n and D_n only, got {group}"
                        )))
                    }
                };
                let mut points = vec![PlanePoint::new(0.0, 0.0); system.count()];
                for slot in &self.slots {
                    match slot.seed {
                        OrbitSeed::PlaneRing { radius, phase } => {
                            if slot.indices.len() != n_fold {
                                return Err(Error::Wiring(format!(
                                    "plane ring slot lists {} indices for a {n_fold}-ring",
                                    slot.indices.len()
                                )));
                            }
                            for (k, &i) in slot.indices.iter().enumerate() {
                                let phi = phase + std::f64::consts::TAU * k as f64 / n_fold as f64;
                                points[i] = PlanePoint::new(radius, geom::wrap_angle(phi));
                            }
                        }
                        OrbitSeed::PlaneCenter => {
                            if slot.indices.len() != 1 {
                                return Err(Error::Wiring("center slot takes one index".into()));
                            }
                            points[slot.indices[0]] = PlanePoint::new(0.0, 0.0);
                        }
                        _ => {
                            return Err(Error::Wiring(
                                "sphere orbit seed used on a plane system".into(),
                            ))
                        }
                    }
                }
                Ok(Configuration::Plane(points))
            }
        }
    }
}

fn poly_family(group: &PointGroup) -> Result<super::PolyhedralFamily> {
    group
        .polyhedral_family()
        .ok_or_else(|| Error::Wiring(format!("{group} has no polyhedral strata")))
}

/// Enumerate all elements of the group named by `descriptor`, with the
/// permutations induced on the wiring's reference configuration.
pub fn enumerate_elements(
    descriptor: &GroupDescriptor,
    system: &VortexSystem,
    wiring: &Wiring,
) -> Result<Vec<GroupElement>> {
    let reference = wiring.reference(&descriptor.full, system)?;
    elements_from_reference(descriptor, system, &reference)
}

/// Enumerate group elements by matching each spatial matrix against an
/// explicit reference configuration known to be K-invariant.
pub fn elements_from_reference(
    descriptor: &GroupDescriptor,
    system: &VortexSystem,
    reference: &Configuration,
) -> Result<Vec<GroupElement>> {
    let mats = descriptor.full.elements();
    let mut out = Vec::with_capacity(mats.len());
    for m in &mats {
        out.push(element_from_spatial(m, reference, system.vorticities())?);
    }
    if let Some(plus) = &descriptor.plus {
        let kept = out.iter().filter(|e| e.sign > 0.0).count();
        if kept != plus.order() {
            return Err(Error::Group(format!(
                "{descriptor}: {kept} sign-preserving elements, expected {}",
                plus.order()
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{act, configuration_distance, fixture_residual};
    use std::f64::consts::TAU;

    #[test]
    fn trivial_group_single_identity() {
        let sys = VortexSystem::identical(Surface::Sphere, 2).unwrap();
        let wiring = Wiring::new(vec![
            OrbitSlot { seed: OrbitSeed::Point { colat: 0.7, lon: 0.1 }, indices: vec![0] },
            OrbitSlot { seed: OrbitSeed::Point { colat: 1.9, lon: 2.5 }, indices: vec![1] },
        ]);
        let els =
            enumerate_elements(&GroupDescriptor::plain(PointGroup::C(1)), &sys, &wiring).unwrap();
        assert_eq!(els.len(), 1);
        assert!(els[0].is_identity());
    }

    #[test]
    fn cyclic_ring_elements() {
        let sys = VortexSystem::identical(Surface::Sphere, 3).unwrap();
        let wiring = Wiring::rings_and_poles(&[(1.1, 0.2)], 3, 0);
        let els =
            enumerate_elements(&GroupDescriptor::plain(PointGroup::C(3)), &sys, &wiring).unwrap();
        assert_eq!(els.len(), 3);
        let reference = wiring.reference(&PointGroup::C(3), &sys).unwrap();
        for e in &els {
            assert!(fixture_residual(e, &reference).unwrap() < 1e-12);
            assert_eq!(e.sign, 1.0);
        }
        // The non-identity elements are 3-cycles.
        let cycles = els.iter().filter(|e| !e.is_identity()).count();
        assert_eq!(cycles, 2);
    }

    #[test]
    fn inversion_pairs() {
        // Three (+) with three (−) vortices as antipodal pairs: the group
        // (C_i, 1) has two elements, identity and inversion-with-exchange.
        let sys = VortexSystem::sphere(vec![1.0, 1.0, 1.0, -1.0, -1.0, -1.0]).unwrap();
        let pts = [
            geom::unit_vector(0.5, 0.3),
            geom::unit_vector(1.2, 2.0),
            geom::unit_vector(2.1, 4.1),
        ];
        let mut points: Vec<_> = pts.to_vec();
        points.extend(pts.iter().map(|p| -p));
        let reference = Configuration::sphere(points);
        let desc = GroupDescriptor::paired(PointGroup::Ci, PointGroup::C(1));
        let els = elements_from_reference(&desc, &sys, &reference).unwrap();
        assert_eq!(els.len(), 2);
        let inv = els.iter().find(|e| !e.is_identity()).unwrap();
        assert_eq!(inv.sign, -1.0);
        assert_eq!(inv.chi(), 1.0);
        assert!(fixture_residual(inv, &reference).unwrap() < 1e-12);
    }

    #[test]
    fn wiring_validation_errors() {
        let sys = VortexSystem::identical(Surface::Sphere, 4).unwrap();
        // 3-orbit plus pole covers 4 indices but duplicates one.
        let bad = Wiring::new(vec![
            OrbitSlot { seed: OrbitSeed::Point { colat: 1.0, lon: 0.0 }, indices: vec![0, 1, 2] },
            OrbitSlot { seed: OrbitSeed::NorthPole, indices: vec![2] },
        ]);
        assert!(enumerate_elements(&GroupDescriptor::plain(PointGroup::C(3)), &sys, &bad).is_err());
        // Orbit size mismatch.
        let short = Wiring::new(vec![OrbitSlot {
            seed: OrbitSeed::Point { colat: 1.0, lon: 0.0 },
            indices: vec![0, 1, 2, 3],
        }]);
        assert!(
            enumerate_elements(&GroupDescriptor::plain(PointGroup::C(3)), &sys, &short).is_err()
        );
    }

    #[test]
    fn plane_ring_elements() {
        let sys = VortexSystem::identical(Surface::Plane, 3).unwrap();
        let wiring = Wiring::new(vec![OrbitSlot {
            seed: OrbitSeed::PlaneRing { radius: 1.0, phase: 0.4 },
            indices: vec![0, 1, 2],
        }]);
        let els =
            enumerate_elements(&GroupDescriptor::plain(PointGroup::C(3)), &sys, &wiring).unwrap();
        assert_eq!(els.len(), 3);
        let reference = wiring.reference(&PointGroup::C(3), &sys).unwrap();
        let rotated = act(&els[1], &reference).unwrap();
        assert!(configuration_distance(&rotated, &reference) < 1e-12);
        let _ = TAU;
    }
}
