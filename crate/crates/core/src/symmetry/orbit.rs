//! Point-orbit generation and classification for the cataloged groups.

use super::point_group::{contains, PointGroup, MATRIX_TOLERANCE};
use super::GroupDescriptor;
use crate::error::{Error, Result};
use nalgebra::{Matrix3, Vector3};

/// Points considered coincident when deduplicating orbits.
const POINT_TOLERANCE: f64 = 1e-8;

/// Orbit of a seed point under a matrix group, deduplicated, in the group's
/// canonical element order.
pub fn orbit_of(matrices: &[Matrix3<f64>], seed: &Vector3<f64>) -> Vec<Vector3<f64>> {
    let mut pts: Vec<Vector3<f64>> = Vec::new();
    for m in matrices {
        let p = m * seed;
        if !pts.iter().any(|q| (q - p).norm() < POINT_TOLERANCE) {
            pts.push(p);
        }
    }
    pts
}

/// Orbit of a seed under the full group, each point tagged +1 when reached by
/// a proper rotation and −1 when only improper elements reach it. Used for
/// the "hatted" arrangements where improper images carry opposite vorticities.
pub fn signed_orbit_of(matrices: &[Matrix3<f64>], seed: &Vector3<f64>) -> Vec<(Vector3<f64>, f64)> {
    let mut pts: Vec<(Vector3<f64>, f64)> = Vec::new();
    for m in matrices {
        let p = m * seed;
        let s = m.determinant().signum();
        if let Some(existing) = pts.iter().find(|(q, _)| (q - p).norm() < POINT_TOLERANCE) {
            // A point reached by both a proper and an improper element sits
            // on a mixed stratum; the hatted arrangement is then degenerate.
            debug_assert!(existing.1 == s, "mixed proper/improper orbit point");
            continue;
        }
        pts.push((p, s));
    }
    pts
}

/// A classified point-orbit: the catalog symbol, the isotropy subgroup name
/// and the orbit size.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitLabel {
    pub label: String,
    pub isotropy: String,
    pub size: usize,
}

impl std::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({}, isotropy {})", self.label, self.size, self.isotropy)
    }
}

/// Classify a set of points as one point-orbit of the group.
///
/// The points must form a single orbit; the label follows the standard
/// catalog (R for regular orbits, R_s semi-regular, r equatorial rings,
/// p poles, e/f/v polyhedral strata, E generic mirror-plane orbits).
pub fn classify_point_orbit(
    descriptor: &GroupDescriptor,
    points: &[Vector3<f64>],
) -> Result<OrbitLabel> {
    let group = descriptor.full;
    let mats = group.elements();
    if points.is_empty() {
        return Err(Error::Group("empty point set".into()));
    }
    // Single-orbit check: the orbit of the first point must equal the set.
    let orbit = orbit_of(&mats, &points[0]);
    if orbit.len() != points.len() {
        return Err(Error::Group(format!(
            "points are not a single {group} orbit: orbit size {}, set size {}",
            orbit.len(),
            points.len()
        )));
    }
    for p in points {
        if !orbit.iter().any(|q| (q - p).norm() < 1e-6) {
            return Err(Error::Group("point set differs from the generated orbit".into()));
        }
    }

    let size = points.len();
    let iso: Vec<Matrix3<f64>> =
        mats.iter().filter(|m| (*m * points[0] - points[0]).norm() < 1e-7).cloned().collect();
    if size * iso.len() != group.order() {
        return Err(Error::Group(format!(
            "orbit-stabilizer mismatch: {size} × {} ≠ {}",
            iso.len(),
            group.order()
        )));
    }
    let iso_kind = classify_stabilizer(&iso);
    let label = orbit_symbol(group, size, &iso_kind, &points[0])?;
    Ok(OrbitLabel { label, isotropy: iso_kind.name, size })
}

/// Structure of a point stabilizer inside O(3).
struct StabilizerKind {
    name: String,
    order: usize,
    /// Normal of the fixing mirror plane when the stabilizer is {1, σ}.
    mirror_normal: Option<Vector3<f64>>,
}

fn classify_stabilizer(iso: &[Matrix3<f64>]) -> StabilizerKind {
    let order = iso.len();
    let rotations: Vec<&Matrix3<f64>> =
        iso.iter().filter(|m| m.determinant() > 0.0 && !is_identity(m)).collect();
    let mirrors: Vec<&Matrix3<f64>> = iso.iter().filter(|m| m.determinant() < 0.0).collect();
    let n_rot = rotations.len() + 1; // cyclic order including identity
    let name = if order == 1 {
        "1".to_string()
    } else if mirrors.is_empty() {
        format!("C_{n_rot}")
    } else if rotations.is_empty() && mirrors.len() == 1 {
        "C_h".to_string()
    } else {
        // rotations plus vertical mirrors through the axis
        format!("C_{n_rot}v")
    };
    let mirror_normal = if order == 2 && mirrors.len() == 1 {
        Some(mirror_plane_normal(mirrors[0]))
    } else {
        None
    };
    StabilizerKind { name, order, mirror_normal }
}

fn is_identity(m: &Matrix3<f64>) -> bool {
    (m - Matrix3::identity()).norm() < MATRIX_TOLERANCE
}

/// Unit normal of a reflection's fixed plane: the −1 eigenvector, i.e. any
/// column of (I − M) normalized.
fn mirror_plane_normal(m: &Matrix3<f64>) -> Vector3<f64> {
    let d = Matrix3::identity() - m;
    let mut best = d.column(0).into_owned();
    for c in 1..3 {
        if d.column(c).norm() > best.norm() {
            best = d.column(c).into_owned();
        }
    }
    best.normalize()
}

fn orbit_symbol(
    group: PointGroup,
    size: usize,
    iso: &StabilizerKind,
    sample: &Vector3<f64>,
) -> Result<String> {
    let n = match group {
        PointGroup::C(n)
        | PointGroup::Cv(n)
        | PointGroup::Ch(n)
        | PointGroup::S(n)
        | PointGroup::D(n)
        | PointGroup::Dh(n)
        | PointGroup::Dd(n) => n as usize,
        _ => 0,
    };
    let is_pole = sample.z.abs() > 1.0 - 1e-9;
    let mirror_is_horizontal = iso
        .mirror_normal
        .map(|nrm| nrm.z.abs() > 1.0 - 1e-6)
        .unwrap_or(false);

    let unknown = || {
        Error::Group(format!(
            "orbit of size {size} with isotropy {} not in the {group} catalog",
            iso.name
        ))
    };

    let sym = match group {
        PointGroup::C(_) => match size {
            1 => "p",
            s if s == n => "R",
            _ => return Err(unknown()),
        },
        PointGroup::Cv(_) => match size {
            1 => "p",
            s if s == n => "R",
            s if s == 2 * n => "R_s",
            _ => return Err(unknown()),
        },
        PointGroup::Ch(1) => match size {
            1 => "E",
            2 => "R",
            _ => return Err(unknown()),
        },
        PointGroup::Ch(_) => match size {
            2 if is_pole => "p",
            s if s == n => "R^e",
            s if s == 2 * n => "R",
            _ => return Err(unknown()),
        },
        PointGroup::Ci => match size {
            2 => "R",
            _ => return Err(unknown()),
        },
        PointGroup::S(_) => match size {
            2 if is_pole => "p",
            s if s == 2 * n => "R",
            _ => return Err(unknown()),
        },
        PointGroup::D(_) => match size {
            2 if is_pole => "p",
            s if s == n => "r",
            s if s == 2 * n => "R",
            _ => return Err(unknown()),
        },
        PointGroup::Dh(_) => match size {
            2 if is_pole => "p",
            s if s == n => "r",
            s if s == 2 * n && mirror_is_horizontal => "R_s^e",
            s if s == 2 * n => "R",
            s if s == 4 * n => "R_s",
            _ => return Err(unknown()),
        },
        PointGroup::Dd(_) => match size {
            2 if is_pole => "p",
            s if s == 2 * n && iso.mirror_normal.is_some() => "R",
            s if s == 2 * n => "r",
            s if s == 4 * n => "R_s",
            _ => return Err(unknown()),
        },
        PointGroup::T => match (size, iso.order) {
            (12, 1) => "R",
            (6, 2) => "e",
            (4, 3) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::O => match (size, iso.order) {
            (24, 1) => "R",
            (12, 2) => "e",
            (8, 3) => "f",
            (6, 4) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::I => match (size, iso.order) {
            (60, 1) => "R",
            (30, 2) => "e",
            (20, 3) => "f",
            (12, 5) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::Td => match (size, iso.order) {
            (24, 1) => "R",
            (12, 2) => "E",
            (6, 4) => "e",
            (4, 6) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::Th => match (size, iso.order) {
            (24, 1) => "R",
            (12, 2) => "E",
            (6, 4) => "e",
            (8, 3) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::Oh => match (size, iso.order) {
            (48, 1) => "R",
            (24, 2) => {
                // Mirror normal along a fourfold axis: generic edge orbit E;
                // along a twofold axis: face-bisector orbit E'.
                let nrm = iso.mirror_normal.ok_or_else(unknown)?;
                if is_axis_of_order(&PointGroup::Oh, &nrm, 4) {
                    "E"
                } else {
                    "E'"
                }
            }
            (12, 4) => "e",
            (8, 6) => "f",
            (6, 8) => "v",
            _ => return Err(unknown()),
        },
        PointGroup::Ih => match (size, iso.order) {
            (120, 1) => "R",
            (60, 2) => "E",
            (30, 4) => "e",
            (20, 6) => "f",
            (12, 10) => "v",
            _ => return Err(unknown()),
        },
    };
    Ok(sym.to_string())
}

/// Whether `axis` carries a rotation of the given order in the group.
fn is_axis_of_order(group: &PointGroup, axis: &Vector3<f64>, order: u32) -> bool {
    let r = crate::geom::rotation(*axis, std::f64::consts::TAU / order as f64);
    contains(&group.elements(), &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::unit_vector;
    use crate::symmetry::GroupDescriptor;
    use std::f64::consts::{FRAC_PI_2, TAU};

    fn plain(g: PointGroup) -> GroupDescriptor {
        GroupDescriptor::plain(g)
    }

    #[test]
    fn equatorial_ring_of_dihedral_group() {
        let n = 4;
        let g = PointGroup::D(n);
        let pts: Vec<_> =
            (0..n).map(|k| unit_vector(FRAC_PI_2, TAU * k as f64 / n as f64)).collect();
        let label = classify_point_orbit(&plain(g), &pts).unwrap();
        assert_eq!(label.label, "r");
        assert_eq!(label.isotropy, "C_2");
        assert_eq!(label.size, n as usize);
    }

    #[test]
    fn octahedron_vertices() {
        let g = PointGroup::O;
        let pts = vec![
            Vector3::x(),
            -Vector3::x(),
            Vector3::y(),
            -Vector3::y(),
            Vector3::z(),
            -Vector3::z(),
        ];
        let label = classify_point_orbit(&plain(g), &pts).unwrap();
        assert_eq!(label.label, "v");
        assert_eq!(label.isotropy, "C_4");
        assert_eq!(label.size, 6);
    }

    #[test]
    fn semi_regular_gon_of_cnv() {
        let n = 3u32;
        let g = PointGroup::Cv(n);
        let mats = g.elements();
        let seed = unit_vector(1.0, 0.37);
        let pts = orbit_of(&mats, &seed);
        let label = classify_point_orbit(&plain(g), &pts).unwrap();
        assert_eq!(label.label, "R_s");
        assert_eq!(label.size, 2 * n as usize);
        assert_eq!(label.isotropy, "1");
    }

    #[test]
    fn rejects_non_orbit() {
        let g = PointGroup::C(3);
        let pts = vec![unit_vector(0.5, 0.0), unit_vector(0.9, 1.0)];
        assert!(classify_point_orbit(&plain(g), &pts).is_err());
    }

    #[test]
    fn oh_edge_vs_face_bisector() {
        let g = PointGroup::Oh;
        let mats = g.elements();
        // Generic point on an octahedron edge (plane z = 0 between e_x, e_y).
        let edge_pt = Vector3::new(0.8, 0.6, 0.0).normalize();
        let edge = orbit_of(&mats, &edge_pt);
        let l1 = classify_point_orbit(&plain(g), &edge).unwrap();
        assert_eq!((l1.label.as_str(), l1.size), ("E", 24));
        // Generic point on a face bisector (plane x = y).
        let bis_pt = Vector3::new(0.5, 0.5, 0.9).normalize();
        let bis = orbit_of(&mats, &bis_pt);
        let l2 = classify_point_orbit(&plain(g), &bis).unwrap();
        assert_eq!((l2.label.as_str(), l2.size), ("E'", 24));
    }

    #[test]
    fn signed_orbit_of_th_splits_properly() {
        let g = PointGroup::Th;
        let mats = g.elements();
        let seed = unit_vector(0.9, 0.4);
        let pts = signed_orbit_of(&mats, &seed);
        assert_eq!(pts.len(), 24);
        assert_eq!(pts.iter().filter(|(_, s)| *s > 0.0).count(), 12);
    }
}
