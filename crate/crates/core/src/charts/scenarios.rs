//! Per-scenario chart data: systems, symmetry groups, coordinate ranges,
//! lift formulas and projections.
//!
//! Quotiented scenarios (sphere S-series and the planar two-ring chart) fix
//! the residual rotation gauge by putting a designated vortex at longitude
//! zero; the direct scenarios (rings with discrete normalizer, polyhedral
//! orbits) read their coordinates off a designated vortex without a gauge.

use super::{
    checked_acos, checked_sqrt, infeasible, rotate_sphere, z_gauge, Chart, ChartAxes, ReducedPoint,
};
use crate::error::{Error, Result};
use crate::geom;
use crate::symmetry::orbit::signed_orbit_of;
use crate::symmetry::{configuration_distance, GroupDescriptor, PointGroup};
use crate::system::{Configuration, PlanePoint, Surface, VortexSystem};
use nalgebra::{Matrix3, Vector3};
use std::f64::consts::{PI, TAU};

/// Polyhedral symmetry available for the direct orbit scenario; the `h`/`d`
/// variants carry alternating vorticities on the improper images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedralGroup {
    T,
    Th,
    Td,
    O,
    Oh,
    I,
    Ih,
}

impl PolyhedralGroup {
    pub fn point_group(&self) -> PointGroup {
        match self {
            PolyhedralGroup::T => PointGroup::T,
            PolyhedralGroup::Th => PointGroup::Th,
            PolyhedralGroup::Td => PointGroup::Td,
            PolyhedralGroup::O => PointGroup::O,
            PolyhedralGroup::Oh => PointGroup::Oh,
            PolyhedralGroup::I => PointGroup::I,
            PolyhedralGroup::Ih => PointGroup::Ih,
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, PolyhedralGroup::Th | PolyhedralGroup::Td | PolyhedralGroup::Oh | PolyhedralGroup::Ih)
    }

    /// The proper-rotation part for signed variants.
    pub fn proper_part(&self) -> PointGroup {
        match self {
            PolyhedralGroup::T | PolyhedralGroup::Th | PolyhedralGroup::Td => PointGroup::T,
            PolyhedralGroup::O | PolyhedralGroup::Oh => PointGroup::O,
            PolyhedralGroup::I | PolyhedralGroup::Ih => PointGroup::I,
        }
    }
}

impl std::fmt::Display for PolyhedralGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.point_group())
    }
}

/// The reduced-chart scenarios.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    /// Two N-rings of vorticities +1 and `ring_vorticity` with up to two
    /// polar vortices, reduced by C_N and the axial rotation.
    SphereTwoRings { n: u32, ring_vorticity: f64, polar_vorticities: Vec<f64>, mu: f64 },
    /// Two (+1) vortices, each paired with a (−1) vortex at mirrored
    /// latitude and equal longitude.
    SpherePairs { mu: f64 },
    /// N (+1) and N (−1) vortices in two rings with two polar vortices of
    /// vorticities ±`pole_vorticity` (0 omits the poles).
    SphereTwoRingsPoles { n: u32, pole_vorticity: f64, mu: f64 },
    /// Four N-rings (two of each sign, latitude-mirrored) plus ± poles.
    SphereFourRingsPoles { n: u32, pole_vorticity: f64, mu: f64 },
    /// Three antipodal ± pairs at nonzero momentum, coordinates (θ1, θ2).
    SphereThreePairs { mu: f64 },
    /// Four antipodal ± pairs at zero momentum.
    SphereFourPairsZero,
    /// Planar: N-ring (+1), N-ring (`ring_vorticity`), optional center.
    PlaneTwoRingsCenter { n: u32, ring_vorticity: f64, center_vorticity: f64, mu: f64 },
    /// 2N alternating ± vortices on one latitude (direct fixed space).
    DancingRing { n: u32 },
    /// Two staggered semi-regular 2N-gons of alternating signs (direct).
    StaggeredDoubleRings { n: u32 },
    /// Two aligned semi-regular 2N-gons of alternating signs (direct).
    AlignedDoubleRings { n: u32 },
    /// Identical vortices on a pair of opposite-latitude N-rings with
    /// optional poles, fixed by the dihedral rotations (direct).
    DihedralRings { n: u32, with_poles: bool },
    /// Regular orbit of a polyhedral group; signed variants alternate the
    /// vorticities on improper images (direct).
    PolyhedralOrbit { group: PolyhedralGroup },
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSystem(msg));
        match self {
            Scenario::SphereTwoRings { n, ring_vorticity, polar_vorticities, .. } => {
                if *n < 2 {
                    return bad("ring scenarios need n >= 2".into());
                }
                if *ring_vorticity == 0.0 {
                    return bad("second-ring vorticity must be nonzero".into());
                }
                if polar_vorticities.len() > 2 {
                    return bad("at most two polar vortices".into());
                }
                if polar_vorticities.iter().any(|l| *l == 0.0) {
                    return bad("polar vorticities must be nonzero (omit them instead)".into());
                }
            }
            Scenario::SphereTwoRingsPoles { n, .. } | Scenario::SphereFourRingsPoles { n, .. } => {
                if *n < 2 {
                    return bad("ring scenarios need n >= 2".into());
                }
            }
            Scenario::SphereThreePairs { mu } => {
                if *mu == 0.0 {
                    return bad(
                        "three-pair chart needs mu != 0 (the zero level reduces by all rotations)"
                            .into(),
                    );
                }
            }
            Scenario::PlaneTwoRingsCenter { n, ring_vorticity, .. } => {
                if *n < 2 {
                    return bad("ring scenarios need n >= 2".into());
                }
                if *ring_vorticity == 0.0 {
                    return bad("second-ring vorticity must be nonzero".into());
                }
            }
            Scenario::DancingRing { n }
            | Scenario::StaggeredDoubleRings { n }
            | Scenario::AlignedDoubleRings { n }
            | Scenario::DihedralRings { n, .. } => {
                if *n < 2 {
                    return bad("ring scenarios need n >= 2".into());
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Short stable name used in configuration files and output metadata.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Scenario::SphereTwoRings { .. } => "sphere-two-rings",
            Scenario::SpherePairs { .. } => "sphere-opposite-pairs",
            Scenario::SphereTwoRingsPoles { .. } => "sphere-two-rings-poles",
            Scenario::SphereFourRingsPoles { .. } => "sphere-four-rings-poles",
            Scenario::SphereThreePairs { .. } => "sphere-three-pairs",
            Scenario::SphereFourPairsZero => "sphere-four-pairs-zero",
            Scenario::PlaneTwoRingsCenter { .. } => "plane-two-rings-center",
            Scenario::DancingRing { .. } => "dancing-ring",
            Scenario::StaggeredDoubleRings { .. } => "staggered-double-rings",
            Scenario::AlignedDoubleRings { .. } => "aligned-double-rings",
            Scenario::DihedralRings { .. } => "dihedral-rings",
            Scenario::PolyhedralOrbit { .. } => "polyhedral-orbit",
        }
    }
}

pub(super) fn reduced_momentum(s: &Scenario) -> f64 {
    match s {
        Scenario::SphereTwoRings { mu, .. }
        | Scenario::SpherePairs { mu }
        | Scenario::SphereTwoRingsPoles { mu, .. }
        | Scenario::SphereFourRingsPoles { mu, .. }
        | Scenario::SphereThreePairs { mu }
        | Scenario::PlaneTwoRingsCenter { mu, .. } => *mu,
        _ => 0.0,
    }
}

pub(super) fn system_for(s: &Scenario) -> Result<VortexSystem> {
    match s {
        Scenario::SphereTwoRings { n, ring_vorticity, polar_vorticities, .. } => {
            let n = *n as usize;
            let mut lam = vec![1.0; n];
            lam.extend(std::iter::repeat(*ring_vorticity).take(n));
            lam.extend_from_slice(polar_vorticities);
            VortexSystem::sphere(lam)
        }
        Scenario::SpherePairs { .. } => VortexSystem::sphere(vec![1.0, 1.0, -1.0, -1.0]),
        Scenario::SphereTwoRingsPoles { n, pole_vorticity, .. } => {
            let n = *n as usize;
            let mut lam = vec![1.0; n];
            lam.extend(std::iter::repeat(-1.0).take(n));
            if *pole_vorticity != 0.0 {
                lam.push(*pole_vorticity);
                lam.push(-*pole_vorticity);
            }
            VortexSystem::sphere(lam)
        }
        Scenario::SphereFourRingsPoles { n, pole_vorticity, .. } => {
            let n = *n as usize;
            let mut lam = vec![1.0; 2 * n];
            lam.extend(std::iter::repeat(-1.0).take(2 * n));
            if *pole_vorticity != 0.0 {
                lam.push(*pole_vorticity);
                lam.push(-*pole_vorticity);
            }
            VortexSystem::sphere(lam)
        }
        Scenario::SphereThreePairs { .. } => {
            VortexSystem::sphere(vec![1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
        }
        Scenario::SphereFourPairsZero => {
            VortexSystem::sphere(vec![1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])
        }
        Scenario::PlaneTwoRingsCenter { n, ring_vorticity, center_vorticity, .. } => {
            let n = *n as usize;
            let mut lam = vec![1.0; n];
            lam.extend(std::iter::repeat(*ring_vorticity).take(n));
            if *center_vorticity != 0.0 {
                lam.push(*center_vorticity);
            }
            VortexSystem::plane(lam)
        }
        Scenario::DancingRing { n } => {
            let n = *n as usize;
            let mut lam = vec![1.0; n];
            lam.extend(std::iter::repeat(-1.0).take(n));
            VortexSystem::sphere(lam)
        }
        Scenario::StaggeredDoubleRings { n } | Scenario::AlignedDoubleRings { n } => {
            let n = *n as usize;
            let mut lam = vec![1.0; 2 * n];
            lam.extend(std::iter::repeat(-1.0).take(2 * n));
            VortexSystem::sphere(lam)
        }
        Scenario::DihedralRings { n, with_poles } => {
            let count = 2 * *n as usize + if *with_poles { 2 } else { 0 };
            VortexSystem::identical(Surface::Sphere, count)
        }
        Scenario::PolyhedralOrbit { group } => {
            let mats = group.point_group().elements();
            let lam = if group.is_signed() {
                mats.iter().map(|m| m.determinant().signum()).collect()
            } else {
                vec![1.0; mats.len()]
            };
            VortexSystem::sphere(lam)
        }
    }
}

pub(super) fn descriptor_for(s: &Scenario) -> GroupDescriptor {
    match s {
        Scenario::SphereTwoRings { n, .. } => GroupDescriptor::plain(PointGroup::C(*n)),
        Scenario::SpherePairs { .. } => {
            GroupDescriptor::paired(PointGroup::Ch(1), PointGroup::C(1))
        }
        Scenario::SphereTwoRingsPoles { n, .. } => {
            GroupDescriptor::paired(PointGroup::C(*n), PointGroup::C(*n))
        }
        Scenario::SphereFourRingsPoles { n, .. } => {
            GroupDescriptor::paired(PointGroup::Ch(*n), PointGroup::C(*n))
        }
        Scenario::SphereThreePairs { .. } | Scenario::SphereFourPairsZero => {
            GroupDescriptor::paired(PointGroup::Ci, PointGroup::C(1))
        }
        Scenario::PlaneTwoRingsCenter { n, .. } => GroupDescriptor::plain(PointGroup::C(*n)),
        Scenario::DancingRing { n } => {
            GroupDescriptor::paired(PointGroup::Cv(*n), PointGroup::C(*n))
        }
        Scenario::StaggeredDoubleRings { n } => {
            GroupDescriptor::paired(PointGroup::Dd(*n), PointGroup::D(*n))
        }
        Scenario::AlignedDoubleRings { n } => {
            GroupDescriptor::paired(PointGroup::Dh(*n), PointGroup::D(*n))
        }
        Scenario::DihedralRings { n, .. } => GroupDescriptor::plain(PointGroup::D(*n)),
        Scenario::PolyhedralOrbit { group } => {
            if group.is_signed() {
                GroupDescriptor::paired(group.point_group(), group.proper_part())
            } else {
                GroupDescriptor::plain(group.point_group())
            }
        }
    }
}

pub(super) fn k_matrices_for(s: &Scenario) -> Vec<Matrix3<f64>> {
    let mats = descriptor_for(s).full.elements();
    match s {
        // The staggered/aligned double-ring lifts realize their dihedral
        // symmetry with the twofold axes and mirrors offset by half a step
        // from the x-axis convention; conjugate the matrices to match.
        Scenario::StaggeredDoubleRings { n } | Scenario::AlignedDoubleRings { n } => {
            let r = geom::rot_z(PI / (2.0 * *n as f64));
            mats.into_iter().map(|m| r * m * r.transpose()).collect()
        }
        _ => mats,
    }
}

pub(super) fn axes_for(s: &Scenario) -> Result<ChartAxes> {
    let full_colat = (0.0, PI);
    let full_turn = (0.0, TAU);
    Ok(match s {
        Scenario::SphereTwoRings { n, ring_vorticity, polar_vorticities, mu } => {
            let mu_eff = mu - polar_momentum(polar_vorticities);
            let nf = *n as f64;
            let a = mu_eff / nf - ring_vorticity;
            let b = mu_eff / nf + ring_vorticity;
            let u_range = colat_interval(a.min(b), a.max(b), "cos(second-ring colatitude)")?;
            ChartAxes {
                u_name: "theta_1",
                v_name: "phi_2",
                u_range,
                v_range: full_turn,
                v_period: Some(TAU),
            }
        }
        Scenario::SpherePairs { mu } => {
            let u_range = colat_interval(mu / 2.0 - 1.0, mu / 2.0 + 1.0, "cos theta_2")?;
            ChartAxes {
                u_name: "theta_1",
                v_name: "phi_1",
                u_range,
                v_range: full_turn,
                v_period: Some(TAU),
            }
        }
        Scenario::SphereTwoRingsPoles { n, pole_vorticity, mu } => {
            let shift = (2.0 * pole_vorticity - mu) / *n as f64;
            let u_range = colat_interval(-1.0 - shift, 1.0 - shift, "cos(minus-ring colatitude)")?;
            ChartAxes {
                u_name: "theta_1",
                v_name: "phi_1'",
                u_range,
                v_range: full_turn,
                v_period: Some(TAU),
            }
        }
        Scenario::SphereFourRingsPoles { n, pole_vorticity, mu } => {
            let shift = (2.0 * pole_vorticity - mu) / (2.0 * *n as f64);
            let u_range = colat_interval(-1.0 - shift, 1.0 - shift, "cos(minus-ring colatitude)")?;
            ChartAxes {
                u_name: "theta_0",
                v_name: "phi_0",
                u_range,
                v_range: full_turn,
                v_period: Some(TAU),
            }
        }
        Scenario::SphereThreePairs { .. } => ChartAxes {
            u_name: "theta_1",
            v_name: "theta_2",
            u_range: full_colat,
            v_range: full_colat,
            v_period: None,
        },
        Scenario::SphereFourPairsZero => ChartAxes {
            u_name: "theta_3",
            v_name: "phi_3",
            u_range: full_colat,
            v_range: (PI / 2.0, 3.0 * PI / 2.0),
            v_period: None,
        },
        Scenario::PlaneTwoRingsCenter { n, ring_vorticity, mu, .. } => {
            let nf = *n as f64;
            let u_range = if *ring_vorticity > 0.0 {
                if *mu <= 0.0 {
                    return Err(Error::EmptyDomain(format!(
                        "second-ring radius^2 = (2 mu / N - rho_1^2)/lambda needs mu > 0 \
                         when lambda > 0 (mu = {mu})"
                    )));
                }
                (0.0, (2.0 * mu / nf).sqrt())
            } else {
                let lo = (2.0 * mu / nf).max(0.0).sqrt();
                // Unbounded domain; portraits default to a finite window.
                (lo, (2.0 * lo).max(lo + 1.5))
            };
            ChartAxes {
                u_name: "rho_1",
                v_name: "phi_1",
                u_range,
                v_range: full_turn,
                v_period: Some(TAU),
            }
        }
        Scenario::DancingRing { n } => ChartAxes {
            u_name: "theta_1",
            v_name: "phi_1",
            u_range: full_colat,
            v_range: (0.0, PI / *n as f64),
            v_period: None,
        },
        Scenario::StaggeredDoubleRings { n } => ChartAxes {
            u_name: "theta_0",
            v_name: "phi_0",
            u_range: full_colat,
            v_range: (0.0, PI / *n as f64),
            v_period: None,
        },
        Scenario::AlignedDoubleRings { n } => {
            let nf = *n as f64;
            ChartAxes {
                u_name: "theta_0",
                v_name: "phi_0",
                u_range: (0.0, PI / 2.0),
                v_range: (-PI / (2.0 * nf), PI / (2.0 * nf)),
                v_period: None,
            }
        }
        Scenario::DihedralRings { .. } => ChartAxes {
            u_name: "theta_0",
            v_name: "phi_0",
            u_range: full_colat,
            v_range: full_turn,
            v_period: Some(TAU),
        },
        Scenario::PolyhedralOrbit { .. } => ChartAxes {
            u_name: "theta",
            v_name: "phi",
            u_range: full_colat,
            v_range: full_turn,
            v_period: Some(TAU),
        },
    })
}

fn polar_momentum(polar: &[f64]) -> f64 {
    match polar.len() {
        0 => 0.0,
        1 => polar[0],
        _ => polar[0] - polar[1],
    }
}

/// Intersect a cosine interval with [−1, 1] and convert to colatitudes.
fn colat_interval(c_lo: f64, c_hi: f64, what: &str) -> Result<(f64, f64)> {
    let lo = c_lo.max(-1.0);
    let hi = c_hi.min(1.0);
    if lo > hi {
        return Err(Error::EmptyDomain(format!(
            "{what} must lie in [{c_lo:.6}, {c_hi:.6}], which misses [-1, 1] entirely \
             (momentum out of the reachable range)"
        )));
    }
    Ok((hi.acos(), lo.acos()))
}

/// Ring of `n` points at colatitude `colat`, longitudes `base + 2πj/n`.
fn ring(points: &mut Vec<Vector3<f64>>, n: usize, colat: f64, base: f64) {
    for j in 0..n {
        points.push(geom::unit_vector(colat, base + TAU * j as f64 / n as f64));
    }
}

pub(super) fn lift(s: &Scenario, p: ReducedPoint) -> Result<Configuration> {
    match s {
        Scenario::SphereTwoRings { n, ring_vorticity, polar_vorticities, mu } => {
            let n = *n as usize;
            let nf = n as f64;
            let mu_eff = mu - polar_momentum(polar_vorticities);
            let c2 = (mu_eff - nf * p.u.cos()) / (ring_vorticity * nf);
            let theta2 = checked_acos(c2, p, "cos(second-ring colatitude)")?;
            let mut pts = Vec::with_capacity(2 * n + polar_vorticities.len());
            ring(&mut pts, n, p.u, 0.0);
            ring(&mut pts, n, theta2, p.v);
            if !polar_vorticities.is_empty() {
                pts.push(Vector3::z());
            }
            if polar_vorticities.len() == 2 {
                pts.push(-Vector3::z());
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::SpherePairs { mu } => {
            let theta2 = checked_acos(mu / 2.0 - p.u.cos(), p, "cos theta_2")?;
            let x1 = geom::unit_vector(p.u, p.v);
            let x2 = geom::unit_vector(theta2, 0.0);
            let x3 = geom::unit_vector(PI - p.u, p.v);
            let x4 = geom::unit_vector(PI - theta2, 0.0);
            Ok(Configuration::Sphere(vec![x1, x2, x3, x4]))
        }
        Scenario::SphereTwoRingsPoles { n, pole_vorticity, mu } => {
            let n = *n as usize;
            let shift = (2.0 * pole_vorticity - mu) / n as f64;
            let theta_m = checked_acos(shift + p.u.cos(), p, "cos(minus-ring colatitude)")?;
            let mut pts = Vec::with_capacity(2 * n + 2);
            ring(&mut pts, n, p.u, 0.0);
            ring(&mut pts, n, theta_m, p.v);
            if *pole_vorticity != 0.0 {
                pts.push(Vector3::z());
                pts.push(-Vector3::z());
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::SphereFourRingsPoles { n, pole_vorticity, mu } => {
            let n = *n as usize;
            let shift = (2.0 * pole_vorticity - mu) / (2.0 * n as f64);
            let theta_m = checked_acos(shift + p.u.cos(), p, "cos(minus-ring colatitude)")?;
            let mut pts = Vec::with_capacity(4 * n + 2);
            ring(&mut pts, n, p.u, 0.0); // (+) ring carrying u
            ring(&mut pts, n, PI - theta_m, p.v); // (+) mirror partner of the v ring
            ring(&mut pts, n, theta_m, p.v); // (−) ring carrying v
            ring(&mut pts, n, PI - p.u, 0.0); // (−) mirror partner of the u ring
            if *pole_vorticity != 0.0 {
                pts.push(Vector3::z());
                pts.push(-Vector3::z());
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::SphereThreePairs { mu } => {
            let (c1, c2) = (p.u.cos(), p.v.cos());
            let (s1, s2) = (p.u.sin(), p.v.sin());
            let c3 = mu / 2.0 - c1 - c2;
            let theta3 = checked_acos(c3, p, "cos theta_3")?;
            let s3 = checked_sqrt(1.0 - c3 * c3, p, "sin^2 theta_3")?;
            if s1 < 1e-12 || s2 < 1e-12 || s3 < 1e-12 {
                return Err(infeasible(p, "a pair sits at a pole; relative angles degenerate"));
            }
            let phi2 = checked_acos(
                -(s1 * s1 + s2 * s2 - s3 * s3) / (2.0 * s1 * s2),
                p,
                "cos phi_2",
            )?;
            let phi3 = -checked_acos(
                -(s1 * s1 - s2 * s2 + s3 * s3) / (2.0 * s3 * s1),
                p,
                "cos phi_3",
            )?;
            let x1 = geom::unit_vector(p.u, 0.0);
            let x2 = geom::unit_vector(p.v, phi2);
            let x3 = geom::unit_vector(theta3, phi3);
            Ok(Configuration::Sphere(vec![x1, x2, x3, -x1, -x2, -x3]))
        }
        Scenario::SphereFourPairsZero => {
            let (c3, s3) = (p.u.cos(), p.u.sin());
            let a = s3 * p.v.cos();
            if a > -1e-12 {
                return Err(infeasible(
                    p,
                    "sin(theta_3) cos(phi_3) must be negative for a unit fourth vortex",
                ));
            }
            let b = 1.0 + c3;
            let denom = a * a + b * b;
            if denom < 1e-12 {
                return Err(infeasible(p, "degenerate fourth-vortex construction"));
            }
            let c2 = (a * a - b * b) / denom;
            let theta2 = checked_acos(c2, p, "cos theta_2")?;
            let x1 = Vector3::z();
            let x2 = geom::unit_vector(theta2, 0.0);
            let x3 = geom::unit_vector(p.u, p.v);
            let x4 = -(x1 + x2 + x3);
            let norm_defect = (x4.norm() - 1.0).abs();
            if norm_defect > 1e-9 {
                return Err(Error::Numerical(format!(
                    "fourth vortex off the sphere by {norm_defect:.3e}; the colatitude \
                     constraint does not close at (theta_3, phi_3) = ({}, {})",
                    p.u, p.v
                )));
            }
            let x4 = x4.normalize();
            Ok(Configuration::Sphere(vec![x1, x2, x3, x4, -x1, -x2, -x3, -x4]))
        }
        Scenario::PlaneTwoRingsCenter { n, ring_vorticity, center_vorticity, mu } => {
            let n = *n as usize;
            let nf = n as f64;
            if p.u <= 0.0 {
                return Err(infeasible(p, "ring radius must be positive"));
            }
            let rho2_sq = (2.0 * mu / nf - p.u * p.u) / ring_vorticity;
            let rho2 = checked_sqrt(rho2_sq, p, "second-ring radius^2")?;
            if rho2 <= 0.0 {
                return Err(infeasible(p, "second ring collapses onto the center"));
            }
            let mut pts = Vec::with_capacity(2 * n + 1);
            for j in 0..n {
                pts.push(PlanePoint::new(p.u, geom::wrap_angle(p.v + TAU * j as f64 / nf)));
            }
            for j in 0..n {
                pts.push(PlanePoint::new(rho2, geom::wrap_angle(TAU * j as f64 / nf)));
            }
            if *center_vorticity != 0.0 {
                pts.push(PlanePoint::new(0.0, 0.0));
            }
            Ok(Configuration::Plane(pts))
        }
        Scenario::DancingRing { n } => {
            let n = *n as usize;
            let mut pts = Vec::with_capacity(2 * n);
            ring(&mut pts, n, p.u, p.v);
            ring(&mut pts, n, p.u, -p.v);
            Ok(Configuration::Sphere(pts))
        }
        Scenario::StaggeredDoubleRings { n } => {
            let n = *n as usize;
            let nf = n as f64;
            let mut pts = Vec::with_capacity(4 * n);
            // Index-wise families (j = 1..n): +upper, +lower, −upper, −lower.
            for j in 1..=n {
                pts.push(geom::unit_vector(p.u, TAU * j as f64 / nf - p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(PI - p.u, TAU * j as f64 / nf + PI / nf + p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(p.u, TAU * j as f64 / nf + p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(PI - p.u, TAU * j as f64 / nf + PI / nf - p.v));
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::AlignedDoubleRings { n } => {
            let n = *n as usize;
            let nf = n as f64;
            let mut pts = Vec::with_capacity(4 * n);
            for j in 1..=n {
                pts.push(geom::unit_vector(p.u, TAU * j as f64 / nf + p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(PI - p.u, TAU * j as f64 / nf + PI / nf - p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(p.u, TAU * j as f64 / nf + PI / nf - p.v));
            }
            for j in 1..=n {
                pts.push(geom::unit_vector(PI - p.u, TAU * j as f64 / nf + p.v));
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::DihedralRings { n, with_poles } => {
            let n = *n as usize;
            let mut pts = Vec::with_capacity(2 * n + 2);
            ring(&mut pts, n, p.u, p.v);
            ring(&mut pts, n, PI - p.u, -p.v);
            if *with_poles {
                pts.push(Vector3::z());
                pts.push(-Vector3::z());
            }
            Ok(Configuration::Sphere(pts))
        }
        Scenario::PolyhedralOrbit { group } => {
            let mats = group.point_group().elements();
            let seed = geom::unit_vector(p.u, p.v);
            let orbit = signed_orbit_of(&mats, &seed);
            if orbit.len() != mats.len() {
                return Err(infeasible(p, "seed lies on a symmetry axis; orbit degenerates"));
            }
            Ok(Configuration::Sphere(orbit.into_iter().map(|(x, _)| x).collect()))
        }
    }
}

/// Project a configuration to chart coordinates; returns the point and the
/// residual against its own lift.
pub(super) fn project(
    s: &Scenario,
    chart: &Chart,
    config: &Configuration,
) -> Result<(ReducedPoint, f64)> {
    match s {
        Scenario::SphereTwoRings { n, .. } => gauge_project(chart, config, 0, *n as usize),
        Scenario::SpherePairs { .. } => gauge_project(chart, config, 1, 0),
        Scenario::SphereTwoRingsPoles { n, .. } => gauge_project(chart, config, 0, *n as usize),
        Scenario::SphereFourRingsPoles { n, .. } => {
            gauge_project(chart, config, 0, 2 * *n as usize)
        }
        Scenario::SphereThreePairs { .. } => {
            // Coordinates are rotation-invariant; the gauge only enters the
            // residual check. The mirror image shares chart coordinates.
            let (gauged, _) = z_gauge(config, 0)?;
            let u = geom::colatitude(gauged.sphere_points()?.first().unwrap());
            let v = geom::colatitude(&gauged.sphere_points()?[1]);
            let point = ReducedPoint::new(u, v);
            let direct = lift_residual(chart, point, &gauged);
            let reflected = reflect_longitudes(&gauged)?;
            let mirrored = lift_residual(chart, point, &reflected);
            Ok((point, direct.min(mirrored)))
        }
        Scenario::SphereFourPairsZero => {
            let pts = config.sphere_points()?;
            // Full SO(3) gauge: first vortex to the north pole, second to
            // longitude zero.
            let x0 = pts[0];
            let align = if x0.z > 1.0 - 1e-14 {
                Matrix3::identity()
            } else if x0.z < -1.0 + 1e-14 {
                geom::rotation(Vector3::x(), PI)
            } else {
                let axis = x0.cross(&Vector3::z());
                geom::rotation(axis, x0.z.clamp(-1.0, 1.0).acos())
            };
            let aligned = rotate_sphere(config, &align)?;
            let (gauged, _) = z_gauge(&aligned, 1)?;
            let pts = gauged.sphere_points()?;
            let point = ReducedPoint::new(geom::colatitude(&pts[2]), geom::longitude(&pts[2]));
            let res = lift_residual(chart, point, &gauged);
            Ok((point, res))
        }
        Scenario::PlaneTwoRingsCenter { n, .. } => {
            let n = *n as usize;
            let (gauged, _) = z_gauge(config, n)?;
            let pts = gauged.plane_points()?;
            let point = ReducedPoint::new(pts[0].rho, pts[0].phi);
            let res = lift_residual(chart, point, &gauged);
            Ok((point, res))
        }
        Scenario::DancingRing { .. } | Scenario::DihedralRings { .. } => {
            direct_project(chart, config, |colat, lon| ReducedPoint::new(colat, lon))
        }
        Scenario::StaggeredDoubleRings { n } => {
            let step = TAU / *n as f64;
            direct_project(chart, config, move |colat, lon| {
                ReducedPoint::new(colat, step - lon)
            })
        }
        Scenario::AlignedDoubleRings { n } => {
            let step = TAU / *n as f64;
            direct_project(chart, config, move |colat, lon| {
                ReducedPoint::new(colat, geom::angle_difference(lon, step, TAU))
            })
        }
        Scenario::PolyhedralOrbit { group } => {
            let mats = group.point_group().elements();
            let id_index = mats
                .iter()
                .position(|m| geom::matrix_distance(m, &Matrix3::identity()) < 1e-9)
                .expect("identity in group");
            let pts = config.sphere_points()?;
            let x = pts[id_index];
            let point = ReducedPoint::new(geom::colatitude(&x), geom::longitude(&x));
            let res = lift_residual(chart, point, config);
            Ok((point, res))
        }
    }
}

/// Quotient charts: rotate the designated vortex to longitude zero, read
/// u from vortex 0's colatitude and v from the v-carrier's longitude.
fn gauge_project(
    chart: &Chart,
    config: &Configuration,
    gauge_vortex: usize,
    v_vortex: usize,
) -> Result<(ReducedPoint, f64)> {
    let (gauged, _) = z_gauge(config, gauge_vortex)?;
    let pts = gauged.sphere_points()?;
    let u = geom::colatitude(&pts[0]);
    let v = geom::longitude(&pts[v_vortex]);
    let point = ReducedPoint::new(u, v);
    let res = lift_residual(chart, point, &gauged);
    Ok((point, res))
}

/// Direct charts: coordinates read off vortex 0 through `map`.
fn direct_project(
    chart: &Chart,
    config: &Configuration,
    map: impl Fn(f64, f64) -> ReducedPoint,
) -> Result<(ReducedPoint, f64)> {
    let pts = config.sphere_points()?;
    let point = map(geom::colatitude(&pts[0]), geom::longitude(&pts[0]));
    let res = lift_residual(chart, point, config);
    Ok((point, res))
}

fn lift_residual(chart: &Chart, p: ReducedPoint, gauged: &Configuration) -> f64 {
    match chart.lift(p) {
        Ok(l) => configuration_distance(&l, gauged),
        Err(_) => f64::INFINITY,
    }
}

/// Mirror a sphere configuration across the xz-plane (longitudes negated).
fn reflect_longitudes(config: &Configuration) -> Result<Configuration> {
    let pts = config.sphere_points()?;
    Ok(Configuration::Sphere(pts.iter().map(|x| Vector3::new(x.x, -x.y, x.z)).collect()))
}
