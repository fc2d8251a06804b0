//! Two-dimensional reduced charts.
//!
//! Each scenario pins a finite symplectic symmetry group K, a vortex system
//! whose fixed space Fix K is (after quotienting the residual rotation where
//! one exists) two-dimensional, and an explicit parametrization: a feasible
//! (u, v) domain, a lift from chart coordinates to full configurations on the
//! momentum level set, and a projection back. The reduced Hamiltonian is the
//! full Hamiltonian evaluated on lifts, so its level sets are the reduced
//! trajectories.

mod scenarios;

pub use scenarios::{PolyhedralGroup, Scenario};

use crate::dynamics;
use crate::error::{Error, Result};
use crate::geom;
use crate::symmetry::{
    self, element_from_spatial, GroupDescriptor, GroupElement,
};
use crate::system::{Configuration, MomentumValue, Surface, VortexSystem};
use nalgebra::{Matrix3, Vector3};

/// Fraction of the axis range used as the finite-difference gradient step.
const GRADIENT_STEP_FRACTION: f64 = 1e-6;

/// Fraction of the axis range used for second-difference Hessian stencils.
const HESSIAN_STEP_FRACTION: f64 = 1e-4;

/// Default residual tolerance for projecting configurations into a chart.
pub const PROJECT_TOLERANCE: f64 = 1e-6;

/// Allowed overshoot of arccos/sqrt arguments treated as rounding dust.
const DOMAIN_DUST: f64 = 1e-12;

/// A point of the reduced chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedPoint {
    pub u: f64,
    pub v: f64,
}

impl ReducedPoint {
    pub fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }
}

/// Coordinate metadata of a chart.
#[derive(Debug, Clone)]
pub struct ChartAxes {
    pub u_name: &'static str,
    pub v_name: &'static str,
    pub u_range: (f64, f64),
    pub v_range: (f64, f64),
    /// Period of the v axis when it is an angle wrapping around the chart.
    pub v_period: Option<f64>,
}

impl ChartAxes {
    pub fn u_width(&self) -> f64 {
        self.u_range.1 - self.u_range.0
    }

    pub fn v_width(&self) -> f64 {
        self.v_range.1 - self.v_range.0
    }

    fn contains(&self, p: ReducedPoint) -> bool {
        let u_ok = p.u > self.u_range.0 && p.u < self.u_range.1;
        let v_ok = match self.v_period {
            Some(_) => true,
            None => p.v > self.v_range.0 && p.v < self.v_range.1,
        };
        u_ok && v_ok
    }
}

/// A built reduced chart: scenario, system, symmetry elements and axes.
#[derive(Debug, Clone)]
pub struct Chart {
    scenario: Scenario,
    system: VortexSystem,
    descriptor: GroupDescriptor,
    elements: Vec<GroupElement>,
    axes: ChartAxes,
    mu: f64,
}

/// Build the chart for a scenario, verifying parameter ranges, a non-empty
/// feasible domain, momentum pinning and K-invariance of the lift.
pub fn build_chart(scenario: Scenario) -> Result<Chart> {
    scenario.validate()?;
    let system = scenarios::system_for(&scenario)?;
    let axes = scenarios::axes_for(&scenario)?;
    let mu = scenarios::reduced_momentum(&scenario);
    let descriptor = scenarios::descriptor_for(&scenario);

    let mut chart = Chart { scenario, system, descriptor, elements: Vec::new(), axes, mu };

    // A generic, well-separated feasible point pins the permutations of the
    // symmetry elements.
    let reference = chart.generic_reference()?;
    let k_matrices = scenarios::k_matrices_for(&chart.scenario);
    let mut elements = Vec::with_capacity(k_matrices.len());
    for m in &k_matrices {
        elements.push(element_from_spatial(&m.clone(), &reference, chart.system.vorticities())?);
    }
    chart.elements = elements;
    chart.self_check(&reference)?;
    Ok(chart)
}

impl Chart {
    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn system(&self) -> &VortexSystem {
        &self.system
    }

    pub fn surface(&self) -> Surface {
        self.system.surface()
    }

    /// Reduced momentum value μ (the z component on the sphere; identically
    /// zero for the direct fixed-space scenarios).
    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn axes(&self) -> &ChartAxes {
        &self.axes
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Expected full-space momentum of every lift.
    pub fn pinned_momentum(&self) -> MomentumValue {
        match self.surface() {
            Surface::Sphere => MomentumValue::Sphere(Vector3::new(0.0, 0.0, self.mu)),
            Surface::Plane => MomentumValue::Plane(self.mu),
        }
    }

    pub fn feasible(&self, p: ReducedPoint) -> bool {
        self.lift(p).is_ok()
    }

    /// Lift a chart point to a full configuration on the momentum level set.
    pub fn lift(&self, p: ReducedPoint) -> Result<Configuration> {
        if !p.u.is_finite() || !p.v.is_finite() {
            return Err(infeasible(p, "coordinates not finite"));
        }
        if !self.axes.contains(p) {
            return Err(infeasible(p, "outside the coordinate ranges"));
        }
        let config = scenarios::lift(&self.scenario, p)?;
        config.validate(&self.system).map_err(|e| match e {
            Error::Collision { min_distance, threshold } => Error::Infeasible {
                u: p.u,
                v: p.v,
                reason: format!(
                    "lift collides: min pair distance {min_distance:.3e} below {threshold:.3e}"
                ),
            },
            other => other,
        })?;
        Ok(config)
    }

    /// Reduced coordinates of a configuration lying in Fix K with momentum
    /// aligned to the chart, gauge-fixed by the residual rotation.
    pub fn project(&self, config: &Configuration) -> Result<ReducedPoint> {
        self.project_with_tolerance(config, PROJECT_TOLERANCE)
    }

    pub fn project_with_tolerance(
        &self,
        config: &Configuration,
        tolerance: f64,
    ) -> Result<ReducedPoint> {
        if config.len() != self.system.count() || config.surface() != self.surface() {
            return Err(Error::InvalidConfiguration(
                "configuration does not match the chart's system".into(),
            ));
        }
        let (point, residual) = scenarios::project(&self.scenario, self, config)?;
        if residual > tolerance {
            return Err(Error::OutsideFixedSpace { residual, tolerance });
        }
        Ok(point)
    }

    /// H restricted to the chart: the full Hamiltonian on the lift.
    pub fn reduced_hamiltonian(&self, p: ReducedPoint) -> Result<f64> {
        let config = self.lift(p)?;
        Ok(dynamics::hamiltonian_unchecked(&self.system, &config))
    }

    /// Energy and minimum pair separation of the lift at one point, sharing
    /// a single lift evaluation.
    pub fn evaluate(&self, p: ReducedPoint) -> Result<(f64, f64)> {
        let config = self.lift(p)?;
        let h = dynamics::hamiltonian_unchecked(&self.system, &config);
        Ok((h, config.min_pair_distance()))
    }

    /// Central finite-difference gradient of the reduced Hamiltonian,
    /// step 1e-6 of the axis ranges. Errors near the feasibility boundary.
    pub fn reduced_gradient(&self, p: ReducedPoint) -> Result<[f64; 2]> {
        let hu = GRADIENT_STEP_FRACTION * self.axes.u_width();
        let hv = GRADIENT_STEP_FRACTION * self.axes.v_width();
        self.gradient_with_steps(p, hu, hv)
    }

    pub fn gradient_with_steps(&self, p: ReducedPoint, hu: f64, hv: f64) -> Result<[f64; 2]> {
        let boundary = |e: Error| match e {
            Error::Infeasible { u, v, reason } => Error::Infeasible {
                u,
                v,
                reason: format!("too close to the feasibility boundary for a gradient: {reason}"),
            },
            other => other,
        };
        let fu_p = self.reduced_hamiltonian(ReducedPoint::new(p.u + hu, p.v)).map_err(boundary)?;
        let fu_m = self.reduced_hamiltonian(ReducedPoint::new(p.u - hu, p.v)).map_err(boundary)?;
        let fv_p = self.reduced_hamiltonian(ReducedPoint::new(p.u, p.v + hv)).map_err(boundary)?;
        let fv_m = self.reduced_hamiltonian(ReducedPoint::new(p.u, p.v - hv)).map_err(boundary)?;
        Ok([(fu_p - fu_m) / (2.0 * hu), (fv_p - fv_m) / (2.0 * hv)])
    }

    /// Finite-difference Hessian (symmetric 2×2).
    pub fn reduced_hessian(&self, p: ReducedPoint) -> Result<[[f64; 2]; 2]> {
        let hu = HESSIAN_STEP_FRACTION * self.axes.u_width();
        let hv = HESSIAN_STEP_FRACTION * self.axes.v_width();
        let f = |u: f64, v: f64| self.reduced_hamiltonian(ReducedPoint::new(u, v));
        let f00 = f(p.u, p.v)?;
        let fpu = f(p.u + hu, p.v)?;
        let fmu = f(p.u - hu, p.v)?;
        let fpv = f(p.u, p.v + hv)?;
        let fmv = f(p.u, p.v - hv)?;
        let fpp = f(p.u + hu, p.v + hv)?;
        let fpm = f(p.u + hu, p.v - hv)?;
        let fmp = f(p.u - hu, p.v + hv)?;
        let fmm = f(p.u - hu, p.v - hv)?;
        let huu = (fpu - 2.0 * f00 + fmu) / (hu * hu);
        let hvv = (fpv - 2.0 * f00 + fmv) / (hv * hv);
        let huv = (fpp - fpm - fmp + fmm) / (4.0 * hu * hv);
        Ok([[huu, huv], [huv, hvv]])
    }

    /// Scale of the reduced Hamiltonian over a coarse sample of the domain,
    /// used to normalize degeneracy thresholds.
    pub fn energy_scale(&self) -> f64 {
        let mut max_abs: f64 = 1.0;
        for p in self.sample_points(25) {
            if let Ok(h) = self.reduced_hamiltonian(p) {
                max_abs = max_abs.max(h.abs());
            }
        }
        max_abs
    }

    /// Deterministic sweep of candidate chart points (not all feasible).
    fn sample_points(&self, count: usize) -> Vec<ReducedPoint> {
        let (ulo, uhi) = self.axes.u_range;
        let (vlo, vhi) = self.axes.v_range;
        // Low-discrepancy-ish irrational stride keeps the samples away from
        // symmetric loci.
        (0..count)
            .map(|k| {
                let a = ((k as f64 + 0.5) * 0.618_033_988_749_894_9).fract();
                let b = ((k as f64 + 0.5) * 0.414_213_562_373_095_1).fract();
                ReducedPoint::new(ulo + a * (uhi - ulo), vlo + b * (vhi - vlo))
            })
            .collect()
    }

    /// A feasible, well-separated reference point for permutation matching.
    fn generic_reference(&self) -> Result<Configuration> {
        let mut best: Option<(f64, Configuration)> = None;
        for p in self.sample_points(60) {
            if let Ok(config) = self.lift(p) {
                let sep = config.min_pair_distance();
                if best.as_ref().map(|(s, _)| sep > *s).unwrap_or(true) {
                    best = Some((sep, config));
                }
            }
        }
        best.map(|(_, c)| c).ok_or_else(|| {
            Error::EmptyDomain(format!(
                "no feasible point found in u ∈ [{:.4}, {:.4}], v ∈ [{:.4}, {:.4}]",
                self.axes.u_range.0, self.axes.u_range.1, self.axes.v_range.0, self.axes.v_range.1
            ))
        })
    }

    /// Momentum pinning and isotropy checks over sampled feasible points.
    fn self_check(&self, reference: &Configuration) -> Result<()> {
        let expected = self.pinned_momentum();
        let mut configs = vec![reference.clone()];
        for p in self.sample_points(12) {
            if let Ok(c) = self.lift(p) {
                configs.push(c);
            }
        }
        for config in &configs {
            let j = dynamics::momentum(&self.system, config)?;
            let dj = j.distance(&expected);
            if dj > 1e-10 {
                return Err(Error::Numerical(format!(
                    "chart momentum self-check failed: ‖J − J_expected‖ = {dj:.3e} \
                     (branch inconsistency in the lift)"
                )));
            }
            for e in &self.elements {
                let r = symmetry::fixture_residual(e, config)?;
                if r > 1e-9 {
                    return Err(Error::Numerical(format!(
                        "chart isotropy self-check failed: residual {r:.3e} under {}",
                        self.descriptor
                    )));
                }
            }
        }
        Ok(())
    }
}

fn infeasible(p: ReducedPoint, reason: &str) -> Error {
    Error::Infeasible { u: p.u, v: p.v, reason: reason.to_string() }
}

/// arccos with the documented dust clamp: arguments within 1e-12 of ±1 are
/// clamped, anything further outside is infeasible.
fn checked_acos(arg: f64, p: ReducedPoint, what: &str) -> Result<f64> {
    if arg.abs() > 1.0 + DOMAIN_DUST {
        return Err(infeasible(
            p,
            &format!("{what} = {arg:.6} falls outside [-1, 1]"),
        ));
    }
    Ok(arg.clamp(-1.0, 1.0).acos())
}

/// sqrt with the same dust rule for slightly negative arguments.
fn checked_sqrt(arg: f64, p: ReducedPoint, what: &str) -> Result<f64> {
    if arg < -DOMAIN_DUST {
        return Err(infeasible(p, &format!("{what} = {arg:.6} is negative")));
    }
    Ok(arg.max(0.0).sqrt())
}

/// Rotate a sphere configuration about z so the designated vortex has
/// longitude zero; returns the rotated configuration and the angle applied.
fn z_gauge(config: &Configuration, designated: usize) -> Result<(Configuration, f64)> {
    match config {
        Configuration::Sphere(points) => {
            let lon = geom::longitude(&points[designated]);
            let rot = geom::rot_z(-lon);
            Ok((Configuration::Sphere(points.iter().map(|x| rot * x).collect()), -lon))
        }
        Configuration::Plane(points) => {
            let lon = points[designated].phi;
            let rotated = points
                .iter()
                .map(|pt| crate::system::PlanePoint::new(pt.rho, geom::wrap_angle(pt.phi - lon)))
                .collect();
            Ok((Configuration::Plane(rotated), -lon))
        }
    }
}

/// Apply a fixed rotation matrix to a sphere configuration.
fn rotate_sphere(config: &Configuration, m: &Matrix3<f64>) -> Result<Configuration> {
    let pts = config.sphere_points()?;
    Ok(Configuration::Sphere(pts.iter().map(|x| m * x).collect()))
}
