//! Relative-periodicity detection: find the first return of the reduced
//! curve and fit the rotation carrying the initial configuration to the
//! configuration one period later.

use super::Trajectory;
use crate::charts::Chart;
use crate::error::Result;
use crate::geom;
use crate::symmetry::configuration_distance;
use crate::system::{Configuration, PlanePoint};

#[derive(Debug, Clone)]
pub struct RecurrenceOptions {
    /// Chart-space distance that counts as "returned".
    pub return_radius: f64,
    /// Distance the curve must first reach before a return is accepted.
    pub leave_radius: f64,
    /// Tolerance for projecting drifted configurations.
    pub project_tolerance: f64,
}

impl Default for RecurrenceOptions {
    fn default() -> Self {
        Self { return_radius: 2e-2, leave_radius: 5e-2, project_tolerance: 1e-5 }
    }
}

/// Result of a relative-periodicity search. `found` is false when no
/// recurrence occurred within the trajectory; the residual is then infinite.
#[derive(Debug, Clone)]
pub struct RelPeriodReport {
    pub found: bool,
    pub period: f64,
    /// Rotation angle about z carrying x(0) to x(T).
    pub angle: f64,
    /// ‖x(T) − R_z(α)·x(0)‖ (max over vortices).
    pub residual: f64,
}

impl RelPeriodReport {
    fn not_found() -> Self {
        Self { found: false, period: 0.0, angle: 0.0, residual: f64::INFINITY }
    }
}

/// Search the trajectory for the first return of its chart projection to the
/// starting point, refine the period on the dense output, and fit the
/// recurrence rotation about the vertical axis.
pub fn verify_relative_periodicity(
    chart: &Chart,
    trajectory: &Trajectory,
    options: &RecurrenceOptions,
) -> Result<RelPeriodReport> {
    if trajectory.len() < 3 {
        return Ok(RelPeriodReport::not_found());
    }
    let p0 = chart
        .project_with_tolerance(&trajectory.configurations[0], options.project_tolerance)?;
    let v_period = chart.axes().v_period;

    // Chart distance of each sample to the start; take the first local
    // minimum inside the return radius after the curve has left the
    // neighborhood once.
    let mut left = false;
    let mut prev: Option<(usize, f64)> = None;
    let mut descending = false;
    let mut k_ret: Option<usize> = None;
    for (k, config) in trajectory.configurations.iter().enumerate().skip(1) {
        let Ok(p) = chart.project_with_tolerance(config, options.project_tolerance) else {
            continue;
        };
        let du = p.u - p0.u;
        let dv = match v_period {
            Some(t) => geom::angle_difference(p.v, p0.v, t),
            None => p.v - p0.v,
        };
        let d = du.hypot(dv);
        if !left {
            if d > options.leave_radius {
                left = true;
            }
            prev = Some((k, d));
            continue;
        }
        if let Some((kp, dp)) = prev {
            if d >= dp && descending && dp < options.return_radius {
                k_ret = Some(kp);
                break;
            }
            descending = d < dp;
        }
        prev = Some((k, d));
    }
    let Some(k_ret) = k_ret else {
        return Ok(RelPeriodReport::not_found());
    };

    // Refine T by minimizing the full-space rotation-fit residual on the
    // dense output around the detected sample.
    let t_lo = trajectory.times[k_ret.saturating_sub(1)];
    let t_hi = trajectory.times[(k_ret + 1).min(trajectory.len() - 1)];
    let x0 = &trajectory.configurations[0];
    let objective = |t: f64| -> f64 {
        match trajectory.configuration_at(t) {
            Ok(xt) => best_rotation_fit(x0, &xt).1,
            Err(_) => f64::INFINITY,
        }
    };
    let t_star = golden_min(objective, t_lo, t_hi, 1e-12 * t_hi.abs().max(1.0));
    let xt = trajectory.configuration_at(t_star)?;
    let (angle, residual) = best_rotation_fit(x0, &xt);
    Ok(RelPeriodReport { found: true, period: t_star, angle, residual })
}

/// Closed-form optimal rotation angle about z aligning R_z(α)·x0 with xt,
/// and the resulting max-norm residual.
pub fn best_rotation_fit(x0: &Configuration, xt: &Configuration) -> (f64, f64) {
    // maximize Σ_i xt_i · R_z(α) x0_i = A cos α + B sin α + const.
    let (mut a, mut b) = (0.0, 0.0);
    match (x0, xt) {
        (Configuration::Sphere(p0), Configuration::Sphere(p1)) => {
            for (v, w) in p0.iter().zip(p1.iter()) {
                a += v.x * w.x + v.y * w.y;
                b += v.x * w.y - v.y * w.x;
            }
        }
        (Configuration::Plane(p0), Configuration::Plane(p1)) => {
            for (v, w) in p0.iter().zip(p1.iter()) {
                let (vx, vy) = v.cartesian();
                let (wx, wy) = w.cartesian();
                a += vx * wx + vy * wy;
                b += vx * wy - vy * wx;
            }
        }
        _ => return (0.0, f64::INFINITY),
    }
    let angle = b.atan2(a);
    let rotated = rotate_z(x0, angle);
    (angle, configuration_distance(&rotated, xt))
}

fn rotate_z(config: &Configuration, angle: f64) -> Configuration {
    match config {
        Configuration::Sphere(p) => {
            let r = geom::rot_z(angle);
            Configuration::Sphere(p.iter().map(|x| r * x).collect())
        }
        Configuration::Plane(p) => Configuration::Plane(
            p.iter().map(|q| PlanePoint::new(q.rho, geom::wrap_angle(q.phi + angle))).collect(),
        ),
    }
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() < tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
