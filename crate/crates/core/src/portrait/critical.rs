//! Critical points of the reduced Hamiltonian: grid seeding, Newton
//! refinement on the finite-difference gradient, deduplication and
//! classification by the Hessian determinant.

use super::field::EnergyField;
use crate::charts::{Chart, ReducedPoint};
use crate::error::Result;
use crate::geom;

/// Convergence target for the refined gradient norm.
const NEWTON_TARGET: f64 = 1e-10;

/// Refined points whose gradient exceeds this are discarded.
const ACCEPT_GRADIENT: f64 = 1e-8;

/// Deduplication radius in chart coordinates.
const DEDUP_RADIUS: f64 = 1e-6;

const MAX_NEWTON_ITERATIONS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    Center,
    Saddle,
    Degenerate,
}

impl std::fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CriticalKind::Center => write!(f, "center"),
            CriticalKind::Saddle => write!(f, "saddle"),
            CriticalKind::Degenerate => write!(f, "degenerate"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriticalPoint {
    pub location: ReducedPoint,
    pub kind: CriticalKind,
    pub energy: f64,
    pub hessian_det: f64,
    pub gradient_norm: f64,
    pub hessian: [[f64; 2]; 2],
}

/// Find interior critical points: seed cells where the coarse gradient
/// changes sign in both axes, refine by Newton, deduplicate (modulo the v
/// period) and classify. Returns the points and the discarded-seed count.
pub fn find_critical_points(
    chart: &Chart,
    field: &EnergyField,
) -> Result<(Vec<CriticalPoint>, usize)> {
    let grid = &field.grid;
    let mut found: Vec<CriticalPoint> = Vec::new();
    let mut discarded = 0usize;

    for i in 0..grid.u_cells() {
        for j in 0..grid.v_cells() {
            if !seed_cell(field, i, j) {
                continue;
            }
            let seed = ReducedPoint::new(
                grid.u(i) + 0.5 * grid.du,
                grid.v(j) + 0.5 * grid.dv,
            );
            match refine_critical_point(chart, seed, grid.cell_diagonal()) {
                Some(cp) => {
                    if !push_dedup(&mut found, cp, field) {
                        // duplicate of an already-found point
                    }
                }
                None => discarded += 1,
            }
        }
    }
    found.sort_by(|a, b| {
        (a.location.u, a.location.v)
            .partial_cmp(&(b.location.u, b.location.v))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok((found, discarded))
}

/// Both node-centered partial derivatives change sign across the cell's
/// corners: a candidate zero of the gradient lies nearby.
fn seed_cell(field: &EnergyField, i: usize, j: usize) -> bool {
    if !field.cell_feasible(i, j) {
        return false;
    }
    let jn = field.grid.v_next(j);
    let corners = [(i, j), (i + 1, j), (i, jn), (i + 1, jn)];
    let mut gu = [0.0f64; 4];
    let mut gv = [0.0f64; 4];
    for (k, &(a, b)) in corners.iter().enumerate() {
        let Some((du, dv)) = node_gradient(field, a, b) else {
            return false;
        };
        gu[k] = du;
        gv[k] = dv;
    }
    let straddles = |g: &[f64; 4]| {
        g.iter().fold(f64::INFINITY, |m, x| m.min(*x)) <= 0.0
            && g.iter().fold(f64::NEG_INFINITY, |m, x| m.max(*x)) >= 0.0
    };
    straddles(&gu) && straddles(&gv)
}

/// Central-difference gradient at a node; None at boundary or masked
/// neighborhoods.
fn node_gradient(field: &EnergyField, i: usize, j: usize) -> Option<(f64, f64)> {
    let grid = &field.grid;
    if i == 0 || i + 1 >= grid.n_u {
        return None;
    }
    let (j_prev, j_next) = if grid.v_periodic {
        ((j + grid.n_v - 1) % grid.n_v, (j + 1) % grid.n_v)
    } else {
        if j == 0 || j + 1 >= grid.n_v {
            return None;
        }
        (j - 1, j + 1)
    };
    for &(a, b) in
        &[(i, j), (i - 1, j), (i + 1, j), (i, j_prev), (i, j_next)]
    {
        if !field.feasible(a, b) {
            return None;
        }
    }
    Some((
        field.value(i + 1, j) - field.value(i - 1, j),
        field.value(i, j_next) - field.value(i, j_prev),
    ))
}

/// Newton refinement from a seed. Returns None on divergence, escape from
/// the neighborhood, or a residual above the acceptance gradient.
pub fn refine_critical_point(
    chart: &Chart,
    seed: ReducedPoint,
    cell_scale: f64,
) -> Option<CriticalPoint> {
    let mut p = seed;
    let max_step = 4.0 * cell_scale;
    let escape = 40.0 * cell_scale;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let g = chart.reduced_gradient(p).ok()?;
        let gnorm = g[0].hypot(g[1]);
        if gnorm < NEWTON_TARGET {
            break;
        }
        let h = chart.reduced_hessian(p).ok()?;
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        if det.abs() < 1e-14 * hessian_scale(&h).powi(2).max(1e-300) {
            return None;
        }
        let mut step = [
            -(h[1][1] * g[0] - h[0][1] * g[1]) / det,
            -(-h[1][0] * g[0] + h[0][0] * g[1]) / det,
        ];
        let norm = step[0].hypot(step[1]);
        if norm > max_step {
            step[0] *= max_step / norm;
            step[1] *= max_step / norm;
        }
        // Backtrack into the feasible region if needed.
        let mut scale = 1.0;
        let mut accepted = false;
        for _ in 0..8 {
            let candidate = ReducedPoint::new(p.u + scale * step[0], p.v + scale * step[1]);
            if chart.reduced_gradient(candidate).is_ok() {
                p = candidate;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if !accepted {
            return None;
        }
        let du = p.u - seed.u;
        let dv = match chart.axes().v_period {
            Some(period) => geom::angle_difference(p.v, seed.v, period),
            None => p.v - seed.v,
        };
        if du.hypot(dv) > escape {
            return None;
        }
    }
    let g = chart.reduced_gradient(p).ok()?;
    let gnorm = g[0].hypot(g[1]);
    if gnorm > ACCEPT_GRADIENT {
        return None;
    }
    let h = chart.reduced_hessian(p).ok()?;
    let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    let energy = chart.reduced_hamiltonian(p).ok()?;
    let kind = classify(det, &h);
    Some(CriticalPoint {
        location: normalize_point(chart, p),
        kind,
        energy,
        hessian_det: det,
        gradient_norm: gnorm,
        hessian: h,
    })
}

fn hessian_scale(h: &[[f64; 2]; 2]) -> f64 {
    h.iter().flatten().fold(0.0_f64, |m, x| m.max(x.abs()))
}

fn classify(det: f64, h: &[[f64; 2]; 2]) -> CriticalKind {
    let scale = hessian_scale(h);
    if det.abs() < 1e-10 * scale * scale {
        CriticalKind::Degenerate
    } else if det > 0.0 {
        CriticalKind::Center
    } else {
        CriticalKind::Saddle
    }
}

fn normalize_point(chart: &Chart, p: ReducedPoint) -> ReducedPoint {
    match chart.axes().v_period {
        Some(period) => {
            let lo = chart.axes().v_range.0;
            let mut v = (p.v - lo) % period;
            if v < 0.0 {
                v += period;
            }
            ReducedPoint::new(p.u, lo + v)
        }
        None => p,
    }
}

fn push_dedup(found: &mut Vec<CriticalPoint>, cp: CriticalPoint, field: &EnergyField) -> bool {
    let period = field.grid.v_period();
    for existing in found.iter() {
        let du = existing.location.u - cp.location.u;
        let dv = match period {
            Some(t) => geom::angle_difference(existing.location.v, cp.location.v, t),
            None => existing.location.v - cp.location.v,
        };
        if du.hypot(dv) < DEDUP_RADIUS {
            return false;
        }
    }
    found.push(cp);
    true
}
