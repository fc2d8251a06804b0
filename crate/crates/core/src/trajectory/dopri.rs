//! Embedded Dormand-Prince 5(4) stepper with adaptive step size, sphere
//! renormalization after accepted steps, and collision abort.

use super::{config_to_state, state_derivative, state_to_config, Trajectory};
use crate::dynamics;
use crate::error::{Error, Result};
use crate::system::{Configuration, Surface, VortexSystem};

#[derive(Debug, Clone)]
pub struct IntegratorOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Integration aborts when any pair comes closer than this.
    pub collision_abort: f64,
    pub max_steps: usize,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, collision_abort: 1e-7, max_steps: 20_000_000 }
    }
}

// Butcher tableau of the Dormand-Prince 5(4) pair.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] =
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
// Difference between the 5th- and the embedded 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

pub(super) fn run(
    system: &VortexSystem,
    x0: &Configuration,
    t_end: f64,
    options: &IntegratorOptions,
) -> Result<Trajectory> {
    let dir = if t_end < 0.0 { -1.0 } else { 1.0 };
    let mut t = 0.0;
    let mut y = config_to_state(x0);
    let dim = y.len();
    let mut dy = state_derivative(system, &y);

    let mut trajectory = Trajectory {
        system: system.clone(),
        times: Vec::new(),
        configurations: Vec::new(),
        energies: Vec::new(),
        momenta: Vec::new(),
        states: Vec::new(),
        derivatives: Vec::new(),
    };
    let abort_threshold = options.collision_abort.max(system.collision_threshold());
    push_sample(&mut trajectory, system, t, &y, &dy, abort_threshold)?;
    if t_end == 0.0 {
        return Ok(trajectory);
    }

    // Initial step from the velocity scale.
    let speed = dy.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut h = dir * (1e-3 / (1.0 + speed)).min(t_end.abs() / 10.0);

    let mut k = vec![vec![0.0; dim]; 7];
    let mut steps = 0usize;
    // PI step controller (beta = 0.04) damps error oscillation near close
    // encounters, which dominates the long-time energy drift.
    const BETA: f64 = 0.04;
    const EXPO: f64 = 0.2 - 0.75 * BETA;
    const SAFETY: f64 = 0.8;
    let mut err_old = 1e-4f64;
    loop {
        if (t_end - t) * dir <= 0.0 {
            break;
        }
        if steps >= options.max_steps {
            return Err(Error::IntegrationAbort {
                time: t,
                reason: format!("step budget ({}) exhausted", options.max_steps),
            });
        }
        steps += 1;
        if (t + h - t_end) * dir > 0.0 {
            h = t_end - t;
        }
        if h.abs() < 1e-14 * t.abs().max(1.0) {
            return Err(Error::IntegrationAbort {
                time: t,
                reason: "step size underflow near a singularity".into(),
            });
        }

        // Stages.
        k[0].copy_from_slice(&dy);
        let mut y_stage = vec![0.0; dim];
        for s in 1..7 {
            for i in 0..dim {
                let mut acc = 0.0;
                for (j, ks) in k.iter().enumerate().take(s) {
                    let a = A[s][j];
                    if a != 0.0 {
                        acc += a * ks[i];
                    }
                }
                y_stage[i] = y[i] + h * acc;
            }
            let _ = C;
            k[s] = state_derivative(system, &y_stage);
        }

        // 5th-order solution and embedded error.
        let mut y_new = vec![0.0; dim];
        let mut err_norm_sq = 0.0;
        for i in 0..dim {
            let mut acc = 0.0;
            let mut err = 0.0;
            for s in 0..7 {
                if B5[s] != 0.0 {
                    acc += B5[s] * k[s][i];
                }
                if E[s] != 0.0 {
                    err += E[s] * k[s][i];
                }
            }
            y_new[i] = y[i] + h * acc;
            let scale = options.abs_tol + options.rel_tol * y[i].abs().max(y_new[i].abs());
            let e = h * err / scale;
            err_norm_sq += e * e;
        }
        let err = (err_norm_sq / dim as f64).sqrt();

        if err <= 1.0 {
            // Accept; renormalize sphere points onto the constraint manifold.
            t += h;
            if system.surface() == Surface::Sphere {
                for c in y_new.chunks_exact_mut(3) {
                    let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
                    c[0] /= n;
                    c[1] /= n;
                    c[2] /= n;
                }
            }
            y = y_new.clone();
            dy = state_derivative(system, &y);
            push_sample(&mut trajectory, system, t, &y, &dy, abort_threshold)?;
            let fac = if err == 0.0 {
                1.0 / 5.0
            } else {
                (err.powf(EXPO) / err_old.powf(BETA) / SAFETY).clamp(0.2, 5.0)
            };
            err_old = err.max(1e-4);
            h /= fac;
        } else {
            let fac = (err.powf(EXPO) / SAFETY).max(1.0);
            h /= fac;
        }
    }
    Ok(trajectory)
}

fn push_sample(
    trajectory: &mut Trajectory,
    system: &VortexSystem,
    t: f64,
    y: &[f64],
    dy: &[f64],
    threshold: f64,
) -> Result<()> {
    let config = state_to_config(system.surface(), y, false);
    let min_dist = if config.len() >= 2 { config.min_pair_distance() } else { f64::INFINITY };
    if min_dist < threshold {
        return Err(Error::IntegrationAbort {
            time: t,
            reason: format!(
                "collision: min pair distance {min_dist:.3e} below abort threshold {threshold:.3e}"
            ),
        });
    }
    let h = dynamics::hamiltonian_unchecked(system, &config);
    let j = dynamics::momentum(system, &config)?;
    trajectory.times.push(t);
    trajectory.configurations.push(config);
    trajectory.energies.push(h);
    trajectory.momenta.push(j);
    trajectory.states.push(y.to_vec());
    trajectory.derivatives.push(dy.to_vec());
    Ok(())
}
