//! Integration of the full vortex equations of motion and verification of
//! conserved quantities, fixed-space invariance and relative periodicity.

mod dopri;
mod recurrence;

pub use dopri::IntegratorOptions;
pub use recurrence::{
    best_rotation_fit, verify_relative_periodicity, RecurrenceOptions, RelPeriodReport,
};

use crate::dynamics;
use crate::error::{Error, Result};
use crate::symmetry::{fixture_residual, GroupElement};
use crate::system::{Configuration, MomentumValue, PlanePoint, Surface, VortexSystem};
use nalgebra::Vector3;

/// A sampled solution of the equations of motion: strictly increasing times,
/// collision-free configurations, per-sample energy and momentum, and the
/// state derivatives used for dense interpolation.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub system: VortexSystem,
    pub times: Vec<f64>,
    pub configurations: Vec<Configuration>,
    pub energies: Vec<f64>,
    pub momenta: Vec<MomentumValue>,
    pub(crate) states: Vec<Vec<f64>>,
    pub(crate) derivatives: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn final_time(&self) -> f64 {
        *self.times.last().expect("nonempty trajectory")
    }

    pub fn final_configuration(&self) -> &Configuration {
        self.configurations.last().expect("nonempty trajectory")
    }

    /// Configuration at an arbitrary time by cubic Hermite interpolation
    /// between the enclosing samples (sphere states renormalized).
    pub fn configuration_at(&self, t: f64) -> Result<Configuration> {
        let state = self.state_at(t)?;
        Ok(state_to_config(self.system.surface(), &state, true))
    }

    fn state_at(&self, t: f64) -> Result<Vec<f64>> {
        let times = &self.times;
        if self.is_empty() {
            return Err(Error::Numerical("empty trajectory".into()));
        }
        let forward = times[times.len() - 1] >= times[0];
        let (lo, hi) = if forward {
            (times[0], times[times.len() - 1])
        } else {
            (times[times.len() - 1], times[0])
        };
        if t < lo - 1e-12 || t > hi + 1e-12 {
            return Err(Error::Numerical(format!(
                "time {t} outside the integrated range [{lo}, {hi}]"
            )));
        }
        // Locate the bracketing segment.
        let mut k = match times
            .binary_search_by(|x| x.partial_cmp(&t).unwrap().then(std::cmp::Ordering::Less))
        {
            Ok(i) | Err(i) => i.saturating_sub(1),
        };
        if !forward {
            // Reverse-time trajectories store decreasing times.
            k = times.iter().position(|&x| x <= t).unwrap_or(times.len() - 1).saturating_sub(1);
        }
        let k = k.min(times.len().saturating_sub(2));
        let (t0, t1) = (times[k], times[k + 1]);
        let h = t1 - t0;
        if h == 0.0 {
            return Ok(self.states[k].clone());
        }
        let s = (t - t0) / h;
        let (y0, y1) = (&self.states[k], &self.states[k + 1]);
        let (d0, d1) = (&self.derivatives[k], &self.derivatives[k + 1]);
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        let mut out = vec![0.0; y0.len()];
        for i in 0..y0.len() {
            out[i] = h00 * y0[i] + h10 * h * d0[i] + h01 * y1[i] + h11 * h * d1[i];
        }
        Ok(out)
    }
}

/// Flatten a configuration into the integrator state vector.
pub(crate) fn config_to_state(config: &Configuration) -> Vec<f64> {
    match config {
        Configuration::Sphere(points) => {
            points.iter().flat_map(|p| [p.x, p.y, p.z]).collect()
        }
        Configuration::Plane(points) => points
            .iter()
            .flat_map(|p| {
                let (x, y) = p.cartesian();
                [x, y]
            })
            .collect(),
    }
}

pub(crate) fn state_to_config(surface: Surface, state: &[f64], renormalize: bool) -> Configuration {
    match surface {
        Surface::Sphere => Configuration::Sphere(
            state
                .chunks_exact(3)
                .map(|c| {
                    let v = Vector3::new(c[0], c[1], c[2]);
                    if renormalize {
                        v.normalize()
                    } else {
                        v
                    }
                })
                .collect(),
        ),
        Surface::Plane => Configuration::Plane(
            state.chunks_exact(2).map(|c| PlanePoint::from_cartesian(c[0], c[1])).collect(),
        ),
    }
}

pub(crate) fn state_derivative(system: &VortexSystem, state: &[f64]) -> Vec<f64> {
    let config = state_to_config(system.surface(), state, false);
    let vel = dynamics::vector_field_unchecked(system, &config);
    match system.surface() {
        Surface::Sphere => vel.iter().flat_map(|v| [v.x, v.y, v.z]).collect(),
        Surface::Plane => vel.iter().flat_map(|v| [v.x, v.y]).collect(),
    }
}

/// Integrate the equations of motion from `x0` to `t_end` (negative to run
/// backwards) with the embedded Dormand-Prince 5(4) pair. Sphere points are
/// renormalized after every accepted step; integration aborts on collisions.
pub fn integrate(
    system: &VortexSystem,
    x0: &Configuration,
    t_end: f64,
    options: &IntegratorOptions,
) -> Result<Trajectory> {
    x0.validate(system)?;
    dopri::run(system, x0, t_end, options)
}

/// Maximum drift of the conserved quantities along a trajectory:
/// (max |H(t) − H(0)|, max ‖J(t) − J(0)‖).
pub fn invariant_drift(trajectory: &Trajectory) -> (f64, f64) {
    let h0 = trajectory.energies[0];
    let j0 = &trajectory.momenta[0];
    let mut dh: f64 = 0.0;
    let mut dj: f64 = 0.0;
    for (h, j) in trajectory.energies.iter().zip(&trajectory.momenta) {
        dh = dh.max((h - h0).abs());
        dj = dj.max(j.distance(j0));
    }
    (dh, dj)
}

/// Integrate from a point of Fix K and report the largest symmetry residual
/// max_{t,k} ‖act(k, x(t)) − x(t)‖ along the way.
pub fn verify_fixed_space_invariance(
    system: &VortexSystem,
    elements: &[GroupElement],
    x0: &Configuration,
    t_end: f64,
    options: &IntegratorOptions,
) -> Result<f64> {
    for e in elements {
        let r = fixture_residual(e, x0)?;
        if r > 1e-10 {
            return Err(Error::OutsideFixedSpace { residual: r, tolerance: 1e-10 });
        }
    }
    let trajectory = integrate(system, x0, t_end, options)?;
    let mut max_dev: f64 = 0.0;
    for config in &trajectory.configurations {
        for e in elements {
            max_dev = max_dev.max(fixture_residual(e, config)?);
        }
    }
    Ok(max_dev)
}
