//! Trajectory output: the per-sample CSV (time, all angle pairs, H, J) and
//! the drift summary.

use crate::config::{self, fmt_f64};
use anyhow::Context;
use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use vortex_core::charts::{build_chart, ReducedPoint};
use vortex_core::trajectory::{integrate, invariant_drift, Trajectory};
use vortex_core::{Configuration, MomentumValue, Surface, VortexSystem};

pub fn cmd_integrate(out_dir: &Path, path: &Path) -> anyhow::Result<ExitCode> {
    let doc = config::load(path)?;
    let opts = doc.integrator_options()?;

    // Starting point: a reduced chart point (lifted) or an explicit
    // configuration on a raw system.
    let (system, x0): (VortexSystem, Configuration) = if doc.scenario.is_some() {
        let chart = build_chart(doc.scenario()?)?;
        let x0 = match doc.integrate.initial_point {
            Some([u, v]) => chart.lift(ReducedPoint::new(u, v))?,
            None => match doc.initial_configuration(chart.surface())? {
                Some(cfg) => cfg,
                None => anyhow::bail!(
                    "[integrate] needs 'initial_point' (reduced coordinates) or \
                     'initial_configuration'"
                ),
            },
        };
        (chart.system().clone(), x0)
    } else {
        let system = doc.system()?;
        let x0 = doc
            .initial_configuration(system.surface())?
            .context("[integrate] needs 'initial_configuration' with a [system] section")?;
        (system, x0)
    };

    let trajectory = integrate(&system, &x0, doc.integrate.t_end, &opts)?;
    let (dh, dj) = invariant_drift(&trajectory);

    std::fs::create_dir_all(out_dir)?;
    let prefix = &doc.output.prefix;
    let csv_path = out_dir.join(format!("{prefix}_trajectory.csv"));
    std::fs::write(&csv_path, trajectory_csv(&trajectory, doc.integrate.sample_stride.max(1)))?;
    let drift_path = out_dir.join(format!("{prefix}_drift.txt"));
    let mut drift = String::new();
    let _ = writeln!(drift, "samples: {}", trajectory.len());
    let _ = writeln!(drift, "final time: {}", fmt_f64(trajectory.final_time()));
    let _ = writeln!(drift, "max |dH|: {}", fmt_f64(dh));
    let _ = writeln!(drift, "max |dJ|: {}", fmt_f64(dj));
    std::fs::write(&drift_path, &drift)?;

    println!(
        "integrated to t = {} with {} samples; max |dH| = {dh:.3e}, max |dJ| = {dj:.3e}",
        trajectory.final_time(),
        trajectory.len()
    );
    println!("wrote {}", csv_path.display());
    println!("wrote {}", drift_path.display());
    Ok(ExitCode::SUCCESS)
}

/// Columns: t, per-vortex (colatitude, longitude) or (radius, angle), H,
/// momentum components.
pub fn trajectory_csv(trajectory: &Trajectory, stride: usize) -> String {
    let n = trajectory.configurations.first().map(|c| c.len()).unwrap_or(0);
    let sphere = trajectory
        .configurations
        .first()
        .map(|c| c.surface() == Surface::Sphere)
        .unwrap_or(true);
    let mut header = String::from("t");
    for i in 0..n {
        if sphere {
            let _ = write!(header, ",colat_{i},lon_{i}");
        } else {
            let _ = write!(header, ",rho_{i},phi_{i}");
        }
    }
    header.push_str(if sphere { ",H,J_x,J_y,J_z\n" } else { ",H,J\n" });

    let mut out = header;
    let last = trajectory.len().saturating_sub(1);
    for k in (0..trajectory.len()).filter(|k| k % stride == 0 || *k == last) {
        let mut row = fmt_f64(trajectory.times[k]);
        let cfg = &trajectory.configurations[k];
        match cfg {
            Configuration::Sphere(_) => {
                for i in 0..n {
                    let (colat, lon) = cfg.angles(i).unwrap();
                    let _ = write!(row, ",{},{}", fmt_f64(colat), fmt_f64(lon));
                }
            }
            Configuration::Plane(pts) => {
                for p in pts {
                    let _ = write!(row, ",{},{}", fmt_f64(p.rho), fmt_f64(p.phi));
                }
            }
        }
        let _ = write!(row, ",{}", fmt_f64(trajectory.energies[k]));
        match &trajectory.momenta[k] {
            MomentumValue::Sphere(j) => {
                let _ = write!(row, ",{},{},{}", fmt_f64(j.x), fmt_f64(j.y), fmt_f64(j.z));
            }
            MomentumValue::Plane(j) => {
                let _ = write!(row, ",{}", fmt_f64(*j));
            }
        }
        row.push('\n');
        out.push_str(&row);
    }
    out
}
