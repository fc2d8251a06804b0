//! Sampled reduced-energy fields.

use super::critical::CriticalPoint;
use super::PortraitOptions;
use crate::charts::{Chart, ReducedPoint};
use crate::error::{Error, Result};

/// Node layout of a sampled field. Nodes run i = 0..n_u-1 along u and
/// j = 0..n_v-1 along v; when `v_periodic` the last v cell closes onto the
/// first column and `dv · n_v` spans one period.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    pub n_u: usize,
    pub n_v: usize,
    pub u0: f64,
    pub du: f64,
    pub v0: f64,
    pub dv: f64,
    pub v_periodic: bool,
}

impl FieldGrid {
    pub fn u(&self, i: usize) -> f64 {
        self.u0 + self.du * i as f64
    }

    pub fn v(&self, j: usize) -> f64 {
        self.v0 + self.dv * j as f64
    }

    pub fn node(&self, i: usize, j: usize) -> ReducedPoint {
        ReducedPoint::new(self.u(i), self.v(j))
    }

    /// Number of cells along v (periodic grids close the seam).
    pub fn v_cells(&self) -> usize {
        if self.v_periodic {
            self.n_v
        } else {
            self.n_v - 1
        }
    }

    pub fn u_cells(&self) -> usize {
        self.n_u - 1
    }

    /// Column index of the node right of cell column `j`.
    pub fn v_next(&self, j: usize) -> usize {
        if self.v_periodic {
            (j + 1) % self.n_v
        } else {
            j + 1
        }
    }

    pub fn v_period(&self) -> Option<f64> {
        self.v_periodic.then(|| self.dv * self.n_v as f64)
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.du.hypot(self.dv)
    }
}

/// Reduced Hamiltonian sampled on a grid with a feasibility mask.
#[derive(Debug, Clone)]
pub struct EnergyField {
    pub grid: FieldGrid,
    /// Node values; NaN where masked.
    values: Vec<f64>,
    /// True where the node is feasible.
    mask: Vec<bool>,
}

impl EnergyField {
    pub fn new(grid: FieldGrid, values: Vec<f64>, mask: Vec<bool>) -> Self {
        assert_eq!(values.len(), grid.n_u * grid.n_v);
        assert_eq!(mask.len(), values.len());
        Self { grid, values, mask }
    }

    /// Build a field from a closure (used by the synthetic-field tests).
    pub fn from_function(grid: FieldGrid, f: impl Fn(f64, f64) -> Option<f64>) -> Self {
        let mut values = Vec::with_capacity(grid.n_u * grid.n_v);
        let mut mask = Vec::with_capacity(values.capacity());
        for i in 0..grid.n_u {
            for j in 0..grid.n_v {
                match f(grid.u(i), grid.v(j)) {
                    Some(x) => {
                        values.push(x);
                        mask.push(true);
                    }
                    None => {
                        values.push(f64::NAN);
                        mask.push(false);
                    }
                }
            }
        }
        Self { grid, values, mask }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * self.grid.n_v + j
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[self.idx(i, j)]
    }

    pub fn feasible(&self, i: usize, j: usize) -> bool {
        self.mask[self.idx(i, j)]
    }

    /// A cell is usable when all four corner nodes are feasible.
    pub fn cell_feasible(&self, i: usize, j: usize) -> bool {
        let jn = self.grid.v_next(j);
        self.feasible(i, j)
            && self.feasible(i + 1, j)
            && self.feasible(i, jn)
            && self.feasible(i + 1, jn)
    }

    pub fn feasible_fraction(&self) -> f64 {
        let total = self.mask.len() as f64;
        self.mask.iter().filter(|m| **m).count() as f64 / total
    }

    /// Centers of infeasible cells (any corner masked), for enclosure tests.
    pub fn masked_cell_centers(&self) -> Vec<ReducedPoint> {
        let mut out = Vec::new();
        for i in 0..self.grid.u_cells() {
            for j in 0..self.grid.v_cells() {
                if !self.cell_feasible(i, j) {
                    out.push(ReducedPoint::new(
                        self.grid.u(i) + 0.5 * self.grid.du,
                        self.grid.v(j) + 0.5 * self.grid.dv,
                    ));
                }
            }
        }
        out
    }

    /// Evenly spread contour levels between robust percentiles of the
    /// sampled values, nudged off critical energies (level sets at critical
    /// energies are separatrix candidates, not regular contours).
    pub fn spread_levels(&self, count: usize, critical: &[CriticalPoint]) -> Vec<f64> {
        let mut finite: Vec<f64> =
            self.values.iter().copied().filter(|x| x.is_finite()).collect();
        if finite.is_empty() || count == 0 {
            return Vec::new();
        }
        finite.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let q = |frac: f64| finite[((finite.len() - 1) as f64 * frac) as usize];
        let (lo, hi) = (q(0.02), q(0.98));
        if !(hi > lo) {
            return vec![lo];
        }
        let span = hi - lo;
        (0..count)
            .map(|k| {
                let mut level = lo + span * (k as f64 + 0.5) / count as f64;
                for cp in critical {
                    if (level - cp.energy).abs() <= 1e-9 * cp.energy.abs().max(1.0) {
                        level += 1e-6 * span;
                    }
                }
                level
            })
            .collect()
    }
}

/// Sample the reduced Hamiltonian of a chart over its (optionally windowed)
/// domain. Masked nodes are the infeasible/collision ones; errors if nothing
/// is feasible.
pub fn sample_field(chart: &Chart, options: &PortraitOptions) -> Result<EnergyField> {
    let (n_u, n_v) = options.resolution;
    if n_u < 16 || n_v < 16 {
        return Err(Error::Numerical(format!(
            "portrait resolution must be at least 16 per axis, got {n_u}x{n_v}"
        )));
    }
    let axes = chart.axes();
    let (u_lo, u_hi) = options.u_window.unwrap_or(axes.u_range);
    let (v_lo, v_hi) = options.v_window.unwrap_or(axes.v_range);
    let mu = options.margin * (u_hi - u_lo);
    let u0 = u_lo + mu;
    let du = (u_hi - u_lo - 2.0 * mu) / (n_u - 1) as f64;

    // The grid is periodic when it spans the chart's full period exactly.
    let v_periodic = match axes.v_period {
        Some(period) => {
            options.v_window.is_none() && (v_hi - v_lo - period).abs() < 1e-12
        }
        None => false,
    };
    let (v0, dv) = if v_periodic {
        (v_lo, (v_hi - v_lo) / n_v as f64)
    } else {
        let mv = options.margin * (v_hi - v_lo);
        (v_lo + mv, (v_hi - v_lo - 2.0 * mv) / (n_v - 1) as f64)
    };

    let grid = FieldGrid { n_u, n_v, u0, du, v0, dv, v_periodic };
    // Near-collision nodes are masked at grid scale so collision islands
    // stay visible; the dynamical collision threshold itself is far finer.
    let mask_distance = options.mask_distance.unwrap_or(2.0 * grid.cell_diagonal());
    let mut values = vec![f64::NAN; n_u * n_v];
    let mut mask = vec![false; n_u * n_v];
    let mut any = false;
    for i in 0..n_u {
        for j in 0..n_v {
            if let Ok((h, separation)) = chart.evaluate(grid.node(i, j)) {
                if separation >= mask_distance {
                    values[i * n_v + j] = h;
                    mask[i * n_v + j] = true;
                    any = true;
                }
            }
        }
    }
    if !any {
        return Err(Error::EmptyDomain(
            "all sampled cells are infeasible in the requested window".into(),
        ));
    }
    Ok(EnergyField::new(grid, values, mask))
}
