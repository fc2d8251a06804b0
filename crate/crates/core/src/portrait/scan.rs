//! One-parameter momentum scans: critical-point counts per μ and the
//! brackets where the counts change.

use super::critical::{find_critical_points, CriticalKind};
use super::field::sample_field;
use super::PortraitOptions;
use crate::charts::{build_chart, Scenario};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanSample {
    pub mu: f64,
    pub centers: usize,
    pub saddles: usize,
    pub degenerate: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BifurcationScan {
    pub samples: Vec<ScanSample>,
    /// (μ_lo, μ_hi) intervals bracketing a change of counts.
    pub changes: Vec<(f64, f64)>,
}

/// Sweep μ over `mu_values`, building the scenario with `family` and
/// counting critical points at the given resolution.
pub fn scan_bifurcation(
    family: impl Fn(f64) -> Scenario,
    mu_values: &[f64],
    resolution: (usize, usize),
) -> Result<BifurcationScan> {
    let mut samples = Vec::with_capacity(mu_values.len());
    let options = PortraitOptions { resolution, ..Default::default() };
    for &mu in mu_values {
        let chart = build_chart(family(mu))?;
        let field = sample_field(&chart, &options)?;
        let (points, _) = find_critical_points(&chart, &field)?;
        let centers = points.iter().filter(|c| c.kind == CriticalKind::Center).count();
        let saddles = points.iter().filter(|c| c.kind == CriticalKind::Saddle).count();
        let degenerate = points.iter().filter(|c| c.kind == CriticalKind::Degenerate).count();
        samples.push(ScanSample { mu, centers, saddles, degenerate });
    }
    let mut changes = Vec::new();
    for w in samples.windows(2) {
        if w[0].centers != w[1].centers || w[0].saddles != w[1].saddles {
            let (a, b) = (w[0].mu, w[1].mu);
            changes.push((a.min(b), a.max(b)));
        }
    }
    Ok(BifurcationScan { samples, changes })
}

/// Evenly spaced inclusive grid helper for scans.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    (0..steps).map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64).collect()
}
