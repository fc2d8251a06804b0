//! Phase portraits on reduced charts: sampled energy fields, level-set
//! contours, critical points and separatrices.

mod contour;
mod critical;
mod field;
mod scan;
mod separatrix;

pub use contour::{extract_contours, extract_contours_refined, Contour};
pub use critical::{find_critical_points, refine_critical_point, CriticalKind, CriticalPoint};
pub use field::{sample_field, EnergyField, FieldGrid};
pub use scan::{scan_bifurcation, BifurcationScan, ScanSample};
pub use separatrix::{trace_separatrices, BranchEnd, SaddleGraph, SeparatrixBranch};

use crate::charts::{Chart, ReducedPoint};
use crate::error::Result;

/// Classification of a contour family within a portrait.
#[derive(Debug, Clone, PartialEq)]
pub enum ContourFamily {
    /// Closed contour encircling the given critical point (index into the
    /// portrait's critical-point list).
    AroundCenter(usize),
    /// Closed contour encircling masked (collision/infeasible) cells only.
    AroundMask,
    /// Wraps around the periodic v direction.
    Wrap,
    /// Terminates on the domain or mask boundary.
    BoundaryOpen,
    /// Closed contour enclosing neither a center nor a masked region.
    ClosedOther,
}

/// A computed portrait: the field, its critical points, regular contours with
/// family classification, and the saddle-connection graph.
#[derive(Debug, Clone)]
pub struct Portrait {
    pub field: EnergyField,
    pub critical_points: Vec<CriticalPoint>,
    pub contours: Vec<Contour>,
    pub families: Vec<ContourFamily>,
    pub separatrices: Vec<SeparatrixBranch>,
    pub saddle_graph: SaddleGraph,
    /// Newton seeds that failed to converge (diagnostic only).
    pub discarded_seeds: usize,
}

/// Counts and structure summary of a portrait.
#[derive(Debug, Clone, PartialEq)]
pub struct PortraitSummary {
    pub centers: usize,
    pub saddles: usize,
    pub degenerate: usize,
    pub contour_count: usize,
    pub families_around_centers: usize,
    pub families_around_masks: usize,
    pub wrap_contours: usize,
    pub boundary_contours: usize,
    pub saddle_cycles: Vec<Vec<usize>>,
}

impl Portrait {
    pub fn summary(&self) -> PortraitSummary {
        let centers =
            self.critical_points.iter().filter(|c| c.kind == CriticalKind::Center).count();
        let saddles =
            self.critical_points.iter().filter(|c| c.kind == CriticalKind::Saddle).count();
        let degenerate =
            self.critical_points.iter().filter(|c| c.kind == CriticalKind::Degenerate).count();
        PortraitSummary {
            centers,
            saddles,
            degenerate,
            contour_count: self.contours.len(),
            families_around_centers: self
                .families
                .iter()
                .filter(|f| matches!(f, ContourFamily::AroundCenter(_)))
                .count(),
            families_around_masks: self
                .families
                .iter()
                .filter(|f| matches!(f, ContourFamily::AroundMask))
                .count(),
            wrap_contours: self.families.iter().filter(|f| matches!(f, ContourFamily::Wrap)).count(),
            boundary_contours: self
                .families
                .iter()
                .filter(|f| matches!(f, ContourFamily::BoundaryOpen))
                .count(),
            saddle_cycles: self.saddle_graph.cycles(),
        }
    }
}

/// Options for the full portrait pipeline.
#[derive(Debug, Clone)]
pub struct PortraitOptions {
    pub resolution: (usize, usize),
    /// Explicit contour levels; when empty, `level_count` evenly spaced
    /// levels between the sampled extremes are used.
    pub levels: Vec<f64>,
    pub level_count: usize,
    /// Margin (fraction of the range) trimmed off the chart boundaries.
    pub margin: f64,
    /// Optional override of the sampling window.
    pub u_window: Option<(f64, f64)>,
    pub v_window: Option<(f64, f64)>,
    /// Configurations closer than this to a collision are masked; `None`
    /// scales the threshold with the grid (collision islands stay visible
    /// at any resolution).
    pub mask_distance: Option<f64>,
}

impl Default for PortraitOptions {
    fn default() -> Self {
        Self {
            resolution: (400, 400),
            levels: Vec::new(),
            level_count: 24,
            margin: 1e-4,
            u_window: None,
            v_window: None,
            mask_distance: None,
        }
    }
}

/// Run the complete pipeline: sample, locate and classify critical points,
/// extract contours at the requested levels, trace separatrices, classify
/// contour families.
pub fn compute_portrait(chart: &Chart, options: &PortraitOptions) -> Result<Portrait> {
    let field = sample_field(chart, options)?;
    let (critical_points, discarded_seeds) = find_critical_points(chart, &field)?;

    let levels: Vec<f64> = if options.levels.is_empty() {
        field.spread_levels(options.level_count, &critical_points)
    } else {
        options.levels.clone()
    };

    let mut contours = Vec::new();
    for level in levels {
        contours.extend(extract_contours_refined(&field, level, Some(chart))?);
    }

    let separatrix = trace_separatrices(chart, &field, &critical_points)?;
    let families = contours
        .iter()
        .map(|c| classify_contour(c, &field, &critical_points))
        .collect();

    Ok(Portrait {
        field,
        critical_points,
        contours,
        families,
        separatrices: separatrix.branches,
        saddle_graph: separatrix.graph,
        discarded_seeds,
    })
}

/// Family of a single contour: wrap detection, winding around centers, and
/// masked-region enclosure.
pub fn classify_contour(
    contour: &Contour,
    field: &EnergyField,
    critical_points: &[CriticalPoint],
) -> ContourFamily {
    if contour.wraps {
        return ContourFamily::Wrap;
    }
    if !contour.closed {
        return ContourFamily::BoundaryOpen;
    }
    for (i, cp) in critical_points.iter().enumerate() {
        if cp.kind == CriticalKind::Center && winding_contains(&contour.points, cp.location) {
            return ContourFamily::AroundCenter(i);
        }
    }
    // Enclosing any masked cell center counts as surrounding a collision
    // island.
    for cell in field.masked_cell_centers() {
        if winding_contains(&contour.points, cell) {
            return ContourFamily::AroundMask;
        }
    }
    ContourFamily::ClosedOther
}

/// Even-odd point-in-polygon test.
pub(crate) fn winding_contains(polygon: &[ReducedPoint], p: ReducedPoint) -> bool {
    let mut inside = false;
    let n = polygon.len();
    if n < 3 {
        return false;
    }
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (polygon[i], polygon[j]);
        if ((a.v > p.v) != (b.v > p.v))
            && (p.u < (b.u - a.u) * (p.v - a.v) / (b.v - a.v) + a.u)
        {
            inside = !inside;
        }
        j = i;
    }
    inside
}
