//! Separatrix tracing: march the level set at each saddle's energy along its
//! local branch directions and record which saddle (or boundary) each branch
//! reaches, building the saddle-connection graph.

use super::critical::{CriticalKind, CriticalPoint};
use super::field::EnergyField;
use crate::charts::{Chart, ReducedPoint};
use crate::error::Result;
use crate::geom;

/// Where a separatrix branch ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchEnd {
    /// Reached the saddle with this index in the critical-point list.
    Saddle(usize),
    /// Left the feasible region or sampling window.
    Boundary,
    /// Exceeded the step budget without resolution.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct SeparatrixBranch {
    /// Index of the originating saddle in the critical-point list.
    pub from: usize,
    pub end: BranchEnd,
    pub points: Vec<ReducedPoint>,
    pub level: f64,
}

/// Undirected connection graph on the saddles.
#[derive(Debug, Clone, Default)]
pub struct SaddleGraph {
    pub nodes: Vec<usize>,
    /// Deduplicated undirected edges (indices into the critical-point list).
    pub edges: Vec<(usize, usize)>,
}

impl SaddleGraph {
    fn neighbors(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == node {
                    Some(b)
                } else if b == node {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Simple cycles: connected components in which every node has exactly
    /// two distinct neighbors; returned as ordered node lists.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles = Vec::new();
        let mut visited: Vec<usize> = Vec::new();
        for &start in &self.nodes {
            if visited.contains(&start) {
                continue;
            }
            // Walk the component.
            let mut component = vec![start];
            let mut frontier = vec![start];
            while let Some(n) = frontier.pop() {
                for m in self.neighbors(n) {
                    if !component.contains(&m) {
                        component.push(m);
                        frontier.push(m);
                    }
                }
            }
            visited.extend(component.iter().copied());
            if component.len() < 3 {
                continue;
            }
            if component.iter().any(|&n| self.neighbors(n).len() != 2) {
                continue;
            }
            // Ordered traversal around the cycle.
            let mut ordered = vec![component[0]];
            let mut prev = component[0];
            let mut current = self.neighbors(prev)[0];
            while current != component[0] {
                ordered.push(current);
                let nbrs = self.neighbors(current);
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = current;
                current = next;
                if ordered.len() > component.len() {
                    break;
                }
            }
            if ordered.len() == component.len() {
                cycles.push(ordered);
            }
        }
        cycles
    }
}

pub struct SeparatrixResult {
    pub branches: Vec<SeparatrixBranch>,
    pub graph: SaddleGraph,
}

/// Trace all four branches of every saddle.
pub fn trace_separatrices(
    chart: &Chart,
    field: &EnergyField,
    critical_points: &[CriticalPoint],
) -> Result<SeparatrixResult> {
    let saddles: Vec<usize> = critical_points
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kind == CriticalKind::Saddle)
        .map(|(i, _)| i)
        .collect();

    let cell = field.grid.cell_diagonal();
    let capture = 2.5 * cell;
    let step = 0.6 * cell;
    let max_steps = 40 * (field.grid.n_u + field.grid.n_v);
    let period = field.grid.v_period();

    let mut branches = Vec::new();
    let mut graph = SaddleGraph { nodes: saddles.clone(), edges: Vec::new() };

    for &s in &saddles {
        let cp = &critical_points[s];
        let dirs = branch_directions(&cp.hessian);
        for dir in dirs {
            let branch = march_branch(
                chart,
                critical_points,
                &saddles,
                s,
                dir,
                cp.energy,
                step,
                capture,
                max_steps,
                period,
            );
            if let BranchEnd::Saddle(other) = branch.end {
                if other != s {
                    let e = if s < other { (s, other) } else { (other, s) };
                    if !graph.edges.contains(&e) {
                        graph.edges.push(e);
                    }
                }
            }
            branches.push(branch);
        }
    }
    Ok(SeparatrixResult { branches, graph })
}

/// The four unit directions along which the level set leaves a saddle: the
/// null directions of the Hessian quadratic form.
fn branch_directions(h: &[[f64; 2]; 2]) -> Vec<[f64; 2]> {
    // Eigen-decomposition of the symmetric 2x2 Hessian.
    let (a, b, c) = (h[0][0], h[0][1], h[1][1]);
    let tr = a + c;
    let disc = ((a - c) * (a - c) + 4.0 * b * b).sqrt();
    let l1 = 0.5 * (tr + disc);
    let l2 = 0.5 * (tr - disc);
    let eigvec = |l: f64| -> [f64; 2] {
        let v = if b.abs() > 1e-300 { [b, l - a] } else if a - l == 0.0 { [1.0, 0.0] } else { [0.0, 1.0] };
        let n = v[0].hypot(v[1]);
        [v[0] / n, v[1] / n]
    };
    if l1 <= 0.0 || l2 >= 0.0 {
        // Not a saddle numerically; fall back to the eigen directions.
        return vec![eigvec(l1), [-eigvec(l1)[0], -eigvec(l1)[1]], eigvec(l2), [
            -eigvec(l2)[0],
            -eigvec(l2)[1],
        ]];
    }
    let wp = eigvec(l1);
    let wm = eigvec(l2);
    let s = (l1 / -l2).sqrt();
    let mut dirs = Vec::with_capacity(4);
    for (sa, sb) in [(1.0, s), (1.0, -s), (-1.0, s), (-1.0, -s)] {
        let d = [sa * wp[0] + sb * wm[0], sa * wp[1] + sb * wm[1]];
        let n = d[0].hypot(d[1]);
        dirs.push([d[0] / n, d[1] / n]);
    }
    dirs
}

#[allow(clippy::too_many_arguments)]
fn march_branch(
    chart: &Chart,
    critical_points: &[CriticalPoint],
    saddles: &[usize],
    from: usize,
    dir: [f64; 2],
    level: f64,
    step: f64,
    capture: f64,
    max_steps: usize,
    period: Option<f64>,
) -> SeparatrixBranch {
    let start = critical_points[from].location;
    let offset = 2.0 * step;
    let mut p = ReducedPoint::new(start.u + offset * dir[0], start.v + offset * dir[1]);
    let mut points = vec![start];
    let mut prev_dir = dir;
    let mut end = BranchEnd::Exhausted;
    let min_arc = 4.0 * offset;
    let mut arc = offset;

    match correct_to_level(chart, p, level) {
        Some(q) => p = q,
        None => {
            return SeparatrixBranch { from, end: BranchEnd::Boundary, points, level };
        }
    }
    points.push(p);

    for _ in 0..max_steps {
        // Tangent direction: perpendicular to the gradient, oriented to
        // continue the march.
        let Ok(g) = chart.reduced_gradient(p) else {
            end = BranchEnd::Boundary;
            break;
        };
        let gnorm = g[0].hypot(g[1]);
        if gnorm < 1e-14 {
            end = BranchEnd::Exhausted;
            break;
        }
        let mut t = [-g[1] / gnorm, g[0] / gnorm];
        if t[0] * prev_dir[0] + t[1] * prev_dir[1] < 0.0 {
            t = [-t[0], -t[1]];
        }
        prev_dir = t;
        let predictor = ReducedPoint::new(p.u + step * t[0], p.v + step * t[1]);
        let Some(corrected) = correct_to_level(chart, predictor, level) else {
            end = BranchEnd::Boundary;
            break;
        };
        p = corrected;
        arc += step;
        points.push(p);

        if arc > min_arc {
            // Capture by any saddle at a compatible distance.
            let mut captured = None;
            for &s in saddles {
                let loc = critical_points[s].location;
                let du = p.u - loc.u;
                let dv = match period {
                    Some(t) => geom::angle_difference(p.v, loc.v, t),
                    None => p.v - loc.v,
                };
                if du.hypot(dv) < capture {
                    captured = Some(s);
                    break;
                }
            }
            if let Some(s) = captured {
                points.push(critical_points[s].location);
                end = BranchEnd::Saddle(s);
                break;
            }
        }
    }
    SeparatrixBranch { from, end, points, level }
}

/// Pull a point back onto the level set along the gradient.
fn correct_to_level(chart: &Chart, p: ReducedPoint, level: f64) -> Option<ReducedPoint> {
    let mut q = p;
    for _ in 0..6 {
        let h = chart.reduced_hamiltonian(q).ok()?;
        let err = h - level;
        if err.abs() < 1e-10 * level.abs().max(1.0) {
            return Some(q);
        }
        let g = chart.reduced_gradient(q).ok()?;
        let g2 = g[0] * g[0] + g[1] * g[1];
        if g2 < 1e-28 {
            return None;
        }
        q = ReducedPoint::new(q.u - g[0] * err / g2, q.v - g[1] * err / g2);
    }
    let h = chart.reduced_hamiltonian(q).ok()?;
    ((h - level).abs() < 1e-6 * level.abs().max(1.0)).then_some(q)
}
