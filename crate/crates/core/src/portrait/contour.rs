//! Marching-squares contour extraction with optional root-refined vertices.
//!
//! Crossing points are first placed by linear interpolation between node
//! values; when a chart is supplied each crossing is then refined by a 1-D
//! root solve of the true reduced Hamiltonian along its grid edge, so emitted
//! vertices satisfy |H - level| well below the contour-fidelity tolerance.

use super::field::EnergyField;
use crate::charts::{Chart, ReducedPoint};
use crate::error::Result;
use std::collections::HashMap;

/// Target |H - level| for refined vertices.
const REFINE_TOLERANCE_REL: f64 = 1e-9;

/// A level-set polyline.
#[derive(Debug, Clone)]
pub struct Contour {
    pub level: f64,
    pub points: Vec<ReducedPoint>,
    /// First point equals the last one (up to a v period on wrapping loops).
    pub closed: bool,
    /// Closed around the periodic v direction; the emitted v coordinates are
    /// unwrapped continuously, so first and last differ by one period.
    pub wraps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum EdgeDir {
    U,
    V,
}

/// Grid edge between two adjacent nodes; `i`, `j` address the lower node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct EdgeKey {
    i: usize,
    j: usize,
    dir: EdgeDir,
}

/// Extract contours by plain marching squares (linear interpolation only).
pub fn extract_contours(field: &EnergyField, level: f64) -> Result<Vec<Contour>> {
    extract_contours_refined(field, level, None)
}

/// Extract contours; with a chart, refine every vertex onto the true level.
pub fn extract_contours_refined(
    field: &EnergyField,
    level: f64,
    chart: Option<&Chart>,
) -> Result<Vec<Contour>> {
    if !level.is_finite() {
        return Err(crate::error::Error::Numerical("contour level must be finite".into()));
    }
    let grid = &field.grid;

    // Segments per feasible cell, keyed by the edges they join.
    let mut adjacency: HashMap<EdgeKey, Vec<EdgeKey>> = HashMap::new();
    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for i in 0..grid.u_cells() {
        for j in 0..grid.v_cells() {
            if !field.cell_feasible(i, j) {
                continue;
            }
            for (a, b) in cell_segments(field, level, i, j) {
                adjacency.entry(a).or_default().push(b);
                adjacency.entry(b).or_default().push(a);
                segments.push((a, b));
            }
        }
    }
    if segments.is_empty() {
        return Ok(Vec::new());
    }

    // Crossing coordinates per edge, shared by the adjacent cells.
    let mut coords: HashMap<EdgeKey, ReducedPoint> = HashMap::new();
    for &(a, b) in &segments {
        for key in [a, b] {
            coords.entry(key).or_insert_with(|| edge_crossing(field, level, key, chart));
        }
    }

    // Walk chains: open ones start at degree-1 edges, the rest are loops.
    let mut used: HashMap<(EdgeKey, EdgeKey), bool> = HashMap::new();
    for &(a, b) in &segments {
        used.insert(ordered(a, b), false);
    }
    let mut contours = Vec::new();
    let mut starts: Vec<EdgeKey> = adjacency
        .iter()
        .filter(|(_, nbrs)| nbrs.len() == 1)
        .map(|(k, _)| *k)
        .collect();
    starts.sort_by_key(|k| (k.i, k.j, k.dir == EdgeDir::V));
    for start in starts {
        if let Some(chain) = walk_chain(start, &adjacency, &mut used) {
            contours.push(build_contour(field, level, &chain, &coords, false));
        }
    }
    // Remaining unused segments belong to closed loops.
    let mut loop_starts: Vec<EdgeKey> = adjacency.keys().copied().collect();
    loop_starts.sort_by_key(|k| (k.i, k.j, k.dir == EdgeDir::V));
    for start in loop_starts {
        if adjacency[&start].iter().any(|n| !used[&ordered(start, *n)]) {
            if let Some(chain) = walk_chain(start, &adjacency, &mut used) {
                contours.push(build_contour(field, level, &chain, &coords, true));
            }
        }
    }
    Ok(contours)
}

fn ordered(a: EdgeKey, b: EdgeKey) -> (EdgeKey, EdgeKey) {
    if (a.i, a.j, a.dir == EdgeDir::V) <= (b.i, b.j, b.dir == EdgeDir::V) {
        (a, b)
    } else {
        (b, a)
    }
}

fn walk_chain(
    start: EdgeKey,
    adjacency: &HashMap<EdgeKey, Vec<EdgeKey>>,
    used: &mut HashMap<(EdgeKey, EdgeKey), bool>,
) -> Option<Vec<EdgeKey>> {
    let mut chain = vec![start];
    let mut current = start;
    loop {
        let next = adjacency[&current]
            .iter()
            .copied()
            .find(|n| !used[&ordered(current, *n)]);
        match next {
            Some(n) => {
                *used.get_mut(&ordered(current, n)).unwrap() = true;
                chain.push(n);
                current = n;
                if n == start {
                    break;
                }
            }
            None => break,
        }
    }
    if chain.len() < 2 {
        None
    } else {
        Some(chain)
    }
}

fn build_contour(
    field: &EnergyField,
    level: f64,
    chain: &[EdgeKey],
    coords: &HashMap<EdgeKey, ReducedPoint>,
    closed: bool,
) -> Contour {
    let period = field.grid.v_period();
    let mut points: Vec<ReducedPoint> = Vec::with_capacity(chain.len());
    for key in chain {
        let mut p = coords[key];
        if let (Some(period), Some(prev)) = (period, points.last()) {
            // Unwrap v across the periodic seam.
            let mut dv = p.v - prev.v;
            while dv > period / 2.0 {
                dv -= period;
            }
            while dv < -period / 2.0 {
                dv += period;
            }
            p.v = prev.v + dv;
        }
        points.push(p);
    }
    let wraps = match (closed, period, points.first(), points.last()) {
        (true, Some(period), Some(first), Some(last)) => {
            (last.v - first.v).abs() > period / 2.0
        }
        _ => false,
    };
    if closed && !wraps && !points.is_empty() {
        let first = points[0];
        *points.last_mut().unwrap() = first;
    }
    Contour { level, points, closed, wraps }
}

/// Segment endpoints (pairs of crossed edges) produced by one cell.
fn cell_segments(field: &EnergyField, level: f64, i: usize, j: usize) -> Vec<(EdgeKey, EdgeKey)> {
    let grid = &field.grid;
    let jn = grid.v_next(j);
    let a = field.value(i, j) > level;
    let b = field.value(i + 1, j) > level;
    let c = field.value(i + 1, jn) > level;
    let d = field.value(i, jn) > level;
    let case = (a as usize) | (b as usize) << 1 | (c as usize) << 2 | (d as usize) << 3;

    let ab = EdgeKey { i, j, dir: EdgeDir::U };
    let dc = EdgeKey { i, j: jn, dir: EdgeDir::U };
    let ad = EdgeKey { i, j, dir: EdgeDir::V };
    let bc = EdgeKey { i: i + 1, j, dir: EdgeDir::V };

    match case {
        0 | 15 => vec![],
        1 | 14 => vec![(ab, ad)],
        2 | 13 => vec![(ab, bc)],
        3 | 12 => vec![(ad, bc)],
        4 | 11 => vec![(bc, dc)],
        6 | 9 => vec![(ab, dc)],
        7 | 8 => vec![(ad, dc)],
        5 | 10 => {
            // Saddle cell: resolve with the bilinear center sample.
            let center = 0.25
                * (field.value(i, j)
                    + field.value(i + 1, j)
                    + field.value(i + 1, jn)
                    + field.value(i, jn));
            let center_inside = center > level;
            let diag_a_inside = case == 5;
            if center_inside == diag_a_inside {
                // Corners A and C connect through the middle.
                vec![(ab, bc), (dc, ad)]
            } else {
                vec![(ab, ad), (bc, dc)]
            }
        }
        _ => unreachable!(),
    }
}

/// Crossing coordinate on a grid edge: linear interpolation, then an optional
/// bracketed root solve on the true reduced Hamiltonian.
fn edge_crossing(
    field: &EnergyField,
    level: f64,
    key: EdgeKey,
    chart: Option<&Chart>,
) -> ReducedPoint {
    let grid = &field.grid;
    let (p0, p1, f0, f1) = match key.dir {
        EdgeDir::U => (
            grid.node(key.i, key.j),
            grid.node(key.i + 1, key.j),
            field.value(key.i, key.j),
            field.value(key.i + 1, key.j),
        ),
        EdgeDir::V => {
            let jn = grid.v_next(key.j);
            (
                grid.node(key.i, key.j),
                ReducedPoint::new(grid.u(key.i), grid.v(key.j) + grid.dv),
                field.value(key.i, key.j),
                field.value(key.i, jn),
            )
        }
    };
    let t_linear = if (f1 - f0).abs() < f64::MIN_POSITIVE {
        0.5
    } else {
        ((level - f0) / (f1 - f0)).clamp(0.0, 1.0)
    };
    let at = |t: f64| ReducedPoint::new(p0.u + t * (p1.u - p0.u), p0.v + t * (p1.v - p0.v));

    let Some(chart) = chart else {
        return at(t_linear);
    };
    // Bracketed secant/bisection on g(t) = H(t) - level; the node values are
    // true chart samples so [0, 1] brackets a root whenever signs differ.
    let tol = REFINE_TOLERANCE_REL * level.abs().max(1.0);
    let eval = |t: f64| chart.reduced_hamiltonian(at(t)).ok().map(|h| h - level);
    let (mut ta, mut ga) = (0.0, f0 - level);
    let (mut tb, mut gb) = (1.0, f1 - level);
    if ga * gb > 0.0 {
        return at(t_linear);
    }
    let mut t_best = t_linear;
    let mut g_best = f64::INFINITY;
    for _ in 0..60 {
        // Secant proposal, safeguarded into the bracket.
        let mut t = if (gb - ga).abs() > f64::MIN_POSITIVE {
            ta - ga * (tb - ta) / (gb - ga)
        } else {
            0.5 * (ta + tb)
        };
        if !(t > ta && t < tb) {
            t = 0.5 * (ta + tb);
        }
        let Some(g) = eval(t) else {
            // Rare masked sliver inside a feasible-cornered edge: fall back
            // to plain bisection steps on the surviving side.
            let t_mid = 0.5 * (ta + tb);
            match eval(t_mid) {
                Some(g_mid) => {
                    if ga * g_mid <= 0.0 {
                        tb = t_mid;
                        gb = g_mid;
                    } else {
                        ta = t_mid;
                        ga = g_mid;
                    }
                    continue;
                }
                None => break,
            }
        };
        if g.abs() < g_best {
            g_best = g.abs();
            t_best = t;
        }
        if g.abs() <= tol {
            return at(t);
        }
        if ga * g <= 0.0 {
            tb = t;
            gb = g;
        } else {
            ta = t;
            ga = g;
        }
        if tb - ta < 1e-15 {
            break;
        }
    }
    if g_best.is_finite() {
        at(t_best)
    } else {
        at(t_linear)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::portrait::field::FieldGrid;

    fn synthetic_grid(n: usize, lo: f64, hi: f64) -> FieldGrid {
        FieldGrid {
            n_u: n,
            n_v: n,
            u0: lo,
            du: (hi - lo) / (n - 1) as f64,
            v0: lo,
            dv: (hi - lo) / (n - 1) as f64,
            v_periodic: false,
        }
    }

    #[test]
    fn circle_level_set() {
        let grid = synthetic_grid(101, -2.0, 2.0);
        let field = EnergyField::from_function(grid, |u, v| Some(u * u + v * v));
        let contours = extract_contours(&field, 1.0).unwrap();
        assert_eq!(contours.len(), 1);
        let c = &contours[0];
        assert!(c.closed && !c.wraps);
        let cell_diag = field.grid.cell_diagonal();
        for p in &c.points {
            let r = (p.u * p.u + p.v * p.v).sqrt();
            assert!((r - 1.0).abs() < cell_diag, "radial deviation {}", (r - 1.0).abs());
        }
        // The polyline surrounds the origin.
        assert!(crate::portrait::winding_contains(&c.points, ReducedPoint::new(0.0, 0.0)));
    }

    #[test]
    fn level_below_minimum_is_empty() {
        let grid = synthetic_grid(64, -2.0, 2.0);
        let field = EnergyField::from_function(grid, |u, v| Some(u * u + v * v));
        assert!(extract_contours(&field, -1.0).unwrap().is_empty());
    }

    #[test]
    fn masked_cells_never_enter_contours() {
        let grid = synthetic_grid(64, -2.0, 2.0);
        // Mask a quarter plane; contours must stop at its boundary.
        let field = EnergyField::from_function(grid, |u, v| {
            if u > 0.0 && v > 0.0 {
                None
            } else {
                Some(u * u + v * v)
            }
        });
        let contours = extract_contours(&field, 1.0).unwrap();
        assert!(!contours.is_empty());
        for c in &contours {
            assert!(!c.closed);
            for p in &c.points {
                assert!(!(p.u > 1e-9 && p.v > 1e-9), "vertex inside mask: {p:?}");
            }
        }
    }

    #[test]
    fn periodic_wrap_detection() {
        let n = 48;
        let grid = FieldGrid {
            n_u: n,
            n_v: n,
            u0: 0.1,
            du: 0.8 / (n - 1) as f64,
            v0: 0.0,
            dv: std::f64::consts::TAU / n as f64,
            v_periodic: true,
        };
        // Depends on u only: level sets are horizontal wrap-around lines.
        let field = EnergyField::from_function(grid, |u, _| Some(u));
        let contours = extract_contours(&field, 0.5).unwrap();
        assert_eq!(contours.len(), 1);
        assert!(contours[0].closed && contours[0].wraps);
        let first = contours[0].points.first().unwrap();
        let last = contours[0].points.last().unwrap();
        assert!((last.v - first.v).abs() > 6.0);
    }
}
