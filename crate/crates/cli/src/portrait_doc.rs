//! Portrait output: the contour CSV (the machine contract), the structured
//! summary, and the SVG rendering. Writing then re-reading a document
//! reproduces all counts and coordinates exactly.

use crate::config::fmt_f64;
use anyhow::{bail, Context};
use std::fmt::Write as _;
use std::path::Path;
use vortex_core::charts::{Chart, ReducedPoint};
use vortex_core::portrait::{BranchEnd, ContourFamily, Portrait};

pub struct PortraitDocument {
    pub scenario_kind: String,
    pub group: String,
    pub mu: f64,
    pub resolution: (usize, usize),
    pub u_name: String,
    pub v_name: String,
    pub critical_points: Vec<(String, f64, f64, f64)>, // kind, u, v, energy
    pub contours: Vec<ContourRecord>,
    pub saddle_edges: Vec<(usize, usize)>,
    pub saddle_cycles: Vec<Vec<usize>>,
    pub masked_cells: usize,
    pub discarded_seeds: usize,
}

pub struct ContourRecord {
    pub level: f64,
    pub closed: bool,
    pub wraps: bool,
    pub family: String,
    pub points: Vec<(f64, f64)>,
}

fn family_name(f: &ContourFamily) -> String {
    match f {
        ContourFamily::AroundCenter(i) => format!("around-center({i})"),
        ContourFamily::AroundMask => "around-mask".into(),
        ContourFamily::Wrap => "wrap".into(),
        ContourFamily::BoundaryOpen => "boundary".into(),
        ContourFamily::ClosedOther => "closed-other".into(),
    }
}

impl PortraitDocument {
    pub fn from_portrait(chart: &Chart, portrait: &Portrait) -> Self {
        let contours = portrait
            .contours
            .iter()
            .zip(&portrait.families)
            .map(|(c, f)| ContourRecord {
                level: c.level,
                closed: c.closed,
                wraps: c.wraps,
                family: family_name(f),
                points: c.points.iter().map(|p| (p.u, p.v)).collect(),
            })
            .collect();
        PortraitDocument {
            scenario_kind: chart.scenario().kind_name().to_string(),
            group: chart.group().to_string(),
            mu: chart.mu(),
            resolution: (portrait.field.grid.n_u, portrait.field.grid.n_v),
            u_name: chart.axes().u_name.to_string(),
            v_name: chart.axes().v_name.to_string(),
            critical_points: portrait
                .critical_points
                .iter()
                .map(|c| (c.kind.to_string(), c.location.u, c.location.v, c.energy))
                .collect(),
            contours,
            saddle_edges: portrait.saddle_graph.edges.clone(),
            saddle_cycles: portrait.saddle_graph.cycles(),
            masked_cells: portrait.field.masked_cell_centers().len(),
            discarded_seeds: portrait.discarded_seeds,
        }
    }

    pub fn centers(&self) -> usize {
        self.critical_points.iter().filter(|c| c.0 == "center").count()
    }

    pub fn saddles(&self) -> usize {
        self.critical_points.iter().filter(|c| c.0 == "saddle").count()
    }

    /// `contour_id,level,u,v` rows, one per vertex.
    pub fn contours_csv(&self) -> String {
        let mut out = String::from("contour_id,level,u,v\n");
        for (id, c) in self.contours.iter().enumerate() {
            for (u, v) in &c.points {
                let _ = writeln!(out, "{id},{},{},{}", fmt_f64(c.level), fmt_f64(*u), fmt_f64(*v));
            }
        }
        out
    }

    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "scenario: {}", self.scenario_kind);
        let _ = writeln!(s, "group: {}", self.group);
        let _ = writeln!(s, "mu: {}", fmt_f64(self.mu));
        let _ = writeln!(s, "grid: {} x {}", self.resolution.0, self.resolution.1);
        let _ = writeln!(s, "axes: u = {}, v = {}", self.u_name, self.v_name);
        let _ = writeln!(
            s,
            "critical points: {} ({} centers, {} saddles)",
            self.critical_points.len(),
            self.centers(),
            self.saddles()
        );
        for (kind, u, v, h) in &self.critical_points {
            let _ = writeln!(
                s,
                "  {kind} u={} v={} energy={}",
                fmt_f64(*u),
                fmt_f64(*v),
                fmt_f64(*h)
            );
        }
        let _ = writeln!(s, "saddle connections: {}", self.saddle_edges.len());
        for (a, b) in &self.saddle_edges {
            let _ = writeln!(s, "  {a} -- {b}");
        }
        let _ = writeln!(s, "saddle cycles: {}", self.saddle_cycles.len());
        for cycle in &self.saddle_cycles {
            let names: Vec<String> = cycle.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(s, "  {}", names.join(" -> "));
        }
        let _ = writeln!(s, "contours: {}", self.contours.len());
        for (id, c) in self.contours.iter().enumerate() {
            let _ = writeln!(
                s,
                "  id={id} level={} points={} closed={} wraps={} family={}",
                fmt_f64(c.level),
                c.points.len(),
                c.closed,
                c.wraps,
                c.family
            );
        }
        let _ = writeln!(s, "masked cells: {}", self.masked_cells);
        let _ = writeln!(s, "discarded seeds: {}", self.discarded_seeds);
        s
    }

    pub fn write_files(&self, out_dir: &Path, prefix: &str) -> anyhow::Result<Vec<String>> {
        std::fs::create_dir_all(out_dir)?;
        let csv = out_dir.join(format!("{prefix}_contours.csv"));
        let summary = out_dir.join(format!("{prefix}_summary.txt"));
        let svg = out_dir.join(format!("{prefix}.svg"));
        std::fs::write(&csv, self.contours_csv())?;
        std::fs::write(&summary, self.summary_text())?;
        std::fs::write(&svg, self.svg())?;
        Ok(vec![
            csv.display().to_string(),
            summary.display().to_string(),
            svg.display().to_string(),
        ])
    }

    /// Re-read a written document (summary + contour CSV).
    pub fn read_files(out_dir: &Path, prefix: &str) -> anyhow::Result<PortraitDocument> {
        let summary = std::fs::read_to_string(out_dir.join(format!("{prefix}_summary.txt")))?;
        let csv = std::fs::read_to_string(out_dir.join(format!("{prefix}_contours.csv")))?;
        let mut doc = PortraitDocument {
            scenario_kind: String::new(),
            group: String::new(),
            mu: f64::NAN,
            resolution: (0, 0),
            u_name: String::new(),
            v_name: String::new(),
            critical_points: Vec::new(),
            contours: Vec::new(),
            saddle_edges: Vec::new(),
            saddle_cycles: Vec::new(),
            masked_cells: 0,
            discarded_seeds: 0,
        };
        let mut contour_meta: Vec<(f64, bool, bool, String)> = Vec::new();
        for line in summary.lines() {
            let t = line.trim();
            if let Some(rest) = t.strip_prefix("scenario: ") {
                doc.scenario_kind = rest.to_string();
            } else if let Some(rest) = t.strip_prefix("group: ") {
                doc.group = rest.to_string();
            } else if let Some(rest) = t.strip_prefix("mu: ") {
                doc.mu = rest.parse()?;
            } else if let Some(rest) = t.strip_prefix("grid: ") {
                let parts: Vec<&str> = rest.split(" x ").collect();
                doc.resolution = (parts[0].parse()?, parts[1].parse()?);
            } else if t.starts_with("center ") || t.starts_with("saddle ") || t.starts_with("degenerate ")
            {
                let mut kind = String::new();
                let (mut u, mut v, mut h) = (f64::NAN, f64::NAN, f64::NAN);
                for (i, tok) in t.split_whitespace().enumerate() {
                    if i == 0 {
                        kind = tok.to_string();
                    } else if let Some(x) = tok.strip_prefix("u=") {
                        u = x.parse()?;
                    } else if let Some(x) = tok.strip_prefix("v=") {
                        v = x.parse()?;
                    } else if let Some(x) = tok.strip_prefix("energy=") {
                        h = x.parse()?;
                    }
                }
                doc.critical_points.push((kind, u, v, h));
            } else if let Some(rest) = t.strip_prefix("masked cells: ") {
                doc.masked_cells = rest.parse()?;
            } else if let Some(rest) = t.strip_prefix("discarded seeds: ") {
                doc.discarded_seeds = rest.parse()?;
            } else if t.starts_with("id=") {
                let (mut level, mut closed, mut wraps, mut family) =
                    (f64::NAN, false, false, String::new());
                for tok in t.split_whitespace() {
                    if let Some(x) = tok.strip_prefix("level=") {
                        level = x.parse()?;
                    } else if let Some(x) = tok.strip_prefix("closed=") {
                        closed = x.parse()?;
                    } else if let Some(x) = tok.strip_prefix("wraps=") {
                        wraps = x.parse()?;
                    } else if let Some(x) = tok.strip_prefix("family=") {
                        family = x.to_string();
                    }
                }
                contour_meta.push((level, closed, wraps, family));
            } else if t.contains(" -- ") && !t.contains(':') {
                let parts: Vec<&str> = t.split(" -- ").collect();
                if parts.len() == 2 {
                    doc.saddle_edges.push((parts[0].parse()?, parts[1].parse()?));
                }
            } else if t.contains(" -> ") && !t.contains(':') {
                let cycle: Result<Vec<usize>, _> =
                    t.split(" -> ").map(|x| x.parse::<usize>()).collect();
                if let Ok(c) = cycle {
                    doc.saddle_cycles.push(c);
                }
            }
        }
        // Vertices from the CSV.
        let mut contours: Vec<ContourRecord> = contour_meta
            .into_iter()
            .map(|(level, closed, wraps, family)| ContourRecord {
                level,
                closed,
                wraps,
                family,
                points: Vec::new(),
            })
            .collect();
        for (ln, line) in csv.lines().enumerate() {
            if ln == 0 {
                if line != "contour_id,level,u,v" {
                    bail!("unexpected contour CSV header: {line}");
                }
                continue;
            }
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 4 {
                bail!("bad CSV row {ln}");
            }
            let id: usize = cols[0].parse()?;
            let u: f64 = cols[2].parse()?;
            let v: f64 = cols[3].parse()?;
            contours
                .get_mut(id)
                .with_context(|| format!("contour id {id} out of range"))?
                .points
                .push((u, v));
        }
        doc.contours = contours;
        Ok(doc)
    }

    /// Deterministic SVG rendering: contours in blue, separatrix-level
    /// contours indistinct, centers as filled dots, saddles as crosses,
    /// masked regions shaded.
    pub fn svg(&self) -> String {
        svg_render(self)
    }

    pub fn svg_with_geometry(
        &self,
        u_range: (f64, f64),
        v_range: (f64, f64),
        masked: &[ReducedPoint],
        cell: (f64, f64),
        separatrices: &[(Vec<(f64, f64)>, BranchEnd)],
    ) -> String {
        svg_render_full(self, u_range, v_range, masked, cell, separatrices)
    }
}

fn bounds(doc: &PortraitDocument) -> ((f64, f64), (f64, f64)) {
    let mut u = (f64::INFINITY, f64::NEG_INFINITY);
    let mut v = (f64::INFINITY, f64::NEG_INFINITY);
    for c in &doc.contours {
        for (pu, pv) in &c.points {
            u = (u.0.min(*pu), u.1.max(*pu));
            v = (v.0.min(*pv), v.1.max(*pv));
        }
    }
    for (_, pu, pv, _) in &doc.critical_points {
        u = (u.0.min(*pu), u.1.max(*pu));
        v = (v.0.min(*pv), v.1.max(*pv));
    }
    if !u.0.is_finite() {
        u = (0.0, 1.0);
        v = (0.0, 1.0);
    }
    (u, v)
}

fn svg_render(doc: &PortraitDocument) -> String {
    let (u, v) = bounds(doc);
    svg_render_full(doc, u, v, &[], (0.0, 0.0), &[])
}

fn svg_render_full(
    doc: &PortraitDocument,
    u_range: (f64, f64),
    v_range: (f64, f64),
    masked: &[ReducedPoint],
    cell: (f64, f64),
    separatrices: &[(Vec<(f64, f64)>, BranchEnd)],
) -> String {
    let w = 900.0;
    let h = 700.0;
    let pad = 40.0;
    let sx = |v_coord: f64| {
        pad + (v_coord - v_range.0) / (v_range.1 - v_range.0).max(1e-12) * (w - 2.0 * pad)
    };
    // u increases downward on the page.
    let sy = |u_coord: f64| {
        pad + (u_coord - u_range.0) / (u_range.1 - u_range.0).max(1e-12) * (h - 2.0 * pad)
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r#"<metadata>scenario={} group={} mu={}</metadata>"#,
        doc.scenario_kind, doc.group, fmt_f64(doc.mu)
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    // Masked cells.
    for p in masked {
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#d0d0d0"/>"##,
            sx(p.v - 0.5 * cell.1),
            sy(p.u - 0.5 * cell.0),
            (sx(p.v + 0.5 * cell.1) - sx(p.v - 0.5 * cell.1)).abs(),
            (sy(p.u + 0.5 * cell.0) - sy(p.u - 0.5 * cell.0)).abs()
        );
    }
    // Contours.
    for c in &doc.contours {
        if c.points.len() < 2 {
            continue;
        }
        let path: Vec<String> =
            c.points.iter().map(|(pu, pv)| format!("{:.2},{:.2}", sx(*pv), sy(*pu))).collect();
        let color = if c.family.starts_with("around-center") { "#2060c0" } else { "#4090d0" };
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="{color}" stroke-width="0.7"/>"##,
            path.join(" ")
        );
    }
    // Separatrices.
    for (pts, _end) in separatrices {
        if pts.len() < 2 {
            continue;
        }
        let path: Vec<String> =
            pts.iter().map(|(pu, pv)| format!("{:.2},{:.2}", sx(*pv), sy(*pu))).collect();
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#c03020" stroke-width="1.2"/>"##,
            path.join(" ")
        );
    }
    // Critical points.
    for (kind, pu, pv, _) in &doc.critical_points {
        let (x, y) = (sx(*pv), sy(*pu));
        match kind.as_str() {
            "center" => {
                let _ = writeln!(s, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#106010"/>"##);
            }
            "saddle" => {
                let _ = writeln!(
                    s,
                    r##"<path d="M {a:.2} {b:.2} L {c:.2} {d:.2} M {a:.2} {d:.2} L {c:.2} {b:.2}" stroke="#a01010" stroke-width="2"/>"##,
                    a = x - 4.0,
                    b = y - 4.0,
                    c = x + 4.0,
                    d = y + 4.0
                );
            }
            _ => {
                let _ = writeln!(
                    s,
                    r##"<rect x="{:.2}" y="{:.2}" width="6" height="6" fill="#806000"/>"##,
                    x - 3.0,
                    y - 3.0
                );
            }
        }
    }
    let _ = writeln!(
        s,
        r#"<text x="{pad}" y="20" font-family="monospace" font-size="13">{} (group {}, mu = {:.6})</text>"#,
        doc.scenario_kind, doc.group, doc.mu
    );
    let _ = writeln!(s, "</svg>");
    s
}
