//! Structured-text rendering of the symmetry catalog, diffable against the
//! fixtures in the test suite.

use anyhow::Context;
use std::fmt::Write as _;
use vortex_core::geom::unit_vector;
use vortex_core::symmetry::catalog;
use vortex_core::symmetry::orbit::orbit_of;
use vortex_core::symmetry::point_group::seeds;
use vortex_core::symmetry::{
    classify_point_orbit, normalizer_identity_component, GroupDescriptor, PointGroup,
};
use std::f64::consts::FRAC_PI_2;

/// Full catalog dump: normalizers, isotropy subgroups with fixed-space
/// dimensions on both ledger types, and the point-orbit classification.
pub fn render_all() -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Normalizers of the finite subgroups of SO(3)");
    let _ = writeln!(s, "group | normalizer | identity component");
    for r in catalog::normalizer_rows_so3() {
        let _ = writeln!(s, "{} | {} | {}", r.group, r.normalizer, r.component);
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# Normalizers of the finite subgroups of O(3) not inside SO(3)");
    let _ = writeln!(s, "group | normalizer | identity component");
    for r in catalog::normalizer_rows_o3() {
        let _ = writeln!(s, "{} | {} | {}", r.group, r.normalizer, r.component);
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# Symplectic isotropy subgroups, identical vorticities");
    let _ = writeln!(s, "group | orbit | isotropy | orbit size | dim Fix K | dim normalizer");
    for r in catalog::identical_isotropy_rows() {
        let _ = writeln!(
            s,
            "{} | {} | {} | {} | {} | {}",
            r.group, r.orbit, r.isotropy, r.orbit_size, r.fix_dim, r.normalizer_dim
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# Symplectic subgroups, N vortices (+1) with N vortices (-1)");
    let _ = writeln!(
        s,
        "group | symplectic part | orbit | isotropy | orbit size | dim Fix K | dim normalizer"
    );
    for r in catalog::signed_isotropy_rows() {
        let _ = writeln!(
            s,
            "{} | {} | {} | {} | {} | {} | {}",
            r.group,
            r.symplectic_projection,
            r.orbit,
            r.isotropy,
            r.orbit_size,
            r.fix_dim,
            r.normalizer_dim
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# Point-orbits of the finite subgroups of SO(3)");
    let _ = writeln!(s, "group | orbit | isotropy | size | description");
    for r in catalog::so3_orbit_rows() {
        let _ = writeln!(s, "{} | {} | {} | {} | {}", r.group, r.orbit, r.isotropy, r.size, r.description);
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# Point-orbits of the finite subgroups of O(3) not inside SO(3)");
    let _ = writeln!(s, "group | orbit | isotropy | size | description");
    for r in catalog::o3_orbit_rows() {
        let _ = writeln!(s, "{} | {} | {} | {} | {}", r.group, r.orbit, r.isotropy, r.size, r.description);
    }
    s
}

/// Per-group report: normalizer plus the point-orbits instantiated and
/// classified numerically for the concrete group.
pub fn render_group(name: &str) -> anyhow::Result<String> {
    let group = PointGroup::parse(name).context("unknown group")?;
    let mut s = String::new();
    let _ = writeln!(s, "group: {group} (order {})", group.order());
    let _ = writeln!(s, "normalizer identity component: {}", normalizer_identity_component(&group));
    let mut orbits = Vec::new();
    for seed in orbit_seeds(&group) {
        let mats = group.elements();
        let points = orbit_of(&mats, &seed);
        let label = classify_point_orbit(&GroupDescriptor::plain(group), &points)?;
        if !orbits.iter().any(|o: &String| o == &format!("{}({})", label.label, label.size)) {
            orbits.push(format!("{}({})", label.label, label.size));
        }
    }
    let _ = writeln!(s, "orbits: {}", orbits.join(", "));
    Ok(s)
}

/// Representative seeds covering every orbit stratum of a group.
fn orbit_seeds(group: &PointGroup) -> Vec<nalgebra::Vector3<f64>> {
    let generic = unit_vector(1.03, 0.41);
    let equator_on_axis = unit_vector(FRAC_PI_2, 0.0);
    let equator_generic = unit_vector(FRAC_PI_2, 0.41);
    let on_mirror = unit_vector(1.03, 0.0);
    let north = nalgebra::Vector3::z();
    match group {
        PointGroup::C(_) | PointGroup::Ci | PointGroup::S(_) => vec![generic, north],
        PointGroup::Ch(1) => vec![generic, equator_generic],
        PointGroup::Ch(_) => vec![generic, equator_generic, north],
        PointGroup::Cv(_) => vec![generic, on_mirror, north],
        PointGroup::D(_) => vec![generic, equator_on_axis, north],
        PointGroup::Dh(_) => {
            vec![generic, equator_generic, on_mirror, equator_on_axis, north]
        }
        PointGroup::Dd(n) => {
            let half = std::f64::consts::PI / (2.0 * *n as f64);
            vec![generic, unit_vector(1.03, half), equator_on_axis, north]
        }
        PointGroup::T | PointGroup::O | PointGroup::I => {
            let fam = group.polyhedral_family().unwrap();
            vec![generic, seeds::edge_midpoint(fam), seeds::face_center(fam), seeds::vertex(fam, false)]
        }
        PointGroup::Td => {
            let fam = vortex_core::symmetry::PolyhedralFamily::Tetrahedral;
            vec![
                generic,
                nalgebra::Vector3::new(0.8, 0.8, 0.3).normalize(),
                seeds::edge_midpoint(fam),
                seeds::vertex(fam, false),
            ]
        }
        PointGroup::Th => {
            let fam = vortex_core::symmetry::PolyhedralFamily::Tetrahedral;
            vec![
                generic,
                nalgebra::Vector3::new(0.8, 0.6, 0.0).normalize(),
                seeds::edge_midpoint(fam),
                seeds::vertex(fam, false),
            ]
        }
        PointGroup::Oh => {
            let fam = vortex_core::symmetry::PolyhedralFamily::Octahedral;
            vec![
                generic,
                nalgebra::Vector3::new(0.8, 0.6, 0.0).normalize(),
                nalgebra::Vector3::new(0.6, 0.6, 0.9).normalize(),
                seeds::edge_midpoint(fam),
                seeds::face_center(fam),
                seeds::vertex(fam, false),
            ]
        }
        PointGroup::Ih => {
            let fam = vortex_core::symmetry::PolyhedralFamily::Icosahedral;
            vec![
                generic,
                nalgebra::Vector3::new(0.0, 0.8, 0.6).normalize(),
                seeds::edge_midpoint(fam),
                seeds::face_center(fam),
                seeds::vertex(fam, false),
            ]
        }
    }
}
