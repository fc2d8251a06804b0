//! Finite subgroups of O(3) in Schönflies notation, realized as explicit
//! orthogonal matrices.
//!
//! Conventions: the principal rotation axis is z, the C_h reflection plane is
//! the equatorial plane z = 0, and the secondary twofold axes of the dihedral
//! groups include the x axis. Polyhedral groups use the tetrahedron inscribed
//! in the cube with vertices (±1, ±1, ±1)/√3; the octahedron has vertices on
//! the coordinate axes, and the icosahedron has vertices at the cyclic
//! permutations of (0, ±1, ±φ) with φ the golden ratio.

use crate::error::{Error, Result};
use crate::geom;
use nalgebra::{Matrix3, Vector3};
use std::f64::consts::{PI, TAU};

/// Matching tolerance for recognizing two group matrices as equal.
pub const MATRIX_TOLERANCE: f64 = 1e-9;

/// A finite subgroup of O(3) (the axial families are parametrized by n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointGroup {
    /// Cyclic rotations C_n about z (C_1 is the trivial group).
    C(u32),
    /// C_nv: rotations plus n vertical mirrors.
    Cv(u32),
    /// C_nh: rotations plus the equatorial mirror. `Ch(1)` is C_h.
    Ch(u32),
    /// Inversion group {1, −1}.
    Ci,
    /// S_2n: generated by the rotoreflection σ_h·R_z(π/n).
    S(u32),
    /// Dihedral rotations D_n.
    D(u32),
    /// D_nh: D_n plus the equatorial mirror.
    Dh(u32),
    /// D_nd: D_n plus staggered rotoreflections and diagonal mirrors.
    Dd(u32),
    T,
    Th,
    Td,
    O,
    Oh,
    I,
    Ih,
}

/// The three polyhedral vertex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedralFamily {
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl std::fmt::Display for PointGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointGroup::C(n) => write!(f, "C_{n}"),
            PointGroup::Cv(n) => write!(f, "C_{n}v"),
            PointGroup::Ch(1) => write!(f, "C_h"),
            PointGroup::Ch(n) => write!(f, "C_{n}h"),
            PointGroup::Ci => write!(f, "C_i"),
            PointGroup::S(n) => write!(f, "S_{}", 2 * n),
            PointGroup::D(n) => write!(f, "D_{n}"),
            PointGroup::Dh(n) => write!(f, "D_{n}h"),
            PointGroup::Dd(n) => write!(f, "D_{n}d"),
            PointGroup::T => write!(f, "T"),
            PointGroup::Th => write!(f, "T_h"),
            PointGroup::Td => write!(f, "T_d"),
            PointGroup::O => write!(f, "O"),
            PointGroup::Oh => write!(f, "O_h"),
            PointGroup::I => write!(f, "I"),
            PointGroup::Ih => write!(f, "I_h"),
        }
    }
}

impl PointGroup {
    pub fn order(&self) -> usize {
        match *self {
            PointGroup::C(n) => n as usize,
            PointGroup::Cv(n) | PointGroup::Ch(n) | PointGroup::S(n) | PointGroup::D(n) => {
                2 * n as usize
            }
            PointGroup::Ci => 2,
            PointGroup::Dh(n) | PointGroup::Dd(n) => 4 * n as usize,
            PointGroup::T => 12,
            PointGroup::Th | PointGroup::Td | PointGroup::O => 24,
            PointGroup::Oh => 48,
            PointGroup::I => 60,
            PointGroup::Ih => 120,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            PointGroup::C(n) | PointGroup::Ch(n) | PointGroup::S(n) => n >= 1,
            PointGroup::Cv(n) | PointGroup::D(n) | PointGroup::Dh(n) | PointGroup::Dd(n) => n >= 2,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Group(format!("order parameter of {self} out of range")))
        }
    }

    /// All group matrices in a deterministic canonical order.
    pub fn elements(&self) -> Vec<Matrix3<f64>> {
        self.validate().expect("invalid point group");
        let mut mats = self.raw_elements();
        sort_matrices(&mut mats);
        debug_assert_eq!(mats.len(), self.order(), "element count of {self}");
        mats
    }

    fn raw_elements(&self) -> Vec<Matrix3<f64>> {
        match *self {
            PointGroup::C(n) => rotations_z(n),
            PointGroup::Cv(n) => {
                let mut m = rotations_z(n);
                m.extend((0..n).map(|k| geom::mirror_vertical(PI * k as f64 / n as f64)));
                m
            }
            PointGroup::Ch(n) => {
                let mut m = rotations_z(n);
                let sh = geom::mirror_horizontal();
                m.extend(rotations_z(n).iter().map(|r| sh * r));
                m
            }
            PointGroup::Ci => vec![Matrix3::identity(), geom::inversion()],
            PointGroup::S(n) => {
                let mut m = rotations_z(n);
                let sh = geom::mirror_horizontal();
                m.extend((0..n).map(|k| sh * geom::rot_z(PI * (2 * k + 1) as f64 / n as f64)));
                m
            }
            PointGroup::D(n) => dihedral_rotations(n),
            PointGroup::Dh(n) => {
                let mut m = dihedral_rotations(n);
                let sh = geom::mirror_horizontal();
                m.extend(dihedral_rotations(n).iter().map(|r| sh * r));
                m
            }
            PointGroup::Dd(n) => {
                let mut m = dihedral_rotations(n);
                // Rotoreflections staggered between the rotations, and
                // diagonal mirrors bisecting the twofold axes.
                let sh = geom::mirror_horizontal();
                m.extend((0..n).map(|k| sh * geom::rot_z(PI * (2 * k + 1) as f64 / n as f64)));
                m.extend(
                    (0..n).map(|k| geom::mirror_vertical(PI * (2 * k + 1) as f64 / (2.0 * n as f64))),
                );
                m
            }
            PointGroup::T => closure(&tetrahedral_generators()),
            PointGroup::Th => extend_by(&PointGroup::T.raw_elements(), &geom::inversion()),
            PointGroup::Td => {
                // T plus the improper images of the rotations in O \ T.
                let t = closure(&tetrahedral_generators());
                let o = closure(&octahedral_generators());
                let mut m = t.clone();
                for g in &o {
                    if !contains(&t, g) {
                        m.push(geom::inversion() * g);
                    }
                }
                m
            }
            PointGroup::O => closure(&octahedral_generators()),
            PointGroup::Oh => extend_by(&PointGroup::O.raw_elements(), &geom::inversion()),
            PointGroup::I => closure(&icosahedral_generators()),
            PointGroup::Ih => extend_by(&PointGroup::I.raw_elements(), &geom::inversion()),
        }
    }

    /// A small generating set (used to keep fixed-space rank computations
    /// compact); the closure of the returned matrices is the full group.
    pub fn generating_set(&self) -> Vec<Matrix3<f64>> {
        let all = self.elements();
        let mut gens: Vec<Matrix3<f64>> = Vec::new();
        let mut span = vec![Matrix3::identity()];
        for g in &all {
            if !contains(&span, g) {
                gens.push(*g);
                span = closure(&gens);
                if span.len() == all.len() {
                    break;
                }
            }
        }
        gens
    }

    /// The proper-rotation subgroup.
    pub fn proper_elements(&self) -> Vec<Matrix3<f64>> {
        self.elements().into_iter().filter(|m| m.determinant() > 0.0).collect()
    }

    pub fn polyhedral_family(&self) -> Option<PolyhedralFamily> {
        match self {
            PointGroup::T | PointGroup::Th | PointGroup::Td => Some(PolyhedralFamily::Tetrahedral),
            PointGroup::O | PointGroup::Oh => Some(PolyhedralFamily::Octahedral),
            PointGroup::I | PointGroup::Ih => Some(PolyhedralFamily::Icosahedral),
            _ => None,
        }
    }

    /// Parse names like "C_3", "C3v", "D_4d", "T_h", "O", "S_6".
    pub fn parse(name: &str) -> Result<Self> {
        let s: String = name.trim().chars().filter(|c| *c != '_').collect();
        let err = || Error::Group(format!("unknown point group name '{name}'"));
        let g = match s.as_str() {
            "Ci" => PointGroup::Ci,
            "Ch" => PointGroup::Ch(1),
            "T" => PointGroup::T,
            "Th" => PointGroup::Th,
            "Td" => PointGroup::Td,
            "O" => PointGroup::O,
            "Oh" => PointGroup::Oh,
            "I" => PointGroup::I,
            "Ih" => PointGroup::Ih,
            _ => {
                let head = s.chars().next().ok_or_else(err)?;
                let tail = &s[1..];
                let (digits, suffix): (String, String) =
                    (tail.chars().take_while(|c| c.is_ascii_digit()).collect(), {
                        tail.chars().skip_while(|c| c.is_ascii_digit()).collect()
                    });
                let n: u32 = digits.parse().map_err(|_| err())?;
                match (head, suffix.as_str()) {
                    ('C', "") => PointGroup::C(n),
                    ('C', "v") => PointGroup::Cv(n),
                    ('C', "h") => PointGroup::Ch(n),
                    ('D', "") => PointGroup::D(n),
                    ('D', "h") => PointGroup::Dh(n),
                    ('D', "d") => PointGroup::Dd(n),
                    ('S', "") => {
                        if n % 2 != 0 {
                            return Err(err());
                        }
                        PointGroup::S(n / 2)
                    }
                    _ => return Err(err()),
                }
            }
        };
        g.validate()?;
        Ok(g)
    }
}

fn rotations_z(n: u32) -> Vec<Matrix3<f64>> {
    (0..n).map(|k| geom::rot_z(TAU * k as f64 / n as f64)).collect()
}

fn dihedral_rotations(n: u32) -> Vec<Matrix3<f64>> {
    let mut m = rotations_z(n);
    m.extend((0..n).map(|k| {
        let a = PI * k as f64 / n as f64;
        geom::rotation(Vector3::new(a.cos(), a.sin(), 0.0), PI)
    }));
    m
}

fn tetrahedral_generators() -> Vec<Matrix3<f64>> {
    vec![
        // Twofold about z, threefold about the cube diagonal (1,1,1).
        Matrix3::new(-1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0),
        Matrix3::new(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0),
    ]
}

fn octahedral_generators() -> Vec<Matrix3<f64>> {
    vec![
        // Fourfold about z plus the threefold cube diagonal.
        Matrix3::new(0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0),
        Matrix3::new(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0),
    ]
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

fn icosahedral_generators() -> Vec<Matrix3<f64>> {
    let phi = golden_ratio();
    vec![
        geom::rotation(Vector3::new(0.0, 1.0, phi), TAU / 5.0),
        Matrix3::new(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0),
    ]
}

/// Seed points of the canonical strata for each polyhedral family.
pub mod seeds {
    use super::{golden_ratio, PolyhedralFamily};
    use nalgebra::Vector3;

    pub fn vertex(family: PolyhedralFamily, dual: bool) -> Vector3<f64> {
        let v = match family {
            PolyhedralFamily::Tetrahedral => Vector3::new(1.0, 1.0, 1.0) / 3.0_f64.sqrt(),
            PolyhedralFamily::Octahedral => Vector3::z(),
            PolyhedralFamily::Icosahedral => {
                let phi = golden_ratio();
                Vector3::new(0.0, 1.0, phi).normalize()
            }
        };
        if dual {
            -v
        } else {
            v
        }
    }

    pub fn edge_midpoint(family: PolyhedralFamily) -> Vector3<f64> {
        match family {
            PolyhedralFamily::Tetrahedral => Vector3::x(),
            PolyhedralFamily::Octahedral => Vector3::new(1.0, 1.0, 0.0).normalize(),
            PolyhedralFamily::Icosahedral => Vector3::z(),
        }
    }

    pub fn face_center(family: PolyhedralFamily) -> Vector3<f64> {
        match family {
            PolyhedralFamily::Tetrahedral => -Vector3::new(1.0, 1.0, 1.0) / 3.0_f64.sqrt(),
            PolyhedralFamily::Octahedral => Vector3::new(1.0, 1.0, 1.0) / 3.0_f64.sqrt(),
            PolyhedralFamily::Icosahedral => {
                let phi = golden_ratio();
                let a = Vector3::new(0.0, 1.0, phi);
                let b = Vector3::new(0.0, -1.0, phi);
                let c = Vector3::new(phi, 0.0, 1.0);
                (a + b + c).normalize()
            }
        }
    }
}

pub fn contains(set: &[Matrix3<f64>], m: &Matrix3<f64>) -> bool {
    set.iter().any(|s| geom::matrix_distance(s, m) < MATRIX_TOLERANCE)
}

/// Closure of a generating set under multiplication.
pub fn closure(generators: &[Matrix3<f64>]) -> Vec<Matrix3<f64>> {
    let mut set = vec![Matrix3::identity()];
    let mut frontier = set.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let p = g * f;
                if !contains(&set, &p) && !contains(&next, &p) {
                    next.push(p);
                }
            }
        }
        set.extend(next.iter().cloned());
        frontier = next;
        if set.len() > 360 {
            panic!("group closure did not terminate");
        }
    }
    set
}

fn extend_by(base: &[Matrix3<f64>], extra: &Matrix3<f64>) -> Vec<Matrix3<f64>> {
    let mut m = base.to_vec();
    m.extend(base.iter().map(|b| extra * b));
    m
}

/// Deterministic element order: lexicographic by rounded matrix entries.
pub fn sort_matrices(mats: &mut [Matrix3<f64>]) {
    mats.sort_by(|a, b| {
        for i in 0..3 {
            for j in 0..3 {
                let x = (a[(i, j)] / MATRIX_TOLERANCE).round() as i64;
                let y = (b[(i, j)] / MATRIX_TOLERANCE).round() as i64;
                match x.cmp(&y) {
                    std::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
        }
        std::cmp::Ordering::Equal
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match() {
        let groups = [
            PointGroup::C(3),
            PointGroup::Cv(3),
            PointGroup::Ch(1),
            PointGroup::Ch(4),
            PointGroup::Ci,
            PointGroup::S(3),
            PointGroup::D(2),
            PointGroup::D(5),
            PointGroup::Dh(3),
            PointGroup::Dd(4),
            PointGroup::T,
            PointGroup::Th,
            PointGroup::Td,
            PointGroup::O,
            PointGroup::Oh,
            PointGroup::I,
            PointGroup::Ih,
        ];
        for g in groups {
            let els = g.elements();
            assert_eq!(els.len(), g.order(), "{g}");
            // Orthogonality and closure under product.
            for a in &els {
                assert!(geom::matrix_distance(&(a.transpose() * a), &Matrix3::identity()) < 1e-12);
                assert!(contains(&els, &a.transpose()), "{g}: inverse missing");
            }
            for a in els.iter().take(6) {
                for b in els.iter().take(6) {
                    assert!(contains(&els, &(a * b)), "{g}: product missing");
                }
            }
        }
    }

    #[test]
    fn proper_subgroups() {
        assert_eq!(PointGroup::Td.proper_elements().len(), 12);
        assert_eq!(PointGroup::Th.proper_elements().len(), 12);
        assert_eq!(PointGroup::Oh.proper_elements().len(), 24);
        assert_eq!(PointGroup::Ih.proper_elements().len(), 60);
        assert_eq!(PointGroup::Dd(3).proper_elements().len(), 6);
    }

    #[test]
    fn generating_sets_are_small() {
        for g in [PointGroup::I, PointGroup::Oh, PointGroup::Dd(4), PointGroup::C(6)] {
            let gens = g.generating_set();
            assert!(gens.len() <= 4, "{g} needed {} generators", gens.len());
            assert_eq!(closure(&gens).len(), g.order());
        }
    }

    #[test]
    fn parse_round_trips() {
        for (s, g) in [
            ("C_3", PointGroup::C(3)),
            ("C4v", PointGroup::Cv(4)),
            ("C_h", PointGroup::Ch(1)),
            ("C_2h", PointGroup::Ch(2)),
            ("C_i", PointGroup::Ci),
            ("S_6", PointGroup::S(3)),
            ("D_4d", PointGroup::Dd(4)),
            ("T_d", PointGroup::Td),
            ("I_h", PointGroup::Ih),
        ] {
            assert_eq!(PointGroup::parse(s).unwrap(), g);
        }
        assert!(PointGroup::parse("Q_7").is_err());
        assert!(PointGroup::parse("S_5").is_err());
    }
}
