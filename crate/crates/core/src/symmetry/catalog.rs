//! Catalog data: normalizers of the finite subgroups of O(3), the isotropy
//! subgroups available on identical and on ± vorticity ledgers with their
//! fixed-space dimensions, and the point-orbit classification tables.
//!
//! The rows are the reference data the rest of the crate is cross-checked
//! against (numeric instantiations of every row live in the test suite), and
//! they feed the catalog dump of the command-line tool.

use super::point_group::PointGroup;

/// Identity component of the normalizer N_{O(3)}(K).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizerComponent {
    Trivial,
    SO2,
    SO3,
}

impl std::fmt::Display for NormalizerComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormalizerComponent::Trivial => write!(f, "1"),
            NormalizerComponent::SO2 => write!(f, "SO(2)"),
            NormalizerComponent::SO3 => write!(f, "SO(3)"),
        }
    }
}

/// Identity component of the normalizer. Only the axial rotation groups, the
/// equatorial-mirror groups and the inversion group admit a continuous
/// normalizer; everything else is rigid.
pub fn normalizer_identity_component(group: &PointGroup) -> NormalizerComponent {
    match group {
        PointGroup::C(_) | PointGroup::Ch(_) => NormalizerComponent::SO2,
        PointGroup::Ci => NormalizerComponent::SO3,
        _ => NormalizerComponent::Trivial,
    }
}

/// Dimension of the identity component (0 or 1 or 3).
pub fn normalizer_dimension(group: &PointGroup) -> usize {
    match normalizer_identity_component(group) {
        NormalizerComponent::Trivial => 0,
        NormalizerComponent::SO2 => 1,
        NormalizerComponent::SO3 => 3,
    }
}

/// One row of the normalizer catalog.
pub struct NormalizerRow {
    pub group: &'static str,
    pub normalizer: &'static str,
    pub component: &'static str,
}

/// Normalizers inside SO(3).
pub fn normalizer_rows_so3() -> Vec<NormalizerRow> {
    vec![
        NormalizerRow { group: "C_n", normalizer: "D_inf", component: "SO(2)" },
        NormalizerRow { group: "D_2", normalizer: "O", component: "1" },
        NormalizerRow { group: "D_n, n > 2", normalizer: "D_2n", component: "1" },
        NormalizerRow { group: "T", normalizer: "O", component: "1" },
        NormalizerRow { group: "O", normalizer: "O", component: "1" },
        NormalizerRow { group: "I", normalizer: "I", component: "1" },
    ]
}

/// Normalizers inside O(3) for the groups not contained in SO(3).
pub fn normalizer_rows_o3() -> Vec<NormalizerRow> {
    vec![
        NormalizerRow { group: "C_i", normalizer: "SO(3) x C_i", component: "SO(3)" },
        NormalizerRow { group: "C_h", normalizer: "D_infh", component: "SO(2)" },
        NormalizerRow { group: "C_nh", normalizer: "D_infh", component: "SO(2)" },
        NormalizerRow { group: "C_nv", normalizer: "D_2nh", component: "1" },
        NormalizerRow { group: "D_nh", normalizer: "D_2nh", component: "1" },
        NormalizerRow { group: "D_nd", normalizer: "D_2nh", component: "1" },
        NormalizerRow { group: "T_h", normalizer: "O_h", component: "1" },
        NormalizerRow { group: "T_d", normalizer: "O_h", component: "1" },
        NormalizerRow { group: "O_h", normalizer: "O_h", component: "1" },
        NormalizerRow { group: "I_h", normalizer: "I_h", component: "1" },
    ]
}

/// One row of the isotropy-subgroup catalog: which orbits a group admits and
/// the dimension of the fixed space on the phase space of that orbit.
pub struct IsotropyRow {
    pub group: &'static str,
    pub orbit: &'static str,
    pub isotropy: &'static str,
    pub orbit_size: &'static str,
    pub fix_dim: &'static str,
    pub normalizer_dim: &'static str,
}

/// Symplectic isotropy subgroups on ledgers of identical vortices.
pub fn identical_isotropy_rows() -> Vec<IsotropyRow> {
    vec![
        IsotropyRow { group: "C_n", orbit: "R", isotropy: "1", orbit_size: "n", fix_dim: "2", normalizer_dim: "1" },
        IsotropyRow { group: "C_n", orbit: "p", isotropy: "C_n", orbit_size: "1", fix_dim: "0(2)", normalizer_dim: "1" },
        IsotropyRow { group: "D_n", orbit: "R", isotropy: "1", orbit_size: "2n", fix_dim: "2", normalizer_dim: "0" },
        IsotropyRow { group: "D_n", orbit: "r", isotropy: "C_2", orbit_size: "n", fix_dim: "0(2)", normalizer_dim: "0" },
        IsotropyRow { group: "D_n", orbit: "p", isotropy: "C_n", orbit_size: "2", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "T", orbit: "R", isotropy: "1", orbit_size: "12", fix_dim: "2", normalizer_dim: "0" },
        IsotropyRow { group: "T", orbit: "e", isotropy: "C_2", orbit_size: "6", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "T", orbit: "v", isotropy: "C_3", orbit_size: "4", fix_dim: "0(2)", normalizer_dim: "0" },
        IsotropyRow { group: "O", orbit: "R", isotropy: "1", orbit_size: "24", fix_dim: "2", normalizer_dim: "0" },
        IsotropyRow { group: "O", orbit: "e", isotropy: "C_2", orbit_size: "12", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "O", orbit: "f", isotropy: "C_3", orbit_size: "8", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "O", orbit: "v", isotropy: "C_4", orbit_size: "6", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "I", orbit: "R", isotropy: "1", orbit_size: "60", fix_dim: "2", normalizer_dim: "0" },
        IsotropyRow { group: "I", orbit: "e", isotropy: "C_2", orbit_size: "30", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "I", orbit: "f", isotropy: "C_3", orbit_size: "20", fix_dim: "0", normalizer_dim: "0" },
        IsotropyRow { group: "I", orbit: "v", isotropy: "C_5", orbit_size: "12", fix_dim: "0", normalizer_dim: "0" },
    ]
}

/// One row of the catalog of symplectic subgroups on ± ledgers (N vortices of
/// vorticity +1 with N of vorticity −1); groups are labeled by the pair
/// (π(K), π(K_±)).
pub struct SignedIsotropyRow {
    pub group: &'static str,
    pub symplectic_projection: &'static str,
    pub orbit: &'static str,
    pub isotropy: &'static str,
    pub orbit_size: &'static str,
    pub fix_dim: &'static str,
    pub normalizer_dim: &'static str,
}

pub fn signed_isotropy_rows() -> Vec<SignedIsotropyRow> {
    vec![
        SignedIsotropyRow { group: "(C_n, C_n)", symplectic_projection: "C_n", orbit: "2R", isotropy: "1", orbit_size: "2n", fix_dim: "4", normalizer_dim: "1" },
        SignedIsotropyRow { group: "(C_n, C_n)", symplectic_projection: "C_n", orbit: "2p", isotropy: "C_n", orbit_size: "2", fix_dim: "0(2)", normalizer_dim: "1" },
        SignedIsotropyRow { group: "(C_h, 1)", symplectic_projection: "C_h", orbit: "nR", isotropy: "1", orbit_size: "2n", fix_dim: "2n", normalizer_dim: "1" },
        SignedIsotropyRow { group: "(C_nh, C_n)", symplectic_projection: "C_nh", orbit: "2R", isotropy: "1", orbit_size: "2n", fix_dim: "2", normalizer_dim: "1" },
        SignedIsotropyRow { group: "(C_nh, C_n)", symplectic_projection: "C_nh", orbit: "2p", isotropy: "C_n", orbit_size: "2", fix_dim: "0(2)", normalizer_dim: "1" },
        SignedIsotropyRow { group: "(C_i, 1)", symplectic_projection: "C_i", orbit: "nR", isotropy: "1", orbit_size: "2n", fix_dim: "2n", normalizer_dim: "3" },
        SignedIsotropyRow { group: "(C_nv, C_n)", symplectic_projection: "C_nv", orbit: "R_s^", isotropy: "1", orbit_size: "2n", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(D_nd, D_n)", symplectic_projection: "D_nd", orbit: "2R_s^", isotropy: "1", orbit_size: "4n", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(D_nh, D_n)", symplectic_projection: "D_nh", orbit: "2R_s", isotropy: "1", orbit_size: "4n", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(T, T)", symplectic_projection: "T", orbit: "v + v'", isotropy: "C_3", orbit_size: "8", fix_dim: "0(2)", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(T_h, T)", symplectic_projection: "T_h", orbit: "v^", isotropy: "C_3", orbit_size: "8", fix_dim: "0(2)", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(T_h, T)", symplectic_projection: "T_h", orbit: "R^", isotropy: "1", orbit_size: "24", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(T_d, T)", symplectic_projection: "T_d", orbit: "R^", isotropy: "1", orbit_size: "24", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(O_h, O)", symplectic_projection: "O_h", orbit: "R^", isotropy: "1", orbit_size: "48", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(I_h, I)", symplectic_projection: "I_h", orbit: "R^", isotropy: "1", orbit_size: "120", fix_dim: "2", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(T, T)", symplectic_projection: "T", orbit: "2R", isotropy: "1", orbit_size: "48", fix_dim: "4", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(O, O)", symplectic_projection: "O", orbit: "2R", isotropy: "1", orbit_size: "96", fix_dim: "4", normalizer_dim: "0" },
        SignedIsotropyRow { group: "(I, I)", symplectic_projection: "I", orbit: "2R", isotropy: "1", orbit_size: "240", fix_dim: "4", normalizer_dim: "0" },
    ]
}

/// One row of the point-orbit classification.
pub struct OrbitRow {
    pub group: &'static str,
    pub orbit: &'static str,
    pub isotropy: &'static str,
    pub size: &'static str,
    pub description: &'static str,
}

/// Point-orbits of the finite subgroups of SO(3).
pub fn so3_orbit_rows() -> Vec<OrbitRow> {
    vec![
        OrbitRow { group: "C_n", orbit: "R", isotropy: "1", size: "n", description: "n-ring" },
        OrbitRow { group: "C_n", orbit: "p", isotropy: "C_n", size: "1", description: "pole" },
        OrbitRow { group: "D_n", orbit: "R", isotropy: "1", size: "2n", description: "pair of n-rings on opposite latitudes" },
        OrbitRow { group: "D_n", orbit: "r", isotropy: "C_2", size: "n", description: "equatorial n-ring or dual" },
        OrbitRow { group: "D_n", orbit: "p", isotropy: "C_n", size: "2", description: "pair of poles" },
        OrbitRow { group: "T", orbit: "R", isotropy: "1", size: "12", description: "regular T orbit" },
        OrbitRow { group: "T", orbit: "e", isotropy: "C_2", size: "6", description: "mid-points of edges of tetrahedron" },
        OrbitRow { group: "T", orbit: "v", isotropy: "C_3", size: "4", description: "vertices of tetrahedron or dual" },
        OrbitRow { group: "O", orbit: "R", isotropy: "1", size: "24", description: "regular O orbit" },
        OrbitRow { group: "O", orbit: "e", isotropy: "C_2", size: "12", description: "mid-points of edges of octahedron" },
        OrbitRow { group: "O", orbit: "f", isotropy: "C_3", size: "8", description: "mid-points of faces of octahedron" },
        OrbitRow { group: "O", orbit: "v", isotropy: "C_4", size: "6", description: "vertices of octahedron" },
        OrbitRow { group: "I", orbit: "R", isotropy: "1", size: "60", description: "regular I orbit" },
        OrbitRow { group: "I", orbit: "e", isotropy: "C_2", size: "30", description: "mid-points of edges of icosahedron" },
        OrbitRow { group: "I", orbit: "f", isotropy: "C_3", size: "20", description: "mid-points of faces of icosahedron" },
        OrbitRow { group: "I", orbit: "v", isotropy: "C_5", size: "12", description: "vertices of icosahedron" },
    ]
}

/// Point-orbits of the finite subgroups of O(3) not contained in SO(3).
pub fn o3_orbit_rows() -> Vec<OrbitRow> {
    vec![
        OrbitRow { group: "C_nv", orbit: "R_s", isotropy: "1", size: "2n", description: "semi-regular 2n-gon" },
        OrbitRow { group: "C_nv", orbit: "R, R'", isotropy: "C_h", size: "n", description: "regular n-ring or dual" },
        OrbitRow { group: "C_nv", orbit: "p", isotropy: "C_nv", size: "1", description: "pole" },
        OrbitRow { group: "C_nh", orbit: "R", isotropy: "1", size: "2n", description: "pair of n-rings on opposite latitudes" },
        OrbitRow { group: "C_nh", orbit: "R^e", isotropy: "C_h", size: "n", description: "equatorial n-ring" },
        OrbitRow { group: "C_nh", orbit: "p", isotropy: "C_n", size: "2", description: "pair of poles" },
        OrbitRow { group: "D_nh", orbit: "R_s", isotropy: "1", size: "4n", description: "vertically aligned pair of semi-regular 2n-gons" },
        OrbitRow { group: "D_nh", orbit: "R_s^e", isotropy: "C_h", size: "2n", description: "equatorial semi-regular 2n-gon" },
        OrbitRow { group: "D_nh", orbit: "R, R'", isotropy: "C'_h", size: "2n", description: "vertically aligned pair of n-rings or duals" },
        OrbitRow { group: "D_nh", orbit: "r, r'", isotropy: "C_2v", size: "n", description: "equatorial n-ring or dual" },
        OrbitRow { group: "D_nh", orbit: "p", isotropy: "C_nv", size: "2", description: "pair of poles" },
        OrbitRow { group: "D_nd", orbit: "R_s", isotropy: "1", size: "4n", description: "vertically staggered pair of semi-regular 2n-gons" },
        OrbitRow { group: "D_nd", orbit: "R", isotropy: "C_h", size: "2n", description: "vertically staggered pair of n-rings" },
        OrbitRow { group: "D_nd", orbit: "r", isotropy: "C_2", size: "2n", description: "equatorial 2n-ring" },
        OrbitRow { group: "D_nd", orbit: "p", isotropy: "C_nv", size: "2", description: "pair of poles" },
        OrbitRow { group: "S_2n", orbit: "R", isotropy: "1", size: "2n", description: "vertically staggered pair of n-rings" },
        OrbitRow { group: "S_2n", orbit: "p", isotropy: "C_n", size: "2", description: "pair of poles" },
        OrbitRow { group: "C_h", orbit: "R", isotropy: "1", size: "2", description: "vertically aligned pair of points" },
        OrbitRow { group: "C_h", orbit: "E", isotropy: "C_h", size: "1", description: "equatorial point" },
        OrbitRow { group: "C_i", orbit: "R", isotropy: "1", size: "2", description: "pair of antipodal points" },
        OrbitRow { group: "T_d", orbit: "R", isotropy: "1", size: "24", description: "regular T_d orbit" },
        OrbitRow { group: "T_d", orbit: "E", isotropy: "C_h", size: "12", description: "generic orbit on edges of tetrahedron" },
        OrbitRow { group: "T_d", orbit: "e", isotropy: "C_2v", size: "6", description: "mid-points of edges of tetrahedron" },
        OrbitRow { group: "T_d", orbit: "v, v'", isotropy: "C_3v", size: "4", description: "vertices of tetrahedron or dual" },
        OrbitRow { group: "T_h", orbit: "R", isotropy: "1", size: "24", description: "regular T_h orbit" },
        OrbitRow { group: "T_h", orbit: "E", isotropy: "C_h", size: "12", description: "generic orbit on 'equator'" },
        OrbitRow { group: "T_h", orbit: "e", isotropy: "C_2v", size: "6", description: "mid-points of edges of tetrahedron" },
        OrbitRow { group: "T_h", orbit: "v", isotropy: "C_3", size: "8", description: "vertices of cube" },
        OrbitRow { group: "O_h", orbit: "R", isotropy: "1", size: "48", description: "regular O_h orbit" },
        OrbitRow { group: "O_h", orbit: "E", isotropy: "C_h", size: "24", description: "generic orbit on edges of octahedron" },
        OrbitRow { group: "O_h", orbit: "E'", isotropy: "C'_h", size: "24", description: "generic orbit on face bisectors of octahedron" },
        OrbitRow { group: "O_h", orbit: "e", isotropy: "C_2v", size: "12", description: "mid-points of edges of octahedron" },
        OrbitRow { group: "O_h", orbit: "f", isotropy: "C_3v", size: "8", description: "mid-points of faces of octahedron" },
        OrbitRow { group: "O_h", orbit: "v", isotropy: "C_4v", size: "6", description: "vertices of octahedron" },
        OrbitRow { group: "I_h", orbit: "R", isotropy: "1", size: "120", description: "regular I_h orbit" },
        OrbitRow { group: "I_h", orbit: "E", isotropy: "C_h", size: "60", description: "generic orbit on edges of icosahedron" },
        OrbitRow { group: "I_h", orbit: "e", isotropy: "C_2v", size: "30", description: "mid-points of edges of icosahedron" },
        OrbitRow { group: "I_h", orbit: "f", isotropy: "C_3v", size: "20", description: "mid-points of faces of icosahedron" },
        OrbitRow { group: "I_h", orbit: "v", isotropy: "C_5v", size: "12", description: "vertices of icosahedron" },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizer_examples() {
        assert_eq!(normalizer_identity_component(&PointGroup::C(4)), NormalizerComponent::SO2);
        assert_eq!(normalizer_identity_component(&PointGroup::Ci), NormalizerComponent::SO3);
        assert_eq!(normalizer_identity_component(&PointGroup::D(2)), NormalizerComponent::Trivial);
        assert_eq!(normalizer_identity_component(&PointGroup::Ch(1)), NormalizerComponent::SO2);
        assert_eq!(normalizer_identity_component(&PointGroup::Ch(5)), NormalizerComponent::SO2);
        assert_eq!(normalizer_identity_component(&PointGroup::Ih), NormalizerComponent::Trivial);
    }

    #[test]
    fn row_counts() {
        assert_eq!(normalizer_rows_so3().len(), 6);
        assert_eq!(normalizer_rows_o3().len(), 10);
        assert_eq!(identical_isotropy_rows().len(), 16);
        assert_eq!(signed_isotropy_rows().len(), 18);
        assert_eq!(so3_orbit_rows().len(), 16);
        assert_eq!(o3_orbit_rows().len(), 39);
    }
}
