//! Small geometric helpers shared across the crate: spherical angle
//! conventions, rotation and reflection matrices.
//!
//! Conventions: colatitude θ ∈ [0, π] measured from the +z axis, longitude
//! φ ∈ [0, 2π) measured from +x towards +y. The principal rotation axis of
//! every axial group is z; the equatorial mirror plane is z = 0.

use nalgebra::{Matrix3, Unit, Vector3};
use std::f64::consts::TAU;

/// Unit vector at colatitude `colat` and longitude `lon`.
pub fn unit_vector(colat: f64, lon: f64) -> Vector3<f64> {
    let s = colat.sin();
    Vector3::new(s * lon.cos(), s * lon.sin(), colat.cos())
}

/// Colatitude of a unit vector, clamped against rounding dust at the poles.
pub fn colatitude(x: &Vector3<f64>) -> f64 {
    x.z.clamp(-1.0, 1.0).acos()
}

/// Longitude in [0, 2π). Returns 0 at the poles where it is undefined.
pub fn longitude(x: &Vector3<f64>) -> f64 {
    if x.x == 0.0 && x.y == 0.0 {
        return 0.0;
    }
    wrap_angle(x.y.atan2(x.x))
}

/// Wrap an angle into [0, 2π).
pub fn wrap_angle(a: f64) -> f64 {
    let mut r = a % TAU;
    if r < 0.0 {
        r += TAU;
    }
    // -1e-17 % TAU can round to TAU itself.
    if r >= TAU {
        r -= TAU;
    }
    r
}

/// Signed distance between two angles modulo `period`, in (-period/2, period/2].
pub fn angle_difference(a: f64, b: f64, period: f64) -> f64 {
    let mut d = (a - b) % period;
    if d > period / 2.0 {
        d -= period;
    }
    if d <= -period / 2.0 {
        d += period;
    }
    d
}

/// Rotation by `angle` about the z axis.
pub fn rot_z(angle: f64) -> Matrix3<f64> {
    let (s, c) = angle.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

/// Rotation by `angle` about an arbitrary axis.
pub fn rotation(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
    nalgebra::Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle).into_inner()
}

/// Reflection across the plane with unit normal `normal` (Householder).
pub fn mirror(normal: Vector3<f64>) -> Matrix3<f64> {
    let n = normal.normalize();
    Matrix3::identity() - 2.0 * n * n.transpose()
}

/// Reflection across the equatorial plane z = 0.
pub fn mirror_horizontal() -> Matrix3<f64> {
    mirror(Vector3::z())
}

/// Reflection across the vertical plane containing the z axis at azimuth `lon`
/// (the plane's normal lies in the equator at `lon + π/2`).
pub fn mirror_vertical(lon: f64) -> Matrix3<f64> {
    let (s, c) = lon.sin_cos();
    mirror(Vector3::new(-s, c, 0.0))
}

pub fn inversion() -> Matrix3<f64> {
    -Matrix3::identity()
}

/// Frobenius distance between matrices, used for closure bookkeeping.
pub fn matrix_distance(a: &Matrix3<f64>, b: &Matrix3<f64>) -> f64 {
    (a - b).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_round_trip() {
        for &(colat, lon) in &[(0.3, 1.2), (1.5, 4.4), (2.9, 0.0), (0.5, 6.0)] {
            let x = unit_vector(colat, lon);
            assert!((colatitude(&x) - colat).abs() < 1e-12);
            assert!((longitude(&x) - lon).abs() < 1e-12);
        }
    }

    #[test]
    fn mirror_is_involution() {
        let m = mirror_vertical(0.7);
        assert!(matrix_distance(&(m * m), &Matrix3::identity()) < 1e-14);
        assert!((m.determinant() + 1.0).abs() < 1e-14);
    }

    #[test]
    fn wrap_angle_range() {
        for &a in &[-7.0, -0.1, 0.0, 3.0, 6.2831853, 100.0] {
            let w = wrap_angle(a);
            assert!((0.0..TAU).contains(&w), "wrap({a}) = {w}");
        }
    }
}
