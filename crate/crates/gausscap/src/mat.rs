//! Minimal 2x2 real matrix and vector algebra.
//!
//! Everything in this crate lives in phase space of a single bosonic mode,
//! so the only linear algebra needed is on 2-vectors, general 2x2 matrices
//! and symmetric 2x2 matrices. Keeping these as small value types avoids
//! pulling in a full linear-algebra dependency and makes determinants and
//! inverses exact one-liners.

use std::ops::{Add, Mul, Neg, Sub};

/// Phase-space vector (q, p) of quadrature means, in units with hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub q: f64,
    pub p: f64,
}

impl Vec2 {
    pub const fn new(q: f64, p: f64) -> Self {
        Self { q, p }
    }

    pub fn zero() -> Self {
        Self { q: 0.0, p: 0.0 }
    }

    pub fn norm(self) -> f64 {
        self.q.hypot(self.p)
    }

    pub fn is_finite(self) -> bool {
        self.q.is_finite() && self.p.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.q + rhs.q, self.p + rhs.p)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.q - rhs.q, self.p - rhs.p)
    }
}

/// General 2x2 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[f64; 2]; 2],
}

impl Mat2 {
    pub const fn new(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Self {
            m: [[m00, m01], [m10, m11]],
        }
    }

    pub const fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    pub const fn diag(a: f64, b: f64) -> Self {
        Self::new(a, 0.0, 0.0, b)
    }

    /// diag(1, -1), the phase-space reflection.
    pub const fn z_reflection() -> Self {
        Self::new(1.0, 0.0, 0.0, -1.0)
    }

    /// Counter-clockwise rotation by `theta`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, -s, s, c)
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn transpose(&self) -> Mat2 {
        Self::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    /// Inverse; `None` when the determinant vanishes to working precision.
    pub fn inverse(&self) -> Option<Mat2> {
        let d = self.det();
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        Some(Self::new(
            self.m[1][1] / d,
            -self.m[0][1] / d,
            -self.m[1][0] / d,
            self.m[0][0] / d,
        ))
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        d
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_finite())
    }

    /// Columns as vectors.
    pub fn col(&self, j: usize) -> Vec2 {
        Vec2::new(self.m[0][j], self.m[1][j])
    }

    /// Symmetrize as (A + A^T)/2.
    pub fn symmetric_part(&self) -> SymMat2 {
        SymMat2::new(
            self.m[0][0],
            self.m[1][1],
            0.5 * (self.m[0][1] + self.m[1][0]),
        )
    }

    /// Asymmetry |A01 - A10|.
    pub fn asymmetry(&self) -> f64 {
        (self.m[0][1] - self.m[1][0]).abs()
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j];
            }
        }
        Mat2 { m: out }
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;
    fn mul(self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.m[0][0] * v.q + self.m[0][1] * v.p,
            self.m[1][0] * v.q + self.m[1][1] * v.p,
        )
    }
}

impl Mul<Mat2> for f64 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self * rhs.m[0][0],
            self * rhs.m[0][1],
            self * rhs.m[1][0],
            self * rhs.m[1][1],
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] + rhs.m[0][0],
            self.m[0][1] + rhs.m[0][1],
            self.m[1][0] + rhs.m[1][0],
            self.m[1][1] + rhs.m[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] - rhs.m[0][0],
            self.m[0][1] - rhs.m[0][1],
            self.m[1][0] - rhs.m[1][0],
            self.m[1][1] - rhs.m[1][1],
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -1.0 * self
    }
}

/// Symmetric 2x2 matrix [[a, c], [c, b]]; symmetry held by construction.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymMat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SymMat2 {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub const fn diag(a: f64, b: f64) -> Self {
        Self::new(a, b, 0.0)
    }

    /// s * I
    pub const fn isotropic(s: f64) -> Self {
        Self::new(s, s, 0.0)
    }

    /// Rank-one outer product u u^T.
    pub fn outer(u: Vec2) -> Self {
        Self::new(u.q * u.q, u.p * u.p, u.q * u.p)
    }

    pub fn det(&self) -> f64 {
        self.a * self.b - self.c * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.b
    }

    pub fn to_mat(&self) -> Mat2 {
        Mat2::new(self.a, self.c, self.c, self.b)
    }

    pub fn norm(&self) -> f64 {
        self.to_mat().norm()
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite()
    }

    /// Eigenvalues ordered (largest, smallest).
    pub fn eigenvalues(&self) -> (f64, f64) {
        let half_tr = 0.5 * (self.a + self.b);
        let disc = (0.5 * (self.a - self.b)).hypot(self.c);
        (half_tr + disc, half_tr - disc)
    }

    pub fn eigen_min(&self) -> f64 {
        self.eigenvalues().1
    }

    /// Positive semi-definite up to `tol` on the smallest eigenvalue.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.eigen_min() >= -tol
    }

    /// Angle of the eigenvector belonging to the largest eigenvalue.
    /// With R = rotation(angle): R diag(l_max, l_min) R^T == self.
    pub fn eigen_angle(&self) -> f64 {
        0.5 * (2.0 * self.c).atan2(self.a - self.b)
    }

    /// Congruence transform S * self * S^T.
    pub fn congruence(&self, s: &Mat2) -> SymMat2 {
        (*s * self.to_mat() * s.transpose()).symmetric_part()
    }

    pub fn max_abs_diff(&self, other: &SymMat2) -> f64 {
        self.to_mat().max_abs_diff(&other.to_mat())
    }
}

impl Add for SymMat2 {
    type Output = SymMat2;
    fn add(self, rhs: SymMat2) -> SymMat2 {
        SymMat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

impl Mul<SymMat2> for f64 {
    type Output = SymMat2;
    fn mul(self, rhs: SymMat2) -> SymMat2 {
        SymMat2::new(self * rhs.a, self * rhs.b, self * rhs.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_is_orthogonal() {
        let r = Mat2::rotation(0.7);
        let rtr = r.transpose() * r;
        assert!(rtr.max_abs_diff(&Mat2::identity()) < 1e-15);
        assert!((r.det() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Mat2::new(1.0, 2.0, -0.5, 3.0);
        let inv = a.inverse().unwrap();
        assert!((a * inv).max_abs_diff(&Mat2::identity()) < 1e-15);
        assert!(Mat2::zero().inverse().is_none());
    }

    #[test]
    fn symmetric_eigen_reconstructs() {
        let s = SymMat2::new(2.0, 1.0, 0.6);
        let (l1, l2) = s.eigenvalues();
        let r = Mat2::rotation(s.eigen_angle());
        let rebuilt = SymMat2::diag(l1, l2).congruence(&r);
        assert!(s.max_abs_diff(&rebuilt) < 1e-14);
        assert!(l1 >= l2);
    }

    #[test]
    fn outer_product_rank_one() {
        let n = SymMat2::outer(Vec2::new(1.0, 1.0));
        assert_eq!(n.det(), 0.0);
        assert_eq!(n.trace(), 2.0);
        let (l1, _) = n.eigenvalues();
        assert!((l1 - 2.0).abs() < 1e-15);
    }
}
