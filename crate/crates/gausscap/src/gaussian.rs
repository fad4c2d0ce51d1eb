//! Gaussian states of a single mode at the level of second moments.
//!
//! A state enters only through its covariance matrix (CM). The von Neumann
//! entropy of a one-mode Gaussian state is a function of the single
//! symplectic invariant sqrt(det V), evaluated through [`entropy_h`].
//! The module also provides the two matrix factorizations everything else
//! is built on: the Euler (Bloch-Messiah) form of a symplectic matrix and
//! the Williamson normal form of a positive-definite symmetric matrix,
//! plus the symplectic normalization of rank-one noise matrices.

use crate::mat::{Mat2, SymMat2, Vec2};
use thiserror::Error;

/// Slack on the uncertainty bound det(V) >= 1/4 and on entropy domains.
pub const TOL_CM: f64 = 1e-9;
/// Slack on |det S - 1| for symplectic matrices.
pub const TOL_SYMP: f64 = 1e-9;
/// Elementwise tolerance for decomposition reconstructions.
pub const TOL_RECON: f64 = 1e-9;
/// Threshold below which determinants and norms count as zero.
pub const TOL_RANK: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum GaussError {
    #[error("entropy argument {0} below 1/2")]
    EntropyDomain(f64),
    #[error("covariance matrix not physical: det = {det}, need >= 1/4")]
    NotPhysical { det: f64 },
    #[error("covariance matrix not positive definite (a = {a}, det = {det})")]
    NotPositiveDefinite { a: f64, det: f64 },
    #[error("matrix is not symplectic: det = {0}")]
    NotSymplectic(f64),
    #[error("noise matrix is singular (det = {0}); no positive-definite Williamson form")]
    DegenerateNoise(f64),
    #[error("matrix is zero to working precision")]
    ZeroMatrix,
    #[error("matrix has non-finite entries")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, GaussError>;

/// Entropy of a thermal-like state with symplectic eigenvalue `x`, in bits:
/// h(x) = (x+1/2) log2(x+1/2) - (x-1/2) log2(x-1/2).
///
/// Continuous at x = 1/2 with h(1/2) = 0; strictly increasing beyond.
/// Arguments within `TOL_CM` below 1/2 are clamped to the boundary.
pub fn entropy_h(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(GaussError::NonFinite);
    }
    if x < 0.5 - TOL_CM {
        return Err(GaussError::EntropyDomain(x));
    }
    let d = (x - 0.5).max(0.0);
    // The (x-1/2) log2(x-1/2) term tends to 0; take the limit form very
    // close to the boundary so no log(0) is evaluated.
    let lower = if d <= 1e-12 { 0.0 } else { d * d.log2() };
    Ok((x + 0.5) * (x + 0.5).log2() - lower)
}

/// Physical covariance matrix of a one-mode Gaussian state.
///
/// Wraps a positive-definite [`SymMat2`] with det >= 1/4 (up to `TOL_CM`),
/// the one-mode uncertainty relation in hbar = 1 units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix {
    m: SymMat2,
}

impl CovarianceMatrix {
    pub fn new(m: SymMat2) -> Result<Self> {
        if !m.is_finite() {
            return Err(GaussError::NonFinite);
        }
        let det = m.det();
        if m.a <= 0.0 || det <= 0.0 {
            return Err(GaussError::NotPositiveDefinite { a: m.a, det });
        }
        if det < 0.25 - TOL_CM {
            return Err(GaussError::NotPhysical { det });
        }
        Ok(Self { m })
    }

    /// The vacuum state, V = I/2.
    pub fn vacuum() -> Self {
        Self {
            m: SymMat2::isotropic(0.5),
        }
    }

    /// Pure squeezed state diag(1/(2s), s/2); det = 1/4 for any s > 0.
    pub fn squeezed(s: f64) -> Result<Self> {
        Self::new(SymMat2::diag(0.5 / s, 0.5 * s))
    }

    pub fn mat(&self) -> SymMat2 {
        self.m
    }

    pub fn det(&self) -> f64 {
        self.m.det()
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }
}

/// Symplectic 2x2 matrix. For one mode this is exactly det = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticMat2 {
    m: Mat2,
}

impl SymplecticMat2 {
    pub fn new(m: Mat2) -> Result<Self> {
        if !m.is_finite() {
            return Err(GaussError::NonFinite);
        }
        let det = m.det();
        if (det - 1.0).abs() > TOL_SYMP {
            return Err(GaussError::NotSymplectic(det));
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: Mat2::identity(),
        }
    }

    pub fn rotation(theta: f64) -> Self {
        Self {
            m: Mat2::rotation(theta),
        }
    }

    /// diag(sqrt(r), 1/sqrt(r)), the single-mode squeezer.
    pub fn squeeze(r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(GaussError::NotSymplectic(0.0));
        }
        Ok(Self {
            m: Mat2::diag(r.sqrt(), 1.0 / r.sqrt()),
        })
    }

    pub fn mat(&self) -> Mat2 {
        self.m
    }

    /// Exact inverse of a det-1 matrix: [[d, -b], [-c, a]].
    pub fn inverse(&self) -> SymplecticMat2 {
        let m = self.m.m;
        SymplecticMat2 {
            m: Mat2::new(m[1][1], -m[0][1], -m[1][0], m[0][0]),
        }
    }
}

/// Entropy of the Gaussian state with covariance matrix `v`, in bits.
pub fn state_entropy(v: &CovarianceMatrix) -> Result<f64> {
    entropy_h(v.det().sqrt())
}

/// Entropy of an arbitrary symmetric matrix treated as a CM.
///
/// Used on channel outputs, which are physical whenever the channel is CP
/// and the input is physical; the domain check still applies.
pub fn entropy_of(m: &SymMat2) -> Result<f64> {
    let det = m.det();
    if det < 0.0 {
        return Err(GaussError::NotPhysical { det });
    }
    entropy_h(det.sqrt())
}

/// Euler (Bloch-Messiah) decomposition of a symplectic matrix:
/// S = R * diag(sqrt(r), 1/sqrt(r)) * Rp with proper rotations R, Rp
/// and r >= 1.
#[derive(Debug, Clone, Copy)]
pub struct EulerForm {
    /// Left rotation.
    pub left: Mat2,
    /// Squeeze parameter, r >= 1; the squeeze factor is diag(sqrt(r), 1/sqrt(r)).
    pub r: f64,
    /// Right rotation.
    pub right: Mat2,
}

impl EulerForm {
    pub fn reconstruct(&self) -> Mat2 {
        self.left * Mat2::diag(self.r.sqrt(), 1.0 / self.r.sqrt()) * self.right
    }
}

/// Decompose a symplectic matrix into rotation * squeeze * rotation.
///
/// The returned rotations have determinant +1; `r` is the square of the
/// largest singular value, so r >= 1 always and r = 1 exactly for rotations.
pub fn euler_decompose(s: &SymplecticMat2) -> Result<EulerForm> {
    let a = s.mat();
    // Eigenframe of A^T A gives the right singular directions; the first
    // eigenvector (largest eigenvalue) is at angle `phi`.
    let gram = (a.transpose() * a).symmetric_part();
    let (l1, l2) = gram.eigenvalues();
    let phi = gram.eigen_angle();
    let sigma1 = l1.max(0.0).sqrt();
    let sigma2 = l2.max(0.0).sqrt();
    if sigma2 <= 0.0 {
        return Err(GaussError::NotSymplectic(a.det()));
    }
    let v = Mat2::rotation(phi); // columns: right singular vectors
    let u = a * v * Mat2::diag(1.0 / sigma1, 1.0 / sigma2);
    // det A = 1 forces det U = +1, so U is already a proper rotation;
    // snap it to kill rounding in the off-orthogonality.
    let theta = u.m[1][0].atan2(u.m[0][0]);
    let left = Mat2::rotation(theta);
    let r = sigma1 * sigma1;
    Ok(EulerForm {
        left,
        r: r.max(1.0),
        right: v.transpose(),
    })
}

/// Williamson normal form of a positive-definite symmetric matrix:
/// N = S (nu I) S^T with S symplectic and nu = sqrt(det N).
#[derive(Debug, Clone, Copy)]
pub struct WilliamsonForm {
    pub s: SymplecticMat2,
    pub nu: f64,
}

/// One-mode Williamson decomposition.
///
/// Fails on singular input: a rank-deficient matrix has no
/// positive-definite normal form and must go through [`rank_one_reduce`].
pub fn williamson(n: &SymMat2) -> Result<WilliamsonForm> {
    if !n.is_finite() {
        return Err(GaussError::NonFinite);
    }
    let det = n.det();
    if det <= TOL_RANK {
        return Err(GaussError::DegenerateNoise(det));
    }
    let nu = det.sqrt();
    let (l1, l2) = n.eigenvalues();
    if l2 <= 0.0 {
        return Err(GaussError::DegenerateNoise(det));
    }
    let rot = Mat2::rotation(n.eigen_angle());
    let s = rot * Mat2::diag((l1 / nu).sqrt(), (l2 / nu).sqrt());
    Ok(WilliamsonForm {
        s: SymplecticMat2::new(s)?,
        nu,
    })
}

/// Symplectic normalization of a PSD rank-one matrix:
/// returns (S, lam) with S N S^T = diag(1, 0) and lam the nonzero
/// eigenvalue of N.
///
/// S is the rotation aligning the range of N with the q axis followed by
/// the squeeze diag(1/sqrt(lam), sqrt(lam)).
pub fn rank_one_reduce(n: &SymMat2) -> Result<(SymplecticMat2, f64)> {
    if !n.is_finite() {
        return Err(GaussError::NonFinite);
    }
    if n.norm() <= TOL_RANK {
        return Err(GaussError::ZeroMatrix);
    }
    let (lam, _) = n.eigenvalues();
    if lam <= 0.0 {
        return Err(GaussError::ZeroMatrix);
    }
    // Range direction = eigenvector of the nonzero eigenvalue.
    let angle = n.eigen_angle();
    let align = Mat2::rotation(-angle);
    let scale = Mat2::diag(1.0 / lam.sqrt(), lam.sqrt());
    Ok((SymplecticMat2::new(scale * align)?, lam))
}
