//! Geodesic distance from the origin, the ratio `B/A`, and distance to the
//! totally geodesic `X_V = { Z₂ = 0 }`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::model::{sym_apply, GroupElement, PointZ};

/// `Exp₀(Y) = Y φ(ᵗYY)` with `φ(x) = tanh(√x)/√x`, i.e. `U tanh(Σ) ᵗV`.
pub fn exp0(y: &DMatrix<f64>) -> DMatrix<f64> {
    let phi = |x: f64| {
        let s = x.max(0.0).sqrt();
        if s < 1e-8 {
            1.0 - x / 3.0
        } else {
            s.tanh() / s
        }
    };
    y * sym_apply(&y.tr_mul(y), phi)
}

/// Inverse of [`exp0`]: `Z ψ(ᵗZZ)` with `ψ(x) = artanh(√x)/√x`.
pub fn log0(z: &DMatrix<f64>) -> DMatrix<f64> {
    let psi = |x: f64| {
        let s = x.max(0.0).sqrt();
        if s < 1e-8 {
            1.0 + x / 3.0
        } else {
            s.atanh() / s
        }
    };
    z * sym_apply(&z.tr_mul(z), psi)
}

/// `sqrt(Σ artanh(σ_i)²)` over the singular values of `z`.
pub fn radial_distance(z: &DMatrix<f64>) -> f64 {
    if z.is_empty() {
        return 0.0;
    }
    z.singular_values().iter().map(|s| s.atanh().powi(2)).sum::<f64>().sqrt()
}

/// A closed interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Distance from the origin with the determinant bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceReport {
    /// Exact geodesic distance `sqrt(Σ artanh(σ_i)²)`.
    pub distance: f64,
    /// Numerical rank of `Z`.
    pub rank: usize,
    /// `m = min(q+r, p)`.
    pub m: usize,
    /// `det(1 − ZᵗZ)⁻¹ = Π cosh²(artanh σ_i)`.
    pub inv_det: f64,
    /// `arccosh(det(1 − ZᵗZ)^{−1/2})`, exact when the rank is at most one.
    pub rank_one_value: Option<f64>,
    /// `[2^{−m} e^d, e^{√m d}]` as printed for `det⁻¹`.
    pub literal: Interval,
    /// `[4^{−m} e^{2d}, e^{2√m d}]`, the same bounds for `det⁻¹` after squaring.
    pub corrected: Interval,
    pub literal_contains: bool,
    pub corrected_contains: bool,
}

/// Distance from `0` to `Z`, with the rank-one closed form and both bound intervals.
pub fn distance_origin(z: &PointZ) -> DistanceReport {
    let mat = z.matrix();
    let sv = mat.singular_values();
    let rank = sv.iter().filter(|&&s| s > 1e-12).count();
    let m = mat.nrows().min(mat.ncols());
    let d = radial_distance(mat);
    let inv_det = (-z.log_a()).exp();
    let mf = m as f64;
    let literal = Interval { lo: d.exp() / 2f64.powi(m as i32), hi: (mf.sqrt() * d).exp() };
    let corrected = Interval { lo: (2.0 * d).exp() / 4f64.powi(m as i32), hi: (2.0 * mf.sqrt() * d).exp() };
    // Relative slack for rounding at d = 0, where both ends meet det⁻¹ = 1.
    let near =
        |iv: &Interval| iv.contains(inv_det) || (iv.lo * (1.0 - 1e-12) <= inv_det && inv_det <= iv.hi * (1.0 + 1e-12));
    DistanceReport {
        distance: d,
        rank,
        m,
        inv_det,
        rank_one_value: (rank <= 1).then(|| inv_det.sqrt().acosh()),
        literal_contains: near(&literal),
        corrected_contains: near(&corrected),
        literal,
        corrected,
    }
}

/// Both closed forms of `B/A` and the AM–GM comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BaRatio {
    /// `det(1 − ᵗZ₁Z₁) / det(1 − ᵗZZ)`.
    pub via_determinants: f64,
    /// `det(1_r + Z₂(1 − ᵗZZ)⁻¹ᵗZ₂)`.
    pub via_fiber: f64,
    /// `1 + tr(Z₂(1 − ᵗZZ)⁻¹ᵗZ₂)/r`, absent when `r = 0`.
    pub am_gm_mean: Option<f64>,
    /// `(B/A)^{1/r}`, absent when `r = 0`.
    pub am_gm_root: Option<f64>,
}

/// `B/A` at a point, split after row `q`.
pub fn ba_ratio(z: &PointZ) -> BaRatio {
    let via_determinants = (z.log_b() - z.log_a()).exp();
    let r = z.r();
    if r == 0 {
        return BaRatio { via_determinants, via_fiber: 1.0, am_gm_mean: None, am_gm_root: None };
    }
    let p = z.p();
    let mat = z.matrix();
    let q_inv = (DMatrix::identity(p, p) - mat.tr_mul(mat)).try_inverse().expect("1 − ᵗZZ is positive");
    let z2 = z.z2();
    let inner = &z2 * q_inv * z2.transpose();
    let via_fiber = (DMatrix::identity(r, r) + &inner).determinant();
    BaRatio {
        via_determinants,
        via_fiber,
        am_gm_mean: Some(1.0 + inner.trace() / r as f64),
        am_gm_root: Some(via_determinants.powf(1.0 / r as f64)),
    }
}

/// Fiber coordinate `W = Z₂ (1 − ᵗZ₁Z₁)^{−1/2}`: the point of the fiber over `0`
/// that the `G_V`-normalizer sends `Z` to.
pub fn fiber_coordinate(z: &PointZ) -> DMatrix<f64> {
    let z1 = z.z1();
    let b1 = DMatrix::identity(z.p(), z.p()) - z1.tr_mul(&z1);
    z.z2() * sym_apply(&b1, |x| 1.0 / x.sqrt())
}

/// Geodesic distance from `Z` to `X_V`.
pub fn distance_to_xv(z: &PointZ) -> f64 {
    radial_distance(&fiber_coordinate(z))
}

/// `½ log(B/A) = −½ log det(1 − ᵗWW)`, computed from the fiber coordinate.
pub fn half_log_ba(z: &DMatrix<f64>, q: usize) -> f64 {
    let p = z.ncols();
    let z1 = z.rows(0, q);
    let b1 = DMatrix::identity(p, p) - z1.tr_mul(&z1);
    let w = z.rows(q, z.nrows() - q) * sym_apply(&b1, |x| 1.0 / x.sqrt());
    if w.is_empty() {
        return 0.0;
    }
    -0.5 * w.singular_values().iter().map(|s| (-s * s).ln_1p()).sum::<f64>()
}

/// Element of `G_V` mapping `Z` into the fiber over the origin of `X_V`:
/// `exp(−ξ(log₀ Z₁))` acting on the first `q` rows.
pub fn gv_normalizer(z: &PointZ) -> GroupElement {
    let h = GroupElement::transvection(&(-log0(&z.z1())));
    GroupElement::embed_gv(&h, &DMatrix::identity(z.r(), z.r()))
}
