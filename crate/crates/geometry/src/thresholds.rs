//! Donnelly–Xavier combinations, spectral degree thresholds, lattice-point
//! counting bounds and convergence of Poincaré series.

use serde::Serialize;
use vzlef_core::lefschetz::{l2_cup_threshold, L2Convention, L2Threshold};

use crate::volume::growth_rate;

/// `Σ γ_i − 2k max γ_i`.
pub fn dx_bound(eigs: &[f64], k: usize) -> f64 {
    let max = eigs.iter().copied().fold(f64::NEG_INFINITY, f64::max).max(0.0);
    eigs.iter().sum::<f64>() - 2.0 * k as f64 * max
}

/// The combination on the limit profile with `q+pr−1` eigenvalues equal to 1
/// and the rest 0: `(q+pr−1) − 2k`.
pub fn dx_limit_bound(p: usize, q: usize, r: usize, k: usize) -> i64 {
    (q + p * r) as i64 - 1 - 2 * k as i64
}

/// Degree threshold `k < b/2` under the named convention.
pub fn dx_threshold(p: usize, q: usize, r: usize, convention: L2Convention) -> L2Threshold {
    l2_cup_threshold(p, q, r, convention)
}

/// `∫₀^{t+1} (1 + s^{p(q+r)}) e^{(p+q+r−1)√m s} ds` with `m = min(r,p)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingBound {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub t: f64,
    pub value: f64,
    /// Composite Simpson panels used.
    pub panels: usize,
    pub normalization: &'static str,
}

/// Counting bound by composite Simpson quadrature (exact when `r = 0`, up to
/// the polynomial degree the rule integrates exactly).
pub fn counting_bound(p: usize, q: usize, r: usize, t: f64) -> CountingBound {
    let deg = (p * (q + r)) as i32;
    let rate = growth_rate(p, q, r);
    let f = |s: f64| (1.0 + s.powi(deg)) * (rate * s).exp();
    let upper = t + 1.0;
    let panels = 2 * (256 + 64 * (deg as usize + upper.ceil() as usize));
    let h = upper / panels as f64;
    let inner: f64 = (1..panels).map(|i| if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h)).sum();
    let value = h / 3.0 * (f(0.0) + inner + f(upper));
    CountingBound { p, q, r, t, value, panels, normalization: "c = 1, vol(S) = 1" }
}

/// Exponent above which `Σ_γ (A/B)^w(γZ)` converges: `(p+q+r−1)√m / 2`.
pub fn poincare_threshold(p: usize, q: usize, r: usize) -> f64 {
    growth_rate(p, q, r) / 2.0
}

/// Convergence of the Poincaré series with exponent `w`. With `r = 0` the
/// summand is constant on a compact quotient and the series is finite.
pub fn poincare_converges(w: f64, p: usize, q: usize, r: usize) -> bool {
    r == 0 || w > poincare_threshold(p, q, r)
}
