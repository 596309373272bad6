//! Hessians of the distance to `X_V` and of `log(B/A)`: closed-form profiles
//! and two numerical evaluations (Christoffel symbols from finite differences
//! of the metric, and normal coordinates at the origin moved by an isometry).

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distance::{exp0, fiber_coordinate, log0, radial_distance};
use crate::error::{GeomError, Result};
use crate::model::{gram_derivative, metric_at_matrix, random_point, sym_apply, GroupElement, PointZ};

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Function whose Hessian is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HessianTarget {
    /// Geodesic distance `F` to `X_V`.
    Distance,
    /// `½ log(B/A)`, equal to `log cosh F` when `r = 1`.
    HalfLogBa,
    /// `log(B/A)` itself.
    LogBa,
}

impl HessianTarget {
    /// Value at a raw matrix in the domain, split after row `q`.
    pub fn eval(self, z: &DMatrix<f64>, q: usize) -> f64 {
        match self {
            Self::Distance => {
                let pt = PointZ::new(z.clone(), q).expect("finite-difference stencil stays in the domain");
                radial_distance(&fiber_coordinate(&pt))
            }
            Self::HalfLogBa => crate::distance::half_log_ba(z, q),
            Self::LogBa => 2.0 * crate::distance::half_log_ba(z, q),
        }
    }
}

/// Predicted Hessian eigenvalues for `r = 1` at distance `f` from `X_V`, sorted.
///
/// * distance: `{tanh f ×q, 0 ×(pq−q+1), coth f ×(p−1)}`
/// * `½ log(B/A)`: `{tanh² f ×q, 0 ×(pq−q), sech² f, 1 ×(p−1)}`
/// * `log(B/A)`: twice the previous list.
pub fn hessian_profile(target: HessianTarget, f: f64, p: usize, q: usize, r: usize) -> Result<Vec<f64>> {
    if r != 1 {
        return Err(GeomError::Unsupported(format!("closed-form profile needs r = 1, got r = {r}")));
    }
    let rep = |v: f64, k: usize| std::iter::repeat_n(v, k);
    let mut out: Vec<f64> = match target {
        HessianTarget::Distance => {
            rep(f.tanh(), q).chain(rep(0.0, p * q - q + 1)).chain(rep(1.0 / f.tanh(), p - 1)).collect()
        }
        HessianTarget::HalfLogBa | HessianTarget::LogBa => {
            let scale = if target == HessianTarget::LogBa { 2.0 } else { 1.0 };
            let sech2 = 1.0 / f.cosh().powi(2);
            rep(f.tanh().powi(2), q)
                .chain(rep(0.0, p * q - q))
                .chain(rep(sech2, 1))
                .chain(rep(1.0, p - 1))
                .map(|x| scale * x)
                .collect()
        }
    };
    out.sort_by(|a, b| a.total_cmp(b));
    Ok(out)
}

/// The `F → ∞` limit of the distance profile: `{1 ×q, 0 ×(pq−q+1), 1 ×(p−1)}`.
pub fn limit_profile(p: usize, q: usize) -> Vec<f64> {
    let mut v = vec![0.0; p * q - q + 1];
    v.extend(std::iter::repeat_n(1.0, q + p - 1));
    v
}

fn coords_to_matrix(x: &DVector<f64>, n: usize, p: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, p, |i, j| x[i * p + j])
}

fn sorted_eigs(m: &DMatrix<f64>) -> Vec<f64> {
    let sym = (m + m.transpose()) * 0.5;
    let mut v: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

/// Central-difference gradient and Hessian of `f` at `x`.
fn fd_derivatives(f: &dyn Fn(&DVector<f64>) -> f64, x: &DVector<f64>, h: f64) -> (DVector<f64>, DMatrix<f64>) {
    let dim = x.len();
    let shifted = |pairs: &[(usize, f64)]| {
        let mut y = x.clone();
        for &(k, d) in pairs {
            y[k] += d;
        }
        f(&y)
    };
    let f0 = f(x);
    let mut grad = DVector::zeros(dim);
    let mut hess = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        let (fp, fm) = (shifted(&[(i, h)]), shifted(&[(i, -h)]));
        grad[i] = (fp - fm) / (2.0 * h);
        hess[(i, i)] = (fp - 2.0 * f0 + fm) / (h * h);
        for j in 0..i {
            let v = (shifted(&[(i, h), (j, h)]) - shifted(&[(i, h), (j, -h)]) - shifted(&[(i, -h), (j, h)])
                + shifted(&[(i, -h), (j, -h)]))
                / (4.0 * h * h);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    (grad, hess)
}

/// Riemannian Hessian eigenvalues at `z` from coordinates:
/// `∇²f_ij = ∂_i∂_j f − Γ^k_ij ∂_k f`, with central differences of step `h`
/// for `f` and Christoffel symbols from the exact first derivatives of the
/// metric, then diagonalized against the metric.
pub fn hessian_christoffel(target: HessianTarget, z: &PointZ, h: f64) -> Vec<f64> {
    let (n, p, q) = (z.matrix().nrows(), z.p(), z.q());
    let dim = n * p;
    let x0 = DVector::from_fn(dim, |k, _| z.matrix()[(k / p, k % p)]);
    let metric = metric_at_matrix(z.matrix());
    let g = metric.gram();
    let g_inv = g.clone().try_inverse().expect("metric is positive definite");
    let dg: Vec<DMatrix<f64>> = (0..dim).map(|l| gram_derivative(z.matrix(), &metric, l)).collect();
    let f = |x: &DVector<f64>| target.eval(&coords_to_matrix(x, n, p), q);
    let (grad, mut hess) = fd_derivatives(&f, &x0, h);
    // Γ_{ij}^k ∂_k f = ½ Σ_l w_l (∂_i g_jl + ∂_j g_il − ∂_l g_ij), with w = G⁻¹ ∇f.
    let w = &g_inv * &grad;
    for i in 0..dim {
        for j in 0..dim {
            let mut c = 0.0;
            for l in 0..dim {
                c += w[l] * (dg[i][(j, l)] + dg[j][(i, l)] - dg[l][(i, j)]);
            }
            hess[(i, j)] -= 0.5 * c;
        }
    }
    let g_half_inv = sym_apply(&g, |x| 1.0 / x.sqrt());
    sorted_eigs(&(&g_half_inv * hess * &g_half_inv))
}

/// Hessian eigenvalues at `z` in normal coordinates: with `g = exp ξ(log₀ Z)`,
/// differentiate `Y ↦ f(g·Exp₀(Y))` at `Y = 0`, where the metric is Euclidean
/// and the Christoffel symbols vanish.
///
/// `log(B/A)` is evaluated with `log A(gW) = log A(W) − 2 log|det j(g,W)|`,
/// which stays accurate far from `X_V`.
pub fn hessian_normal_coords(target: HessianTarget, z: &PointZ, h: f64) -> Vec<f64> {
    let g = GroupElement::transvection(&log0(z.matrix()));
    hessian_at_image(target, &g, z.q(), h)
}

/// Normal-coordinate Hessian of a `G_V`-invariant target, taken at the point
/// `(0; W)` of the fiber over the origin that `Z` is moved to by `G_V`.
///
/// Every target here is `G_V`-invariant, so this is the Hessian at `Z`; the
/// moved point keeps `Z₁ = 0` and avoids the cancellation in `log B` near the
/// boundary.
pub fn hessian_via_fiber(target: HessianTarget, z: &PointZ, h: f64) -> Vec<f64> {
    let mut moved = DMatrix::zeros(z.matrix().nrows(), z.p());
    moved.view_mut((z.q(), 0), (z.r(), z.p())).copy_from(&fiber_coordinate(z));
    let g = GroupElement::transvection(&log0(&moved));
    hessian_at_image(target, &g, z.q(), h)
}

/// Hessian eigenvalues at `g·0` in normal coordinates.
pub fn hessian_at_image(target: HessianTarget, g: &GroupElement, q: usize, h: f64) -> Vec<f64> {
    let (n, p) = (g.n, g.p);
    let f = |x: &DVector<f64>| {
        let w = exp0(&coords_to_matrix(x, n, p));
        let log_a_w = -2.0 * crate::distance::half_log_ba(&w, 0);
        let gw = g.act_matrix(&w);
        let log_a = g.log_a_after(&w, log_a_w);
        let z1 = gw.rows(0, q);
        let log_b = crate::model::log_det_one_minus(&z1.tr_mul(&z1)).expect("Z₁ stays inside its ball");
        let half = 0.5 * (log_b - log_a);
        match target {
            HessianTarget::HalfLogBa => half,
            HessianTarget::LogBa => 2.0 * half,
            // cosh F = (B/A)^{1/2} when r = 1.
            HessianTarget::Distance => half.exp().acosh(),
        }
    };
    let (_, hess) = fd_derivatives(&f, &DVector::zeros(n * p), h);
    sorted_eigs(&hess)
}

/// Numeric versus predicted distance Hessian at one point with `r = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HessianCheck {
    /// Distance to `X_V`.
    pub f: f64,
    pub numeric: Vec<f64>,
    pub predicted: Vec<f64>,
    pub max_deviation: f64,
}

/// Christoffel-symbol Hessian of the distance to `X_V` against the `r = 1` profile.
pub fn hessian_numeric_check(z: &PointZ, h: f64) -> Result<HessianCheck> {
    let f = radial_distance(&fiber_coordinate(z));
    let predicted = hessian_profile(HessianTarget::Distance, f, z.p(), z.q(), z.r())?;
    let numeric = hessian_christoffel(HessianTarget::Distance, z, h);
    let max_deviation = numeric.iter().zip(&predicted).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(HessianCheck { f, numeric, predicted, max_deviation })
}

/// Seeded uniform points of `X_{p,q+r}` at distance at least `min_f` from
/// `X_V`, where the distance is smooth.
pub fn sample_points(p: usize, q: usize, r: usize, count: usize, seed: u64, min_f: f64) -> Vec<PointZ> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let pt = random_point(&mut rng, p, q, r).point;
        if radial_distance(&fiber_coordinate(&pt)) >= min_f {
            out.push(pt);
        }
    }
    out
}

/// Number of eigenvalues within `tol` of 1.
pub fn count_near_one(eigs: &[f64], tol: f64) -> usize {
    eigs.iter().filter(|&&x| (x - 1.0).abs() <= tol).count()
}
