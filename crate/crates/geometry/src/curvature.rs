//! Curvature at the origin, `R(X,Y)Y = −[[X,Y],Y]`, and the spectrum of the
//! Jacobi operator `R(·,Y)Y` for a unit vector `Y` normal to `X_V`.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::model::{gaussian, TangentVec};

/// `R(X,Y)Y` computed from the matrix bracket in `so(q+r,p)`.
///
/// `[ξX, ξY] = diag(XᵗY − YᵗX, ᵗXY − ᵗYX) = diag(K₁, K₂)` and
/// `[[ξX, ξY], ξY] = ξ(K₁Y − YK₂)`.
pub fn curvature_op(x: &TangentVec, y: &TangentVec) -> TangentVec {
    let (x, y) = (&x.0, &y.0);
    let k1 = x * y.transpose() - y * x.transpose();
    let k2 = x.tr_mul(y) - y.tr_mul(x);
    TangentVec(-(k1 * y - y * k2))
}

/// Same thing with full `(q+r+p)`-square commutators, used as a cross-check.
pub fn curvature_op_bracket(x: &TangentVec, y: &TangentVec) -> DMatrix<f64> {
    let (a, b) = (x.xi(), y.xi());
    let xy = &a * &b - &b * &a;
    -(&xy * &b - &b * &xy)
}

/// Matrix of `X ↦ R(X,Y)Y` on the `E_ij` basis.
pub fn jacobi_operator(y: &TangentVec) -> DMatrix<f64> {
    let (n, p) = y.0.shape();
    let mut m = DMatrix::zeros(n * p, n * p);
    for k in 0..n * p {
        let col = curvature_op(&TangentVec::basis(n, p, k), y).coords();
        m.set_column(k, &col);
    }
    m
}

/// Eigenvalues of the Jacobi operator on the tangent and normal spaces of `X_V`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiSpectrum {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// Singular values of `Y₂`, padded with zeros to length `max(r,p)`.
    pub lambda: Vec<f64>,
    /// Sorted ascending, `pq` values.
    pub tangent: Vec<f64>,
    /// Sorted ascending, `rp` values.
    pub normal: Vec<f64>,
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

fn sym_eigs(m: &DMatrix<f64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    sorted(m.clone().symmetric_eigen().eigenvalues.iter().copied().collect())
}

/// Exact spectrum of `R(·,Y)Y` for `Y = (0; Y₂)` given by its `r×p` block.
pub fn jacobi_spectrum(y2: &DMatrix<f64>, q: usize) -> Result<JacobiSpectrum> {
    let (r, p) = y2.shape();
    if r == 0 || p == 0 {
        return Err(GeomError::Shape("normal block must be nonempty".into()));
    }
    let n = q + r;
    let mut y = DMatrix::zeros(n, p);
    y.view_mut((q, 0), (r, p)).copy_from(y2);
    let j = jacobi_operator(&TangentVec(y));
    // Tangent coordinates are rows 0..q, i.e. indices 0..qp; normal ones follow.
    let t = q * p;
    let tangent = sym_eigs(&j.view((0, 0), (t, t)).into_owned());
    let normal = sym_eigs(&j.view((t, t), (r * p, r * p)).into_owned());
    let mut lambda: Vec<f64> = y2.singular_values().iter().copied().collect();
    lambda.sort_by(|a, b| b.total_cmp(a));
    lambda.resize(r.max(p), 0.0);
    Ok(JacobiSpectrum { p, q, r, lambda, tangent, normal })
}

/// Multisets predicted for the tangent and normal blocks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaMultiset {
    pub tangent: Vec<f64>,
    pub normal: Vec<f64>,
}

fn tangent_prediction(lambda: &[f64], q: usize, p: usize) -> Vec<f64> {
    sorted((0..p).flat_map(|j| std::iter::repeat_n(-lambda[j] * lambda[j], q)).collect())
}

/// The list as stated: `−λ_j²` with multiplicity `q`, and `−(λ_i − λ_j)²`
/// for `1 ≤ i ≤ r`, `1 ≤ j ≤ p`.
pub fn lemma_literal(lambda: &[f64], q: usize, r: usize, p: usize) -> LemmaMultiset {
    let normal = (0..r).flat_map(|i| (0..p).map(move |j| -(lambda[i] - lambda[j]).powi(2))).collect();
    LemmaMultiset { tangent: tangent_prediction(lambda, q, p), normal: sorted(normal) }
}

/// The list obtained by diagonalizing the bracket: on `span(E_ij, E_ji)` with
/// `i ≠ j ≤ min(r,p)` the pair `−(λ_i − λ_j)²`, `−(λ_i + λ_j)²`; otherwise
/// `−(λ_i − λ_j)²` as stated.
pub fn lemma_corrected(lambda: &[f64], q: usize, r: usize, p: usize) -> LemmaMultiset {
    let m = r.min(p);
    let mut normal = Vec::with_capacity(r * p);
    for i in 0..r {
        for j in 0..p {
            let v = if i < m && j < m && i != j {
                // Each unordered pair gets one of each sign.
                if i < j {
                    -(lambda[i] - lambda[j]).powi(2)
                } else {
                    -(lambda[i] + lambda[j]).powi(2)
                }
            } else {
                -(lambda[i] - lambda[j]).powi(2)
            };
            normal.push(v);
        }
    }
    LemmaMultiset { tangent: tangent_prediction(lambda, q, p), normal: sorted(normal) }
}

/// Largest entrywise gap between two sorted multisets of equal size.
pub fn multiset_gap(a: &[f64], b: &[f64]) -> Option<f64> {
    (a.len() == b.len()).then(|| a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

impl JacobiSpectrum {
    /// Largest deviation from a predicted multiset, `None` if the sizes differ.
    pub fn gap(&self, pred: &LemmaMultiset) -> Option<f64> {
        Some(multiset_gap(&self.tangent, &pred.tangent)?.max(multiset_gap(&self.normal, &pred.normal)?))
    }
}

/// Seeded unit `r×p` blocks in Gaussian directions (uniform on the sphere).
pub fn sample_unit_normals(r: usize, p: usize, count: usize, seed: u64) -> Vec<DMatrix<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let y = gaussian(&mut rng, r, p);
            let n = y.norm();
            y / n
        })
        .collect()
}
