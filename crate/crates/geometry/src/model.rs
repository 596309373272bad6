//! Points of the bounded model `X = { Z ∈ M_{(q+r)×p}(R) : ᵗZZ < 1 }`, the
//! invariant metric, the action of `O(q+r,p)` and seeded point samplers.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{GeomError, Result};

/// `Σ log(1 − μ_i)` over the eigenvalues of the symmetric matrix `m`.
///
/// Errors when an eigenvalue reaches 1, i.e. when `1 − m` is not positive.
pub fn log_det_one_minus(m: &DMatrix<f64>) -> Result<f64> {
    if m.nrows() == 0 {
        return Ok(0.0);
    }
    let eig = m.clone().symmetric_eigen();
    let top = eig.eigenvalues.max();
    if top >= 1.0 || !top.is_finite() {
        return Err(GeomError::OutsideDomain(top));
    }
    Ok(eig.eigenvalues.iter().map(|&mu| (-mu).ln_1p()).sum())
}

/// `f(M)` for a symmetric matrix, through its eigendecomposition.
pub fn sym_apply(m: &DMatrix<f64>, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
    let eig = m.clone().symmetric_eigen();
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(f));
    &eig.eigenvectors * d * eig.eigenvectors.transpose()
}

/// A point of `X_{p,q+r}` with the split after row `q` and cached log-determinants.
#[derive(Clone, Debug, PartialEq)]
pub struct PointZ {
    z: DMatrix<f64>,
    q: usize,
    log_a: f64,
    log_b: f64,
}

impl PointZ {
    /// Validates `ᵗZZ < 1` and caches `log A = log det(1 − ᵗZZ)` and
    /// `log B = log det(1 − ᵗZ₁Z₁)`.
    pub fn new(z: DMatrix<f64>, q: usize) -> Result<Self> {
        if q > z.nrows() || z.ncols() == 0 {
            return Err(GeomError::Shape(format!("split {q} for a {}x{} matrix", z.nrows(), z.ncols())));
        }
        let log_a = log_det_one_minus(&z.tr_mul(&z))?;
        let z1 = z.rows(0, q);
        let log_b = log_det_one_minus(&z1.tr_mul(&z1))?;
        Ok(Self { z, q, log_a, log_b })
    }

    /// The origin of `X_{p,q+r}`.
    pub fn origin(p: usize, q: usize, r: usize) -> Self {
        Self { z: DMatrix::zeros(q + r, p), q, log_a: 0.0, log_b: 0.0 }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.z
    }

    pub fn p(&self) -> usize {
        self.z.ncols()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.z.nrows() - self.q
    }

    /// Rows `0..q`.
    pub fn z1(&self) -> DMatrix<f64> {
        self.z.rows(0, self.q).into_owned()
    }

    /// Rows `q..q+r`.
    pub fn z2(&self) -> DMatrix<f64> {
        self.z.rows(self.q, self.r()).into_owned()
    }

    pub fn log_a(&self) -> f64 {
        self.log_a
    }

    pub fn log_b(&self) -> f64 {
        self.log_b
    }

    /// `A = det(1 − ᵗZZ) ∈ (0,1]`.
    pub fn a(&self) -> f64 {
        self.log_a.exp()
    }

    /// `B = det(1 − ᵗZ₁Z₁) ≥ A`.
    pub fn b(&self) -> f64 {
        self.log_b.exp()
    }

    /// Same matrix with a different split.
    pub fn with_split(&self, q: usize) -> Result<Self> {
        Self::new(self.z.clone(), q)
    }
}

/// A tangent vector `ξ(Z)`, stored as its `(q+r)×p` block.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVec(pub DMatrix<f64>);

impl TangentVec {
    /// The symmetric matrix `[[0, Z], [ᵗZ, 0]]` in `p₀`.
    pub fn xi(&self) -> DMatrix<f64> {
        let (n, p) = self.0.shape();
        let mut m = DMatrix::zeros(n + p, n + p);
        m.view_mut((0, n), (n, p)).copy_from(&self.0);
        m.view_mut((n, 0), (p, n)).copy_from(&self.0.transpose());
        m
    }

    /// Basis vector `E_ij`, indexed `i·p + j`.
    pub fn basis(n: usize, p: usize, k: usize) -> Self {
        let mut m = DMatrix::zeros(n, p);
        m[(k / p, k % p)] = 1.0;
        Self(m)
    }

    /// Row-major coordinates in the `E_ij` basis.
    pub fn coords(&self) -> DVector<f64> {
        let (n, p) = self.0.shape();
        DVector::from_fn(n * p, |k, _| self.0[(k / p, k % p)])
    }

    pub fn from_coords(v: &DVector<f64>, n: usize, p: usize) -> Self {
        Self(DMatrix::from_fn(n, p, |i, j| v[i * p + j]))
    }
}

/// The metric `tr((1 − ZᵗZ)⁻¹ U (1 − ᵗZZ)⁻¹ ᵗV)` at one point.
#[derive(Clone, Debug)]
pub struct Metric {
    /// `(1 − ZᵗZ)⁻¹`, size `q+r`.
    pub left: DMatrix<f64>,
    /// `(1 − ᵗZZ)⁻¹`, size `p`.
    pub right: DMatrix<f64>,
}

impl Metric {
    pub fn inner(&self, u: &TangentVec, v: &TangentVec) -> f64 {
        (&self.left * &u.0 * &self.right * v.0.transpose()).trace()
    }

    /// Gram matrix on the `E_ij` basis: `g(E_ij, E_kl) = left_{ik} right_{jl}`.
    pub fn gram(&self) -> DMatrix<f64> {
        let (n, p) = (self.left.nrows(), self.right.nrows());
        DMatrix::from_fn(n * p, n * p, |a, b| self.left[(a / p, b / p)] * self.right[(a % p, b % p)])
    }
}

/// Derivative of the Gram matrix along the coordinate `E_k` at `z`:
/// `∂L = L(EᵗZ + ZᵗE)L` and `∂R = R(ᵗEZ + ᵗZE)R` for `G = L ⊗ R`.
pub fn gram_derivative(z: &DMatrix<f64>, metric: &Metric, k: usize) -> DMatrix<f64> {
    let (n, p) = z.shape();
    let e = TangentVec::basis(n, p, k).0;
    let (l, r) = (&metric.left, &metric.right);
    let dl = l * (&e * z.transpose() + z * e.transpose()) * l;
    let dr = r * (e.tr_mul(z) + z.tr_mul(&e)) * r;
    DMatrix::from_fn(n * p, n * p, |a, b| {
        let (i, j, k2, l2) = (a / p, a % p, b / p, b % p);
        dl[(i, k2)] * r[(j, l2)] + l[(i, k2)] * dr[(j, l2)]
    })
}

/// The invariant metric at `Z`.
pub fn metric_at(z: &PointZ) -> Metric {
    metric_at_matrix(z.matrix())
}

/// Metric at a raw matrix assumed to lie in the domain.
pub fn metric_at_matrix(z: &DMatrix<f64>) -> Metric {
    let (n, p) = z.shape();
    let q_mat = DMatrix::identity(p, p) - z.tr_mul(z);
    let right = sym_apply(&q_mat, |x| 1.0 / x);
    // (1 − ZᵗZ)⁻¹ = 1 + Z(1 − ᵗZZ)⁻¹ᵗZ.
    let left = DMatrix::identity(n, n) + z * &right * z.transpose();
    Metric { left, right }
}

/// An element of `O(q+r, p)` acting by `Z ↦ (AZ + B)(CZ + D)⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    /// Number of positive coordinates `q + r`.
    pub n: usize,
    pub p: usize,
    pub m: DMatrix<f64>,
}

impl GroupElement {
    pub fn identity(n: usize, p: usize) -> Self {
        Self { n, p, m: DMatrix::identity(n + p, n + p) }
    }

    /// `exp ξ(Y)`: the transvection sending `0` to `Exp₀(Y)`.
    pub fn transvection(y: &DMatrix<f64>) -> Self {
        let (n, p) = y.shape();
        Self { n, p, m: sym_apply(&TangentVec(y.clone()).xi(), f64::exp) }
    }

    /// `diag(k₁, k₂)` with `k₁ ∈ O(q+r)` and `k₂ ∈ O(p)`.
    pub fn block_diag(k1: &DMatrix<f64>, k2: &DMatrix<f64>) -> Self {
        let (n, p) = (k1.nrows(), k2.nrows());
        let mut m = DMatrix::zeros(n + p, n + p);
        m.view_mut((0, 0), (n, n)).copy_from(k1);
        m.view_mut((n, n), (p, p)).copy_from(k2);
        Self { n, p, m }
    }

    /// Embeds `h ∈ O(q,p)` and `k ∈ O(r)` into `G_V ⊂ O(q+r,p)`.
    pub fn embed_gv(h: &GroupElement, k: &DMatrix<f64>) -> Self {
        let (q, p, r) = (h.n, h.p, k.nrows());
        let n = q + r;
        // Position of each coordinate of h inside the big matrix.
        let pos = |i: usize| if i < q { i } else { i + r };
        let mut m = DMatrix::zeros(n + p, n + p);
        for i in 0..q + p {
            for j in 0..q + p {
                m[(pos(i), pos(j))] = h.m[(i, j)];
            }
        }
        m.view_mut((q, q), (r, r)).copy_from(k);
        Self { n, p, m }
    }

    pub fn compose(&self, other: &GroupElement) -> Self {
        Self { n: self.n, p: self.p, m: &self.m * &other.m }
    }

    pub fn inverse(&self) -> Self {
        // g⁻¹ = J ᵗg J with J = diag(1_n, −1_p).
        let j = DMatrix::from_fn(self.n + self.p, self.n + self.p, |a, b| {
            if a != b {
                0.0
            } else if a < self.n {
                1.0
            } else {
                -1.0
            }
        });
        Self { n: self.n, p: self.p, m: &j * self.m.transpose() * &j }
    }

    fn blocks(&self) -> (DMatrix<f64>, DMatrix<f64>, DMatrix<f64>, DMatrix<f64>) {
        let (n, p) = (self.n, self.p);
        (
            self.m.view((0, 0), (n, n)).into_owned(),
            self.m.view((0, n), (n, p)).into_owned(),
            self.m.view((n, 0), (p, n)).into_owned(),
            self.m.view((n, n), (p, p)).into_owned(),
        )
    }

    /// `j(g, Z) = CZ + D`.
    pub fn j_factor(&self, z: &DMatrix<f64>) -> DMatrix<f64> {
        let (_, _, c, d) = self.blocks();
        c * z + d
    }

    /// `gZ` as a raw matrix.
    pub fn act_matrix(&self, z: &DMatrix<f64>) -> DMatrix<f64> {
        let (a, b, _, _) = self.blocks();
        let j_inv = self.j_factor(z).try_inverse().expect("CZ + D is invertible on the domain");
        (a * z + b) * j_inv
    }

    /// `gZ`, keeping the split of `z`.
    pub fn act(&self, z: &PointZ) -> Result<PointZ> {
        PointZ::new(self.act_matrix(z.matrix()), z.q())
    }

    /// `log A(gZ) = log A(Z) − 2 log|det j(g,Z)|`, stable near the boundary.
    pub fn log_a_after(&self, z: &DMatrix<f64>, log_a: f64) -> f64 {
        let lu = self.j_factor(z).lu();
        let log_det: f64 = lu.u().diagonal().iter().map(|x| x.abs().ln()).sum();
        log_a - 2.0 * log_det
    }

    /// Differential `dZ ↦ (A − (gZ)C) dZ (CZ + D)⁻¹`.
    pub fn pushforward(&self, z: &DMatrix<f64>, u: &TangentVec) -> TangentVec {
        let (a, _, c, _) = self.blocks();
        let gz = self.act_matrix(z);
        let j_inv = self.j_factor(z).try_inverse().expect("CZ + D is invertible on the domain");
        TangentVec((a - gz * c) * &u.0 * j_inv)
    }

    /// Random element `exp ξ(Y) · diag(k₁, k₂)` with Gaussian `Y` of the given scale.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, p: usize, scale: f64) -> Self {
        let y = gaussian(rng, n, p) * scale;
        Self::transvection(&y).compose(&Self::block_diag(&random_orthogonal(rng, n), &random_orthogonal(rng, p)))
    }
}

/// Matrix with independent standard normal entries.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// Haar-distributed orthogonal matrix from the QR factorization of a Gaussian matrix.
pub fn random_orthogonal<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DMatrix<f64> {
    let qr = gaussian(rng, k, k).qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// A sampled point together with the number of rejected box draws.
#[derive(Clone, Debug)]
pub struct Sampled {
    pub point: PointZ,
    pub rejections: usize,
}

/// Uniform point of `X_{p,q+r}` by rejection from the box `[−1,1]^{(q+r)×p}`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, p: usize, q: usize, r: usize) -> Sampled {
    let mut rejections = 0;
    loop {
        let z = DMatrix::from_fn(q + r, p, |_, _| rng.random_range(-1.0..1.0));
        match PointZ::new(z, q) {
            Ok(point) => return Sampled { point, rejections },
            Err(_) => rejections += 1,
        }
    }
}

/// Operator norm, the largest singular value.
pub fn op_norm(z: &DMatrix<f64>) -> f64 {
    z.singular_values().max()
}

/// Near-boundary point `(1 − ε) Z / ‖Z‖_op`.
pub fn stress_point(z: &PointZ, eps: f64) -> Result<PointZ> {
    let norm = op_norm(z.matrix());
    if norm == 0.0 {
        return Err(GeomError::Shape("cannot rescale the origin".into()));
    }
    PointZ::new(z.matrix() * ((1.0 - eps) / norm), z.q())
}
