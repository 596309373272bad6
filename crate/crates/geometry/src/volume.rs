//! Growth of the volume of tubes around `X_V` and a numerical Jacobi-field
//! oracle for it.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::curvature::jacobi_operator;
use crate::error::{GeomError, Result};
use crate::model::TangentVec;

/// Volume density of the normal exponential map at distance `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VolumeGrowth {
    pub t: f64,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// `m = min(r,p)`.
    pub m: usize,
    /// `sinh^{p−1} t · cosh^q t` for `r = 1`, with unit constant.
    pub exact: Option<f64>,
    /// `exact(t) / exact(1)`.
    pub normalized: Option<f64>,
    /// `(1 + t^{p(q+r)}) e^{(p+q+r−1)√m t}` with unit constant.
    pub bound: f64,
    pub normalization: &'static str,
}

fn r1_density(t: f64, p: usize, q: usize) -> f64 {
    t.sinh().powi(p as i32 - 1) * t.cosh().powi(q as i32)
}

/// Exponent `(p+q+r−1)√m` of the general bound.
pub fn growth_rate(p: usize, q: usize, r: usize) -> f64 {
    (p + q + r - 1) as f64 * (r.min(p) as f64).sqrt()
}

/// Tube volume density: exact for `r = 1`, the upper bound for every `r`.
pub fn volume_growth(t: f64, p: usize, q: usize, r: usize) -> VolumeGrowth {
    let exact = (r == 1).then(|| r1_density(t, p, q));
    VolumeGrowth {
        t,
        p,
        q,
        r,
        m: r.min(p),
        exact,
        normalized: exact.map(|e| e / r1_density(1.0, p, q)),
        bound: (1.0 + t.powi((p * (q + r)) as i32)) * (growth_rate(p, q, r) * t).exp(),
        normalization: "density against dvol(X_V) x dsigma(unit normal sphere) x dt; c = 1",
    }
}

/// Density at `t` from Jacobi fields along the normal geodesic with direction `y2`.
///
/// Integrates `J'' = −R(J,Y)Y` by RK4 in a parallel frame (the operator is
/// constant there since `∇R = 0`). Tangent fields start at `J(0) = e`,
/// `J'(0) = 0`; normal fields orthogonal to `Y` start at `J(0) = 0`, `J'(0) = v`.
/// Returns `sqrt(det Gram)`.
pub fn jacobi_density(t: f64, q: usize, y2: &DMatrix<f64>, steps: usize) -> Result<f64> {
    let (r, p) = y2.shape();
    let norm = y2.norm();
    if r == 0 || (norm - 1.0).abs() > 1e-9 {
        return Err(GeomError::Shape("need a unit normal direction".into()));
    }
    let n = q + r;
    let dim = n * p;
    let mut y = DMatrix::zeros(n, p);
    y.view_mut((q, 0), (r, p)).copy_from(y2);
    let jac = jacobi_operator(&TangentVec(y.clone()));
    // Orthonormal basis of the normal space orthogonal to Y, by Gram–Schmidt.
    let ycoords = TangentVec(y).coords();
    let mut normals: Vec<nalgebra::DVector<f64>> = Vec::new();
    for k in q * p..dim {
        let mut v = nalgebra::DVector::zeros(dim);
        v[k] = 1.0;
        v -= &ycoords * ycoords.dot(&v);
        for u in &normals {
            v -= u * u.dot(&v);
        }
        if v.norm() > 1e-8 {
            normals.push(v.normalize());
        }
    }
    let fields = q * p + normals.len();
    let mut pos = DMatrix::zeros(dim, fields);
    let mut vel = DMatrix::zeros(dim, fields);
    for k in 0..q * p {
        pos[(k, k)] = 1.0;
    }
    for (c, v) in normals.iter().enumerate() {
        vel.set_column(q * p + c, v);
    }
    let h = t / steps as f64;
    let acc = |x: &DMatrix<f64>| -(&jac * x);
    for _ in 0..steps {
        let (k1x, k1v) = (vel.clone(), acc(&pos));
        let (k2x, k2v) = (&vel + &k1v * (h / 2.0), acc(&(&pos + &k1x * (h / 2.0))));
        let (k3x, k3v) = (&vel + &k2v * (h / 2.0), acc(&(&pos + &k2x * (h / 2.0))));
        let (k4x, k4v) = (&vel + &k3v * h, acc(&(&pos + &k3x * h)));
        pos += (k1x + k2x * 2.0 + k3x * 2.0 + k4x) * (h / 6.0);
        vel += (k1v + k2v * 2.0 + k3v * 2.0 + k4v) * (h / 6.0);
    }
    Ok(pos.tr_mul(&pos).determinant().max(0.0).sqrt())
}
