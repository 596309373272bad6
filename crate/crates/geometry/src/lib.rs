//! The bounded model of `X_{p,q+r}`, the symmetric space of `O(q+r,p)`, with
//! the totally geodesic `X_V = { Z₂ = 0 }` of `O(q,p) × O(r)`.
//!
//! Closed-form distance, curvature, volume, integration and Hessian formulas
//! sit next to numerical evaluations that check them.

pub mod curvature;
pub mod distance;
pub mod error;
pub mod hessian;
pub mod integrals;
pub mod model;
pub mod thresholds;
pub mod volume;

pub use error::{GeomError, Result};
pub use model::{metric_at, GroupElement, Metric, PointZ, TangentVec};
