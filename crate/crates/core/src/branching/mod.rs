//! Multiplicity rules for the K-type restrictions and tensor products that
//! drive the Lefschetz criteria, with character-based oracles.

pub mod character;
pub mod lr;
pub mod orthogonal;

use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::partitions::{
    enumerate_compatible, enumerate_orthogonal, inscribes, ortho_classify, BoxContext, CompatiblePair, OrthoPartition,
    Partition, DEFAULT_ENUM_CAP,
};
use crate::rootdata::{degree_u, ktype_weight_u, Half};

pub use character::{character, restrict_multiplicity, FormalCharacter, LieGroup};
pub use lr::lr_coefficient;

/// Outcome of Littlewood's `GL_n → O(n)` rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlToO {
    Multiplicity(u64),
    /// Outside the stable range `l(λ) ≤ ⌊n/2⌋`; ask the character oracle.
    NeedsCharacterOracle,
}

/// Multiplicity of `Γ̄_μ` in `E^λ|O(n)`: `Σ_δ c^λ_{μδ}` over `δ` with even parts.
pub fn gl_to_o_mult(lambda: &Partition, mu: &Partition, n: usize) -> GlToO {
    if lambda.length() > n / 2 {
        return GlToO::NeedsCharacterOracle;
    }
    if !lambda.contains(mu) || (lambda.weight() - mu.weight()) % 2 == 1 {
        return GlToO::Multiplicity(0);
    }
    let d = lambda.weight() - mu.weight();
    let total = lr::partitions_of_size(d)
        .iter()
        .filter(|delta| delta.parts().iter().all(|x| x % 2 == 0))
        .map(|delta| lr_coefficient(lambda, mu, delta))
        .sum();
    GlToO::Multiplicity(total)
}

/// Result of restricting a `U(p,q)` lowest K-type to `U(p) × U(q−r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct URestriction {
    pub contains: bool,
    pub multiplicity: u8,
    /// `(λ, μ − (r^p))` inside `p × (q−r)`.
    pub target: Option<CompatiblePair>,
}

/// `V_U(λ,μ)` restricted along `GL_{q−r} ⊂ GL_q` contains `V_U(λ, μ−(r^p))` iff
/// `(r^p)` inscribes in `μ/λ`, and then with multiplicity one.
pub fn restrict_u_pair(cp: &CompatiblePair, r: usize) -> Result<URestriction> {
    let BoxContext { p, q } = cp.ctx;
    if r >= q {
        return Err(CoreError::Invalid(format!("need r < q, got r={r}, q={q}")));
    }
    if !inscribes(r, &cp.skew(), p) {
        return Ok(URestriction { contains: false, multiplicity: 0, target: None });
    }
    let mu2 = cp.mu.sub_rectangle(r, p).expect("inscription leaves a partition");
    let target = CompatiblePair::new(cp.lambda.clone(), mu2, BoxContext::new(p, q - r)?)?;
    Ok(URestriction { contains: true, multiplicity: 1, target: Some(target) })
}

/// Result of restricting an `O(p,q)` lowest K-type to `O(p) × O(q−r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ORestriction {
    pub contains: bool,
    pub multiplicity: u8,
    pub target: Option<OrthoPartition>,
}

/// `V̄(λ)` restricted along `O(q−r) ⊂ O(q)` contains `V̄(λ)` for `p × (q−r)` iff
/// `(r^p)` inscribes in `λ̂/λ`.
pub fn restrict_o(orth: &OrthoPartition, r: usize) -> Result<ORestriction> {
    let BoxContext { p, q } = orth.ctx;
    if r >= q {
        return Err(CoreError::Invalid(format!("need r < q, got r={r}, q={q}")));
    }
    let skew = orth.pair().skew();
    if !inscribes(r, &skew, p) {
        return Ok(ORestriction { contains: false, multiplicity: 0, target: None });
    }
    let target = ortho_classify(&orth.lambda, BoxContext::new(p, q - r)?)?
        .ok_or_else(|| CoreError::NotOrthogonal(orth.lambda.clone().into()))?;
    Ok(ORestriction { contains: true, multiplicity: 1, target: Some(target) })
}

/// `V_U(λ,μ)` survives restriction to `O(p,q)` only when `λ = 0` or `μ = p×q`.
pub fn restrict_uo_vanishing(cp: &CompatiblePair) -> bool {
    cp.lambda.is_empty() || cp.mu == cp.ctx.full()
}

/// Parameters for the tensor-product statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TensorQuery {
    /// `A((i^p),((q−j)^p)) ⊗ A((k^p),((q−l)^p))`.
    U { i: usize, j: usize, k: usize, l: usize },
    /// `A((k^p)) ⊗ A((l^p))`.
    O { k: usize, l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorResult {
    pub contains: bool,
    pub multiplicity: u8,
    /// Label of the module that appears.
    pub target: Option<String>,
}

/// Containment of the product module in a tensor product of two cohomological modules.
pub fn tensor_contains(p: usize, q: usize, query: TensorQuery) -> TensorResult {
    let rect = |r: usize| Partition::rectangle(p, r);
    match query {
        TensorQuery::U { i, j, k, l } => {
            if i + j + k + l <= q {
                TensorResult {
                    contains: true,
                    multiplicity: 1,
                    target: Some(format!("A({},{})", rect(i + k), rect(q - j - l))),
                }
            } else {
                TensorResult { contains: false, multiplicity: 0, target: None }
            }
        }
        TensorQuery::O { k, l } => {
            if 2 * (k + l) <= q {
                TensorResult { contains: true, multiplicity: 1, target: Some(format!("A({})^±", rect(k + l))) }
            } else {
                TensorResult { contains: false, multiplicity: 0, target: None }
            }
        }
    }
}

/// Kobayashi's discrete-decomposability criterion for the restriction to
/// `U(p,q−r) × U(r)` (resp. `O(p,q−r) × O(r)`), `2r ≤ q`.
pub fn kobayashi_admissible_u(cp: &CompatiblePair) -> bool {
    let q = cp.ctx.q;
    (0..cp.ctx.p).all(|i| cp.lambda.part(i) * (q - cp.mu.part(i)) == 0)
}

/// `l(λ) ≤ ⌊p/2⌋`.
pub fn kobayashi_admissible_o(orth: &OrthoPartition) -> bool {
    orth.lambda.length() <= orth.ctx.p / 2
}

/// Character-oracle multiplicity of same-degree `U(p) × U(q−r)` lowest K-types
/// `V_U(α,β)` inside `V_U(λ,μ)`. Returns the summed count and the list of hits.
pub fn oracle_restrict_u(cp: &CompatiblePair, r: usize) -> Result<(u64, Vec<CompatiblePair>)> {
    let BoxContext { p, q } = cp.ctx;
    let w = ktype_weight_u(cp);
    let ints = |v: &[Half]| v.iter().map(|h| h.doubled() / 2).collect::<Vec<i64>>();
    // Standard GL_q dominance is the reverse of the y-ordering.
    let mut ystd = ints(&w.ys);
    ystd.reverse();
    let ch = character(LieGroup::GL(q), &ystd)?;
    let res = ch.map_weights(LieGroup::GL(q - r), |v| v[r..].to_vec()).decompose()?;
    let xs = ints(&w.xs);
    let deg = degree_u(cp);
    let small = BoxContext::new(p, q - r)?;
    let mut total = 0;
    let mut hits = Vec::new();
    for cand in enumerate_compatible(small, DEFAULT_ENUM_CAP.max(small.area()))? {
        if degree_u(&cand) != deg {
            continue;
        }
        let cw = ktype_weight_u(&cand);
        if ints(&cw.xs) != xs {
            continue;
        }
        let mut cy = ints(&cw.ys);
        cy.reverse();
        let m = res.get(&cy).copied().unwrap_or(0);
        if m > 0 {
            total += m;
            hits.push(cand);
        }
    }
    Ok((total, hits))
}

/// Interlacing-oracle multiplicity of same-degree `O(p) × O(q−r)` lowest K-types
/// `V̄(α)` inside `V̄(λ)`.
pub fn oracle_restrict_o(orth: &OrthoPartition, r: usize) -> Result<(u64, Vec<OrthoPartition>)> {
    use orthogonal::{o_branch, reduced_label};
    let BoxContext { p, q } = orth.ctx;
    let lam_conj = orth.lambda.conjugate();
    let branched = o_branch(&reduced_label(&lam_conj, q), q, r);
    let left = reduced_label(&orth.lambda, p);
    let small = BoxContext::new(p, q - r)?;
    let mut total = 0;
    let mut hits = Vec::new();
    for cand in enumerate_orthogonal(small, DEFAULT_ENUM_CAP.max(small.area()))? {
        if cand.lambda.weight() != orth.lambda.weight() || reduced_label(&cand.lambda, p) != left {
            continue;
        }
        let label = reduced_label(&cand.lambda.conjugate(), q - r);
        let m = branched.get(&label).copied().unwrap_or(0);
        if m > 0 {
            total += m;
            hits.push(cand);
        }
    }
    Ok((total, hits))
}
