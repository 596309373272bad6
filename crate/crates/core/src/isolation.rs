//! Isolation of cohomological modules in the unitary dual, the degree bound
//! for non-isolated modules, and isolation under `d = 0`.

use serde::Serialize;

use crate::catalog::{ModuleData, VZModule};
use crate::error::Result;
use crate::partitions::{
    enumerate_compatible, enumerate_orthogonal, BoxContext, CompatiblePair, OrthoPartition, Partition,
};
use crate::rootdata::{degree_o, degree_u, r_g, GroupKind};

fn corner_free(inner: &Partition, outer: &Partition, p: usize, below: i64) -> bool {
    let at = |part: &Partition, i: usize| if i < p { part.part(i) as i64 } else { below };
    (0..p).all(|i| {
        let (l, m) = (at(inner, i), at(outer, i));
        !(l == m && l > at(inner, i + 1)) || at(outer, i + 1) == m
    })
}

/// No common corner between `inner ⊆ outer` in a box with `p` rows.
///
/// For every row `i` with `inner_i = outer_i > inner_{i+1}` we need
/// `outer_{i+1} = outer_i`, reading both partitions as `0` below row `p`.
/// A corner is then always a cell of the box, so the test only sees an
/// untied `x_i` sitting directly above an untied `y_j`.
pub fn no_common_corner(inner: &Partition, outer: &Partition, p: usize) -> bool {
    corner_free(inner, outer, p, 0)
}

/// The same test reading both partitions as `−1` below row `p`, so that
/// `inner_p = outer_p = 0` also counts as a corner.
///
/// Kept for comparison: with this reading isolation is not preserved by
/// duality or by `p ↔ q`, and the orthogonal degree bound fails.
pub fn no_common_corner_literal(inner: &Partition, outer: &Partition, p: usize) -> bool {
    corner_free(inner, outer, p, -1)
}

/// Whether `A(λ,μ)` is isolated in the unitary dual of `SU(p,q)`.
///
/// Corners are checked on `(λ,μ)` and on the dual pair `(μ̂,λ̂)`, which
/// covers an untied `y` directly above an untied `x` as well.
pub fn is_isolated_u(cp: &CompatiblePair) -> bool {
    let wide = cp.rects.iter().all(|&(a, b)| a.min(b) >= 2);
    let dual_inner = cp.mu.complement(cp.ctx).expect("stored partition fits");
    let dual_outer = cp.lambda.complement(cp.ctx).expect("stored partition fits");
    wide && no_common_corner(&cp.lambda, &cp.mu, cp.ctx.p) && no_common_corner(&dual_inner, &dual_outer, cp.ctx.p)
}

/// Whether the modules `A(λ)^±` are isolated in the unitary dual of `SO₀(p,q)`.
/// The answer does not depend on the signs. The pair `(λ,λ̂)` is its own dual.
pub fn is_isolated_o(orth: &OrthoPartition) -> bool {
    let wide = orth.pairs.iter().all(|&(a, b)| a.min(b) >= 2);
    let central_ok = match orth.central {
        None => true,
        Some((p0, q0)) => p0 * q0 == 0 || (p0 >= 2 && q0 >= 2 && p0 + q0 >= 5),
    };
    wide && central_ok && no_common_corner(&orth.lambda, &orth.complement(), orth.ctx.p)
}

/// Isolation of a catalog entry, dispatching on the family.
pub fn is_isolated(module: &VZModule) -> bool {
    match &module.data {
        ModuleData::U { pair } => is_isolated_u(pair),
        ModuleData::O { orth, .. } => is_isolated_o(orth),
    }
}

/// What the degree bound for non-isolated modules claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "claim", content = "value")]
pub enum ClaimedBound {
    /// Rank one: no cohomological module is isolated.
    NoneIsolated,
    /// Non-isolated modules have primitive degree at least this value.
    AtLeast(usize),
    /// No bound is stated for this group.
    NotStated,
}

/// The degree bound together with its exhaustive verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonIsolatedThreshold {
    pub kind: GroupKind,
    pub p: usize,
    pub q: usize,
    pub claimed: ClaimedBound,
    /// Module named as attaining the bound.
    pub witness: Option<Partition>,
    /// The witness is orthogonal, non-isolated, and has degree equal to the bound.
    pub witness_ok: bool,
    /// Smallest degree of a non-isolated module found by enumeration.
    pub exhaustive_min: Option<usize>,
    pub exhaustive_witness: Option<String>,
    /// Modules contradicting the claim.
    pub violations: Vec<String>,
}

impl NonIsolatedThreshold {
    /// The claim holds and, where one is named, its witness attains it.
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
            && match self.claimed {
                ClaimedBound::AtLeast(b) => self.witness_ok && self.exhaustive_min == Some(b),
                _ => true,
            }
    }
}

fn claimed_bound(kind: GroupKind, p: usize, q: usize) -> (ClaimedBound, Option<Partition>) {
    let (small, big) = (p.min(q), p.max(q));
    match kind {
        _ if small <= 1 => (ClaimedBound::NoneIsolated, None),
        GroupKind::U => (ClaimedBound::NotStated, None),
        GroupKind::O if small == 2 && big >= 3 => {
            let s = big / 2;
            // Written for p = 2; transpose when the 2 sits on the other side.
            let w = if p == 2 { Partition::rectangle(1, s) } else { Partition::rectangle(s, 1) };
            (ClaimedBound::AtLeast(s), Some(w))
        }
        GroupKind::O if small >= 3 => {
            let mut parts = vec![q - 1];
            parts.extend(std::iter::repeat_n(1, p - 2));
            (ClaimedBound::AtLeast(p + q - 3), Some(Partition::new(parts).expect("decreasing")))
        }
        GroupKind::O => (ClaimedBound::NotStated, None),
    }
}

/// Lowest primitive degree of a non-isolated module, claimed and enumerated.
pub fn min_degree_nonisolated(kind: GroupKind, p: usize, q: usize, cap: usize) -> Result<NonIsolatedThreshold> {
    let ctx = BoxContext::new(p, q)?;
    let (claimed, witness) = claimed_bound(kind, p, q);
    // (degree, isolated, label) for every module up to signs.
    let rows: Vec<(usize, bool, String)> = match kind {
        GroupKind::U => enumerate_compatible(ctx, cap)?
            .iter()
            .map(|cp| (degree_u(cp), is_isolated_u(cp), format!("A({},{})", cp.lambda, cp.mu)))
            .collect(),
        GroupKind::O => enumerate_orthogonal(ctx, cap)?
            .iter()
            .map(|o| (degree_o(o), is_isolated_o(o), format!("A({})", o.lambda)))
            .collect(),
    };
    let mut exhaustive: Option<(usize, String)> = None;
    for (deg, iso, label) in &rows {
        if !iso && exhaustive.as_ref().is_none_or(|(d, _)| deg < d) {
            exhaustive = Some((*deg, label.clone()));
        }
    }
    let violations = match claimed {
        ClaimedBound::NoneIsolated => rows.iter().filter(|r| r.1).map(|r| format!("{} is isolated", r.2)).collect(),
        ClaimedBound::AtLeast(b) => rows
            .iter()
            .filter(|r| !r.1 && r.0 < b)
            .map(|r| format!("{} is not isolated in degree {} < {b}", r.2, r.0))
            .collect(),
        ClaimedBound::NotStated => Vec::new(),
    };
    let witness_ok = match (&witness, claimed) {
        (Some(w), ClaimedBound::AtLeast(b)) => {
            crate::partitions::ortho_classify(w, ctx)?.is_some_and(|o| !is_isolated_o(&o) && degree_o(&o) == b)
        }
        _ => false,
    };
    Ok(NonIsolatedThreshold {
        kind,
        p,
        q,
        claimed,
        witness,
        witness_ok,
        exhaustive_min: exhaustive.as_ref().map(|e| e.0),
        exhaustive_witness: exhaustive.map(|e| e.1),
        violations,
    })
}

/// Status of a module under the `d = 0` isolation statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum D0Status {
    /// Primitive degree `r_G` on a group not locally `SO(n,1)` or `SU(n,1)`.
    Isolated,
    /// Isolation in the automorphic dual is quoted from the literature, not computed.
    CitedAutomorphic,
    NotCovered,
}

/// Isolation under `d = 0` for a catalog entry.
pub fn isolated_d0(module: &VZModule) -> D0Status {
    let (p, q) = (module.p, module.q);
    let rank_one = p.min(q) == 1;
    match module.kind {
        GroupKind::O if rank_one && p.max(q) >= 2 && module.degree == 1 => D0Status::CitedAutomorphic,
        GroupKind::U if rank_one && module.degree == 2 => D0Status::CitedAutomorphic,
        _ if rank_one => D0Status::NotCovered,
        // SO(2,2) is not simple.
        GroupKind::O if p == 2 && q == 2 => D0Status::NotCovered,
        _ if module.degree == r_g(module.kind, p, q) => D0Status::Isolated,
        _ => D0Status::NotCovered,
    }
}
