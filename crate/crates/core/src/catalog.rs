//! Cohomological modules: `A(λ,μ)` for `U(p,q)` and `A(λ)` with sign labels for `O(p,q)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::partitions::{
    enumerate_compatible, enumerate_orthogonal, BoxContext, CompatiblePair, OrthoPartition, Partition,
};
use crate::rootdata::{degree_o, degree_u, ktype_weight_o, ktype_weight_u, sign_slots, GroupKind, Sign, Weight};

/// A noncompact Levi factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LeviFactor {
    U(usize, usize),
    O(usize, usize),
}

impl std::fmt::Display for LeviFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LeviFactor::U(a, b) => write!(f, "U({a},{b})"),
            LeviFactor::O(a, b) => write!(f, "O({a},{b})"),
        }
    }
}

/// Parametrizing data of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ModuleData {
    U { pair: CompatiblePair },
    O { orth: OrthoPartition, sign1: Option<Sign>, sign2: Option<Sign> },
}

/// A classified cohomological module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VZModule {
    pub kind: GroupKind,
    pub p: usize,
    pub q: usize,
    pub data: ModuleData,
    pub degree: usize,
    pub levi: Vec<LeviFactor>,
    pub lowest_ktype: Weight,
    /// Empty skew: the Levi is compact.
    pub discrete_series: bool,
    /// For `O`, the entry also stands for the extension `Ā(λ)` to `O(p,q)`.
    pub extends_to_full_group: bool,
}

impl VZModule {
    pub fn from_pair(pair: CompatiblePair) -> Self {
        let degree = degree_u(&pair);
        let levi = pair.rects.iter().map(|&(a, b)| LeviFactor::U(a, b)).collect();
        let lowest_ktype = ktype_weight_u(&pair);
        let (p, q) = (pair.ctx.p, pair.ctx.q);
        let discrete_series = pair.is_empty_skew();
        VZModule {
            kind: GroupKind::U,
            p,
            q,
            data: ModuleData::U { pair },
            degree,
            levi,
            lowest_ktype,
            discrete_series,
            extends_to_full_group: false,
        }
    }

    pub fn from_orth(orth: OrthoPartition, sign1: Option<Sign>, sign2: Option<Sign>) -> Result<Self> {
        let lowest_ktype = ktype_weight_o(&orth, sign1, sign2)?;
        let degree = degree_o(&orth);
        let mut levi = Vec::new();
        if let Some((p0, q0)) = orth.central {
            levi.push(LeviFactor::O(p0, q0));
        }
        levi.extend(orth.pairs.iter().map(|&(a, b)| LeviFactor::U(a, b)));
        let (p, q) = (orth.ctx.p, orth.ctx.q);
        let discrete_series = orth.rects.is_empty();
        Ok(VZModule {
            kind: GroupKind::O,
            p,
            q,
            data: ModuleData::O { orth, sign1, sign2 },
            degree,
            levi,
            lowest_ktype,
            discrete_series,
            extends_to_full_group: true,
        })
    }

    /// `λ` of the module.
    pub fn lambda(&self) -> &Partition {
        match &self.data {
            ModuleData::U { pair } => &pair.lambda,
            ModuleData::O { orth, .. } => &orth.lambda,
        }
    }

    /// Short label such as `A((1),(2,1))` or `A((1))+-`.
    pub fn label(&self) -> String {
        match &self.data {
            ModuleData::U { pair } => format!("A({},{})", pair.lambda, pair.mu),
            ModuleData::O { orth, sign1, sign2 } => {
                let s = |x: &Option<Sign>| x.map(|s| s.to_string()).unwrap_or_default();
                let mut out = format!("A({})", orth.lambda);
                if sign1.is_some() {
                    out.push('_');
                    out.push_str(&s(sign1));
                }
                if sign2.is_some() {
                    out.push('^');
                    out.push_str(&s(sign2));
                }
                out
            }
        }
    }

    pub fn signs(&self) -> (Option<Sign>, Option<Sign>) {
        match &self.data {
            ModuleData::U { .. } => (None, None),
            ModuleData::O { sign1, sign2, .. } => (*sign1, *sign2),
        }
    }
}

/// All sign assignments for an orthogonal partition, in lexicographic order.
pub fn sign_variants(orth: &OrthoPartition) -> Vec<(Option<Sign>, Option<Sign>)> {
    let opts = |on: bool| if on { vec![Some(Sign::Plus), Some(Sign::Minus)] } else { vec![None] };
    let (a, b) = sign_slots(orth);
    let mut out = Vec::new();
    for s1 in opts(a) {
        for s2 in opts(b) {
            out.push((s1, s2));
        }
    }
    out
}

/// The full list of cohomological modules of `U(p,q)` or `O(p,q)`.
pub fn catalog(kind: GroupKind, p: usize, q: usize, cap: usize) -> Result<Vec<VZModule>> {
    let ctx = BoxContext::new(p, q)?;
    match kind {
        GroupKind::U => Ok(enumerate_compatible(ctx, cap)?.into_iter().map(VZModule::from_pair).collect()),
        GroupKind::O => {
            let mut out = Vec::new();
            for orth in enumerate_orthogonal(ctx, cap)? {
                for (s1, s2) in sign_variants(&orth) {
                    out.push(VZModule::from_orth(orth.clone(), s1, s2)?);
                }
            }
            Ok(out)
        }
    }
}

/// `A(λ, p×q)` with `λ = (q^r, s^{p−r})`.
pub fn holomorphic_param(r: usize, s: usize, p: usize, q: usize) -> Result<VZModule> {
    if r > p || s > q {
        return Err(CoreError::Invalid(format!("need 0 ≤ r ≤ p and 0 ≤ s ≤ q, got r={r}, s={s}")));
    }
    let ctx = BoxContext::new(p, q)?;
    let mut parts = vec![q; r];
    parts.extend(std::iter::repeat_n(s, p - r));
    let pair = CompatiblePair::new(Partition::new(parts)?, ctx.full(), ctx)?;
    Ok(VZModule::from_pair(pair))
}

/// Noncompact Levi factors read off the rectangles.
pub fn levi_of(module: &VZModule) -> Vec<LeviFactor> {
    module.levi.clone()
}

/// Number of modules per primitive degree.
pub fn primitive_degree_histogram(kind: GroupKind, p: usize, q: usize, cap: usize) -> Result<BTreeMap<usize, usize>> {
    let mut h = BTreeMap::new();
    for m in catalog(kind, p, q, cap)? {
        *h.entry(m.degree).or_insert(0) += 1;
    }
    Ok(h)
}
