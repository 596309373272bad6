//! Verdict engine for the Lefschetz-type statements: restriction to standard
//! subgroups, cup product with a subvariety class, products of classes, and
//! modular symbols.
//!
//! Each verdict carries the anchor it was drawn from and the hypothesis checks
//! that were evaluated. A verdict is `guaranteed` only when an implemented
//! theorem applies and every one of its checks holds. Conjectures are reported
//! as `conjectured` with the predicted outcome, never as `guaranteed`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::branching::{restrict_u_pair, restrict_uo_vanishing, tensor_contains, TensorQuery};
use crate::error::{CoreError, Result};
use crate::partitions::{
    enumerate_orthogonal, inscribes, ortho_classify, BoxContext, CompatiblePair, Partition, DEFAULT_ENUM_CAP,
};
use crate::rootdata::GroupKind;

/// Outcome class of a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Guaranteed,
    Conjectured,
    NotCovered,
    /// An if-and-only-if criterion evaluates to false.
    FailsCriterion,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Guaranteed => "guaranteed",
            Status::Conjectured => "conjectured",
            Status::NotCovered => "not-covered",
            Status::FailsCriterion => "fails-criterion",
        })
    }
}

/// The closed citation table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anchor {
    Upq,
    Opq,
    O2n,
    UandO,
    UandO2,
    CorUO,
    Analogue,
    AnaO,
    AnaUO,
    AnaOIso,
    AnaUIso,
    AnaUOIso,
    CupU,
    CupO,
    CupOComponent,
    CupOIso,
    CupUIso,
    CupHCombined,
    SymbModul,
    SymbModulU,
    SymbModulIso,
    SymbModulUIso,
    SymbRankOne,
    CohomL2,
    CorCohomL2U,
    CorCohomL2O,
    RemarkAnaO,
    ConjRankOne,
    ConjCup2,
    ConjC100,
    ConjCanaO,
    ConjCanaUO,
    ConjCupHyp,
    ConjCupO,
    None,
}

impl Anchor {
    /// Every anchor, in table order.
    pub const ALL: [Anchor; 35] = [
        Anchor::Upq,
        Anchor::Opq,
        Anchor::O2n,
        Anchor::UandO,
        Anchor::UandO2,
        Anchor::CorUO,
        Anchor::Analogue,
        Anchor::AnaO,
        Anchor::AnaUO,
        Anchor::AnaOIso,
        Anchor::AnaUIso,
        Anchor::AnaUOIso,
        Anchor::CupU,
        Anchor::CupO,
        Anchor::CupOComponent,
        Anchor::CupOIso,
        Anchor::CupUIso,
        Anchor::CupHCombined,
        Anchor::SymbModul,
        Anchor::SymbModulU,
        Anchor::SymbModulIso,
        Anchor::SymbModulUIso,
        Anchor::SymbRankOne,
        Anchor::CohomL2,
        Anchor::CorCohomL2U,
        Anchor::CorCohomL2O,
        Anchor::RemarkAnaO,
        Anchor::ConjRankOne,
        Anchor::ConjCup2,
        Anchor::ConjC100,
        Anchor::ConjCanaO,
        Anchor::ConjCanaUO,
        Anchor::ConjCupHyp,
        Anchor::ConjCupO,
        Anchor::None,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Anchor::Upq => "Thm upq",
            Anchor::Opq => "Thm opq",
            Anchor::O2n => "Thm o2n",
            Anchor::UandO => "Thm u&o",
            Anchor::UandO2 => "Thm u&o2",
            Anchor::CorUO => "Cor CORUO",
            Anchor::Analogue => "Thm analogue",
            Anchor::AnaO => "Thm anaO",
            Anchor::AnaUO => "Thm anaUO",
            Anchor::AnaOIso => "Thm anaO'",
            Anchor::AnaUIso => "Thm anaU'",
            Anchor::AnaUOIso => "Thm anaUO'",
            Anchor::CupU => "Thm cup u",
            Anchor::CupO => "Thm cup o",
            Anchor::CupOComponent => "Thm cupO",
            Anchor::CupOIso => "Thm cupO'",
            Anchor::CupUIso => "Thm cupU'",
            Anchor::CupHCombined => "Thm cupH",
            Anchor::SymbModul => "Thm symbmodul",
            Anchor::SymbModulU => "Thm symbmodulU",
            Anchor::SymbModulIso => "Thm symbmodul'",
            Anchor::SymbModulUIso => "Thm symbmodulU'",
            Anchor::SymbRankOne => "Thm symbrank1",
            Anchor::CohomL2 => "Thm cohom l2",
            Anchor::CorCohomL2U => "Cor cohoml2U",
            Anchor::CorCohomL2O => "Cor cohoml2O",
            Anchor::RemarkAnaO => "Remark anaO",
            Anchor::ConjRankOne => "Conj rg1",
            Anchor::ConjCup2 => "Conj conj2",
            Anchor::ConjC100 => "Conj C100",
            Anchor::ConjCanaO => "Conj CanaO",
            Anchor::ConjCanaUO => "Conj CanaUO",
            Anchor::ConjCupHyp => "Conj cup hyp",
            Anchor::ConjCupO => "Conj CanaO-cup",
            Anchor::None => "none",
        }
    }

    pub fn is_conjecture(self) -> bool {
        self.label().starts_with("Conj")
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Anchor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Qualifiers attached to a verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Qualifiers {
    /// Only the holomorphic part `H^{k,0}` is covered.
    pub holomorphic_only: bool,
    /// The statement is about `L²` or cuspidal cohomology (isotropic case).
    pub l2_cuspidal: bool,
    /// The statement concerns the strongly primitive projection.
    pub strongly_primitive: bool,
}

/// One evaluated hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

fn check(name: impl Into<String>, holds: bool) -> Check {
    Check { name: name.into(), holds }
}

/// A verdict from the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub anchor: Anchor,
    /// The inequality or criterion, instantiated.
    pub threshold: String,
    pub target_component: Option<String>,
    pub qualifiers: Qualifiers,
    /// For conjectured verdicts: the outcome the conjecture predicts.
    pub prediction: Option<bool>,
    pub checks: Vec<Check>,
}

impl Verdict {
    fn not_covered(reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::NotCovered,
            anchor: Anchor::None,
            threshold: reason.into(),
            target_component: None,
            qualifiers: Qualifiers::default(),
            prediction: None,
            checks: Vec::new(),
        }
    }

    /// `guaranteed` when every check holds, else `None` so the caller can fall through.
    fn theorem(anchor: Anchor, threshold: String, checks: Vec<Check>) -> Option<Self> {
        checks.iter().all(|c| c.holds).then(|| Verdict {
            status: Status::Guaranteed,
            anchor,
            threshold,
            target_component: None,
            qualifiers: Qualifiers::default(),
            prediction: None,
            checks,
        })
    }

    fn conjecture(anchor: Anchor, threshold: String, prediction: bool) -> Self {
        debug_assert!(anchor.is_conjecture());
        Verdict {
            status: Status::Conjectured,
            anchor,
            threshold,
            target_component: None,
            qualifiers: Qualifiers::default(),
            prediction: Some(prediction),
            checks: Vec::new(),
        }
    }

    fn with_target(mut self, target: Option<String>) -> Self {
        self.target_component = target;
        self
    }

    fn with_qualifiers(mut self, q: Qualifiers) -> Self {
        self.qualifiers = q;
        self
    }

    /// The hypothesis replay agrees with the status.
    pub fn is_consistent(&self) -> bool {
        match self.status {
            Status::Guaranteed => !self.anchor.is_conjecture() && self.checks.iter().all(|c| c.holds),
            Status::Conjectured => self.anchor.is_conjecture() && self.prediction.is_some(),
            _ => !self.anchor.is_conjecture(),
        }
    }
}

/// A group `U(p,q)` or `O(p,q)`, written `U:p,q` or `O:p,q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub p: usize,
    pub q: usize,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, p: usize, q: usize) -> Self {
        GroupSpec { kind, p, q }
    }

    fn swapped(self) -> Self {
        GroupSpec { p: self.q, q: self.p, ..self }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind, self.p, self.q)
    }
}

impl FromStr for GroupSpec {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CoreError::Invalid(format!("expected U:p,q or O:p,q, got {s:?}"));
        let (k, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let kind = match k.trim() {
            "U" | "u" => GroupKind::U,
            "O" | "o" => GroupKind::O,
            _ => return Err(bad()),
        };
        let (p, q) = rest.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        Ok(GroupSpec { kind, p, q })
    }
}

/// The subgroup side of a query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type", content = "r")]
pub enum Subgroup {
    /// Both `G(p,q−1)` and `G(p−1,q)`.
    Pair,
    /// `G(p,q−r)` in the standard embedding. For the cup product the group is
    /// `H = G(p,q)` inside `G(p,q+r)` instead.
    Codim(usize),
    /// `O(p,q) ⊂ U(p,q)`.
    Orthogonal,
}

/// A cohomological component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum Component {
    U { lambda: Partition, mu: Partition },
    O { lambda: Partition },
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::U { lambda, mu } => write!(f, "H^{{{lambda},{mu}}}"),
            Component::O { lambda } => write!(f, "H^{{{lambda}}}"),
        }
    }
}

/// A degree or a single component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Query {
    Degree(usize),
    Component(Component),
}

fn upper(label: &str, lhs: usize, rhs: i64, strict: bool) -> (String, bool) {
    let op = if strict { "<" } else { "≤" };
    let holds = if strict { (lhs as i64) < rhs } else { (lhs as i64) <= rhs };
    (format!("{label} = {lhs} {op} {rhs}"), holds)
}

fn min_ok(p: usize, q: usize, m: usize) -> Check {
    check(format!("p,q ≥ {m} (p={p}, q={q})"), p >= m && q >= m)
}

fn rect_label(r: usize, p: usize) -> Partition {
    Partition::rectangle(p, r)
}

fn iso_qual(isotropic: bool) -> Qualifiers {
    Qualifiers { l2_cuspidal: isotropic, strongly_primitive: true, ..Qualifiers::default() }
}

/// Whether `λ = (i^p)` in a box with `p` rows, returning `i`.
fn row_rectangle(lambda: &Partition, p: usize) -> Option<usize> {
    let i = lambda.part(0);
    (*lambda == Partition::rectangle(p, i)).then_some(i)
}

/// Restriction verdict for `G ⊃ H`.
pub fn restriction_verdict(g: GroupSpec, h: Subgroup, query: &Query, isotropic: bool) -> Result<Verdict> {
    let GroupSpec { kind, p, q } = g;
    match (kind, h, query) {
        (_, _, Query::Degree(_)) if isotropic => {
            Ok(Verdict::not_covered("degree statements are proved for anisotropic groups only"))
        }
        (GroupKind::U, Subgroup::Pair, Query::Degree(k)) => {
            let (t, ok) = upper("k", *k, (p + q) as i64 - 1, true);
            Ok(Verdict::theorem(Anchor::Upq, t.clone(), vec![min_ok(p, q, 2), check(t, ok)]).unwrap_or_else(|| {
                rank_one_restriction(g, *k).unwrap_or_else(|| Verdict::not_covered("outside Thm upq"))
            }))
        }
        (GroupKind::O, Subgroup::Pair, Query::Degree(k)) => {
            if p.min(q) == 2 {
                let g2 = if p == 2 { g } else { g.swapped() };
                return restriction_verdict(g2, Subgroup::Codim(1), query, false);
            }
            let (t, ok) = upper("k", *k, (p + q) as i64 - 4, false);
            Ok(Verdict::theorem(Anchor::Opq, t.clone(), vec![min_ok(p, q, 3), check(t, ok)]).unwrap_or_else(|| {
                rank_one_restriction(g, *k).unwrap_or_else(|| Verdict::not_covered("outside Thm opq"))
            }))
        }
        (GroupKind::O, Subgroup::Codim(1), Query::Degree(k)) if p == 2 => {
            let (t, ok) = upper("k", *k, q as i64 - 1, false);
            Ok(Verdict::theorem(Anchor::O2n, t.clone(), vec![check(format!("n = {q} ≥ 3"), q >= 3), check(t, ok)])
                .unwrap_or_else(|| Verdict::not_covered("outside Thm o2n")))
        }
        (_, Subgroup::Codim(_), Query::Degree(k)) => Ok(rank_one_restriction(g, *k)
            .unwrap_or_else(|| Verdict::not_covered("degree statements need both subgroups of the pair"))),
        (GroupKind::U, Subgroup::Orthogonal, Query::Degree(k)) => Ok(u_to_o_degree(p, q, *k)),
        (GroupKind::U, Subgroup::Codim(r), Query::Component(Component::U { lambda, mu })) => {
            u_component_restriction(p, q, r, lambda, mu, isotropic)
        }
        (GroupKind::O, Subgroup::Codim(r), Query::Component(Component::O { lambda })) => {
            o_component_restriction(p, q, r, lambda, isotropic)
        }
        (GroupKind::U, Subgroup::Orthogonal, Query::Component(Component::U { lambda, mu })) => {
            uo_component_restriction(p, q, lambda, mu, isotropic)
        }
        _ => Err(CoreError::Invalid(format!("query {query:?} does not match {g} with subgroup {h:?}"))),
    }
}

/// Rank one: the restriction conjecture `i ≤ d_H / 2`.
fn rank_one_restriction(g: GroupSpec, k: usize) -> Option<Verdict> {
    if g.p != 1 {
        return None;
    }
    // d_H for H = G(1, q−1).
    let d_h = match g.kind {
        GroupKind::U => 2 * (g.q - 1),
        GroupKind::O => g.q - 1,
    };
    let holds = 2 * k <= d_h;
    Some(Verdict::conjecture(Anchor::ConjRankOne, format!("2k = {} ≤ d_H = {d_h}", 2 * k), holds))
}

fn u_to_o_degree(p: usize, q: usize, k: usize) -> Verdict {
    let holo = Qualifiers { holomorphic_only: true, ..Qualifiers::default() };
    if p >= 3 && q >= 3 {
        let (t, ok) = upper("k", k, (p + q) as i64 - 3, false);
        if let Some(v) = Verdict::theorem(Anchor::UandO, t, vec![min_ok(p, q, 3), check("k bound", ok)]) {
            return v.with_qualifiers(holo);
        }
    }
    if p.min(q) == 2 && p.max(q) >= 3 {
        let n = p.max(q);
        let (t, ok) = upper("k", k, (n / 2) as i64, false);
        if let Some(v) =
            Verdict::theorem(Anchor::UandO2, t, vec![check(format!("n = {n} ≥ 3"), true), check("k bound", ok)])
        {
            return v.with_qualifiers(holo);
        }
    }
    if k == p.min(q) && p.min(q) >= 1 {
        let t = format!("k = min(p,q) = {k}");
        return Verdict::theorem(Anchor::CorUO, t, vec![check("k = min(p,q)", true)])
            .expect("checks hold")
            .with_qualifiers(holo);
    }
    Verdict::not_covered("outside Thms u&o, u&o2 and Cor CORUO").with_qualifiers(holo)
}

fn u_component_restriction(
    p: usize,
    q: usize,
    r: usize,
    lambda: &Partition,
    mu: &Partition,
    iso: bool,
) -> Result<Verdict> {
    let ctx = BoxContext::new(p, q)?;
    let cp = CompatiblePair::new(lambda.clone(), mu.clone(), ctx)?;
    if r == 0 || r >= q {
        return Ok(Verdict::not_covered(format!("need 1 ≤ r < q, got r={r}")));
    }
    if iso {
        // Only the product components (i^p), ((q−j)^p) are covered.
        let i = row_rectangle(lambda, p);
        let j = row_rectangle(&mu.complement(ctx)?, p);
        if let (Some(i), Some(j)) = (i, j) {
            let (t, ok) = upper("i + j", i + j, q as i64 - r as i64 - 2, false);
            if let Some(v) = Verdict::theorem(Anchor::AnaUIso, t, vec![min_ok(p, q, 2), check("i + j bound", ok)]) {
                let tgt = format!("H^{{{},{}}} in U({p},{})", rect_label(i, p), rect_label(q - r - j, p), q - r);
                return Ok(v.with_target(Some(tgt)).with_qualifiers(iso_qual(true)));
            }
        }
        return Ok(Verdict::not_covered("isotropic restriction is open outside Thm anaU'"));
    }
    let ins = inscribes(r, &cp.skew(), p);
    let t = format!("({r}^{p}) inscribes in {mu}/{lambda}");
    let v = Verdict {
        status: if ins { Status::Guaranteed } else { Status::FailsCriterion },
        anchor: Anchor::Analogue,
        threshold: t.clone(),
        target_component: restrict_u_pair(&cp, r)?
            .target
            .map(|t| format!("H^{{{},{}}} in U({p},{})", t.lambda, t.mu, q - r)),
        qualifiers: iso_qual(false),
        prediction: None,
        checks: vec![check(t, ins)],
    };
    Ok(v)
}

fn o_component_restriction(p: usize, q: usize, r: usize, lambda: &Partition, iso: bool) -> Result<Verdict> {
    let ctx = BoxContext::new(p, q)?;
    let orth = ortho_classify(lambda, ctx)?.ok_or_else(|| CoreError::NotOrthogonal(lambda.clone().into()))?;
    if r == 0 || r >= q {
        return Ok(Verdict::not_covered(format!("need 1 ≤ r < q, got r={r}")));
    }
    let small_target = |l: &Partition| format!("H^{{{l}}} in O({p},{})", q - r);
    if let Some(i) = row_rectangle(lambda, p) {
        let two_i = 2 * i as i64;
        let c1 = check(format!("2i = {two_i} ≤ q−r−2 = {}", q as i64 - r as i64 - 2), two_i <= q as i64 - r as i64 - 2);
        let c2 = check(
            format!("p+q−r−2i = {} ≥ 5", (p + q) as i64 - r as i64 - two_i),
            (p + q) as i64 - r as i64 - two_i >= 5,
        );
        let anchor = if iso { Anchor::AnaOIso } else { Anchor::AnaO };
        let t = format!(
            "2i = {two_i} ≤ {} and p+q−r−2i = {} ≥ 5",
            q as i64 - r as i64 - 2,
            (p + q) as i64 - r as i64 - two_i
        );
        if let Some(v) = Verdict::theorem(anchor, t, vec![min_ok(p, q, 2), c1, c2]) {
            return Ok(v.with_target(Some(small_target(lambda))).with_qualifiers(iso_qual(iso)));
        }
    }
    let ins = inscribes(r, &orth.pair().skew(), p);
    let t = format!("({r}^{p}) inscribes in {}/{lambda}", orth.complement());
    Ok(Verdict::conjecture(Anchor::ConjCanaO, t, ins)
        .with_target(ins.then(|| small_target(lambda)))
        .with_qualifiers(iso_qual(iso)))
}

fn uo_component_restriction(p: usize, q: usize, lambda: &Partition, mu: &Partition, iso: bool) -> Result<Verdict> {
    let ctx = BoxContext::new(p, q)?;
    let cp = CompatiblePair::new(lambda.clone(), mu.clone(), ctx)?;
    let full = ctx.full();
    if *mu == full {
        if let Some(i) = row_rectangle(lambda, p) {
            let two_i = 2 * i as i64;
            let c1 = check(format!("2i = {two_i} ≤ q−2 = {}", q as i64 - 2), two_i <= q as i64 - 2);
            let c2 = check(format!("p+q−2i = {} ≥ 5", (p + q) as i64 - two_i), (p + q) as i64 - two_i >= 5);
            let anchor = if iso { Anchor::AnaUOIso } else { Anchor::AnaUO };
            let t = format!("2i = {two_i} ≤ {} and p+q−2i = {} ≥ 5", q as i64 - 2, (p + q) as i64 - two_i);
            if let Some(v) = Verdict::theorem(anchor, t, vec![min_ok(p, q, 2), c1, c2]) {
                return Ok(v.with_target(Some(format!("H^{{{lambda}}} in O({p},{q})"))).with_qualifiers(iso_qual(iso)));
            }
        }
    }
    // Conjecture: nonzero only if λ = 0 or μ = p×q; then injective iff the free side is orthogonal.
    let survives = restrict_uo_vanishing(&cp);
    let free = if *mu == full {
        Some(lambda.clone())
    } else if lambda.is_empty() {
        Some(mu.complement(ctx)?)
    } else {
        None
    };
    let orth = match &free {
        Some(l) => ortho_classify(l, ctx)?.is_some(),
        None => false,
    };
    let prediction = survives && orth;
    let t = match &free {
        Some(l) => format!("{l} orthogonal in {p}x{q}"),
        None => "λ = 0 or μ = p×q".to_string(),
    };
    Ok(Verdict::conjecture(Anchor::ConjCanaUO, t, prediction)
        .with_target(if prediction { free.map(|l| format!("H^{{{l}}} in O({p},{q})")) } else { None })
        .with_qualifiers(iso_qual(iso)))
}

/// Cup product with the class of `H = G(p,q)` inside `G = G(p,q+r)`.
///
/// `g` is the ambient group; `Subgroup::Codim(r)` names `H`. Component queries
/// live in the `p × (q_G − r)` box of `H`.
pub fn cup_verdict(g: GroupSpec, h: Subgroup, query: &Query) -> Result<Verdict> {
    let GroupSpec { kind, p, q: qg } = g;
    let Subgroup::Codim(r) = h else {
        return Err(CoreError::Invalid(format!("cup product needs a codimension subgroup, got {h:?}")));
    };
    if r == 0 || r >= qg {
        return Ok(Verdict::not_covered(format!("need 1 ≤ r < q, got r={r}")));
    }
    let qh = qg - r;
    match (kind, query) {
        (GroupKind::U, Query::Degree(k)) => {
            if r == 1 {
                let (t, ok) = upper("k", *k, qg as i64 - p as i64 - 1, true);
                if let Some(v) = Verdict::theorem(Anchor::Upq, t, vec![min_ok(p, qg, 2), check("k bound", ok)]) {
                    return Ok(v);
                }
            }
            Ok(rank_one_cup(g, r, *k).unwrap_or_else(|| Verdict::not_covered("outside Thm upq")))
        }
        (GroupKind::O, Query::Degree(k)) => {
            let k = *k;
            if r == 1 && p >= 3 && qg >= 3 {
                let (t, ok) = upper("2k", 2 * k, qg as i64 - p as i64 - 3, false);
                if let Some(v) = Verdict::theorem(Anchor::Opq, t, vec![min_ok(p, qg, 3), check("k bound", ok)]) {
                    return Ok(v);
                }
            }
            if r == 1 && p == 2 && qg >= 3 {
                let (t, ok) = upper("k", k, (qg / 2) as i64 - 2, false);
                if let Some(v) =
                    Verdict::theorem(Anchor::O2n, t, vec![check(format!("n = {qg} ≥ 3"), true), check("k bound", ok)])
                {
                    return Ok(v);
                }
            }
            if let Some(v) = cup_combined(p, qh, r, k) {
                return Ok(v);
            }
            Ok(rank_one_cup(g, r, k).unwrap_or_else(|| Verdict::not_covered("outside Thms opq, o2n and cupH")))
        }
        (GroupKind::U, Query::Component(Component::U { lambda, mu })) => {
            let ctx = BoxContext::new(p, qh)?;
            let cp = CompatiblePair::new(lambda.clone(), mu.clone(), ctx)?;
            let target = format!("H^{{{},{}}} in U({p},{qg})", lambda.add_rectangle(r, p), mu);
            if lambda.is_empty() && *mu == ctx.full() {
                let v = modular_symbol_verdict(GroupKind::U, p, qh, r, false);
                if v.status == Status::Guaranteed {
                    return Ok(v);
                }
            }
            let ins = inscribes(r, &cp.skew(), p);
            let t = format!("({r}^{p}) inscribes in {mu}/{lambda}");
            Ok(Verdict::conjecture(Anchor::ConjCup2, t, ins)
                .with_target(ins.then_some(target))
                .with_qualifiers(iso_qual(false)))
        }
        (GroupKind::O, Query::Component(Component::O { lambda })) => {
            let ctx = BoxContext::new(p, qh)?;
            let orth = ortho_classify(lambda, ctx)?.ok_or_else(|| CoreError::NotOrthogonal(lambda.clone().into()))?;
            let ins = inscribes(r, &orth.pair().skew(), p);
            let target = format!("H^{{{}}} in O({p},{qg})", lambda.add_rectangle(r, p));
            if lambda.is_empty() {
                let v = modular_symbol_verdict(GroupKind::O, p, qh, r, false);
                if v.status == Status::Guaranteed {
                    return Ok(v);
                }
            }
            if ins {
                if let Some(v) = cup_combined(p, qh, r, lambda.weight()) {
                    return Ok(v.with_target(Some(target)).with_qualifiers(iso_qual(false)));
                }
            }
            let t = format!("({r}^{p}) inscribes in {}/{lambda}", orth.complement());
            Ok(Verdict::conjecture(Anchor::ConjC100, t, ins)
                .with_target(ins.then_some(target))
                .with_qualifiers(iso_qual(false)))
        }
        _ => Err(CoreError::Invalid(format!("query {query:?} does not match {g}"))),
    }
}

/// `k ≤ min(p+q+r−rp−3, (q−pr)/2 − 1)` for `O(p,q) ⊂ O(p,q+r)`, `p,q ≥ 2`.
fn cup_combined(p: usize, qh: usize, r: usize, k: usize) -> Option<Verdict> {
    let a = (p + qh + r) as i64 - (r * p) as i64 - 3;
    // (q−pr)/2 − 1, compared as 2k ≤ q − pr − 2.
    let b2 = qh as i64 - (p * r) as i64 - 2;
    let c1 = check(format!("k = {k} ≤ p+q+r−rp−3 = {a}"), k as i64 <= a);
    let c2 = check(format!("2k = {} ≤ q−pr−2 = {b2}", 2 * k), 2 * k as i64 <= b2);
    let t = format!("k = {k} ≤ min({a}, ({qh}−{})/2 − 1)", p * r);
    Verdict::theorem(Anchor::CupHCombined, t, vec![min_ok(p, qh, 2), c1, c2])
}

/// Rank one: the cup-product conjecture `i ≤ d_H − d_G/2`.
fn rank_one_cup(g: GroupSpec, r: usize, k: usize) -> Option<Verdict> {
    if g.p != 1 {
        return None;
    }
    let (d_g, d_h) = match g.kind {
        GroupKind::U => (2 * g.q, 2 * (g.q - r)),
        GroupKind::O => (g.q, g.q - r),
    };
    let rhs = 2 * d_h as i64 - d_g as i64;
    Some(Verdict::conjecture(Anchor::ConjRankOne, format!("2k = {} ≤ 2d_H − d_G = {rhs}", 2 * k), 2 * k as i64 <= rhs))
}

/// A query about products of two classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductQuery {
    /// Classes of degrees `k` and `l`.
    Degrees(usize, usize),
    /// Classes in the product components named by the tensor query.
    Component(TensorQuery),
}

/// Nonvanishing of `g(α) ∧ β` in `G(p,q)`.
pub fn tensor_verdict(g: GroupSpec, query: ProductQuery, isotropic: bool) -> Verdict {
    let GroupSpec { kind, p, q } = g;
    match (kind, query) {
        (_, ProductQuery::Degrees(..)) if isotropic => {
            Verdict::not_covered("degree statements are proved for anisotropic groups only")
        }
        (GroupKind::U, ProductQuery::Degrees(k, l)) => {
            let (t, ok) = upper("k + l", k + l, (p + q) as i64 - 1, false);
            Verdict::theorem(Anchor::CupU, t, vec![check("k + l bound", ok)])
                .unwrap_or_else(|| Verdict::not_covered("outside Thm cup u"))
        }
        (GroupKind::O, ProductQuery::Degrees(k, l)) => {
            let (t, ok) = upper("k + l", k + l, (p + q) as i64 - 3, false);
            if let Some(v) = Verdict::theorem(Anchor::CupO, t, vec![min_ok(p, q, 2), check("k + l bound", ok)]) {
                return v;
            }
            if p.min(q) == 1 {
                let n = p.max(q);
                return Verdict::conjecture(
                    Anchor::ConjCupHyp,
                    format!("2(k + l) = {} ≤ n = {n}", 2 * (k + l)),
                    2 * (k + l) <= n,
                );
            }
            Verdict::not_covered("outside Thm cup o")
        }
        (GroupKind::U, ProductQuery::Component(tq @ TensorQuery::U { i, j, k, l })) => {
            let (t, ok) = upper("i + j + k + l", i + j + k + l, q as i64 - 2, false);
            let target = tensor_contains(p, q, tq).target;
            Verdict::theorem(Anchor::CupUIso, t, vec![min_ok(p, q, 2), check("sum bound", ok)])
                .map(|v| v.with_target(target).with_qualifiers(iso_qual(isotropic)))
                .unwrap_or_else(|| Verdict::not_covered("outside Thm cupU'"))
        }
        (GroupKind::O, ProductQuery::Component(tq @ TensorQuery::O { k, l })) => {
            let s = 2 * (k + l) as i64;
            let c1 = check(format!("2(k+l) = {s} ≤ q−2 = {}", q as i64 - 2), s <= q as i64 - 2);
            let c2 = check(format!("p+q−2(k+l) = {} ≥ 5", (p + q) as i64 - s), (p + q) as i64 - s >= 5);
            let anchor = if isotropic { Anchor::CupOIso } else { Anchor::CupOComponent };
            let target = tensor_contains(p, q, tq).target;
            let t = format!("2(k+l) = {s} ≤ {} and p+q−2(k+l) = {} ≥ 5", q as i64 - 2, (p + q) as i64 - s);
            Verdict::theorem(anchor, t, vec![min_ok(p, q, 2), c1, c2])
                .map(|v| v.with_target(target.clone()).with_qualifiers(iso_qual(isotropic)))
                .unwrap_or_else(|| {
                    let pred = s <= q as i64;
                    Verdict::conjecture(Anchor::ConjCupO, format!("2(k + l) = {s} ≤ q = {q}"), pred)
                        .with_target(if pred { target } else { None })
                        .with_qualifiers(iso_qual(isotropic))
                })
        }
        (_, ProductQuery::Component(_)) => Verdict::not_covered(format!("component family does not match {g}")),
    }
}

/// Rank condition for the `L²` class of `G(p,q) ⊂ G(p,q+r)`: `q ≥ r`.
pub fn theta_rank_condition(_kind: GroupKind, _p: usize, q: usize, r: usize) -> bool {
    q >= r
}

/// Which spectral threshold is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum L2Convention {
    /// `(q + pr − 1)/2`, the isomorphism statement.
    #[serde(rename = "(q+pr-1)/2")]
    Isomorphism,
    /// `(p + qr − 1)/2`, the spectral-gap estimate.
    #[serde(rename = "(p+qr-1)/2")]
    SpectralGap,
}

/// Degree range of the isomorphism `H^{k−pr}(C_V) → H²_k(M_V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct L2Threshold {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub convention: L2Convention,
    /// The bound `b` in `k < b/2`, doubled so it stays an integer.
    pub bound_doubled: i64,
    /// Largest target degree covered, if any.
    pub max_degree: Option<i64>,
    /// `p = 1` and `q + r` even: injectivity persists at `k = (q+r)/2`.
    pub middle_injective_degree: Option<usize>,
    /// `r = 0`: the map is the identity.
    pub identity_map: bool,
}

impl L2Threshold {
    pub fn isomorphism_at(&self, k: usize) -> bool {
        2 * (k as i64) < self.bound_doubled
    }

    pub fn injective_at(&self, k: usize) -> bool {
        self.isomorphism_at(k) || self.middle_injective_degree == Some(k)
    }
}

pub fn l2_cup_threshold(p: usize, q: usize, r: usize, convention: L2Convention) -> L2Threshold {
    let bound_doubled = match convention {
        L2Convention::Isomorphism => (q + p * r) as i64 - 1,
        L2Convention::SpectralGap => (p + q * r) as i64 - 1,
    };
    // Largest integer k with 2k < b.
    let max = (bound_doubled - 1).div_euclid(2);
    L2Threshold {
        p,
        q,
        r,
        convention,
        bound_doubled,
        max_degree: (max >= 0).then_some(max),
        middle_injective_degree: (p == 1 && (q + r).is_multiple_of(2)).then_some((q + r) / 2),
        identity_map: r == 0,
    }
}

/// Both conventions, isomorphism form first.
pub fn l2_cup_thresholds(p: usize, q: usize, r: usize) -> [L2Threshold; 2] {
    [l2_cup_threshold(p, q, r, L2Convention::Isomorphism), l2_cup_threshold(p, q, r, L2Convention::SpectralGap)]
}

/// Non-triviality of the class of `H = G(p,q)` inside `G(p,q+r)`.
pub fn modular_symbol_verdict(kind: GroupKind, p: usize, q: usize, r: usize, isotropic: bool) -> Verdict {
    let target = match kind {
        GroupKind::O => format!("H^{{{}}} in O({p},{})", rect_label(r, p), q + r),
        GroupKind::U => format!("H^{{{},{}}} in U({p},{})", rect_label(r, p), rect_label(q, p), q + r),
    };
    let rank = check(format!("q = {q} ≥ r = {r}"), theta_rank_condition(kind, p, q, r));
    if p == 1 && r == 1 {
        let min_q = if kind == GroupKind::O { 2 } else { 1 };
        if let Some(v) =
            Verdict::theorem(Anchor::SymbRankOne, format!("q = {q} ≥ {min_q}"), vec![check("q bound", q >= min_q)])
        {
            let qual = Qualifiers { l2_cuspidal: isotropic, strongly_primitive: true, ..Qualifiers::default() };
            return v.with_target(Some(target)).with_qualifiers(qual);
        }
    }
    let mut checks = vec![min_ok(p, q, 2), rank, check(format!("q = {q} ≥ r+2 = {}", r + 2), q >= r + 2)];
    let anchor = match (kind, isotropic) {
        (GroupKind::O, false) => Anchor::SymbModul,
        (GroupKind::O, true) => Anchor::SymbModulIso,
        (GroupKind::U, false) => Anchor::SymbModulU,
        (GroupKind::U, true) => Anchor::SymbModulUIso,
    };
    let t = match kind {
        GroupKind::O => {
            checks.push(check(format!("p+q−r = {} ≥ 5", (p + q) as i64 - r as i64), (p + q) as i64 - r as i64 >= 5));
            format!("q = {q} ≥ {} and p+q−r = {} ≥ 5", r + 2, (p + q) as i64 - r as i64)
        }
        GroupKind::U => format!("q = {q} ≥ {}", r + 2),
    };
    Verdict::theorem(anchor, t, checks)
        .map(|v| v.with_target(Some(target)).with_qualifiers(iso_qual(isotropic)))
        .unwrap_or_else(|| Verdict::not_covered(format!("outside {anchor} for p={p}, q={q}, r={r}")))
}

/// Which components a class of degree `k` can lie in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ComponentConstraint {
    TrivialOnly,
    /// Classes of degree `k ≤ p+q−4` lie in `A((i^p))` or `A((q^j))`.
    Families {
        rows: Vec<Partition>,
        columns: Vec<Partition>,
        /// Orthogonal `λ` with `|λ| ≤ k` in neither family, found by enumeration.
        /// For `p,q ≥ 3` this is nonempty only at `k = p+q−4` with one side `4`
        /// and the other even.
        outside: Vec<Partition>,
    },
    Unconstrained,
}

pub fn component_constraint(kind: GroupKind, p: usize, q: usize, k: usize) -> Result<ComponentConstraint> {
    if k == 0 {
        return Ok(ComponentConstraint::TrivialOnly);
    }
    if kind != GroupKind::O || (k as i64) > (p + q) as i64 - 4 {
        return Ok(ComponentConstraint::Unconstrained);
    }
    let ctx = BoxContext::new(p, q)?;
    let keep = |l: Partition| -> Result<Option<Partition>> {
        Ok((l.weight() <= k && ortho_classify(&l, ctx)?.is_some()).then_some(l))
    };
    let mut rows = Vec::new();
    for i in 0..=q {
        rows.extend(keep(Partition::rectangle(p, i))?);
    }
    let mut columns = Vec::new();
    for j in 0..=p {
        columns.extend(keep(Partition::rectangle(j, q))?);
    }
    let outside = enumerate_orthogonal(ctx, DEFAULT_ENUM_CAP.max(ctx.area()))?
        .into_iter()
        .map(|o| o.lambda)
        .filter(|l| l.weight() <= k && !rows.contains(l) && !columns.contains(l))
        .collect();
    Ok(ComponentConstraint::Families { rows, columns, outside })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_are_unique() {
        let mut labels: Vec<_> = Anchor::ALL.iter().map(|a| a.label()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), Anchor::ALL.len());
    }

    #[test]
    fn parse_group() {
        let g: GroupSpec = "O:3,4".parse().unwrap();
        assert_eq!(g, GroupSpec::new(GroupKind::O, 3, 4));
        assert!("X:1,2".parse::<GroupSpec>().is_err());
    }
}
