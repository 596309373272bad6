//! Young diagrams in a `p x q` box: conjugates, complements, skew shapes,
//! compatible pairs, orthogonal partitions and rectangle inscription.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::rootdata::{Convention, Half, Weight};

/// Default bound on `p * q` for exhaustive enumeration.
pub const DEFAULT_ENUM_CAP: usize = 42;

/// A weakly decreasing sequence of nonnegative integers with trailing zeros removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self { parts: vec![cols; rows] }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based); zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts padded with zeros (or truncated) to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width).map(|j| self.parts.iter().take_while(|&&x| x >= j).count()).collect();
        Self { parts }
    }

    /// True when `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn fits(&self, ctx: BoxContext) -> bool {
        self.length() <= ctx.p && self.part(0) <= ctx.q
    }

    fn check_fits(&self, ctx: BoxContext) -> Result<()> {
        if self.fits(ctx) {
            Ok(())
        } else {
            Err(CoreError::NotInBox { parts: self.parts.clone(), p: ctx.p, q: ctx.q })
        }
    }

    /// `λ̂_i = q − λ_{p−i+1}`: the complement rotated by a half turn.
    pub fn complement(&self, ctx: BoxContext) -> Result<Self> {
        self.check_fits(ctx)?;
        let parts = (0..ctx.p).map(|i| ctx.q - self.part(ctx.p - 1 - i)).collect();
        Partition::new(parts)
    }

    /// Componentwise sum with `(r^rows)`.
    pub fn add_rectangle(&self, r: usize, rows: usize) -> Self {
        let n = rows.max(self.length());
        let parts = (0..n).map(|i| self.part(i) + if i < rows { r } else { 0 }).collect();
        Partition::new(parts).expect("adding a rectangle keeps parts decreasing")
    }

    /// Componentwise difference `λ − (r^rows)`, if it stays a partition.
    pub fn sub_rectangle(&self, r: usize, rows: usize) -> Option<Self> {
        if self.length() > rows {
            return None;
        }
        let parts: Option<Vec<usize>> = (0..rows).map(|i| self.part(i).checked_sub(r)).collect();
        parts.and_then(|p| Partition::new(p).ok())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CoreError;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    /// Accepts `5,3,3,2`, `(5,3,3,2)`, `()` or an empty string. A part may be
    /// written `a^k` for `k` copies of `a`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || CoreError::Invalid(format!("bad partition token `{tok}`"));
            match tok.split_once('^') {
                Some((a, k)) => {
                    let a: usize = a.trim().parse().map_err(|_| bad())?;
                    let k: usize = k.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(a, k));
                }
                None => parts.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Partition::new(parts)
    }
}

/// The ambient `p x q` rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxContext {
    pub p: usize,
    pub q: usize,
}

impl BoxContext {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(CoreError::EmptyBox { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn area(self) -> usize {
        self.p * self.q
    }

    pub fn full(self) -> Partition {
        Partition::rectangle(self.p, self.q)
    }

    /// All partitions inside the box, ordered by `(|λ|, λ)`.
    pub fn partitions(self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.p);
        fill_box(self.p, self.q, &mut cur, &mut out);
        out.sort_by(|a, b| (a.weight(), a).cmp(&(b.weight(), b)));
        out
    }

    fn check_cap(self, cap: usize) -> Result<()> {
        if self.area() > cap {
            return Err(CoreError::CapExceeded { name: "enum_cap", value: self.area(), limit: cap });
        }
        Ok(())
    }
}

fn fill_box(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if cur.len() == rows {
        out.push(Partition::new(cur.clone()).expect("generated decreasing"));
        return;
    }
    for x in 0..=max {
        cur.push(x);
        fill_box(rows, x, cur, out);
        cur.pop();
    }
}

/// A nested pair `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub inner: Partition,
    pub outer: Partition,
}

impl SkewShape {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(CoreError::NotContained { inner: inner.into(), outer: outer.into() });
        }
        Ok(Self { inner, outer })
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }
}

/// A maximal block of skew rows sharing the same `[left, right)` column range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub first_row: usize,
    pub rows: usize,
    pub left: usize,
    pub right: usize,
}

impl Run {
    pub fn cols(&self) -> usize {
        self.right - self.left
    }
}

/// A pair `λ ⊆ μ ⊆ p x q` whose skew is a corner-disjoint union of rectangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompatiblePair {
    pub lambda: Partition,
    pub mu: Partition,
    pub ctx: BoxContext,
    /// `(p_i, q_i)` from top to bottom.
    pub rects: Vec<(usize, usize)>,
}

impl CompatiblePair {
    pub fn new(lambda: Partition, mu: Partition, ctx: BoxContext) -> Result<Self> {
        skew_decompose(&lambda, &mu, ctx)?
            .ok_or_else(|| CoreError::Incompatible { lambda: lambda.clone().into(), mu: mu.clone().into() })
    }

    pub fn skew(&self) -> SkewShape {
        SkewShape { inner: self.lambda.clone(), outer: self.mu.clone() }
    }

    /// Positions of the rectangles, top to bottom.
    pub fn runs(&self) -> Vec<Run> {
        scan_runs(&self.lambda, &self.mu, self.ctx.p)
    }

    pub fn is_empty_skew(&self) -> bool {
        self.rects.is_empty()
    }
}

fn scan_runs(lambda: &Partition, mu: &Partition, p: usize) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for i in 0..p {
        let (l, m) = (lambda.part(i), mu.part(i));
        if l == m {
            continue;
        }
        match runs.last_mut() {
            Some(run) if run.first_row + run.rows == i && run.left == l && run.right == m => {
                run.rows += 1;
            }
            _ => runs.push(Run { first_row: i, rows: 1, left: l, right: m }),
        }
    }
    runs
}

/// Splits `μ/λ` into rectangles meeting only at corners, top to bottom.
///
/// Returns `Ok(None)` when the skew is not of that form.
pub fn skew_decompose(lambda: &Partition, mu: &Partition, ctx: BoxContext) -> Result<Option<CompatiblePair>> {
    mu.check_fits(ctx)?;
    SkewShape::new(lambda.clone(), mu.clone())?;
    let runs = scan_runs(lambda, mu, ctx.p);
    // Each rectangle must sit weakly left of the one above it.
    let ok = runs.windows(2).all(|w| w[1].right <= w[0].left);
    if !ok {
        return Ok(None);
    }
    Ok(Some(CompatiblePair {
        lambda: lambda.clone(),
        mu: mu.clone(),
        ctx,
        rects: runs.iter().map(|r| (r.rows, r.cols())).collect(),
    }))
}

/// Reads `(λ, μ)` off a dominant element: `λ_i = #{j : y_j < x_i}`, `μ_i = #{j : y_j ≤ x_i}`.
pub fn partitions_of(x: &Weight) -> Result<(Partition, Partition)> {
    let lam = x.xs.iter().map(|xi| x.ys.iter().filter(|yj| *yj < xi).count()).collect();
    let mu = x.xs.iter().map(|xi| x.ys.iter().filter(|yj| *yj <= xi).count()).collect();
    Ok((Partition::new(lam)?, Partition::new(mu)?))
}

/// A dominant integral `X = (x; y)` whose induced pair is `(λ, μ)`.
///
/// Columns covered by one rectangle share a value; every other column gets a
/// fresh one. Rows inside a rectangle tie with it, other rows fall strictly
/// between neighbouring column values.
pub fn build_witness_x(cp: &CompatiblePair) -> Weight {
    let BoxContext { p, q } = cp.ctx;
    let runs = cp.runs();
    let mut ys = vec![0i64; q];
    let mut group = 0i64;
    let mut j = 0;
    while j < q {
        group += 1;
        match runs.iter().find(|r| r.left == j) {
            Some(r) => {
                for y in &mut ys[r.left..r.right] {
                    *y = 2 * group;
                }
                j = r.right;
            }
            None => {
                ys[j] = 2 * group;
                j += 1;
            }
        }
    }
    let xs: Vec<i64> = (0..p)
        .map(|i| match runs.iter().find(|r| (r.first_row..r.first_row + r.rows).contains(&i)) {
            Some(r) => ys[r.left],
            None => match cp.lambda.part(i) {
                0 => ys[0] - 1,
                c => ys[c - 1] + 1,
            },
        })
        .collect();
    Weight {
        xs: xs.into_iter().map(Half::int).collect(),
        ys: ys.into_iter().map(Half::int).collect(),
        conv: Convention::U,
    }
}

/// Componentwise inscription of `(r^p)` in `μ/λ`: `μ − (r^p) ⊇ λ`.
pub fn inscribes(r: usize, skew: &SkewShape, p: usize) -> bool {
    (0..p).all(|i| skew.outer.part(i) >= skew.inner.part(i) + r)
}

/// Rectangle form: the rectangles cover all `p` rows and each is at least `r` wide.
pub fn inscribes_rect(r: usize, cp: &CompatiblePair) -> bool {
    cp.rects.iter().map(|&(a, _)| a).sum::<usize>() == cp.ctx.p && cp.rects.iter().all(|&(_, b)| b >= r)
}

/// Componentwise inscription, asserting agreement with the rectangle form for `r ≥ 1`.
pub fn inscribes_checked(r: usize, cp: &CompatiblePair) -> bool {
    let a = inscribes(r, &cp.skew(), cp.ctx.p);
    if r >= 1 {
        assert_eq!(a, inscribes_rect(r, cp), "inscription forms disagree for r={r} on {cp:?}");
    }
    a
}

/// Parity of an orthogonal partition: number of rectangles in `λ̂/λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Which sign slots an even orthogonal partition carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EvenType {
    /// One sign acting on the `O(p)` side.
    #[serde(rename = "1")]
    One,
    /// One sign acting on the `O(q)` side.
    #[serde(rename = "2")]
    Two,
    /// Two independent signs.
    #[serde(rename = "3")]
    Three,
}

impl EvenType {
    pub fn number(self) -> u8 {
        match self {
            EvenType::One => 1,
            EvenType::Two => 2,
            EvenType::Three => 3,
        }
    }
}

/// A partition with `(λ, λ̂)` compatible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrthoPartition {
    pub lambda: Partition,
    pub ctx: BoxContext,
    /// `(a_i, b_i)` from the outside in.
    pub pairs: Vec<(usize, usize)>,
    /// `(p₀, q₀)`, present exactly when the rectangle count is odd.
    pub central: Option<(usize, usize)>,
    pub parity: Parity,
    pub even_type: Option<EvenType>,
    /// Full rectangle list of `λ̂/λ`, top to bottom.
    pub rects: Vec<(usize, usize)>,
}

impl OrthoPartition {
    pub fn new(lambda: Partition, ctx: BoxContext) -> Result<Self> {
        ortho_classify(&lambda, ctx)?.ok_or_else(|| CoreError::NotOrthogonal(lambda.into()))
    }

    pub fn complement(&self) -> Partition {
        self.lambda.complement(self.ctx).expect("stored partition fits")
    }

    pub fn pair(&self) -> CompatiblePair {
        CompatiblePair { lambda: self.lambda.clone(), mu: self.complement(), ctx: self.ctx, rects: self.rects.clone() }
    }

    /// `(p₀, q₀)` with `(0, 0)` standing for a missing central block.
    pub fn central_or_zero(&self) -> (usize, usize) {
        self.central.unwrap_or((0, 0))
    }

    /// Number of modules carried by this partition (1, 2 or 4).
    pub fn sign_multiplicity(&self) -> usize {
        match self.even_type {
            None => 1,
            Some(EvenType::One) | Some(EvenType::Two) => 2,
            Some(EvenType::Three) => 4,
        }
    }
}

/// Classifies `λ` as orthogonal (or not) in `p x q`.
pub fn ortho_classify(lambda: &Partition, ctx: BoxContext) -> Result<Option<OrthoPartition>> {
    let hat = lambda.complement(ctx)?;
    if !hat.contains(lambda) {
        return Ok(None);
    }
    let Some(cp) = skew_decompose(lambda, &hat, ctx)? else {
        return Ok(None);
    };
    let rects = cp.rects;
    debug_assert!(rects.iter().eq(rects.iter().rev()), "skew of an orthogonal partition is a palindrome");
    let m = rects.len();
    let pairs = rects[..m / 2].to_vec();
    let central = (m % 2 == 1).then(|| rects[m / 2]);
    let parity = if central.is_some() { Parity::Odd } else { Parity::Even };
    let even_type = match parity {
        Parity::Odd => None,
        Parity::Even => Some(even_type_of(lambda, ctx)?),
    };
    Ok(Some(OrthoPartition { lambda: lambda.clone(), ctx, pairs, central, parity, even_type, rects }))
}

fn even_type_of(lambda: &Partition, ctx: BoxContext) -> Result<EvenType> {
    let BoxContext { p, q } = ctx;
    match (p % 2, q % 2) {
        (0, 1) => Ok(EvenType::One),
        (1, 0) => Ok(EvenType::Two),
        (0, 0) => {
            let (r, s) = (p / 2, q / 2);
            let conj = lambda.conjugate();
            let row_drop = lambda.part(r - 1) > lambda.part(r);
            let col_drop = conj.part(s - 1) > conj.part(s);
            match (row_drop, col_drop) {
                (true, false) => Ok(EvenType::One),
                (false, true) => Ok(EvenType::Two),
                (true, true) => Ok(EvenType::Three),
                (false, false) => {
                    Err(CoreError::Invalid(format!("even orthogonal {lambda} in {p}x{q} with no drop at the centre")))
                }
            }
        }
        _ => Err(CoreError::Invalid(format!("even orthogonal {lambda} in odd x odd box {p}x{q}"))),
    }
}

/// Every compatible pair in the box, ordered by `(|λ|, λ, μ)`.
pub fn enumerate_compatible(ctx: BoxContext, cap: usize) -> Result<Vec<CompatiblePair>> {
    ctx.check_cap(cap)?;
    let all = ctx.partitions();
    let mut out = Vec::new();
    for lambda in &all {
        for mu in all.iter().filter(|mu| mu.contains(lambda)) {
            if let Some(cp) = skew_decompose(lambda, mu, ctx)? {
                out.push(cp);
            }
        }
    }
    out.sort_by(|a, b| (a.lambda.weight(), &a.lambda, &a.mu).cmp(&(b.lambda.weight(), &b.lambda, &b.mu)));
    Ok(out)
}

/// Every orthogonal partition in the box, ordered by `(|λ|, λ)`.
pub fn enumerate_orthogonal(ctx: BoxContext, cap: usize) -> Result<Vec<OrthoPartition>> {
    ctx.check_cap(cap)?;
    let mut out = Vec::new();
    for lambda in ctx.partitions() {
        if let Some(o) = ortho_classify(&lambda, ctx)? {
            out.push(o);
        }
    }
    Ok(out)
}

/// The counting fact behind the L² rank criterion: rectangles that miss a row
/// or are narrower than `r` have total area `< pq − q + r`.
pub fn small_area_fact(rects: &[(usize, usize)], p: usize, q: usize, r: usize) -> bool {
    let rows: usize = rects.iter().map(|&(a, _)| a).sum();
    let narrow = rects.iter().any(|&(_, b)| b < r);
    if rows < p || narrow {
        let area: usize = rects.iter().map(|&(a, b)| a * b).sum();
        area + q < p * q + r
    } else {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(part(&[2, 1, 0, 0]), part(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "(3,1^2)".parse().unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.to_string(), "(3,1,1)");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn rectangle_arithmetic() {
        let mu = part(&[2, 1]);
        assert_eq!(mu.sub_rectangle(1, 2), Some(part(&[1])));
        assert_eq!(mu.sub_rectangle(2, 2), None);
        assert_eq!(part(&[1]).add_rectangle(1, 2), part(&[2, 1]));
    }
}
