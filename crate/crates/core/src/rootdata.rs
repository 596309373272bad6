//! Torus coordinates, root data, lowest K-type weights, degrees and the
//! Parthasarathy-Dirac bound.
//!
//! Coordinates for `U(p,q)` are `(x_1..x_p; y_1..y_q)`. For `O(p,q)` they are
//! `(x_1..x_r; y_1..y_s)` with `r = ⌊p/2⌋`, `s = ⌊q/2⌋`. Half-integers are
//! stored doubled so all arithmetic stays exact.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CoreError, Result};
use crate::partitions::{CompatiblePair, EvenType, OrthoPartition, Partition};

/// Exact half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn int(n: i64) -> Self {
        Half(2 * n)
    }

    pub fn from_doubled(d: i64) -> Self {
        Half(d)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        Half(self.0.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 2)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integer() {
            s.serialize_i64(self.0 / 2)
        } else {
            s.serialize_f64(self.to_f64())
        }
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        let dbl = 2.0 * v;
        if dbl.fract() != 0.0 {
            return Err(serde::de::Error::custom(format!("{v} is not a half-integer")));
        }
        Ok(Half(dbl as i64))
    }
}

/// Group family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    U,
    O,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::U => "U",
            GroupKind::O => "O",
        })
    }
}

/// Which coordinate layout a weight uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    U,
    #[serde(rename = "O-even-even")]
    OEvenEven,
    #[serde(rename = "O-even-odd")]
    OEvenOdd,
    #[serde(rename = "O-odd-even")]
    OOddEven,
    #[serde(rename = "O-odd-odd")]
    OOddOdd,
}

impl Convention {
    pub fn for_group(kind: GroupKind, p: usize, q: usize) -> Self {
        match (kind, p % 2, q % 2) {
            (GroupKind::U, _, _) => Convention::U,
            (GroupKind::O, 0, 0) => Convention::OEvenEven,
            (GroupKind::O, 0, _) => Convention::OEvenOdd,
            (GroupKind::O, _, 0) => Convention::OOddEven,
            (GroupKind::O, _, _) => Convention::OOddOdd,
        }
    }
}

/// A vector in the torus coordinates of `U(p,q)` or `O(p,q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub xs: Vec<Half>,
    pub ys: Vec<Half>,
    pub conv: Convention,
}

impl Weight {
    pub fn zero(kind: GroupKind, p: usize, q: usize) -> Self {
        let (nx, ny) = coord_dims(kind, p, q);
        Weight { xs: vec![Half::ZERO; nx], ys: vec![Half::ZERO; ny], conv: Convention::for_group(kind, p, q) }
    }

    pub fn from_ints(kind: GroupKind, p: usize, q: usize, xs: &[i64], ys: &[i64]) -> Result<Self> {
        let (nx, ny) = coord_dims(kind, p, q);
        if xs.len() != nx || ys.len() != ny {
            return Err(CoreError::Invalid(format!(
                "weight needs {nx}+{ny} coordinates, got {}+{}",
                xs.len(),
                ys.len()
            )));
        }
        Ok(Weight {
            xs: xs.iter().map(|&v| Half::int(v)).collect(),
            ys: ys.iter().map(|&v| Half::int(v)).collect(),
            conv: Convention::for_group(kind, p, q),
        })
    }

    fn flat_doubled(&self) -> Vec<i64> {
        self.xs.iter().chain(&self.ys).map(|h| h.doubled()).collect()
    }

    fn from_flat_doubled(v: &[i64], nx: usize, conv: Convention) -> Self {
        Weight {
            xs: v[..nx].iter().map(|&d| Half::from_doubled(d)).collect(),
            ys: v[nx..].iter().map(|&d| Half::from_doubled(d)).collect(),
            conv,
        }
    }

    /// Squared norm with `‖x_i‖² = ‖y_j‖² = 1`.
    pub fn norm2(&self) -> Rational64 {
        let s: i64 = self.flat_doubled().iter().map(|d| d * d).sum();
        Rational64::new(s, 4)
    }

    pub fn is_zero(&self) -> bool {
        self.xs.iter().chain(&self.ys).all(|h| *h == Half::ZERO)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[Half]| v.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", j(&self.xs), j(&self.ys))
    }
}

/// Numbers of x and y coordinates.
pub fn coord_dims(kind: GroupKind, p: usize, q: usize) -> (usize, usize) {
    match kind {
        GroupKind::U => (p, q),
        GroupKind::O => (p / 2, q / 2),
    }
}

/// Roots of the complexified group, split by type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemData {
    pub kind: GroupKind,
    pub p: usize,
    pub q: usize,
    /// Positive compact roots in doubled flat coordinates.
    #[serde(skip)]
    compact_pos: Vec<Vec<i64>>,
    /// All noncompact roots (both signs).
    #[serde(skip)]
    noncompact: Vec<Vec<i64>>,
    /// Noncompact roots positive on the reference element.
    #[serde(skip)]
    noncompact_pos: Vec<Vec<i64>>,
    pub rho: Weight,
    pub rho_c: Weight,
    pub rho_n: Weight,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn comb(n: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn half_sum(roots: &[Vec<i64>], n: usize) -> Vec<i64> {
    // Sum of roots equals 2ρ; returned doubled (= 2ρ) so ρ = Half::from_doubled.
    let mut s = vec![0; n];
    for r in roots {
        for (a, b) in s.iter_mut().zip(r) {
            *a += b;
        }
    }
    s
}

impl RootSystemData {
    pub fn new(kind: GroupKind, p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(CoreError::EmptyBox { p, q });
        }
        let (nx, ny) = coord_dims(kind, p, q);
        let n = nx + ny;
        let y = |j: usize| nx + j;
        let mut compact_pos = Vec::new();
        let mut noncompact = Vec::new();
        match kind {
            GroupKind::U => {
                for i in 0..nx {
                    for j in i + 1..nx {
                        compact_pos.push(comb(n, &[(i, 1), (j, -1)]));
                    }
                }
                for i in 0..ny {
                    for j in i + 1..ny {
                        compact_pos.push(comb(n, &[(y(j), 1), (y(i), -1)]));
                    }
                }
                for i in 0..nx {
                    for j in 0..ny {
                        let a = comb(n, &[(i, 1), (y(j), -1)]);
                        noncompact.push(a.iter().map(|c| -c).collect());
                        noncompact.push(a);
                    }
                }
            }
            GroupKind::O => {
                for i in 0..nx {
                    for j in i + 1..nx {
                        compact_pos.push(comb(n, &[(i, 1), (j, -1)]));
                        compact_pos.push(comb(n, &[(i, 1), (j, 1)]));
                    }
                    if p % 2 == 1 {
                        compact_pos.push(unit(n, i, 1));
                    }
                }
                for i in 0..ny {
                    for j in i + 1..ny {
                        compact_pos.push(comb(n, &[(y(j), 1), (y(i), -1)]));
                        compact_pos.push(comb(n, &[(y(j), 1), (y(i), 1)]));
                    }
                    if q % 2 == 1 {
                        compact_pos.push(unit(n, y(i), 1));
                    }
                }
                let mut push_pm = |v: Vec<i64>| {
                    noncompact.push(v.iter().map(|c| -c).collect());
                    noncompact.push(v);
                };
                for i in 0..nx {
                    for j in 0..ny {
                        push_pm(comb(n, &[(i, 1), (y(j), -1)]));
                        push_pm(comb(n, &[(i, 1), (y(j), 1)]));
                    }
                    if q % 2 == 1 {
                        push_pm(unit(n, i, 1));
                    }
                }
                if p % 2 == 1 {
                    for j in 0..ny {
                        push_pm(unit(n, y(j), 1));
                    }
                }
            }
        }
        let reference = reference_element(kind, nx, ny);
        let noncompact_pos: Vec<Vec<i64>> = noncompact.iter().filter(|a| dot(a, &reference) > 0).cloned().collect();
        let conv = Convention::for_group(kind, p, q);
        let rc = half_sum(&compact_pos, n);
        let rn = half_sum(&noncompact_pos, n);
        let r: Vec<i64> = rc.iter().zip(&rn).map(|(a, b)| a + b).collect();
        // half_sum returns Σα = 2ρ, which is exactly the doubled encoding of ρ.
        Ok(RootSystemData {
            kind,
            p,
            q,
            rho: Weight::from_flat_doubled(&r, nx, conv),
            rho_c: Weight::from_flat_doubled(&rc, nx, conv),
            rho_n: Weight::from_flat_doubled(&rn, nx, conv),
            compact_pos,
            noncompact,
            noncompact_pos,
        })
    }

    pub fn compact_positive_count(&self) -> usize {
        self.compact_pos.len()
    }

    pub fn noncompact_count(&self) -> usize {
        self.noncompact.len()
    }

    fn dims(&self) -> (usize, usize) {
        coord_dims(self.kind, self.p, self.q)
    }

    /// Whether `w` is dominant for the fixed compact positive system.
    pub fn is_k_dominant(&self, w: &Weight) -> bool {
        let v = w.flat_doubled();
        self.compact_pos.iter().all(|a| dot(a, &v) >= 0)
    }

    /// The `W_K`-conjugate of `w` that is dominant for the compact system.
    pub fn k_dominant(&self, w: &Weight) -> Weight {
        let (nx, _) = self.dims();
        let v = w.flat_doubled();
        let (xs, ys) = v.split_at(nx);
        let (dx, dy) = match self.kind {
            GroupKind::U => {
                let mut a = xs.to_vec();
                a.sort_unstable_by(|s, t| t.cmp(s));
                let mut b = ys.to_vec();
                b.sort_unstable();
                (a, b)
            }
            GroupKind::O => {
                let a = dominant_bd(xs, self.p.is_multiple_of(2));
                let mut b: Vec<i64> = ys.iter().rev().copied().collect();
                b = dominant_bd(&b, self.q.is_multiple_of(2));
                b.reverse();
                (a, b)
            }
        };
        let mut flat = dx;
        flat.extend(dy);
        Weight::from_flat_doubled(&flat, nx, w.conv)
    }

    /// Size of the compact Weyl group.
    pub fn weyl_k_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self.kind {
            GroupKind::U => fact(self.p) * fact(self.q),
            GroupKind::O => {
                let w = |n: usize| {
                    let r = n / 2;
                    if r == 0 {
                        1
                    } else if n % 2 == 1 {
                        fact(r) << r
                    } else {
                        fact(r) << (r - 1)
                    }
                };
                w(self.p) * w(self.q)
            }
        }
    }

    /// Noncompact positive sets of all positive systems containing the compact one.
    pub fn positive_systems(&self) -> Vec<Vec<Vec<i64>>> {
        let (nx, ny) = self.dims();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for elt in regular_dominant_elements(self.kind, self.p, self.q, nx, ny) {
            let pos: Vec<Vec<i64>> = self.noncompact.iter().filter(|a| dot(a, &elt) > 0).cloned().collect();
            if pos.len() * 2 != self.noncompact.len() {
                continue;
            }
            let key: BTreeSet<Vec<i64>> = pos.iter().cloned().collect();
            if seen.insert(key) {
                out.push(pos);
            }
        }
        out
    }

    fn dirac_for(&self, noncompact_pos: &[Vec<i64>], chi: &Weight) -> Rational64 {
        let (nx, _) = self.dims();
        let n = self.rho.xs.len() + self.rho.ys.len();
        let rn = half_sum(noncompact_pos, n);
        let rc = self.rho_c.flat_doubled();
        let rho: Vec<i64> = rc.iter().zip(&rn).map(|(a, b)| a + b).collect();
        let c = chi.flat_doubled();
        let shifted: Vec<i64> = c.iter().zip(&rn).map(|(a, b)| a - b).collect();
        let dom = self.k_dominant(&Weight::from_flat_doubled(&shifted, nx, chi.conv)).flat_doubled();
        let tot: Vec<i64> = dom.iter().zip(&rc).map(|(a, b)| a + b).collect();
        Rational64::new(dot(&rho, &rho) - dot(&tot, &tot), 4)
    }

    fn check_chi(&self, chi: &Weight) -> Result<()> {
        let (nx, ny) = self.dims();
        if chi.xs.len() != nx || chi.ys.len() != ny {
            return Err(CoreError::Invalid(format!(
                "weight {chi} has the wrong shape for {}({},{})",
                self.kind, self.p, self.q
            )));
        }
        Ok(())
    }

    /// `‖ρ‖² − ‖w(χ−ρ_n)+ρ_c‖²` for the reference positive system.
    pub fn dirac_bound_fixed(&self, chi: &Weight) -> Result<Rational64> {
        self.check_chi(chi)?;
        Ok(self.dirac_for(&self.noncompact_pos, chi))
    }
}

/// Dominant representative for type B (`allow_sign = false`) or D (`true`)
/// in the ordering `v_1 ≥ … ≥ |v_n|`.
fn dominant_bd(v: &[i64], allow_sign: bool) -> Vec<i64> {
    let mut a: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    a.sort_unstable_by(|s, t| t.cmp(s));
    if allow_sign && !a.is_empty() {
        let negs = v.iter().filter(|&&x| x < 0).count();
        let has_zero = v.contains(&0);
        if negs % 2 == 1 && !has_zero {
            let last = a.len() - 1;
            a[last] = -a[last];
        }
    }
    a
}

fn reference_element(kind: GroupKind, nx: usize, ny: usize) -> Vec<i64> {
    let top = (nx + ny) as i64;
    let mut v: Vec<i64> = (0..nx as i64).map(|i| top - i + 1).collect();
    v.extend((1..=ny as i64).map(|j| match kind {
        GroupKind::U | GroupKind::O => j,
    }));
    v
}

fn choose_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Regular compact-dominant elements, one per chamber of the full system.
fn regular_dominant_elements(kind: GroupKind, p: usize, q: usize, nx: usize, ny: usize) -> Vec<Vec<i64>> {
    let n = nx + ny;
    let mut out = Vec::new();
    for xset in choose_subsets(n, nx) {
        let vals: Vec<i64> = (1..=n as i64).collect();
        let mut xv: Vec<i64> = xset.iter().map(|&i| vals[i]).collect();
        let mut yv: Vec<i64> = (0..n).filter(|i| !xset.contains(i)).map(|i| vals[i]).collect();
        xv.sort_unstable_by(|a, b| b.cmp(a));
        yv.sort_unstable();
        match kind {
            GroupKind::U => {
                let mut e = xv;
                e.extend(yv);
                out.push(e);
            }
            GroupKind::O => {
                let xs_signs: &[i64] = if p.is_multiple_of(2) && nx > 0 { &[1, -1] } else { &[1] };
                let ys_signs: &[i64] = if q.is_multiple_of(2) && ny > 0 { &[1, -1] } else { &[1] };
                for &sx in xs_signs {
                    for &sy in ys_signs {
                        let mut e = xv.clone();
                        if let Some(l) = e.last_mut() {
                            *l *= sx;
                        }
                        let mut f = yv.clone();
                        if let Some(fst) = f.first_mut() {
                            *fst *= sy;
                        }
                        e.extend(f);
                        out.push(e);
                    }
                }
            }
        }
    }
    out
}

/// Cap on `|W_K|` for the Dirac evaluator.
pub const WEYL_CAP: u128 = 1_000_000;

/// `max over Δ⁺(g) ⊇ Δ⁺(k)` of `‖ρ‖² − ‖w(χ−ρ_n)+ρ_c‖²`.
pub fn dirac_bound(kind: GroupKind, p: usize, q: usize, chi: &Weight) -> Result<Rational64> {
    let rs = RootSystemData::new(kind, p, q)?;
    let order = rs.weyl_k_order();
    if order > WEYL_CAP {
        return Err(CoreError::CapExceeded {
            name: "weyl_cap",
            value: usize::try_from(order).unwrap_or(usize::MAX),
            limit: WEYL_CAP as usize,
        });
    }
    rs.check_chi(chi)?;
    rs.positive_systems()
        .iter()
        .map(|sys| rs.dirac_for(sys, chi))
        .max()
        .ok_or_else(|| CoreError::Invalid("no positive system".into()))
}

/// Lowest K-type weight `2ρ(u(λ,μ) ∩ p)` of `A(λ,μ)`.
///
/// The coefficient of `x_i` is `λ_i + μ_i − q`, that of `y_j` is `p − λ*_j − μ*_j`.
pub fn ktype_weight_u(cp: &CompatiblePair) -> Weight {
    let (p, q) = (cp.ctx.p, cp.ctx.q);
    let lc = cp.lambda.conjugate();
    let mc = cp.mu.conjugate();
    let xs = (0..p).map(|i| Half::int(cp.lambda.part(i) as i64 + cp.mu.part(i) as i64 - q as i64)).collect();
    let ys = (0..q).map(|j| Half::int(p as i64 - lc.part(j) as i64 - mc.part(j) as i64)).collect();
    Weight { xs, ys, conv: Convention::U }
}

/// A sign label `±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which sign slots are meaningful for an orthogonal partition.
pub fn sign_slots(orth: &OrthoPartition) -> (bool, bool) {
    match orth.even_type {
        None => (false, false),
        Some(EvenType::One) => (true, false),
        Some(EvenType::Two) => (false, true),
        Some(EvenType::Three) => (true, true),
    }
}

/// Lowest K-type weight `2ρ(u(λ) ∩ p)` of `A(λ)` with its sign labels.
///
/// Boxes of `λ` are summed as `z_i − w_j`, where `z` lists
/// `x_1..x_r, [0], −x_r..−x_1` and `w` lists `−y_s..−y_1, [0], y_1..y_s`.
/// The sign `−` on the first slot negates `x_r` when `λ_r > λ_{r+1}`; on the
/// second slot it negates `y_1` when `λ*_s > λ*_{s+1}`.
pub fn ktype_weight_o(orth: &OrthoPartition, sign1: Option<Sign>, sign2: Option<Sign>) -> Result<Weight> {
    let (slot1, slot2) = sign_slots(orth);
    if sign1.is_some() && !slot1 {
        return Err(CoreError::SignNotAllowed("first sign slot"));
    }
    if sign2.is_some() && !slot2 {
        return Err(CoreError::SignNotAllowed("second sign slot"));
    }
    let (p, q) = (orth.ctx.p, orth.ctx.q);
    let (r, s) = (p / 2, q / 2);
    let lam = &orth.lambda;
    let conj = lam.conjugate();
    let mut xs: Vec<i64> = (0..r).map(|i| lam.part(i) as i64 - lam.part(p - 1 - i) as i64).collect();
    let off = q - s;
    let mut ys: Vec<i64> = (0..s).map(|j| conj.part(s - 1 - j) as i64 - conj.part(off + j) as i64).collect();
    if sign1 == Some(Sign::Minus) && lam.part(r - 1) > lam.part(r) {
        xs[r - 1] = -xs[r - 1];
    }
    if sign2 == Some(Sign::Minus) && conj.part(s - 1) > conj.part(s) {
        ys[0] = -ys[0];
    }
    Weight::from_ints(GroupKind::O, p, q, &xs, &ys)
}

/// `R = |λ| + |μ̂|`.
pub fn degree_u(cp: &CompatiblePair) -> usize {
    cp.lambda.weight() + cp.mu.complement(cp.ctx).expect("mu fits").weight()
}

/// `R = |λ|`, cross-checked against `½(pq − 2Σa_jb_j − p₀q₀)`.
pub fn degree_o(orth: &OrthoPartition) -> usize {
    let r = orth.lambda.weight();
    assert_eq!(Some(r), degree_o_levi(orth), "Levi degree identity failed for {}", orth.lambda);
    r
}

/// `½(pq − 2Σa_jb_j − p₀q₀)` when it is an integer.
pub fn degree_o_levi(orth: &OrthoPartition) -> Option<usize> {
    let (p0, q0) = orth.central_or_zero();
    let pairs: usize = orth.pairs.iter().map(|&(a, b)| a * b).sum();
    let twice = orth.ctx.area().checked_sub(2 * pairs + p0 * q0)?;
    (twice % 2 == 0).then_some(twice / 2)
}

/// Degree `rq + s(p−r)` of the holomorphic module with parameters `(r, s)`.
pub fn degree_holomorphic(r: usize, s: usize, p: usize, q: usize) -> usize {
    r * q + s * (p - r)
}

/// `r_G = min(p, q)` for both families.
pub fn r_g(_kind: GroupKind, p: usize, q: usize) -> usize {
    p.min(q)
}

/// Convenience: the rectangle `(r^p)` as a partition.
pub fn rect(r: usize, p: usize) -> Partition {
    Partition::rectangle(p, r)
}
