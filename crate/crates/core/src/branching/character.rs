//! Weight multiplicities of irreducible `GL_n` and `SO(n)` modules by
//! Freudenthal's formula, plus restriction and decomposition of formal characters.
//!
//! Weights are integral in the standard coordinates. Dominance is the
//! standard one: `a_1 ≥ … ≥ a_n` for `GL_n`, `a_1 ≥ … ≥ a_{m−1} ≥ |a_m|` for
//! `SO(2m)`, `a_1 ≥ … ≥ a_m ≥ 0` for `SO(2m+1)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{CoreError, Result};

/// Cap on the number of weights (with multiplicity) of an expanded character.
pub const DIM_CAP: u64 = 1_000_000;

/// A compact connected group whose characters the oracle can expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LieGroup {
    GL(usize),
    SO(usize),
}

impl LieGroup {
    /// Number of torus coordinates.
    pub fn rank(self) -> usize {
        match self {
            LieGroup::GL(n) => n,
            LieGroup::SO(n) => n / 2,
        }
    }

    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        let m = self.rank();
        let e = |i: usize, c: i64, j: Option<(usize, i64)>| {
            let mut v = vec![0; m];
            v[i] += c;
            if let Some((j, d)) = j {
                v[j] += d;
            }
            v
        };
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                out.push(e(i, 1, Some((j, -1))));
                if let LieGroup::SO(_) = self {
                    out.push(e(i, 1, Some((j, 1))));
                }
            }
            if let LieGroup::SO(n) = self {
                if n % 2 == 1 {
                    out.push(e(i, 1, None));
                }
            }
        }
        out
    }

    /// `2ρ`.
    pub fn two_rho(self) -> Vec<i64> {
        let m = self.rank();
        let mut s = vec![0; m];
        for a in self.positive_roots() {
            for (x, y) in s.iter_mut().zip(&a) {
                *x += y;
            }
        }
        s
    }

    pub fn dominant(self, v: &[i64]) -> Vec<i64> {
        let mut a: Vec<i64> = match self {
            LieGroup::GL(_) => v.to_vec(),
            LieGroup::SO(_) => v.iter().map(|x| x.abs()).collect(),
        };
        a.sort_unstable_by(|s, t| t.cmp(s));
        if let LieGroup::SO(n) = self {
            if n % 2 == 0 && !a.is_empty() {
                let negs = v.iter().filter(|&&x| x < 0).count();
                if negs % 2 == 1 && !v.contains(&0) {
                    let l = a.len() - 1;
                    a[l] = -a[l];
                }
            }
        }
        a
    }

    pub fn is_dominant(self, v: &[i64]) -> bool {
        self.dominant(v) == v
    }

    /// Coefficients of `hw − v` on the simple roots, if all are nonnegative integers.
    pub fn simple_coeffs(self, hw: &[i64], v: &[i64]) -> Option<Vec<i64>> {
        let d: Vec<i64> = hw.iter().zip(v).map(|(a, b)| a - b).collect();
        let m = d.len();
        let partial: Vec<i64> = d
            .iter()
            .scan(0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let coeffs = match self {
            LieGroup::GL(_) => {
                if m > 0 && partial[m - 1] != 0 {
                    return None;
                }
                partial[..m.saturating_sub(1)].to_vec()
            }
            LieGroup::SO(n) if n % 2 == 1 => partial,
            LieGroup::SO(_) => match m {
                0 => vec![],
                1 => {
                    if d[0] != 0 {
                        return None;
                    }
                    vec![]
                }
                _ => {
                    let mut c = partial[..m - 2].to_vec();
                    let a = partial[m - 2] - d[m - 1];
                    let b = partial[m - 1];
                    if a % 2 != 0 || b % 2 != 0 {
                        return None;
                    }
                    c.push(a / 2);
                    c.push(b / 2);
                    c
                }
            },
        };
        coeffs.iter().all(|&c| c >= 0).then_some(coeffs)
    }

    /// The Weyl-group orbit of `v`.
    pub fn orbit(self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut perms = BTreeSet::new();
        permute(&mut v.to_vec(), 0, &mut perms);
        match self {
            LieGroup::GL(_) => perms.into_iter().collect(),
            LieGroup::SO(n) => {
                let dom = self.dominant(v);
                let mut out = BTreeSet::new();
                for p in perms {
                    let m = p.len();
                    for mask in 0u32..(1 << m) {
                        let w: Vec<i64> =
                            p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
                        if n % 2 == 1 || self.dominant(&w) == dom {
                            out.insert(w);
                        }
                    }
                }
                out.into_iter().collect()
            }
        }
    }
}

fn permute(v: &mut Vec<i64>, k: usize, out: &mut BTreeSet<Vec<i64>>) {
    if k == v.len() {
        out.insert(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weight multiplicities of a finite-dimensional module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalCharacter {
    pub group: LieGroup,
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl FormalCharacter {
    pub fn zero(group: LieGroup) -> Self {
        Self { group, weights: BTreeMap::new() }
    }

    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn mult(&self, w: &[i64]) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn add_scaled(&mut self, other: &FormalCharacter, k: u64) {
        for (w, m) in &other.weights {
            *self.weights.entry(w.clone()).or_insert(0) += k * m;
        }
    }

    /// Pointwise product of characters (tensor product).
    pub fn tensor(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.group);
        for (a, m) in &self.weights {
            for (b, n) in &other.weights {
                let w: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.weights.entry(w).or_insert(0) += m * n;
            }
        }
        out
    }

    /// Pushes weights forward along a coordinate map into `target`.
    pub fn map_weights(&self, target: LieGroup, f: impl Fn(&[i64]) -> Vec<i64>) -> FormalCharacter {
        let mut out = FormalCharacter::zero(target);
        for (w, m) in &self.weights {
            *out.weights.entry(f(w)).or_insert(0) += m;
        }
        out
    }

    /// Irreducible decomposition: highest weight ↦ multiplicity.
    pub fn decompose(&self) -> Result<BTreeMap<Vec<i64>, u64>> {
        let mut rest: BTreeMap<Vec<i64>, i64> = self.weights.iter().map(|(w, &m)| (w.clone(), m as i64)).collect();
        let mut out = BTreeMap::new();
        loop {
            rest.retain(|_, m| *m != 0);
            if let Some((w, m)) = rest.iter().find(|(_, m)| **m < 0) {
                return Err(CoreError::Invalid(format!("character is not effective at {w:?} ({m})")));
            }
            let top = rest.keys().filter(|w| self.group.is_dominant(w)).max().cloned();
            let Some(hw) = top else {
                if rest.is_empty() {
                    return Ok(out);
                }
                return Err(CoreError::Invalid("leftover weights with no dominant maximum".into()));
            };
            let k = rest[&hw];
            let ch = character(self.group, &hw)?;
            for (w, m) in &ch.weights {
                *rest.entry(w.clone()).or_insert(0) -= k * *m as i64;
            }
            out.insert(hw, k as u64);
        }
    }
}

/// Dominant weights below `hw` with their multiplicities.
pub fn dominant_multiplicities(group: LieGroup, hw: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    if hw.len() != group.rank() || !group.is_dominant(hw) {
        return Err(CoreError::Invalid(format!("{hw:?} is not a dominant weight of {group:?}")));
    }
    let roots = group.positive_roots();
    let norm_hw = dot(hw, hw);
    // Dominant weights reachable by subtracting positive roots, with their height.
    let mut heights: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut queue = VecDeque::from([hw.to_vec()]);
    heights.insert(hw.to_vec(), 0);
    while let Some(v) = queue.pop_front() {
        for a in &roots {
            let w: Vec<i64> = v.iter().zip(a).map(|(x, y)| x - y).collect();
            let d = group.dominant(&w);
            if heights.contains_key(&d) || dot(&d, &d) > norm_hw {
                continue;
            }
            if let Some(c) = group.simple_coeffs(hw, &d) {
                heights.insert(d.clone(), c.iter().sum());
                queue.push_back(d);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i64>)> = heights.iter().map(|(w, h)| (*h, w.clone())).collect();
    order.sort();
    let two_rho = group.two_rho();
    let shifted = |v: &[i64]| -> i64 {
        let s: Vec<i64> = v.iter().zip(&two_rho).map(|(x, r)| 2 * x + r).collect();
        dot(&s, &s)
    };
    let top = shifted(hw);
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (_, mu) in order {
        if mu == hw {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for a in &roots {
            let mut k = 1;
            loop {
                let v: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                if dot(&v, &v) > norm_hw {
                    break;
                }
                let m = mult.get(&group.dominant(&v)).copied().unwrap_or(0) as i64;
                num += m * dot(&v, a);
                k += 1;
            }
        }
        // m(μ) = 2Σ m(μ+kα)(μ+kα,α) / (|λ+ρ|² − |μ+ρ|²), everything scaled by 4.
        let den = top - shifted(&mu);
        if den <= 0 || (8 * num) % den != 0 {
            return Err(CoreError::Invalid(format!("Freudenthal recursion broke at {mu:?}")));
        }
        let m = 8 * num / den;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    Ok(mult)
}

/// Full character of the irreducible module with highest weight `hw`.
pub fn character(group: LieGroup, hw: &[i64]) -> Result<FormalCharacter> {
    let dom = dominant_multiplicities(group, hw)?;
    let mut out = FormalCharacter::zero(group);
    for (mu, m) in dom {
        for w in group.orbit(&mu) {
            out.weights.insert(w, m);
        }
        if out.dim() > DIM_CAP {
            return Err(CoreError::CapExceeded { name: "dim_cap", value: out.dim() as usize, limit: DIM_CAP as usize });
        }
    }
    Ok(out)
}

/// Weyl dimension formula.
pub fn weyl_dimension(group: LieGroup, hw: &[i64]) -> u128 {
    let two_rho = group.two_rho();
    let shifted: Vec<i64> = hw.iter().zip(&two_rho).map(|(x, r)| 2 * x + r).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in group.positive_roots() {
        num *= dot(&shifted, &a) as u128;
        den *= dot(&two_rho, &a) as u128;
    }
    num / den
}

/// Multiplicity of `target` in the restriction of `ch` along `f`.
pub fn restrict_multiplicity(
    ch: &FormalCharacter,
    target_group: LieGroup,
    f: impl Fn(&[i64]) -> Vec<i64>,
    target: &[i64],
) -> Result<u64> {
    let res = ch.map_weights(target_group, f).decompose()?;
    Ok(res.get(target).copied().unwrap_or(0))
}
