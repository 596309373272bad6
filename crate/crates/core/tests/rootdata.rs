mod common;

use common::part;
use num_rational::Rational64;
use vzlef_core::catalog::catalog;
use vzlef_core::partitions::*;
use vzlef_core::rootdata::*;

fn ints(v: &[Half]) -> Vec<i64> {
    v.iter()
        .map(|h| {
            assert!(h.is_integer());
            h.doubled() / 2
        })
        .collect()
}

/// `Σ_{(i,j)∈λ}(x_i − y_j) − Σ_{(i,j)∈μ̂}(x_{p−i+1} − y_{q−j+1})` box by box.
#[allow(clippy::needless_range_loop)]
fn box_sum_u(cp: &CompatiblePair) -> (Vec<i64>, Vec<i64>) {
    let BoxContext { p, q } = cp.ctx;
    let (mut xs, mut ys) = (vec![0i64; p], vec![0i64; q]);
    for i in 0..p {
        for j in 0..cp.lambda.part(i) {
            xs[i] += 1;
            ys[j] -= 1;
        }
    }
    let hat = cp.mu.complement(cp.ctx).unwrap();
    for i in 0..p {
        for j in 0..hat.part(i) {
            xs[p - 1 - i] -= 1;
            ys[q - 1 - j] += 1;
        }
    }
    (xs, ys)
}

/// Boxes of `λ` summed as `z_i − w_j` with `z = (x_1..x_r, [0], −x_r..−x_1)`
/// and `w = (−y_s..−y_1, [0], y_1..y_s)`.
fn box_sum_o(lambda: &Partition, p: usize, q: usize) -> (Vec<i64>, Vec<i64>) {
    let (r, s) = (p / 2, q / 2);
    let (mut xs, mut ys) = (vec![0i64; r], vec![0i64; s]);
    for i in 0..p {
        for j in 0..lambda.part(i) {
            if i < r {
                xs[i] += 1;
            } else if i >= p - r {
                xs[p - 1 - i] -= 1;
            }
            if j < s {
                ys[s - 1 - j] += 1;
            } else if j >= q - s {
                ys[j - (q - s)] -= 1;
            }
        }
    }
    (xs, ys)
}

#[test]
fn rho_splits() {
    for kind in [GroupKind::U, GroupKind::O] {
        for p in 1..=9 {
            for q in 1..=(10 - p) {
                let rs = RootSystemData::new(kind, p, q).unwrap();
                let sum = |a: &[Half], b: &[Half]| {
                    a.iter().zip(b).map(|(x, y)| x.doubled() + y.doubled()).collect::<Vec<_>>()
                };
                let dbl = |a: &[Half]| a.iter().map(|x| x.doubled()).collect::<Vec<_>>();
                assert_eq!(sum(&rs.rho_c.xs, &rs.rho_n.xs), dbl(&rs.rho.xs));
                assert_eq!(sum(&rs.rho_c.ys, &rs.rho_n.ys), dbl(&rs.rho.ys));
                let pos = |n: usize| match kind {
                    GroupKind::U => n * (n - 1) / 2,
                    GroupKind::O if n.is_multiple_of(2) => (n / 2) * (n / 2 - 1),
                    GroupKind::O => (n / 2) * (n / 2),
                };
                assert_eq!(rs.compact_positive_count(), pos(p) + pos(q), "{kind}({p},{q})");
            }
        }
    }
}

#[test]
fn r_g_values() {
    assert_eq!(r_g(GroupKind::U, 2, 3), 2);
    assert_eq!(r_g(GroupKind::O, 5, 5), 5);
    assert_eq!(r_g(GroupKind::U, 1, 1), 1);
}

#[test]
fn unitary_weight_matches_box_sum() {
    for p in 1..=5 {
        for q in 1..=5 {
            let rs = RootSystemData::new(GroupKind::U, p, q).unwrap();
            for cp in enumerate_compatible(BoxContext::new(p, q).unwrap(), DEFAULT_ENUM_CAP).unwrap() {
                let w = ktype_weight_u(&cp);
                assert_eq!((ints(&w.xs), ints(&w.ys)), box_sum_u(&cp), "{cp:?}");
                assert!(rs.is_k_dominant(&w), "{cp:?}");
            }
        }
    }
}

#[test]
fn unitary_weight_examples() {
    let b = |p, q| BoxContext::new(p, q).unwrap();
    let w = ktype_weight_u(&CompatiblePair::new(part(&[]), part(&[3, 3]), b(2, 3)).unwrap());
    assert!(w.is_zero());
    // The summation formula gives x₁ − y₁ here (μ̂ is empty).
    let w = ktype_weight_u(&CompatiblePair::new(part(&[1]), part(&[1]), b(1, 1)).unwrap());
    assert_eq!((ints(&w.xs), ints(&w.ys)), (vec![1], vec![-1]));
}

#[test]
fn unitary_theta_weight() {
    // ((r^p),(q^p)) in p×(q+r) has weight p·Σ_{j≤r}(y_{q+j} − y_j).
    for p in 1..=4 {
        for q in 1..=4 {
            for r in 1..=q {
                let ctx = BoxContext::new(p, q + r).unwrap();
                let cp = CompatiblePair::new(Partition::rectangle(p, r), Partition::rectangle(p, q), ctx).unwrap();
                let w = ktype_weight_u(&cp);
                let mut ys = vec![0i64; q + r];
                for j in 0..r {
                    ys[q + j] += p as i64;
                    ys[j] -= p as i64;
                }
                assert_eq!(ints(&w.xs), vec![0; p]);
                assert_eq!(ints(&w.ys), ys, "p={p} q={q} r={r}");
            }
        }
    }
}

#[test]
fn orthogonal_weight_matches_box_sum() {
    for p in 1..=6 {
        for q in 1..=6 {
            let rs = RootSystemData::new(GroupKind::O, p, q).unwrap();
            for m in catalog(GroupKind::O, p, q, DEFAULT_ENUM_CAP).unwrap() {
                let w = &m.lowest_ktype;
                assert!(rs.is_k_dominant(w), "{}", m.label());
                let (s1, s2) = m.signs();
                if s1 != Some(Sign::Minus) && s2 != Some(Sign::Minus) {
                    assert_eq!((ints(&w.xs), ints(&w.ys)), box_sum_o(m.lambda(), p, q), "{} in {p}x{q}", m.label());
                }
            }
        }
    }
}

#[test]
fn orthogonal_sign_examples() {
    // λ=(1) in 2x2 carries both slots; the four weights are all different.
    let o = OrthoPartition::new(part(&[1]), BoxContext::new(2, 2).unwrap()).unwrap();
    let mut ws = Vec::new();
    for s1 in [Sign::Plus, Sign::Minus] {
        for s2 in [Sign::Plus, Sign::Minus] {
            ws.push(ktype_weight_o(&o, Some(s1), Some(s2)).unwrap());
        }
    }
    ws.sort_by_key(|w| w.to_string());
    ws.dedup();
    assert_eq!(ws.len(), 4);
    assert!(ktype_weight_o(&OrthoPartition::new(part(&[]), BoxContext::new(3, 3).unwrap()).unwrap(), None, None)
        .unwrap()
        .is_zero());
    let odd = OrthoPartition::new(part(&[]), BoxContext::new(2, 3).unwrap()).unwrap();
    assert!(ktype_weight_o(&odd, Some(Sign::Plus), None).is_err());
}

#[test]
fn orthogonal_theta_weight() {
    // (r^p) in p×(q+r) has weight p·Σ_{j<r} y_{β−j}, β = ⌊(q+r)/2⌋.
    for p in 1..=4 {
        for q in 1..=4 {
            for r in 1..=q {
                let n = q + r;
                let o = OrthoPartition::new(Partition::rectangle(p, r), BoxContext::new(p, n).unwrap()).unwrap();
                let beta = n / 2;
                let w = ktype_weight_o(&o, None, None)
                    .or_else(|_| ktype_weight_o(&o, Some(Sign::Plus), None))
                    .or_else(|_| ktype_weight_o(&o, None, Some(Sign::Plus)))
                    .or_else(|_| ktype_weight_o(&o, Some(Sign::Plus), Some(Sign::Plus)))
                    .unwrap();
                let mut ys = vec![0i64; beta];
                for j in 0..r {
                    ys[beta - 1 - j] += p as i64;
                }
                assert!(ints(&w.xs).iter().all(|&x| x == 0));
                assert_eq!(ints(&w.ys), ys, "p={p} q={q} r={r}");
            }
        }
    }
}

#[test]
fn degree_formulas() {
    for p in 1..=6 {
        for q in 1..=6 {
            for o in enumerate_orthogonal(BoxContext::new(p, q).unwrap(), DEFAULT_ENUM_CAP).unwrap() {
                assert_eq!(degree_o_levi(&o), Some(degree_o(&o)));
            }
        }
    }
    for p in 1..=4 {
        for q in 3..=5 {
            let o = OrthoPartition::new(Partition::rectangle(p, 1), BoxContext::new(p, q).unwrap()).unwrap();
            assert_eq!(degree_o(&o), p);
        }
    }
    let triv = CompatiblePair::new(part(&[]), part(&[3, 3]), BoxContext::new(2, 3).unwrap()).unwrap();
    assert_eq!(degree_u(&triv), 0);
    assert_eq!(degree_holomorphic(1, 1, 2, 2), 3);
}

#[test]
fn kumaresan_equality_on_every_module() {
    for kind in [GroupKind::U, GroupKind::O] {
        for p in 1..=6 {
            for q in 1..=(7 - p) {
                for m in catalog(kind, p, q, DEFAULT_ENUM_CAP).unwrap() {
                    let b = dirac_bound(kind, p, q, &m.lowest_ktype).unwrap();
                    assert_eq!(b, Rational64::from_integer(0), "{kind}({p},{q}) {}", m.label());
                }
            }
        }
    }
}

#[test]
fn dirac_small_cases() {
    let zero = Weight::zero(GroupKind::U, 1, 1);
    assert_eq!(dirac_bound(GroupKind::U, 1, 1, &zero).unwrap(), Rational64::from_integer(0));
    // A K-type far from any lowest K-type gives a strictly negative bound.
    let far = Weight::from_ints(GroupKind::U, 1, 1, &[5], &[-5]).unwrap();
    assert!(dirac_bound(GroupKind::U, 1, 1, &far).unwrap() < Rational64::from_integer(0));
    let rs = RootSystemData::new(GroupKind::U, 2, 2).unwrap();
    let dom = Weight::from_ints(GroupKind::U, 2, 2, &[1, 0], &[0, 1]).unwrap();
    assert_eq!(rs.k_dominant(&dom), dom);
}
