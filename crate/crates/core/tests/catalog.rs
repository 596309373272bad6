mod common;

use common::{box_partitions, feasible_x, part};
use vzlef_core::catalog::*;
use vzlef_core::partitions::{BoxContext, OrthoPartition, Partition, DEFAULT_ENUM_CAP};
use vzlef_core::rootdata::{GroupKind, RootSystemData};

/// Sign multiplicity read straight from the parity and type rules.
fn sign_count(lambda: &Partition, p: usize, q: usize) -> usize {
    let hat = lambda.complement(BoxContext::new(p, q).unwrap()).unwrap();
    let rects = (0..p)
        .filter(|&i| lambda.part(i) != hat.part(i))
        .filter(|&i| i == 0 || (lambda.part(i), hat.part(i)) != (lambda.part(i - 1), hat.part(i - 1)))
        .count();
    if rects % 2 == 1 {
        return 1;
    }
    match (p % 2, q % 2) {
        (0, 1) | (1, 0) => 2,
        (0, 0) => {
            let c = lambda.conjugate();
            let row = lambda.part(p / 2 - 1) > lambda.part(p / 2);
            let col = c.part(q / 2 - 1) > c.part(q / 2);
            if row && col {
                4
            } else {
                2
            }
        }
        _ => unreachable!("odd x odd boxes have only odd orthogonal partitions"),
    }
}

#[test]
fn catalog_sizes_match_brute_force() {
    for p in 1..=5 {
        for q in 1..=5 {
            let all = box_partitions(p, q);
            let u_count = all
                .iter()
                .flat_map(|l| all.iter().map(move |m| (l, m)))
                .filter(|(l, m)| m.contains(l) && feasible_x(l, m, p, q))
                .count();
            assert_eq!(catalog(GroupKind::U, p, q, DEFAULT_ENUM_CAP).unwrap().len(), u_count);
            let ctx = BoxContext::new(p, q).unwrap();
            let o_count: usize = all
                .iter()
                .filter(|l| {
                    let h = l.complement(ctx).unwrap();
                    h.contains(l) && feasible_x(l, &h, p, q)
                })
                .map(|l| sign_count(l, p, q))
                .sum();
            assert_eq!(catalog(GroupKind::O, p, q, DEFAULT_ENUM_CAP).unwrap().len(), o_count, "O({p},{q})");
        }
    }
}

#[test]
fn u11_catalog() {
    let c = catalog(GroupKind::U, 1, 1, DEFAULT_ENUM_CAP).unwrap();
    let rows: Vec<_> = c.iter().map(|m| (m.label(), m.degree)).collect();
    assert_eq!(rows, vec![("A((),())".to_string(), 1), ("A((),(1))".to_string(), 0), ("A((1),(1))".to_string(), 1)]);
    let h = primitive_degree_histogram(GroupKind::U, 1, 1, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
}

#[test]
fn histogram_totals() {
    for (kind, p, q) in [(GroupKind::O, 2, 2), (GroupKind::U, 2, 2), (GroupKind::O, 3, 4)] {
        let h = primitive_degree_histogram(kind, p, q, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(h.values().sum::<usize>(), catalog(kind, p, q, DEFAULT_ENUM_CAP).unwrap().len());
    }
    let h = primitive_degree_histogram(GroupKind::U, 2, 2, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(h.get(&0), Some(&1));
    assert_eq!(h.get(&4), Some(&catalog(GroupKind::U, 2, 2, 42).unwrap().iter().filter(|m| m.degree == 4).count()));
}

#[test]
fn orthogonal_sign_multiplicities() {
    for p in 1..=5 {
        for q in 3..=6 {
            let c = catalog(GroupKind::O, p, q, DEFAULT_ENUM_CAP).unwrap();
            let n = c.iter().filter(|m| *m.lambda() == Partition::rectangle(p, 1)).count();
            assert_eq!(n, 1, "(1^{p}) in {p}x{q}");
        }
    }
    let c = catalog(GroupKind::O, 2, 2, DEFAULT_ENUM_CAP).unwrap();
    let count = |l: Partition| c.iter().filter(|m| *m.lambda() == l).count();
    // (1,1): λ*=(2) drops at the centre, λ does not, so one slot.
    assert_eq!(count(part(&[1, 1])), 2);
    assert_eq!(count(part(&[1])), 4);
}

#[test]
fn holomorphic_examples() {
    let m = holomorphic_param(0, 0, 2, 3).unwrap();
    assert_eq!(m.degree, 0);
    let m = holomorphic_param(2, 1, 2, 3).unwrap();
    assert_eq!(*m.lambda(), part(&[3, 3]));
    assert_eq!(m.degree, 6);
    let m = holomorphic_param(1, 1, 2, 2).unwrap();
    assert_eq!(*m.lambda(), part(&[2, 1]));
    assert_eq!(m.degree, 3);
    assert!(holomorphic_param(3, 0, 2, 2).is_err());
    for p in 1..=4 {
        for q in 1..=4 {
            for r in 0..=p {
                for s in 0..=q {
                    assert_eq!(holomorphic_param(r, s, p, q).unwrap().degree, r * q + s * (p - r));
                }
            }
        }
    }
}

#[test]
fn levi_examples() {
    let u = |l: &[usize], m: &[usize], p, q| {
        let pair = vzlef_core::CompatiblePair::new(part(l), part(m), BoxContext::new(p, q).unwrap()).unwrap();
        levi_of(&VZModule::from_pair(pair))
    };
    assert_eq!(u(&[], &[3, 3], 2, 3), vec![LeviFactor::U(2, 3)]);
    assert_eq!(u(&[1], &[2, 1], 2, 2), vec![LeviFactor::U(1, 1), LeviFactor::U(1, 1)]);
    for p in 1..=4 {
        for q in 3..=5 {
            let o = OrthoPartition::new(Partition::rectangle(p, 1), BoxContext::new(p, q).unwrap()).unwrap();
            let m = VZModule::from_orth(o, None, None).unwrap();
            assert_eq!(levi_of(&m), vec![LeviFactor::O(p, q - 2)]);
        }
    }
}

#[test]
fn invariants_over_catalogs() {
    for kind in [GroupKind::U, GroupKind::O] {
        for p in 1..=4 {
            for q in 1..=4 {
                let rs = RootSystemData::new(kind, p, q).unwrap();
                for m in catalog(kind, p, q, DEFAULT_ENUM_CAP).unwrap() {
                    assert!(rs.is_k_dominant(&m.lowest_ktype));
                    match &m.data {
                        ModuleData::U { pair } => assert_eq!(m.discrete_series, pair.lambda == pair.mu),
                        ModuleData::O { orth, .. } => {
                            assert_eq!(m.discrete_series, orth.rects.is_empty());
                            assert!(m.extends_to_full_group);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn json_has_family_tag() {
    let c = catalog(GroupKind::O, 2, 3, DEFAULT_ENUM_CAP).unwrap();
    let v = serde_json::to_value(&c[0]).unwrap();
    assert_eq!(v["data"]["family"], "O");
    assert_eq!(v["kind"], "O");
}

#[test]
fn cap_exceeded() {
    assert!(catalog(GroupKind::U, 7, 7, DEFAULT_ENUM_CAP).is_err());
}
