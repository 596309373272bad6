use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vzlef_geometry::distance::{
    ba_ratio, distance_origin, distance_to_xv, exp0, fiber_coordinate, gv_normalizer, log0, radial_distance,
};
use vzlef_geometry::model::{gaussian, metric_at_matrix, op_norm, random_orthogonal, random_point, GroupElement};
use vzlef_geometry::{PointZ, TangentVec};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Length of `t ↦ Exp₀(tY)`, `t ∈ [0,1]`, measured with the metric (Simpson).
fn path_length(y: &DMatrix<f64>) -> f64 {
    let speed = |t: f64| {
        let h = 1e-6;
        let v = (exp0(&(y * (t + h))) - exp0(&(y * (t - h)))) / (2.0 * h);
        let v = TangentVec(v);
        metric_at_matrix(&exp0(&(y * t))).inner(&v, &v).sqrt()
    };
    let n = 200;
    let h = 1.0 / n as f64;
    let inner: f64 = (1..n).map(|i| if i % 2 == 1 { 4.0 } else { 2.0 } * speed(i as f64 * h)).sum();
    h / 3.0 * (speed(1e-6) + inner + speed(1.0))
}

#[test]
fn single_entry_distance() {
    for &z in &[0.1, 0.5, -0.9, 0.999] {
        let pt = PointZ::new(DMatrix::from_element(1, 1, z), 1).unwrap();
        let rep = distance_origin(&pt);
        let d = f64::atanh(z.abs());
        assert!((rep.distance - d).abs() < 1e-12);
        assert!((rep.rank_one_value.unwrap() - d).abs() < 1e-7);
        assert!((rep.inv_det - d.cosh().powi(2)).abs() < 1e-9 * rep.inv_det);
    }
}

#[test]
fn origin_distance_is_zero() {
    let rep = distance_origin(&PointZ::origin(2, 2, 1));
    assert_eq!(rep.distance, 0.0);
    assert_eq!(rep.rank, 0);
    assert_eq!(rep.rank_one_value, Some(0.0));
    assert!(rep.literal_contains && rep.corrected_contains);
}

#[test]
fn rank_one_closed_form() {
    let mut g = rng(1);
    for _ in 0..50 {
        let u = gaussian(&mut g, 3, 1);
        let v = gaussian(&mut g, 1, 2);
        let z = &u * &v;
        let z = &z * (0.95 / z.norm());
        let pt = PointZ::new(z, 2).unwrap();
        let rep = distance_origin(&pt);
        assert_eq!(rep.rank, 1);
        assert!((rep.rank_one_value.unwrap() - rep.distance).abs() < 1e-8);
    }
}

#[test]
fn exact_distance_is_the_geodesic_length() {
    let mut g = rng(2);
    for _ in 0..10 {
        let pt = random_point(&mut g, 2, 2, 1).point;
        if pt.log_a() < -4.0 {
            continue;
        }
        let y = log0(pt.matrix());
        assert!((exp0(&y) - pt.matrix()).amax() < 1e-10);
        let d = distance_origin(&pt).distance;
        assert!((path_length(&y) - d).abs() < 1e-5 * d.max(1.0), "{} vs {d}", path_length(&y));
        assert!((y.norm() - d).abs() < 1e-10);
    }
}

#[test]
fn distance_is_invariant() {
    let mut g = rng(3);
    for _ in 0..20 {
        let (a, b) = (random_point(&mut g, 2, 1, 2).point, random_point(&mut g, 2, 1, 2).point);
        // d(a,b) = d(0, g_a⁻¹ b) with g_a the transvection to a.
        let ga = GroupElement::transvection(&log0(a.matrix())).inverse();
        let d_ab = radial_distance(&ga.act_matrix(b.matrix()));
        let h = GroupElement::random(&mut g, 3, 2, 0.6);
        let (ha, hb) = (h.act_matrix(a.matrix()), h.act_matrix(b.matrix()));
        let gha = GroupElement::transvection(&log0(&ha)).inverse();
        let d_hab = radial_distance(&gha.act_matrix(&hb));
        assert!((d_ab - d_hab).abs() < 1e-6 * d_ab.max(1.0), "{d_ab} vs {d_hab}");
    }
}

#[test]
fn rank_two_distance_inside_corrected_interval() {
    let mut g = rng(4);
    let mut literal_misses = 0;
    for _ in 0..2000 {
        let pt = random_point(&mut g, 2, 2, 1).point;
        let rep = distance_origin(&pt);
        assert!(rep.corrected_contains, "{rep:?}");
        literal_misses += usize::from(!rep.literal_contains);
    }
    // The printed bounds are those of det^{−1/2}; for det⁻¹ they fail once d is moderate.
    assert!(literal_misses > 0);
    let z = DMatrix::from_row_slice(3, 2, &[0.99, 0.0, 0.0, 0.98, 0.0, 0.0]);
    let rep = distance_origin(&PointZ::new(z, 2).unwrap());
    assert_eq!(rep.rank, 2);
    assert!(rep.corrected_contains && !rep.literal_contains);
    assert!(rep.literal.hi < rep.inv_det);
    assert!(rep.inv_det.sqrt() <= rep.literal.hi && rep.inv_det.sqrt() >= rep.literal.lo);
}

#[test]
fn ba_closed_forms_agree() {
    let mut g = rng(5);
    let mut worst: f64 = 0.0;
    for p in 1..=4 {
        for n in 1..=4 {
            for q in 0..=n {
                for _ in 0..10_000 {
                    // Gaussian direction at a uniform operator-norm radius: the
                    // uniform box rarely lands in the domain once np ≥ 12.
                    let z = gaussian(&mut g, n, p);
                    let z = &z * (g.random::<f64>() / op_norm(&z));
                    let pt = PointZ::new(z, q).unwrap();
                    let ba = ba_ratio(&pt);
                    let rel = (ba.via_determinants - ba.via_fiber).abs() / ba.via_determinants;
                    worst = worst.max(rel);
                    assert!(ba.via_determinants >= 1.0 - 1e-12);
                }
            }
        }
    }
    assert!(worst < 1e-10, "worst relative gap {worst:e}");
}

#[test]
fn ba_special_cases() {
    let mut g = rng(6);
    for _ in 0..100 {
        let pt = random_point(&mut g, 2, 2, 2).point;
        let mut z = pt.matrix().clone();
        z.rows_mut(2, 2).fill(0.0);
        let on_xv = PointZ::new(z, 2).unwrap();
        assert!((ba_ratio(&on_xv).via_determinants - 1.0).abs() < 1e-12);
        assert!(distance_to_xv(&on_xv) == 0.0);

        let mut z = pt.matrix().clone();
        z.rows_mut(0, 2).fill(0.0);
        let fiber = PointZ::new(z, 2).unwrap();
        let z2 = fiber.z2();
        let expected = 1.0 / (DMatrix::identity(2, 2) - z2.tr_mul(&z2)).determinant();
        assert!((ba_ratio(&fiber).via_determinants - expected).abs() < 1e-9 * expected);
    }
}

#[test]
fn am_gm_bound() {
    let mut g = rng(7);
    for &(p, q, r) in &[(1, 1, 1), (2, 1, 2), (2, 2, 3), (3, 1, 2)] {
        for _ in 0..500 {
            let ba = ba_ratio(&random_point(&mut g, p, q, r).point);
            assert!(ba.am_gm_mean.unwrap() >= ba.am_gm_root.unwrap() * (1.0 - 1e-12));
        }
    }
    let ba = ba_ratio(&PointZ::origin(2, 3, 0));
    assert_eq!((ba.via_fiber, ba.am_gm_mean), (1.0, None));
}

#[test]
fn ba_is_gv_invariant() {
    let mut g = rng(8);
    for _ in 0..100 {
        let pt = random_point(&mut g, 2, 2, 2).point;
        let h = GroupElement::random(&mut g, 2, 2, 0.5);
        let elt = GroupElement::embed_gv(&h, &random_orthogonal(&mut g, 2));
        let moved = elt.act(&pt).unwrap();
        let (a, b) = (ba_ratio(&pt).via_determinants, ba_ratio(&moved).via_determinants);
        assert!((a - b).abs() < 1e-7 * a, "{a} vs {b}");
        assert!((distance_to_xv(&pt) - distance_to_xv(&moved)).abs() < 1e-7);
    }
}

#[test]
fn normalizer_lands_on_the_fiber_over_zero() {
    let mut g = rng(9);
    for _ in 0..50 {
        let pt = random_point(&mut g, 2, 2, 1).point;
        let moved = gv_normalizer(&pt).act_matrix(pt.matrix());
        assert!(moved.rows(0, 2).amax() < 1e-9);
        assert!((moved.rows(2, 1) - fiber_coordinate(&pt)).amax() < 1e-9);
    }
}

#[test]
fn distance_to_xv_with_one_normal_direction() {
    let mut g = rng(10);
    for _ in 0..200 {
        let pt = random_point(&mut g, 3, 2, 1).point;
        let f = distance_to_xv(&pt);
        let ba = ba_ratio(&pt).via_determinants;
        assert!((f.cosh().powi(2) - ba).abs() < 1e-8 * ba);
    }
}
