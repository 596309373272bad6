use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vzlef_geometry::distance::exp0;
use vzlef_geometry::model::{
    gaussian, metric_at_matrix, op_norm, random_orthogonal, random_point, stress_point, GroupElement,
};
use vzlef_geometry::{metric_at, PointZ, TangentVec};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn domain_checks() {
    assert!(PointZ::new(DMatrix::from_element(1, 1, 1.0), 0).is_err());
    assert!(PointZ::new(DMatrix::from_row_slice(2, 1, &[0.8, 0.7]), 1).is_err());
    let z = PointZ::new(DMatrix::from_row_slice(2, 1, &[0.6, 0.0]), 1).unwrap();
    assert!((z.a() - 0.64).abs() < 1e-14);
    assert!((z.b() - 0.64).abs() < 1e-14);
    assert!(PointZ::new(DMatrix::zeros(2, 1), 3).is_err());
}

#[test]
fn b_dominates_a() {
    let mut g = rng(1);
    for _ in 0..200 {
        let z = random_point(&mut g, 2, 2, 2).point;
        assert!(z.a() > 0.0 && z.a() <= 1.0);
        assert!(z.log_b() >= z.log_a() - 1e-12);
    }
}

#[test]
fn metric_is_euclidean_at_origin() {
    let m = metric_at(&PointZ::origin(2, 2, 1));
    assert_eq!(m.gram(), DMatrix::identity(6, 6));
    let u = TangentVec(DMatrix::from_fn(3, 2, |i, j| (i + 2 * j) as f64));
    assert!((m.inner(&u, &u) - (&u.0 * u.0.transpose()).trace()).abs() < 1e-14);
}

#[test]
fn metric_positive_definite_at_random_points() {
    let mut g = rng(2);
    for _ in 0..100 {
        let z = random_point(&mut g, 2, 2, 1).point;
        let gram = metric_at(&z).gram();
        assert!((&gram - gram.transpose()).amax() < 1e-9 * gram.amax());
        assert!(gram.symmetric_eigen().eigenvalues.min() > 0.0);
    }
}

#[test]
fn gram_matches_inner_product() {
    let mut g = rng(3);
    let z = random_point(&mut g, 2, 1, 2).point;
    let m = metric_at(&z);
    let gram = m.gram();
    let (u, v) = (TangentVec(gaussian(&mut g, 3, 2)), TangentVec(gaussian(&mut g, 3, 2)));
    let via_gram = u.coords().dot(&(&gram * v.coords()));
    assert!((via_gram - m.inner(&u, &v)).abs() < 1e-10 * via_gram.abs().max(1.0));
}

#[test]
fn metric_is_invariant() {
    let mut g = rng(4);
    for &(p, q, r) in &[(1, 2, 1), (2, 2, 1), (2, 1, 2), (3, 2, 1)] {
        for _ in 0..30 {
            let z = random_point(&mut g, p, q, r).point;
            let elt = GroupElement::random(&mut g, q + r, p, 0.5);
            let u = TangentVec(gaussian(&mut g, q + r, p));
            let before = metric_at(&z).inner(&u, &u);
            let gz = elt.act_matrix(z.matrix());
            let after = metric_at_matrix(&gz).inner(&elt.pushforward(z.matrix(), &u), &elt.pushforward(z.matrix(), &u));
            assert!((before - after).abs() < 1e-7 * before, "{before} vs {after}");
        }
    }
}

#[test]
fn pushforward_is_the_derivative() {
    let mut g = rng(5);
    let z = random_point(&mut g, 2, 2, 1).point;
    let elt = GroupElement::random(&mut g, 3, 2, 0.4);
    let u = gaussian(&mut g, 3, 2);
    let h = 1e-6;
    let fd = (elt.act_matrix(&(z.matrix() + &u * h)) - elt.act_matrix(&(z.matrix() - &u * h))) / (2.0 * h);
    assert!((fd - elt.pushforward(z.matrix(), &TangentVec(u)).0).amax() < 1e-6);
}

#[test]
fn group_elements_preserve_the_form() {
    let mut g = rng(6);
    let elt = GroupElement::random(&mut g, 3, 2, 0.7);
    let j = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 1.0, 1.0, -1.0, -1.0]));
    assert!((elt.m.transpose() * &j * &elt.m - &j).amax() < 1e-10);
    let id = elt.compose(&elt.inverse());
    assert!((id.m - DMatrix::identity(5, 5)).amax() < 1e-10);
    let k = random_orthogonal(&mut g, 4);
    assert!((k.transpose() * &k - DMatrix::identity(4, 4)).amax() < 1e-12);
}

#[test]
fn transvection_moves_origin_along_exp() {
    let mut g = rng(7);
    let y = gaussian(&mut g, 3, 2) * 0.6;
    let t = GroupElement::transvection(&y);
    assert!((t.act_matrix(&DMatrix::zeros(3, 2)) - exp0(&y)).amax() < 1e-12);
}

#[test]
fn stable_log_a_after_action() {
    let mut g = rng(8);
    let z = random_point(&mut g, 2, 2, 1).point;
    let elt = GroupElement::random(&mut g, 3, 2, 0.5);
    let direct = elt.act(&z).unwrap().log_a();
    assert!((elt.log_a_after(z.matrix(), z.log_a()) - direct).abs() < 1e-9);
}

#[test]
fn rejection_counts_and_stress_points() {
    let mut g = rng(9);
    let mut total = 0;
    for _ in 0..50 {
        total += random_point(&mut g, 2, 2, 1).rejections;
    }
    // Acceptance probability of the 3x2 box is about 0.16.
    assert!(total > 50);
    let z = random_point(&mut g, 2, 2, 1).point;
    let s = stress_point(&z, 1e-6).unwrap();
    assert!((op_norm(s.matrix()) - (1.0 - 1e-6)).abs() < 1e-12);
    assert!(s.log_a() < -10.0 && s.log_a().is_finite());
    assert!(stress_point(&PointZ::origin(1, 1, 1), 0.1).is_err());
}

#[test]
fn sampling_is_seeded() {
    let a = random_point(&mut rng(10), 2, 2, 1);
    let b = random_point(&mut rng(10), 2, 2, 1);
    assert_eq!(a.point, b.point);
    assert_eq!(a.rejections, b.rejections);
}
