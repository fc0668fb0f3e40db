use hamout::certificates::*;
use rand::Rng;

#[test]
fn halving_the_step_does_not_loosen_the_bound() {
    let a = certify_g(G_STEP, G_BOUND).unwrap();
    let b = certify_g(G_STEP / 2.0, G_BOUND).unwrap();
    assert!(a.pass && b.pass);
    assert!(b.global_upper_bound <= a.global_upper_bound + 1e-12);
    let (grid, at) = g_grid_max(G_STEP);
    assert!(grid <= a.global_upper_bound, "{grid} at {at:?}");
}

#[test]
fn random_points_stay_below_the_certified_bound() {
    let cert = certify_g(G_STEP, G_BOUND).unwrap();
    let mut rng = hamout::rng::stream(41);
    let mut evaluated = 0;
    for _ in 0..200_000 {
        let x = rng.gen_range(X_MIN..=X_MAX);
        let y = rng.gen_range(0.0..=1.0 - 2.0 * x);
        let z = rng.gen_range(0.0..=3.0 * y);
        if let Ok(v) = g_value(x, y, z) {
            assert!(v <= cert.global_upper_bound, "g({x}, {y}, {z}) = {v}");
            let d = g_value_direct(x, y, z).unwrap();
            assert!((v - d).abs() <= 1e-9 * d.max(1e-300));
            evaluated += 1;
        }
    }
    assert!(evaluated > 100_000);
}

#[test]
fn superadditivity_on_random_quadruples() {
    let mut rng = hamout::rng::stream(41);
    for _ in 0..100_000 {
        let mut draw = || 10f64.powf(rng.gen_range(-6.0..3.0));
        let (a, b, x, y) = (draw(), draw(), draw(), draw());
        assert!(check_superadditivity(a, b, x, y).unwrap(), "{a} {b} {x} {y}");
    }
    assert!(check_superadditivity(-1.0, 1.0, 1.0, 1.0).is_err());
}

#[test]
fn bin_ratio_is_scaled_entropy() {
    let mut rng = hamout::rng::stream(41);
    for _ in 0..10_000 {
        let a = rng.gen_range(1e-3..10.0);
        let p: f64 = rng.gen_range(1e-6..1.0 - 1e-6);
        let h = -p * p.ln() - (1.0 - p) * (1.0 - p).ln();
        let v = ln_bin_ratio(a, p * a).unwrap();
        assert!((v - a * h).abs() <= 1e-10 * (1.0 + v.abs()));
    }
    assert_eq!(ln_bin_ratio(2.0, 0.0).unwrap(), 0.0);
    assert_eq!(ln_bin_ratio(2.0, 2.0).unwrap(), 0.0);
    assert!(ln_bin_ratio(1.0, 2.0).is_err());
}

#[test]
fn boundary_faces_are_finite() {
    for i in 0..=80 {
        let x = X_MIN + i as f64 * (X_MAX - X_MIN) / 80.0;
        let v = g_value(x, 0.0, 0.0).unwrap();
        assert!(v.is_finite() && v > 0.0);
    }
    assert!(g_value(0.2, 0.1, 0.0).unwrap().is_finite());
    assert!(g_value(0.2, 0.1, 0.3).unwrap().is_finite());
    assert!(g_value(0.2, 0.1, 0.31).is_err());
}

#[test]
fn f_certificate_and_samples() {
    let c = certify_f(F_STEP).unwrap();
    assert!(c.pass);
    let mut rng = hamout::rng::stream(41);
    for _ in 0..100_000 {
        let x = rng.gen_range(0.415..1.0 - 1e-6);
        let v = f_value(x).unwrap();
        assert!(v <= c.global_upper_bound);
        assert!((v - f_value_direct(x).unwrap()).abs() <= 1e-9);
    }
    assert!(f_value(0.4).is_err());
}
