/// x = (u² − v²)/2, y = uv.
pub fn to_cartesian(u: f64, v: f64) -> (f64, f64) {
    ((u * u - v * v) / 2.0, u * v)
}

/// Inverse on the branch v ≥ 0, u = ±√(x + r) with the sign of y (u ≥ 0 on y = 0).
pub fn from_cartesian(x: f64, y: f64) -> (f64, f64) {
    let r = x.hypot(y);
    // avoid cancellation in r ± x
    let (up, vp) = if x >= 0.0 {
        let s = x + r;
        (s, if s > 0.0 { y * y / s } else { 0.0 })
    } else {
        let d = r - x;
        (if d > 0.0 { y * y / d } else { 0.0 }, d)
    };
    let u = up.sqrt();
    (if y < 0.0 { -u } else { u }, vp.sqrt())
}

/// The preimage of (x, y) nearest to `near`; the two preimages are ±(u, v).
pub fn local_preimage(x: f64, y: f64, near: (f64, f64)) -> (f64, f64) {
    let (u, v) = from_cartesian(x, y);
    if u * near.0 + v * near.1 < 0.0 {
        (-u, -v)
    } else {
        (u, v)
    }
}

/// ∂(x, y)/∂(u, v).
pub fn jacobian(u: f64, v: f64) -> [[f64; 2]; 2] {
    [[u, -v], [v, u]]
}

/// Spatial metric factor: dx² + dy² = (u² + v²)(du² + dv²).
pub fn metric_factor(u: f64, v: f64) -> f64 {
    u * u + v * v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn forward_examples() {
        assert_eq!(to_cartesian(1.0, 1.0), (0.0, 1.0));
        assert_eq!(from_cartesian(0.0, 0.0), (0.0, 0.0));
        assert_eq!(from_cartesian(2.0, 0.0), (2.0, 0.0));
        assert_eq!(from_cartesian(-2.0, 0.0), (0.0, 2.0));
    }

    #[test]
    fn roundtrip_on_branch() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let (x, y): (f64, f64) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let (u, v) = from_cartesian(x, y);
            assert!(v >= 0.0);
            let (x2, y2) = to_cartesian(u, v);
            assert!((x - x2).abs() < 1e-12 && (y - y2).abs() < 1e-12);
        }
    }

    #[test]
    fn numeric_jacobian_gives_conformal_metric() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let h = 1e-3;
        for _ in 0..100 {
            let (u, v): (f64, f64) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let d = |du: f64, dv: f64| {
                let (xp, yp) = to_cartesian(u + du, v + dv);
                let (xm, ym) = to_cartesian(u - du, v - dv);
                ((xp - xm) / (2.0 * h), (yp - ym) / (2.0 * h))
            };
            let (xu, yu) = d(h, 0.0);
            let (xv, yv) = d(0.0, h);
            let g = metric_factor(u, v);
            assert!((xu * xu + yu * yu - g).abs() < 1e-10);
            assert!((xv * xv + yv * yv - g).abs() < 1e-10);
            assert!((xu * xv + yu * yv).abs() < 1e-10);
            let j = jacobian(u, v);
            assert!((j[0][0] - xu).abs() < 1e-8 && (j[1][1] - yv).abs() < 1e-8);
        }
    }

    #[test]
    fn preimage_follows_reference() {
        let (x, y) = to_cartesian(-1.5, -0.5);
        let (u, v) = local_preimage(x, y, (-1.4, -0.6));
        assert!((u + 1.5).abs() < 1e-12 && (v + 0.5).abs() < 1e-12);
    }
}
