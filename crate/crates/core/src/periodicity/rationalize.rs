use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

/// p/q with λ ≈ e^{2πi·p/q}, 0 ≤ p < q ≤ q_max, gcd(p, q) = 1.
///
/// Candidates are the continued-fraction convergents of arg(λ)/2π; any p/q
/// within tol/2π of the angle is among them, since tol is far below
/// 1/(2q²) for every admissible q.
pub fn rationalize_root(lambda: Complex64, q_max: u64, tol: f64) -> Option<(u64, u64)> {
    if (lambda.norm() - 1.0).abs() > tol {
        return None;
    }
    let x = lambda.arg().rem_euclid(TAU) / TAU;
    let close = |p: u64, q: u64| (lambda - Complex64::from_polar(1.0, TAU * p as f64 / q as f64)).norm() <= tol;
    // Convergents h/k of x.
    let (mut h0, mut h1) = (0u64, 1u64);
    let (mut k0, mut k1) = (1u64, 0u64);
    let mut frac = x;
    loop {
        let a = frac.floor();
        if a > u64::MAX as f64 / 2.0 {
            return None;
        }
        let a = a as u64;
        let h = a.checked_mul(h1)?.checked_add(h0)?;
        let k = a.checked_mul(k1)?.checked_add(k0)?;
        if k > q_max {
            return None;
        }
        if close(h, k) {
            let p = h % k;
            let g = p.gcd(&k);
            return Some((p / g, k / g));
        }
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let rest = frac - a as f64;
        if rest <= 0.0 {
            return None;
        }
        frac = 1.0 / rest;
    }
}
