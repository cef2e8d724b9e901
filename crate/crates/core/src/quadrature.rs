//! Adaptive Simpson integration.
//!
//! Used as the independent numerical route when checking the closed-form
//! channel models against the integrals that define them; kept in the
//! library because `mcvd validate` runs those checks at runtime.

/// Integrates `f` over `[a, b]` by adaptive Simpson subdivision with
/// Richardson extrapolation, to absolute tolerance `tol`.
///
/// The integrand must be finite on the closed interval; supply the limit
/// value at removable endpoint singularities.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    assert!(a.is_finite() && b.is_finite() && b > a, "bad interval");
    assert!(tol > 0.0, "tolerance must be positive");
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, 60)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
        return refined + (refined - whole) / 15.0;
    }
    let half_tol = 0.5 * tol;
    recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integrates_polynomial_exactly() {
        // Simpson is exact for cubics.
        let v = adaptive_simpson(&|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-12);
        assert_relative_eq!(v, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn integrates_gaussian_tail() {
        let v = adaptive_simpson(&|x| (-x * x).exp(), 0.0, 10.0, 1e-12);
        assert_relative_eq!(v, 0.5 * std::f64::consts::PI.sqrt(), max_relative = 1e-10);
    }

    #[test]
    fn handles_removable_singularity_via_limit_value() {
        // sin(x)/x with the limit 1 supplied at x = 0.
        let f = |x: f64| if x == 0.0 { 1.0 } else { x.sin() / x };
        let v = adaptive_simpson(&f, 0.0, 1.0, 1e-12);
        assert_relative_eq!(v, 0.946083070367183, max_relative = 1e-10);
    }
}
