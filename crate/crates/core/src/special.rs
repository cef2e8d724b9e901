//! Error function and complement.
//!
//! `erfc` drives every closed-form channel model in this crate, so it is
//! evaluated through the regularized incomplete gamma function
//! `P(1/2, x^2)` / `Q(1/2, x^2)`: a power series below the `x^2 < 1.5`
//! crossover and a Lentz continued fraction above it. Both converge to a
//! few ulps in `f64`, comfortably under the 1e-10 relative error the
//! analytic oracles require.

use crate::scalar::{cast, Scalar};

/// Error function `erf(x) = (2/sqrt(pi)) * integral of exp(-t^2) over [0, x]`.
pub fn erf<F: Scalar>(x: F) -> F {
    if x.is_nan() {
        return x;
    }
    let sign = if x < F::zero() { -F::one() } else { F::one() };
    let ax = x.abs();
    if ax > cast(6.0) {
        return sign;
    }
    sign * (F::one() - erfc_nonnegative(ax))
}

/// Complementary error function `erfc(x) = 1 - erf(x)`.
///
/// Large positive arguments evaluate the continued fraction directly, so no
/// cancellation occurs where `erfc` is tiny; negative arguments use the
/// reflection `erfc(-x) = 2 - erfc(x)`.
pub fn erfc<F: Scalar>(x: F) -> F {
    if x.is_nan() {
        return x;
    }
    if x < F::zero() {
        cast::<F>(2.0) - erfc_nonnegative(-x)
    } else {
        erfc_nonnegative(x)
    }
}

fn erfc_nonnegative<F: Scalar>(x: F) -> F {
    debug_assert!(x >= F::zero());
    if x == F::zero() {
        return F::one();
    }
    // erfc underflows to zero near x = 26.6 in f64; cut off before the
    // continued fraction has to chase subnormals.
    if x > cast(27.0) {
        return F::zero();
    }
    let x2 = x * x;
    // Prefactor x * exp(-x^2) / sqrt(pi) = exp(-x^2 + ln x - ln Gamma(1/2)).
    let prefactor = x * (-x2).exp() / F::PI().sqrt();
    if x2 < cast(1.5) {
        F::one() - lower_series(x2, prefactor)
    } else {
        upper_continued_fraction(x2, prefactor)
    }
}

const MAX_ITER: usize = 300;

/// Series for P(1/2, y): sum over k of y^k / ((1/2)(3/2)...(k+1/2)).
fn lower_series<F: Scalar>(y: F, prefactor: F) -> F {
    let half = cast::<F>(0.5);
    let mut denom = half;
    let mut term = F::one() / half;
    let mut sum = term;
    for _ in 0..MAX_ITER {
        denom = denom + F::one();
        term = term * y / denom;
        sum = sum + term;
        if term.abs() < sum.abs() * F::epsilon() {
            break;
        }
    }
    prefactor * sum
}

/// Modified Lentz continued fraction for Q(1/2, y).
fn upper_continued_fraction<F: Scalar>(y: F, prefactor: F) -> F {
    let half = cast::<F>(0.5);
    let tiny = cast::<F>(1e-30);
    let mut b = y + F::one() - half;
    let mut c = F::one() / tiny;
    let mut d = F::one() / b;
    let mut f = d;
    for i in 1..=MAX_ITER {
        let k = cast::<F>(i as f64);
        let a = -k * (k - half);
        b = b + cast(2.0);
        d = a * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = d.recip();
        let delta = d * c;
        f = f * delta;
        if (delta - F::one()).abs() < F::epsilon() {
            break;
        }
    }
    prefactor * f
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference values computed independently at 40-digit precision.
    const ERFC_REFS: &[(f64, f64)] = &[
        (0.1, 0.8875370839817151),
        (0.2, 0.7772974107895215),
        (0.4, 0.5716076449533315),
        (1.0, 0.15729920705028513),
        (2.5, 4.0695201744495894e-4),
        (5.0, 1.5374597944280349e-12),
        (10.0, 2.0884875837625448e-45),
        (-0.5, 1.5204998778130465),
        (-3.0, 1.9999779095030014),
    ];

    #[test]
    fn erfc_matches_reference_values() {
        for &(x, expected) in ERFC_REFS {
            assert_relative_eq!(erfc(x), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn erfc_limits() {
        assert_eq!(erfc(0.0_f64), 1.0);
        assert_eq!(erfc(30.0_f64), 0.0);
        assert_relative_eq!(erfc(-30.0_f64), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn erf_complements_erfc() {
        for x in [-2.0_f64, -0.3, 0.0, 0.7, 1.9, 4.0] {
            assert_relative_eq!(erf(x) + erfc(x), 1.0, max_relative = 1e-13);
        }
    }

    #[test]
    fn erf_is_odd() {
        for x in [0.1_f64, 0.9, 2.2] {
            assert_relative_eq!(erf(-x), -erf(x), max_relative = 1e-14);
        }
    }

    #[test]
    fn works_in_single_precision() {
        assert_relative_eq!(erfc(0.2_f32), 0.777_297_4_f32, max_relative = 1e-5);
    }
}
