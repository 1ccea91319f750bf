//! Bracketed scalar root finding: Newton steps with a numeric derivative,
//! safeguarded by bisection so the iterate never leaves the bracket.

use super::NumericsError;

const MAX_ITERATIONS: usize = 200;

/// Finds x in [lo, hi] with |g(x)| ≤ tol.
///
/// Requires a sign change over the bracket. A Newton candidate (central
/// difference derivative) is used when it stays inside the current
/// bracket and the bracket keeps halving; otherwise the step falls back
/// to bisection. The result always lies inside the initial bracket.
pub fn find_root<F: Fn(f64) -> f64>(
    g: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, NumericsError> {
    assert!(lo < hi, "bracket must satisfy lo < hi");
    let f_lo = g(lo);
    let f_hi = g(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || !f_lo.is_finite() || !f_hi.is_finite() {
        return Err(NumericsError::NoSignChange { lo, hi, f_lo, f_hi });
    }

    let mut a = lo;
    let mut b = hi;
    let mut f_a = f_lo;
    let mut x = 0.5 * (a + b);
    let mut previous_width = b - a;

    for iteration in 0..MAX_ITERATIONS {
        let f_x = g(x);
        if f_x.abs() <= tol {
            return Ok(x);
        }
        if f_x.signum() == f_a.signum() {
            a = x;
            f_a = f_x;
        } else {
            b = x;
        }
        let width = b - a;
        if width <= 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0) {
            return Ok(x);
        }

        // Force a bisection step whenever two iterations failed to halve
        // the bracket, so convergence is never slower than bisection.
        let stalled = iteration % 2 == 1 && width > 0.5 * previous_width;
        if iteration % 2 == 1 {
            previous_width = width;
        }

        let h = 1e-7 * x.abs().max(1.0);
        let derivative = (g(x + h) - g(x - h)) / (2.0 * h);
        let newton = x - f_x / derivative;
        x = if !stalled && newton.is_finite() && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displacement_transcendental_root() {
        let root = find_root(|x: f64| x - 3.0 * (1.0 - (-x).exp()), 1.0, 5.0, 1e-10).unwrap();
        assert!((root - 2.82144).abs() <= 1e-5);
        assert!((root - 2.8214393721220787).abs() <= 1e-9);
    }

    #[test]
    fn linear_roots() {
        let root = find_root(|x| x - 1.0, 0.0, 2.0, 1e-10).unwrap();
        assert!((root - 1.0).abs() <= 1e-10);
        // Wien-Paschen peak condition reduces to x = 2 - N with N = -1.
        let n = -1.0;
        let root = find_root(|x| x - (2.0 - n), 0.5, 10.0, 1e-12).unwrap();
        assert!((root - 3.0).abs() <= 1e-12);
    }

    #[test]
    fn rejects_brackets_without_sign_change() {
        assert!(matches!(
            find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10),
            Err(NumericsError::NoSignChange { .. })
        ));
    }

    #[test]
    fn result_stays_inside_bracket() {
        // Steep function whose Newton steps would overshoot wildly.
        let root = find_root(|x: f64| (20.0 * (x - 0.1)).tanh(), -4.0, 8.0, 1e-12).unwrap();
        assert!((-4.0..=8.0).contains(&root));
        assert!((root - 0.1).abs() <= 1e-9);
    }

    #[test]
    fn endpoint_roots_are_returned_directly() {
        assert_eq!(find_root(|x| x, 0.0, 1.0, 1e-10).unwrap(), 0.0);
        assert_eq!(find_root(|x| x - 1.0, 0.5, 1.0, 1e-10).unwrap(), 1.0);
    }
}
