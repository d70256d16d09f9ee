/// `x^{1/k}` computed as `exp(ln(x) / k)`; nonpositive `x` maps to zero.
pub fn root(x: f64, k: u32) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (x.ln() / k as f64).exp()
    }
}

/// `(n^2 - 3n + 3) / (n - 1)^3`, the extremal constant of the
/// fourth-moment Samuelson-type inequalities.
pub(crate) fn samuelson_quartic_constant(n: usize) -> f64 {
    let n = n as f64;
    (n * n - 3.0 * n + 3.0) / ((n - 1.0) * (n - 1.0) * (n - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(root(0.0, 4), 0.0);
        assert_eq!(root(-3.0, 6), 0.0);
        assert!((root(16.0, 4) - 2.0).abs() < 1e-15);
        assert!((root(729.0, 6) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn quartic_constant() {
        assert_eq!(samuelson_quartic_constant(2), 1.0);
        assert!((samuelson_quartic_constant(4) - 7.0 / 27.0).abs() < 1e-16);
    }
}
