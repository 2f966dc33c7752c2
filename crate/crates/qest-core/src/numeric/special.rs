//! Log-gamma based helpers for binomials and Beta-function ratios that
//! overflow long before their ratios do.

use statrs::function::gamma::ln_gamma;

/// `ln Γ(x)` for `x > 0`.
pub fn lngamma(x: f64) -> f64 {
    ln_gamma(x)
}

/// `ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a+b)`.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// `ln C(n, k)` for `0 <= k <= n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

/// `ln n!`.
pub fn ln_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_exact_values() {
        assert!((ln_binomial(10, 3).exp() - 120.0).abs() < 1e-9);
        assert!((ln_binomial(30, 15).exp() - 155_117_520.0).abs() < 1.0);
    }

    #[test]
    fn beta_matches_small_cases() {
        // B(2, 3) = 1/12, B(1, 1) = 1.
        assert!((ln_beta(2.0, 3.0).exp() - 1.0 / 12.0).abs() < 1e-14);
        assert!(ln_beta(1.0, 1.0).abs() < 1e-14);
    }
}
