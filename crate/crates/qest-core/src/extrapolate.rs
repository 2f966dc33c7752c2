//! Polynomial (Richardson/Neville) extrapolation of sequences to their
//! `N -> ∞` limit.

/// Extrapolates `values[i]`, sampled at `ns[i]`, to `N -> ∞` by Neville's
/// algorithm on the variable `x = 1/N` evaluated at `x = 0`.
///
/// Panics if the inputs are empty or of unequal length.
pub fn richardson_limit(ns: &[f64], values: &[f64]) -> f64 {
    assert_eq!(ns.len(), values.len());
    assert!(!ns.is_empty());
    let xs: Vec<f64> = ns.iter().map(|&n| 1.0 / n).collect();
    neville_at_zero(&xs, values)
}

/// Neville tableau evaluated at `x = 0`.
fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len();
    let mut p = ys.to_vec();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xk) = (xs[i], xs[i + level]);
            p[i] = (xk * p[i] - xi * p[i + 1]) / (xk - xi);
        }
    }
    p[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_limit_of_rational_sequence() {
        // f(N) = 2 + 3/N - 5/N^2: exact for a cubic Neville fit.
        let ns = [50.0, 100.0, 150.0, 200.0];
        let vals: Vec<f64> = ns.iter().map(|n| 2.0 + 3.0 / n - 5.0 / (n * n)).collect();
        let lim = richardson_limit(&ns, &vals);
        assert!((lim - 2.0).abs() < 1e-10, "{lim}");
    }

    #[test]
    fn beats_raw_truncation() {
        let ns = [50.0, 100.0, 150.0, 200.0];
        let vals: Vec<f64> = ns.iter().map(|n| 1.0 + 2.0 / n + 7.0 / n.powi(3)).collect();
        let lim = richardson_limit(&ns, &vals);
        assert!((lim - 1.0).abs() < (vals[3] - 1.0).abs() / 100.0);
    }
}
