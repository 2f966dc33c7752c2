//! Gauss–Legendre quadrature rules with a process-wide node cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the rule by Newton iteration on the Legendre polynomial
    /// `P_n`, seeded with the Chebyshev-like asymptotic root estimates.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Root estimate (Abramowitz & Stegun 22.16.6).
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            // One polishing step.
            let (p, d) = legendre_with_derivative(n, x);
            x -= p / d;
            let dp = legendre_with_derivative(n, x).1;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_with_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendre { nodes, weights }
    }

    /// Cached rule, shared across threads.
    pub fn cached(n: usize) -> Arc<GaussLegendre> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(rule) = cache.read().unwrap().get(&n) {
            return Arc::clone(rule);
        }
        let rule = Arc::new(GaussLegendre::new(n));
        cache
            .write()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&rule))
            .clone()
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| (mid + half * x, w * half))
            .collect()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        // n-point Gauss-Legendre is exact for degree <= 2n-1.
        for n in [2usize, 5, 16, 64] {
            let rule = GaussLegendre::new(n);
            for k in 0..(2 * n) {
                let exact = 1.0 / (k as f64 + 1.0);
                let got = rule.integrate(0.0, 1.0, |x| x.powi(k as i32));
                assert!(
                    (got - exact).abs() < 1e-13,
                    "n={n} k={k}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1usize, 3, 17, 128, 1024] {
            let rule = GaussLegendre::new(n);
            let s: f64 = rule.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-12, "n={n}: {s}");
        }
    }

    #[test]
    fn cached_rules_are_shared() {
        let a = GaussLegendre::cached(64);
        let b = GaussLegendre::cached(64);
        assert!(Arc::ptr_eq(&a, &b));
    }
}
