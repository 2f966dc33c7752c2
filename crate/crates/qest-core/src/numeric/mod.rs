//! Shared numeric machinery: quadrature rules, monotone interpolation,
//! log-gamma helpers and simplex projection.

pub mod gauss;
pub mod interp;
pub mod special;

/// Projects `x` onto the probability simplex `{ x_i >= 0, sum x_i = 1 }`
/// (Euclidean projection, Held–Wolfe–Crowder algorithm).
pub fn project_simplex(x: &mut [f64]) {
    let n = x.len();
    debug_assert!(n > 0);
    let mut sorted: Vec<f64> = x.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumsum = 0.0;
    let mut theta = (sorted.iter().sum::<f64>() - 1.0) / n as f64;
    for (k, &v) in sorted.iter().enumerate() {
        cumsum += v;
        let candidate = (cumsum - 1.0) / (k as f64 + 1.0);
        if v - candidate > 0.0 {
            theta = candidate;
        }
    }
    for v in x.iter_mut() {
        *v = (*v - theta).max(0.0);
    }
    // Guard against accumulated rounding: renormalize exactly.
    let s: f64 = x.iter().sum();
    if s > 0.0 {
        for v in x.iter_mut() {
            *v /= s;
        }
    } else {
        let u = 1.0 / n as f64;
        for v in x.iter_mut() {
            *v = u;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_projection_is_feasible_and_idempotent() {
        let cases: Vec<Vec<f64>> = vec![
            vec![0.2, 0.3, 0.5],
            vec![1.5, -0.3, 0.1],
            vec![-1.0, -2.0],
            vec![10.0],
            vec![0.0, 0.0, 0.0, 0.0],
        ];
        for case in cases {
            let mut x = case.clone();
            project_simplex(&mut x);
            let s: f64 = x.iter().sum();
            assert!((s - 1.0).abs() < 1e-12, "sum {s} for {case:?}");
            assert!(x.iter().all(|&v| v >= 0.0));
            let mut y = x.clone();
            project_simplex(&mut y);
            for (a, b) in x.iter().zip(&y) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn simplex_projection_fixes_interior_points() {
        let mut x = vec![0.25, 0.25, 0.5];
        project_simplex(&mut x);
        assert!((x[0] - 0.25).abs() < 1e-15);
        assert!((x[2] - 0.5).abs() < 1e-15);
    }
}
