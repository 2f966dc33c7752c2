//! Monotone cubic (Fritsch–Carlson) interpolation.
//!
//! Used for tabulated prior densities and for inverting precomputed CDFs in
//! the Monte Carlo sampler. The Fritsch–Carlson slope limiter guarantees the
//! interpolant is monotone wherever the data are, so CDF inversion is well
//! posed.

/// A C¹ piecewise-cubic Hermite interpolant with limited slopes.
#[derive(Clone, Debug)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl MonotoneCubic {
    /// Builds the interpolant. Requires at least 3 points and strictly
    /// increasing `xs`.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, String> {
        if xs.len() != ys.len() {
            return Err("x/y length mismatch".into());
        }
        if xs.len() < 3 {
            return Err(format!("need at least 3 nodes, got {}", xs.len()));
        }
        for w in xs.windows(2) {
            if !(w[1] > w[0]) {
                return Err(format!("x grid not strictly increasing at {}", w[0]));
            }
        }
        let n = xs.len();
        let mut d = vec![0.0; n - 1]; // secant slopes
        for i in 0..n - 1 {
            d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut slopes = vec![0.0; n];
        slopes[0] = d[0];
        slopes[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            slopes[i] = if d[i - 1] * d[i] <= 0.0 {
                0.0
            } else {
                // Harmonic-mean style average keeps monotonicity.
                let w1 = 2.0 * (xs[i + 1] - xs[i]) + (xs[i] - xs[i - 1]);
                let w2 = (xs[i + 1] - xs[i]) + 2.0 * (xs[i] - xs[i - 1]);
                (w1 + w2) / (w1 / d[i - 1] + w2 / d[i])
            };
        }
        // Fritsch-Carlson limiter on the end slopes.
        for i in [0, n - 1] {
            let di = if i == 0 { d[0] } else { d[n - 2] };
            if di == 0.0 {
                slopes[i] = 0.0;
            } else if slopes[i] / di < 0.0 {
                slopes[i] = 0.0;
            } else if (slopes[i] / di).abs() > 3.0 {
                slopes[i] = 3.0 * di;
            }
        }
        Ok(MonotoneCubic { xs, ys, slopes })
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    fn segment(&self, x: f64) -> usize {
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.xs.len() - 2),
        }
    }

    /// Evaluates the interpolant; clamps outside the domain.
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(self.xs[0], *self.xs.last().unwrap());
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    /// Solves `eval(x) = y` for nondecreasing data by bisection refined with
    /// Newton steps. `y` is clamped to the value range.
    pub fn invert(&self, y: f64) -> f64 {
        let y = y.clamp(self.ys[0], *self.ys.last().unwrap());
        // Locate the segment by binary search on the node values.
        let mut lo = 0usize;
        let mut hi = self.xs.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.ys[mid] <= y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (mut a, mut b) = (self.xs[lo], self.xs[hi]);
        let mut x = 0.5 * (a + b);
        for _ in 0..60 {
            let fx = self.eval(x) - y;
            if fx.abs() < 1e-15 {
                break;
            }
            if fx > 0.0 {
                b = x;
            } else {
                a = x;
            }
            let d = self.derivative(x);
            let newton = if d > 0.0 { x - fx / d } else { x };
            x = if newton > a && newton < b {
                newton
            } else {
                0.5 * (a + b)
            };
            if b - a < 1e-15 * (1.0 + x.abs()) {
                break;
            }
        }
        x
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let x = x.clamp(self.xs[0], *self.xs.last().unwrap());
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.slopes[i], self.slopes[i + 1]);
        let t2 = t * t;
        (y0 * (6.0 * t2 - 6.0 * t) / h)
            + m0 * (3.0 * t2 - 4.0 * t + 1.0)
            + (y1 * (-6.0 * t2 + 6.0 * t) / h)
            + m1 * (3.0 * t2 - 2.0 * t)
    }
}
