//! Isotropic purity priors `w(r)` on `[0, 1]` and the quadrature engine
//! behind every fidelity integral.
//!
//! Shipped families:
//!
//! - Bures: `w(r) = (4/π) r²/√(1-r²)` — the fidelity-metric volume element.
//!   The inverse-square-root endpoint singularity is removed by the
//!   substitution `r = sin t`, after which the integrand is smooth.
//! - Uniform: `w(r) = 1`.
//! - Step: `w(r) = 2r/δ²` on `[0, δ]`, zero above.
//! - Tabulated: monotone-cubic interpolation of `(r, w)` samples,
//!   renormalized to unit mass.
//!
//! Integration is Gauss–Legendre with node doubling (64 up to 4096) until
//! two successive levels agree to `1e-10` relative or `1e-13` absolute.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::gauss::GaussLegendre;
use crate::numeric::interp::MonotoneCubic;

const REL_TOL: f64 = 1e-10;
const ABS_TOL: f64 = 1e-13;
const BASE_NODES: usize = 64;
const MAX_NODES: usize = 4096;
const MOMENT_CACHE: usize = 8;

/// Variable change applied before Gauss–Legendre integration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Transform {
    /// Integrate directly in `r`.
    None,
    /// Integrate in `t` with `r = sin t`; removes `1/√(1-r²)` endpoint
    /// singularities.
    SinSubstitution,
}

/// A concrete quadrature rule on the prior's support: nodes in `r`, weights
/// including the Jacobian of the transform (but not the density).
#[derive(Clone, Debug)]
pub struct Quadrature {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub transform: Transform,
}

impl Quadrature {
    /// Plain Gauss–Legendre on `[a, b]`.
    pub fn gauss_legendre(count: usize, a: f64, b: f64) -> Quadrature {
        let rule = GaussLegendre::cached(count);
        let mapped = rule.mapped(a, b);
        Quadrature {
            nodes: mapped.iter().map(|p| p.0).collect(),
            weights: mapped.iter().map(|p| p.1).collect(),
            transform: Transform::None,
        }
    }

    /// Gauss–Legendre in `t ∈ [0, π/2]` mapped through `r = sin t`; the
    /// `cos t` Jacobian is folded into the weights.
    pub fn sin_substitution(count: usize) -> Quadrature {
        let rule = GaussLegendre::cached(count);
        let mapped = rule.mapped(0.0, std::f64::consts::FRAC_PI_2);
        Quadrature {
            nodes: mapped.iter().map(|p| p.0.sin()).collect(),
            weights: mapped.iter().map(|p| p.1 * p.0.cos()).collect(),
            transform: Transform::SinSubstitution,
        }
    }

    /// `Σ w_i f(r_i)`.
    pub fn apply(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Prior family tag.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum PriorKind {
    Bures,
    Uniform,
    Step(f64),
    Tabulated,
}

/// An isotropic purity prior: a normalized density `w(r)` on `[0, 1]` plus
/// the quadrature strategy adapted to its endpoint behavior. Immutable
/// after construction (moments are precomputed), hence freely shareable
/// across threads.
#[derive(Clone, Debug)]
pub struct Prior {
    kind: PriorKind,
    id: String,
    singular_at_one: bool,
    transform: Transform,
    support_start: f64,
    support_end: f64,
    table: Option<MonotoneCubic>,
    renormalization: f64,
    moments: Vec<f64>,
}

impl Prior {
    /// The Bures prior `w(r) = (4/π) r²/√(1-r²)`.
    pub fn bures() -> Prior {
        let mut p = Prior {
            kind: PriorKind::Bures,
            id: "bures".into(),
            singular_at_one: true,
            transform: Transform::SinSubstitution,
            support_start: 0.0,
            support_end: 1.0,
            table: None,
            renormalization: 1.0,
            moments: Vec::new(),
        };
        p.moments = p.compute_moments();
        p
    }

    /// The flat purity prior `w(r) = 1`.
    pub fn uniform() -> Prior {
        let mut p = Prior {
            kind: PriorKind::Uniform,
            id: "uniform".into(),
            singular_at_one: false,
            transform: Transform::None,
            support_start: 0.0,
            support_end: 1.0,
            table: None,
            renormalization: 1.0,
            moments: Vec::new(),
        };
        p.moments = p.compute_moments();
        p
    }

    /// The step prior `w(r) = 2r/δ²` for `r ≤ δ`.
    pub fn step(delta: f64) -> Result<Prior> {
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(Error::domain(format!(
                "step prior width δ = {delta} outside (0, 1]"
            )));
        }
        let mut p = Prior {
            kind: PriorKind::Step(delta),
            id: format!("step:{delta}"),
            singular_at_one: false,
            transform: Transform::None,
            support_start: 0.0,
            support_end: delta,
            table: None,
            renormalization: 1.0,
            moments: Vec::new(),
        };
        p.moments = p.compute_moments();
        Ok(p)
    }

    /// A density interpolated from `(r, w)` samples (strictly increasing
    /// `r` in `[0, 1]`, `w ≥ 0`, at least 3 points), renormalized to unit
    /// mass. The applied renormalization factor is recorded in the prior
    /// and returned.
    pub fn tabulated(samples: &[(f64, f64)]) -> Result<Prior> {
        if samples.len() < 3 {
            return Err(Error::PriorTable(format!(
                "need at least 3 sample points, got {}",
                samples.len()
            )));
        }
        for (i, &(r, w)) in samples.iter().enumerate() {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::PriorTable(format!(
                    "sample {i}: r = {r} outside [0, 1]"
                )));
            }
            if w < 0.0 || !w.is_finite() {
                return Err(Error::PriorTable(format!(
                    "sample {i}: density {w} negative or not finite"
                )));
            }
        }
        let xs: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let ys: Vec<f64> = samples.iter().map(|s| s.1).collect();
        let table = MonotoneCubic::new(xs, ys).map_err(Error::PriorTable)?;
        let mut p = Prior {
            kind: PriorKind::Tabulated,
            id: "tabulated".into(),
            singular_at_one: false,
            transform: Transform::None,
            support_start: samples.first().unwrap().0,
            support_end: samples.last().unwrap().0,
            table: Some(table),
            renormalization: 1.0,
            moments: Vec::new(),
        };
        let mass = p.integrate(|_| 1.0)?;
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::PriorTable(format!("table mass {mass} not usable")));
        }
        p.renormalization = 1.0 / mass;
        p.moments = p.compute_moments();
        Ok(p)
    }

    /// Parses the two-column `r w` text format (`#` starts a comment).
    /// Errors carry 1-based line numbers.
    pub fn parse_table(text: &str) -> Result<Vec<(f64, f64)>> {
        let mut samples = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<f64> {
                tok.ok_or_else(|| {
                    Error::PriorTable(format!("line {}: expected two columns", lineno + 1))
                })?
                .parse::<f64>()
                .map_err(|e| Error::PriorTable(format!("line {}: {e}", lineno + 1)))
            };
            let r = parse(parts.next())?;
            let w = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::PriorTable(format!(
                    "line {}: more than two columns",
                    lineno + 1
                )));
            }
            samples.push((r, w));
        }
        if samples.is_empty() {
            return Err(Error::PriorTable("no data lines found".into()));
        }
        Ok(samples)
    }

    pub fn kind(&self) -> &PriorKind {
        &self.kind
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn singular_at_one(&self) -> bool {
        self.singular_at_one
    }

    pub fn transform(&self) -> Transform {
        self.transform
    }

    /// Lower end of the support (0 except for some tabulated priors).
    pub fn support_start(&self) -> f64 {
        self.support_start
    }

    /// Upper end of the support (1 except for step priors).
    pub fn support_end(&self) -> f64 {
        self.support_end
    }

    /// Renormalization factor applied to tabulated densities (1 otherwise).
    pub fn renormalization(&self) -> f64 {
        self.renormalization
    }

    /// The density `w(r)`.
    pub fn density(&self, r: f64) -> f64 {
        if !(0.0..=1.0).contains(&r) {
            return 0.0;
        }
        match self.kind {
            PriorKind::Bures => {
                if r >= 1.0 {
                    f64::INFINITY
                } else {
                    (4.0 / std::f64::consts::PI) * r * r / (1.0 - r * r).sqrt()
                }
            }
            PriorKind::Uniform => 1.0,
            PriorKind::Step(delta) => {
                if r <= delta {
                    2.0 * r / (delta * delta)
                } else {
                    0.0
                }
            }
            PriorKind::Tabulated => {
                let t = self.table.as_ref().unwrap();
                let (lo, hi) = t.domain();
                if r < lo || r > hi {
                    0.0
                } else {
                    self.renormalization * t.eval(r).max(0.0)
                }
            }
        }
    }

    /// Derivative `w'(r)` where the density is differentiable (used by the
    /// van Trees machinery).
    pub fn density_derivative(&self, r: f64) -> f64 {
        match self.kind {
            PriorKind::Bures => {
                let s = 1.0 - r * r;
                (4.0 / std::f64::consts::PI) * (2.0 * r / s.sqrt() + r.powi(3) / s.powf(1.5))
            }
            PriorKind::Uniform => 0.0,
            PriorKind::Step(delta) => {
                if r <= delta {
                    2.0 / (delta * delta)
                } else {
                    0.0
                }
            }
            PriorKind::Tabulated => {
                let t = self.table.as_ref().unwrap();
                self.renormalization * t.derivative(r)
            }
        }
    }

    /// Quadrature rule at a given node count on this prior's support.
    pub fn quadrature(&self, count: usize) -> Quadrature {
        match self.transform {
            Transform::None => {
                Quadrature::gauss_legendre(count, self.support_start, self.support_end)
            }
            Transform::SinSubstitution => Quadrature::sin_substitution(count),
        }
    }

    /// Fixed-level evaluation of `∫ w(r) f(r) dr`.
    pub fn integrate_fixed(&self, count: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
        match self.transform {
            Transform::None => {
                let q = self.quadrature(count);
                q.nodes
                    .iter()
                    .zip(&q.weights)
                    .map(|(&r, &w)| w * self.density(r) * f(r))
                    .sum()
            }
            Transform::SinSubstitution => {
                // Work in t: ∫ w(sin t) f(sin t) cos t dt with the smooth
                // combined weight.
                let rule = GaussLegendre::cached(count);
                rule.integrate(0.0, std::f64::consts::FRAC_PI_2, |t| {
                    let (sin_t, cos_t) = t.sin_cos();
                    let weight = match self.kind {
                        PriorKind::Bures => (4.0 / std::f64::consts::PI) * sin_t * sin_t,
                        _ => self.density(sin_t) * cos_t,
                    };
                    weight * f(sin_t)
                })
            }
        }
    }

    /// Adaptive `∫₀¹ w(r) f(r) dr`: node doubling until two successive
    /// levels agree to `1e-10` relative or `1e-13` absolute.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> Result<f64> {
        let mut count = BASE_NODES;
        let mut prev = self.integrate_fixed(count, &mut f);
        loop {
            count *= 2;
            let cur = self.integrate_fixed(count, &mut f);
            if (cur - prev).abs() <= REL_TOL * cur.abs().max(prev.abs()) + ABS_TOL {
                return Ok(cur);
            }
            if count >= MAX_NODES {
                return Err(Error::QuadratureNonConvergence {
                    last: cur,
                    previous: prev,
                });
            }
            prev = cur;
        }
    }

    /// Nodes `(r_i, ω_i)` with the density folded into the weights, so that
    /// `∫ w f ≈ Σ ω_i f(r_i)`. Used by fixed-grid oracles.
    pub fn weighted_nodes(&self, count: usize) -> Vec<(f64, f64)> {
        match self.transform {
            Transform::None => {
                let q = self.quadrature(count);
                q.nodes
                    .iter()
                    .zip(&q.weights)
                    .map(|(&r, &w)| (r, w * self.density(r)))
                    .collect()
            }
            Transform::SinSubstitution => {
                let rule = GaussLegendre::cached(count);
                rule.mapped(0.0, std::f64::consts::FRAC_PI_2)
                    .into_iter()
                    .map(|(t, w)| {
                        let (sin_t, _) = t.sin_cos();
                        let weight = match self.kind {
                            PriorKind::Bures => (4.0 / std::f64::consts::PI) * sin_t * sin_t,
                            _ => unreachable!("only Bures uses the sin substitution"),
                        };
                        (sin_t, w * weight)
                    })
                    .collect()
            }
        }
    }

    fn compute_moments(&self) -> Vec<f64> {
        (1..=MOMENT_CACHE)
            .map(|q| {
                self.integrate(|r| r.powi(q as i32))
                    .expect("moment integrand is smooth after the transform")
            })
            .collect()
    }

    /// `⟨r^q⟩` for `q ≥ 1` (cached up to q = 8).
    pub fn moment(&self, q: usize) -> f64 {
        assert!(q >= 1);
        if q <= self.moments.len() {
            self.moments[q - 1]
        } else {
            self.integrate(|r| r.powi(q as i32))
                .expect("moment integrand is smooth after the transform")
        }
    }

    /// Mean purity `⟨r⟩`.
    pub fn mean_r(&self) -> f64 {
        self.moments[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quadrature_polynomial_exactness_invariant() {
        let q = Quadrature::gauss_legendre(16, 0.0, 1.0);
        assert_eq!(q.transform, Transform::None);
        for k in 0..32 {
            let got = q.apply(|x| x.powi(k));
            let exact = 1.0 / (k as f64 + 1.0);
            assert!((got - exact).abs() < 1e-13, "k={k}");
        }
    }

    #[test]
    fn all_priors_are_normalized() {
        let priors = [
            Prior::bures(),
            Prior::uniform(),
            Prior::step(0.3).unwrap(),
            Prior::step(1.0).unwrap(),
        ];
        for p in &priors {
            let mass = p.integrate(|_| 1.0).unwrap();
            assert!((mass - 1.0).abs() < 1e-10, "{}: {mass}", p.id());
        }
    }

    #[test]
    fn bures_moments_match_wallis_integrals() {
        let p = Prior::bures();
        let pi = std::f64::consts::PI;
        let expected = [8.0 / (3.0 * pi), 0.75, 32.0 / (15.0 * pi), 0.625];
        for (q, want) in expected.iter().enumerate() {
            assert_abs_diff_eq!(p.moment(q + 1), *want, epsilon = 1e-9);
        }
        assert!(p.singular_at_one());
        assert_eq!(p.transform(), Transform::SinSubstitution);
    }

    #[test]
    fn bures_smooth_integrand_example() {
        // ∫ w √(1-r²) = (4/π) ∫ r² dr = 4/(3π).
        let p = Prior::bures();
        let got = p.integrate(|r| (1.0 - r * r).sqrt()).unwrap();
        assert_abs_diff_eq!(got, 4.0 / (3.0 * std::f64::consts::PI), epsilon = 1e-10);
    }

    #[test]
    fn step_prior_moments_and_validation() {
        assert!(Prior::step(0.0).is_err());
        assert!(Prior::step(1.2).is_err());
        assert_abs_diff_eq!(Prior::step(1.0).unwrap().mean_r(), 2.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            Prior::step(0.1).unwrap().mean_r(),
            2.0 * 0.1 / 3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn uniform_examples() {
        let p = Prior::uniform();
        assert_abs_diff_eq!(p.integrate(|r| r * r).unwrap(), 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.mean_r(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn integrate_is_linear() {
        let p = Prior::bures();
        let f = |r: f64| (3.0 * r).cos();
        let g = |r: f64| r.exp();
        let (a, b) = (2.5, -1.25);
        let lhs = p.integrate(|r| a * f(r) + b * g(r)).unwrap();
        let rhs = a * p.integrate(f).unwrap() + b * p.integrate(g).unwrap();
        assert!((lhs - rhs).abs() <= 1e-12 * (a.abs() + b.abs()));
    }

    #[test]
    fn tabulated_prior_from_samples() {
        // Constant table -> uniform.
        let flat: Vec<(f64, f64)> = (0..21).map(|i| (i as f64 / 20.0, 1.0)).collect();
        let p = Prior::tabulated(&flat).unwrap();
        assert_abs_diff_eq!(p.mean_r(), 0.5, epsilon = 1e-6);
        assert_abs_diff_eq!(p.renormalization(), 1.0, epsilon = 1e-9);

        // Bures sampled on Chebyshev-like nodes reproduces ⟨r⟩ to 1e-4.
        let bures = Prior::bures();
        let nodes: Vec<(f64, f64)> = (0..200)
            .map(|i| {
                // Cluster toward r = 1 to resolve the steep density.
                let t = (i as f64 + 0.5) / 200.0 * std::f64::consts::FRAC_PI_2;
                let r = t.sin() * 0.9995;
                (r, bures.density(r))
            })
            .collect();
        let mut sorted = nodes;
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let p = Prior::tabulated(&sorted).unwrap();
        assert!(
            (p.mean_r() - 8.0 / (3.0 * std::f64::consts::PI)).abs() < 1e-4,
            "{}",
            p.mean_r()
        );

        // Too few nodes for the cubic.
        assert!(matches!(
            Prior::tabulated(&[(0.0, 1.0), (1.0, 1.0)]),
            Err(Error::PriorTable(_))
        ));
        // Non-monotone grid.
        assert!(Prior::tabulated(&[(0.0, 1.0), (0.5, 1.0), (0.5, 1.0), (1.0, 1.0)]).is_err());
        // Negative density.
        assert!(Prior::tabulated(&[(0.0, 1.0), (0.5, -0.1), (1.0, 1.0)]).is_err());
    }

    #[test]
    fn table_text_format() {
        let text = "# purity density\n0.0 0.5\n0.5 1.0 # midpoint\n\n1.0 1.5\n";
        let samples = Prior::parse_table(text).unwrap();
        assert_eq!(samples, vec![(0.0, 0.5), (0.5, 1.0), (1.0, 1.5)]);

        let err = Prior::parse_table("0.0 1.0\nbroken\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = Prior::parse_table("0.1 1.0 7.0\n").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
    }
}
