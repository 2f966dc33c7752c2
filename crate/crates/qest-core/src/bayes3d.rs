//! Exact finite-`N` Bayesian fidelity for states anywhere in the Bloch
//! ball.
//!
//! The optimal measurement first projects onto the irreducible blocks of
//! `ρ^⊗N` (that outcome alone carries the purity information) and then runs
//! the covariant direction POVM with seed `d_j |jj⟩⟨jj|` inside the block.
//! Its fidelity is `F = (1 + Δ)/2` with
//!
//! ```text
//! Δ = Σ_j n_j √((v⁰_j)² + (vᶻ_j)²),
//! v⁰_j = ∫ dr w(r) √(1-r²) Σ_m ρ_{jm}(r),
//! vᶻ_j = ∫ dr w(r) (r/(j+1)) Σ_m m ρ_{jm}(r),
//! ```
//!
//! and the optimal purity guess per block is `R_j = |vᶻ_j| / √(v⁰² + vᶻ²)`.
//! The structure is the same for every isotropic prior; the prior only
//! enters through the radial integrals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::half::HalfInteger;
use crate::numeric::special::lngamma;
use crate::par;
use crate::priors::Prior;
use crate::repr;

/// Per-block slice of a 3D fidelity report.
#[derive(Clone, Debug, Serialize)]
pub struct Block3D {
    pub two_j: i32,
    pub multiplicity: f64,
    pub v0: f64,
    pub vz: f64,
    /// `n_j √(v0² + vz²)`.
    pub contribution: f64,
    /// Purity guess `R_j` announced on outcome `j`.
    pub purity_estimate: f64,
}

/// Exact optimal fidelity at `N` copies, with per-block breakdown.
#[derive(Clone, Debug, Serialize)]
pub struct FidelityReport3D {
    pub n: u32,
    pub prior_id: String,
    pub blocks: Vec<Block3D>,
    pub delta: f64,
    pub fidelity: f64,
}

/// The radial coefficients `(v⁰_j, vᶻ_j)` of one block.
pub fn v0_vz(n: u32, j: HalfInteger, prior: &Prior) -> Result<(f64, f64)> {
    repr::validate_block(n, j)?;
    let v0 = prior.integrate(|r| {
        (1.0 - r * r).max(0.0).sqrt() * repr::m_sum(n, j, r).expect("validated block")
    })?;
    let vz = if j.twice() == 0 {
        0.0
    } else {
        let j_plus_1 = j.as_f64() + 1.0;
        prior.integrate(|r| {
            r / j_plus_1 * repr::weighted_m_sum(n, j, r).expect("validated block")
        })?
    };
    Ok((v0, vz))
}

/// Full optimal-POVM fidelity report for `N` copies under `prior`.
pub fn fidelity_3d(n: u32, prior: &Prior) -> Result<FidelityReport3D> {
    let blocks = repr::multiplicities(n)?;
    let rows: Vec<Result<Block3D>> = par::indexed_map(blocks.len(), |i| {
        let b = &blocks[i];
        let (v0, vz) = v0_vz(n, b.j, prior)?;
        let amplitude = v0.hypot(vz);
        let n_j = b.multiplicity_f64();
        Ok(Block3D {
            two_j: b.j.twice(),
            multiplicity: n_j,
            v0,
            vz,
            contribution: n_j * amplitude,
            purity_estimate: if amplitude > 0.0 {
                vz.abs() / amplitude
            } else {
                0.0
            },
        })
    });
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        out.push(row?);
    }
    let delta: f64 = out.iter().map(|b| b.contribution).sum();
    Ok(FidelityReport3D {
        n,
        prior_id: prior.id().to_string(),
        blocks: out,
        delta,
        fidelity: 0.5 * (1.0 + delta),
    })
}

/// Closed-form optimal fidelity for the Bures prior at even `N = 2n`:
///
/// ```text
/// Δ = (4/π) Σ_{j=0}^{n} 2(2j+1)² / ((2n+3)(2n+2)(2n+1))
///     · √(1 + [ j/(n+j+1) · Γ(n-j+½)Γ(n+j+3/2) / (Γ(n-j+1)Γ(n+j+1)) ]²)
/// ```
///
/// evaluated in log-gamma space. Odd `N` is rejected; use
/// [`fidelity_3d`] with [`Prior::bures`] instead.
pub fn bures_closed_form(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("N must be >= 1"));
    }
    if n % 2 != 0 {
        return Err(Error::domain(
            "the Bures closed form assumes an even number of copies; use fidelity_3d for odd N",
        ));
    }
    let half_n = (n / 2) as f64;
    let mut delta = 0.0;
    for j in 0..=(n / 2) {
        let jf = j as f64;
        let coeff = 2.0 * (2.0 * jf + 1.0).powi(2)
            / ((2.0 * half_n + 3.0) * (2.0 * half_n + 2.0) * (2.0 * half_n + 1.0));
        let bracket = if j == 0 {
            0.0
        } else {
            jf / (half_n + jf + 1.0)
                * (lngamma(half_n - jf + 0.5) + lngamma(half_n + jf + 1.5)
                    - lngamma(half_n - jf + 1.0)
                    - lngamma(half_n + jf + 1.0))
                .exp()
        };
        delta += coeff * (1.0 + bracket * bracket).sqrt();
    }
    delta *= 4.0 / std::f64::consts::PI;
    Ok(0.5 * (1.0 + delta))
}

/// Asymptotic law `F = 1 - (3 + 2⟨r⟩)/(4N)`.
pub fn asymptotic_f3d(n: u32, prior: &Prior) -> f64 {
    1.0 - (3.0 + 2.0 * prior.mean_r()) / (4.0 * n as f64)
}

/// Density of the optimal-POVM outcome `(j, μ)` given a state of purity
/// `r` at angle `γ` from the outcome direction (`cos γ = n·μ`):
///
/// ```text
/// d_j ((1-r²)/4)^(J-j) ((1 + r cos γ)/2)^(2j)
/// ```
///
/// with respect to the normalized invariant measure `dμ`; the total law is
/// `Σ_j n_j ∫ dμ (...) = 1`.
pub fn conditional_outcome_density(n: u32, j: HalfInteger, r: f64, cos_gamma: f64) -> Result<f64> {
    repr::validate_block(n, j)?;
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!("purity r = {r} outside [0, 1]")));
    }
    if !(-1.0..=1.0).contains(&cos_gamma) {
        return Err(Error::domain(format!("cos γ = {cos_gamma} outside [-1, 1]")));
    }
    let d_j = j.dimension() as f64;
    let e_det = (n as f64 - j.twice() as f64) / 2.0;
    let e_dir = j.twice() as f64;
    let det = (1.0 - r * r) / 4.0;
    let dir = (1.0 + r * cos_gamma) / 2.0;
    let log_space = n > 60;
    let pow = |base: f64, exp: f64| -> f64 {
        if exp == 0.0 {
            1.0
        } else if base == 0.0 {
            0.0
        } else if log_space {
            (exp * base.ln()).exp()
        } else {
            base.powf(exp)
        }
    };
    Ok(d_j * pow(det, e_det) * pow(dir, e_dir))
}
