//! Block weight coefficients of `ρ^⊗N`.
//!
//! For a state of purity `r` the `(j, m)` weight inside one irreducible
//! block (in the eigenbasis along the state direction) is
//!
//! ```text
//! ρ_{jm}(r) = ((1-r²)/4)^(J-j) ((1-r)/2)^(j-m) ((1+r)/2)^(j+m),   J = N/2,
//! ```
//!
//! normalized so `Σ_j n_j Σ_m ρ_{jm} = 1`. For equatorial states the block
//! matrix in the `|jm⟩` basis at phase zero is
//! `ρ^j_{mm'} = Σ_{m''} d_{mm''} d_{m'm''} ((1-r)/2)^(J-m'') ((1+r)/2)^(J+m'')`.
//!
//! Exponents grow with `N`, so weights beyond `N = 60` are evaluated in log
//! space.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::half::HalfInteger;

use super::wigner::wigner_d_half_pi;

const LOG_SPACE_THRESHOLD: u32 = 60;

fn validate_jm(n: u32, j: HalfInteger, m: HalfInteger) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("N must be >= 1"));
    }
    if j.is_negative() || j.twice() > n as i32 || (n as i32 - j.twice()) % 2 != 0 {
        return Err(Error::domain(format!(
            "j = {j} is not a block of N = {n} copies"
        )));
    }
    if !j.admits_magnetic(m) {
        return Err(Error::domain(format!("m = {m} invalid for j = {j}")));
    }
    Ok(())
}

fn validate_r(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!("purity r = {r} outside [0, 1]")));
    }
    Ok(())
}

/// Checks that `j` labels an irreducible block of `N` qubit copies.
pub fn validate_block(n: u32, j: HalfInteger) -> Result<()> {
    validate_jm(n, j, j)
}

/// `base^exp` with `0^0 = 1`, stable in log space when requested.
fn pow_log(base: f64, exp: f64, log_space: bool) -> f64 {
    if exp == 0.0 {
        1.0
    } else if base == 0.0 {
        0.0
    } else if log_space {
        (exp * base.ln()).exp()
    } else {
        base.powf(exp)
    }
}

/// The weight `ρ_{jm}(r)`.
pub fn block_weight(n: u32, j: HalfInteger, m: HalfInteger, r: f64) -> Result<f64> {
    validate_jm(n, j, m)?;
    validate_r(r)?;
    let log_space = n > LOG_SPACE_THRESHOLD;
    let e_det = (n as f64 - j.twice() as f64) / 2.0; // J - j
    let e_lo = (j - m).twice() as f64 / 2.0; // j - m
    let e_hi = (j + m).twice() as f64 / 2.0; // j + m
    Ok(pow_log((1.0 - r * r) / 4.0, e_det, log_space)
        * pow_log((1.0 - r) / 2.0, e_lo, log_space)
        * pow_log((1.0 + r) / 2.0, e_hi, log_space))
}

/// `Σ_m ρ_{jm}(r)`, the trace of the block `ρ_{Nj}`.
///
/// All terms are nonnegative, so the direct sum is unconditionally stable;
/// for `r·d_j` large the geometric closed form
/// `[a^(J-j) b^(J+j+1) - b^(J-j) a^(J+j+1)]/r` (with `a = (1-r)/2`,
/// `b = (1+r)/2`) is used instead.
pub fn m_sum(n: u32, j: HalfInteger, r: f64) -> Result<f64> {
    validate_jm(n, j, j)?;
    validate_r(r)?;
    let log_space = n > LOG_SPACE_THRESHOLD;
    let a = (1.0 - r) / 2.0;
    let b = (1.0 + r) / 2.0;
    let jf = j.as_f64();
    let big_j = n as f64 / 2.0;
    let d_j = j.dimension() as f64;
    if r * d_j > 2.0 {
        // Geometric closed form; the subtracted term is at most e^{-4} of
        // the first, so no significant cancellation occurs here.
        let hi = pow_log(a, big_j - jf, log_space) * pow_log(b, big_j + jf + 1.0, log_space);
        let lo = pow_log(b, big_j - jf, log_space) * pow_log(a, big_j + jf + 1.0, log_space);
        Ok((hi - lo) / r)
    } else {
        let mut acc = 0.0;
        for m in j.magnetic_range() {
            acc += block_weight(n, j, m, r)?;
        }
        Ok(acc)
    }
}

/// `Σ_m m · ρ_{jm}(r)`, evaluated by pairing `±m` so the result is a sum of
/// nonnegative terms: `Σ_{m>0} m ρ_{jm} (1 - q^{2m})` with
/// `q = (1-r)/(1+r)`.
pub fn weighted_m_sum(n: u32, j: HalfInteger, r: f64) -> Result<f64> {
    validate_jm(n, j, j)?;
    validate_r(r)?;
    if j.twice() == 0 {
        return Ok(0.0);
    }
    // 1 - q^{2m} = -expm1(2m ln q); ln q = ln1p(-r) - ln1p(r).
    let ln_q = (-r).ln_1p() - r.ln_1p(); // -inf at r = 1
    let mut acc = 0.0;
    for m in j.magnetic_range() {
        if m.twice() <= 0 {
            continue;
        }
        let mf = m.as_f64();
        let one_minus_q2m = if ln_q == f64::NEG_INFINITY {
            1.0
        } else {
            -(2.0 * mf * ln_q).exp_m1()
        };
        acc += mf * block_weight(n, j, m, r)? * one_minus_q2m;
    }
    Ok(acc)
}

/// The equatorial block matrix `ρ^j_{mm'}(r)` (phase set to zero), with the
/// `((1-r²)/4)^(J-j)` prefactor folded in. Symmetric with nonnegative
/// superdiagonal for all `r ∈ [0, 1]`.
pub fn block_matrix_2d(n: u32, j: HalfInteger, r: f64) -> Result<DMatrix<f64>> {
    validate_jm(n, j, j)?;
    validate_r(r)?;
    let log_space = n > LOG_SPACE_THRESHOLD;
    let d = wigner_d_half_pi(j)?;
    let dim = j.dimension();
    let big_j = n as f64 / 2.0;
    let a = (1.0 - r) / 2.0;
    let b = (1.0 + r) / 2.0;
    // Weights ((1-r)/2)^(J-m'') ((1+r)/2)^(J+m'') for m'' = -j..j.
    let weights: Vec<f64> = j
        .magnetic_range()
        .map(|mpp| {
            let mf = mpp.as_f64();
            pow_log(a, big_j - mf, log_space) * pow_log(b, big_j + mf, log_space)
        })
        .collect();
    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for row in 0..dim {
        for col in row..dim {
            let mut acc = 0.0;
            for (k, &w) in weights.iter().enumerate() {
                acc += d.get_idx(row, k) * d.get_idx(col, k) * w;
            }
            mat[(row, col)] = acc;
            mat[(col, row)] = acc;
        }
    }
    Ok(mat)
}
