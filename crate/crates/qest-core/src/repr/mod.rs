//! SU(2) representation kernel for `ρ^⊗N`.
//!
//! `N` qubits decompose into irreducible blocks of total spin
//! `j = N/2, N/2-1, ..., 0 or 1/2`, each of dimension `d_j = 2j + 1` and
//! occurring with multiplicity
//!
//! ```text
//! n_j = C(N, N/2 - j) · (2j + 1) / (N/2 + j + 1),
//! ```
//!
//! an exact integer with `Σ_j n_j d_j = 2^N`. Everything downstream (block
//! weights, fidelity coefficients, outcome laws) is built on this list.

mod blocks;
mod wigner;

pub use blocks::{block_matrix_2d, block_weight, m_sum, validate_block, weighted_m_sum};
pub use wigner::{c_coefficients, c_linear_approx, wigner_d_half_pi, CCoefficients, WignerHalfPi};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::half::HalfInteger;

/// One irreducible block of the `N`-qubit decomposition.
#[derive(Clone, Debug)]
pub struct IrrepBlock {
    /// Total spin of the block.
    pub j: HalfInteger,
    /// Exact multiplicity `n_j`.
    pub multiplicity: BigUint,
    /// Dimension `d_j = 2j + 1`.
    pub dimension: usize,
}

impl IrrepBlock {
    /// `n_j` as a float (exact for `N` up to ~1000).
    pub fn multiplicity_f64(&self) -> f64 {
        self.multiplicity.to_f64().unwrap_or(f64::INFINITY)
    }

    /// `ln n_j`, stable for large `N`.
    pub fn ln_multiplicity(&self) -> f64 {
        let f = self.multiplicity_f64();
        if f.is_finite() {
            f.ln()
        } else {
            // Fall back to a digit-count based estimate.
            let digits = self.multiplicity.to_str_radix(10);
            let lead: f64 = digits[..15.min(digits.len())].parse().unwrap();
            lead.ln() + (digits.len().saturating_sub(15)) as f64 * std::f64::consts::LN_10
        }
    }
}

/// Lists the irreducible blocks of `ρ^⊗N`, `j` descending from `N/2`.
///
/// Rejects `N = 0`; the sum rule `Σ_j n_j d_j = 2^N` holds exactly.
pub fn multiplicities(n: u32) -> Result<Vec<IrrepBlock>> {
    if n == 0 {
        return Err(Error::domain("number of copies N must be >= 1"));
    }
    let two_big_j = n as i32;
    let mut blocks = Vec::new();
    let mut two_j = two_big_j;
    while two_j >= 0 {
        let j = HalfInteger::from_twice(two_j);
        let k = ((two_big_j - two_j) / 2) as u64; // N/2 - j
        let num = binomial_exact(n as u64, k) * BigUint::from((two_j + 1) as u64) * 2u32;
        let den = BigUint::from((two_big_j + two_j + 2) as u64); // 2(N/2 + j + 1)
        debug_assert!((&num % &den).is_zero(), "multiplicity not integral");
        let multiplicity = num / den;
        blocks.push(IrrepBlock {
            j,
            multiplicity,
            dimension: j.dimension(),
        });
        two_j -= 2;
    }
    Ok(blocks)
}

/// Exact binomial coefficient.
fn binomial_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
