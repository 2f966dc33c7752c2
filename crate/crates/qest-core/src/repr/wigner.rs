//! Reduced Wigner matrices `d^{(j)}(π/2)` and the overlap coefficients
//! `c^j_m` built from them.
//!
//! Convention: `d^{(j)}_{mm'}(β) = ⟨jm| exp(-iβ J_y) |jm'⟩` (Edmonds). The
//! matrix is evaluated by exact exponentiation of `J_y` through the
//! eigendecomposition of a real symmetric tridiagonal matrix, which stays
//! accurate to machine precision for all `j` (the textbook factorial sum
//! loses up to ten digits to cancellation already around `j ≈ 20`; it is
//! kept as a test oracle only).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::half::HalfInteger;

/// `d^{(j)}(π/2)` with rows and columns indexed by `m = -j..j`.
#[derive(Clone, Debug)]
pub struct WignerHalfPi {
    two_j: i32,
    mat: DMatrix<f64>,
}

impl WignerHalfPi {
    pub fn j(&self) -> HalfInteger {
        HalfInteger::from_twice(self.two_j)
    }

    pub fn dimension(&self) -> usize {
        self.mat.nrows()
    }

    /// Matrix element `d_{m m'}`.
    pub fn get(&self, m: HalfInteger, mp: HalfInteger) -> f64 {
        let j = self.j();
        assert!(j.admits_magnetic(m) && j.admits_magnetic(mp));
        self.mat[(j.magnetic_index(m), j.magnetic_index(mp))]
    }

    /// Element by zero-based indices (`0` is `m = -j`).
    pub fn get_idx(&self, a: usize, b: usize) -> f64 {
        self.mat[(a, b)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }
}

/// Returns `d^{(j)}(π/2)`, cached and shared across threads.
pub fn wigner_d_half_pi(j: HalfInteger) -> Result<Arc<WignerHalfPi>> {
    if j.is_negative() {
        return Err(Error::domain("total spin j must be >= 0"));
    }
    static CACHE: OnceLock<RwLock<HashMap<i32, Arc<WignerHalfPi>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().unwrap().get(&j.twice()) {
        return Ok(Arc::clone(d));
    }
    let built = Arc::new(build_half_pi(j));
    Ok(cache
        .write()
        .unwrap()
        .entry(j.twice())
        .or_insert_with(|| Arc::clone(&built))
        .clone())
}

fn build_half_pi(j: HalfInteger) -> WignerHalfPi {
    let dim = j.dimension();
    let jf = j.as_f64();
    if dim == 1 {
        return WignerHalfPi {
            two_j: j.twice(),
            mat: DMatrix::from_element(1, 1, 1.0),
        };
    }

    // J_y is similar (by the diagonal phase i^k) to the real symmetric
    // tridiagonal T with off-diagonal entries -λ_m/2,
    // λ_m = sqrt(j(j+1) - m(m+1)). Then
    //   d(β) = D · Q exp(-iβΛ) Qᵀ · D†,  T = QΛQᵀ,  D = diag(i^k).
    let mut t = DMatrix::<f64>::zeros(dim, dim);
    for k in 0..dim - 1 {
        let m = -jf + k as f64;
        let lambda = (jf * (jf + 1.0) - m * (m + 1.0)).sqrt();
        t[(k + 1, k)] = -0.5 * lambda;
        t[(k, k + 1)] = -0.5 * lambda;
    }
    let eig = t.symmetric_eigen();
    let q = &eig.eigenvectors;
    let beta = std::f64::consts::FRAC_PI_2;
    // Phase factors e^{-iβ m_k} split into real/imaginary parts.
    let cos_b: Vec<f64> = eig.eigenvalues.iter().map(|&m| (beta * m).cos()).collect();
    let sin_b: Vec<f64> = eig.eigenvalues.iter().map(|&m| (beta * m).sin()).collect();

    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            let mut re = 0.0;
            let mut im = 0.0;
            for k in 0..dim {
                let qq = q[(a, k)] * q[(b, k)];
                re += qq * cos_b[k];
                im -= qq * sin_b[k];
            }
            // Multiply by i^(a-b).
            let val = match (a as i32 - b as i32).rem_euclid(4) {
                0 => re,
                1 => -im,
                2 => -re,
                _ => im,
            };
            mat[(a, b)] = val;
            // The dropped component must vanish for a real rotation matrix.
            debug_assert!(
                (match (a as i32 - b as i32).rem_euclid(4) {
                    0 => im,
                    1 => re,
                    2 => im,
                    _ => re,
                })
                .abs()
                    < 1e-9 * (1.0 + val.abs())
            );
        }
    }
    WignerHalfPi {
        two_j: j.twice(),
        mat,
    }
}

/// Overlap coefficients `c^j_m = Σ_{m'} d_{m' m} d_{m'+1, m}` (sum over
/// `m' = -j .. j-1`), antisymmetric in `m`.
#[derive(Clone, Debug)]
pub struct CCoefficients {
    two_j: i32,
    values: Vec<f64>,
}

impl CCoefficients {
    pub fn j(&self) -> HalfInteger {
        HalfInteger::from_twice(self.two_j)
    }

    pub fn get(&self, m: HalfInteger) -> f64 {
        let j = self.j();
        assert!(j.admits_magnetic(m));
        self.values[j.magnetic_index(m)]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Computes all `c^j_m` for `m = -j..j`.
pub fn c_coefficients(j: HalfInteger) -> Result<CCoefficients> {
    let d = wigner_d_half_pi(j)?;
    let dim = j.dimension();
    let mut values = vec![0.0; dim];
    for b in 0..dim {
        let mut acc = 0.0;
        for a in 0..dim.saturating_sub(1) {
            acc += d.get_idx(a, b) * d.get_idx(a + 1, b);
        }
        values[b] = acc;
    }
    Ok(CCoefficients {
        two_j: j.twice(),
        values,
    })
}

/// First-order approximation `c^j_m ≈ (1/2)(1 - 1/(2j)) + m/(2j)`, accurate
/// to `O(1/j²)` near `m = j`.
pub fn c_linear_approx(j: HalfInteger, m: HalfInteger) -> f64 {
    let jf = j.as_f64();
    assert!(jf > 0.0, "linear approximation needs j > 0");
    0.5 * (1.0 - 1.0 / (2.0 * jf)) + m.as_f64() / (2.0 * jf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Independent oracle: the textbook factorial sum for d^{(j)}_{mm'}(π/2)
    /// with the index range restricted so all factorial arguments stay
    /// nonnegative. Adequate for small j only.
    fn wigner_sum_formula(two_j: i32, two_m: i32, two_mp: i32) -> f64 {
        let fact = |k: i32| -> f64 { (1..=k).map(|i| i as f64).product() };
        let jm = (two_j + two_m) / 2;
        let jmm = (two_j - two_m) / 2;
        let jmp = (two_j + two_mp) / 2;
        let jmpp = (two_j - two_mp) / 2;
        let pref = (fact(jm) * fact(jmm) * fact(jmp) * fact(jmpp)).sqrt();
        let half = std::f64::consts::FRAC_1_SQRT_2;
        let mut acc = 0.0;
        for i in 0..=two_j {
            let a = jmm - i; // j - m - i
            let b = jmp - i; // j + m' - i
            let c = i + (two_m - two_mp) / 2; // i + m - m'
            if a < 0 || b < 0 || c < 0 {
                continue;
            }
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            // cos(π/4)^(2j + m' - m - 2i) · (-sin(π/4))^(m - m' + 2i)
            let cos_exp = two_j + (two_mp - two_m) / 2 - 2 * i;
            let sin_exp = (two_m - two_mp) / 2 + 2 * i;
            let term = sign * half.powi(cos_exp) * (-half).powi(sin_exp)
                / (fact(a) * fact(b) * fact(c) * fact(i));
            acc += term;
        }
        pref * acc
    }

    #[test]
    fn spin_half_and_spin_one_closed_values() {
        let d = wigner_d_half_pi(HalfInteger::from_twice(1)).unwrap();
        let h = HalfInteger::from_twice(1);
        assert_abs_diff_eq!(
            d.get(h, h).abs(),
            std::f64::consts::FRAC_PI_4.cos(),
            epsilon = 1e-14
        );
        let d1 = wigner_d_half_pi(HalfInteger::from_int(1)).unwrap();
        let z = HalfInteger::ZERO;
        assert_abs_diff_eq!(d1.get(z, z), 0.0, epsilon = 1e-14);
        // Edmonds signs at j = 1/2.
        assert_abs_diff_eq!(d.get(h, -h), -std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_abs_diff_eq!(d.get(-h, h), std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-14);
    }

    #[test]
    fn matches_factorial_sum_oracle_for_small_j() {
        for two_j in 0..=13 {
            let j = HalfInteger::from_twice(two_j);
            let d = wigner_d_half_pi(j).unwrap();
            for m in j.magnetic_range() {
                for mp in j.magnetic_range() {
                    let oracle = wigner_sum_formula(two_j, m.twice(), mp.twice());
                    assert_abs_diff_eq!(d.get(m, mp), oracle, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_symmetry_up_to_j_15() {
        for two_j in 0..=30 {
            let j = HalfInteger::from_twice(two_j);
            let d = wigner_d_half_pi(j).unwrap();
            let dim = j.dimension();
            // d dᵀ = 1
            let prod = d.matrix() * d.matrix().transpose();
            for a in 0..dim {
                for b in 0..dim {
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (prod[(a, b)] - expect).abs() < 1e-12,
                        "j={two_j}/2 ({a},{b}): {}",
                        prod[(a, b)]
                    );
                }
            }
            // d_{mm'} = d_{-m',-m}
            for m in j.magnetic_range() {
                for mp in j.magnetic_range() {
                    assert!(
                        (d.get(m, mp) - d.get(-mp, -m)).abs() < 1e-13,
                        "symmetry at j={two_j}/2"
                    );
                }
            }
        }
    }

    #[test]
    fn c_antisymmetry_and_small_values() {
        let c1 = c_coefficients(HalfInteger::from_int(1)).unwrap();
        assert_abs_diff_eq!(c1.get(HalfInteger::ZERO), 0.0, epsilon = 1e-14);
        let ch = c_coefficients(HalfInteger::from_twice(1)).unwrap();
        assert_abs_diff_eq!(ch.get(HalfInteger::from_twice(1)).abs(), 0.5, epsilon = 1e-14);
        for two_j in 1..=20 {
            let j = HalfInteger::from_twice(two_j);
            let c = c_coefficients(j).unwrap();
            for m in j.magnetic_range() {
                assert!(
                    (c.get(m) + c.get(-m)).abs() < 1e-12,
                    "antisymmetry at j={two_j}/2"
                );
            }
        }
    }

    #[test]
    fn c_top_coefficient_approaches_asymptotic_form() {
        let j = HalfInteger::from_int(30);
        let c = c_coefficients(j).unwrap();
        let asym = 1.0 - 1.0 / 120.0;
        assert!((c.get(j) - asym).abs() < 2e-2);
    }

    #[test]
    fn linear_approximation_examples_and_convergence() {
        let j20 = HalfInteger::from_int(20);
        assert_abs_diff_eq!(c_linear_approx(j20, j20), 0.9875, epsilon = 1e-12);
        assert_abs_diff_eq!(
            c_linear_approx(j20, HalfInteger::from_int(19)),
            0.9625,
            epsilon = 1e-12
        );

        let mut gaps = Vec::new();
        for jj in [10, 20, 40] {
            let j = HalfInteger::from_int(jj);
            let exact = c_coefficients(j).unwrap().get(j);
            gaps.push((c_linear_approx(j, j) - exact).abs());
        }
        assert!(gaps[2] <= 5e-4, "j=40 gap {}", gaps[2]);
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "gaps {gaps:?}");
    }
}
