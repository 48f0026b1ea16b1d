//! Executable forms of the axioms that single out the signed Rényi family,
//! plus the two rejected mean-kernel candidates.
//!
//! The characterization runs through a weighted quasi-arithmetic mean: for
//! a direct sum `P ∪ Q` the entropy must equal
//! `g⁻¹[(w(P)·g(H(P)) + w(Q)·g(H(Q))) / w(P ∪ Q)]` for some strictly
//! monotone continuous kernel `g`. Only two kernel shapes are compatible
//! with the other axioms, linear and exponential, and of those the linear
//! one always breaks extensivity while the exponential one breaks it unless
//! its offset `e/d` vanishes. [`counterexample_report`] replays both
//! failures on the fixed pair `P = (1/2, 1/2)`, `Q = (2, -1)`.

use serde::Serialize;

use crate::entropy::{signed_renyi, signed_shannon, ALPHA_GUARD};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;

/// Gap beyond which an extensivity defect counts as a violation.
const EXTENSIVITY_GAP_TOL: f64 = 1e-9;

/// The exponential mean kernel `g(x) = 2^{(1-α)x}` and its inverse.
///
/// Lower-order constants are fixed to `d = 1`, `e = 0`: the offset is
/// forced to zero by extensivity and the slope cancels inside the weighted
/// mean, so nothing is lost. `g` is strictly decreasing for α > 1 and
/// strictly increasing for α < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanValueKernel {
    alpha: f64,
}

impl MeanValueKernel {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || (alpha - 1.0).abs() <= ALPHA_GUARD {
            return Err(Error::BadAlpha {
                alpha,
                reason: "mean kernel needs a valid order (positive, not 1)",
            });
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn g(&self, x: f64) -> f64 {
        ((1.0 - self.alpha) * x).exp2()
    }

    pub fn g_inv(&self, y: f64) -> Result<f64> {
        if y <= 0.0 {
            return Err(Error::NonpositiveLogArgument(y));
        }
        Ok(y.log2() / (1.0 - self.alpha))
    }
}

/// Calibration: `H±_α((1/2)) = 1` across orders, and the signed Shannon
/// form agrees on the same singleton. Exact up to float rounding (the
/// check allows 1e-15; non-dyadic orders round the last bit).
pub fn check_calibration() -> bool {
    let half = SignedMeasure::new(vec![0.5]).expect("static measure is valid");
    let renyi_ok = [0.5, 2.0, 3.0, 7.0].iter().all(|&alpha| {
        signed_renyi(&half, alpha)
            .map(|h| (h.bits - 1.0).abs() <= 1e-15)
            .unwrap_or(false)
    });
    renyi_ok && signed_shannon(&half).bits == 1.0
}

/// Extensivity: `|H(P×Q) - H(P) - H(Q)| ≤ tol·max(1, |H|)` at the given order.
pub fn check_extensivity(
    p: &SignedMeasure,
    q: &SignedMeasure,
    alpha: f64,
    tol: f64,
) -> Result<bool> {
    let product = signed_renyi(&p.direct_product(q), alpha)?.bits;
    let sum = signed_renyi(p, alpha)?.bits + signed_renyi(q, alpha)?.bits;
    Ok((product - sum).abs() <= tol * product.abs().max(sum.abs()).max(1.0))
}

/// Mean-value property: the direct-sum entropy must equal the
/// `g`-weighted mean of the part entropies.
///
/// Pairs whose weights carry opposite signs are refused with
/// [`Error::MixedSignWeights`]: substituting the entropy formula into the
/// mean then yields `sign(w_P)·S_P + sign(w_Q)·S_Q` in the numerator, which
/// no longer matches the direct-sum side, and `g⁻¹` of a negative mean is
/// undefined.
pub fn check_mean_value(
    p: &SignedMeasure,
    q: &SignedMeasure,
    alpha: f64,
    tol: f64,
) -> Result<bool> {
    let (wp, wq) = (p.weight(), q.weight());
    if wp.signum() != wq.signum() {
        return Err(Error::MixedSignWeights {
            left: wp,
            right: wq,
        });
    }
    let union = p.direct_sum(q)?;
    let kernel = MeanValueKernel::new(alpha)?;
    let hp = signed_renyi(p, alpha)?.bits;
    let hq = signed_renyi(q, alpha)?.bits;
    let mean = (wp * kernel.g(hp) + wq * kernel.g(hq)) / union.weight();
    let via_kernel = kernel.g_inv(mean)?;
    let direct = signed_renyi(&union, alpha)?.bits;
    Ok((direct - via_kernel).abs() <= tol * direct.abs().max(1.0))
}

/// Singleton law: `H±_α((p)) = -log2|p|` for every nonzero grid point and
/// order, continuous across the grid. Checked to 1e-10 absolute.
pub fn check_singleton_continuity(grid: &[f64]) -> Result<bool> {
    const TOL: f64 = 1e-10;
    for &p in grid {
        let singleton = SignedMeasure::new(vec![p])?;
        let expected = -p.abs().log2();
        for alpha in [0.5, 1.5, 2.0, 3.0, 7.0] {
            if (signed_renyi(&singleton, alpha)?.bits - expected).abs() > TOL {
                return Ok(false);
            }
        }
    }
    // continuity along the grid: the law itself is the continuous function
    for pair in grid.windows(2) {
        let h0 = signed_renyi(&SignedMeasure::new(vec![pair[0]])?, 2.0)?.bits;
        let h1 = signed_renyi(&SignedMeasure::new(vec![pair[1]])?, 2.0)?.bits;
        let expected_jump = -pair[1].abs().log2() + pair[0].abs().log2();
        if ((h1 - h0) - expected_jump).abs() > TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The candidate entropy induced by a linear mean kernel `g(x) = -dx + e`:
///
/// ```text
/// H(P) = -Σ|p_i|·log2|p_i| / |Σp_i| - (e/d)·(Σ|p_i|/|Σp_i| - 1)
/// ```
///
/// Breaks extensivity for every offset `e/d`; see [`counterexample_report`].
pub fn linear_g_entropy(p: &SignedMeasure, e_over_d: f64) -> f64 {
    let abs_weight = p.weight().abs();
    let shannon_part = signed_shannon(p).bits;
    shannon_part - e_over_d * (p.abs_sum() / abs_weight - 1.0)
}

/// The candidate entropy induced by an exponential mean kernel
/// `g(x) = d·2^{(1-α)x} + e`:
///
/// ```text
/// H(P) = -1/(α-1)·log2[ Σ|p_i|^α/|Σp_i| + (e/d)·(Σ|p_i|/|Σp_i| - 1) ]
/// ```
///
/// Reduces to the signed Rényi entropy at `e/d = 0`; any other offset
/// breaks extensivity.
pub fn exponential_g_entropy(p: &SignedMeasure, alpha: f64, e_over_d: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 || (alpha - 1.0).abs() <= ALPHA_GUARD {
        return Err(Error::BadAlpha {
            alpha,
            reason: "exponential kernel needs a valid order (positive, not 1)",
        });
    }
    let abs_weight = p.weight().abs();
    let power_term = crate::entropy::abs_power_sum(p, alpha) / abs_weight;
    let argument = power_term + e_over_d * (p.abs_sum() / abs_weight - 1.0);
    if argument <= 0.0 {
        return Err(Error::NonpositiveLogArgument(argument));
    }
    Ok(-argument.log2() / (alpha - 1.0))
}

/// Extensivity verdicts for both kernel candidates on the fixed pair
/// `P = (1/2, 1/2)`, `Q = (2, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CounterexampleReport {
    /// Always true: the linear kernel's defect is 2 bits for every offset.
    pub linear_violates: bool,
    /// True exactly when `e/d ≠ 0`.
    pub exponential_violates: bool,
    pub linear_gap_bits: f64,
    pub exponential_gap_bits: f64,
}

/// Evaluates extensivity of both candidate families on `P = (1/2, 1/2)`,
/// `Q = (2, -1)` at the given offset and order.
pub fn counterexample_report(e_over_d: f64, alpha: f64) -> Result<CounterexampleReport> {
    let p = SignedMeasure::new(vec![0.5, 0.5]).expect("static measure is valid");
    let q = SignedMeasure::new(vec![2.0, -1.0]).expect("static measure is valid");
    let product = p.direct_product(&q);

    let linear_gap = (linear_g_entropy(&product, e_over_d)
        - linear_g_entropy(&p, e_over_d)
        - linear_g_entropy(&q, e_over_d))
    .abs();
    let exponential_gap = (exponential_g_entropy(&product, alpha, e_over_d)?
        - exponential_g_entropy(&p, alpha, e_over_d)?
        - exponential_g_entropy(&q, alpha, e_over_d)?)
    .abs();

    Ok(CounterexampleReport {
        linear_violates: linear_gap > EXTENSIVITY_GAP_TOL,
        exponential_violates: exponential_gap > EXTENSIVITY_GAP_TOL,
        linear_gap_bits: linear_gap,
        exponential_gap_bits: exponential_gap,
    })
}
