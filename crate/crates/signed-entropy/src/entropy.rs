//! Entropy functionals for signed measures.
//!
//! The central object is the signed Rényi α-entropy
//!
//! ```text
//! H±_α(P) = -1/(α-1) · log2[ Σ|p_i|^α / |Σ p_i| ],   α > 0, α ≠ 1,
//! ```
//!
//! the unique family satisfying real-valuedness, continuity away from 0,
//! calibration `H((1/2)) = 1`, extensivity under direct products, and the
//! weighted mean-value property under direct sums. The signed Shannon
//! analog `-Σ|p_i|log2|p_i| / |Σp_i|` is provided for contrast: it fails
//! extensivity and is kept here so the failure can be demonstrated, not
//! because it is a recommended measure. All logarithms are base 2.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::numeric::symmetric_sum;

/// Orders closer to 1 than this are rejected: the `1/(α-1)` prefactor
/// amplifies the log ratio beyond anything numerically meaningful.
pub const ALPHA_GUARD: f64 = 1e-9;

/// An entropy in bits, tagged with the Rényi order when one applies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyValue {
    pub bits: f64,
    /// `None` for the Shannon and renormalized forms.
    pub alpha: Option<f64>,
}

/// Which entropy functional to evaluate. The Rényi kinds carry their order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntropyKind {
    SignedRenyi { alpha: f64 },
    SignedShannon,
    Renormalized,
    ClassicalRenyi { alpha: f64 },
    ClassicalShannon,
}

impl EntropyKind {
    pub fn evaluate(&self, p: &SignedMeasure) -> Result<EntropyValue> {
        match *self {
            EntropyKind::SignedRenyi { alpha } => signed_renyi(p, alpha),
            EntropyKind::SignedShannon => Ok(signed_shannon(p)),
            EntropyKind::Renormalized => Ok(renormalized_entropy(p)),
            EntropyKind::ClassicalRenyi { alpha } => classical_renyi(p, alpha),
            EntropyKind::ClassicalShannon => classical_shannon(p),
        }
    }
}

fn validate_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::BadAlpha {
            alpha,
            reason: "order must be a positive real",
        });
    }
    if (alpha - 1.0).abs() <= ALPHA_GUARD {
        return Err(Error::BadAlpha {
            alpha,
            reason: "order must stay outside the alpha = 1 guard band",
        });
    }
    Ok(())
}

/// `|v|^α` with the `|0|^α = 0` convention (exact for every α > 0).
fn abs_pow(v: f64, alpha: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v.abs().powf(alpha)
    }
}

/// `Σ |p_i|^α`, compensated and permutation-invariant.
pub(crate) fn abs_power_sum(p: &SignedMeasure, alpha: f64) -> f64 {
    symmetric_sum(p.values().iter().map(|&v| abs_pow(v, alpha)))
}

/// Signed Rényi α-entropy `H±_α(P) = -1/(α-1)·log2[Σ|p_i|^α / |Σp_i|]`.
///
/// Requires `α > 0` and `|α - 1| > ALPHA_GUARD`. For measures with a
/// negative component the family diverges as α approaches 1 (opposite signs
/// on either side); callers wanting an α = 1 form on non-negative input use
/// [`classical_shannon`].
pub fn signed_renyi(p: &SignedMeasure, alpha: f64) -> Result<EntropyValue> {
    validate_alpha(alpha)?;
    let ratio = abs_power_sum(p, alpha) / p.weight().abs();
    Ok(EntropyValue {
        bits: -ratio.log2() / (alpha - 1.0),
        alpha: Some(alpha),
    })
}

/// Signed Shannon entropy `-Σ|p_i|·log2|p_i| / |Σp_i|` with `0·log 0 = 0`.
///
/// Fails extensivity on products of signed measures; see
/// [`crate::axioms::check_extensivity`].
pub fn signed_shannon(p: &SignedMeasure) -> EntropyValue {
    let s = symmetric_sum(p.values().iter().map(|&v| {
        if v == 0.0 {
            0.0
        } else {
            let a = v.abs();
            a * a.log2()
        }
    }));
    EntropyValue {
        bits: -s / p.weight().abs(),
        alpha: None,
    }
}

/// Renormalized entropy `-log2[Σ|p_i| / |Σp_i|]`, the α = 1 rescaling of
/// the signed Rényi family. Extensive and Schur-concave, zero on
/// non-negative measures, but not conserved by Moyal-bracket evolution.
pub fn renormalized_entropy(p: &SignedMeasure) -> EntropyValue {
    EntropyValue {
        bits: -(p.abs_sum() / p.weight().abs()).log2(),
        alpha: None,
    }
}

fn require_non_negative(p: &SignedMeasure) -> Result<()> {
    for (index, &value) in p.values().iter().enumerate() {
        if value < 0.0 {
            return Err(Error::NegativeComponent { index, value });
        }
    }
    Ok(())
}

/// Classical Rényi entropy on non-negative measures. Coincides with
/// [`signed_renyi`] on this domain (the absolute values are no-ops).
pub fn classical_renyi(p: &SignedMeasure, alpha: f64) -> Result<EntropyValue> {
    require_non_negative(p)?;
    signed_renyi(p, alpha)
}

/// Classical Shannon entropy `-Σ p_i log2 p_i / Σ p_i` on non-negative
/// measures; the α → 1 limit of [`classical_renyi`].
pub fn classical_shannon(p: &SignedMeasure) -> Result<EntropyValue> {
    require_non_negative(p)?;
    Ok(signed_shannon(p))
}

/// Gradient of the signed Rényi entropy, entry `j`:
///
/// ```text
/// ∂H±_α/∂p_j = -1/((α-1)·ln 2) · [ α|p_j|^{α-1}·sign(p_j)/Σ|p_i|^α - sign(Σp_i)/|Σp_i| ]
/// ```
///
/// Defined for `α > 1` only, where `|p|^{α-1}·sign(p)` is continuous
/// through 0 (a zero component contributes 0 to the first bracket term).
pub fn signed_renyi_gradient(p: &SignedMeasure, alpha: f64) -> Result<Vec<f64>> {
    if !alpha.is_finite() || alpha <= 1.0 {
        return Err(Error::BadAlpha {
            alpha,
            reason: "gradient requires alpha > 1",
        });
    }
    let power_sum = abs_power_sum(p, alpha);
    let weight = p.weight();
    let scale = -1.0 / ((alpha - 1.0) * std::f64::consts::LN_2);
    Ok(p
        .values()
        .iter()
        .map(|&v| {
            let signed_power = if v == 0.0 {
                0.0
            } else {
                alpha * v.abs().powf(alpha - 1.0) * v.signum()
            };
            scale * (signed_power / power_sum - weight.signum() / weight.abs())
        })
        .collect())
}
