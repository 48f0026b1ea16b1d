//! Signed measures on a finite state space and their product/sum algebra.
//!
//! A [`SignedMeasure`] is an ordered tuple of real weights, possibly
//! negative, with a nonzero total. It is the universal input of every
//! entropy functional in this crate: ordinary probability vectors,
//! unnormalized non-negative measures, and quasi-probability distributions
//! (e.g. discrete Wigner functions) are all special cases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::symmetric_sum;

/// Weights whose magnitude falls at or below this count as zero. Roughly
/// 100x the f64 epsilon at unit scale; every downstream formula divides by
/// `|Σ p_i|`, so construction is where such measures are rejected.
pub const WEIGHT_TOL: f64 = 1e-12;

/// An ordered tuple of real weights `p_1..p_n`, `n >= 1`, with
/// `|Σ p_i| > WEIGHT_TOL`. Zero components are permitted; the conventions
/// `|0|^α = 0` and `0·log 0 = 0` keep every entropy finite.
///
/// Values are immutable after construction, so instances are freely
/// shareable across threads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureRepr", into = "MeasureRepr")]
pub struct SignedMeasure {
    values: Vec<f64>,
}

/// JSON wire form: `{"values": [..]}`.
#[derive(Serialize, Deserialize)]
struct MeasureRepr {
    values: Vec<f64>,
}

impl TryFrom<MeasureRepr> for SignedMeasure {
    type Error = Error;

    fn try_from(repr: MeasureRepr) -> Result<Self> {
        SignedMeasure::new(repr.values)
    }
}

impl From<SignedMeasure> for MeasureRepr {
    fn from(m: SignedMeasure) -> Self {
        MeasureRepr { values: m.values }
    }
}

impl SignedMeasure {
    /// Validates finiteness and the nonzero-weight invariant.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
        }
        let m = Self { values };
        let weight = m.weight();
        if weight.abs() <= WEIGHT_TOL {
            return Err(Error::ZeroWeight {
                weight,
                tol: WEIGHT_TOL,
            });
        }
        Ok(m)
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec())
    }

    /// For values produced by operations that conserve (or multiply) nonzero
    /// weights, where re-validation would reject mathematically sound
    /// results, e.g. direct products of small weights.
    pub(crate) fn from_values_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The weight `w(P) = Σ p_i`. Bit-identical under permutation of the
    /// components.
    pub fn weight(&self) -> f64 {
        symmetric_sum(self.values.iter().copied())
    }

    /// `Σ |p_i|`, the total variation.
    pub fn abs_sum(&self) -> f64 {
        symmetric_sum(self.values.iter().map(|v| v.abs()))
    }

    /// Direct product `P * Q = (p_1 q_1, .., p_1 q_n, .., p_m q_1, .., p_m q_n)`.
    ///
    /// The result's weight is `w(P)·w(Q)`, nonzero whenever both factors are
    /// valid, so this cannot fail.
    pub fn direct_product(&self, other: &Self) -> Self {
        let mut values = Vec::with_capacity(self.len() * other.len());
        for &p in &self.values {
            for &q in &other.values {
                values.push(p * q);
            }
        }
        Self::from_values_unchecked(values)
    }

    /// Direct sum `P ∪ Q`: the concatenation of the two tuples, well-defined
    /// only when the combined weight stays away from zero.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let weight = self.weight() + other.weight();
        if weight.abs() <= WEIGHT_TOL {
            return Err(Error::ZeroWeight {
                weight,
                tol: WEIGHT_TOL,
            });
        }
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Ok(Self::from_values_unchecked(values))
    }

    /// Components sorted in non-increasing order; the multiset of values is
    /// preserved. Entropies are symmetric, so this never changes a result;
    /// majorization is defined through it.
    pub fn decreasing_rearrangement(&self) -> Self {
        let mut values = self.values.clone();
        values.sort_by(|a, b| b.total_cmp(a));
        Self::from_values_unchecked(values)
    }

    /// True iff some component is strictly negative (zero is not negative).
    pub fn has_negative(&self) -> bool {
        self.values.iter().any(|&v| v < 0.0)
    }

    pub fn is_non_negative(&self) -> bool {
        !self.has_negative()
    }
}
