//! Negativity witnessing, majorization, and order-parameter sweeps.
//!
//! A measure contains a strictly negative component exactly when some order
//! α > 1 makes its signed Rényi entropy strictly negative, so the sign of
//! `H±_α` doubles as a negativity witness. Majorization ("more mixed than")
//! interacts with the family through Schur-concavity: for α > 1, mixing by
//! a doubly stochastic matrix can only raise the entropy.

use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::entropy::signed_renyi;
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;

/// Smallest ε the witness search will try at order 1 + ε. The abs/weight
/// ratio exceeds 1 for any measure with a negative entry, so the search
/// succeeds before this floor unless the negativity sits below float
/// resolution.
pub const WITNESS_EPS_FLOOR: f64 = 1e-8;

/// Absolute tolerance on majorization prefix sums and totals.
pub const MAJORIZATION_TOL: f64 = 1e-12;

/// Outcome of a negativity-witness search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessResult {
    /// True iff an order α > 1 with `H±_α(P) < 0` was found.
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy_bits: Option<f64>,
}

/// Searches for an order α > 1 at which the signed Rényi entropy of `p`
/// turns strictly negative, certifying a negative component.
///
/// Non-negative measures report `found = false` immediately. Otherwise the
/// search evaluates α = 2 first and then walks ε down through
/// `1 + ε ∈ {1.5, 1.25, ..}`: when the signs are mixed the abs-power ratio
/// exceeds 1 at α = 1 and is continuous, so a small enough ε always
/// succeeds. Hitting [`WITNESS_EPS_FLOOR`] is therefore diagnosed as an
/// error rather than reported as "no witness"; the attached ratio
/// distinguishes negativity below float resolution (ratio barely above 1)
/// from an all-negative measure (ratio exactly 1), which every entropy
/// here treats as identical to its global sign flip.
pub fn negativity_witness(p: &SignedMeasure) -> Result<WitnessResult> {
    if !p.has_negative() {
        return Ok(WitnessResult {
            found: false,
            alpha: None,
            entropy_bits: None,
        });
    }
    let mut alpha = 2.0;
    loop {
        let bits = signed_renyi(p, alpha)?.bits;
        if bits < 0.0 {
            return Ok(WitnessResult {
                found: true,
                alpha: Some(alpha),
                entropy_bits: Some(bits),
            });
        }
        let eps = (alpha - 1.0) / 2.0;
        if eps < WITNESS_EPS_FLOOR {
            return Err(Error::WitnessFloor {
                floor: WITNESS_EPS_FLOOR,
                ratio: p.abs_sum() / p.weight().abs(),
            });
        }
        alpha = 1.0 + eps;
    }
}

/// True iff `q` majorizes `p`: with both tuples sorted in non-increasing
/// order, every proper prefix sum of `p` is bounded by the corresponding
/// prefix sum of `q`, and the totals agree. Comparisons use
/// [`MAJORIZATION_TOL`].
pub fn majorizes(q: &SignedMeasure, p: &SignedMeasure) -> Result<bool> {
    if q.len() != p.len() {
        return Err(Error::LengthMismatch {
            left: q.len(),
            right: p.len(),
        });
    }
    let qs = q.decreasing_rearrangement();
    let ps = p.decreasing_rearrangement();
    let mut q_prefix = 0.0;
    let mut p_prefix = 0.0;
    for i in 0..q.len() - 1 {
        q_prefix += qs.values()[i];
        p_prefix += ps.values()[i];
        if p_prefix > q_prefix + MAJORIZATION_TOL {
            return Ok(false);
        }
    }
    Ok((q.weight() - p.weight()).abs() <= MAJORIZATION_TOL)
}

/// A random doubly stochastic matrix: a convex combination of `2n` random
/// permutation matrices with random convex weights, so row and column sums
/// are 1 by construction (Birkhoff). Deterministic in `seed`.
pub fn random_doubly_stochastic(n: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = 2 * n.max(1);
    let mut weights: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut d = DMatrix::zeros(n, n);
    let mut perm: Vec<usize> = (0..n).collect();
    for &w in &weights {
        perm.shuffle(&mut rng);
        for (row, &col) in perm.iter().enumerate() {
            d[(row, col)] += w;
        }
    }
    d
}

/// Applies a doubly stochastic matrix to a measure: `mix(P, D) = DP`.
///
/// The result has the same weight as `p` and is majorized by it. Fails with
/// `ZeroWeight` only if roundoff pushes the conserved weight below
/// tolerance (possible when `w(P)` is already borderline).
pub fn mix(p: &SignedMeasure, d: &DMatrix<f64>) -> Result<SignedMeasure> {
    if d.nrows() != p.len() || d.ncols() != p.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            actual: d.nrows().max(d.ncols()),
        });
    }
    let mixed = d * DVector::from_column_slice(p.values());
    SignedMeasure::new(mixed.iter().copied().collect())
}

/// One sampled point of an entropy-vs-inverse-order curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepPoint {
    pub inv_alpha: f64,
    pub entropy_bits: f64,
}

/// Signed Rényi entropy sampled over a strictly increasing grid of `1/α`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCurve {
    pub points: Vec<SweepPoint>,
}

/// Evaluates `H±_{1/x}(P)` per grid point `x`. The grid must be strictly
/// increasing, and each point must map to a valid order (positive, outside
/// the α = 1 guard band) or the offending point's `BadAlpha` is returned.
pub fn alpha_sweep(p: &SignedMeasure, inv_alpha_grid: &[f64]) -> Result<SweepCurve> {
    if inv_alpha_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput(
            "inverse-order grid must be strictly increasing".to_string(),
        ));
    }
    let mut points = Vec::with_capacity(inv_alpha_grid.len());
    for &inv_alpha in inv_alpha_grid {
        let alpha = 1.0 / inv_alpha;
        points.push(SweepPoint {
            inv_alpha,
            entropy_bits: signed_renyi(p, alpha)?.bits,
        });
    }
    Ok(SweepCurve { points })
}

/// Returns the index of an interior maximum: a point the curve strictly
/// rises into and strictly falls away from (differences beyond 1e-12), or
/// `None` when no such unimodal peak exists.
pub fn detect_interior_extremum(curve: &SweepCurve) -> Option<usize> {
    const TOL: f64 = 1e-12;
    let ys: Vec<f64> = curve.points.iter().map(|pt| pt.entropy_bits).collect();
    if ys.len() < 3 {
        return None;
    }
    let peak = ys
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)?;
    if peak == 0 || peak == ys.len() - 1 {
        return None;
    }
    let rising = ys[..peak].windows(2).all(|w| w[1] - w[0] > TOL);
    let falling = ys[peak..].windows(2).all(|w| w[1] - w[0] < -TOL);
    (rising && falling).then_some(peak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::signed_shannon;
    use approx::assert_abs_diff_eq;

    fn m(values: &[f64]) -> SignedMeasure {
        SignedMeasure::from_slice(values).unwrap()
    }

    fn grid(from: f64, to: f64, step: f64) -> Vec<f64> {
        let n = ((to - from) / step + 1e-9).floor() as usize + 1;
        (0..n).map(|k| from + k as f64 * step).collect()
    }

    #[test]
    fn witness_finds_alpha_for_two_minus_one() {
        let w = negativity_witness(&m(&[2.0, -1.0])).unwrap();
        assert!(w.found);
        assert_eq!(w.alpha, Some(2.0));
        assert_abs_diff_eq!(w.entropy_bits.unwrap(), -(5f64).log2(), epsilon = 1e-12);
    }

    #[test]
    fn witness_declines_non_negative_measures() {
        let w = negativity_witness(&m(&[0.5, 0.5])).unwrap();
        assert!(!w.found);
        assert_eq!(w.alpha, None);
        assert_eq!(w.entropy_bits, None);
    }

    #[test]
    fn witness_catches_positive_shannon_example() {
        // (2, -1/8 x8): signed Shannon is +1 yet the measure is negative
        let mut values = vec![2.0];
        values.extend(std::iter::repeat_n(-0.125, 8));
        let p = m(&values);
        assert_eq!(signed_shannon(&p).bits, 1.0);
        let w = negativity_witness(&p).unwrap();
        assert!(w.found);
        assert!(w.entropy_bits.unwrap() < 0.0);
        // near alpha = 1 the entropy approaches -(1/eps)·log2(3)
        let h = signed_renyi(&p, 1.001).unwrap().bits;
        let predicted = -1000.0 * 3f64.log2();
        assert!((h - predicted).abs() <= 0.02 * predicted.abs());
    }

    #[test]
    fn witness_needs_small_epsilon_for_faint_negativity() {
        // abs/weight ratio 1.00125: alpha = 2 fails, the bisection succeeds
        let p = m(&[1.0, -0.001, 0.6]);
        let w = negativity_witness(&p).unwrap();
        assert!(w.found);
        assert!(w.alpha.unwrap() > 1.0 && w.alpha.unwrap() < 2.0);
        assert!(w.entropy_bits.unwrap() < 0.0);
    }

    #[test]
    fn witness_diagnoses_all_negative_measures_via_the_floor() {
        // H(-P) = H(P): an all-negative measure carries no sign mixing for
        // the entropy to see, so the search ends at the floor with ratio 1
        let p = m(&[-0.5, -0.5]);
        match negativity_witness(&p) {
            Err(Error::WitnessFloor { ratio, .. }) => {
                assert!((ratio - 1.0).abs() <= 1e-12)
            }
            other => panic!("expected the floor diagnostic, got {other:?}"),
        }
    }

    #[test]
    fn majorizes_example_pair() {
        let p = m(&[0.08, 0.45, 0.47]);
        let q = m(&[-0.3, 0.6, 0.7]);
        assert!(majorizes(&q, &p).unwrap());
        assert!(!majorizes(&p, &q).unwrap());
    }

    #[test]
    fn majorizes_reflexive_and_extreme_vs_uniform() {
        let p = m(&[0.3, -0.1, 0.8]);
        assert!(majorizes(&p, &p).unwrap());
        let point = m(&[1.0, 0.0]);
        let uniform = m(&[0.5, 0.5]);
        assert!(majorizes(&point, &uniform).unwrap());
        assert!(!majorizes(&uniform, &point).unwrap());
    }

    #[test]
    fn majorizes_rejects_length_mismatch() {
        assert!(matches!(
            majorizes(&m(&[1.0]), &m(&[0.5, 0.5])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn majorizes_requires_equal_totals() {
        assert!(!majorizes(&m(&[1.0, 0.0]), &m(&[0.25, 0.25])).unwrap());
    }

    #[test]
    fn doubly_stochastic_construction_invariants() {
        let single = random_doubly_stochastic(1, 7);
        assert_eq!(single.shape(), (1, 1));
        assert_abs_diff_eq!(single[(0, 0)], 1.0, epsilon = 1e-12);
        for n in [2usize, 3, 6] {
            for seed in [0u64, 1, 42] {
                let d = random_doubly_stochastic(n, seed);
                for i in 0..n {
                    assert_abs_diff_eq!(d.row(i).sum(), 1.0, epsilon = 1e-12);
                    assert_abs_diff_eq!(d.column(i).sum(), 1.0, epsilon = 1e-12);
                }
                assert!(d.iter().all(|&x| x >= 0.0));
            }
        }
        // determinism in the seed
        assert_eq!(random_doubly_stochastic(4, 9), random_doubly_stochastic(4, 9));
    }

    #[test]
    fn mix_identity_and_full_mixing() {
        let p = m(&[0.7, -0.2, 0.5]);
        let id = DMatrix::identity(3, 3);
        assert_eq!(mix(&p, &id).unwrap().values(), p.values());
        let flat = DMatrix::from_element(3, 3, 1.0 / 3.0);
        let mixed = mix(&p, &flat).unwrap();
        for &v in mixed.values() {
            assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn mix_produces_majorized_measures() {
        let p = m(&[0.9, -0.3, 0.2, 0.2]);
        for seed in 0..20u64 {
            let d = random_doubly_stochastic(4, seed);
            let mixed = mix(&p, &d).unwrap();
            assert!(majorizes(&p, &mixed).unwrap(), "seed {seed}");
            assert_abs_diff_eq!(mixed.weight(), p.weight(), epsilon = 1e-12);
        }
    }

    #[test]
    fn schur_concavity_for_orders_above_one() {
        let cases = [
            vec![0.9, -0.3, 0.2, 0.2],
            vec![2.0, -1.0],
            vec![0.1, 0.5, -0.2, 0.4, 0.2],
        ];
        for (i, values) in cases.iter().enumerate() {
            let q = m(values);
            for seed in 0..10u64 {
                let d = random_doubly_stochastic(q.len(), seed * 31 + i as u64);
                let mixed = mix(&q, &d).unwrap();
                for alpha in [1.5, 2.0, 4.0] {
                    let h_mixed = signed_renyi(&mixed, alpha).unwrap().bits;
                    let h_q = signed_renyi(&q, alpha).unwrap().bits;
                    assert!(
                        h_mixed >= h_q - 1e-10,
                        "alpha {alpha} seed {seed}: {h_mixed} < {h_q}"
                    );
                }
            }
        }
    }

    #[test]
    fn shannon_schur_concavity_fails_on_example_pair() {
        // P majorized by Q, yet signed Shannon orders them the wrong way
        let p = m(&[0.08, 0.45, 0.47]);
        let q = m(&[-0.3, 0.6, 0.7]);
        assert!(majorizes(&q, &p).unwrap());
        assert!(signed_shannon(&p).bits < signed_shannon(&q).bits);
    }

    #[test]
    fn majorizes_transitive_along_mixing_chains() {
        let p = m(&[1.2, -0.4, 0.2, 0.3, -0.3]);
        for seed in 0..10u64 {
            let d1 = random_doubly_stochastic(5, seed);
            let d2 = random_doubly_stochastic(5, seed + 1000);
            let step1 = mix(&p, &d1).unwrap();
            let step2 = mix(&step1, &d2).unwrap();
            assert!(majorizes(&p, &step1).unwrap());
            assert!(majorizes(&step1, &step2).unwrap());
            assert!(majorizes(&p, &step2).unwrap());
        }
    }

    #[test]
    fn sweep_reproduces_constant_and_monotone_shapes() {
        let uniform = m(&[1.0 / 3.0; 3]);
        let curve = alpha_sweep(&uniform, &grid(0.05, 0.9, 0.01)).unwrap();
        for pt in &curve.points {
            assert_abs_diff_eq!(pt.entropy_bits, 3f64.log2(), epsilon = 1e-10);
        }
        assert_eq!(detect_interior_extremum(&curve), None);

        let prob = m(&[0.1, 0.2, 0.3, 0.4]);
        let curve = alpha_sweep(&prob, &grid(0.05, 0.9, 0.01)).unwrap();
        for w in curve.points.windows(2) {
            assert!(w[1].entropy_bits >= w[0].entropy_bits - 1e-12);
        }
    }

    #[test]
    fn sweep_detects_interior_peak_on_the_negative_example() {
        let p = m(&[4.0 / 7.0, -1.0 / 7.0, 3.0 / 14.0, 5.0 / 14.0]);
        let curve = alpha_sweep(&p, &grid(0.05, 0.9, 0.01)).unwrap();
        let peak = detect_interior_extremum(&curve).expect("interior maximum");
        assert!(peak > 0 && peak < curve.points.len() - 1);
    }

    #[test]
    fn sweep_validates_grid_and_orders() {
        let p = m(&[0.5, 0.5]);
        assert!(matches!(
            alpha_sweep(&p, &[0.2, 0.2]),
            Err(Error::InvalidInput(_))
        ));
        // 1/alpha = 1.0 sits inside the guard band
        assert!(matches!(
            alpha_sweep(&p, &[0.5, 1.0]),
            Err(Error::BadAlpha { .. })
        ));
        assert!(matches!(
            alpha_sweep(&p, &[-0.5, 0.5]),
            Err(Error::BadAlpha { .. })
        ));
    }

    #[test]
    fn witness_finds_alpha_on_a_thousand_random_negative_measures() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        for case in 0..1000 {
            // mixed signs with magnitudes bounded away from 0, so the
            // negativity is resolvable: an all-negative measure looks like
            // its global sign flip to every entropy here, and an entry
            // like -1e-10 would need an epsilon below the search floor
            let p = loop {
                let n = rng.random_range(2..=8usize);
                let mut values: Vec<f64> = (0..n)
                    .map(|_| {
                        let magnitude = rng.random_range(0.01..1.0);
                        if rng.random_range(0.0..1.0) < 0.5 {
                            -magnitude
                        } else {
                            magnitude
                        }
                    })
                    .collect();
                values[0] = -values[0].abs();
                values[1] = values[1].abs();
                if values.iter().sum::<f64>().abs() > 0.05 {
                    break m(&values);
                }
            };
            let w = negativity_witness(&p).unwrap();
            assert!(w.found, "case {case}: {:?}", p.values());
            assert!(w.alpha.unwrap() > 1.0);
            assert!(w.entropy_bits.unwrap() < 0.0);
        }
    }

    #[test]
    fn entropy_stays_non_negative_on_a_thousand_generalized_probability_measures() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2025);
        // 20 orders spread over (0, 5], avoiding 1
        let alphas: Vec<f64> = (1..=20)
            .map(|k| k as f64 * 0.25)
            .map(|a| if (a - 1.0).abs() < 1e-9 { 1.05 } else { a })
            .collect();
        for _ in 0..1000 {
            // components in [0, 1] with weight at most 1: the domain on
            // which non-negativity of the entropy holds
            let n = rng.random_range(1..=8usize);
            let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.01..1.0)).collect();
            let total: f64 = raw.iter().sum();
            let scale = rng.random_range(0.05..1.0) / total;
            let p = m(&raw.iter().map(|x| x * scale).collect::<Vec<_>>());
            for &alpha in &alphas {
                let h = signed_renyi(&p, alpha).unwrap().bits;
                assert!(h >= -1e-12, "alpha {alpha}: H = {h} on {:?}", p.values());
            }
        }
    }

    #[test]
    fn extremum_detector_examples() {
        let monotone = SweepCurve {
            points: (0..5)
                .map(|i| SweepPoint {
                    inv_alpha: i as f64,
                    entropy_bits: i as f64,
                })
                .collect(),
        };
        assert_eq!(detect_interior_extremum(&monotone), None);

        let bump = SweepCurve {
            points: [0.0, 1.0, 0.0]
                .iter()
                .enumerate()
                .map(|(i, &y)| SweepPoint {
                    inv_alpha: i as f64,
                    entropy_bits: y,
                })
                .collect(),
        };
        assert_eq!(detect_interior_extremum(&bump), Some(1));
    }
}
