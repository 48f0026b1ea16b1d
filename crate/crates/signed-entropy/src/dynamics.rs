//! Master-equation evolution of signed measures and the H-theorem check.
//!
//! States evolve under `dp_i/dt = Σ_j λ_ij (p_j - p_i)` for a symmetric
//! transition-rate matrix Λ with zero row sums (micro-reversibility), which
//! collapses to the linear system `dp/dt = Λp`. When every off-diagonal
//! rate is non-negative (classical evolution), the signed Rényi entropy is
//! non-decreasing along trajectories for every order α > 1. Signed rates
//! are accepted too, flagged non-classical; monotonicity can then fail, and
//! the test suite exhibits a matrix where it does.

use nalgebra::{DMatrix, DVector};

use crate::entropy::EntropyKind;
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::numeric::rk4_linear;

/// Tolerance on the symmetry and zero-row-sum checks of a rate matrix.
pub const RATE_MATRIX_TOL: f64 = 1e-12;

/// A symmetric n×n matrix of transition rates `λ_ij` (units 1/time) with
/// zero row sums, the generator of the master equation. The weight
/// `Σ p_i` is conserved because the rows sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionRateMatrix {
    rates: DMatrix<f64>,
    classical: bool,
}

impl TransitionRateMatrix {
    /// Validates symmetry and zero row sums at [`RATE_MATRIX_TOL`] and
    /// records whether all off-diagonal rates are non-negative.
    pub fn new(rates: DMatrix<f64>) -> Result<Self> {
        let n = rates.nrows();
        if rates.ncols() != n || n == 0 {
            return Err(Error::DimensionMismatch {
                expected: n.max(1),
                actual: rates.ncols(),
            });
        }
        for i in 0..n {
            for j in 0..i {
                if (rates[(i, j)] - rates[(j, i)]).abs() > RATE_MATRIX_TOL {
                    return Err(Error::InvalidInput(format!(
                        "transition rates must be symmetric: rate[{i}][{j}] = {} vs rate[{j}][{i}] = {}",
                        rates[(i, j)],
                        rates[(j, i)]
                    )));
                }
            }
            let row_sum: f64 = rates.row(i).sum();
            if row_sum.abs() > RATE_MATRIX_TOL {
                return Err(Error::InvalidInput(format!(
                    "transition-rate row {i} sums to {row_sum:e}, not 0"
                )));
            }
        }
        let classical = (0..n).all(|i| (0..n).all(|j| i == j || rates[(i, j)] >= 0.0));
        Ok(Self { rates, classical })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(
                "transition-rate matrix must be square".to_string(),
            ));
        }
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        Self::new(DMatrix::from_row_slice(n, n, &flat))
    }

    /// All-to-all rates: every off-diagonal entry is `rate`, diagonal
    /// `-(n-1)·rate`. Classical for `rate >= 0`; the n = 3, rate = 1/2 case
    /// relaxes any initial measure to uniform at rate 3/2.
    pub fn all_to_all(n: usize, rate: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        let mut m = DMatrix::from_element(n, n, rate);
        for i in 0..n {
            m[(i, i)] = -(n as f64 - 1.0) * rate;
        }
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.rates.nrows()
    }

    /// True iff every off-diagonal rate is non-negative (the H-theorem
    /// hypothesis).
    pub fn is_classical(&self) -> bool {
        self.classical
    }

    pub fn rates(&self) -> &DMatrix<f64> {
        &self.rates
    }

    /// Right-hand side of the master equation at state `p`.
    pub fn apply(&self, p: &SignedMeasure) -> Result<Vec<f64>> {
        if self.dim() != p.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: p.len(),
            });
        }
        let v = &self.rates * DVector::from_column_slice(p.values());
        Ok(v.iter().copied().collect())
    }
}

/// A time-stamped sequence of states produced by [`evolve`]. The weight of
/// every state equals the initial weight up to integration roundoff.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<SignedMeasure>,
    dt: f64,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[SignedMeasure] {
        &self.states
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn final_time(&self) -> f64 {
        *self.times.last().expect("trajectory holds at least t = 0")
    }

    pub fn final_state(&self) -> &SignedMeasure {
        self.states.last().expect("trajectory holds at least t = 0")
    }
}

fn validate_step(t_end: f64, dt: f64) -> Result<()> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidInput(format!("dt must be positive, got {dt}")));
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "t_end must be non-negative, got {t_end}"
        )));
    }
    Ok(())
}

/// Fixed-step RK4 integration of the master equation from `p0` to within
/// `dt/2` of `t_end`, recording every step.
pub fn evolve(
    p0: &SignedMeasure,
    rates: &TransitionRateMatrix,
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    if rates.dim() != p0.len() {
        return Err(Error::DimensionMismatch {
            expected: rates.dim(),
            actual: p0.len(),
        });
    }
    validate_step(t_end, dt)?;
    let steps = rk4_linear(
        rates.rates(),
        DVector::from_column_slice(p0.values()),
        t_end,
        dt,
    );
    let mut times = Vec::with_capacity(steps.len());
    let mut states = Vec::with_capacity(steps.len());
    for (t, y) in steps {
        times.push(t);
        // zero row sums conserve the weight, so the states stay valid
        states.push(SignedMeasure::from_values_unchecked(
            y.iter().copied().collect(),
        ));
    }
    Ok(Trajectory { times, states, dt })
}

/// Closed-form state at time `t` via the spectral decomposition of the
/// symmetric rate matrix: `p(t) = V·exp(diag(μ)t)·Vᵀ·p0`. Serves as the
/// independent oracle for [`evolve`].
pub fn exact_state(
    p0: &SignedMeasure,
    rates: &TransitionRateMatrix,
    t: f64,
) -> Result<SignedMeasure> {
    if rates.dim() != p0.len() {
        return Err(Error::DimensionMismatch {
            expected: rates.dim(),
            actual: p0.len(),
        });
    }
    let eigen = rates.rates().clone().symmetric_eigen();
    let mut modal = eigen.eigenvectors.transpose() * DVector::from_column_slice(p0.values());
    for (k, coeff) in modal.iter_mut().enumerate() {
        *coeff *= (eigen.eigenvalues[k] * t).exp();
    }
    let state = eigen.eigenvectors * modal;
    Ok(SignedMeasure::from_values_unchecked(
        state.iter().copied().collect(),
    ))
}

/// Maps the chosen entropy over every state of a trajectory.
pub fn entropy_trajectory(traj: &Trajectory, kind: EntropyKind) -> Result<Vec<(f64, f64)>> {
    traj.times()
        .iter()
        .zip(traj.states())
        .map(|(&t, state)| Ok((t, kind.evaluate(state)?.bits)))
        .collect()
}

/// Verdict of a forward-difference monotonicity scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotonicityReport {
    /// True iff every forward difference is at least `-tol`.
    pub monotone: bool,
    /// Start time of the first decreasing step, when one exists.
    pub first_violation: Option<f64>,
}

/// Scans a `(time, bits)` series for forward differences below `-tol`.
pub fn monotonicity_report(series: &[(f64, f64)], tol: f64) -> MonotonicityReport {
    for pair in series.windows(2) {
        if pair[1].1 - pair[0].1 < -tol {
            return MonotonicityReport {
                monotone: false,
                first_violation: Some(pair[0].0),
            };
        }
    }
    MonotonicityReport {
        monotone: true,
        first_violation: None,
    }
}
