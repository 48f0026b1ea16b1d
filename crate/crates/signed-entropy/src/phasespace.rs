//! Discrete Wigner functions for odd prime dimensions and the
//! skew-symmetric Liouvillian of discrete Moyal-bracket evolution.
//!
//! The phase space is `Z_d × Z_d` for an odd prime `d`. Phase-point
//! operators are built from displacements of the parity operator:
//! `A_(q,p) = D(q,p) · A_0 · D(q,p)†` with `D(q,p) = ω^{2⁻¹qp} X^q Z^p`,
//! `ω = e^{2πi/d}`, and `A_0 |j⟩ = |-j mod d⟩`. Every `A_ξ` is Hermitian
//! with unit trace, the family is orthogonal (`Tr[A_ξ A_η] = d·δ_ξη`) and
//! resolves `d·I`, so `W_ξ = Tr[A_ξ ρ]/d` is a signed probability measure
//! that determines ρ completely.
//!
//! Hamiltonian evolution `ρ̇ = -i[H, ρ]` becomes `Ẇ = L W` for a real
//! matrix `L` with `Lᵀ = -L`; skew-symmetry makes `Σ_ξ W_ξ²` a constant of
//! motion, which is exactly conservation of the signed Rényi 2-entropy.
//! Complex arithmetic stays inside this module: everything exported (`W`,
//! `L`, the quadratic moment) is real after an imaginary-residue check.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::numeric::{neumaier_sum, rk4_linear};

type CMatrix = DMatrix<Complex64>;

/// Hermiticity and unit-trace checks on user-supplied matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Density-matrix eigenvalues may undershoot zero by at most this.
pub const POSITIVITY_TOL: f64 = 1e-10;
/// Largest imaginary residue tolerated when projecting analytically real
/// quantities (Wigner values, Liouvillian entries) onto the reals.
pub const IMAG_RESIDUE_TOL: f64 = 1e-10;

fn hermiticity_residual(m: &CMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn require_hermitian(m: &CMatrix) -> Result<()> {
    let residual = hermiticity_residual(m);
    if residual > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual });
    }
    Ok(())
}

fn trace(m: &CMatrix) -> Complex64 {
    (0..m.nrows()).map(|i| m[(i, i)]).sum()
}

/// A d×d density matrix: Hermitian, unit trace, positive semidefinite up to
/// [`POSITIVITY_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace, and positivity.
    pub fn new(entries: CMatrix) -> Result<Self> {
        let rho = Self::hermitian_unit_trace(entries)?;
        let min_eig = rho
            .entries
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -POSITIVITY_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix has eigenvalue {min_eig:e} below -{POSITIVITY_TOL:e}"
            )));
        }
        Ok(rho)
    }

    /// Checks Hermiticity and unit trace only. Quasi-distribution
    /// reconstructions use this: a one-hot Wigner function maps to a
    /// phase-point operator, which is Hermitian with trace 1 but not
    /// positive.
    fn hermitian_unit_trace(entries: CMatrix) -> Result<Self> {
        let d = entries.nrows();
        if entries.ncols() != d || d == 0 {
            return Err(Error::DimensionMismatch {
                expected: d.max(1),
                actual: entries.ncols(),
            });
        }
        require_hermitian(&entries)?;
        let tr = trace(&entries);
        if (tr - Complex64::new(1.0, 0.0)).norm() > HERMITICITY_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix trace is {tr}, not 1"
            )));
        }
        Ok(Self { entries })
    }

    /// The maximally mixed state `I/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        let scale = Complex64::new(1.0 / d as f64, 0.0);
        Self {
            entries: CMatrix::identity(d, d) * scale,
        }
    }

    /// The computational basis state `|j⟩⟨j|`.
    pub fn basis_state(d: usize, j: usize) -> Self {
        assert!(j < d, "basis index {j} out of range for dimension {d}");
        let mut entries = CMatrix::zeros(d, d);
        entries[(j, j)] = Complex64::new(1.0, 0.0);
        Self { entries }
    }

    /// The pure state `|ψ⟩⟨ψ|` for a nonzero amplitude vector, normalized
    /// here.
    pub fn pure(amplitudes: &DVector<Complex64>) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm <= 1e-12 {
            return Err(Error::InvalidInput(
                "pure state needs a nonzero amplitude vector".to_string(),
            ));
        }
        let psi = amplitudes / Complex64::new(norm, 0.0);
        Ok(Self {
            entries: &psi * psi.adjoint(),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.entries
    }

    /// `Tr ρ²`, real for Hermitian ρ.
    pub fn purity(&self) -> f64 {
        trace(&(&self.entries * &self.entries)).re
    }
}

/// The d² phase-point operators for an odd prime dimension, indexed by
/// `ξ = (q, p)` at position `q·d + p`.
#[derive(Debug, Clone)]
pub struct PhasePointBasis {
    dim: usize,
    operators: Vec<CMatrix>,
}

fn is_odd_prime(d: usize) -> bool {
    if d < 3 || d.is_multiple_of(2) {
        return false;
    }
    let mut k = 3;
    while k * k <= d {
        if d.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

/// Builds the phase-point operators `A_(q,p) = D(q,p)·A_0·D(q,p)†` for an
/// odd prime `d`. Rejects even and composite dimensions (the construction
/// needs `2⁻¹ mod d` and orthogonality needs primality).
pub fn build_phase_point_basis(d: usize) -> Result<PhasePointBasis> {
    if !is_odd_prime(d) {
        return Err(Error::UnsupportedDimension(d));
    }
    // d-th roots of unity, tabulated once
    let omega: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / d as f64))
        .collect();
    // inverse of 2 mod d: (d+1)/2, since 2·(d+1)/2 = d + 1 ≡ 1 (mod d)
    let two_inv = d.div_ceil(2);

    // parity: A_0 |j⟩ = |-j mod d⟩
    let mut parity = CMatrix::zeros(d, d);
    for j in 0..d {
        parity[((d - j) % d, j)] = Complex64::new(1.0, 0.0);
    }

    let mut operators = Vec::with_capacity(d * d);
    for q in 0..d {
        for p in 0..d {
            // D(q,p)[i][j] = ω^{2⁻¹qp + pj} δ_{i, j+q}
            let phase_base = (two_inv * q * p) % d;
            let mut displacement = CMatrix::zeros(d, d);
            for j in 0..d {
                displacement[((j + q) % d, j)] = omega[(phase_base + p * j) % d];
            }
            operators.push(&displacement * &parity * displacement.adjoint());
        }
    }
    Ok(PhasePointBasis { dim: d, operators })
}

impl PhasePointBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of phase points, `d²`.
    pub fn n_points(&self) -> usize {
        self.operators.len()
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn index(&self, q: usize, p: usize) -> usize {
        q * self.dim + p
    }

    pub fn point(&self, index: usize) -> (usize, usize) {
        (index / self.dim, index % self.dim)
    }

    pub fn operator(&self, q: usize, p: usize) -> &CMatrix {
        &self.operators[self.index(q, p)]
    }
}

/// A discrete Wigner function: d² real values summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerFunction {
    dim: usize,
    values: Vec<f64>,
}

impl WignerFunction {
    /// Validates the length (`d²`) and normalization (`Σ W_ξ = 1` within
    /// 1e-10).
    pub fn new(dim: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: values.len(),
            });
        }
        let total = neumaier_sum(values.iter().copied());
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidInput(format!(
                "Wigner values sum to {total}, not 1"
            )));
        }
        Ok(Self { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, q: usize, p: usize) -> f64 {
        self.values[q * self.dim + p]
    }

    pub fn sum(&self) -> f64 {
        neumaier_sum(self.values.iter().copied())
    }

    /// The Wigner function as a signed measure, ready for any entropy in
    /// [`crate::entropy`]. Its weight is the 1-up-to-roundoff normalization.
    pub fn as_measure(&self) -> SignedMeasure {
        SignedMeasure::from_values_unchecked(self.values.clone())
    }
}

/// `W_ξ = Tr[A_ξ ρ]/d`. The normalization makes `Σ W_ξ = Tr ρ = 1`.
pub fn wigner_from_density(rho: &DensityMatrix, basis: &PhasePointBasis) -> Result<WignerFunction> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            actual: rho.dim(),
        });
    }
    let d = basis.dim() as f64;
    let mut values = Vec::with_capacity(basis.n_points());
    for a in basis.operators() {
        let w = trace(&(a * rho.matrix())) / d;
        // analytically real: A_ξ and ρ are both Hermitian
        assert!(
            w.im.abs() <= HERMITICITY_TOL,
            "imaginary residue {:e} on a Wigner value",
            w.im
        );
        values.push(w.re);
    }
    Ok(WignerFunction {
        dim: basis.dim(),
        values,
    })
}

/// `ρ = Σ_ξ W_ξ A_ξ`, the inverse of [`wigner_from_density`].
///
/// The result is Hermitian with unit trace whenever `Σ W_ξ = 1`, but not
/// necessarily positive: a one-hot Wigner function reconstructs a bare
/// phase-point operator. Positivity is therefore not enforced here.
pub fn density_from_wigner(w: &WignerFunction, basis: &PhasePointBasis) -> Result<DensityMatrix> {
    if w.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            actual: w.dim(),
        });
    }
    let d = basis.dim();
    let mut entries = CMatrix::zeros(d, d);
    for (value, a) in w.values().iter().zip(basis.operators()) {
        entries += a * Complex64::new(*value, 0.0);
    }
    DensityMatrix::hermitian_unit_trace(entries)
}

/// The real skew-symmetric generator of Moyal-bracket evolution,
/// `Ẇ = L W`, expressed in phase-point coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian {
    dim: usize,
    matrix: DMatrix<f64>,
}

impl Liouvillian {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_points(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// `max |Lᵀ + L|`, asserted ≤ [`IMAG_RESIDUE_TOL`] at construction.
    pub fn skew_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.matrix.nrows() {
            for j in 0..=i {
                worst = worst.max((self.matrix[(i, j)] + self.matrix[(j, i)]).abs());
            }
        }
        worst
    }
}

/// Builds `L_ξη = Tr[A_ξ · (-i)[H, A_η]]/d` for a Hermitian Hamiltonian
/// (ħ = 1).
///
/// Writing the entry as `(-i/d)·Tr[H·[A_η, A_ξ]]` shows `L` is real and
/// skew-symmetric whenever `H` and all `A_ξ` are Hermitian; both residues
/// are asserted after assembly rather than assumed.
pub fn build_liouvillian(h: &CMatrix, basis: &PhasePointBasis) -> Result<Liouvillian> {
    let d = basis.dim();
    if h.nrows() != d || h.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: h.nrows().max(h.ncols()),
        });
    }
    require_hermitian(h)?;

    let n = basis.n_points();
    let minus_i = Complex64::new(0.0, -1.0);
    let scale = Complex64::new(1.0 / d as f64, 0.0);
    let mut matrix = DMatrix::zeros(n, n);
    let mut worst_imag: f64 = 0.0;
    for (eta, a_eta) in basis.operators().iter().enumerate() {
        let commutator = (h * a_eta - a_eta * h) * minus_i;
        for (xi, a_xi) in basis.operators().iter().enumerate() {
            let entry = trace(&(a_xi * &commutator)) * scale;
            worst_imag = worst_imag.max(entry.im.abs());
            matrix[(xi, eta)] = entry.re;
        }
    }
    let liouvillian = Liouvillian { dim: d, matrix };
    assert!(
        worst_imag <= IMAG_RESIDUE_TOL,
        "imaginary residue {worst_imag:e} while assembling the Liouvillian"
    );
    let skew = liouvillian.skew_residual();
    assert!(
        skew <= IMAG_RESIDUE_TOL,
        "skew-symmetry residual {skew:e} on the Liouvillian"
    );
    Ok(liouvillian)
}

/// Fixed-step RK4 integration of `Ẇ = L W`, recording every step.
pub fn evolve_wigner(
    w0: &WignerFunction,
    l: &Liouvillian,
    t_end: f64,
    dt: f64,
) -> Result<Vec<(f64, WignerFunction)>> {
    if w0.values().len() != l.n_points() {
        return Err(Error::DimensionMismatch {
            expected: l.n_points(),
            actual: w0.values().len(),
        });
    }
    if !(dt > 0.0 && dt.is_finite()) || !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "need dt > 0 and t_end >= 0, got dt = {dt}, t_end = {t_end}"
        )));
    }
    let dim = w0.dim();
    Ok(
        rk4_linear(l.matrix(), DVector::from_column_slice(w0.values()), t_end, dt)
            .into_iter()
            .map(|(t, y)| {
                (
                    t,
                    WignerFunction {
                        dim,
                        values: y.iter().copied().collect(),
                    },
                )
            })
            .collect(),
    )
}

/// The quadratic moment `V = Σ_ξ W_ξ²`, conserved under Liouvillian flow.
/// Equals `Tr ρ²/d` when `W` represents ρ.
pub fn quadratic_moment(w: &WignerFunction) -> f64 {
    neumaier_sum(w.values().iter().map(|v| v * v))
}

/// Exact unitary evolution `ρ(t) = e^{-iHt} ρ e^{iHt}` via the spectral
/// decomposition of `H`. Independent oracle for [`evolve_wigner`].
pub fn unitary_evolve_exact(rho: &DensityMatrix, h: &CMatrix, t: f64) -> Result<DensityMatrix> {
    if h.nrows() != rho.dim() || h.ncols() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: h.nrows().max(h.ncols()),
        });
    }
    require_hermitian(h)?;
    let eigen = h.clone().symmetric_eigen();
    let phases = DVector::from_iterator(
        rho.dim(),
        eigen
            .eigenvalues
            .iter()
            .map(|&e| Complex64::from_polar(1.0, -e * t)),
    );
    let u = &eigen.eigenvectors * CMatrix::from_diagonal(&phases) * eigen.eigenvectors.adjoint();
    let evolved = &u * rho.matrix() * u.adjoint();
    DensityMatrix::new(evolved)
}
