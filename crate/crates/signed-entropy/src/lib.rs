//! Entropy for signed measures on finite phase spaces.
//!
//! Quasi-probability representations of quantum states (discrete Wigner
//! functions among them) assign negative weights to some states, and the
//! textbook Shannon/Rényi formulas turn complex-valued on such input. This
//! crate implements the one real-valued entropy family compatible with
//! calibration, extensivity, and the mean-value property on signed
//! measures,
//!
//! ```text
//! H±_α(P) = -1/(α-1) · log2[ Σ|p_i|^α / |Σ p_i| ],
//! ```
//!
//! together with the machinery the family supports:
//!
//! - [`measure`]: the [`SignedMeasure`] value type and its direct
//!   product/sum algebra.
//! - [`entropy`]: signed Rényi, signed Shannon, renormalized, and classical
//!   entropies, plus the analytic gradient of the Rényi form.
//! - [`analysis`]: negativity witnessing via the sign of `H±_α`,
//!   majorization and Schur-concavity checks, and entropy sweeps over the
//!   order parameter.
//! - [`dynamics`]: master-equation evolution under symmetric transition-rate
//!   matrices and the H-theorem monotonicity report.
//! - [`phasespace`]: discrete Wigner functions for odd prime dimensions,
//!   the skew-symmetric Liouvillian of Moyal-bracket evolution, and its
//!   conserved quadratic moment.
//! - [`axioms`]: executable checks of the axioms that single the family
//!   out, including the mean-kernel counterexamples.
//!
//! ```
//! use signed_entropy::{SignedMeasure, entropy};
//!
//! let p = SignedMeasure::new(vec![2.0, -1.0])?;
//! let h = entropy::signed_renyi(&p, 2.0)?;
//! assert!((h.bits + 5f64.log2()).abs() < 1e-12);
//! # Ok::<(), signed_entropy::Error>(())
//! ```

pub mod analysis;
pub mod axioms;
pub mod cli;
pub mod dynamics;
pub mod entropy;
pub mod error;
pub mod measure;
mod numeric;
pub mod phasespace;

pub use analysis::{SweepCurve, SweepPoint, WitnessResult};
pub use dynamics::{MonotonicityReport, Trajectory, TransitionRateMatrix};
pub use entropy::{EntropyKind, EntropyValue};
pub use error::{Error, Result};
pub use measure::SignedMeasure;
pub use phasespace::{DensityMatrix, Liouvillian, PhasePointBasis, WignerFunction};
