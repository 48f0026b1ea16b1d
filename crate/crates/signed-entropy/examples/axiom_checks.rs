//! The axioms behind the signed Rényi family, checked numerically:
//! calibration, the singleton law, extensivity, and the mean-value
//! property, plus the counterexamples that reject every alternative kernel.
//!
//! Run with: cargo run --example axiom_checks

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_entropy::axioms::{
    check_calibration, check_extensivity, check_mean_value, check_singleton_continuity,
    counterexample_report,
};
use signed_entropy::{Result, SignedMeasure};

fn random_measure(rng: &mut ChaCha8Rng) -> SignedMeasure {
    loop {
        let n = rng.random_range(1..=5usize);
        let values: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        if values.iter().sum::<f64>().abs() > 0.05 {
            return SignedMeasure::new(values).expect("sampler keeps weights valid");
        }
    }
}

fn main() -> Result<()> {
    println!("calibration H((1/2)) = 1: {}", check_calibration());

    let grid: Vec<f64> = (-6..=6)
        .map(|k| 10f64.powi(k))
        .flat_map(|p| [-p, p])
        .collect();
    let mut sorted = grid;
    sorted.sort_by(f64::total_cmp);
    println!(
        "singleton law H((p)) = -log2|p| on a log grid: {}",
        check_singleton_continuity(&sorted)?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut extensivity_passes = 0;
    let mut mean_value_passes = 0;
    let trials = 200;
    for _ in 0..trials {
        let p = random_measure(&mut rng);
        let q = random_measure(&mut rng);
        let alpha = [0.5, 2.0, 3.0][rng.random_range(0..3)];
        if check_extensivity(&p, &q, alpha, 1e-10)? {
            extensivity_passes += 1;
        }
        // flip q so the pair shares a weight sign, as the mean requires
        let q = if p.weight().signum() == q.weight().signum() {
            q
        } else {
            SignedMeasure::new(q.values().iter().map(|v| -v).collect())?
        };
        if check_mean_value(&p, &q, alpha, 1e-10)? {
            mean_value_passes += 1;
        }
    }
    println!("extensivity batch: {extensivity_passes}/{trials} at 1e-10");
    println!("mean-value batch:  {mean_value_passes}/{trials} at 1e-10");

    println!("\nkernel counterexamples on P = (1/2, 1/2), Q = (2, -1):");
    for (e_over_d, alpha) in [(0.0, 2.0), (0.5, 2.0), (0.5, 0.5)] {
        let report = counterexample_report(e_over_d, alpha)?;
        println!(
            "  e/d = {e_over_d:<4} alpha = {alpha:<4} linear kernel violates extensivity: {} (gap {:.3} bits), \
             exponential kernel violates: {} (gap {:.3} bits)",
            report.linear_violates,
            report.linear_gap_bits,
            report.exponential_violates,
            report.exponential_gap_bits,
        );
    }
    println!("\nonly the exponential kernel with zero offset survives, and that is");
    println!("exactly the signed Rényi family.");
    Ok(())
}
