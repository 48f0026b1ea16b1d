//! Evaluate every entropy functional on a few signed and classical
//! measures, including the divergence of the Rényi family near order 1 on
//! negative input.
//!
//! Run with: cargo run --example entropy_basics

use signed_entropy::entropy::{
    classical_renyi, classical_shannon, renormalized_entropy, signed_renyi, signed_shannon,
};
use signed_entropy::{Result, SignedMeasure};

fn main() -> Result<()> {
    let coin = SignedMeasure::new(vec![0.5, 0.5])?;
    let signed = SignedMeasure::new(vec![2.0, -1.0])?;
    let skewed = SignedMeasure::new(vec![0.08, 0.45, 0.47])?;

    println!("fair coin (1/2, 1/2):");
    println!("  classical Shannon  = {:.6} bits", classical_shannon(&coin)?.bits);
    println!("  classical Rényi 2  = {:.6} bits", classical_renyi(&coin, 2.0)?.bits);
    println!("  signed Rényi 2     = {:.6} bits (agrees on non-negative input)", signed_renyi(&coin, 2.0)?.bits);

    println!("\nsigned measure (2, -1):");
    println!("  signed Shannon     = {:.6} bits", signed_shannon(&signed).bits);
    println!("  signed Rényi 2     = {:.6} bits", signed_renyi(&signed, 2.0)?.bits);
    println!("  renormalized       = {:.6} bits", renormalized_entropy(&signed).bits);
    for alpha in [1.01, 1.001, 0.999, 0.99] {
        println!(
            "  signed Rényi {:5} = {:12.3} bits (diverges toward order 1)",
            alpha,
            signed_renyi(&signed, alpha)?.bits
        );
    }

    println!("\nskewed probability (0.08, 0.45, 0.47):");
    println!("  signed Shannon     = {:.6} bits", signed_shannon(&skewed).bits);
    println!("  signed Rényi 2     = {:.6} bits", signed_renyi(&skewed, 2.0)?.bits);

    // extensivity: the product measure scores the sum of the factors
    let product = signed.direct_product(&signed);
    println!("\nextensivity on (2,-1) x (2,-1) = {:?}:", product.values());
    println!("  signed Rényi 2 of product = {:.6}", signed_renyi(&product, 2.0)?.bits);
    println!("  2 x signed Rényi 2        = {:.6}", 2.0 * signed_renyi(&signed, 2.0)?.bits);
    println!("  signed Shannon of product = {:.6} (breaks extensivity: 2 x {:.1} = -4)",
        signed_shannon(&product).bits,
        signed_shannon(&signed).bits,
    );
    Ok(())
}
