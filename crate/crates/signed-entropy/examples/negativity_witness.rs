//! A measure whose signed Shannon entropy is comfortably positive still
//! hides a negative component; quantifying over the Rényi order exposes it.
//!
//! Run with: cargo run --example negativity_witness

use signed_entropy::analysis::negativity_witness;
use signed_entropy::entropy::{signed_renyi, signed_shannon};
use signed_entropy::{Result, SignedMeasure};

fn main() -> Result<()> {
    // (2, -1/8 x8): weight 1, signed Shannon entropy log2(8) - 2 = +1
    let mut values = vec![2.0];
    values.extend(std::iter::repeat_n(-0.125, 8));
    let p = SignedMeasure::new(values)?;

    println!("measure: {:?}", p.values());
    println!("signed Shannon entropy: {} bits (no hint of negativity)", signed_shannon(&p).bits);

    let witness = negativity_witness(&p)?;
    println!(
        "witness: H at order {} is {:.4} bits < 0, certifying a negative component",
        witness.alpha.unwrap(),
        witness.entropy_bits.unwrap()
    );

    // near order 1 the entropy scales like -(1/eps)·log2(3)
    for eps in [0.01, 0.001] {
        let h = signed_renyi(&p, 1.0 + eps)?.bits;
        println!(
            "  order 1 + {eps:<6}: H = {h:10.2} bits (approx -(1/{eps})·log2(3) = {:.2})",
            -(1.0 / eps) * 3f64.log2()
        );
    }

    // non-negative measures never witness
    let classical = SignedMeasure::new(vec![0.5, 0.3, 0.2])?;
    let verdict = negativity_witness(&classical)?;
    println!(
        "non-negative measure {:?}: witness found = {}",
        classical.values(),
        verdict.found
    );
    Ok(())
}
