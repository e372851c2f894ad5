//! Rounding a sparse vector to a cut: a deterministic sweep over level sets
//! and a single randomized threshold.

use sparse_cheeger::graph::{expansion, gen_random_regular};
use sparse_cheeger::rounding::{normalize_for_rounding, randomized_threshold, sweep_cut};
use sparse_cheeger::spectral::{laplacian, sparse_lambda_exact};

fn main() -> sparse_cheeger::Result<()> {
    let g = gen_random_regular(14, 4, 3)?;

    // Start from the best 5-sparse vector; any vector works.
    let x = sparse_lambda_exact(&laplacian(&g), 5)?.witness;
    let sweep = sweep_cut(&g, &x)?;
    println!(
        "sweep tried {} thresholds: best {} with φ = {:.4}",
        sweep.thresholds_tried, sweep.best.set, sweep.best.expansion
    );
    println!("Rayleigh quotient {:.4}, bound √(λ(2−λ)) = {:.4}", sweep.lambda_in, sweep.bound);

    // Thresholds act on |x| scaled so its largest entry is 1.
    let y = normalize_for_rounding(&x)?;
    for seed in 0..3 {
        let s = randomized_threshold(&y, seed)?;
        if s.is_empty() || s.len() == g.n() {
            println!("seed {seed}: empty or full set");
            continue;
        }
        println!("seed {seed}: {s} with φ = {:.4}", expansion(&g, &s)?.expansion);
    }
    Ok(())
}
