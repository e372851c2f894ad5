//! Sparse Rayleigh quotients: the smallest Laplacian eigenvalue reachable by
//! a vector with at most k non-zeros, and how it sits between the spectrum
//! and the small-set expansion.

use sparse_cheeger::graph::{gen_random_regular, min_expansion_small_sets};
use sparse_cheeger::pipeline::CheegerChain;
use sparse_cheeger::spectral::{graph_rayleigh, lambda_two, laplacian, sparse_lambda_exact, sparse_lambda_max_exact};

fn main() -> sparse_cheeger::Result<()> {
    let g = gen_random_regular(12, 3, 1)?;
    let l = laplacian(&g);
    println!("spectrum: {:.4?}", l.eigenvalues());
    println!("λ₂ = {:.4}", lambda_two(&l));

    println!(" k   λ_k      Λ_k      φ_k      √(λ(2−λ))");
    for k in 1..=g.n() / 2 {
        let low = sparse_lambda_exact(&l, k)?;
        let high = sparse_lambda_max_exact(&l, k)?;
        let phi = min_expansion_small_sets(&g, k)?;
        let chain = CheegerChain::new(low.value, phi.expansion);
        assert!(chain.holds());
        println!(
            "{k:>2}  {:.4}   {:.4}   {:.4}   {:.4}",
            low.value, high.value, phi.expansion, chain.upper
        );
        // The witness is a unit vector on the reported support.
        assert!((graph_rayleigh(&g, &low.witness)? - low.value).abs() < 1e-9);
    }
    Ok(())
}
