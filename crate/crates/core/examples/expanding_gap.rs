//! On graphs where every small set expands, the Laplacian factor is close
//! to an isometry on sparse vectors.

use sparse_cheeger::pipeline::gap_experiment_case2;

fn main() -> sparse_cheeger::Result<()> {
    for (n, d, k, eps) in [(12, 4, 2, 0.5), (14, 4, 3, 0.6), (10, 3, 1, 0.4)] {
        let r = gap_experiment_case2(n, d, k, eps, 11)?;
        println!(
            "n={n} d={d} k={k} ε={eps}: φ_k = {:.4}, λ_k = {:.4}, δ_k = {:.4}, ε^0.4 = {:.4}, premise {} → RIP {}",
            r.phi_k.expansion, r.lambda_k, r.ric.value, r.delta, r.premise_holds, r.rip_holds
        );
    }
    Ok(())
}
