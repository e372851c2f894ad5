//! Factor a graph Laplacian as MᵀM and measure how far M is from an
//! isometry on sparse vectors.

use sparse_cheeger::graph::{gen_random_regular, VertexSet};
use sparse_cheeger::pipeline::reduce;
use sparse_cheeger::rip::{indicator_identity_check, is_rip, ric_exact, ric_montecarlo, RipMode};
use sparse_cheeger::spectral::laplacian;

fn main() -> sparse_cheeger::Result<()> {
    let g = gen_random_regular(12, 4, 9)?;
    let m = reduce(&g)?;
    println!("‖MᵀM − L‖∞ = {:.1e}", m.gram_residual(laplacian(&g).matrix()));

    for k in 1..=4 {
        let exact = ric_exact(&m, k)?;
        let mc = ric_montecarlo(&m, k, 200, 1)?;
        println!(
            "δ_{k} = {:.4} (worst support {}, {:?} side); sampled lower bound {:.4}",
            exact.value, exact.witness_support, exact.witness_side, mc.value
        );
    }

    let decision = is_rip(&m, 3, 0.5, RipMode::Exact)?;
    println!("(3, 0.5)-RIP: {:?}", decision.verdict);

    // On a 0/1 indicator the squared gain is the set's expansion.
    let s = VertexSet::new([0, 1, 2], g.n())?;
    let (gain_sq, phi) = indicator_identity_check(&m, &g, &s)?;
    println!("S = {s}: ‖Mx‖²/‖x‖² = {gain_sq:.6}, φ(S) = {phi:.6}");
    Ok(())
}
