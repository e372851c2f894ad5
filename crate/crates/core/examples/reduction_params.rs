//! Parameters tying a small-set expansion instance to a RIP instance, for a
//! few values of ε. Tiny ε underflows β to zero, so everything is also kept
//! in log space.

use sparse_cheeger::pipeline::derive_params;

fn main() -> sparse_cheeger::Result<()> {
    println!("   ε      δ         β           ln β       k      tail ok");
    for eps in [0.5, 0.3, 0.2, 0.1, 0.01] {
        let p = derive_params(eps, 4.0, 1_000_000)?;
        println!(
            "{eps:>5}  {:.6}  {:<10.3e}  {:>9.2}  {:>5}  {}",
            p.delta, p.beta, p.ln_beta, p.k, p.tail_check
        );
        assert!(p.invariants_hold());
    }
    Ok(())
}
