//! Checks λ_k ≤ φ_k ≤ √(λ_k(2−λ_k)) exhaustively on a batch of small random
//! regular graphs.

use sparse_cheeger::pipeline::{verify_cheeger_suite, KRule, SuiteConfig};

fn main() -> sparse_cheeger::Result<()> {
    let cfg = SuiteConfig {
        count: 40,
        n_min: 8,
        n_max: 12,
        degrees: vec![3, 4],
        k_rule: KRule::Both,
        seed: 1,
    };
    let r = verify_cheeger_suite(&cfg)?;
    println!("{}/{} cases pass over {} graphs", r.passes, r.cases, r.instances);
    println!("smallest slack: lower {:.3e}, upper {:.3e}", r.min_lower_slack, r.min_upper_slack);
    println!("largest gain over the classical bound at k = n/2: {:.4}", r.max_classical_gap);
    for f in &r.failures {
        println!("failure: {:?}", f.case);
    }
    Ok(())
}
