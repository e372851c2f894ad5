//! With t² uniform on [0, 1], vertex i lands in S_t with probability x_i².
//! Compares the closed-form expectations with a quick simulation and checks
//! the edge-form identities.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_cheeger::graph::gen_random_regular;
use sparse_cheeger::rounding::{edge_forms, expected_cut_stats, normalize_for_rounding, sample_threshold_set};

fn main() -> sparse_cheeger::Result<()> {
    let g = gen_random_regular(10, 3, 5)?;
    let x = normalize_for_rounding(&[0.9, -0.6, 0.3, 0.0, 0.2, 0.0, 0.0, -0.45, 0.0, 0.1])?;
    let exact = expected_cut_stats(&g, &x)?;

    let trials = 50_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut size, mut boundary) = (0.0, 0.0);
    for _ in 0..trials {
        let s = sample_threshold_set(&x, &mut rng)?;
        size += s.len() as f64;
        boundary += g.edges().iter().filter(|&&(u, v)| s.contains(u) != s.contains(v)).count() as f64;
    }
    println!("E|S_t|  exact {:.4}  simulated {:.4}", exact.size, size / trials as f64);
    println!("E|∂S_t| exact {:.4}  simulated {:.4}", exact.boundary, boundary / trials as f64);

    let f = edge_forms(&g, &x)?;
    println!(
        "Σ(x_u+x_v)²/(d‖x‖²) + Σ(x_u−x_v)²/(d‖x‖²) = {:.3} + {:.3} = {:.3}",
        f.normalized_plus(),
        f.normalized_minus(),
        f.normalized_plus() + f.normalized_minus()
    );
    println!("E|∂S_t| ≤ {:.4} by Cauchy–Schwarz", f.boundary_cap());
    Ok(())
}
