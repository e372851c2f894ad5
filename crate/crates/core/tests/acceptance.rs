//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits non-zero if any fails.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{dense, petersen, random_graph, ric_bruteforce, support_deviation_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_cheeger::graph::{RegularGraph, VertexSet};
use sparse_cheeger::pipeline::{
    expanding_case, gap_experiment_case1, reduce, verify_cheeger_suite, KRule, SuiteConfig,
};
use sparse_cheeger::rip::{indicator_identity_check, ric_exact, ric_montecarlo};
use sparse_cheeger::rounding::{edge_forms, expected_cut_stats, normalize_for_rounding, sample_threshold_set, sweep_cut};
use sparse_cheeger::support::Combinations;

const TOL: f64 = 1e-9;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Random vector with `support` non-zeros; every other draw uses a coarse
/// grid of magnitudes so level sets contain ties.
fn sparse_vector(rng: &mut ChaCha8Rng, n: usize, support: usize) -> Vec<f64> {
    let coarse = rng.gen_bool(0.5);
    let mut x = vec![0.0; n];
    for i in rand::seq::index::sample(rng, n, support) {
        let mag = if coarse {
            rng.gen_range(1..=4) as f64 / 4.0
        } else {
            rng.gen_range(0.01..1.0)
        };
        x[i] = if rng.gen_bool(0.5) { mag } else { -mag };
    }
    x
}

fn ac1_sparse_cheeger_chain() -> Outcome {
    let start = Instant::now();
    let cfg = SuiteConfig {
        count: 200,
        n_min: 8,
        n_max: 14,
        degrees: vec![3, 4],
        k_rule: KRule::Both,
        seed: 2024,
    };
    let r = verify_cheeger_suite(&cfg).expect("suite runs");
    let elapsed = start.elapsed();
    let pass = r.instances >= 200 && r.all_passed() && elapsed < Duration::from_secs(120);
    outcome(
        pass,
        format!(
            "{}/{} (graph, k) cases over {} graphs; min upper slack {:.3e}, min lower slack {:.3e}; {:.1?} (< 120 s)",
            r.passes, r.cases, r.instances, r.min_upper_slack, r.min_lower_slack, elapsed
        ),
    )
}

fn ac2_rounding_guarantee() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let (mut total, mut ok) = (0, 0);
    let mut worst_slack = f64::INFINITY;
    for gseed in 0..100 {
        let g = random_graph(gseed, 8..=40, &[3, 4, 5, 6]);
        let n = g.n();
        for _ in 0..100 {
            let support = rng.gen_range(1..=n / 2);
            let x = sparse_vector(&mut rng, n, support);
            let s = sweep_cut(&g, &x).expect("sweep runs");
            total += 1;
            worst_slack = worst_slack.min(s.bound - s.best.expansion);
            if s.guarantee_applicable && s.best.expansion <= s.bound + TOL {
                ok += 1;
            }
        }
    }
    outcome(
        total >= 10_000 && ok == total,
        format!("{ok}/{total} sweeps within √(λ(2−λ)) + 1e-9; smallest slack {worst_slack:.3e}"),
    )
}

fn boundary_of(g: &RegularGraph, set: &VertexSet) -> usize {
    g.edges().iter().filter(|&&(u, v)| set.contains(u) != set.contains(v)).count()
}

fn ac3_expectation_identities() -> Outcome {
    const TRIALS: usize = 100_000;
    let mut comparisons = 0;
    let mut within = 0;
    let mut worst_z: f64 = 0.0;
    let mut conservation_err: f64 = 0.0;
    for inst in 0..20u64 {
        let g = random_graph(1000 + inst, 8..=14, &[3, 4]);
        let n = g.n();
        let mut rng = ChaCha8Rng::seed_from_u64(inst);
        let support = rng.gen_range(1..=n);
        let x = normalize_for_rounding(&sparse_vector(&mut rng, n, support)).unwrap();
        let exact = expected_cut_stats(&g, &x).unwrap();
        let forms = edge_forms(&g, &x).unwrap();
        conservation_err = conservation_err.max((forms.normalized_plus() + forms.normalized_minus() - 2.0).abs());

        let mut sums = [0.0f64; 2];
        let mut squares = [0.0f64; 2];
        for _ in 0..TRIALS {
            let s = sample_threshold_set(&x, &mut rng).unwrap();
            let obs = [s.len() as f64, boundary_of(&g, &s) as f64];
            for i in 0..2 {
                sums[i] += obs[i];
                squares[i] += obs[i] * obs[i];
            }
        }
        for (i, want) in [exact.size, exact.boundary].into_iter().enumerate() {
            let t = TRIALS as f64;
            let mean = sums[i] / t;
            let var = ((squares[i] - t * mean * mean) / (t - 1.0)).max(0.0);
            let se = (var / t).sqrt();
            comparisons += 1;
            let dev = (mean - want).abs();
            let fine = if se == 0.0 { dev <= 1e-12 } else { dev <= 3.0 * se };
            if se > 0.0 {
                worst_z = worst_z.max(dev / se);
            }
            if fine {
                within += 1;
            }
        }
    }
    outcome(
        within == comparisons && conservation_err <= 1e-10,
        format!(
            "{within}/{comparisons} Monte-Carlo means within 3 SE (max |z| {worst_z:.2}); conservation error {conservation_err:.1e}"
        ),
    )
}

fn bridge_family() -> Vec<RegularGraph> {
    let mut gs = Vec::new();
    for n in 3..=10 {
        gs.push(RegularGraph::cycle(n).unwrap());
    }
    for n in 2..=10 {
        gs.push(RegularGraph::complete(n).unwrap());
    }
    gs.push(petersen());
    for (a, b) in [(3, 3), (4, 4), (5, 5), (3, 4)] {
        let (x, y) = (RegularGraph::complete(a).unwrap(), RegularGraph::cycle(b).unwrap());
        if a == 3 {
            gs.push(x.disjoint_union(&RegularGraph::cycle(b).unwrap()).unwrap());
        } else {
            gs.push(x.disjoint_union(&RegularGraph::complete(b).unwrap()).unwrap());
        }
        gs.push(y.disjoint_union(&RegularGraph::cycle(a).unwrap()).unwrap());
    }
    for n in 4..=10 {
        for d in 2..n - 1 {
            if (n * d) % 2 == 0 {
                for seed in 0..3 {
                    gs.push(sparse_cheeger::graph::gen_random_regular(n, d, seed).unwrap());
                }
            }
        }
    }
    gs
}

fn ac4_bridge_identity() -> Outcome {
    let graphs = bridge_family();
    let (mut sets, mut ok) = (0usize, 0usize);
    let mut worst: f64 = 0.0;
    for g in &graphs {
        let m = reduce(g).unwrap();
        let n = g.n();
        for size in 1..=n / 2 {
            for members in Combinations::new(n, size) {
                let s = VertexSet::new(members, n).unwrap();
                let (ratio, phi) = indicator_identity_check(&m, g, &s).unwrap();
                sets += 1;
                worst = worst.max((ratio - phi).abs());
                if (ratio - phi).abs() <= TOL {
                    ok += 1;
                }
            }
        }
    }
    outcome(
        ok == sets,
        format!("{ok}/{sets} sets over {} graphs (n ≤ 10); max |‖Mx‖²/‖x‖² − φ| {worst:.1e}", graphs.len()),
    )
}

fn ac5_ric_oracle() -> Outcome {
    let (mut checks, mut ok) = (0, 0);
    let mut worst: f64 = 0.0;
    let mut mc_ok = true;
    for seed in 0..20 {
        let g = random_graph(500 + seed, 6..=10, &[3, 4]);
        let m = reduce(&g).unwrap();
        let dm = dense(m.matrix());
        for k in 1..=4 {
            let lib = ric_exact(&m, k).unwrap();
            let (oracle, _) = ric_bruteforce(&dm, k);
            let at_witness = support_deviation_oracle(&dm, lib.witness_support.members());
            let err = (lib.value - oracle).abs().max((at_witness - oracle).abs());
            worst = worst.max(err);
            checks += 1;
            if err <= 1e-12 {
                ok += 1;
            }
            for mc_seed in 0..3 {
                let mc = ric_montecarlo(&m, k, 30, mc_seed).unwrap();
                mc_ok &= mc.value <= lib.value;
            }
        }
    }
    outcome(
        ok == checks && mc_ok,
        format!("{ok}/{checks} (factor, k) agree with Jacobi-SVD oracle, max error {worst:.1e}; Monte-Carlo ≤ exact: {mc_ok}"),
    )
}

fn ac6_gap_case1() -> Outcome {
    let delta = 0.1f64.powf(0.4);
    let mut ok = 0;
    let mut slowest = Duration::ZERO;
    let seeds = 0..10u64;
    let count = seeds.clone().count();
    let mut worst: f64 = 0.0;
    for seed in seeds {
        let start = Instant::now();
        let r = gap_experiment_case1(40, 4, 8, 2, 0.1, 1.0, seed).unwrap();
        let took = start.elapsed();
        slowest = slowest.max(took);
        worst = worst.max((r.gain - 0.25).abs());
        if (r.gain - 0.25).abs() <= TOL
            && (r.params.delta - delta).abs() <= 1e-15
            && r.violates_far_rip
            && r.violates_delta_rip
            && r.passed
            && took < Duration::from_secs(10)
        {
            ok += 1;
        }
    }
    outcome(
        ok == count,
        format!(
            "{ok}/{count} seeds: ‖Mx_S‖/‖x_S‖ = 0.25 (max err {worst:.1e}) < δ = {delta:.6} and < 1−δ; slowest {slowest:.1?} (< 10 s)"
        ),
    )
}

fn ac7_gap_case2() -> Outcome {
    const EPS: [f64; 7] = [0.05, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9];
    let (mut instances, mut premise, mut confirmed, mut contra, mut lib_pass) = (0, 0, 0, 0, 0);
    for seed in 0..40u64 {
        let g = random_graph(3000 + seed, 8..=14, &[3, 4]);
        for k in 1..=4 {
            let r = expanding_case(&g, k, EPS[(seed as usize + k) % EPS.len()]).unwrap();
            if r.passed {
                lib_pass += 1;
            }
            let lam = r.lambda_k;
            let phi = r.phi_k.expansion;
            for eps in EPS {
                instances += 1;
                if lam >= 1.0 - (1.0 - phi * phi).max(0.0).sqrt() - TOL {
                    contra += 1;
                }
                if phi >= 1.0 - eps {
                    premise += 1;
                    if r.ric.value <= eps.powf(0.4) {
                        confirmed += 1;
                    }
                }
            }
        }
    }
    outcome(
        premise > 0 && confirmed == premise && contra == instances && lib_pass == 160,
        format!(
            "premise met in {premise}/{instances}, δ_k ≤ ε^0.4 confirmed in {confirmed}/{premise}; contrapositive bound {contra}/{instances}; case reports passed {lib_pass}/160"
        ),
    )
}

fn run_cli(args: &[&str], dir: &Path) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_sparse-cheeger"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn ac8_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("vec.txt"), "1\n0.5\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n").unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["gen", "--n", "12", "--d", "3", "--seed", "5", "--out", "g.txt"],
        vec!["gen", "--n", "40", "--d", "4", "--seed", "3", "--planted-s", "8", "--planted-c", "2", "--out", "p.txt"],
        vec!["expansion", "--graph", "g.txt", "--set", "0,1,2"],
        vec!["phi", "--graph", "g.txt", "--k", "3"],
        vec!["sparse-lambda", "--graph", "g.txt", "--k", "3"],
        vec!["sweep", "--graph", "g.txt", "--vec", "vec.txt"],
        vec!["reduce", "--graph", "g.txt", "--out", "m.txt"],
        vec!["rip", "--matrix", "m.txt", "--k", "2", "--delta", "0.5", "--exact"],
        vec!["rip", "--matrix", "m.txt", "--k", "3", "--mc", "--trials", "40", "--seed", "9"],
        vec!["params", "--eps", "0.5", "--c", "4", "--n", "1000"],
        vec!["gap", "--case", "1", "--n", "40", "--d", "4", "--s", "8", "--c", "2", "--eps", "0.1", "--seed", "3", "--json", "g1.json"],
        vec!["gap", "--case", "2", "--n", "12", "--d", "3", "--k", "3", "--eps", "0.5", "--seed", "4", "--json", "g2.json"],
        vec!["verify-cheeger", "--count", "10", "--n-min", "8", "--n-max", "12", "--d", "3,4", "--seed", "1"],
    ];
    let mut same = 0;
    let mut failed = Vec::new();
    for args in &commands {
        let a = run_cli(args, p);
        let snapshot = |name: &str| std::fs::read(p.join(name)).unwrap_or_default();
        let files_a: Vec<Vec<u8>> = ["g.txt", "m.txt", "g1.json", "g2.json"].iter().map(|f| snapshot(f)).collect();
        let b = run_cli(args, p);
        let files_b: Vec<Vec<u8>> = ["g.txt", "m.txt", "g1.json", "g2.json"].iter().map(|f| snapshot(f)).collect();
        let json_ok = serde_json::from_slice::<serde_json::Value>(&a.1).is_ok();
        if a == b && files_a == files_b && json_ok && !a.1.is_empty() && a.0 != 2 {
            same += 1;
        } else {
            failed.push(args[0]);
        }
    }
    outcome(
        failed.is_empty(),
        format!("{same}/{} commands byte-identical across reruns{}", commands.len(), if failed.is_empty() { String::new() } else { format!("; differing: {failed:?}") }),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("AC1 sparse Cheeger chain", ac1_sparse_cheeger_chain),
        ("AC2 rounding guarantee", ac2_rounding_guarantee),
        ("AC3 expectation identities", ac3_expectation_identities),
        ("AC4 bridge identity", ac4_bridge_identity),
        ("AC5 RIC oracle agreement", ac5_ric_oracle),
        ("AC6 gap experiment case 1", ac6_gap_case1),
        ("AC7 gap experiment case 2", ac7_gap_case2),
        ("AC8 CLI determinism", ac8_determinism),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let o = run();
        println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failures += 1;
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
