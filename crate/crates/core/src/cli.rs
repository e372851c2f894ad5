//! Command-line front end. Each subcommand prints one JSON report to stdout.
//! Exit codes: 0 pass, 1 failure or violation, 2 usage or input error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{
    expansion, gen_planted_cut, gen_random_regular, min_expansion_small_sets, read_graph, write_graph, VertexSet,
};
use crate::pipeline::report::{to_json, value, Report};
use crate::pipeline::{
    derive_params, gap_experiment_case1, gap_experiment_case2, read_vector, reduce, verify_cheeger_suite, KRule,
    SuiteConfig,
};
use crate::rip::{is_rip, read_matrix, ric_exact, ric_montecarlo, write_matrix, RipMode, RipVerdict};
use crate::rounding::sweep_cut;
use crate::spectral::{lambda_two, laplacian, sparse_lambda_exact};

#[derive(Debug, Parser)]
#[command(name = "sparse-cheeger", version, about = "Sparse Cheeger rounding and RIP certification experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random regular graph, optionally with a planted cut.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, requires = "planted_c")]
        planted_s: Option<usize>,
        #[arg(long, requires = "planted_s")]
        planted_c: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Boundary and expansion of a vertex set.
    Expansion {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Exact minimum expansion over sets of size at most k.
    Phi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exact sparse eigenvalue of order k.
    SparseLambda {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Threshold sweep of a vector file.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        vec: PathBuf,
    },
    /// Factor the normalized Laplacian into a sensing matrix.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Restricted isometry constant of a matrix file.
    Rip {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, conflicts_with = "mc")]
        exact: bool,
        #[arg(long, requires = "trials")]
        mc: bool,
        #[arg(long, requires = "mc")]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reduction parameters for eps, C and n.
    Params {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        n: usize,
    },
    /// Gap experiment: case 1 (planted cut) or case 2 (random regular).
    Gap {
        #[arg(long)]
        case: GapCase,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check the sparse Cheeger chain on random regular graphs.
    VerifyCheeger {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        d: Vec<usize>,
        #[arg(long, value_enum, default_value_t = KRuleArg::Both)]
        k_rule: KRuleArg,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GapCase {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KRuleArg {
    Quarter,
    Half,
    Both,
}

impl From<KRuleArg> for KRule {
    fn from(k: KRuleArg) -> Self {
        match k {
            KRuleArg::Quarter => KRule::Quarter,
            KRuleArg::Half => KRule::Half,
            KRuleArg::Both => KRule::Both,
        }
    }
}

fn path_str(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn pass(b: bool) -> Value {
    json!({ "pass": b })
}

/// Runs one parsed command and returns its report.
pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Gen {
            n,
            d,
            seed,
            planted_s,
            planted_c,
            out,
        } => {
            let mut r = Report::new("gen");
            r.params = json!({ "n": n, "d": d, "planted_s": planted_s, "planted_c": planted_c });
            r.inputs = json!({ "out": path_str(out) });
            r.seed = Some(*seed);
            let (g, planted) = match (planted_s, planted_c) {
                (Some(s), Some(c)) => {
                    let (g, set) = gen_planted_cut(*n, *d, *s, *c, *seed)?;
                    let cut = expansion(&g, &set)?;
                    (g, Some(cut))
                }
                _ => (gen_random_regular(*n, *d, *seed)?, None),
            };
            write_graph(&g, out)?;
            r.results = json!({ "n": g.n(), "d": g.d(), "m": g.edges().len(), "planted": planted.map(|c| value(&c)) });
            r.verdict = pass(true);
            Ok(r)
        }
        Command::Expansion { graph, set } => {
            let g = read_graph(graph)?;
            let s = VertexSet::new(set.iter().copied(), g.n())?;
            let cut = expansion(&g, &s)?;
            let mut r = Report::new("expansion");
            r.inputs = json!({ "graph": path_str(graph), "set": s });
            r.results = value(&cut);
            r.verdict = pass(true);
            Ok(r)
        }
        Command::Phi { graph, k } => {
            let g = read_graph(graph)?;
            let cut = min_expansion_small_sets(&g, *k)?;
            let mut r = Report::new("phi");
            r.params = json!({ "k": k });
            r.inputs = json!({ "graph": path_str(graph) });
            r.results = value(&cut);
            r.verdict = pass(true);
            Ok(r)
        }
        Command::SparseLambda { graph, k } => {
            let g = read_graph(graph)?;
            let l = laplacian(&g);
            let res = sparse_lambda_exact(&l, *k)?;
            let mut r = Report::new("sparse-lambda");
            r.params = json!({ "k": k });
            r.inputs = json!({ "graph": path_str(graph) });
            r.results = json!({ "sparse": value(&res), "lambda_two": lambda_two(&l) });
            r.verdict = pass(true);
            Ok(r)
        }
        Command::Sweep { graph, vec } => {
            let g = read_graph(graph)?;
            let x = read_vector(vec)?;
            let res = sweep_cut(&g, &x)?;
            let holds = res.within_bound(1e-9);
            let mut r = Report::new("sweep");
            r.inputs = json!({ "graph": path_str(graph), "vec": path_str(vec) });
            r.results = value(&res);
            r.verdict = json!({
                "pass": holds || !res.guarantee_applicable,
                "guarantee_applicable": res.guarantee_applicable,
                "within_bound": holds,
            });
            Ok(r)
        }
        Command::Reduce { graph, out } => {
            let g = read_graph(graph)?;
            let m = reduce(&g)?;
            write_matrix(&m, out)?;
            let residual = m.gram_residual(laplacian(&g).matrix());
            let mut r = Report::new("reduce");
            r.inputs = json!({ "graph": path_str(graph), "out": path_str(out) });
            r.results = json!({ "rows": m.rows(), "cols": m.cols(), "residual": residual });
            r.verdict = pass(residual <= 1e-10);
            Ok(r)
        }
        Command::Rip {
            matrix,
            k,
            delta,
            exact: _,
            mc,
            trials,
            seed,
        } => {
            let m = read_matrix(matrix)?;
            let mode = match (mc, trials) {
                (true, Some(t)) => RipMode::MonteCarlo { trials: *t, seed: *seed },
                _ => RipMode::Exact,
            };
            let mut r = Report::new("rip");
            r.inputs = json!({ "matrix": path_str(matrix) });
            r.params = json!({
                "k": k,
                "delta": delta,
                "mode": if *mc { "mc" } else { "exact" },
                "trials": trials,
            });
            if let RipMode::MonteCarlo { .. } = mode {
                r.seed = Some(*seed);
            }
            match delta {
                Some(delta) => {
                    let dec = is_rip(&m, *k, *delta, mode)?;
                    r.results = value(&dec);
                    r.verdict = json!({
                        "pass": dec.verdict != RipVerdict::Violated,
                        "certified": dec.is_certified(),
                        "violated": dec.verdict == RipVerdict::Violated,
                    });
                }
                None => {
                    let est = match mode {
                        RipMode::Exact => ric_exact(&m, *k)?,
                        RipMode::MonteCarlo { trials, seed } => ric_montecarlo(&m, *k, trials, seed)?,
                    };
                    r.results = value(&est);
                    r.verdict = pass(true);
                }
            }
            Ok(r)
        }
        Command::Params { eps, c, n } => {
            let p = derive_params(*eps, *c, *n)?;
            let mut r = Report::new("params");
            r.params = json!({ "eps": eps, "c": c, "n": n });
            r.results = value(&p);
            r.verdict = json!({
                "pass": p.tail_check && p.invariants_hold(),
                "tail_check": p.tail_check,
                "gamma_over_beta_is_eps_squared": p.gamma_beta_identity_holds(),
                "loose_window_check": p.loose_window_check,
                "tail_inequality": "T_{1-eps/2}(beta)/beta <= beta^{eps/4}",
            });
            Ok(r)
        }
        Command::Gap {
            case,
            n,
            d,
            k,
            eps,
            s,
            c,
            seed,
            json: out,
        } => {
            let mut r = Report::new("gap");
            r.seed = Some(*seed);
            r.inputs = json!({ "json": out.as_deref().map(path_str) });
            match case {
                GapCase::One => {
                    let (Some(s), Some(c)) = (s, c) else {
                        return Err(Error::Parameter("case 1 needs --s and --c".into()));
                    };
                    let order = k.unwrap_or(*s);
                    if order < *s || *s == 0 {
                        return Err(Error::Parameter(format!("--k={order} must be at least --s={s}")));
                    }
                    let ratio = order as f64 / *s as f64;
                    r.params = json!({ "case": 1, "n": n, "d": d, "k": order, "s": s, "c": c, "eps": eps, "order_ratio": ratio });
                    let rep = gap_experiment_case1(*n, *d, *s, *c, *eps, ratio, *seed)?;
                    r.verdict = json!({
                        "pass": rep.passed,
                        "bridge_holds": rep.bridge_holds,
                        "violates_far_rip": rep.violates_far_rip,
                    });
                    r.results = value(&rep);
                }
                GapCase::Two => {
                    let Some(k) = k else {
                        return Err(Error::Parameter("case 2 needs --k".into()));
                    };
                    r.params = json!({ "case": 2, "n": n, "d": d, "k": k, "eps": eps });
                    let rep = gap_experiment_case2(*n, *d, *k, *eps, *seed)?;
                    r.verdict = json!({
                        "pass": rep.passed,
                        "premise_holds": rep.premise_holds,
                        "rip_holds": rep.rip_holds,
                        "chain_holds": rep.chain.holds(),
                        "contrapositive_holds": rep.contrapositive_holds,
                    });
                    r.results = value(&rep);
                }
            }
            if let Some(out) = out {
                std::fs::write(out, r.to_json()).map_err(|source| Error::Io {
                    path: out.clone(),
                    source,
                })?;
            }
            Ok(r)
        }
        Command::VerifyCheeger {
            count,
            n_min,
            n_max,
            d,
            k_rule,
            seed,
        } => {
            let cfg = SuiteConfig {
                count: *count,
                n_min: *n_min,
                n_max: *n_max,
                degrees: d.clone(),
                k_rule: (*k_rule).into(),
                seed: *seed,
            };
            let rep = verify_cheeger_suite(&cfg)?;
            let mut r = Report::new("verify-cheeger");
            r.seed = Some(*seed);
            r.params = value(&cfg);
            r.results = value(&rep);
            r.verdict = json!({ "pass": rep.all_passed(), "passes": rep.passes, "cases": rep.cases });
            Ok(r)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Generation(_) | Error::NotPsd { .. } | Error::Factorization { .. } => 1,
        _ => 2,
    }
}

/// Parses `args`, runs the command, prints the report and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            print!("{}", to_json(&report));
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
