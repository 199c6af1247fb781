//! Acceptance run: one line per criterion, non-zero exit if any fails.

use gapkit::expander::{build_complete, build_gabber_galil, power, select_power_for_alpha};
use gapkit::rational::parse_rational;
use gapkit::spectral::second_eigenvalue;
use gapkit_cli::args::{AmplifyArgs, FamilyArg, Suite};
use gapkit_cli::suites::{run_suite, SuiteConfig, ALL_SUITES};
use gapkit_cli::{commands, gen, Status};
use gapkit::instances::{emit_graph, Graph};
use rand::SeedableRng;
use serde_json::Value;
use std::path::PathBuf;
use std::time::{Duration, Instant};

type Check = Result<String, String>;
type Criterion = (&'static str, u64, Box<dyn Fn() -> Check>);

fn suite(s: Suite, trials: usize, max_n: usize) -> Check {
    let mut c = SuiteConfig::defaults(s, 2024);
    c.trials = trials;
    c.max_n = max_n;
    let r = run_suite(s, &c).map_err(|e| e.to_string())?;
    if r.completed != trials {
        return Err(format!("only {} of {trials} trials ran", r.completed));
    }
    match r.mismatches.first() {
        None => Ok(format!("{trials} trials, 0 mismatches")),
        Some(m) => Err(format!("{} mismatches, first at trial {}: {}", r.mismatches.len(), m.trial, m.detail)),
    }
}

fn gg_bound() -> Check {
    let bound = 5.0 * 2f64.sqrt() + 1e-6;
    let mut worst: f64 = 0.0;
    for k in 2..=12 {
        let lam = second_eigenvalue(&build_gabber_galil(k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.lambda_hat;
        if lam > bound {
            return Err(format!("k={k}: lambda_hat {lam} > {bound}"));
        }
        worst = worst.max(lam);
    }
    Ok(format!("max lambda_hat {worst:.6} <= 5*sqrt(2)"))
}

fn powering() -> Check {
    let mut worst: f64 = 0.0;
    for (name, h) in [("GG_3", build_gabber_galil(3).unwrap()), ("K_5", build_complete(5).unwrap())] {
        let lam = second_eigenvalue(&h).map_err(|e| e.to_string())?.lambda_hat;
        for p in 1..=3u32 {
            let hp = power(&h, p).map_err(|e| e.to_string())?;
            let lp = second_eigenvalue(&hp).map_err(|e| e.to_string())?.lambda_hat;
            let rel = (lp - lam.powi(p as i32)).abs() / hp.degree() as f64;
            if rel > 1e-6 {
                return Err(format!("{name}^{p}: |diff|/d^p = {rel:e}"));
            }
            worst = worst.max(rel);
        }
    }
    Ok(format!("max |diff|/d^p = {worst:.2e}"))
}

fn power_selection() -> Check {
    let got: Vec<u32> = ["0.9", "0.5", "0.1"]
        .iter()
        .map(|a| select_power_for_alpha(&parse_rational(a).unwrap()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if got == [1, 6, 19] {
        Ok("p = 1, 6, 19 (exact rational comparison)".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn pipeline() -> Check {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-amplify");
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let inputs = [("planted", Graph::complete(12)), ("triangle-free", gen::triangle_free(&mut rng, 12, 0.5))];
    let mut lines = Vec::new();
    for (kind, g) in &inputs {
        let path = dir.join(format!("{kind}.dimacs"));
        std::fs::write(&path, emit_graph(g)).map_err(|e| e.to_string())?;
        for ratio in ["0.8", "0.5"] {
            let args = AmplifyArgs {
                input: path.clone(),
                a: "1".into(),
                b: "1/2".into(),
                ratio: ratio.into(),
                family: FamilyArg::Complete,
                check: true,
                out: None,
                walks: None,
            };
            let out = commands::amplify(&args).map_err(|e| e.to_string())?;
            let cert: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
            let t = cert["params"]["t"].as_u64().unwrap_or(99);
            let check = &cert["check"];
            let applied = check["upper_applies"] == true || check["lower_applies"] == true;
            let confirmed = (check["upper_applies"] != true || check["upper_holds"] == true)
                && (check["lower_applies"] != true || check["lower_holds"] == true);
            if out.status != Status::Ok || cert["ratio_ok"] != true || t > 2 || !applied || !confirmed {
                return Err(format!("{kind} r={ratio}: {}", out.stdout));
            }
            lines.push(format!("{kind}/r={ratio}: t={t} b_r/a_r={}", cert["b_r_over_a_r"].as_str().unwrap_or("?")));
        }
    }
    Ok(lines.join("; "))
}

fn determinism() -> Check {
    for &s in &ALL_SUITES {
        let c = SuiteConfig::defaults(s, 99);
        let a = run_suite(s, &c).map_err(|e| e.to_string())?.to_json();
        let b = run_suite(s, &c).map_err(|e| e.to_string())?.to_json();
        if a != b {
            return Err(format!("suite {s:?} differs between runs"));
        }
    }
    Ok(format!("{} suites byte-identical across two runs", ALL_SUITES.len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("GG spectral bound", 30, Box::new(gg_bound)),
        ("Powering spectrum", 10, Box::new(powering)),
        ("Expander power selection", 1, Box::new(power_selection)),
        ("Walk-product clique sandwich", 300, Box::new(|| suite(Suite::WalkSandwich, 50, 12))),
        ("Amplification pipeline", 120, Box::new(pipeline)),
        ("Grouping independence identity", 120, Box::new(|| suite(Suite::GroupingAlpha, 100, 8))),
        ("Grouping count bound", 60, Box::new(|| suite(Suite::GroupingBound, 50, 8))),
        ("DS gadget", 180, Box::new(|| suite(Suite::DsGadget, 200, 6))),
        ("Set cover transfer", 60, Box::new(|| suite(Suite::Setcover, 100, 12))),
        ("Two-copy CB", 120, Box::new(|| suite(Suite::Cb, 100, 7))),
        ("3LIN to VC", 60, Box::new(|| suite(Suite::Lin3Vc, 100, 8))),
        ("VC to MinSAT", 120, Box::new(|| suite(Suite::Minsat, 100, 8))),
        ("Subset-scan IS", 60, Box::new(|| suite(Suite::SubexpApprox, 100, 12))),
        ("Determinism", 600, Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (pass, detail) = match result {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(d) => (false, d),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} {:>2}. {name}: {detail} [{:.2}s, limit {limit}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
