//! Seeded property suites behind `gapkit verify <suite>`.
//!
//! Each trial draws its instance from [`crate::seed::trial_rng`], checks the
//! suite's identity against an independent computation and records a digest
//! of the canonical instance bytes. Reports never contain wall-clock data, so
//! identical (suite, seed, trials, max-n) runs produce identical bytes.

use crate::args::{Suite, VerifyArgs};
use crate::digest::{digest, digest_parts};
use crate::seed::{trial_rng, trial_seed};
use crate::{brute, gen, CliError, Outcome, Status};
use gapkit::expander::{build_complete, build_gabber_galil, power, RotationGraph};
use gapkit::instances::{
    emit_cnf, emit_graph, emit_lin3, parse_cnf, parse_graph, parse_lin3, Constraints, Graph, SetCoverInstance,
};
use gapkit::oracles;
use gapkit::product::{self, FamilyRequest};
use gapkit::rational::{format_rational, from_usize, rat, Rational};
use gapkit::reductions::{self, GroupingParams};
use gapkit::spectral::second_eigenvalue;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    pub timeout: Duration,
}

impl SuiteConfig {
    /// The suite's default trial count and size bound.
    pub fn defaults(suite: Suite, seed: u64) -> Self {
        let (trials, max_n) = defaults(suite);
        SuiteConfig { trials, seed, max_n, timeout: Duration::from_secs(300) }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: usize,
    /// Per-trial seed as 16 hex digits.
    pub seed: String,
    pub digest: String,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MismatchRecord {
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct Stats {
    pub min_size: usize,
    pub max_size: usize,
    pub total_size: usize,
    /// Oracle search nodes summed over all trials.
    pub explored: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub completed: usize,
    pub max_n: usize,
    pub timed_out: bool,
    pub digests: Vec<TrialRecord>,
    pub mismatches: Vec<MismatchRecord>,
    pub stats: Stats,
    pub version: String,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn status(&self) -> Status {
        if self.timed_out {
            Status::Timeout
        } else if self.mismatches.is_empty() {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

pub const ALL_SUITES: [Suite; 14] = [
    Suite::Roundtrip,
    Suite::SpectralGg,
    Suite::Powering,
    Suite::WalkSandwich,
    Suite::Amplify,
    Suite::GroupingAlpha,
    Suite::GroupingBound,
    Suite::DsGadget,
    Suite::Setcover,
    Suite::Cb,
    Suite::Lin3Vc,
    Suite::Minsat,
    Suite::SubexpApprox,
    Suite::OraclesExhaustive,
];

pub fn suite_name(suite: Suite) -> String {
    clap::ValueEnum::to_possible_value(&suite).expect("no skipped variants").get_name().to_string()
}

/// (trials, max_n) defaults.
fn defaults(suite: Suite) -> (usize, usize) {
    match suite {
        Suite::Roundtrip => (100, 12),
        Suite::SpectralGg => (11, 12),
        Suite::Powering => (6, 8),
        Suite::WalkSandwich => (50, 12),
        Suite::Amplify => (4, 12),
        Suite::GroupingAlpha => (100, 8),
        Suite::GroupingBound => (50, 8),
        Suite::DsGadget => (200, 6),
        Suite::Setcover => (100, 12),
        Suite::Cb => (100, 7),
        Suite::Lin3Vc => (100, 8),
        Suite::Minsat => (100, 8),
        Suite::SubexpApprox => (100, 12),
        Suite::OraclesExhaustive => (200, 6),
    }
}

/// Inclusive (min, max) accepted for `--max-n`; brute-force references are
/// exponential in it.
fn max_n_range(suite: Suite) -> (usize, usize) {
    match suite {
        Suite::Roundtrip => (1, 64),
        Suite::SpectralGg => (2, 30),
        Suite::Powering => (3, 12),
        Suite::WalkSandwich => (7, 14),
        Suite::Amplify => (8, 14),
        Suite::GroupingAlpha => (3, 12),
        Suite::GroupingBound => (3, 12),
        Suite::DsGadget => (2, 8),
        Suite::Setcover => (1, 16),
        Suite::Cb => (1, 8),
        Suite::Lin3Vc => (3, 12),
        Suite::Minsat => (2, 10),
        Suite::SubexpApprox => (1, 16),
        Suite::OraclesExhaustive => (0, 12),
    }
}

struct Trial {
    digest: String,
    summary: String,
    size: usize,
    explored: u64,
    mismatch: Option<String>,
}

impl Trial {
    fn new(digest: String, size: usize) -> Self {
        Trial { digest, summary: String::new(), size, explored: 0, mismatch: None }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.mismatch.is_none() {
            self.mismatch = Some(what());
        }
    }
}

type TrialResult = Result<Trial, String>;

fn e(x: impl std::fmt::Display) -> String {
    x.to_string()
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut config = SuiteConfig::defaults(args.suite, args.seed);
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(m) = args.max_n {
        config.max_n = m;
    }
    config.timeout = Duration::from_secs(args.timeout);
    let start = Instant::now();
    let report = run_suite(args.suite, &config)?;
    Ok(Outcome {
        stdout: report.to_json(),
        status: report.status(),
        note: Some(format!("{}: {} trials in {:?}", report.suite, report.completed, start.elapsed())),
    })
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport, CliError> {
    let (lo, hi) = max_n_range(suite);
    if config.max_n < lo || config.max_n > hi {
        return Err(CliError::Usage(format!(
            "--max-n {} outside the range {lo}..={hi} supported by suite {}",
            config.max_n,
            suite_name(suite)
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport {
        suite: suite_name(suite),
        seed: config.seed,
        trials: config.trials,
        completed: 0,
        max_n: config.max_n,
        timed_out: false,
        digests: Vec::with_capacity(config.trials),
        mismatches: Vec::new(),
        stats: Stats::default(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    for i in 0..config.trials {
        if start.elapsed() > config.timeout {
            report.timed_out = true;
            break;
        }
        let mut rng = trial_rng(config.seed, i);
        let outcome = run_trial(suite, &mut rng, config, i);
        let seed = format!("{:016x}", trial_seed(config.seed, i));
        match outcome {
            Ok(t) => {
                let s = &mut report.stats;
                s.min_size = if report.completed == 0 { t.size } else { s.min_size.min(t.size) };
                s.max_size = s.max_size.max(t.size);
                s.total_size += t.size;
                s.explored += t.explored;
                if let Some(detail) = t.mismatch {
                    report.mismatches.push(MismatchRecord { trial: i, detail });
                }
                report.digests.push(TrialRecord { trial: i, seed, digest: t.digest, summary: t.summary });
            }
            Err(detail) => {
                report.mismatches.push(MismatchRecord { trial: i, detail: format!("error: {detail}") });
                report.digests.push(TrialRecord { trial: i, seed, digest: String::new(), summary: String::new() });
            }
        }
        report.completed += 1;
    }
    Ok(report)
}

fn run_trial(suite: Suite, rng: &mut ChaCha8Rng, c: &SuiteConfig, i: usize) -> TrialResult {
    match suite {
        Suite::Roundtrip => roundtrip(rng, c.max_n),
        Suite::SpectralGg => spectral_gg(c.max_n, i),
        Suite::Powering => powering(rng, c.max_n, i),
        Suite::WalkSandwich => sandwich(rng, c.max_n),
        Suite::Amplify => amplify(rng, c.max_n, i),
        Suite::GroupingAlpha => grouping_alpha(rng, c.max_n, i),
        Suite::GroupingBound => grouping_bound(rng, c.max_n, i),
        Suite::DsGadget => ds_gadget(rng, c.max_n),
        Suite::Setcover => setcover(rng, c.max_n),
        Suite::Cb => cb(rng, c.max_n),
        Suite::Lin3Vc => lin3_vc(rng, c.max_n),
        Suite::Minsat => minsat(rng, c.max_n),
        Suite::SubexpApprox => subexp(rng, c.max_n),
        Suite::OraclesExhaustive => oracles_exhaustive(rng, c.max_n),
    }
}

fn roundtrip(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let n = rng.gen_range(0..=max_n);
    let p = rng.gen_range(0.0..1.0);
    let g = gen::graph(rng, n, p);
    let vars = rng.gen_range(1..=max_n.max(1));
    let m = rng.gen_range(0..=12);
    let f = gen::cnf(rng, vars, m, 4);
    let lvars = rng.gen_range(3..=max_n.max(3));
    let lm = rng.gen_range(0..=12);
    let sys = gen::lin3(rng, lvars, lm);
    let ground = rng.gen_range(1..=max_n.max(1));
    let sets = rng.gen_range(0..=8);
    let sc = gen::set_cover(rng, ground, sets, 0.3);

    let texts = [emit_graph(&g), emit_cnf(&f), emit_lin3(&sys), sc.to_json()];
    let mut t = Trial::new(digest_parts(texts.iter().map(String::as_str)), n);
    let g2 = parse_graph(&texts[0]).map_err(e)?;
    t.expect(g2 == g && emit_graph(&g2) == texts[0], || "graph round trip".into());
    let f2 = parse_cnf(&texts[1]).map_err(e)?;
    t.expect(f2 == f && emit_cnf(&f2) == texts[1], || "cnf round trip".into());
    let s2 = parse_lin3(&texts[2]).map_err(e)?;
    t.expect(s2 == sys && emit_lin3(&s2) == texts[2], || "lin3 round trip".into());
    let c2 = SetCoverInstance::from_json(&texts[3]).map_err(e)?;
    t.expect(c2 == sc && c2.to_json() == texts[3], || "set cover round trip".into());
    t.summary = format!("n={n} edges={} clauses={m} equations={lm} sets={sets}", g.edge_count());
    Ok(t)
}

fn spectral_gg(max_n: usize, i: usize) -> TrialResult {
    let k = 2 + i % (max_n - 1);
    let h = build_gabber_galil(k).map_err(e)?;
    let mut t = Trial::new(digest(h.to_json()), h.n());
    let r = second_eigenvalue(&h).map_err(e)?;
    let bound = 5.0 * 2f64.sqrt() + 1e-6;
    t.expect(h.is_involution(), || format!("k={k}: rotation map is not an involution"));
    t.expect(r.lambda_hat <= bound, || format!("k={k}: lambda_hat {} > 5*sqrt(2)", r.lambda_hat));
    t.summary = format!("k={k} lambda_hat={:.9}", r.lambda_hat);
    Ok(t)
}

fn mat_pow(m: &[Vec<u64>], p: u32) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut acc: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for _ in 0..p {
        acc = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| acc[i][k] * m[k][j]).sum()).collect()).collect();
    }
    acc
}

fn powering(rng: &mut ChaCha8Rng, max_n: usize, i: usize) -> TrialResult {
    let (name, base, p): (String, RotationGraph, u32) = if i < 6 {
        let p = (i % 3 + 1) as u32;
        if i < 3 {
            ("GG_3".into(), build_gabber_galil(3).map_err(e)?, p)
        } else {
            ("K_5".into(), build_complete(5).map_err(e)?, p)
        }
    } else if rng.gen_bool(0.3) {
        let k = rng.gen_range(2..=3);
        (format!("GG_{k}"), build_gabber_galil(k).map_err(e)?, rng.gen_range(1..=2))
    } else {
        let n = rng.gen_range(3..=max_n);
        (format!("K_{n}"), build_complete(n).map_err(e)?, rng.gen_range(1..=3))
    };
    let hp = power(&base, p).map_err(e)?;
    let mut t = Trial::new(digest(hp.to_json()), hp.n());
    let d = hp.degree() as f64;
    let lam = second_eigenvalue(&base).map_err(e)?.lambda_hat;
    let lam_p = second_eigenvalue(&hp).map_err(e)?.lambda_hat;
    let gap = (lam_p - lam.powi(p as i32)).abs();
    t.expect(hp.is_involution(), || format!("{name}^{p}: not an involution"));
    t.expect(gap <= 1e-6 * d, || format!("{name}^{p}: |{lam_p} - {lam}^{p}| = {gap}"));
    t.expect(hp.multiplicity_rows() == mat_pow(&base.multiplicity_rows(), p), || {
        format!("{name}^{p}: adjacency differs from the matrix power")
    });
    t.summary = format!("{name}^{p} degree={} lambda_hat={lam_p:.9} base^p={:.9}", hp.degree(), lam.powi(p as i32));
    Ok(t)
}

fn sandwich(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let lo = max_n.min(8);
    for _ in 0..10_000 {
        let n = rng.gen_range(lo..=max_n);
        let p = rng.gen_range(0.75..0.95);
        let g = gen::graph(rng, n, p);
        let w = oracles::max_clique(&g).map_err(e)?;
        let b = rat(w.value as i64, n as i64);
        let alpha = rat(1, n as i64 - 1);
        if b <= &alpha * rat(6, 1) {
            continue;
        }
        let wg = product::derandomized_product(&g, &build_complete(n).map_err(e)?, 2).map_err(e)?;
        let big_n = from_usize(wg.graph.n());
        let w2 = oracles::max_clique(&wg.graph).map_err(e)?;
        let two = rat(2, 1);
        let lower: Rational = num_traits::pow(&b - &alpha * &two, 2) * &big_n;
        let upper: Rational = num_traits::pow(&b + &alpha * &two, 2) * &big_n;
        let got = from_usize(w2.value);
        let mut t = Trial::new(digest(emit_graph(&g)), n);
        t.explored = w.explored + w2.explored;
        t.expect(lower <= got && got <= upper, || {
            format!("n={n}: {} <= {} <= {} fails", format_rational(&lower), w2.value, format_rational(&upper))
        });
        t.summary = format!(
            "n={n} omega={} N={} omega_product={} lower={} upper={}",
            w.value,
            wg.graph.n(),
            w2.value,
            format_rational(&lower),
            format_rational(&upper)
        );
        return Ok(t);
    }
    Err("no instance with b > 6 alpha after 10000 draws".into())
}

/// Input kinds alternate planted (ω = n, the a = 1 case) and triangle-free.
fn amplify(rng: &mut ChaCha8Rng, max_n: usize, i: usize) -> TrialResult {
    let n = max_n;
    let ratio = if i.is_multiple_of(2) { rat(4, 5) } else { rat(1, 2) };
    let planted = (i / 2).is_multiple_of(2);
    let g = if planted { Graph::complete(n) } else { gen::triangle_free(rng, n, 0.5) };
    let (a, b) = (rat(1, 1), rat(1, 2));
    let params = product::select_amplification_params(&a, &b, &ratio, &FamilyRequest::Complete, Some(n)).map_err(e)?;
    let out = product::amplify_gap(&g, &params).map_err(e)?;
    let w_in = oracles::max_clique(&g).map_err(e)?;
    let w_out = oracles::max_clique_with_cap(&out.product.graph, out.vertex_count()).map_err(e)?;
    let check = out.check_bounds(&params, w_in.value, w_out.value);
    let quotient = &out.b_r / &out.a_r;
    let mut t = Trial::new(digest(emit_graph(&g)), n);
    t.explored = w_in.explored + w_out.explored;
    t.expect(quotient <= ratio, || format!("b_r/a_r = {} > r", format_rational(&quotient)));
    t.expect(params.t <= 2, || format!("t = {} exceeds 2", params.t));
    t.expect(check.upper_applies || check.lower_applies, || "neither bound applies".into());
    t.expect(check.ok(), || format!("bound violated: {check:?}"));
    t.summary = format!(
        "{} r={} t={} N={} omega={} omega_r={} b_r/a_r={}",
        if planted { "planted" } else { "triangle-free" },
        format_rational(&ratio),
        params.t,
        out.vertex_count(),
        w_in.value,
        w_out.value,
        format_rational(&quotient)
    );
    Ok(t)
}

fn grouping_alpha(rng: &mut ChaCha8Rng, max_n: usize, i: usize) -> TrialResult {
    let vars = rng.gen_range(3..=max_n);
    let k = 2 + i % 2;
    let lambda = if (i / 2).is_multiple_of(2) { rat(3, 4) } else { rat(1, 1) };
    let m = rng.gen_range(k..=8);
    let f = gen::cnf(rng, vars, m, 3);
    let params = GroupingParams::new(m, k, lambda.clone()).map_err(e)?;
    let gi = reductions::max3sat_to_is(&f, &params).map_err(e)?;
    let g = gi.partitioned.graph();
    let alpha = oracles::max_independent_set(g).map_err(e)?;
    let best = brute::assignments(vars).map(|a| params.threshold_groups(&f, &a)).max().unwrap_or(0);
    let reference = brute::assignments(vars)
        .map(|a| {
            params
                .groups()
                .iter()
                .filter(|range| {
                    let sat = (*range)
                        .clone()
                        .filter(|&c| f.clauses()[c].iter().any(|l| a.0[l.var] == l.positive))
                        .count();
                    from_usize(sat) >= params.threshold()
                })
                .count()
        })
        .max()
        .unwrap_or(0);
    let mut t = Trial::new(digest(emit_cnf(&f)), g.n());
    t.explored = alpha.explored;
    t.expect(best == reference, || format!("group count {best} vs reference {reference}"));
    t.expect(alpha.value == reference, || format!("alpha(G_I) = {} but the assignment side gives {reference}", alpha.value));
    t.expect(alpha.value <= k, || format!("alpha(G_I) = {} > K", alpha.value));
    t.summary = format!("vars={vars} m={m} K={k} lambda={} alpha={}", format_rational(&lambda), alpha.value);
    Ok(t)
}

/// `m` is drawn as a multiple of `K`: the bound needs every group to hold
/// exactly `m/K` clauses.
fn grouping_bound(rng: &mut ChaCha8Rng, max_n: usize, i: usize) -> TrialResult {
    let vars = rng.gen_range(3..=max_n);
    let k = rng.gen_range(1..=3);
    let m = k * rng.gen_range(1..=8 / k);
    let lambda = [rat(1, 2), rat(3, 4), rat(1, 1)][i % 3].clone();
    let f = gen::cnf(rng, vars, m, 3);
    let params = GroupingParams::new(m, k, lambda.clone()).map_err(e)?;
    let mut t = Trial::new(digest(emit_cnf(&f)), vars);
    let mut max_sat = 0;
    for a in brute::assignments(vars) {
        let v = reductions::check_grouping_bound(&f, &params, &a).map_err(e)?;
        let satisfied = brute::clauses_satisfied(&f, &a);
        max_sat = max_sat.max(satisfied);
        t.expect(v.satisfied == satisfied, || format!("count {} vs reference {satisfied}", v.satisfied));
        t.expect(v.equal_groups && v.holds, || {
            format!("assignment {:?}: {} > {}", a.true_vars(), v.satisfied, format_rational(&v.bound))
        });
    }
    t.summary = format!("vars={vars} m={m} K={k} lambda={} assignments={} max_satisfied={max_sat}",
        format_rational(&lambda), 1u64 << vars);
    Ok(t)
}

fn ds_gadget(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let k = 2;
    let p = rng.gen_range(0.2..0.8);
    let cpg = gen::partitioned(rng, k, (max_n / k).max(1), p);
    let gadget = reductions::is_to_ds(&cpg).map_err(e)?;
    let text = format!("{}{}", emit_graph(cpg.graph()), serde_json::to_string(cpg.blocks()).map_err(e)?);
    let mut t = Trial::new(digest(text), cpg.graph().n());
    let alpha = oracles::max_independent_set(cpg.graph()).map_err(e)?;
    let gamma = oracles::min_dominating_set_bounded(&gadget.graph, 2 * k).map_err(e)?;
    let Some(gamma) = gamma else {
        t.expect(false, || "no dominating set of size <= 2K".into());
        return Ok(t);
    };
    t.explored = alpha.explored + gamma.explored;
    t.expect(alpha.value + gamma.value == 2 * k, || format!("alpha {} + gamma {} != 2K", alpha.value, gamma.value));
    match reductions::is_witness_to_ds_witness(&gadget, &alpha.witness) {
        Ok(ds) => t.expect(ds.len() == 2 * k - alpha.value && gadget.graph.is_dominating(&ds), || {
            "IS -> DS translation is not a dominating set of size 2K - alpha".into()
        }),
        Err(err) => t.expect(false, || format!("IS -> DS: {err}")),
    }
    match reductions::ds_witness_to_is_witness(&gadget, &gamma.witness) {
        Ok(is) => t.expect(cpg.graph().is_independent(&is) && is.len() + gamma.value >= 2 * k, || {
            "DS -> IS translation is too small or not independent".into()
        }),
        Err(err) => t.expect(false, || format!("DS -> IS: {err}")),
    }
    t.summary = format!(
        "K={k} n={} gadget={} alpha={} gamma={} alpha+gamma={}",
        cpg.graph().n(),
        gadget.graph.n(),
        alpha.value,
        gamma.value,
        alpha.value + gamma.value
    );
    Ok(t)
}

fn setcover(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.6);
    let g = gen::graph(rng, n, p);
    let inst = reductions::ds_to_setcover(&g);
    let mut t = Trial::new(digest(emit_graph(&g)), n);
    let gamma = oracles::min_dominating_set_bounded(&g, n).map_err(e)?.ok_or("no dominating set")?;
    let cover = oracles::min_set_cover(&inst).map_err(e)?;
    t.explored = gamma.explored + cover.explored;
    t.expect(inst.ground_size() == n && inst.sets().len() == n, || "instance shape".into());
    t.expect(gamma.value == cover.value, || format!("gamma {} vs set cover {}", gamma.value, cover.value));
    t.summary = format!("n={n} gamma={} cover={}", gamma.value, cover.value);
    Ok(t)
}

fn cb(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.8);
    let g = gen::graph(rng, n, p);
    let out = reductions::is_to_cb(&g);
    let mut t = Trial::new(digest(emit_graph(&g)), n);
    let mibs = oracles::max_induced_bipartite(&out).map_err(e)?;
    let alpha = oracles::max_independent_set(&g).map_err(e)?;
    t.explored = mibs.explored + alpha.explored;
    t.expect(mibs.value == 2 * alpha.value, || format!("MIBS {} vs 2 alpha = {}", mibs.value, 2 * alpha.value));
    t.summary = format!("n={n} alpha={} mibs={}", alpha.value, mibs.value);
    Ok(t)
}

fn lin3_vc(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let vars = rng.gen_range(3..=max_n);
    let m = rng.gen_range(1..=8);
    let sys = gen::lin3(rng, vars, m);
    let red = reductions::lin3_to_vc(&sys);
    let mut t = Trial::new(digest(emit_lin3(&sys)), red.graph.n());
    let alpha = oracles::max_independent_set(&red.graph).map_err(e)?;
    let best = brute::assignments(vars).map(|a| brute::equations_satisfied(&sys, &a)).max().unwrap_or(0);
    t.explored = alpha.explored;
    t.expect(red.graph.n() == 4 * m, || format!("{} vertices for {m} equations", red.graph.n()));
    t.expect((0..m).all(|q| red.graph.is_clique(&[4 * q, 4 * q + 1, 4 * q + 2, 4 * q + 3])), || {
        "an equation's quadruple is not a clique".into()
    });
    t.expect(alpha.value == best, || format!("alpha {} vs max-3-lin {best}", alpha.value));
    t.summary = format!("vars={vars} m={m} N={} alpha={} opt={best}", red.graph.n(), alpha.value);
    Ok(t)
}

fn minsat(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.2..0.7);
        let g = gen::graph(rng, n, p);
        if g.edge_count() > 16 || (0..n).any(|v| g.degree(v) == 0) {
            continue;
        }
        let red = reductions::vc_to_minsat(&g).map_err(e)?;
        let mut t = Trial::new(digest(emit_graph(&g)), n);
        let min = oracles::min_sat(&red.formula).map_err(e)?;
        let vc = oracles::min_vertex_cover(&g).map_err(e)?;
        t.explored = min.explored + vc.explored;
        t.expect(red.formula.var_count() == g.edge_count() && red.formula.clause_count() == n, || "shape".into());
        t.expect((0..n).all(|v| red.formula.clauses()[v].len() == g.degree(v)), || "clause lengths".into());
        t.expect(min.value == vc.value, || format!("MinSAT {} vs MVC {}", min.value, vc.value));
        t.summary = format!("n={n} edges={} minsat={} mvc={}", g.edge_count(), min.value, vc.value);
        return Ok(t);
    }
    Err("no graph without isolated vertices and at most 16 edges after 10000 draws".into())
}

fn subexp(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.7);
    let g = gen::graph(rng, n, p);
    let c = rng.gen_range(1..=4);
    let mut t = Trial::new(digest(emit_graph(&g)), n);
    let approx = oracles::subexp_approx_is(&g, c).map_err(e)?;
    let alpha = oracles::max_independent_set(&g).map_err(e)?;
    t.explored = approx.explored + alpha.explored;
    t.expect(approx.value == alpha.value.min(c), || format!("{} vs min({}, {c})", approx.value, alpha.value));
    t.expect(g.is_independent(&approx.witness) && approx.witness.len() == approx.value, || "witness".into());
    t.summary = format!("n={n} c={c} alpha={} value={}", alpha.value, approx.value);
    Ok(t)
}

fn oracles_exhaustive(rng: &mut ChaCha8Rng, max_n: usize) -> TrialResult {
    let n = rng.gen_range(0..=max_n);
    let p = rng.gen_range(0.1..0.9);
    let g = gen::graph(rng, n, p);
    let mut t = Trial::new(digest(emit_graph(&g)), n);
    let omega = oracles::max_clique(&g).map_err(e)?;
    let alpha = oracles::max_independent_set(&g).map_err(e)?;
    let vc = oracles::min_vertex_cover(&g).map_err(e)?;
    let gamma = oracles::min_dominating_set_bounded(&g, n).map_err(e)?;
    let mibs = oracles::max_induced_bipartite(&g).map_err(e)?;
    let gamma_value = gamma.as_ref().map_or(0, |r| r.value);
    t.explored = omega.explored + alpha.explored + vc.explored + mibs.explored;
    let (bo, ba, bg, bm) = (brute::omega(&g), brute::alpha(&g), brute::gamma(&g), brute::mibs(&g));
    t.expect(omega.value == bo, || format!("omega {} vs {bo}", omega.value));
    t.expect(alpha.value == ba, || format!("alpha {} vs {ba}", alpha.value));
    t.expect(omega.value == brute::alpha(&g.complement()), || "omega != alpha of complement".into());
    t.expect(vc.value + ba == n && g.is_vertex_cover(&vc.witness), || format!("vertex cover {}", vc.value));
    t.expect(gamma_value == bg, || format!("gamma {gamma_value} vs {bg}"));
    t.expect(mibs.value == bm && brute::bipartite(&g, &mibs.witness), || format!("mibs {} vs {bm}", mibs.value));
    t.summary = format!("n={n} omega={bo} alpha={ba} gamma={bg} mibs={bm}");
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_kebab_case() {
        let names: Vec<String> = ALL_SUITES.iter().map(|&s| suite_name(s)).collect();
        assert_eq!(
            names,
            [
                "roundtrip",
                "spectral-gg",
                "powering",
                "theorem3-sandwich",
                "amplify",
                "grouping-alpha",
                "claim1",
                "ds-gadget",
                "setcover",
                "cb",
                "lin3-vc",
                "minsat",
                "subexp-approx",
                "oracles-exhaustive"
            ]
        );
    }

    #[test]
    fn max_n_out_of_range_is_usage() {
        let mut c = SuiteConfig::defaults(Suite::Cb, 1);
        c.max_n = 40;
        assert!(matches!(run_suite(Suite::Cb, &c), Err(CliError::Usage(_))));
    }

    #[test]
    fn zero_timeout_stops_early() {
        let mut c = SuiteConfig::defaults(Suite::Roundtrip, 1);
        c.timeout = Duration::ZERO;
        std::thread::sleep(Duration::from_millis(2));
        let r = run_suite(Suite::Roundtrip, &c).unwrap();
        assert!(r.timed_out);
        assert_eq!(r.status(), Status::Timeout);
        assert!(r.completed < r.trials);
    }
}
