use crate::args::{
    AmplifyArgs, BuildExpanderArgs, FamilyArg, PowerArgs, Problem, ProductArgs, ReduceArgs, Reduction, SolveArgs,
};
use crate::digest::digest;
use crate::{read, write, CliError, Outcome, Status};
use gapkit::expander::{self, ExpanderSpec, RotationGraph};
use gapkit::instances::{
    emit_cnf, emit_graph, parse_cnf, parse_graph, parse_lin3, Assignment, CliquePartitionedGraph, Graph,
    SetCoverInstance,
};
use gapkit::oracles::{self, SolveResult};
use gapkit::product::{self, FamilyRequest};
use gapkit::rational::{format_rational, parse_rational, Rational};
use gapkit::reductions::{self, GroupingParams};
use gapkit::spectral;
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::Path;
use std::time::Instant;

fn ok(report: Value) -> Outcome {
    Outcome { stdout: pretty(&report), status: Status::Ok, note: None }
}

pub(crate) fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_rotation(path: &Path) -> Result<RotationGraph, CliError> {
    RotationGraph::from_json(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit_to(out: Option<&Path>, text: &str, report: &mut Value) -> Result<(), CliError> {
    match out {
        Some(p) => write(p, text),
        None => {
            report["instance"] = Value::String(text.to_string());
            Ok(())
        }
    }
}

pub fn build_expander(args: &BuildExpanderArgs) -> Result<Outcome, CliError> {
    let spec = match args.family {
        FamilyArg::Gg => {
            let k = args.k.ok_or_else(|| CliError::usage("--family gg needs --k"))?;
            ExpanderSpec::gabber_galil(k, args.power)
        }
        FamilyArg::Complete => {
            let n = args.n.ok_or_else(|| CliError::usage("--family complete needs --n"))?;
            ExpanderSpec::complete(n, args.power)
        }
    };
    let h = spec.build().map_err(CliError::usage)?;
    let text = h.to_json();
    let mut report = json!({
        "family": spec.family,
        "param": spec.param,
        "power": spec.power,
        "n": h.n(),
        "degree": h.degree(),
        "alpha_squared": format_rational(&spec.alpha_bound.squared),
        "alpha": spec.alpha_bound.to_f64(),
        "digest": digest(&text),
    });
    emit_to(args.out.as_deref(), &text, &mut report)?;
    let mut status = Status::Ok;
    if args.verify {
        let verdict = spectral::verify_expander(&h, &spec.alpha_bound).map_err(CliError::usage)?;
        if !verdict.pass {
            status = Status::Mismatch;
        }
        report["verify"] = serde_json::to_value(&verdict).expect("plain data");
    }
    Ok(Outcome { stdout: pretty(&report), status, note: None })
}

pub fn power(args: &PowerArgs) -> Result<Outcome, CliError> {
    let h = load_rotation(&args.input)?;
    let hp = expander::power(&h, args.p).map_err(CliError::usage)?;
    let text = hp.to_json();
    let mut report = json!({ "n": hp.n(), "degree": hp.degree(), "p": args.p, "digest": digest(&text) });
    emit_to(args.out.as_deref(), &text, &mut report)?;
    Ok(ok(report))
}

pub fn product(args: &ProductArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&args.graph)?;
    let h = load_rotation(&args.expander)?;
    let wg = product::derandomized_product_with_cap(&g, &h, args.t, args.cap).map_err(CliError::usage)?;
    let text = emit_graph(&wg.graph);
    let mut report = json!({
        "n": g.n(),
        "degree": wg.degree,
        "t": wg.t,
        "vertices": wg.graph.n(),
        "edges": wg.graph.edge_count(),
        "input_digest": digest(emit_graph(&g)),
        "digest": digest(&text),
    });
    if let Some(p) = &args.walks {
        write(p, &wg.walk_table_json())?;
    }
    emit_to(args.out.as_deref(), &text, &mut report)?;
    Ok(ok(report))
}

pub fn amplify(args: &AmplifyArgs) -> Result<Outcome, CliError> {
    let a = rational_arg("a", &args.a)?;
    let b = rational_arg("b", &args.b)?;
    let r = rational_arg("ratio", &args.ratio)?;
    let g = load_graph(&args.input)?;
    let family = match args.family {
        FamilyArg::Gg => FamilyRequest::GabberGalil,
        FamilyArg::Complete => FamilyRequest::Complete,
    };
    let params = product::select_amplification_params(&a, &b, &r, &family, Some(g.n())).map_err(CliError::usage)?;
    let h = params.expander.build().map_err(CliError::usage)?;
    let out = product::amplify_gap_with(&g, &params, &h, product::DEFAULT_PRODUCT_CAP).map_err(CliError::usage)?;
    let text = emit_graph(&out.product.graph);
    let quotient = &out.b_r / &out.a_r;
    let ratio_ok = quotient <= r;
    let mut status = if ratio_ok { Status::Ok } else { Status::Mismatch };
    let mut report = json!({
        "params": serde_json::to_value(&params).expect("plain data"),
        "n": out.n,
        "padded_n": out.padded_n,
        "vertices": out.vertex_count(),
        "a_r": format_rational(&out.a_r),
        "b_r": format_rational(&out.b_r),
        "b_r_over_a_r": format_rational(&quotient),
        "ratio_ok": ratio_ok,
        "input_digest": digest(emit_graph(&g)),
        "digest": digest(&text),
    });
    if args.check {
        let w_in = oracles::max_clique(&g).map_err(CliError::usage)?;
        let w_out = oracles::max_clique_with_cap(&out.product.graph, out.vertex_count()).map_err(CliError::usage)?;
        let check = out.check_bounds(&params, w_in.value, w_out.value);
        if !check.ok() || !(check.upper_applies || check.lower_applies) {
            status = Status::Mismatch;
        }
        let mut c = serde_json::to_value(&check).expect("plain data");
        c["explored"] = json!(w_in.explored + w_out.explored);
        report["check"] = c;
    }
    if let Some(p) = &args.walks {
        write(p, &out.product.walk_table_json())?;
    }
    emit_to(args.out.as_deref(), &text, &mut report)?;
    Ok(Outcome { stdout: pretty(&report), status, note: None })
}

#[derive(Deserialize)]
struct PartitionFile {
    blocks: Vec<Vec<usize>>,
}

pub fn reduce(args: &ReduceArgs) -> Result<Outcome, CliError> {
    let input = read(&args.input)?;
    let bad_input = |e: &dyn std::fmt::Display| CliError::Usage(format!("{}: {e}", args.input.display()));
    let (text, sidecar, summary) = match args.name {
        Reduction::Max3satToIs => {
            let f = parse_cnf(&input).map_err(|e| bad_input(&e))?;
            let k = args.k.ok_or_else(|| CliError::usage("max3sat-to-is needs --k"))?;
            let lambda = rational_arg("lambda", args.lambda.as_deref().unwrap_or("1"))?;
            let params = GroupingParams::new(f.clause_count(), k, lambda).map_err(CliError::usage)?;
            let gi = reductions::max3sat_to_is(&f, &params).map_err(CliError::usage)?;
            let graph = gi.partitioned.graph();
            let summary = json!({ "vertices": graph.n(), "edges": graph.edge_count(), "k": k,
                "threshold": format_rational(&params.threshold()) });
            let side = json!({ "blocks": gi.partitioned.blocks(), "payload": gi.payload });
            (emit_graph(graph), side, summary)
        }
        Reduction::IsToDs => {
            let g = parse_graph(&input).map_err(|e| bad_input(&e))?;
            let path = args.partition.as_deref().ok_or_else(|| CliError::usage("is-to-ds needs --partition"))?;
            let part: PartitionFile = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let cpg = CliquePartitionedGraph::new(g, part.blocks).map_err(CliError::usage)?;
            let gadget = reductions::is_to_ds(&cpg).map_err(CliError::usage)?;
            let summary = json!({ "vertices": gadget.graph.n(), "edges": gadget.graph.edge_count(), "k": gadget.k });
            let side = json!({ "k": gadget.k, "roles": gadget.roles });
            (emit_graph(&gadget.graph), side, summary)
        }
        Reduction::DsToSetcover => {
            let g = parse_graph(&input).map_err(|e| bad_input(&e))?;
            let inst = reductions::ds_to_setcover(&g);
            let summary = json!({ "ground_size": inst.ground_size(), "sets": inst.sets().len() });
            (inst.to_json(), Value::Null, summary)
        }
        Reduction::IsToCb => {
            let g = parse_graph(&input).map_err(|e| bad_input(&e))?;
            let out = reductions::is_to_cb(&g);
            let summary = json!({ "vertices": out.n(), "edges": out.edge_count() });
            let side = json!({ "copy_of": (0..out.n()).map(|v| [v / g.n().max(1), v % g.n().max(1)]).collect::<Vec<_>>() });
            (emit_graph(&out), side, summary)
        }
        Reduction::Lin3ToVc => {
            let sys = parse_lin3(&input).map_err(|e| bad_input(&e))?;
            let red = reductions::lin3_to_vc(&sys);
            let summary = json!({ "vertices": red.graph.n(), "edges": red.graph.edge_count() });
            (emit_graph(&red.graph), json!({ "payload": red.payload }), summary)
        }
        Reduction::VcToMinsat => {
            let g = parse_graph(&input).map_err(|e| bad_input(&e))?;
            let red = reductions::vc_to_minsat(&g).map_err(CliError::usage)?;
            let summary = json!({ "variables": red.edge_of_var.len(), "clauses": red.formula.clause_count() });
            let side = json!({ "edge_of_var": red.edge_of_var, "clause_of_vertex": red.clause_of_vertex });
            (emit_cnf(&red.formula), side, summary)
        }
    };
    let name = clap::ValueEnum::to_possible_value(&args.name).expect("no skipped variants");
    let mut report = json!({
        "reduction": name.get_name(),
        "input_digest": digest(&input),
        "digest": digest(&text),
        "summary": summary,
    });
    if let Some(p) = &args.sidecar {
        write(p, &serde_json::to_string(&sidecar).expect("plain data"))?;
    }
    emit_to(args.out.as_deref(), &text, &mut report)?;
    Ok(ok(report))
}

fn vertex_result(r: SolveResult<Vec<usize>>) -> Value {
    json!({ "value": r.value, "witness": r.witness, "explored": r.explored })
}

fn assignment_result(r: SolveResult<Assignment>) -> Value {
    let bits: Vec<u8> = r.witness.0.iter().map(|&b| b as u8).collect();
    json!({ "value": r.value, "witness": bits, "explored": r.explored })
}

pub fn solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    let input = read(&args.input)?;
    let start = Instant::now();
    let bad = |e: &dyn std::fmt::Display| CliError::Usage(format!("{}: {e}", args.input.display()));
    let graph = || parse_graph(&input).map_err(|e| bad(&e));
    let result = match args.problem {
        Problem::Clique => vertex_result(oracles::max_clique(&graph()?).map_err(CliError::usage)?),
        Problem::IndependentSet => vertex_result(oracles::max_independent_set(&graph()?).map_err(CliError::usage)?),
        Problem::VertexCover => vertex_result(oracles::min_vertex_cover(&graph()?).map_err(CliError::usage)?),
        Problem::InducedBipartite => {
            vertex_result(oracles::max_induced_bipartite(&graph()?).map_err(CliError::usage)?)
        }
        Problem::DominatingSet => {
            let g = graph()?;
            let cap = args.cap.unwrap_or(g.n());
            match oracles::min_dominating_set_bounded(&g, cap).map_err(CliError::usage)? {
                Some(r) => vertex_result(r),
                None => json!({ "value": null, "witness": null, "cap": cap }),
            }
        }
        Problem::SubexpIs => {
            let cap = args.cap.ok_or_else(|| CliError::usage("subexp-is needs --cap"))?;
            vertex_result(oracles::subexp_approx_is(&graph()?, cap).map_err(CliError::usage)?)
        }
        Problem::MaxSat | Problem::MinSat => {
            let f = parse_cnf(&input).map_err(|e| bad(&e))?;
            let r = if args.problem == Problem::MaxSat { oracles::max_sat(&f) } else { oracles::min_sat(&f) };
            assignment_result(r.map_err(CliError::usage)?)
        }
        Problem::MaxLin => {
            let sys = parse_lin3(&input).map_err(|e| bad(&e))?;
            assignment_result(oracles::max_lin(&sys).map_err(CliError::usage)?)
        }
        Problem::SetCover => {
            let inst = SetCoverInstance::from_json(&input).map_err(|e| bad(&e))?;
            vertex_result(oracles::min_set_cover(&inst).map_err(CliError::usage)?)
        }
    };
    let name = clap::ValueEnum::to_possible_value(&args.problem).expect("no skipped variants");
    let mut report = json!({ "problem": name.get_name(), "input_digest": digest(&input) });
    for (k, v) in result.as_object().expect("object").clone() {
        report[k] = v;
    }
    Ok(Outcome { stdout: pretty(&report), status: Status::Ok, note: Some(format!("solved in {:?}", start.elapsed())) })
}
