use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use homtool_core::complexity::{hom_complexity_with, injective_hom_complexity_with, Bound};
use homtool_core::covers::{clique_cover_number_with, particity_with, partite_dimension_with, CoverResult, Witness};
use homtool_core::decompose::{design_into_target_with, design_quasi_hom_with, verify_optimality, verify_quasi_hom};
use homtool_core::graph::{generate, parse_hgf, serialize_hgf, Family};
use homtool_core::hom::{core_with_budget, find_hom_with, find_injective_hom_with};
use homtool_core::invariants::{chromatic_number_with, clique_number, is_l_partite_with};
use homtool_core::json::{complexity_json, cover_json, parse_plan, plan_from_json, PlanJson, VertexMapJson};
use homtool_core::{Budget, ComplexityResult, Error, Graph, Kind, Method, MethodChoice, QuasiHom, Value, VertexMap};
use serde_json::{json, Value as Json};

use crate::{Cli, Command, CoverKind, InvariantKind, EXIT_NEGATIVE};

/// What a subcommand produced: both renderings and the exit code.
pub struct Outcome {
    pub text: String,
    pub json: Json,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String, json: Json) -> Self {
        Outcome { text, json, code: 0 }
    }

    fn decided(yes: bool, text: String, json: Json) -> Self {
        Outcome { text, json, code: if yes { 0 } else { EXIT_NEGATIVE } }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let budget = cli.global.budget()?;
    match &cli.command {
        Command::Hom { g, h, injective } => hom(&load(g)?, &load(h)?, *injective, &budget),
        Command::Complexity { g, h, injective, method, cert } => {
            let method: MethodChoice = method.parse()?;
            complexity(&load(g)?, &load(h)?, *injective, method, cert.as_deref(), &budget)
        }
        Command::Invariant { which, g, l } => invariant(*which, &load(g)?, *l, &budget),
        Command::Cover { which, g, l } => cover(*which, &load(g)?, *l, &budget),
        Command::Design { g, target, target_complete, out } => {
            let g = load(g)?;
            let plan = match (target, target_complete) {
                (Some(h), _) => design_into_target_with(&g, &load(h)?, &budget)?,
                (None, Some(l)) => design_quasi_hom_with(&g, *l, &budget)?,
                (None, None) => unreachable!("clap requires a target"),
            };
            design(PlanJson::from(&plan), &plan.quasi, out.as_deref())
        }
        Command::Verify { plan, g, h, injective, check_optimal } => {
            verify(plan, &load(g)?, &load(h)?, *injective, *check_optimal, &budget)
        }
        Command::Gen { family, params, seed, out } => gen(family, params, *seed, out.as_deref()),
    }
}

/// Reads an HGF file; the graph is named after the file stem.
pub fn load(path: &Path) -> Result<Graph> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut g = parse_hgf(&bytes).with_context(|| format!("{}", path.display()))?;
    if let Some(stem) = path.file_stem() {
        g.set_name(stem.to_string_lossy());
    }
    Ok(g)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

fn ids(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.id(v).to_string()).collect()
}

/// `u-v` for undirected edges, `(u,v)` for arcs.
fn edge_text(g: &Graph, e: (usize, usize)) -> String {
    if g.is_directed() {
        g.fmt_edge(e)
    } else {
        format!("{}-{}", g.id(e.0), g.id(e.1))
    }
}

fn map_text(f: &VertexMap) -> String {
    let pairs: Vec<String> = f.pairs().iter().map(|(v, a)| format!("{v}->{a}")).collect();
    pairs.join(" ")
}

fn plan_text(out: &mut String, q: &QuasiHom) {
    for (i, p) in q.pieces.iter().enumerate() {
        let g = p.sub.parent();
        let edges: Vec<String> = p.sub.edges().iter().map(|&e| edge_text(g, e)).collect();
        let _ = writeln!(out, "  piece {}: edges [{}] map {}", i + 1, edges.join(" "), map_text(&p.map));
    }
}

fn bound_text(b: &Bound) -> String {
    format!("{} ({})", b.value, b.tag)
}

fn hom(g: &Graph, h: &Graph, injective: bool, budget: &Budget) -> Result<Outcome> {
    let f = if injective { find_injective_hom_with(g, h, budget)? } else { find_hom_with(g, h, budget)? };
    let mut text = format!("hom {} -> {}: {}\n", g.label(), h.label(), if f.is_some() { "yes" } else { "no" });
    if let Some(f) = &f {
        let _ = writeln!(text, "  {}", map_text(f));
    }
    let json = json!({
        "source": g.label(),
        "target": h.label(),
        "injective": injective,
        "exists": f.is_some(),
        "map": f.as_ref().map(VertexMapJson::from),
    });
    Ok(Outcome::decided(f.is_some(), text, json))
}

fn complexity(
    g: &Graph,
    h: &Graph,
    injective: bool,
    method: MethodChoice,
    cert: Option<&Path>,
    budget: &Budget,
) -> Result<Outcome> {
    let r: ComplexityResult = if injective {
        injective_hom_complexity_with(g, h, method, budget)?
    } else {
        hom_complexity_with(g, h, method, budget)?
    };
    let name = if r.kind == Kind::Injective { "IC" } else { "C" };
    let mut text = format!("{name}({};{}) = {}\n", g.label(), h.label(), r.value);
    if let Value::Infinite(reason) = r.value {
        let _ = writeln!(text, "reason: {reason}");
    }
    let _ = writeln!(text, "method: {}", r.method);
    let formula = match r.method {
        Method::Formula => Some(formula_inputs(g, h, budget)?),
        _ => None,
    };
    if let Some((chi_g, omega_h, chi_h)) = formula {
        let _ = writeln!(text, "formula: ceil(log_{chi_h} {chi_g}) with omega(H) = {omega_h}, chi(H) = {chi_h}");
    }
    let _ = writeln!(text, "lower: {}", bound_text(&r.lower));
    let _ = writeln!(text, "upper: {}", r.upper.as_ref().map_or("inf".into(), bound_text));
    let trail: Vec<String> = r.trail.iter().map(|b| format!("{}={}", b.tag, b.value)).collect();
    let _ = writeln!(text, "trail: {}", trail.join(", "));
    let mut json = complexity_json(&r);
    if let Some((chi_g, omega_h, chi_h)) = formula {
        json["formula"] = json!({ "chi_source": chi_g, "omega_target": omega_h, "chi_target": chi_h });
    }
    if let Some(q) = &r.certificate {
        plan_text(&mut text, q);
    }
    if let Some(path) = cert {
        let q = r
            .certificate
            .as_ref()
            .ok_or_else(|| Error::Hypothesis("no certificate: the complexity is infinite".into()))?;
        write_file(path, &serde_json::to_vec_pretty(&PlanJson::from(q))?)?;
        let _ = writeln!(text, "certificate written to {}", path.display());
        json["cert_path"] = json!(path.display().to_string());
    }
    Ok(Outcome::ok(text, json))
}

/// `(χ(G), ω(H), χ(H))` behind a formula value.
fn formula_inputs(g: &Graph, h: &Graph, budget: &Budget) -> Result<(usize, usize, usize)> {
    Ok((chromatic_number_with(g, budget)?.0, clique_number(h)?.0, chromatic_number_with(h, budget)?.0))
}

fn invariant(which: InvariantKind, g: &Graph, l: usize, budget: &Budget) -> Result<Outcome> {
    Ok(match which {
        InvariantKind::Chromatic => {
            let (chi, colouring) = chromatic_number_with(g, budget)?;
            let text = format!("chi({}) = {chi}\n  {}\n", g.label(), map_text(&colouring));
            let json = json!({ "invariant": "chromatic", "graph": g.label(), "value": chi,
                "colouring": VertexMapJson::from(&colouring) });
            Outcome::ok(text, json)
        }
        InvariantKind::Clique => {
            let (omega, clique) = clique_number(g)?;
            let clique = ids(g, &clique);
            let text = format!("omega({}) = {omega}\n  clique [{}]\n", g.label(), clique.join(" "));
            let json = json!({ "invariant": "clique", "graph": g.label(), "value": omega, "clique": clique });
            Outcome::ok(text, json)
        }
        InvariantKind::Core => {
            let (sub, retraction) = core_with_budget(g, budget)?;
            let vertices = ids(g, sub.vertices());
            let edges: Vec<[String; 2]> =
                sub.edges().iter().map(|&(u, v)| [g.id(u).to_string(), g.id(v).to_string()]).collect();
            let shown: Vec<String> = sub.edges().iter().map(|&e| edge_text(g, e)).collect();
            let text = format!(
                "core({}) = {} vertices, {} edges\n  vertices [{}]\n  edges [{}]\n  retraction {}\n",
                g.label(),
                vertices.len(),
                edges.len(),
                vertices.join(" "),
                shown.join(" "),
                map_text(&retraction)
            );
            let json = json!({ "invariant": "core", "graph": g.label(), "value": vertices.len(),
                "vertices": vertices, "edges": edges, "retraction": VertexMapJson::from(&retraction) });
            Outcome::ok(text, json)
        }
        InvariantKind::Lpartite => {
            let parts = is_l_partite_with(g, l, budget)?;
            let parts: Option<Vec<Vec<String>>> = parts.map(|ps| ps.iter().map(|p| ids(g, p)).collect());
            let mut text = format!("{} is {l}-partite: {}\n", g.label(), if parts.is_some() { "yes" } else { "no" });
            for p in parts.iter().flatten() {
                let _ = writeln!(text, "  part [{}]", p.join(" "));
            }
            let json = json!({ "invariant": "lpartite", "graph": g.label(), "l": l,
                "value": parts.is_some(), "parts": parts });
            Outcome::decided(parts.is_some(), text, json)
        }
    })
}

fn cover(which: CoverKind, g: &Graph, l: usize, budget: &Budget) -> Result<Outcome> {
    let (name, r): (String, CoverResult) = match which {
        CoverKind::Cc => ("cc".into(), clique_cover_number_with(g, budget)?),
        CoverKind::Particity => (format!("beta_{l}"), particity_with(g, l, budget)?),
        CoverKind::Bipdim => (format!("d_{l}"), partite_dimension_with(g, l, budget)?),
    };
    let mut text = format!("{name}({}) = {}\n", g.label(), r.value_string());
    let _ = writeln!(text, "lower: {}", r.lower);
    if let Some(cert) = &r.certificate {
        for (i, p) in cert.pieces.iter().enumerate() {
            let edges: Vec<String> = p.sub.edges().iter().map(|&e| edge_text(g, e)).collect();
            let witness = match &p.witness {
                Witness::Clique(c) => format!("clique [{}]", ids(g, c).join(" ")),
                Witness::Parts(parts) => {
                    let parts: Vec<String> = parts.iter().map(|q| format!("[{}]", ids(g, q).join(" "))).collect();
                    format!("parts {}", parts.join(" "))
                }
                Witness::Map(_) => "map".into(),
                Witness::None => String::new(),
            };
            let _ = writeln!(text, "  piece {}: edges [{}] {witness}", i + 1, edges.join(" "));
        }
    }
    let mut json = cover_json(&r);
    json["cover"] = json!(name);
    json["graph"] = json!(g.label());
    Ok(Outcome::ok(text, json))
}

fn design(plan: PlanJson, q: &QuasiHom, out: Option<&Path>) -> Result<Outcome> {
    let optimal = plan.optimal.unwrap_or(false);
    let mut text = format!(
        "plan {} -> {}: {} pieces{}\n",
        plan.source,
        plan.target,
        q.len(),
        if optimal { ", optimal" } else { "" }
    );
    plan_text(&mut text, q);
    let mut json = json!({ "pieces": q.len(), "optimal": optimal, "plan": plan });
    if let Some(path) = out {
        write_file(path, &serde_json::to_vec_pretty(&plan)?)?;
        let _ = writeln!(text, "plan written to {}", path.display());
        json["out"] = json!(path.display().to_string());
    }
    Ok(Outcome::ok(text, json))
}

fn verify(path: &PathBuf, g: &Graph, h: &Graph, injective: bool, check_optimal: bool, budget: &Budget) -> Result<Outcome> {
    let text_in = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let plan = parse_plan(&text_in).with_context(|| format!("{}", path.display()))?;
    let injective = injective || plan.kind == Kind::Injective;
    let quasi = match plan_from_json(&plan, g, h) {
        Ok(q) => q,
        // A plan that does not even fit the graphs fails verification.
        Err(e) => {
            let text = format!("invalid: {e}\n");
            let json = json!({ "valid": false, "pieces": plan.pieces.len(), "failures": [e.to_string()],
                "optimal": null });
            return Ok(Outcome::decided(false, text, json));
        }
    };
    let report = if check_optimal {
        verify_optimality(&quasi, g, h, injective, budget)?
    } else {
        verify_quasi_hom(&quasi, g, h, injective)
    };
    let mut text = format!("{report}\n");
    if let Some(optimal) = report.optimal {
        let _ = writeln!(text, "optimal: {}", if optimal { "yes" } else { "no" });
    }
    let failures: Vec<String> = report.failures.iter().map(ToString::to_string).collect();
    let json = json!({
        "valid": report.ok(),
        "pieces": report.pieces,
        "injective": injective,
        "failures": failures,
        "optimal": report.optimal,
    });
    Ok(Outcome::decided(report.ok(), text, json))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params.get(i).ok_or_else(|| Error::InvalidParameter(format!("missing parameter {what}")))?;
    Ok(raw.parse().map_err(|_| Error::InvalidParameter(format!("bad {what}: `{raw}`")))?)
}

pub fn family(name: &str, params: &[String], seed: u64) -> Result<Family> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            return Err(Error::InvalidParameter(format!("{name} takes {k} parameter(s), got {}", params.len())).into());
        }
        Ok(())
    };
    let f = match name {
        "complete" => {
            want(1)?;
            Family::Complete(param(params, 0, "n")?)
        }
        "path" => {
            want(1)?;
            Family::Path(param(params, 0, "m")?)
        }
        "cycle" => {
            want(1)?;
            Family::Cycle(param(params, 0, "n")?)
        }
        "edgeless" => {
            want(1)?;
            Family::Edgeless(param(params, 0, "n")?)
        }
        "multipartite" => {
            let sizes = (0..params.len()).map(|i| param(params, i, "part size")).collect::<Result<Vec<usize>>>()?;
            Family::CompleteMultipartite(sizes)
        }
        "grotzsch" => {
            want(0)?;
            Family::Grotzsch
        }
        "kneser" => {
            want(2)?;
            Family::Kneser { n: param(params, 0, "n")?, k: param(params, 1, "k")? }
        }
        "random" => {
            want(2)?;
            Family::Random { n: param(params, 0, "n")?, p: param(params, 1, "p")?, seed }
        }
        "loop" => {
            want(0)?;
            Family::LoopVertex
        }
        other => return Err(Error::InvalidParameter(format!("unknown family `{other}`")).into()),
    };
    Ok(f)
}

fn gen(name: &str, params: &[String], seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let g = generate(&family(name, params, seed)?)?;
    let hgf = String::from_utf8(serialize_hgf(&g)).expect("HGF is UTF-8");
    let mut json = json!({ "name": g.label(), "order": g.order(), "size": g.size(), "hgf": hgf });
    let text = match out {
        Some(path) => {
            write_file(path, hgf.as_bytes())?;
            json["out"] = json!(path.display().to_string());
            format!("{}: {} vertices, {} edges written to {}\n", g.label(), g.order(), g.size(), path.display())
        }
        None => hgf,
    };
    Ok(Outcome::ok(text, json))
}
