use std::path::Path;

use onerel::automorphisms::{example_endomorphism, Endomorphism};
use onerel::formats::{parse_endomorphism, parse_presentation, write_endomorphism, write_presentation};
use onerel::primitivity::{
    cut_vertex_condition, f2_necessary_condition, verify_x1_times_commutator, whitehead_minimize,
};
use onerel::small_cancellation::SmallCancellationError;
use onerel::{
    certify_automorphism, parse_word, parse_word_inferred, CyclicWord, ExampleKind, Presentation,
    Rational, WhiteheadGraph, Word,
};
use serde_json::{json, Value};

use crate::report::{CliError, Outcome, Report};

type Result<T> = std::result::Result<T, CliError>;

fn load_presentation(report: &mut Report, path: &Path) -> Result<Presentation> {
    let text = report.read_file(path)?;
    parse_presentation(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_endomorphism(report: &mut Report, path: &Path) -> Result<Endomorphism> {
    let text = report.read_file(path)?;
    parse_endomorphism(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn word_arg(report: &mut Report, text: &str, rank: Option<usize>) -> Result<Word> {
    report.inline("word", text);
    let parsed = match rank {
        Some(n) => parse_word(text, n),
        None => parse_word_inferred(text, 2),
    };
    parsed.map_err(|e| CliError::Usage(format!("word: {e}")))
}

fn precondition(e: SmallCancellationError) -> CliError {
    CliError::Precondition(e.to_string())
}

fn words(ws: &[Word]) -> Vec<String> {
    ws.iter().map(Word::to_string).collect()
}

pub fn check_theorem(report: &mut Report, path: &Path) -> Result<Outcome> {
    let p = load_presentation(report, path)?;
    let h = p.hypothesis_check();
    let mut summary = vec![
        format!("relator {} in rank {}", h.relator, h.rank),
        format!("rank at least 3: {}", if h.rank_ok { "yes" } else { "no" }),
        format!("|r| = {}, max piece = {}", h.pieces.relator_length, h.pieces.max_piece),
    ];
    match (&h.pieces.feasible_lambda, h.lambda_witness) {
        (Some((lo, hi)), Some(lambda)) => {
            summary.push(format!("feasible λ: ({lo}, {hi}], witness λ = {lambda}"));
        }
        _ => summary.push("feasible λ: none".to_string()),
    }
    for l in &h.lengths {
        summary.push(format!(
            "length {}: {} subwords, {} not 2-connected",
            l.length,
            l.subwords,
            l.failures.len()
        ));
    }
    for f in &h.failed {
        summary.push(format!("failed: {f}"));
    }
    let passed = h.passed();
    let result = serde_json::to_value(&h).expect("report serializes");
    Ok(Outcome::new(if passed { "PASS" } else { "FAIL" }, u8::from(!passed), summary, result))
}

pub fn classify(report: &mut Report, pres: &Path, aut: &Path) -> Result<Outcome> {
    let p = load_presentation(report, pres)?;
    let e = load_endomorphism(report, aut)?;
    if e.rank() != p.rank() {
        return Err(CliError::Usage(format!(
            "automorphism has rank {} but the presentation has rank {}",
            e.rank(),
            p.rank()
        )));
    }
    let a = match certify_automorphism(&e) {
        Ok(a) => a,
        Err(refusal) => {
            let summary = vec![refusal.to_string()];
            let result = json!({ "certified": false, "nielsen_reduced": words(&refusal.reduced) });
            return Ok(Outcome::new("NotAnAutomorphism", 1, summary, result));
        }
    };
    let verdict = a.classify_kernel(&p).map_err(precondition)?;
    let mut summary = vec![format!("certified automorphism of F_{}", a.rank())];
    summary.push("inverse:".to_string());
    summary.extend(a.inverse_map().to_string().lines().map(|l| format!("  {l}")));
    if let Some(g) = verdict.conjugator() {
        summary.push(format!("conjugator: {g}"));
    }
    let result = json!({
        "certified": true,
        "inverse": words(a.inverse_map().images()),
        "kernel": verdict,
    });
    Ok(Outcome::new(verdict.name(), u8::from(!verdict.in_kernel()), summary, result))
}

pub fn examples(report: &mut Report, kind: &str, rank: usize, power: u32, out_dir: &Path) -> Result<Outcome> {
    let Some(k) = ExampleKind::from_name(kind) else {
        let names: Vec<&str> = ExampleKind::ALL.iter().map(|k| k.name()).collect();
        return Err(CliError::Usage(format!("unknown kind `{kind}`; expected one of {}", names.join(", "))));
    };
    let (p, e) = example_endomorphism(k, rank, power).map_err(|e| CliError::Usage(e.to_string()))?;
    let stem = format!("{}-n{rank}-p{power}", k.name());
    let pres_path = out_dir.join(format!("{stem}.pres"));
    let aut_path = out_dir.join(format!("{stem}.aut"));
    let write = |path: &Path, text: String| {
        std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    };
    write(&pres_path, write_presentation(&p))?;
    write(&aut_path, write_endomorphism(&e))?;
    report.inline("parameters", &format!("{} {rank} {power}", k.name()));
    let mut summary = vec![
        format!("wrote {}", pres_path.display()),
        format!("wrote {}", aut_path.display()),
    ];
    let files = json!({
        "presentation": pres_path.display().to_string(),
        "automorphism": aut_path.display().to_string(),
    });
    match certify_automorphism(&e) {
        Ok(a) => {
            let kernel = if p.satisfies_c_prime(Rational::new(1, 6)) {
                Some(a.classify_kernel(&p).map_err(precondition)?)
            } else {
                None
            };
            match &kernel {
                Some(v) => summary.push(format!("certified; kernel verdict {}", v.name())),
                None => summary.push("certified; relator is not C'(1/6), kernel not classified".to_string()),
            }
            let result = json!({ "files": files, "certified": true, "kernel": kernel });
            Ok(Outcome::new("certified", 0, summary, result))
        }
        Err(refusal) => {
            summary.push(refusal.to_string());
            let result = json!({
                "files": files,
                "certified": false,
                "nielsen_reduced": words(&refusal.reduced),
            });
            Ok(Outcome::new("NotAnAutomorphism", 1, summary, result))
        }
    }
}

pub fn primitive(report: &mut Report, text: &str, rank: Option<usize>) -> Result<Outcome> {
    let w = word_arg(report, text, rank)?;
    if w.rank() < 2 {
        return Err(CliError::Usage("rank must be at least 2".to_string()));
    }
    if w.is_empty() {
        return Err(CliError::Usage("the empty word is not primitive in any sense tested here".to_string()));
    }
    let trace = whitehead_minimize(&w);
    let primitive = trace.minimal.len() == 1;
    let core = w.cyclic_reduce().core;
    let cut = cut_vertex_condition(&core).ok();
    let f2 = f2_necessary_condition(&w).ok();
    let mut summary = vec![
        format!("word {w} in rank {}", w.rank()),
        format!("cyclic length {} minimizes to {} ({} steps)", CyclicWord::new(&w).len(), trace.minimal, trace.steps.len()),
    ];
    if let Some(c) = cut {
        summary.push(format!("cyclic Whitehead graph has a cut vertex or is disconnected: {c}"));
    }
    if let Some(f) = f2 {
        summary.push(format!("rank-2 exponent condition: {f}"));
    }
    let result = json!({
        "word": w,
        "rank": w.rank(),
        "primitive": primitive,
        "minimal": trace.minimal.to_string(),
        "steps": trace.steps.len(),
        "cut_vertex_condition": cut,
        "f2_condition": f2,
    });
    let verdict = if primitive { "primitive" } else { "not primitive" };
    Ok(Outcome::new(verdict, u8::from(!primitive), summary, result))
}

pub fn member(report: &mut Report, text: &str, pres: &Path) -> Result<Outcome> {
    let p = load_presentation(report, pres)?;
    let w = word_arg(report, text, Some(p.rank()))?;
    let trace = p.dehn_reduce(&w).map_err(precondition)?;
    let member = trace.residual.is_empty();
    let mut summary = vec![
        format!("word {w}"),
        format!("{} rewrites, residual {}", trace.rewrites(), trace.residual),
    ];
    let mut factors = Vec::new();
    if member {
        let (product, _) = trace.relator_product();
        summary.push(format!("product of {} conjugates of r^±1:", product.len()));
        for f in &product {
            let sign = if f.exponent > 0 { "r" } else { "r^-1" };
            summary.push(format!("  ({sign})^({})", f.conjugator));
            factors.push(json!({ "conjugator": f.conjugator, "exponent": f.exponent }));
        }
    }
    let result = json!({
        "word": w,
        "residual": trace.residual,
        "rewrites": trace.rewrites(),
        "factors": factors,
    });
    let verdict = if member { "member" } else { "not member" };
    Ok(Outcome::new(verdict, u8::from(!member), summary, result))
}

pub fn whgraph(report: &mut Report, text: &str, cyclic: bool, dot: bool, rank: Option<usize>) -> Result<Outcome> {
    let w = word_arg(report, text, rank)?;
    let g = if cyclic {
        WhiteheadGraph::of_cyclic(&CyclicWord::new(&w))
    } else {
        WhiteheadGraph::of_word(&w)
    };
    let cut: Vec<String> = g.cut_vertices().iter().map(|v| v.to_string()).collect();
    let two = g.is_two_connected();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|(&(a, b), &m)| json!({ "from": a.to_string(), "to": b.to_string(), "multiplicity": m }))
        .collect();
    let mut summary = vec![format!(
        "{} Whitehead graph of {w}: {} edges on {} vertices",
        if cyclic { "cyclic" } else { "linear" },
        g.edge_count(),
        g.support().len()
    )];
    for (&(a, b), &m) in g.edges() {
        summary.push(format!("  {a} -- {b}{}", if m > 1 { format!(" (x{m})") } else { String::new() }));
    }
    summary.push(format!("connected: {}", g.is_connected()));
    summary.push(format!("cut vertices: {}", if cut.is_empty() { "none".to_string() } else { cut.join(" ") }));
    let result = json!({
        "word": w,
        "cyclic": cyclic,
        "edges": edges,
        "connected": g.is_connected(),
        "cut_vertices": cut,
        "two_connected": two,
        "dot": g.to_dot(),
    });
    let mut outcome = Outcome::new(if two { "2-connected" } else { "not 2-connected" }, 0, summary, result);
    if dot {
        outcome.raw = Some(g.to_dot());
    }
    Ok(outcome)
}

pub fn pieces(report: &mut Report, pres: &Path) -> Result<Outcome> {
    let p = load_presentation(report, pres)?;
    let a = p.piece_analysis();
    let sixth = p.satisfies_c_prime(Rational::new(1, 6));
    let mut summary = vec![
        format!("relator {} in rank {}", p.relator(), p.rank()),
        format!("symmetrized set: {} elements", p.symmetrized().len()),
        format!("|r| = {}, max piece = {}", a.relator_length, a.max_piece),
    ];
    match &a.feasible_lambda {
        Some((lo, hi)) => summary.push(format!("C'(λ) holds for λ in ({lo}, {hi}]")),
        None => summary.push("no λ ≤ 1/6 satisfies C'(λ)".to_string()),
    }
    let result = json!({
        "symmetrized": p.symmetrized().len(),
        "pieces": a,
        "c_prime_sixth": sixth,
    });
    Ok(Outcome::new(if sixth { "C'(1/6)" } else { "not C'(1/6)" }, 0, summary, result))
}

pub fn verify_1_3(report: &mut Report, max_length: usize) -> Result<Outcome> {
    report.inline("max_length", &max_length.to_string());
    if max_length > 16 {
        return Err(CliError::Usage("max length above 16 is not supported".to_string()));
    }
    let r = verify_x1_times_commutator(max_length);
    let mut summary = vec![
        format!("commutator-subgroup words c with |c| ≤ {max_length}: {}", r.total_c),
        format!("x1·c cyclically reduced: {}, of which primitive: {}", r.cyclically_reduced, r.primitive),
        format!(
            "x1·c not cyclically reduced: {}, primitive: {}, conjugate to x1: {}",
            r.reducible, r.reducible_primitive, r.reducible_primitive_conjugate_to_x1
        ),
    ];
    for c in &r.counterexamples {
        summary.push(format!("counterexample: c = {c}"));
    }
    let passed = r.passed();
    let result = serde_json::to_value(&r).expect("report serializes");
    Ok(Outcome::new(if passed { "PASS" } else { "FAIL" }, u8::from(!passed), summary, result))
}
