use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use super::audit::{is_benson_gordon, run_audit, run_pipeline, PipelineOptions};
use super::file::{load, load_graded, LieAlgebraFile};
use super::report::render_verdict;
use super::CliError;
use crate::exactla::{format_rational, parse_rational, Laurent, Rational};
use crate::gca::{cohomology, GradedAlgebra};
use crate::liealg::{LieAlgebra, SplittingSpec};
use crate::mostow::{
    audit_star_list, benson_gordon_order_hint, benson_gordon_star_claims, build_fiber_action, certify_triangular,
    max_nilpotent_submodule, presentation, FiberActionSpec, OrderHint,
};
use crate::sullivan::{bigraded_model, minimal_model, BigradedModel, MinimalModelReport};

#[derive(Debug, Parser)]
#[command(name = "solvmodel", version, about = "Exact Sullivan-model computations for solvable Lie algebras")]
pub struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the sampled unipotent twists.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Record wall time per pipeline step.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and report structural predicates.
    Check {
        file: PathBuf,
        /// Basis name or index of the complement S of the nilradical.
        #[arg(long)]
        s_index: Option<String>,
    },
    /// Betti numbers and representative cocycles.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Chevalley–Eilenberg generators and differentials.
    Ce { file: PathBuf },
    /// Action on the cohomology of the nilradical, its triangular form and
    /// the maximal unipotent submodule.
    Mostow {
        file: PathBuf,
        #[arg(long)]
        s_index: Option<String>,
        /// Twist R as comma-separated rationals in nilradical coordinates.
        #[arg(long = "R", value_name = "R")]
        r: Option<String>,
        /// Presentation degree cutoff.
        #[arg(long, default_value_t = 5)]
        cutoff: u32,
    },
    /// Bigraded model of a graded algebra file or of the unipotent submodule.
    Bigraded {
        #[arg(long, conflicts_with = "from_mostow", required_unless_present = "from_mostow")]
        input: Option<PathBuf>,
        #[arg(long)]
        from_mostow: Option<PathBuf>,
        #[arg(long)]
        s_index: Option<String>,
        #[arg(long, default_value_t = 5)]
        degree_cutoff: u32,
        #[arg(long, default_value_t = 4)]
        stage_cutoff: u32,
    },
    /// Minimal model of the CE complex.
    Minimal {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        degree_cutoff: u32,
        #[arg(long, default_value_t = 8)]
        stage_cutoff: u32,
    },
    /// Run the whole comparison and check every recorded claim.
    Audit {
        file: PathBuf,
        #[arg(long)]
        s_index: Option<String>,
    },
    /// Run the comparison and print only the verdict.
    Certificate {
        file: PathBuf,
        #[arg(long)]
        s_index: Option<String>,
    },
}

/// Text to print and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn laurent_json(l: &Laurent) -> Value {
    let map: BTreeMap<String, String> = l.terms().map(|(k, c)| (k.to_string(), format_rational(c))).collect();
    json!(map)
}

fn resolve_s(g: &LieAlgebra, file: &LieAlgebraFile, flag: Option<&str>) -> Result<Option<usize>, CliError> {
    match flag.or(file.s.as_deref()) {
        Some(key) => Ok(Some(g.resolve(key)?)),
        None => Ok(None),
    }
}

fn require_s(g: &LieAlgebra, file: &LieAlgebraFile, flag: Option<&str>) -> Result<usize, CliError> {
    resolve_s(g, file, flag)?
        .ok_or_else(|| CliError::Usage("no complement S given: pass --s-index or set \"s\" in the file".into()))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check { file, s_index } => check(cli, file, s_index.as_deref()),
        Command::Cohomology { file, max_degree } => cmd_cohomology(cli, file, *max_degree),
        Command::Ce { file } => ce(cli, file),
        Command::Mostow { file, s_index, r, cutoff } => mostow(cli, file, s_index.as_deref(), r.as_deref(), *cutoff),
        Command::Bigraded { input, from_mostow, s_index, degree_cutoff, stage_cutoff } => {
            bigraded(cli, input.as_deref(), from_mostow.as_deref(), s_index.as_deref(), *degree_cutoff, *stage_cutoff)
        }
        Command::Minimal { file, degree_cutoff, stage_cutoff } => minimal(cli, file, *degree_cutoff, *stage_cutoff),
        Command::Audit { file, s_index } => audit(cli, file, s_index.as_deref(), false),
        Command::Certificate { file, s_index } => audit(cli, file, s_index.as_deref(), true),
    }
}

fn check(cli: &Cli, path: &Path, s_flag: Option<&str>) -> Result<Outcome, CliError> {
    let (g, file) = load(path)?;
    let s = resolve_s(&g, &file, s_flag)?;
    let spec = s.map(|i| SplittingSpec::complement_of(&g, i));
    let cs = g.completely_solvable_certificate(spec.as_ref());
    let (cs_status, cs_reason) = match &cs {
        crate::liealg::CompletelySolvable::Certified(r) => ("Certified", r.clone()),
        crate::liealg::CompletelySolvable::Undetermined(r) => ("Undetermined", r.clone()),
    };
    let weights = match &spec {
        Some(spec) => Some(g.verify_splitting(spec)?.weights),
        None => None,
    };
    if cli.json {
        return Ok(Outcome::ok(to_json(&json!({
            "name": g.name(),
            "dimension": g.dimension(),
            "valid": true,
            "unimodular": g.is_unimodular(),
            "nilpotent": g.is_nilpotent(),
            "solvable": g.is_solvable(),
            "completely_solvable": {"status": cs_status, "reason": cs_reason},
            "weights": weights.as_ref().map(|w| w.iter().map(format_rational).collect::<Vec<_>>()),
        }))));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} (dimension {})", g.name(), g.dimension());
    let _ = writeln!(out, "valid: true");
    let _ = writeln!(out, "unimodular: {}", g.is_unimodular());
    let _ = writeln!(out, "nilpotent: {}", g.is_nilpotent());
    let _ = writeln!(out, "solvable: {}", g.is_solvable());
    let _ = writeln!(out, "completely solvable: {cs_status} ({cs_reason})");
    if let Some(w) = weights {
        let _ = writeln!(out, "weights of ad S: ({})", w.iter().map(format_rational).collect::<Vec<_>>().join(", "));
    }
    Ok(Outcome::ok(out))
}

fn cmd_cohomology(cli: &Cli, path: &Path, max_degree: Option<u32>) -> Result<Outcome, CliError> {
    let (g, _) = load(path)?;
    let (a, d) = g.ce_complex()?;
    let top = max_degree.unwrap_or(g.dimension() as u32).min(a.cutoff().saturating_sub(1));
    let h = cohomology(&a, &d, top)?;
    let reps: Vec<Vec<String>> = (0..=top).map(|p| h.representatives(p).iter().map(|r| a.format(r)).collect()).collect();
    if cli.json {
        return Ok(Outcome::ok(to_json(&json!({"name": g.name(), "betti": h.betti_numbers(), "representatives": reps}))));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}: Betti numbers ({})", g.name(), h.betti_numbers().iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    for (p, r) in reps.iter().enumerate() {
        let _ = writeln!(out, "H^{p}: {}", r.iter().map(|s| format!("[{s}]")).collect::<Vec<_>>().join(", "));
    }
    Ok(Outcome::ok(out))
}

fn ce(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let (g, _) = load(path)?;
    let (a, d) = g.ce_complex()?;
    let rows: Vec<(String, String)> =
        (0..a.generator_count() as u32).map(|i| (a.name(i).to_string(), a.format(d.image(i)))).collect();
    if cli.json {
        let gens: Vec<Value> = rows.iter().map(|(n, e)| json!({"name": n, "degree": 1, "d": e})).collect();
        return Ok(Outcome::ok(to_json(&json!({"name": g.name(), "generators": gens}))));
    }
    let mut out = String::new();
    for (n, e) in rows {
        let _ = writeln!(out, "d {n} = {e}");
    }
    Ok(Outcome::ok(out))
}

fn parse_twist(text: &str, dim: usize) -> Result<Vec<Rational>, CliError> {
    let r: Vec<Rational> = text
        .split(',')
        .enumerate()
        .map(|(i, s)| {
            parse_rational(s).ok_or_else(|| CliError::Usage(format!("--R entry {i}: {s:?} is not a rational")))
        })
        .collect::<Result<_, _>>()?;
    if r.len() != dim {
        return Err(CliError::Usage(format!("--R needs {dim} entries, got {}", r.len())));
    }
    Ok(r)
}

fn mostow(cli: &Cli, path: &Path, s_flag: Option<&str>, r: Option<&str>, cutoff: u32) -> Result<Outcome, CliError> {
    let (g, file) = load(path)?;
    let s = require_s(&g, &file, s_flag)?;
    let spec = SplittingSpec::complement_of(&g, s);
    let splitting = g.verify_splitting(&spec)?;
    let n = g.subalgebra(&spec.nilradical_indices)?;
    let twist = r.map(|t| parse_twist(t, n.dimension())).transpose()?;
    let f = build_fiber_action(&n, &FiberActionSpec::from_splitting(&splitting, twist))?;
    let bg = is_benson_gordon(&g, s);
    let hint = if bg { benson_gordon_order_hint() } else { OrderHint::none() };
    let cert = certify_triangular(&f, &hint)?;
    let u = max_nilpotent_submodule(&f, &cert)?;
    let pres = presentation(&u.algebra, cutoff)?;
    let star = if bg { Some(audit_star_list(&f, &cert, &benson_gordon_star_claims(), &["t"])?) } else { None };

    let eta: Vec<(String, &crate::gca::Element<Laurent>)> =
        (0..f.algebra.generator_count() as u32).map(|i| (f.algebra.name(i).to_string(), f.eta.image(i))).collect();
    if cli.json {
        let eta_json: BTreeMap<String, BTreeMap<String, Value>> = eta
            .iter()
            .map(|(name, img)| {
                let terms = img.terms().map(|(m, c)| (f.algebra.format_monomial(m), laurent_json(c))).collect();
                (name.clone(), terms)
            })
            .collect();
        let degrees: Vec<Value> = cert
            .degrees
            .iter()
            .map(|d| json!({"degree": d.degree, "order": d.labels.iter().zip(&d.order).map(|(_, &i)| cert.label_of(d.degree, i).unwrap_or_default().to_string()).collect::<Vec<_>>(), "diagonal_exponents": d.diagonal}))
            .collect();
        let gens: Vec<Value> =
            pres.generators.iter().map(|g| json!({"name": g.name, "degree": g.degree, "class": g.label})).collect();
        let rels: Vec<Vec<String>> =
            pres.minimal_relations.iter().map(|rs| rs.iter().map(|e| pres.describe(e)).collect()).collect();
        let mut doc = json!({
            "name": g.name(),
            "weights": splitting.weights.iter().map(format_rational).collect::<Vec<_>>(),
            "twist": f.spec.twist.iter().map(format_rational).collect::<Vec<_>>(),
            "eta": eta_json,
            "triangular": degrees,
            "submodule_dims": u.dims(),
            "submodule_basis": (0..u.dims().len() as u32).map(|p| u.algebra.names(p).to_vec()).collect::<Vec<_>>(),
            "presentation": {"generators": gens, "minimal_relations": rels},
        });
        if let Some(a) = &star {
            doc["star_audit"] = json!({
                "missing": a.missing,
                "extra": a.extra.iter().map(|s| s.label.clone()).collect::<Vec<_>>(),
            });
        }
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "weights: ({})", splitting.weights.iter().map(format_rational).collect::<Vec<_>>().join(", "));
    for (name, img) in &eta {
        let _ = writeln!(out, "η({name}) = {}", f.algebra.format(img));
    }
    for d in &cert.degrees {
        if d.labels.is_empty() {
            continue;
        }
        let diag: Vec<String> = d
            .order
            .iter()
            .zip(&d.diagonal)
            .map(|(&i, k)| format!("{}:{k}", cert.label_of(d.degree, i).unwrap_or_default()))
            .collect();
        let _ = writeln!(out, "H^{} diagonal exponents: {}", d.degree, diag.join(" "));
    }
    let _ = writeln!(out, "U dimensions: {:?}", u.dims());
    for p in 1..u.dims().len() as u32 {
        if u.algebra.dim(p) > 0 {
            let _ = writeln!(out, "U^{p}: {}", u.algebra.names(p).join(", "));
        }
    }
    let _ = writeln!(out, "generators of U by degree: {:?}", pres.generator_counts());
    for g in &pres.generators {
        let _ = writeln!(out, "  {} (degree {}) = {}", g.name, g.degree, g.label);
    }
    for (p, rs) in pres.minimal_relations.iter().enumerate() {
        for e in rs {
            let _ = writeln!(out, "  relation in degree {p}: {} = 0", pres.describe(e));
        }
    }
    if let Some(a) = star {
        let _ = writeln!(out, "claimed fixed classes not found: {}", if a.missing.is_empty() { "none".into() } else { a.missing.join(", ") });
        let extra: Vec<String> = a.extra.iter().map(|s| s.label.clone()).collect();
        let _ = writeln!(out, "further fixed classes: {}", if extra.is_empty() { "none".into() } else { extra.join(", ") });
    }
    Ok(Outcome::ok(out))
}

fn bigraded_json(m: &BigradedModel) -> Value {
    let gens: Vec<Value> = (0..m.algebra.generator_count() as u32)
        .map(|i| {
            json!({
                "name": m.algebra.name(i),
                "degree": m.algebra.generator_degree(i),
                "stage": m.stage(i),
                "d": m.algebra.format(m.differential.image(i)),
                "maps_to": m.labels[i as usize],
            })
        })
        .collect();
    json!({
        "degree_cutoff": m.degree_cutoff,
        "stage_cutoff": m.stage_cutoff,
        "stage_cutoff_hit": m.stage_cutoff_hit,
        "settled": m.settled,
        "generators": gens,
    })
}

fn bigraded(
    cli: &Cli,
    input: Option<&Path>,
    from_mostow: Option<&Path>,
    s_flag: Option<&str>,
    degree_cutoff: u32,
    stage_cutoff: u32,
) -> Result<Outcome, CliError> {
    let h: GradedAlgebra = match (input, from_mostow) {
        (Some(p), _) => load_graded(p)?,
        (None, Some(p)) => {
            let (g, file) = load(p)?;
            let s = require_s(&g, &file, s_flag)?;
            let opts = PipelineOptions::new(s);
            let spec = SplittingSpec::complement_of(&g, opts.s_index);
            let splitting = g.verify_splitting(&spec)?;
            let n = g.subalgebra(&spec.nilradical_indices)?;
            let f = build_fiber_action(&n, &FiberActionSpec::from_splitting(&splitting, None))?;
            let hint = if is_benson_gordon(&g, s) { benson_gordon_order_hint() } else { OrderHint::none() };
            let cert = certify_triangular(&f, &hint)?;
            max_nilpotent_submodule(&f, &cert)?.algebra
        }
        (None, None) => return Err(CliError::Usage("pass --input or --from-mostow".into())),
    };
    let m = bigraded_model(&h, degree_cutoff, stage_cutoff)?;
    if cli.json {
        return Ok(Outcome::ok(to_json(&bigraded_json(&m))));
    }
    let mut out = String::new();
    for line in m.describe() {
        let _ = writeln!(out, "{line}");
    }
    let unsettled: Vec<String> =
        m.settled.iter().enumerate().filter(|(_, s)| !**s).map(|(p, _)| p.to_string()).collect();
    if unsettled.is_empty() {
        let _ = writeln!(out, "all degrees ≤ {degree_cutoff} settled");
    } else {
        let _ = writeln!(out, "stage cutoff hit; unsettled degrees: {}", unsettled.join(", "));
    }
    Ok(Outcome::ok(out))
}

fn minimal_json(r: &MinimalModelReport) -> Value {
    let gens: Vec<Value> = r
        .generators
        .iter()
        .map(|g| json!({"name": g.name, "degree": g.degree, "stage": g.stage, "d": r.algebra.format(&g.differential)}))
        .collect();
    json!({
        "degree_cutoff": r.degree_cutoff,
        "counts": r.counts(),
        "closed_counts": (0..=r.degree_cutoff).map(|p| r.closed_count(p)).collect::<Vec<_>>(),
        "stabilized": r.stabilized,
        "quasi_isomorphic": r.quasi_isomorphic,
        "model_betti": r.model_betti,
        "target_betti": r.target_betti,
        "generators": gens,
    })
}

fn minimal(cli: &Cli, path: &Path, degree_cutoff: u32, stage_cutoff: u32) -> Result<Outcome, CliError> {
    let (g, _) = load(path)?;
    let (a, d) = g.ce_complex()?;
    let a = a.with_cutoff(a.cutoff().max(degree_cutoff + 2));
    let r = minimal_model(&a, &d, degree_cutoff, stage_cutoff)?;
    if cli.json {
        return Ok(Outcome::ok(to_json(&minimal_json(&r))));
    }
    let mut out = String::new();
    for line in r.describe() {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "generators by degree: {:?}", r.counts());
    let _ = writeln!(out, "closed generators in degree 4: {}", if degree_cutoff >= 4 { r.closed_count(4) } else { 0 });
    let _ = writeln!(out, "quasi-isomorphism verified: {}", r.quasi_isomorphism_verified());
    let _ = writeln!(out, "Betti numbers: {:?}", r.model_betti);
    Ok(Outcome::ok(out))
}

fn audit(cli: &Cli, path: &Path, s_flag: Option<&str>, verdict_only: bool) -> Result<Outcome, CliError> {
    let (g, file) = load(path)?;
    let s = require_s(&g, &file, s_flag)?;
    let mut opts = PipelineOptions::new(s);
    opts.seed = cli.seed;
    opts.timings = cli.timings;
    let (report, pipeline) = if verdict_only {
        let p = run_pipeline(&g, &opts)?;
        let mut r = super::AuditReport::new(g.name());
        r.verdict = Some(p.verdict.clone());
        (r, p)
    } else {
        run_audit(&g, &opts)?
    };
    let code = if report.is_certificate() { 0 } else { 2 };
    let stdout = match (verdict_only, cli.json) {
        (true, true) => serde_json::to_string_pretty(&pipeline.verdict).expect("plain data serializes"),
        (true, false) => render_verdict(&pipeline.verdict),
        (false, true) => report.to_json(),
        (false, false) => report.render_text(),
    };
    Ok(Outcome { stdout, code })
}
