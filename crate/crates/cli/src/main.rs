//! `drgtrade`: build distance-regular hosts, construct and verify clique
//! bitrades, and run the reproducible check matrix.
//!
//! Exit codes: 0 when every check passes, 1 when a theorem check fails,
//! 2 on usage errors (bad flags, unknown family, unreadable input, cap).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drgtrade::bitrades::{check_eigen_criterion, min_bitrade, Bitrade, LabeledBitrade};
use drgtrade::error::Error;
use drgtrade::families::{Family, FamilyInstance};
use drgtrade::gfq::DEFAULT_CAP;
use drgtrade::graph::{distance_regularity_check, Graph};
use drgtrade::spectral::{intersection_matrix_eigenvalues, rat, theta_min, wd_bound, wd_coefficients};
use drgtrade::suite::{self, Host, Outcome, CHECKS, OPTIONAL_CHECK};

#[derive(Parser)]
#[command(name = "drgtrade", version, about = "Clique bitrades in distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone)]
struct Common {
    /// Host family, e.g. `johnson:6,3`, `grassmann:6,3,2`, `dual_polar_D:3,2`
    #[arg(long)]
    family: Option<Family>,
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
    /// Enumeration cap on vertex counts
    #[arg(long, env = "DRG_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a host graph and print its size
    Build(Common),
    /// Verify the clique system and the Delsarte condition
    Cliques(Common),
    /// Print a bitrade (`--bitrade min` constructs the minimum one)
    Bitrade(BitradeArgs),
    /// Run criteria a/b/c, minimality and the trade-subgraph check
    Verify(BitradeArgs),
    /// Weight-distribution bound at the least eigenvalue
    WdBound(Common),
    /// Certify distance-regularity against the closed-form array
    CheckDr(Common),
    /// Eigenvalues of the intersection matrix
    Spectrum(Common),
    /// Check the q-binomial product/sum identity
    Identity(IdentityArgs),
    /// Run the numbered check matrix
    Report(ReportArgs),
}

#[derive(Args)]
struct BitradeArgs {
    #[command(flatten)]
    common: Common,
    /// `min`, or a JSON file `{"host", "T0", "T1"}`
    #[arg(long, default_value = "min")]
    bitrade: String,
    #[arg(long, value_enum, default_value_t = Criterion::All)]
    criterion: Criterion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Criterion {
    A,
    B,
    C,
    All,
}

#[derive(Args)]
struct IdentityArgs {
    /// The product/sum identity (the only one available)
    #[arg(long, required = true)]
    eq5: bool,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// Run checks 1-11
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Run a single check (12 is the large optional instance)
    #[arg(long)]
    check: Option<u32>,
    /// Also run the optional check 12 after `--all`
    #[arg(long, requires = "all")]
    optional: bool,
    /// Append wall-clock times (makes output non-reproducible)
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Theorem(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_)
            | Error::NotDistanceRegular(_)
            | Error::CliquesNotDelsarte(_)
            | Error::NotCompletelyRegular(_)
            | Error::NonIntegerSpectrum { .. }
            | Error::Disconnected(_) => Failure::Theorem(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome2 = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.verb {
        Verb::Build(c) => build(&c),
        Verb::Cliques(c) => cliques(&c),
        Verb::Bitrade(b) => bitrade(&b),
        Verb::Verify(b) => verify(&b),
        Verb::WdBound(c) => wd(&c),
        Verb::CheckDr(c) => check_dr(&c),
        Verb::Spectrum(c) => spectrum(&c),
        Verb::Identity(i) => identity(&i),
        Verb::Report(r) => report(&r),
    };
    match result {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Theorem(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn family(c: &Common) -> Result<Family, Failure> {
    c.family.ok_or_else(|| Failure::Usage("--family is required".into()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// Key/value table with aligned values.
fn table(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().fold(String::new(), |mut s, (k, v)| {
        let _ = writeln!(s, "{k:<w$}  {v}");
        s
    })
}

fn build(c: &Common) -> Outcome2 {
    let f = family(c)?;
    let inst = f.build_capped(c.cap)?;
    let g = &inst.graph;
    if c.json {
        return Ok((serde_json::to_string(&g.to_json()).expect("graph serializes") + "\n", true));
    }
    let degree = g.is_regular().map_or("irregular".into(), |k| k.to_string());
    let cliques = inst.cliques.as_ref().map_or("none".into(), |s| format!("{} of order {}", s.len(), s.s() + 1));
    Ok((
        table(&[
            ("family", f.to_string()),
            ("vertices", g.vertex_count().to_string()),
            ("edges", g.edge_count().to_string()),
            ("degree", degree),
            ("cliques", cliques),
        ]),
        true,
    ))
}

fn cliques(c: &Common) -> Outcome2 {
    let host = Host::build(family(c)?, c.cap)?;
    let ksm = host.cliques.verify(&host.graph).map_err(|v| Failure::Theorem(v.to_string()))?;
    let theta = theta_min(&host.array)?;
    if c.json {
        let list: Vec<Vec<&str>> =
            host.cliques.cliques().iter().map(|cl| cl.iter().map(|&v| host.graph.label(v)).collect()).collect();
        let v = json!({
            "host": host.family.to_string(),
            "ksm": [ksm.k, ksm.s, ksm.m],
            "theta_min": theta.to_string(),
            "delsarte": true,
            "cliques": list,
        });
        return Ok((pretty(&v), true));
    }
    Ok((
        table(&[
            ("host", host.family.to_string()),
            ("(k,s,m)", ksm.to_string()),
            ("cliques", host.cliques.len().to_string()),
            ("theta_min", theta.to_string()),
            ("1 - k/theta_min", (rat(1) - rat(ksm.k as i64) / &theta).to_string()),
            ("delsarte", "true".into()),
        ]),
        true,
    ))
}

/// Resolves `--bitrade` and `--family` into a host instance and a bitrade.
fn load(b: &BitradeArgs) -> Result<(Family, FamilyInstance, Bitrade), Failure> {
    if b.bitrade == "min" {
        let f = family(&b.common)?;
        let inst = f.build_capped(b.common.cap)?;
        let t = min_bitrade(&inst.graph, f, b.common.cap)?;
        return Ok((f, inst, t));
    }
    let path = PathBuf::from(&b.bitrade);
    let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let labeled = LabeledBitrade::from_json(&text)?;
    let from_file: Family = labeled.host.parse()?;
    let f = match b.common.family {
        Some(f) if f != from_file => {
            return Err(Failure::Usage(format!("--family {f} but the file's host is {from_file}")));
        }
        _ => from_file,
    };
    let inst = f.build_capped(b.common.cap)?;
    let t = labeled.locate(&inst.graph)?;
    Ok((f, inst, t))
}

fn labels(g: &Graph, s: &[usize]) -> String {
    s.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

fn bitrade(b: &BitradeArgs) -> Outcome2 {
    let (f, inst, t) = load(b)?;
    let labeled = t.to_labeled(&inst.graph, f.to_string());
    if b.common.json {
        return Ok((labeled.to_json() + "\n", true));
    }
    Ok((
        table(&[
            ("host", f.to_string()),
            ("cardinality", t.len().to_string()),
            ("T0", labels(&inst.graph, t.t0())),
            ("T1", labels(&inst.graph, t.t1())),
        ]),
        true,
    ))
}

fn yes(b: bool) -> String {
    b.to_string()
}

fn verdict(holds: bool, witness: &Option<String>) -> String {
    match witness {
        Some(w) if !holds => format!("false ({w})"),
        _ => yes(holds),
    }
}

fn verify(b: &BitradeArgs) -> Outcome2 {
    let (f, inst, t) = load(b)?;
    let Some(cliques) = inst.cliques else {
        return verify_pseudo(b, f, &inst.graph, &t);
    };
    let host = Host::build(f, b.common.cap).map(|h| Host { cliques, ..h })?;
    let r = host.verify(&t)?;
    let g = &host.graph;
    let passed = match b.criterion {
        Criterion::A => r.a.holds,
        Criterion::B => r.b.holds,
        Criterion::C => r.c.holds,
        Criterion::All => r.is_bitrade(),
    } && r.criteria_agree();

    if b.common.json {
        let mut v = r.to_json();
        let labeled = t.to_labeled(g, f.to_string());
        v["T0"] = json!(labeled.t0);
        v["T1"] = json!(labeled.t1);
        v["passed"] = json!(passed);
        return Ok((pretty(&v), passed));
    }
    let mut rows = vec![
        ("host", f.to_string()),
        ("(k,s,m)", r.ksm.to_string()),
        ("theta", r.theta.to_string()),
        ("T0", labels(g, t.t0())),
        ("T1", labels(g, t.t1())),
        ("cardinality", t.len().to_string()),
    ];
    let show = |c: Criterion| b.criterion == Criterion::All || b.criterion == c;
    if show(Criterion::A) {
        rows.push(("criterion a", verdict(r.a.holds, &r.a.witness)));
    }
    if show(Criterion::B) {
        rows.push(("criterion b", verdict(r.b.holds, &r.b.witness)));
    }
    if show(Criterion::C) {
        rows.push(("criterion c", verdict(r.c.holds, &r.c.witness)));
    }
    rows.push(("criteria agree", yes(r.criteria_agree())));
    rows.push(("wd bound", r.wd_bound.to_string()));
    if let Some(m) = &r.minimality {
        rows.push(("meets bound", yes(m.meets_bound)));
        rows.push(("isometric", yes(m.isometric)));
        rows.push(("minimal", yes(m.minimal())));
    }
    if let Some(s) = &r.subgraph {
        rows.push(("subgraph array", s.array.to_string()));
        rows.push(("subgraph shells", format!("{:?}", s.shells)));
    }
    Ok((table(&rows), passed))
}

/// Hosts without a Delsarte clique system: only the eigenfunction criterion
/// at the least eigenvalue applies.
fn verify_pseudo(b: &BitradeArgs, f: Family, g: &Graph, t: &Bitrade) -> Outcome2 {
    if matches!(b.criterion, Criterion::A | Criterion::C) {
        return Err(Failure::Usage(format!("{f} has no clique system; only criterion b applies")));
    }
    let array = distance_regularity_check(g).map_err(|v| Failure::Theorem(v.to_string()))?;
    let theta = theta_min(&array)?;
    let eig = check_eigen_criterion(g, t, &theta);
    let bound = wd_bound(&array, &theta);
    let meets = eig.holds && rat(t.len() as i64) == bound;
    if b.common.json {
        let labeled = t.to_labeled(g, f.to_string());
        let v = json!({
            "host": labeled.host,
            "theta": theta.to_string(),
            "T0": labeled.t0,
            "T1": labeled.t1,
            "cardinality": t.len(),
            "criterion_b": { "holds": eig.holds, "witness": eig.witness },
            "wd_bound": bound.to_string(),
            "meets_bound": meets,
            "passed": eig.holds,
        });
        return Ok((pretty(&v), eig.holds));
    }
    let rows = [
        ("host", f.to_string()),
        ("theta", theta.to_string()),
        ("T0", labels(g, t.t0())),
        ("T1", labels(g, t.t1())),
        ("cardinality", t.len().to_string()),
        ("criterion b", verdict(eig.holds, &eig.witness)),
        ("wd bound", bound.to_string()),
        ("meets bound", yes(meets)),
    ];
    Ok((table(&rows), eig.holds))
}

fn wd(c: &Common) -> Outcome2 {
    let f = family(c)?;
    let array = f.expected()?.array;
    let theta = theta_min(&array)?;
    let w = wd_coefficients(&array, &theta);
    let bound = w.bound();
    if c.json {
        let coeffs: Vec<String> = w.coefficients.iter().map(|x| x.to_string()).collect();
        let v = json!({ "host": f.to_string(), "theta": theta.to_string(), "coefficients": coeffs, "wd_bound": bound.to_string() });
        return Ok((pretty(&v), true));
    }
    Ok((format!("{bound}\n"), true))
}

fn check_dr(c: &Common) -> Outcome2 {
    let f = family(c)?;
    let inst = f.build_capped(c.cap)?;
    let expected = f.expected()?.array;
    let (found, passed, detail) = match distance_regularity_check(&inst.graph) {
        Ok(a) => (Some(a.to_string()), a == expected, None),
        Err(v) => (None, false, Some(v.to_string())),
    };
    if c.json {
        let v = json!({
            "host": f.to_string(),
            "array": found,
            "expected": expected.to_string(),
            "distance_regular": found.is_some(),
            "matches": passed,
            "violation": detail,
        });
        return Ok((pretty(&v), passed));
    }
    let rows = [
        ("host", f.to_string()),
        ("array", found.or(detail).unwrap_or_default()),
        ("closed form", expected.to_string()),
        ("matches", yes(passed)),
    ];
    Ok((table(&rows), passed))
}

fn spectrum(c: &Common) -> Outcome2 {
    let f = family(c)?;
    let array = f.expected()?.array;
    let eig = intersection_matrix_eigenvalues(&array)?;
    let theta = theta_min(&array)?;
    if c.json {
        let list: Vec<String> = eig.iter().map(|x| x.to_string()).collect();
        let v = json!({ "host": f.to_string(), "array": array.to_string(), "eigenvalues": list, "theta_min": theta.to_string() });
        return Ok((pretty(&v), true));
    }
    let list: Vec<String> = eig.iter().map(|x| x.to_string()).collect();
    Ok((
        table(&[
            ("host", f.to_string()),
            ("array", array.to_string()),
            ("eigenvalues", list.join(" ")),
            ("theta_min", theta.to_string()),
        ]),
        true,
    ))
}

fn identity(i: &IdentityArgs) -> Outcome2 {
    if i.q < 2 {
        return Err(Failure::Usage("q must be at least 2".into()));
    }
    let (product, sum) = suite::eq5_sides(i.d, i.q);
    let equal = product == sum;
    if i.json {
        let v = json!({ "d": i.d, "q": i.q, "product": product.to_string(), "sum": sum.to_string(), "equal": equal });
        return Ok((pretty(&v), equal));
    }
    let rows = [
        ("d", i.d.to_string()),
        ("q", i.q.to_string()),
        ("prod (q^(d-i) + 1)", product.to_string()),
        ("sum q^C(i,2) [d i]_q", sum.to_string()),
        ("equal", yes(equal)),
    ];
    Ok((table(&rows), equal))
}

fn report(r: &ReportArgs) -> Outcome2 {
    let outcomes: Vec<Outcome> = match (r.all, r.check) {
        (_, Some(id)) => vec![suite::run_check(id).ok_or_else(|| Failure::Usage(format!("no check {id}")))?],
        (true, None) => {
            let mut all = suite::run_all();
            if r.optional {
                all.extend(suite::run_check(OPTIONAL_CHECK.0));
            }
            all
        }
        (false, None) => return Err(Failure::Usage("pass --all or --check N".into())),
    };
    let passed = outcomes.iter().all(|o| o.passed);
    if r.json {
        let list: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                let mut v = json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail });
                if r.timings {
                    v["seconds"] = json!(o.elapsed.as_secs_f64());
                }
                v
            })
            .collect();
        return Ok((pretty(&json!({ "checks": list, "passed": passed })), passed));
    }
    let width = CHECKS.iter().chain([&OPTIONAL_CHECK]).map(|c| c.1.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let _ = write!(out, "{:>2}  {mark}  {:<width$}  {}", o.id, o.title, o.detail);
        if r.timings {
            let _ = write!(out, "  [{:.2}s]", o.elapsed.as_secs_f64());
        }
        out.push('\n');
    }
    let n = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(out, "{n}/{} passed", outcomes.len());
    Ok((out, passed))
}
