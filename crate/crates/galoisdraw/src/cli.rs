//! Argument parsing and the verb pipelines.
//!
//! [`dispatch`] returns the process exit status: 0 on success, 2 when the
//! verdict is "unknown", 1 on errors and 64 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use galoisdraw_core::equilib::kk::kk4_initial_layout;
use galoisdraw_core::equilib::{
    fr_p3_certify, fr_p3_numeric, kk_certify, kk_numeric, numeric_equilibrium, ForceModel, Layout,
};
use galoisdraw_core::exact::{rational_primitive, MonicAssociate, ZPoly, ZRatFunc};
use galoisdraw_core::galois::{
    computability_verdict, phi_exponent_scan, search_sn_certificate, sophie_germain_scan, totient,
    ComputabilityVerdict, Conclusion, Evidence, Model, SearchOutcome, SnCertificate,
    DEFAULT_PRIME_BOUND, PHI_EXPONENT_THRESHOLD,
};
use galoisdraw_core::graphlab::{
    apsp_squared, charpoly_exact, graph_matrix, spectral_certify, ExactMatrix, FactorAnalysis,
    GraphSpec, MatrixKind,
};
use galoisdraw_core::packing::{
    bipyr_verdicts, check_packing, normalize_concentric, pack2n_certify, pack_graph_numeric,
};
use galoisdraw_core::polyalg::{
    eliminate_resultant, factor_mod_p, factor_over_z, DEFAULT_SEED, DEGREE_LIMIT,
};

use crate::json::{certificate_doc, to_pretty, verdict_doc, ReportDoc, WitnessDoc};
use crate::polytext::{format_bivariate, format_coeffs, parse_bivariate, parse_coeffs};
use crate::spec::{hubs, load_graph, parse_graph_spec, SpecError};
use crate::svg::{layout_svg, packing_svg};
use crate::textfmt::{read_layout, write_layout, write_packing};

pub const SEED_ENV: &str = "GALOISDRAW_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "galoisdraw",
    version,
    about = "Galois certificates for graph drawings",
    propagate_version = true
)]
pub struct Cli {
    /// Seed for the randomized modular factorizations that are printed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixName {
    Adjacency,
    Degree,
    Laplacian,
    Rlaplacian,
    Transition,
    Mds,
}

#[derive(clap::Args, Debug)]
pub struct MatrixArgs {
    #[arg(long, value_name = "SPEC")]
    pub graph: String,
    #[arg(long, value_enum)]
    pub matrix: MatrixName,
    /// Relaxation parameter of `rlaplacian`, e.g. `1` or `1/2`.
    #[arg(long, value_name = "RATIONAL")]
    pub rho: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    SophieGermain,
    PhiExponent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ForceName {
    Fr,
    Kk,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact characteristic polynomial of a graph matrix and its factors.
    Charpoly(MatrixArgs),
    /// S_n certificate for an integer polynomial.
    Certify {
        #[arg(long, value_name = "COEFFS|file:PATH")]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
    },
    /// Certificates for every irreducible factor of a graph matrix.
    Spectral {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
    },
    /// Fruchterman-Reingold equilibrium of the four-vertex path.
    FrP3 {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Stored Kamada-Kawai data for kk4.
    KkData {
        /// Also solve the equilibrium numerically.
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Numeric circle packing of a maximal planar graph.
    Pack {
        #[arg(long, value_name = "SPEC")]
        graph: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Packing text output instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Radius polynomial and certificate for pack:2:N.
    Pack2n {
        #[arg(long, value_name = "SPEC", default_value = "pack:2:5")]
        graph: String,
    },
    /// Verdicts for packing bipyr:K.
    Bipyr {
        #[arg(long, value_name = "SPEC")]
        graph: String,
    },
    /// Computability verdict from the cyclotomic field of cycle:N or bipyr:N.
    Lowerbound {
        #[arg(long, value_name = "SPEC")]
        graph: String,
        /// `quadratic`, `root` or `root:D`.
        #[arg(long, default_value = "root")]
        model: String,
    },
    /// Number-theory scans.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Resultant of two polynomials in `a` and `b` with respect to `a`.
    Eliminate {
        #[arg(long, value_name = "EXPR")]
        p: String,
        #[arg(long, value_name = "EXPR")]
        q: String,
    },
    /// Re-verify certificates in a JSON certificate or report.
    Verify {
        #[arg(value_name = "PATH")]
        path: PathBuf,
    },
    /// Numeric force-directed equilibrium of a graph.
    Layout {
        #[arg(long, value_name = "SPEC")]
        graph: String,
        #[arg(long, value_enum, default_value = "fr")]
        model: ForceName,
        /// Starting layout in `x y` text form.
        #[arg(long, value_name = "PATH")]
        init: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] galoisdraw_core::Error),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error("output: {0}")]
    Output(#[from] io::Error),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Done,
    Unknown,
}

struct Ctx {
    seed: u64,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

/// The `--seed` flag, then `GALOISDRAW_SEED`, then the library default.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{} must be an unsigned integer, got '{}'", SEED_ENV, v)),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let seed = match resolve_seed(cli.seed) {
        Ok(s) => s,
        Err(m) => {
            let _ = writeln!(err, "error: {}", m);
            return EXIT_ERROR;
        }
    };
    let ctx = Ctx { seed };
    match run(&ctx, &cli.command, out) {
        Ok((status, report)) => {
            if let Some(path) = &cli.json {
                if let Err(e) = write_file(path, &to_pretty(&report)) {
                    let _ = writeln!(err, "error: {}", e);
                    return EXIT_ERROR;
                }
            }
            match status {
                Status::Done => EXIT_OK,
                Status::Unknown => EXIT_UNKNOWN,
            }
        }
        Err(CliError::Output(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_ERROR
        }
    }
}

fn run(ctx: &Ctx, cmd: &Command, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    match cmd {
        Command::Charpoly(a) => cmd_charpoly(a, out),
        Command::Certify { poly, prime_bound } => cmd_certify(ctx, poly, *prime_bound, out),
        Command::Spectral {
            matrix,
            prime_bound,
        } => cmd_spectral(ctx, matrix, *prime_bound, out),
        Command::FrP3 { tol, svg } => cmd_fr_p3(ctx, *tol, svg.as_deref(), out),
        Command::KkData { numeric, tol, svg } => {
            cmd_kk_data(ctx, *numeric || svg.is_some(), *tol, svg.as_deref(), out)
        }
        Command::Pack {
            graph,
            tol,
            svg,
            out: path,
        } => cmd_pack(graph, *tol, svg.as_deref(), path.as_deref(), out),
        Command::Pack2n { graph } => cmd_pack2n(ctx, graph, out),
        Command::Bipyr { graph } => cmd_bipyr(graph, out),
        Command::Lowerbound { graph, model } => cmd_lowerbound(graph, model, out),
        Command::Scan { kind, limit } => cmd_scan(*kind, *limit, out),
        Command::Eliminate { p, q } => cmd_eliminate(p, q, out),
        Command::Verify { path } => cmd_verify(path, out),
        Command::Layout {
            graph,
            model,
            init,
            tol,
            svg,
            out: path,
        } => cmd_layout(
            graph,
            *model,
            init.as_deref(),
            *tol,
            svg.as_deref(),
            path.as_deref(),
            out,
        ),
    }
}

fn matrix_kind(name: MatrixName, rho: Option<&str>) -> CliResult<MatrixKind> {
    if rho.is_some() && name != MatrixName::Rlaplacian {
        return Err(invalid("--rho only applies to --matrix rlaplacian"));
    }
    Ok(match name {
        MatrixName::Adjacency => MatrixKind::Adjacency,
        MatrixName::Degree => MatrixKind::Degree,
        MatrixName::Laplacian => MatrixKind::Laplacian,
        MatrixName::Transition => MatrixKind::Transition,
        MatrixName::Mds => MatrixKind::MdsCentered,
        MatrixName::Rlaplacian => {
            let s = rho.ok_or_else(|| invalid("--matrix rlaplacian needs --rho"))?;
            let r: BigRational = s
                .trim()
                .parse()
                .map_err(|_| invalid(format!("--rho: '{}' is not a rational number", s)))?;
            MatrixKind::RLaplacian(r)
        }
    })
}

fn matrix_json(m: &ExactMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|x| Value::String(x.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn rational_coeffs(c: &[BigRational]) -> Value {
    Value::Array(c.iter().map(|x| Value::String(x.to_string())).collect())
}

fn reversal_text(m: &MonicAssociate) -> Option<String> {
    m.reversal
        .as_ref()
        .map(|(n, c, s)| format!("x^{} f({}/x) / {}", n, c, s))
}

fn monic_json(m: &MonicAssociate) -> Value {
    json!({
        "poly": format_coeffs(&m.poly),
        "transform": reversal_text(m),
    })
}

fn ratfunc_text(f: &ZRatFunc, var: &str) -> String {
    if f.denom().is_constant() && f.denom().coeff(0) == BigInt::from(1) {
        return f.numer().display(var).to_string();
    }
    format!(
        "({}) / ({})",
        f.numer().display(var),
        f.denom().display(var)
    )
}

fn factor_line(f: &ZPoly, m: u32, var: &str) -> String {
    if m == 1 {
        format!("({})", f.display(var))
    } else {
        format!("({})^{}", f.display(var), m)
    }
}

/// `f` modulo `p` as a product of monic irreducibles.
fn mod_p_factorization(f: &ZPoly, p: u64, seed: u64) -> CliResult<String> {
    let fl = factor_mod_p(f, p, seed)?;
    let mut s = if fl.unit == 1 {
        String::new()
    } else {
        fl.unit.to_string()
    };
    for (g, m) in &fl.factors {
        s.push_str(&format!("({})", g));
        if *m > 1 {
            s.push_str(&format!("^{}", m));
        }
    }
    Ok(s)
}

fn verdict_summary(c: &Conclusion) -> String {
    match c {
        Conclusion::Impossible => "impossible".into(),
        Conclusion::DegreeLowerBound(q) => format!("degree \u{2265} {}", q),
        Conclusion::Unknown => "unknown".into(),
    }
}

fn witness_text(w: &WitnessDoc) -> String {
    match w {
        WitnessDoc::None | WitnessDoc::NoRationalRoot => String::new(),
        WitnessDoc::Factor { poly } => format!(": factor {}", poly),
        WitnessDoc::StackelPoints { points } => format!(
            ": |f(k)| prime at {} points, k in {:?}",
            points.len(),
            points
        ),
        WitnessDoc::Prime { prime } => format!(": irreducible modulo {}", prime),
        WitnessDoc::Patterns { patterns } => {
            let s: Vec<String> = patterns
                .iter()
                .map(|p| format!("{:?} at {}", p.degrees, p.prime))
                .collect();
            format!(": degree patterns {}", s.join(", "))
        }
        WitnessDoc::Factorization { factors, .. } => format!(": {} factor over Z", factors.len()),
    }
}

fn print_certificate(
    ctx: &Ctx,
    cert: &SnCertificate,
    out: &mut dyn Write,
    report: &mut ReportDoc,
) -> CliResult<Value> {
    let doc = certificate_doc(cert);
    writeln!(out, "certificate for {}", cert.poly)?;
    writeln!(
        out,
        "  irreducible by {}{}",
        doc.irreducibility.method,
        witness_text(&doc.irreducibility.witnesses)
    )?;
    match &doc.discriminant_factored {
        Some(fd) if *fd != doc.discriminant => {
            writeln!(out, "  discriminant {} = {}", doc.discriminant, fd)?
        }
        Some(_) => writeln!(out, "  discriminant {} (prime)", doc.discriminant)?,
        None => writeln!(out, "  discriminant {}", doc.discriminant)?,
    }
    let mut modp = serde_json::Map::new();
    for (label, w) in [
        ("(n-1)-cycle", &cert.ncycle),
        ("transposition", &cert.transposition),
    ] {
        let fact = mod_p_factorization(&cert.poly, w.prime, ctx.seed)?;
        writeln!(
            out,
            "  p = {}: cycle type {:?} [{}]  mod {}: {}",
            w.prime, w.cycle_type, label, w.prime, fact
        )?;
        modp.insert(w.prime.to_string(), Value::String(fact));
    }
    writeln!(out, "  power {} gives a transposition", cert.power)?;
    writeln!(out, "  Galois group: {}", cert.conclusion)?;
    for l in &doc.lemmas {
        writeln!(out, "    {}", l)?;
    }
    report.certificates.push(doc);
    Ok(Value::Object(modp))
}

fn print_verdict(
    v: &ComputabilityVerdict,
    out: &mut dyn Write,
    report: &mut ReportDoc,
) -> CliResult<()> {
    writeln!(
        out,
        "verdict ({} model): {} for {}",
        v.model.name(),
        verdict_summary(&v.conclusion),
        v.subject
    )?;
    for c in &v.justification {
        writeln!(out, "    {}", c.render())?;
    }
    report.verdicts.push(verdict_doc(v));
    Ok(())
}

fn overall(verdicts: &[ComputabilityVerdict]) -> Status {
    if verdicts.iter().any(|v| v.conclusion != Conclusion::Unknown) {
        Status::Done
    } else {
        Status::Unknown
    }
}

fn cmd_charpoly(a: &MatrixArgs, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let g = load_graph(&a.graph)?;
    let kind = matrix_kind(a.matrix, a.rho.as_deref())?;
    let m = graph_matrix(&g, &kind)?;
    let cp = charpoly_exact(&m)?;
    let (content, prim) = rational_primitive(&cp)?;
    let mut report = ReportDoc::new("charpoly", &format!("{} {}", a.graph, kind.name()));
    writeln!(
        out,
        "graph {}: {} vertices, {} edges",
        a.graph,
        g.n(),
        g.edge_count()
    )?;
    writeln!(out, "matrix: {}", kind.name())?;
    writeln!(out, "charpoly: {}", cp)?;
    writeln!(out, "         = {} * ({})", content, prim)?;
    let mut factors = Vec::new();
    if prim.deg() <= DEGREE_LIMIT {
        let fl = factor_over_z(&prim)?;
        let parts: Vec<String> = fl
            .factors
            .iter()
            .map(|(f, m)| factor_line(f, *m, "x"))
            .collect();
        writeln!(out, "factors over Z: {}", parts.join(" "))?;
        for (f, m) in &fl.factors {
            factors.push(json!({"poly": format_coeffs(f), "multiplicity": m}));
        }
    } else {
        report.notes.push(format!(
            "degree {} exceeds the factoring limit {}",
            prim.deg(),
            DEGREE_LIMIT
        ));
    }
    let mut data = json!({
        "matrix": matrix_json(&m),
        "charpoly": rational_coeffs(cp.coeffs()),
        "content": content.to_string(),
        "primitive": format_coeffs(&prim),
        "factors": factors,
    });
    if kind == MatrixKind::MdsCentered {
        data["squared_distances"] = matrix_json(&apsp_squared(&g)?);
    }
    report.data = data;
    Ok((Status::Done, report))
}

fn cmd_certify(
    ctx: &Ctx,
    poly: &str,
    bound: u64,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let f = parse_coeffs(poly).map_err(|e| invalid(format!("--poly: {}", e)))?;
    if f.deg() < 2 {
        return Err(invalid("--poly: degree must be at least 2"));
    }
    let monic = galoisdraw_core::exact::monic_associate(
        &f,
        galoisdraw_core::exact::MonicStrategy::MinimalScale,
    )?;
    let mut report = ReportDoc::new("certify", &format_coeffs(&f));
    writeln!(out, "f = {}", f)?;
    if let Some(t) = reversal_text(&monic) {
        writeln!(out, "monic associate {} = {}", t, monic.poly)?;
    }
    let outcome = search_sn_certificate(&monic.poly, bound)?;
    let mut data = json!({"poly": format_coeffs(&f), "monic": monic_json(&monic)});
    let status = match &outcome {
        SearchOutcome::Found(cert) => {
            data["mod_p"] = print_certificate(ctx, cert, out, &mut report)?;
            let v =
                computability_verdict(Evidence::Certificate(cert), Model::Radical, "roots of f")?;
            print_verdict(&v, out, &mut report)?;
            overall(&[v])
        }
        SearchOutcome::NotFound {
            reason, skipped, ..
        } => {
            writeln!(out, "no S_n certificate: {}", reason)?;
            writeln!(out, "verdict: unknown")?;
            report.notes.push(format!("not found: {}", reason));
            data["skipped_primes"] = json!(skipped);
            Status::Unknown
        }
    };
    report.data = data;
    Ok((status, report))
}

fn cmd_spectral(
    ctx: &Ctx,
    a: &MatrixArgs,
    bound: u64,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let g = load_graph(&a.graph)?;
    let kind = matrix_kind(a.matrix, a.rho.as_deref())?;
    let rep = spectral_certify(&g, &kind, bound)?;
    let mut report = ReportDoc::new("spectral", &format!("{} {}", a.graph, kind.name()));
    writeln!(out, "graph {}, matrix {}", a.graph, kind.name())?;
    writeln!(out, "charpoly: {}", rep.charpoly)?;
    let mut factors = Vec::new();
    let mut verdicts = Vec::new();
    for fr in &rep.factors {
        writeln!(
            out,
            "factor {} (degree {}, multiplicity {})",
            fr.factor,
            fr.factor.deg(),
            fr.multiplicity
        )?;
        let mut entry = json!({
            "poly": format_coeffs(&fr.factor),
            "multiplicity": fr.multiplicity,
        });
        match &fr.analysis {
            FactorAnalysis::Rational { root, eigenvectors } => {
                writeln!(out, "  rational eigenvalue {}", root)?;
                for v in eigenvectors {
                    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "  eigenvector ({})", s.join(", "))?;
                }
                entry["root"] = json!(root.to_string());
                entry["eigenvectors"] = json!(eigenvectors
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            FactorAnalysis::Irreducible {
                monic,
                outcome,
                verdict,
            } => {
                if let Some(t) = reversal_text(monic) {
                    writeln!(out, "  monic associate {} = {}", t, monic.poly)?;
                }
                entry["monic"] = monic_json(monic);
                match outcome {
                    SearchOutcome::Found(cert) => {
                        entry["group"] = json!(cert.conclusion);
                        entry["mod_p"] = print_certificate(ctx, cert, out, &mut report)?;
                    }
                    SearchOutcome::NotFound { reason, .. } => {
                        writeln!(out, "  no S_n certificate: {}", reason)?;
                        entry["group"] = json!("not found");
                    }
                }
                if let Some(v) = verdict {
                    print_verdict(v, out, &mut report)?;
                    verdicts.push(v.clone());
                }
            }
        }
        factors.push(entry);
    }
    for n in &rep.notes {
        writeln!(out, "note: {}", n)?;
    }
    report.notes.extend(rep.notes.iter().cloned());
    report.data = json!({
        "matrix": matrix_json(&rep.matrix),
        "charpoly": rational_coeffs(rep.charpoly.coeffs()),
        "factors": factors,
    });
    Ok((overall(&verdicts), report))
}

fn cmd_fr_p3(
    ctx: &Ctx,
    tol: f64,
    svg: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let rep = fr_p3_certify()?;
    let mut report = ReportDoc::new("fr-p3", "path:4 fr");
    writeln!(out, "p(a, b) = {}", format_bivariate(&rep.p))?;
    writeln!(out, "q(a, b) = {}", format_bivariate(&rep.q))?;
    writeln!(out, "Res_a(p, q) = {}", rep.elimination.raw.display("b"))?;
    writeln!(out, "eliminant T(b) = {}", rep.eliminant.display("b"))?;
    writeln!(out, "T(b) = t(b^3) with t(x) = {}", rep.quintic)?;
    if let Some(t) = reversal_text(&rep.monic) {
        writeln!(out, "h = {} = {}", t, rep.monic.poly)?;
    }
    let modp = print_certificate(ctx, &rep.certificate, out, &mut report)?;
    print_verdict(&rep.verdict, out, &mut report)?;
    let num = fr_p3_numeric(tol)?;
    writeln!(
        out,
        "numeric: spacings a = {:.15}, {:.15}, b = {:.15}; T(b) = {:.3e}; p, q = {:.3e}, {:.3e}",
        num.a[0], num.a[1], num.b, num.eliminant_at_b, num.system_at_ab[0], num.system_at_ab[1]
    )?;
    if let Some(path) = svg {
        let g = load_graph("path:4")?;
        write_file(path, &layout_svg(&num.layout.positions, g.edges()))?;
    }
    report.data = json!({
        "p": format_bivariate(&rep.p),
        "q": format_bivariate(&rep.q),
        "resultant": format_coeffs(&rep.elimination.raw),
        "eliminant": format_coeffs(&rep.eliminant),
        "quintic": format_coeffs(&rep.quintic),
        "h": monic_json(&rep.monic),
        "mod_p": modp,
        "numeric": {
            "a": num.a,
            "b": num.b,
            "eliminant_at_b": num.eliminant_at_b,
            "system_at_ab": num.system_at_ab,
        },
    });
    Ok((overall(std::slice::from_ref(&rep.verdict)), report))
}

fn cmd_kk_data(
    ctx: &Ctx,
    numeric: bool,
    tol: f64,
    svg: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let rep = kk_certify()?;
    let mut report = ReportDoc::new("kk-data", "kk4 kk");
    writeln!(out, "p(c) = {}", rep.p.display("c"))?;
    writeln!(out, "f(c) = p(c) / c^4 = {}", rep.f.display("c"))?;
    if let Some(t) = reversal_text(&rep.monic) {
        writeln!(out, "g = {} = {}", t, rep.monic.poly)?;
    }
    writeln!(
        out,
        "g matches the stored coefficients: {}",
        if rep.matches_stored { "yes" } else { "no" }
    )?;
    let modp = print_certificate(ctx, &rep.certificate, out, &mut report)?;
    print_verdict(&rep.verdict, out, &mut report)?;
    let mut data = json!({
        "p": format_coeffs(&rep.p),
        "f": format_coeffs(&rep.f),
        "g": monic_json(&rep.monic),
        "matches_stored": rep.matches_stored,
        "mod_p": modp,
    });
    if numeric {
        let num = kk_numeric(tol)?;
        writeln!(
            out,
            "numeric: c = {:.13}, |p(c)| = {:.3e}, right-angle defect {:.3e}",
            num.c,
            num.p_at_c.abs(),
            num.right_angle_defect
        )?;
        if let Some(path) = svg {
            let g = load_graph("kk4")?;
            write_file(path, &layout_svg(&num.layout.positions, g.edges()))?;
        }
        data["numeric"] = json!({
            "c": num.c,
            "p_at_c": num.p_at_c,
            "right_angle_defect": num.right_angle_defect,
        });
    }
    report.data = data;
    Ok((overall(std::slice::from_ref(&rep.verdict)), report))
}

fn cmd_pack(
    spec: &str,
    tol: f64,
    svg: Option<&Path>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let parsed = parse_graph_spec(spec)?;
    let g = load_graph(spec)?;
    let mut p = pack_graph_numeric(&g, None, tol)?;
    let mut report = ReportDoc::new("pack", spec);
    let mut normalized = Value::Null;
    if let Some((h1, h2)) = hubs(&parsed) {
        p = normalize_concentric(&g, &p, h1, h2)?;
        normalized = json!({"inner_hub": h1, "outer_hub": h2});
    }
    let check = check_packing(&g, &p)?;
    if !(check.max_tangency_error < tol && check.max_overlap < tol) {
        return Err(invalid(format!(
            "packing check failed: tangency error {:e}, overlap {:e}",
            check.max_tangency_error, check.max_overlap
        )));
    }
    let text = write_packing(&p);
    let mut summary = format!(
        "# {}: {} circles, tangency error {:.3e}, overlap {:.3e}\n",
        spec,
        p.circles.len(),
        check.max_tangency_error,
        check.max_overlap
    );
    if let Some((h1, h2)) = hubs(&parsed) {
        summary.push_str(&format!(
            "# concentric normalization about hubs {} and {}\n",
            h1, h2
        ));
    }
    out.write_all(summary.as_bytes())?;
    match path {
        Some(pth) => write_file(pth, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if let Some(s) = svg {
        write_file(s, &packing_svg(&p))?;
    }
    report.data = json!({
        "circles": p.circles.iter().map(|c| [c.center.re, c.center.im, c.radius]).collect::<Vec<_>>(),
        "outer": p.outer,
        "normalization": normalized,
        "max_tangency_error": check.max_tangency_error,
        "max_overlap": check.max_overlap,
    });
    Ok((Status::Done, report))
}

fn cmd_pack2n(ctx: &Ctx, spec: &str, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let n = match parse_graph_spec(spec)? {
        GraphSpec::Pack(2, n) => n,
        _ => {
            return Err(invalid(format!(
                "pack2n needs --graph pack:2:N, got '{}'",
                spec
            )))
        }
    };
    let rep = pack2n_certify(n)?;
    let mut report = ReportDoc::new("pack2n", spec);
    let poly = &rep.polynomial;
    writeln!(out, "a(b) = {}", ratfunc_text(&poly.a_of_b, "b"))?;
    writeln!(out, "U(b) = {}", ratfunc_text(&poly.u, "b"))?;
    writeln!(out, "V(b) = {}", ratfunc_text(&poly.v, "b"))?;
    writeln!(out, "f(b) = {}", poly.f.display("b"))?;
    let parts: Vec<String> = rep
        .factors
        .iter()
        .map(|(f, m)| factor_line(f, *m, "b"))
        .collect();
    writeln!(out, "factors over Z: {}", parts.join(" "))?;
    writeln!(
        out,
        "numeric: b = {:.12}, a = {:.12}, |a - 2b^2/(1-2b)| = {:.3e}",
        rep.numeric.b, rep.numeric.a, rep.numeric.twin_defect
    )?;
    writeln!(
        out,
        "f1 = {}  (vanishes at b: |f1(b)| = {:.3e})",
        rep.f1.display("b"),
        rep.f1_residual.abs()
    )?;
    if let (Some(f0), Some(r)) = (&rep.f0, rep.f0_residual_at_c) {
        writeln!(
            out,
            "f0 = {}  (f0(x) = f1(1 - x); |f0(1 - b)| = {:.3e})",
            f0.display("b"),
            r.abs()
        )?;
    }
    if let Some(t) = reversal_text(&rep.g) {
        writeln!(out, "g = {} = {}", t, rep.g.poly)?;
    }
    let mut modp = Value::Null;
    if let Some(cert) = &rep.certificate {
        modp = print_certificate(ctx, cert, out, &mut report)?;
    } else {
        writeln!(out, "no S_n certificate for g")?;
    }
    let mut per_factor = Vec::new();
    for fc in &rep.factor_certificates {
        let group = fc
            .outcome
            .certificate()
            .map_or_else(|| "not found".to_string(), |c| c.conclusion.clone());
        writeln!(out, "factor of degree {}: {}", fc.factor.deg(), group)?;
        if let Some(c) = fc.outcome.certificate() {
            if !report
                .certificates
                .iter()
                .any(|d| d.poly == format_coeffs(&c.poly))
            {
                report.certificates.push(certificate_doc(c));
            }
        }
        per_factor.push(json!({"poly": format_coeffs(&fc.factor), "monic": monic_json(&fc.monic), "group": group}));
    }
    writeln!(out, "groups: {}", rep.groups().join(", "))?;
    let status = match &rep.verdict {
        Some(v) => {
            print_verdict(v, out, &mut report)?;
            overall(std::slice::from_ref(v))
        }
        None => Status::Unknown,
    };
    report.data = json!({
        "n": n,
        "a_of_b": ratfunc_text(&poly.a_of_b, "b"),
        "u": ratfunc_text(&poly.u, "b"),
        "v": ratfunc_text(&poly.v, "b"),
        "f": format_coeffs(&poly.f),
        "factors": rep.factors.iter().map(|(f, m)| json!({"poly": format_coeffs(f), "multiplicity": m})).collect::<Vec<_>>(),
        "f1": format_coeffs(&rep.f1),
        "f0": rep.f0.as_ref().map(format_coeffs),
        "g": monic_json(&rep.g),
        "mod_p": modp,
        "factor_groups": per_factor,
        "groups": rep.groups(),
        "numeric": {
            "b": rep.numeric.b,
            "a": rep.numeric.a,
            "twin_defect": rep.numeric.twin_defect,
            "f1_at_b": rep.f1_residual,
            "f0_at_one_minus_b": rep.f0_residual_at_c,
        },
    });
    Ok((status, report))
}

fn cmd_bipyr(spec: &str, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let k = match parse_graph_spec(spec)? {
        GraphSpec::Bipyr(k) => k,
        _ => {
            return Err(invalid(format!(
                "bipyr needs --graph bipyr:K, got '{}'",
                spec
            )))
        }
    };
    let vs = bipyr_verdicts(k)?;
    let mut report = ReportDoc::new("bipyr", spec);
    for v in &vs {
        print_verdict(v, out, &mut report)?;
    }
    report.data = json!({"k": k, "phi": totient(k as u64)?});
    Ok((overall(&vs), report))
}

fn parse_model(s: &str) -> CliResult<Model> {
    let s = s.trim();
    match s {
        "quadratic" => return Ok(Model::Quadratic),
        "radical" => return Ok(Model::Radical),
        "root" => return Ok(Model::Root(None)),
        _ => {}
    }
    let d = s
        .strip_prefix("root:")
        .or_else(|| s.strip_prefix("root(").and_then(|r| r.strip_suffix(')')))
        .and_then(|d| d.parse::<u64>().ok())
        .filter(|&d| d >= 1)
        .ok_or_else(|| {
            invalid(format!(
                "--model: expected quadratic, root or root:D, got '{}'",
                s
            ))
        })?;
    Ok(Model::Root(Some(d)))
}

fn cmd_lowerbound(spec: &str, model: &str, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let m = match parse_graph_spec(spec)? {
        GraphSpec::Cycle(n) | GraphSpec::Bipyr(n) if n >= 3 => n as u64,
        _ => {
            return Err(invalid(format!(
                "no field-degree evidence is known for '{}'; use cycle:N or bipyr:N",
                spec
            )))
        }
    };
    let model = parse_model(model)?;
    if model == Model::Radical {
        return Err(invalid(
            "the radical model needs a certificate; use certify or spectral",
        ));
    }
    let degree = totient(m)?;
    let subject = format!("primitive root of unity of order {} drawn by {}", m, spec);
    let v = computability_verdict(
        Evidence::FieldDegree {
            degree,
            cyclotomic: Some(m),
        },
        model,
        &subject,
    )?;
    let mut report = ReportDoc::new("lowerbound", spec);
    writeln!(
        out,
        "{} {}: {}",
        spec,
        model.name(),
        verdict_summary(&v.conclusion)
    )?;
    print_verdict(&v, out, &mut report)?;
    report.data = json!({"n": m, "field_degree": degree});
    Ok((overall(std::slice::from_ref(&v)), report))
}

fn cmd_scan(
    kind: ScanKind,
    limit: Option<u64>,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let mut report;
    match kind {
        ScanKind::SophieGermain => {
            let limit = limit.unwrap_or(100);
            let ps = sophie_germain_scan(limit);
            let s: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            writeln!(out, "Sophie Germain primes <= {}: {}", limit, s.join(", "))?;
            report = ReportDoc::new("scan", "sophie-germain");
            report.data = json!({"limit": limit, "primes": ps});
        }
        ScanKind::PhiExponent => {
            let limit = limit.unwrap_or(10_000);
            let scan = phi_exponent_scan(limit);
            writeln!(
                out,
                "primes <= {}: {}; largest prime factor of p - 1 at least (p - 1)^{}: {} ({:.4})",
                limit,
                scan.entries.len(),
                PHI_EXPONENT_THRESHOLD,
                scan.at_threshold,
                scan.fraction()
            )?;
            report = ReportDoc::new("scan", "phi-exponent");
            report.data = json!({
                "limit": limit,
                "primes": scan.entries.len(),
                "threshold": PHI_EXPONENT_THRESHOLD,
                "at_threshold": scan.at_threshold,
                "fraction": scan.fraction(),
            });
        }
    }
    Ok((Status::Done, report))
}

fn cmd_eliminate(p: &str, q: &str, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let pp = parse_bivariate(p).map_err(|e| invalid(format!("--p: {}", e)))?;
    let qq = parse_bivariate(q).map_err(|e| invalid(format!("--q: {}", e)))?;
    let el = eliminate_resultant(&pp, &qq)?;
    let mut report = ReportDoc::new("eliminate", &format!("{} ; {}", p, q));
    writeln!(out, "Res_a = {}", el.raw.display("b"))?;
    writeln!(
        out,
        "squarefree part = {}",
        el.squarefree_primitive.display("b")
    )?;
    let mut factors = Vec::new();
    let sq = &el.squarefree_primitive;
    if !sq.is_zero() && sq.deg() >= 1 && sq.deg() <= DEGREE_LIMIT {
        let fl = factor_over_z(sq)?;
        let parts: Vec<String> = fl
            .factors
            .iter()
            .map(|(f, m)| factor_line(f, *m, "b"))
            .collect();
        writeln!(out, "factors over Z: {}", parts.join(" "))?;
        factors = fl.factors.iter().map(|(f, _)| format_coeffs(f)).collect();
    }
    if let Some(d) = (!el.raw.is_zero()).then(|| el.raw.deg()) {
        report.notes.push(format!("resultant degree {}", d));
    }
    report.data = json!({
        "p": format_bivariate(&pp),
        "q": format_bivariate(&qq),
        "resultant": format_coeffs(&el.raw),
        "squarefree": format_coeffs(sq),
        "factors": factors,
    });
    Ok((Status::Done, report))
}

fn cmd_verify(path: &Path, out: &mut dyn Write) -> CliResult<(Status, ReportDoc)> {
    let text = read_file(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {}", path.display(), e)))?;
    let docs = crate::json::certificates_in(&v)
        .map_err(|e| invalid(format!("{}: {}", path.display(), e)))?;
    if docs.is_empty() {
        return Err(invalid(format!(
            "{}: no certificates to verify",
            path.display()
        )));
    }
    let mut report = ReportDoc::new("verify", &path.display().to_string());
    let mut results = Vec::new();
    let mut rejected = 0;
    for (i, d) in docs.iter().enumerate() {
        match crate::json::verify_document(d) {
            Ok(()) => {
                writeln!(
                    out,
                    "certificate {} ({}, degree {}): accepted",
                    i + 1,
                    d.conclusion,
                    d.degree
                )?;
                results.push(json!({"index": i, "accepted": true, "conclusion": d.conclusion}));
            }
            Err(reason) => {
                rejected += 1;
                writeln!(out, "certificate {}: rejected: {}", i + 1, reason)?;
                results.push(json!({"index": i, "accepted": false, "reason": reason}));
            }
        }
    }
    report.data = json!({"results": results});
    if rejected > 0 {
        return Err(invalid(format!(
            "{} of {} certificates rejected",
            rejected,
            docs.len()
        )));
    }
    Ok((Status::Done, report))
}

fn default_init(spec: &GraphSpec, n: usize) -> Layout {
    match spec {
        GraphSpec::Kk4 => kk4_initial_layout(),
        GraphSpec::Path(_) => Layout::new((0..n).map(|i| [i as f64, 0.0]).collect()),
        _ => Layout::regular_polygon(n, 1.0),
    }
}

fn cmd_layout(
    spec: &str,
    model: ForceName,
    init: Option<&Path>,
    tol: f64,
    svg: Option<&Path>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<(Status, ReportDoc)> {
    let parsed = parse_graph_spec(spec)?;
    let g = load_graph(spec)?;
    let start = match init {
        Some(p) => {
            read_layout(&read_file(p)?).map_err(|e| invalid(format!("{}: {}", p.display(), e)))?
        }
        None => default_init(&parsed, g.n()),
    };
    let fm = match model {
        ForceName::Fr => ForceModel::fr(),
        ForceName::Kk => ForceModel::kamada_kawai(),
    };
    let lay = numeric_equilibrium(&g, &fm, &start, tol)?;
    let text = write_layout(&lay);
    let model_name = match model {
        ForceName::Fr => "FR",
        ForceName::Kk => "KK",
    };
    writeln!(
        out,
        "# {} {} equilibrium, residual below {:e}",
        spec, model_name, tol
    )?;
    match path {
        Some(p) => write_file(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if let Some(s) = svg {
        write_file(s, &layout_svg(&lay.positions, g.edges()))?;
    }
    let mut report = ReportDoc::new("layout", spec);
    report.data = json!({"positions": lay.positions});
    Ok((Status::Done, report))
}
