//! Command handling. Every command writes to the given streams and returns
//! the process exit code: 0 on success, 1 on domain errors, 2 on bad input.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use singtrans_core::deformation::{
    adjacency_rows, build_deformed, deformation_type_at, rational_critical_points, sample_row, solve_lambda_on_locus,
    AdeFamily, DeformationVector, Locus, DEFAULT_SEED,
};
use singtrans_core::groebner::{buchberger_with, mora_standard_basis_with, GroebnerConfig, Ideal, QuotientDim};
use singtrans_core::singularity::analyze_germ;
use singtrans_core::transition::{clemens_report, conifoldability_wh, type2_report, type3_report};
use singtrans_core::{infer_variables, parse_poly, Error, MultiPoly, Rational, Ring, TermOrder};

use crate::json::{AdjacencyJson, DeformJson, Descriptor, GermJson, SmallReportJson, Transition, TypeIIIJson, TypeIIJson};

pub const DEFAULT_SAMPLES: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "singtrans", version, about = "Exact invariants of isolated hypersurface singularities and geometric transitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor and Tyurina numbers, weights, type and T¹ basis of a germ at the origin.
    Analyze {
        /// A polynomial, or a file containing one.
        input: Option<String>,
        /// Comma-separated variable order; defaults to order of first appearance.
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        json: bool,
        /// Analyze every *.poly and *.txt file of a directory.
        #[arg(long, conflicts_with = "input", requires = "out")]
        batch: Option<PathBuf>,
        /// Output directory for batch reports.
        #[arg(long, requires = "batch")]
        out: Option<PathBuf>,
    },
    /// Evaluate a member of a versal family and classify its singular points.
    Deform {
        /// A, D, E6, E7, E8, or a full name such as A5.
        family: String,
        index: Option<u32>,
        /// Comma-separated deformation parameters.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "point", required_unless_present = "point")]
        lambda: Option<String>,
        /// Solve for parameters making `y,z` a critical point on the given loci.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Comma-separated loci, e.g. V1,V'.
        #[arg(long, requires = "point")]
        on: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Sample the adjacency table of a family.
    Adjacency {
        family: String,
        index: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report the invariants of a transition descriptor file.
    Transition {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reduced Gröbner or standard basis of the ideal listed one polynomial per line.
    Groebner {
        file: PathBuf,
        /// lex, degrevlex, local, or weighted:w1,w2,...
        #[arg(long)]
        order: Option<String>,
        /// Use the local degree reverse lexicographic order.
        #[arg(long, conflicts_with = "order")]
        local: bool,
        /// Print the quotient dimension.
        #[arg(long)]
        dim: bool,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        max_pairs: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::NonRationalLiteral { .. }
            | Error::InvalidVariableName(_)
            | Error::RingMismatch
            | Error::OrderMismatch(_)
            | Error::InvalidIndex(_)
            | Error::UnknownLocus(_)
            | Error::InvalidLambda(_) => 2,
            _ => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

/// Runs a parsed command, returning its output and exit code.
pub fn execute(command: Command) -> CliResult<(String, i32)> {
    match command {
        Command::Analyze { batch: Some(dir), out, vars, json: _, input: _ } => {
            let out = out.ok_or_else(|| CliError::input("--batch needs --out"))?;
            analyze_batch(&dir, &out, vars.as_deref())
        }
        Command::Analyze { input, vars, json, .. } => {
            let input = input.ok_or_else(|| CliError::input("missing polynomial or file"))?;
            let text = read_expression(&input)?;
            Ok((analyze(&text, vars.as_deref(), json)?, 0))
        }
        Command::Deform { family, index, lambda, point, on, seed, json } => {
            let family = parse_family(&family, index)?;
            let dv = match (lambda, point) {
                (Some(l), _) => DeformationVector::new(family, parse_rationals(&l)?)?,
                (None, Some(p)) => {
                    let point = parse_point(&p)?;
                    let loci = parse_loci(on.as_deref().unwrap_or(""))?;
                    solve_lambda_on_locus(family, &point, &loci, &[], seed)?
                }
                (None, None) => return Err(CliError::input("give --lambda or --point")),
            };
            Ok((deform(&dv, json)?, 0))
        }
        Command::Adjacency { family, index, seed, samples, json } => {
            adjacency(parse_family(&family, index)?, seed, samples, json)
        }
        Command::Transition { file, json } => Ok((transition(&file, json)?, 0)),
        Command::Groebner { file, order, local, dim, vars, max_pairs } => {
            let order = if local { "local".to_string() } else { order.unwrap_or_else(|| "degrevlex".into()) };
            let text = fs::read_to_string(&file).map_err(|e| CliError::input(format!("{}: {e}", file.display())))?;
            Ok((groebner(&text, &order, dim, vars.as_deref(), max_pairs)?, 0))
        }
    }
}

fn read_expression(input: &str) -> CliResult<String> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{input}: {e}")))?;
        Ok(text.trim().to_string())
    } else {
        Ok(input.to_string())
    }
}

fn ring_for(texts: &[&str], vars: Option<&str>) -> CliResult<Ring> {
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for t in texts {
                for n in infer_variables(t) {
                    if !names.contains(&n) {
                        names.push(n);
                    }
                }
            }
            names
        }
    };
    Ok(Ring::new(&names)?)
}

/// Analyzes one germ and renders the report as text or JSON.
pub fn analyze_report(text: &str, vars: Option<&str>) -> CliResult<GermJson> {
    let ring = ring_for(&[text], vars)?;
    let f = parse_poly(text, &ring)?;
    let report = analyze_germ(&f)?;
    Ok(GermJson::new(&report, &ring))
}

fn analyze(text: &str, vars: Option<&str>, json: bool) -> CliResult<String> {
    let r = analyze_report(text, vars)?;
    if json {
        return Ok(to_json(&r));
    }
    let mut s = String::new();
    let _ = writeln!(s, "mu_local: {}", r.mu_local);
    let _ = writeln!(s, "mu_global: {}", r.mu_global.map_or("infinite".to_string(), |m| m.to_string()));
    let _ = writeln!(s, "tau: {}", r.tau);
    let _ = writeln!(s, "corank: {}", r.corank);
    match &r.weights {
        Some(w) => {
            let _ = writeln!(s, "weights: ({})", w.join(", "));
        }
        None => s.push_str("weights: not weighted homogeneous in these coordinates\n"),
    }
    let _ = writeln!(s, "type: {}", r.kind);
    let _ = writeln!(s, "t1_basis: {{{}}}", r.t1_basis.join(", "));
    Ok(s)
}

fn analyze_batch(dir: &Path, out: &Path, vars: Option<&str>) -> CliResult<(String, i32)> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && matches!(p.extension().and_then(|e| e.to_str()), Some("poly" | "txt")))
        .collect();
    files.sort();
    fs::create_dir_all(out).map_err(|e| CliError::input(format!("{}: {e}", out.display())))?;
    let results: Vec<(String, CliResult<GermJson>)> = files
        .par_iter()
        .map(|path| {
            let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let report = fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("{name}: {e}")))
                .and_then(|t| analyze_report(t.trim(), vars));
            if let Ok(r) = &report {
                let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                if let Err(e) = fs::write(out.join(format!("{stem}.json")), to_json(r)) {
                    return (name, Err(CliError { code: 1, message: e.to_string() }));
                }
            }
            (name, report)
        })
        .collect();
    let mut s = String::new();
    let mut code = 0;
    for (name, r) in results {
        match r {
            Ok(r) => {
                let _ = writeln!(s, "{name}: {} mu={} tau={}", r.kind, r.mu_local, r.tau);
            }
            Err(e) => {
                let _ = writeln!(s, "{name}: error: {}", e.message);
                code = code.max(e.code);
            }
        }
    }
    Ok((s, code))
}

/// Accepts `A 5`, `A5`, `E 6` and `E6`.
pub fn parse_family(family: &str, index: Option<u32>) -> CliResult<AdeFamily> {
    let name = match index {
        Some(n) => format!("{family}{n}"),
        None => family.to_string(),
    };
    let upper = name.trim().to_ascii_uppercase();
    AdeFamily::from_str(&upper).map_err(|e| CliError::input(format!("invalid family `{name}`: {e}")))
}

fn parse_rationals(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Rational>().map_err(|_| CliError::input(format!("not a rational number: `{t}`")))
        })
        .collect()
}

fn parse_point(s: &str) -> CliResult<[Rational; 2]> {
    let v = parse_rationals(s)?;
    <[Rational; 2]>::try_from(v).map_err(|_| CliError::input("--point takes two coordinates y,z"))
}

fn parse_loci(s: &str) -> CliResult<Vec<Locus>> {
    Ok(s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(Locus::from_str).collect::<Result<_, _>>()?)
}

fn deform(dv: &DeformationVector, json: bool) -> CliResult<String> {
    let f = build_deformed(dv);
    let (points, irrational) = rational_critical_points(dv)?;
    let mut typed = Vec::with_capacity(points.len());
    for p in &points {
        let yz = [p.coords[1].clone(), p.coords[2].clone()];
        let kind = if p.loci.in_l { Some(deformation_type_at(dv, &yz)?.to_string()) } else { None };
        typed.push((p.clone(), kind));
    }
    let report = DeformJson::new(dv, f.to_string(), &typed, irrational);
    if json {
        return Ok(to_json(&report));
    }
    let mut s = String::new();
    let _ = writeln!(s, "family: {}", report.family);
    let names = dv.family.lambda_names();
    let lambda: Vec<String> = names.iter().zip(&report.lambda).map(|(n, v)| format!("{n} = {v}")).collect();
    let _ = writeln!(s, "lambda: {}", lambda.join(", "));
    let _ = writeln!(s, "F = {}", report.polynomial);
    if typed.is_empty() {
        s.push_str("no rational critical points\n");
    }
    for (p, kind) in &typed {
        let loci: Vec<String> = dv
            .family
            .loci()
            .into_iter()
            .filter(|l| p.loci.contains(*l).unwrap_or(false))
            .map(|l| l.to_string())
            .collect();
        let _ = write!(s, "critical point (y, z) = ({}, {})", p.coords[1], p.coords[2]);
        if !loci.is_empty() {
            let _ = write!(s, " on {}", loci.join(", "));
        }
        match kind {
            Some(k) => {
                let _ = writeln!(s, ": {k}");
            }
            None => s.push_str(": off the fibre\n"),
        }
    }
    if irrational {
        s.push_str("some critical points are irrational and were not classified\n");
    }
    Ok(s)
}

/// Samples every row of a family's table in parallel.
pub fn adjacency_table(family: AdeFamily, seed: u64, samples: usize) -> CliResult<Vec<AdjacencyJson>> {
    let specs = adjacency_rows(family);
    let rows: Result<Vec<_>, Error> =
        specs.par_iter().enumerate().map(|(i, spec)| sample_row(family, i, spec, seed, samples)).collect();
    Ok(rows?.iter().map(AdjacencyJson::from).collect())
}

fn adjacency(family: AdeFamily, seed: u64, samples: usize, json: bool) -> CliResult<(String, i32)> {
    let rows = adjacency_table(family, seed, samples)?;
    let code = if rows.iter().any(|r| r.agree == Some(false)) { 1 } else { 0 };
    if json {
        return Ok((to_json(&rows), code));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{family} adjacency (seed {seed}, {samples} samples per row)");
    for r in &rows {
        let constraints = if r.constraints.is_empty() { "-".to_string() } else { r.constraints.join(", ") };
        let predicted = r.predicted.as_deref().unwrap_or("?");
        let observed = r.observed.as_deref().unwrap_or("no sample");
        let verdict = match r.agree {
            Some(true) => "agree",
            Some(false) => "DISAGREE",
            None => "-",
        };
        let _ = writeln!(s, "{constraints:<24} predicted {predicted:<6} observed {observed:<10} {verdict}");
    }
    Ok((s, code))
}

/// Reads and validates a descriptor file.
pub fn load_descriptor(path: &Path) -> CliResult<Transition> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let d: Descriptor = serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    d.validate().map_err(CliError::input)
}

fn transition(path: &Path, json: bool) -> CliResult<String> {
    let mut s = String::new();
    match load_descriptor(path)? {
        Transition::Small(data) => {
            let r = clemens_report(&data)?;
            let verdict = conifoldability_wh(&data).ok();
            let report = SmallReportJson::new(&r, verdict.as_ref());
            if json {
                return Ok(to_json(&report));
            }
            let _ = writeln!(s, "n = {}, m = {}, tau = {}, k = {}", r.n, r.m, r.tau, r.k);
            let _ = writeln!(s, "c' = {}, c'' = {}, c = {}", r.c_prime, r.c_second, r.c);
            let _ = writeln!(s, "bideg = ({}, {})", r.bideg.0, r.bideg.1);
            let _ = writeln!(s, "h0 = {} ({})", r.h0, r.rigidity);
            match report.conifold {
                Some(c) => {
                    let _ = writeln!(s, "conifold: {c}");
                }
                None => s.push_str("conifold: undecided, some point is not weighted homogeneous\n"),
            }
            let d = &r.deltas;
            let _ = writeln!(s, "change from Y to Ybar, Ytilde:");
            let _ = writeln!(s, "  b2: {}, {}", d.b2_bar, d.b2_tilde);
            let _ = writeln!(s, "  b3: {}, {}", d.b3_bar, d.b3_tilde);
            let _ = writeln!(s, "  b4: {}, {}", d.b4_bar, d.b4_tilde);
            let _ = writeln!(s, "  euler: {}, {}", d.euler_bar, d.euler_tilde);
            if let Some(h) = &r.hodge {
                let _ = writeln!(s, "hodge Y: ({}, {}), Ytilde: ({}, {})", h.h11_y, h.h21_y, h.h11_tilde, h.h21_tilde);
                let _ = writeln!(s, "euler Y = {}, Ybar = {}, Ytilde = {}", h.euler_y, h.euler_bar, h.euler_tilde);
            }
            for w in &r.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
        }
        Transition::TypeII { degree } => {
            let r = type2_report(degree)?;
            if json {
                return Ok(to_json(&TypeIIJson::from(&r)));
            }
            let _ = writeln!(s, "degree = {}", r.degree);
            match r.c_increment {
                Some(c) => {
                    let _ = writeln!(s, "c = {c}");
                }
                None => s.push_str("c = unknown\n"),
            }
        }
        Transition::TypeIII { genus, e3 } => {
            let r = type3_report(genus, e3);
            if json {
                return Ok(to_json(&TypeIIIJson::from(&r)));
            }
            let _ = writeln!(s, "degree = {}", r.degree);
            let _ = writeln!(s, "conifoldable: {}", r.conifoldable);
            if let (Some((k, c)), Some(nodes)) = (r.conifold_bideg, r.conifold_nodes) {
                let _ = writeln!(s, "conifold bideg = ({k}, {c}) with {nodes} nodes");
            }
            if r.unsmoothable {
                s.push_str("warning: projectively unsmoothable\n");
            }
            for n in &r.notes {
                let _ = writeln!(s, "note: {n}");
            }
        }
    }
    Ok(s)
}

fn parse_order(s: &str) -> CliResult<TermOrder> {
    match s {
        "lex" => Ok(TermOrder::Lex),
        "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
        "local" | "ds" => Ok(TermOrder::LocalDegRevLex),
        _ => match s.strip_prefix("weighted:") {
            Some(w) => Ok(TermOrder::WeightedDeg(parse_rationals(w)?)),
            None => Err(CliError::input(format!("unknown order `{s}`"))),
        },
    }
}

/// Computes and prints the basis of the ideal given one polynomial per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn groebner(text: &str, order: &str, dim: bool, vars: Option<&str>, max_pairs: Option<usize>) -> CliResult<String> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    if lines.is_empty() {
        return Err(CliError::input("no polynomials given"));
    }
    let ring = ring_for(&lines, vars)?;
    let gens = lines.iter().map(|l| parse_poly(l, &ring)).collect::<Result<Vec<MultiPoly>, _>>()?;
    let order = parse_order(order)?;
    let mut config = GroebnerConfig::default();
    if let Some(m) = max_pairs {
        config.max_pairs = m;
    }
    let ideal = Ideal::new(&ring, gens)?;
    let sb = if order.is_global() {
        buchberger_with(&ideal, &order, &config)?
    } else {
        mora_standard_basis_with(&ideal, &order, &config)?
    };
    let mut s = String::new();
    let basis: Vec<String> = sb.basis().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "{{{}}}", basis.join(", "));
    let lead: Vec<String> = sb.leading_monomials().iter().map(|m| m.display(&ring).to_string()).collect();
    let _ = writeln!(s, "leading: ({})", lead.join(", "));
    if dim {
        match sb.quotient_dimension() {
            QuotientDim::Finite(n) => {
                let _ = writeln!(s, "dim: {n}");
            }
            QuotientDim::Infinite => s.push_str("dim: Infinite\n"),
        }
    }
    Ok(s)
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
