//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code together with everything that would be printed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::center::{central_family, family_transition, geck_rouquier_basis, FamilyKind};
use crate::characters::{char_table, TableFamily, TableMethod};
use crate::coeff::{parse_expr, parse_rational, pretty};
use crate::combi::{zeta_permutation, Composition, Partition, Permutation, RibbonShape, MAX_N};
use crate::error::{Error, Result};
use crate::export::{element_to_json, export_element, export_matrix, Format, MatrixDocument};
use crate::hecke::{
    descent_sum, jm_element, jm_elementary, longest_square, normalize, ribbon_sum, signed_sum,
    upsilon, HeckeElement, JmKind, SignedKind,
};
use crate::symfunc::{transition_matrix, Basis, QMatrix};
use crate::verify::{verify, verify_all, VerificationReport, THEOREMS};

pub const DEFAULT_MAX_N: usize = 5;
pub const THREADS_ENV: &str = "HECKE_CENTER_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "hecke-center",
    version,
    about = "Exact computations in the center of the Hecke algebra of S_n"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,
    /// Render coefficients in Q = q - 1/q and q-integers where possible.
    #[arg(long = "pretty-Q", alias = "pretty-q", global = true)]
    pub pretty_q: bool,
    /// Permit n >= 7.
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SizeArg {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transition matrix between two bases of symmetric functions.
    Transition {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        from: Basis,
        #[arg(long)]
        to: Basis,
    },
    /// A family of central elements.
    CentralBasis {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        kind: FamilyKind,
        /// Print coordinates in the Geck-Rouquier basis instead of elements.
        #[arg(long)]
        in_gamma: bool,
    },
    /// Character table of the zeta or Upsilon elements.
    CharTable {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long, default_value = "zeta")]
        family: TableFamily,
        #[arg(long, default_value = "trace")]
        method: TableMethod,
        /// Specialize q to a rational value `a/b`.
        #[arg(long)]
        at_q: Option<String>,
    },
    /// Build one element of H_n.
    Element {
        #[command(flatten)]
        size: SizeArg,
        /// `zeta:J`, `upsilon:J`, `box:J`, `nabla:J`, `square:J`, `descent:J`,
        /// `ribbon:J/K/..`, `xi:i`, `x:i`, `e:k`, `gamma:lambda`,
        /// `family:KIND:lambda`, `word:i.j.k`, `perm:[..]` or `one`.
        #[arg(long)]
        spec: String,
        /// Apply the normalization N_I for this composition.
        #[arg(long)]
        normalize: Option<String>,
        /// Scale by a coefficient expression.
        #[arg(long)]
        scale: Option<String>,
        /// Print coordinates in the Geck-Rouquier basis (element must be central).
        #[arg(long)]
        in_gamma: bool,
    },
    /// Run named checks; `all` runs every check.
    Verify {
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        #[arg(long, default_value = "all")]
        theorem: String,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Time the main constructions at one n.
    Bench {
        #[command(flatten)]
        size: SizeArg,
    },
}

/// Everything [`run`] would print, and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Any error that stops a subcommand; reported with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

/// Sizes the global rayon pool from [`THREADS_ENV`]; a no-op once a pool
/// exists.
pub fn init_thread_pool() {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let mut out = CliOutput {
                code,
                ..CliOutput::default()
            };
            if e.use_stderr() {
                out.stderr = text;
            } else {
                out.stdout = text;
            }
            return out;
        }
    };
    let mut out = CliOutput::default();
    match execute(&cli, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure(msg)) => {
            let _ = writeln!(out.stderr, "error: {msg}");
            out.code = 2;
        }
    }
    out
}

fn check_size(cli: &Cli, n: usize, out: &mut CliOutput) -> std::result::Result<(), Failure> {
    if n == 0 {
        return Err(Failure("--n must be at least 1".into()));
    }
    if n > MAX_N {
        return Err(Failure(format!(
            "--n {n} exceeds the supported maximum {MAX_N}"
        )));
    }
    if n > DEFAULT_MAX_N + 1 && !cli.allow_large {
        return Err(Failure(format!(
            "--n {n} requires --allow-large (cost grows like n!)"
        )));
    }
    if n > DEFAULT_MAX_N {
        let _ = writeln!(
            out.stderr,
            "warning: n = {n} is above {DEFAULT_MAX_N}; expect long run times"
        );
    }
    Ok(())
}

fn emit_matrix(cli: &Cli, m: &QMatrix, out: &mut CliOutput) {
    let s = export_matrix(m, cli.format, cli.pretty_q);
    out.stdout.push_str(&s);
    if !s.ends_with('\n') {
        out.stdout.push('\n');
    }
}

fn execute(cli: &Cli, out: &mut CliOutput) -> std::result::Result<i32, Failure> {
    match &cli.command {
        Command::Transition { size, from, to } => {
            check_size(cli, size.n, out)?;
            emit_matrix(cli, &transition_matrix(size.n, *from, *to), out);
            Ok(0)
        }
        Command::CentralBasis {
            size,
            kind,
            in_gamma,
        } => {
            check_size(cli, size.n, out)?;
            if *in_gamma {
                emit_matrix(cli, &family_transition(size.n, *kind)?, out);
            } else {
                let fam = central_family(size.n, *kind)?;
                emit_elements(cli, &fam.elements, out);
            }
            Ok(0)
        }
        Command::CharTable {
            size,
            family,
            method,
            at_q,
        } => {
            check_size(cli, size.n, out)?;
            let mut m = char_table(size.n, *family, *method);
            if let Some(q0) = at_q {
                m = m.evaluate(&parse_rational(q0)?)?;
            }
            emit_matrix(cli, &m, out);
            Ok(0)
        }
        Command::Element {
            size,
            spec,
            normalize: norm,
            scale,
            in_gamma,
        } => {
            check_size(cli, size.n, out)?;
            let mut h = build_element(size.n, spec)?;
            if let Some(c) = scale {
                h = h.scale(&parse_expr(c)?);
            }
            if let Some(comp) = norm {
                h = normalize(&comp.parse()?, &h)?;
            }
            if *in_gamma {
                let coords = crate::center::decompose_central(&h)?;
                emit_coordinates(cli, &coords, out);
            } else {
                let s = export_element(&h, cli.format, cli.pretty_q);
                out.stdout.push_str(&s);
                if !s.ends_with('\n') {
                    out.stdout.push('\n');
                }
            }
            Ok(0)
        }
        Command::Verify { n, theorem, list } => {
            if *list {
                for (id, desc) in THEOREMS {
                    let _ = writeln!(out.stdout, "{id:20} {desc}");
                }
                return Ok(0);
            }
            let n = n.expect("required unless --list");
            check_size(cli, n, out)?;
            let reports = if theorem == "all" {
                verify_all(n)?
            } else {
                vec![verify(theorem, n)?]
            };
            emit_reports(cli, &reports, out);
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }
        Command::Bench { size } => {
            check_size(cli, size.n, out)?;
            bench(cli, size.n, out)?;
            Ok(0)
        }
    }
}

fn emit_coordinates(cli: &Cli, coords: &[(Partition, crate::coeff::Coeff)], out: &mut CliOutput) {
    let coeff = |c: &crate::coeff::Coeff| {
        if cli.pretty_q {
            pretty(c)
        } else {
            c.to_string()
        }
    };
    match cli.format {
        Format::Text => {
            for (lambda, c) in coords {
                let _ = writeln!(out.stdout, "Gamma_{lambda}: {}", coeff(c));
            }
        }
        Format::Json => {
            let map: BTreeMap<String, String> = coords
                .iter()
                .map(|(l, c)| (l.to_string(), coeff(c)))
                .collect();
            let _ = writeln!(
                out.stdout,
                "{}",
                serde_json::to_string(&map).expect("serializable")
            );
        }
        Format::Csv => {
            let _ = writeln!(out.stdout, "label,coeff");
            for (lambda, c) in coords {
                let _ = writeln!(out.stdout, "{lambda},{}", coeff(c));
            }
        }
    }
}

fn emit_elements(cli: &Cli, elements: &[(Partition, HeckeElement)], out: &mut CliOutput) {
    let coeff = |c: &crate::coeff::Coeff| {
        if cli.pretty_q {
            pretty(c)
        } else {
            c.to_string()
        }
    };
    match cli.format {
        Format::Text => {
            for (lambda, h) in elements {
                let body = if cli.pretty_q {
                    h.pretty()
                } else {
                    h.to_string()
                };
                let _ = writeln!(out.stdout, "{lambda}: {body}");
            }
        }
        Format::Json => {
            let map: BTreeMap<String, serde_json::Value> = elements
                .iter()
                .map(|(lambda, h)| {
                    let v = serde_json::from_str(&element_to_json(h, cli.pretty_q))
                        .expect("valid json");
                    (lambda.to_string(), v)
                })
                .collect();
            let _ = writeln!(
                out.stdout,
                "{}",
                serde_json::to_string(&map).expect("serializable")
            );
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["label", "perm", "coeff"])
                .expect("in-memory write");
            for (lambda, h) in elements {
                for (perm, c) in h.terms() {
                    w.write_record([lambda.to_string(), perm.to_string(), coeff(&c)])
                        .expect("in-memory write");
                }
            }
            out.stdout
                .push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<MatrixDocument>,
}

fn emit_reports(cli: &Cli, reports: &[VerificationReport], out: &mut CliOutput) {
    match cli.format {
        Format::Text => {
            for r in reports {
                let _ = writeln!(out.stdout, "{r}");
            }
            if let [single] = reports {
                if let Some(m) = &single.matrix {
                    let _ = writeln!(out.stdout, "{m}");
                }
            }
        }
        Format::Json => {
            let docs: Vec<ReportJson> = reports
                .iter()
                .map(|r| ReportJson {
                    report: r,
                    matrix: r
                        .matrix
                        .as_ref()
                        .map(|m| MatrixDocument::from_matrix(m, cli.pretty_q)),
                })
                .collect();
            let _ = writeln!(
                out.stdout,
                "{}",
                serde_json::to_string(&docs).expect("serializable")
            );
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "theorem",
                "n",
                "status",
                "elapsed_seconds",
                "location",
                "expected",
                "actual",
            ])
            .expect("in-memory write");
            for r in reports {
                let (loc, exp, act) = r
                    .witness
                    .as_ref()
                    .map(|w| (w.location.clone(), w.expected.clone(), w.actual.clone()))
                    .unwrap_or_default();
                w.write_record([
                    r.theorem.clone(),
                    r.n.to_string(),
                    r.status.to_string(),
                    format!("{:.6}", r.elapsed_seconds),
                    loc,
                    exp,
                    act,
                ])
                .expect("in-memory write");
            }
            out.stdout
                .push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        }
    }
}

fn arg<'a>(spec: &'a str, parts: &[&'a str], k: usize) -> Result<&'a str> {
    parts.get(k).copied().ok_or_else(|| {
        Error::InvalidArgument(format!("element spec `{spec}` is missing an argument"))
    })
}

/// Parses the `--spec` grammar of the `element` subcommand.
pub fn build_element(n: usize, spec: &str) -> Result<HeckeElement> {
    let parts: Vec<&str> = spec.split(':').collect();
    let comp = |k: usize| -> Result<Composition> {
        let c: Composition = arg(spec, &parts, k)?.parse()?;
        if c.size() != n {
            return Err(Error::InvalidArgument(format!(
                "`{c}` is not a composition of {n}"
            )));
        }
        Ok(c)
    };
    let index = |k: usize| -> Result<usize> {
        arg(spec, &parts, k)?
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad index in `{spec}`")))
    };
    match parts[0] {
        "one" => Ok(HeckeElement::one(n)),
        "zeta" => Ok(HeckeElement::basis(&zeta_permutation(&comp(1)?))),
        "upsilon" => Ok(upsilon(&comp(1)?)),
        "box" => Ok(signed_sum(&comp(1)?, SignedKind::Box)),
        "nabla" => Ok(signed_sum(&comp(1)?, SignedKind::Nabla)),
        "square" => Ok(longest_square(&comp(1)?)),
        "descent" => Ok(descent_sum(&comp(1)?)),
        "ribbon" => {
            let comps = arg(spec, &parts, 1)?
                .split('/')
                .map(|s| s.parse::<Composition>())
                .collect::<Result<Vec<_>>>()?;
            let shape = RibbonShape::new(comps);
            if shape.size() != n {
                return Err(Error::InvalidArgument(format!(
                    "ribbon in `{spec}` does not have {n} boxes"
                )));
            }
            Ok(ribbon_sum(&shape))
        }
        "xi" => jm_element(JmKind::Xi, index(1)?, n),
        "x" => jm_element(JmKind::X, index(1)?, n),
        "e" => jm_elementary(n, index(1)?),
        "gamma" => {
            let lambda: Partition = arg(spec, &parts, 1)?.parse()?;
            geck_rouquier_basis(n)?
                .get(&lambda)
                .cloned()
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("`{lambda}` is not a partition of {n}"))
                })
        }
        "family" => {
            let kind: FamilyKind = arg(spec, &parts, 1)?.parse()?;
            let lambda: Partition = arg(spec, &parts, 2)?.parse()?;
            central_family(n, kind)?
                .get(&lambda)
                .cloned()
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("`{lambda}` is not a partition of {n}"))
                })
        }
        "word" => {
            let src = arg(spec, &parts, 1)?;
            let word = if src.is_empty() {
                Vec::new()
            } else {
                src.split(['.', ','])
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::InvalidArgument(format!("bad word in `{spec}`")))?
            };
            if word.iter().any(|&i| i == 0 || i >= n) {
                return Err(Error::InvalidArgument(format!(
                    "generator index out of range 1..{n} in `{spec}`"
                )));
            }
            Ok(HeckeElement::word(n, &word))
        }
        "perm" => {
            let w: Permutation = parts[1..].join(":").parse()?;
            if w.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "`{w}` is not a permutation of {n}"
                )));
            }
            Ok(HeckeElement::basis(&w))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown element kind `{other}`"
        ))),
    }
}

fn bench(cli: &Cli, n: usize, out: &mut CliOutput) -> Result<()> {
    let mut rows: Vec<(String, f64)> = Vec::new();
    let mut time = |name: String, f: &mut dyn FnMut() -> Result<()>| -> Result<()> {
        let start = Instant::now();
        f()?;
        rows.push((name, start.elapsed().as_secs_f64()));
        Ok(())
    };
    for kind in FamilyKind::ALL {
        time(format!("family {kind}"), &mut || {
            central_family(n, kind).map(|_| ())
        })?;
    }
    for family in [TableFamily::Zeta, TableFamily::Upsilon] {
        for method in [TableMethod::Trace, TableMethod::Ram] {
            time(format!("char-table {family} {method}"), &mut || {
                char_table(n, family, method);
                Ok(())
            })?;
        }
    }
    match cli.format {
        Format::Json => {
            let map: Vec<BTreeMap<&str, serde_json::Value>> = rows
                .iter()
                .map(|(k, v)| {
                    BTreeMap::from([
                        ("task", serde_json::json!(k)),
                        ("seconds", serde_json::json!(v)),
                    ])
                })
                .collect();
            let _ = writeln!(
                out.stdout,
                "{}",
                serde_json::to_string(&map).expect("serializable")
            );
        }
        Format::Csv => {
            let _ = writeln!(out.stdout, "task,seconds");
            for (k, v) in &rows {
                let _ = writeln!(out.stdout, "{k},{v:.6}");
            }
        }
        Format::Text => {
            for (k, v) in &rows {
                let _ = writeln!(out.stdout, "{k:28} {v:10.3}s");
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_verify() {
        let out = run(["hecke-center", "verify", "--n", "1", "--theorem", "all"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run([
                "hecke-center",
                "transition",
                "--n",
                "3",
                "--from",
                "x",
                "--to",
                "m"
            ])
            .code,
            2
        );
        assert_eq!(
            run([
                "hecke-center",
                "transition",
                "--n",
                "7",
                "--from",
                "h",
                "--to",
                "m"
            ])
            .code,
            2
        );
        assert_eq!(run(["hecke-center", "frobnicate"]).code, 2);
        assert_eq!(
            run(["hecke-center", "element", "--n", "3", "--spec", "zeta:22"]).code,
            2
        );
    }

    #[test]
    fn element_specs() {
        let z = build_element(4, "zeta:22").unwrap();
        assert_eq!(z, HeckeElement::word(4, &[1, 3]));
        assert_eq!(
            build_element(3, "word:1.2.1").unwrap(),
            build_element(3, "perm:[3,2,1]").unwrap()
        );
        assert!(build_element(3, "word:3").is_err());
        assert_eq!(
            build_element(3, "gamma:3").unwrap(),
            build_element(3, "family:gr:3").unwrap()
        );
    }
}
