//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Exit codes: 0 when everything passed, 1 on a verification failure or I/O
//! problem, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chromatic::{integral_map, positivity_report_with, ChromaticOptions, DEFAULT_BRUTE_FORCE_LIMIT};
use crate::combinat::{Graph, Partition, UnitIntervalOrder};
use crate::error::{Error, Result};
use crate::scan::{scan_e_positivity, Family, DEFAULT_SCAN_CAP};
use crate::symfunc::{configure_disk_cache, Basis, DiskCache};
use crate::verify::{csv_quote, instances, run_instances, Bounds, Instance, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "chroma", version, about = "Chromatic symmetric functions of unit interval orders")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Transition-matrix cache directory.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic symmetric function of inc(U) or of an arbitrary graph.
    Csf(CsfArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Look for UIOs with a negative e-coefficient.
    Scan(ScanArgs),
    /// Manage the transition-matrix cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct CsfArgs {
    /// 1-based next-vector, e.g. 3,4,4.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    pub uio: Option<String>,
    /// Graph as n=3;0-1,1-2.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long, value_enum, default_value = "e")]
    pub basis: BasisArg,
    /// Report only this coefficient.
    #[arg(long)]
    pub partition: Option<String>,
    /// Largest graph expanded by enumerating colorings.
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_LIMIT)]
    pub brute_force_limit: usize,
    /// Expand over stable set partitions instead of colorings.
    #[arg(long)]
    pub accelerator: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    E,
    M,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::E => Basis::E,
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of complete, ppos, eposn, lgv, gasharov, sink, cauchy, gnechrom,
    /// involutions, thn1, scott-suppes, basis, clan-e, clan-positivity.
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    #[arg(long)]
    pub max_graph_n: Option<usize>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub max_alpha_entry: Option<usize>,
    #[arg(long)]
    pub max_alpha_sum: Option<usize>,
    /// Restrict to instances on this UIO.
    #[arg(long)]
    pub uio: Option<String>,
    /// Restrict to instances with this partition.
    #[arg(long)]
    pub partition: Option<String>,
    /// Replay one instance given as JSON, as printed in a failure report.
    #[arg(long, conflicts_with_all = ["uio", "partition"])]
    pub instance: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Largest k for the P_{n,k} family.
    #[arg(long, default_value_t = 3)]
    pub max_k: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub family: FamilyArg,
    /// Raise the size cap.
    #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    All,
    Pnk,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// List cached matrices and whether they pass their checksum.
    List,
    /// Recompute every matrix up to the given degree.
    Rebuild {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Delete all cached matrices.
    Clear,
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::CacheCorrupt(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Error::BadParameter("--jobs must be positive".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| Error::BadParameter(e.to_string()))?;
    if !matches!(cli.command, Command::Cache { .. }) {
        if let Some(dir) = &cli.cache_dir {
            configure_disk_cache(Some(DiskCache::new(dir)?));
        }
    }
    pool.install(|| match &cli.command {
        Command::Csf(a) => cmd_csf(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, cli.format, out, err),
        Command::Scan(a) => cmd_scan(a, cli.format, out, err),
        Command::Cache { action } => cmd_cache(action, cli, out),
    })
}

fn emit(out: &mut (dyn Write + Send), text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn emit_json(out: &mut (dyn Write + Send), v: &Value) -> Result<()> {
    emit(out, &serde_json::to_string_pretty(v)?)
}

fn cmd_csf(a: &CsfArgs, format: Format, out: &mut (dyn Write + Send)) -> Result<i32> {
    let (label, graph) = match (&a.uio, &a.graph) {
        (Some(s), _) => {
            let u: UnitIntervalOrder = s.parse()?;
            (json!({"uio": u.to_string()}), u.inc_graph())
        }
        (None, Some(s)) => {
            let g: Graph = s.parse()?;
            (json!({"graph": g.to_string()}), g)
        }
        (None, None) => return Err(Error::BadParameter("one of --uio or --graph is required".into())),
    };
    let opts = ChromaticOptions { brute_force_limit: a.brute_force_limit, accelerator: a.accelerator };
    let report = positivity_report_with(&graph, &opts)?;
    let basis = Basis::from(a.basis);
    let mut f = report.in_basis(basis)?;
    if let Some(p) = &a.partition {
        let lambda: Partition = p.parse()?;
        let c = f.coeff(&lambda);
        f = crate::symfunc::SymFunc::term(basis, lambda, c);
    }
    let coefficients = integral_map(&f);
    match format {
        Format::Json => {
            let mut v = label;
            let obj = v.as_object_mut().expect("object");
            obj.insert("basis".into(), json!(basis.symbol()));
            obj.insert("coefficients".into(), coefficients);
            obj.insert("ePositive".into(), json!(report.e_positive));
            obj.insert("sPositive".into(), json!(report.s_positive));
            emit_json(out, &v)?;
        }
        Format::Csv => {
            let mut text = String::from("partition,coefficient\n");
            for (lambda, c) in f.terms().rev() {
                text.push_str(&format!("{},{c}\n", csv_quote(&lambda.to_string())));
            }
            emit(out, &text)?;
        }
        Format::Text => {
            emit(out, &format!("{f}\ne-positive: {}\ns-positive: {}", report.e_positive, report.s_positive))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    a: &VerifyArgs,
    format: Format,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let suite: Suite = a.suite.parse()?;
    let list = if let Some(text) = &a.instance {
        vec![serde_json::from_str::<Instance>(text)
            .map_err(|_| Error::Parse { what: "instance", input: text.clone() })?]
    } else {
        let d = suite.default_bounds();
        let mut b = Bounds {
            max_n: a.max_n.unwrap_or(d.max_n),
            max_k: a.max_k.unwrap_or(d.max_k),
            max_graph_n: a.max_graph_n.unwrap_or(d.max_graph_n),
            max_degree: a.max_degree.unwrap_or(d.max_degree),
            max_alpha_entry: a.max_alpha_entry.unwrap_or(d.max_alpha_entry),
            max_alpha_sum: a.max_alpha_sum.unwrap_or(d.max_alpha_sum),
        };
        let uio = a.uio.as_deref().map(str::parse::<UnitIntervalOrder>).transpose()?;
        let partition = a.partition.as_deref().map(str::parse::<Partition>).transpose()?;
        if let Some(u) = &uio {
            b.max_n = b.max_n.max(u.len());
        }
        if let Some(p) = &partition {
            b.max_k = b.max_k.max(p.weight());
        }
        let mut list = instances(suite, &b)?;
        if let Some(u) = &uio {
            let key = u.to_string();
            list.retain(|i| i.uio.as_deref() == Some(key.as_str()));
        }
        if let Some(p) = &partition {
            let key = p.to_string();
            list.retain(|i| i.partition.as_deref() == Some(key.as_str()));
        }
        list
    };
    let report = run_instances(suite, list);
    match format {
        Format::Json => emit_json(out, &report.to_json())?,
        Format::Csv => emit(out, &report.to_csv())?,
        Format::Text => emit(out, &report.to_text())?,
    }
    writeln!(err, "{}: {:.3}s", suite, report.wall_time.as_secs_f64())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_scan(a: &ScanArgs, format: Format, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    let family = match a.family {
        FamilyArg::All => Family::All,
        FamilyArg::Pnk => Family::Pnk,
    };
    let report = scan_e_positivity(family, a.max_n, a.max_k, a.cap)?;
    match format {
        Format::Json => emit_json(out, &report.to_json())?,
        Format::Csv => emit(out, &report.to_csv())?,
        Format::Text => emit(out, &report.to_text())?,
    }
    writeln!(err, "scan: {:.3}s", report.wall_time.as_secs_f64())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_cache(action: &CacheAction, cli: &Cli, out: &mut (dyn Write + Send)) -> Result<i32> {
    let cache = DiskCache::new(cli.cache_dir.clone().unwrap_or_else(DiskCache::default_dir))?;
    let summary = match action {
        CacheAction::List => {
            let mut rows = Vec::new();
            for (from, to, d) in cache.entries()? {
                let valid = matches!(cache.load(from, to, d), Ok(Some(_)));
                rows.push(json!({"from": from.symbol(), "to": to.symbol(), "degree": d, "valid": valid}));
            }
            json!({"dir": cache.dir().display().to_string(), "entries": rows})
        }
        CacheAction::Rebuild { max_degree } => {
            json!({"dir": cache.dir().display().to_string(), "written": cache.rebuild(*max_degree)?})
        }
        CacheAction::Clear => json!({"dir": cache.dir().display().to_string(), "removed": cache.clear()?}),
    };
    match cli.format {
        Format::Json => emit_json(out, &summary)?,
        Format::Csv => {
            let mut text = String::from("from,to,degree,valid\n");
            for r in summary["entries"].as_array().into_iter().flatten() {
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    r["from"].as_str().unwrap_or(""),
                    r["to"].as_str().unwrap_or(""),
                    r["degree"],
                    r["valid"]
                ));
            }
            emit(out, &text)?;
        }
        Format::Text => emit(out, &summary.to_string())?,
    }
    let corrupt = summary["entries"].as_array().is_some_and(|rows| rows.iter().any(|r| r["valid"] == false));
    Ok(if corrupt { EXIT_FAILURE } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("chroma").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn coefficients(args: &[&str]) -> Value {
        let (code, out, _) = run_str(args);
        assert_eq!(code, 0);
        serde_json::from_str::<Value>(&out).unwrap()["coefficients"].clone()
    }

    #[test]
    fn csf_examples() {
        assert_eq!(coefficients(&["csf", "--uio", "3,3", "--basis", "e"]), json!({"2": 2}));
        assert_eq!(coefficients(&["csf", "--uio", "2,3", "--basis", "e"]), json!({"1,1": 1}));
        assert_eq!(coefficients(&["csf", "--uio", "3,4,4", "--basis", "e"]), json!({"2,1": 1, "3": 3}));
        assert_eq!(coefficients(&["csf", "--uio", "3,4,4", "--partition", "3"]), json!({"3": 3}));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["csf", "--uio", "3,2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["csf"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["csf", "--uio", "3,4,4", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn claw_reports_positivity_flags() {
        let (code, out, _) = run_str(&["csf", "--graph", "n=4;0-1,0-2,0-3", "--basis", "s"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["sPositive"], false);
        assert_eq!(v["coefficients"]["2,2"], -1);
    }
}
