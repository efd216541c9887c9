use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use tristram::bounds::{BoundReport, DEFAULT_DIGITS};
use tristram::oracle::exhaustive_check;
use tristram::seifert::read_seifert_file;
use tristram::signature::{murasugi_signature, step_function, to_csv, to_svg, SignatureFunction};
use tristram::{alexander_polynomial, resolve_expression, KnotTable, SeifertMatrix};

use crate::args::{Command, Format, Output};
use crate::config::Config;

/// A problem with the command line itself rather than with a computation.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

const DEFAULT_ORACLE_RANGE: u32 = 16;

/// Settings shared by every subcommand after flags, environment and config
/// file have been merged.
pub struct Settings {
    pub table: KnotTable,
    pub out_dir: Option<PathBuf>,
    pub precision: u32,
    pub oracle_range: u32,
}

impl Settings {
    pub fn new(config: &Config, out_dir: Option<PathBuf>, seifert_file: Option<&Path>) -> Result<Self> {
        let mut table = KnotTable::builtin();
        for path in config.table_path.as_deref().into_iter().chain(seifert_file) {
            let entries = read_seifert_file(path).with_context(|| format!("loading knot table {}", path.display()))?;
            for (name, v) in entries {
                table.insert(&name, v);
            }
        }
        Ok(Settings {
            table,
            out_dir: out_dir.or_else(|| config.out_dir.clone()),
            precision: config.precision.unwrap_or(DEFAULT_DIGITS),
            oracle_range: config.oracle_range.unwrap_or(DEFAULT_ORACLE_RANGE),
        })
    }

    fn resolve(&self, expr: &str) -> Result<SeifertMatrix> {
        resolve_expression(expr, &self.table).map_err(|e| usage(format!("knot expression {expr:?}: {e}")))
    }

    fn emit(&self, out: &Output, stem: &str, content: &str) -> Result<()> {
        let path = match (&out.output, &self.out_dir) {
            (Some(p), _) => p.clone(),
            (None, Some(dir)) => dir.join(format!("{stem}.{}", out.format.extension())),
            (None, None) => {
                print!("{content}");
                return Ok(());
            }
        };
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
        }
        std::fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {}", path.display());
        Ok(())
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if c == '-' {
            out.push('m');
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

fn allow(out: &Output, cmd: &str, formats: &[Format]) -> Result<()> {
    if formats.contains(&out.format) {
        Ok(())
    } else {
        let names: Vec<&str> = formats.iter().map(|f| f.extension()).collect();
        Err(usage(format!("{cmd} supports --format {}", names.join(", ").replace("txt", "text"))))
    }
}

fn precision(ctx: &Settings, out: &Output) -> u32 {
    out.precision.unwrap_or(ctx.precision)
}

fn select_factor(report: &mut BoundReport, factor: Option<usize>) -> Result<()> {
    if let Some(k) = factor {
        if k == 0 || k > report.factors.len() {
            return Err(usage(format!("--factor {k}: the Alexander polynomial has {} relevant factors", report.factors.len())));
        }
        report.factors = vec![report.factors[k - 1].clone()];
    }
    Ok(())
}

pub fn run(ctx: &Settings, command: &Command) -> Result<()> {
    match command {
        Command::Signature { expr, out } => signature(ctx, expr, out),
        Command::Bounds { expr, out } => bounds(ctx, expr, out),
        Command::Gordian { k, j, out } => pair(ctx, "gordian", k, j, out),
        Command::Clasp { k, j, out } => pair(ctx, "clasp", k, j, out),
        Command::OracleCheck { range, out } => oracle(ctx, range.unwrap_or(ctx.oracle_range), out),
        Command::Table { out } => table(ctx, out),
    }
}

fn point(label: &tristram::algebra::RootLabel) -> String {
    label.t_exact.clone().unwrap_or_else(|| format!("[{},{}]", label.t_lo, label.t_hi))
}

fn signature(ctx: &Settings, expr: &str, out: &Output) -> Result<()> {
    let v = ctx.resolve(expr)?;
    let sf = step_function(&v).context("computing the signature function")?;
    let digits = precision(ctx, out);
    let content = match out.format {
        Format::Csv => to_csv(&sf, digits).context("rendering CSV")?,
        Format::Svg => to_svg(&sf, expr),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&signature_json(expr, &v, &sf, digits, out.factor)?)?;
            s.push('\n');
            s
        }
        Format::Text => signature_text(expr, &v, &sf, digits, out.factor)?,
    };
    ctx.emit(out, &format!("signature_{}", slug(expr)), &content)
}

fn plateau_bounds(sf: &SignatureFunction, digits: u32) -> Vec<(String, String, i32)> {
    let labels: Vec<String> = sf.summaries(digits).iter().map(|s| point(&s.root)).collect();
    sf.plateaus
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let lo = if i == 0 { "0".to_string() } else { labels[i - 1].clone() };
            let hi = labels.get(i).cloned().unwrap_or_else(|| "1/2".to_string());
            (lo, hi, p.value)
        })
        .collect()
}

fn signature_json(expr: &str, v: &SeifertMatrix, sf: &SignatureFunction, digits: u32, factor: Option<usize>) -> Result<Value> {
    let mut report = BoundReport::from_function(expr, v.size(), sf, digits).context("summarizing factors")?;
    select_factor(&mut report, factor)?;
    let factors: Vec<Value> = report
        .factors
        .iter()
        .map(|f| {
            let mut o = json!({
                "coefficients": f.coefficients,
                "multiplicity": f.multiplicity,
                "roots": f.roots,
            });
            if let Some(n) = f.cyclotomic {
                o["cyclotomic"] = json!(n);
            }
            o
        })
        .collect();
    let plateaus: Vec<Value> = plateau_bounds(sf, digits)
        .into_iter()
        .map(|(lo, hi, value)| json!({ "t_lo": lo, "t_hi": hi, "value": value }))
        .collect();
    Ok(json!({
        "knot": expr,
        "seifert_size": v.size(),
        "alexander": sf.alexander.to_string(),
        "murasugi_signature": murasugi_signature(v),
        "factors": factors,
        "plateaus": plateaus,
    }))
}

fn signature_text(expr: &str, v: &SeifertMatrix, sf: &SignatureFunction, digits: u32, factor: Option<usize>) -> Result<String> {
    let mut report = BoundReport::from_function(expr, v.size(), sf, digits).context("summarizing factors")?;
    select_factor(&mut report, factor)?;
    let mut s = String::new();
    let _ = writeln!(s, "knot: {expr}");
    let _ = writeln!(s, "seifert matrix: {0}x{0}", v.size());
    let _ = writeln!(s, "alexander polynomial: {}", sf.alexander);
    let _ = writeln!(s, "signature at t = 1/2: {}", murasugi_signature(v));
    for (i, f) in report.factors.iter().enumerate() {
        let index = factor.unwrap_or(i + 1);
        let name = f.cyclotomic.map_or(String::new(), |n| format!(" = Φ_{n}"));
        let poly = tristram::Poly::from_ints(&f.coefficients).display_with("x");
        let _ = writeln!(s, "factor {index}: {poly}{name}, multiplicity {}", f.multiplicity);
        for r in &f.roots {
            let _ = writeln!(
                s,
                "  t = {}: jump {}, balanced {}, non-balanced {}",
                point(&r.t),
                r.jump,
                half(r.balanced_x2),
                r.nonbalanced
            );
        }
    }
    let _ = writeln!(s, "plateaus:");
    for (lo, hi, value) in plateau_bounds(sf, digits) {
        let _ = writeln!(s, "  ({lo}, {hi}): {value}");
    }
    Ok(s)
}

fn half(x2: i32) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{x2}/2")
    }
}

fn report_output(ctx: &Settings, mut report: BoundReport, stem: &str, out: &Output, headline: Option<String>) -> Result<()> {
    select_factor(&mut report, out.factor)?;
    let content = match out.format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => bounds_csv(&report)?,
        _ => {
            let mut s = headline.map(|h| h + "\n").unwrap_or_default();
            s.push_str(&report.render_text());
            s
        }
    };
    ctx.emit(out, stem, &content)
}

fn bounds_csv(report: &BoundReport) -> Result<String> {
    let mut s = String::from("factor,coefficients,multiplicity,cyclotomic,jump,sig_min,sig_max,n,p,u_factor\n");
    for (i, f) in report.factors.iter().enumerate() {
        let coeffs: Vec<String> = f.coefficients.iter().map(i64::to_string).collect();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            i + 1,
            coeffs.join(" "),
            f.multiplicity,
            f.cyclotomic.map_or(String::new(), |n| n.to_string()),
            f.jump,
            half(f.sig_min_x2),
            half(f.sig_max_x2),
            f.n,
            f.p,
            f.u_factor
        );
    }
    Ok(s)
}

fn bounds(ctx: &Settings, expr: &str, out: &Output) -> Result<()> {
    allow(out, "bounds", &[Format::Text, Format::Json, Format::Csv])?;
    let v = ctx.resolve(expr)?;
    let report = BoundReport::build(expr, &v, precision(ctx, out)).context("computing bounds")?;
    report_output(ctx, report, &format!("bounds_{}", slug(expr)), out, None)
}

fn pair(ctx: &Settings, cmd: &str, k: &str, j: &str, out: &Output) -> Result<()> {
    allow(out, cmd, &[Format::Text, Format::Json, Format::Csv])?;
    let (kv, jv) = (ctx.resolve(k)?, ctx.resolve(j)?);
    let report = BoundReport::for_pair(k, &kv, j, &jv, precision(ctx, out)).with_context(|| format!("computing {cmd} bound"))?;
    let headline = format!("{cmd} distance between {k} and {j} is at least {}", report.u2);
    report_output(ctx, report, &format!("{cmd}_{}_vs_{}", slug(k), slug(j)), out, Some(headline))
}

fn oracle(ctx: &Settings, range: u32, out: &Output) -> Result<()> {
    allow(out, "oracle-check", &[Format::Text, Format::Json])?;
    let report = exhaustive_check(range).context("running the lattice search")?;
    let content = match out.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        _ => report.render_text(),
    };
    ctx.emit(out, &format!("oracle_check_{range}"), &content)?;
    if !report.passed() {
        bail!("{} mismatches between the closed formulas and the search", report.mismatches.len());
    }
    Ok(())
}

fn table(ctx: &Settings, out: &Output) -> Result<()> {
    allow(out, "table", &[Format::Text, Format::Json, Format::Csv])?;
    let rows: Vec<(String, usize, String, i32)> = ctx
        .table
        .entries()
        .iter()
        .map(|e| (e.name.clone(), e.matrix.size(), alexander_polynomial(&e.matrix).to_string(), murasugi_signature(&e.matrix)))
        .collect();
    let content = match out.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(n, size, a, s)| json!({ "name": n, "seifert_size": size, "alexander": a, "signature": s }))
                .collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("name,seifert_size,alexander,signature\n");
            for (n, size, a, sig) in &rows {
                let _ = writeln!(s, "{n},{size},\"{a}\",{sig}");
            }
            s
        }
        _ => {
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(4).max(4);
            let mut s = format!("{:width$}  {:>4}  {:>6}  alexander polynomial\n", "name", "size", "σ(-1)");
            for (n, size, a, sig) in &rows {
                let _ = writeln!(s, "{n:width$}  {size:>4}  {sig:>6}  {a}");
            }
            s
        }
    };
    ctx.emit(out, "table", &content)
}
