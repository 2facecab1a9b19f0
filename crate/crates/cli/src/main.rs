//! Command-line front end: every pipeline as a reproducible command with a
//! human table on stdout and an optional deterministic JSON report.
//!
//! Exit codes: 0 when every assertion a command makes holds, 1 when a
//! mathematical assertion fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use modcurve::certificate::{certify, verify_detailed};
use modcurve::classify::classify_xn;
use modcurve::curves::{
    enumerate_points, rational_point_search, squarefree_twists, twist_partition_experiment,
    weil_window, CurveModel,
};
use modcurve::invariants::{cover_degrees, curve_invariants};

#[derive(Parser)]
#[command(name = "modcurve", version, about = "Invariants, automorphism certificates, \
classification and explicit models of the modular curves X(N)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate delta_N, genus, |Aut|, cusp count, index bound and the
    /// cover-degree ledger over a range of levels
    Invariants {
        /// Levels as "a..b" (inclusive) or a single "a"
        #[arg(long)]
        range: String,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Certify Aut(X(N)) = PSL2(Z/NZ) and re-verify each certificate
    AutCertify {
        #[arg(long)]
        range: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Hyperelliptic/bielliptic classification with its evidence chain
    Classify {
        #[arg(long)]
        range: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate points of a model over F_p, or search rational points up
    /// to a height bound
    Points {
        /// Model name: klein | wiman | x064 | x9 | eteq | e32 | e64 | e49
        #[arg(long)]
        model: String,
        /// Twist parameter d for the wiman model (squarefree, default 1)
        #[arg(long)]
        twist: Option<i64>,
        /// Enumerate over F_p for this prime
        #[arg(long)]
        prime: Option<u64>,
        /// Search rational points of height at most this bound
        #[arg(long)]
        height: Option<i64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the twist-partition experiment over squarefree |d| <= dmax
    TwistScan {
        #[arg(long)]
        dmax: i64,
        #[arg(long)]
        height: i64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// A deterministic report: same inputs, byte-identical JSON apart from the
/// single tool_version line.
#[derive(serde::Serialize)]
struct Report {
    tool_version: String,
    command: String,
    inputs: BTreeMap<String, String>,
    rows: Vec<Value>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &str, inputs: BTreeMap<String, String>) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            inputs,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }
}

enum CmdError {
    Usage(String),
    MathAssertion(String),
    Io(String),
}

fn main() -> ExitCode {
    // die quietly on SIGPIPE like other line-oriented tools instead of
    // panicking when the reader closes the pipe early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { range, json } => cmd_invariants(&range, json.as_deref()),
        Command::AutCertify { range, json } => cmd_aut_certify(&range, json.as_deref()),
        Command::Classify { range, json } => cmd_classify(&range, json.as_deref()),
        Command::Points {
            model,
            twist,
            prime,
            height,
            json,
        } => cmd_points(&model, twist, prime, height, json.as_deref()),
        Command::TwistScan { dmax, height, json } => cmd_twist_scan(dmax, height, json.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::from(0),
        Err(CmdError::MathAssertion(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// "a..b" inclusive, or a single "a".
fn parse_range(range: &str) -> Result<Vec<u64>, CmdError> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| CmdError::Usage(format!("'{s}' is not a level")))
    };
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let n = parse(range)?;
            (n, n)
        }
    };
    if lo > hi || lo == 0 {
        return Err(CmdError::Usage(format!("bad range {range}")));
    }
    Ok((lo..=hi).collect())
}

fn emit(report: &Report, json_path: Option<&std::path::Path>) -> Result<(), CmdError> {
    if let Some(path) = json_path {
        let payload =
            serde_json::to_string_pretty(report).map_err(|e| CmdError::Io(e.to_string()))?;
        std::fs::write(path, payload + "\n").map_err(|e| CmdError::Io(e.to_string()))?;
    }
    Ok(())
}

/// Render rows as a fixed-order text table derived from the JSON values.
fn print_table(rows: &[Value], columns: &[&str]) {
    let cell = |row: &Value, key: &str| -> String {
        match &row[key] {
            Value::Null => "-".to_string(),
            Value::String(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            other => other.to_string(),
        }
    };
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for row in rows {
        for (i, col) in columns.iter().enumerate() {
            widths[i] = widths[i].max(cell(row, col).len());
        }
    }
    let header: Vec<String> = columns
        .iter()
        .zip(&widths)
        .map(|(c, w)| format!("{c:<w$}"))
        .collect();
    println!("{}", header.join("  "));
    for row in rows {
        let line: Vec<String> = columns
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:<w$}", cell(row, c)))
            .collect();
        println!("{}", line.join("  "));
    }
}

fn opt_str<T: ToString>(v: Option<T>) -> Value {
    v.map(|x| json!(x.to_string())).unwrap_or(Value::Null)
}

fn cmd_invariants(range: &str, json_path: Option<&std::path::Path>) -> Result<(), CmdError> {
    let levels = parse_range(range)?;
    let mut inputs = BTreeMap::new();
    inputs.insert("range".to_string(), range.to_string());
    let mut report = Report::new("invariants", inputs);
    for n in levels {
        let inv = curve_invariants(n);
        let ledger = cover_degrees(n).ok();
        let mut row = Map::new();
        row.insert("n".into(), json!(n.to_string()));
        row.insert("delta".into(), json!(inv.delta.to_string()));
        row.insert("genus".into(), json!(inv.genus.to_string()));
        row.insert("aut_order".into(), opt_str(inv.aut_order));
        row.insert("cusp_count".into(), opt_str(inv.cusp_count));
        row.insert("index_bound_m".into(), opt_str(inv.index_bound_m));
        row.insert("deg_pi1".into(), opt_str(ledger.map(|l| l.deg_pi1)));
        row.insert("deg_pi0".into(), opt_str(ledger.map(|l| l.deg_pi0)));
        row.insert("deg_f1".into(), opt_str(ledger.map(|l| l.deg_f1)));
        row.insert(
            "deg_forgetful_x1n2_x0n2".into(),
            opt_str(ledger.map(|l| l.deg_forgetful_x1n2_x0n2)),
        );
        report.rows.push(Value::Object(row));
        if inv.genus < 2 {
            report.notes.push(format!(
                "N = {n}: genus {} below 2, the automorphism and classification \
                 theorems do not apply",
                inv.genus
            ));
        }
    }
    print_table(
        &report.rows,
        &[
            "n",
            "delta",
            "genus",
            "aut_order",
            "cusp_count",
            "index_bound_m",
            "deg_pi1",
            "deg_pi0",
            "deg_f1",
            "deg_forgetful_x1n2_x0n2",
        ],
    );
    for note in &report.notes {
        println!("note: {note}");
    }
    emit(&report, json_path)
}

fn cmd_aut_certify(range: &str, json_path: Option<&std::path::Path>) -> Result<(), CmdError> {
    let levels = parse_range(range)?;
    if let Some(&low) = levels.iter().find(|&&n| n < 7) {
        return Err(CmdError::Usage(format!(
            "level {low} is below 7; certification starts at N = 7"
        )));
    }
    let mut inputs = BTreeMap::new();
    inputs.insert("range".to_string(), range.to_string());
    let mut report = Report::new("aut-certify", inputs);
    let mut all_good = true;
    for n in levels {
        let cert = certify(n).map_err(|e| CmdError::Usage(e.to_string()))?;
        let reasons = verify_detailed(&cert);
        let verified = reasons.is_empty();
        all_good &= cert.is_certified() && verified;
        let mut row = Map::new();
        row.insert("n".into(), json!(n.to_string()));
        row.insert("branch".into(), json!(format!("{:?}", cert.branch)));
        row.insert("verdict".into(), json!(format!("{:?}", cert.verdict)));
        row.insert("verified".into(), json!(verified));
        row.insert("steps".into(), json!(cert.steps.len().to_string()));
        row.insert(
            "certificate".into(),
            serde_json::to_value(&cert).map_err(|e| CmdError::Io(e.to_string()))?,
        );
        for reason in reasons {
            report.notes.push(format!("N = {n}: {reason}"));
        }
        report.rows.push(Value::Object(row));
    }
    print_table(&report.rows, &["n", "branch", "verdict", "verified", "steps"]);
    for note in &report.notes {
        println!("note: {note}");
    }
    emit(&report, json_path)?;
    if !all_good {
        return Err(CmdError::MathAssertion(
            "some level failed to certify or verify".to_string(),
        ));
    }
    Ok(())
}

fn cmd_classify(range: &str, json_path: Option<&std::path::Path>) -> Result<(), CmdError> {
    let levels = parse_range(range)?;
    if let Some(&low) = levels.iter().find(|&&n| n < 7) {
        return Err(CmdError::Usage(format!(
            "level {low} is below 7; the classification starts at N = 7"
        )));
    }
    let mut inputs = BTreeMap::new();
    inputs.insert("range".to_string(), range.to_string());
    let mut report = Report::new("classify", inputs);
    for n in levels {
        let c = classify_xn(n).map_err(|e| CmdError::Usage(e.to_string()))?;
        let evidence: Vec<Value> = c
            .evidence
            .iter()
            .map(|e| json!({"reason": e.reason, "anchor": e.anchor}))
            .collect();
        let mut row = Map::new();
        row.insert("n".into(), json!(n.to_string()));
        row.insert("hyperelliptic".into(), json!(c.hyperelliptic));
        row.insert("bielliptic".into(), json!(c.bielliptic));
        row.insert("evidence".into(), Value::Array(evidence));
        report.rows.push(Value::Object(row));
    }
    print_table(&report.rows, &["n", "hyperelliptic", "bielliptic"]);
    for row in &report.rows {
        let n = row["n"].as_str().unwrap_or("?");
        if let Some(items) = row["evidence"].as_array() {
            for item in items {
                println!(
                    "  X({n}) [{}] {}",
                    item["anchor"].as_str().unwrap_or(""),
                    item["reason"].as_str().unwrap_or("")
                );
            }
        }
    }
    emit(&report, json_path)
}

fn parse_model(name: &str, twist: Option<i64>) -> Result<CurveModel, CmdError> {
    if twist.is_some() && name != "wiman" {
        return Err(CmdError::Usage(
            "--twist only applies to the wiman model".to_string(),
        ));
    }
    match name {
        "klein" => Ok(CurveModel::KleinQuartic),
        "wiman" => {
            CurveModel::wiman_twist(twist.unwrap_or(1)).map_err(|e| CmdError::Usage(e.to_string()))
        }
        "x064" => Ok(CurveModel::X064Quartic),
        "x9" => Ok(CurveModel::X9Sextic),
        "eteq" => Ok(CurveModel::EllipticTEq),
        "e32" => Ok(CurveModel::EllipticConductor32),
        "e64" => Ok(CurveModel::EllipticConductor64),
        "e49" => Ok(CurveModel::X049Elliptic),
        other => Err(CmdError::Usage(format!("unknown model '{other}'"))),
    }
}

fn cmd_points(
    model_name: &str,
    twist: Option<i64>,
    prime: Option<u64>,
    height: Option<i64>,
    json_path: Option<&std::path::Path>,
) -> Result<(), CmdError> {
    let model = parse_model(model_name, twist)?;
    let mut inputs = BTreeMap::new();
    inputs.insert("model".to_string(), model.name());
    let mut report = Report::new("points", inputs);
    let mut weil_ok = true;
    match (prime, height) {
        (Some(p), None) => {
            report.inputs.insert("prime".to_string(), p.to_string());
            let points =
                enumerate_points(&model, p).map_err(|e| CmdError::Usage(e.to_string()))?;
            let count = points.len() as u64;
            let mut row = Map::new();
            row.insert("prime".into(), json!(p.to_string()));
            row.insert("count".into(), json!(count.to_string()));
            if let Some(genus) = model.declared_genus() {
                let (lo, hi) = weil_window(p, genus);
                let effective_lo = lo.max(0);
                weil_ok = (count as i128) >= effective_lo && (count as i128) <= hi;
                row.insert("genus".into(), json!(genus.to_string()));
                row.insert("weil_lo".into(), json!(effective_lo.to_string()));
                row.insert("weil_hi".into(), json!(hi.to_string()));
                row.insert("within_weil_window".into(), json!(weil_ok));
            } else {
                report.notes.push(
                    "the x9 plane model is singular; its projective count is reported \
                     without a genus assertion"
                        .to_string(),
                );
            }
            row.insert(
                "points".into(),
                Value::Array(points.iter().map(|pt| json!(pt.to_string())).collect()),
            );
            report.rows.push(Value::Object(row));
            let columns: &[&str] = if model.declared_genus().is_some() {
                &["prime", "count", "genus", "weil_lo", "weil_hi", "within_weil_window"]
            } else {
                &["prime", "count"]
            };
            print_table(&report.rows, columns);
            for pt in &points {
                println!("{pt}");
            }
        }
        (None, Some(h)) => {
            if h < 1 {
                return Err(CmdError::Usage("height bound must be at least 1".to_string()));
            }
            report.inputs.insert("height".to_string(), h.to_string());
            let points =
                rational_point_search(&model, h).map_err(|e| CmdError::Usage(e.to_string()))?;
            let mut row = Map::new();
            row.insert("height".into(), json!(h.to_string()));
            row.insert("count".into(), json!(points.len().to_string()));
            row.insert(
                "points".into(),
                Value::Array(points.iter().map(|pt| json!(pt.to_string())).collect()),
            );
            report.rows.push(Value::Object(row));
            print_table(&report.rows, &["height", "count"]);
            for pt in &points {
                println!("{pt}");
            }
        }
        _ => {
            return Err(CmdError::Usage(
                "pass exactly one of --prime or --height".to_string(),
            ));
        }
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    emit(&report, json_path)?;
    if !weil_ok {
        return Err(CmdError::MathAssertion(
            "point count violates the Weil window".to_string(),
        ));
    }
    Ok(())
}

fn cmd_twist_scan(
    dmax: i64,
    height: i64,
    json_path: Option<&std::path::Path>,
) -> Result<(), CmdError> {
    if dmax < 1 {
        return Err(CmdError::Usage("--dmax must be at least 1".to_string()));
    }
    if height < 1 {
        return Err(CmdError::Usage("--height must be at least 1".to_string()));
    }
    let mut inputs = BTreeMap::new();
    inputs.insert("dmax".to_string(), dmax.to_string());
    inputs.insert("height".to_string(), height.to_string());
    let mut report = Report::new("twist-scan", inputs);
    let twists = squarefree_twists(dmax);
    let experiment =
        twist_partition_experiment(&twists, height).map_err(|e| CmdError::Usage(e.to_string()))?;
    for row_data in &experiment.rows {
        let mut row = Map::new();
        row.insert("d".into(), json!(row_data.d.to_string()));
        row.insert(
            "points_found".into(),
            json!(row_data.points.len().to_string()),
        );
        row.insert(
            "points".into(),
            Value::Array(row_data.points.iter().map(|p| json!(p.to_string())).collect()),
        );
        row.insert(
            "images_on_x064".into(),
            Value::Array(row_data.images.iter().map(|p| json!(p.to_string())).collect()),
        );
        report.rows.push(Value::Object(row));
    }
    report.notes.push(format!(
        "x064 rational points at height {height}: {}",
        experiment
            .quartic_points
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    report.notes.push(format!(
        "images pairwise disjoint: {}",
        experiment.images_pairwise_disjoint
    ));
    report.notes.push(format!(
        "images cover the quartic's points: {}",
        experiment.images_cover_quartic
    ));
    print_table(&report.rows, &["d", "points_found"]);
    for note in &report.notes {
        println!("note: {note}");
    }
    emit(&report, json_path)?;
    if !experiment.images_pairwise_disjoint || !experiment.images_cover_quartic {
        return Err(CmdError::MathAssertion(
            "the twist images do not partition the quartic's rational points".to_string(),
        ));
    }
    Ok(())
}
