use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use e8_core::algebra::Algebra;
use e8_core::analysis::linalg::signature;
use e8_core::analysis::{
    cartan_and_roots, check_automorphism, invariance_exhaustive, invariance_sampled, jacobi_exhaustive,
    jacobi_sampled, killing_form, known_automorphisms, simplicity_certificate, StructureTable, VerificationReport,
};
use e8_core::codec::{element_from_json, element_to_json};
use e8_core::matrix::DenseMatrix;
use e8_core::rational::{self, int};
use serde_json::{json, Value};

use crate::input::read_json_arg;
use crate::{cache, Check, CliError, DataFormat, ExportKind, ReportFormat, VerifyMode};

type CmdResult = Result<bool, CliError>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(std::io::Error::new(e.kind(), format!("{}: {e}", p.display())))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn format_signature((p, m, z): (usize, usize, usize)) -> String {
    format!("({p},{m},{z})")
}

pub fn info(algebra: Algebra) -> CmdResult {
    let table = cache::load_table(algebra);
    let b = killing_form(&table)?;
    let sig = signature(&b)?;
    let mut s = format!("{}: dim {}, signature {}\n", algebra, algebra.dim(), format_signature(sig));
    let _ = writeln!(s, "basis layout: {}", algebra.layout());
    let _ = writeln!(s, "nonzero structure constants (i<j): {}", table.nonzero_count());
    emit(&s, None)?;
    Ok(true)
}

pub fn bracket(algebra: Algebra, left: &str, right: &str) -> CmdResult {
    let (x, encoding) = element_from_json(algebra, &read_json_arg(left)?)?;
    let (y, _) = element_from_json(algebra, &read_json_arg(right)?)?;
    let z = algebra.bracket_coords(&x, &y)?;
    emit(&pretty(&element_to_json(algebra, &z, encoding)?), None)?;
    Ok(true)
}

pub struct VerifyOptions {
    pub checks: Vec<Check>,
    pub mode: VerifyMode,
    pub samples: usize,
    pub seed: u64,
    pub table: Option<PathBuf>,
    pub format: ReportFormat,
}

fn resolve_checks(checks: &[Check]) -> Vec<Check> {
    if checks.is_empty() || checks.contains(&Check::All) {
        return vec![Check::Jacobi, Check::Invariance, Check::Automorphisms, Check::Simplicity];
    }
    let mut out: Vec<Check> = Vec::new();
    for c in checks {
        if !out.contains(c) {
            out.push(*c);
        }
    }
    out
}

fn progress_printer(label: &'static str) -> impl Fn(usize, usize) + Sync {
    move |done, total| {
        if done == total || done * 10 / total != (done - 1) * 10 / total {
            eprintln!("{label}: {}%", done * 100 / total);
        }
    }
}

/// The invariant form checked for each algebra: the explicit scalar product
/// for compact e8, the Killing form of the table otherwise.
fn invariant_form(algebra: Algebra, table: &StructureTable) -> Result<(&'static str, DenseMatrix), CliError> {
    Ok(match algebra {
        Algebra::E8 => ("scalar_product", algebra.scalar_product_matrix().expect("e8 has a scalar product")),
        _ => ("killing", killing_form(table)?),
    })
}

pub fn verify(algebra: Algebra, opts: &VerifyOptions) -> CmdResult {
    let table = match &opts.table {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let t = StructureTable::from_json(&text)?;
            if t.dim() != algebra.dim() {
                return Err(CliError::Input(format!(
                    "table has dim {} but {algebra} has dim {}",
                    t.dim(),
                    algebra.dim()
                )));
            }
            t
        }
        None => cache::load_table(algebra),
    };
    let exhaustive = opts.mode == VerifyMode::Exhaustive;
    let mut reports: Vec<VerificationReport> = Vec::new();
    for check in resolve_checks(&opts.checks) {
        let start = Instant::now();
        match check {
            Check::Jacobi => reports.push(if exhaustive {
                jacobi_exhaustive(&table, Some(&progress_printer("jacobi")))?
            } else {
                jacobi_sampled(&table, opts.samples, opts.seed)?
            }),
            Check::Invariance => {
                let (name, form) = invariant_form(algebra, &table)?;
                let r = if exhaustive {
                    invariance_exhaustive(&table, &form, Some(&progress_printer("invariance")))?
                } else {
                    invariance_sampled(&table, &form, opts.samples, opts.seed)?
                };
                reports.push(r.detail("form", name));
            }
            Check::Automorphisms => {
                for (name, map) in known_automorphisms(algebra) {
                    let mut r = check_automorphism(&table, name, &map);
                    if name != "tau" {
                        r = r
                            .detail("eigenspace_plus", map.eigenspace_dim(&int(1)))
                            .detail("eigenspace_minus", map.eigenspace_dim(&int(-1)));
                    }
                    reports.push(r);
                }
            }
            Check::Simplicity => reports.push(simplicity_certificate(&table, None)?),
            Check::All => unreachable!("expanded by resolve_checks"),
        }
        eprintln!("{check:?} finished in {:.2?}", start.elapsed());
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let text = match opts.format {
        ReportFormat::Json => pretty(&json!({
            "algebra": algebra.name(),
            "passed": passed,
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        })),
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{}", r.summary());
                if let Some(f) = r.failures.first() {
                    let _ = writeln!(s, "  first counterexample: {f}");
                }
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(passed)
}

fn matrix_rows(m: &DenseMatrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| m.row(i).iter().map(rational::format).collect()).collect()
}

pub fn export(what: ExportKind, algebra: Algebra, format: DataFormat, out: Option<&Path>) -> CmdResult {
    let text = match what {
        ExportKind::Basis => {
            let labels = algebra.basis_labels();
            match format {
                DataFormat::Json => pretty(&json!({
                    "algebra": algebra.name(),
                    "dim": algebra.dim(),
                    "layout": algebra.layout(),
                    "basis": labels,
                })),
                DataFormat::Csv => {
                    let mut s = String::from("index,label\n");
                    for (i, l) in labels.iter().enumerate() {
                        let _ = writeln!(s, "{i},{l}");
                    }
                    s
                }
            }
        }
        ExportKind::StructureConstants => {
            let table = cache::load_table(algebra);
            match format {
                DataFormat::Json => table.to_json(),
                DataFormat::Csv => table.to_csv(),
            }
        }
        ExportKind::Killing => {
            let b = killing_form(&cache::load_table(algebra))?;
            let rows = matrix_rows(&b);
            match format {
                DataFormat::Json => pretty(&json!({ "algebra": algebra.name(), "dim": b.nrows(), "matrix": rows })),
                DataFormat::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
            }
        }
        ExportKind::Roots => {
            if algebra != Algebra::E8 {
                return Err(CliError::Input(format!("root data is only extracted for e8, not {algebra}")));
            }
            let datum = cartan_and_roots(&cache::load_table(algebra), None)?;
            match format {
                DataFormat::Json => {
                    let mut v = datum.to_json();
                    v["algebra"] = json!(algebra.name());
                    pretty(&v)
                }
                DataFormat::Csv => {
                    let mut s = (0..8).map(|k| format!("h{k}")).collect::<Vec<_>>().join(",");
                    s.push_str(",residual\n");
                    for r in &datum.roots {
                        let w: Vec<String> = r.weight.iter().map(rational::format).collect();
                        let _ = writeln!(s, "{},{:e}", w.join(","), r.residual);
                    }
                    s
                }
            }
        }
    };
    emit(&text, out)?;
    Ok(true)
}
