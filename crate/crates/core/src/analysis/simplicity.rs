//! Simplicity certificate: trivial center, perfect, nondegenerate Killing form.

use std::time::Instant;

use serde_json::json;

use super::killing::killing_form;
use super::linalg::{signature, Echelon};
use super::report::{Failure, Mode, VerificationReport};
use super::table::StructureTable;
use crate::error::Result;
use crate::matrix::DenseMatrix;

/// Dimension of `{z : [z, b_j] = 0 for all j}`.
pub fn center_dim(table: &StructureTable) -> usize {
    let n = table.dim();
    let mut e = Echelon::new(n);
    for j in 0..n {
        // row k of ad-stack block j: coefficient of b_k in [b_i, b_j], over i
        let mut rows: Vec<Vec<(usize, &_)>> = vec![Vec::new(); n];
        for i in 0..n {
            for (k, c) in table.basis_bracket(i, j) {
                rows[*k].push((i, c));
            }
        }
        for row in rows.into_iter().filter(|r| !r.is_empty()) {
            e.insert(row);
            if e.is_full() {
                return 0;
            }
        }
    }
    n - e.rank()
}

/// Dimension of `[g, g]`.
pub fn derived_dim(table: &StructureTable) -> usize {
    let n = table.dim();
    let mut e = Echelon::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let row = table.basis_bracket(i, j);
            if !row.is_empty() {
                e.insert(row.iter().map(|(k, c)| (*k, c)));
                if e.is_full() {
                    return n;
                }
            }
        }
    }
    e.rank()
}

/// Certifies simplicity; `killing` may be passed in if already computed.
pub fn simplicity_certificate(table: &StructureTable, killing: Option<&DenseMatrix>) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = table.dim();
    let owned;
    let b = match killing {
        Some(b) => b,
        None => {
            owned = killing_form(table)?;
            &owned
        }
    };
    let center = center_dim(table);
    let derived = derived_dim(table);
    let sig = signature(b)?;
    let mut report = VerificationReport::new("simplicity", table.name(), Mode::Exhaustive)
        .detail("center_dim", center)
        .detail("derived_dim", derived)
        .detail("killing_signature", json!([sig.0, sig.1, sig.2]));
    report.tested = 3;
    let mut failures = Vec::new();
    if center != 0 {
        failures.push(report_failure(format!("center has dimension {center}")));
    }
    if derived != n {
        failures.push(report_failure(format!("derived algebra has dimension {derived} < {n}")));
    }
    if sig.2 != 0 {
        failures.push(report_failure(format!("Killing form has a {}-dimensional radical", sig.2)));
    }
    for f in failures {
        report.record(f);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn report_failure(message: String) -> Failure {
    Failure { indices: vec![], residual: vec![], message }
}
