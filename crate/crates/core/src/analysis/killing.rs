//! Killing form `B(x, y) = tr(ad_x ad_y)` and comparison with other forms.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::scaled::IntTable;
use super::table::StructureTable;
use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::rational::Rational;

/// `B_ij = Σ_{k,m} c_ikm c_jmk`, exactly.
pub fn killing_form(table: &StructureTable) -> Result<DenseMatrix> {
    let int = IntTable::new(table)?;
    let n = int.dim();
    // by_target[m * n + k] lists (j, D·c_jmk)
    let mut by_target: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n * n];
    for j in 0..n {
        for m in 0..n {
            for &(k, c) in int.row(j, m) {
                by_target[m * n + k as usize].push((j, c));
            }
        }
    }
    let rows: Vec<Vec<i128>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0i128; n];
            for k in 0..n {
                for &(m, c1) in int.row(i, k) {
                    for &(j, c2) in &by_target[m as usize * n + k] {
                        row[j] += c1 as i128 * c2 as i128;
                    }
                }
            }
            row
        })
        .collect();
    let d2 = BigInt::from(int.denom()).pow(2);
    Ok(DenseMatrix::from_fn(n, n, |i, j| Rational::new(BigInt::from(rows[i][j]), d2.clone())))
}

/// The constant `c` with `b = c·g` entrywise, if one exists and `g ≠ 0`.
pub fn proportionality_constant(b: &DenseMatrix, g: &DenseMatrix) -> Option<Rational> {
    if b.nrows() != g.nrows() || b.ncols() != g.ncols() {
        return None;
    }
    let (pos, g0) = g.data().iter().enumerate().find(|(_, v)| !v.is_zero())?;
    let c = &b.data()[pos] / g0;
    b.data().iter().zip(g.data()).all(|(bv, gv)| *bv == &c * gv).then_some(c)
}
