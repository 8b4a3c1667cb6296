//! Integer image of a structure table: every `c_ijk` written as `n_ijk / D`
//! over one common denominator, so sweeps can accumulate in `i128`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::table::StructureTable;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Numerators and the common denominator stay below this bound, which keeps
/// every triple-product sum the sweeps form far inside `i128`.
const BOUND: i64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct IntTable {
    dim: usize,
    denom: i64,
    rows: Vec<Vec<(u32, i64)>>,
    /// `(i, j, k, n_ijk)` for `i < j`.
    entries: Vec<(u32, u32, u32, i64)>,
}

impl IntTable {
    pub fn new(table: &StructureTable) -> Result<Self> {
        let dim = table.dim();
        let mut denom = BigInt::one();
        for e in table.entries() {
            denom = denom.lcm(e.c.denom());
        }
        let denom = denom
            .to_i64()
            .filter(|d| *d <= BOUND)
            .ok_or_else(|| Error::Table("common denominator too large for the integer engine".into()))?;
        let scale = |c: &Rational| -> Result<i64> {
            (c.numer() * (denom / c.denom())).to_i64().filter(|n| n.abs() <= BOUND).ok_or_else(|| {
                Error::Table(format!("structure constant {c} too large for the integer engine"))
            })
        };
        let mut rows = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let row = table
                    .basis_bracket(i, j)
                    .iter()
                    .map(|(k, c)| Ok((*k as u32, scale(c)?)))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
        }
        let entries = table
            .entries()
            .iter()
            .map(|e| Ok((e.i as u32, e.j as u32, e.k as u32, scale(&e.c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim, denom, rows, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// `D · [b_i, b_j]`, sparse.
    pub fn row(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.rows[i * self.dim + j]
    }

    /// `D · n_ijk`-weighted accumulation of `[b_i, Σ_m v_m b_m]` into `out`.
    pub fn add_bracket_with_basis(&self, i: usize, v: &[(u32, i64)], weight: i128, out: &mut [i128]) {
        for &(m, vm) in v {
            let w = weight * vm as i128;
            for &(k, c) in self.row(i, m as usize) {
                out[k as usize] += w * c as i128;
            }
        }
    }

    /// `D · [x, y]` for dense integer vectors; `None` on overflow.
    pub fn bracket(&self, x: &[i128], y: &[i128]) -> Option<Vec<i128>> {
        let mut out = vec![0i128; self.dim];
        for &(i, j, k, c) in &self.entries {
            let (i, j) = (i as usize, j as usize);
            let w = x[i].checked_mul(y[j])?.checked_sub(x[j].checked_mul(y[i])?)?;
            if w != 0 {
                let t = w.checked_mul(c as i128)?;
                out[k as usize] = out[k as usize].checked_add(t)?;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::table::StructureEntry;
    use crate::rational::{int, ratio};

    #[test]
    fn common_denominator() {
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let entries = vec![
            StructureEntry { i: 0, j: 1, k: 2, c: ratio(1, 2) },
            StructureEntry { i: 0, j: 2, k: 1, c: ratio(-3, 4) },
            StructureEntry { i: 1, j: 2, k: 0, c: int(2) },
        ];
        let t = StructureTable::from_entries("t", labels, entries).unwrap();
        let s = IntTable::new(&t).unwrap();
        assert_eq!(s.denom(), 4);
        assert_eq!(s.row(0, 1), &[(2, 2)]);
        assert_eq!(s.row(2, 0), &[(1, 3)]);
        assert_eq!(s.row(2, 1), &[(0, -8)]);
        assert_eq!(s.bracket(&[1, 0, 0], &[0, 1, 0]).unwrap(), vec![0, 0, 2]);
    }

    #[test]
    fn rejects_huge_constants() {
        let labels = vec!["a".into(), "b".into()];
        let entries = vec![StructureEntry { i: 0, j: 1, k: 0, c: ratio(1, 1 << 30) }];
        let t = StructureTable::from_entries("t", labels, entries).unwrap();
        assert!(IntTable::new(&t).is_err());
    }
}
