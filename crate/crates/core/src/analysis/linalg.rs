//! Exact rational linear algebra: ranks, congruence signature, inverses.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::rational::Rational;

/// Row echelon basis built one sparse row at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    /// pivot column -> row with a leading 1 at that column
    pivots: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols
    }

    /// Reduces `row` against the basis; returns true if it was independent.
    pub fn insert<'a>(&mut self, row: impl IntoIterator<Item = (usize, &'a Rational)>) -> bool {
        let mut r: BTreeMap<usize, Rational> =
            row.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
        loop {
            let Some((&lead, _)) = r.iter().next() else {
                return false;
            };
            let Some(p) = self.pivots.get(&lead) else {
                break;
            };
            let f = r[&lead].clone();
            for (k, c) in p {
                let v = r.entry(*k).or_insert_with(Rational::zero);
                *v -= c * &f;
                if v.is_zero() {
                    r.remove(k);
                }
            }
        }
        let (&lead, lc) = r.iter().next().expect("nonzero row");
        let inv = lc.recip();
        for v in r.values_mut() {
            *v *= &inv;
        }
        self.pivots.insert(lead, r);
        true
    }
}

pub fn rank(m: &DenseMatrix) -> usize {
    let mut e = Echelon::new(m.ncols());
    for i in 0..m.nrows() {
        e.insert(m.row(i).iter().enumerate());
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// `(n_plus, n_minus, n_zero)` by symmetric Gaussian congruence.
pub fn signature(s: &DenseMatrix) -> Result<(usize, usize, usize)> {
    let n = s.nrows();
    if s.ncols() != n || !s.is_symmetric() {
        return Err(Error::Table("signature needs a symmetric square matrix".into()));
    }
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| s.row(i).to_vec()).collect();
    let (mut plus, mut minus) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish. If an off-diagonal
                // entry a_kl survives, e_k += e_l makes a_kk = 2 a_kl nonzero.
                let found = active
                    .iter()
                    .flat_map(|&k| active.iter().map(move |&l| (k, l)))
                    .find(|&(k, l)| k != l && !a[k][l].is_zero());
                let Some((k, l)) = found else {
                    break;
                };
                let lrow = a[l].clone();
                for (x, v) in a[k].iter_mut().zip(&lrow) {
                    *x += v;
                }
                for row in a.iter_mut() {
                    let v = row[l].clone();
                    row[k] += v;
                }
                k
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        active.retain(|&i| i != p);
        let prow = a[p].clone();
        for &i in &active {
            if prow[i].is_zero() {
                continue;
            }
            let f = &prow[i] / &d;
            for &j in &active {
                if !prow[j].is_zero() {
                    let t = &f * &prow[j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Ok((plus, minus, n - plus - minus))
}

/// Gauss-Jordan inverse; errors on singular input.
pub fn inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::Dimension { expected: n, found: m.ncols() });
    }
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or_else(|| Error::Table("matrix is singular".into()))?;
        a.swap(col, p);
        inv.swap(col, p);
        let f = a[col][col].recip();
        for v in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *v *= &f;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let (t1, t2) = (&a[col][c] * &f, &inv[col][c] * &f);
                a[r][c] -= t1;
                inv[r][c] -= t2;
            }
        }
    }
    Ok(DenseMatrix::from_fn(n, n, |i, j| inv[i][j].clone()))
}
