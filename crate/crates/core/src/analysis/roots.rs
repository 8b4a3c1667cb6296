//! Cartan subalgebra and root system of the compact e8 table.
//!
//! Everything except the joint diagonalization is exact. The eigenvectors
//! come from floating point, but every reported root is re-checked against
//! the exact ad-matrices after rounding its coordinates to halves.

use nalgebra::{Cholesky, Complex, DMatrix, DVector, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::killing::killing_form;
use super::linalg::{inverse, Echelon};
use super::table::StructureTable;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::rational::{self, Rational};
use crate::so8::{wedge_index, SO8_DIM};

pub const RANK: usize = 8;
pub const CLUSTER_TOLERANCE: f64 = 1e-9;
pub const RESIDUAL_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct Root {
    /// `ad(h_k) x = i·weight[k]·x` on the complexified root vector.
    pub weight: Vec<Rational>,
    pub approx: Vec<f64>,
    /// Worst relative residual of the eigen-equation over the 8 Cartan elements.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan: Vec<usize>,
    pub cartan_labels: Vec<String>,
    pub centralizer_dim: usize,
    pub roots: Vec<Root>,
    /// `(α, β) = αᵀ P β`, with `P = -(B|_h)^{-1}`.
    pub pairing: DenseMatrix,
    pub squared_lengths: Vec<Rational>,
}

/// `e0∧e1, e2∧e3, e4∧e5, e6∧e7` in each so(8) summand.
pub fn cartan_indices() -> Vec<usize> {
    let first: Vec<usize> = (0..4).map(|k| wedge_index(2 * k, 2 * k + 1)).collect();
    first.iter().copied().chain(first.iter().map(|i| i + SO8_DIM)).collect()
}

/// Exact dimension of `{x : [h, x] = 0 for all h in hs}`.
pub fn centralizer_dim(table: &StructureTable, hs: &[usize]) -> usize {
    let n = table.dim();
    let mut e = Echelon::new(n);
    for &h in hs {
        let mut rows: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); n];
        for i in 0..n {
            for (k, c) in table.basis_bracket(h, i) {
                rows[*k].push((i, c));
            }
        }
        for row in rows.into_iter().filter(|r| !r.is_empty()) {
            e.insert(row);
        }
    }
    n - e.rank()
}

fn ad_f64(table: &StructureTable, h: usize) -> DMatrix<f64> {
    let n = table.dim();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for (k, c) in table.basis_bracket(h, i) {
            m[(*k, i)] = rational::to_f64(c);
        }
    }
    m
}

pub fn cartan_and_roots(table: &StructureTable, killing: Option<&DenseMatrix>) -> Result<RootDatum> {
    let n = table.dim();
    if n != 248 {
        return Err(Error::Roots(format!("expected a 248-dimensional table, found {n}")));
    }
    let cartan = cartan_indices();
    for (a, &h) in cartan.iter().enumerate() {
        for &g in &cartan[a + 1..] {
            if !table.basis_bracket(h, g).is_empty() {
                return Err(Error::Roots(format!("Cartan candidates {h} and {g} do not commute")));
            }
        }
    }
    let centralizer = centralizer_dim(table, &cartan);
    if centralizer != RANK {
        return Err(Error::Roots(format!("centralizer has dimension {centralizer}, expected {RANK}")));
    }
    let owned;
    let b = match killing {
        Some(b) => b,
        None => {
            owned = killing_form(table)?;
            &owned
        }
    };

    // Orthonormalize for -B, where each ad(h) becomes skew-symmetric.
    let s = DMatrix::from_fn(n, n, |i, j| -rational::to_f64(&b[(i, j)]));
    let l = Cholesky::new(s)
        .ok_or_else(|| Error::Roots("Killing form is not negative definite".into()))?
        .l();
    let lt = l.transpose();
    let lt_inv = lt.clone().try_inverse().ok_or_else(|| Error::Roots("singular Cholesky factor".into()))?;
    let ads: Vec<DMatrix<f64>> = cartan.iter().map(|&h| ad_f64(table, h)).collect();
    let skews: Vec<DMatrix<f64>> = ads.iter().map(|a| &lt * a * &lt_inv).collect();

    // Generic element: irrational, independent coefficients separate all weights.
    let primes = [2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0];
    let mut h = DMatrix::<f64>::zeros(n, n);
    for (m, p) in skews.iter().zip(primes) {
        h += m * p.sqrt();
    }
    let herm = h.map(|x| Complex::new(0.0, x));
    let eig = SymmetricEigen::new(herm);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let zero_count = order.iter().filter(|&&r| eig.eigenvalues[r].abs() < CLUSTER_TOLERANCE).count();
    if zero_count != RANK {
        return Err(Error::Roots(format!("{zero_count} zero weights, expected {RANK}")));
    }
    for w in order.windows(2) {
        let (x, y) = (eig.eigenvalues[w[0]], eig.eigenvalues[w[1]]);
        if x.abs() >= CLUSTER_TOLERANCE && y.abs() >= CLUSTER_TOLERANCE && y - x < CLUSTER_TOLERANCE {
            return Err(Error::Roots(format!("weights {x} and {y} are not separated")));
        }
    }

    let mut roots = Vec::with_capacity(n - RANK);
    for &r in order.iter().filter(|&&r| eig.eigenvalues[r].abs() >= CLUSTER_TOLERANCE) {
        let v: DVector<Complex<f64>> = eig.eigenvectors.column(r).into_owned();
        let norm2 = v.norm_squared();
        let approx: Vec<f64> = skews
            .iter()
            .map(|m| (v.adjoint() * m.map(|x| Complex::new(x, 0.0)) * &v)[(0, 0)].im / norm2)
            .collect();
        let halves: Vec<i64> = approx.iter().map(|a| (2.0 * a).round() as i64).collect();
        let w = lt_inv.map(|x| Complex::new(x, 0.0)) * &v;
        let wn = w.norm();
        let residual = ads
            .iter()
            .zip(&halves)
            .map(|(a, hv)| {
                let lhs = a.map(|x| Complex::new(x, 0.0)) * &w;
                let rhs = &w * Complex::new(0.0, *hv as f64 / 2.0);
                (lhs - rhs).norm() / wn
            })
            .fold(0.0, f64::max);
        if residual >= RESIDUAL_TOLERANCE {
            return Err(Error::Roots(format!("rounding residual {residual:e} exceeds {RESIDUAL_TOLERANCE:e}")));
        }
        roots.push(Root {
            weight: halves.iter().map(|x| Rational::new(BigInt::from(*x), BigInt::from(2))).collect(),
            approx,
            residual,
        });
    }
    roots.sort_by(|a, b| a.weight.cmp(&b.weight));
    if roots.len() != n - RANK {
        return Err(Error::Roots(format!("found {} roots, expected {}", roots.len(), n - RANK)));
    }

    let bh = DenseMatrix::from_fn(RANK, RANK, |i, j| b[(cartan[i], cartan[j])].clone());
    let pairing = inverse(&bh)?.scale(&rational::int(-1));
    let squared_lengths = roots.iter().map(|r| pair(&pairing, &r.weight, &r.weight)).collect();
    let labels = table.labels();
    Ok(RootDatum {
        cartan_labels: cartan.iter().map(|&i| labels[i].clone()).collect(),
        cartan,
        centralizer_dim: centralizer,
        roots,
        pairing,
        squared_lengths,
    })
}

pub fn pair(p: &DenseMatrix, a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            if !ai.is_zero() && !bj.is_zero() {
                s += ai * bj * &p[(i, j)];
            }
        }
    }
    s
}

impl RootDatum {
    pub fn weights(&self) -> Vec<Vec<Rational>> {
        self.roots.iter().map(|r| r.weight.clone()).collect()
    }

    pub fn closed_under_negation(&self) -> bool {
        let set: std::collections::BTreeSet<Vec<Rational>> = self.weights().into_iter().collect();
        set.len() == self.roots.len()
            && self.roots.iter().all(|r| set.contains(&r.weight.iter().map(|x| -x).collect::<Vec<_>>()))
    }

    pub fn equal_lengths(&self) -> bool {
        self.squared_lengths.windows(2).all(|w| w[0] == w[1])
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// For each root α, the multiset of `2(α,β)/(α,α)` over all roots β,
    /// as counts keyed by value.
    pub fn pairing_census(&self) -> Vec<std::collections::BTreeMap<Rational, usize>> {
        let w = self.weights();
        w.iter()
            .zip(&self.squared_lengths)
            .map(|(a, aa)| {
                let mut m = std::collections::BTreeMap::new();
                for b in &w {
                    let r = pair(&self.pairing, a, b) * rational::int(2) / aa;
                    *m.entry(r).or_insert(0) += 1;
                }
                m
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let q = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>();
        json!({
            "cartan": self
                .cartan
                .iter()
                .zip(&self.cartan_labels)
                .map(|(i, l)| json!({ "index": i, "label": l }))
                .collect::<Vec<_>>(),
            "centralizer_dim": self.centralizer_dim,
            "root_count": self.roots.len(),
            "pairing": (0..RANK).map(|i| q(self.pairing.row(i))).collect::<Vec<_>>(),
            "squared_length": self.squared_lengths.first().map(rational::format),
            "max_residual": self.max_residual(),
            "roots": self
                .roots
                .iter()
                .map(|r| json!({ "weight": q(&r.weight), "approx": r.approx, "residual": r.residual }))
                .collect::<Vec<_>>(),
        })
    }
}
