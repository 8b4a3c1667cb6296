//! Linear maps on coordinate space and automorphism checks against a table.

use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::linalg::rank;
use super::report::{Failure, Mode, VerificationReport};
use super::table::StructureTable;
use crate::algebra::Algebra;
use crate::e8::E8Element;
use crate::f4::F4Element;
use crate::matrix::DenseMatrix;
use crate::octoct::So16Element;
use crate::rational::Rational;

/// Sparse matrix stored by columns: `columns[j]` is the image of `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub columns: Vec<Vec<(usize, Rational)>>,
}

impl LinearMap {
    pub fn from_fn(dim: usize, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Self {
        let columns = (0..dim)
            .map(|j| {
                let mut e = vec![Rational::zero(); dim];
                e[j] = Rational::one();
                f(&e).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Self { columns }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn apply_sparse(&self, v: &[(usize, Rational)]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (j, vj) in v {
            for (i, c) in &self.columns[*j] {
                out[*i] += c * vj;
            }
        }
        out
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.dim(), self.dim());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }

    /// Dimension of the `λ`-eigenspace, exactly.
    pub fn eigenspace_dim(&self, lambda: &Rational) -> usize {
        let n = self.dim();
        let mut m = self.to_dense();
        for i in 0..n {
            m[(i, i)] -= lambda;
        }
        n - rank(&m)
    }
}

/// The maps of each algebra that should be bracket automorphisms.
pub fn known_automorphisms(algebra: Algebra) -> Vec<(&'static str, LinearMap)> {
    let n = algebra.dim();
    let e8 = |f: fn(&E8Element) -> E8Element| {
        LinearMap::from_fn(n, move |c| f(&E8Element::from_coords(c).expect("basis vector")).coords())
    };
    match algebra {
        Algebra::F4 => vec![(
            "tau",
            LinearMap::from_fn(n, |c| F4Element::from_coords(c).expect("basis vector").tau().coords()),
        )],
        Algebra::E8 => vec![("tau", e8(E8Element::tau)), ("cartan_involution", e8(E8Element::cartan_involution))],
        Algebra::E8Split => vec![("cartan_involution", e8(E8Element::cartan_involution))],
        Algebra::So16 => vec![(
            "block_sign",
            LinearMap::from_fn(n, |c| {
                let mut x = So16Element::from_coords(c).expect("basis vector");
                x.x = -&x.x;
                x.coords()
            }),
        )],
    }
}

/// `φ[b_i, b_j] = [φ b_i, φ b_j]` for all `i < j`.
pub fn check_automorphism(table: &StructureTable, name: &str, map: &LinearMap) -> VerificationReport {
    let start = Instant::now();
    let n = table.dim();
    let check = format!("automorphism:{name}");
    let parts: Vec<VerificationReport> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut part = VerificationReport::new(&check, table.name(), Mode::Exhaustive);
            for j in i + 1..n {
                let lhs = map.apply_sparse(table.basis_bracket(i, j));
                let rhs = table.bracket_sparse(&map.columns[i], &map.columns[j]);
                part.tested += 1;
                if lhs != rhs {
                    let residual =
                        lhs.iter().zip(&rhs).map(|(a, b)| a - b).enumerate().filter(|(_, d)| !d.is_zero()).collect();
                    part.record(Failure {
                        indices: vec![i, j],
                        residual,
                        message: format!("{name} does not preserve the bracket"),
                    });
                }
            }
            part
        })
        .collect();
    let mut report = VerificationReport::new(&check, table.name(), Mode::Exhaustive);
    for part in parts {
        report.merge(part);
    }
    report.elapsed = start.elapsed();
    report
}
