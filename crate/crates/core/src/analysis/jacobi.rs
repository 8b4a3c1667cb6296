//! Jacobi identity and invariance of bilinear forms, checked over a table.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{Failure, Mode, VerificationReport};
use super::scaled::IntTable;
use super::table::StructureTable;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::rational::Rational;

/// Called with `(finished, total)` as outer sweep indices complete.
pub type Progress<'a> = &'a (dyn Fn(usize, usize) + Sync);

/// Sampled coordinates are `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 4`; scaling by
/// this lcm makes them integers without changing which identities vanish.
const SAMPLE_SCALE: i64 = 12;

fn residual(buf: &[i128], denom: &BigInt) -> Vec<(usize, Rational)> {
    buf.iter()
        .enumerate()
        .filter(|(_, v)| **v != 0)
        .map(|(k, v)| (k, Rational::new(BigInt::from(*v), denom.clone())))
        .collect()
}

/// Every unordered triple `i < j < k` of distinct basis elements. Triples
/// with a repeated element vanish by skew-symmetry, which the table encodes.
pub fn jacobi_exhaustive(table: &StructureTable, progress: Option<Progress>) -> Result<VerificationReport> {
    let start = Instant::now();
    let int = IntTable::new(table)?;
    let n = int.dim();
    let d2 = BigInt::from(int.denom()).pow(2);
    let done = AtomicUsize::new(0);
    let parts: Vec<VerificationReport> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut part = VerificationReport::new("jacobi", table.name(), Mode::Exhaustive);
            let mut buf = vec![0i128; n];
            for j in i + 1..n {
                for k in j + 1..n {
                    int.add_bracket_with_basis(i, int.row(j, k), 1, &mut buf);
                    int.add_bracket_with_basis(j, int.row(k, i), 1, &mut buf);
                    int.add_bracket_with_basis(k, int.row(i, j), 1, &mut buf);
                    part.tested += 1;
                    if buf.iter().any(|v| *v != 0) {
                        part.record(Failure {
                            indices: vec![i, j, k],
                            residual: residual(&buf, &d2),
                            message: "Jacobi sum is nonzero".into(),
                        });
                        buf.iter_mut().for_each(|v| *v = 0);
                    }
                }
            }
            if let Some(p) = progress {
                p(done.fetch_add(1, Ordering::Relaxed) + 1, n);
            }
            part
        })
        .collect();
    let mut report = VerificationReport::new("jacobi", table.name(), Mode::Exhaustive);
    for part in parts {
        report.merge(part);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Seeded random vector with coordinates `p/q`, pre-multiplied by 12.
pub fn random_scaled_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<i128> {
    (0..dim)
        .map(|_| {
            let p: i64 = rng.random_range(-4..=4);
            let q: i64 = rng.random_range(1..=4);
            (p * (SAMPLE_SCALE / q)) as i128
        })
        .collect()
}

/// The same vectors as exact rationals.
pub fn unscale(v: &[i128]) -> Vec<Rational> {
    v.iter().map(|x| Rational::new(BigInt::from(*x), BigInt::from(SAMPLE_SCALE))).collect()
}

fn overflow() -> Error {
    Error::Table("integer overflow in sampled check".into())
}

/// `samples` seeded random triples of rational vectors.
pub fn jacobi_sampled(table: &StructureTable, samples: usize, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let int = IntTable::new(table)?;
    let n = int.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Vec<i128>; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| random_scaled_vector(&mut rng, n)))
        .collect();
    let denom = BigInt::from(int.denom()).pow(2) * BigInt::from(SAMPLE_SCALE).pow(3);
    let results: Vec<Option<Vec<i128>>> = triples
        .par_iter()
        .map(|[x, y, z]| {
            let a = int.bracket(x, &int.bracket(y, z)?)?;
            let b = int.bracket(y, &int.bracket(z, x)?)?;
            let c = int.bracket(z, &int.bracket(x, y)?)?;
            (0..n).map(|k| a[k].checked_add(b[k])?.checked_add(c[k])).collect()
        })
        .collect();
    let mut report = VerificationReport::new("jacobi", table.name(), Mode::Sampled { samples, seed });
    for (s, sum) in results.into_iter().enumerate() {
        let sum = sum.ok_or_else(overflow)?;
        report.tested += 1;
        if sum.iter().any(|v| *v != 0) {
            report.record(Failure {
                indices: vec![s],
                residual: residual(&sum, &denom),
                message: "Jacobi sum is nonzero".into(),
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Symmetric form scaled to integers: `G = g / E`.
struct IntGram {
    g: Vec<i128>,
    denom: BigInt,
}

fn scale_gram(gram: &DenseMatrix) -> Result<IntGram> {
    let mut denom = BigInt::from(1);
    for v in gram.data() {
        denom = denom.lcm(v.denom());
    }
    let g = gram
        .data()
        .iter()
        .map(|v| (v.numer() * (&denom / v.denom())).to_i64().filter(|x| x.abs() <= 1 << 40).map(i128::from))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Table("bilinear form entries too large for the integer engine".into()))?;
    Ok(IntGram { g, denom })
}

fn check_form(table: &StructureTable, gram: &DenseMatrix) -> Result<()> {
    let n = table.dim();
    if gram.nrows() != n || gram.ncols() != n {
        return Err(Error::Dimension { expected: n, found: gram.nrows() });
    }
    if !gram.is_symmetric() {
        return Err(Error::Table("bilinear form is not symmetric".into()));
    }
    Ok(())
}

/// `G([b_a, b_b], b_c) + G(b_b, [b_a, b_c]) = 0` for every ordered triple.
pub fn invariance_exhaustive(
    table: &StructureTable,
    gram: &DenseMatrix,
    progress: Option<Progress>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    check_form(table, gram)?;
    let int = IntTable::new(table)?;
    let g = scale_gram(gram)?;
    let n = int.dim();
    let denom = BigInt::from(int.denom()) * &g.denom;
    let done = AtomicUsize::new(0);
    let parts: Vec<VerificationReport> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut part = VerificationReport::new("invariance", table.name(), Mode::Exhaustive);
            // t[b][c] = G([b_a, b_b], b_c)
            let mut t = vec![0i128; n * n];
            for b in 0..n {
                for &(k, c) in int.row(a, b) {
                    let grow = &g.g[k as usize * n..(k as usize + 1) * n];
                    for (tc, gk) in t[b * n..(b + 1) * n].iter_mut().zip(grow) {
                        *tc += c as i128 * gk;
                    }
                }
            }
            for b in 0..n {
                for c in 0..n {
                    part.tested += 1;
                    let v = t[b * n + c] + t[c * n + b];
                    if v != 0 {
                        part.record(Failure {
                            indices: vec![a, b, c],
                            residual: vec![(0, Rational::new(BigInt::from(v), denom.clone()))],
                            message: "G([x,y],z) + G(y,[x,z]) is nonzero".into(),
                        });
                    }
                }
            }
            if let Some(p) = progress {
                p(done.fetch_add(1, Ordering::Relaxed) + 1, n);
            }
            part
        })
        .collect();
    let mut report = VerificationReport::new("invariance", table.name(), Mode::Exhaustive);
    for part in parts {
        report.merge(part);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn form(g: &IntGram, n: usize, x: &[i128], y: &[i128]) -> Option<i128> {
    let mut s = 0i128;
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let gij = g.g[i * n + j];
            if gij != 0 && *yj != 0 {
                s = s.checked_add(xi.checked_mul(*yj)?.checked_mul(gij)?)?;
            }
        }
    }
    Some(s)
}

pub fn invariance_sampled(
    table: &StructureTable,
    gram: &DenseMatrix,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    check_form(table, gram)?;
    let int = IntTable::new(table)?;
    let g = scale_gram(gram)?;
    let n = int.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Vec<i128>; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| random_scaled_vector(&mut rng, n)))
        .collect();
    let denom = BigInt::from(int.denom()) * &g.denom * BigInt::from(SAMPLE_SCALE).pow(3);
    let results: Vec<Option<i128>> = triples
        .par_iter()
        .map(|[x, y, z]| {
            let a = form(&g, n, &int.bracket(x, y)?, z)?;
            let b = form(&g, n, y, &int.bracket(x, z)?)?;
            a.checked_add(b)
        })
        .collect();
    let mut report = VerificationReport::new("invariance", table.name(), Mode::Sampled { samples, seed });
    for (s, v) in results.into_iter().enumerate() {
        let v = v.ok_or_else(overflow)?;
        report.tested += 1;
        if v != 0 {
            let r = Rational::new(BigInt::from(v), denom.clone());
            report.record(Failure {
                indices: vec![s],
                residual: if r.is_zero() { vec![] } else { vec![(0, r)] },
                message: "G([x,y],z) + G(y,[x,z]) is nonzero".into(),
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
