//! Sparse structure-constant tables: `[b_i, b_j] = Σ_k c_ijk b_k`.
//!
//! Only `i < j` is stored; skew-symmetry supplies the rest. Entries are kept
//! sorted by `(i, j, k)` and every stored `c` is nonzero.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scaled::IntTable;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Bumped whenever a bracket formula or the basis ordering changes, so that
/// tables cached on disk by an older build are not reused.
pub const GENERATOR_VERSION: &str = "structure-table/1";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

#[derive(Clone, Debug)]
pub struct StructureTable {
    name: String,
    labels: Vec<String>,
    entries: Vec<StructureEntry>,
    /// `rows[i * dim + j]`: sparse `[b_i, b_j]` for every ordered pair.
    rows: Vec<Vec<(usize, Rational)>>,
    int: OnceLock<Option<IntTable>>,
}

impl PartialEq for StructureTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.entries == other.entries
    }
}

impl StructureTable {
    /// Validates and normalizes a list of entries.
    pub fn from_entries(name: impl Into<String>, labels: Vec<String>, mut entries: Vec<StructureEntry>) -> Result<Self> {
        let dim = labels.len();
        for e in &entries {
            if e.i >= e.j {
                return Err(Error::Table(format!("entry ({}, {}, {}) must have i < j", e.i, e.j, e.k)));
            }
            if e.j >= dim || e.k >= dim {
                return Err(Error::Table(format!("entry ({}, {}, {}) out of range for dim {dim}", e.i, e.j, e.k)));
            }
        }
        entries.retain(|e| !e.c.is_zero());
        entries.sort_by_key(|e| (e.i, e.j, e.k));
        if let Some(w) = entries.windows(2).find(|w| (w[0].i, w[0].j, w[0].k) == (w[1].i, w[1].j, w[1].k)) {
            return Err(Error::Table(format!("duplicate entry ({}, {}, {})", w[0].i, w[0].j, w[0].k)));
        }
        let mut rows = vec![Vec::new(); dim * dim];
        for e in &entries {
            rows[e.i * dim + e.j].push((e.k, e.c.clone()));
            rows[e.j * dim + e.i].push((e.k, -&e.c));
        }
        Ok(Self { name: name.into(), labels, entries, rows, int: OnceLock::new() })
    }

    /// Tabulates an algebra by evaluating its bracket formula on basis pairs.
    pub fn build(algebra: Algebra) -> Self {
        let dim = algebra.dim();
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = rational::one();
            v
        };
        let entries: Vec<StructureEntry> = (0..dim)
            .into_par_iter()
            .flat_map_iter(|i| {
                let bi = unit(i);
                (i + 1..dim).flat_map(move |j| {
                    let c = algebra.bracket_coords(&bi, &unit(j)).expect("basis vectors have the right length");
                    c.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(move |(k, c)| StructureEntry { i, j, k, c })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        Self::from_entries(algebra.name(), algebra.basis_labels(), entries).expect("generated entries are valid")
    }

    /// Built once per process and then reused.
    pub fn shared(algebra: Algebra) -> &'static Self {
        static TABLES: [OnceLock<StructureTable>; 4] = [const { OnceLock::new() }; 4];
        let slot = Algebra::ALL.iter().position(|a| *a == algebra).expect("listed algebra");
        TABLES[slot].get_or_init(|| Self::build(algebra))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entries(&self) -> &[StructureEntry] {
        &self.entries
    }

    /// Sparse coordinates of `[b_i, b_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.rows[i * self.dim() + j]
    }

    /// `c_ijk` for any ordered pair.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_bracket(i, j).iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Bilinear extension of the table to coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        self.bracket_scaled(x, y).unwrap_or_else(|| self.bracket_rational(x, y))
    }

    /// Same result over one common denominator in `i128`, when everything fits.
    fn bracket_scaled(&self, x: &[Rational], y: &[Rational]) -> Option<Vec<Rational>> {
        let int = self.int.get_or_init(|| IntTable::new(self).ok()).as_ref()?;
        let (xs, dx) = scale_vector(x)?;
        let (ys, dy) = scale_vector(y)?;
        let out = int.bracket(&xs, &ys)?;
        let denom = BigInt::from(int.denom()) * dx * dy;
        Some(out.into_iter().map(|v| Rational::new(BigInt::from(v), denom.clone())).collect())
    }

    fn bracket_rational(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for e in &self.entries {
            let (xi, xj, yi, yj) = (&x[e.i], &x[e.j], &y[e.i], &y[e.j]);
            let mut w = Rational::zero();
            if !xi.is_zero() && !yj.is_zero() {
                w += xi * yj;
            }
            if !xj.is_zero() && !yi.is_zero() {
                w -= xj * yi;
            }
            if !w.is_zero() {
                out[e.k] += &e.c * w;
            }
        }
        out
    }

    /// Bracket of two sparse coordinate vectors, returned densely.
    pub fn bracket_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x {
            for (j, yj) in y {
                let row = self.basis_bracket(*i, *j);
                if row.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in row {
                    out[*k] += c * &w;
                }
            }
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// The distinct values `|c_ijk|`.
    pub fn distinct_abs_values(&self) -> BTreeSet<Rational> {
        self.entries.iter().map(|e| e.c.abs()).collect()
    }

    /// Copy with one entry's sign flipped; used as a negative control.
    pub fn with_flipped_sign(&self, index: usize) -> Self {
        let mut entries = self.entries.clone();
        entries[index].c = -&entries[index].c;
        Self::from_entries(self.name.clone(), self.labels.clone(), entries).expect("still valid")
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            algebra: self.name.clone(),
            dim: self.dim(),
            basis: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson { i: e.i, j: e.j, k: e.k, c: rational::format(&e.c) })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(text)?;
        if doc.basis.len() != doc.dim {
            return Err(Error::Table(format!("dim {} but {} basis labels", doc.dim, doc.basis.len())));
        }
        let entries = doc
            .entries
            .into_iter()
            .map(|e| Ok(StructureEntry { i: e.i, j: e.j, k: e.k, c: rational::parse(&e.c)? }))
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(doc.algebra, doc.basis, entries)
    }

    /// `i,j,k,c` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,k,c\n");
        for e in &self.entries {
            let _ = writeln!(s, "{},{},{},{}", e.i, e.j, e.k, e.c);
        }
        s
    }
}

/// Integer numerators over the lcm of the denominators, if both stay small.
fn scale_vector(v: &[Rational]) -> Option<(Vec<i128>, BigInt)> {
    const LIMIT: i64 = 1 << 40;
    let mut denom = BigInt::from(1);
    for c in v {
        denom = denom.lcm(c.denom());
    }
    if denom > BigInt::from(LIMIT) {
        return None;
    }
    let nums = v
        .iter()
        .map(|c| (c.numer() * (&denom / c.denom())).to_i64().filter(|n| n.abs() <= LIMIT).map(i128::from))
        .collect::<Option<Vec<_>>>()?;
    Some((nums, denom))
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    algebra: String,
    dim: usize,
    basis: Vec<String>,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}
