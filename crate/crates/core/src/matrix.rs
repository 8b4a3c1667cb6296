//! Plain rational matrices.
//!
//! [`Mat8`] is the raw 8×8 layer underneath `Skew8` and `OctOct`. Products
//! skip zero entries: almost every matrix the brackets touch is a basis
//! element or close to one.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat8 {
    rows: [[Rational; 8]; 8],
}

impl Default for Mat8 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mat8 {
    pub fn zero() -> Self {
        Self { rows: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self { rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    /// The matrix unit with a single 1 at `(i, j)`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m[(i, j)] = rational::one();
        m
    }

    /// The rank-one matrix `x yᵀ`.
    pub fn outer(x: &[Rational; 8], y: &[Rational; 8]) -> Self {
        let mut m = Self::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                m.rows[i][j] = xi * yj;
            }
        }
        m
    }

    pub fn rows(&self) -> &[[Rational; 8]; 8] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn is_skew(&self) -> bool {
        (0..8).all(|i| (i..8).all(|j| self.rows[i][j] == -&self.rows[j][i]))
    }

    pub fn trace(&self) -> Rational {
        (0..8).map(|i| &self.rows[i][i]).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_fn(|i, j| {
            let v = &self.rows[i][j];
            if v.is_zero() {
                Rational::zero()
            } else {
                v * c
            }
        })
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, other: &Self) -> Self {
        let scaled = if rational::dense_enough(self.entries(), other.entries()) {
            rational::scaled_integers(self.entries()).zip(rational::scaled_integers(other.entries()))
        } else {
            None
        };
        if let Some(((a, da), (b, db))) = scaled {
            let mut acc = [0i128; 64];
            for i in 0..8 {
                for k in 0..8 {
                    let x = a[8 * i + k] as i128;
                    if x != 0 {
                        for j in 0..8 {
                            acc[8 * i + j] += x * b[8 * k + j] as i128;
                        }
                    }
                }
            }
            let d = da as i128 * db as i128;
            return Self::from_fn(|i, j| rational::from_scaled(acc[8 * i + j], d));
        }
        let mut out = Self::zero();
        for i in 0..8 {
            for k in 0..8 {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..8 {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn apply(&self, x: &[Rational; 8]) -> [Rational; 8] {
        let mut out: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for (j, xj) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.rows[i][j];
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        out
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl Iterator<Item = &Rational> + Clone {
        self.rows.iter().flatten()
    }

    pub fn from_row_major(v: &[Rational]) -> Self {
        assert_eq!(v.len(), 64);
        Self::from_fn(|i, j| v[8 * i + j].clone())
    }

    /// Sum of the entrywise products, i.e. `tr(A Bᵀ)`.
    pub fn frobenius(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for (a, b) in self.entries().zip(other.entries()) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.rows.iter_mut().flatten().zip(other.entries()) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn to_f64(&self) -> [[f64; 8]; 8] {
        std::array::from_fn(|i| std::array::from_fn(|j| rational::to_f64(&self.rows[i][j])))
    }
}

impl Index<(usize, usize)> for Mat8 {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat8 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.rows[i][j]
    }
}

impl Add for &Mat8 {
    type Output = Mat8;
    fn add(self, rhs: &Mat8) -> Mat8 {
        Mat8::from_fn(|i, j| &self.rows[i][j] + &rhs.rows[i][j])
    }
}

impl Sub for &Mat8 {
    type Output = Mat8;
    fn sub(self, rhs: &Mat8) -> Mat8 {
        Mat8::from_fn(|i, j| &self.rows[i][j] - &rhs.rows[i][j])
    }
}

impl Neg for &Mat8 {
    type Output = Mat8;
    fn neg(self) -> Mat8 {
        Mat8::from_fn(|i, j| -&self.rows[i][j])
    }
}

/// A dense `n × m` rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        Self::from_fn(self.rows, self.cols, |i, j| &ab[(i, j)] - &ba[(i, j)])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Copy of `self` with rows and columns reordered: `out[a][b] = self[perm[a]][perm[b]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self[(perm[i], perm[j])].clone())
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}
