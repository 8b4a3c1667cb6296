//! Oct-octonions `Ca ⊗ Ca`, realized as 8×8 matrices via `x ⊗ y = x yᵀ`.
//!
//! [`OctOct`] carries the oct-octonion product ⊙ and deliberately has no
//! matrix product: the two multiplications on the same underlying matrices
//! must never be confused. The matrix products needed by the action of
//! so(8) ⊕ so(8) and by the curly wedge go through [`Mat8`] internally.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Mat8};
use crate::octonion::{mul_table, Octonion};
use crate::rational::{self, Rational};
use crate::so8::{gamma_conjugate, Skew8, SO8_DIM};

pub const OCTOCT_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OctOct {
    m: Mat8,
}

impl OctOct {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Any 8×8 matrix is an oct-octonion.
    pub fn from_matrix(m: Mat8) -> Self {
        Self { m }
    }

    /// `x ⊗ y = x yᵀ`.
    pub fn tensor(x: &Octonion, y: &Octonion) -> Self {
        Self { m: Mat8::outer(x.coeffs(), y.coeffs()) }
    }

    /// `e_i ⊗ e_j`, by row-major position `8i + j`.
    pub fn basis(k: usize) -> Self {
        Self { m: Mat8::unit(k / 8, k % 8) }
    }

    pub fn matrix(&self) -> &Mat8 {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.m.entries().cloned().collect()
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        Self { m: Mat8::from_row_major(c) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { m: self.m.scale(c) }
    }

    /// `Xᵀ`; swaps the tensor factors.
    pub fn transpose(&self) -> Self {
        Self { m: self.m.transpose() }
    }

    pub fn conj(&self) -> Self {
        Self { m: gamma_conjugate(&self.m) }
    }

    /// `(a ⊗ b) ⊙ (c ⊗ d) = ac ⊗ bd`, extended bilinearly.
    pub fn oo_mul(&self, other: &Self) -> Self {
        let t = oo_table();
        let scaled = if rational::dense_enough(self.m.entries(), other.m.entries()) {
            rational::scaled_integers(self.m.entries()).zip(rational::scaled_integers(other.m.entries()))
        } else {
            None
        };
        if let Some(((xs, dx), (ys, dy))) = scaled {
            let mut acc = [0i128; OCTOCT_DIM];
            for (a, x) in xs.iter().enumerate().filter(|(_, x)| **x != 0) {
                for (b, y) in ys.iter().enumerate().filter(|(_, y)| **y != 0) {
                    let (sign, c) = t[a][b];
                    acc[c] += sign as i128 * (*x as i128 * *y as i128);
                }
            }
            let d = dx as i128 * dy as i128;
            return Self { m: Mat8::from_fn(|i, j| rational::from_scaled(acc[8 * i + j], d)) };
        }
        let mut out = Mat8::zero();
        for (a, x) in self.m.entries().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in other.m.entries().enumerate().filter(|(_, y)| !y.is_zero()) {
                let (sign, c) = t[a][b];
                let prod = x * y;
                let slot = &mut out[(c / 8, c % 8)];
                if sign > 0 {
                    *slot += prod;
                } else {
                    *slot -= prod;
                }
            }
        }
        Self { m: out }
    }

    /// `tr(X Yᵀ)`: the coordinate dot product.
    pub fn trace_pairing(&self, other: &Self) -> Rational {
        self.m.frobenius(&other.m)
    }
}

pub type OoTable = [[(i8, usize); OCTOCT_DIM]; OCTOCT_DIM];

/// Structure tensor of ⊙ on the basis `e_i ⊗ e_j` (position `8i + j`):
/// `basis(a) ⊙ basis(b) = sign · basis(c)`.
pub fn oo_table() -> &'static OoTable {
    static T: OnceLock<Box<OoTable>> = OnceLock::new();
    T.get_or_init(|| {
        let mt = mul_table();
        let mut t = Box::new([[(1i8, 0usize); OCTOCT_DIM]; OCTOCT_DIM]);
        for a in 0..OCTOCT_DIM {
            let (i, j) = (a / 8, a % 8);
            for b in 0..OCTOCT_DIM {
                let (k, l) = (b / 8, b % 8);
                let left = mt[i][k];
                let right = mt[j][l];
                t[a][b] = (left.sign * right.sign, 8 * left.index + right.index);
            }
        }
        t
    })
}

impl Add for &OctOct {
    type Output = OctOct;
    fn add(self, rhs: &OctOct) -> OctOct {
        OctOct { m: &self.m + &rhs.m }
    }
}

impl Sub for &OctOct {
    type Output = OctOct;
    fn sub(self, rhs: &OctOct) -> OctOct {
        OctOct { m: &self.m - &rhs.m }
    }
}

impl Neg for &OctOct {
    type Output = OctOct;
    fn neg(self) -> OctOct {
        OctOct { m: -&self.m }
    }
}

/// An element `(P, Q)` of so(8) ⊕ so(8).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SoPair {
    pub p: Skew8,
    pub q: Skew8,
}

impl SoPair {
    pub fn new(p: Skew8, q: Skew8) -> Self {
        Self { p, q }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Basis of so(8) ⊕ so(8): first-summand wedges, then second.
    pub fn basis(k: usize) -> Self {
        if k < SO8_DIM {
            Self::new(Skew8::basis(k), Skew8::zero())
        } else {
            Self::new(Skew8::zero(), Skew8::basis(k - SO8_DIM))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.p.coords().to_vec();
        c.extend(self.q.coords());
        c
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        assert_eq!(c.len(), 2 * SO8_DIM);
        Self::new(Skew8::from_coords(&c[..SO8_DIM]), Skew8::from_coords(&c[SO8_DIM..]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.p.scale(c), self.q.scale(c))
    }

    /// Componentwise commutator.
    pub fn bracket(&self, other: &Self) -> Self {
        Self::new(self.p.commutator(&other.p), self.q.commutator(&other.q))
    }

    /// `A.X = P X − X Q`.
    pub fn act(&self, x: &OctOct) -> OctOct {
        let px = self.p.matrix().matmul(&x.m);
        let xq = x.m.matmul(self.q.matrix());
        OctOct { m: &px - &xq }
    }

    /// Λ: triality on both summands.
    pub fn lambda(&self) -> Self {
        Self::new(self.p.lambda(), self.q.lambda())
    }

    /// Λ², through the independent λ² formula.
    pub fn lambda2(&self) -> Self {
        Self::new(self.p.lambda2(), self.q.lambda2())
    }

    /// `tr(P P') + tr(Q Q')`.
    pub fn trace_form(&self, other: &Self) -> Rational {
        // tr(AB) = −tr(A Bᵀ) for skew B
        -(self.p.matrix().frobenius(other.p.matrix()) + self.q.matrix().frobenius(other.q.matrix()))
    }
}

impl Add for &SoPair {
    type Output = SoPair;
    fn add(self, rhs: &SoPair) -> SoPair {
        SoPair::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &SoPair {
    type Output = SoPair;
    fn sub(self, rhs: &SoPair) -> SoPair {
        SoPair::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Neg for &SoPair {
    type Output = SoPair;
    fn neg(self) -> SoPair {
        SoPair::new(-&self.p, -&self.q)
    }
}

pub fn oo_mul(x: &OctOct, y: &OctOct) -> OctOct {
    x.oo_mul(y)
}

pub fn oo_conj(x: &OctOct) -> OctOct {
    x.conj()
}

pub fn so_pair_act(a: &SoPair, x: &OctOct) -> OctOct {
    a.act(x)
}

/// `X ⋏ Y = (XYᵀ − YXᵀ, XᵀY − YᵀX)`, with ordinary matrix products.
pub fn curly_wedge(x: &OctOct, y: &OctOct) -> SoPair {
    let (xm, ym) = (&x.m, &y.m);
    let (xt, yt) = (xm.transpose(), ym.transpose());
    let p = &xm.matmul(&yt) - &ym.matmul(&xt);
    let q = &xt.matmul(ym) - &yt.matmul(xm);
    SoPair::new(Skew8::new_unchecked(p), Skew8::new_unchecked(q))
}

pub fn capital_lambda(a: &SoPair) -> SoPair {
    a.lambda()
}

pub fn capital_lambda2(a: &SoPair) -> SoPair {
    a.lambda2()
}

pub const SO16_DIM: usize = 2 * SO8_DIM + OCTOCT_DIM;

/// `((P, Q), X) ↦ [[P, 2X], [−2Xᵀ, Q]]`.
pub fn so16_embed(a: &SoPair, x: &OctOct) -> DenseMatrix {
    let two = rational::int(2);
    let mut out = DenseMatrix::zeros(16, 16);
    for i in 0..8 {
        for j in 0..8 {
            out[(i, j)] = a.p.matrix()[(i, j)].clone();
            out[(8 + i, 8 + j)] = a.q.matrix()[(i, j)].clone();
            let xij = &x.m[(i, j)];
            if !xij.is_zero() {
                out[(i, 8 + j)] = xij * &two;
                out[(8 + j, i)] = -(xij * &two);
            }
        }
    }
    out
}

/// Inverse of [`so16_embed`] on skew 16×16 matrices.
pub fn so16_unembed(m: &DenseMatrix) -> Result<So16Element> {
    if m.nrows() != 16 || m.ncols() != 16 {
        return Err(Error::Dimension { expected: 16, found: m.nrows() });
    }
    if !m.is_skew() {
        return Err(Error::NotSkew("16×16 so(16) element".into()));
    }
    let half = rational::ratio(1, 2);
    let p = Mat8::from_fn(|i, j| m[(i, j)].clone());
    let q = Mat8::from_fn(|i, j| m[(8 + i, 8 + j)].clone());
    let x = Mat8::from_fn(|i, j| &m[(i, 8 + j)] * &half);
    Ok(So16Element {
        a: SoPair::new(Skew8::new_unchecked(p), Skew8::new_unchecked(q)),
        x: OctOct::from_matrix(x),
    })
}

/// An element `(A, X)` of (so(8) ⊕ so(8)) × R(8) with the bracket
/// `[(A,X),(B,Y)] = (AB − BA − 4 X⋏Y, A.Y − B.X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct So16Element {
    pub a: SoPair,
    pub x: OctOct,
}

impl So16Element {
    pub fn new(a: SoPair, x: OctOct) -> Self {
        Self { a, x }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Canonical basis: 28 + 28 wedges, then `e_i ⊗ e_j` row-major.
    pub fn basis(k: usize) -> Self {
        if k < 2 * SO8_DIM {
            Self::new(SoPair::basis(k), OctOct::zero())
        } else {
            Self::new(SoPair::zero(), OctOct::basis(k - 2 * SO8_DIM))
        }
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.a.coords();
        c.extend(self.x.coords());
        c
    }

    pub fn from_coords(c: &[Rational]) -> Result<Self> {
        if c.len() != SO16_DIM {
            return Err(Error::Dimension { expected: SO16_DIM, found: c.len() });
        }
        Ok(Self::new(SoPair::from_coords(&c[..2 * SO8_DIM]), OctOct::from_coords(&c[2 * SO8_DIM..])))
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let four = rational::int(4);
        let c = &self.a.bracket(&other.a) - &curly_wedge(&self.x, &other.x).scale(&four);
        let r = &self.a.act(&other.x) - &other.a.act(&self.x);
        Self::new(c, r)
    }

    pub fn embed(&self) -> DenseMatrix {
        so16_embed(&self.a, &self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::so8::wedge;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn t(i: usize, j: usize) -> OctOct {
        OctOct::tensor(&e(i), &e(j))
    }

    #[test]
    fn oo_mul_large_denominators_take_the_exact_slow_path() {
        let x = OctOct::from_coords(&(0..64).map(|k| ratio(k as i64 - 30, 3)).collect::<Vec<_>>());
        let y = OctOct::from_coords(&(0..64).map(|k| ratio(7 - k as i64, 2)).collect::<Vec<_>>());
        let tiny = ratio(1, 1 << 40);
        assert_eq!(x.scale(&tiny).oo_mul(&y), x.oo_mul(&y).scale(&tiny));
        let (a, b) = (x.matrix(), y.matrix());
        assert_eq!(a.scale(&tiny).matmul(b), a.matmul(b).scale(&tiny));
    }

    #[test]
    fn tensor_is_rank_one_matrix() {
        let x = Octonion::from_ints([1, 2, 0, 0, 0, 0, 0, 3]);
        let y = Octonion::from_ints([0, 1, 0, -1, 0, 0, 0, 0]);
        let xy = OctOct::tensor(&x, &y);
        assert_eq!(xy.matrix()[(7, 3)], int(-3));
        assert_eq!(xy.transpose(), OctOct::tensor(&y, &x));
    }

    #[test]
    fn oo_mul_examples() {
        assert_eq!(t(1, 2).oo_mul(&t(2, 4)), t(3, 6));
        let x = OctOct::from_coords(&(0..64).map(|k| int(k % 5 - 2)).collect::<Vec<_>>());
        assert_eq!(t(0, 0).oo_mul(&x), x);
        assert_eq!(x.oo_mul(&t(0, 0)), x);
    }

    #[test]
    fn oo_mul_matches_rank_one_closed_form_on_basis() {
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    for d in [0, 3, 6] {
                        let lhs = t(a, b).oo_mul(&t(c, d));
                        let rhs = OctOct::tensor(&(&e(a) * &e(c)), &(&e(b) * &e(d)));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn conj_examples_and_anti_automorphism() {
        assert_eq!(t(0, 0).conj(), t(0, 0));
        assert_eq!(t(0, 3).conj(), -&t(0, 3));
        assert_eq!(t(2, 5).conj(), t(2, 5));
        for a in 0..64 {
            let x = OctOct::basis(a);
            assert_eq!(x.conj().conj(), x);
            for b in 0..64 {
                let y = OctOct::basis(b);
                assert_eq!(x.oo_mul(&y).conj(), y.conj().oo_mul(&x.conj()));
            }
        }
    }

    #[test]
    fn action_examples() {
        let x = t(3, 4);
        assert!(SoPair::zero().act(&x).is_zero());
        let a = SoPair::new(wedge(&e(0), &e(1)), Skew8::zero());
        // (e0∧e1)e0 = e0⟨e1,e0⟩ − e1⟨e0,e0⟩ = −e1
        assert_eq!(a.act(&t(0, 0)), -&t(1, 0));
        // twice: (e0∧e1)² e0 = −e0
        assert_eq!(a.act(&a.act(&t(0, 0))), -&t(0, 0));
        // rank one: (P,Q).(r⊗s) = (Pr)⊗s + r⊗(Qs)
        let p = &wedge(&e(2), &e(5)) + &wedge(&e(0), &e(3)).scale(&int(2));
        let q = &wedge(&e(1), &e(7)) - &wedge(&e(4), &e(6));
        let pair = SoPair::new(p.clone(), q.clone());
        let r = Octonion::from_ints([1, 0, 2, 3, 0, 5, 0, 0]);
        let s = Octonion::from_ints([0, 1, 0, 0, 4, 0, 6, 7]);
        let lhs = pair.act(&OctOct::tensor(&r, &s));
        let rhs = &OctOct::tensor(&p.apply(&r), &s) + &OctOct::tensor(&r, &q.apply(&s));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn curly_wedge_examples() {
        let cw = curly_wedge(&t(0, 0), &t(1, 0));
        assert_eq!(cw, SoPair::new(wedge(&e(0), &e(1)), Skew8::zero()));
        let x = OctOct::from_coords(&(0..64).map(|k| int(k % 7 - 3)).collect::<Vec<_>>());
        assert!(curly_wedge(&x, &x).is_zero());
    }

    #[test]
    fn curly_wedge_rank_one_formula_on_basis() {
        for a in 0..64 {
            let (p, q) = (a / 8, a % 8);
            for b in 0..64 {
                let (r, s) = (b / 8, b % 8);
                let cw = curly_wedge(&OctOct::basis(a), &OctOct::basis(b));
                assert!(cw.p.matrix().is_skew() && cw.q.matrix().is_skew());
                let expected = SoPair::new(
                    wedge(&e(p), &e(r)).scale(&e(q).inner(&e(s))),
                    wedge(&e(q), &e(s)).scale(&e(p).inner(&e(r))),
                );
                assert_eq!(cw, expected);
            }
        }
    }

    #[test]
    fn capital_lambda_examples() {
        assert!(SoPair::zero().lambda().is_zero());
        let a = SoPair::new(wedge(&e(1), &e(0)), Skew8::zero());
        let expected = e(1).left_mul_matrix().scale(&rational::ratio(-1, 2));
        assert_eq!(a.lambda().p.matrix(), &expected);
        assert!(a.lambda().q.is_zero());
        for k in 0..2 * SO8_DIM {
            let b = SoPair::basis(k);
            assert_eq!(b.lambda().lambda().lambda(), b);
            assert_eq!(b.lambda2(), b.lambda().lambda());
        }
    }

    #[test]
    fn so16_embed_examples() {
        assert!(so16_embed(&SoPair::zero(), &OctOct::zero()).is_zero());
        let pair = SoPair::new(wedge(&e(0), &e(2)), wedge(&e(3), &e(7)));
        let m = so16_embed(&pair, &OctOct::zero());
        assert_eq!(m[(0, 2)], int(1));
        assert_eq!(m[(11, 15)], int(1));
        assert_eq!(m.data().iter().filter(|v| !v.is_zero()).count(), 4);
        let x = So16Element::basis(100);
        assert!(x.embed().is_skew());
        assert_eq!(so16_unembed(&x.embed()).unwrap(), x);
    }

    #[test]
    fn so16_bracket_is_matrix_commutator() {
        let basis: Vec<So16Element> = (0..SO16_DIM).map(So16Element::basis).collect();
        let embeds: Vec<DenseMatrix> = basis.iter().map(So16Element::embed).collect();
        for i in 0..SO16_DIM {
            for j in 0..SO16_DIM {
                let lhs = basis[i].bracket(&basis[j]).embed();
                assert_eq!(lhs, embeds[i].commutator(&embeds[j]), "pair ({i}, {j})");
            }
        }
    }
}
