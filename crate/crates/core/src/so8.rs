//! The Lie algebra so(8) of skew-symmetric 8×8 matrices and its triality
//! automorphisms λ, λ² and κ.
//!
//! Coordinates are taken in the basis `e_i ∧ e_j` (`i < j`, lexicographic):
//! the coordinate of `A` on `e_i ∧ e_j` is the entry `A[i][j]`.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Mat8};
use crate::octonion::Octonion;
use crate::rational::{self, Rational};

pub const SO8_DIM: usize = 28;

/// The index pairs `(i, j)`, `i < j`, in basis order.
pub fn wedge_pairs() -> &'static [(usize, usize); SO8_DIM] {
    static PAIRS: OnceLock<[(usize, usize); SO8_DIM]> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let mut out = [(0, 0); SO8_DIM];
        let mut n = 0;
        for i in 0..8 {
            for j in i + 1..8 {
                out[n] = (i, j);
                n += 1;
            }
        }
        out
    })
}

/// Position of `e_i ∧ e_j` (`i < j`) in the basis.
pub fn wedge_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 8);
    // pairs before row i: 7 + 6 + ... + (8 - i)
    i * (15 - i) / 2 + (j - i - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Skew8 {
    m: Mat8,
}

impl Skew8 {
    /// Validates skew-symmetry.
    pub fn new(m: Mat8) -> Result<Self> {
        if m.is_skew() {
            Ok(Self { m })
        } else {
            Err(Error::NotSkew("so(8) element".into()))
        }
    }

    pub(crate) fn new_unchecked(m: Mat8) -> Self {
        debug_assert!(m.is_skew());
        Self { m }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `e_i ∧ e_j` for `i < j`, by basis position.
    pub fn basis(k: usize) -> Self {
        let (i, j) = wedge_pairs()[k];
        wedge(&Octonion::basis(i), &Octonion::basis(j))
    }

    pub fn matrix(&self) -> &Mat8 {
        &self.m
    }

    pub fn into_matrix(self) -> Mat8 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn coords(&self) -> [Rational; SO8_DIM] {
        let pairs = wedge_pairs();
        std::array::from_fn(|k| {
            let (i, j) = pairs[k];
            self.m[(i, j)].clone()
        })
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        assert_eq!(c.len(), SO8_DIM);
        let mut m = Mat8::zero();
        for (k, &(i, j)) in wedge_pairs().iter().enumerate() {
            if !c[k].is_zero() {
                m[(i, j)] = c[k].clone();
                m[(j, i)] = -&c[k];
            }
        }
        Self { m }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { m: self.m.scale(c) }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        Self { m: self.m.commutator(&other.m) }
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        Octonion::apply_matrix(&self.m, x)
    }

    pub fn lambda(&self) -> Self {
        apply_coord_map(lambda_matrix(), self)
    }

    pub fn lambda2(&self) -> Self {
        apply_coord_map(lambda2_matrix(), self)
    }

    pub fn kappa(&self) -> Self {
        Self { m: gamma_conjugate(&self.m) }
    }
}

impl Add for &Skew8 {
    type Output = Skew8;
    fn add(self, rhs: &Skew8) -> Skew8 {
        Skew8 { m: &self.m + &rhs.m }
    }
}

impl Sub for &Skew8 {
    type Output = Skew8;
    fn sub(self, rhs: &Skew8) -> Skew8 {
        Skew8 { m: &self.m - &rhs.m }
    }
}

impl Neg for &Skew8 {
    type Output = Skew8;
    fn neg(self) -> Skew8 {
        Skew8 { m: -&self.m }
    }
}

/// `x ∧ y = x yᵀ − y xᵀ`.
pub fn wedge(x: &Octonion, y: &Octonion) -> Skew8 {
    let m = &Mat8::outer(x.coeffs(), y.coeffs()) - &Mat8::outer(y.coeffs(), x.coeffs());
    Skew8 { m }
}

/// `AB − BA`.
pub fn commutator(a: &Skew8, b: &Skew8) -> Skew8 {
    a.commutator(b)
}

/// `Γ M Γ` with `Γ = diag(1, −1, …, −1)`: flips the sign of row 0 and column 0
/// off the corner.
pub(crate) fn gamma_conjugate(m: &Mat8) -> Mat8 {
    Mat8::from_fn(|i, j| {
        if (i == 0) != (j == 0) {
            -&m[(i, j)]
        } else {
            m[(i, j)].clone()
        }
    })
}

/// λ on a generator: `λ(a ∧ b) = −½ L_b̄ ∘ L_a` for pure `a`.
///
/// The sign goes with the wedge convention `a ∧ b = a bᵀ − b aᵀ`; with the
/// opposite convention the formula reads `½ L_b̄ ∘ L_a`. Only this sign makes
/// λ an automorphism of order three.
pub fn lambda_generator(a: &Octonion, b: &Octonion) -> Result<Skew8> {
    if !a.is_pure() {
        return Err(Error::NotPure(format!("{a:?}")));
    }
    let m = b.conj().left_mul_matrix().matmul(&a.left_mul_matrix()).scale(&rational::ratio(-1, 2));
    Skew8::new(m)
}

/// λ² on a generator: `λ²(a ∧ b) = −½ R_b̄ ∘ R_a` for pure `a` (same sign
/// convention as [`lambda_generator`]).
pub fn lambda2_generator(a: &Octonion, b: &Octonion) -> Result<Skew8> {
    if !a.is_pure() {
        return Err(Error::NotPure(format!("{a:?}")));
    }
    let m = b.conj().right_mul_matrix().matmul(&a.right_mul_matrix()).scale(&rational::ratio(-1, 2));
    Skew8::new(m)
}

/// Builds the 28×28 coordinate matrix of a map defined on generators `a ∧ b`
/// with `a` pure. Basis wedges `e0 ∧ e_j` are handled as `−(e_j ∧ e0)`.
fn coord_map(generator: fn(&Octonion, &Octonion) -> Result<Skew8>) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(SO8_DIM, SO8_DIM);
    for (col, &(i, j)) in wedge_pairs().iter().enumerate() {
        let image = if i == 0 {
            -&generator(&Octonion::basis(j), &Octonion::basis(0)).expect("e_j is pure")
        } else {
            generator(&Octonion::basis(i), &Octonion::basis(j)).expect("e_i is pure")
        };
        for (row, c) in image.coords().into_iter().enumerate() {
            out[(row, col)] = c;
        }
    }
    out
}

/// Coordinate matrix of λ (columns are images of basis wedges).
pub fn lambda_matrix() -> &'static DenseMatrix {
    static M: OnceLock<DenseMatrix> = OnceLock::new();
    M.get_or_init(|| coord_map(lambda_generator))
}

/// Coordinate matrix of λ², built from its own generator formula.
pub fn lambda2_matrix() -> &'static DenseMatrix {
    static M: OnceLock<DenseMatrix> = OnceLock::new();
    M.get_or_init(|| coord_map(lambda2_generator))
}

fn apply_coord_map(map: &DenseMatrix, a: &Skew8) -> Skew8 {
    let c = a.coords();
    let mut out: [Rational; SO8_DIM] = std::array::from_fn(|_| Rational::zero());
    for (col, x) in c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (row, o) in out.iter_mut().enumerate() {
            let m = &map[(row, col)];
            if !m.is_zero() {
                *o += m * x;
            }
        }
    }
    Skew8::from_coords(&out)
}

pub fn triality_lambda(a: &Skew8) -> Skew8 {
    a.lambda()
}

pub fn triality_lambda2(a: &Skew8) -> Skew8 {
    a.lambda2()
}

pub fn kappa(a: &Skew8) -> Skew8 {
    a.kappa()
}
