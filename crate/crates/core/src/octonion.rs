//! Exact octonion arithmetic over the basis `e0..e7`, with `e0` the identity.
//!
//! The full multiplication table is generated from the seven defining
//! products
//!
//! ```text
//! e1e2 = e3   e1e4 = e5   e2e4 = e6   e3e4 = e7
//! e5e3 = e6   e6e1 = e7   e7e2 = e5
//! ```
//!
//! together with `e_i² = −e0`, by closing under anticommutativity of distinct
//! imaginary units and the two alternative laws.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::matrix::Mat8;
use crate::rational::{self, Rational};

/// The seven defining products `e_a e_b = e_c`, as `(a, b, c)`.
pub const DEFINING_PRODUCTS: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (5, 3, 6), (6, 1, 7), (7, 2, 5)];

/// `e_i e_j = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

pub type MulTable = [[BasisProduct; 8]; 8];

/// The multiplication table of the basis units, built once.
pub fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(|| generate_table(&DEFINING_PRODUCTS).expect("defining products are consistent"))
}

/// Closes a set of imaginary-unit products into a full table.
///
/// Fails if two derivations disagree or the closure leaves an entry undetermined.
pub fn generate_table(products: &[(usize, usize, usize)]) -> Result<MulTable, String> {
    let mut table: [[Option<(i8, usize)>; 8]; 8] = [[None; 8]; 8];
    for i in 0..8 {
        table[0][i] = Some((1, i));
        table[i][0] = Some((1, i));
        if i > 0 {
            table[i][i] = Some((-1, 0));
        }
    }

    fn set(
        table: &mut [[Option<(i8, usize)>; 8]; 8],
        a: usize,
        b: usize,
        val: (i8, usize),
        changed: &mut bool,
    ) -> Result<(), String> {
        match table[a][b] {
            Some(old) if old != val => Err(format!(
                "inconsistent table: e{a}e{b} derived as both {}e{} and {}e{}",
                old.0, old.1, val.0, val.1
            )),
            Some(_) => Ok(()),
            None => {
                table[a][b] = Some(val);
                *changed = true;
                Ok(())
            }
        }
    }

    let mut changed = false;
    for &(a, b, c) in products {
        if a == 0 || b == 0 || c == 0 || a == b {
            return Err(format!("e{a}e{b} = e{c} is not a product of distinct imaginary units"));
        }
        set(&mut table, a, b, (1, c), &mut changed)?;
    }

    changed = true;
    while changed {
        changed = false;
        for a in 1..8 {
            for b in 1..8 {
                if a == b {
                    continue;
                }
                let Some((s, c)) = table[a][b] else { continue };
                if c == 0 {
                    return Err(format!("e{a}e{b} is real"));
                }
                // anticommutativity
                set(&mut table, b, a, (-s, c), &mut changed)?;
                // left alternative law: e_a(e_a e_b) = (e_a e_a)e_b = −e_b
                set(&mut table, a, c, (-s, b), &mut changed)?;
                // right alternative law: (e_a e_b)e_b = e_a(e_b e_b) = −e_a
                set(&mut table, c, b, (-s, a), &mut changed)?;
            }
        }
    }

    let mut out = [[BasisProduct { sign: 1, index: 0 }; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (sign, index) =
                table[i][j].ok_or_else(|| format!("e{i}e{j} is not determined by the closure"))?;
            out[i][j] = BasisProduct { sign, index };
        }
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    coeffs: [Rational; 8],
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Octonion {
    pub fn new(coeffs: [Rational; 8]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis unit `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.coeffs[i] = rational::one();
        o
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Self { coeffs: c.map(rational::int) }
    }

    pub fn real(r: Rational) -> Self {
        let mut o = Self::zero();
        o.coeffs[0] = r;
        o
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_pure(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] * c) }
    }

    pub fn conj(&self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| {
                if i == 0 {
                    self.coeffs[0].clone()
                } else {
                    -&self.coeffs[i]
                }
            }),
        }
    }

    /// `½(x + x̄)`, as a scalar.
    pub fn re(&self) -> Rational {
        self.coeffs[0].clone()
    }

    /// `½(x − x̄)`.
    pub fn pu(&self) -> Self {
        let mut o = self.clone();
        o.coeffs[0] = Rational::zero();
        o
    }

    /// The standard scalar product `⟨u, v⟩ = uᵀv`.
    pub fn inner(&self, other: &Self) -> Rational {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    /// `|a|²`.
    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = mul_table();
        let mut out = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let p = t[i][j];
                let prod = a * b;
                if p.sign > 0 {
                    out.coeffs[p.index] += prod;
                } else {
                    out.coeffs[p.index] -= prod;
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self) -> Mat8 {
        let mut m = Mat8::zero();
        for j in 0..8 {
            let col = self.mul(&Self::basis(j));
            for i in 0..8 {
                m[(i, j)] = col.coeffs[i].clone();
            }
        }
        m
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self) -> Mat8 {
        let mut m = Mat8::zero();
        for j in 0..8 {
            let col = Self::basis(j).mul(self);
            for i in 0..8 {
                m[(i, j)] = col.coeffs[i].clone();
            }
        }
        m
    }

    pub fn apply_matrix(m: &Mat8, x: &Self) -> Self {
        Self { coeffs: m.apply(&x.coeffs) }
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}
