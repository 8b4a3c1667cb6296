//! The compact Lie algebra f4 on so(8) × Ca³.
//!
//! ```text
//! [(A,u,v,w),(B,x,y,z)] = (C,r,s,t)
//! C = AB − BA − 4 u∧x − 4 λ²(v∧y) − 4 λ(w∧z)
//! r = Ax − Bu + conj(vz) − conj(yw)
//! s = λ(A)y − λ(B)v + conj(wx) − conj(zu)
//! t = λ²(A)z − λ²(B)w + conj(uy) − conj(xv)
//! ```
//!
//! Canonical basis: the 28 wedges `e_i ∧ e_j`, then `e0..e7` in the u-, v-
//! and w-copies.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::rational::{self, Rational};
use crate::so8::{wedge, wedge_pairs, Skew8, SO8_DIM};

pub const F4_DIM: usize = SO8_DIM + 3 * 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct F4Element {
    pub a: Skew8,
    pub u: Octonion,
    pub v: Octonion,
    pub w: Octonion,
}

impl F4Element {
    pub fn new(a: Skew8, u: Octonion, v: Octonion, w: Octonion) -> Self {
        Self { a, u, v, w }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![rational::zero(); F4_DIM];
        c[k] = rational::one();
        Self::from_coords(&c).expect("basis index in range")
    }

    pub fn labels() -> Vec<String> {
        let mut out: Vec<String> = wedge_pairs().iter().map(|(i, j)| format!("so8:e{i}^e{j}")).collect();
        for part in ["u", "v", "w"] {
            out.extend((0..8).map(|i| format!("{part}:e{i}")));
        }
        out
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.a.coords().to_vec();
        for o in [&self.u, &self.v, &self.w] {
            c.extend(o.coeffs().iter().cloned());
        }
        c
    }

    pub fn from_coords(c: &[Rational]) -> Result<Self> {
        if c.len() != F4_DIM {
            return Err(Error::Dimension { expected: F4_DIM, found: c.len() });
        }
        let oct = |k: usize| {
            let s = SO8_DIM + 8 * k;
            Octonion::new(std::array::from_fn(|i| c[s + i].clone()))
        };
        Ok(Self::new(Skew8::from_coords(&c[..SO8_DIM]), oct(0), oct(1), oct(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.u.is_zero() && self.v.is_zero() && self.w.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.a.scale(c), self.u.scale(c), self.v.scale(c), self.w.scale(c))
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let four = rational::int(4);
        let (a, u, v, w) = (&self.a, &self.u, &self.v, &self.w);
        let (b, x, y, z) = (&other.a, &other.x(), &other.v, &other.w);

        let quad = &(&wedge(u, x) + &wedge(v, y).lambda2()) + &wedge(w, z).lambda();
        let c = &a.commutator(b) - &quad.scale(&four);
        let r = &(&a.apply(x) - &b.apply(u)) + &(&(v * z).conj() - &(y * w).conj());
        let s = &(&a.lambda().apply(y) - &b.lambda().apply(v)) + &(&(w * x).conj() - &(z * u).conj());
        let t = &(&a.lambda2().apply(z) - &b.lambda2().apply(w)) + &(&(u * y).conj() - &(x * v).conj());
        Self::new(c, r, s, t)
    }

    // the second argument's u-slot is called x in the bracket formula
    fn x(&self) -> Octonion {
        self.u.clone()
    }

    /// `(A, u, v, w) ↦ (λ(A), v, w, u)`.
    pub fn tau(&self) -> Self {
        Self::new(self.a.lambda(), self.v.clone(), self.w.clone(), self.u.clone())
    }
}

impl Add for &F4Element {
    type Output = F4Element;
    fn add(self, rhs: &F4Element) -> F4Element {
        F4Element::new(&self.a + &rhs.a, &self.u + &rhs.u, &self.v + &rhs.v, &self.w + &rhs.w)
    }
}

impl Sub for &F4Element {
    type Output = F4Element;
    fn sub(self, rhs: &F4Element) -> F4Element {
        F4Element::new(&self.a - &rhs.a, &self.u - &rhs.u, &self.v - &rhs.v, &self.w - &rhs.w)
    }
}

impl Neg for &F4Element {
    type Output = F4Element;
    fn neg(self) -> F4Element {
        F4Element::new(-&self.a, -&self.u, -&self.v, -&self.w)
    }
}

pub fn f4_bracket(xi: &F4Element, eta: &F4Element) -> F4Element {
    xi.bracket(eta)
}

pub fn f4_tau(xi: &F4Element) -> F4Element {
    xi.tau()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn sample(seed: i64) -> F4Element {
        let c: Vec<Rational> = (0..F4_DIM as i64).map(|k| ratio((k * 7 + seed) % 5 - 2, 1 + (k + seed) % 2)).collect();
        F4Element::from_coords(&c).unwrap()
    }

    fn only_a(a: Skew8) -> F4Element {
        F4Element::new(a, Octonion::zero(), Octonion::zero(), Octonion::zero())
    }

    #[test]
    fn bracket_examples() {
        let a = &Skew8::basis(3) + &Skew8::basis(17).scale(&int(2));
        let b = &Skew8::basis(9) - &Skew8::basis(0);
        assert_eq!(only_a(a.clone()).bracket(&only_a(b.clone())), only_a(a.commutator(&b)));

        let u = Octonion::from_ints([1, 0, 2, 0, 0, -1, 0, 3]);
        let x = Octonion::from_ints([0, 1, 0, 1, 2, 0, 0, 0]);
        let xi = F4Element::new(Skew8::zero(), u.clone(), Octonion::zero(), Octonion::zero());
        let eta = F4Element::new(Skew8::zero(), x.clone(), Octonion::zero(), Octonion::zero());
        assert_eq!(xi.bracket(&eta), only_a(wedge(&u, &x).scale(&int(-4))));

        let y = Octonion::from_ints([2, 0, 0, 1, 0, 1, -1, 0]);
        let eta = F4Element::new(Skew8::zero(), Octonion::zero(), y.clone(), Octonion::zero());
        let expected = F4Element::new(Skew8::zero(), Octonion::zero(), Octonion::zero(), (&u * &y).conj());
        assert_eq!(xi.bracket(&eta), expected);
    }

    #[test]
    fn skew_symmetric() {
        let (x, y) = (sample(1), sample(4));
        assert_eq!(x.bracket(&y), -&y.bracket(&x));
        assert!(x.bracket(&x).is_zero());
    }

    #[test]
    fn tau_examples() {
        assert!(F4Element::zero().tau().is_zero());
        for k in 0..F4_DIM {
            let b = F4Element::basis(k);
            assert_eq!(b.tau().tau().tau(), b);
        }
        let (x, y) = (sample(2), sample(3));
        assert_eq!(x.bracket(&y).tau(), x.tau().bracket(&y.tau()));
    }

    #[test]
    fn labels_and_coords() {
        let labels = F4Element::labels();
        assert_eq!(labels.len(), 52);
        assert_eq!(labels[0], "so8:e0^e1");
        assert_eq!(labels[28], "u:e0");
        assert_eq!(labels[51], "w:e7");
        let x = sample(5);
        assert_eq!(F4Element::from_coords(&x.coords()).unwrap(), x);
        assert!(F4Element::from_coords(&x.coords()[1..]).is_err());
    }
}
