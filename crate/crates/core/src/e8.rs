//! The 248-dimensional Lie algebra e8 on (so(8) ⊕ so(8)) × (Ca ⊗ Ca)³.
//!
//! ```text
//! [(A,u,v,w),(B,x,y,z)] = (C,r,s,t)
//! C = [A,B] − 4 u⋏x − 4 Λ²(v⋏y) − 4 Λ(w⋏z)
//! r = A.x − B.u + conj(v⊙z) − conj(y⊙w)
//! s = Λ(A).y − Λ(B).v + conj(w⊙x) − conj(z⊙u)
//! t = Λ²(A).z − Λ²(B).w + conj(u⊙y) − conj(x⊙v)
//! ```
//!
//! The split form e8(8) flips the signs of the Λ², Λ terms in `C` and of the
//! two conjugate terms in `r`; everything else is shared.
//!
//! Canonical coordinates: 28 wedges of the first so(8), 28 of the second,
//! then the u-, v-, w-copies of `e_i ⊗ e_j` in row-major order.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::octoct::{curly_wedge, OctOct, SoPair, OCTOCT_DIM};
use crate::rational::{self, Rational};
use crate::so8::{wedge_pairs, SO8_DIM};

pub const E8_DIM: usize = 2 * SO8_DIM + 3 * OCTOCT_DIM;

/// Which real form's bracket to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealForm {
    Compact,
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct E8Element {
    pub a: SoPair,
    pub u: OctOct,
    pub v: OctOct,
    pub w: OctOct,
}

impl E8Element {
    pub fn new(a: SoPair, u: OctOct, v: OctOct, w: OctOct) -> Self {
        Self { a, u, v, w }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![rational::zero(); E8_DIM];
        c[k] = rational::one();
        Self::from_coords(&c).expect("basis index in range")
    }

    pub fn labels() -> Vec<String> {
        let mut out = Vec::with_capacity(E8_DIM);
        for part in ["so8a", "so8b"] {
            out.extend(wedge_pairs().iter().map(|(i, j)| format!("{part}:e{i}^e{j}")));
        }
        for part in ["u", "v", "w"] {
            out.extend((0..64).map(|k| format!("{part}:e{}@e{}", k / 8, k % 8)));
        }
        out
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.a.coords();
        for x in [&self.u, &self.v, &self.w] {
            c.extend(x.coords());
        }
        c
    }

    pub fn from_coords(c: &[Rational]) -> Result<Self> {
        if c.len() != E8_DIM {
            return Err(Error::Dimension { expected: E8_DIM, found: c.len() });
        }
        let s = 2 * SO8_DIM;
        let oo = |k: usize| OctOct::from_coords(&c[s + 64 * k..s + 64 * (k + 1)]);
        Ok(Self::new(SoPair::from_coords(&c[..s]), oo(0), oo(1), oo(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.u.is_zero() && self.v.is_zero() && self.w.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.a.scale(c), self.u.scale(c), self.v.scale(c), self.w.scale(c))
    }

    pub fn bracket(&self, other: &Self) -> Self {
        bracket_form(self, other, RealForm::Compact)
    }

    pub fn split_bracket(&self, other: &Self) -> Self {
        bracket_form(self, other, RealForm::Split)
    }

    pub fn bracket_in(&self, other: &Self, form: RealForm) -> Self {
        bracket_form(self, other, form)
    }

    /// `(A, x, y, z) ↦ (Λ(A), y, z, x)`.
    pub fn tau(&self) -> Self {
        Self::new(self.a.lambda(), self.v.clone(), self.w.clone(), self.u.clone())
    }

    /// `(A, u, v, w) ↦ (A, u, −v, −w)`.
    pub fn cartan_involution(&self) -> Self {
        Self::new(self.a.clone(), self.u.clone(), -&self.v, -&self.w)
    }

    /// `8 tr(u xᵀ + v yᵀ + w zᵀ) − tr(A C) − tr(B D)`.
    pub fn scalar_product(&self, other: &Self) -> Rational {
        let oct = self.u.trace_pairing(&other.u) + self.v.trace_pairing(&other.v) + self.w.trace_pairing(&other.w);
        oct * rational::int(8) - self.a.trace_form(&other.a)
    }
}

fn bracket_form(xi: &E8Element, eta: &E8Element, form: RealForm) -> E8Element {
    let four = rational::int(4);
    let eps = match form {
        RealForm::Compact => rational::one(),
        RealForm::Split => rational::int(-1),
    };
    let (a, u, v, w) = (&xi.a, &xi.u, &xi.v, &xi.w);
    let (b, x, y, z) = (&eta.a, &eta.u, &eta.v, &eta.w);

    let spinor = &curly_wedge(v, y).lambda2() + &curly_wedge(w, z).lambda();
    let c = &(&a.bracket(b) - &curly_wedge(u, x).scale(&four)) - &spinor.scale(&(&four * &eps));

    let r_conj = &v.oo_mul(z).conj() - &y.oo_mul(w).conj();
    let r = &(&a.act(x) - &b.act(u)) + &r_conj.scale(&eps);
    let s = &(&a.lambda().act(y) - &b.lambda().act(v)) + &(&w.oo_mul(x).conj() - &z.oo_mul(u).conj());
    let t = &(&a.lambda2().act(z) - &b.lambda2().act(w)) + &(&u.oo_mul(y).conj() - &x.oo_mul(v).conj());
    E8Element::new(c, r, s, t)
}

impl Add for &E8Element {
    type Output = E8Element;
    fn add(self, rhs: &E8Element) -> E8Element {
        E8Element::new(&self.a + &rhs.a, &self.u + &rhs.u, &self.v + &rhs.v, &self.w + &rhs.w)
    }
}

impl Sub for &E8Element {
    type Output = E8Element;
    fn sub(self, rhs: &E8Element) -> E8Element {
        E8Element::new(&self.a - &rhs.a, &self.u - &rhs.u, &self.v - &rhs.v, &self.w - &rhs.w)
    }
}

impl Neg for &E8Element {
    type Output = E8Element;
    fn neg(self) -> E8Element {
        E8Element::new(-&self.a, -&self.u, -&self.v, -&self.w)
    }
}

pub fn e8_bracket(xi: &E8Element, eta: &E8Element) -> E8Element {
    xi.bracket(eta)
}

pub fn e8_split_bracket(xi: &E8Element, eta: &E8Element) -> E8Element {
    xi.split_bracket(eta)
}

pub fn tau(xi: &E8Element) -> E8Element {
    xi.tau()
}

pub fn scalar_product(xi: &E8Element, eta: &E8Element) -> Rational {
    xi.scalar_product(eta)
}

pub fn cartan_involution(xi: &E8Element) -> E8Element {
    xi.cartan_involution()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octoct::So16Element;
    use crate::octonion::Octonion;
    use crate::rational::{int, ratio};
    use crate::so8::{wedge, Skew8};

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn sample(seed: i64) -> E8Element {
        let c: Vec<Rational> =
            (0..E8_DIM as i64).map(|k| ratio((k * 11 + seed * 3) % 7 - 3, 1 + (k * seed) % 2)).collect();
        E8Element::from_coords(&c).unwrap()
    }

    fn oo(k: usize, x: OctOct) -> E8Element {
        let mut parts = [OctOct::zero(), OctOct::zero(), OctOct::zero()];
        parts[k] = x;
        let [u, v, w] = parts;
        E8Element::new(SoPair::zero(), u, v, w)
    }

    fn only_a(a: SoPair) -> E8Element {
        E8Element::new(a, OctOct::zero(), OctOct::zero(), OctOct::zero())
    }

    fn t(i: usize, j: usize) -> OctOct {
        OctOct::tensor(&e(i), &e(j))
    }

    #[test]
    fn bracket_examples() {
        let a = SoPair::new(&Skew8::basis(2) + &Skew8::basis(20), Skew8::basis(5));
        let b = SoPair::new(Skew8::basis(12), &Skew8::basis(5) - &Skew8::basis(27));
        assert_eq!(only_a(a.clone()).bracket(&only_a(b.clone())), only_a(a.bracket(&b)));

        let u = &t(1, 2) + &t(3, 0).scale(&int(2));
        let y = &t(0, 5) - &t(4, 4);
        assert_eq!(oo(0, u.clone()).bracket(&oo(1, y.clone())), oo(2, u.oo_mul(&y).conj()));

        let x = &t(2, 2) + &t(0, 1);
        assert_eq!(oo(0, u.clone()).bracket(&oo(0, x.clone())), only_a(curly_wedge(&u, &x).scale(&int(-4))));

        let v = &t(6, 1) - &t(0, 0);
        assert_eq!(
            oo(1, v.clone()).bracket(&oo(1, y.clone())),
            only_a(curly_wedge(&v, &y).lambda2().scale(&int(-4)))
        );
    }

    #[test]
    fn split_bracket_examples() {
        let a = SoPair::basis(7);
        let b = SoPair::basis(40);
        assert_eq!(only_a(a.clone()).split_bracket(&only_a(b.clone())), only_a(a.bracket(&b)));
        let v = &t(6, 1) - &t(0, 3);
        let y = &t(0, 5) - &t(4, 4);
        assert_eq!(
            oo(1, v.clone()).split_bracket(&oo(1, y.clone())),
            only_a(curly_wedge(&v, &y).lambda2().scale(&int(4)))
        );
        let u = &t(1, 2) + &t(3, 0);
        let z = t(5, 7);
        assert_eq!(oo(0, u.clone()).split_bracket(&oo(2, z.clone())), oo(1, -&z.oo_mul(&u).conj()));
    }

    #[test]
    fn skew_and_bilinear() {
        let (x, y, z) = (sample(1), sample(2), sample(5));
        assert_eq!(x.bracket(&y), -&y.bracket(&x));
        assert!(x.bracket(&x).is_zero());
        let c = ratio(-3, 2);
        assert_eq!((&x.scale(&c) + &z).bracket(&y), &x.bracket(&y).scale(&c) + &z.bracket(&y));
        assert_eq!(x.split_bracket(&y), -&y.split_bracket(&x));
    }

    #[test]
    fn tau_is_automorphism() {
        assert!(E8Element::zero().tau().is_zero());
        let (x, y) = (sample(3), sample(4));
        assert_eq!(x.bracket(&y).tau(), x.tau().bracket(&y.tau()));
        assert_eq!(x.tau().tau().tau(), x);
        assert_eq!(x.tau().scalar_product(&y.tau()), x.scalar_product(&y));
    }

    /// τ moves u (fixed by the Cartan involution) into w (negated by it), so it
    /// cannot preserve the split bracket.
    #[test]
    fn tau_does_not_preserve_split_bracket() {
        let (x, y) = (oo(0, t(0, 0)), oo(0, t(1, 0)));
        assert_ne!(x.split_bracket(&y).tau(), x.tau().split_bracket(&y.tau()));
    }

    #[test]
    fn scalar_product_examples() {
        let xi = oo(0, t(0, 0));
        assert_eq!(xi.scalar_product(&xi), int(8));
        let xi = only_a(SoPair::new(wedge(&e(0), &e(1)), Skew8::zero()));
        assert_eq!(xi.scalar_product(&xi), int(2));
        let (x, y) = (sample(6), sample(7));
        assert_eq!(x.scalar_product(&y), y.scalar_product(&x));
    }

    #[test]
    fn scalar_product_is_ad_invariant_on_samples() {
        let (x, y, z) = (sample(1), sample(8), sample(9));
        let lhs = x.bracket(&z).scalar_product(&y) + z.scalar_product(&x.bracket(&y));
        assert_eq!(lhs, int(0));
    }

    #[test]
    fn cartan_involution_examples() {
        let xi = E8Element::new(SoPair::basis(3), t(1, 1), OctOct::zero(), OctOct::zero());
        assert_eq!(xi.cartan_involution(), xi);
        let eta = E8Element::new(SoPair::zero(), OctOct::zero(), t(2, 3), t(4, 5));
        assert_eq!(eta.cartan_involution(), -&eta);
        let (x, y) = (sample(10), sample(11));
        assert_eq!(x.bracket(&y).cartan_involution(), x.cartan_involution().bracket(&y.cartan_involution()));
        assert_eq!(
            x.split_bracket(&y).cartan_involution(),
            x.cartan_involution().split_bracket(&y.cartan_involution())
        );
    }

    #[test]
    fn fixed_part_is_so16() {
        // ((A,B),u,0,0) ↦ (A⊕B, u) intertwines the brackets.
        let to16 = |x: &E8Element| So16Element::new(x.a.clone(), x.u.clone());
        for (i, j) in [(0, 60), (3, 100), (60, 61), (70, 118), (30, 2)] {
            let (x, y) = (E8Element::basis(i), E8Element::basis(j));
            assert_eq!(to16(&x.bracket(&y)), to16(&x).bracket(&to16(&y)));
        }
    }

    #[test]
    fn labels() {
        let l = E8Element::labels();
        assert_eq!(l.len(), 248);
        assert_eq!(l[0], "so8a:e0^e1");
        assert_eq!(l[28], "so8b:e0^e1");
        assert_eq!(l[56 + 29], "u:e3@e5");
        assert_eq!(l[247], "w:e7@e7");
    }
}
