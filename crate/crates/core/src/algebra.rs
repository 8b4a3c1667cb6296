//! The four algebras the crate can tabulate, behind one coordinate-level
//! interface used by the structure-table builder and the CLI.

use std::fmt;
use std::str::FromStr;

use crate::e8::{E8Element, RealForm, E8_DIM};
use crate::error::{Error, Result};
use crate::f4::{F4Element, F4_DIM};
use crate::matrix::DenseMatrix;
use crate::octoct::{So16Element, SO16_DIM};
use crate::rational::Rational;
use crate::so8::wedge_pairs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    F4,
    E8,
    E8Split,
    So16,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::F4, Algebra::E8, Algebra::E8Split, Algebra::So16];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::F4 => "f4",
            Algebra::E8 => "e8",
            Algebra::E8Split => "e8-split",
            Algebra::So16 => "so16",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::F4 => F4_DIM,
            Algebra::E8 | Algebra::E8Split => E8_DIM,
            Algebra::So16 => SO16_DIM,
        }
    }

    pub fn basis_labels(self) -> Vec<String> {
        match self {
            Algebra::F4 => F4Element::labels(),
            Algebra::E8 | Algebra::E8Split => E8Element::labels(),
            Algebra::So16 => {
                let mut out = Vec::with_capacity(SO16_DIM);
                for part in ["so8a", "so8b"] {
                    out.extend(wedge_pairs().iter().map(|(i, j)| format!("{part}:e{i}^e{j}")));
                }
                out.extend((0..64).map(|k| format!("x:e{}@e{}", k / 8, k % 8)));
                out
            }
        }
    }

    /// Human-readable description of the coordinate layout.
    pub fn layout(self) -> &'static str {
        match self {
            Algebra::F4 => "so(8) wedges [0,28) | u: Ca [28,36) | v: Ca [36,44) | w: Ca [44,52)",
            Algebra::E8 | Algebra::E8Split => {
                "so(8)a wedges [0,28) | so(8)b wedges [28,56) | u: Ca⊗Ca [56,120) | v: Ca⊗Ca [120,184) | w: Ca⊗Ca [184,248)"
            }
            Algebra::So16 => "so(8)a wedges [0,28) | so(8)b wedges [28,56) | x: R(8) [56,120)",
        }
    }

    /// Gram matrix of the invariant scalar product on the e8 model space,
    /// `8 tr(ux^t + vy^t + wz^t) - tr(AC) - tr(BD)`.
    pub fn scalar_product_matrix(self) -> Option<DenseMatrix> {
        match self {
            Algebra::E8 | Algebra::E8Split => {
                let basis: Vec<E8Element> = (0..E8_DIM).map(E8Element::basis).collect();
                Some(DenseMatrix::from_fn(E8_DIM, E8_DIM, |i, j| basis[i].scalar_product(&basis[j])))
            }
            _ => None,
        }
    }

    /// Direct evaluation of the bracket formula on coordinate vectors.
    pub fn bracket_coords(self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        Ok(match self {
            Algebra::F4 => F4Element::from_coords(x)?.bracket(&F4Element::from_coords(y)?).coords(),
            Algebra::E8 => E8Element::from_coords(x)?.bracket_in(&E8Element::from_coords(y)?, RealForm::Compact).coords(),
            Algebra::E8Split => {
                E8Element::from_coords(x)?.bracket_in(&E8Element::from_coords(y)?, RealForm::Split).coords()
            }
            Algebra::So16 => So16Element::from_coords(x)?.bracket(&So16Element::from_coords(y)?).coords(),
        })
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f4" => Ok(Algebra::F4),
            "e8" => Ok(Algebra::E8),
            "e8-split" | "e8_split" | "e8(8)" => Ok(Algebra::E8Split),
            "so16" => Ok(Algebra::So16),
            other => Err(Error::Parse(format!("unknown algebra {other:?} (expected f4, e8, e8-split or so16)"))),
        }
    }
}
