//! Exact scalars.
//!
//! Every coefficient in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The textual form
//! used on every wire format is `"p/q"`, or just `"p"` for integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Converts to the nearest `f64`. Exact for the dyadic values the algebras produce.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Huge numerator/denominator: fall back to a scaled division.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Integer numerators over one shared denominator, when everything fits in
/// 32 bits. Sums of a few thousand pairwise products then stay inside `i128`.
pub fn scaled_integers<'a>(values: impl Iterator<Item = &'a Rational> + Clone) -> Option<(Vec<i64>, i64)> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    const LIMIT: i64 = 1 << 31;
    let small = |n: Option<i64>| n.filter(|n| n.abs() <= LIMIT);
    if values.clone().all(|v| v.denom().is_one()) {
        let nums = values.map(|v| small(v.numer().to_i64())).collect::<Option<Vec<_>>>()?;
        return Some((nums, 1));
    }
    let mut denom = BigInt::one();
    for v in values.clone() {
        if !v.denom().is_one() {
            denom = denom.lcm(v.denom());
        }
    }
    let d = denom.to_i64().filter(|d| *d <= LIMIT)?;
    let nums = values
        .map(|v| if v.is_zero() { Some(0) } else { small((v.numer() * (&denom / v.denom())).to_i64()) })
        .collect::<Option<Vec<_>>>()?;
    Some((nums, d))
}

/// Whether an integer-scaled product is worth its fixed conversion cost.
pub fn dense_enough<'a>(a: impl Iterator<Item = &'a Rational>, b: impl Iterator<Item = &'a Rational>) -> bool {
    let na = a.filter(|v| !v.is_zero()).count();
    let nb = b.filter(|v| !v.is_zero()).count();
    na * nb > 256
}

/// `n / d` from an `i128` accumulator.
pub fn from_scaled(n: i128, d: i128) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Parses a JSON scalar: either a rational string or an integer number.
pub fn from_json(v: &serde_json::Value) -> Result<Rational, Error> {
    match v {
        serde_json::Value::String(s) => parse(s),
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(int(i)),
            None => Err(Error::Parse(format!(
                "non-integer JSON number {n}; write rationals as \"p/q\" strings"
            ))),
        },
        other => Err(Error::Parse(format!("expected a rational string, found {other}"))),
    }
}

pub fn to_json(r: &Rational) -> serde_json::Value {
    serde_json::Value::String(format(r))
}
