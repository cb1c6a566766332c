//! One-variable polynomials with exact integer coefficients.
//!
//! [`IntPoly`] stores coefficients in ascending degree order with trailing
//! zeros trimmed, so the zero polynomial is the empty sequence.
//! [`LaurentPoly`] additionally carries the degree of its first coefficient.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("cannot twist a polynomial of degree {degree} by t^{shift}: exponent would be negative")]
    TwistDegree { degree: usize, shift: usize },
    #[error("Laurent polynomial has negative exponent {0}")]
    NegativeExponent(i64),
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `self += c * x^k * other`, without intermediate allocation of the product.
    pub fn add_scaled_shifted(&mut self, c: &BigInt, k: usize, other: &IntPoly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = k + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            self.coeffs[k + i] += c * a;
        }
        self.trim();
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    /// Returns `t^d * P(t^-2)`: the coefficient of `q^m` lands in degree `d - 2m`.
    pub fn twist_kl(&self, d: usize) -> Result<IntPoly, PolyError> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if 2 * deg > d {
            return Err(PolyError::TwistDegree { degree: deg, shift: d });
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            coeffs[d - 2 * m] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.coeffs.clone())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn write_poly(
    f: &mut fmt::Formatter<'_>,
    var: char,
    terms: impl Iterator<Item = (i64, BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let show_coeff = !abs.is_one() || k == 0;
        if show_coeff {
            write!(f, "{abs}")?;
        }
        match k {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Renders a polynomial in a chosen variable name.
pub struct InVar<'a, P>(pub &'a P, pub char);

impl fmt::Display for InVar<'_, IntPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(
            f,
            self.1,
            self.0.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c.clone())),
        )
    }
}

impl fmt::Display for InVar<'_, LaurentPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.1, self.0.terms().map(|(k, c)| (k, c.clone())))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        InVar(self, 'q').fmt(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled_shifted(&BigInt::one(), 0, rhs);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled_shifted(&-BigInt::one(), 0, rhs);
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(IntPoly, Add add, Sub sub, Mul mul);
forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntPoly", 1)?;
        st.serialize_field("coeffs", &JsonInts(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            coeffs: Vec<JsonInt>,
            #[serde(rename = "minDeg", default)]
            min_deg: Option<i64>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.min_deg.is_some_and(|m| m != 0) {
            return Err(de::Error::custom("IntPoly must not carry a nonzero minDeg"));
        }
        Ok(IntPoly::from_coeffs(raw.coeffs.into_iter().map(|c| c.0).collect()))
    }
}

/// Laurent polynomial `Σ coeffs[k] x^(min_deg + k)`.
///
/// Normalized so that the first and last stored coefficients are nonzero; the
/// zero polynomial has no coefficients and `min_deg == 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_deg: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_deg, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_deg: i64, coeffs: &[i64]) -> Self {
        Self::new(min_deg, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::new(k, vec![c.into()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn max_deg(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_deg + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.min_deg {
            return BigInt::zero();
        }
        self.coeffs
            .get((k - self.min_deg) as usize)
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.min_deg + k as i64, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_deg, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_deg: self.min_deg + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `x -> x^-1`.
    pub fn bar(&self) -> Self {
        match self.max_deg() {
            None => Self::zero(),
            Some(top) => Self::new(-top, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Substitutes `x -> x^m` for a nonzero integer `m`.
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m != 0, "substitution x -> x^0 is not a ring map on Laurent polynomials");
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out += &Self::monomial(c.clone(), k * m);
        }
        out
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn has_negative_exponent(&self) -> bool {
        !self.is_zero() && self.min_deg < 0
    }

    /// Value at `n`, or `None` when a negative exponent makes it non-integral.
    pub fn eval_i64(&self, n: i64) -> Option<BigInt> {
        if self.has_negative_exponent() && n != 1 && n != -1 {
            return None;
        }
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        let n = BigInt::from(n);
        let mut acc = BigInt::zero();
        for (k, c) in self.terms() {
            let p = if k >= 0 {
                num_traits::pow(n.clone(), k as usize)
            } else {
                // only reached for n = ±1
                num_traits::pow(n.clone(), (-k) as usize)
            };
            acc += c * p;
        }
        Some(acc)
    }

    pub fn to_int_poly(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.min_deg < 0 {
            return Err(PolyError::NegativeExponent(self.min_deg));
        }
        let mut coeffs = vec![BigInt::zero(); self.min_deg as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(IntPoly::from_coeffs(coeffs))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_deg = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.min_deg += lead as i64;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        InVar(self, 't').fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.max_deg().unwrap().max(rhs.max_deg().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (src, off) in [(&self.coeffs, self.min_deg), (&rhs.coeffs, rhs.min_deg)] {
            for (k, c) in src.iter().enumerate() {
                coeffs[(off - lo) as usize + k] += c;
            }
        }
        *self = LaurentPoly::new(lo, coeffs);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &-rhs;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_deg + rhs.min_deg, coeffs)
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_laurent()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("minDeg", &self.min_deg)?;
        st.serialize_field("coeffs", &JsonInts(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(rename = "minDeg", default)]
            min_deg: i64,
            coeffs: Vec<JsonInt>,
        }
        let raw = Raw::deserialize(d)?;
        Ok(LaurentPoly::new(
            raw.min_deg,
            raw.coeffs.into_iter().map(|c| c.0).collect(),
        ))
    }
}

/// Integers are written as JSON numbers when they fit in `i64`, and as decimal
/// strings otherwise; both forms are accepted on input.
struct JsonInts<'a>(&'a [BigInt]);

impl Serialize for JsonInts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(JsonIntRef))
    }
}

pub(crate) struct JsonIntRef<'a>(pub &'a BigInt);

impl Serialize for JsonIntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) struct JsonInt(pub BigInt);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            I(i64),
            U(u64),
            S(String),
        }
        match Repr::deserialize(d)? {
            Repr::I(v) => Ok(JsonInt(v.into())),
            Repr::U(v) => Ok(JsonInt(v.into())),
            Repr::S(s) => s
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|e| de::Error::custom(format!("bad integer {s:?}: {e}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert!((&p(&[3, 0, -2]) + &-&p(&[3, 0, -2])).is_zero());
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn eval_at_minus_one() {
        assert_eq!(p(&[0, 1]).eval_i64(-1), BigInt::from(-1));
        assert_eq!(p(&[1]).eval_i64(-1), BigInt::from(1));
        assert_eq!(p(&[1, 0, 1]).eval_i64(-1), BigInt::from(2));
    }

    #[test]
    fn twist() {
        assert_eq!(p(&[1]).twist_kl(0).unwrap(), p(&[1]));
        assert_eq!(p(&[1]).twist_kl(3).unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(p(&[1, 1]).twist_kl(4).unwrap(), p(&[0, 0, 1, 0, 1]));
        assert!(IntPoly::zero().twist_kl(0).unwrap().is_zero());
        assert_eq!(
            p(&[1, 1]).twist_kl(1),
            Err(PolyError::TwistDegree { degree: 1, shift: 1 })
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::monomial(1, 1).bar(),
            LaurentPoly::monomial(1, -1)
        );
        assert_eq!(
            LaurentPoly::from_i64s(0, &[-1, 1]).bar(),
            LaurentPoly::from_i64s(-1, &[1, -1])
        );
    }

    #[test]
    fn laurent_normalizes_leading_zeros() {
        let l = LaurentPoly::from_i64s(-3, &[0, 0, 5, 0]);
        assert_eq!(l.min_deg(), -1);
        assert_eq!(l.coeffs(), &[BigInt::from(5)]);
        assert_eq!(LaurentPoly::from_i64s(7, &[0]), LaurentPoly::zero());
    }

    #[test]
    fn json_forms() {
        let a = p(&[1, 0, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"coeffs":[1,0,1]}"#);
        let l = a.to_laurent();
        assert_eq!(
            serde_json::to_string(&l).unwrap(),
            r#"{"minDeg":0,"coeffs":[1,0,1]}"#
        );
        let big = IntPoly::constant(BigInt::from(u64::MAX) * 4);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), big);
        let back: LaurentPoly = serde_json::from_str(r#"{"minDeg":-2,"coeffs":[1,0]}"#).unwrap();
        assert_eq!(back, LaurentPoly::monomial(1, -2));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1]).to_string(), "1 + q");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "-2q + q^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_i64s(-1, &[1, -1]).to_string(), "t^-1 - 1");
    }
}
