//! Exact scalars: rationals and elements of a quadratic field ℚ(√d).
//!
//! Every coordinate in the crate is a [`QExt`]. A value is either purely
//! rational or `a + b·√d` with `b ≠ 0` and `d` a non-square integer. Negative
//! radicands are allowed; `√d` then denotes `i·√|d|`, which is what chords of
//! an imaginary conic need.
//!
//! Two radicands describe the same field when their product is a perfect
//! square. Radicands are reduced by extracting square factors, exhaustively
//! for desk-scale integers and by small-prime trial division beyond that, so
//! field identity is decided semantically rather than by comparing tags.

mod biquad;

pub use biquad::Biquad;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default magnitude bound for [`sqfree_normalize`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 63;

/// Integers up to this size are reduced exhaustively inside [`sqrt_ext`].
const EXHAUSTIVE_LIMIT: u64 = 1 << 40;

/// Largest trial divisor used when reducing big radicands.
const SMALL_PRIME_LIMIT: u32 = 1000;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`; the message names the offending token.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| format!("invalid rational \"{s}\""))?;
    let den: BigInt = d.parse().map_err(|_| format!("invalid rational \"{s}\""))?;
    if den.is_zero() {
        return Err(format!("denominator zero in \"{s}\""));
    }
    Ok(Rational::new(num, den))
}

/// Splits `n > 0` as `s²·r`. With `exhaustive`, trial division runs until the
/// cube of the divisor exceeds the unfactored rest, which leaves at most two
/// prime factors and makes `r` exactly square-free.
fn square_split(n: &BigUint, exhaustive: bool) -> (BigUint, BigUint) {
    if let Some(small) = n.to_u64() {
        if exhaustive || small <= EXHAUSTIVE_LIMIT {
            let (s, r) = square_split_u64(small);
            return (BigUint::from(s), BigUint::from(r));
        }
    }
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let mut p = 2u32;
    while p <= SMALL_PRIME_LIMIT {
        let mut e = 0u32;
        while rem_u32(&rest, p) == 0 {
            rest /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let sq = rest.sqrt();
    if &sq * &sq == rest {
        root *= sq;
    } else {
        free *= rest;
    }
    (root, free)
}

fn rem_u32(n: &BigUint, p: u32) -> u32 {
    n.iter_u32_digits().rev().fold(0u64, |r, d| ((r << 32) | d as u64) % p as u64) as u32
}

fn square_split_u64(n: u64) -> (u64, u64) {
    let mut rest = n;
    let mut root = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let sq = rest.sqrt();
    if sq * sq == rest {
        root *= sq;
    } else {
        free *= rest;
    }
    (root, free)
}

/// Writes `q = c²·d` with `d` a square-free integer, using the default bound.
pub fn sqfree_normalize(q: &Rational) -> Result<(BigInt, Rational)> {
    sqfree_normalize_bounded(q, &BigInt::from(DEFAULT_FACTOR_BOUND))
}

/// As [`sqfree_normalize`], rejecting inputs whose `|num·den|` exceeds `bound`.
pub fn sqfree_normalize_bounded(q: &Rational, bound: &BigInt) -> Result<(BigInt, Rational)> {
    if q.is_zero() {
        return Err(Error::ZeroRadicand);
    }
    // q = n/m = (n·m)/m²
    let nm = q.numer() * q.denom();
    if nm.abs() > *bound {
        return Err(Error::RadicandTooLarge(nm.to_string()));
    }
    let (root, free) = square_split(nm.magnitude(), true);
    let d = BigInt::from_biguint(nm.sign(), free);
    let c = Rational::new(BigInt::from(root), q.denom().clone());
    Ok((d, c))
}

/// Reduces a nonzero integer to `s²·r`, exactly when small and partially
/// otherwise. `r` carries the sign.
fn reduce_radicand(n: &BigInt) -> (BigInt, BigInt) {
    let (root, free) = square_split(n.magnitude(), false);
    (BigInt::from(root), BigInt::from_biguint(n.sign(), free))
}

/// Square root of a rational as an element of ℚ(√d).
pub fn sqrt_ext(q: &Rational) -> QExt {
    if q.is_zero() {
        return QExt::zero();
    }
    let nm = q.numer() * q.denom();
    let (root, free) = reduce_radicand(&nm);
    let c = Rational::new(root, q.denom().clone());
    if free.is_one() {
        QExt::rational(c)
    } else {
        QExt {
            a: Rational::zero(),
            b: c,
            d: Some(free),
        }
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    match (a.magnitude().to_u128(), b.magnitude().to_u128()) {
        (Some(x), Some(y)) => BigInt::from(x.gcd(&y)),
        _ => a.gcd(b),
    }
}

/// Products and sums of reduced fractions, cross-reducing before
/// multiplying so that `Ratio` never has to reduce a full product.
pub(crate) fn qmul(x: &Rational, y: &Rational) -> Rational {
    if x.is_zero() || y.is_zero() {
        return Rational::zero();
    }
    if x.denom().is_one() && y.denom().is_one() {
        return Rational::from_integer(x.numer() * y.numer());
    }
    let g1 = gcd(x.numer(), y.denom());
    let g2 = gcd(y.numer(), x.denom());
    let num = (x.numer() / &g1) * (y.numer() / &g2);
    let den = (x.denom() / &g2) * (y.denom() / &g1);
    Rational::new_raw(num, den)
}

pub(crate) fn qdiv(x: &Rational, y: &Rational) -> Rational {
    qmul(x, &y.recip())
}

pub(crate) fn qadd(x: &Rational, y: &Rational) -> Rational {
    if y.is_zero() {
        return x.clone();
    }
    if x.is_zero() {
        return y.clone();
    }
    let (b, d) = (x.denom(), y.denom());
    if b.is_one() && d.is_one() {
        return Rational::from_integer(x.numer() + y.numer());
    }
    let g = gcd(b, d);
    if g.is_one() {
        return Rational::new_raw(x.numer() * d + y.numer() * b, b * d);
    }
    let (b1, d1) = (b / &g, d / &g);
    let num = x.numer() * &d1 + y.numer() * &b1;
    if num.is_zero() {
        return Rational::zero();
    }
    let g2 = gcd(&num, &g);
    Rational::new_raw(num / &g2, b1 * (d / &g2))
}

pub(crate) fn qsub(x: &Rational, y: &Rational) -> Rational {
    qadd(x, &-y)
}

/// Factor `f` with `√d2 = f·√d1`, when both radicands span the same field.
pub(crate) fn compat_factor(d1: &BigInt, d2: &BigInt) -> Option<Rational> {
    if d1 == d2 {
        return Some(Rational::one());
    }
    let prod = d1 * d2;
    if prod.sign() != Sign::Plus {
        return None;
    }
    let k = prod.sqrt();
    if &k * &k != prod {
        return None;
    }
    Some(Rational::new(k, d1.abs()))
}

/// Whether two radicands describe the same quadratic field.
pub fn same_field(d1: &BigInt, d2: &BigInt) -> bool {
    compat_factor(d1, d2).is_some()
}

/// Element `a + b·√d` of a quadratic extension of ℚ.
#[derive(Clone, Debug)]
pub struct QExt {
    a: Rational,
    b: Rational,
    // None iff b == 0
    d: Option<BigInt>,
}

/// The four field operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Fallible field arithmetic.
pub fn arith(x: &QExt, y: &QExt, op: ArithOp) -> Result<QExt> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

impl QExt {
    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(a: Rational) -> Self {
        QExt {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(int(n))
    }

    /// `a + b·√d`; the radicand is reduced and the value collapses to a
    /// rational when `b·√d` is rational.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroRadicand);
        }
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        let (root, free) = reduce_radicand(&d);
        let b = b * Rational::from_integer(root);
        if free.is_one() {
            Ok(Self::rational(a + b))
        } else {
            Ok(QExt {
                a,
                b,
                d: Some(free),
            })
        }
    }

    /// `a + b·√d` for a radicand already in reduced form.
    pub(crate) fn from_reduced(a: Rational, b: Rational, d: BigInt) -> Self {
        Self::canon(a, b, Some(d))
    }

    /// Multiplies both components by an integer.
    pub(crate) fn scale(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        Self::canon(qmul(&self.a, &k), qmul(&self.b, &k), self.d.clone())
    }

    /// Least common multiple of the denominators of both components.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    fn canon(a: Rational, b: Rational, d: Option<BigInt>) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QExt { a, b, d }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        self.d.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.d.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.d.is_none()
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        if self.d.is_none() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Whether the value is a real number.
    pub fn is_real(&self) -> bool {
        self.d.as_ref().is_none_or(|d| d.sign() == Sign::Plus)
    }

    /// Galois conjugate `a − b·√d`.
    pub fn conj(&self) -> Self {
        QExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    fn align(&self, o: &Self) -> Result<(Option<BigInt>, Rational)> {
        match (&self.d, &o.d) {
            (_, None) => Ok((self.d.clone(), o.b.clone())),
            (None, Some(d)) => Ok((Some(d.clone()), o.b.clone())),
            (Some(d1), Some(d2)) => match compat_factor(d1, d2) {
                Some(f) => Ok((Some(d1.clone()), &o.b * f)),
                None => Err(Error::MixedRadicands(d1.to_string(), d2.to_string())),
            },
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let (d, ob) = self.align(o)?;
        Ok(Self::canon(qadd(&self.a, &o.a), qadd(&self.b, &ob), d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        let (d, ob) = self.align(o)?;
        Ok(Self::canon(qsub(&self.a, &o.a), qsub(&self.b, &ob), d))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let (d, ob) = self.align(o)?;
        let dd = d
            .as_ref()
            .map_or_else(Rational::zero, |d| Rational::from_integer(d.clone()));
        let a = qadd(&qmul(&self.a, &o.a), &qmul(&qmul(&self.b, &ob), &dd));
        let b = qadd(&qmul(&self.a, &ob), &qmul(&o.a, &self.b));
        Ok(Self::canon(a, b, d))
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.d {
            None => Ok(Self::rational(self.a.recip())),
            Some(d) => {
                let dq = Rational::from_integer(d.clone());
                let den = qsub(&qmul(&self.a, &self.a), &qmul(&qmul(&self.b, &self.b), &dq));
                Ok(Self::canon(qdiv(&self.a, &den), qdiv(&-&self.b, &den), self.d.clone()))
            }
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        // align first so a radicand mismatch is reported before a zero divisor
        self.align(o)?;
        self.try_mul(&o.try_inv()?)
    }

    /// Sign of a real value; `None` for non-real values.
    pub fn signum(&self) -> Option<Ordering> {
        let sa = self.a.cmp(&Rational::zero());
        let d = match &self.d {
            None => return Some(sa),
            Some(d) if d.sign() == Sign::Minus => return None,
            Some(d) => d,
        };
        let sb = self.b.cmp(&Rational::zero());
        if sa == Ordering::Equal || sa == sb {
            return Some(sb);
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rational::from_integer(d.clone());
        Some(if lhs > rhs { sa } else { sb })
    }

    pub fn to_f64(&self) -> Option<f64> {
        let a = self.a.to_f64()?;
        match &self.d {
            None => Some(a),
            Some(d) if d.sign() == Sign::Plus => Some(a + self.b.to_f64()? * d.to_f64()?.sqrt()),
            Some(_) => None,
        }
    }

    /// Real and imaginary parts as floats.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        match &self.d {
            None => (a, 0.0),
            Some(d) => {
                let b = self.b.to_f64().unwrap_or(f64::NAN);
                let r = d.abs().to_f64().unwrap_or(f64::NAN).sqrt();
                if d.sign() == Sign::Plus {
                    (a + b * r, 0.0)
                } else {
                    (a, b * r)
                }
            }
        }
    }
}

impl PartialEq for QExt {
    fn eq(&self, o: &Self) -> bool {
        if self.a != o.a {
            return false;
        }
        match (&self.d, &o.d) {
            (None, None) => true,
            (Some(d1), Some(d2)) => match compat_factor(d1, d2) {
                Some(f) => self.b == &o.b * f,
                None => false,
            },
            _ => false,
        }
    }
}

impl Eq for QExt {}

impl PartialEq<Rational> for QExt {
    fn eq(&self, o: &Rational) -> bool {
        self.d.is_none() && &self.a == o
    }
}

impl From<Rational> for QExt {
    fn from(r: Rational) -> Self {
        QExt::rational(r)
    }
}

impl From<i64> for QExt {
    fn from(n: i64) -> Self {
        QExt::int(n)
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = &self.d else {
            return write!(f, "{}", format_rational(&self.a));
        };
        let coeff = self.b.abs();
        let rad = if coeff.is_one() {
            format!("√{d}")
        } else {
            format!("{}·√{d}", format_rational(&coeff))
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{rad}"),
            (true, true) => write!(f, "-{rad}"),
            (false, false) => write!(f, "{} + {rad}", format_rational(&self.a)),
            (false, true) => write!(f, "{} - {rad}", format_rational(&self.a)),
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QExt> for &QExt {
            type Output = QExt;
            /// Panics when the operands lie in different quadratic fields;
            /// see [`arith`] for the fallible form.
            fn $m(self, o: &QExt) -> QExt {
                match self.$try(o) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<QExt> for QExt {
            type Output = QExt;
            fn $m(self, o: QExt) -> QExt {
                (&self).$m(&o)
            }
        }
        impl $tr<&QExt> for QExt {
            type Output = QExt;
            fn $m(self, o: &QExt) -> QExt {
                (&self).$m(o)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);

impl Neg for &QExt {
    type Output = QExt;
    fn neg(self) -> QExt {
        QExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl Neg for QExt {
    type Output = QExt;
    fn neg(self) -> QExt {
        -&self
    }
}

/// Minimal field interface shared by [`QExt`] and [`Biquad`], used by the
/// generic homogeneous-coordinate helpers.
pub trait FieldOps: Clone + PartialEq + fmt::Debug {
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn finv(&self) -> Self;
    fn fzero(&self) -> bool;
    /// A rational constant in the same field as `self`.
    fn lift_rational(&self, r: Rational) -> Self;
    /// Back to a single quadratic field, when the value lies in one.
    fn lower(&self) -> Option<QExt>;
}

impl FieldOps for QExt {
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
    fn fzero(&self) -> bool {
        self.is_zero()
    }
    fn lift_rational(&self, r: Rational) -> Self {
        QExt::rational(r)
    }
    fn lower(&self) -> Option<QExt> {
        Some(self.clone())
    }
}

/// The radicand shared by a set of values, if they all lie in one field.
pub fn common_radicand<'a, I>(values: I) -> Result<Option<BigInt>>
where
    I: IntoIterator<Item = &'a QExt>,
{
    let mut found: Option<BigInt> = None;
    for v in values {
        if let Some(d) = v.radicand() {
            match &found {
                None => found = Some(d.clone()),
                Some(f) if same_field(f, d) => {}
                Some(f) => return Err(Error::MixedRadicands(f.to_string(), d.to_string())),
            }
        }
    }
    Ok(found)
}

/// Distinct fields among a set of values (at most `limit` are collected).
pub(crate) fn distinct_radicands<'a, I>(values: I) -> Vec<BigInt>
where
    I: IntoIterator<Item = &'a QExt>,
{
    let mut out: Vec<BigInt> = Vec::new();
    for v in values {
        if let Some(d) = v.radicand() {
            if !out.iter().any(|f| same_field(f, d)) {
                out.push(d.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe(a: i64, b: i64, d: i64) -> QExt {
        QExt::new(int(a), int(b), BigInt::from(d)).unwrap()
    }

    #[test]
    fn conjugate_product_is_rational() {
        let p = qe(1, 1, 3) * qe(1, -1, 3);
        assert!(p.is_rational());
        assert_eq!(p, int(-2));
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = qe(0, 1, -1);
        assert_eq!(&i * &i, int(-1));
    }

    #[test]
    fn componentwise_add() {
        assert_eq!(qe(1, 2, 5) + qe(3, 1, 5), qe(4, 3, 5));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(qe(2, 3, 2).conj(), qe(2, -3, 2));
        assert_eq!(QExt::int(5).conj(), int(5));
        assert_eq!(qe(0, 1, -1).conj(), qe(0, -1, -1));
    }

    #[test]
    fn sqfree_examples() {
        assert_eq!(
            sqfree_normalize(&int(12)).unwrap(),
            (BigInt::from(3), int(2))
        );
        let (d, c) = sqfree_normalize(&rat(3, 4)).unwrap();
        assert_eq!(&c * &c * Rational::from_integer(d.clone()), rat(3, 4));
        assert_eq!((d, c), (BigInt::from(3), rat(1, 2)));
        let (d, c) = sqfree_normalize(&rat(-1, 2)).unwrap();
        assert_eq!(&c * &c * Rational::from_integer(d.clone()), rat(-1, 2));
        assert_eq!((d, c), (BigInt::from(-2), rat(1, 2)));
    }

    #[test]
    fn sqfree_errors() {
        assert_eq!(sqfree_normalize(&int(0)), Err(Error::ZeroRadicand));
        let big = Rational::from_integer(BigInt::from(u64::MAX) * 4);
        assert!(matches!(
            sqfree_normalize(&big),
            Err(Error::RadicandTooLarge(_))
        ));
        assert!(sqfree_normalize_bounded(&int(1000), &BigInt::from(10)).is_err());
    }

    #[test]
    fn sqfree_handles_two_large_primes() {
        // 1000003 · 1000033 and a square of a large prime
        let pq = Rational::from_integer(BigInt::from(1_000_003u64 * 1_000_033));
        assert_eq!(
            sqfree_normalize(&pq).unwrap().0,
            BigInt::from(1_000_003u64 * 1_000_033)
        );
        let p2 = Rational::from_integer(BigInt::from(1_000_003u64 * 1_000_003 * 6));
        assert_eq!(
            sqfree_normalize(&p2).unwrap(),
            (BigInt::from(6), int(1_000_003))
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_ext(&int(9)), int(3));
        let r = sqrt_ext(&rat(3, 4));
        assert_eq!(r, QExt::new(int(0), rat(1, 2), BigInt::from(3)).unwrap());
        assert_eq!(&r * &r, rat(3, 4));
        let r = sqrt_ext(&int(-2));
        assert_eq!(r.radicand(), Some(&BigInt::from(-2)));
        assert_eq!(&r * &r, int(-2));
        assert!(sqrt_ext(&int(0)).is_zero());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let x = qe(0, 1, 2);
        let y = qe(0, 1, 3);
        assert!(matches!(
            arith(&x, &y, ArithOp::Add),
            Err(Error::MixedRadicands(..))
        ));
        assert!(matches!(
            arith(&x, &y, ArithOp::Div),
            Err(Error::MixedRadicands(..))
        ));
        assert_eq!(
            arith(&x, &QExt::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn equivalent_radicands_align() {
        // √8 = 2√2, so the fields agree even with an unreduced tag
        let x = QExt {
            a: int(0),
            b: int(1),
            d: Some(BigInt::from(8)),
        };
        let y = qe(0, 2, 2);
        assert_eq!(x, y);
        assert_eq!(x.try_sub(&y).unwrap(), int(0));
        // √-1 · √-4 = -2
        let i = qe(0, 1, -1);
        let j = QExt {
            a: int(0),
            b: int(1),
            d: Some(BigInt::from(-4)),
        };
        assert_eq!(i.try_mul(&j).unwrap(), int(-2));
    }

    #[test]
    fn canonical_rational_collapse() {
        let x = qe(3, 2, 5) - qe(0, 2, 5);
        assert!(x.is_rational());
        assert_eq!(x, int(3));
        assert_eq!(qe(1, 2, 4), int(5));
    }

    #[test]
    fn signs_of_real_values() {
        assert_eq!(qe(2, -1, 3).signum(), Some(Ordering::Greater));
        assert_eq!(qe(1, -1, 3).signum(), Some(Ordering::Less));
        assert_eq!(qe(-2, 1, 5).signum(), Some(Ordering::Greater));
        assert_eq!(qe(0, 1, -1).signum(), None);
        assert!((qe(2, -1, 3).to_f64().unwrap() - (2.0 - 3f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").unwrap_err().contains("1/0"));
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(qe(2, -1, 3).to_string(), "2 - √3");
    }
}
