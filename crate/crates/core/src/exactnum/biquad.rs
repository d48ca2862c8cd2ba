//! Elements of ℚ(√d1, √d2), with basis 1, r1 = √d1, r2 = √d2, r1·r2.
//!
//! Used where two chords of a conic with unrelated discriminants meet, such as
//! the chord construction of midpoints. Results are brought back to a single
//! quadratic field with [`Biquad::to_qext`].

use std::cell::RefCell;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::{compat_factor, qadd, qmul, qsub, reduce_radicand, FieldOps, QExt, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Biquad {
    d1: BigInt,
    d2: BigInt,
    c: [Rational; 4],
}

impl Biquad {
    /// Requires `d1`, `d2` to be non-squares spanning different fields.
    pub fn from_rational(d1: &BigInt, d2: &BigInt, r: Rational) -> Self {
        Biquad {
            d1: d1.clone(),
            d2: d2.clone(),
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    fn d1q(&self) -> Rational {
        Rational::from_integer(self.d1.clone())
    }

    fn d2q(&self) -> Rational {
        Rational::from_integer(self.d2.clone())
    }

    /// `r1·r2 = s·√(d1·d2)` with `s = −1` exactly when both radicands are negative.
    fn product_sign(&self) -> Rational {
        if self.d1.sign() == Sign::Minus && self.d2.sign() == Sign::Minus {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// Embeds a value of ℚ, ℚ(√d1), ℚ(√d2) or ℚ(√(d1·d2)).
    pub fn embed(x: &QExt, d1: &BigInt, d2: &BigInt) -> Option<Self> {
        let mut out = Self::from_rational(d1, d2, x.rational_part().clone());
        let Some(e) = x.radicand() else {
            return Some(out);
        };
        let b = x.radical_coeff();
        // √e = f·√d  ⇒  b·√e = b·f·√d
        if let Some(f) = compat_factor(d1, e) {
            out.c[1] = b * f;
        } else if let Some(f) = compat_factor(d2, e) {
            out.c[2] = b * f;
        } else {
            let d12 = d1 * d2;
            let f = compat_factor(&d12, e)?;
            out.c[3] = b * f * out.product_sign();
        }
        Some(out)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    fn with(&self, c: [Rational; 4]) -> Self {
        Biquad {
            d1: self.d1.clone(),
            d2: self.d2.clone(),
            c,
        }
    }

    /// Flip of `r1` (`which = 1`), of `r2` (`which = 2`), or of both.
    pub fn conjugate(&self, which: u8) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        match which {
            1 => self.with([c0, -c1, c2, -c3]),
            2 => self.with([c0, c1, -c2, -c3]),
            _ => self.with([c0, -c1, -c2, c3]),
        }
    }

    /// Projects back to a single quadratic field when at most one of the
    /// three radical components is nonzero.
    pub fn to_qext(&self) -> Option<QExt> {
        let [c0, c1, c2, c3] = &self.c;
        let nz = [c1, c2, c3].iter().filter(|c| !c.is_zero()).count();
        if nz > 1 {
            return None;
        }
        if !c1.is_zero() {
            return Some(QExt::from_reduced(c0.clone(), c1.clone(), self.d1.clone()));
        }
        if !c2.is_zero() {
            return Some(QExt::from_reduced(c0.clone(), c2.clone(), self.d2.clone()));
        }
        if !c3.is_zero() {
            let (root, free) = reduced_product(&self.d1, &self.d2);
            let b = c3 * self.product_sign() * Rational::from_integer(root);
            return Some(QExt::from_reduced(c0.clone(), b, free));
        }
        Some(QExt::rational(c0.clone()))
    }
}

thread_local! {
    static LAST_PRODUCT: RefCell<Option<(BigInt, BigInt, (BigInt, BigInt))>> = const { RefCell::new(None) };
}

/// `reduce_radicand(d1·d2)`, remembering the last pair since a point's three
/// coordinates share it.
fn reduced_product(d1: &BigInt, d2: &BigInt) -> (BigInt, BigInt) {
    LAST_PRODUCT.with(|cell| {
        let mut last = cell.borrow_mut();
        if let Some((a, b, r)) = last.as_ref() {
            if a == d1 && b == d2 {
                return r.clone();
            }
        }
        let r = reduce_radicand(&(d1 * d2));
        *last = Some((d1.clone(), d2.clone(), r.clone()));
        r
    })
}

impl FieldOps for Biquad {
    fn fadd(&self, o: &Self) -> Self {
        let c = std::array::from_fn(|i| qadd(&self.c[i], &o.c[i]));
        self.with(c)
    }

    fn fsub(&self, o: &Self) -> Self {
        let c = std::array::from_fn(|i| qsub(&self.c[i], &o.c[i]));
        self.with(c)
    }

    fn fmul(&self, o: &Self) -> Self {
        let (x, y) = (&self.c, &o.c);
        let (d1, d2) = (self.d1q(), self.d2q());
        let m = |i: usize, j: usize| qmul(&x[i], &y[j]);
        let sum = |a: Rational, b: Rational| qadd(&a, &b);
        let c0 = sum(
            sum(m(0, 0), qmul(&d1, &m(1, 1))),
            sum(qmul(&d2, &m(2, 2)), qmul(&qmul(&d1, &d2), &m(3, 3))),
        );
        let c1 = sum(sum(m(0, 1), m(1, 0)), qmul(&d2, &sum(m(2, 3), m(3, 2))));
        let c2 = sum(sum(m(0, 2), m(2, 0)), qmul(&d1, &sum(m(1, 3), m(3, 1))));
        let c3 = sum(sum(m(0, 3), m(3, 0)), sum(m(1, 2), m(2, 1)));
        self.with([c0, c1, c2, c3])
    }

    fn fneg(&self) -> Self {
        self.with(std::array::from_fn(|i| -&self.c[i]))
    }

    fn finv(&self) -> Self {
        let others = self
            .conjugate(1)
            .fmul(&self.conjugate(2))
            .fmul(&self.conjugate(3));
        let norm = self.fmul(&others).c[0].clone();
        assert!(!norm.is_zero(), "inverse of zero");
        others.with(std::array::from_fn(|i| &others.c[i] / &norm))
    }

    fn fzero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn lift_rational(&self, r: Rational) -> Self {
        Self::from_rational(&self.d1, &self.d2, r)
    }

    fn lower(&self) -> Option<QExt> {
        self.to_qext()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn q(a: i64, b: i64, d: i64) -> QExt {
        QExt::new(int(a), int(b), BigInt::from(d)).unwrap()
    }

    #[test]
    fn product_of_radicals_lands_in_compositum() {
        let (d1, d2) = (BigInt::from(2), BigInt::from(3));
        let x = Biquad::embed(&q(0, 1, 2), &d1, &d2).unwrap();
        let y = Biquad::embed(&q(0, 1, 3), &d1, &d2).unwrap();
        let p = x.fmul(&y).to_qext().unwrap();
        assert_eq!(p, q(0, 1, 6));
    }

    #[test]
    fn negative_radicands_keep_principal_branch() {
        let (d1, d2) = (BigInt::from(-1), BigInt::from(-2));
        let i = Biquad::embed(&q(0, 1, -1), &d1, &d2).unwrap();
        let j = Biquad::embed(&q(0, 1, -2), &d1, &d2).unwrap();
        // i·(i√2) = −√2
        assert_eq!(i.fmul(&j).to_qext().unwrap(), q(0, -1, 2));
        let e = Biquad::embed(&q(0, 1, 2), &d1, &d2).unwrap();
        assert_eq!(e.to_qext().unwrap(), q(0, 1, 2));
    }

    #[test]
    fn inverse_roundtrip() {
        let (d1, d2) = (BigInt::from(5), BigInt::from(-3));
        let mut x = Biquad::from_rational(&d1, &d2, int(2));
        x.c[1] = int(1);
        x.c[2] = int(-3);
        x.c[3] = int(7);
        let one = x.fmul(&x.finv());
        assert_eq!(one.to_qext().unwrap(), int(1));
    }
}
