//! The real projective plane in homogeneous coordinates.
//!
//! Points and lines are exact 3-vectors over a quadratic field, stored in a
//! canonical form so that equality is a plain comparison. Incidence and
//! cross-ratios work across two different quadratic fields by lifting to
//! their compositum; joins and meets do the same and project the result back.

mod conic;
mod vec3;

pub use conic::{classify_point, is_tangent, line_conic_meet, line_position, polar, pole};
pub use conic::{ChordPair, Conic, ConicKind, LinePosition, PointClass};

pub(crate) use conic::{binary_roots, order_pair, points_on};
pub(crate) use vec3::{
    cross, dot, lift, lift_flat, lifted, lower_normalized, v3, Lifted, LiftedFlat, V3,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{common_radicand, int, FieldOps, QExt, Rational};

/// Canonical form: divide by the first nonzero coordinate; rational vectors
/// are then scaled to coprime integers with a positive leading entry.
fn canonical(v: [QExt; 3]) -> Result<[QExt; 3]> {
    let lead = v
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?
        .clone();
    let scaled: [QExt; 3] = std::array::from_fn(|i| &v[i] / &lead);
    if scaled.iter().any(|c| !c.is_rational()) {
        return Ok(scaled);
    }
    let mut l = BigInt::one();
    for c in &scaled {
        l = l.lcm(c.rational_part().denom());
    }
    let ints: Vec<BigInt> = scaled
        .iter()
        .map(|c| {
            let r = c.rational_part();
            r.numer() * (&l / r.denom())
        })
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    Ok(std::array::from_fn(|i| QExt::rational(Rational::from_integer(&ints[i] / &g))))
}

fn check_field(v: &[QExt; 3]) -> Result<()> {
    common_radicand(v.iter()).map(|_| ())
}

macro_rules! homogeneous {
    ($name:ident, $field:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            $field: [QExt; 3],
        }

        impl $name {
            pub fn new(v: [QExt; 3]) -> Result<Self> {
                check_field(&v)?;
                Ok($name {
                    $field: canonical(v)?,
                })
            }

            pub fn from_rationals(v: [Rational; 3]) -> Result<Self> {
                Self::new(v.map(QExt::rational))
            }

            /// Integer coordinates; panics on the zero vector.
            pub fn hom(x: i64, y: i64, z: i64) -> Self {
                Self::from_rationals([int(x), int(y), int(z)]).expect("zero homogeneous vector")
            }

            pub fn coords(&self) -> &[QExt; 3] {
                &self.$field
            }

            pub fn is_rational(&self) -> bool {
                self.$field.iter().all(QExt::is_rational)
            }

            pub fn to_rationals(&self) -> Option<[Rational; 3]> {
                if !self.is_rational() {
                    return None;
                }
                Some(std::array::from_fn(|i| {
                    self.$field[i].rational_part().clone()
                }))
            }

            pub fn radicand(&self) -> Option<BigInt> {
                common_radicand(self.$field.iter()).ok().flatten()
            }

            /// Galois conjugate of every coordinate.
            pub fn conj(&self) -> Self {
                $name {
                    $field: canonical(self.$field.clone().map(|c| c.conj())).expect("nonzero"),
                }
            }

            pub(crate) fn from_generic<F: FieldOps>(v: &V3<F>) -> Result<Self> {
                let lead = v
                    .iter()
                    .find(|c| !c.fzero())
                    .ok_or(Error::ZeroVector)?
                    .finv();
                let mut out = Vec::with_capacity(3);
                for c in v {
                    let x = c.fmul(&lead).lower().ok_or_else(|| {
                        Error::MixedRadicands("compositum".into(), "quadratic field".into())
                    })?;
                    out.push(x);
                }
                let arr: [QExt; 3] = [out[0].clone(), out[1].clone(), out[2].clone()];
                Self::new(arr)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [x, y, z] = &self.$field;
                write!(f, "({x} : {y} : {z})")
            }
        }
    };
}

homogeneous!(Point, coords);
homogeneous!(Line, coeffs);

impl Point {
    /// The affine point `(x, y)`, i.e. `(x : y : 1)`.
    pub fn xy(x: Rational, y: Rational) -> Self {
        Self::from_rationals([x, y, Rational::one()]).expect("nonzero")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine coordinates in the chart `z = 1`.
    pub fn affine(&self) -> Option<(QExt, QExt)> {
        if self.is_at_infinity() {
            return None;
        }
        let z = &self.coords[2];
        Some((&self.coords[0] / z, &self.coords[1] / z))
    }

    /// Affine chart coordinates as floats, for rendering.
    pub fn affine_f64(&self) -> Option<(f64, f64)> {
        let (x, y) = self.affine()?;
        Some((x.to_f64()?, y.to_f64()?))
    }
}

impl Line {
    /// The line at infinity `z = 0` of the standard affine chart.
    pub fn at_infinity() -> Self {
        Self::hom(0, 0, 1)
    }

    /// Affine line `a·x + b·y + c = 0`.
    pub fn affine(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        Self::from_rationals([a, b, c])
    }
}

/// Line through two distinct points.
pub fn join(p: &Point, q: &Point) -> Result<Line> {
    let r = match lift(&[p.coords(), q.coords()])? {
        Lifted::Single(v) => Line::from_generic(&cross(&v[0], &v[1])),
        Lifted::Double(v) => Line::from_generic(&cross(&v[0], &v[1])),
    };
    r.map_err(|e| {
        if e == Error::ZeroVector {
            Error::CoincidentPoints
        } else {
            e
        }
    })
}

/// Intersection point of two distinct lines.
pub fn meet(l: &Line, m: &Line) -> Result<Point> {
    let r = match lift(&[l.coords(), m.coords()])? {
        Lifted::Single(v) => Point::from_generic(&cross(&v[0], &v[1])),
        Lifted::Double(v) => Point::from_generic(&cross(&v[0], &v[1])),
    };
    r.map_err(|e| {
        if e == Error::ZeroVector {
            Error::CoincidentLines
        } else {
            e
        }
    })
}

/// Whether `p` lies on `l`.
pub fn incident(p: &Point, l: &Line) -> Result<bool> {
    Ok(match lift(&[p.coords(), l.coords()])? {
        Lifted::Single(v) => dot(&v[0], &v[1]).fzero(),
        Lifted::Double(v) => dot(&v[0], &v[1]).fzero(),
    })
}

/// Whether three points lie on a common line.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> Result<bool> {
    Ok(match lift(&[p.coords(), q.coords(), r.coords()])? {
        Lifted::Single(v) => dot(&cross(&v[0], &v[1]), &v[2]).fzero(),
        Lifted::Double(v) => dot(&cross(&v[0], &v[1]), &v[2]).fzero(),
    })
}

/// Whether three lines pass through a common point.
pub fn concurrent(l: &Line, m: &Line, n: &Line) -> Result<bool> {
    Ok(match lift(&[l.coords(), m.coords(), n.coords()])? {
        Lifted::Single(v) => dot(&cross(&v[0], &v[1]), &v[2]).fzero(),
        Lifted::Double(v) => dot(&cross(&v[0], &v[1]), &v[2]).fzero(),
    })
}

/// Value of a cross-ratio; `Infinity` when the denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(QExt),
    Infinity,
}

impl CrossRatio {
    pub fn is_harmonic(&self) -> bool {
        matches!(self, CrossRatio::Finite(v) if *v == int(-1))
    }
}

enum GenericRatio<F> {
    Finite(F),
    Infinity,
}

/// (ABCD) = [AC][BD] / ([AD][BC]), with brackets taken as 2×2 minors in the
/// two coordinate positions that parameterize the common line injectively.
fn cross_ratio_generic<F: FieldOps>(p: &[V3<F>]) -> Result<GenericRatio<F>> {
    let mut line = None;
    'outer: for i in 0..4 {
        for j in i + 1..4 {
            let c = cross(&p[i], &p[j]);
            if c.iter().any(|x| !x.fzero()) {
                line = Some(c);
                break 'outer;
            }
        }
    }
    let line = line.ok_or(Error::IndeterminateCrossRatio)?;
    if p.iter().any(|x| !dot(x, &line).fzero()) {
        return Err(Error::NotCollinear);
    }
    let k = line.iter().position(|x| !x.fzero()).expect("nonzero line");
    let br = |x: &V3<F>, y: &V3<F>| cross(x, y)[k].clone();
    let num = br(&p[0], &p[2]).fmul(&br(&p[1], &p[3]));
    let den = br(&p[0], &p[3]).fmul(&br(&p[1], &p[2]));
    match (num.fzero(), den.fzero()) {
        (true, true) => Err(Error::IndeterminateCrossRatio),
        (_, true) => Ok(GenericRatio::Infinity),
        _ => Ok(GenericRatio::Finite(num.fmul(&den.finv()))),
    }
}

/// Cross-ratio (ABCD) of four collinear points.
pub fn cross_ratio(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<CrossRatio> {
    fn finish<F: FieldOps>(r: GenericRatio<F>) -> Result<CrossRatio> {
        match r {
            GenericRatio::Infinity => Ok(CrossRatio::Infinity),
            GenericRatio::Finite(v) => v.lower().map(CrossRatio::Finite).ok_or_else(|| {
                Error::MixedRadicands("compositum".into(), "quadratic field".into())
            }),
        }
    }
    match lift(&[a.coords(), b.coords(), c.coords(), d.coords()])? {
        Lifted::Single(v) => finish(cross_ratio_generic(&v)?),
        Lifted::Double(v) => finish(cross_ratio_generic(&v)?),
    }
}

/// Whether (ABCD) = −1, evaluated in the compositum of the points' fields.
pub fn is_harmonic(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<bool> {
    fn check<F: FieldOps>(v: &[V3<F>]) -> Result<bool> {
        Ok(match cross_ratio_generic(v)? {
            GenericRatio::Infinity => false,
            GenericRatio::Finite(x) => {
                let minus_one = x.lift_rational(int(-1));
                x == minus_one
            }
        })
    }
    match lift(&[a.coords(), b.coords(), c.coords(), d.coords()])? {
        Lifted::Single(v) => check(&v),
        Lifted::Double(v) => check(&v),
    }
}

/// The point D with (ABCD) = −1.
pub fn harmonic_conjugate(a: &Point, b: &Point, c: &Point) -> Result<Point> {
    fn build<F: FieldOps>(v: &[V3<F>]) -> Result<Point> {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let line = cross(a, b);
        if line.iter().all(FieldOps::fzero) {
            return Err(Error::CoincidentPoints);
        }
        if !dot(c, &line).fzero() {
            return Err(Error::NotCollinear);
        }
        if cross(a, c).iter().all(FieldOps::fzero) || cross(b, c).iter().all(FieldOps::fzero) {
            return Err(Error::CoincidentPoints);
        }
        let k = line.iter().position(|x| !x.fzero()).expect("nonzero line");
        // C = αA + βB with α = [CB]/[AB], β = [AC]/[AB]; D = αA − βB
        let alpha = cross(c, b)[k].clone();
        let beta = cross(a, c)[k].clone();
        let d: V3<F> = std::array::from_fn(|i| a[i].fmul(&alpha).fsub(&b[i].fmul(&beta)));
        Point::from_generic(&d)
    }
    match lift(&[a.coords(), b.coords(), c.coords()])? {
        Lifted::Single(v) => build(&v),
        Lifted::Double(v) => build(&v),
    }
}
