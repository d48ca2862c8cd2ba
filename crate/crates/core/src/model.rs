//! Metric constructions in the euclidean, hyperbolic and elliptic planes.
//!
//! The euclidean plane is given by a line at infinity with an elliptic
//! involution on it; the other two by a nondegenerate conic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{int, FieldOps, QExt, Rational};
use crate::involutions::{
    compose, conjugacy_involution, harmonic_involution, LineChart, Projectivity1D,
};
use crate::projective::{
    classify_point, collinear, cross, harmonic_conjugate, incident, is_harmonic, is_tangent, join,
    lift, line_conic_meet, meet, polar, pole, Conic, ConicKind, Lifted, Line, Point, PointClass,
    V3,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Geometry {
    Euclidean,
    Hyperbolic,
    Elliptic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Euclidean {
        infinity_line: Line,
        absolute: Projectivity1D,
    },
    NonEuclidean {
        absolute: Conic,
    },
}

impl Model {
    /// Requires an involution on its line without real fixed points.
    pub fn euclidean(absolute: Projectivity1D) -> Result<Self> {
        if !absolute.is_involution() {
            return Err(Error::NotApplicable("absolute must be an involution"));
        }
        let fp = absolute.fixed_points()?;
        if fp.radicand.sign() != num_bigint::Sign::Minus {
            return Err(Error::RealFixedPoints);
        }
        Ok(Model::Euclidean {
            infinity_line: absolute.line().clone(),
            absolute,
        })
    }

    /// z = 0 with the circular involution (a : b : 0) ↦ (−b : a : 0).
    pub fn standard_euclidean() -> Self {
        let line = Line::at_infinity();
        let chart = LineChart::for_line(&line);
        let circular = conjugacy_involution(&line, &Conic::imaginary_unit(), &chart)
            .expect("z = 0 is not tangent to x² + y² + z²");
        Model::euclidean(circular).expect("circular involution is elliptic")
    }

    pub fn non_euclidean(absolute: Conic) -> Self {
        Model::NonEuclidean { absolute }
    }

    pub fn hyperbolic() -> Self {
        Self::non_euclidean(Conic::unit_circle())
    }

    pub fn elliptic() -> Self {
        Self::non_euclidean(Conic::imaginary_unit())
    }

    pub fn geometry(&self) -> Geometry {
        match self {
            Model::Euclidean { .. } => Geometry::Euclidean,
            Model::NonEuclidean { absolute } => match absolute.kind() {
                ConicKind::Real => Geometry::Hyperbolic,
                ConicKind::Imaginary => Geometry::Elliptic,
            },
        }
    }

    pub fn conic(&self) -> Option<&Conic> {
        match self {
            Model::NonEuclidean { absolute } => Some(absolute),
            Model::Euclidean { .. } => None,
        }
    }

    fn require_conic(&self) -> Result<&Conic> {
        self.conic()
            .ok_or(Error::NotApplicable("requires a non-euclidean model"))
    }
}

fn not_infinity(l: &Line, inf: &Line) -> Result<()> {
    if l == inf {
        return Err(Error::NotApplicable("line at infinity"));
    }
    Ok(())
}

fn not_tangent(l: &Line, conic: &Conic) -> Result<()> {
    if is_tangent(l, conic) {
        return Err(Error::TangentLine);
    }
    Ok(())
}

pub fn perpendicular(l: &Line, m: &Line, model: &Model) -> Result<bool> {
    match model {
        Model::Euclidean {
            infinity_line,
            absolute,
        } => {
            not_infinity(l, infinity_line)?;
            not_infinity(m, infinity_line)?;
            let li = meet(l, infinity_line)?;
            let mi = meet(m, infinity_line)?;
            Ok(absolute.apply(&li)? == mi)
        }
        Model::NonEuclidean { absolute } => {
            not_tangent(l, absolute)?;
            not_tangent(m, absolute)?;
            incident(&pole(l, absolute), m)
        }
    }
}

/// The line through `p` perpendicular to `l`.
pub fn drop_perpendicular(p: &Point, l: &Line, model: &Model) -> Result<Line> {
    match model {
        Model::Euclidean {
            infinity_line,
            absolute,
        } => {
            not_infinity(l, infinity_line)?;
            if incident(p, infinity_line)? {
                return Err(Error::PointAtInfinity);
            }
            let dir = absolute.apply(&meet(l, infinity_line)?)?;
            join(p, &dir)
        }
        Model::NonEuclidean { absolute } => {
            not_tangent(l, absolute)?;
            let q = pole(l, absolute);
            if *p == q {
                return Err(Error::PointIsPole);
            }
            join(p, &q)
        }
    }
}

/// Orthogonal projection of `p` onto `l`.
pub fn foot(p: &Point, l: &Line, model: &Model) -> Result<Point> {
    meet(&drop_perpendicular(p, l, model)?, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    E1,
    E2,
}

/// The two midpoints of a segment; `interior` marks the one that is the
/// midpoint of the segment itself when that choice is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointPair {
    pub e1: Point,
    pub e2: Point,
    pub interior: Option<Label>,
}

impl MidpointPair {
    pub fn interior_point(&self) -> Option<&Point> {
        match self.interior? {
            Label::E1 => Some(&self.e1),
            Label::E2 => Some(&self.e2),
        }
    }

    pub fn same_pair(&self, other: &MidpointPair) -> bool {
        same_unordered(&self.e1, &self.e2, &other.e1, &other.e2)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.e1 == *p || self.e2 == *p
    }
}

pub fn same_unordered<T: PartialEq>(a1: &T, a2: &T, b1: &T, b2: &T) -> bool {
    (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1)
}

pub fn midpoints(a: &Point, b: &Point, model: &Model) -> Result<MidpointPair> {
    if a == b {
        return Err(Error::CoincidentPoints);
    }
    match model {
        Model::Euclidean { infinity_line, .. } => {
            if incident(a, infinity_line)? || incident(b, infinity_line)? {
                return Err(Error::PointAtInfinity);
            }
            let far = meet(&join(a, b)?, infinity_line)?;
            let mid = harmonic_conjugate(a, b, &far)?;
            Ok(MidpointPair {
                e1: mid,
                e2: far,
                interior: Some(Label::E1),
            })
        }
        Model::NonEuclidean { absolute } => chord_midpoints(a, b, absolute),
    }
}

/// E1 = A1B1·A2B2 and E2 = A1B2·A2B1, where A1, A2 (B1, B2) are the meets of
/// the absolute with the line joining A (B) to the pole of AB.
/// A multiple of `v` with integral components.
fn integral(v: &[QExt; 3]) -> [QExt; 3] {
    let k = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    v.clone().map(|c| c.scale(&k))
}

fn chord_midpoints(a: &Point, b: &Point, conic: &Conic) -> Result<MidpointPair> {
    let p = join(a, b)?;
    not_tangent(&p, conic)?;
    if conic.contains(a) || conic.contains(b) {
        return Err(Error::PointOnConic);
    }
    let q = pole(&p, conic);
    if *a == q || *b == q {
        return Err(Error::PointIsPole);
    }
    let ca = line_conic_meet(&join(&q, a)?, conic)?;
    let cb = line_conic_meet(&join(&q, b)?, conic)?;
    // the joins A1B1 etc. live in ℚ(√dA, √dB); only the meets come back down
    fn build<F: FieldOps>(v: &[V3<F>]) -> Result<(Point, Point)> {
        let (a1, a2, b1, b2) = (&v[0], &v[1], &v[2], &v[3]);
        let e1 = cross(&cross(a1, b1), &cross(a2, b2));
        let e2 = cross(&cross(a1, b2), &cross(a2, b1));
        Ok((Point::from_generic(&e1)?, Point::from_generic(&e2)?))
    }
    let ints = [&ca.p1, &ca.p2, &cb.p1, &cb.p2].map(|p| integral(p.coords()));
    let (e1, e2) = match lift(&[&ints[0], &ints[1], &ints[2], &ints[3]])? {
        Lifted::Single(v) => build(&v)?,
        Lifted::Double(v) => build(&v)?,
    };
    let interior = match conic.kind() {
        ConicKind::Imaginary => None,
        ConicKind::Real => {
            let c1 = classify_point(&e1, conic).ok();
            let c2 = classify_point(&e2, conic).ok();
            match (c1, c2) {
                (Some(PointClass::Interior), Some(c)) if c != PointClass::Interior => {
                    Some(Label::E1)
                }
                (Some(c), Some(PointClass::Interior)) if c != PointClass::Interior => {
                    Some(Label::E2)
                }
                _ => None,
            }
        }
    };
    Ok(MidpointPair { e1, e2, interior })
}

/// (ABCD) = (UVCD) = −1 with U, V the meets of AB with the absolute.
pub fn lemma_midpoint_check(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
    model: &Model,
) -> Result<bool> {
    let conic = model.require_conic()?;
    if !collinear(a, b, c)? || !collinear(a, b, d)? {
        return Err(Error::NotCollinear);
    }
    let uv = line_conic_meet(&join(a, b)?, conic)?;
    if [&uv.p1, &uv.p2].iter().any(|u| *u == a || *u == b) {
        return Err(Error::PointOnConic);
    }
    Ok(is_harmonic(a, b, c, d)? && is_harmonic(&uv.p1, &uv.p2, c, d)?)
}

pub fn common_perpendicular(l: &Line, m: &Line, model: &Model) -> Result<Line> {
    let conic = model.require_conic()?;
    if l == m {
        return Err(Error::CoincidentLines);
    }
    not_tangent(l, conic)?;
    not_tangent(m, conic)?;
    join(&pole(l, conic), &pole(m, conic))
}

/// The two bisectors of the angle between `m` and `n` at their meet.
pub fn angle_bisectors(m: &Line, n: &Line, model: &Model) -> Result<(Line, Line)> {
    if m == n {
        return Err(Error::DegeneratePencil);
    }
    let v = meet(m, n)?;
    match model {
        Model::Euclidean {
            infinity_line,
            absolute,
        } => {
            if incident(&v, infinity_line)? {
                return Err(Error::DegeneratePencil);
            }
            // the bisector directions are the pair exchanged by both the
            // absolute involution and the harmonic involution of m∞, n∞
            let mi = meet(m, infinity_line)?;
            let ni = meet(n, infinity_line)?;
            let h = harmonic_involution(&mi, &ni, absolute.chart())?;
            let fp = compose(&h, absolute)?.fixed_points()?;
            Ok((join(&v, &fp.p1)?, join(&v, &fp.p2)?))
        }
        Model::NonEuclidean { absolute } => {
            if absolute.contains(&v) {
                return Err(Error::PointOnConic);
            }
            let vl = polar(&v, absolute);
            let a = meet(m, &vl)?;
            let b = meet(n, &vl)?;
            let mp = midpoints(&a, &b, model)?;
            Ok((join(&v, &mp.e1)?, join(&v, &mp.e2)?))
        }
    }
}

/// Disk of radius `r`: x² + y² = r²·z².
pub fn disk_of_radius(r: &Rational) -> Conic {
    Conic::diagonal(int(1), int(1), -(r * r)).expect("nonzero radius")
}

pub fn affine_qext(p: &Point) -> Option<(QExt, QExt)> {
    p.affine()
}
