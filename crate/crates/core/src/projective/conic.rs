//! Nondegenerate conics, polarity and line–conic intersection.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{cross, Line, Point};
use crate::error::{Error, Result};
use crate::exactnum::{int, sqrt_ext, QExt, Rational};

type M3 = [[Rational; 3]; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicKind {
    /// Has real points (signature (2,1) up to sign): hyperbolic absolute.
    Real,
    /// Definite form, no real points: elliptic absolute.
    Imaginary,
}

/// A nondegenerate conic given by a symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    m: M3,
    adj: M3,
    det: Rational,
    kind: ConicKind,
}

fn det3(m: &M3) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn adjugate(m: &M3) -> M3 {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| {
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    // adj[i][j] = cofactor[j][i]; symmetric input gives symmetric output
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

fn mat_vec(m: &M3, v: &[QExt; 3]) -> [QExt; 3] {
    std::array::from_fn(|i| {
        (0..3).fold(QExt::zero(), |acc, j| {
            acc + QExt::rational(m[i][j].clone()) * &v[j]
        })
    })
}

impl Conic {
    pub fn new(m: M3) -> Result<Self> {
        for i in 0..3 {
            for j in 0..i {
                if m[i][j] != m[j][i] {
                    return Err(Error::NonSymmetricConic);
                }
            }
        }
        let det = det3(&m);
        if det.is_zero() {
            return Err(Error::DegenerateConic);
        }
        // Sylvester: definite iff leading minors are all positive or alternate
        let m1 = m[0][0].clone();
        let m2 = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let pos = m1.is_positive() && m2.is_positive() && det.is_positive();
        let neg = m1.is_negative() && m2.is_positive() && det.is_negative();
        let kind = if pos || neg {
            ConicKind::Imaginary
        } else {
            ConicKind::Real
        };
        Ok(Conic {
            adj: adjugate(&m),
            m,
            det,
            kind,
        })
    }

    pub fn diagonal(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let z = Rational::zero;
        Self::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    /// x² + y² = z², the Klein disk absolute.
    pub fn unit_circle() -> Self {
        Self::diagonal(int(1), int(1), int(-1)).expect("nondegenerate")
    }

    /// x² + y² + z² = 0, the elliptic absolute.
    pub fn imaginary_unit() -> Self {
        Self::diagonal(int(1), int(1), int(1)).expect("nondegenerate")
    }

    pub fn matrix(&self) -> &M3 {
        &self.m
    }

    pub fn adjugate(&self) -> &M3 {
        &self.adj
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.m[i][j] * c)
        }))
    }

    /// Bilinear form Pᵀ Φ Q.
    pub fn bilinear(&self, p: &Point, q: &Point) -> QExt {
        let mq = mat_vec(&self.m, q.coords());
        (0..3).fold(QExt::zero(), |acc, i| acc + &p.coords()[i] * &mq[i])
    }

    /// Quadratic form Pᵀ Φ P.
    pub fn value(&self, p: &Point) -> QExt {
        self.bilinear(p, p)
    }

    /// Dual form lᵀ adj(Φ) l; zero exactly for tangent lines.
    pub fn dual_value(&self, l: &Line) -> QExt {
        let al = mat_vec(&self.adj, l.coords());
        (0..3).fold(QExt::zero(), |acc, i| acc + &l.coords()[i] * &al[i])
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.value(p).is_zero()
    }
}

/// Polar line Φ·P.
pub fn polar(p: &Point, conic: &Conic) -> Line {
    Line::new(mat_vec(&conic.m, p.coords())).expect("nondegenerate conic")
}

/// Pole adj(Φ)·l, proportional to Φ⁻¹·l.
pub fn pole(l: &Line, conic: &Conic) -> Point {
    Point::new(mat_vec(&conic.adj, l.coords())).expect("nondegenerate conic")
}

pub fn is_tangent(l: &Line, conic: &Conic) -> bool {
    conic.dual_value(l).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinePosition {
    Secant,
    Tangent,
    /// No real intersection points.
    Exterior,
}

/// Position of a real line relative to a conic; every real line misses an
/// imaginary conic.
pub fn line_position(l: &Line, conic: &Conic) -> Result<LinePosition> {
    // the dual form has signature (1,2) up to a positive factor, so secants
    // are exactly the lines where it is negative
    match conic.dual_value(l).signum().ok_or(Error::NotRational)? {
        Ordering::Less => Ok(LinePosition::Secant),
        Ordering::Equal => Ok(LinePosition::Tangent),
        Ordering::Greater => Ok(LinePosition::Exterior),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    Interior,
    On,
    Exterior,
}

/// Interior iff (PᵀΦP)·det Φ > 0; invariant under rescaling P or Φ.
pub fn classify_point(p: &Point, conic: &Conic) -> Result<PointClass> {
    if conic.kind == ConicKind::Imaginary {
        return Err(Error::ImaginaryConic);
    }
    let v = conic.value(p) * QExt::rational(conic.det.clone());
    match v.signum().ok_or(Error::NotApplicable("non-real point"))? {
        Ordering::Greater => Ok(PointClass::Interior),
        Ordering::Equal => Ok(PointClass::On),
        Ordering::Less => Ok(PointClass::Exterior),
    }
}

/// The two intersection points of a line with a conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordPair {
    pub p1: Point,
    pub p2: Point,
    /// Square-class of the discriminant; 1 when both points are rational.
    pub radicand: BigInt,
}

/// Two distinct points on `l`, taken from its meets with the coordinate lines.
pub(crate) fn points_on(l: &Line) -> (Point, Point) {
    let mut found: Vec<Point> = Vec::with_capacity(2);
    for i in 0..3 {
        let mut e = [QExt::zero(), QExt::zero(), QExt::zero()];
        e[i] = QExt::one();
        if let Ok(p) = Point::new(cross(l.coords(), &e)) {
            if !found.contains(&p) {
                found.push(p);
            }
        }
        if found.len() == 2 {
            break;
        }
    }
    let q = found.pop().expect("two points");
    (found.pop().expect("two points"), q)
}

/// Deterministic order of a pair: for conjugate points, the one whose first
/// radical coefficient is positive; for rational points, lexicographic.
pub(crate) fn order_pair(p: Point, q: Point) -> (Point, Point) {
    for (a, b) in p.coords().iter().zip(q.coords()) {
        if !a.radical_coeff().is_zero() {
            return if a.radical_coeff().is_positive() {
                (p, q)
            } else {
                (q, p)
            };
        }
        if !b.radical_coeff().is_zero() {
            return if b.radical_coeff().is_positive() {
                (q, p)
            } else {
                (p, q)
            };
        }
    }
    for (a, b) in p.coords().iter().zip(q.coords()) {
        match a.rational_part().cmp(b.rational_part()) {
            Ordering::Less => return (p, q),
            Ordering::Greater => return (q, p),
            Ordering::Equal => {}
        }
    }
    (p, q)
}

/// Roots of the binary quadratic a·s² + 2b·s·t + c·t² as (s : t) pairs.
pub(crate) fn binary_roots(a: &QExt, b: &QExt, c: &QExt) -> Result<([QExt; 2], [QExt; 2], BigInt)> {
    let (ar, br, cr) = match (a.to_rational(), b.to_rational(), c.to_rational()) {
        (Some(a), Some(b), Some(c)) => (a.clone(), b.clone(), c.clone()),
        _ => return Err(Error::NotRational),
    };
    let disc = &br * &br - &ar * &cr;
    if disc.is_zero() {
        return Err(Error::TangentLine);
    }
    let root = sqrt_ext(&disc);
    let radicand = root.radicand().cloned().unwrap_or_else(BigInt::one);
    let q = QExt::rational;
    if !ar.is_zero() {
        let r1 = [q(-br.clone()) + &root, q(ar.clone())];
        let r2 = [q(-br) - &root, q(ar)];
        Ok((r1, r2, radicand))
    } else {
        let two = int(2);
        Ok(([QExt::one(), QExt::zero()], [q(-cr), q(two * br)], radicand))
    }
}

pub fn line_conic_meet(l: &Line, conic: &Conic) -> Result<ChordPair> {
    if !l.is_rational() {
        return Err(Error::NotRational);
    }
    if is_tangent(l, conic) {
        return Err(Error::TangentLine);
    }
    let (b0, b1) = points_on(l);
    let a = conic.value(&b0);
    let b = conic.bilinear(&b0, &b1);
    let c = conic.value(&b1);
    let (r1, r2, radicand) = binary_roots(&a, &b, &c)?;
    let at = |r: &[QExt; 2]| -> Result<Point> {
        let v = std::array::from_fn(|i| &r[0] * &b0.coords()[i] + &r[1] * &b1.coords()[i]);
        Point::new(v)
    };
    let (p1, p2) = order_pair(at(&r1)?, at(&r2)?);
    Ok(ChordPair { p1, p2, radicand })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(x: i64, y: i64, z: i64) -> Point {
        Point::hom(x, y, z)
    }

    #[test]
    fn conic_validation() {
        let z = Rational::zero;
        let bad = [
            [int(1), int(2), z()],
            [z(), int(1), z()],
            [z(), z(), int(1)],
        ];
        assert_eq!(Conic::new(bad), Err(Error::NonSymmetricConic));
        assert_eq!(
            Conic::diagonal(int(1), int(0), int(1)),
            Err(Error::DegenerateConic)
        );
        assert_eq!(Conic::unit_circle().kind(), ConicKind::Real);
        assert_eq!(Conic::imaginary_unit().kind(), ConicKind::Imaginary);
        let neg = Conic::diagonal(int(-1), int(-2), int(-3)).unwrap();
        assert_eq!(neg.kind(), ConicKind::Imaginary);
        let hyp = Conic::diagonal(int(-1), int(1), int(1)).unwrap();
        assert_eq!(hyp.kind(), ConicKind::Real);
    }

    #[test]
    fn polar_examples() {
        let c = Conic::unit_circle();
        assert_eq!(polar(&p(0, 0, 1), &c), Line::hom(0, 0, 1));
        assert_eq!(pole(&Line::hom(0, 1, 0), &c), p(0, 1, 0));
        // tangent at (1, 0) is x = z
        assert_eq!(polar(&p(1, 0, 1), &c), Line::hom(1, 0, -1));
    }

    #[test]
    fn tangency() {
        let c = Conic::unit_circle();
        assert!(is_tangent(&Line::hom(1, 0, -1), &c));
        assert!(!is_tangent(&Line::hom(0, 1, 0), &c));
        let e = Conic::imaginary_unit();
        for l in [Line::hom(1, 0, -1), Line::hom(0, 1, 0), Line::hom(3, -7, 2)] {
            assert!(!is_tangent(&l, &e));
            assert_eq!(line_position(&l, &e).unwrap(), LinePosition::Exterior);
        }
        assert_eq!(
            line_position(&Line::hom(1, 0, -2), &c).unwrap(),
            LinePosition::Exterior
        );
        assert_eq!(
            line_position(&Line::hom(2, 0, -1), &c).unwrap(),
            LinePosition::Secant
        );
        assert_eq!(
            line_position(&Line::hom(1, 0, -1), &c).unwrap(),
            LinePosition::Tangent
        );
    }

    #[test]
    fn classification() {
        let c = Conic::unit_circle();
        assert_eq!(
            classify_point(&p(0, 0, 1), &c).unwrap(),
            PointClass::Interior
        );
        assert_eq!(
            classify_point(&p(2, 0, 1), &c).unwrap(),
            PointClass::Exterior
        );
        assert_eq!(classify_point(&p(1, 0, 1), &c).unwrap(), PointClass::On);
        let flipped = c.scaled(&int(-3)).unwrap();
        assert_eq!(
            classify_point(&p(0, 0, 1), &flipped).unwrap(),
            PointClass::Interior
        );
        assert_eq!(
            classify_point(&p(0, 0, 1), &Conic::imaginary_unit()),
            Err(Error::ImaginaryConic)
        );
    }

    #[test]
    fn chord_examples() {
        let c = Conic::unit_circle();
        let ch = line_conic_meet(&Line::hom(0, 1, 0), &c).unwrap();
        assert_eq!(ch.radicand, BigInt::one());
        assert_eq!((ch.p1, ch.p2), (p(-1, 0, 1), p(1, 0, 1)));

        let ch = line_conic_meet(&Line::affine(int(1), int(0), rat(-1, 2)).unwrap(), &c).unwrap();
        assert_eq!(ch.radicand, BigInt::from(3));
        let s = sqrt_ext(&rat(3, 4));
        let up = Point::new([QExt::rational(rat(1, 2)), s.clone(), QExt::one()]).unwrap();
        assert_eq!(ch.p1, up);
        assert_eq!(ch.p2, up.conj());
        assert!(c.contains(&ch.p1) && c.contains(&ch.p2));

        let e = Conic::imaginary_unit();
        let ch = line_conic_meet(&Line::hom(0, 1, 0), &e).unwrap();
        assert_eq!(ch.radicand, BigInt::from(-1));
        let i = sqrt_ext(&int(-1));
        // canonically (1 : 0 : i) and (1 : 0 : −i)
        assert_eq!(
            ch.p1,
            Point::new([-i.clone(), QExt::zero(), QExt::one()]).unwrap()
        );
        assert_eq!(ch.p2, Point::new([i, QExt::zero(), QExt::one()]).unwrap());
    }

    #[test]
    fn chord_errors() {
        let c = Conic::unit_circle();
        assert_eq!(
            line_conic_meet(&Line::hom(1, 0, -1), &c),
            Err(Error::TangentLine)
        );
    }
}
