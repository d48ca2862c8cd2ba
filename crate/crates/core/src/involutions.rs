//! Projectivities of a single line, stored as 2×2 matrices over a chart.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldOps, QExt};
use crate::projective::{
    binary_roots, collinear, cross, dot, incident, lifted, lower_normalized, meet, order_pair,
    points_on, polar, v3, ChordPair, Conic, Line, Point, V3,
};

/// A coordinate system on a line: P = s·base0 + t·base1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineChart {
    line: Line,
    base0: Point,
    base1: Point,
}

fn line_index<F: FieldOps>(b0: &V3<F>, b1: &V3<F>) -> usize {
    cross(b0, b1)
        .iter()
        .position(|x| !x.fzero())
        .expect("distinct base points")
}

fn param_g<F: FieldOps>(b0: &V3<F>, b1: &V3<F>, p: &V3<F>) -> Result<[F; 2]> {
    if !dot(p, &cross(b0, b1)).fzero() {
        return Err(Error::NotOnLine);
    }
    let k = line_index(b0, b1);
    Ok([cross(p, b1)[k].clone(), cross(b0, p)[k].clone()])
}

fn point_g<F: FieldOps>(b0: &V3<F>, b1: &V3<F>, st: &[F; 2]) -> V3<F> {
    std::array::from_fn(|i| b0[i].fmul(&st[0]).fadd(&b1[i].fmul(&st[1])))
}

type M2<F> = [[F; 2]; 2];

fn m2<F: Clone>(v: &[F], i: usize) -> M2<F> {
    [
        [v[i].clone(), v[i + 1].clone()],
        [v[i + 2].clone(), v[i + 3].clone()],
    ]
}

fn mul_g<F: FieldOps>(a: &M2<F>, b: &M2<F>) -> M2<F> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| a[i][0].fmul(&b[0][j]).fadd(&a[i][1].fmul(&b[1][j])))
    })
}

fn det_g<F: FieldOps>(m: &M2<F>) -> F {
    m[0][0].fmul(&m[1][1]).fsub(&m[0][1].fmul(&m[1][0]))
}

fn adj_g<F: FieldOps>(m: &M2<F>) -> M2<F> {
    [
        [m[1][1].clone(), m[0][1].fneg()],
        [m[1][0].fneg(), m[0][0].clone()],
    ]
}

fn act_g<F: FieldOps>(m: &M2<F>, st: &[F; 2]) -> [F; 2] {
    std::array::from_fn(|i| m[i][0].fmul(&st[0]).fadd(&m[i][1].fmul(&st[1])))
}

fn flat(m: &M2<QExt>) -> Vec<QExt> {
    m.iter().flatten().cloned().collect()
}

impl LineChart {
    pub fn new(line: Line, base0: Point, base1: Point) -> Result<Self> {
        if base0 == base1 {
            return Err(Error::CoincidentPoints);
        }
        if !incident(&base0, &line)? || !incident(&base1, &line)? {
            return Err(Error::NotOnLine);
        }
        Ok(LineChart { line, base0, base1 })
    }

    /// Chart on the line through two distinct points.
    pub fn through(base0: Point, base1: Point) -> Result<Self> {
        let line = crate::projective::join(&base0, &base1)?;
        Self::new(line, base0, base1)
    }

    /// Default chart: base points are the first two distinct meets of the
    /// line with the coordinate lines x = 0, y = 0, z = 0.
    pub fn for_line(line: &Line) -> Self {
        let (base0, base1) = points_on(line);
        LineChart {
            line: line.clone(),
            base0,
            base1,
        }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn base0(&self) -> &Point {
        &self.base0
    }

    pub fn base1(&self) -> &Point {
        &self.base1
    }

    fn values(&self) -> Vec<QExt> {
        self.base0
            .coords()
            .iter()
            .chain(self.base1.coords())
            .cloned()
            .collect()
    }

    /// Homogeneous parameter (s : t), scaled so the first nonzero entry is 1.
    pub fn param(&self, p: &Point) -> Result<[QExt; 2]> {
        let mut vals = self.values();
        vals.extend(p.coords().iter().cloned());
        let st = lifted!(&vals, |v| lower_normalized(&param_g(
            &v3(&v, 0),
            &v3(&v, 3),
            &v3(&v, 6)
        )?)?);
        Ok([st[0].clone(), st[1].clone()])
    }

    pub fn point_at(&self, s: &QExt, t: &QExt) -> Result<Point> {
        let mut vals = self.values();
        vals.extend([s.clone(), t.clone()]);
        lifted!(&vals, |v| {
            Point::from_generic(&point_g(
                &v3(&v, 0),
                &v3(&v, 3),
                &[v[6].clone(), v[7].clone()],
            ))
        })
    }

    /// Affine parameter s/t, or `None` at base0 (t = 0).
    pub fn affine_param(&self, p: &Point) -> Result<Option<QExt>> {
        let [s, t] = self.param(p)?;
        if t.is_zero() {
            return Ok(None);
        }
        Ok(Some(s.try_div(&t)?))
    }

    pub fn point_at_affine(&self, x: &QExt) -> Result<Point> {
        self.point_at(x, &QExt::one())
    }

    /// Exact transition matrix from `self` parameters to `other` parameters,
    /// up to a common factor.
    fn transition_to(&self, other: &LineChart) -> Result<M2<QExt>> {
        if self.line != other.line {
            return Err(Error::DifferentLines);
        }
        let mut vals = other.values();
        vals.extend(self.values());
        let m = lifted!(&vals, |v| {
            let (o0, o1, s0, s1) = (v3(&v, 0), v3(&v, 3), v3(&v, 6), v3(&v, 9));
            let k = line_index(&o0, &o1);
            let col = |b: &V3<_>| [cross(b, &o1)[k].clone(), cross(&o0, b)[k].clone()];
            let (c0, c1) = (col(&s0), col(&s1));
            lower_normalized(&[c0[0].clone(), c1[0].clone(), c0[1].clone(), c1[1].clone()])?
        });
        Ok(m2(&m, 0))
    }
}

/// A projectivity of a line onto itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projectivity1D {
    chart: LineChart,
    m: M2<QExt>,
}

impl Projectivity1D {
    /// The matrix is rescaled so its first nonzero entry is 1.
    pub fn from_matrix(chart: LineChart, m: [[QExt; 2]; 2]) -> Result<Self> {
        let vals = flat(&m);
        let canon = lifted!(&vals, |v| {
            if det_g(&m2(&v, 0)).fzero() {
                return Err(Error::SingularMatrix);
            }
            lower_normalized(&v)?
        });
        Ok(Projectivity1D {
            chart,
            m: m2(&canon, 0),
        })
    }

    pub fn identity(chart: LineChart) -> Self {
        let (o, z) = (QExt::one(), QExt::zero());
        Projectivity1D {
            chart,
            m: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn chart(&self) -> &LineChart {
        &self.chart
    }

    pub fn line(&self) -> &Line {
        &self.chart.line
    }

    pub fn matrix(&self) -> &[[QExt; 2]; 2] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m[0][1].is_zero() && self.m[1][0].is_zero() && self.m[0][0] == self.m[1][1]
    }

    /// Non-identity involution: trace zero.
    pub fn is_involution(&self) -> bool {
        self.m[0][0] == -self.m[1][1].clone()
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        let mut vals = self.chart.values();
        vals.extend(flat(&self.m));
        vals.extend(p.coords().iter().cloned());
        lifted!(&vals, |v| {
            let (b0, b1) = (v3(&v, 0), v3(&v, 3));
            let st = param_g(&b0, &b1, &v3(&v, 10))?;
            Point::from_generic(&point_g(&b0, &b1, &act_g(&m2(&v, 6), &st)))
        })
    }

    /// The same map expressed in another chart of the same line.
    pub fn in_chart(&self, target: &LineChart) -> Result<Self> {
        if *target == self.chart {
            return Ok(self.clone());
        }
        let t = target.transition_to(&self.chart)?;
        let mut vals = flat(&t);
        vals.extend(flat(&self.m));
        let m = lifted!(&vals, |v| {
            let (t, m) = (m2(&v, 0), m2(&v, 4));
            let r = mul_g(&adj_g(&t), &mul_g(&m, &t));
            lower_normalized(&[
                r[0][0].clone(),
                r[0][1].clone(),
                r[1][0].clone(),
                r[1][1].clone(),
            ])?
        });
        Self::from_matrix(target.clone(), m2(&m, 0))
    }

    /// Fixed points as a conjugate pair over ℚ(√d); requires a rational matrix.
    pub fn fixed_points(&self) -> Result<ChordPair> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        let m = &self.m;
        // (s : t) fixed iff m10·s² + (m11 − m00)·s·t − m01·t² = 0
        let a = m[1][0].clone();
        let b = m[1][1]
            .try_sub(&m[0][0])?
            .try_mul(&QExt::rational(crate::exactnum::rat(1, 2)))?;
        let c = -m[0][1].clone();
        let (r1, r2, radicand) = binary_roots(&a, &b, &c).map_err(|e| match e {
            Error::TangentLine => Error::ParabolicMap,
            e => e,
        })?;
        let p1 = self.chart.point_at(&r1[0], &r1[1])?;
        let p2 = self.chart.point_at(&r2[0], &r2[1])?;
        let (p1, p2) = order_pair(p1, p2);
        Ok(ChordPair { p1, p2, radicand })
    }
}

impl fmt::Display for Projectivity1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]] on {}", self.chart.line)
    }
}

/// f∘g: apply g, then f. The result uses f's chart.
pub fn compose(f: &Projectivity1D, g: &Projectivity1D) -> Result<Projectivity1D> {
    let g = g.in_chart(&f.chart)?;
    let mut vals = flat(&f.m);
    vals.extend(flat(&g.m));
    let m = lifted!(&vals, |v| {
        let r = mul_g(&m2(&v, 0), &m2(&v, 4));
        lower_normalized(&[
            r[0][0].clone(),
            r[0][1].clone(),
            r[1][0].clone(),
            r[1][1].clone(),
        ])?
    });
    Projectivity1D::from_matrix(f.chart.clone(), m2(&m, 0))
}

/// Matrix proportionality in a common chart.
pub fn equals(f: &Projectivity1D, g: &Projectivity1D) -> Result<bool> {
    let g = g.in_chart(&f.chart)?;
    let mut vals = flat(&f.m);
    vals.extend(flat(&g.m));
    Ok(lifted!(&vals, |v| {
        (0..4).all(|i| (0..4).all(|j| v[i].fmul(&v[4 + j]).fsub(&v[j].fmul(&v[4 + i])).fzero()))
    }))
}

pub fn fixed_points(f: &Projectivity1D) -> Result<ChordPair> {
    f.fixed_points()
}

pub fn apply(f: &Projectivity1D, p: &Point) -> Result<Point> {
    f.apply(p)
}

/// The unique involution exchanging the points of each pair; a pair may be a
/// repeated point, which is then fixed.
pub fn involution_from_pairs(
    pair1: (&Point, &Point),
    pair2: (&Point, &Point),
    chart: &LineChart,
) -> Result<Projectivity1D> {
    let mut vals = chart.values();
    for p in [pair1.0, pair1.1, pair2.0, pair2.1] {
        vals.extend(p.coords().iter().cloned());
    }
    let m = lifted!(&vals, |v| {
        let (b0, b1) = (v3(&v, 0), v3(&v, 3));
        let mut eqs = Vec::with_capacity(2);
        for i in 0..2 {
            let [s, t] = param_g(&b0, &b1, &v3(&v, 6 + 6 * i))?;
            let [s2, t2] = param_g(&b0, &b1, &v3(&v, 9 + 6 * i))?;
            // [[α, β], [γ, −α]] maps (s, t) onto (s2, t2)
            eqs.push([
                s.fmul(&t2).fadd(&t.fmul(&s2)),
                t.fmul(&t2),
                s.fmul(&s2).fneg(),
            ]);
        }
        let k = cross(&eqs[0], &eqs[1]);
        if k.iter().all(FieldOps::fzero) {
            return Err(Error::InconsistentPairs);
        }
        let mat = [[k[0].clone(), k[1].clone()], [k[2].clone(), k[0].fneg()]];
        if det_g(&mat).fzero() {
            return Err(Error::InconsistentPairs);
        }
        lower_normalized(&[k[0].clone(), k[1].clone(), k[2].clone(), k[0].fneg()])?
    });
    Projectivity1D::from_matrix(chart.clone(), m2(&m, 0))
}

/// Meets of the three pairs of opposite sides of a quadrangle with a line.
pub fn opposite_side_pairs(q: &[Point; 4], a: &Line) -> Result<[(Point, Point); 3]> {
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if collinear(&q[i], &q[j], &q[k])? {
            return Err(Error::DegenerateQuadrangle);
        }
    }
    for v in q {
        if incident(v, a)? {
            return Err(Error::VertexOnLine);
        }
    }
    let side =
        |i: usize, j: usize| -> Result<Point> { meet(&crate::projective::join(&q[i], &q[j])?, a) };
    Ok([
        (side(0, 1)?, side(2, 3)?),
        (side(0, 2)?, side(1, 3)?),
        (side(0, 3)?, side(1, 2)?),
    ])
}

/// Pappus' involution of a quadrangle on a line, built from the two pairs
/// other than `skip` and checked against the remaining pair.
pub fn quadrangular_involution_skipping(
    q: &[Point; 4],
    a: &Line,
    chart: &LineChart,
    skip: usize,
) -> Result<Projectivity1D> {
    let pairs = opposite_side_pairs(q, a)?;
    let used: Vec<&(Point, Point)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, p)| p)
        .collect();
    let f = involution_from_pairs((&used[0].0, &used[0].1), (&used[1].0, &used[1].1), chart)?;
    let (x, y) = &pairs[skip];
    if f.apply(x)? != *y {
        return Err(Error::PappusViolation);
    }
    Ok(f)
}

pub fn quadrangular_involution(
    q: &[Point; 4],
    a: &Line,
    chart: &LineChart,
) -> Result<Projectivity1D> {
    quadrangular_involution_skipping(q, a, chart, 2)
}

/// P ↦ a·polar(P); its fixed points are the meets of `a` with the conic.
pub fn conjugacy_involution(a: &Line, conic: &Conic, chart: &LineChart) -> Result<Projectivity1D> {
    if chart.line() != a {
        return Err(Error::DifferentLines);
    }
    if crate::projective::is_tangent(a, conic) {
        return Err(Error::TangentLine);
    }
    let image = |p: &Point| meet(a, &polar(p, conic));
    let b0 = chart.base0.clone();
    let b1 = chart.base1.clone();
    let b2 = chart.point_at(&QExt::one(), &QExt::one())?;
    let (i0, i1, i2) = (image(&b0)?, image(&b1)?, image(&b2)?);
    involution_from_pairs((&b0, &i0), (&b1, &i1), chart)
        .or_else(|_| involution_from_pairs((&b0, &i0), (&b2, &i2), chart))
}

/// The involution fixing `m1` and `m2`.
pub fn harmonic_involution(m1: &Point, m2: &Point, chart: &LineChart) -> Result<Projectivity1D> {
    if m1 == m2 {
        return Err(Error::CoincidentPoints);
    }
    involution_from_pairs((m1, m1), (m2, m2), chart)
}
