//! The n-dimensional euclidean version: for a simplex A0..An, the midpoint of
//! A*C* is the circumcenter of the facet opposite A0.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, Rational};

use super::report::Report;

pub type Vector = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexConfig {
    pub vertices: Vec<Vector>,
    /// Meet of the hyperplanes through Ai with normal Ai − A0.
    pub c: Option<Vector>,
    /// Projections of A0 and C onto the facet hyperplane through A1..An.
    pub a_star: Option<Vector>,
    pub c_star: Option<Vector>,
    pub circumcenter: Option<Vector>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_scaled(a: &[Rational], s: &Rational, b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

fn midpoint(a: &[Rational], b: &[Rational]) -> Vector {
    let half = Rational::new(1.into(), 2.into());
    a.iter().zip(b).map(|(x, y)| (x + y) * &half).collect()
}

/// Exact Gauss-Jordan elimination; `None` for a singular system.
pub fn solve(mut m: Vec<Vector>, mut rhs: Vector) -> Option<Vector> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].recip();
        for j in col..n {
            m[col][j] = &m[col][j] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..n {
                    let t = &f * &m[col][j];
                    m[r][j] -= t;
                }
                let t = &f * &rhs[col];
                rhs[r] -= t;
            }
        }
    }
    Some(rhs)
}

/// Orthogonal projection of `x` onto the affine hull of `pts`.
fn project(x: &[Rational], pts: &[Vector]) -> Option<Vector> {
    let base = &pts[0];
    let dirs: Vec<Vector> = pts[1..].iter().map(|p| sub(p, base)).collect();
    let gram = dirs.iter().map(|u| dirs.iter().map(|v| dot(u, v)).collect()).collect();
    let rel = sub(x, base);
    let coef = solve(gram, dirs.iter().map(|u| dot(u, &rel)).collect())?;
    Some(dirs.iter().zip(&coef).fold(base.clone(), |acc, (u, c)| add_scaled(&acc, c, u)))
}

/// Circumcenter of `pts` within their affine hull.
fn circumcenter(pts: &[Vector]) -> Option<Vector> {
    let base = &pts[0];
    let dirs: Vec<Vector> = pts[1..].iter().map(|p| sub(p, base)).collect();
    let gram = dirs.iter().map(|u| dirs.iter().map(|v| dot(u, v) * Rational::from_integer(2.into())).collect()).collect();
    let coef = solve(gram, dirs.iter().map(|u| dot(u, u)).collect())?;
    Some(dirs.iter().zip(&coef).fold(base.clone(), |acc, (u, c)| add_scaled(&acc, c, u)))
}

impl SimplexConfig {
    pub fn new(vertices: Vec<Vector>) -> Result<Self> {
        let n = vertices.first().map(Vec::len).unwrap_or(0);
        if n < 2 || vertices.len() != n + 1 || vertices.iter().any(|v| v.len() != n) {
            return Err(Error::DegenerateSimplex);
        }
        let dirs: Vec<Vector> = vertices[1..].iter().map(|p| sub(p, &vertices[0])).collect();
        let gram: Vec<Vector> = dirs.iter().map(|u| dirs.iter().map(|v| dot(u, v)).collect()).collect();
        if solve(gram, vec![Rational::one(); n]).is_none() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(SimplexConfig { vertices, c: None, a_star: None, c_star: None, circumcenter: None })
    }

    pub fn from_ints(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(vertices.iter().map(|v| v.iter().map(|x| Rational::from_integer((*x).into())).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn facet(&self) -> &[Vector] {
        &self.vertices[1..]
    }
}

/// Fills in C, A*, C* and the circumcenter of the facet.
pub fn simplex_derive(cfg: &SimplexConfig) -> Result<SimplexConfig> {
    let a0 = &cfg.vertices[0];
    let rows: Vec<Vector> = cfg.facet().iter().map(|ai| sub(ai, a0)).collect();
    let rhs = rows.iter().zip(cfg.facet()).map(|(r, ai)| dot(r, ai)).collect();
    let singular = Error::Internal("affinely independent vertices give a regular system");
    let c = solve(rows, rhs).ok_or(singular.clone())?;
    let a_star = project(a0, cfg.facet()).ok_or(singular.clone())?;
    let c_star = project(&c, cfg.facet()).ok_or(singular.clone())?;
    let circ = circumcenter(cfg.facet()).ok_or(singular)?;
    Ok(SimplexConfig {
        vertices: cfg.vertices.clone(),
        c: Some(c),
        a_star: Some(a_star),
        c_star: Some(c_star),
        circumcenter: Some(circ),
    })
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Whether `p` is the projection of `x` onto the facet: it lies in the facet
/// hyperplane and x − p is orthogonal to every edge of the facet.
fn is_projection(x: &[Rational], p: &[Rational], facet: &[Vector]) -> bool {
    let base = &facet[0];
    let dirs: Vec<Vector> = facet[1..].iter().map(|q| sub(q, base)).collect();
    let in_plane = project(p, facet).map(|q| q == p).unwrap_or(false);
    let orth = dirs.iter().all(|u| dot(u, &sub(x, p)).is_zero());
    in_plane && orth
}

/// Checks every stored derived point against its definition, then the
/// midpoint identity and the diametral sphere through all vertices and C.
pub fn verify_simplex(cfg: &SimplexConfig) -> Report {
    let mut r = Report::new(format!("n-simplex n={}", cfg.dim()));
    let (Some(c), Some(sa), Some(sc), Some(circ)) = (&cfg.c, &cfg.a_star, &cfg.c_star, &cfg.circumcenter) else {
        r.record("derived", super::Outcome::Fail, "configuration not derived");
        return r;
    };
    for (i, v) in cfg.vertices.iter().enumerate() {
        r.witness.push((format!("A{i}"), format_vector(v)));
    }
    for (n, v) in [("C", c), ("A*", sa), ("C*", sc), ("O", circ)] {
        r.witness.push((n.to_string(), format_vector(v)));
    }
    let a0 = &cfg.vertices[0];
    let facet = cfg.facet();
    r.check("C-on-hyperplanes", facet.iter().all(|ai| dot(&sub(ai, a0), &sub(c, ai)).is_zero()));
    r.check("A*-projection", is_projection(a0, sa, facet));
    r.check("C*-projection", is_projection(c, sc, facet));
    let d0 = dot(&sub(circ, &facet[0]), &sub(circ, &facet[0]));
    let equidistant = facet.iter().all(|p| dot(&sub(circ, p), &sub(circ, p)) == d0);
    r.check("circumcenter", equidistant && project(circ, facet).map(|q| q == *circ).unwrap_or(false));
    let mid = midpoint(sa, sc);
    r.witness.push(("midpoint(A*,C*)".to_string(), format_vector(&mid)));
    r.check("midpoint-is-circumcenter", mid == *circ);
    let center = midpoint(a0, c);
    let quarter = Rational::new(1.into(), 4.into());
    let rad2 = dot(&sub(a0, c), &sub(a0, c)) * quarter;
    let on_sphere = cfg.vertices.iter().all(|v| dot(&sub(v, &center), &sub(v, &center)) == rad2);
    r.check("diametral-sphere", on_sphere);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(xs: &[Rational]) -> Vector {
        xs.to_vec()
    }

    #[test]
    fn right_corner_tetrahedron() {
        let cfg = SimplexConfig::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let d = simplex_derive(&cfg).unwrap();
        let third = rat(1, 3);
        assert_eq!(d.c.as_ref().unwrap(), &v(&[rat(1, 1), rat(1, 1), rat(1, 1)]));
        let t = v(&[third.clone(), third.clone(), third]);
        assert_eq!(d.a_star.as_ref().unwrap(), &t);
        assert_eq!(d.c_star.as_ref().unwrap(), &t);
        assert_eq!(d.circumcenter.as_ref().unwrap(), &t);
        let r = verify_simplex(&d);
        assert!(r.passed(), "{r}");
        let center = midpoint(&d.vertices[0], d.c.as_ref().unwrap());
        assert_eq!(center, v(&[rat(1, 2), rat(1, 2), rat(1, 2)]));
        for p in &d.vertices {
            assert_eq!(dot(&sub(p, &center), &sub(p, &center)), rat(3, 4));
        }
    }

    #[test]
    fn right_triangle_2_0_4() {
        let cfg = SimplexConfig::from_ints(&[&[0, 0], &[2, 0], &[0, 4]]).unwrap();
        let d = simplex_derive(&cfg).unwrap();
        assert_eq!(d.a_star.as_ref().unwrap(), &v(&[rat(8, 5), rat(4, 5)]));
        assert_eq!(d.c_star.as_ref().unwrap(), &v(&[rat(2, 5), rat(16, 5)]));
        assert_eq!(midpoint(d.a_star.as_ref().unwrap(), d.c_star.as_ref().unwrap()), v(&[rat(1, 1), rat(2, 1)]));
        assert!(verify_simplex(&d).passed());
    }

    #[test]
    fn degenerate_rejected() {
        assert_eq!(SimplexConfig::from_ints(&[&[0, 0], &[1, 1], &[2, 2]]), Err(Error::DegenerateSimplex));
        assert_eq!(SimplexConfig::from_ints(&[&[0], &[1]]), Err(Error::DegenerateSimplex));
    }

    #[test]
    fn solver() {
        let m = vec![v(&[rat(2, 1), rat(1, 1)]), v(&[rat(1, 1), rat(3, 1)])];
        assert_eq!(solve(m, v(&[rat(3, 1), rat(5, 1)])).unwrap(), v(&[rat(4, 5), rat(7, 5)]));
        let s = vec![v(&[rat(1, 1), rat(2, 1)]), v(&[rat(2, 1), rat(4, 1)])];
        assert!(solve(s, v(&[rat(1, 1), rat(1, 1)])).is_none());
    }
}
