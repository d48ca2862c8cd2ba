//! Diametral quadrilaterals: right angles at the opposite vertices B and D.

use crate::error::{Error, Result};
use crate::involutions::{
    compose, conjugacy_involution, equals, harmonic_involution, quadrangular_involution, LineChart,
};
use crate::model::{drop_perpendicular, foot, midpoints, perpendicular, Geometry, MidpointPair, Model};
use crate::projective::{
    collinear, harmonic_conjugate, incident, is_harmonic, is_tangent, join, meet, pole, Line, Point,
};

use super::report::{Outcome, Report};

/// Which degenerate family a configuration belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degenerate {
    /// A* = B, which forces C = C* = D.
    AStarAtB,
    /// A* = D, which forces C = C* = B.
    AStarAtD,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiametralConfig {
    pub model: Model,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    /// The diagonal BD.
    pub line_a: Line,
    /// Pole of BD; absent in the euclidean plane.
    pub a_prime: Option<Point>,
    pub a_star: Point,
    pub c_star: Point,
    /// Midpoints of BD.
    pub midpoints: MidpointPair,
    pub degenerate: Option<Degenerate>,
}

fn guard(name: &str) -> Error {
    Error::Guard(name.to_string())
}

fn no_three_collinear(ps: &[&Point], name: &str) -> Result<()> {
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps[i] == ps[j] {
                return Err(guard(name));
            }
            for k in j + 1..ps.len() {
                if collinear(ps[i], ps[j], ps[k])? {
                    return Err(guard(name));
                }
            }
        }
    }
    Ok(())
}

/// C is the meet of the perpendiculars to AB at B and to AD at D.
pub fn build_diametral(model: &Model, a: &Point, b: &Point, d: &Point) -> Result<DiametralConfig> {
    if a == b || a == d || b == d {
        return Err(guard("coincident-input"));
    }
    if collinear(a, b, d)? {
        return Err(guard("collinear-input"));
    }
    let conic = model.conic();
    if let Model::Euclidean { infinity_line, .. } = model {
        for p in [a, b, d] {
            if incident(p, infinity_line)? {
                return Err(guard("point-at-infinity"));
            }
        }
    }
    let (ab, ad, bd) = (join(a, b)?, join(a, d)?, join(b, d)?);
    if let Some(k) = conic {
        if [a, b, d].iter().any(|p| k.contains(p)) {
            return Err(guard("vertex-on-absolute"));
        }
        if [&ab, &ad, &bd].iter().any(|l| is_tangent(l, k)) {
            return Err(guard("tangent-side"));
        }
    }
    let pb = drop_perpendicular(b, &ab, model)?;
    let pd = drop_perpendicular(d, &ad, model)?;
    let c = meet(&pb, &pd).map_err(|_| guard("coincident-perpendiculars"))?;
    let a_prime = conic.map(|k| pole(&bd, k));
    if let Some(ap) = &a_prime {
        if ap == a || ap == &c {
            return Err(guard("vertex-is-pole"));
        }
    }
    if let Model::Euclidean { infinity_line, .. } = model {
        if incident(&c, infinity_line)? {
            return Err(guard("point-at-infinity"));
        }
    }
    let a_star = foot(a, &bd, model)?;
    let degenerate = if a_star == *b {
        Some(Degenerate::AStarAtB)
    } else if a_star == *d {
        Some(Degenerate::AStarAtD)
    } else {
        None
    };
    let c_star = if c == *b || c == *d { c.clone() } else { foot(&c, &bd, model)? };
    if degenerate.is_none() {
        no_three_collinear(&[a, b, &c, d], "collinear-vertices")?;
        general_position(model, a, b, &c, d)?;
        if let (Some(k), Some(ap)) = (conic, &a_prime) {
            let bp = pole(&ab, k);
            let dp = pole(&ad, k);
            no_three_collinear(&[&c, ap, &bp, &dp], "aux-quadrangle-degenerate")?;
            for v in [&c, ap, &bp, &dp] {
                if incident(v, &bd)? {
                    return Err(guard("aux-vertex-on-line"));
                }
            }
            if k.contains(&a_star) || k.contains(&c_star) {
                return Err(guard("foot-on-absolute"));
            }
        }
    }
    let midpoints = midpoints(b, d, model)?;
    Ok(DiametralConfig {
        model: model.clone(),
        a: a.clone(),
        b: b.clone(),
        c,
        d: d.clone(),
        line_a: bd,
        a_prime,
        a_star,
        c_star,
        midpoints,
        degenerate,
    })
}

/// Vertices and diagonal points off the absolute; sides and diagonal lines
/// not tangent to it.
fn general_position(model: &Model, a: &Point, b: &Point, c: &Point, d: &Point) -> Result<()> {
    let Some(k) = model.conic() else {
        return Ok(());
    };
    if k.contains(c) {
        return Err(guard("vertex-on-absolute"));
    }
    let sides = [join(a, b)?, join(a, c)?, join(a, d)?, join(b, c)?, join(b, d)?, join(c, d)?];
    if sides.iter().any(|l| is_tangent(l, k)) {
        return Err(guard("tangent-side"));
    }
    let diag = [meet(&sides[0], &sides[5])?, meet(&sides[1], &sides[4])?, meet(&sides[2], &sides[3])?];
    if diag.iter().any(|p| k.contains(p)) {
        return Err(guard("diagonal-on-absolute"));
    }
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let l = join(&diag[i], &diag[j]).map_err(|_| guard("diagonal-points-coincide"))?;
        if is_tangent(&l, k) {
            return Err(guard("tangent-diagonal"));
        }
    }
    Ok(())
}

impl DiametralConfig {
    pub fn named_points(&self) -> Vec<(&'static str, Point)> {
        let mut v = vec![
            ("A", self.a.clone()),
            ("B", self.b.clone()),
            ("C", self.c.clone()),
            ("D", self.d.clone()),
            ("A*", self.a_star.clone()),
            ("C*", self.c_star.clone()),
            ("M1", self.midpoints.e1.clone()),
            ("M2", self.midpoints.e2.clone()),
        ];
        if let Some(ap) = &self.a_prime {
            v.push(("A'", ap.clone()));
        }
        v
    }

    pub fn geometry(&self) -> Geometry {
        self.model.geometry()
    }
}

fn witness(r: &mut Report, cfg: &DiametralConfig) {
    for (n, p) in cfg.named_points() {
        r.point(n, &p);
    }
}

/// Whether `p` is the foot of the perpendicular from `from` onto `l`.
fn is_foot(from: &Point, p: &Point, l: &Line, model: &Model) -> Result<bool> {
    if !incident(p, l)? {
        return Ok(false);
    }
    if from == p {
        return Ok(true);
    }
    perpendicular(&join(from, p)?, l, model)
}

/// Hypotheses of the configuration, re-checked from the stored points.
fn check_hypotheses(r: &mut Report, cfg: &DiametralConfig) {
    let m = &cfg.model;
    let right = |x: &Point, y: &Point| -> Result<bool> {
        perpendicular(&join(&cfg.a, x)?, &join(x, y)?, m)
    };
    if cfg.c == cfg.b || cfg.c == cfg.d {
        r.vacuous("right-angles", "C coincides with a vertex of BD");
    } else {
        r.check_result("right-angle-B", right(&cfg.b, &cfg.c));
        r.check_result("right-angle-D", right(&cfg.d, &cfg.c));
    }
    r.check_result("diagonal-a", join(&cfg.b, &cfg.d).map(|l| l == cfg.line_a));
    if let (Some(k), Some(ap)) = (m.conic(), &cfg.a_prime) {
        r.check("pole-of-a", pole(&cfg.line_a, k) == *ap);
    }
    r.check_result("foot-A", is_foot(&cfg.a, &cfg.a_star, &cfg.line_a, m));
    r.check_result("foot-C", is_foot(&cfg.c, &cfg.c_star, &cfg.line_a, m));
    let mp = &cfg.midpoints;
    let mids = match m {
        Model::Euclidean { infinity_line, .. } => incident(&mp.e2, infinity_line)
            .and_then(|inf| Ok(inf && incident(&mp.e1, &cfg.line_a)? && is_harmonic(&cfg.b, &cfg.d, &mp.e1, &mp.e2)?)),
        Model::NonEuclidean { .. } => {
            crate::model::lemma_midpoint_check(&cfg.b, &cfg.d, &mp.e1, &mp.e2, m)
        }
    };
    r.check_result("midpoints-BD", mids);
}

/// Midpoints of A*C* agree with those of BD, checked directly and through
/// the involution identity ρ∘τ = σ (or the harmonic property of M in the
/// euclidean plane).
pub fn verify_midpoint_theorem(cfg: &DiametralConfig) -> Report {
    let mut r = Report::new(match cfg.geometry() {
        Geometry::Euclidean => "diametral quadrilateral (euclidean)",
        Geometry::Hyperbolic => "diametral quadrilateral (hyperbolic)",
        Geometry::Elliptic => "diametral quadrilateral (elliptic)",
    });
    witness(&mut r, cfg);
    check_hypotheses(&mut r, cfg);
    let mp = &cfg.midpoints;
    let (sa, sc) = (&cfg.a_star, &cfg.c_star);
    if let Some(deg) = cfg.degenerate {
        let (far_a, far_c) = match deg {
            Degenerate::AStarAtB => (&cfg.b, &cfg.d),
            Degenerate::AStarAtD => (&cfg.d, &cfg.b),
        };
        r.check("degenerate-A*", sa == far_a);
        r.check("degenerate-C*", sc == far_c);
        r.vacuous("involution", "A* and C* are the ends of BD");
        return r;
    }
    let euclid = matches!(cfg.model, Model::Euclidean { .. });
    let direct = if sa == sc {
        if euclid { *sa == mp.e1 } else { mp.contains(sa) }
    } else {
        match midpoints(sa, sc, &cfg.model) {
            Ok(other) if euclid => other.e1 == mp.e1,
            Ok(other) => {
                let interior_ok = match (mp.interior_point(), other.interior_point()) {
                    (Some(x), Some(y)) => x == y,
                    _ => true,
                };
                other.same_pair(mp) && interior_ok
            }
            Err(e) => {
                r.record("direct", Outcome::Fail, e.to_string());
                false
            }
        }
    };
    let direct = if r.outcome("direct").is_none() { r.check("direct", direct) } else { Outcome::Fail };
    let second = match &cfg.model {
        Model::Euclidean { infinity_line, .. } => {
            let res = meet(&cfg.line_a, infinity_line).and_then(|a0| {
                r.point("A0", &a0);
                if sa == sc {
                    Ok(*sa == mp.e1)
                } else {
                    Ok(harmonic_conjugate(sa, sc, &a0)? == mp.e1)
                }
            });
            r.check_result("harmonic-M", res)
        }
        Model::NonEuclidean { .. } => involution_route(&mut r, cfg),
    };
    r.check("routes-agree", direct == second);
    r
}

fn involution_route(r: &mut Report, cfg: &DiametralConfig) -> Outcome {
    let run = |r: &mut Report| -> Result<Outcome> {
        let k = cfg.model.conic().ok_or(Error::Internal("conic"))?;
        let a = &cfg.line_a;
        let chart = LineChart::for_line(a);
        let ap = cfg.a_prime.clone().ok_or(Error::Internal("pole"))?;
        let bp = pole(&join(&cfg.a, &cfg.b)?, k);
        let dp = pole(&join(&cfg.a, &cfg.d)?, k);
        r.point("B'", &bp);
        r.point("D'", &dp);
        let b0 = meet(&join(&ap, &bp)?, a)?;
        let d0 = meet(&join(&dp, &ap)?, a)?;
        let n = meet(&join(&bp, &dp)?, a)?;
        r.point("B0", &b0);
        r.point("D0", &d0);
        r.point("N", &n);
        let tau = quadrangular_involution(&[cfg.c.clone(), ap, bp, dp], a, &chart)?;
        let rho = conjugacy_involution(a, k, &chart)?;
        let sigma = harmonic_involution(&cfg.midpoints.e1, &cfg.midpoints.e2, &chart)?;
        r.check("tau-B", tau.apply(&cfg.b)? == d0);
        r.check("tau-D", tau.apply(&cfg.d)? == b0);
        r.check("tau-C*", tau.apply(&cfg.c_star)? == n);
        r.check("rho-N", rho.apply(&n)? == cfg.a_star);
        let ident = equals(&compose(&rho, &tau)?, &sigma)?;
        r.check("rho-tau-sigma", ident);
        Ok(r.check("sigma-C*", sigma.apply(&cfg.c_star)? == cfg.a_star && ident))
    };
    match run(r) {
        Ok(o) => o,
        Err(e) => r.record("involution", Outcome::Fail, e.to_string()),
    }
}
