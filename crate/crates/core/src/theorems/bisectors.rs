//! Bisectors of the angle at the vertex opposite A of a diametral quadrangle.

use crate::error::Result;
use crate::model::{angle_bisectors, foot, perpendicular, same_unordered, Geometry, Model};
use crate::projective::{incident, join, pole, polar, meet, Point};

use super::diametral::DiametralConfig;
use super::report::Report;
use super::shadows::{shadow_classify, ShadowKind};

/// A quadrangle A, B, V, D with right angles at B and D, viewed from the
/// apex V, together with the foot F of the perpendicular from V to BD.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisectorFigure {
    pub model: Model,
    pub a: Point,
    pub b: Point,
    pub apex: Point,
    pub d: Point,
    pub foot: Point,
}

impl BisectorFigure {
    pub fn from_quadrangle(model: &Model, a: &Point, b: &Point, apex: &Point, d: &Point) -> Result<Self> {
        let foot = foot(apex, &join(b, d)?, model)?;
        Ok(BisectorFigure {
            model: model.clone(),
            a: a.clone(),
            b: b.clone(),
            apex: apex.clone(),
            d: d.clone(),
            foot,
        })
    }

    pub fn named_points(&self) -> Vec<(&'static str, &Point)> {
        vec![("A", &self.a), ("B", &self.b), ("V", &self.apex), ("D", &self.d), ("F", &self.foot)]
    }
}

/// The bisectors of the angle BVD are those of the angle between VA and VF.
pub fn check_bisectors(fig: &BisectorFigure) -> Report {
    let mut r = Report::new(format!("bisectors ({:?})", fig.model.geometry()).to_lowercase());
    for (n, p) in fig.named_points() {
        r.point(n, p);
    }
    let m = &fig.model;
    let (a, b, v, d, f) = (&fig.a, &fig.b, &fig.apex, &fig.d, &fig.foot);
    let right = |x: &Point| -> Result<bool> { perpendicular(&join(a, x)?, &join(x, v)?, m) };
    r.check_result("right-angle-B", right(b));
    r.check_result("right-angle-D", right(d));
    let bd = join(b, d);
    r.check_result(
        "foot",
        bd.and_then(|bd| Ok(incident(f, &bd)? && perpendicular(&join(v, f)?, &bd, m)?)),
    );
    let res = (|| -> Result<Option<bool>> {
        let (va, vf) = (join(v, a)?, join(v, f)?);
        if va == vf {
            return Ok(None);
        }
        let (x1, x2) = angle_bisectors(&join(v, b)?, &join(v, d)?, m)?;
        let (y1, y2) = angle_bisectors(&va, &vf, m)?;
        r.line("bisector1", &x1);
        r.line("bisector2", &x2);
        Ok(Some(same_unordered(&x1, &x2, &y1, &y2)))
    })();
    match res {
        Ok(Some(ok)) => {
            r.check("bisectors", ok);
        }
        Ok(None) => {
            r.vacuous("bisectors", "VA is already perpendicular to BD");
        }
        Err(e) => {
            r.record("bisectors", super::Outcome::Fail, e.to_string());
        }
    }
    r
}

/// For a hyperbolic configuration with BD exterior the quadrangle is
/// A, B1, A', D1 (B1, D1 on the polars of B, D); otherwise A, B, C, D.
pub fn bisector_figure(cfg: &DiametralConfig) -> Result<BisectorFigure> {
    let m = &cfg.model;
    if m.geometry() == Geometry::Hyperbolic && shadow_classify(cfg) == Ok(ShadowKind::QuadrangleII) {
        let k = m.conic().expect("hyperbolic");
        let b1 = meet(&polar(&cfg.b, k), &join(&cfg.a, &cfg.b)?)?;
        let d1 = meet(&polar(&cfg.d, k), &join(&cfg.a, &cfg.d)?)?;
        let ap = pole(&cfg.line_a, k);
        return BisectorFigure::from_quadrangle(m, &cfg.a, &b1, &ap, &d1);
    }
    BisectorFigure::from_quadrangle(m, &cfg.a, &cfg.b, &cfg.c, &cfg.d)
}

pub fn verify_bisectors(cfg: &DiametralConfig) -> Result<Report> {
    Ok(check_bisectors(&bisector_figure(cfg)?))
}
