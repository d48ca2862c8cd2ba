//! Hyperbolic polygons arising from the same projective configuration when
//! vertices move outside the absolute conic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{common_perpendicular, foot, lemma_midpoint_check, midpoints, perpendicular, MidpointPair, Model};
use crate::projective::{classify_point, incident, join, line_position, meet, pole, polar, ConicKind, LinePosition};
use crate::projective::{Conic, Line, Point, PointClass};

use super::bisectors::{check_bisectors, BisectorFigure};
use super::diametral::DiametralConfig;
use super::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShadowKind {
    QuadrilateralI,
    PentagonI,
    HexagonI,
    PentagonII,
    HexagonII,
    QuadrangleII,
}

impl ShadowKind {
    pub const ALL: [ShadowKind; 6] = [
        ShadowKind::QuadrilateralI,
        ShadowKind::PentagonI,
        ShadowKind::HexagonI,
        ShadowKind::PentagonII,
        ShadowKind::HexagonII,
        ShadowKind::QuadrangleII,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ShadowKind::QuadrilateralI => "quadrilateral-I",
            ShadowKind::PentagonI => "pentagon-I",
            ShadowKind::HexagonI => "hexagon-I",
            ShadowKind::PentagonII => "pentagon-II",
            ShadowKind::HexagonII => "hexagon-II",
            ShadowKind::QuadrangleII => "quadrangle-II",
        }
    }
}

impl fmt::Display for ShadowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShadowKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == key)
            .ok_or_else(|| format!("unknown shadow kind {s:?}"))
    }
}

fn real_conic(cfg: &DiametralConfig) -> Result<&Conic> {
    match cfg.model.conic() {
        Some(k) if k.kind() == ConicKind::Real => Ok(k),
        _ => Err(Error::NotApplicable("shadows need a real absolute conic")),
    }
}

/// Tag from the position of the vertices and of BD relative to the conic.
pub fn shadow_classify(cfg: &DiametralConfig) -> Result<ShadowKind> {
    let k = real_conic(cfg)?;
    let cls = |p: &Point, name: &'static str| -> Result<bool> {
        match classify_point(p, k)? {
            PointClass::On => Err(Error::BoundaryVertex(name)),
            c => Ok(c == PointClass::Interior),
        }
    };
    let (a, b, c, d) = (cls(&cfg.a, "A")?, cls(&cfg.b, "B")?, cls(&cfg.c, "C")?, cls(&cfg.d, "D")?);
    let bd = line_position(&cfg.line_a, k)?;
    use ShadowKind::*;
    Ok(match (a, b, c, d, bd) {
        (true, true, true, true, _) => QuadrilateralI,
        (true, true, false, true, _) => PentagonI,
        (false, true, false, true, _) => HexagonI,
        (_, false, _, false, LinePosition::Exterior) => QuadrangleII,
        (true, false, false, false, LinePosition::Secant) => PentagonII,
        (false, false, false, false, LinePosition::Secant) => HexagonII,
        _ => return Err(Error::UnclassifiedShadow),
    })
}

/// Whether A, B, D and the diagonal BD can belong to a figure of `kind`,
/// before C is known.
pub fn shadow_admits(kind: ShadowKind, conic: &Conic, a: &Point, b: &Point, d: &Point) -> Result<bool> {
    let inside = |p: &Point| -> Result<bool> { Ok(classify_point(p, conic)? == PointClass::Interior) };
    let (a_in, b_in, d_in) = (inside(a)?, inside(b)?, inside(d)?);
    let bd = || line_position(&join(b, d)?, conic);
    use ShadowKind::*;
    Ok(match kind {
        QuadrilateralI | PentagonI => a_in && b_in && d_in,
        HexagonI => !a_in && b_in && d_in,
        QuadrangleII => !b_in && !d_in && bd()? == LinePosition::Exterior,
        PentagonII => a_in && !b_in && !d_in && bd()? == LinePosition::Secant,
        HexagonII => !a_in && !b_in && !d_in && bd()? == LinePosition::Secant,
    })
}

/// The named points of one shadow figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowFigure {
    pub kind: ShadowKind,
    pub model: Model,
    pub points: Vec<(String, Point)>,
}

impl ShadowFigure {
    pub fn get(&self, name: &str) -> Result<&Point> {
        self.points
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or(Error::NotApplicable("missing named point"))
    }

    pub fn set(&mut self, name: &str, p: Point) {
        if let Some(e) = self.points.iter_mut().find(|(n, _)| n == name) {
            e.1 = p;
        } else {
            self.points.push((name.to_string(), p));
        }
    }

    /// Names whose positions the verifier depends on.
    pub fn inputs(&self) -> Vec<&str> {
        self.points.iter().map(|(n, _)| n.as_str()).collect()
    }
}

/// Collects the shadow-specific points: the meets of the polars of exterior
/// vertices with the adjacent sides.
pub fn build_shadow(cfg: &DiametralConfig, kind: ShadowKind) -> Result<ShadowFigure> {
    let found = shadow_classify(cfg)?;
    if found != kind {
        return Err(Error::KindMismatch { expected: kind.name().into(), found: found.name().into() });
    }
    let k = real_conic(cfg)?;
    let (a, b, c, d) = (&cfg.a, &cfg.b, &cfg.c, &cfg.d);
    let mut pts: Vec<(String, Point)> =
        [("A", a), ("B", b), ("C", c), ("D", d)].iter().map(|(n, p)| (n.to_string(), (*p).clone())).collect();
    let mut add = |name: &str, p: Point| pts.push((name.to_string(), p));
    let side_meet = |v: &Point, w: &Point| -> Result<Point> { meet(&polar(v, k), &join(v, w)?) };
    use ShadowKind::*;
    if matches!(kind, PentagonI | HexagonI | PentagonII | HexagonII) {
        add("C1", side_meet(c, b)?);
        add("C2", side_meet(c, d)?);
    }
    if matches!(kind, HexagonI | HexagonII) {
        add("A1", side_meet(a, b)?);
        add("A2", side_meet(a, d)?);
    }
    if matches!(kind, PentagonII | HexagonII | QuadrangleII) {
        add("B1", side_meet(b, a)?);
        add("B2", side_meet(b, d)?);
        add("D1", side_meet(d, a)?);
        add("D2", side_meet(d, b)?);
    }
    if kind == QuadrangleII {
        add("A'", pole(&cfg.line_a, k));
    }
    Ok(ShadowFigure { kind, model: cfg.model.clone(), points: pts })
}

fn same_midpoints(r: &mut Report, name: &str, x: &MidpointPair, y: &MidpointPair) {
    let interior_ok = match (x.interior_point(), y.interior_point()) {
        (Some(p), Some(q)) => p == q,
        _ => true,
    };
    r.check(name, x.same_pair(y) && interior_ok);
}

/// Checks the stated midpoint coincidence of a shadow figure, building A*
/// and C* from the figure's own named points.
pub fn check_shadow(fig: &ShadowFigure) -> Report {
    let mut r = Report::new(format!("shadow {}", fig.kind));
    for (n, p) in &fig.points {
        r.point(n, p);
    }
    if let Err(e) = shadow_body(&mut r, fig) {
        r.record("construction", super::Outcome::Fail, e.to_string());
    }
    r
}

/// Auxiliary points: the meet of the polar of the first vertex with the side
/// to the second.
const SIDE_POINTS: [(&str, &str, &str); 8] = [
    ("C1", "C", "B"),
    ("C2", "C", "D"),
    ("A1", "A", "B"),
    ("A2", "A", "D"),
    ("B1", "B", "A"),
    ("B2", "B", "D"),
    ("D1", "D", "A"),
    ("D2", "D", "B"),
];

fn shadow_body(r: &mut Report, fig: &ShadowFigure) -> Result<()> {
    let m = &fig.model;
    let g = |n: &str| fig.get(n).cloned();
    let (a, b, c, d) = (g("A")?, g("B")?, g("C")?, g("D")?);
    let right = |x: &Point| -> Result<bool> { perpendicular(&join(&a, x)?, &join(x, &c)?, m) };
    r.check_result("right-angle-B", right(&b));
    r.check_result("right-angle-D", right(&d));
    let k = m.conic().ok_or(Error::NotApplicable("shadows need a real absolute"))?;
    for (name, v, w) in SIDE_POINTS {
        if let Ok(p) = fig.get(name) {
            let (v, w) = (g(v)?, g(w)?);
            let ok = incident(p, &polar(&v, k)).and_then(|on| Ok(on && incident(p, &join(&v, &w)?)?));
            r.check_result(&format!("{name}-defined"), ok);
        }
    }
    if let Ok(ap) = fig.get("A'") {
        r.check("A'-defined", pole(&join(&b, &d)?, k) == *ap);
    }
    let (a_star, c_star, reference) = feet(r, fig)?;
    r.point("A*", &a_star);
    r.point("C*", &c_star);
    if a_star == c_star {
        r.check("midpoint-coincidence", reference.contains(&a_star));
    } else {
        let mac = midpoints(&a_star, &c_star, m)?;
        same_midpoints(r, "midpoint-coincidence", &reference, &mac);
    }
    Ok(())
}

/// A* and C* of a shadow figure together with the segment whose midpoints
/// they share.
pub fn shadow_feet(fig: &ShadowFigure) -> Result<(Point, Point, MidpointPair)> {
    feet(&mut Report::new("feet"), fig)
}

fn feet(r: &mut Report, fig: &ShadowFigure) -> Result<(Point, Point, MidpointPair)> {
    use ShadowKind::*;
    let m = &fig.model;
    let g = |n: &str| fig.get(n).cloned();
    let (a, b, c, d) = (g("A")?, g("B")?, g("C")?, g("D")?);
    let bd = join(&b, &d)?;
    let mbd = midpoints(&b, &d, m)?;
    r.point("M1", &mbd.e1);
    r.point("M2", &mbd.e2);
    let through_common = |base: &Line, other: &Line| -> Result<Point> {
        meet(base, &common_perpendicular(base, other, m)?)
    };
    let (a_star, c_star, reference) = match fig.kind {
        QuadrilateralI => (foot(&a, &bd, m)?, foot(&c, &bd, m)?, mbd.clone()),
        PentagonI => {
            let c12 = join(&g("C1")?, &g("C2")?)?;
            (foot(&a, &bd, m)?, through_common(&bd, &c12)?, mbd.clone())
        }
        HexagonI => {
            let a12 = join(&g("A1")?, &g("A2")?)?;
            let c12 = join(&g("C1")?, &g("C2")?)?;
            (through_common(&bd, &a12)?, through_common(&bd, &c12)?, mbd.clone())
        }
        PentagonII | HexagonII => {
            let (b2, d2) = (g("B2")?, g("D2")?);
            let b2d2 = join(&b2, &d2)?;
            let b1d1 = join(&g("B1")?, &g("D1")?)?;
            let a_star = if fig.kind == PentagonII {
                foot(&a, &b2d2, m)?
            } else {
                through_common(&b2d2, &join(&g("A1")?, &g("A2")?)?)?
            };
            let reference = midpoints(&b2, &d2, m)?;
            r.check_result("midpoints-BD-on-B2D2", lemma_midpoint_check(&b2, &d2, &mbd.e1, &mbd.e2, m));
            (a_star, through_common(&b2d2, &b1d1)?, reference)
        }
        QuadrangleII => {
            let fig2 = BisectorFigure::from_quadrangle(m, &a, &g("B1")?, &g("A'")?, &g("D1")?)?;
            let br = check_bisectors(&fig2);
            r.absorb("bisectors/", br);
            (foot(&a, &bd, m)?, foot(&c, &bd, m)?, mbd.clone())
        }
    };
    Ok((a_star, c_star, reference))
}

/// Builds the figure of the given kind and checks it.
pub fn verify_shadow(cfg: &DiametralConfig, kind: ShadowKind) -> Result<Report> {
    Ok(check_shadow(&build_shadow(cfg, kind)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rational};
    use crate::theorems::{build_diametral, verify_midpoint_theorem};

    fn xy(x: Rational, y: Rational) -> Point {
        Point::xy(x, y)
    }

    #[test]
    fn all_interior_is_quadrilateral_i() {
        let cfg = build_diametral(
            &Model::hyperbolic(),
            &xy(rat(0, 1), rat(1, 2)),
            &xy(rat(1, 4), rat(0, 1)),
            &xy(rat(-1, 4), rat(1, 4)),
        )
        .unwrap();
        let kind = shadow_classify(&cfg).unwrap();
        assert_eq!(kind, ShadowKind::QuadrilateralI);
        assert!(verify_shadow(&cfg, kind).unwrap().passed());
    }

    #[test]
    fn kind_mismatch() {
        let cfg = build_diametral(
            &Model::hyperbolic(),
            &xy(rat(0, 1), rat(1, 2)),
            &xy(rat(1, 4), rat(0, 1)),
            &xy(rat(-1, 4), rat(1, 4)),
        )
        .unwrap();
        assert!(matches!(verify_shadow(&cfg, ShadowKind::HexagonII), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn kind_names_roundtrip() {
        for k in ShadowKind::ALL {
            assert_eq!(k.name().parse::<ShadowKind>().unwrap(), k);
        }
        assert!("bogus".parse::<ShadowKind>().is_err());
    }

    #[test]
    fn search_each_kind() {
        // a small deterministic grid reaches every kind
        let h = Model::hyperbolic();
        let vals: Vec<Rational> = [-7, -3, -1, 1, 2, 5].iter().map(|n| rat(*n, 4)).collect();
        let mut seen = std::collections::BTreeSet::new();
        'outer: for ax in &vals {
            for ay in &vals {
                for bx in &vals {
                    for dy in &vals {
                        let a = xy(ax.clone(), ay.clone());
                        let b = xy(bx.clone(), rat(1, 5));
                        let d = xy(rat(-1, 3), dy.clone());
                        let Ok(cfg) = build_diametral(&h, &a, &b, &d) else { continue };
                        if cfg.degenerate.is_some() {
                            continue;
                        }
                        let Ok(kind) = shadow_classify(&cfg) else { continue };
                        if seen.insert(kind) {
                            let r = verify_shadow(&cfg, kind).unwrap();
                            assert!(r.passed(), "{r}");
                            assert!(verify_midpoint_theorem(&cfg).passed());
                        }
                        if seen.len() == ShadowKind::ALL.len() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert_eq!(seen.len(), ShadowKind::ALL.len(), "{seen:?}");
    }
}
