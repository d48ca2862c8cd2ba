//! Built-in figures: default scenes, the verified configurations behind them,
//! and their drawings.

use std::fmt;
use std::str::FromStr;

use crate::exactnum::{int, rat, Rational};
use crate::model::{angle_bisectors, Geometry, MidpointPair, Model};
use crate::projective::{classify_point, join, polar, Line, Point, PointClass};
use crate::theorems::{build_diametral, build_shadow, check_shadow, shadow_feet, simplex_derive, verify_midpoint_theorem};
use crate::theorems::{verify_simplex, Report, ShadowKind, SimplexConfig};

use super::scene::{Scene, SceneError, SceneModel};
use super::svg::{absolute_shape, line3, p2, render, Absolute, Drawing, P2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FigureName {
    QuadrangleSpherical,
    QuadrangleEuclidean,
    QuadrangleHyperbolic,
    Shadow(ShadowKind),
    Tetrahedron,
}

impl FigureName {
    pub const ALL: [FigureName; 9] = [
        FigureName::QuadrangleSpherical,
        FigureName::QuadrangleEuclidean,
        FigureName::QuadrangleHyperbolic,
        FigureName::Shadow(ShadowKind::PentagonI),
        FigureName::Shadow(ShadowKind::HexagonI),
        FigureName::Shadow(ShadowKind::PentagonII),
        FigureName::Shadow(ShadowKind::HexagonII),
        FigureName::Shadow(ShadowKind::QuadrangleII),
        FigureName::Tetrahedron,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureName::QuadrangleSpherical => "quadrangle-spherical",
            FigureName::QuadrangleEuclidean => "quadrangle-euclidean",
            FigureName::QuadrangleHyperbolic => "quadrangle-hyperbolic",
            FigureName::Shadow(k) => k.name(),
            FigureName::Tetrahedron => "tetrahedron",
        }
    }
}

impl fmt::Display for FigureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.into_iter().find(|n| n.name() == s).ok_or_else(|| {
            let names: Vec<_> = Self::ALL.iter().map(|n| n.name()).collect();
            format!("unknown figure {s:?} (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Debug)]
pub enum FigureError {
    Scene(SceneError),
    Geometry(crate::Error),
    /// The scene does not fit the figure.
    Mismatch(String),
    /// The configuration failed its verifier; nothing is drawn.
    Falsified(Report),
}

impl fmt::Display for FigureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigureError::Scene(e) => write!(f, "scene: {e}"),
            FigureError::Geometry(e) => write!(f, "construction: {e}"),
            FigureError::Mismatch(m) => f.write_str(m),
            FigureError::Falsified(r) => write!(f, "configuration fails its verifier:\n{r}"),
        }
    }
}

impl std::error::Error for FigureError {}

impl From<SceneError> for FigureError {
    fn from(e: SceneError) -> Self {
        FigureError::Scene(e)
    }
}

impl From<crate::Error> for FigureError {
    fn from(e: crate::Error) -> Self {
        FigureError::Geometry(e)
    }
}

fn eighths(x: i64, y: i64) -> Point {
    Point::xy(rat(x, 8), rat(y, 8))
}

fn abd(model: Model, a: Point, b: Point, d: Point) -> Scene {
    Scene::plane(model, &[("A", &a), ("B", &b), ("D", &d)])
}

pub fn default_scene(name: FigureName) -> Scene {
    use ShadowKind::*;
    let (a, b, d) = (Point::xy(rat(1, 10), rat(1, 2)), Point::xy(rat(1, 2), rat(-1, 10)), Point::xy(rat(-2, 5), rat(-1, 5)));
    match name {
        FigureName::QuadrangleSpherical => abd(Model::elliptic(), a, b, d),
        FigureName::QuadrangleHyperbolic => abd(Model::hyperbolic(), a, b, d),
        FigureName::QuadrangleEuclidean => {
            abd(Model::standard_euclidean(), Point::hom(1, 5, 1), Point::hom(5, -1, 1), Point::hom(-4, -2, 1))
        }
        FigureName::Shadow(kind) => {
            let (a, b, d) = match kind {
                QuadrilateralI => ((-3, 1), (-1, -1), (-4, -3)),
                PentagonI => ((-5, 5), (3, 5), (-3, -6)),
                HexagonI => ((-7, 6), (3, 5), (-3, -6)),
                PentagonII => ((6, -5), (9, 8), (-7, -7)),
                HexagonII => ((-9, -8), (-5, 9), (3, -9)),
                QuadrangleII => ((9, -1), (9, -7), (3, -9)),
            };
            let mut scene = abd(Model::hyperbolic(), eighths(a.0, a.1), eighths(b.0, b.1), eighths(d.0, d.1));
            if matches!(kind, PentagonII | HexagonII | QuadrangleII) {
                scene.style.viewport = Some([int(-2), int(-2), int(2), int(2)]);
            }
            scene
        }
        FigureName::Tetrahedron => {
            let v = |x: i64, y: i64, z: i64| [int(x), int(y), int(z)];
            Scene::space(&[("A0", v(0, 0, 0)), ("A1", v(2, 1, 0)), ("A2", v(0, 3, 1)), ("A3", v(1, 0, 2))])
        }
    }
}

fn require(r: Report) -> Result<(), FigureError> {
    if r.passed() {
        Ok(())
    } else {
        Err(FigureError::Falsified(r))
    }
}

fn plane(scene: &Scene, want: Geometry) -> Result<&Model, FigureError> {
    match scene.plane_model() {
        Some(m) if m.geometry() == want => Ok(m),
        _ => Err(FigureError::Mismatch(format!("figure needs a {want:?} plane scene").to_lowercase())),
    }
}

fn base(model: &Model, title: &str) -> Drawing {
    let mut d = Drawing { title: title.to_string(), ..Drawing::default() };
    match model.geometry() {
        Geometry::Hyperbolic => {
            let k = model.conic().expect("hyperbolic models have a conic");
            d.absolute = Some(absolute_shape(k));
        }
        Geometry::Elliptic => {
            d.title.push_str(" (elliptic plane in the affine chart z = 1)");
            d.notes.push("absolute conic is imaginary and not drawn; affine chart z = 1".into());
        }
        Geometry::Euclidean => {}
    }
    d
}

struct Pen<'a> {
    d: Drawing,
    labels: Option<&'a [String]>,
}

impl Pen<'_> {
    fn point(&mut self, name: &str, p: &Point) {
        if self.labels.is_some_and(|l| !l.iter().any(|x| x == name)) {
            return;
        }
        if let Some(xy) = p2(p) {
            self.d.points.push((name.to_string(), xy));
        }
    }

    fn segment(&mut self, p: &Point, q: &Point) {
        if let (Some(a), Some(b)) = (p2(p), p2(q)) {
            self.d.segments.push((a, b));
        }
    }

    fn line(&mut self, l: &Line) {
        if let Some(v) = line3(l) {
            self.d.lines.push(v);
        }
    }

    fn right_angle(&mut self, vertex: &Point, arm1: &Point, arm2: &Point) {
        if let (Some(v), Some(a), Some(b)) = (p2(vertex), p2(arm1), p2(arm2)) {
            self.d.right_angles.push((v, a, b));
        }
    }

    fn midpoints(&mut self, m: &MidpointPair) {
        self.point("M1", &m.e1);
        self.point("M2", &m.e2);
    }
}

fn quadrangle(scene: &Scene, want: Geometry, title: &str) -> Result<Drawing, FigureError> {
    let model = plane(scene, want)?;
    let cfg = build_diametral(model, &scene.point("A")?, &scene.point("B")?, &scene.point("D")?)?;
    require(verify_midpoint_theorem(&cfg))?;
    let mut pen = Pen { d: base(model, title), labels: scene.style.labels.as_deref() };
    let (a, b, c, d) = (&cfg.a, &cfg.b, &cfg.c, &cfg.d);
    pen.line(&join(b, d)?);
    for (p, q) in [(a, b), (b, c), (c, d), (d, a), (a, &cfg.a_star), (c, &cfg.c_star)] {
        pen.segment(p, q);
    }
    pen.right_angle(b, a, c);
    pen.right_angle(d, a, c);
    pen.right_angle(&cfg.a_star, a, b);
    pen.right_angle(&cfg.c_star, c, d);
    for (n, p) in [("A", a), ("B", b), ("C", c), ("D", d), ("A*", &cfg.a_star), ("C*", &cfg.c_star)] {
        pen.point(n, p);
    }
    pen.midpoints(&cfg.midpoints);
    Ok(pen.d)
}

const PARTNERS: [(&str, &str, &str); 8] = [
    ("C1", "C2", "B"),
    ("C2", "C1", "D"),
    ("A1", "A2", "B"),
    ("A2", "A1", "D"),
    ("B1", "B2", "A"),
    ("B2", "B1", "D"),
    ("D1", "D2", "A"),
    ("D2", "D1", "B"),
];

fn shadow(scene: &Scene, kind: ShadowKind) -> Result<Drawing, FigureError> {
    let model = plane(scene, Geometry::Hyperbolic)?;
    let cfg = build_diametral(model, &scene.point("A")?, &scene.point("B")?, &scene.point("D")?)?;
    let fig = build_shadow(&cfg, kind)?;
    require(check_shadow(&fig))?;
    let (a_star, c_star, reference) = shadow_feet(&fig)?;
    let k = model.conic().expect("hyperbolic models have a conic");
    let mut pen = Pen { d: base(model, kind.name()), labels: scene.style.labels.as_deref() };
    let (a, b, c, d) = (&cfg.a, &cfg.b, &cfg.c, &cfg.d);
    pen.line(&join(b, d)?);
    for (p, q) in [(a, b), (b, c), (c, d), (d, a)] {
        pen.segment(p, q);
    }
    for (name, p) in [("A", a), ("B", b), ("C", c), ("D", d)] {
        if fig.points.iter().any(|(n, _)| n.starts_with(name) && n.len() == 2) {
            pen.line(&polar(p, k));
        }
    }
    for v in [b, d] {
        if classify_point(v, k) == Ok(PointClass::Interior) {
            pen.right_angle(v, a, c);
        }
    }
    for (x, partner, along) in PARTNERS {
        if let (Ok(px), Ok(pp)) = (fig.get(x), fig.get(partner)) {
            pen.right_angle(px, fig.get(along)?, pp);
        }
    }
    if kind == ShadowKind::QuadrangleII {
        let (ap, b1, d1) = (fig.get("A'")?, fig.get("B1")?, fig.get("D1")?);
        pen.line(&join(a, ap)?);
        let (x1, x2) = angle_bisectors(&join(ap, b1)?, &join(ap, d1)?, model)?;
        pen.line(&x1);
        pen.line(&x2);
    }
    pen.segment(&a_star, &c_star);
    for (n, p) in &fig.points {
        pen.point(n, p);
    }
    pen.point("A*", &a_star);
    pen.point("C*", &c_star);
    pen.midpoints(&reference);
    Ok(pen.d)
}

/// Orthographic view after turning 25 degrees about z and tilting 20 degrees.
fn project(v: &[Rational]) -> P2 {
    let f = |i: usize| num_traits::ToPrimitive::to_f64(&v[i]).unwrap_or(f64::NAN);
    let (x, y, z) = (f(0), f(1), f(2));
    let (sa, ca) = 25f64.to_radians().sin_cos();
    let (sb, cb) = 20f64.to_radians().sin_cos();
    [x * ca - y * sa, z * cb - (x * sa + y * ca) * sb]
}

fn tetrahedron(scene: &Scene) -> Result<Drawing, FigureError> {
    if scene.model != SceneModel::Space {
        return Err(FigureError::Mismatch("tetrahedron needs a euclidean-space scene".into()));
    }
    let names = ["A0", "A1", "A2", "A3"];
    let mut vertices = Vec::new();
    for n in names {
        let v = scene.points.get(n).ok_or_else(|| FigureError::Mismatch(format!("scene has no point {n}")))?;
        vertices.push(v.to_vec());
    }
    let cfg = simplex_derive(&SimplexConfig::new(vertices)?)?;
    require(verify_simplex(&cfg))?;
    let get = |v: &Option<Vec<Rational>>| v.clone().ok_or(crate::Error::Internal("derived simplex point"));
    let (c, a_star, c_star, o) = (get(&cfg.c)?, get(&cfg.a_star)?, get(&cfg.c_star)?, get(&cfg.circumcenter)?);
    let mut d = Drawing {
        title: "tetrahedron (orthographic projection)".into(),
        ..Drawing::default()
    };
    let a0 = &cfg.vertices[0];
    let centre: Vec<f64> = (0..3)
        .map(|i| num_traits::ToPrimitive::to_f64(&((&a0[i] + &c[i]) / int(2))).unwrap_or(f64::NAN))
        .collect();
    let radius = (0..3)
        .map(|i| num_traits::ToPrimitive::to_f64(&a0[i]).unwrap_or(f64::NAN) - centre[i])
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    let centre_q: Vec<Rational> = (0..3).map(|i| (&a0[i] + &c[i]) / int(2)).collect();
    d.absolute = Some(Absolute::Ellipse { center: project(&centre_q), radii: [radius, radius], angle: 0.0 });
    let pv: Vec<P2> = cfg.vertices.iter().map(|v| project(v)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            d.segments.push((pv[i], pv[j]));
        }
    }
    let (pc, pa, pcs, po) = (project(&c), project(&a_star), project(&c_star), project(&o));
    d.segments.push((pv[0], pa));
    d.segments.push((pc, pcs));
    for v in pv.iter().skip(1) {
        d.segments.push((*v, pc));
        d.right_angles.push((*v, pv[0], pc));
    }
    let labels = scene.style.labels.as_deref();
    let mut put = |n: &str, p: P2| {
        if labels.is_none_or(|l| l.iter().any(|x| x == n)) {
            d.points.push((n.to_string(), p));
        }
    };
    for (n, p) in names.iter().zip(&pv) {
        put(n, *p);
    }
    put("C", pc);
    put("A*", pa);
    put("C*", pcs);
    put("O", po);
    Ok(d)
}

/// The drawing of a figure, built only after its configuration verifies.
pub fn build_figure(name: FigureName, scene: &Scene) -> Result<Drawing, FigureError> {
    let mut d = match name {
        FigureName::QuadrangleSpherical => quadrangle(scene, Geometry::Elliptic, name.name()),
        FigureName::QuadrangleEuclidean => quadrangle(scene, Geometry::Euclidean, name.name()),
        FigureName::QuadrangleHyperbolic => quadrangle(scene, Geometry::Hyperbolic, name.name()),
        FigureName::Shadow(kind) => shadow(scene, kind),
        FigureName::Tetrahedron => tetrahedron(scene),
    }?;
    if let Some(v) = &scene.style.viewport {
        let f = |x: &Rational| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN);
        d.viewport = Some([f(&v[0]), f(&v[1]), f(&v[2]), f(&v[3])]);
    }
    Ok(d)
}

pub fn render_figure(name: FigureName, scene: &Scene) -> Result<String, FigureError> {
    build_figure(name, scene).map(|d| render(&d))
}
