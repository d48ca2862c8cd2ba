//! Scene files: a model and named points as exact rationals in JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::exactnum::{format_rational, parse_rational, QExt, Rational};
use crate::involutions::{LineChart, Projectivity1D};
use crate::model::{Geometry, Model};
use crate::projective::{Conic, ConicKind, Line, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneError {
    pub message: String,
    /// 1-based position in the input, for syntax and field errors.
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl SceneError {
    fn semantic(message: impl Into<String>) -> Self {
        SceneError { message: message.into(), line: None, column: None }
    }
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for SceneError {}

impl From<serde_json::Error> for SceneError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends its own " at line L column C"
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        SceneError { message, line: Some(e.line()), column: Some(e.column()) }
    }
}

/// A rational written as "p/q" or "p".
#[derive(Clone, Debug, PartialEq, Eq)]
struct Q(Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Q).map_err(de::Error::custom)
    }
}

impl Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conic: Option<[[Q; 3]; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    infinity_line: Option<[Q; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<[[Q; 2]; 2]>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawStyle {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    viewport: Option<[Q; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    model: RawModel,
    points: BTreeMap<String, [Q; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    style: Option<RawStyle>,
}

/// The plane model of a scene, or euclidean 3-space for simplex figures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SceneModel {
    Plane(Model),
    /// Points are affine coordinates (x, y, z).
    Space,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Style {
    /// xmin, ymin, xmax, ymax.
    pub viewport: Option<[Rational; 4]>,
    /// Points to label; all points when absent.
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub model: SceneModel,
    /// Canonical homogeneous coordinates, or affine 3-D coordinates in space.
    pub points: BTreeMap<String, [Rational; 3]>,
    pub style: Style,
}

fn unq<const N: usize>(v: [Q; N]) -> [Rational; N] {
    v.map(|q| q.0)
}

fn model_from_raw(m: RawModel) -> Result<SceneModel, SceneError> {
    let conic = |c: Option<[[Q; 3]; 3]>, want: ConicKind| -> Result<Model, SceneError> {
        let c = c.ok_or_else(|| SceneError::semantic(format!("model \"{}\" needs a conic", m.kind)))?;
        let conic = Conic::new(c.map(unq)).map_err(|e| SceneError::semantic(e.to_string()))?;
        if conic.kind() != want {
            return Err(SceneError::semantic(format!("conic is {:?}, model \"{}\" needs {want:?}", conic.kind(), m.kind)));
        }
        Ok(Model::non_euclidean(conic))
    };
    let extra = |ok: bool| -> Result<(), SceneError> {
        if ok {
            Ok(())
        } else {
            Err(SceneError::semantic(format!("model \"{}\" has fields of another kind", m.kind)))
        }
    };
    match m.kind.as_str() {
        "hyperbolic" => {
            extra(m.infinity_line.is_none() && m.involution.is_none())?;
            conic(m.conic, ConicKind::Real).map(SceneModel::Plane)
        }
        "elliptic" => {
            extra(m.infinity_line.is_none() && m.involution.is_none())?;
            conic(m.conic, ConicKind::Imaginary).map(SceneModel::Plane)
        }
        "euclidean" => {
            extra(m.conic.is_none())?;
            let (Some(l), Some(inv)) = (m.infinity_line, m.involution) else {
                return Err(SceneError::semantic("euclidean model needs infinity_line and involution"));
            };
            let line = Line::from_rationals(unq(l)).map_err(|e| SceneError::semantic(e.to_string()))?;
            let mat = inv.map(|row| row.map(|q| QExt::rational(q.0)));
            Projectivity1D::from_matrix(LineChart::for_line(&line), mat)
                .and_then(Model::euclidean)
                .map(SceneModel::Plane)
                .map_err(|e| SceneError::semantic(format!("absolute involution: {e}")))
        }
        "euclidean-space" => {
            extra(m.conic.is_none() && m.infinity_line.is_none() && m.involution.is_none())?;
            Ok(SceneModel::Space)
        }
        other => Err(SceneError::semantic(format!(
            "unknown model kind \"{other}\" (expected euclidean, hyperbolic, elliptic or euclidean-space)"
        ))),
    }
}

/// Strict parse; points are stored canonically.
pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let raw: RawScene = serde_json::from_str(text)?;
    let model = model_from_raw(raw.model)?;
    let mut points = BTreeMap::new();
    for (name, v) in raw.points {
        let v = unq(v);
        let coords = match model {
            SceneModel::Space => v,
            SceneModel::Plane(_) => Point::from_rationals(v)
                .and_then(|p| p.to_rationals().ok_or(crate::Error::NotRational))
                .map_err(|e| SceneError::semantic(format!("point {name}: {e}")))?,
        };
        points.insert(name, coords);
    }
    let style = match raw.style {
        None => Style::default(),
        Some(s) => Style { viewport: s.viewport.map(unq), labels: s.labels },
    };
    if let Some(labels) = &style.labels {
        if let Some(missing) = labels.iter().find(|l| !points.contains_key(*l)) {
            return Err(SceneError::semantic(format!("label {missing} names no point")));
        }
    }
    if let Some([x0, y0, x1, y1]) = &style.viewport {
        if x0 >= x1 || y0 >= y1 {
            return Err(SceneError::semantic("viewport must have xmin < xmax and ymin < ymax"));
        }
    }
    Ok(Scene { model, points, style })
}

fn q<const N: usize>(v: &[Rational; N]) -> [Q; N] {
    std::array::from_fn(|i| Q(v[i].clone()))
}

fn rational_entry(x: &QExt) -> Rational {
    x.to_rational().cloned().expect("scene models are rational")
}

fn model_to_raw(m: &SceneModel) -> RawModel {
    let mut raw = RawModel { kind: String::new(), conic: None, infinity_line: None, involution: None };
    match m {
        SceneModel::Space => raw.kind = "euclidean-space".into(),
        SceneModel::Plane(model) => match model {
            Model::NonEuclidean { absolute } => {
                raw.kind = match model.geometry() {
                    Geometry::Hyperbolic => "hyperbolic".into(),
                    _ => "elliptic".into(),
                };
                raw.conic = Some(absolute.matrix().clone().map(|row| q(&row)));
            }
            Model::Euclidean { infinity_line, absolute } => {
                raw.kind = "euclidean".into();
                let coords = infinity_line.to_rationals().expect("rational line");
                raw.infinity_line = Some(q(&coords));
                let inv = absolute
                    .in_chart(&LineChart::for_line(infinity_line))
                    .expect("same line");
                raw.involution = Some(inv.matrix().clone().map(|row| row.map(|x| Q(rational_entry(&x)))));
            }
        },
    }
    raw
}

/// Pretty JSON with sorted point names; parsing it gives back `scene`.
pub fn serialize_scene(scene: &Scene) -> String {
    let style = (scene.style != Style::default()).then(|| RawStyle {
        viewport: scene.style.viewport.as_ref().map(q),
        labels: scene.style.labels.clone(),
    });
    let raw = RawScene {
        model: model_to_raw(&scene.model),
        points: scene.points.iter().map(|(k, v)| (k.clone(), q(v))).collect(),
        style,
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("scene serializes");
    s.push('\n');
    s
}

impl Scene {
    pub fn plane(model: Model, points: &[(&str, &Point)]) -> Scene {
        let points = points
            .iter()
            .map(|(n, p)| (n.to_string(), p.to_rationals().expect("rational point")))
            .collect();
        Scene { model: SceneModel::Plane(model), points, style: Style::default() }
    }

    pub fn space(points: &[(&str, [Rational; 3])]) -> Scene {
        let points = points.iter().map(|(n, p)| (n.to_string(), p.clone())).collect();
        Scene { model: SceneModel::Space, points, style: Style::default() }
    }

    pub fn plane_model(&self) -> Option<&Model> {
        match &self.model {
            SceneModel::Plane(m) => Some(m),
            SceneModel::Space => None,
        }
    }

    pub fn point(&self, name: &str) -> Result<Point, SceneError> {
        let v = self.points.get(name).ok_or_else(|| SceneError::semantic(format!("scene has no point {name}")))?;
        Point::from_rationals(v.clone()).map_err(|e| SceneError::semantic(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
  "model": {"kind": "hyperbolic", "conic": [["1","0","0"],["0","1","0"],["0","0","-1"]]},
  "points": {"A": ["1/10","1/2","1"], "B": ["1/2","-1/10","1"], "D": ["-2/5","-1/5","1"]}
}"#;

    #[test]
    fn minimal_hyperbolic() {
        let s = parse_scene(MINIMAL).unwrap();
        assert_eq!(s.points.len(), 3);
        assert_eq!(s.plane_model().unwrap().geometry(), Geometry::Hyperbolic);
        assert_eq!(s.point("A").unwrap(), Point::hom(1, 5, 10));
    }

    #[test]
    fn roundtrip_is_canonical() {
        let s = parse_scene(MINIMAL).unwrap();
        let text = serialize_scene(&s);
        assert_eq!(parse_scene(&text).unwrap(), s);
        assert_eq!(serialize_scene(&parse_scene(&text).unwrap()), text);
        let e = Scene::plane(Model::standard_euclidean(), &[("A", &Point::hom(0, 2, 1))]);
        assert_eq!(parse_scene(&serialize_scene(&e)).unwrap(), e);
    }

    #[test]
    fn denominator_zero_names_token() {
        let bad = MINIMAL.replace("\"1/10\"", "\"3/0\"");
        let e = parse_scene(&bad).unwrap_err();
        assert!(e.message.contains("\"3/0\""), "{e}");
        assert_eq!(e.line, Some(3));
    }

    #[test]
    fn rejects_missing_model_unknown_field_asymmetric_conic() {
        let e = parse_scene(r#"{"points": {}}"#).unwrap_err();
        assert!(e.message.contains("model"), "{e}");
        let e = parse_scene(&MINIMAL.replace("\"points\"", "\"colour\": 1, \"points\"")).unwrap_err();
        assert!(e.message.contains("unknown field"), "{e}");
        let asym = MINIMAL.replace(r#"["1","0","0"],["0","1","0"]"#, r#"["1","2","0"],["0","1","0"]"#);
        assert!(parse_scene(&asym).unwrap_err().message.contains("symmetric"));
    }

    #[test]
    fn undefined_label() {
        let s = MINIMAL.replace("\n}", ",\n\"style\": {\"labels\": [\"Z\"]}\n}");
        assert!(parse_scene(&s).unwrap_err().message.contains("Z"));
    }
}
