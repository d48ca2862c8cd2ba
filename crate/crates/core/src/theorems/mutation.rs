//! Mutation testing of the verifiers: each stored point is moved off its
//! defining position and the verifier must reject the result.

use std::fmt;

use crate::exactnum::{rat, QExt, Rational};
use crate::projective::Point;

use super::bisectors::{check_bisectors, BisectorFigure};
use super::diametral::{verify_midpoint_theorem, DiametralConfig};
use super::euclid::verify_euclidean_proof_steps;
use super::shadows::{check_shadow, ShadowFigure};
use super::simplex::{verify_simplex, SimplexConfig, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationOutcome {
    pub verifier: &'static str,
    pub mutation: String,
    /// Whether the verifier rejected the mutated configuration.
    pub killed: bool,
}

impl fmt::Display for MutationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.killed { "killed" } else { "SURVIVED" };
        write!(f, "{} / {}: {verdict}", self.verifier, self.mutation)
    }
}

/// Moves a finite point by (1/7, -2/11); a point at infinity is turned by a
/// rational rotation of its direction.
pub fn perturb(p: &Point) -> Point {
    let [x, y, z] = p.coords().clone();
    let (u, v) = (QExt::rational(rat(1, 7)), QExt::rational(rat(-2, 11)));
    let moved = if z.is_zero() {
        [&x - &(&y * &u), &y + &(&x * &u), z]
    } else {
        [&x + &(&z * &u), &y + &(&z * &v), z]
    };
    Point::new(moved).expect("a nonzero vector stays nonzero under an invertible map")
}

fn perturb_vector(v: &[Rational]) -> Vector {
    v.iter().enumerate().map(|(i, x)| x + rat(1, 7 + 4 * i as i64)).collect()
}

fn outcome(verifier: &'static str, mutation: String, killed: bool) -> MutationOutcome {
    MutationOutcome { verifier, mutation, killed }
}

type Setter = fn(&mut DiametralConfig) -> Option<&mut Point>;

const DIAMETRAL_SLOTS: [(&str, Setter); 9] = [
    ("A", |c| Some(&mut c.a)),
    ("B", |c| Some(&mut c.b)),
    ("C", |c| Some(&mut c.c)),
    ("D", |c| Some(&mut c.d)),
    ("A*", |c| Some(&mut c.a_star)),
    ("C*", |c| Some(&mut c.c_star)),
    ("M1", |c| Some(&mut c.midpoints.e1)),
    ("M2", |c| Some(&mut c.midpoints.e2)),
    ("A'", |c| c.a_prime.as_mut()),
];

fn diametral_mutants(cfg: &DiametralConfig, names: &[&str]) -> Vec<(String, DiametralConfig)> {
    let mut out = Vec::new();
    for (name, slot) in DIAMETRAL_SLOTS {
        if !names.contains(&name) {
            continue;
        }
        let mut m = cfg.clone();
        if let Some(p) = slot(&mut m) {
            *p = perturb(p);
            out.push((format!("move {name}"), m));
        }
    }
    out
}

pub fn midpoint_theorem_mutations(cfg: &DiametralConfig) -> Vec<MutationOutcome> {
    let names = ["A", "B", "C", "D", "A*", "C*", "M1", "M2", "A'"];
    diametral_mutants(cfg, &names)
        .into_iter()
        .map(|(n, m)| outcome("midpoint theorem", n, !verify_midpoint_theorem(&m).passed()))
        .collect()
}

pub fn euclidean_step_mutations(cfg: &DiametralConfig) -> Vec<MutationOutcome> {
    let names = ["A", "B", "C", "D", "A*", "C*"];
    diametral_mutants(cfg, &names)
        .into_iter()
        .map(|(n, m)| {
            let killed = verify_euclidean_proof_steps(&m).map(|w| !w.report.passed()).unwrap_or(true);
            outcome("euclidean proof steps", n, killed)
        })
        .collect()
}

pub fn shadow_mutations(fig: &ShadowFigure) -> Vec<MutationOutcome> {
    fig.points
        .iter()
        .map(|(name, p)| {
            let mut m = fig.clone();
            m.set(name, perturb(p));
            outcome("shadow", format!("move {name}"), !check_shadow(&m).passed())
        })
        .collect()
}

pub fn bisector_mutations(fig: &BisectorFigure) -> Vec<MutationOutcome> {
    let slots: [(&str, fn(&mut BisectorFigure) -> &mut Point); 5] = [
        ("A", |f| &mut f.a),
        ("B", |f| &mut f.b),
        ("V", |f| &mut f.apex),
        ("D", |f| &mut f.d),
        ("F", |f| &mut f.foot),
    ];
    slots
        .iter()
        .map(|(name, slot)| {
            let mut m = fig.clone();
            let p = slot(&mut m);
            *p = perturb(p);
            outcome("bisectors", format!("move {name}"), !check_bisectors(&m).passed())
        })
        .collect()
}

pub fn simplex_mutations(cfg: &SimplexConfig) -> Vec<MutationOutcome> {
    let mut out = Vec::new();
    let mut run = |name: String, m: SimplexConfig| {
        out.push(outcome("simplex", name, !verify_simplex(&m).passed()));
    };
    for (name, field) in [("C", 0), ("A*", 1), ("C*", 2), ("O", 3)] {
        let mut m = cfg.clone();
        let slot = match field {
            0 => m.c.as_mut(),
            1 => m.a_star.as_mut(),
            2 => m.c_star.as_mut(),
            _ => m.circumcenter.as_mut(),
        };
        if let Some(v) = slot {
            *v = perturb_vector(v);
            run(format!("move {name}"), m);
        }
    }
    for i in 0..cfg.vertices.len() {
        let mut m = cfg.clone();
        m.vertices[i] = perturb_vector(&m.vertices[i]);
        run(format!("move A{i}"), m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::model::Model;
    use crate::theorems::{bisector_figure, build_diametral, build_shadow, shadow_classify, simplex_derive};

    fn all_killed(v: &[MutationOutcome], at_least: usize) {
        assert!(v.len() >= at_least, "only {} mutations", v.len());
        for o in v {
            assert!(o.killed, "{o}");
        }
    }

    #[test]
    fn perturb_moves_points() {
        let p = Point::xy(int(1), int(2));
        assert_eq!(perturb(&p), Point::xy(rat(8, 7), rat(20, 11)));
        let q = Point::hom(1, 0, 0);
        assert_ne!(perturb(&q), q);
        assert!(perturb(&q).is_at_infinity());
    }

    #[test]
    fn midpoint_theorem_in_each_model() {
        let a = Point::xy(rat(1, 10), rat(1, 2));
        let b = Point::xy(rat(1, 2), rat(-1, 10));
        let d = Point::xy(rat(-2, 5), rat(-1, 5));
        for model in [Model::standard_euclidean(), Model::hyperbolic(), Model::elliptic()] {
            let cfg = build_diametral(&model, &a, &b, &d).unwrap();
            all_killed(&midpoint_theorem_mutations(&cfg), 5);
            all_killed(&bisector_mutations(&bisector_figure(&cfg).unwrap()), 5);
        }
    }

    #[test]
    fn euclidean_steps() {
        let cfg = build_diametral(
            &Model::standard_euclidean(),
            &Point::hom(0, 2, 1),
            &Point::hom(1, 0, 1),
            &Point::hom(-1, 0, 1),
        )
        .unwrap();
        all_killed(&euclidean_step_mutations(&cfg), 5);
    }

    #[test]
    fn shadow_figure() {
        let cfg = build_diametral(
            &Model::hyperbolic(),
            &Point::xy(rat(1, 10), rat(1, 2)),
            &Point::xy(rat(1, 2), rat(-1, 10)),
            &Point::xy(rat(-2, 5), rat(-1, 5)),
        )
        .unwrap();
        let kind = shadow_classify(&cfg).unwrap();
        all_killed(&shadow_mutations(&build_shadow(&cfg, kind).unwrap()), 4);
    }

    #[test]
    fn simplex() {
        let cfg = SimplexConfig::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        all_killed(&simplex_mutations(&simplex_derive(&cfg).unwrap()), 5);
    }
}
