//! Command implementations behind the `ck` binary. Each command returns its
//! report text and an exit code; the binary only parses flags and prints.

pub mod figure;
pub mod scene;
pub mod svg;

use std::fmt::Write;
use std::path::Path;

use crate::error::Error;
use crate::exactnum::{int, rat, QExt};
use crate::involutions::{equals, quadrangular_involution_skipping, LineChart, Projectivity1D};
use crate::model::{midpoints, Model};
use crate::projective::{harmonic_conjugate, Conic, Point};
use crate::theorems::{build_diametral, fuzz_configs, verify_bisectors, verify_euclidean_proof_steps};
use crate::theorems::{verify_midpoint_theorem, verify_shadow, verify_simplex, simplex_derive};
use crate::theorems::{FuzzTarget, Report, ShadowKind, SimplexConfig};

use figure::{default_scene, render_figure, FigureName};
use scene::parse_scene;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EXHAUSTED: u8 = 3;

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl CommandOutput {
    fn ok(stdout: String, passed: bool) -> Self {
        CommandOutput { stdout, stderr: String::new(), code: if passed { EXIT_PASS } else { EXIT_FAIL } }
    }

    fn error(stderr: String, code: u8) -> Self {
        CommandOutput { stdout: String::new(), stderr, code }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Euclidean,
    Hyperbolic,
    Elliptic,
    Projective,
    Simplex,
}

/// One line per entry, with the failing checks spelled out.
struct SuiteLog {
    text: String,
    passed: bool,
}

impl SuiteLog {
    fn entry(&mut self, label: &str, r: Result<Report, Error>) {
        match r {
            Ok(r) if r.passed() => {
                let _ = writeln!(self.text, "{label}: PASS");
            }
            Ok(r) => {
                self.passed = false;
                let _ = writeln!(self.text, "{label}: FAIL");
                for c in r.failures() {
                    let _ = writeln!(self.text, "  {} {} {}", c.name, c.outcome, c.detail);
                }
            }
            Err(e) => {
                self.passed = false;
                let _ = writeln!(self.text, "{label}: FAIL ({e})");
            }
        }
    }

    fn fact(&mut self, label: &str, ok: Result<bool, Error>) {
        let mut r = Report::new(label);
        r.check_result(label, ok);
        self.entry(label, Ok(r));
    }
}

fn example_triple() -> (Point, Point, Point) {
    (Point::xy(rat(1, 10), rat(1, 2)), Point::xy(rat(1, 2), rat(-1, 10)), Point::xy(rat(-2, 5), rat(-1, 5)))
}

fn euclidean_suite(log: &mut SuiteLog) {
    let m = Model::standard_euclidean();
    let examples = [
        ("kite", Point::hom(0, 2, 1), Point::hom(1, 0, 1), Point::hom(-1, 0, 1)),
        ("scalene", Point::hom(1, 5, 1), Point::hom(5, -1, 1), Point::hom(-4, -2, 1)),
        ("rectangle", Point::hom(0, 1, 1), Point::hom(0, 0, 1), Point::hom(2, 1, 1)),
    ];
    for (name, a, b, d) in &examples {
        let cfg = build_diametral(&m, a, b, d);
        log.entry(&format!("midpoint theorem (euclidean, {name})"), cfg.clone().map(|c| verify_midpoint_theorem(&c)));
        log.entry(
            &format!("euclidean proof steps ({name})"),
            cfg.clone().and_then(|c| verify_euclidean_proof_steps(&c)).map(|w| w.report),
        );
        log.entry(&format!("bisectors (euclidean, {name})"), cfg.and_then(|c| verify_bisectors(&c)));
    }
    // A on the perpendicular to BD at B, so A* = B and C* = D
    let cfg = build_diametral(&m, &Point::hom(1, 3, 1), &Point::hom(1, 0, 1), &Point::hom(-2, 0, 1));
    log.entry("euclidean proof steps (A* = B)", cfg.and_then(|c| verify_euclidean_proof_steps(&c)).map(|w| w.report));
}

fn hyperbolic_suite(log: &mut SuiteLog) {
    let m = Model::hyperbolic();
    let (a, b, d) = example_triple();
    let cfg = build_diametral(&m, &a, &b, &d);
    log.entry("midpoint theorem (hyperbolic)", cfg.clone().map(|c| verify_midpoint_theorem(&c)));
    log.entry("bisectors (hyperbolic)", cfg.and_then(|c| verify_bisectors(&c)));
    for kind in ShadowKind::ALL {
        let scene = default_scene(FigureName::Shadow(kind));
        let pts = ["A", "B", "D"].map(|n| scene.point(n).expect("default scenes name A, B, D"));
        let cfg = build_diametral(&m, &pts[0], &pts[1], &pts[2]);
        log.entry(&format!("shadow {kind}"), cfg.clone().and_then(|c| verify_shadow(&c, kind)));
        if kind == ShadowKind::QuadrangleII {
            log.entry("bisectors (quadrangle-II)", cfg.and_then(|c| verify_bisectors(&c)));
        }
    }
    let mid = midpoints(&Point::hom(0, 0, 1), &Point::hom(1, 0, 2), &m).map(|p| p.interior_point().cloned());
    let two_minus_root3 = QExt::new(int(2), int(-1), 3.into()).expect("valid radicand");
    let want = Point::new([two_minus_root3, QExt::zero(), QExt::one()]).expect("nonzero");
    log.fact("hyperbolic midpoint of (0,0)-(1/2,0) is (2-sqrt3, 0)", mid.map(|p| p == Some(want)));
}

fn elliptic_suite(log: &mut SuiteLog) {
    let m = Model::elliptic();
    let (a, b, d) = example_triple();
    let cfg = build_diametral(&m, &a, &b, &d);
    log.entry("midpoint theorem (elliptic)", cfg.clone().map(|c| verify_midpoint_theorem(&c)));
    log.entry("bisectors (elliptic)", cfg.and_then(|c| verify_bisectors(&c)));
    let mid = midpoints(&Point::hom(0, 0, 1), &Point::hom(1, 0, 1), &m);
    let root2_minus_1 = QExt::new(int(-1), int(1), 2.into()).expect("valid radicand");
    let want = Point::new([root2_minus_1, QExt::zero(), QExt::one()]).expect("nonzero");
    log.fact("elliptic midpoint of (0:0:1)-(1:0:1) is (sqrt2-1 : 0 : 1)", mid.map(|p| p.contains(&want)));
}

fn mobius(chart: &LineChart, a: i64, b: i64, c: i64, d: i64) -> Result<Projectivity1D, Error> {
    let q = |x: i64| QExt::rational(int(x));
    Projectivity1D::from_matrix(chart.clone(), [[q(a), q(b)], [q(c), q(d)]])
}

fn projective_suite(log: &mut SuiteLog) {
    let square = [Point::hom(0, 1, 1), Point::hom(0, -1, 1), Point::hom(1, 0, 1), Point::hom(-1, 0, 1)];
    let line = crate::projective::Line::hom(0, 1, -2);
    let chart = LineChart::for_line(&line);
    let pappus = (|| {
        let f: Vec<_> = (0..3)
            .map(|skip| quadrangular_involution_skipping(&square, &line, &chart, skip))
            .collect::<Result<_, _>>()?;
        Ok(equals(&f[0], &f[1])? && equals(&f[1], &f[2])?)
    })();
    log.fact("Pappus involution is independent of the chosen side pairs", pappus);

    let agree = (|| {
        let f = mobius(&chart, 0, 1, 1, 0)?;
        let g = mobius(&chart, 0, 1, 2, 0)?;
        let h = mobius(&chart, 0, 3, 3, 0)?;
        let at = |x: i64| chart.point_at_affine(&QExt::rational(int(x)));
        let (p0, p1) = (at(0)?, chart.point_at(&QExt::one(), &QExt::zero())?);
        let two_agree = f.apply(&p0)? == g.apply(&p0)? && f.apply(&p1)? == g.apply(&p1)?;
        Ok(two_agree && !equals(&f, &g)? && equals(&f, &h)?)
    })();
    log.fact("projectivities agreeing on two points may differ, scalar multiples agree", agree);

    let harmonic = harmonic_conjugate(&Point::hom(0, 0, 1), &Point::hom(3, 0, 1), &Point::hom(1, 0, 1));
    log.fact("harmonic conjugate of (1:0:1) in (0:0:1), (3:0:1) is (-3:0:1)", harmonic.map(|p| p == Point::hom(-3, 0, 1)));

    let (a, b, d) = example_triple();
    let ellipse = Conic::new([
        [int(4), int(1), int(0)],
        [int(1), int(9), int(-1)],
        [int(0), int(-1), int(-8)],
    ]);
    let sphere = Conic::new([
        [int(2), int(1), int(0)],
        [int(1), int(3), int(1)],
        [int(0), int(1), int(5)],
    ]);
    for (name, k) in [("real", ellipse), ("imaginary", sphere)] {
        let r = k.and_then(|k| build_diametral(&Model::non_euclidean(k), &a, &b, &d)).map(|c| verify_midpoint_theorem(&c));
        log.entry(&format!("midpoint theorem (general {name} conic)"), r);
    }
}

fn simplex_suite(log: &mut SuiteLog) {
    let examples: [&[&[i64]]; 4] = [
        &[&[0, 0], &[2, 0], &[0, 4]],
        &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[&[0, 0, 0, 0], &[2, 1, 0, 0], &[0, 3, 1, 0], &[1, 0, 2, 1], &[0, 1, 0, 3]],
        &[&[1, 0, 0, 0, 0], &[0, 2, 0, 0, 1], &[0, 0, 3, 0, 0], &[1, 1, 0, 4, 0], &[0, 0, 1, 1, 5], &[2, 0, 0, 0, 0]],
    ];
    for v in examples {
        let r = SimplexConfig::from_ints(v).and_then(|c| simplex_derive(&c)).map(|c| verify_simplex(&c));
        let label = format!("n-simplex n={}", v.len() - 1);
        log.entry(&label, r);
    }
}

pub fn run_verify(suite: Suite) -> CommandOutput {
    let mut log = SuiteLog { text: String::new(), passed: true };
    let all = suite == Suite::All;
    if all || suite == Suite::Projective {
        projective_suite(&mut log);
    }
    if all || suite == Suite::Euclidean {
        euclidean_suite(&mut log);
    }
    if all || suite == Suite::Hyperbolic {
        hyperbolic_suite(&mut log);
    }
    if all || suite == Suite::Elliptic {
        elliptic_suite(&mut log);
    }
    if all || suite == Suite::Simplex {
        simplex_suite(&mut log);
    }
    let verdict = if log.passed { "all PASS" } else { "FAILURES" };
    let _ = writeln!(log.text, "suite {}: {verdict}", format!("{suite:?}").to_lowercase());
    CommandOutput::ok(log.text, log.passed)
}

/// `CK_SEED` wins over the flag when it is set.
pub fn effective_seed(flag: u64, env: Option<&str>) -> Result<u64, String> {
    match env {
        Some(s) => s.trim().parse().map_err(|_| format!("CK_SEED must be an unsigned integer, got {s:?}")),
        None => Ok(flag),
    }
}

pub fn run_fuzz(kind: &str, dim: usize, trials: u64, seed: u64) -> CommandOutput {
    if trials == 0 {
        return CommandOutput::error("trials must be at least 1\n".into(), EXIT_USAGE);
    }
    let target = match FuzzTarget::parse(kind, dim) {
        Ok(t) => t,
        Err(e) => return CommandOutput::error(format!("{e}\n"), EXIT_USAGE),
    };
    match fuzz_configs(target, trials, seed) {
        Ok(r) => CommandOutput::ok(format!("fuzz {target} seed={seed}\n{r}"), r.all_passed()),
        Err(e @ Error::SamplingExhausted(_)) => CommandOutput::error(format!("{e}\n"), EXIT_EXHAUSTED),
        Err(e) => CommandOutput::error(format!("{e}\n"), EXIT_USAGE),
    }
}

/// Renders a figure from `scene` (or its default scene) and writes it.
pub fn run_figure(name: &str, scene: Option<&Path>, out: &Path) -> CommandOutput {
    let name: FigureName = match name.parse() {
        Ok(n) => n,
        Err(e) => return CommandOutput::error(format!("{e}\n"), EXIT_USAGE),
    };
    let scene = match scene {
        None => default_scene(name),
        Some(p) => match std::fs::read_to_string(p).map_err(|e| e.to_string()).and_then(|t| parse_scene(&t).map_err(|e| e.to_string())) {
            Ok(s) => s,
            Err(e) => return CommandOutput::error(format!("{}: {e}\n", p.display()), EXIT_USAGE),
        },
    };
    let svg = match render_figure(name, &scene) {
        Ok(s) => s,
        Err(e @ figure::FigureError::Falsified(_)) => return CommandOutput::error(format!("{e}\n"), EXIT_FAIL),
        Err(e) => return CommandOutput::error(format!("{e}\n"), EXIT_USAGE),
    };
    if let Err(e) = std::fs::write(out, svg) {
        return CommandOutput::error(format!("cannot write {}: {e}\n", out.display()), EXIT_USAGE);
    }
    CommandOutput::ok(format!("wrote {name} to {}\n", out.display()), true)
}

/// Parses a scene file and reports its contents in canonical form.
pub fn run_scene_check(path: &Path) -> CommandOutput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CommandOutput::error(format!("cannot read {}: {e}\n", path.display()), EXIT_USAGE),
    };
    match parse_scene(&text) {
        Ok(s) => {
            let mut out = format!("{}: ok, {} points\n", path.display(), s.points.len());
            out.push_str(&scene::serialize_scene(&s));
            CommandOutput::ok(out, true)
        }
        Err(e) => CommandOutput::error(format!("{}: {e}\n", path.display()), EXIT_USAGE),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        let out = run_verify(Suite::All);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
        assert!(out.stdout.contains("n-simplex n=3: PASS"));
    }

    #[test]
    fn seed_override() {
        assert_eq!(effective_seed(4, None), Ok(4));
        assert_eq!(effective_seed(4, Some("9")), Ok(9));
        assert!(effective_seed(4, Some("x")).is_err());
    }

    #[test]
    fn fuzz_exit_codes() {
        assert_eq!(run_fuzz("hyperbolic", 0, 0, 1).code, EXIT_USAGE);
        assert_eq!(run_fuzz("nonsense", 0, 3, 1).code, EXIT_USAGE);
        let out = run_fuzz("elliptic", 0, 4, 1);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
        assert!(out.stdout.contains("4/4 PASS"));
    }

    #[test]
    fn unknown_figure() {
        assert_eq!(run_figure("nope", None, Path::new("/nonexistent/x.svg")).code, EXIT_USAGE);
    }
}
