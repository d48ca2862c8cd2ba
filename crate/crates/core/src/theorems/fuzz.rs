//! Seeded rejection-sampling fuzzer over random rational configurations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};
use crate::involutions::{conjugacy_involution, LineChart};
use crate::model::{drop_perpendicular, Geometry, Model};
use crate::projective::{join, meet, Conic, ConicKind, Line, Point};

use super::bisectors::verify_bisectors;
use super::diametral::{build_diametral, verify_midpoint_theorem, DiametralConfig};
use super::euclid::verify_euclidean_proof_steps;
use super::report::{Outcome, Report};
use super::shadows::{shadow_admits, shadow_classify, verify_shadow, ShadowKind};
use super::simplex::{simplex_derive, verify_simplex, SimplexConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FuzzTarget {
    Euclidean,
    /// Any real-conic configuration, checked in its own shadow class.
    Hyperbolic,
    Elliptic,
    Shadow(ShadowKind),
    Simplex(usize),
}

impl fmt::Display for FuzzTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzTarget::Euclidean => f.write_str("euclidean"),
            FuzzTarget::Hyperbolic => f.write_str("hyperbolic"),
            FuzzTarget::Elliptic => f.write_str("elliptic"),
            FuzzTarget::Shadow(k) => write!(f, "{k}"),
            FuzzTarget::Simplex(n) => write!(f, "simplex n={n}"),
        }
    }
}

impl FuzzTarget {
    /// Parses a kind name; `dim` is used for `simplex`.
    pub fn parse(kind: &str, dim: usize) -> std::result::Result<Self, String> {
        match kind {
            "euclidean" => Ok(FuzzTarget::Euclidean),
            "hyperbolic" => Ok(FuzzTarget::Hyperbolic),
            "elliptic" => Ok(FuzzTarget::Elliptic),
            "simplex" if dim >= 2 => Ok(FuzzTarget::Simplex(dim)),
            "simplex" => Err(format!("simplex dimension must be at least 2, got {dim}")),
            other => ShadowKind::from_str(other).map(FuzzTarget::Shadow),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzOptions {
    /// Samples drawn per trial before giving up.
    pub retry_budget: u64,
    pub num_bound: i64,
    pub den_bound: i64,
    /// One trial in this many is drawn from the family with A* = B.
    pub degenerate_every: u64,
}

impl Default for FuzzOptions {
    fn default() -> Self {
        FuzzOptions { retry_budget: 20_000, num_bound: 100, den_bound: 100, degenerate_every: 8 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub vacuous: u64,
}

impl Tally {
    fn add(&mut self, o: &Tally) {
        self.pass += o.pass;
        self.fail += o.fail;
        self.vacuous += o.vacuous;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: u64,
    pub report: Report,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub degenerate: u64,
    /// Rejected samples by the guard or classification that rejected them.
    pub rejections: BTreeMap<String, u64>,
    /// Outcomes of each named check over all trials.
    pub checks: BTreeMap<String, Tally>,
    /// The failing trial with the smallest index.
    pub first_counterexample: Option<Counterexample>,
}

impl FuzzReport {
    /// Associative and commutative.
    pub fn merge(mut self, o: FuzzReport) -> FuzzReport {
        self.trials += o.trials;
        self.passed += o.passed;
        self.failed += o.failed;
        self.degenerate += o.degenerate;
        for (k, v) in o.rejections {
            *self.rejections.entry(k).or_default() += v;
        }
        for (k, v) in o.checks {
            self.checks.entry(k).or_default().add(&v);
        }
        self.first_counterexample = match (self.first_counterexample, o.first_counterexample) {
            (Some(a), Some(b)) => Some(if b.trial < a.trial { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed == self.trials
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.checks.get(check).copied().unwrap_or_default()
    }

    fn single(trial: u64, report: Report, degenerate: bool, rejections: BTreeMap<String, u64>) -> FuzzReport {
        let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
        for c in &report.checks {
            let t = checks.entry(c.name.clone()).or_default();
            match c.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => t.fail += 1,
                Outcome::Vacuous => t.vacuous += 1,
            }
        }
        let ok = report.passed();
        FuzzReport {
            trials: 1,
            passed: ok as u64,
            failed: !ok as u64,
            degenerate: degenerate as u64,
            rejections,
            checks,
            first_counterexample: (!ok).then_some(Counterexample { trial, report }),
        }
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}/{} {verdict}", self.passed, self.trials)?;
        writeln!(f, "degenerate samples: {}", self.degenerate)?;
        let total: u64 = self.rejections.values().sum();
        writeln!(f, "rejected samples: {total}")?;
        for (k, v) in &self.rejections {
            writeln!(f, "  {k}: {v}")?;
        }
        if let Some(c) = &self.first_counterexample {
            writeln!(f, "first counterexample (trial {}):", c.trial)?;
            write!(f, "{}", c.report)?;
        }
        Ok(())
    }
}

pub struct Sampler<'a> {
    pub rng: ChaCha8Rng,
    opts: &'a FuzzOptions,
}

impl<'a> Sampler<'a> {
    /// Trial `i` of a run with master seed `seed` draws from its own stream.
    pub fn for_trial(seed: u64, i: u64, opts: &'a FuzzOptions) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        Sampler { rng, opts }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.opts.num_bound..=self.opts.num_bound);
        let q = self.rng.gen_range(1..=self.opts.den_bound);
        rat(p, q)
    }

    fn small(&mut self, lo: i64, hi: i64) -> Rational {
        Rational::from_integer(self.rng.gen_range(lo..=hi).into())
    }

    pub fn point(&mut self) -> Point {
        Point::xy(self.rational(), self.rational())
    }

    fn int_matrix(&mut self) -> [[Rational; 3]; 3] {
        std::array::from_fn(|_| std::array::from_fn(|_| self.small(-3, 3)))
    }

    /// A random nondegenerate conic of the requested kind.
    pub fn conic(&mut self, kind: ConicKind) -> Conic {
        loop {
            let m = match (kind, self.rng.gen_range(0..4)) {
                (ConicKind::Real, 0 | 1) => return Conic::unit_circle(),
                (ConicKind::Imaginary, 0 | 1) => return Conic::imaginary_unit(),
                (ConicKind::Real, 2) => self.translated_ellipse(),
                (ConicKind::Real, _) => {
                    let a = self.int_matrix();
                    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &a[j][i]))
                }
                (ConicKind::Imaginary, _) => gram(&self.int_matrix()),
            };
            if let Ok(c) = Conic::new(m) {
                if c.kind() == kind {
                    return c;
                }
            }
        }
    }

    /// a(x − h)² + b(y − k)² = 1.
    fn translated_ellipse(&mut self) -> [[Rational; 3]; 3] {
        let a = rat(self.rng.gen_range(1..=16), 4);
        let b = rat(self.rng.gen_range(1..=16), 4);
        let h = rat(self.rng.gen_range(-4..=4), 4);
        let k = rat(self.rng.gen_range(-4..=4), 4);
        let c = &a * &h * &h + &b * &k * &k - Rational::one();
        let (ah, bk) = (-(&a * &h), -(&b * &k));
        let z = Rational::zero();
        [[a, z.clone(), ah.clone()], [z, b, bk.clone()], [ah, bk, c]]
    }

    /// A euclidean model whose absolute involution comes from a random
    /// positive definite binary form.
    pub fn euclidean_model(&mut self) -> Model {
        if self.rng.gen_bool(0.5) {
            return Model::standard_euclidean();
        }
        loop {
            let (p, q, r, s) = (self.small(-3, 3), self.small(-3, 3), self.small(-3, 3), self.small(-3, 3));
            let det = &p * &s - &q * &r;
            if det.is_zero() {
                continue;
            }
            let (z, one) = (Rational::zero(), Rational::one());
            let form = [
                [&p * &p + &r * &r, &p * &q + &r * &s, z.clone()],
                [&p * &q + &r * &s, &q * &q + &s * &s, z.clone()],
                [z.clone(), z, one],
            ];
            let conic = Conic::new(form).expect("positive definite");
            let line = Line::at_infinity();
            let inv = conjugacy_involution(&line, &conic, &LineChart::for_line(&line));
            if let Ok(m) = inv.and_then(Model::euclidean) {
                return m;
            }
        }
    }

    pub fn model(&mut self, g: Geometry) -> Model {
        match g {
            Geometry::Euclidean => self.euclidean_model(),
            Geometry::Hyperbolic => Model::non_euclidean(self.conic(ConicKind::Real)),
            Geometry::Elliptic => Model::non_euclidean(self.conic(ConicKind::Imaginary)),
        }
    }

    /// A vertex A on the perpendicular to BD at B, so that A* = B.
    pub fn degenerate_apex(&mut self, model: &Model, b: &Point, d: &Point) -> Result<Point> {
        let perp = drop_perpendicular(b, &join(b, d)?, model)?;
        meet(&perp, &join(&self.point(), &self.point())?)
    }
}

fn gram(a: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Rational::zero(), |acc, k| acc + &a[k][i] * &a[k][j]))
    })
}

fn rejection_reason(e: &Error) -> String {
    match e {
        Error::Guard(g) => g.clone(),
        Error::KindMismatch { found, .. } => format!("class {found}"),
        Error::BoundaryVertex(v) => format!("vertex {v} on the absolute"),
        other => other.to_string(),
    }
}

fn absorb_result(r: &mut Report, prefix: &str, res: Result<Report>) {
    match res {
        Ok(sub) => r.absorb(prefix, sub),
        Err(e) => {
            r.record(&format!("{prefix}construction"), Outcome::Fail, e.to_string());
        }
    }
}

/// Full check of one accepted diametral configuration.
pub fn check_config(target: FuzzTarget, cfg: &DiametralConfig) -> Report {
    let mut r = verify_midpoint_theorem(cfg);
    if cfg.degenerate.is_some() {
        if target == FuzzTarget::Euclidean {
            absorb_result(&mut r, "steps/", verify_euclidean_proof_steps(cfg).map(|w| w.report));
        }
        return r;
    }
    match target {
        FuzzTarget::Euclidean => {
            absorb_result(&mut r, "steps/", verify_euclidean_proof_steps(cfg).map(|w| w.report));
            absorb_result(&mut r, "bisectors/", verify_bisectors(cfg));
        }
        FuzzTarget::Hyperbolic => {
            match shadow_classify(cfg) {
                Ok(k) => absorb_result(&mut r, "shadow/", verify_shadow(cfg, k)),
                Err(e) => {
                    r.vacuous("shadow/classified", &e.to_string());
                }
            }
            absorb_result(&mut r, "bisectors/", verify_bisectors(cfg));
        }
        FuzzTarget::Shadow(kind) => {
            absorb_result(&mut r, "shadow/", verify_shadow(cfg, kind));
        }
        FuzzTarget::Elliptic => absorb_result(&mut r, "bisectors/", verify_bisectors(cfg)),
        FuzzTarget::Simplex(_) => {}
    }
    r
}

/// Draws one diametral configuration satisfying every guard and, for
/// shadow targets, the requested classification.
pub fn sample_diametral(
    target: FuzzTarget,
    s: &mut Sampler,
    degenerate: bool,
    rejections: &mut BTreeMap<String, u64>,
) -> Result<DiametralConfig> {
    let geometry = match target {
        FuzzTarget::Euclidean => Geometry::Euclidean,
        FuzzTarget::Elliptic => Geometry::Elliptic,
        FuzzTarget::Hyperbolic | FuzzTarget::Shadow(_) => Geometry::Hyperbolic,
        FuzzTarget::Simplex(_) => return Err(Error::NotApplicable("simplex targets have no diametral configuration")),
    };
    for _ in 0..s.opts.retry_budget {
        let model = s.model(geometry);
        let (b, d) = (s.point(), s.point());
        let attempt = (|| {
            let a = if degenerate { s.degenerate_apex(&model, &b, &d)? } else { s.point() };
            if let (FuzzTarget::Shadow(kind), Some(k)) = (target, model.conic()) {
                if !shadow_admits(kind, k, &a, &b, &d)? {
                    return Err(Error::Guard("class-prefilter".into()));
                }
            }
            let cfg = build_diametral(&model, &a, &b, &d)?;
            if degenerate != cfg.degenerate.is_some() {
                return Err(Error::Guard("unexpected-degeneracy".into()));
            }
            if let FuzzTarget::Shadow(kind) = target {
                let found = shadow_classify(&cfg)?;
                if found != kind {
                    return Err(Error::KindMismatch { expected: kind.name().into(), found: found.name().into() });
                }
            }
            Ok(cfg)
        })();
        match attempt {
            Ok(cfg) => return Ok(cfg),
            Err(e) => *rejections.entry(rejection_reason(&e)).or_default() += 1,
        }
    }
    Err(Error::SamplingExhausted(s.opts.retry_budget))
}

pub fn sample_simplex(n: usize, s: &mut Sampler, rejections: &mut BTreeMap<String, u64>) -> Result<SimplexConfig> {
    for _ in 0..s.opts.retry_budget {
        let verts = (0..=n).map(|_| (0..n).map(|_| s.rational()).collect()).collect();
        match SimplexConfig::new(verts) {
            Ok(cfg) => return Ok(cfg),
            Err(e) => *rejections.entry(rejection_reason(&e)).or_default() += 1,
        }
    }
    Err(Error::SamplingExhausted(s.opts.retry_budget))
}

fn run_trial(target: FuzzTarget, seed: u64, i: u64, opts: &FuzzOptions) -> Result<FuzzReport> {
    let mut s = Sampler::for_trial(seed, i, opts);
    let mut rejections = BTreeMap::new();
    if let FuzzTarget::Simplex(n) = target {
        let cfg = sample_simplex(n, &mut s, &mut rejections)?;
        let report = simplex_derive(&cfg).map(|d| verify_simplex(&d)).unwrap_or_else(|e| {
            let mut r = Report::new(format!("n-simplex n={n}"));
            r.record("derive", Outcome::Fail, e.to_string());
            r
        });
        return Ok(FuzzReport::single(i, report, false, rejections));
    }
    let degenerate = !matches!(target, FuzzTarget::Shadow(_))
        && opts.degenerate_every > 0
        && i % opts.degenerate_every == opts.degenerate_every - 1;
    let cfg = sample_diametral(target, &mut s, degenerate, &mut rejections)?;
    Ok(FuzzReport::single(i, check_config(target, &cfg), degenerate, rejections))
}

/// Runs `trials` independent trials in parallel; the result depends only on
/// the arguments.
pub fn fuzz_configs_with(target: FuzzTarget, trials: u64, seed: u64, opts: &FuzzOptions) -> Result<FuzzReport> {
    if trials == 0 {
        return Err(Error::NotApplicable("at least one trial is required"));
    }
    (0..trials)
        .into_par_iter()
        .map(|i| run_trial(target, seed, i, opts))
        .try_reduce(FuzzReport::default, |a, b| Ok(a.merge(b)))
}

pub fn fuzz_configs(target: FuzzTarget, trials: u64, seed: u64) -> Result<FuzzReport> {
    fuzz_configs_with(target, trials, seed, &FuzzOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = fuzz_configs(FuzzTarget::Euclidean, 20, 5).unwrap();
        let b = fuzz_configs(FuzzTarget::Euclidean, 20, 5).unwrap();
        assert_eq!(a, b);
        assert!(a.all_passed(), "{a}");
        assert!(a.degenerate >= 2);
    }

    #[test]
    fn each_target_passes() {
        let mut targets = vec![FuzzTarget::Hyperbolic, FuzzTarget::Elliptic, FuzzTarget::Simplex(3)];
        targets.extend(ShadowKind::ALL.iter().map(|k| FuzzTarget::Shadow(*k)));
        for t in targets {
            let r = fuzz_configs(t, 16, 1).unwrap();
            assert!(r.all_passed(), "{t}: {r}");
            assert_eq!(r.trials, 16);
        }
    }

    #[test]
    fn merge_is_order_independent() {
        let opts = FuzzOptions::default();
        let parts: Vec<FuzzReport> = (0..6).map(|i| run_trial(FuzzTarget::Elliptic, 3, i, &opts).unwrap()).collect();
        let fwd = parts.iter().cloned().fold(FuzzReport::default(), FuzzReport::merge);
        let rev = parts.iter().rev().cloned().fold(FuzzReport::default(), FuzzReport::merge);
        assert_eq!(fwd, rev);
    }

    #[test]
    fn exhaustion_and_zero_trials() {
        let opts = FuzzOptions { retry_budget: 1, num_bound: 0, ..FuzzOptions::default() };
        let r = fuzz_configs_with(FuzzTarget::Shadow(ShadowKind::HexagonII), 2, 0, &opts);
        assert_eq!(r, Err(Error::SamplingExhausted(1)));
        assert!(fuzz_configs(FuzzTarget::Euclidean, 0, 0).is_err());
    }

    #[test]
    fn target_names() {
        assert_eq!(FuzzTarget::parse("hexagon-II", 3), Ok(FuzzTarget::Shadow(ShadowKind::HexagonII)));
        assert_eq!(FuzzTarget::parse("simplex", 4), Ok(FuzzTarget::Simplex(4)));
        assert!(FuzzTarget::parse("simplex", 1).is_err());
        assert!(FuzzTarget::parse("nope", 3).is_err());
    }
}
