//! Randomized invariants of the kernel, the metric constructions and the
//! theorem verifiers.

use cayley_klein::cli::figure::{default_scene, render_figure, FigureName};
use cayley_klein::cli::scene::{parse_scene, serialize_scene, Scene, Style};
use cayley_klein::exactnum::{int, sqrt_ext, QExt, Rational};
use cayley_klein::involutions::{
    conjugacy_involution, equals, involution_from_pairs, quadrangular_involution_skipping, LineChart, Projectivity1D,
};
use cayley_klein::model::{angle_bisectors, foot, midpoints, perpendicular, same_unordered, Model};
use cayley_klein::projective::{
    classify_point, collinear, cross_ratio, harmonic_conjugate, incident, join, line_conic_meet, meet, polar, pole,
    Conic, ConicKind, Line, Point,
};
use cayley_klein::theorems::*;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 96, ..ProptestConfig::default() }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| *q != int(0))
}

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=10).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::xy(x, y))
}

/// Points of the open unit square, where hyperbolic samples are mostly interior.
fn disk_point() -> impl Strategy<Value = Point> {
    (small(), small()).prop_map(|(x, y)| Point::xy(x, y))
}

fn radicand() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![-7i64, -3, -1, 2, 3, 5, 6, 10, 15])
}

fn qext(d: i64) -> impl Strategy<Value = QExt> {
    (rational(), rational()).prop_map(move |(a, b)| QExt::new(a, b, d.into()).expect("square-free radicand"))
}

/// Three elements of one random quadratic field.
fn triple() -> impl Strategy<Value = (QExt, QExt, QExt)> {
    radicand().prop_flat_map(|d| (qext(d), qext(d), qext(d)))
}

fn symmetric() -> impl Strategy<Value = [[Rational; 3]; 3]> {
    prop::collection::vec(-6i64..=6, 6).prop_map(|v| {
        let q = |i: usize| int(v[i]);
        [[q(0), q(1), q(2)], [q(1), q(3), q(4)], [q(2), q(4), q(5)]]
    })
}

fn conic() -> impl Strategy<Value = Conic> {
    symmetric().prop_filter_map("degenerate", |m| Conic::new(m).ok())
}

fn model() -> impl Strategy<Value = Model> {
    prop_oneof![Just(Model::standard_euclidean()), Just(Model::hyperbolic()), Just(Model::elliptic())]
}

fn matrix() -> impl Strategy<Value = [[QExt; 2]; 2]> {
    prop::collection::vec(-9i64..=9, 4)
        .prop_filter("invertible", |v| v[0] * v[3] != v[1] * v[2])
        .prop_map(|v| [[QExt::int(v[0]), QExt::int(v[1])], [QExt::int(v[2]), QExt::int(v[3])]])
}

fn distinct<T: PartialEq>(xs: &[T]) -> bool {
    (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| xs[i] != xs[j]))
}

fn chart_x_axis() -> LineChart {
    LineChart::for_line(&Line::hom(0, 1, 0))
}

fn on_axis(x: &Rational) -> Point {
    Point::xy(x.clone(), int(0))
}

// exact numbers

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        let xy_z = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
        prop_assert_eq!(&xy_z, &x.try_mul(&y.try_mul(&z).unwrap()).unwrap());
        let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.try_add(&y).unwrap(), y.try_add(&x).unwrap());
        if !x.is_zero() {
            prop_assert!(x.try_mul(&x.try_inv().unwrap()).unwrap().is_one());
            prop_assert_eq!(y.try_div(&x).unwrap().try_mul(&x).unwrap(), y.clone());
        }
    }

    #[test]
    fn conjugation_is_an_automorphism((x, y, _) in triple()) {
        prop_assert_eq!(x.try_mul(&y).unwrap().conj(), x.conj().try_mul(&y.conj()).unwrap());
        prop_assert_eq!(x.try_add(&y).unwrap().conj(), x.conj().try_add(&y.conj()).unwrap());
    }

    #[test]
    fn sqrt_squares_back(q in nonzero()) {
        let r = sqrt_ext(&q);
        prop_assert_eq!(r.try_mul(&r).unwrap(), QExt::rational(q));
    }

    #[test]
    fn zero_radical_part_is_rational(a in rational(), d in radicand()) {
        let x = QExt::new(a.clone(), int(0), d.into()).unwrap();
        prop_assert!(x.is_rational());
        prop_assert_eq!(x, QExt::rational(a));
    }
}

// projective plane

proptest! {
    #![proptest_config(config())]

    #[test]
    fn join_meet_duality(p in point(), q in point(), r in point()) {
        prop_assume!(distinct(&[&p, &q, &r]) && !collinear(&p, &q, &r).unwrap());
        prop_assert_eq!(meet(&join(&p, &q).unwrap(), &join(&p, &r).unwrap()).unwrap(), p);
    }

    #[test]
    fn cross_ratio_survives_projectivities(xs in prop::collection::vec(rational(), 4), m in matrix()) {
        prop_assume!(distinct(&xs));
        let pts: Vec<Point> = xs.iter().map(on_axis).collect();
        let f = Projectivity1D::from_matrix(chart_x_axis(), m).unwrap();
        let img: Vec<Point> = pts.iter().map(|p| f.apply(p).unwrap()).collect();
        prop_assert_eq!(
            cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap(),
            cross_ratio(&img[0], &img[1], &img[2], &img[3]).unwrap()
        );
    }

    #[test]
    fn harmonic_conjugate_is_an_involution(xs in prop::collection::vec(rational(), 3)) {
        prop_assume!(distinct(&xs));
        let (a, b, c) = (on_axis(&xs[0]), on_axis(&xs[1]), on_axis(&xs[2]));
        let d = harmonic_conjugate(&a, &b, &c).unwrap();
        prop_assert_eq!(harmonic_conjugate(&a, &b, &d).unwrap(), c);
    }

    #[test]
    fn polarity(k in conic(), p in point(), q in point()) {
        prop_assert_eq!(pole(&polar(&p, &k), &k), p.clone());
        prop_assert_eq!(incident(&q, &polar(&p, &k)).unwrap(), incident(&p, &polar(&q, &k)).unwrap());
    }

    #[test]
    fn chord_points_lie_on_the_conic(k in conic(), p in point(), q in point()) {
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        if let Ok(chord) = line_conic_meet(&l, &k) {
            prop_assert!(k.value(&chord.p1).is_zero() && k.value(&chord.p2).is_zero());
            prop_assert!(incident(&chord.p1, &l).unwrap() && incident(&chord.p2, &l).unwrap());
            if !chord.p1.is_rational() {
                prop_assert_eq!(chord.p1.conj(), chord.p2);
            }
        }
    }

    #[test]
    fn classification_ignores_scale(k in conic(), p in point(), c in nonzero()) {
        prop_assume!(k.kind() == ConicKind::Real);
        let scaled = k.scaled(&c).unwrap();
        let coords = p.to_rationals().unwrap().map(|x| x * &c);
        let p2 = Point::from_rationals(coords).unwrap();
        prop_assert_eq!(classify_point(&p, &k).unwrap(), classify_point(&p2, &scaled).unwrap());
    }
}

// involutions

proptest! {
    #![proptest_config(config())]

    #[test]
    fn three_points_determine_a_projectivity(m in matrix(), xs in prop::collection::vec(rational(), 3), ys in prop::collection::vec(rational(), 3)) {
        prop_assume!(distinct(&xs) && distinct(&ys));
        let chart = chart_x_axis();
        let f = Projectivity1D::from_matrix(chart.clone(), m).unwrap();
        // a projectivity through the same three image points, built from scratch
        let src: Vec<Point> = xs.iter().map(on_axis).collect();
        let dst: Vec<Point> = src.iter().map(|p| f.apply(p).unwrap()).collect();
        let g = fit_three(&chart, &src, &dst);
        prop_assert!(equals(&f, &g).unwrap());
        // and one that moves a third point elsewhere is different
        let other: Vec<Point> = ys.iter().map(on_axis).collect();
        let h = fit_three(&chart, &src, &other);
        let agree = (0..3).all(|i| f.apply(&src[i]).unwrap() == h.apply(&src[i]).unwrap());
        prop_assert_eq!(equals(&f, &h).unwrap(), agree);
    }

    #[test]
    fn pappus_independence(q in prop::collection::vec(point(), 4), l in (point(), point())) {
        prop_assume!(l.0 != l.1);
        let quad = [q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone()];
        let a = join(&l.0, &l.1).unwrap();
        let chart = LineChart::for_line(&a);
        let taus: Result<Vec<_>, _> = (0..3).map(|s| quadrangular_involution_skipping(&quad, &a, &chart, s)).collect();
        prop_assume!(taus.is_ok());
        let taus = taus.unwrap();
        prop_assert!(taus[0].is_involution());
        prop_assert!(equals(&taus[0], &taus[1]).unwrap() && equals(&taus[0], &taus[2]).unwrap());
    }

    #[test]
    fn fixed_points_separate_pairs_harmonically(xs in prop::collection::vec(rational(), 5)) {
        prop_assume!(distinct(&xs[..4]));
        let chart = chart_x_axis();
        let p: Vec<Point> = xs.iter().map(on_axis).collect();
        let f = involution_from_pairs((&p[0], &p[1]), (&p[2], &p[3]), &chart);
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        let fx = f.apply(&p[4]).unwrap();
        let fp = f.fixed_points().unwrap();
        prop_assume!(p[4] != fp.p1 && p[4] != fp.p2);
        prop_assert!(cross_ratio(&fp.p1, &fp.p2, &p[4], &fx).unwrap().is_harmonic());
    }

    #[test]
    fn conjugacy_fixes_the_chord(k in conic(), p in point(), q in point()) {
        prop_assume!(p != q);
        let a = join(&p, &q).unwrap();
        let chart = LineChart::for_line(&a);
        let (Ok(rho), Ok(chord)) = (conjugacy_involution(&a, &k, &chart), line_conic_meet(&a, &k)) else {
            return Ok(());
        };
        let fp = rho.fixed_points().unwrap();
        prop_assert!(same_unordered(&fp.p1, &fp.p2, &chord.p1, &chord.p2));
    }
}

/// The projectivity sending `src[i]` to `dst[i]`, solved for directly.
fn fit_three(chart: &LineChart, src: &[Point], dst: &[Point]) -> Projectivity1D {
    let par = |p: &Point| chart.param(p).unwrap();
    // columns: images of base0, base1 scaled so that the third point maps right
    let frame = |ps: &[Point]| -> [[QExt; 2]; 2] {
        let (a, b, c) = (par(&ps[0]), par(&ps[1]), par(&ps[2]));
        // c = λ a + μ b
        let det = a[0].try_mul(&b[1]).unwrap().try_sub(&a[1].try_mul(&b[0]).unwrap()).unwrap();
        let lam = c[0].try_mul(&b[1]).unwrap().try_sub(&c[1].try_mul(&b[0]).unwrap()).unwrap().try_div(&det).unwrap();
        let mu = a[0].try_mul(&c[1]).unwrap().try_sub(&a[1].try_mul(&c[0]).unwrap()).unwrap().try_div(&det).unwrap();
        [
            [lam.try_mul(&a[0]).unwrap(), mu.try_mul(&b[0]).unwrap()],
            [lam.try_mul(&a[1]).unwrap(), mu.try_mul(&b[1]).unwrap()],
        ]
    };
    let (n, m) = (frame(dst), frame(src));
    let det = m[0][0].try_mul(&m[1][1]).unwrap().try_sub(&m[0][1].try_mul(&m[1][0]).unwrap()).unwrap();
    let inv = [
        [m[1][1].try_div(&det).unwrap(), m[0][1].try_div(&det).unwrap().try_mul(&QExt::int(-1)).unwrap()],
        [m[1][0].try_div(&det).unwrap().try_mul(&QExt::int(-1)).unwrap(), m[0][0].try_div(&det).unwrap()],
    ];
    let prod = std::array::from_fn(|i| {
        std::array::from_fn(|j| n[i][0].try_mul(&inv[0][j]).unwrap().try_add(&n[i][1].try_mul(&inv[1][j]).unwrap()).unwrap())
    });
    Projectivity1D::from_matrix(chart.clone(), prod).unwrap()
}

// metric constructions

proptest! {
    #![proptest_config(config())]

    #[test]
    fn midpoints_are_harmonic_and_conjugate(a in disk_point(), b in point(), elliptic in any::<bool>()) {
        prop_assume!(a != b);
        let m = if elliptic { Model::elliptic() } else { Model::hyperbolic() };
        let Ok(mp) = midpoints(&a, &b, &m) else { return Ok(()) };
        prop_assert!(collinear(&a, &b, &mp.e1).unwrap() && collinear(&a, &b, &mp.e2).unwrap());
        prop_assert!(cross_ratio(&a, &b, &mp.e1, &mp.e2).unwrap().is_harmonic());
        let uv = line_conic_meet(&join(&a, &b).unwrap(), m.conic().unwrap()).unwrap();
        prop_assert!(cross_ratio(&uv.p1, &uv.p2, &mp.e1, &mp.e2).unwrap().is_harmonic());
        if !mp.e1.is_rational() {
            prop_assert_eq!(mp.e1.conj(), mp.e2);
        }
    }

    #[test]
    fn foot_is_the_perpendicular_projection(m in model(), p in point(), q in point(), r in point()) {
        prop_assume!(q != r);
        let l = join(&q, &r).unwrap();
        prop_assume!(!incident(&p, &l).unwrap());
        let Ok(x) = foot(&p, &l, &m) else { return Ok(()) };
        prop_assert!(incident(&x, &l).unwrap());
        if x != p {
            prop_assert!(perpendicular(&join(&p, &x).unwrap(), &l, &m).unwrap());
        }
        if let Ok(again) = foot(&x, &l, &m) {
            prop_assert_eq!(again, x);
        }
    }

    #[test]
    fn bisectors_are_harmonic_to_the_legs(m in model(), v in disk_point(), p in point(), q in point(), t in (point(), point())) {
        prop_assume!(distinct(&[&v, &p, &q]) && !collinear(&v, &p, &q).unwrap() && t.0 != t.1);
        let (l1, l2) = (join(&v, &p).unwrap(), join(&v, &q).unwrap());
        let Ok((b1, b2)) = angle_bisectors(&l1, &l2, &m) else { return Ok(()) };
        let tr = join(&t.0, &t.1).unwrap();
        prop_assume!(!incident(&v, &tr).unwrap());
        let cut = |l: &Line| meet(l, &tr).unwrap();
        prop_assert!(cross_ratio(&cut(&l1), &cut(&l2), &cut(&b1), &cut(&b2)).unwrap().is_harmonic());
    }
}

#[test]
fn hyperbolic_midpoint_tends_to_euclidean() {
    let (a, b) = (Point::xy(int(1), int(2)), Point::xy(int(4), int(-3)));
    let euclid = [2.5, -0.5];
    let mut errors = Vec::new();
    for r in [10i64, 100, 1000] {
        let k = Conic::diagonal(int(1), int(1), int(-r * r)).unwrap();
        let mp = midpoints(&a, &b, &Model::non_euclidean(k)).unwrap();
        let (x, y) = mp.interior_point().unwrap().affine_f64().unwrap();
        errors.push((x - euclid[0]).hypot(y - euclid[1]));
    }
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

// theorems

proptest! {
    #![proptest_config(config())]

    #[test]
    fn routes_agree(m in model(), a in disk_point(), b in disk_point(), d in disk_point()) {
        let Ok(cfg) = build_diametral(&m, &a, &b, &d) else { return Ok(()) };
        let r = verify_midpoint_theorem(&cfg);
        prop_assert!(r.passed(), "{}", r);
        if cfg.degenerate.is_none() {
            prop_assert_eq!(r.outcome("routes-agree"), Some(Outcome::Pass));
        }
    }

    #[test]
    fn shadows_are_one_projective_statement(a in point(), b in point(), d in point()) {
        let Ok(cfg) = build_diametral(&Model::hyperbolic(), &a, &b, &d) else { return Ok(()) };
        let Ok(kind) = shadow_classify(&cfg) else { return Ok(()) };
        let r = verify_shadow(&cfg, kind).unwrap();
        prop_assert!(r.passed(), "{}", r);
        prop_assert!(verify_midpoint_theorem(&cfg).passed());
    }

    #[test]
    fn triangle_case_matches_the_plane_theorem(v in prop::collection::vec(rational(), 6)) {
        let Ok(s) = SimplexConfig::new(vec![v[0..2].to_vec(), v[2..4].to_vec(), v[4..6].to_vec()]) else { return Ok(()) };
        let s = simplex_derive(&s).unwrap();
        let pt = |w: &Option<Vector>| { let w = w.as_ref().unwrap(); Point::xy(w[0].clone(), w[1].clone()) };
        let (a, b, d) = (Point::xy(v[0].clone(), v[1].clone()), Point::xy(v[2].clone(), v[3].clone()), Point::xy(v[4].clone(), v[5].clone()));
        let Ok(cfg) = build_diametral(&Model::standard_euclidean(), &a, &b, &d) else { return Ok(()) };
        prop_assert_eq!(verify_simplex(&s).passed(), verify_midpoint_theorem(&cfg).passed());
        prop_assert_eq!(&cfg.a_star, &pt(&s.a_star));
        prop_assert_eq!(&cfg.c_star, &pt(&s.c_star));
        prop_assert_eq!(&cfg.midpoints.e1, &pt(&s.circumcenter));
    }

    #[test]
    fn a_star_at_b_forces_c_star_at_d(m in model(), b in disk_point(), d in disk_point(), p in point(), q in point()) {
        prop_assume!(b != d && p != q);
        let Ok(perp) = join(&b, &d).and_then(|bd| cayley_klein::model::drop_perpendicular(&b, &bd, &m)) else { return Ok(()) };
        let Ok(a) = meet(&perp, &join(&p, &q).unwrap()) else { return Ok(()) };
        let Ok(cfg) = build_diametral(&m, &a, &b, &d) else { return Ok(()) };
        prop_assert_eq!(&cfg.a_star, &b);
        prop_assert_eq!(&cfg.c_star, &d);
    }

    #[test]
    fn mutants_are_killed(m in model(), a in disk_point(), b in disk_point(), d in disk_point()) {
        let Ok(cfg) = build_diametral(&m, &a, &b, &d) else { return Ok(()) };
        prop_assume!(cfg.degenerate.is_none());
        for o in midpoint_theorem_mutations(&cfg) {
            prop_assert!(o.killed, "{}", o);
        }
    }
}

// scenes, fuzzing and figures

fn scene() -> impl Strategy<Value = Scene> {
    let names = prop::collection::btree_set("[A-Z][0-9]?", 1..6);
    (model(), names, prop::collection::vec((rational(), rational(), rational()), 6), any::<bool>()).prop_filter_map(
        "zero point",
        |(m, names, coords, labelled)| {
            let pts: Vec<(String, Point)> = names
                .into_iter()
                .zip(coords)
                .map(|(n, (x, y, z))| Point::from_rationals([x, y, z]).map(|p| (n, p)))
                .collect::<Result<_, _>>()
                .ok()?;
            let refs: Vec<(&str, &Point)> = pts.iter().map(|(n, p)| (n.as_str(), p)).collect();
            let mut s = Scene::plane(m, &refs);
            if labelled {
                s.style = Style { viewport: Some([int(-2), int(-1), int(3), int(2)]), labels: Some(vec![pts[0].0.clone()]) };
            }
            Some(s)
        },
    )
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn scene_roundtrip(s in scene()) {
        let text = serialize_scene(&s);
        let back = parse_scene(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(serialize_scene(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn fuzz_is_deterministic_and_merges_associatively(seed in any::<u64>()) {
        let run = |n| fuzz_configs(FuzzTarget::parse("hyperbolic", 3).unwrap(), n, seed).unwrap();
        let (x, y) = (run(12), run(12));
        prop_assert_eq!(x.to_string(), y.to_string());
        let (p, q, r) = (run(3), run(4), run(5));
        prop_assert_eq!(p.clone().merge(q.clone()).merge(r.clone()), p.clone().merge(q.merge(r)));
    }
}

#[test]
fn figures_are_deterministic() {
    for name in FigureName::ALL {
        let scene = default_scene(name);
        assert_eq!(render_figure(name, &scene).unwrap(), render_figure(name, &scene).unwrap(), "{name}");
    }
}
