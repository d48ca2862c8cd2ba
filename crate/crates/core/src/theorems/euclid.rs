//! The individual steps of the euclidean argument through Pappus' theorem.

use crate::error::{Error, Result};
use crate::involutions::{equals, quadrangular_involution};
use crate::model::Model;
use crate::projective::{collinear, harmonic_conjugate, incident, join, meet, Point};

use super::diametral::DiametralConfig;
use super::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanWitness {
    /// Points at infinity of BD, AB, AD.
    pub a0: Point,
    pub b0: Point,
    pub d0: Point,
    /// Their images under the absolute involution.
    pub a1: Point,
    pub b1: Point,
    pub d1: Point,
    /// Orthocenter of BCD.
    pub h: Point,
    pub f: Option<Point>,
    pub g: Option<Point>,
    pub m: Point,
    pub report: Report,
}

/// Checks (i) τ of {B,C,D,H} on the line at infinity is the absolute
/// involution, (ii) C, H, A1 collinear, (iii) A, H, M collinear, (iv) F and
/// (v) G on AH, (vi) M harmonic to A0 with respect to A*, C*.
pub fn verify_euclidean_proof_steps(cfg: &DiametralConfig) -> Result<EuclideanWitness> {
    let Model::Euclidean { infinity_line: pinf, absolute: r } = &cfg.model else {
        return Err(Error::NotApplicable("requires the euclidean model"));
    };
    let (a, b, c, d) = (&cfg.a, &cfg.b, &cfg.c, &cfg.d);
    let (sa, sc) = (&cfg.a_star, &cfg.c_star);
    let bd = join(b, d)?;
    let a0 = meet(&bd, pinf)?;
    let b0 = meet(&join(a, b)?, pinf)?;
    let d0 = meet(&join(a, d)?, pinf)?;
    let (a1, b1, d1) = (r.apply(&a0)?, r.apply(&b0)?, r.apply(&d0)?);
    let h = meet(&join(b, &d0)?, &join(d, &b0)?)?;
    let m = harmonic_conjugate(b, d, &a0)?;
    let mut rep = Report::new("euclidean proof steps");
    for (n, p) in [("A", a), ("B", b), ("C", c), ("D", d), ("A*", sa), ("C*", sc)] {
        rep.point(n, p);
    }
    for (n, p) in [("A0", &a0), ("B0", &b0), ("D0", &d0), ("A1", &a1), ("B1", &b1), ("D1", &d1)] {
        rep.point(n, p);
    }
    rep.point("H", &h);
    rep.point("M", &m);

    if cfg.degenerate.is_some() {
        rep.check("degenerate-C*", (sa == b && sc == d) || (sa == d && sc == b));
    }
    rep.check_result("on-BD", Ok(incident(sa, &bd)? && incident(sc, &bd)?));
    rep.check_result("A*-on-AA1", collinear(a, &a1, sa));
    rep.check_result("C*-on-CA1", if c == sc { Ok(true) } else { collinear(c, &a1, sc) });
    if h == *c {
        rep.vacuous("i-tau-equals-r", "H = C, the quadrangle BCDH is degenerate");
        rep.vacuous("ii-CHA1", "H = C");
    } else if c == b || c == d {
        rep.vacuous("i-tau-equals-r", "C is an end of BD, the quadrangle BCDH is degenerate");
        rep.check_result("ii-CHA1", collinear(c, &h, &a1));
    } else {
        let tau = quadrangular_involution(&[b.clone(), c.clone(), d.clone(), h.clone()], pinf, r.chart());
        rep.check_result("i-tau-equals-r", tau.and_then(|t| equals(&t, r)));
        rep.check_result("ii-CHA1", collinear(c, &h, &a1));
    }
    let ah = if *a == h { None } else { Some(join(a, &h)?) };
    match &ah {
        Some(_) => rep.check_result("iii-AHM", collinear(a, &h, &m)),
        None => rep.vacuous("iii-AHM", "H = A"),
    };
    let on_ah = |p: &Point| -> Result<bool> {
        match &ah {
            Some(l) => incident(p, l),
            None => Ok(true),
        }
    };
    let pair = |x: &Point, y: &Point, u: &Point, v: &Point| -> Option<Point> {
        meet(&join(x, y).ok()?, &join(u, v).ok()?).ok()
    };
    let f = pair(&b0, sc, &d0, sa);
    let g = pair(&b0, sa, &d0, sc);
    for (name, p, label) in [("iv-F-on-AH", &f, "F"), ("v-G-on-AH", &g, "G")] {
        match p {
            Some(p) => {
                rep.point(label, p);
                rep.check_result(name, on_ah(p));
            }
            None => {
                rep.vacuous(name, "A* = C*, the hexagon collapses");
            }
        }
    }
    if sa == sc {
        rep.check("vi-harmonic-M", *sa == m);
    } else {
        rep.check_result("vi-harmonic-M", harmonic_conjugate(sa, sc, &a0).map(|x| x == m));
    }
    Ok(EuclideanWitness { a0, b0, d0, a1, b1, d1, h, f, g, m, report: rep })
}
