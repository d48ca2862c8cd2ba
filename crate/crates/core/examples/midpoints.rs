//! Midpoints and angle bisectors in the hyperbolic and elliptic planes,
//! compared with the closed-form distance functions.

use cayley_klein::exactnum::rat;
use cayley_klein::model::{angle_bisectors, lemma_midpoint_check, midpoints, Model};
use cayley_klein::projective::{join, Point};

fn main() -> Result<(), cayley_klein::Error> {
    let hyp = Model::hyperbolic();
    let (o, p) = (Point::hom(0, 0, 1), Point::xy(rat(1, 2), rat(0, 1)));
    let mp = midpoints(&o, &p, &hyp)?;
    let inner = mp.interior_point().expect("hyperbolic segment");
    let x = inner.affine_f64().expect("affine").0;
    println!("hyperbolic midpoint of O and (1/2, 0): {inner}");
    println!("  exact {x:.15}, from artanh {:.15}", (0.5f64.atanh() / 2.0).tanh());
    println!("  lemma agrees: {}", lemma_midpoint_check(&o, &p, &mp.e1, &mp.e2, &hyp)?);

    let ell = Model::elliptic();
    let q = Point::hom(1, 0, 1);
    let mp = midpoints(&o, &q, &ell)?;
    println!("elliptic midpoints of (0:0:1) and (1:0:1): {} and {}", mp.e1, mp.e2);
    println!("  tan(pi/8) = {:.15}", (std::f64::consts::PI / 8.0).tan());

    let (m, n) = (join(&o, &p)?, join(&o, &Point::hom(0, 1, 3))?);
    let (b1, b2) = angle_bisectors(&m, &n, &hyp)?;
    println!("hyperbolic bisectors of the axes at O: {b1} and {b2}");
    Ok(())
}
