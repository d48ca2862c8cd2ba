//! Incidence, cross-ratio and polarity in the projective plane.

use cayley_klein::projective::{
    cross_ratio, harmonic_conjugate, join, line_conic_meet, meet, polar, pole, Conic, CrossRatio, Point,
};

fn main() -> Result<(), cayley_klein::Error> {
    let (a, b, c) = (Point::hom(1, 0, 1), Point::hom(-1, 0, 1), Point::hom(1, 0, 2));
    let d = harmonic_conjugate(&a, &b, &c)?;
    println!("harmonic conjugate of {c} w.r.t. {a}, {b}: {d}");
    match cross_ratio(&a, &b, &c, &d)? {
        CrossRatio::Finite(v) => println!("cross-ratio (A, B; C, D) = {v}"),
        CrossRatio::Infinity => println!("cross-ratio (A, B; C, D) is infinite"),
    }

    let l = join(&Point::hom(0, 0, 1), &Point::hom(1, 1, 1))?;
    let m = join(&Point::hom(0, 2, 1), &Point::hom(2, 0, 1))?;
    println!("{l} meets {m} at {}", meet(&l, &m)?);

    let circle = Conic::unit_circle();
    let p = Point::hom(2, 0, 1);
    let pl = polar(&p, &circle);
    println!("polar of {p}: {pl}, its pole {}", pole(&pl, &circle));
    let chord = line_conic_meet(&join(&Point::hom(0, 0, 1), &Point::hom(1, 1, 1))?, &circle)?;
    println!("y = x meets the unit circle at {} and {}", chord.p1, chord.p2);
    Ok(())
}
