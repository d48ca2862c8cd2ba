//! Projectivities of a line: the quadrangular involution and its
//! independence from the choice of opposite sides.

use cayley_klein::involutions::{
    compose, conjugacy_involution, equals, quadrangular_involution_skipping, LineChart,
};
use cayley_klein::projective::{Conic, Line, Point};

fn main() -> Result<(), cayley_klein::Error> {
    let quad = [Point::hom(0, 0, 1), Point::hom(3, 1, 1), Point::hom(1, 4, 1), Point::hom(-2, 2, 1)];
    let a = Line::hom(1, 2, -10);
    let chart = LineChart::for_line(&a);
    let taus = (0..3)
        .map(|skip| quadrangular_involution_skipping(&quad, &a, &chart, skip))
        .collect::<Result<Vec<_>, _>>()?;
    println!("involution is an involution: {}", taus[0].is_involution());
    println!("same involution from each choice of two side pairs: {} {}", equals(&taus[0], &taus[1])?, equals(&taus[0], &taus[2])?);

    let rho = conjugacy_involution(&a, &Conic::unit_circle(), &chart)?;
    let both = compose(&rho, &taus[0])?;
    let ends = rho.fixed_points()?;
    println!("conjugacy involution of the unit circle fixes {} and {}", ends.p1, ends.p2);
    match both.fixed_points() {
        Ok(fp) => println!("fixed points of rho o tau: {} and {}", fp.p1, fp.p2),
        Err(e) => println!("rho o tau has no fixed points: {e}"),
    }
    Ok(())
}
