//! A quadrangle with right angles at B and D: the feet A*, C* of the
//! perpendiculars from A and C onto BD have the same midpoints as BD.

use cayley_klein::exactnum::rat;
use cayley_klein::model::Model;
use cayley_klein::projective::Point;
use cayley_klein::theorems::{build_diametral, verify_euclidean_proof_steps, verify_midpoint_theorem};

fn main() -> Result<(), cayley_klein::Error> {
    let (a, b, d) = (Point::xy(rat(1, 10), rat(1, 2)), Point::xy(rat(1, 2), rat(-1, 10)), Point::xy(rat(-2, 5), rat(-1, 5)));
    for (name, model) in [("euclidean", Model::standard_euclidean()), ("hyperbolic", Model::hyperbolic()), ("elliptic", Model::elliptic())] {
        let cfg = build_diametral(&model, &a, &b, &d)?;
        println!("{name}: C = {}, A* = {}, C* = {}", cfg.c, cfg.a_star, cfg.c_star);
        println!("{}", verify_midpoint_theorem(&cfg));
    }

    let cfg = build_diametral(&Model::standard_euclidean(), &a, &b, &d)?;
    let w = verify_euclidean_proof_steps(&cfg)?;
    println!("orthocenter of BCD: {}", w.h);
    println!("{}", w.report);
    Ok(())
}
