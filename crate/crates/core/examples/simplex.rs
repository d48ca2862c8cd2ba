//! The n-dimensional version: for a simplex whose vertex A0 sees the
//! opposite facet in a right "corner", A* and C* are symmetric about the
//! circumcenter of that facet.

use cayley_klein::theorems::{format_vector, simplex_derive, verify_simplex, SimplexConfig};

fn main() -> Result<(), cayley_klein::Error> {
    let examples: [&[&[i64]]; 3] = [
        &[&[0, 0], &[2, 0], &[0, 4]],
        &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[&[0, 0, 0], &[2, 1, 0], &[0, 3, 1], &[1, 0, 2]],
    ];
    for verts in examples {
        let cfg = simplex_derive(&SimplexConfig::from_ints(verts)?)?;
        let show = |v: &Option<Vec<_>>| v.as_deref().map(format_vector).unwrap_or_default();
        println!("n = {}: C = {}, A* = {}, C* = {}, O = {}", cfg.dim(), show(&cfg.c), show(&cfg.a_star), show(&cfg.c_star), show(&cfg.circumcenter));
        println!("{}", verify_simplex(&cfg));
    }
    Ok(())
}
