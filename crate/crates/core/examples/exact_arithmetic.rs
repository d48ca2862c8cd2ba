//! Arithmetic in a quadratic field ℚ(√d) without rounding.

use cayley_klein::exactnum::{int, rat, same_field, sqfree_normalize, sqrt_ext, QExt};

fn main() -> Result<(), cayley_klein::Error> {
    let r3 = sqrt_ext(&int(12));
    println!("sqrt(12) = {r3}");
    let x = QExt::new(int(2), int(-1), 3.into())?;
    let y = x.try_mul(&x.conj())?;
    println!("(2 - sqrt3)(2 + sqrt3) = {y}, rational: {}", y.is_rational());
    println!("1 / (2 - sqrt3) = {}", x.try_inv()?);
    println!("2 - sqrt3 ~ {:.15}", x.to_f64().unwrap_or(f64::NAN));

    let (d, c) = sqfree_normalize(&rat(-50, 3))?;
    println!("-50/3 = ({c})^2 * {d}");
    println!("Q(sqrt 6) = Q(sqrt 24): {}", same_field(&6.into(), &24.into()));

    let mixed = sqrt_ext(&int(2)).try_add(&sqrt_ext(&int(3)));
    println!("sqrt2 + sqrt3 in a single quadratic field: {mixed:?}");
    Ok(())
}
