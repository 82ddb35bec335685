//! Exact numbers in a quadratic tower: arithmetic, square roots, signs.

use twodist::exactnum::{FieldElement, Tower};

fn main() -> twodist::Result<()> {
    // Q(sqrt 3)(fourth root of 3)(sqrt 2)
    let t = Tower::from_decls(&[("s3", "3"), ("q3", "s3"), ("s2", "2")])?;
    let d2 = FieldElement::parse(&t, "(2*q3*s2 + 2*s3 + 2)/4")?;
    println!("d^2 = {d2}");
    println!("d^2 is about {}", d2.interval(80));

    let x = FieldElement::parse(&t, "2 + s3")?;
    match x.sqrt_in_field()? {
        Some(r) => println!("sqrt({x}) = {r}"),
        None => println!("sqrt({x}) is not in the tower"),
    }

    let a = FieldElement::parse(&t, "q3*s2")?;
    let b = FieldElement::parse(&t, "(s3 + 1)/1")?;
    println!("sign(q3*s2 - (s3 + 1)) = {}", (&a - &b).signum());
    println!("(q3*s2)^4 = {}", a.pow(4));
    println!("1 / (1 + s2) = {}", FieldElement::one(&t).checked_div(&(FieldElement::one(&t) + t.generator("s2")?))?);
    Ok(())
}
