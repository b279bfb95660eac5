//! A random point of a cell, its ideal of maximal minors, and the check
//! that those minors already form a Gröbner basis.

use groebner_cells::cell::make_cell;
use groebner_cells::groebner::buchberger;
use groebner_cells::hilburch::{psi, sample, verify_groebner_property};
use groebner_cells::Field;

fn main() -> groebner_cells::Result<()> {
    let cell = make_cell(&[0, 2, 3, 5])?;
    let field = Field::prime(10007)?;
    let a = sample(&cell, field, 2024);
    println!("A over {field}:");
    for row in a.to_strings() {
        println!("  {row:?}");
    }
    let basis = psi(&a)?;
    for (i, f) in basis.f.iter().enumerate() {
        println!("f{i} = {f}");
    }
    println!("consecutive S-pairs reduce to zero: {}", verify_groebner_property(&basis)?);
    let gb = buchberger(&basis.f)?;
    let lead: Vec<String> = gb.initial_ideal().iter().map(ToString::to_string).collect();
    println!("initial ideal of the reduced basis: ({})", lead.join(", "));
    Ok(())
}
