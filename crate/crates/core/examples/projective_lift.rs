//! Homogenizing a point of an affine cell into the projective cell and
//! checking that `z` is a non-zero-divisor on the result.

use groebner_cells::cell::make_cell;
use groebner_cells::groebner::buchberger;
use groebner_cells::hilburch::sample;
use groebner_cells::projective::{hom_hb_matrix, psi_bar, z_regular};
use groebner_cells::Field;

fn main() -> groebner_cells::Result<()> {
    let cell = make_cell(&[0, 1, 3, 6])?;
    let a = sample(&cell, Field::Rationals, 11);
    println!("X + A^hom:");
    for row in hom_hb_matrix(&a) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    let lifted = psi_bar(&a)?;
    for (i, f) in lifted.iter().enumerate() {
        println!("F{i} = {f}");
    }
    println!("z-regular: {}", z_regular(&lifted)?);
    let lead: Vec<String> = buchberger(&lifted)?.initial_ideal().iter().map(ToString::to_string).collect();
    println!("in(J) = ({})", lead.join(", "));
    Ok(())
}
