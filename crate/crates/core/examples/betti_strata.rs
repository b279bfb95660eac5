//! Betti numbers along the cell of (x^3, x^2y^5, xy^7, y^11): a generic
//! point versus one where the constant entry a_{3,1} vanishes.

use groebner_cells::betti::{betti_numbers, block_matrix, strata_codim};
use groebner_cells::cell::make_cell;
use groebner_cells::hilburch::{check_membership, sample};
use groebner_cells::{Field, UniPoly};

fn main() -> groebner_cells::Result<()> {
    let cell = make_cell(&[0, 5, 7, 11])?;
    let generic = sample(&cell, Field::Rationals, 3);
    let mut rows = generic.rows().to_vec();
    rows[2][0] = UniPoly::zero(Field::Rationals);
    let special = check_membership(&cell, Field::Rationals, rows)?;
    for (name, a) in [("generic", &generic), ("a31 = 0", &special)] {
        let table = betti_numbers(a)?;
        let m8: Vec<Vec<String>> = block_matrix(a, 8)?.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        println!("{name}: M_8 = {m8:?}");
        println!("  beta0 = {:?}", table.beta0);
        println!("  beta1 = {:?}", table.beta1);
    }
    println!("lex table beta0 = {:?}", betti_numbers(&generic)?.lex_beta0);
    println!("codim of {{beta0_8 = 1}} = {}", strata_codim(&cell, 8, 1)?);
    Ok(())
}
