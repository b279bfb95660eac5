//! Recovering the canonical Hilbert-Burch matrix of an ideal of ten points,
//! printing every intermediate matrix of the reduction.

use groebner_cells::canonical::{canonicalize_traced, infer_cell};
use groebner_cells::cli::parse_generators;
use groebner_cells::hilburch::psi;
use groebner_cells::Field;

const GENS: &str = "
x^3 - x^2*y - 2*x*y^2 + 2*y^3 - 2*x^2 + x*y + y^2 - x + 2*y - 2
x^2*y^2 - 2*y^4 - x^3 + x^2*y - 2*y^3 + x^2 - 3*x*y + 4*y^2 + 4*x - y
x*y^3 - y^4 - 2*x^2*y + 6*x*y^2 - 5*y^3 + x^2 - x*y + 2*y^2 - 3*x + 4*y - 2
y^5 + x^2*y^2 - 2*x*y^3 + 2*y^4 + 3*x*y^2 + 2*y^3 - x^2 - 2*x*y - y^2 - x - 11*y + 6
";

fn main() -> groebner_cells::Result<()> {
    let gens = parse_generators(GENS, Field::Rationals)?;
    let cell = infer_cell(&gens)?;
    println!("cell m = {:?}", cell.m());
    let result = canonicalize_traced(&gens, &cell, |raw, step| {
        match step {
            None => println!("syzygy matrix before reduction:"),
            Some((i, j)) => println!("after Red({i},{j}):"),
        }
        for row in raw.matrix() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  [{}]", cells.join(", "));
        }
    })?;
    println!("canonical A:");
    for row in result.matrix.to_strings() {
        println!("  {row:?}");
    }
    for (i, f) in psi(&result.matrix)?.f.iter().enumerate() {
        println!("f'{i} = {f}");
    }
    Ok(())
}
