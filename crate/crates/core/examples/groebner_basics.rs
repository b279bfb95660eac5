//! Polynomial parsing, division and Buchberger's algorithm under the
//! degree reverse-lexicographic order, over ℚ and over a prime field.

use groebner_cells::groebner::{buchberger, divide};
use groebner_cells::{BiPoly, Field};

fn main() -> groebner_cells::Result<()> {
    for field in [Field::Rationals, Field::prime(7)?] {
        let f = BiPoly::parse(field, "x^2*y^2 - 1/2*y^3 + x")?;
        let g = BiPoly::parse(field, "x*y^2 - x")?;
        println!("over {field}: f = {f}, g = {g}");
        let division = divide(&f, std::slice::from_ref(&g));
        println!("  f = ({}) * g + ({})", division.quotients[0], division.remainder);
        let gb = buchberger(&[f, g])?;
        for p in gb.elements() {
            println!("  gb: {p}");
        }
    }
    Ok(())
}
