//! Integer data attached to a monomial ideal: Hilbert function, degree and
//! bound matrices, cell dimension.
//!
//! `cargo run --example cell_data -- 0,5,7,11`

use groebner_cells::cell::parse_m_vector;

fn main() -> groebner_cells::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0,5,7,11".into());
    let cell = parse_m_vector(&arg)?;
    println!("I0 = ({})", cell.generators().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    println!("d = {:?}, colength n = {}", cell.d(), cell.colength());
    println!("h = {:?}", cell.hilbert_function());
    println!("U:");
    for row in cell.degree_matrix() {
        println!("  {row:?}");
    }
    println!("b:");
    for row in cell.bound_matrix() {
        println!("  {row:?}");
    }
    let (big_i, big_j) = cell.special_indices();
    println!("special indices I = {big_i:?}, J = {big_j:?}");
    if cell.is_lex_segment() {
        let (lo, hi) = cell.dimension_bounds()?;
        println!("dim V(I0) = {} (bounds {lo}..={hi})", cell.dimension()?);
        println!("generator degrees {:?}", cell.lex_betti()?);
    } else {
        println!("not a lex-segment ideal; bound-matrix parameter count {}", cell.parameter_count());
    }
    Ok(())
}
