//! Dimensions of all lex-segment cells of a given colength, with the two
//! closed forms and the bounds.
//!
//! `cargo run --example dimension_survey -- 10`

use groebner_cells::cell::{dimension_compact, dimension_formula, lex_segment_cells};

fn main() -> groebner_cells::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("{:<28} {:>4} {:>8} {:>8} {:>10}", "m", "N", "closed", "compact", "bounds");
    for cell in lex_segment_cells(n).into_iter().filter(|c| c.colength() == n) {
        let h = cell.hilbert_function();
        let (lo, hi) = cell.dimension_bounds()?;
        println!(
            "{:<28} {:>4} {:>8} {:>8} {:>10}",
            format!("{:?}", cell.m()),
            cell.dimension()?,
            dimension_formula(n, &h),
            dimension_compact(&h),
            format!("{lo}..={hi}")
        );
    }
    Ok(())
}
