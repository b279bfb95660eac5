pub mod betti;
pub mod canonical;
pub mod cell;
pub mod cli;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilburch;
pub mod poly;
pub mod projective;

pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use poly::{BiPoly, Monomial, Poly, TriPoly, UniPoly};
