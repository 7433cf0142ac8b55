//! Exact arithmetic: integer polynomials in `q` and `(q, p)` and the field
//! `Q(q, p)` of their fractions.

pub mod int;
mod parse;
pub mod poly;
pub mod ratfunc;

pub use int::Int;
pub use poly::{Poly, UPoly};
pub use ratfunc::RingElem;
