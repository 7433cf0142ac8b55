//! Exact computations with level-zero and level-one quantum toroidal actions
//! on wedge spaces, Macdonald polynomials and q-Fock space.

pub mod decomp;
pub mod error;
pub mod exactring;
pub mod field;
pub mod heckepoly;
pub mod linalg;
pub mod qaffine;
pub mod rmodule;
pub mod tableaux;
pub mod wedge;

pub use error::{Error, Result};
pub use exactring::{Poly, RingElem, UPoly};
pub use field::Field;

/// Scalar of all exact computations: rational functions in `q` and `p`.
pub type Scalar = RingElem;
