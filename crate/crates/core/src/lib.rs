//! Graded ("braided") dimensions of line-bundle cohomology on projective
//! space with exponents in `Z[1/p]`, computed with exact arithmetic.
//!
//! Closed forms live in [`braided`]; [`enumeration`] and [`cech`] recompute
//! the same numbers by brute force. [`intersect`] and [`geometry`] build the
//! plane-curve applications on top.

pub mod braided;
pub mod cech;
pub mod enumeration;
pub mod error;
pub mod exponents;
pub mod fracpoly;
pub mod geometry;
pub mod intersect;
pub mod intpoly;
pub mod linalg;

pub use braided::{BraidedDim, ExtInt, Generator, LineBundle};
pub use error::{Error, ParseError, Result};
pub use exponents::PAdicFrac;
pub use fracpoly::{FracMonomial, FracPoly};
pub use intpoly::IntPoly;
