//! Line-oriented text formats for presentations, potentials and representations.
//!
//! Statements are separated by newlines or `;`, and `#` starts a comment. Polynomials use
//! explicit `*`; `^` expands powers; `/` divides by a nonzero scalar.

mod lexer;
mod poly;
pub mod potential;
pub mod presentation;
pub mod representation;

pub use poly::Poly;
pub use potential::{parse_potential, PotentialDocument};
pub use presentation::{parse_presentation, PresentationDocument};
pub use representation::{parse_representation, RepresentationDocument};

use num_rational::BigRational;
use num_traits::One;

/// Renders a rational as an integer or `a/b`.
pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
