//! N-homogeneous algebras and their Koszul duality.

pub mod algebra;
pub mod complex;
pub mod koszul;
pub mod presentation;
pub mod resolution;
pub mod yoneda;

pub use algebra::{degree_component, dual_components, GradedAlgebra, GradedComponent};
pub use complex::{dualize, nu, Direction, FreeComplex, HomologyReport, Side, Slot};
pub use koszul::{gorenstein_check, is_koszul, GorensteinVerdict, KoszulVerdict, Workspace};
pub use presentation::HomogeneousPresentation;
pub use resolution::{minimal_resolution, BettiData};
pub use yoneda::{graded_frobenius_test, FrobeniusVerdict, YonedaAlgebra, YonedaElement};
