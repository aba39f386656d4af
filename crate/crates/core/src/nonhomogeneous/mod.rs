//! Nonhomogeneous presentations `T(E)/(r − φ(r))`.

pub mod abc;
pub mod ce;
pub mod curved;
pub mod lie;
pub mod pbw;
pub mod presentation;
pub mod representation;

pub use abc::{check_conditions_abc, phi_commutator, v_space, AbcFailure, AbcReport, Condition};
pub use ce::{ce_complex, CeComplex};
pub use curved::{check_curved, from_curved_dga, to_curved_dga, CurvedChecks, CurvedDga, CurvedDualReport, CurvedFailure};
pub use lie::{lie_prealgebra_certify, LiePrealgebra};
pub use pbw::{pbw_check, FiltrationReport};
pub use presentation::NonhomogeneousPresentation;
pub use representation::Representation;
