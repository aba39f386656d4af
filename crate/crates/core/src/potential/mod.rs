//! Twisted potentials and the algebras they define.

pub mod algebra;
pub mod form;
pub mod frobenius;

pub use algebra::{
    contraction_span, eqreg_check, extract_potential, potential_algebra, w_contractions, w_length, w_spaces,
    EqRegReport, WContractions, WSpaces,
};
pub use form::{
    check_one_site, check_preregular, is_q_invariant, is_twisted_cyclic, pi_q, solve_twist, Potential,
    PreregularityReport, Twist,
};
pub use frobenius::{automorphisms, frobenius_quotient, hochschild_cycle_check, Automorphisms, FrobeniusQuotient};
