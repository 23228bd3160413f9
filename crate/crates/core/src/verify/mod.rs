//! Congruence theorems, bias-conjecture scans and series-versus-enumeration
//! cross checks. Every check returns a [`VerdictReport`].
//!
//! Theorem checks and cross checks must pass over any range. Conjecture scans
//! pass when no counterexample lies above the conjectured threshold; the
//! counterexamples at or below it are reported as witnesses.

mod crosscheck;
mod identities;
mod report;
mod scans;

pub use crosscheck::{
    crosscheck_closed_forms, crosscheck_missing_tables, crosscheck_nu_identity, crosscheck_one_double,
    crosscheck_trivariate,
};
pub use identities::{check_euler, check_jtpi, check_preliminaries, check_q_binomial};
pub use report::{Failure, VerdictReport, Witness};
pub use scans::{
    check_congruence_mod3, check_congruence_mod4, parity_split, scan_bias, scan_bound_vs_distinct, ParitySplit,
    BIAS_THRESHOLD, BOUND_THRESHOLD, OVER_BIAS_THRESHOLD,
};

/// Whether `n` is a perfect square, and of which parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareClass {
    NotSquare,
    OddSquare,
    EvenSquare,
}

pub fn square_class(n: usize) -> SquareClass {
    let r = n.isqrt();
    if r * r != n {
        SquareClass::NotSquare
    } else if r % 2 == 1 {
        SquareClass::OddSquare
    } else {
        SquareClass::EvenSquare
    }
}
