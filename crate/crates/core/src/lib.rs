//! Polynomial SL(2)⁴ invariants and entanglement monotones of four-qubit
//! pure states.
//!
//! Every quantity is available by two independent routes: closed-form
//! determinant formulas ([`invariants`], [`monotones`]) and Levi-Civita
//! contractions over copies of the state tensor ([`contraction`]). The
//! [`verify`] module runs seeded ensembles that pit the routes against each
//! other and against the known identities between the invariants.
//!
//! ```
//! use fourqubit::{monotones::monotone_set, StandardState, FourQubitState};
//!
//! let ghz = FourQubitState::standard(StandardState::Phi1, &[]).unwrap();
//! let m = monotone_set(&ghz);
//! assert!((m.f2prime - 3.0).abs() < 1e-12);
//! ```

pub mod contraction;
mod error;
pub mod invariants;
pub mod monotones;
pub mod report;
pub mod state;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use state::{FourQubitState, LocalOperatorQuartet, OperatorKind, QubitPermutation, StandardState};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/contractions.md")]
    mod contractions {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/monotones.md")]
    mod monotones {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
