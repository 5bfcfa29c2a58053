//! Exact link-homotopy classification of 4-component links given as
//! 12-tuples of clasper counts `(c1..c6 | f1..f4 | t1, t2)`.
//!
//! * [`moves`]: the generators `ψij` acting on tuples, words, commutators and
//!   the conversion to and from Levine's parameters.
//! * [`intlin`]: Smith and Hermite normal forms and integer linear systems.
//! * [`decide`]: the orbit decision with verified certificates, and a
//!   canonical form.
//! * [`invariants`]: Milnor invariants, sublinks and complete invariants of
//!   special families.
//! * [`oracle`]: random instances and brute-force search for cross-checking.
//! * [`cli`]: the JSON command line behind the `linkhom` binary.
//!
//! ```
//! use linkhom::{decide_equiv, ClasperForm, FailureStage};
//!
//! let a = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [0, 0, 0, 0], [0, 0]);
//! let b = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [1, 1]);
//! assert_eq!(decide_equiv(&a, &b).stage(), Some(FailureStage::TUnreachable));
//! ```

pub mod arith;
pub mod cli;
pub mod decide;
pub mod error;
pub mod form;
pub mod intlin;
pub mod invariants;
pub mod moves;
pub mod oracle;

pub use arith::{gcd_star, gcd_sub, reduce_residue, Int, PositiveOrInfinite, Residue};
pub use decide::{canonical_form, decide_equiv, CanonicalForm, FailureStage, Verdict};
pub use error::{Error, Result};
pub use form::{ClasperForm, LevineForm};
pub use invariants::{milnor_profile, Family, MilnorProfile};
pub use moves::{apply_word, Generator, MoveWord};
