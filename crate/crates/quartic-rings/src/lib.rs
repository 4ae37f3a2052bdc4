//! Exact arithmetic for binary quartic forms, quartic rings, and monogenic
//! cubic resolvents.
//!
//! The library implements, over the integers and with no rounding anywhere:
//!
//! * binary quartic/cubic forms and ternary quadratic forms as integer
//!   coefficient vectors, with the `GL2(Z)` and `GL3(Z)` actions, the
//!   invariants `I`, `J`, and discriminants ([`forms`]);
//! * based rings of rank 3 and 4 as integer structure-constant tables,
//!   built from forms, with trace-form discriminants, associativity
//!   verification, and the correspondence between rank-3 based rings and
//!   binary cubic forms in both directions ([`rings`]);
//! * the map `psi` from a binary quartic form to a pair of ternary
//!   quadratic forms `(A0, B_f)`, its inverse `pullback`, the rational
//!   variant `psi_prime`, the homomorphism `rho : GL2(Z) -> SL3(Z)`
//!   stabilizing `A0`, reduction of determinant `-1/4` forms to `A0`, and
//!   assembly plus verification of full resolvent data ([`resolvent`]);
//! * line-oriented serialization of every value ([`serial`]), exhaustive
//!   enumeration of coefficient boxes ([`enumerate`]), verification suites
//!   with deterministic sharding ([`suites`]), and machine-checkable orbit
//!   certificates ([`witness`]).
//!
//! Everything is a plain immutable value; all operations are pure and safe
//! to call concurrently.

pub mod enumerate;
pub mod exact;
pub mod forms;
pub mod report;
pub mod resolvent;
pub mod rings;
pub mod serial;
pub mod suites;
pub mod witness;
pub mod words;

mod error;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
