//! Exact special values of Dedekind zeta functions for Richaud-Degert real
//! quadratic fields, computed two independent ways, together with a
//! form-cycle class number oracle and the class-number-2/3 criteria built
//! on top of them.
//!
//! Everything in the mathematical core is exact: integers are `u64`/`i64`
//! where the ranges allow and [`num_bigint::BigInt`] elsewhere, and every
//! zeta value is a [`Rational`].

pub mod arith;
pub mod dedekind;
pub mod error;
pub mod forms;
pub mod harness;
pub mod quad;
pub mod zeta;

pub use arith::Rational;
pub use error::{Error, Result};
