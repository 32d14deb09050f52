//! Zagier's divisor-sum formula, closed-form partial zeta values and the
//! criteria assembled from them.

mod closed;
mod criterion;
mod zagier;

pub use closed::{nonprincipal_zeta_over2, principal_zeta_closed, split_prime_zeta};
pub use criterion::{
    criterion_holds, criterion_holds_with, criterion_rhs, CriterionCheck, CriterionFamily,
    CriterionTag,
};
pub use zagier::{zagier_sum, zagier_sum_with, zagier_zeta};
