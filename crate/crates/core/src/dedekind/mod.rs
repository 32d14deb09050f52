//! Generalized Dedekind sums and Lang's partial zeta evaluation.

mod lang;
mod sums;

pub use lang::{kim_matrix, lang_partial_zeta, TransformMatrix};
pub use sums::{
    apostol_s3_raw, dedekind_sum_closed, dedekind_sum_closed_row, dedekind_sum_raw, ClosedFormRow,
    DedekindSumQuery, SumIndex,
};
