//! Arithmetic in `Q(√d)`, Richaud-Degert fields, units and split-prime ideals.

mod element;
mod field;
mod ideal;
mod unit;

pub use element::QuadElement;
pub use field::{
    classify_rd, discriminant, field_radicand, fundamental_unit_closed, NarrowCase, RdField, RdKind,
};
pub use ideal::{ideal_over_2, ideal_over_p, IdealData, Sign};
pub use unit::{cf_period_length, fundamental_unit_cf, unit_norm_cf};
