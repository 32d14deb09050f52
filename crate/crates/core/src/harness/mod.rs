//! Range scans over the criterion families, record output, and the
//! fixture checks built on them.

mod emit;
mod scan;
mod shape;
mod verify;

pub use emit::{
    emit, read_csv, read_jsonl, write_csv, write_jsonl, write_table, RecordRow, CSV_HEADER,
};
pub use scan::{
    even_plus_one_with_h2, rd_fields_up_to, scan, OutputFormat, Parity, ScanConfig, ScanFailure,
    ScanOutcome, ScanRecord, Verdict,
};
pub use shape::{
    check_class_one_shape, shape_entry, shape_status, ShapeEntry, ShapeReport, ShapeStatus,
};
pub use verify::{
    d257_check, even_plus_one_check, exception_check, t34_gate_check, t35_fixture_check,
    t42_fixture_check, t43_fixture_check, verify_tables, FixtureCheck, VerifyReport,
};
