//! Instance files, topology ingestion and result output.

mod graphml;
mod result;
mod text;

pub use graphml::parse_graphml_topology;
pub use result::{
    emit_result, parse_result, render_text, CostDoc, ResultDoc, SegmentDoc, UsageDoc, WarningDoc,
};
pub use text::{parse_instance, serialize_instance};
