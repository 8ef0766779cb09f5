//! Front end for `cohom-core`: the input schema, per-entry reports and
//! their renderings.

pub mod input;
pub mod render;
pub mod report;

pub use input::{parse_input, Entry, InputFile, SCHEMA};
pub use render::{parse_results, ParsedResult, Select};
pub use report::{parse_bounds, run, sweep, Report};
