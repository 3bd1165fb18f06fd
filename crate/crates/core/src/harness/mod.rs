//! Batch experiments, descriptor parsing and bound tables behind the command line.

mod bounds;
mod descriptor;
mod sweep;

pub use bounds::{report_bounds, BoundsReport, BoundsRow};
pub use descriptor::{derive_seed, parse_family, parse_property, parse_strategy, splitmix64, StrategySpec};
pub use sweep::{bounds_for_property, rows_to_csv, run_sweep, summarize, SweepConfig, SweepRow, SweepSummary, CSV_HEADER};
