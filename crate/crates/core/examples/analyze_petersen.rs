//! Full connectivity report for the Petersen graph.
//!
//! cargo run --example analyze_petersen

use lplab::cli::report_table;
use lplab::connectivity::{full_report, Limits};
use lplab::constructors::petersen_graph;

fn main() {
    let g = petersen_graph();
    let report = full_report(&g, &Limits::default());
    print!("{}", report_table("petersen", &report));
    assert!(report.consistency_errors(&g).is_empty());
}
