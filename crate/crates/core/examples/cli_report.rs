//! Drive the command layer in-process and render the report as CSV.

use clap::Parser;
use hopf_core::cli::{execute, render, Cli, RunConfig};

fn main() {
    let cli = Cli::parse_from([
        "hopf",
        "scan",
        "--type",
        "E",
        "--r-range",
        "95..105",
        "--format",
        "csv",
    ]);
    let config = RunConfig::from_cli(cli).expect("valid flags");
    let report = execute(&config).expect("scan runs");
    print!("{}", render(&report).expect("csv"));
    for c in &report.checks {
        println!(
            "# {} {}: {}",
            c.tag,
            if c.passed { "ok" } else { "FAILED" },
            c.detail
        );
    }
}
