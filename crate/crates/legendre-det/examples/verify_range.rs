//! Scan the full claim catalogue over a small prime range and print the
//! per-claim tallies. Any failing record would be printed in full.

use legendre_det::scan::format_human;
use legendre_det::{run_scan_with, ScanConfig, Status};

fn main() {
    let mut config = ScanConfig::new(3, 61);
    config.workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);

    let mut failures = Vec::new();
    let summary = run_scan_with(&config, |rec| {
        if rec.status == Status::Fail {
            failures.push(format_human(rec));
        }
    })
    .unwrap();

    print!("{}", summary.human());
    if failures.is_empty() {
        println!("no counterexamples in [3, 61]");
    } else {
        for line in failures {
            println!("{line}");
        }
    }
}
