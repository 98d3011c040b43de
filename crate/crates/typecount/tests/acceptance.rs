//! The ten acceptance properties, one line each.

use std::io::Write;

use typecount::suites::{run_suite, SUITES};
use typecount_core::DEFAULT_BUDGET;

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (i, name) in SUITES.iter().enumerate() {
        let o = run_suite(name, DEFAULT_BUDGET).expect("suite runs");
        // written past the test harness capture so the lines always show
        writeln!(
            std::io::stderr().lock(),
            "criterion {:>2} {:<22} {}  {}",
            i + 1,
            o.name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        )
        .unwrap();
        if !o.pass {
            failed.push(o.name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
