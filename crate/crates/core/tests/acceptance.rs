//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the per-instance details.

use fusionring::selftest::{SelftestConfig, Suite, CRITERIA};

#[test]
fn acceptance() {
    let mut suite = Suite::new(SelftestConfig::default());
    let mut failed = Vec::new();
    for id in CRITERIA {
        let report = suite.run(id);
        println!("{report}");
        for line in &report.detail {
            println!("    {line}");
        }
        if !report.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
