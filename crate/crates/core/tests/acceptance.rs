//! The acceptance suite: runs every criterion and prints one line per
//! check. All comparisons are exact.

use matcat_core::selftest::{run_all, CriterionResult};

fn report(results: &[CriterionResult]) -> bool {
    let mut all = true;
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{status}] {} - {}", r.number, r.name, r.detail);
        all &= r.passed;
    }
    all
}

#[test]
fn acceptance_suite() {
    let results = run_all();
    assert_eq!(results.len(), 12);
    let ok = report(&results);
    assert!(ok, "acceptance criteria failed");
}
