//! The full acceptance suite, one line per criterion.

use std::io::Write;

use blockprim::selftest;

#[test]
fn acceptance_criteria() {
    // written to the raw handle so the lines survive libtest's output capture
    let mut err = std::io::stderr().lock();
    let results = selftest::run_all();
    for r in &results {
        writeln!(err, "{r}").unwrap();
    }
    assert_eq!(results.len(), selftest::criterion_count());
    let failed: Vec<usize> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
