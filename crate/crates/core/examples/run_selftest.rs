//! Runs the acceptance suite and prints one line per criterion.

fn main() {
    let results = blockprim::selftest::run_all();
    for r in &results {
        println!("{r}");
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    println!("{passed} of {} passed", results.len());
}
