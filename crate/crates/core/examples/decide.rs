//! The verdict for every bundled block.

use blockprim::corpus;
use blockprim::verdict::decide;

fn main() {
    for (name, g) in corpus::blocks() {
        match decide(&g, 2) {
            Ok(d) => {
                let tags: Vec<&str> = d.reasons.iter().map(|r| r.tag()).collect();
                println!("{name:<9} {:?} {}", d.verdict, tags.join(" "));
            }
            Err(e) => println!("{name:<9} rejected: {e}"),
        }
    }
    println!();
    print!("{}", decide(&corpus::paley_tournament_7(), 3).unwrap());
}
