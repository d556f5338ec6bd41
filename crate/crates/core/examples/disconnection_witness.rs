//! An imprimitive block: the orbit graph of an antipodal pair splits.

use blockprim::amalgam::build_ball;
use blockprim::corpus;
use blockprim::verdict::orbital_disconnection_witness;

fn main() {
    let ball = build_ball(&corpus::cycle(4), 2, 2).unwrap();
    for gamma in 1..4 {
        let r = orbital_disconnection_witness(&ball, 0, gamma).unwrap();
        println!(
            "pair (0, {gamma}): {} orbit edges, {} components, block components {:?}, witness {}",
            r.edges.len(),
            r.components.len(),
            r.block_components(&ball),
            r.is_witness()
        );
    }
}
