//! A primitive, non-regular block: any related pair forces every interior
//! vertex into one class.

use blockprim::amalgam::build_ball;
use blockprim::corpus;
use blockprim::verdict::Propagator;

fn main() {
    let ball = build_ball(&corpus::triangle(), 2, 3).unwrap();
    let propagator = Propagator::new(&ball).unwrap();
    let far = ball.interior_count() - 1;
    for seed in [(0, 1), (1, 2), (0, 3), (0, far)] {
        let p = propagator.run(seed).unwrap();
        println!(
            "seed {seed:?}: {} classes over {} interior vertices",
            p.class_count(),
            p.degree()
        );
    }
}
