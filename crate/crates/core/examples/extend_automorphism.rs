//! Extending a rotation of the root block outward, one generation at a time.

use blockprim::amalgam::{build_ball, extend_automorphism, BallAutomorphism, Provenance};
use blockprim::corpus;

fn main() {
    let block = corpus::directed_cycle(3);
    let balls: Vec<_> = (0..=3).map(|k| build_ball(&block, 2, k).unwrap()).collect();
    let mut sigma =
        BallAutomorphism::from_images(vec![Some(1), Some(2), Some(0)], Provenance::BlockLift)
            .unwrap();
    for k in 1..balls.len() {
        sigma = extend_automorphism(&balls[k - 1], &sigma, &balls[k]).unwrap();
        println!(
            "radius {k}: total {}, edge preserving {}, moves {} of {} vertices",
            sigma.is_total(),
            sigma.is_edge_preserving(balls[k].graph()),
            (0..sigma.degree()).filter(|&v| !sigma.fixes(v)).count(),
            sigma.degree()
        );
    }
    let blocks: Vec<usize> = (0..4)
        .map(|b| sigma.block_image(&balls[3], b).unwrap())
        .collect();
    println!("blocks 0..4 go to {blocks:?}");
}
