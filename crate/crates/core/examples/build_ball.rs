//! Finite balls of the amalgam and the addresses of their vertices.

use blockprim::amalgam::{ball_vertex_count, build_ball};
use blockprim::corpus;

fn main() {
    let block = corpus::directed_cycle(3);
    for m in [2, 3] {
        for k in 0..4 {
            let ball = build_ball(&block, m, k).unwrap();
            println!(
                "m={m} radius {k}: {} vertices (closed form {}), {} blocks, {} interior",
                ball.vertex_count(),
                ball_vertex_count(3, m, k).unwrap(),
                ball.blocks().len(),
                ball.interior_count()
            );
        }
    }

    let ball = build_ball(&block, 2, 2).unwrap();
    for v in [0, 3, 4, 9, 20] {
        let blocks: Vec<String> = ball
            .blocks_at(v)
            .iter()
            .map(|&b| ball.block(b).address.to_string())
            .collect();
        println!(
            "vertex {v}: address {}, blocks {}",
            ball.address(v),
            blocks.join(", ")
        );
    }
}
