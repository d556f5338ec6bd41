//! Reading and writing `.blk` files, and exporting a ball to Graphviz.

use blockprim::amalgam::build_ball;
use blockprim::cli::{dot, parse_block_file, serialize};

fn main() {
    let text = "# undirected triangle\nvertices 3\nundirected\nedge 0 1\nedge 1 2\nedge 0 2\n";
    let g = parse_block_file(text).unwrap();
    println!(
        "{} vertices, {} ordered edges",
        g.vertex_count(),
        g.edge_count()
    );
    print!("canonical form:\n{}", serialize(&g));

    match parse_block_file("vertices 2\nedge 0 0\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let ball = build_ball(&g, 2, 1).unwrap();
    print!("{}", dot::ball_to_dot(&ball));
}
