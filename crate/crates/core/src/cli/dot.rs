//! Graphviz output. Boundary vertices are dashed; vertex classes are filled
//! from the fixed palette below, cycling past eight classes.

use std::fmt::Write as _;

use crate::amalgam::AmalgamBall;
use crate::verdict::WitnessReport;

/// ColorBrewer Dark2.
pub const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

fn render(
    ball: &AmalgamBall,
    name: &str,
    edges: impl Iterator<Item = (usize, usize)>,
    class_of: Option<&[usize]>,
) -> String {
    let mut out = format!("digraph {name} {{\n  node [shape=circle];\n");
    for v in 0..ball.vertex_count() {
        let mut attrs = vec![format!("label=\"{v}\\n{}\"", ball.address(v))];
        if !ball.is_interior(v) {
            attrs.push("style=dashed".into());
        }
        if let Some(c) = class_of {
            let style = if ball.is_interior(v) {
                "filled"
            } else {
                "\"filled,dashed\""
            };
            attrs.retain(|a| !a.starts_with("style="));
            attrs.push(format!("style={style}"));
            attrs.push(format!("fillcolor=\"{}\"", PALETTE[c[v] % PALETTE.len()]));
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).expect("string write");
    }
    for (u, v) in edges {
        writeln!(out, "  {u} -> {v};").expect("string write");
    }
    out.push_str("}\n");
    out
}

pub fn ball_to_dot(ball: &AmalgamBall) -> String {
    render(ball, "ball", ball.graph().edges(), None)
}

/// The orbit graph of a disconnection witness, coloured by component.
pub fn orbit_to_dot(ball: &AmalgamBall, report: &WitnessReport) -> String {
    render(
        ball,
        "orbit",
        report.edges.iter().copied(),
        Some(&report.component_of),
    )
}

/// The ball coloured by a vertex partition, such as a propagation result.
pub fn classes_to_dot(ball: &AmalgamBall, class_of: &[usize]) -> String {
    render(ball, "classes", ball.graph().edges(), Some(class_of))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::build_ball;
    use crate::corpus;

    #[test]
    fn boundary_is_dashed() {
        let ball = build_ball(&corpus::directed_cycle(3), 2, 1).unwrap();
        let dot = ball_to_dot(&ball);
        assert_eq!(dot.matches("style=dashed").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 12);
        assert!(dot.contains("  0 [label=\"0\\n0:0\"];"));
    }
}
