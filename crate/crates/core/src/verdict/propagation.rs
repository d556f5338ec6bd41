use crate::amalgam::AmalgamBall;
use crate::primtest::{classify_block, DisjointSets, Partition};

use super::{symmetric_pool, VerdictError};

use crate::amalgam::BallAutomorphism;

/// Saturates the relation `seed.0 ~ seed.1` on the ball and returns the
/// induced partition of the interior.
///
/// Two rules run to a fixpoint: pool elements carry related pairs to related
/// pairs wherever both images are in the ball, and a class meeting a block
/// twice absorbs the whole block (the induced block group is primitive).
pub fn congruence_propagation(
    ball: &AmalgamBall,
    seed: (usize, usize),
) -> Result<Partition, VerdictError> {
    Propagator::new(ball)?.run(seed)
}

/// The generator pool of one ball, shared across seeds.
#[derive(Debug, Clone)]
pub struct Propagator<'a> {
    ball: &'a AmalgamBall,
    pool: Vec<BallAutomorphism>,
}

impl<'a> Propagator<'a> {
    pub fn new(ball: &'a AmalgamBall) -> Result<Self, VerdictError> {
        let report = classify_block(ball.block_graph())?;
        if !report.primitive || report.regular {
            return Err(VerdictError::PreconditionFailed(
                "block group must be primitive and not regular".into(),
            ));
        }
        Ok(Propagator {
            ball,
            pool: symmetric_pool(ball)?,
        })
    }

    pub fn run(&self, seed: (usize, usize)) -> Result<Partition, VerdictError> {
        let ball = self.ball;
        for v in [seed.0, seed.1] {
            if v >= ball.vertex_count() || !ball.is_interior(v) {
                return Err(VerdictError::VertexNotInterior(v));
            }
        }
        if seed.0 == seed.1 {
            return Err(VerdictError::PreconditionFailed(
                "seed vertices must differ".into(),
            ));
        }
        let n = ball.vertex_count();
        let interior = ball.interior_count();
        let mut sets = DisjointSets::new(n);
        sets.union(seed.0, seed.1);
        // the interior is a prefix, so it is one class exactly when every
        // interior vertex has the root of vertex 0
        let collapsed = |sets: &mut DisjointSets| {
            let r = sets.find(0);
            (1..interior).all(|v| sets.find(v) == r)
        };
        let mut first = vec![usize::MAX; n];
        'fixpoint: loop {
            let mut changed = false;
            for g in &self.pool {
                // the first image seen for each class
                first.fill(usize::MAX);
                let mut moved = false;
                for v in 0..n {
                    if let Some(x) = g.image(v) {
                        let r = sets.find(v);
                        if first[r] == usize::MAX {
                            first[r] = x;
                        } else {
                            moved |= sets.union(first[r], x);
                        }
                    }
                }
                if moved {
                    changed = true;
                    if collapsed(&mut sets) {
                        break 'fixpoint;
                    }
                }
            }
            for b in ball.blocks() {
                let mut roots: Vec<usize> = b.vertices.iter().map(|&v| sets.find(v)).collect();
                roots.sort_unstable();
                if roots.windows(2).any(|w| w[0] == w[1]) {
                    for &v in &b.vertices[1..] {
                        changed |= sets.union(b.vertices[0], v);
                    }
                }
            }
            if !changed || collapsed(&mut sets) {
                break;
            }
        }
        let labels: Vec<usize> = ball.interior().map(|v| sets.find(v)).collect();
        Ok(Partition::from_labels(&labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::build_ball;
    use crate::digraph::DiGraph;

    fn k3() -> DiGraph {
        DiGraph::undirected(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_collapses() {
        let ball = build_ball(&k3(), 2, 3).unwrap();
        assert!(congruence_propagation(&ball, (0, 1))
            .unwrap()
            .is_universal());
        let deep = (0..ball.interior_count())
            .find(|&v| ball.generation(v) == 2)
            .unwrap();
        assert!(congruence_propagation(&ball, (0, deep))
            .unwrap()
            .is_universal());
    }

    #[test]
    fn regular_block_rejected() {
        let dc3 = DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let ball = build_ball(&dc3, 2, 3).unwrap();
        assert!(matches!(
            congruence_propagation(&ball, (0, 1)),
            Err(VerdictError::PreconditionFailed(_))
        ));
    }
}
