use std::collections::VecDeque;

use crate::digraph::DiGraph;
use crate::perm::{Permutation, DEFAULT_ELEMENT_CAP};

use super::{tree_path, Amalgam, AmalgamBall, AmalgamError, BlockAddress, Node, VertexAddress};

/// An automorphism of the infinite amalgam.
///
/// It is pinned down at one anchor vertex: where the anchor goes and how
/// each of its `m` blocks maps, with a label automorphism per block. Away
/// from the anchor it extends canonically: at a vertex `u` entered through
/// block `B`, the other blocks of `u` go to the other blocks of the image
/// vertex in canonical order, each with the least label automorphism that
/// keeps `u` aligned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamAutomorphism {
    anchor: VertexAddress,
    image: VertexAddress,
    /// Image block and label map of each block at the anchor, canonical order.
    blocks: Vec<(BlockAddress, Permutation)>,
}

impl AmalgamAutomorphism {
    pub fn anchor(&self) -> &VertexAddress {
        &self.anchor
    }

    pub fn anchor_image(&self) -> &VertexAddress {
        &self.image
    }

    pub fn anchor_blocks(&self) -> &[(BlockAddress, Permutation)] {
        &self.blocks
    }
}

impl Amalgam {
    pub fn identity_rule(&self) -> AmalgamAutomorphism {
        let anchor = VertexAddress::root(0);
        let id = Permutation::identity(self.block_order());
        AmalgamAutomorphism {
            blocks: self
                .blocks_at(&anchor)
                .into_iter()
                .map(|b| (b, id.clone()))
                .collect(),
            image: anchor.clone(),
            anchor,
        }
    }

    /// Rule sending `anchor` to `image`, block `i` at the anchor to block
    /// `targets[i]` at the image, with label map `labels[i]`.
    pub fn vertex_rule(
        &self,
        anchor: VertexAddress,
        image: VertexAddress,
        targets: &[usize],
        labels: Vec<Permutation>,
    ) -> Result<AmalgamAutomorphism, AmalgamError> {
        let m = self.multiplicity();
        if !self.is_valid_address(&anchor) || !self.is_valid_address(&image) {
            return Err(AmalgamError::InvalidRule("address out of range".into()));
        }
        let mut seen = vec![false; m];
        if targets.len() != m || labels.len() != m {
            return Err(AmalgamError::InvalidRule(format!("need {m} block images")));
        }
        for &t in targets {
            if t >= m || std::mem::replace(&mut seen[t], true) {
                return Err(AmalgamError::InvalidRule(
                    "block targets are not a permutation".into(),
                ));
            }
        }
        let src = self.blocks_at(&anchor);
        let dst = self.blocks_at(&image);
        let mut blocks = Vec::with_capacity(m);
        for (i, pi) in labels.into_iter().enumerate() {
            if pi.degree() != self.block_order() || !self.block().is_automorphism(&pi) {
                return Err(AmalgamError::InvalidRule(format!(
                    "label map {pi} is not a block automorphism"
                )));
            }
            let b = dst[targets[i]].clone();
            let from = self.label_in(&anchor, &src[i]).expect("own block");
            let to = self.label_in(&image, &b).expect("own block");
            if pi.image(from) != to {
                return Err(AmalgamError::InvalidRule(format!(
                    "label map {pi} does not align the anchor"
                )));
            }
            blocks.push((b, pi));
        }
        Ok(AmalgamAutomorphism {
            anchor,
            image,
            blocks,
        })
    }

    /// Rule mapping block `src` onto `dst` with label map `pi`.
    pub fn block_rule(
        &self,
        src: &BlockAddress,
        dst: &BlockAddress,
        pi: &Permutation,
    ) -> Result<AmalgamAutomorphism, AmalgamError> {
        if pi.degree() != self.block_order() || !self.block().is_automorphism(pi) {
            return Err(AmalgamError::InvalidRule(format!(
                "label map {pi} is not a block automorphism"
            )));
        }
        let anchor = src.vertex(0);
        let image = dst.vertex(pi.image(0));
        let (mut targets, mut labels) = self.canonical_matching(&anchor, src, &image, dst);
        // put the block itself first
        targets.insert(
            position(&self.blocks_at(&anchor), src),
            position(&self.blocks_at(&image), dst),
        );
        labels.insert(position(&self.blocks_at(&anchor), src), pi.clone());
        self.vertex_rule(anchor, image, &targets, labels)
    }

    /// Swap blocks `i` and `j` at `v`, leaving the others in place.
    pub fn slot_swap(
        &self,
        v: &VertexAddress,
        i: usize,
        j: usize,
    ) -> Result<AmalgamAutomorphism, AmalgamError> {
        let blocks = self.blocks_at(v);
        let m = blocks.len();
        if i >= m || j >= m || i == j {
            return Err(AmalgamError::InvalidRule(format!(
                "bad slot pair ({i}, {j})"
            )));
        }
        let mut targets: Vec<usize> = (0..m).collect();
        targets.swap(i, j);
        let labels = (0..m)
            .map(|s| {
                let from = self.label_in(v, &blocks[s]).expect("own block");
                let to = self.label_in(v, &blocks[targets[s]]).expect("own block");
                self.aligned(from, to).clone()
            })
            .collect();
        self.vertex_rule(v.clone(), v.clone(), &targets, labels)
    }

    /// Act by `pi` on block `i` at `v` (which must fix the label of `v`),
    /// identically on the other blocks at `v`.
    pub fn stabilizer_lift(
        &self,
        v: &VertexAddress,
        i: usize,
        pi: &Permutation,
    ) -> Result<AmalgamAutomorphism, AmalgamError> {
        let m = self.multiplicity();
        if i >= m {
            return Err(AmalgamError::InvalidRule(format!("slot {i} out of range")));
        }
        let mut labels = vec![Permutation::identity(self.block_order()); m];
        labels[i] = pi.clone();
        let targets: Vec<usize> = (0..m).collect();
        self.vertex_rule(v.clone(), v.clone(), &targets, labels)
    }

    /// Canonical matching of the blocks at `u` other than `bin` to those at
    /// `u2` other than `bin2`.
    fn canonical_matching(
        &self,
        u: &VertexAddress,
        bin: &BlockAddress,
        u2: &VertexAddress,
        bin2: &BlockAddress,
    ) -> (Vec<usize>, Vec<Permutation>) {
        let here: Vec<BlockAddress> = self.blocks_at(u).into_iter().filter(|b| b != bin).collect();
        let there_all = self.blocks_at(u2);
        let there: Vec<usize> = (0..there_all.len())
            .filter(|&k| there_all[k] != *bin2)
            .collect();
        let labels = here
            .iter()
            .zip(&there)
            .map(|(b, &k)| {
                let from = self.label_in(u, b).expect("own block");
                let to = self.label_in(u2, &there_all[k]).expect("own block");
                self.aligned(from, to).clone()
            })
            .collect();
        (there, labels)
    }

    /// Image of a node, with the label map when the node is a block.
    fn walk(&self, rule: &AmalgamAutomorphism, target: &Node) -> (Node, Option<Permutation>) {
        let path = tree_path(&Node::Vertex(rule.anchor.clone()), target);
        let mut u = rule.anchor.clone();
        let mut u2 = rule.image.clone();
        let mut came: Option<(BlockAddress, BlockAddress)> = None;
        let mut i = 1;
        while i < path.len() {
            let Node::Block(b) = &path[i] else {
                unreachable!("tree paths alternate")
            };
            let (b2, pi) = match &came {
                None => rule.blocks[position(&self.blocks_at(&u), b)].clone(),
                Some((bin, bin2)) => {
                    let here: Vec<BlockAddress> = self
                        .blocks_at(&u)
                        .into_iter()
                        .filter(|x| x != bin)
                        .collect();
                    let there: Vec<BlockAddress> = self
                        .blocks_at(&u2)
                        .into_iter()
                        .filter(|x| x != bin2)
                        .collect();
                    let b2 = there[position(&here, b)].clone();
                    let from = self.label_in(&u, b).expect("own block");
                    let to = self.label_in(&u2, &b2).expect("own block");
                    (b2, self.aligned(from, to).clone())
                }
            };
            if i + 1 == path.len() {
                return (Node::Block(b2), Some(pi));
            }
            let Node::Vertex(w) = &path[i + 1] else {
                unreachable!("tree paths alternate")
            };
            let w2 = b2.vertex(pi.image(self.label_in(w, b).expect("path step")));
            came = Some((b.clone(), b2));
            u = w.clone();
            u2 = w2;
            i += 2;
        }
        (Node::Vertex(u2), None)
    }

    pub fn map_vertex(&self, rule: &AmalgamAutomorphism, v: &VertexAddress) -> VertexAddress {
        match self.walk(rule, &Node::Vertex(v.clone())) {
            (Node::Vertex(w), _) => w,
            _ => unreachable!("vertices map to vertices"),
        }
    }

    /// Image block of `b` and the label map carrying `b` onto it.
    pub fn map_block(
        &self,
        rule: &AmalgamAutomorphism,
        b: &BlockAddress,
    ) -> (BlockAddress, Permutation) {
        match self.walk(rule, &Node::Block(b.clone())) {
            (Node::Block(c), Some(pi)) => (c, pi),
            _ => unreachable!("blocks map to blocks"),
        }
    }
}

fn position<T: PartialEq>(items: &[T], x: &T) -> usize {
    items.iter().position(|y| y == x).expect("item present")
}

/// How a ball automorphism was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BlockLift,
    SlotSwap,
    Extension,
    Composition,
}

/// An automorphism restricted to a ball.
///
/// Balls keep the root block at their centre, so the restriction of an
/// automorphism moving the root block sends some ball vertices outside the
/// ball. Those vertices have no image here; the map is a partial injection,
/// total exactly when the ball is mapped onto itself.
#[derive(Debug, Clone)]
pub struct BallAutomorphism {
    images: Vec<Option<usize>>,
    provenance: Provenance,
    rule: Option<AmalgamAutomorphism>,
}

impl PartialEq for BallAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for BallAutomorphism {}

impl BallAutomorphism {
    pub fn identity(vertex_count: usize) -> Self {
        BallAutomorphism {
            images: (0..vertex_count).map(Some).collect(),
            provenance: Provenance::Composition,
            rule: None,
        }
    }

    /// Wraps an explicit partial map, checking injectivity.
    pub fn from_images(
        images: Vec<Option<usize>>,
        provenance: Provenance,
    ) -> Result<Self, AmalgamError> {
        let n = images.len();
        let mut hit = vec![false; n];
        for x in images.iter().flatten() {
            if *x >= n || std::mem::replace(&mut hit[*x], true) {
                return Err(AmalgamError::InvalidAutomorphism(
                    "not an injection on the ball".into(),
                ));
            }
        }
        Ok(BallAutomorphism {
            images,
            provenance,
            rule: None,
        })
    }

    /// Restriction of `rule` to `ball`, computed vertex by vertex along tree paths.
    pub fn from_rule(
        ball: &AmalgamBall,
        rule: AmalgamAutomorphism,
        provenance: Provenance,
    ) -> Self {
        let amalgam = ball.amalgam();
        let images = (0..ball.vertex_count())
            .map(|v| ball.vertex_of(&amalgam.map_vertex(&rule, ball.address(v))))
            .collect();
        BallAutomorphism {
            images,
            provenance,
            rule: Some(rule),
        }
    }

    /// Restriction of `rule` to `ball`, computed by breadth-first transport
    /// through the ball's own block registry. Needs the anchor and its image
    /// inside the ball. Agrees with [`BallAutomorphism::from_rule`].
    pub fn from_rule_by_transport(
        ball: &AmalgamBall,
        rule: AmalgamAutomorphism,
        provenance: Provenance,
    ) -> Option<Self> {
        let amalgam = ball.amalgam();
        let v = ball.vertex_of(rule.anchor())?;
        let v2 = ball.vertex_of(rule.anchor_image())?;
        let mut images = vec![None; ball.vertex_count()];
        images[v] = Some(v2);
        let mut queue = VecDeque::new();
        for (i, &b) in ball.blocks_at(v).iter().enumerate() {
            let (target, pi) = &rule.anchor_blocks()[i];
            let Some(b2) = ball.block_of(target) else {
                continue;
            };
            for (l, &w) in ball.block(b).vertices.iter().enumerate() {
                if w != v {
                    let w2 = ball.block(b2).vertices[pi.image(l)];
                    images[w] = Some(w2);
                    queue.push_back((w, w2, b, b2));
                }
            }
        }
        while let Some((u, u2, bin, bin2)) = queue.pop_front() {
            if !ball.is_interior(u) || !ball.is_interior(u2) {
                continue;
            }
            let here: Vec<usize> = ball
                .blocks_at(u)
                .iter()
                .copied()
                .filter(|&b| b != bin)
                .collect();
            let there: Vec<usize> = ball
                .blocks_at(u2)
                .iter()
                .copied()
                .filter(|&b| b != bin2)
                .collect();
            for (&b, &b2) in here.iter().zip(&there) {
                let from = ball.label_in(u, b).expect("own block");
                let to = ball.label_in(u2, b2).expect("own block");
                let pi = amalgam.aligned(from, to);
                for (l, &w) in ball.block(b).vertices.iter().enumerate() {
                    if w != u {
                        let w2 = ball.block(b2).vertices[pi.image(l)];
                        images[w] = Some(w2);
                        queue.push_back((w, w2, b, b2));
                    }
                }
            }
        }
        Some(BallAutomorphism {
            images,
            provenance,
            rule: Some(rule),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.images.get(v).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn rule(&self) -> Option<&AmalgamAutomorphism> {
        self.rule.as_ref()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    pub fn defined_count(&self) -> usize {
        self.images.iter().flatten().count()
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.image(v) == Some(v)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, x)| *x == Some(v))
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        let images: Option<Vec<usize>> = self.images.iter().copied().collect();
        Permutation::from_images(images?).ok()
    }

    /// Apply `self`, then `other`; defined where both steps stay in the ball.
    pub fn then(&self, other: &BallAutomorphism) -> BallAutomorphism {
        BallAutomorphism {
            images: self
                .images
                .iter()
                .map(|x| x.and_then(|y| other.image(y)))
                .collect(),
            provenance: Provenance::Composition,
            rule: None,
        }
    }

    pub fn inverse(&self) -> BallAutomorphism {
        let mut images = vec![None; self.images.len()];
        for (v, x) in self.images.iter().enumerate() {
            if let Some(x) = x {
                images[*x] = Some(v);
            }
        }
        BallAutomorphism {
            images,
            provenance: self.provenance,
            rule: None,
        }
    }

    /// Adjacency is preserved and reflected between all vertices where the map is defined.
    pub fn is_edge_preserving(&self, graph: &DiGraph) -> bool {
        if self.images.len() != graph.vertex_count() {
            return false;
        }
        let inverse = self.inverse();
        graph
            .edges()
            .all(|(x, y)| match (self.image(x), self.image(y)) {
                (Some(a), Some(b)) => graph.has_edge(a, b),
                _ => true,
            })
            && graph
                .edges()
                .all(|(a, b)| match (inverse.image(a), inverse.image(b)) {
                    (Some(x), Some(y)) => graph.has_edge(x, y),
                    _ => true,
                })
    }

    /// Registry id of the block that `block` is mapped onto, if all its
    /// vertices have images forming a registered block.
    pub fn block_image(&self, ball: &AmalgamBall, block: usize) -> Option<usize> {
        let verts = &ball.block(block).vertices;
        let imgs: Option<Vec<usize>> = verts.iter().map(|&v| self.image(v)).collect();
        let imgs = imgs?;
        let (a, b) = (imgs[0], imgs[1]);
        ball.blocks_at(a).iter().copied().find(|&id| {
            let bv = &ball.block(id).vertices;
            bv.contains(&b) && imgs.iter().all(|x| bv.contains(x))
        })
    }

    /// The label permutation induced on a block mapped onto itself.
    pub fn induced_on_block(&self, ball: &AmalgamBall, block: usize) -> Option<Permutation> {
        if self.block_image(ball, block) != Some(block) {
            return None;
        }
        let images = ball
            .block(block)
            .vertices
            .iter()
            .map(|&v| {
                ball.label_in(self.image(v).expect("defined"), block)
                    .expect("inside")
            })
            .collect();
        Permutation::from_images(images).ok()
    }

    /// The restriction to the first `count` vertices, if it maps them into themselves.
    pub fn restrict_to_prefix(&self, count: usize) -> Option<BallAutomorphism> {
        let images: Vec<Option<usize>> = self.images[..count]
            .iter()
            .map(|x| x.filter(|&y| y < count))
            .collect();
        if images.iter().any(Option::is_none) {
            return None;
        }
        Some(BallAutomorphism {
            images,
            provenance: self.provenance,
            rule: None,
        })
    }
}

/// Extends an automorphism of `ball_k` to `ball_k1`, the ball one generation
/// larger. Each frontier vertex goes where `sigma` sends it, and its child
/// block in slot `j` goes to the slot-`j` child block of the image, with the
/// aligned label map (the identity, since both ends hang at label 0).
pub fn extend_automorphism(
    ball_k: &AmalgamBall,
    sigma: &BallAutomorphism,
    ball_k1: &AmalgamBall,
) -> Result<BallAutomorphism, AmalgamError> {
    if ball_k1.radius() != ball_k.radius() + 1 {
        return Err(AmalgamError::RadiusMismatch {
            expected: ball_k.radius() + 1,
            found: ball_k1.radius(),
        });
    }
    if ball_k.block_graph() != ball_k1.block_graph()
        || ball_k.multiplicity() != ball_k1.multiplicity()
    {
        return Err(AmalgamError::BallMismatch);
    }
    let Some(perm) = sigma
        .as_permutation()
        .filter(|p| p.degree() == ball_k.vertex_count())
    else {
        return Err(AmalgamError::InvalidAutomorphism(
            "not a bijection of the inner ball".into(),
        ));
    };
    if !ball_k.graph().is_automorphism(&perm) {
        return Err(AmalgamError::InvalidAutomorphism(
            "edges not preserved".into(),
        ));
    }
    let inner = ball_k.vertex_count();
    let amalgam = ball_k.amalgam();
    let rho = amalgam.aligned(0, 0);
    let mut images: Vec<Option<usize>> = perm.images().iter().map(|&x| Some(x)).collect();
    for v in inner..ball_k1.vertex_count() {
        let addr = ball_k1.address(v);
        let alpha = addr.parent_vertex().expect("outside the root block");
        let (slot, label) = addr.steps()[addr.steps().len() - 1];
        let alpha_idx = ball_k.vertex_of(&alpha).expect("frontier vertex");
        let image = ball_k.address(perm.image(alpha_idx));
        if image.generation() != ball_k.radius() {
            return Err(AmalgamError::InvalidAutomorphism(
                "frontier not preserved".into(),
            ));
        }
        let w = ball_k1
            .vertex_of(&image.child(slot, rho.image(label)))
            .expect("child of a frontier vertex");
        images.push(Some(w));
    }
    Ok(BallAutomorphism {
        images,
        provenance: Provenance::Extension,
        rule: None,
    })
}

impl AmalgamBall {
    /// Lift of a block automorphism `pi` acting on registered block `id`.
    ///
    /// On the root block this is built by extending `pi` one generation at a
    /// time; elsewhere it is the restriction of the canonical block rule,
    /// partial whenever the lift moves the block's attaching vertex.
    pub fn lift_block_automorphism(
        &self,
        id: usize,
        pi: &Permutation,
    ) -> Result<BallAutomorphism, AmalgamError> {
        let amalgam = self.amalgam();
        let address = self.block(id).address.clone();
        let rule = amalgam.block_rule(&address, &address, pi)?;
        if address != BlockAddress::Root {
            return Ok(restrict(self, rule, Provenance::BlockLift));
        }
        let mut inner = AmalgamBall::new(amalgam.clone(), 0)?;
        let mut sigma = BallAutomorphism {
            images: pi.images().iter().map(|&x| Some(x)).collect(),
            provenance: Provenance::Extension,
            rule: None,
        };
        for r in 1..self.radius() {
            let outer = AmalgamBall::new(amalgam.clone(), r)?;
            sigma = extend_automorphism(&inner, &sigma, &outer)?;
            inner = outer;
        }
        if self.radius() > 0 {
            sigma = extend_automorphism(&inner, &sigma, self)?;
        }
        sigma.provenance = Provenance::BlockLift;
        sigma.rule = Some(rule);
        Ok(sigma)
    }
}

/// Transport when the anchor and its image are in the ball, path walking
/// otherwise.
fn restrict(
    ball: &AmalgamBall,
    rule: AmalgamAutomorphism,
    provenance: Provenance,
) -> BallAutomorphism {
    match BallAutomorphism::from_rule_by_transport(ball, rule.clone(), provenance) {
        Some(g) => g,
        None => BallAutomorphism::from_rule(ball, rule, provenance),
    }
}

/// Structural generators of the stabilizer of interior vertex `v`: lifts of
/// the label stabilizer of `v` in each of its blocks, then the swaps of each
/// pair of blocks at `v`.
pub fn stabilizer_generators_on_ball(
    ball: &AmalgamBall,
    v: usize,
) -> Result<Vec<BallAutomorphism>, AmalgamError> {
    if v >= ball.vertex_count() {
        return Err(AmalgamError::VertexOutOfRange(v));
    }
    if !ball.is_interior(v) {
        return Err(AmalgamError::VertexNotInterior(v));
    }
    let amalgam = ball.amalgam();
    let address = ball.address(v).clone();
    let blocks = ball.blocks_at(v);
    let mut out = Vec::new();
    for (i, &b) in blocks.iter().enumerate() {
        let label = ball.label_in(v, b).expect("own block");
        let stab = amalgam
            .block_group()
            .point_stabilizer(label, DEFAULT_ELEMENT_CAP)
            .expect("block groups are small");
        for pi in stab.generators().iter().filter(|p| !p.is_identity()) {
            if b == ball.root_block() {
                out.push(ball.lift_block_automorphism(b, pi)?);
            } else {
                let rule = amalgam.stabilizer_lift(&address, i, pi)?;
                out.push(restrict(ball, rule, Provenance::BlockLift));
            }
        }
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let rule = amalgam.slot_swap(&address, i, j)?;
            out.push(restrict(ball, rule, Provenance::SlotSwap));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::build_ball;

    fn dc3() -> DiGraph {
        DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn rotation() -> Permutation {
        Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()
    }

    #[test]
    fn identity_extends_to_identity() {
        let b1 = build_ball(&dc3(), 2, 1).unwrap();
        let b2 = build_ball(&dc3(), 2, 2).unwrap();
        let id = BallAutomorphism::identity(b1.vertex_count());
        assert!(extend_automorphism(&b1, &id, &b2).unwrap().is_identity());
        let rule =
            BallAutomorphism::from_rule(&b2, b2.amalgam().identity_rule(), Provenance::Composition);
        assert!(rule.is_identity());
    }

    #[test]
    fn rotation_of_root_cycle() {
        let b0 = build_ball(&dc3(), 2, 0).unwrap();
        let b1 = build_ball(&dc3(), 2, 1).unwrap();
        let sigma = BallAutomorphism::from_images(
            rotation().images().iter().map(|&x| Some(x)).collect(),
            Provenance::BlockLift,
        )
        .unwrap();
        let ext = extend_automorphism(&b0, &sigma, &b1).unwrap();
        assert_eq!(ext.degree(), 9);
        assert!(ext.is_total());
        assert!(ext.is_edge_preserving(b1.graph()));
        // child blocks 1, 2, 3 hang from 0, 1, 2 and are cycled
        assert_eq!(ext.block_image(&b1, 1), Some(2));
        assert_eq!(ext.block_image(&b1, 2), Some(3));
        assert_eq!(ext.block_image(&b1, 3), Some(1));
        let lifted = b1.lift_block_automorphism(0, &rotation()).unwrap();
        assert_eq!(lifted, ext);
    }

    #[test]
    fn rejects_bad_extensions() {
        let b0 = build_ball(&dc3(), 2, 0).unwrap();
        let b2 = build_ball(&dc3(), 2, 2).unwrap();
        let id = BallAutomorphism::identity(3);
        assert!(matches!(
            extend_automorphism(&b0, &id, &b2),
            Err(AmalgamError::RadiusMismatch { .. })
        ));
        let b1 = build_ball(&dc3(), 2, 1).unwrap();
        let flip =
            BallAutomorphism::from_images(vec![Some(1), Some(0), Some(2)], Provenance::Composition)
                .unwrap();
        assert!(matches!(
            extend_automorphism(&b0, &flip, &b1),
            Err(AmalgamError::InvalidAutomorphism(_))
        ));
    }

    #[test]
    fn routes_agree() {
        let k3 = dc3().undirected_shadow();
        for block in [dc3(), k3] {
            let ball = build_ball(&block, 3, 2).unwrap();
            for v in ball.interior() {
                for g in stabilizer_generators_on_ball(&ball, v).unwrap() {
                    let rule = g.rule().unwrap().clone();
                    let walked = BallAutomorphism::from_rule(&ball, rule.clone(), g.provenance());
                    let moved =
                        BallAutomorphism::from_rule_by_transport(&ball, rule, g.provenance())
                            .unwrap();
                    assert_eq!(walked, moved);
                    assert_eq!(walked, g);
                    assert!(g.fixes(v));
                    assert!(g.is_edge_preserving(ball.graph()));
                }
            }
        }
    }

    #[test]
    fn stabilizer_families() {
        let ball = build_ball(&dc3(), 2, 2).unwrap();
        let gens = stabilizer_generators_on_ball(&ball, 0).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].provenance(), Provenance::SlotSwap);
        assert!(!gens[0].is_identity());
        let k3 = build_ball(&dc3().undirected_shadow(), 2, 2).unwrap();
        let gens = stabilizer_generators_on_ball(&k3, 0).unwrap();
        assert!(gens.iter().any(|g| g.provenance() == Provenance::BlockLift));
        assert!(gens.iter().all(|g| g.fixes(0)));
        assert!(matches!(
            stabilizer_generators_on_ball(&ball, ball.vertex_count() - 1),
            Err(AmalgamError::VertexNotInterior(_))
        ));
    }

    #[test]
    fn block_rules_move_blocks() {
        let ball = build_ball(&dc3(), 2, 2).unwrap();
        let amalgam = ball.amalgam();
        let child = ball.block(1).address.clone();
        let rule = amalgam
            .block_rule(&BlockAddress::Root, &child, &rotation())
            .unwrap();
        let (img, _) = amalgam.map_block(&rule, &BlockAddress::Root);
        assert_eq!(img, child);
        let g = BallAutomorphism::from_rule(&ball, rule, Provenance::BlockLift);
        assert!(!g.is_total());
        assert!(g.is_edge_preserving(ball.graph()));
        assert_eq!(g.block_image(&ball, 0), Some(1));
    }
}
