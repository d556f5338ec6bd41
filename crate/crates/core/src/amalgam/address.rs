use std::fmt;

/// A vertex of the infinite tree of blocks, as a path of
/// `(block_slot, vertex_slot)` steps out from the root block.
///
/// Root vertices are `[(0, l)]` for every label `l`. A deeper step `(c, l)`
/// enters the `c`-th child block of the previous vertex and picks the vertex
/// with label `l >= 1` there; label 0 of a child block is the vertex it hangs
/// from.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexAddress(Vec<(usize, usize)>);

impl VertexAddress {
    pub fn root(label: usize) -> Self {
        VertexAddress(vec![(0, label)])
    }

    /// Validated construction from raw steps.
    pub fn from_steps(steps: Vec<(usize, usize)>) -> Option<Self> {
        let (&first, rest) = steps.split_first()?;
        if first.0 != 0 || rest.iter().any(|&(_, l)| l == 0) {
            return None;
        }
        Some(VertexAddress(steps))
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Number of block hops from the root block; root vertices have generation 0.
    pub fn generation(&self) -> usize {
        self.0.len() - 1
    }

    /// Label of this vertex inside its parent block.
    pub fn label(&self) -> usize {
        self.0[self.0.len() - 1].1
    }

    /// The vertex the parent block hangs from, `None` for root vertices.
    pub fn parent_vertex(&self) -> Option<VertexAddress> {
        if self.0.len() == 1 {
            None
        } else {
            Some(VertexAddress(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn child(&self, slot: usize, label: usize) -> VertexAddress {
        let mut steps = self.0.clone();
        steps.push((slot, label));
        VertexAddress(steps)
    }

    /// The block containing this vertex on the side of the root.
    pub fn parent_block(&self) -> BlockAddress {
        match self.parent_vertex() {
            None => BlockAddress::Root,
            Some(parent) => BlockAddress::Child {
                parent,
                slot: self.0[self.0.len() - 1].0,
            },
        }
    }
}

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, l)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            write!(f, "{c}:{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A block of the infinite tree: the root block, or the `slot`-th child
/// block hanging from `parent`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BlockAddress {
    Root,
    Child { parent: VertexAddress, slot: usize },
}

impl BlockAddress {
    /// The vertex with label `label` in this block.
    pub fn vertex(&self, label: usize) -> VertexAddress {
        match self {
            BlockAddress::Root => VertexAddress::root(label),
            BlockAddress::Child { parent, .. } if label == 0 => parent.clone(),
            BlockAddress::Child { parent, slot } => parent.child(*slot, label),
        }
    }

    /// Generation of the block's non-attaching vertices.
    pub fn generation(&self) -> usize {
        match self {
            BlockAddress::Root => 0,
            BlockAddress::Child { parent, .. } => parent.generation() + 1,
        }
    }
}

impl fmt::Display for BlockAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockAddress::Root => write!(f, "root"),
            BlockAddress::Child { parent, slot } => write!(f, "{parent}+{slot}"),
        }
    }
}

/// A node of the infinite vertex-block tree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    Vertex(VertexAddress),
    Block(BlockAddress),
}

impl Node {
    fn parent(&self) -> Option<Node> {
        match self {
            Node::Vertex(v) => Some(Node::Block(v.parent_block())),
            Node::Block(BlockAddress::Root) => None,
            Node::Block(BlockAddress::Child { parent, .. }) => Some(Node::Vertex(parent.clone())),
        }
    }

    fn ancestry(&self) -> Vec<Node> {
        let mut out = vec![self.clone()];
        while let Some(p) = out[out.len() - 1].parent() {
            out.push(p);
        }
        out
    }
}

/// The unique path between two nodes of the infinite tree, both included.
pub fn tree_path(from: &Node, to: &Node) -> Vec<Node> {
    let up = from.ancestry();
    let down = to.ancestry();
    // both chains end at the root block; drop the shared tail except its first node
    let mut i = up.len();
    let mut j = down.len();
    while i > 0 && j > 0 && up[i - 1] == down[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut path: Vec<Node> = up[..=i].to_vec();
    path.extend(down[..j].iter().rev().cloned());
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn navigation() {
        let v = VertexAddress::root(2).child(1, 3);
        assert_eq!(v.generation(), 1);
        assert_eq!(v.label(), 3);
        assert_eq!(
            v.parent_block(),
            BlockAddress::Child {
                parent: VertexAddress::root(2),
                slot: 1
            }
        );
        assert_eq!(v.parent_block().vertex(0), VertexAddress::root(2));
        assert_eq!(v.parent_block().vertex(3), v);
        assert_eq!(v.to_string(), "0:2/1:3");
        assert!(VertexAddress::from_steps(vec![(0, 1), (0, 0)]).is_none());
    }

    #[test]
    fn paths() {
        let a = Node::Vertex(VertexAddress::root(0).child(0, 1));
        let b = Node::Vertex(VertexAddress::root(1));
        let p = tree_path(&a, &b);
        assert_eq!(p.len(), 5);
        assert_eq!(p[2], Node::Vertex(VertexAddress::root(0)));
        assert_eq!(p[3], Node::Block(BlockAddress::Root));
        assert_eq!(tree_path(&b, &b), vec![b.clone()]);
        let mut rev = tree_path(&b, &a);
        rev.reverse();
        assert_eq!(rev, p);
    }
}
