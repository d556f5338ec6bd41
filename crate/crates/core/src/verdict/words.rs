//! Words over the stabilizer generators of two vertices, their alternating
//! normal form, and the bounded check that such words never carry `beta`
//! to `alpha` when the block is regular.

use std::fmt;

use crate::amalgam::{stabilizer_generators_on_ball, AmalgamBall, BallAutomorphism};
use crate::decomp::{BlockCutTree, RootedTree, TreeNode};

use super::VerdictError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub side: Side,
    pub generator: usize,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Alpha => 'a',
            Side::Beta => 'b',
        };
        write!(
            f,
            "{s}{}{}",
            self.generator,
            if self.inverse { "'" } else { "" }
        )
    }
}

/// A word, evaluated left to right (first letter acts first).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    pub letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Maximal runs of letters from one side.
    pub fn syllables(&self) -> Vec<Syllable> {
        let mut out: Vec<Syllable> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some(s) if s.side == l.side => s.letters.push(l),
                _ => out.push(Syllable {
                    side: l.side,
                    letters: vec![l],
                }),
            }
        }
        out
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A group element attributed to one side. After rewriting, a syllable may
/// hold letters of the other side that were absorbed into it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub side: Side,
    pub letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub syllables: Vec<Syllable>,
    /// Leading letters dropped because they fix every qualifying vertex.
    pub dropped: Vec<Letter>,
}

impl NormalForm {
    pub fn word(&self) -> GroupWord {
        GroupWord::new(
            self.syllables
                .iter()
                .flat_map(|s| s.letters.iter().copied())
                .collect(),
        )
    }

    pub fn alternations(&self) -> usize {
        self.syllables.len()
    }
}

/// The stabilizer generators of two interior vertices of one ball, with the
/// ball's block-cut-vertex tree.
#[derive(Debug, Clone)]
pub struct StabilizerPair<'a> {
    ball: &'a AmalgamBall,
    alpha: usize,
    beta: usize,
    alpha_gens: Vec<BallAutomorphism>,
    beta_gens: Vec<BallAutomorphism>,
    alpha_inv: Vec<BallAutomorphism>,
    beta_inv: Vec<BallAutomorphism>,
    tree: BlockCutTree,
}

impl<'a> StabilizerPair<'a> {
    pub fn new(ball: &'a AmalgamBall, alpha: usize, beta: usize) -> Result<Self, VerdictError> {
        for v in [alpha, beta] {
            if v >= ball.vertex_count() || !ball.is_interior(v) {
                return Err(VerdictError::BallTooSmall(v));
            }
        }
        let alpha_gens = stabilizer_generators_on_ball(ball, alpha)?;
        let beta_gens = stabilizer_generators_on_ball(ball, beta)?;
        Ok(StabilizerPair {
            alpha_inv: alpha_gens.iter().map(BallAutomorphism::inverse).collect(),
            beta_inv: beta_gens.iter().map(BallAutomorphism::inverse).collect(),
            alpha_gens,
            beta_gens,
            tree: crate::amalgam::ball_block_cut_tree(ball)?,
            ball,
            alpha,
            beta,
        })
    }

    pub fn ball(&self) -> &AmalgamBall {
        self.ball
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn tree(&self) -> &BlockCutTree {
        &self.tree
    }

    pub fn generators(&self, side: Side) -> &[BallAutomorphism] {
        match side {
            Side::Alpha => &self.alpha_gens,
            Side::Beta => &self.beta_gens,
        }
    }

    /// Every letter: each generator and its inverse, alpha side first.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for side in [Side::Alpha, Side::Beta] {
            for generator in 0..self.generators(side).len() {
                for inverse in [false, true] {
                    out.push(Letter {
                        side,
                        generator,
                        inverse,
                    });
                }
            }
        }
        out
    }

    pub fn letter(&self, l: Letter) -> Result<&BallAutomorphism, VerdictError> {
        let list = match (l.side, l.inverse) {
            (Side::Alpha, false) => &self.alpha_gens,
            (Side::Alpha, true) => &self.alpha_inv,
            (Side::Beta, false) => &self.beta_gens,
            (Side::Beta, true) => &self.beta_inv,
        };
        list.get(l.generator).ok_or(VerdictError::BadLetter {
            side: l.side,
            index: l.generator,
        })
    }

    /// Image of `v` letter by letter; `None` once a step leaves the ball.
    pub fn evaluate_at(&self, letters: &[Letter], v: usize) -> Result<Option<usize>, VerdictError> {
        let mut cur = v;
        for &l in letters {
            match self.letter(l)?.image(cur) {
                Some(x) => cur = x,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// The partial map of a letter sequence.
    pub fn evaluate(&self, letters: &[Letter]) -> Result<BallAutomorphism, VerdictError> {
        let mut acc = BallAutomorphism::identity(self.ball.vertex_count());
        for &l in letters {
            acc = acc.then(self.letter(l)?);
        }
        Ok(acc)
    }

    fn node_vertices(&self, y: TreeNode) -> Vec<usize> {
        match y {
            TreeNode::Vertex(v) => vec![v],
            TreeNode::Block(b) => self.tree.blocks()[b].clone(),
        }
    }

    /// Whether `g` fixes tree node `y`; `None` if `g` is undefined on it.
    pub fn fixes_node(&self, g: &BallAutomorphism, y: TreeNode) -> Option<bool> {
        let verts = self.node_vertices(y);
        let mut images = Vec::with_capacity(verts.len());
        for &v in &verts {
            images.push(g.image(v)?);
        }
        images.sort_unstable();
        Some(images == verts)
    }

    /// Whether the product of `letters` fixes `y`, evaluating only on `y`.
    pub fn letters_fix_node(
        &self,
        letters: &[Letter],
        y: TreeNode,
    ) -> Result<Option<bool>, VerdictError> {
        let verts = self.node_vertices(y);
        let mut images = Vec::with_capacity(verts.len());
        for &v in &verts {
            match self.evaluate_at(letters, v)? {
                Some(x) => images.push(x),
                None => return Ok(None),
            }
        }
        images.sort_unstable();
        Ok(Some(images == verts))
    }

    fn side_vertex(&self, side: Side) -> usize {
        match side {
            Side::Alpha => self.alpha,
            Side::Beta => self.beta,
        }
    }

    /// Checks that `y` lies strictly between alpha and beta in the tree,
    /// and that every generator fixing `y` on one side also fixes the other
    /// side's vertex.
    pub fn check_hypothesis(&self, y: TreeNode) -> Result<(), VerdictError> {
        if !self.tree.contains(y) {
            return Err(VerdictError::HypothesisFailed(format!(
                "{y:?} is not a tree node"
            )));
        }
        let geodesic = self
            .tree
            .tree_geodesic(TreeNode::Vertex(self.alpha), TreeNode::Vertex(self.beta))?;
        if !geodesic.open().contains(&y) {
            return Err(VerdictError::HypothesisFailed(format!(
                "{y:?} is not on the open geodesic between {} and {}",
                self.alpha, self.beta
            )));
        }
        for side in [Side::Alpha, Side::Beta] {
            let other = self.side_vertex(match side {
                Side::Alpha => Side::Beta,
                Side::Beta => Side::Alpha,
            });
            for (i, g) in self.generators(side).iter().enumerate() {
                let Some(fixes_y) = self.fixes_node(g, y) else {
                    return Err(VerdictError::BallTooSmall(self.side_vertex(side)));
                };
                if fixes_y && !g.fixes(other) {
                    return Err(VerdictError::HypothesisFailed(format!(
                        "{side:?} generator {i} fixes {y:?} but moves {other}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Interior vertices fixed by every generator that fixes `y`.
    pub fn qualifying_vertices(&self, y: TreeNode) -> Vec<usize> {
        let fixing: Vec<&BallAutomorphism> = [Side::Alpha, Side::Beta]
            .iter()
            .flat_map(|&s| self.generators(s).iter())
            .filter(|g| self.fixes_node(g, y) == Some(true))
            .collect();
        self.ball
            .interior()
            .filter(|&v| fixing.iter().all(|g| g.fixes(v)))
            .collect()
    }
}

/// Rewrites `word` into alternating syllables none of which fixes `y`.
///
/// A syllable fixing `y` lies in the joint stabilizer of `y` and both
/// vertices, so it is absorbed into its left neighbour, or dropped when it
/// is leading. The result acts like `word` on every vertex fixed by that
/// joint stabilizer.
pub fn normal_form_rewrite(
    pair: &StabilizerPair<'_>,
    word: &GroupWord,
    y: TreeNode,
) -> Result<NormalForm, VerdictError> {
    pair.check_hypothesis(y)?;
    rewrite(pair, word, y)
}

fn rewrite(
    pair: &StabilizerPair<'_>,
    word: &GroupWord,
    y: TreeNode,
) -> Result<NormalForm, VerdictError> {
    let mut stack: Vec<Syllable> = Vec::new();
    let mut dropped = Vec::new();
    for syllable in word.syllables() {
        match stack.last_mut() {
            Some(top) if top.side == syllable.side => top.letters.extend(syllable.letters),
            _ => stack.push(syllable),
        }
        loop {
            let top = stack.last().expect("just pushed");
            match pair.letters_fix_node(&top.letters, y)? {
                None => return Err(VerdictError::WordNotEvaluable),
                Some(false) => break,
                Some(true) => {}
            }
            let top = stack.pop().expect("nonempty");
            match stack.last_mut() {
                Some(left) => left.letters.extend(top.letters),
                None => {
                    dropped.extend(top.letters);
                    break;
                }
            }
        }
    }
    Ok(NormalForm {
        syllables: stack,
        dropped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    ReachedAlpha,
    /// Prefix ending at this syllable did not move further from `y`.
    DistanceNotIncreasing(usize),
    /// Prefix ending at this syllable landed in the forbidden component.
    ForbiddenComponent(usize),
    ActionMismatch,
    Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub word: GroupWord,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub max_len: usize,
    /// All words up to `max_len` letters.
    pub words_total: u64,
    pub words_evaluated: u64,
    /// Words whose image of beta leaves the ball partway.
    pub words_skipped: u64,
    /// Evaluable words whose normal form could not be evaluated.
    pub normal_forms_skipped: u64,
    pub max_alternations: usize,
    pub max_distance: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn alpha_reached(&self) -> bool {
        self.violations
            .iter()
            .any(|v| v.kind == ViolationKind::ReachedAlpha)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every word of at most `max_len` letters and checks its action on beta.
pub fn bounded_word_orbit_check(
    pair: &StabilizerPair<'_>,
    y: TreeNode,
    max_len: usize,
) -> Result<CheckReport, VerdictError> {
    pair.check_hypothesis(y)?;
    let rooted = pair.tree().rooted_at(y)?;
    let alphabet = pair.alphabet();
    let mut report = CheckReport {
        max_len,
        ..CheckReport::default()
    };
    let mut word = Vec::new();
    enumerate(
        pair,
        y,
        &rooted,
        &alphabet,
        max_len,
        &mut word,
        pair.beta(),
        &mut report,
    )?;
    Ok(report)
}

/// Number of words of length at most `l` over `a` letters.
fn words_up_to(a: u64, l: usize) -> u64 {
    (0..=l as u32)
        .map(|i| a.saturating_pow(i))
        .fold(0, u64::saturating_add)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    pair: &StabilizerPair<'_>,
    y: TreeNode,
    rooted: &RootedTree,
    alphabet: &[Letter],
    remaining: usize,
    word: &mut Vec<Letter>,
    image: usize,
    report: &mut CheckReport,
) -> Result<(), VerdictError> {
    report.words_total += 1;
    report.words_evaluated += 1;
    check_word(
        pair,
        y,
        rooted,
        &GroupWord::new(word.clone()),
        image,
        report,
    )?;
    if remaining == 0 {
        return Ok(());
    }
    for &l in alphabet {
        match pair.letter(l)?.image(image) {
            Some(next) => {
                word.push(l);
                enumerate(pair, y, rooted, alphabet, remaining - 1, word, next, report)?;
                word.pop();
            }
            None => {
                let lost = words_up_to(alphabet.len() as u64, remaining - 1);
                report.words_total += lost;
                report.words_skipped += lost;
            }
        }
    }
    Ok(())
}

fn check_word(
    pair: &StabilizerPair<'_>,
    y: TreeNode,
    rooted: &RootedTree,
    word: &GroupWord,
    image: usize,
    report: &mut CheckReport,
) -> Result<(), VerdictError> {
    let mut kinds = Vec::new();
    if image == pair.alpha() {
        kinds.push(ViolationKind::ReachedAlpha);
    }
    match check_normal_form(pair, y, rooted, word, image, &mut kinds)? {
        None => report.normal_forms_skipped += 1,
        Some((alternations, distance)) => {
            report.max_alternations = report.max_alternations.max(alternations);
            report.max_distance = report.max_distance.max(distance);
        }
    }
    report
        .violations
        .extend(kinds.into_iter().map(|kind| Violation {
            word: word.clone(),
            kind,
        }));
    Ok(())
}

/// Walks beta through the normal form syllable by syllable. Returns the
/// alternation count and final distance from `y`, or `None` when the normal
/// form leaves the ball.
fn check_normal_form(
    pair: &StabilizerPair<'_>,
    y: TreeNode,
    rooted: &RootedTree,
    word: &GroupWord,
    image: usize,
    kinds: &mut Vec<ViolationKind>,
) -> Result<Option<(usize, usize)>, VerdictError> {
    let nf = match rewrite(pair, word, y) {
        Ok(nf) => nf,
        Err(VerdictError::WordNotEvaluable) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut syllables = nf.syllables.as_slice();
    let mut delta = pair.beta();
    // a leading beta syllable fixes beta
    if let Some(first) = syllables.first().filter(|s| s.side == Side::Beta) {
        match pair.evaluate_at(&first.letters, delta)? {
            Some(d) if d == delta => {}
            Some(_) => kinds.push(ViolationKind::Shape),
            None => return Ok(None),
        }
        syllables = &syllables[1..];
    }
    let dist = |v: usize| rooted.depth(TreeNode::Vertex(v));
    for (i, s) in syllables.iter().enumerate() {
        let Some(next) = pair.evaluate_at(&s.letters, delta)? else {
            return Ok(None);
        };
        if dist(next) <= dist(delta) {
            kinds.push(ViolationKind::DistanceNotIncreasing(i));
        }
        let forbidden = match s.side {
            Side::Alpha => pair.beta(),
            Side::Beta => pair.alpha(),
        };
        if rooted.same_component(TreeNode::Vertex(next), TreeNode::Vertex(forbidden)) {
            kinds.push(ViolationKind::ForbiddenComponent(i));
        }
        delta = next;
    }
    if delta != image {
        kinds.push(ViolationKind::ActionMismatch);
    }
    Ok(Some((nf.alternations(), dist(delta))))
}
