//! Plane trees, binary trees and non-crossing partitions, and the bijections
//! `ω`, `σ`, `θ` that carry each of them onto Dyck paths.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dyck::DyckPath;
use crate::error::{Error, Result};

/// An ordered (plane) tree; the root is implicit and `children` are listed
/// in clockwise order, i.e. left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn node(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.children.iter().map(|c| 1 + c.size()).sum()
    }

    /// `ω(T)`: tour the tree clockwise, writing `N` the first time an edge is
    /// followed and `S` the second time.
    pub fn omega(&self) -> Result<DyckPath> {
        let mut descents = Vec::with_capacity(self.size());
        fn walk(t: &PlaneTree, descents: &mut Vec<usize>) {
            for c in &t.children {
                descents.push(0);
                walk(c, descents);
                *descents.last_mut().expect("pushed above") += 1;
            }
        }
        walk(self, &mut descents);
        if descents.is_empty() {
            return Err(Error::EmptyPath);
        }
        DyckPath::from_descents(descents)
    }

    /// `ω⁻¹(P)`.
    pub fn omega_inv(path: &DyckPath) -> PlaneTree {
        let mut stack: Vec<PlaneTree> = vec![PlaneTree::leaf()];
        for &a in path.descents() {
            stack.push(PlaneTree::leaf());
            for _ in 0..a {
                let done = stack.pop().expect("Dyck path never pops the root");
                stack
                    .last_mut()
                    .expect("Dyck path never pops the root")
                    .children
                    .push(done);
            }
        }
        debug_assert_eq!(stack.len(), 1);
        stack.pop().expect("root")
    }

    /// Depth of every non-root vertex, in clockwise (preorder) order.
    pub fn preorder_depths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(t: &PlaneTree, depth: usize, out: &mut Vec<usize>) {
            for c in &t.children {
                out.push(depth + 1);
                walk(c, depth + 1, out);
            }
        }
        walk(self, 0, &mut out);
        out
    }
}

/// Parent of each non-root vertex `u_0, …, u_{n−1}` of `ω⁻¹(P)` listed in
/// clockwise order; `None` stands for the root `v_0`.
pub fn tree_parents(path: &DyckPath) -> Vec<Option<usize>> {
    let mut parents = Vec::with_capacity(path.size());
    let mut stack: Vec<usize> = Vec::new();
    for (u, &a) in path.descents().iter().enumerate() {
        parents.push(stack.last().copied());
        stack.push(u);
        for _ in 0..a {
            stack.pop();
        }
    }
    parents
}

/// A binary tree: a leaf `∘` or an ordered pair `(B_1, B_2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    fn push_sigma(&self, word: &mut Vec<bool>) {
        if let BinaryTree::Node(l, r) = self {
            l.push_sigma(word);
            word.push(true);
            r.push_sigma(word);
            word.push(false);
        }
    }

    /// `σ(B) = σ(B_1) N σ(B_2) S`, `σ(∘) = ε`.
    pub fn sigma(&self) -> Result<DyckPath> {
        let mut word = Vec::with_capacity(2 * self.size());
        self.push_sigma(&mut word);
        path_from_steps(&word)
    }

    /// `σ⁻¹(P)`.
    pub fn sigma_inv(path: &DyckPath) -> BinaryTree {
        let word = path_steps(path);
        fn build(w: &[bool]) -> BinaryTree {
            if w.is_empty() {
                return BinaryTree::Leaf;
            }
            // w = P1 N P2 S where N is the last up-step leaving height 0
            let mut h = 0isize;
            let mut split = 0;
            for (k, &up) in w[..w.len() - 1].iter().enumerate() {
                if h == 0 {
                    split = k;
                }
                h += if up { 1 } else { -1 };
            }
            BinaryTree::node(build(&w[..split]), build(&w[split + 1..w.len() - 1]))
        }
        build(&word)
    }

    /// Every tree obtained by one right rotation
    /// `((B_1, B_2), B_3) → (B_1, (B_2, B_3))` at some subtree.
    pub fn right_rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(b1, b2) = l.as_ref() {
                out.push(BinaryTree::node(
                    (**b1).clone(),
                    BinaryTree::node((**b2).clone(), (**r).clone()),
                ));
            }
            for l2 in l.right_rotations() {
                out.push(BinaryTree::node(l2, (**r).clone()));
            }
            for r2 in r.right_rotations() {
                out.push(BinaryTree::node((**l).clone(), r2));
            }
        }
        out
    }

    /// Every binary tree with `n` nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        if n == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in BinaryTree::all(k) {
                for r in BinaryTree::all(n - 1 - k) {
                    out.push(BinaryTree::node(l.clone(), r));
                }
            }
        }
        out
    }
}

fn path_steps(path: &DyckPath) -> Vec<bool> {
    let mut w = Vec::with_capacity(2 * path.size());
    for &a in path.descents() {
        w.push(true);
        w.extend(core::iter::repeat_n(false, a));
    }
    w
}

fn path_from_steps(word: &[bool]) -> Result<DyckPath> {
    let mut descents: Vec<usize> = Vec::new();
    for &up in word {
        if up {
            descents.push(0);
        } else {
            *descents
                .last_mut()
                .ok_or(Error::NegativePrefix { position: 0 })? += 1;
        }
    }
    DyckPath::from_descents(descents)
}

/// A non-crossing partition of `{1, …, n}`.
///
/// Blocks are kept sorted by their minimum and each block is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Returns a witness `a < b < c < d` with `a, c` in one block and `b, d` in
/// another, if the blocks cross.
pub fn find_crossing(blocks: &[Vec<usize>]) -> Option<(usize, usize, usize, usize)> {
    for (x, bx) in blocks.iter().enumerate() {
        for (y, by) in blocks.iter().enumerate() {
            if x == y {
                continue;
            }
            for &a in bx {
                for &c in bx.iter().filter(|&&c| c > a) {
                    for &b in by.iter().filter(|&&b| a < b && b < c) {
                        if let Some(&d) = by.iter().find(|&&d| d > c) {
                            return Some((a, b, c, d));
                        }
                    }
                }
            }
        }
    }
    None
}

impl NoncrossingPartition {
    /// Validates and canonicalises `blocks` as a partition of `{1, …, n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside 1..={n}"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {x} missing")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        if let Some((a, b, c, d)) = find_crossing(&blocks) {
            return Err(Error::CrossingPartition { a, b, c, d });
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of each element; slot 0 is unused.
    fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                idx[x] = k;
            }
        }
        idx
    }

    /// `θ(π) = N S^α_1 … N S^α_n` where `α_i` is the size of the block of `i`
    /// when `i` is its maximum and `0` otherwise.
    pub fn theta(&self) -> DyckPath {
        let mut descents = vec![0; self.n];
        for b in &self.blocks {
            descents[b[b.len() - 1] - 1] = b.len();
        }
        DyckPath::from_descents(descents).expect("non-crossing partitions map to Dyck paths")
    }

    /// `θ⁻¹(P)` by a stack scan: at each `i` with `α_i > 0`, close a block
    /// made of the `α_i` most recently opened elements.
    pub fn theta_inv(path: &DyckPath) -> Self {
        let mut open: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        for (k, &a) in path.descents().iter().enumerate() {
            open.push(k + 1);
            if a > 0 {
                let block = open.split_off(open.len() - a);
                blocks.push(block);
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        NoncrossingPartition {
            n: path.size(),
            blocks,
        }
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NoncrossingPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let idx = other.block_index();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| idx[x] == idx[b[0]]))
    }

    /// The partition obtained by merging two distinct blocks, if it remains
    /// non-crossing.
    pub fn merge(&self, c: &[usize], c2: &[usize]) -> Result<Option<NoncrossingPartition>> {
        let x = self.find_block(c)?;
        let y = self.find_block(c2)?;
        if x == y {
            return Err(Error::UnknownBlock);
        }
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(self.blocks.len() - 1);
        let mut merged = self.blocks[x].clone();
        merged.extend_from_slice(&self.blocks[y]);
        merged.sort_unstable();
        for (k, b) in self.blocks.iter().enumerate() {
            if k != x && k != y {
                blocks.push(b.clone());
            }
        }
        blocks.push(merged);
        match NoncrossingPartition::new(self.n, blocks) {
            Ok(p) => Ok(Some(p)),
            Err(Error::CrossingPartition { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Whether two blocks can be merged without creating a crossing.
    pub fn mergeable(&self, c: &[usize], c2: &[usize]) -> Result<bool> {
        Ok(self.merge(c, c2)?.is_some())
    }

    fn find_block(&self, c: &[usize]) -> Result<usize> {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        self.blocks
            .iter()
            .position(|b| *b == sorted)
            .ok_or(Error::UnknownBlock)
    }
}
