//! Stack triangulations and their ternary-tree encoding.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::map::Triangulation;

/// Whether repeatedly deleting internal vertices of degree 3 empties the
/// triangulation down to its outer triangle.
pub fn is_stack(tri: &Triangulation) -> bool {
    let n = tri.size();
    let map = tri.map();
    let mut adj: Vec<BTreeSet<usize>> = (0..map.vertex_count())
        .map(|v| map.neighbors(v).into_iter().collect())
        .collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    let mut removed = 0;
    let mut gone = vec![false; n];
    while let Some(v) = queue.pop() {
        if gone[v] || adj[v].len() != 3 {
            continue;
        }
        gone[v] = true;
        removed += 1;
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for w in nbrs {
            adj[w].remove(&v);
            if w < n && !gone[w] && adj[w].len() == 3 {
                queue.push(w);
            }
        }
        adj[v].clear();
    }
    removed == n
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TernaryTree {
    Leaf,
    Node(Box<[TernaryTree; 3]>),
}

impl TernaryTree {
    pub fn node(a: TernaryTree, b: TernaryTree, c: TernaryTree) -> Self {
        TernaryTree::Node(Box::new([a, b, c]))
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            TernaryTree::Leaf => 0,
            TernaryTree::Node(ch) => 1 + ch.iter().map(TernaryTree::size).sum::<usize>(),
        }
    }

    /// All ternary trees with `n` nodes.
    pub fn all(n: usize) -> Vec<TernaryTree> {
        let mut table: Vec<Vec<TernaryTree>> = vec![vec![TernaryTree::Leaf]];
        for m in 1..=n {
            let mut out = Vec::new();
            for i in 0..m {
                for j in 0..m - i {
                    let k = m - 1 - i - j;
                    for a in &table[i] {
                        for b in &table[j] {
                            for c in &table[k] {
                                out.push(TernaryTree::node(a.clone(), b.clone(), c.clone()));
                            }
                        }
                    }
                }
            }
            table.push(out);
        }
        table.swap_remove(n)
    }
}

/// Builds the stack triangulation of a ternary tree. The root node becomes
/// a vertex inserted in the triangle `(v0, v1, v2)`; the subtrees fill, in
/// order, the triangles opposite `v0`, `v1` and `v2`.
pub fn ternary_to_stack(t: &TernaryTree) -> Triangulation {
    // working ids: 0, 1, 2 are v0, v1, v2; inserted vertices follow
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    fn insert_after(list: &mut Vec<usize>, anchor: usize, x: usize) {
        let k = list
            .iter()
            .position(|&y| y == anchor)
            .expect("anchor is a neighbour");
        list.insert(k + 1, x);
    }
    let mut work = vec![(t, [0usize, 1, 2])];
    while let Some((t, [a, b, c])) = work.pop() {
        let TernaryTree::Node(ch) = t else { continue };
        let x = rot.len();
        insert_after(&mut rot[a], c, x);
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        rot.push(vec![a, c, b]);
        work.push((&ch[2], [a, b, x]));
        work.push((&ch[1], [a, x, c]));
        work.push((&ch[0], [x, b, c]));
    }
    let n = rot.len() - 3;
    let relabel = |v: usize| if v < 3 { n + v } else { v - 3 };
    let mut rotations = vec![Vec::new(); n + 3];
    for (v, list) in rot.into_iter().enumerate() {
        rotations[relabel(v)] = list.into_iter().map(relabel).collect();
    }
    Triangulation::from_rotations(&rotations).expect("insertion keeps a triangulation")
}

/// Inverse of [`ternary_to_stack`].
pub fn stack_to_ternary(tri: &Triangulation) -> Result<TernaryTree> {
    let map = tri.map();
    let adj: Vec<BTreeSet<usize>> = (0..map.vertex_count())
        .map(|v| map.neighbors(v).into_iter().collect())
        .collect();
    let mut used = 0;
    fn go(
        tri: &Triangulation,
        adj: &[BTreeSet<usize>],
        [a, b, c]: [usize; 3],
        used: &mut usize,
    ) -> Result<TernaryTree> {
        let map = tri.map();
        // neighbours of a strictly inside the clockwise wedge from c to b
        let nbrs = map.neighbors(a);
        let k = nbrs.iter().position(|&y| y == c).ok_or(Error::NotStack)?;
        let wedge: Vec<usize> = (1..nbrs.len())
            .map(|s| nbrs[(k + s) % nbrs.len()])
            .take_while(|&y| y != b)
            .collect();
        if wedge.is_empty() {
            return Ok(TernaryTree::Leaf);
        }
        let mut hubs = wedge
            .iter()
            .filter(|&&y| adj[y].contains(&b) && adj[y].contains(&c));
        let (Some(&x), None) = (hubs.next(), hubs.next()) else {
            return Err(Error::NotStack);
        };
        if !tri.is_internal(x) {
            return Err(Error::NotStack);
        }
        *used += 1;
        let first = go(tri, adj, [x, b, c], used)?;
        let second = go(tri, adj, [a, x, c], used)?;
        let third = go(tri, adj, [a, b, x], used)?;
        Ok(TernaryTree::node(first, second, third))
    }
    let t = go(tri, &adj, [tri.v0(), tri.v1(), tri.v2()], &mut used)?;
    if used != tri.size() {
        return Err(Error::NotStack);
    }
    Ok(t)
}
