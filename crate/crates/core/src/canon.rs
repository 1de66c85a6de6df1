//! Canonical codes of rooted maps: equal codes iff the maps are isomorphic
//! by a root-preserving isomorphism.
//!
//! Half-edges are relabelled in breadth-first order from the root, exploring
//! `next` then `twin` of each half-edge. The code is the half-edge count
//! followed by the new labels of `next(h)` and `twin(h)` for every `h` in
//! label order, all as little-endian `u32`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::map::{CombinatorialMap, Triangulation};
use crate::realizer::Realizer;

/// Code of the bare outer triangle, as `u32` words.
pub const TRIANGLE_CODE: [u32; 13] = [6, 1, 2, 0, 3, 4, 0, 5, 1, 2, 5, 3, 4];

/// Code of the unique triangulation with one internal vertex, as `u32` words.
pub const SIZE_ONE_CODE: [u32; 25] = [
    12, 1, 2, 3, 4, 5, 0, 0, 6, 7, 1, 8, 9, 10, 3, 11, 8, 2, 7, 6, 5, 9, 11, 4, 10,
];

/// Reads a code back as `u32` words (the realizer suffix is ignored).
pub fn code_words(code: &[u8]) -> alloc::vec::Vec<u32> {
    let len = code
        .get(..4)
        .map_or(0, |w| u32::from_le_bytes([w[0], w[1], w[2], w[3]]) as usize);
    code.chunks_exact(4)
        .take(1 + 2 * len)
        .map(|w| u32::from_le_bytes([w[0], w[1], w[2], w[3]]))
        .collect()
}

fn bfs_order(map: &CombinatorialMap) -> Vec<usize> {
    let hc = map.half_edge_count();
    let mut label = vec![usize::MAX; hc];
    let mut order = Vec::with_capacity(hc);
    let mut queue = VecDeque::from([map.root()]);
    label[map.root()] = 0;
    order.push(map.root());
    while let Some(h) = queue.pop_front() {
        for g in [map.next(h), map.twin(h)] {
            if label[g] == usize::MAX {
                label[g] = order.len();
                order.push(g);
                queue.push_back(g);
            }
        }
    }
    order
}

fn push_u32(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u32).to_le_bytes());
}

fn code_with_order(map: &CombinatorialMap) -> (Vec<u8>, Vec<usize>) {
    let order = bfs_order(map);
    let mut label = vec![0; map.half_edge_count()];
    for (k, &h) in order.iter().enumerate() {
        label[h] = k;
    }
    let mut out = Vec::with_capacity(4 + 8 * order.len());
    push_u32(&mut out, order.len());
    for &h in &order {
        push_u32(&mut out, label[map.next(h)]);
        push_u32(&mut out, label[map.twin(h)]);
    }
    (out, order)
}

/// Code of a connected rooted map.
pub fn map_code(map: &CombinatorialMap) -> Vec<u8> {
    code_with_order(map).0
}

pub fn triangulation_code(tri: &Triangulation) -> Vec<u8> {
    map_code(tri.map())
}

/// The triangulation code followed by one byte per half-edge giving its
/// colour and orientation.
pub fn realizer_code(r: &Realizer) -> Vec<u8> {
    let (mut out, order) = code_with_order(r.triangulation().map());
    out.extend(order.iter().map(|&h| r.mark(h).code()));
    out
}
