//! Rooted combinatorial maps stored as half-edge rotation systems, and
//! rooted triangulations on top of them.
//!
//! Every half-edge `h` has an origin vertex, a `twin` (the other half of the
//! same edge) and `next(h)`, the next half-edge *clockwise* around its
//! origin. A corner is named by its first half-edge: corner `h` is the wedge
//! swept clockwise from `h` to `next(h)`. Faces are the orbits of
//! `h ↦ twin(next(h))` acting on corners.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    origin: Vec<usize>,
    twin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    first: Vec<usize>,
    root: usize,
}

impl CombinatorialMap {
    /// Builds a simple map from clockwise neighbour lists; `root` is the
    /// half-edge from `root.0` to `root.1`.
    pub fn from_rotations(rotations: &[Vec<usize>], root: (usize, usize)) -> Result<Self> {
        let vcount = rotations.len();
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut origin = Vec::new();
        let mut first = vec![usize::MAX; vcount];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(Error::MalformedMap(format!("vertex {v} is isolated")));
            }
            for &w in rot {
                if w >= vcount {
                    return Err(Error::MalformedMap(format!("vertex {w} out of range")));
                }
                if w == v {
                    return Err(Error::MalformedMap(format!("loop at vertex {v}")));
                }
                if index.insert((v, w), origin.len()).is_some() {
                    return Err(Error::MalformedMap(format!("multiple edge {v}-{w}")));
                }
                if first[v] == usize::MAX {
                    first[v] = origin.len();
                }
                origin.push(v);
            }
        }
        let hcount = origin.len();
        let mut twin = vec![0; hcount];
        let mut next = vec![0; hcount];
        for (v, rot) in rotations.iter().enumerate() {
            let d = rot.len();
            for (k, &w) in rot.iter().enumerate() {
                let h = index[&(v, w)];
                twin[h] = *index
                    .get(&(w, v))
                    .ok_or_else(|| Error::MalformedMap(format!("edge {v}-{w} is one-sided")))?;
                next[h] = index[&(v, rot[(k + 1) % d])];
            }
        }
        let root = *index
            .get(&root)
            .ok_or_else(|| Error::MalformedMap(format!("root {root:?} is not an edge")))?;
        CombinatorialMap::from_raw(origin, twin, next, root)
    }

    /// Builds a map from raw permutations, checking their structure.
    pub fn from_raw(
        origin: Vec<usize>,
        twin: Vec<usize>,
        next: Vec<usize>,
        root: usize,
    ) -> Result<Self> {
        let hcount = origin.len();
        if twin.len() != hcount || next.len() != hcount {
            return Err(Error::MalformedMap("array lengths differ".into()));
        }
        if hcount == 0 || root >= hcount {
            return Err(Error::MalformedMap("root out of range".into()));
        }
        for h in 0..hcount {
            let t = twin[h];
            if t >= hcount || t == h || twin[t] != h {
                return Err(Error::MalformedMap(format!(
                    "twin is not a fixed-point-free involution at {h}"
                )));
            }
        }
        let mut prev = vec![usize::MAX; hcount];
        for h in 0..hcount {
            let nx = next[h];
            if nx >= hcount || prev[nx] != usize::MAX {
                return Err(Error::MalformedMap(format!(
                    "next is not a permutation at {h}"
                )));
            }
            if origin[nx] != origin[h] {
                return Err(Error::MalformedMap(format!(
                    "next leaves the vertex at {h}"
                )));
            }
            prev[nx] = h;
        }
        let vcount = origin.iter().copied().max().map_or(0, |m| m + 1);
        let mut first = vec![usize::MAX; vcount];
        for (h, &v) in origin.iter().enumerate() {
            if first[v] == usize::MAX {
                first[v] = h;
            }
        }
        if let Some(v) = first.iter().position(|&f| f == usize::MAX) {
            return Err(Error::MalformedMap(format!("vertex {v} has no half-edge")));
        }
        // each vertex must be a single orbit of `next`
        for (v, &f) in first.iter().enumerate() {
            let mut h = next[f];
            let mut count = 1;
            while h != f {
                h = next[h];
                count += 1;
            }
            let degree = origin.iter().filter(|&&o| o == v).count();
            if count != degree {
                return Err(Error::MalformedMap(format!(
                    "rotation at vertex {v} is not cyclic"
                )));
            }
        }
        Ok(CombinatorialMap {
            origin,
            twin,
            next,
            prev,
            first,
            root,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn origin(&self, h: usize) -> usize {
        self.origin[h]
    }

    pub fn target(&self, h: usize) -> usize {
        self.origin[self.twin[h]]
    }

    pub fn twin(&self, h: usize) -> usize {
        self.twin[h]
    }

    pub fn next(&self, h: usize) -> usize {
        self.next[h]
    }

    pub fn prev(&self, h: usize) -> usize {
        self.prev[h]
    }

    /// Next corner along the face containing corner `h`.
    pub fn face_step(&self, h: usize) -> usize {
        self.twin[self.next[h]]
    }

    /// Half-edges around `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        let f = self.first[v];
        let mut out = vec![f];
        let mut h = self.next[f];
        while h != f {
            out.push(h);
            h = self.next[h];
        }
        out
    }

    /// Neighbours of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rotation(v)
            .into_iter()
            .map(|h| self.target(h))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation(v).len()
    }

    pub fn half_edge(&self, from: usize, to: usize) -> Option<usize> {
        self.rotation(from)
            .into_iter()
            .find(|&h| self.target(h) == to)
    }

    /// Clockwise neighbour lists, the inverse of [`CombinatorialMap::from_rotations`].
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|v| self.neighbors(v))
            .collect()
    }

    /// Faces as cyclic lists of corners, the root face first.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.half_edge_count()];
        let mut out = Vec::new();
        let starts = core::iter::once(self.root).chain(0..self.half_edge_count());
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut face = Vec::new();
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                face.push(c);
                c = self.face_step(c);
            }
            out.push(face);
        }
        out
    }

    /// Face index of every corner, consistent with [`CombinatorialMap::faces`].
    pub fn face_index(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let faces = self.faces();
        let mut idx = vec![0; self.half_edge_count()];
        for (f, face) in faces.iter().enumerate() {
            for &c in face {
                idx[c] = f;
            }
        }
        (faces, idx)
    }

    /// Structural problems: loops, multiple edges, Euler characteristic.
    pub fn check_simple_planar(&self) -> Vec<String> {
        let mut issues = Vec::new();
        for v in 0..self.vertex_count() {
            let mut targets = self.neighbors(v);
            if targets.contains(&v) {
                issues.push(format!("loop at vertex {v}"));
            }
            targets.sort_unstable();
            if targets.windows(2).any(|w| w[0] == w[1]) {
                issues.push(format!("multiple edge at vertex {v}"));
            }
        }
        let euler =
            self.vertex_count() as isize - self.edge_count() as isize + self.faces().len() as isize;
        if euler != 2 {
            issues.push(format!("Euler characteristic is {euler}, expected 2"));
        }
        issues
    }

    /// The same map with half-edges renamed by `perm` (`h ↦ perm[h]`).
    pub fn relabel_half_edges(&self, perm: &[usize]) -> Result<Self> {
        let hcount = self.half_edge_count();
        let mut seen = vec![false; hcount];
        if perm.len() != hcount
            || perm
                .iter()
                .any(|&p| p >= hcount || core::mem::replace(&mut seen[p], true))
        {
            return Err(Error::MalformedMap(
                "relabelling is not a permutation".into(),
            ));
        }
        let mut origin = vec![0; hcount];
        let mut twin = vec![0; hcount];
        let mut next = vec![0; hcount];
        for h in 0..hcount {
            origin[perm[h]] = self.origin[h];
            twin[perm[h]] = perm[self.twin[h]];
            next[perm[h]] = perm[self.next[h]];
        }
        CombinatorialMap::from_raw(origin, twin, next, perm[self.root])
    }
}

/// A rooted triangulation of size `n`.
///
/// Internal vertices are `0..n`; the outer vertices are `v0 = n`, `v1 = n+1`,
/// `v2 = n+2`. The root is the half-edge `v0 → v1` and the root face is the
/// corner from `v0 → v1` clockwise to `v0 → v2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    map: CombinatorialMap,
    n: usize,
}

impl Triangulation {
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self> {
        if rotations.len() < 3 {
            return Err(Error::MalformedMap("fewer than three vertices".into()));
        }
        let n = rotations.len() - 3;
        let map = CombinatorialMap::from_rotations(rotations, (n, n + 1))?;
        Triangulation::from_map(map)
    }

    pub fn from_map(map: CombinatorialMap) -> Result<Self> {
        if map.vertex_count() < 3 {
            return Err(Error::MalformedMap("fewer than three vertices".into()));
        }
        let n = map.vertex_count() - 3;
        let t = Triangulation { map, n };
        let issues = t.check();
        if !issues.is_empty() {
            return Err(Error::MalformedMap(issues.join("; ")));
        }
        Ok(t)
    }

    /// The bare outer triangle.
    pub fn triangle() -> Self {
        Triangulation::from_rotations(&[vec![1, 2], vec![2, 0], vec![0, 1]])
            .expect("triangle is valid")
    }

    fn check(&self) -> Vec<String> {
        let mut issues = self.map.check_simple_planar();
        let (v0, v1, v2) = (self.v0(), self.v1(), self.v2());
        let m = &self.map;
        if m.origin(m.root()) != v0 || m.target(m.root()) != v1 {
            issues.push("root is not v0 -> v1".into());
        }
        if m.target(m.next(m.root())) != v2 {
            issues.push("root face is not (v0, v1, v2)".into());
        }
        for (k, face) in m.faces().iter().enumerate() {
            if face.len() != 3 {
                issues.push(format!("face {k} has degree {}", face.len()));
            }
        }
        if m.edge_count() != 3 * self.n + 3 {
            issues.push(format!(
                "{} edges, expected {}",
                m.edge_count(),
                3 * self.n + 3
            ));
        }
        issues
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    /// Number of internal vertices.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn v0(&self) -> usize {
        self.n
    }

    pub fn v1(&self) -> usize {
        self.n + 1
    }

    pub fn v2(&self) -> usize {
        self.n + 2
    }

    /// `v_i` for `i ∈ {0, 1, 2}`.
    pub fn outer(&self, i: usize) -> usize {
        self.n + i
    }

    pub fn is_internal(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn is_external_edge(&self, h: usize) -> bool {
        !self.is_internal(self.map.origin(h)) && !self.is_internal(self.map.target(h))
    }

    /// Removes an internal vertex of degree 3; remaining internal vertices
    /// keep their relative order. Returns the new triangulation and the
    /// old-to-new vertex relabelling.
    pub fn remove_degree3(&self, v: usize) -> Result<(Triangulation, Vec<Option<usize>>)> {
        if !self.is_internal(v) || self.map.degree(v) != 3 {
            return Err(Error::NotDegreeThree { vertex: v });
        }
        let relabel: Vec<Option<usize>> = (0..self.map.vertex_count())
            .map(|x| match x.cmp(&v) {
                core::cmp::Ordering::Less => Some(x),
                core::cmp::Ordering::Equal => None,
                core::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let rotations: Vec<Vec<usize>> = self
            .map
            .rotations()
            .into_iter()
            .enumerate()
            .filter(|&(x, _)| x != v)
            .map(|(_, rot)| rot.into_iter().filter_map(|w| relabel[w]).collect())
            .collect();
        Ok((Triangulation::from_rotations(&rotations)?, relabel))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Triangulation {
        // u = 0, v0 = 1, v1 = 2, v2 = 3
        Triangulation::from_rotations(&[vec![1, 3, 2], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]])
            .unwrap()
    }

    #[test]
    fn triangle_and_k4_are_triangulations() {
        let t = Triangulation::triangle();
        assert_eq!(t.size(), 0);
        assert_eq!(t.map().faces().len(), 2);
        let k = k4();
        assert_eq!(k.size(), 1);
        assert_eq!(k.map().faces().len(), 4);
        assert_eq!(k.map().edge_count(), 6);
        assert!(k.map().check_simple_planar().is_empty());
    }

    #[test]
    fn rejects_malformed_rotations() {
        assert!(CombinatorialMap::from_rotations(&[vec![0]], (0, 0)).is_err());
        assert!(CombinatorialMap::from_rotations(&[vec![1, 1], vec![0]], (0, 1)).is_err());
        assert!(CombinatorialMap::from_rotations(&[vec![1], vec![]], (0, 1)).is_err());
        // mirrored K4 has a root face that is not (v0, v1, v2)
        assert!(Triangulation::from_rotations(&[
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1]
        ])
        .is_err());
    }

    #[test]
    fn raw_structure_checks() {
        let k = k4();
        let m = k.map();
        let mut twin: Vec<usize> = (0..m.half_edge_count()).map(|h| m.twin(h)).collect();
        let origin: Vec<usize> = (0..m.half_edge_count()).map(|h| m.origin(h)).collect();
        let next: Vec<usize> = (0..m.half_edge_count()).map(|h| m.next(h)).collect();
        assert!(
            CombinatorialMap::from_raw(origin.clone(), twin.clone(), next.clone(), m.root())
                .is_ok()
        );
        twin.swap(0, 1);
        assert!(CombinatorialMap::from_raw(origin.clone(), twin, next.clone(), m.root()).is_err());
        let mut bad_next = next.clone();
        bad_next[0] = bad_next[1];
        let twin: Vec<usize> = (0..m.half_edge_count()).map(|h| m.twin(h)).collect();
        assert!(CombinatorialMap::from_raw(origin, twin, bad_next, m.root()).is_err());
    }

    #[test]
    fn remove_the_only_internal_vertex() {
        let (t, relabel) = k4().remove_degree3(0).unwrap();
        assert_eq!(t.size(), 0);
        assert_eq!(relabel, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(
            k4().remove_degree3(1),
            Err(Error::NotDegreeThree { vertex: 1 })
        );
    }

    #[test]
    fn relabel_round_trip() {
        let k = k4();
        let m = k.map();
        let hc = m.half_edge_count();
        let perm: Vec<usize> = (0..hc).map(|h| (h + 5) % hc).collect();
        let r = m.relabel_half_edges(&perm).unwrap();
        let norm = |rots: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            rots.into_iter()
                .map(|mut rot| {
                    let k = (0..rot.len()).min_by_key(|&k| rot[k]).unwrap();
                    rot.rotate_left(k);
                    rot
                })
                .collect()
        };
        assert_eq!(norm(r.rotations()), norm(m.rotations()));
        assert_eq!(r.faces().len(), m.faces().len());
    }
}
