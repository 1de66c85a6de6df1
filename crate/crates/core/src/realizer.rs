//! Realizers (Schnyder woods): a colouring and orientation of the internal
//! edges of a triangulation into three trees `T0`, `T1`, `T2`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::map::Triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Zero,
    One,
    Two,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Zero, Color::One, Color::Two];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Color> {
        Color::ALL.get(i).copied()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Role of a half-edge: the tail (child end) or head (parent end) of a
/// coloured edge, or one half of an outer edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    Tail(Color),
    Head(Color),
    Outer,
}

impl Mark {
    /// Stable one-byte encoding used by canonical codes.
    pub fn code(self) -> u8 {
        match self {
            Mark::Tail(c) => c.index() as u8,
            Mark::Head(c) => 3 + c.index() as u8,
            Mark::Outer => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Map(String),
    /// An internal vertex without exactly one tail of this colour.
    TailCount {
        vertex: usize,
        color: Color,
        count: usize,
    },
    /// An outer vertex with an outgoing coloured edge.
    OuterTail {
        vertex: usize,
        color: Color,
    },
    /// An outer vertex `v_j` receiving an edge of colour other than `j`.
    OuterHead {
        vertex: usize,
        color: Color,
    },
    /// Following `p_color` from `vertex` never reaches `v_color`.
    NotATree {
        vertex: usize,
        color: Color,
    },
    /// The clockwise pattern of tails and heads is wrong.
    Schnyder {
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Map(s) => write!(f, "map: {s}"),
            Violation::TailCount {
                vertex,
                color,
                count,
            } => {
                write!(f, "vertex {vertex} has {count} tails of color {color}")
            }
            Violation::OuterTail { vertex, color } => {
                write!(f, "outer vertex {vertex} has a {color}-tail")
            }
            Violation::OuterHead { vertex, color } => {
                write!(f, "outer vertex {vertex} has a {color}-head")
            }
            Violation::NotATree { vertex, color } => {
                write!(
                    f,
                    "{color}-parents of vertex {vertex} do not lead to v{color}"
                )
            }
            Violation::Schnyder { vertex } => {
                write!(f, "clockwise pattern violated at vertex {vertex}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Clockwise tour of `T̄0` (the tree `T0` with `v1` hung to the right of `v0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tour {
    /// Vertices in order of first visit: `v0`, the internal vertices, `v1`.
    pub order: Vec<usize>,
    /// `T̄0` children of each vertex, left to right.
    pub children: Vec<Vec<usize>>,
    /// Time at which each half-edge is passed; `usize::MAX` for parent edges
    /// and for `v0 → v2`.
    pub position: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    tri: Triangulation,
    marks: Vec<Mark>,
    parents: [Vec<Option<usize>>; 3],
}

impl Realizer {
    /// Wraps per-half-edge marks. Outer edges must be `Outer` on both sides
    /// and every internal edge must be a tail and a head of one colour; the
    /// Schnyder axioms are checked by [`Realizer::validate`].
    pub fn new(tri: Triangulation, marks: Vec<Mark>) -> Result<Self> {
        let map = tri.map();
        if marks.len() != map.half_edge_count() {
            return Err(Error::InvalidRealizer(
                "one mark per half-edge expected".into(),
            ));
        }
        for h in 0..map.half_edge_count() {
            let t = map.twin(h);
            let ok = match (marks[h], marks[t]) {
                (Mark::Outer, Mark::Outer) => tri.is_external_edge(h),
                (Mark::Tail(a), Mark::Head(b)) | (Mark::Head(b), Mark::Tail(a)) => {
                    a == b && !tri.is_external_edge(h)
                }
                _ => false,
            };
            if !ok {
                return Err(Error::InvalidRealizer(format!(
                    "edge {}-{} is not marked consistently",
                    map.origin(h),
                    map.target(h)
                )));
            }
        }
        let n = tri.size();
        let mut parents = [vec![None; n], vec![None; n], vec![None; n]];
        let mut counts = vec![[0usize; 3]; n];
        for (h, &m) in marks.iter().enumerate() {
            if let Mark::Tail(c) = m {
                let u = map.origin(h);
                if u < n {
                    counts[u][c.index()] += 1;
                    parents[c.index()][u] = Some(map.target(h));
                }
            }
        }
        for (u, cnt) in counts.iter().enumerate() {
            for c in 0..3 {
                if cnt[c] != 1 {
                    parents[c][u] = None;
                }
            }
        }
        Ok(Realizer {
            tri,
            marks,
            parents,
        })
    }

    /// Builds the marks from parent arrays `p0, p1, p2` over internal vertices.
    pub fn from_parents(tri: Triangulation, parents: [Vec<usize>; 3]) -> Result<Self> {
        let n = tri.size();
        let map = tri.map();
        let mut marks: Vec<Option<Mark>> = vec![None; map.half_edge_count()];
        for (h, m) in marks.iter_mut().enumerate() {
            if tri.is_external_edge(h) {
                *m = Some(Mark::Outer);
            }
        }
        for (ci, p) in parents.iter().enumerate() {
            if p.len() != n {
                return Err(Error::InvalidRealizer(format!(
                    "p{ci} has length {}, expected {n}",
                    p.len()
                )));
            }
            let c = Color::ALL[ci];
            for (u, &v) in p.iter().enumerate() {
                let h = map.half_edge(u, v).ok_or_else(|| {
                    Error::InvalidRealizer(format!("p{ci}({u}) = {v} is not a neighbour"))
                })?;
                let t = map.twin(h);
                if marks[h].is_some() || marks[t].is_some() {
                    return Err(Error::InvalidRealizer(format!(
                        "edge {u}-{v} coloured twice"
                    )));
                }
                marks[h] = Some(Mark::Tail(c));
                marks[t] = Some(Mark::Head(c));
            }
        }
        let marks = marks
            .into_iter()
            .enumerate()
            .map(|(h, m)| {
                m.ok_or_else(|| {
                    Error::InvalidRealizer(format!(
                        "edge {}-{} is not coloured",
                        map.origin(h),
                        map.target(h)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Realizer::new(tri, marks)
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn size(&self) -> usize {
        self.tri.size()
    }

    pub fn mark(&self, h: usize) -> Mark {
        self.marks[h]
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    /// `p_c(u)`, if `u` has exactly one `c`-tail.
    pub fn parent(&self, c: Color, u: usize) -> Option<usize> {
        self.parents[c.index()].get(u).copied().flatten()
    }

    /// `p_c(u)` on a valid realizer.
    fn p(&self, c: Color, u: usize) -> usize {
        self.parent(c, u).expect("valid realizer")
    }

    /// Parent arrays `p0, p1, p2`; `None` where the tail count is not one.
    pub fn parent_arrays(&self) -> &[Vec<Option<usize>>; 3] {
        &self.parents
    }

    /// Checks the tree condition, the clockwise condition and the map
    /// invariants, listing every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let tri = &self.tri;
        let map = tri.map();
        let n = tri.size();
        for issue in map.check_simple_planar() {
            violations.push(Violation::Map(issue));
        }
        for (k, face) in map.faces().iter().enumerate() {
            if face.len() != 3 {
                violations.push(Violation::Map(format!(
                    "face {k} has degree {}",
                    face.len()
                )));
            }
        }
        let mut counts = vec![[0usize; 3]; n + 3];
        for (h, &m) in self.marks.iter().enumerate() {
            let x = map.origin(h);
            match m {
                Mark::Tail(c) => {
                    if x < n {
                        counts[x][c.index()] += 1;
                    } else {
                        violations.push(Violation::OuterTail {
                            vertex: x,
                            color: c,
                        });
                    }
                }
                Mark::Head(c) if x >= n && x != tri.outer(c.index()) => {
                    violations.push(Violation::OuterHead {
                        vertex: x,
                        color: c,
                    });
                }
                _ => {}
            }
        }
        for (u, cnt) in counts.iter().take(n).enumerate() {
            for c in Color::ALL {
                if cnt[c.index()] != 1 {
                    violations.push(Violation::TailCount {
                        vertex: u,
                        color: c,
                        count: cnt[c.index()],
                    });
                }
            }
        }
        for c in Color::ALL {
            let target = tri.outer(c.index());
            // 0 = unknown, 1 = on the current walk, 2 = reaches the root
            let mut state = vec![0u8; n];
            for start in 0..n {
                let mut walk = Vec::new();
                let mut x = start;
                let reached = loop {
                    if x == target {
                        break true;
                    }
                    if x >= n || state[x] == 1 {
                        break false;
                    }
                    if state[x] == 2 {
                        break true;
                    }
                    state[x] = 1;
                    walk.push(x);
                    match self.parent(c, x) {
                        Some(y) => x = y,
                        None => break false,
                    }
                };
                for &w in &walk {
                    state[w] = if reached { 2 } else { 0 };
                }
                if !reached {
                    violations.push(Violation::NotATree {
                        vertex: start,
                        color: c,
                    });
                }
            }
        }
        for u in 0..n {
            if !self.schnyder_at(u) {
                violations.push(Violation::Schnyder { vertex: u });
            }
        }
        ValidationReport { violations }
    }

    /// Clockwise from the 0-tail: 1-heads, the 2-tail, 0-heads, the 1-tail,
    /// 2-heads.
    fn schnyder_at(&self, u: usize) -> bool {
        let rot = self.tri.map().rotation(u);
        let Some(start) = rot
            .iter()
            .position(|&h| self.marks[h] == Mark::Tail(Color::Zero))
        else {
            return false;
        };
        let expected = [
            (Mark::Head(Color::One), true),
            (Mark::Tail(Color::Two), false),
            (Mark::Head(Color::Zero), true),
            (Mark::Tail(Color::One), false),
            (Mark::Head(Color::Two), true),
        ];
        let mut stage = 0;
        for k in 1..rot.len() {
            let m = self.marks[rot[(start + k) % rot.len()]];
            loop {
                if stage >= expected.len() {
                    return false;
                }
                let (want, repeat) = expected[stage];
                if m == want {
                    if !repeat {
                        stage += 1;
                    }
                    break;
                }
                if repeat {
                    stage += 1;
                } else {
                    return false;
                }
            }
        }
        // both remaining single tails must have been seen
        while stage < expected.len() && expected[stage].1 {
            stage += 1;
        }
        stage >= 4
    }

    /// Triples `(u, v, w)` with `p0(u) = v`, `p2(v) = w`, `p1(w) = u`.
    pub fn find_cw_triangles(&self) -> Vec<(usize, usize, usize)> {
        self.triangles(Color::Two, Color::One)
    }

    /// Triples `(u, v, w)` with `p0(u) = v`, `p1(v) = w`, `p2(w) = u`.
    pub fn find_ccw_triangles(&self) -> Vec<(usize, usize, usize)> {
        self.triangles(Color::One, Color::Two)
    }

    fn triangles(&self, second: Color, third: Color) -> Vec<(usize, usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for u in 0..n {
            let v = self.p(Color::Zero, u);
            if v >= n {
                continue;
            }
            let w = self.p(second, v);
            if w < n && self.p(third, w) == u {
                out.push((u, v, w));
            }
        }
        out
    }

    pub fn is_minimal(&self) -> bool {
        self.find_cw_triangles().is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.find_ccw_triangles().is_empty()
    }

    /// Minimality through ancestry: `p0(p1(u))` is a `T0`-ancestor of every
    /// internal `u`, taking `p0(v1) = v0`.
    pub fn is_minimal_by_ancestors(&self) -> bool {
        let n = self.size();
        let v0 = self.tri.v0();
        (0..n).all(|u| {
            let a = self.p(Color::One, u);
            let x = if a < n { self.p(Color::Zero, a) } else { v0 };
            let mut y = self.p(Color::Zero, u);
            loop {
                if y == x {
                    return true;
                }
                if y >= n {
                    return false;
                }
                y = self.p(Color::Zero, y);
            }
        })
    }

    /// At every internal `u`, `p0(p1(u)) = p0(u)` or `p1(p0(u)) = p1(u)`,
    /// taking `p0(v1) = v0` and `p1(v0) = v1`.
    pub fn is_min_and_max(&self) -> bool {
        let n = self.size();
        let (v0, v1) = (self.tri.v0(), self.tri.v1());
        let p0 = |x: usize| {
            if x < n {
                self.p(Color::Zero, x)
            } else if x == v1 {
                v0
            } else {
                usize::MAX
            }
        };
        let p1 = |x: usize| {
            if x < n {
                self.p(Color::One, x)
            } else if x == v0 {
                v1
            } else {
                usize::MAX
            }
        };
        (0..n).all(|u| p0(p1(u)) == p0(u) || p1(p0(u)) == p1(u))
    }

    /// Restriction to the triangulation without the internal degree-3 vertex `v`.
    pub fn remove_degree3(&self, v: usize) -> Result<Realizer> {
        let (tri, relabel) = self.tri.remove_degree3(v)?;
        let mut back = vec![0; tri.map().vertex_count()];
        for (old, new) in relabel.iter().enumerate() {
            if let Some(new) = *new {
                back[new] = old;
            }
        }
        let old = self.tri.map();
        let marks = (0..tri.map().half_edge_count())
            .map(|h| {
                let from = back[tri.map().origin(h)];
                let to = back[tri.map().target(h)];
                self.marks[old.half_edge(from, to).expect("edge survives removal")]
            })
            .collect();
        Realizer::new(tri, marks)
    }

    /// Clockwise tour of `T̄0` starting in the root corner.
    pub fn tour(&self) -> Result<Tour> {
        let tri = &self.tri;
        let map = tri.map();
        let (v0, v1) = (tri.v0(), tri.v1());
        let mut order = vec![v0];
        let mut children = vec![Vec::new(); map.vertex_count()];
        let mut position = vec![usize::MAX; map.half_edge_count()];
        let mut visited = vec![false; map.vertex_count()];
        visited[v0] = true;
        let entry = map.next(map.root());
        let mut stack = vec![(v0, entry, map.next(entry))];
        let mut time = 0;
        while let Some(top) = stack.last_mut() {
            let (x, e, cur) = *top;
            if cur == e {
                stack.pop();
                continue;
            }
            top.2 = map.next(cur);
            position[cur] = time;
            time += 1;
            let y = map.target(cur);
            let is_child = self.marks[cur] == Mark::Head(Color::Zero) || (x == v0 && y == v1);
            if is_child {
                if visited[y] {
                    return Err(Error::InvalidRealizer("T0 is not a tree".into()));
                }
                visited[y] = true;
                order.push(y);
                children[x].push(y);
                let back = map.twin(cur);
                stack.push((y, back, map.next(back)));
            }
        }
        if order.len() != tri.size() + 2 {
            return Err(Error::InvalidRealizer(
                "T0 does not span the internal vertices".into(),
            ));
        }
        Ok(Tour {
            order,
            children,
            position,
        })
    }

    /// 1-edges whose tail is not passed before their head around `T̄0`.
    pub fn tail_after_head_edges(&self) -> Result<Vec<(usize, usize)>> {
        let tour = self.tour()?;
        let map = self.tri.map();
        Ok((0..map.half_edge_count())
            .filter(|&h| self.marks[h] == Mark::Tail(Color::One))
            .filter(|&h| tour.position[h] >= tour.position[map.twin(h)])
            .map(|h| (map.origin(h), map.target(h)))
            .collect())
    }

    /// Simple cycles of length 3 and 4 where the number of tails incident
    /// with the cycle and strictly inside it differs from `length − 3`.
    /// Returns the offending cycles with the observed count.
    pub fn cycle_tail_violations(&self) -> Vec<(Vec<usize>, usize)> {
        let map = self.tri.map();
        let vc = map.vertex_count();
        let adj: Vec<Vec<usize>> = (0..vc).map(|v| map.neighbors(v)).collect();
        let adjacent = |a: usize, b: usize| adj[a].contains(&b);
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for a in 0..vc {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > a && c != b) {
                    if b < c && adjacent(c, a) {
                        cycles.push(vec![a, b, c]);
                    }
                    for &d in adj[c].iter().filter(|&&d| d > a && d != b && b < d) {
                        if adjacent(d, a) {
                            cycles.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        let (faces, fidx) = map.face_index();
        let root_face = fidx[map.root()];
        let mut out = Vec::new();
        for cycle in cycles {
            let len = cycle.len();
            let mut on_cycle = vec![false; map.half_edge_count()];
            for k in 0..len {
                let h = map
                    .half_edge(cycle[k], cycle[(k + 1) % len])
                    .expect("cycle edge");
                on_cycle[h] = true;
                on_cycle[map.twin(h)] = true;
            }
            let mut outside = vec![false; faces.len()];
            outside[root_face] = true;
            let mut queue = VecDeque::from([root_face]);
            while let Some(f) = queue.pop_front() {
                for &c in &faces[f] {
                    // the two half-edges bounding corner c
                    for h in [c, map.next(c)] {
                        if on_cycle[h] {
                            continue;
                        }
                        for g in [fidx[map.prev(h)], fidx[h]] {
                            if !outside[g] {
                                outside[g] = true;
                                queue.push_back(g);
                            }
                        }
                    }
                }
            }
            let inside_tails = cycle
                .iter()
                .flat_map(|&x| map.rotation(x))
                .filter(|&h| {
                    !on_cycle[h] && !outside[fidx[h]] && matches!(self.marks[h], Mark::Tail(_))
                })
                .count();
            if inside_tails != len - 3 {
                out.push((cycle, inside_tails));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Triangulation {
        Triangulation::from_rotations(&[vec![1, 3, 2], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]])
            .unwrap()
    }

    fn k4_realizer() -> Realizer {
        Realizer::from_parents(k4(), [vec![1], vec![2], vec![3]]).unwrap()
    }

    #[test]
    fn size_one_realizer_is_valid() {
        let r = k4_realizer();
        assert!(r.validate().is_valid(), "{:?}", r.validate());
        assert!(r.find_cw_triangles().is_empty());
        assert!(r.find_ccw_triangles().is_empty());
        assert!(r.is_minimal() && r.is_maximal() && r.is_min_and_max());
        assert!(r.is_minimal_by_ancestors());
        assert!(r.cycle_tail_violations().is_empty());
        assert!(r.tail_after_head_edges().unwrap().is_empty());
    }

    #[test]
    fn swapped_colours_break_the_clockwise_pattern() {
        let r = Realizer::from_parents(k4(), [vec![1], vec![3], vec![2]]).unwrap();
        let report = r.validate();
        assert!(
            report
                .violations
                .contains(&Violation::Schnyder { vertex: 0 }),
            "{report:?}"
        );
    }

    #[test]
    fn removal_gives_the_empty_realizer() {
        let r = k4_realizer().remove_degree3(0).unwrap();
        assert_eq!(r.size(), 0);
        assert!(r.validate().is_valid());
        assert!(k4_realizer().remove_degree3(2).is_err());
    }

    #[test]
    fn from_parents_rejects_non_neighbours_and_gaps() {
        let tri = Triangulation::triangle();
        assert!(Realizer::from_parents(tri, [vec![], vec![], vec![]]).is_ok());
        assert!(Realizer::from_parents(k4(), [vec![1], vec![1], vec![3]]).is_err());
        assert!(Realizer::from_parents(k4(), [vec![1], vec![2], vec![]]).is_err());
    }

    #[test]
    fn tour_of_size_one() {
        let t = k4_realizer().tour().unwrap();
        assert_eq!(t.order, vec![1, 0, 2]);
        assert_eq!(t.children[1], vec![0, 2]);
    }
}
