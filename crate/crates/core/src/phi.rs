//! The bijection `Φ` from Stanley intervals `(P, Q)` to realizers, and its
//! inverse `Ψ`.
//!
//! `Φ` glues 1-tails and 1-heads around the tree `T̄0 = ω⁻¹(P)` plus `v1`,
//! matches them like parentheses to get `T1`, then completes `T2` from the
//! corner types of the resulting map.
//!
//! Heads are indexed like the descents of `Q = NS^{β_1}…NS^{β_n}`: `u_i`
//! receives `β_i` heads for `1 ≤ i < n`, `v1` receives `β_n`, and `u_0`
//! receives none.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalan::PlaneTree;
use crate::dyck::{DyckPath, PathPairDelta};
use crate::error::{Error, Result};
use crate::lattice::deltas_increase_along_tree;
use crate::map::{CombinatorialMap, Triangulation};
use crate::realizer::{Color, Mark, Realizer};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TourEvent {
    /// First arrival at a vertex.
    Enter(usize),
    /// A 1-head glued at the vertex.
    Head(usize),
    /// The 1-tail glued at the vertex.
    Tail(usize),
    /// Final departure from a vertex.
    Leave(usize),
}

/// Clockwise tour of `T̄0` annotated with glued tails and heads.
/// Vertex ids: `u_i = i`, `v0 = n`, `v1 = n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueTour {
    n: usize,
    events: Vec<TourEvent>,
}

impl GlueTour {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> &[TourEvent] {
        &self.events
    }

    /// Tails read as `N` and heads as `S`.
    pub fn word(&self) -> String {
        self.events
            .iter()
            .filter_map(|e| match e {
                TourEvent::Tail(_) => Some('N'),
                TourEvent::Head(_) => Some('S'),
                _ => None,
            })
            .collect()
    }
}

fn check_pair(p: &DyckPath, q: &DyckPath) -> Result<()> {
    if let Some(index) = PathPairDelta::new(p, q)?.first_negative() {
        return Err(Error::NotStanleyInterval { index });
    }
    Ok(())
}

/// Tours `T̄0 = ω⁻¹(P) + v1`, gluing `β_i` heads in the first corner of `u_i`
/// and a tail in the last corner of every internal vertex. At a leaf the
/// heads come before the tail.
pub fn glue_step(p: &DyckPath, q: &DyckPath) -> Result<GlueTour> {
    check_pair(p, q)?;
    let n = p.size();
    let beta = q.descents();
    let (v0, v1) = (n, n + 1);
    let mut events = vec![TourEvent::Enter(v0)];
    let mut open: Vec<usize> = Vec::new();
    for (u, &a) in p.descents().iter().enumerate() {
        events.push(TourEvent::Enter(u));
        if u > 0 {
            events.extend(core::iter::repeat_n(TourEvent::Head(u), beta[u - 1]));
        }
        open.push(u);
        for _ in 0..a {
            let done = open.pop().expect("Dyck path");
            events.push(TourEvent::Tail(done));
            events.push(TourEvent::Leave(done));
        }
    }
    events.push(TourEvent::Enter(v1));
    events.extend(core::iter::repeat_n(TourEvent::Head(v1), beta[n - 1]));
    events.push(TourEvent::Leave(v1));
    events.push(TourEvent::Leave(v0));
    Ok(GlueTour { n, events })
}

/// The two trees `T0`, `T1` drawn on `T̄0`, before `T2` is added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prerealizer {
    tour: GlueTour,
    p0: Vec<usize>,
    p1: Vec<usize>,
    /// Tour index of each vertex's tail and of the head matched to it.
    matched: Vec<(usize, usize)>,
    map: CombinatorialMap,
    marks: Vec<Mark>,
}

/// Matches tails and heads of the tour with a stack (each head closes the
/// most recent open tail), giving `p1`.
pub fn match_parentheses(tour: &GlueTour) -> Result<Prerealizer> {
    let n = tour.n;
    let (v0, v1) = (n, n + 1);
    let unbalanced =
        || Error::InvalidRealizer(format!("tour word {} is not a Dyck word", tour.word()));
    let mut p0 = vec![usize::MAX; n];
    let mut p1 = vec![usize::MAX; n];
    let mut matched = vec![(0, 0); n];
    let mut path: Vec<usize> = Vec::new();
    let mut tails: Vec<usize> = Vec::new();
    for (k, &e) in tour.events.iter().enumerate() {
        match e {
            TourEvent::Enter(x) => {
                if x < n {
                    p0[x] = *path.last().ok_or_else(unbalanced)?;
                }
                path.push(x);
            }
            TourEvent::Leave(_) => {
                path.pop();
            }
            TourEvent::Tail(x) => {
                matched[x].0 = k;
                tails.push(x);
            }
            TourEvent::Head(x) => {
                let t = tails.pop().ok_or_else(unbalanced)?;
                p1[t] = x;
                matched[t].1 = k;
            }
        }
    }
    if !tails.is_empty() {
        return Err(unbalanced());
    }

    // clockwise rotations of N̄ = T̄0 ∪ T1, read off in tour order
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for u in 0..n {
        rotations[u].push(p0[u]);
    }
    rotations[v1].push(v0);
    let mut head_sources = vec![Vec::new(); n + 2];
    for t in 0..n {
        head_sources[p1[t]].push(t);
    }
    for h in head_sources.iter_mut() {
        h.sort_by_key(|&t| matched[t].1);
    }
    let mut head_cursor = vec![0usize; n + 2];
    let mut parent_stack: Vec<usize> = Vec::new();
    for &e in &tour.events {
        match e {
            TourEvent::Enter(x) => {
                if let Some(&par) = parent_stack.last() {
                    rotations[par].push(x);
                }
                parent_stack.push(x);
            }
            TourEvent::Leave(_) => {
                parent_stack.pop();
            }
            TourEvent::Head(x) => {
                let t = head_sources[x][head_cursor[x]];
                head_cursor[x] += 1;
                rotations[x].push(t);
            }
            TourEvent::Tail(x) => rotations[x].push(p1[x]),
        }
    }
    let map = CombinatorialMap::from_rotations(&rotations, (v0, v1))?;
    let mut marks = vec![Mark::Outer; map.half_edge_count()];
    for u in 0..n {
        for (c, parent) in [(Color::Zero, p0[u]), (Color::One, p1[u])] {
            let h = map
                .half_edge(u, parent)
                .ok_or_else(|| Error::InvalidRealizer(format!("missing edge {u}-{parent}")))?;
            marks[h] = Mark::Tail(c);
            marks[map.twin(h)] = Mark::Head(c);
        }
    }
    Ok(Prerealizer {
        tour: tour.clone(),
        p0,
        p1,
        matched,
        map,
        marks,
    })
}

/// Classification of a corner of the prerealizer map by the marks of its
/// two bounding half-edges, in clockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerKind {
    /// `(h1,h0)`, `(h1,t1)`, `(t0,h0)` or `(t0,t1)`: receives a 2-tail.
    TwoTail,
    /// `(t1,t0)`: receives the 2-heads of its face.
    TwoHeads,
    Other,
}

fn corner_kind(a: Mark, b: Mark) -> CornerKind {
    use Color::{One, Zero};
    match (a, b) {
        (Mark::Head(One), Mark::Head(Zero))
        | (Mark::Head(One), Mark::Tail(One))
        | (Mark::Tail(Zero), Mark::Head(Zero))
        | (Mark::Tail(Zero), Mark::Tail(One)) => CornerKind::TwoTail,
        (Mark::Tail(One), Mark::Tail(Zero)) => CornerKind::TwoHeads,
        _ => CornerKind::Other,
    }
}

/// Per-face corner statistics gathered while completing `T2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerCensus {
    /// Number of `(t1,t0)` corners in each internal face.
    pub two_head_corners: Vec<usize>,
    /// Number of 2-tail corners at each internal vertex.
    pub two_tail_corners: Vec<usize>,
}

impl Prerealizer {
    pub fn size(&self) -> usize {
        self.tour.n
    }

    pub fn tour(&self) -> &GlueTour {
        &self.tour
    }

    pub fn p0(&self) -> &[usize] {
        &self.p0
    }

    pub fn p1(&self) -> &[usize] {
        &self.p1
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    /// Violations of the tree, corner and order conditions and of planarity.
    pub fn check(&self) -> Vec<String> {
        let n = self.size();
        let v1 = n + 1;
        let mut issues = self.map.check_simple_planar();
        for u in 0..n {
            let mut x = u;
            let mut steps = 0;
            while x < n && steps <= n {
                x = self.p1[x];
                steps += 1;
            }
            if x != v1 {
                issues.push(format!("1-parents of {u} do not reach v1"));
            }
            let rot = self.map.rotation(u);
            let marks: Vec<Mark> = rot.iter().map(|&h| self.marks[h]).collect();
            let start = marks.iter().position(|&m| m == Mark::Tail(Color::Zero));
            let ok = start.is_some_and(|s| {
                let seq: Vec<Mark> = (1..marks.len())
                    .map(|k| marks[(s + k) % marks.len()])
                    .collect();
                let heads1 = seq
                    .iter()
                    .take_while(|&&m| m == Mark::Head(Color::One))
                    .count();
                let heads0 = seq[heads1..]
                    .iter()
                    .take_while(|&&m| m == Mark::Head(Color::Zero))
                    .count();
                heads1 + heads0 + 1 == seq.len() && seq[seq.len() - 1] == Mark::Tail(Color::One)
            });
            if !ok {
                issues.push(format!("corner condition fails at {u}"));
            }
            let (t, h) = self.matched[u];
            if t >= h {
                issues.push(format!("1-tail of {u} does not precede its head"));
            }
        }
        issues
    }

    /// Classifies every corner of the map.
    pub fn corner_kinds(&self) -> Vec<CornerKind> {
        let n = self.size();
        (0..self.map.half_edge_count())
            .map(|c| {
                if self.map.origin(c) < n {
                    corner_kind(self.marks[c], self.marks[self.map.next(c)])
                } else {
                    CornerKind::Other
                }
            })
            .collect()
    }
}

/// Adds `T2`: a 2-tail in every 2-tail corner, joined to the vertex of the
/// unique `(t1,t0)` corner of its face, or to `v2` in the outer face.
pub fn complete_t2(pr: &Prerealizer) -> Result<(Realizer, CornerCensus)> {
    let n = pr.size();
    let (v0, v1, v2) = (n, n + 1, n + 2);
    let map = &pr.map;
    let kinds = pr.corner_kinds();
    let faces = map.faces();
    let root_face = 0;
    debug_assert!(faces[root_face].contains(&map.root()));

    let mut two_tail_corners = vec![0usize; n];
    for (c, &k) in kinds.iter().enumerate() {
        if k == CornerKind::TwoTail {
            two_tail_corners[map.origin(c)] += 1;
        }
    }
    if let Some(u) = two_tail_corners.iter().position(|&k| k != 1) {
        return Err(Error::CornerClassification(format!(
            "vertex {u} has {} 2-tail corners",
            two_tail_corners[u]
        )));
    }

    let mut p2 = vec![usize::MAX; n];
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); map.half_edge_count()];
    let mut two_head_corners = Vec::new();
    let mut outer_walk = Vec::new();
    for (f, face) in faces.iter().enumerate() {
        if f == root_face {
            // walk from the root corner at v0 to the outer corner at v1
            for &c in face {
                if kinds[c] == CornerKind::TwoTail {
                    p2[map.origin(c)] = v2;
                    after[c].push(v2);
                    outer_walk.push(map.origin(c));
                }
            }
            let last = *face.last().expect("non-empty face");
            if map.origin(last) != v1 {
                return Err(Error::CornerClassification(
                    "outer face does not end at v1".into(),
                ));
            }
            after[face[0]].push(v2);
            after[last].push(v2);
            continue;
        }
        let heads: Vec<usize> = (0..face.len())
            .filter(|&k| kinds[face[k]] == CornerKind::TwoHeads)
            .collect();
        two_head_corners.push(heads.len());
        if heads.len() != 1 {
            return Err(Error::CornerClassification(format!(
                "internal face has {} (t1,t0) corners",
                heads.len()
            )));
        }
        let c1 = face[heads[0]];
        let w = map.origin(c1);
        let mut walk = Vec::new();
        for k in 1..face.len() {
            let c = face[(heads[0] + k) % face.len()];
            if kinds[c] == CornerKind::TwoTail {
                let x = map.origin(c);
                p2[x] = w;
                after[c].push(w);
                walk.push(x);
            }
        }
        walk.reverse();
        after[c1] = walk;
    }

    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n + 3];
    for (x, rot) in rotations.iter_mut().enumerate().take(n + 2) {
        for h in map.rotation(x) {
            rot.push(map.target(h));
            rot.extend_from_slice(&after[h]);
        }
    }
    rotations[v2].push(v1);
    rotations[v2].extend(outer_walk.iter().rev());
    rotations[v2].push(v0);

    let tri = Triangulation::from_rotations(&rotations)
        .map_err(|e| Error::CornerClassification(format!("{e}")))?;
    let realizer = Realizer::from_parents(tri, [pr.p0.clone(), pr.p1.clone(), p2])?;
    Ok((
        realizer,
        CornerCensus {
            two_head_corners,
            two_tail_corners,
        },
    ))
}

/// The prerealizer of `(P, Q)`.
pub fn prerealizer(p: &DyckPath, q: &DyckPath) -> Result<Prerealizer> {
    match_parentheses(&glue_step(p, q)?)
}

/// `Φ(P, Q)` for `P ≤_S Q`. The output is validated in debug builds.
pub fn phi(p: &DyckPath, q: &DyckPath) -> Result<Realizer> {
    phi_checked(p, q, cfg!(debug_assertions))
}

/// `Φ(P, Q)`, validating the result when `validate` is set.
pub fn phi_checked(p: &DyckPath, q: &DyckPath, validate: bool) -> Result<Realizer> {
    let (r, _) = complete_t2(&prerealizer(p, q)?)?;
    if validate {
        let report = r.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidRealizer(format!("{v}")));
        }
    }
    Ok(r)
}

/// `Ψ(R) = (ω(T0), NS^{β_1}…NS^{β_n})` where `β_i` counts the 1-heads at
/// `u_i` (and `β_n` those at `v1`), internal vertices taken in clockwise
/// order around `T0`.
pub fn psi(r: &Realizer) -> Result<(DyckPath, DyckPath)> {
    let n = r.size();
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    let report = r.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRealizer(format!("{v}")));
    }
    let tour = r.tour()?;
    let tri = r.triangulation();
    fn build(x: usize, children: &[Vec<usize>], skip: usize) -> PlaneTree {
        PlaneTree::node(
            children[x]
                .iter()
                .filter(|&&c| c != skip)
                .map(|&c| build(c, children, skip))
                .collect(),
        )
    }
    let t0 = build(tri.v0(), &tour.children, tri.v1());
    let p = t0.omega()?;
    let map = tri.map();
    let heads = |x: usize| {
        map.rotation(x)
            .into_iter()
            .filter(|&h| r.mark(h) == Mark::Head(Color::One))
            .count()
    };
    // order = v0, u_0, …, u_{n−1}, v1
    if heads(tour.order[1]) != 0 {
        return Err(Error::InvalidRealizer("u0 carries 1-heads".into()));
    }
    let beta: Vec<usize> = tour.order[2..].iter().map(|&x| heads(x)).collect();
    let q = DyckPath::from_descents(beta).map_err(|e| Error::InvalidRealizer(format!("{e}")))?;
    Ok((p, q))
}

/// Number of 1-tails glued before the first corner of `u_i` whose head lies
/// strictly after that corner.
pub fn available_tails(p: &DyckPath, q: &DyckPath, i: usize) -> Result<usize> {
    let n = p.size();
    if i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
        });
    }
    let pr = prerealizer(p, q)?;
    let events = pr.tour.events();
    let enter = events
        .iter()
        .position(|&e| e == TourEvent::Enter(i))
        .expect("every vertex is entered");
    let corner_end = enter
        + events[enter + 1..]
            .iter()
            .take_while(|&&e| e == TourEvent::Head(i))
            .count();
    Ok(pr
        .matched
        .iter()
        .filter(|&&(t, h)| t < enter && h > corner_end)
        .count())
}

/// Whether `Φ(P, Q)` is minimal, read off the paths: `δ_i ≤ δ_j` whenever
/// `u_i` is the parent of `u_j` in `ω⁻¹(P)`.
pub fn minimality_from_paths(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    check_pair(p, q)?;
    Ok(deltas_increase_along_tree(p, q))
}
