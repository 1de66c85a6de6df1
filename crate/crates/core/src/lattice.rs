//! The Stanley, Tamari and Kreweras lattices on Dyck paths of a fixed size.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::catalan::{tree_parents, NoncrossingPartition};
use crate::dyck::DyckPath;
use crate::error::{Error, Result};

/// Largest size accepted by [`IntervalStream`] unless overridden.
pub const DEFAULT_INTERVAL_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeKind {
    Stanley,
    Tamari,
    Kreweras,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 3] = [
        LatticeKind::Stanley,
        LatticeKind::Tamari,
        LatticeKind::Kreweras,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Stanley => "stanley",
            LatticeKind::Tamari => "tamari",
            LatticeKind::Kreweras => "kreweras",
        }
    }

    pub fn leq(self, p: &DyckPath, q: &DyckPath) -> Result<bool> {
        match self {
            LatticeKind::Stanley => leq_stanley(p, q),
            LatticeKind::Tamari => leq_tamari(p, q),
            LatticeKind::Kreweras => leq_kreweras(p, q),
        }
    }

    pub fn covers(self, p: &DyckPath) -> Vec<DyckPath> {
        match self {
            LatticeKind::Stanley => covers_stanley(p),
            LatticeKind::Tamari => covers_tamari(p),
            LatticeKind::Kreweras => covers_kreweras(p),
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "stanley" | "s" => Ok(LatticeKind::Stanley),
            "tamari" | "t" => Ok(LatticeKind::Tamari),
            "kreweras" | "k" => Ok(LatticeKind::Kreweras),
            _ => Err(Error::UnknownLattice(s.into())),
        }
    }
}

/// An ordered comparable pair in one of the lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lattice: LatticeKind,
    pub lower: DyckPath,
    pub upper: DyckPath,
}

impl Interval {
    pub fn new(lattice: LatticeKind, lower: DyckPath, upper: DyckPath) -> Result<Self> {
        if !lattice.leq(&lower, &upper)? {
            return Err(Error::NotComparable(lattice.name()));
        }
        Ok(Interval {
            lattice,
            lower,
            upper,
        })
    }
}

fn first_violation(p: &DyckPath, q: &DyckPath) -> Option<usize> {
    p.exceedences()
        .iter()
        .zip(q.exceedences())
        .position(|(a, b)| a > b)
}

fn check_sizes(p: &DyckPath, q: &DyckPath) -> Result<()> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch {
            left: p.size(),
            right: q.size(),
        });
    }
    Ok(())
}

/// `P ≤_S Q` iff `e_i(P) ≤ e_i(Q)` for every `i`.
pub fn leq_stanley(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    check_sizes(p, q)?;
    Ok(first_violation(p, q).is_none())
}

/// `P ≤_T Q` iff `P ≤_S Q` and `δ_i ≤ δ_j` whenever `u_i` is the parent of
/// `u_j` in `ω⁻¹(P)`.
pub fn leq_tamari(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    if !leq_stanley(p, q)? {
        return Ok(false);
    }
    Ok(deltas_increase_along_tree(p, q))
}

/// The branch condition on `δ` along the edges of `ω⁻¹(P)`, without the
/// Stanley precondition.
pub(crate) fn deltas_increase_along_tree(p: &DyckPath, q: &DyckPath) -> bool {
    let ep = p.exceedences();
    let eq = q.exceedences();
    let delta = |i: usize| eq[i] as isize - ep[i] as isize;
    tree_parents(p)
        .iter()
        .enumerate()
        .all(|(j, parent)| parent.is_none_or(|i| delta(i) <= delta(j)))
}

/// `P ≤_K Q` iff `θ⁻¹(P)` refines `θ⁻¹(Q)`.
pub fn leq_kreweras(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    check_sizes(p, q)?;
    Ok(NoncrossingPartition::theta_inv(p).refines(&NoncrossingPartition::theta_inv(q)))
}

fn with_descents(p: &DyckPath, f: impl FnOnce(&mut Vec<usize>)) -> DyckPath {
    let mut d = p.descents().to_vec();
    f(&mut d);
    DyckPath::from_descents(d).expect("covering move preserves the Dyck condition")
}

/// Paths covering `P` in the Stanley lattice: some `SN` replaced by `NS`.
pub fn covers_stanley(p: &DyckPath) -> Vec<DyckPath> {
    let n = p.size();
    let mut out: Vec<DyckPath> = (1..n)
        .filter(|&i| p.descents()[i - 1] > 0)
        .map(|i| {
            with_descents(p, |d| {
                d[i - 1] -= 1;
                d[i] += 1;
            })
        })
        .collect();
    out.sort();
    out
}

/// Paths covering `P` in the Tamari lattice: an `S` step swapped with the
/// prime Dyck subpath that follows it.
pub fn covers_tamari(p: &DyckPath) -> Vec<DyckPath> {
    let n = p.size();
    let mut out = Vec::new();
    for i in 1..n {
        if p.descents()[i - 1] == 0 {
            continue;
        }
        for j in i + 1..=n {
            if p.under_unchecked(i, j, true) {
                out.push(with_descents(p, |d| {
                    d[i - 1] -= 1;
                    d[j - 1] += 1;
                }));
            }
        }
    }
    out.sort();
    out
}

/// Paths covering `P` in the Kreweras lattice: a non-empty descent swapped
/// with a Dyck subpath that follows it.
pub fn covers_kreweras(p: &DyckPath) -> Vec<DyckPath> {
    let n = p.size();
    let mut out = Vec::new();
    for i in 1..n {
        let a = p.descents()[i - 1];
        if a == 0 {
            continue;
        }
        for j in i + 1..=n {
            if p.under_unchecked(i, j, false) {
                out.push(with_descents(p, |d| {
                    d[i - 1] = 0;
                    d[j - 1] += a;
                }));
            }
        }
    }
    out.sort();
    out
}

/// Streams the intervals of one lattice in lexicographic `(lower, upper)`
/// word order.
///
/// A stream can be restricted to one shard out of `k`: shard `s` owns a
/// contiguous range of lower paths, i.e. a range of lower-path prefixes.
#[derive(Clone, Debug)]
pub struct IntervalStream {
    kind: LatticeKind,
    paths: Vec<DyckPath>,
    lower: usize,
    lower_end: usize,
    upper: usize,
}

impl IntervalStream {
    pub fn new(kind: LatticeKind, n: usize) -> Result<Self> {
        IntervalStream::with_limit(kind, n, DEFAULT_INTERVAL_LIMIT)
    }

    pub fn with_limit(kind: LatticeKind, n: usize, limit: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        let paths = DyckPath::all(n);
        let lower_end = paths.len();
        Ok(IntervalStream {
            kind,
            paths,
            lower: 0,
            lower_end,
            upper: 0,
        })
    }

    /// Restricts the stream to shard `index` of `count`.
    pub fn shard(mut self, index: usize, count: usize) -> Self {
        let count = count.max(1);
        let len = self.paths.len();
        self.lower = index * len / count;
        self.lower_end = ((index + 1) * len / count).min(len);
        self.upper = 0;
        self
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }
}

impl Iterator for IntervalStream {
    type Item = Interval;

    fn next(&mut self) -> Option<Interval> {
        while self.lower < self.lower_end {
            let p = &self.paths[self.lower];
            while self.upper < self.paths.len() {
                let q = &self.paths[self.upper];
                self.upper += 1;
                if self.kind.leq(p, q).expect("equal sizes") {
                    return Some(Interval {
                        lattice: self.kind,
                        lower: p.clone(),
                        upper: q.clone(),
                    });
                }
            }
            self.lower += 1;
            self.upper = 0;
        }
        None
    }
}

/// Number of intervals by enumeration.
pub fn count_intervals(kind: LatticeKind, n: usize) -> Result<u64> {
    Ok(IntervalStream::new(kind, n)?.count() as u64)
}

/// Covering pairs `(P, Q)` of the lattice on paths of size `n`.
pub fn hasse_edges(kind: LatticeKind, n: usize) -> Result<Vec<(DyckPath, DyckPath)>> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    if n > DEFAULT_INTERVAL_LIMIT {
        return Err(Error::LimitExceeded {
            n,
            limit: DEFAULT_INTERVAL_LIMIT,
        });
    }
    let mut out = Vec::new();
    for p in DyckPath::all(n) {
        for q in kind.covers(&p) {
            out.push((p.clone(), q));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::BinaryTree;
    use alloc::collections::{BTreeMap, BTreeSet};
    use alloc::vec;

    fn w(s: &str) -> DyckPath {
        DyckPath::parse_word(s).unwrap()
    }

    fn words(v: &[DyckPath]) -> Vec<alloc::string::String> {
        v.iter().map(|p| p.to_word()).collect()
    }

    /// Reflexive-transitive closure of a cover relation, by BFS from each path.
    fn closure(
        n: usize,
        covers: impl Fn(&DyckPath) -> Vec<DyckPath>,
    ) -> BTreeSet<(DyckPath, DyckPath)> {
        let mut out = BTreeSet::new();
        for p in DyckPath::all(n) {
            let mut seen = BTreeSet::new();
            let mut todo = vec![p.clone()];
            while let Some(x) = todo.pop() {
                if seen.insert(x.clone()) {
                    todo.extend(covers(&x));
                }
            }
            for q in seen {
                out.insert((p.clone(), q));
            }
        }
        out
    }

    fn order_pairs(kind: LatticeKind, n: usize) -> BTreeSet<(DyckPath, DyckPath)> {
        let all = DyckPath::all(n);
        let mut out = BTreeSet::new();
        for p in &all {
            for q in &all {
                if kind.leq(p, q).unwrap() {
                    out.insert((p.clone(), q.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn stanley_examples() {
        assert!(leq_stanley(&w("NSNS"), &w("NNSS")).unwrap());
        assert!(leq_stanley(&w("NNSS"), &w("NNSS")).unwrap());
        assert!(!leq_stanley(&w("NNSS"), &w("NSNS")).unwrap());
        assert!(leq_stanley(&w("NS"), &w("NSNS")).is_err());
    }

    #[test]
    fn tamari_and_kreweras_examples() {
        for p in DyckPath::all(4) {
            assert!(leq_tamari(&p, &p).unwrap());
            assert!(leq_kreweras(&p, &p).unwrap());
        }
        assert!(leq_tamari(&w("NSNS"), &w("NNSS")).unwrap());
        assert!(leq_kreweras(&w("NSNS"), &w("NNSS")).unwrap());
        assert_eq!(order_pairs(LatticeKind::Tamari, 3).len(), 13);
        assert_eq!(order_pairs(LatticeKind::Kreweras, 3).len(), 12);
        assert!(leq_kreweras(&w("NS"), &w("NSNS")).is_err());
    }

    #[test]
    fn cover_examples() {
        assert!(covers_stanley(&w("NS")).is_empty());
        assert_eq!(words(&covers_stanley(&w("NSNS"))), vec!["NNSS"]);
        assert_eq!(
            words(&covers_stanley(&w("NSNSNS"))),
            vec!["NNSSNS", "NSNNSS"]
        );
        assert!(covers_tamari(&w("NS")).is_empty());
        assert_eq!(words(&covers_tamari(&w("NSNS"))), vec!["NNSS"]);
        assert!(covers_kreweras(&w("NS")).is_empty());
        assert_eq!(words(&covers_kreweras(&w("NSNS"))), vec!["NNSS"]);
        assert_eq!(covers_kreweras(&w("NSNSNS")).len(), 3);
    }

    #[test]
    fn stanley_covers_raise_by_one() {
        for n in 1..=6 {
            for p in DyckPath::all(n) {
                for q in covers_stanley(&p) {
                    assert!(leq_stanley(&p, &q).unwrap());
                    assert_eq!(crate::dyck::Delta(&p, &q).unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn interval_counts_small() {
        assert_eq!(count_intervals(LatticeKind::Stanley, 3).unwrap(), 14);
        assert_eq!(count_intervals(LatticeKind::Tamari, 3).unwrap(), 13);
        assert_eq!(count_intervals(LatticeKind::Kreweras, 3).unwrap(), 12);
        assert_eq!(
            count_intervals(LatticeKind::Stanley, 10),
            Err(Error::LimitExceeded { n: 10, limit: 9 })
        );
        assert!(count_intervals(LatticeKind::Stanley, 0).is_err());
    }

    #[test]
    fn stream_order_and_shards() {
        for kind in LatticeKind::ALL {
            let all: Vec<Interval> = IntervalStream::new(kind, 4).unwrap().collect();
            let keys: Vec<(alloc::string::String, alloc::string::String)> = all
                .iter()
                .map(|i| (i.lower.to_word(), i.upper.to_word()))
                .collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
            for shards in [1, 3, 4, 20] {
                let joined: Vec<Interval> = (0..shards)
                    .flat_map(|s| IntervalStream::new(kind, 4).unwrap().shard(s, shards))
                    .collect();
                assert_eq!(joined, all);
            }
        }
    }

    #[test]
    fn bottom_and_top_are_extremal() {
        for n in 1..=6 {
            let bot = DyckPath::bottom(n).unwrap();
            let top = DyckPath::top(n).unwrap();
            for kind in LatticeKind::ALL {
                for p in DyckPath::all(n) {
                    assert!(kind.leq(&bot, &p).unwrap());
                    assert!(kind.leq(&p, &top).unwrap());
                    if p != bot {
                        assert!(!kind.leq(&p, &bot).unwrap());
                    }
                    if p != top {
                        assert!(!kind.leq(&top, &p).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn hierarchy_exhaustive() {
        for n in 1..=6 {
            let all = DyckPath::all(n);
            for p in &all {
                for q in &all {
                    if leq_kreweras(p, q).unwrap() {
                        assert!(leq_tamari(p, q).unwrap(), "{p} {q}");
                    }
                    if leq_tamari(p, q).unwrap() {
                        assert!(leq_stanley(p, q).unwrap(), "{p} {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn order_tests_match_cover_closure() {
        for n in 1..=6 {
            assert_eq!(
                order_pairs(LatticeKind::Stanley, n),
                closure(n, covers_stanley)
            );
            assert_eq!(
                order_pairs(LatticeKind::Tamari, n),
                closure(n, covers_tamari)
            );
            assert_eq!(
                order_pairs(LatticeKind::Kreweras, n),
                closure(n, covers_kreweras)
            );
        }
    }

    #[test]
    fn tamari_covers_are_right_rotations() {
        for n in 1..=5 {
            let mut edges = 0;
            for b in BinaryTree::all(n) {
                let p = b.sigma().unwrap();
                let via_paths: BTreeSet<BinaryTree> = covers_tamari(&p)
                    .iter()
                    .map(BinaryTree::sigma_inv)
                    .collect();
                let via_trees: BTreeSet<BinaryTree> = b.right_rotations().into_iter().collect();
                assert_eq!(via_paths, via_trees, "{b:?}");
                edges += via_trees.len();
            }
            let path_edges: usize = DyckPath::all(n)
                .iter()
                .map(|p| covers_tamari(p).len())
                .sum();
            assert_eq!(edges, path_edges);
        }
    }

    #[test]
    fn kreweras_covers_are_block_merges() {
        for n in 1..=6 {
            for p in DyckPath::all(n) {
                let pi = NoncrossingPartition::theta_inv(&p);
                let blocks = pi.blocks();
                let mut merges = BTreeSet::new();
                for (x, c) in blocks.iter().enumerate() {
                    for c2 in &blocks[x + 1..] {
                        if let Some(m) = pi.merge(c, c2).unwrap() {
                            merges.insert(m.theta());
                        }
                    }
                }
                let covers: BTreeSet<DyckPath> = covers_kreweras(&p).into_iter().collect();
                assert_eq!(covers, merges, "{p}");
            }
        }
    }

    #[test]
    fn covers_are_exact_hasse_edges() {
        // a cover Q of P admits no R strictly between them
        for n in 1..=5 {
            for kind in LatticeKind::ALL {
                let pairs = order_pairs(kind, n);
                let mut up: BTreeMap<DyckPath, Vec<DyckPath>> = BTreeMap::new();
                for (p, q) in &pairs {
                    if p != q {
                        up.entry(p.clone()).or_default().push(q.clone());
                    }
                }
                for p in DyckPath::all(n) {
                    let ups = up.get(&p).cloned().unwrap_or_default();
                    let expected: BTreeSet<DyckPath> = ups
                        .iter()
                        .filter(|q| {
                            !ups.iter()
                                .any(|r| r != *q && pairs.contains(&(r.clone(), (*q).clone())))
                        })
                        .cloned()
                        .collect();
                    let got: BTreeSet<DyckPath> = kind.covers(&p).into_iter().collect();
                    assert_eq!(got, expected, "{kind} {p}");
                }
            }
        }
    }
}
