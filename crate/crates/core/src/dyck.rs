//! Dyck paths in descent-vector form.
//!
//! A path of size `n` is stored as its descents `α_1..α_n`, i.e. the word
//! `N S^α_1 N S^α_2 … N S^α_n`, together with the precomputed exceedence
//! profile `e_i = i − Σ_{j≤i} α_j` for `i = 0..=n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A Dyck path of size `n ≥ 1`.
///
/// Ordering is lexicographic on the word with `N < S`, which coincides with
/// lexicographic order on the descent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    descents: Vec<usize>,
    exceedences: Vec<usize>,
}

impl DyckPath {
    /// Builds a path from its descent vector `(α_1, …, α_n)`.
    pub fn from_descents(descents: Vec<usize>) -> Result<Self> {
        if descents.is_empty() {
            return Err(Error::EmptyPath);
        }
        let n = descents.len();
        let mut exceedences = Vec::with_capacity(n + 1);
        exceedences.push(0);
        let mut height: usize = 0;
        for (k, &a) in descents.iter().enumerate() {
            height += 1;
            height = height
                .checked_sub(a)
                .ok_or(Error::InvalidDescents { index: k + 1 })?;
            exceedences.push(height);
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                position: n,
                ups: n,
                downs: descents.iter().sum(),
            });
        }
        Ok(DyckPath {
            descents,
            exceedences,
        })
    }

    /// Parses a word over `{N, S}`.
    pub fn parse_word(word: &str) -> Result<Self> {
        let mut descents: Vec<usize> = Vec::new();
        let mut height: usize = 0;
        let mut ups = 0;
        let mut downs = 0;
        let mut len = 0;
        for (position, c) in word.chars().enumerate() {
            len = position + 1;
            match c {
                'N' => {
                    descents.push(0);
                    height += 1;
                    ups += 1;
                }
                'S' => {
                    if height == 0 {
                        return Err(Error::NegativePrefix { position });
                    }
                    height -= 1;
                    downs += 1;
                    // height > 0 before the step implies at least one N was seen
                    *descents.last_mut().expect("an N precedes every S") += 1;
                }
                found => return Err(Error::IllegalCharacter { position, found }),
            }
        }
        if len == 0 {
            return Err(Error::EmptyPath);
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                position: len,
                ups,
                downs,
            });
        }
        DyckPath::from_descents(descents)
    }

    pub fn to_word(&self) -> String {
        let mut s = String::with_capacity(2 * self.size());
        for &a in &self.descents {
            s.push('N');
            for _ in 0..a {
                s.push('S');
            }
        }
        s
    }

    /// Half-length `n`.
    pub fn size(&self) -> usize {
        self.descents.len()
    }

    /// `(α_1, …, α_n)`; index `k` of the slice holds `α_{k+1}`.
    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    /// `α_i` for `1 ≤ i ≤ n`.
    pub fn descent(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.size(),
            });
        }
        Ok(self.descents[i - 1])
    }

    /// The profile `e_0, …, e_n`.
    pub fn exceedences(&self) -> &[usize] {
        &self.exceedences
    }

    /// Height of the path after the `i`-th descent.
    pub fn exceedence(&self, i: usize) -> Result<usize> {
        self.exceedences
            .get(i)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: i,
                max: self.size(),
            })
    }

    /// `i ⊲_P j` (non-strict) or `i ⊳_P j` (strict).
    ///
    /// Defined for `i ≤ j`; `i ⊲_P i` holds by convention.
    pub fn relation_under(&self, i: usize, j: usize, strict: bool) -> Result<bool> {
        let n = self.size();
        if j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        if i > j {
            return Err(Error::IndexOutOfRange { index: i, max: j });
        }
        Ok(self.under_unchecked(i, j, strict))
    }

    pub(crate) fn under_unchecked(&self, i: usize, j: usize, strict: bool) -> bool {
        let e = &self.exceedences;
        if e[i] < e[j] {
            return false;
        }
        let inner = &e[(i + 1).min(j)..j];
        if strict {
            inner.iter().all(|&ek| e[i] < ek)
        } else {
            inner.iter().all(|&ek| e[i] <= ek)
        }
    }

    /// True iff the path stays strictly positive between its endpoints.
    pub fn is_prime(&self) -> bool {
        // step-level heights only reach 0 at the end of a descent, so it is
        // enough to look at the interior exceedences
        self.exceedences[1..self.size()].iter().all(|&e| e > 0)
    }

    /// `NSNS…NS`, the bottom element of every lattice.
    pub fn bottom(n: usize) -> Result<Self> {
        DyckPath::from_descents(vec![1; n])
    }

    /// `N^n S^n`, the top element of every lattice.
    pub fn top(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        let mut d = vec![0; n];
        d[n - 1] = n;
        DyckPath::from_descents(d)
    }

    /// Every Dyck path of size `n`, in increasing word order.
    pub fn all(n: usize) -> Vec<DyckPath> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut buf = Vec::with_capacity(n);
        fn rec(n: usize, height: usize, buf: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
            let k = buf.len();
            if k + 1 == n {
                buf.push(height + 1);
                out.push(DyckPath::from_descents(buf.clone()).expect("generated path is valid"));
                buf.pop();
                return;
            }
            for a in 0..=height + 1 {
                buf.push(a);
                rec(n, height + 1 - a, buf, out);
                buf.pop();
            }
        }
        rec(n, 0, &mut buf, &mut out);
        out
    }
}

impl Ord for DyckPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.descents.cmp(&other.descents)
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({})", self.to_word())
    }
}

impl core::str::FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse_word(s)
    }
}

/// The pair `(lower, upper)` viewed through the differences
/// `δ_i = e_i(upper) − e_i(lower)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPairDelta<'a> {
    pub lower: &'a DyckPath,
    pub upper: &'a DyckPath,
}

impl<'a> PathPairDelta<'a> {
    pub fn new(lower: &'a DyckPath, upper: &'a DyckPath) -> Result<Self> {
        if lower.size() != upper.size() {
            return Err(Error::SizeMismatch {
                left: lower.size(),
                right: upper.size(),
            });
        }
        Ok(PathPairDelta { lower, upper })
    }

    /// `δ_i` for `0 ≤ i ≤ n`.
    pub fn delta(&self, i: usize) -> Result<isize> {
        Ok(self.upper.exceedence(i)? as isize - self.lower.exceedence(i)? as isize)
    }

    /// `δ_0, …, δ_n`.
    pub fn deltas(&self) -> Vec<isize> {
        self.lower
            .exceedences()
            .iter()
            .zip(self.upper.exceedences())
            .map(|(&p, &q)| q as isize - p as isize)
            .collect()
    }

    /// `Δ = Σ_{i=1..n} δ_i`. Since `δ_0 = 0` this is also the sum from 0.
    pub fn total(&self) -> isize {
        self.deltas().iter().sum()
    }

    /// First index with `δ_i < 0`, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.deltas().iter().position(|&d| d < 0)
    }
}

/// `δ_i(P, Q) = e_i(Q) − e_i(P)`.
pub fn delta(p: &DyckPath, q: &DyckPath, i: usize) -> Result<isize> {
    PathPairDelta::new(p, q)?.delta(i)
}

/// `Δ(P, Q) = Σ_{i=1..n} δ_i(P, Q)`.
#[allow(non_snake_case)]
pub fn Delta(p: &DyckPath, q: &DyckPath) -> Result<isize> {
    Ok(PathPairDelta::new(p, q)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckPath {
        DyckPath::parse_word(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("NS").descents(), &[1]);
        assert_eq!(w("NSNNSNSSNNNSSS").descents(), &[1, 0, 1, 2, 0, 0, 3]);
        assert_eq!(
            DyckPath::parse_word("NSSN"),
            Err(Error::NegativePrefix { position: 2 })
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            DyckPath::parse_word("NX"),
            Err(Error::IllegalCharacter {
                position: 1,
                found: 'X'
            })
        );
        assert!(matches!(
            DyckPath::parse_word("NNS"),
            Err(Error::Unbalanced { position: 3, .. })
        ));
        assert_eq!(DyckPath::parse_word(""), Err(Error::EmptyPath));
        assert_eq!(
            DyckPath::parse_word("S"),
            Err(Error::NegativePrefix { position: 0 })
        );
    }

    #[test]
    fn exceedence_examples() {
        let p = DyckPath::from_descents(vec![1, 0, 1, 2, 0, 0, 3]).unwrap();
        assert_eq!(p.exceedences(), &[0, 0, 1, 1, 0, 1, 2, 0]);
        assert_eq!(p.exceedence(2).unwrap(), 1);
        assert_eq!(p.exceedence(6).unwrap(), 2);
        assert_eq!(p.exceedence(0).unwrap(), 0);
        assert!(p.exceedence(8).is_err());
    }

    #[test]
    fn delta_examples() {
        let p = w("NSNS");
        let q = w("NNSS");
        let pair = PathPairDelta::new(&p, &q).unwrap();
        assert_eq!(pair.deltas(), vec![0, 1, 0]);
        assert_eq!(pair.total(), 1);
        assert_eq!(Delta(&w("NSNSNS"), &w("NNNSSS")).unwrap(), 3);
        assert_eq!(Delta(&p, &p).unwrap(), 0);
        assert!(delta(&p, &w("NS"), 0).is_err());
    }

    #[test]
    fn relation_examples() {
        let p = DyckPath::from_descents(vec![1, 0, 1, 2, 0, 0, 3]).unwrap();
        assert!(p.relation_under(0, 4, false).unwrap());
        assert!(p.relation_under(1, 4, true).unwrap());
        assert!(p.relation_under(2, 4, false).unwrap());
        assert!(!p.relation_under(0, 4, true).unwrap());
        for i in 0..=7 {
            assert!(p.relation_under(i, i, false).unwrap());
        }
        assert!(p.relation_under(3, 2, false).is_err());
        assert!(p.relation_under(0, 8, false).is_err());
    }

    #[test]
    fn prime_examples() {
        assert!(w("NS").is_prime());
        assert!(!w("NSNS").is_prime());
        assert!(w("NNSNSS").is_prime());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| DyckPath::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn all_is_sorted_by_word() {
        for n in 1..=6 {
            let paths = DyckPath::all(n);
            let words: Vec<String> = paths.iter().map(|p| p.to_word()).collect();
            let mut sorted = words.clone();
            sorted.sort();
            assert_eq!(words, sorted);
            assert!(paths.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn round_trip_and_profile_exhaustive() {
        for n in 1..=8 {
            for p in DyckPath::all(n) {
                assert_eq!(w(&p.to_word()), p);
                let e = p.exceedences();
                assert_eq!(e[0], 0);
                assert_eq!(e[n], 0);
                for i in 1..=n {
                    assert_eq!(
                        e[i] as isize - e[i - 1] as isize,
                        1 - p.descents()[i - 1] as isize
                    );
                }
            }
        }
    }

    #[test]
    fn strict_implies_nonstrict() {
        for n in 1..=6 {
            for p in DyckPath::all(n) {
                for i in 0..=n {
                    for j in i..=n {
                        if p.relation_under(i, j, true).unwrap() {
                            assert!(p.relation_under(i, j, false).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn relation_matches_subword_reading() {
        // i ⊲ j (resp. i ⊳ j) iff N S^α_{i+1} … N S^α_j is a Dyck path (resp.
        // prime Dyck path) followed by e_i − e_j S steps; checked on raw steps.
        for n in 1..=6 {
            for p in DyckPath::all(n) {
                for i in 0..=n {
                    for j in i..=n {
                        let sub: Vec<isize> = p.descents()[i..j]
                            .iter()
                            .flat_map(|&a| {
                                core::iter::once(1isize).chain(core::iter::repeat_n(-1, a))
                            })
                            .collect();
                        let drop = p.exceedences()[i] as isize - p.exceedences()[j] as isize;
                        let (loose, prime) = if drop < 0 {
                            (false, false)
                        } else {
                            let body_len = sub.len() - drop as usize;
                            let (body, tail) = sub.split_at(body_len);
                            let mut h = 0;
                            let mut nonneg = true;
                            let mut positive = true;
                            for (k, s) in body.iter().enumerate() {
                                h += s;
                                nonneg &= h >= 0;
                                if k + 1 < body.len() {
                                    positive &= h > 0;
                                }
                            }
                            let dyck = nonneg && h == 0 && tail.iter().all(|&s| s == -1);
                            (dyck, dyck && (body.is_empty() || positive))
                        };
                        assert_eq!(p.relation_under(i, j, false).unwrap(), loose, "{p} {i} {j}");
                        if i < j {
                            assert_eq!(p.relation_under(i, j, true).unwrap(), prime, "{p} {i} {j}");
                        }
                    }
                }
            }
        }
    }
}
