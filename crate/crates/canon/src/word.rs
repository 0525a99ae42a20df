//! Words over positive integers: permutations of `[n]` and permutations of
//! the multiset with `k` copies of each value in `[n]`, together with their
//! descent statistics and pattern containment.
//!
//! Positions are 1-based throughout, matching the usual convention where a
//! word of length `m` has potential descent positions `1..=m-1` (the final
//! position is never a descent).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};

/// Descent statistics of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statistics {
    pub des: usize,
    pub plat: usize,
    pub wdes: usize,
    /// 1-based positions `i` with `w_i > w_{i+1}`, sorted.
    pub descent_set: Vec<usize>,
}

/// Computes descents, plateaus, and weak descents of an arbitrary word.
pub fn word_statistics(entries: &[u32]) -> Statistics {
    let mut descent_set = Vec::new();
    let mut plat = 0;
    for i in 1..entries.len() {
        if entries[i - 1] > entries[i] {
            descent_set.push(i);
        } else if entries[i - 1] == entries[i] {
            plat += 1;
        }
    }
    let des = descent_set.len();
    Statistics { des, plat, wdes: des + plat, descent_set }
}

/// True if some subsequence of `word` realizes `pattern`: equal pattern
/// letters map to equal entries, and distinct letters preserve their strict
/// order.
pub fn contains_pattern(word: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > word.len() {
        return false;
    }
    // Compress pattern letters to ranks 0..r-1 by value.
    let mut letters: Vec<u32> = pattern.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let ranks: Vec<usize> = pattern
        .iter()
        .map(|v| letters.binary_search(v).unwrap())
        .collect();
    let mut assigned: Vec<Option<u32>> = vec![None; letters.len()];
    search(word, &ranks, 0, 0, &mut assigned)
}

fn search(
    word: &[u32],
    ranks: &[usize],
    pat_idx: usize,
    word_start: usize,
    assigned: &mut Vec<Option<u32>>,
) -> bool {
    if pat_idx == ranks.len() {
        return true;
    }
    if ranks.len() - pat_idx > word.len() - word_start {
        return false;
    }
    let rank = ranks[pat_idx];
    for pos in word_start..word.len() {
        let v = word[pos];
        let ok = match assigned[rank] {
            Some(x) => x == v,
            None => assigned.iter().enumerate().all(|(q, a)| match a {
                Some(x) => {
                    if q < rank {
                        *x < v
                    } else {
                        *x > v
                    }
                }
                None => true,
            }),
        };
        if !ok {
            continue;
        }
        let fresh = assigned[rank].is_none();
        if fresh {
            assigned[rank] = Some(v);
        }
        if search(word, ranks, pat_idx + 1, pos + 1, assigned) {
            return true;
        }
        if fresh {
            assigned[rank] = None;
        }
    }
    false
}

/// Parses a raw word literal (digit string or comma-separated) into its
/// entry list, without any multiset validation. Pattern arguments use this
/// directly since patterns need not have balanced multiplicities.
pub fn parse_word_literal(s: &str) -> Result<Vec<u32>> {
    parse_entries(s)
}

fn parse_entries(s: &str) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty word literal".into() });
    }
    if s.contains(',') {
        let mut out = Vec::new();
        let mut pos = 0;
        for piece in s.split(',') {
            let v: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a positive integer, found {piece:?}"),
            })?;
            if v == 0 {
                return Err(Error::Parse { pos, msg: "entries must be positive".into() });
            }
            out.push(v);
            pos += piece.len() + 1;
        }
        Ok(out)
    } else {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("expected a digit 1-9, found {c:?}"),
                }),
            })
            .collect()
    }
}

fn format_entries(entries: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if entries.iter().all(|&v| v <= 9) {
        for v in entries {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let strs: Vec<String> = entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// A permutation of `[n]`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    /// Validates that `entries` is a rearrangement of `1..=n`. The empty
    /// permutation is allowed.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidWord(format!(
                    "not a permutation of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { entries: (1..=n as u32).collect() }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation { entries: (1..=n as u32).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: u32) -> usize {
        self.entries.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn reverse(&self) -> Self {
        Permutation { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn statistics(&self) -> Statistics {
        word_statistics(&self.entries)
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.statistics().descent_set.into_iter().collect()
    }

    /// Swaps the values `k` and `k+1` wherever they occur.
    pub fn swap_values(&self, k: u32) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&v| {
                if v == k {
                    k + 1
                } else if v == k + 1 {
                    k
                } else {
                    v
                }
            })
            .collect();
        Permutation { entries }
    }

    /// Number of non-inversions, i.e. pairs `i < j` with `entries[i] < entries[j]`.
    pub fn non_inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i] < self.entries[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_entries(&self.entries, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_entries(s)?)
    }
}

/// A permutation of the multiset with `k` copies of each value in `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipermutation {
    entries: Vec<u32>,
    n: usize,
    k: usize,
}

impl Multipermutation {
    /// Validates that every value `1..=n` occurs the same number `k >= 1` of
    /// times, inferring `n` and `k`. The empty word is allowed (`n = 0`,
    /// `k = 1`).
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Ok(Multipermutation { entries, n: 0, k: 1 });
        }
        let n = *entries.iter().max().unwrap() as usize;
        let mut counts = vec![0usize; n + 1];
        for &v in &entries {
            if v == 0 {
                return Err(Error::InvalidWord("entries must be positive".into()));
            }
            counts[v as usize] += 1;
        }
        let k = counts[1];
        if k == 0 || counts[1..].iter().any(|&c| c != k) {
            return Err(Error::InvalidWord(
                "every value 1..=n must occur the same number of times".into(),
            ));
        }
        Ok(Multipermutation { entries, n, k })
    }

    /// The word `1^k 2^k ... n^k`.
    pub fn sorted(n: usize, k: usize) -> Self {
        let entries = (1..=n as u32).flat_map(|v| std::iter::repeat(v).take(k)).collect();
        Multipermutation { entries, n, k: if n == 0 { 1 } else { k } }
    }

    pub fn from_permutation(sigma: &Permutation) -> Self {
        Multipermutation { entries: sigma.entries().to_vec(), n: sigma.n(), k: 1 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn statistics(&self) -> Statistics {
        word_statistics(&self.entries)
    }

    pub fn reverse(&self) -> Self {
        Multipermutation {
            entries: self.entries.iter().rev().copied().collect(),
            n: self.n,
            k: self.k,
        }
    }

    pub fn contains_pattern(&self, pattern: &[u32]) -> bool {
        contains_pattern(&self.entries, pattern)
    }

    /// The subsequence formed by the `j`th copy (from the left) of each
    /// value, for `1 <= j <= k`.
    pub fn copy_subsequence(&self, j: usize) -> Permutation {
        assert!(1 <= j && j <= self.k, "copy index out of range");
        let mut seen = vec![0usize; self.n + 1];
        let mut out = Vec::with_capacity(self.n);
        for &v in &self.entries {
            seen[v as usize] += 1;
            if seen[v as usize] == j {
                out.push(v);
            }
        }
        Permutation { entries: out }
    }

    /// True if the word avoids the patterns 1221 and 2112; equivalently, if
    /// there are no positions `i < j < l < m` with `w_i = w_m != w_j = w_l`.
    /// Requires `k = 2`.
    pub fn is_nonnesting(&self) -> Result<bool> {
        if self.n > 0 && self.k != 2 {
            return Err(Error::NeedsTwoCopies(self.k));
        }
        Ok(self.copy_subsequence(1) == self.copy_subsequence(self.k.min(2)))
    }

    /// The common first/second-copy subsequence of a nonnesting word.
    pub fn underlying(&self) -> Result<Permutation> {
        if self.n > 0 && self.k != 2 {
            return Err(Error::NeedsTwoCopies(self.k));
        }
        let first = self.copy_subsequence(1);
        if first != self.copy_subsequence(self.k.min(2)) {
            return Err(Error::NotNonnesting);
        }
        Ok(first)
    }

    /// The Dyck path with an E step at each first copy and an N step at each
    /// second copy. Requires a nonnesting word.
    pub fn dyck_path(&self) -> Result<DyckPath> {
        self.underlying()?;
        let mut seen = vec![false; self.n + 1];
        let steps = self
            .entries
            .iter()
            .map(|&v| {
                if seen[v as usize] {
                    Step::N
                } else {
                    seen[v as usize] = true;
                    Step::E
                }
            })
            .collect();
        DyckPath::new(steps)
    }

    /// The unique nonnesting word whose underlying permutation is `sigma`
    /// and whose Dyck path is `path`: E steps read column labels and N steps
    /// read row labels of the grid labeled by `sigma`.
    pub fn from_parts(sigma: &Permutation, path: &DyckPath) -> Result<Self> {
        if sigma.n() != path.n() {
            return Err(Error::SizeMismatch { sigma: sigma.n(), path: path.n() });
        }
        let labels = sigma.entries();
        let mut x = 0usize;
        let mut y = 0usize;
        let mut entries = Vec::with_capacity(2 * sigma.n());
        for step in path.steps() {
            match step {
                Step::E => {
                    x += 1;
                    entries.push(labels[x - 1]);
                }
                Step::N => {
                    y += 1;
                    entries.push(labels[y - 1]);
                }
            }
        }
        Ok(Multipermutation { entries, n: sigma.n(), k: if sigma.n() == 0 { 1 } else { 2 } })
    }
}

impl fmt::Display for Multipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_entries(&self.entries, f)
    }
}

impl FromStr for Multipermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Multipermutation::new(parse_entries(s)?)
    }
}

/// Parses a comma-separated set of 1-based positions, e.g. `"2,5,6,8"`.
pub fn parse_index_set(s: &str) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    let mut pos = 0;
    for piece in s.split(',') {
        let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("expected a positive integer, found {piece:?}"),
        })?;
        if v == 0 {
            return Err(Error::Parse { pos, msg: "positions are 1-based".into() });
        }
        if !out.insert(v) {
            return Err(Error::Parse { pos, msg: format!("duplicate position {v}") });
        }
        pos += piece.len() + 1;
    }
    Ok(out)
}
