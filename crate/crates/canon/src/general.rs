//! Three families of words over the multiset with `k` copies of each value
//! in `[n]`, each generalizing the two-copy nonnesting words:
//!
//! - the 1221/2112-avoiders, counted by `2^{n-1} n!` for `k >= 3`;
//! - words whose consecutive-copy arc diagram is nonnesting, counted by
//!   `(kn)! / ((k-1)n + 1)!`;
//! - canon words, whose `k` copy subsequences all coincide.
//!
//! The avoider and nonnesting families are prefix-closed, so both are
//! enumerated by backtracking over valid prefixes instead of filtering the
//! full multiset stream. Canon classes are generated as voice interleavings
//! directly.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::enumerate::factorial;
use crate::error::{Error, Result};
use crate::families::eulerian;
use crate::poly::BivariatePoly;
use crate::word::{Multipermutation, Permutation};

/// True if the word avoids the patterns 1221 and 2112: no value has two
/// copies of another value strictly between two of its own copies.
pub fn is_avoider(w: &Multipermutation) -> bool {
    let n = w.n();
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0usize; n + 1];
    for (pos, &v) in w.entries().iter().enumerate() {
        let v = v as usize;
        if first[v] == usize::MAX {
            first[v] = pos;
        }
        last[v] = pos;
    }
    for a in 1..=n {
        if last[a] <= first[a] + 1 {
            continue;
        }
        let interior = &w.entries()[first[a] + 1..last[a]];
        for b in 1..=n {
            if a == b {
                continue;
            }
            let inside = interior.iter().filter(|&&v| v as usize == b).count();
            if inside >= 2 {
                return false;
            }
        }
    }
    true
}

/// True if the consecutive-copy arc diagram of `w` has no nested arcs.
pub fn is_nonnesting_partition(w: &Multipermutation) -> bool {
    !crate::arc::block_arcs(w).has_nesting()
}

/// True if all `k` copy subsequences of `w` coincide.
pub fn is_canon(w: &Multipermutation) -> bool {
    if w.n() == 0 {
        return true;
    }
    let first = w.copy_subsequence(1);
    (2..=w.k()).all(|j| w.copy_subsequence(j) == first)
}

/// All 1221/2112-avoiding words, by backtracking over avoiding prefixes
/// (pattern containment is inherited by extensions, so the pruning is exact).
pub fn avoiders(n: usize, k: usize) -> Vec<Multipermutation> {
    let mut out = Vec::new();
    // counts[v]: copies of v placed; snapshot[v][b]: copies of b placed when
    // v first appeared. Appending v is safe iff no other value gained two or
    // more copies since the first copy of v.
    let mut counts = vec![0usize; n + 1];
    let mut snapshot = vec![vec![0usize; n + 1]; n + 1];
    let mut word: Vec<u32> = Vec::with_capacity(n * k);

    fn extend(
        n: usize,
        k: usize,
        word: &mut Vec<u32>,
        counts: &mut Vec<usize>,
        snapshot: &mut Vec<Vec<usize>>,
        out: &mut Vec<Multipermutation>,
    ) {
        if word.len() == n * k {
            out.push(Multipermutation::new(word.clone()).expect("valid multiset word"));
            return;
        }
        for v in 1..=n {
            let c = counts[v];
            if c == k {
                continue;
            }
            if c > 0 {
                let bad = (1..=n)
                    .any(|b| b != v && counts[b] - snapshot[v][b] >= 2);
                if bad {
                    continue;
                }
            } else {
                snapshot[v] = counts.clone();
            }
            counts[v] += 1;
            word.push(v as u32);
            extend(n, k, word, counts, snapshot, out);
            word.pop();
            counts[v] -= 1;
        }
    }

    extend(n, k, &mut word, &mut counts, &mut snapshot, &mut out);
    out
}

/// All words with a nonnesting consecutive-copy arc diagram, by backtracking.
/// Appending a copy of `v` adds the arc from its previous copy; that arc is
/// nest-free iff no existing arc starts strictly to its right.
pub fn nonnesting_partitions(n: usize, k: usize) -> Vec<Multipermutation> {
    let mut out = Vec::new();
    let mut counts = vec![0usize; n + 1];
    let mut last = vec![0usize; n + 1]; // 1-based position of last copy
    let mut word: Vec<u32> = Vec::with_capacity(n * k);

    fn extend(
        n: usize,
        k: usize,
        max_arc_start: usize,
        word: &mut Vec<u32>,
        counts: &mut Vec<usize>,
        last: &mut Vec<usize>,
        out: &mut Vec<Multipermutation>,
    ) {
        if word.len() == n * k {
            out.push(Multipermutation::new(word.clone()).expect("valid multiset word"));
            return;
        }
        let pos = word.len() + 1;
        for v in 1..=n {
            if counts[v] == k {
                continue;
            }
            let new_max = if counts[v] > 0 {
                if last[v] < max_arc_start {
                    continue;
                }
                last[v]
            } else {
                max_arc_start
            };
            let saved_last = last[v];
            counts[v] += 1;
            last[v] = pos;
            word.push(v as u32);
            extend(n, k, new_max, word, counts, last, out);
            word.pop();
            last[v] = saved_last;
            counts[v] -= 1;
        }
    }

    extend(n, k, 0, &mut word, &mut counts, &mut last, &mut out);
    out
}

/// The closed-form count of nonnesting-partition words: `(kn)!/((k-1)n+1)!`.
pub fn nonnesting_partition_count(n: usize, k: usize) -> BigUint {
    factorial(k * n) / factorial((k - 1) * n + 1)
}

/// Words in the canon class of `sigma` with `k` copies: interleavings of
/// `k` voices each spelling `sigma`, where voice `j` may emit its next value
/// only once voices `1..j` have passed it.
pub fn canon_class(sigma: &Permutation, k: usize) -> Vec<Multipermutation> {
    let n = sigma.n();
    let mut out = Vec::new();
    let mut progress = vec![0usize; k]; // entries of sigma emitted per voice
    let mut word: Vec<u32> = Vec::with_capacity(n * k);

    fn extend(
        sigma: &[u32],
        word: &mut Vec<u32>,
        progress: &mut Vec<usize>,
        out: &mut Vec<Multipermutation>,
    ) {
        let n = sigma.len();
        if word.len() == n * progress.len() {
            out.push(Multipermutation::new(word.clone()).expect("valid multiset word"));
            return;
        }
        for j in 0..progress.len() {
            let p = progress[j];
            if p == n {
                continue;
            }
            if j > 0 && progress[j - 1] <= p {
                continue;
            }
            progress[j] += 1;
            word.push(sigma[p]);
            extend(sigma, word, progress, out);
            word.pop();
            progress[j] -= 1;
        }
    }

    if n == 0 {
        return vec![Multipermutation::new(vec![]).unwrap()];
    }
    extend(sigma.entries(), &mut word, &mut progress, &mut out);
    out
}

/// All canon words with `k` copies, class by class in lexicographic order of
/// the underlying permutation.
pub fn canon_words(n: usize, k: usize) -> Vec<Multipermutation> {
    crate::enumerate::permutations(n)
        .flat_map(|sigma| canon_class(&sigma, k))
        .collect()
}

/// Joint descent/plateau distribution over the 1221/2112-avoiders.
pub fn avoider_distribution(n: usize, k: usize) -> BivariatePoly {
    crate::families::distribution(avoiders(n, k))
}

/// Closed form for the avoider distribution when `k >= 3`:
/// `u^{(k-3)n+2} (u^2+t)^{n-1} A_n(t)`.
pub fn avoider_distribution_closed(n: usize, k: usize) -> Result<BivariatePoly> {
    if k < 3 {
        return Err(Error::Unsupported(format!(
            "closed avoider distribution requires k >= 3 (got k={k}); for k = 2 the \
             distribution is the Eulerian-Narayana product"
        )));
    }
    if n == 0 {
        return Ok(BivariatePoly::one());
    }
    let u_exp = ((k - 3) * n + 2) as u32;
    let binom = &BivariatePoly::monomial(0, 2) + &BivariatePoly::monomial(1, 0);
    let product = &binom.pow(n as u32 - 1) * &eulerian(n);
    Ok(product.mul_term(&BigInt::one(), 0, u_exp))
}

/// Joint descent/plateau distribution over the nonnesting-partition words.
pub fn nonnesting_partition_distribution(n: usize, k: usize) -> BivariatePoly {
    crate::families::distribution(nonnesting_partitions(n, k))
}

/// Joint descent/plateau distribution over one canon class.
pub fn canon_class_distribution(sigma: &Permutation, k: usize) -> BivariatePoly {
    crate::families::distribution(canon_class(sigma, k))
}

/// Joint descent/plateau distribution over all canon words.
pub fn canon_distribution(n: usize, k: usize) -> BivariatePoly {
    let mut poly = BivariatePoly::zero();
    for sigma in crate::enumerate::permutations(n) {
        poly = &poly + &canon_class_distribution(&sigma, k);
    }
    poly
}

/// Decomposes an avoider with `k >= 3` into its value order and overrun set:
/// values are ordered by their middle copies, and position `i` carries an
/// overrun when the first copy of the `(i+1)`-st value precedes the last
/// copy of the `i`-th.
pub fn avoider_decompose(w: &Multipermutation) -> Result<(Permutation, BTreeSet<usize>)> {
    if w.n() > 0 && w.k() < 3 {
        return Err(Error::Unsupported(format!(
            "overrun decomposition requires k >= 3 (got k={})",
            w.k()
        )));
    }
    if !is_avoider(w) {
        return Err(Error::InvalidWord("word contains 1221 or 2112".into()));
    }
    let sigma = w.copy_subsequence(2.min(w.k()));
    let n = w.n();
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0usize; n + 1];
    for (pos, &v) in w.entries().iter().enumerate() {
        let v = v as usize;
        if first[v] == usize::MAX {
            first[v] = pos;
        }
        last[v] = pos;
    }
    let mut overruns = BTreeSet::new();
    for i in 1..n {
        let a = sigma.entries()[i - 1] as usize;
        let b = sigma.entries()[i] as usize;
        if first[b] < last[a] {
            overruns.insert(i);
        }
    }
    Ok((sigma, overruns))
}

/// Rebuilds the avoider from a value order and overrun set: start from the
/// blocks `sigma_1^k ... sigma_n^k` and, for each overrun position, swap the
/// last copy of one block with the first copy of the next.
pub fn avoider_compose(
    sigma: &Permutation,
    overruns: &BTreeSet<usize>,
    k: usize,
) -> Result<Multipermutation> {
    if k < 3 && sigma.n() > 0 {
        return Err(Error::Unsupported(format!(
            "overrun composition requires k >= 3 (got k={k})"
        )));
    }
    let n = sigma.n();
    if let Some(&i) = overruns.iter().next_back() {
        if i == 0 || i >= n {
            return Err(Error::DescentOutOfRange(i, n.saturating_sub(1)));
        }
    }
    let mut entries: Vec<u32> = sigma
        .entries()
        .iter()
        .flat_map(|&v| std::iter::repeat(v).take(k))
        .collect();
    for &i in overruns {
        // Last copy of block i sits at i*k - 1, first copy of block i+1 at i*k.
        entries.swap(i * k - 1, i * k);
    }
    Multipermutation::new(entries)
}
