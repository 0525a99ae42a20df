//! Exhaustive, duplicate-free enumeration streams with deterministic order,
//! plus exact counting helpers.
//!
//! Orders: permutations and multiset permutations are generated in
//! lexicographic order on the entry word; Dyck paths in lexicographic order
//! on the step word with `E < N` (so `E^n N^n` comes first and the staircase
//! `(EN)^n` last). The nonnesting stream is the product enumeration: outer
//! loop over underlying permutations, inner loop over paths, both
//! lexicographic.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::word::{Multipermutation, Permutation};

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let first: Vec<u32> = (1..=n as u32).collect();
    std::iter::successors(Some(first), |prev| {
        let mut next = prev.clone();
        next_word_permutation(&mut next).then_some(next)
    })
    .map(|entries| Permutation::new(entries).expect("generated permutation"))
}

/// All words of the multiset with `k` copies of each value in `[n]`, in
/// lexicographic order.
pub fn multiset_permutations(n: usize, k: usize) -> impl Iterator<Item = Multipermutation> {
    let first = Multipermutation::sorted(n, k).entries().to_vec();
    std::iter::successors(Some(first), |prev| {
        let mut next = prev.clone();
        next_word_permutation(&mut next).then_some(next)
    })
    .map(|entries| Multipermutation::new(entries).expect("generated word"))
}

/// In-place lexicographic successor among rearrangements of the same
/// multiset. Returns false when `word` is the last (descending) arrangement.
fn next_word_permutation(word: &mut [u32]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// All Dyck paths of semilength `n` in lexicographic order (`E < N`).
pub fn dyck_paths(n: usize) -> impl Iterator<Item = DyckPath> {
    let first = DyckPath::rectangle(n);
    std::iter::successors(Some(first), move |prev| next_dyck_path(prev))
}

fn next_dyck_path(d: &DyckPath) -> Option<DyckPath> {
    let steps = d.steps();
    let n = d.n();
    // Prefix counts of E steps.
    let mut east_before = vec![0usize; steps.len() + 1];
    for (i, s) in steps.iter().enumerate() {
        east_before[i + 1] = east_before[i] + usize::from(*s == Step::E);
    }
    for i in (0..steps.len()).rev() {
        if steps[i] != Step::E {
            continue;
        }
        let east = east_before[i];
        let north = i - east;
        // Replace position i by N, then complete with E's before N's.
        if north + 1 > east {
            continue;
        }
        let rem_east = n - east;
        let rem_north = n - north - 1;
        if rem_east + rem_north != steps.len() - i - 1 {
            continue;
        }
        let mut next: Vec<Step> = steps[..i].to_vec();
        next.push(Step::N);
        next.extend(std::iter::repeat(Step::E).take(rem_east));
        next.extend(std::iter::repeat(Step::N).take(rem_north));
        return Some(DyckPath::new(next).expect("generated path"));
    }
    None
}

/// All nonnesting two-copy words, as the product enumeration over
/// `(sigma, path)` pairs.
pub fn nonnesting(n: usize) -> impl Iterator<Item = Multipermutation> {
    permutations(n).flat_map(move |sigma| {
        dyck_paths(n).map(move |d| {
            Multipermutation::from_parts(&sigma, &d).expect("matching sizes")
        })
    })
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut num = BigUint::one();
    for i in 0..k {
        num *= BigUint::from((n - i) as u64);
    }
    num / factorial(k)
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n as u64 + 1)
}

/// The `k`-Catalan number: `binom(kn, n) / ((k-1)n + 1)`.
pub fn catalan_k(n: usize, k: usize) -> BigUint {
    binomial(k * n, n) / BigUint::from(((k - 1) * n + 1) as u64)
}

/// Number of words of the multiset with `k` copies of each of `n` values.
pub fn multinomial_count(n: usize, k: usize) -> BigUint {
    factorial(k * n) / factorial(k).pow(n as u32)
}

/// Enumeration guard: checks a closed-form count against a cap before a
/// stream is consumed. The default cap keeps full verification runs fast.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap(pub u64);

pub const DEFAULT_CAP: Cap = Cap(500_000);

impl Default for Cap {
    fn default() -> Self {
        DEFAULT_CAP
    }
}

impl Cap {
    pub fn ensure(&self, needed: &BigUint) -> Result<()> {
        if *needed > BigUint::from(self.0) {
            return Err(Error::CapExceeded { needed: needed.to_string(), cap: self.0 });
        }
        Ok(())
    }
}
