//! The named polynomial families: Eulerian polynomials, the bivariate
//! high/low-peak Narayana polynomials, and joint descent/plateau
//! distributions of word streams.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::enumerate::{binomial, dyck_paths, nonnesting, permutations};
use crate::poly::BivariatePoly;
use crate::word::{Multipermutation, Permutation};

/// Cutoff below which `eulerian` is computed by direct enumeration; the
/// recurrence takes over beyond it. Both routes agree on the overlap.
const EULERIAN_ENUMERATION_LIMIT: usize = 8;

/// Distribution of descents over all permutations of `[n]`, a polynomial in
/// `t` alone.
pub fn eulerian(n: usize) -> BivariatePoly {
    if n <= EULERIAN_ENUMERATION_LIMIT {
        eulerian_by_enumeration(n)
    } else {
        eulerian_by_recurrence(n)
    }
}

pub fn eulerian_by_enumeration(n: usize) -> BivariatePoly {
    let mut poly = BivariatePoly::zero();
    for sigma in permutations(n) {
        poly.add_term(&BigInt::one(), sigma.statistics().des as u32, 0);
    }
    poly
}

/// Classical two-term recurrence on the triangle of coefficients: the count
/// for `n` permutations with `j` descents is `(j+1)` times the count for
/// `(n-1, j)` plus `(n-j)` times the count for `(n-1, j-1)`.
pub fn eulerian_by_recurrence(n: usize) -> BivariatePoly {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::from(0); m.max(1)];
        for (j, c) in row.iter().enumerate() {
            next[j] += c * BigInt::from(j as u64 + 1);
            if j + 1 < next.len() {
                next[j + 1] += c * BigInt::from((m - j - 1) as u64);
            }
        }
        row = next;
    }
    let mut poly = BivariatePoly::zero();
    for (j, c) in row.iter().enumerate() {
        poly.add_term(c, j as u32, 0);
    }
    poly
}

/// Joint distribution of high and low peaks over Dyck paths of semilength
/// `n`: the bivariate Narayana polynomial.
pub fn narayana(n: usize) -> BivariatePoly {
    let mut poly = BivariatePoly::zero();
    for d in dyck_paths(n) {
        let s = d.peak_stats();
        poly.add_term(&BigInt::one(), s.hpea as u32, s.lpea as u32);
    }
    poly
}

/// The diagonal Narayana polynomial by its closed form: the coefficient of
/// `t^r` is `binom(n,r) binom(n,r-1) / n`.
pub fn narayana_closed(n: usize) -> BivariatePoly {
    if n == 0 {
        return BivariatePoly::one();
    }
    let mut poly = BivariatePoly::zero();
    for r in 1..=n {
        let coeff = BigInt::from(binomial(n, r) * binomial(n, r - 1) / BigUint::from(n as u64));
        poly.add_term(&coeff, r as u32, 0);
    }
    poly
}

/// Sum of `t^des u^plat` over a word stream.
pub fn distribution<I>(words: I) -> BivariatePoly
where
    I: IntoIterator<Item = Multipermutation>,
{
    let mut poly = BivariatePoly::zero();
    for w in words {
        let s = w.statistics();
        poly.add_term(&BigInt::one(), s.des as u32, s.plat as u32);
    }
    poly
}

/// Joint descent/plateau distribution over all nonnesting two-copy words.
pub fn nonnesting_distribution(n: usize) -> BivariatePoly {
    distribution(nonnesting(n))
}

/// Joint descent/plateau distribution over the class of nonnesting words
/// with the given underlying permutation.
pub fn class_distribution(sigma: &Permutation) -> BivariatePoly {
    distribution(
        dyck_paths(sigma.n())
            .map(|d| Multipermutation::from_parts(sigma, &d).expect("matching sizes")),
    )
}
