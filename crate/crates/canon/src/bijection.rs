//! Bijections and involutions on Dyck paths and nonnesting words.
//!
//! Path level: the valley/high-peak exchange `rho`, the Lalanne-Kreweras
//! involution, single-cell flips, the descent-set normalization, and the
//! top-descent removal surgery. Word level: every path map is transported
//! through the `(underlying, path)` coordinates, giving bijections between
//! classes with controlled effect on the descent and plateau statistics.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::word::{Multipermutation, Permutation};

/// The unique path whose valleys occur at the high-peak cells of `d`.
/// Sends a path with `r-1` high peaks to one with `r` peaks; inverse of
/// type-A rowmotion on order ideals.
pub fn rho(d: &DyckPath) -> DyckPath {
    // A high peak with corner (x, y) occupies the cell with lower-left
    // corner (x-1, y); the valley at that cell has corner (x-1, y+1).
    let valleys: Vec<(usize, usize)> =
        d.high_peak_corners().iter().map(|&(x, y)| (x - 1, y + 1)).collect();
    DyckPath::from_valley_corners(d.n(), &valleys)
}

/// Inverse of [`rho`]: the unique path whose high peaks occur at the valley
/// cells of `d`.
pub fn rho_inv(d: &DyckPath) -> DyckPath {
    // A valley with corner (x, y) occupies the cell with lower-left corner
    // (x, y-1); the peak at that cell has corner (x+1, y-1).
    let highs: Vec<(usize, usize)> = d
        .peak_stats()
        .valley_corners
        .iter()
        .map(|&(x, y)| (x + 1, y - 1))
        .collect();
    from_high_peak_corners(d.n(), &highs)
}

/// Builds the unique path whose high-peak corners are exactly `highs`
/// (strictly increasing in both coordinates). Between consecutive high
/// peaks, the gap in heights forces a run of low peaks on the diagonal.
fn from_high_peak_corners(n: usize, highs: &[(usize, usize)]) -> DyckPath {
    let mut peaks: Vec<(usize, usize)> = Vec::new();
    let mut prev_x = 0usize;
    for &(x, y) in highs {
        for c in prev_x + 1..=y {
            peaks.push((c, c - 1));
        }
        peaks.push((x, y));
        prev_x = x;
    }
    for c in prev_x + 1..=n {
        peaks.push((c, c - 1));
    }
    DyckPath::from_peak_corners(n, &peaks)
}

/// The Lalanne-Kreweras involution: peak corners `(x_i, y_i)` are replaced
/// by `(y'_i, x'_i)`, where the primed sequences are the complements of the
/// peak coordinates in `{0, ..., n}`. Sends `r` peaks to `n + 1 - r` peaks.
pub fn lalanne_kreweras(d: &DyckPath) -> DyckPath {
    let n = d.n();
    if n == 0 {
        return d.clone();
    }
    let peaks = d.peak_stats().peak_corners;
    let xs: BTreeSet<usize> = peaks.iter().map(|p| p.0).collect();
    let ys: BTreeSet<usize> = peaks.iter().map(|p| p.1).collect();
    let x_comp = (0..=n).filter(|v| !xs.contains(v));
    let y_comp = (0..=n).filter(|v| !ys.contains(v));
    let new_peaks: Vec<(usize, usize)> = y_comp.zip(x_comp).collect();
    DyckPath::from_peak_corners(n, &new_peaks)
}

/// The involution `lalanne_kreweras . rho`: complements the number of high
/// peaks while preserving the number of low peaks.
pub fn lk_rho(d: &DyckPath) -> DyckPath {
    lalanne_kreweras(&rho(d))
}

/// Switches the two path steps on the boundary of the cell in the given row
/// and column (1-based, row < col), turning a corner around the cell's
/// lower-right vertex into one around its upper-left vertex or vice versa.
/// Paths with at most one step on the cell are left unchanged.
pub fn flip_cell(d: &DyckPath, row: usize, col: usize) -> DyckPath {
    debug_assert!(row < col, "flip cell must lie below the diagonal");
    let steps = d.steps();
    let target = (col - 1, row - 1);
    let mut x = 0usize;
    let mut y = 0usize;
    for v in 0..steps.len() {
        if (x, y) == target && v + 1 < steps.len() && steps[v] != steps[v + 1] {
            let mut flipped = steps.to_vec();
            flipped.swap(v, v + 1);
            return DyckPath::new(flipped).expect("flip stays below the diagonal");
        }
        if x > target.0 || y > target.1 {
            break;
        }
        match steps[v] {
            Step::E => x += 1,
            Step::N => y += 1,
        }
    }
    d.clone()
}

/// Swaps the copies of `k` and `k+1` in a nonnesting word, provided those
/// values are not adjacent in the underlying permutation. Preserves the
/// descent and plateau counts; self-inverse.
pub fn swap_value_pair(w: &Multipermutation, k: u32) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    if k == 0 || (k + 1) as usize > sigma.n() {
        return Err(Error::InvalidWord(format!(
            "value pair ({k},{}) out of range for n={}",
            k + 1,
            sigma.n()
        )));
    }
    let a = sigma.position_of(k);
    let b = sigma.position_of(k + 1);
    if a.abs_diff(b) == 1 {
        return Err(Error::AdjacentValues(k, k + 1));
    }
    let path = flip_cell(&w.dyck_path()?, a.min(b), a.max(b));
    Multipermutation::from_parts(&sigma.swap_values(k), &path)
}

/// The unique reverse-layered permutation with the given descent set:
/// increasing layers, each layer entirely larger than the next.
pub fn reverse_layered(set: &BTreeSet<usize>, n: usize) -> Result<Permutation> {
    if let Some(&d) = set.iter().next_back() {
        if d == 0 || d >= n {
            return Err(Error::DescentOutOfRange(d, n.saturating_sub(1)));
        }
    }
    if set.contains(&0) {
        return Err(Error::DescentOutOfRange(0, n.saturating_sub(1)));
    }
    let mut entries: Vec<u32> = Vec::with_capacity(n);
    let mut prev = 0usize;
    for &d in set.iter().chain(std::iter::once(&n)) {
        entries.extend(((n - d + 1)..=(n - prev)).map(|v| v as u32));
        prev = d;
    }
    Permutation::new(entries)
}

pub fn is_reverse_layered(sigma: &Permutation) -> bool {
    reverse_layered(&sigma.descent_set(), sigma.n())
        .map(|lam| lam == *sigma)
        .unwrap_or(false)
}

/// The canonical sequence of value swaps carrying `sigma` to the
/// reverse-layered representative of its descent class: repeatedly find the
/// largest entry out of place and swap the value currently at its target
/// position with its successor. Each swap preserves the descent set and
/// removes exactly one non-inversion.
pub fn layering_swaps(sigma: &Permutation) -> Vec<u32> {
    let n = sigma.n();
    let target =
        reverse_layered(&sigma.descent_set(), n).expect("descent set of a permutation");
    let mut current = sigma.clone();
    let mut swaps = Vec::new();
    while current != target {
        let ell = (1..=n as u32)
            .rev()
            .find(|&v| current.position_of(v) != target.position_of(v))
            .expect("some entry differs");
        let k = current.entries()[target.position_of(ell) - 1];
        swaps.push(k);
        current = current.swap_values(k);
    }
    swaps
}

/// Every sequence of descent-preserving, non-inversion-reducing value swaps
/// from `sigma` to its layered representative. Exponential; intended for
/// exhaustive checks at small n.
pub fn all_layering_swap_sequences(sigma: &Permutation) -> Vec<Vec<u32>> {
    fn extend(current: &Permutation, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let n = current.n() as u32;
        let mut any = false;
        for k in 1..n {
            let a = current.position_of(k);
            let b = current.position_of(k + 1);
            if a + 1 < b {
                any = true;
                prefix.push(k);
                extend(&current.swap_values(k), prefix, out);
                prefix.pop();
            }
        }
        if !any {
            out.push(prefix.clone());
        }
    }
    let mut out = Vec::new();
    extend(sigma, &mut Vec::new(), &mut out);
    out
}

/// Cells flipped by the class normalization of `sigma`, in application
/// order. The cells depend only on `sigma`, not on any path.
fn layering_cells(sigma: &Permutation) -> Vec<(usize, usize)> {
    let mut current = sigma.clone();
    let mut cells = Vec::new();
    for k in layering_swaps(sigma) {
        let a = current.position_of(k);
        let b = current.position_of(k + 1);
        cells.push((a.min(b), a.max(b)));
        current = current.swap_values(k);
    }
    cells
}

/// Path-level class normalization: the composite of the cell flips induced
/// by any swap sequence from `sigma` to its layered representative.
pub fn to_layered_class_path(sigma: &Permutation, d: &DyckPath) -> Result<DyckPath> {
    if sigma.n() != d.n() {
        return Err(Error::SizeMismatch { sigma: sigma.n(), path: d.n() });
    }
    let mut path = d.clone();
    for (row, col) in layering_cells(sigma) {
        path = flip_cell(&path, row, col);
    }
    Ok(path)
}

/// Applies the cell flips of an explicit swap sequence starting from
/// `sigma`. Used to confirm that the induced path map does not depend on
/// the choice of sequence.
pub fn apply_swap_sequence_path(
    sigma: &Permutation,
    swaps: &[u32],
    d: &DyckPath,
) -> Result<DyckPath> {
    if sigma.n() != d.n() {
        return Err(Error::SizeMismatch { sigma: sigma.n(), path: d.n() });
    }
    let mut current = sigma.clone();
    let mut path = d.clone();
    for &k in swaps {
        let a = current.position_of(k);
        let b = current.position_of(k + 1);
        path = flip_cell(&path, a.min(b), a.max(b));
        current = current.swap_values(k);
    }
    Ok(path)
}

/// Moves a nonnesting word into the class of the reverse-layered
/// representative of its descent set, preserving descents and plateaus.
pub fn to_layered_class(w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    let lam = reverse_layered(&sigma.descent_set(), sigma.n())?;
    let path = to_layered_class_path(&sigma, &w.dyck_path()?)?;
    Multipermutation::from_parts(&lam, &path)
}

/// Inverse of [`to_layered_class`] towards the given `sigma`.
pub fn from_layered_class(sigma: &Permutation, w: &Multipermutation) -> Result<Multipermutation> {
    let lam = reverse_layered(&sigma.descent_set(), sigma.n())?;
    let found = w.underlying()?;
    if found != lam {
        return Err(Error::ClassMismatch {
            expected: lam.to_string(),
            found: found.to_string(),
        });
    }
    let mut path = w.dyck_path()?;
    for (row, col) in layering_cells(sigma).into_iter().rev() {
        path = flip_cell(&path, row, col);
    }
    Multipermutation::from_parts(sigma, &path)
}

/// Path surgery removing the largest descent of a layered class: inside the
/// rectangle bounded by the top descent and the next one, the leading or
/// trailing run of E steps is moved to the other end of the enclosed
/// segment. An involution on paths for a fixed descent set.
pub fn drop_top_descent_path(d: &DyckPath, set: &BTreeSet<usize>) -> Result<DyckPath> {
    let n = d.n();
    let m = *set.iter().next_back().ok_or(Error::EmptyDescentSet)?;
    if m == 0 || m >= n {
        return Err(Error::DescentOutOfRange(m, n.saturating_sub(1)));
    }
    let ell = set.iter().rev().nth(1).copied().unwrap_or(0);
    let steps = d.steps();

    // The enclosed segment: strictly after the m-th E step and strictly
    // before the (ell+1)-st N step.
    let mut east = 0usize;
    let mut north = 0usize;
    let mut after_m_east = None;
    let mut at_lp1_north = None;
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::E => {
                east += 1;
                if east == m && after_m_east.is_none() {
                    after_m_east = Some(i + 1);
                }
            }
            Step::N => {
                north += 1;
                if north == ell + 1 && at_lp1_north.is_none() {
                    at_lp1_north = Some(i);
                }
            }
        }
    }
    let start = after_m_east.expect("path has at least m E steps");
    let end = at_lp1_north.expect("path has at least ell+1 N steps");
    if start >= end {
        return Ok(d.clone());
    }
    let segment = &steps[start..end];
    let first = segment[0];
    let last = *segment.last().unwrap();
    if first == last {
        return Ok(d.clone());
    }
    let mut new_segment: Vec<Step> = Vec::with_capacity(segment.len());
    if first == Step::E {
        // E ... N: move the leading run of E steps to the end.
        let run = segment.iter().take_while(|&&s| s == Step::E).count();
        new_segment.extend_from_slice(&segment[run..]);
        new_segment.extend(std::iter::repeat(Step::E).take(run));
    } else {
        // N ... E: move the trailing run of E steps to the front.
        let run = segment.iter().rev().take_while(|&&s| s == Step::E).count();
        new_segment.extend(std::iter::repeat(Step::E).take(run));
        new_segment.extend_from_slice(&segment[..segment.len() - run]);
    }
    let mut new_steps = steps[..start].to_vec();
    new_steps.extend_from_slice(&new_segment);
    new_steps.extend_from_slice(&steps[end..]);
    DyckPath::new(new_steps)
}

fn expect_layered(w: &Multipermutation) -> Result<(Permutation, BTreeSet<usize>)> {
    let sigma = w.underlying()?;
    let set = sigma.descent_set();
    let lam = reverse_layered(&set, sigma.n())?;
    if sigma != lam {
        return Err(Error::ClassMismatch {
            expected: lam.to_string(),
            found: sigma.to_string(),
        });
    }
    Ok((sigma, set))
}

/// Removes the largest descent of a layered-class word: descents drop by
/// exactly one, plateaus are preserved.
pub fn drop_top_descent(w: &Multipermutation) -> Result<Multipermutation> {
    let (sigma, set) = expect_layered(w)?;
    if set.is_empty() {
        return Err(Error::EmptyDescentSet);
    }
    let path = drop_top_descent_path(&w.dyck_path()?, &set)?;
    let mut rest = set.clone();
    rest.pop_last();
    Multipermutation::from_parts(&reverse_layered(&rest, sigma.n())?, &path)
}

/// The shrinking chain of descent sets `S, S minus max, ..., empty`.
fn descent_chain(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut chain = vec![set.clone()];
    let mut cur = set.clone();
    while !cur.is_empty() {
        cur.pop_last();
        chain.push(cur.clone());
    }
    chain
}

/// Path-level composite removing every descent of `set`, largest first.
pub fn drop_all_descents_path(d: &DyckPath, set: &BTreeSet<usize>) -> Result<DyckPath> {
    let mut path = d.clone();
    let chain = descent_chain(set);
    for s in &chain[..chain.len() - 1] {
        path = drop_top_descent_path(&path, s)?;
    }
    Ok(path)
}

/// Inverse of [`drop_all_descents_path`]: reinstates the descents of `set`
/// smallest first, using the involution property of each step.
pub fn restore_descents_path(d: &DyckPath, set: &BTreeSet<usize>) -> Result<DyckPath> {
    let mut path = d.clone();
    let chain = descent_chain(set);
    for s in chain[..chain.len() - 1].iter().rev() {
        path = drop_top_descent_path(&path, s)?;
    }
    Ok(path)
}

/// Empties the descent set of a layered-class word, one descent at a time.
pub fn drop_all_descents(w: &Multipermutation) -> Result<Multipermutation> {
    let (_, set) = expect_layered(w)?;
    let path = drop_all_descents_path(&w.dyck_path()?, &set)?;
    Multipermutation::from_parts(&Permutation::identity(w.n()), &path)
}

/// Inverse of [`drop_all_descents`] towards the layered class of `set`.
pub fn restore_descents(set: &BTreeSet<usize>, w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    if !sigma.is_identity() {
        return Err(Error::ClassMismatch {
            expected: Permutation::identity(w.n()).to_string(),
            found: sigma.to_string(),
        });
    }
    let path = restore_descents_path(&w.dyck_path()?, set)?;
    Multipermutation::from_parts(&reverse_layered(set, w.n())?, &path)
}

/// Path-level composite of the class normalization and descent removal.
pub fn to_identity_class_path(sigma: &Permutation, d: &DyckPath) -> Result<DyckPath> {
    let path = to_layered_class_path(sigma, d)?;
    drop_all_descents_path(&path, &sigma.descent_set())
}

/// Inverse of [`to_identity_class_path`].
pub fn from_identity_class_path(sigma: &Permutation, d: &DyckPath) -> Result<DyckPath> {
    let path = restore_descents_path(d, &sigma.descent_set())?;
    let mut out = path;
    for (row, col) in layering_cells(sigma).into_iter().rev() {
        out = flip_cell(&out, row, col);
    }
    Ok(out)
}

/// The statistic-controlled bijection from the class of `underlying(w)` to
/// the identity class: descents drop by the number of descents of the
/// underlying permutation, plateaus are preserved.
pub fn to_identity_class(w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    let path = to_identity_class_path(&sigma, &w.dyck_path()?)?;
    Multipermutation::from_parts(&Permutation::identity(w.n()), &path)
}

/// Inverse of [`to_identity_class`] towards the class of `sigma`.
pub fn from_identity_class(sigma: &Permutation, w: &Multipermutation) -> Result<Multipermutation> {
    let found = w.underlying()?;
    if !found.is_identity() {
        return Err(Error::ClassMismatch {
            expected: Permutation::identity(w.n()).to_string(),
            found: found.to_string(),
        });
    }
    if sigma.n() != w.n() {
        return Err(Error::SizeMismatch { sigma: sigma.n(), path: w.n() });
    }
    let path = from_identity_class_path(sigma, &w.dyck_path()?)?;
    Multipermutation::from_parts(sigma, &path)
}

/// The Lalanne-Kreweras involution transported to identity-class words:
/// complements weak descents within `0..=n+1`.
pub fn lalanne_kreweras_word(w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    if !sigma.is_identity() {
        return Err(Error::ClassMismatch {
            expected: Permutation::identity(w.n()).to_string(),
            found: sigma.to_string(),
        });
    }
    let path = lalanne_kreweras(&w.dyck_path()?);
    Multipermutation::from_parts(&sigma, &path)
}

/// Involution on each class complementing the shifted weak-descent count:
/// `wdes - des(underlying)` maps to `n + 1 - (wdes - des(underlying))`.
pub fn wdes_involution(w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    let inner = lalanne_kreweras_word(&to_identity_class(w)?)?;
    from_identity_class(&sigma, &inner)
}

/// Global involution sending the class of `sigma` to the class of its
/// reversal and complementing weak descents: `wdes` maps to `2n - wdes`.
pub fn wdes_global_involution(w: &Multipermutation) -> Result<Multipermutation> {
    let sigma = w.underlying()?;
    let inner = lalanne_kreweras_word(&to_identity_class(w)?)?;
    from_identity_class(&sigma.reverse(), &inner)
}

/// Involution on each class complementing the shifted descent count:
/// `des - des(underlying)` maps to `n - 1 - (des - des(underlying))`.
pub fn des_involution(w: &Multipermutation) -> Result<Multipermutation> {
    Ok(wdes_involution(&w.reverse())?.reverse())
}

/// Global involution complementing descents: `des` maps to `2n - 2 - des`.
pub fn des_global_involution(w: &Multipermutation) -> Result<Multipermutation> {
    Ok(wdes_global_involution(&w.reverse())?.reverse())
}
