//! Arc diagrams over points `1..=m` on a line, used both for the matching of
//! a two-copy word (one arc per value) and for the consecutive-copy block
//! arcs of a `k`-copy word.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Multipermutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n_points: usize,
    /// Pairs `(i, j)` with `i < j`, 1-based, sorted.
    arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn new(n_points: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        arcs.sort_unstable();
        for w in arcs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidWord(format!("duplicate arc {:?}", w[0])));
            }
        }
        for &(i, j) in &arcs {
            if i == 0 || j <= i || j > n_points {
                return Err(Error::InvalidWord(format!("arc ({i},{j}) out of range")));
            }
        }
        Ok(ArcDiagram { n_points, arcs })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// True if some pair of arcs `(i,m)`, `(j,l)` satisfies `i < j < l < m`.
    pub fn has_nesting(&self) -> bool {
        for (a, &(i, m)) in self.arcs.iter().enumerate() {
            for &(j, l) in &self.arcs[a + 1..] {
                if (i < j && l < m) || (j < i && m < l) {
                    return true;
                }
            }
        }
        false
    }

    /// True if some pair of arcs `(i,l)`, `(j,m)` satisfies `i < j < l < m`.
    pub fn has_crossing(&self) -> bool {
        for (a, &(i, l)) in self.arcs.iter().enumerate() {
            for &(j, m) in &self.arcs[a + 1..] {
                if (i < j && j < l && l < m) || (j < i && i < m && m < l) {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.arcs.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The matching of a two-copy word: one arc per value, joining the positions
/// of its two copies.
pub fn matching(w: &Multipermutation) -> Result<ArcDiagram> {
    if w.n() > 0 && w.k() != 2 {
        return Err(Error::NeedsTwoCopies(w.k()));
    }
    Ok(block_arcs(w))
}

/// The consecutive-copy arc diagram: each value with copies at positions
/// `i_1 < i_2 < ... < i_k` contributes the arcs `(i_1,i_2), ..., (i_{k-1},i_k)`.
pub fn block_arcs(w: &Multipermutation) -> ArcDiagram {
    let mut last: Vec<Option<usize>> = vec![None; w.n() + 1];
    let mut arcs = Vec::new();
    for (pos0, &v) in w.entries().iter().enumerate() {
        let pos = pos0 + 1;
        if let Some(prev) = last[v as usize] {
            arcs.push((prev, pos));
        }
        last[v as usize] = Some(pos);
    }
    ArcDiagram::new(w.len(), arcs).expect("arcs from positions are valid")
}
