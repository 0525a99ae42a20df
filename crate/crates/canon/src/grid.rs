//! The decorated grid of an underlying permutation: the `n x n` grid with
//! rows and columns labeled by the entries of `sigma`, red lines at the
//! descents of `sigma`, and a corner notch in every cell below the diagonal.
//!
//! Descents of the word assembled from `(sigma, D)` show up geometrically on
//! this grid: an `EE` or `NN` pair crossing a red line (a double-step), or an
//! `EN`/`NE` pair bending around a notch (a corner).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::word::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notch {
    UpperLeft,
    LowerRight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedGrid {
    n: usize,
    labels: Vec<u32>,
    /// Indices `i` such that a red vertical line separates columns `i`, `i+1`
    /// and a red horizontal line separates rows `i`, `i+1`.
    red_lines: BTreeSet<usize>,
    /// Notch of each cell `(row, col)` strictly below the diagonal
    /// (`row < col`, both 1-based).
    notches: BTreeMap<(usize, usize), Notch>,
}

impl DecoratedGrid {
    pub fn new(sigma: &Permutation) -> Self {
        let labels = sigma.entries().to_vec();
        let red_lines = sigma.descent_set();
        let mut notches = BTreeMap::new();
        for row in 1..=sigma.n() {
            for col in row + 1..=sigma.n() {
                let notch = if labels[row - 1] > labels[col - 1] {
                    Notch::UpperLeft
                } else {
                    Notch::LowerRight
                };
                notches.insert((row, col), notch);
            }
        }
        DecoratedGrid { n: sigma.n(), labels, red_lines, notches }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, bottom to top and left to right.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn red_lines(&self) -> &BTreeSet<usize> {
        &self.red_lines
    }

    pub fn notch(&self, row: usize, col: usize) -> Option<Notch> {
        self.notches.get(&(row, col)).copied()
    }

    /// Counts the double-steps and corners of `path` on this grid. Equals
    /// the number of descents of the word assembled from the labels and the
    /// path.
    pub fn descent_count(&self, path: &DyckPath) -> Result<usize> {
        if path.n() != self.n {
            return Err(Error::SizeMismatch { sigma: self.n, path: path.n() });
        }
        let steps = path.steps();
        let mut x = 0usize;
        let mut y = 0usize;
        let mut count = 0usize;
        for pair in steps.windows(2) {
            match pair[0] {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            match (pair[0], pair[1]) {
                // EE crossing the vertical line at x.
                (Step::E, Step::E) => {
                    if self.red_lines.contains(&x) {
                        count += 1;
                    }
                }
                // NN crossing the horizontal line at y.
                (Step::N, Step::N) => {
                    if self.red_lines.contains(&y) {
                        count += 1;
                    }
                }
                // Peak with corner (x, y): cell in row y+1, column x.
                (Step::E, Step::N) => {
                    if self.notch(y + 1, x) == Some(Notch::LowerRight) {
                        count += 1;
                    }
                }
                // Valley with corner (x, y): cell in row y, column x+1.
                (Step::N, Step::E) => {
                    if self.notch(y, x + 1) == Some(Notch::UpperLeft) {
                        count += 1;
                    }
                }
            }
        }
        Ok(count)
    }
}

/// The descent count of the word `(sigma, path)` computed geometrically.
pub fn descents_on_grid(path: &DyckPath, sigma: &Permutation) -> Result<usize> {
    DecoratedGrid::new(sigma).descent_count(path)
}
