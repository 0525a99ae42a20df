//! Dyck paths: lattice paths from `(0,0)` to `(n,n)` with unit steps
//! `E = (1,0)` and `N = (0,1)` that stay weakly below the diagonal `y = x`.
//!
//! Coordinates are Cartesian with the origin at the lower-left corner of the
//! `n x n` grid. A peak is an `EN` pair, a valley an `NE` pair; a peak is low
//! if it touches the diagonal and high otherwise.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Peak and valley data of a path. Coordinates are the lattice points at the
/// corner of each `EN` (peak) or `NE` (valley) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakStats {
    pub pea: usize,
    pub lpea: usize,
    pub hpea: usize,
    pub peak_corners: Vec<(usize, usize)>,
    pub valley_corners: Vec<(usize, usize)>,
}

impl DyckPath {
    /// Validates the ballot property: equal numbers of E and N steps, and
    /// every prefix has at least as many E steps as N steps.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut east = 0usize;
        let mut north = 0usize;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::E => east += 1,
                Step::N => north += 1,
            }
            if north > east {
                return Err(Error::InvalidWord(format!(
                    "path rises above the diagonal after step {}",
                    i + 1
                )));
            }
        }
        if east != north {
            return Err(Error::InvalidWord(format!(
                "unbalanced path: {east} E steps vs {north} N steps"
            )));
        }
        Ok(DyckPath { steps })
    }

    /// The staircase `(EN)^n`, touching the diagonal at every step.
    pub fn staircase(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::E, Step::N]).collect();
        DyckPath { steps }
    }

    /// The path `E^n N^n`.
    pub fn rectangle(n: usize) -> Self {
        let mut steps = vec![Step::E; n];
        steps.extend(vec![Step::N; n]);
        DyckPath { steps }
    }

    /// Semilength: the path has `2n` steps.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Lattice points visited, starting at `(0,0)`, one per step taken.
    fn walk(&self) -> impl Iterator<Item = (usize, usize, Step)> + '_ {
        let mut x = 0usize;
        let mut y = 0usize;
        self.steps.iter().map(move |&s| {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            (x, y, s)
        })
    }

    pub fn peak_stats(&self) -> PeakStats {
        let mut peak_corners = Vec::new();
        let mut valley_corners = Vec::new();
        let mut lpea = 0;
        let points: Vec<(usize, usize, Step)> = self.walk().collect();
        for w in points.windows(2) {
            let ((x, y, a), (_, _, b)) = (w[0], w[1]);
            match (a, b) {
                (Step::E, Step::N) => {
                    peak_corners.push((x, y));
                    if x == y + 1 {
                        lpea += 1;
                    }
                }
                (Step::N, Step::E) => valley_corners.push((x, y)),
                _ => {}
            }
        }
        let pea = peak_corners.len();
        PeakStats { pea, lpea, hpea: pea - lpea, peak_corners, valley_corners }
    }

    /// Corner points of the high peaks only.
    pub fn high_peak_corners(&self) -> Vec<(usize, usize)> {
        self.peak_stats()
            .peak_corners
            .into_iter()
            .filter(|&(x, y)| x != y + 1)
            .collect()
    }

    /// Rebuilds the unique path whose valleys have the given corner points.
    /// Corners must be strictly increasing in both coordinates and weakly
    /// below the diagonal.
    pub fn from_valley_corners(n: usize, corners: &[(usize, usize)]) -> Self {
        let mut steps = Vec::with_capacity(2 * n);
        let mut x = 0usize;
        let mut y = 0usize;
        for &(a, b) in corners {
            steps.extend(std::iter::repeat(Step::E).take(a - x));
            steps.extend(std::iter::repeat(Step::N).take(b - y));
            x = a;
            y = b;
        }
        steps.extend(std::iter::repeat(Step::E).take(n - x));
        steps.extend(std::iter::repeat(Step::N).take(n - y));
        DyckPath { steps }
    }

    /// Rebuilds the unique path whose peaks have the given corner points.
    pub fn from_peak_corners(n: usize, corners: &[(usize, usize)]) -> Self {
        let mut steps = Vec::with_capacity(2 * n);
        let mut x = 0usize;
        let mut y = 0usize;
        for &(a, b) in corners {
            steps.extend(std::iter::repeat(Step::N).take(b - y));
            steps.extend(std::iter::repeat(Step::E).take(a - x));
            x = a;
            y = b;
        }
        steps.extend(std::iter::repeat(Step::N).take(n - y));
        debug_assert_eq!(x, n, "last peak must lie on x = n");
        DyckPath { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("expected 'E' or 'N', found {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!("EN".parse::<DyckPath>().is_ok());
        assert!("NE".parse::<DyckPath>().is_err());
        assert!("EEN".parse::<DyckPath>().is_err());
        assert!("EX".parse::<DyckPath>().is_err());
        assert!("".parse::<DyckPath>().unwrap().is_empty());
    }

    #[test]
    fn peak_stats_staircase_and_rectangle() {
        for n in 1..=6 {
            let zigzag = DyckPath::staircase(n);
            let s = zigzag.peak_stats();
            assert_eq!((s.pea, s.lpea, s.hpea), (n, n, 0));
            assert_eq!(s.valley_corners.len(), n - 1);

            let rect = DyckPath::rectangle(n);
            let s = rect.peak_stats();
            assert_eq!(s.pea, 1);
            assert_eq!(s.lpea, usize::from(n == 1));
            assert_eq!(s.hpea, 1 - usize::from(n == 1));
        }
        let s = DyckPath::new(vec![]).unwrap().peak_stats();
        assert_eq!((s.pea, s.lpea, s.hpea), (0, 0, 0));
    }

    #[test]
    fn peak_corner_coordinates() {
        // Peaks at x = 1,3,4,5,6,9 and y = 0,1,2,3,4,5 with n = 9.
        let d: DyckPath = "ENEENENENENEEENNNN".parse().unwrap();
        let s = d.peak_stats();
        assert_eq!(s.pea, 6);
        assert_eq!(
            s.peak_corners,
            vec![(1, 0), (3, 1), (4, 2), (5, 3), (6, 4), (9, 5)]
        );
    }

    #[test]
    fn corner_roundtrip() {
        let d: DyckPath = "EENENNEENN".parse().unwrap();
        let s = d.peak_stats();
        assert_eq!(DyckPath::from_peak_corners(d.n(), &s.peak_corners), d);
        assert_eq!(DyckPath::from_valley_corners(d.n(), &s.valley_corners), d);
    }
}
