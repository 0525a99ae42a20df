//! Exact combinatorics of nonnesting multiset permutations (also called
//! canon permutations): words over `{1,1,2,2,...,n,n}` avoiding 1221 and
//! 2112, equivalently those whose first-copy and second-copy subsequences
//! coincide.
//!
//! The crate provides:
//!
//! - domain types for permutations, multiset words, Dyck paths, arc
//!   diagrams, and decorated grids, with descent/plateau statistics and
//!   pattern containment ([`word`], [`path`], [`arc`], [`grid`]);
//! - deterministic exhaustive enumeration of all of the above
//!   ([`enumerate`]);
//! - exact integer polynomial arithmetic in two variables and the named
//!   distributions: Eulerian polynomials, bivariate Narayana polynomials,
//!   and descent/plateau distributions ([`poly`], [`families`]);
//! - the bijections relating these objects: the valley/high-peak exchange,
//!   the Lalanne-Kreweras involution, cell flips, class normalization,
//!   descent removal, and the symmetry involutions they induce on words
//!   ([`bijection`]);
//! - the three `k`-copy generalizations: 1221/2112-avoiders, words with
//!   nonnesting consecutive-copy arcs, and canon words with `k` equal
//!   voices ([`general`]);
//! - machine verification of every identity at desk scale, with
//!   coefficient-level witnesses on failure ([`verify`]).

pub mod arc;
pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod general;
pub mod grid;
pub mod path;
pub mod poly;
pub mod verify;
pub mod word;

pub use num_bigint;

pub use error::{Error, Result};
pub use path::{DyckPath, Step};
pub use poly::BivariatePoly;
pub use word::{Multipermutation, Permutation, Statistics};
