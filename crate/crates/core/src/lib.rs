//! Addition tables whose cells are exactly `0, 1, ..., r*c - 1`.
//!
//! An `r x c` table with row labels `A` and column labels `B` holds
//! `A_i + B_j` in cell `(i, j)`. This crate finds every labeling for which
//! those sums are the integers `0..r*c` without repetition, by three
//! independent routes:
//!
//! - [`splitter`]: split the cyclotomic factors of `1 + x + ... + x^(rc-1)`
//!   between `a(x)` and `b(x)` and keep the 0/1 products;
//! - [`geometry`]: realize nested block partitions as mixed-radix digit sets;
//! - [`oracle`]: plain backtracking over label placements.
//!
//! [`report`] compares their counts with the divisor-count prediction and
//! [`dice`] checks sum distributions of dice with the same polynomial tools.

pub mod cyclotomic;
pub mod dice;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod output;
pub mod poly;
pub mod render;
pub mod report;
pub mod splitter;
pub mod splitting;

pub use error::{Error, Result};
pub use poly::Poly;
pub use splitting::Splitting;
