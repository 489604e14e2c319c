//! Splittings built from nested block partitions of the table.
//!
//! Cutting an `r x c` grid into equal blocks, and the blocks into smaller
//! blocks, and filling `0..rc` along a fixed path, amounts to writing each
//! value in a mixed-radix system whose digit positions are split between the
//! row side and the column side. A [`RadixScheme`] records that ordered list
//! of `(radix, side)` positions, least significant first. The row labels are
//! all values whose nonzero digits sit in `A` positions, the column labels
//! those whose nonzero digits sit in `B` positions.
//!
//! Adjacent positions on the same side merge into one (`(f, A), (g, A)` and
//! `(f*g, A)` realize the same sets), so enumeration only walks schemes whose
//! sides alternate.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle;
use crate::splitter::{check_cells, DEFAULT_CELL_CAP};
use crate::splitting::Splitting;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Position {
    pub radix: usize,
    pub side: Side,
}

/// An ordered factorization of `rows * cols`, each factor assigned to a side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RadixScheme {
    positions: Vec<Position>,
}

impl RadixScheme {
    pub fn new(positions: Vec<Position>) -> Result<Self> {
        if let Some(p) = positions.iter().find(|p| p.radix < 2) {
            return Err(Error::InvalidScheme(format!(
                "radix {} is below 2",
                p.radix
            )));
        }
        let scheme = RadixScheme { positions };
        scheme
            .side_product(Side::A)
            .and(scheme.side_product(Side::B))
            .and(scheme.cells())
            .ok_or_else(|| Error::InvalidScheme("radix product overflows".into()))?;
        Ok(scheme)
    }

    /// Shorthand for building from `(radix, side)` pairs.
    pub fn from_pairs(pairs: &[(usize, Side)]) -> Result<Self> {
        RadixScheme::new(
            pairs
                .iter()
                .map(|&(radix, side)| Position { radix, side })
                .collect(),
        )
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    fn side_product(&self, side: Side) -> Option<usize> {
        self.positions
            .iter()
            .filter(|p| p.side == side)
            .try_fold(1usize, |acc, p| acc.checked_mul(p.radix))
    }

    pub fn rows(&self) -> usize {
        self.side_product(Side::A).unwrap()
    }

    pub fn cols(&self) -> usize {
        self.side_product(Side::B).unwrap()
    }

    fn cells(&self) -> Option<usize> {
        self.positions
            .iter()
            .try_fold(1usize, |acc, p| acc.checked_mul(p.radix))
    }

    /// Place value of each position: 1, then the running product of radices.
    pub fn place_values(&self) -> Vec<usize> {
        self.positions
            .iter()
            .scan(1usize, |place, p| {
                let here = *place;
                *place *= p.radix;
                Some(here)
            })
            .collect()
    }

    /// True if no two adjacent positions share a side.
    pub fn is_alternating(&self) -> bool {
        self.positions.windows(2).all(|w| w[0].side != w[1].side)
    }

    /// Merges runs of adjacent same-side positions into single positions.
    pub fn merged(&self) -> RadixScheme {
        let mut out: Vec<Position> = Vec::new();
        for &p in &self.positions {
            match out.last_mut() {
                Some(last) if last.side == p.side => last.radix *= p.radix,
                _ => out.push(p),
            }
        }
        RadixScheme { positions: out }
    }

    /// Digit sets of both sides. The result is always a valid splitting,
    /// since every value below the radix product has one mixed-radix
    /// representation.
    pub fn realize(&self) -> Splitting {
        let mut a = vec![0usize];
        let mut b = vec![0usize];
        for (p, place) in self.positions.iter().zip(self.place_values()) {
            let set = match p.side {
                Side::A => &mut a,
                Side::B => &mut b,
            };
            let grown: Vec<usize> = (0..p.radix)
                .flat_map(|d| set.iter().map(move |&x| x + d * place))
                .collect();
            *set = grown;
        }
        Splitting::new(a, b)
    }

    fn factors_on(&self, side: Side) -> Vec<usize> {
        self.positions
            .iter()
            .filter(|p| p.side == side)
            .map(|p| p.radix)
            .collect()
    }
}

impl fmt::Display for RadixScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}{:?}", p.radix, p.side)?;
        }
        f.write_str("]")
    }
}

/// Recovers the alternating scheme that realizes `s`, or `None` if `s` is
/// not realized by any scheme.
///
/// Reading from the least significant place upward: the side holding the
/// current place value `P` owns the next position, and its radix is the
/// length of the run `0, P, 2P, ...` inside that side.
pub fn decompose(s: &Splitting) -> Option<RadixScheme> {
    let m = s.cells();
    let a: HashSet<usize> = s.a.iter().copied().collect();
    let b: HashSet<usize> = s.b.iter().copied().collect();
    let mut positions = Vec::new();
    let mut place = 1usize;
    while place < m {
        let (side, set) = if a.contains(&place) {
            (Side::A, &a)
        } else if b.contains(&place) {
            (Side::B, &b)
        } else {
            return None;
        };
        let mut radix = 2;
        while set.contains(&(radix * place)) {
            radix += 1;
        }
        positions.push(Position { radix, side });
        place = place.checked_mul(radix)?;
    }
    let scheme = RadixScheme { positions };
    (place == m && scheme.realize() == *s).then_some(scheme)
}

/// All ordered factorizations of `n` into factors `>= 2`, in ascending
/// lexicographic order. `1` has the single empty factorization.
pub fn ordered_factorizations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for f in (2..=n).filter(|f| n % f == 0) {
        for mut rest in ordered_factorizations(n / f) {
            rest.insert(0, f);
            out.push(rest);
        }
    }
    out
}

fn interleave(first: &[usize], first_side: Side, second: &[usize]) -> RadixScheme {
    let mut positions = Vec::with_capacity(first.len() + second.len());
    for i in 0..first.len().max(second.len()) {
        if let Some(&radix) = first.get(i) {
            positions.push(Position {
                radix,
                side: first_side,
            });
        }
        if let Some(&radix) = second.get(i) {
            positions.push(Position {
                radix,
                side: first_side.other(),
            });
        }
    }
    RadixScheme { positions }
}

/// Every alternating scheme with side products `rows` and `cols`, having at
/// most `max_per_side` positions on each side.
pub fn alternating_schemes(rows: usize, cols: usize, max_per_side: usize) -> Vec<RadixScheme> {
    let fa: Vec<_> = ordered_factorizations(rows)
        .into_iter()
        .filter(|f| f.len() <= max_per_side)
        .collect();
    let fb: Vec<_> = ordered_factorizations(cols)
        .into_iter()
        .filter(|f| f.len() <= max_per_side)
        .collect();
    let mut out = Vec::new();
    for x in &fa {
        for y in &fb {
            let (ka, kb) = (x.len(), y.len());
            if ka == kb + 1 || (ka == kb && ka > 0) {
                out.push(interleave(x, Side::A, y));
            }
            if kb == ka + 1 || (ka == kb && kb > 0) {
                out.push(interleave(y, Side::B, x));
            }
            if ka == 0 && kb == 0 {
                out.push(RadixScheme::default());
            }
        }
    }
    out
}

fn realize_all(rows: usize, cols: usize, schemes: Vec<RadixScheme>) -> Result<Vec<Splitting>> {
    let mut set = BTreeSet::new();
    for scheme in schemes {
        let s = scheme.realize();
        if !oracle::verify(&s).valid || s.rows != rows || s.cols != cols {
            return Err(Error::InvariantViolation(format!(
                "scheme {scheme} realized an invalid table"
            )));
        }
        set.insert(s.canonical());
    }
    Ok(set.into_iter().collect())
}

/// All splittings reachable by nested block partitions, canonical and sorted.
pub fn enumerate_schemes(rows: usize, cols: usize) -> Result<Vec<Splitting>> {
    enumerate_schemes_with(rows, cols, DEFAULT_CELL_CAP)
}

pub fn enumerate_schemes_with(rows: usize, cols: usize, cell_cap: usize) -> Result<Vec<Splitting>> {
    check_cells(rows, cols, cell_cap)?;
    realize_all(rows, cols, alternating_schemes(rows, cols, usize::MAX))
}

/// The single-level block construction on an `n x n` table: each side is
/// cut at most once into equal blocks, so each side carries at most two
/// radix positions.
pub fn flat_patterns(n: usize) -> Result<Vec<Splitting>> {
    check_cells(n, n, DEFAULT_CELL_CAP)?;
    realize_all(n, n, alternating_schemes(n, n, 2))
}

/// Radix factors of `s` on each side, innermost first, when `s` comes from a
/// scheme. Used to draw block outlines.
pub fn block_radices(s: &Splitting) -> Option<(Vec<usize>, Vec<usize>)> {
    let scheme = decompose(s)?;
    Some((scheme.factors_on(Side::A), scheme.factors_on(Side::B)))
}
