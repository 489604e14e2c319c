//! Method-independent ground truth.
//!
//! [`verify_splitting`] checks a proposed labeling cell by cell.
//! [`enumerate_bruteforce`] finds every labeling by backtracking, without
//! any polynomial or radix machinery: labels are placed in increasing order,
//! and the least value `v` not yet covered by a sum must itself be a label,
//! since any other representation `a + b` with `0 < a, b < v` would already
//! be covered. So the search only ever branches on "`v` joins `B`" versus
//! "`v` joins `A`".

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::splitting::Splitting;

pub const DEFAULT_BRUTEFORCE_CAP: usize = 20_736;

/// Why a proposed labeling is not a splitting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    /// A label list does not have the required length.
    WrongSize {
        side: char,
        expected: usize,
        actual: usize,
    },
    /// The smallest value in `0..r*c` produced by more than one cell.
    Duplicated { value: i64 },
    /// The smallest value in `0..r*c` produced by no cell.
    Missing { value: i64 },
}

impl std::fmt::Display for Defect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Defect::WrongSize {
                side,
                expected,
                actual,
            } => write!(f, "{side} has {actual} labels, expected {expected}"),
            Defect::Duplicated { value } => write!(f, "value {value} duplicated"),
            Defect::Missing { value } => write!(f, "value {value} missing"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<Defect>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            valid: true,
            defect: None,
        }
    }

    fn fail(defect: Defect) -> Self {
        Verdict {
            valid: false,
            defect: Some(defect),
        }
    }
}

/// Checks that `A + B` hits every value of `0..rows*cols` exactly once.
///
/// Any input is a legal query, including negative or repeated labels.
pub fn verify_splitting(a: &[i64], b: &[i64], rows: usize, cols: usize) -> Verdict {
    if a.len() != rows {
        return Verdict::fail(Defect::WrongSize {
            side: 'A',
            expected: rows,
            actual: a.len(),
        });
    }
    if b.len() != cols {
        return Verdict::fail(Defect::WrongSize {
            side: 'B',
            expected: cols,
            actual: b.len(),
        });
    }
    let m = rows * cols;
    let mut hits = vec![0u32; m];
    for &x in a {
        for &y in b {
            let s = x as i128 + y as i128;
            if (0..m as i128).contains(&s) {
                hits[s as usize] += 1;
            }
        }
    }
    // With exactly m sums in total, an out-of-range sum always leaves some
    // in-range value missing, so scanning 0..m is enough.
    match hits.iter().position(|&h| h != 1) {
        None => Verdict::ok(),
        Some(v) if hits[v] == 0 => Verdict::fail(Defect::Missing { value: v as i64 }),
        Some(v) => Verdict::fail(Defect::Duplicated { value: v as i64 }),
    }
}

/// [`verify_splitting`] for an already-typed [`Splitting`].
pub fn verify(s: &Splitting) -> Verdict {
    let a: Vec<i64> = s.a.iter().map(|&x| x as i64).collect();
    let b: Vec<i64> = s.b.iter().map(|&x| x as i64).collect();
    verify_splitting(&a, &b, s.rows, s.cols)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchLimits {
    pub cell_cap: usize,
    pub max_time: Option<Duration>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            cell_cap: DEFAULT_BRUTEFORCE_CAP,
            max_time: None,
        }
    }
}

struct Search<'f> {
    rows: usize,
    cols: usize,
    covered: Vec<bool>,
    a: Vec<usize>,
    b: Vec<usize>,
    deadline: Option<(Instant, Duration)>,
    nodes: u64,
    on_solution: &'f mut dyn FnMut(&[usize], &[usize]),
}

#[derive(Clone, Copy)]
enum Side {
    A,
    B,
}

impl Search<'_> {
    fn m(&self) -> usize {
        self.covered.len()
    }

    /// Adds `v` to `side`, marking its new sums. Leaves state untouched and
    /// returns false on an out-of-range sum or a collision.
    fn place(&mut self, v: usize, side: Side) -> bool {
        let m = self.m();
        let (full, others) = match side {
            Side::A => (self.a.len() == self.rows, &self.b),
            Side::B => (self.b.len() == self.cols, &self.a),
        };
        if full {
            return false;
        }
        let mut marked = 0;
        let mut ok = true;
        for &o in others.iter() {
            let s = o + v;
            if s >= m || self.covered[s] {
                ok = false;
                break;
            }
            self.covered[s] = true;
            marked += 1;
        }
        if !ok {
            for &o in others.iter().take(marked) {
                self.covered[o + v] = false;
            }
            return false;
        }
        match side {
            Side::A => self.a.push(v),
            Side::B => self.b.push(v),
        }
        true
    }

    fn unplace(&mut self, side: Side) {
        let (v, others) = match side {
            Side::A => (self.a.pop().unwrap(), &self.b),
            Side::B => (self.b.pop().unwrap(), &self.a),
        };
        for &o in others.iter() {
            self.covered[o + v] = false;
        }
    }

    fn check_time(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some((start, budget)) = self.deadline {
                if start.elapsed() > budget {
                    return Err(Error::TimeBudgetExceeded {
                        millis: budget.as_millis(),
                    });
                }
            }
        }
        Ok(())
    }

    fn run(&mut self, from: usize, only_b_first: bool) -> Result<()> {
        self.check_time()?;
        if self.a.len() == self.rows && self.b.len() == self.cols {
            (self.on_solution)(&self.a, &self.b);
            return Ok(());
        }
        let Some(v) = (from..self.m()).find(|&v| !self.covered[v]) else {
            return Ok(());
        };
        if self.place(v, Side::B) {
            self.run(v + 1, false)?;
            self.unplace(Side::B);
        }
        if !only_b_first && self.place(v, Side::A) {
            self.run(v + 1, false)?;
            self.unplace(Side::A);
        }
        Ok(())
    }
}

fn search(
    rows: usize,
    cols: usize,
    limits: &SearchLimits,
    on_solution: &mut dyn FnMut(&[usize], &[usize]),
) -> Result<()> {
    let m = rows
        .checked_mul(cols)
        .filter(|&m| m <= limits.cell_cap)
        .ok_or(Error::CellCapExceeded {
            cells: rows.saturating_mul(cols),
            cap: limits.cell_cap,
        })?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "table dimensions must be positive".into(),
        ));
    }
    let mut covered = vec![false; m];
    covered[0] = true;
    let mut s = Search {
        rows,
        cols,
        covered,
        a: vec![0],
        b: vec![0],
        deadline: limits.max_time.map(|d| (Instant::now(), d)),
        nodes: 0,
        on_solution,
    };
    // On a square table the two choices for the label 1 mirror each other;
    // keeping only "1 joins B" yields each canonical solution exactly once.
    s.run(1, rows == cols)
}

/// Every splitting of a `rows x cols` table, canonical and sorted.
pub fn enumerate_bruteforce(rows: usize, cols: usize) -> Result<Vec<Splitting>> {
    enumerate_bruteforce_with(rows, cols, &SearchLimits::default())
}

pub fn enumerate_bruteforce_with(
    rows: usize,
    cols: usize,
    limits: &SearchLimits,
) -> Result<Vec<Splitting>> {
    let mut out = Vec::new();
    search(rows, cols, limits, &mut |a, b| {
        out.push(Splitting::new(a.to_vec(), b.to_vec()).canonical())
    })?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of splittings, without materializing them.
pub fn count_bruteforce(rows: usize, cols: usize) -> Result<usize> {
    count_bruteforce_with(rows, cols, &SearchLimits::default())
}

pub fn count_bruteforce_with(rows: usize, cols: usize, limits: &SearchLimits) -> Result<usize> {
    let mut n = 0;
    search(rows, cols, limits, &mut |_, _| n += 1)?;
    Ok(n)
}
