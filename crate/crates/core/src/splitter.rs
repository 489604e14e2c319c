//! Splittings from the cyclotomic factorization of `c(x)`.
//!
//! A labeling `(A, B)` of an `r x c` table is the same thing as a
//! factorization `a(x) b(x) = c(x) = 1 + x + ... + x^(rc-1)` into 0/1
//! polynomials with `r` and `c` terms. Since `x^m - 1` is squarefree and its
//! irreducible factors are the `Φ_d`, every such pair is obtained by sending
//! each `Φ_d` (`d | m`, `d > 1`) to one side and expanding.
//!
//! Evaluating at `x = 1` prunes most bipartitions before any expansion:
//! `a(1) = r`, and `Φ_d(1)` is the prime `q` when `d` is a power of `q`, and
//! `1` otherwise. Only the prime-power factors constrain the choice; the rest
//! are free.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cyclotomic::{factorize_c, CyclotomicFactorization};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::splitting::Splitting;

pub const DEFAULT_CELL_CAP: usize = 4096;
pub const DEFAULT_MAX_BIPARTITIONS: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub cell_cap: usize,
    /// Upper bound on the bipartitions that survive evaluation pruning and
    /// must be expanded.
    pub max_bipartitions: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cell_cap: DEFAULT_CELL_CAP,
            max_bipartitions: DEFAULT_MAX_BIPARTITIONS,
        }
    }
}

pub(crate) fn check_cells(rows: usize, cols: usize, cap: usize) -> Result<usize> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument(
            "table dimensions must be positive".into(),
        ));
    }
    rows.checked_mul(cols)
        .filter(|&m| m <= cap)
        .ok_or(Error::CellCapExceeded {
            cells: rows.saturating_mul(cols),
            cap,
        })
}

/// Expands the bipartition that sends `fact.factors[k]` to `A` exactly when
/// bit `k` of `a_mask` is set. Returns the splitting if both products are
/// 0/1 polynomials with `rows` and `cols` terms.
pub fn expand_bipartition(
    fact: &CyclotomicFactorization,
    a_mask: u64,
    rows: usize,
    cols: usize,
) -> Result<Option<Splitting>> {
    let side = |want_a: bool| {
        Poly::product(
            fact.factors
                .iter()
                .enumerate()
                .filter(move |(k, _)| (a_mask >> k & 1 == 1) == want_a)
                .map(|(_, f)| &f.phi),
        )
    };
    let a = side(true)?;
    let Some(a_support) = a.support_if_zero_one().filter(|s| s.len() == rows) else {
        return Ok(None);
    };
    let b = side(false)?;
    let Some(b_support) = b.support_if_zero_one().filter(|s| s.len() == cols) else {
        return Ok(None);
    };
    Ok(Some(Splitting::new(a_support, b_support)))
}

/// All splittings of a `rows x cols` table, canonical and sorted.
pub fn enumerate_cyclotomic(rows: usize, cols: usize) -> Result<Vec<Splitting>> {
    enumerate_cyclotomic_with(rows, cols, &Limits::default())
}

pub fn enumerate_cyclotomic_with(
    rows: usize,
    cols: usize,
    limits: &Limits,
) -> Result<Vec<Splitting>> {
    let m = check_cells(rows, cols, limits.cell_cap)?;
    if m == 1 {
        return Ok(vec![Splitting::new(vec![0], vec![0])]);
    }
    let fact = factorize_c(m)?;
    if fact.len() > 63 {
        return Err(Error::BipartitionLimitExceeded {
            candidates: 1u128 << fact.len(),
            limit: limits.max_bipartitions,
        });
    }
    let values = fact
        .factors
        .iter()
        .map(|f| f.phi.eval(1))
        .collect::<Result<Vec<_>>>()?;
    let constrained: Vec<usize> = (0..values.len()).filter(|&k| values[k] > 1).collect();
    let free: Vec<usize> = (0..values.len()).filter(|&k| values[k] == 1).collect();

    // Masks over the constrained factors whose values multiply to `rows`.
    let base_masks: Vec<u64> = (0u64..1 << constrained.len())
        .filter_map(|sub| {
            let mut mask = 0u64;
            let mut prod = 1i64;
            for (bit, &k) in constrained.iter().enumerate() {
                if sub >> bit & 1 == 1 {
                    mask |= 1 << k;
                    prod *= values[k];
                }
            }
            (prod == rows as i64).then_some(mask)
        })
        .collect();

    let candidates = (base_masks.len() as u128) << free.len();
    if candidates > limits.max_bipartitions {
        return Err(Error::BipartitionLimitExceeded {
            candidates,
            limit: limits.max_bipartitions,
        });
    }

    let found = base_masks
        .par_iter()
        .flat_map_iter(|&base| {
            let free = &free;
            (0u64..1 << free.len()).map(move |sub| {
                let mut mask = base;
                for (bit, &k) in free.iter().enumerate() {
                    if sub >> bit & 1 == 1 {
                        mask |= 1 << k;
                    }
                }
                mask
            })
        })
        .map(|mask| expand_bipartition(&fact, mask, rows, cols))
        .collect::<Result<Vec<_>>>()?;

    let set: BTreeSet<Splitting> = found.into_iter().flatten().map(Splitting::canonical).collect();
    Ok(set.into_iter().collect())
}

/// Same output as [`enumerate_cyclotomic`], but expands every bipartition
/// without evaluation pruning. Exponential in the number of factors; meant
/// for checking that pruning never discards a solution.
pub fn enumerate_cyclotomic_unpruned(rows: usize, cols: usize) -> Result<Vec<Splitting>> {
    let m = check_cells(rows, cols, 256)?;
    if m == 1 {
        return Ok(vec![Splitting::new(vec![0], vec![0])]);
    }
    let fact = factorize_c(m)?;
    let mut set = BTreeSet::new();
    for mask in 0u64..1 << fact.len() {
        if let Some(s) = expand_bipartition(&fact, mask, rows, cols)? {
            set.insert(s.canonical());
        }
    }
    Ok(set.into_iter().collect())
}

/// The generating functions `(a(x), b(x))` of a splitting.
pub fn solution_polynomials(s: &Splitting) -> (Poly, Poly) {
    (Poly::from_support(&s.a), Poly::from_support(&s.b))
}
