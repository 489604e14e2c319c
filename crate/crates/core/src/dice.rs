//! Sum distributions of two dice, computed as products of face polynomials.
//!
//! A die with faces `f_1..f_k` has generating polynomial `Σ x^{f_i}` (a face
//! repeated twice contributes coefficient 2). The coefficient of `x^s` in the
//! product of two such polynomials counts the throws summing to `s`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest face label accepted; face polynomials are stored densely.
pub const MAX_FACE: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumDistribution {
    /// Occurrence count per sum; sums that cannot occur are absent.
    pub counts: BTreeMap<u64, u64>,
}

impl SumDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts for every sum from the smallest to the largest, zeros included.
    pub fn dense(&self) -> Vec<u64> {
        match (self.counts.keys().next(), self.counts.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo..=hi)
                .map(|s| self.counts.get(&s).copied().unwrap_or(0))
                .collect(),
            _ => Vec::new(),
        }
    }
}

/// Generating polynomial of a die: coefficient `k` is the multiplicity of
/// face `k`.
pub fn face_polynomial(faces: &[u64]) -> Result<Poly> {
    if faces.is_empty() {
        return Err(Error::InvalidArgument("a die needs at least one face".into()));
    }
    let max = *faces.iter().max().unwrap();
    if max > MAX_FACE {
        return Err(Error::InvalidArgument(format!(
            "face {max} exceeds the supported maximum {MAX_FACE}"
        )));
    }
    let mut coeffs = vec![0i64; max as usize + 1];
    for &f in faces {
        coeffs[f as usize] += 1;
    }
    Ok(Poly::new(coeffs))
}

pub fn sum_distribution(die1: &[u64], die2: &[u64]) -> Result<SumDistribution> {
    let product = face_polynomial(die1)?.checked_mul(&face_polynomial(die2)?)?;
    let counts = product
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(s, &c)| (s as u64, c as u64))
        .collect();
    Ok(SumDistribution { counts })
}

/// A standard die with faces `1..=k`.
pub fn standard_die(k: u64) -> Vec<u64> {
    (1..=k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SICHERMAN_1: [u64; 6] = [1, 3, 4, 5, 6, 8];
    const SICHERMAN_2: [u64; 6] = [1, 2, 2, 3, 3, 4];

    #[test]
    fn standard_pair() {
        let d = sum_distribution(&standard_die(6), &standard_die(6)).unwrap();
        assert_eq!(d.dense(), vec![1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1]);
        assert_eq!(d.counts.keys().next(), Some(&2));
        assert_eq!(d.total(), 36);
    }

    #[test]
    fn sicherman_matches_standard() {
        let s = sum_distribution(&SICHERMAN_1, &SICHERMAN_2).unwrap();
        let std = sum_distribution(&standard_die(6), &standard_die(6)).unwrap();
        assert_eq!(s, std);
    }

    #[test]
    fn single_faces() {
        let d = sum_distribution(&[1], &[1]).unwrap();
        assert_eq!(d.counts, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn symmetric_and_nonstandard() {
        let x = sum_distribution(&[1, 1, 2], &[3, 5]).unwrap();
        let y = sum_distribution(&[3, 5], &[1, 1, 2]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.counts, BTreeMap::from([(4, 2), (5, 1), (6, 2), (7, 1)]));
        assert_eq!(x.dense(), vec![2, 1, 2, 1]);
    }

    #[test]
    fn rejects_empty_and_huge() {
        assert!(sum_distribution(&[], &[1]).is_err());
        assert!(sum_distribution(&[MAX_FACE + 1], &[1]).is_err());
    }
}
