//! Cyclotomic polynomials and the irreducible factorization of `x^m - 1`.
//!
//! `Φ_d` is computed by the classical recursion
//! `Φ_d = (x^d - 1) / ∏_{e | d, e < d} Φ_e`, carried out as a chain of exact
//! divisions by the already-known smaller factors. Results are memoized in a
//! process-wide table that is safe to share across threads.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;

static CACHE: LazyLock<RwLock<HashMap<usize, Poly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k != n / k {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Smallest prime `q` with `n = q^k`, `k >= 1`; `None` for 1 and composites
/// with two distinct prime factors.
pub fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let q = (2..=n).find(|q| n % q == 0).unwrap();
    let mut rest = n;
    while rest % q == 0 {
        rest /= q;
    }
    (rest == 1).then_some(q)
}

/// The `d`-th cyclotomic polynomial.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: usize) -> Result<Poly> {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = CACHE.read().unwrap().get(&d) {
        return Ok(p.clone());
    }
    let mut quotient = Poly::x_pow_minus_one(d);
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        quotient = quotient.div_exact(&cyclotomic(e)?)?;
    }
    CACHE.write().unwrap().insert(d, quotient.clone());
    Ok(quotient)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicFactor {
    pub d: usize,
    pub phi: Poly,
}

/// The factors `Φ_d` of `x^m - 1` (or of `(x^m - 1)/(x - 1)` once the `d = 1`
/// factor is dropped), sorted by `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicFactorization {
    pub m: usize,
    pub factors: Vec<CyclotomicFactor>,
}

impl CyclotomicFactorization {
    pub fn product(&self) -> Result<Poly> {
        Poly::product(self.factors.iter().map(|f| &f.phi))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.d).collect()
    }
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({})", factor.phi)?;
        }
        Ok(())
    }
}

/// `x^m - 1 = ∏_{d | m} Φ_d`, checked against the expanded product before
/// returning.
pub fn factorize_unity(m: usize) -> Result<CyclotomicFactorization> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let factors = divisors(m)
        .into_iter()
        .map(|d| cyclotomic(d).map(|phi| CyclotomicFactor { d, phi }))
        .collect::<Result<Vec<_>>>()?;
    let fact = CyclotomicFactorization { m, factors };
    if fact.product()? != Poly::x_pow_minus_one(m) {
        return Err(Error::InvariantViolation(format!(
            "product of cyclotomic factors differs from x^{m} - 1"
        )));
    }
    Ok(fact)
}

/// Factorization of `c(x) = 1 + x + ... + x^(m-1)`: all `Φ_d` with `d | m`,
/// `d > 1`.
pub fn factorize_c(m: usize) -> Result<CyclotomicFactorization> {
    if m < 2 {
        return Err(Error::InvalidArgument("m must be at least 2".into()));
    }
    let mut fact = factorize_unity(m)?;
    fact.factors.retain(|f| f.d != 1);
    if fact.product()? != Poly::interval(m) {
        return Err(Error::InvariantViolation(format!(
            "product of cyclotomic factors differs from c(x) for m = {m}"
        )));
    }
    Ok(fact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(100), vec![1, 2, 4, 5, 10, 20, 25, 50, 100]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn prime_power_bases() {
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(2), Some(2));
        assert_eq!(prime_power_base(25), Some(5));
        assert_eq!(prime_power_base(64), Some(2));
        assert_eq!(prime_power_base(97), Some(97));
        assert_eq!(prime_power_base(100), None);
        assert_eq!(prime_power_base(12), None);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        let mut phi100 = vec![0; 41];
        phi100[0] = 1;
        phi100[10] = -1;
        phi100[20] = 1;
        phi100[30] = -1;
        phi100[40] = 1;
        assert_eq!(cyclotomic(100).unwrap(), Poly::new(phi100));
    }

    #[test]
    fn first_nonflat_cyclotomic() {
        // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
        let phi = cyclotomic(105).unwrap();
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), -2);
        assert_eq!(phi.coeff(41), -2);
        assert!(phi.coeffs().iter().all(|c| (-2..=1).contains(c)));
    }

    #[test]
    fn factorize_small() {
        let f2 = factorize_unity(2).unwrap();
        assert_eq!(f2.indices(), vec![1, 2]);
        assert_eq!(f2.factors[0].phi, p(&[-1, 1]));
        assert_eq!(f2.factors[1].phi, p(&[1, 1]));
        assert_eq!(factorize_unity(6).unwrap().indices(), vec![1, 2, 3, 6]);
        assert_eq!(factorize_unity(1).unwrap().indices(), vec![1]);
    }

    #[test]
    fn factorize_c_examples() {
        assert_eq!(factorize_c(100).unwrap().len(), 8);
        let f4 = factorize_c(4).unwrap();
        assert_eq!(f4.indices(), vec![2, 4]);
        assert_eq!(f4.factors[0].phi, p(&[1, 1]));
        assert_eq!(f4.factors[1].phi, p(&[1, 0, 1]));
        let f16 = factorize_c(16).unwrap();
        let expected: Vec<Poly> = [1usize, 2, 4, 8]
            .iter()
            .map(|&k| Poly::from_support(&[0, k]))
            .collect();
        let got: Vec<Poly> = f16.factors.into_iter().map(|f| f.phi).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn factorize_rejects_degenerate() {
        assert!(factorize_unity(0).is_err());
        assert!(factorize_c(1).is_err());
    }

    #[test]
    fn display_in_ascending_index_order() {
        assert_eq!(
            factorize_unity(4).unwrap().to_string(),
            "(x - 1) (x + 1) (x^2 + 1)"
        );
    }

    #[test]
    fn concurrent_cache_access() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || cyclotomic(60 + t * 7).unwrap()))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let phi = h.join().unwrap();
            assert_eq!(phi, cyclotomic(60 + t * 7).unwrap());
        }
    }
}
