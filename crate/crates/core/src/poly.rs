//! Dense univariate polynomials with `i64` coefficients.
//!
//! Every arithmetic step is checked: a coefficient that does not fit in an
//! `i64` is reported as [`Error::Overflow`] with the exponent where it
//! happened, never wrapped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact integer polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// The coefficient vector is kept canonical: no trailing zeros, and the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", from = "Vec<i64>")]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for Poly {
    fn from(coeffs: Vec<i64>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<i64> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    /// `coeff * x^exp`.
    pub fn monomial(coeff: i64, exp: usize) -> Self {
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = coeff;
        Poly::new(coeffs)
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![0; m + 1];
        coeffs[0] -= 1;
        coeffs[m] += 1;
        Poly::new(coeffs)
    }

    /// `1 + x + ... + x^(m-1)`, the generating function of the interval `0..m`.
    pub fn interval(m: usize) -> Self {
        Poly::new(vec![1; m])
    }

    /// The 0/1 polynomial whose exponents are exactly `exponents`.
    ///
    /// Repeated exponents are counted once.
    pub fn from_support(exponents: &[usize]) -> Self {
        let Some(&max) = exponents.iter().max() else {
            return Poly::zero();
        };
        let mut coeffs = vec![0; max + 1];
        for &e in exponents {
            coeffs[e] = 1;
        }
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn checked_add(&self, rhs: &Poly) -> Result<Poly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let v = self
                .coeff(k)
                .checked_add(rhs.coeff(k))
                .ok_or(Error::Overflow { exponent: k })?;
            out.push(v);
        }
        Ok(Poly::new(out))
    }

    pub fn checked_sub(&self, rhs: &Poly) -> Result<Poly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let v = self
                .coeff(k)
                .checked_sub(rhs.coeff(k))
                .ok_or(Error::Overflow { exponent: k })?;
            out.push(v);
        }
        Ok(Poly::new(out))
    }

    /// Exact product.
    pub fn checked_mul(&self, rhs: &Poly) -> Result<Poly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                out[k] = a
                    .checked_mul(b)
                    .and_then(|ab| out[k].checked_add(ab))
                    .ok_or(Error::Overflow { exponent: k })?;
            }
        }
        Ok(Poly::new(out))
    }

    /// Product of a sequence of polynomials; the empty product is `1`.
    pub fn product<'a, I>(factors: I) -> Result<Poly>
    where
        I: IntoIterator<Item = &'a Poly>,
    {
        factors
            .into_iter()
            .try_fold(Poly::one(), |acc, f| acc.checked_mul(f))
    }

    /// Quotient of an exact division, by integer long division.
    ///
    /// Fails with [`Error::NotDivisible`] as soon as a quotient step is not
    /// an integer or the final remainder is nonzero.
    pub fn div_exact(&self, den: &Poly) -> Result<Poly> {
        let (Some(den_deg), Some(lead)) = (den.degree(), den.leading_coeff()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(num_deg) = self.degree() else {
            return Ok(Poly::zero());
        };
        if num_deg < den_deg {
            return Err(Error::NotDivisible { exponent: num_deg });
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; num_deg - den_deg + 1];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + den_deg];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::NotDivisible {
                    exponent: shift + den_deg,
                });
            }
            let q = top / lead;
            quot[shift] = q;
            for (j, &d) in den.coeffs.iter().enumerate() {
                let k = shift + j;
                rem[k] = q
                    .checked_mul(d)
                    .and_then(|qd| rem[k].checked_sub(qd))
                    .ok_or(Error::Overflow { exponent: k })?;
            }
        }
        if let Some(k) = rem.iter().position(|&c| c != 0) {
            return Err(Error::NotDivisible { exponent: k });
        }
        Ok(Poly::new(quot))
    }

    /// Exact value at an integer point, by Horner's rule.
    pub fn eval(&self, point: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(point)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::EvalOverflow { point })
        })
    }

    /// Sorted exponents with coefficient 1, or `None` if any coefficient is
    /// outside `{0, 1}`.
    pub fn support_if_zero_one(&self) -> Option<Vec<usize>> {
        let mut support = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => support.push(k),
                _ => return None,
            }
        }
        Some(support)
    }

    /// Ascending-order rendering, e.g. `1 - x + x^2`.
    pub fn to_ascending_string(&self) -> String {
        let terms: Vec<(usize, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        render_terms(terms.into_iter())
    }
}

fn render_terms(terms: impl Iterator<Item = (usize, i64)>) -> String {
    let mut out = String::new();
    for (i, (exp, c)) in terms.enumerate() {
        let mag = c.unsigned_abs();
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match exp {
            0 => String::new(),
            1 => "x".to_string(),
            e => format!("x^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Descending-order rendering, e.g. `x^4 - x^3 + x^2 - x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c));
        f.write_str(&render_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn mul_two_solution_one_factors() {
        // (1 + x)(1 + x^2 + x^4 + x^6 + x^8) = 1 + x + ... + x^9
        let lhs = p(&[1, 1]);
        let rhs = Poly::from_support(&[0, 2, 4, 6, 8]);
        assert_eq!(lhs.checked_mul(&rhs).unwrap(), Poly::interval(10));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        assert_eq!(p(&[1, -2, 3]).checked_mul(&Poly::zero()).unwrap(), Poly::zero());
    }

    #[test]
    fn mul_alternating_pair() {
        let lhs = p(&[1, 1, 1, 1, 1]);
        let rhs = p(&[1, -1, 1, -1, 1]);
        assert_eq!(
            lhs.checked_mul(&rhs).unwrap(),
            Poly::from_support(&[0, 2, 4, 6, 8])
        );
    }

    #[test]
    fn mul_overflow_names_exponent() {
        let big = p(&[i64::MAX, 1]);
        let err = big.checked_mul(&p(&[2])).unwrap_err();
        assert_eq!(err, Error::Overflow { exponent: 0 });
        let err = p(&[0, i64::MAX]).checked_mul(&p(&[0, 0, 3])).unwrap_err();
        assert_eq!(err, Error::Overflow { exponent: 3 });
    }

    #[test]
    fn div_exact_recovers_interval() {
        let q = Poly::x_pow_minus_one(100)
            .div_exact(&p(&[-1, 1]))
            .unwrap();
        assert_eq!(q, Poly::interval(100));
    }

    #[test]
    fn div_by_one_is_identity() {
        let a = p(&[4, -3, 0, 7]);
        assert_eq!(a.div_exact(&Poly::one()).unwrap(), a);
    }

    #[test]
    fn div_rejects_remainder() {
        let err = p(&[1, 0, 1]).div_exact(&p(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
    }

    #[test]
    fn div_rejects_non_integer_step() {
        let err = p(&[0, 1]).div_exact(&p(&[0, 2])).unwrap_err();
        assert_eq!(err, Error::NotDivisible { exponent: 1 });
    }

    #[test]
    fn div_errors() {
        assert_eq!(p(&[1]).div_exact(&Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(Poly::zero().div_exact(&p(&[1, 1])), Ok(Poly::zero()));
        assert!(p(&[1, 1]).div_exact(&p(&[1, 0, 1])).is_err());
    }

    #[test]
    fn eval_at_one_and_zero() {
        assert_eq!(Poly::interval(100).eval(1).unwrap(), 100);
        assert_eq!(p(&[1, -1, 1, -1, 1]).eval(1).unwrap(), 1);
        assert_eq!(p(&[7, 3, 5]).eval(0).unwrap(), 7);
        assert_eq!(Poly::zero().eval(5).unwrap(), 0);
    }

    #[test]
    fn eval_overflow_detected() {
        let err = Poly::monomial(1, 64).eval(2).unwrap_err();
        assert_eq!(err, Error::EvalOverflow { point: 2 });
    }

    #[test]
    fn support_of_solution_seven_a() {
        let support = [0, 2, 20, 22, 40, 42, 60, 62, 80, 82];
        let a = Poly::from_support(&support);
        assert_eq!(a.support_if_zero_one().unwrap(), support);
        assert_eq!(p(&[1, -1, 1, -1, 1]).support_if_zero_one(), None);
        assert_eq!(Poly::zero().support_if_zero_one(), Some(vec![]));
        assert_eq!(p(&[1, 2]).support_if_zero_one(), None);
    }

    #[test]
    fn from_support_examples() {
        assert_eq!(Poly::from_support(&[0, 1, 2, 3]), p(&[1, 1, 1, 1]));
        assert_eq!(Poly::from_support(&[]), Poly::zero());
        let multiples_of_five: Vec<usize> = (0..10).map(|k| 5 * k).collect();
        let a = Poly::from_support(&multiples_of_five);
        assert_eq!(a.degree(), Some(45));
        assert_eq!(a.term_count(), 10);
    }

    #[test]
    fn display_orders() {
        let neg = Poly::from(vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(neg.to_string(), "-x^10 + 1");
        assert_eq!(p(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[1, -1, 1]).to_ascending_string(), "1 - x + x^2");
        assert_eq!(p(&[0, 3, -2]).to_ascending_string(), "3x - 2x^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn serde_as_coefficient_list() {
        let json = serde_json::to_string(&p(&[1, -1, 1])).unwrap();
        assert_eq!(json, "[1,-1,1]");
        let back: Poly = serde_json::from_str("[2,0,0]").unwrap();
        assert_eq!(back, p(&[2]));
    }
}
