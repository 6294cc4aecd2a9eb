//! Dense integer polynomials in `q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

/// `coeffs[k]` is the coefficient of `q^k`. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// `f(q^d) mod (q^r - 1)`.
    pub fn substitute_power_mod_cyclic(&self, d: usize, r: usize) -> Self {
        assert!(r >= 1);
        let mut out = vec![0; r];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(k % r) * (d % r) % r] += c;
        }
        Self::from_coeffs(out)
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert_eq!(divisor.leading(), 1, "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= c * dc;
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

/// Ascending powers, e.g. `1 - q + q^2` or `q^2 + q^4`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{}", mag)?,
                (_, 1) => {}
                _ => write!(f, "{}", mag)?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl core::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 0, 0]).coeffs(), &[1]);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, 1, 0, 1]).to_string(), "q^2 + q^4");
        assert_eq!(p(&[1, -1, 1]).to_string(), "1 - q + q^2");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(p(&[0, -2, 0, 3]).to_string(), "-2q + 3q^3");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn division() {
        // (q^4 - 1) = (q^2 + 1)(q^2 - 1)
        let (quot, rem) = p(&[-1, 0, 0, 0, 1]).div_rem_monic(&p(&[1, 0, 1]));
        assert_eq!(quot, p(&[-1, 0, 1]));
        assert!(rem.is_zero());
        let (_, rem) = p(&[0, 1]).div_rem_monic(&p(&[1, 1]));
        assert_eq!(rem, p(&[-1]));
    }

    #[test]
    fn cyclic_substitution() {
        // 1 + q^2 at q -> q^2 mod q^4 - 1 is 2
        assert_eq!(p(&[1, 0, 1]).substitute_power_mod_cyclic(2, 4), p(&[2]));
        assert_eq!(p(&[0, 0, 0, 0, 1, 0, 1]).substitute_power_mod_cyclic(1, 4), p(&[1, 0, 1]));
        assert_eq!(p(&[3, 1, 4]).substitute_power_mod_cyclic(0, 5), p(&[8]));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPolynomial::zero());
        assert_eq!(p(&[1, 2]).shift(2), p(&[0, 0, 1, 2]));
        assert_eq!(p(&[1, 0, 1]).eval(2), 5);
    }
}
