//! Exact integer polynomials in one variable q.
//!
//! Coefficients are machine integers checked for overflow; any operation that
//! would wrap returns an error instead. The coefficient vector is kept
//! canonical (no trailing zeros), so equality is structural.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// c·q^d.
    pub fn monomial(degree: usize, c: i64) -> Self {
        if c == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> Result<QPoly> {
        let mut coeffs = vec![0i64; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self
                .coeff(i)
                .checked_add(other.coeff(i))
                .ok_or(Error::Overflow)?;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn sub(&self, other: &QPoly) -> Result<QPoly> {
        let mut coeffs = vec![0i64; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self
                .coeff(i)
                .checked_sub(other.coeff(i))
                .ok_or(Error::Overflow)?;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn mul(&self, other: &QPoly) -> Result<QPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn scale(&self, c: i64) -> Result<QPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Exact division; the divisor must have leading coefficient ±1 and the
    /// remainder must vanish.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let d_deg = match divisor.degree() {
            None => return Err(Error::InexactDivision),
            Some(d) => d,
        };
        let lead = divisor.coeffs[d_deg];
        assert!(
            lead == 1 || lead == -1,
            "exact_div requires a divisor with unit leading coefficient"
        );
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let deg = self.degree().unwrap();
        if deg < d_deg {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let q = rem[i + d_deg] / lead;
            quot[i] = q;
            if q == 0 {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let prod = q.checked_mul(dc).ok_or(Error::Overflow)?;
                rem[i + j] = rem[i + j].checked_sub(prod).ok_or(Error::Overflow)?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// Drops all terms of degree greater than `order`.
    pub fn truncate(&self, order: usize) -> QPoly {
        let keep = self.coeffs.len().min(order + 1);
        QPoly::from_coeffs(self.coeffs[..keep].to_vec())
    }

    /// Multiplicative inverse as a power series up to degree `order`; the
    /// constant term must be ±1 for the result to stay integral.
    pub fn series_inverse(&self, order: usize) -> Result<QPoly> {
        let c0 = self.coeff(0);
        if c0 != 1 && c0 != -1 {
            return Err(Error::InexactDivision);
        }
        let mut inv = vec![0i64; order + 1];
        inv[0] = c0;
        for d in 1..=order {
            // c0 * inv[d] = -sum_{j=1..d} self[j] * inv[d-j]
            let mut acc: i64 = 0;
            for j in 1..=d {
                let prod = self
                    .coeff(j)
                    .checked_mul(inv[d - j])
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(prod).ok_or(Error::Overflow)?;
            }
            inv[d] = acc
                .checked_neg()
                .and_then(|v| v.checked_mul(c0))
                .ok_or(Error::Overflow)?;
        }
        Ok(QPoly::from_coeffs(inv))
    }

    pub fn eval_i64(&self, q: i64) -> Result<i64> {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(q).ok_or(Error::Overflow)?;
            acc = acc.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Coefficient vector reads the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl fmt::Display for QPoly {
    /// Ascending degree: "1 + q + 2q^2 - q^4".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let abs = c.unsigned_abs();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != 1 {
                        write!(f, "{abs}")?;
                    }
                    if d == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly[{self}]")
    }
}

impl Serialize for QPoly {
    /// {"var":"q","coeffs":[c0,c1,…]}
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("var", "q")?;
        map.serialize_entry("coeffs", &self.coeffs)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert!(QPoly::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(QPoly::from_coeffs(vec![1, 0, 2, 0]).degree(), Some(2));
        assert_eq!(QPoly::monomial(3, 0), QPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let a = QPoly::from_coeffs(vec![1, 1]); // 1 + q
        let b = a.mul(&a).unwrap();
        assert_eq!(b.coeffs(), &[1, 2, 1]);
        assert_eq!(a.sub(&a).unwrap(), QPoly::zero());
        assert_eq!(a.shift(2).coeffs(), &[0, 0, 1, 1]);
        assert_eq!(b.eval_i64(1).unwrap(), 4);
    }

    #[test]
    fn overflow_detected() {
        let big = QPoly::monomial(0, i64::MAX);
        assert_eq!(big.mul(&QPoly::monomial(0, 2)), Err(Error::Overflow));
        assert_eq!(big.add(&QPoly::one()), Err(Error::Overflow));
    }

    #[test]
    fn exact_division() {
        // (1 - q^4) / (1 - q) = 1 + q + q^2 + q^3
        let num = QPoly::from_coeffs(vec![1, 0, 0, 0, -1]);
        let den = QPoly::from_coeffs(vec![1, -1]);
        assert_eq!(num.exact_div(&den).unwrap().coeffs(), &[1, 1, 1, 1]);
        let not_divisible = QPoly::from_coeffs(vec![1, 1, 1]);
        assert_eq!(not_divisible.exact_div(&den), Err(Error::InexactDivision));
    }

    #[test]
    fn series_inverse_is_geometric() {
        let den = QPoly::from_coeffs(vec![1, -1]); // 1 - q
        let inv = den.series_inverse(5).unwrap();
        assert_eq!(inv.coeffs(), &[1, 1, 1, 1, 1, 1]);
        let prod = den.mul(&inv).unwrap().truncate(5);
        assert_eq!(prod, QPoly::one());
    }

    #[test]
    fn display_format() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(
            QPoly::from_coeffs(vec![1, 1, 2, 1, 1]).to_string(),
            "1 + q + 2q^2 + q^3 + q^4"
        );
        assert_eq!(
            QPoly::from_coeffs(vec![0, -1, 0, 3]).to_string(),
            "-q + 3q^3"
        );
    }

    #[test]
    fn json_schema() {
        let p = QPoly::from_coeffs(vec![1, 0, 2]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"var":"q","coeffs":[1,0,2]}"#
        );
    }
}
