//! Multivariate polynomials with squarefree monomials x_S = Π_{j∈S} x_j
//! indexed by finite subsets S of {1, …, n−1}.
//!
//! Subsets are stored as bitmasks (bit j−1 for x_j), so the variable bound is
//! capped at 64. Every polynomial arising here is squarefree because the
//! direct formula and the recurrence only ever multiply by (x_j − 1) for an
//! index j that is fresh.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::QPoly;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SubsetPoly {
    /// Nonzero coefficients keyed by subset mask, in mask order.
    terms: BTreeMap<u64, i64>,
    /// Largest variable index that may appear (n−1 for S_n statistics).
    nvars: usize,
}

pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &j| m | 1 << (j - 1))
}

pub fn set_of(mask: u64) -> Vec<usize> {
    (1..=64).filter(|&j| mask & (1 << (j - 1)) != 0).collect()
}

impl SubsetPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(
            nvars <= 64,
            "subset polynomials support at most 64 variables"
        );
        SubsetPoly {
            terms: BTreeMap::new(),
            nvars,
        }
    }

    pub fn constant(c: i64, nvars: usize) -> Self {
        let mut p = SubsetPoly::zero(nvars);
        if c != 0 {
            p.terms.insert(0, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of x_S for a set of variable indices.
    pub fn coefficient(&self, set: &[usize]) -> i64 {
        self.terms.get(&mask_of(set)).copied().unwrap_or(0)
    }

    /// (mask, coefficient) pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn add_term(&mut self, set: &[usize], c: i64) -> Result<()> {
        if let Some(&j) = set.iter().find(|&&j| j == 0 || j > self.nvars) {
            return Err(Error::Unsupported(format!(
                "variable x{j} out of bounds 1..={}",
                self.nvars
            )));
        }
        let mask = mask_of(set);
        let entry = self.terms.entry(mask).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&mask);
        }
        Ok(())
    }

    pub fn add(&self, other: &SubsetPoly) -> Result<SubsetPoly> {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (mask, c) in other.terms() {
            let entry = out.terms.entry(mask).or_insert(0);
            *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
            if *entry == 0 {
                out.terms.remove(&mask);
            }
        }
        Ok(out)
    }

    /// Multiplies by (x_j − 1); `j` must not already occur in any term, which
    /// keeps the monomials squarefree.
    pub fn mul_var_minus_one(&self, j: usize) -> Result<SubsetPoly> {
        if j == 0 || j > 64 {
            return Err(Error::Unsupported(format!("variable x{j} out of bounds")));
        }
        let bit = 1u64 << (j - 1);
        let mut out = SubsetPoly::zero(self.nvars.max(j));
        for (mask, c) in self.terms() {
            assert_eq!(
                mask & bit,
                0,
                "variable x{j} already present; monomials must stay squarefree"
            );
            out.terms.insert(mask | bit, c);
            let entry = out.terms.entry(mask).or_insert(0);
            *entry = entry.checked_sub(c).ok_or(Error::Overflow)?;
            if *entry == 0 {
                out.terms.remove(&mask);
            }
        }
        Ok(out)
    }

    /// Substitution x_j ↦ q^j, sending x_S to q^{ΣS}.
    pub fn specialize(&self) -> Result<QPoly> {
        let mut acc = QPoly::zero();
        for (mask, c) in self.terms() {
            let degree: usize = set_of(mask).iter().sum();
            acc = acc.add(&QPoly::monomial(degree, c))?;
        }
        Ok(acc)
    }

    /// Σ over supersets of the coefficient of x_T, T ⊇ S.
    pub fn superset_sum(&self, set: &[usize]) -> i64 {
        let mask = mask_of(set);
        self.terms()
            .filter(|(m, _)| m & mask == mask)
            .map(|(_, c)| c)
            .sum()
    }
}

impl fmt::Display for SubsetPoly {
    /// Terms in mask order, variables space-separated: "1 + 2 x1 + x1 x3".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mask, c) in self.terms() {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let abs = c.unsigned_abs();
            let vars = set_of(mask);
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs} ")?;
                }
                let names: Vec<String> = vars.iter().map(|j| format!("x{j}")).collect();
                f.write_str(&names.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetPoly[{self}]")
    }
}

struct Term {
    vars: Vec<usize>,
    coeff: i64,
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("vars", &self.vars)?;
        map.serialize_entry("coeff", &self.coeff)?;
        map.end()
    }
}

impl Serialize for SubsetPoly {
    /// [{"vars":[j,…],"coeff":c}, …] in mask order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (mask, coeff) in self.terms() {
            seq.serialize_element(&Term {
                vars: set_of(mask),
                coeff,
            })?;
        }
        seq.end()
    }
}
