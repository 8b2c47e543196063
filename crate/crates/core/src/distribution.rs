//! Distribution tables of a statistic over a permutation class, with the
//! matching closed-form column where one of the identities provides it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{members, PermClass};
use crate::poly;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum StatKind {
    Des,
    Maj,
    Comaj,
    DescentSet,
}

impl StatKind {
    pub fn name(&self) -> &'static str {
        match self {
            StatKind::Des => "des",
            StatKind::Maj => "maj",
            StatKind::Comaj => "comaj",
            StatKind::DescentSet => "descent-set",
        }
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "des" => Ok(StatKind::Des),
            "maj" => Ok(StatKind::Maj),
            "comaj" => Ok(StatKind::Comaj),
            "descent-set" | "des-set" => Ok(StatKind::DescentSet),
            other => Err(Error::Unknown {
                kind: "statistic",
                name: other.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistRow {
    /// Statistic value: a number for des/maj/comaj, a set for descent-set.
    pub key: String,
    pub count: u64,
    /// Value predicted by the registered closed form, when one exists.
    pub closed_form: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub class: PermClass,
    pub n: usize,
    pub stat: StatKind,
    pub rows: Vec<DistRow>,
    /// Name of the closed form used for the comparison column, if any.
    pub closed_form: Option<&'static str>,
    /// Whether every enumerated count matches the closed form.
    pub matches: Option<bool>,
}

impl DistributionTable {
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum()
    }
}

impl fmt::Display for DistributionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} of {} at n={} ({} members)",
            self.stat.name(),
            self.class,
            self.n,
            self.total()
        )?;
        for row in &self.rows {
            match row.closed_form {
                Some(cf) => writeln!(f, "  {}: {} (closed form {})", row.key, row.count, cf)?,
                None => writeln!(f, "  {}: {}", row.key, row.count)?,
            }
        }
        if let (Some(name), Some(ok)) = (self.closed_form, self.matches) {
            writeln!(
                f,
                "closed form [{}]: {}",
                name,
                if ok { "match" } else { "MISMATCH" }
            )?;
        }
        Ok(())
    }
}

/// Looks a histogram key up in the registered closed form.
type ClosedForm = Box<dyn Fn(&str) -> Option<u64>>;

/// Closed form for one histogram entry, where the identities provide one.
fn closed_form_for(
    class: PermClass,
    stat: StatKind,
    n: usize,
) -> Option<(&'static str, ClosedForm)> {
    match (class, stat) {
        (PermClass::I321, StatKind::Des) => Some((
            "binom(ceil(n/2),k)*binom(floor(n/2),k)",
            Box::new(move |key| {
                let k: usize = key.parse().ok()?;
                poly::des_count_formula(n, k).ok()
            }),
        )),
        (PermClass::I321, StatKind::Maj) | (PermClass::I123, StatKind::Comaj) => Some((
            "qbinom(n, floor(n/2))",
            Box::new(move |key| {
                let m: usize = key.parse().ok()?;
                let p = poly::q_binomial(n, n / 2).ok()?;
                Some(p.coeff(m) as u64)
            }),
        )),
        (PermClass::I321And312, StatKind::Des) => Some((
            "binom(n-k,k)",
            Box::new(move |key| {
                let k: usize = key.parse().ok()?;
                if k > n {
                    return Some(0);
                }
                poly::binomial((n - k) as u64, k as u64).ok()
            }),
        )),
        (PermClass::S321, StatKind::DescentSet) => Some((
            "inclusion-exclusion over Catalan numbers",
            Box::new(move |key| {
                let set: Vec<usize> = key
                    .trim_matches(['{', '}'])
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse().ok())
                    .collect::<Option<_>>()?;
                poly::exact_descent_count(n, &set).ok()
            }),
        )),
        _ => None,
    }
}

fn set_key(set: &[usize]) -> String {
    let words: Vec<String> = set.iter().map(|j| j.to_string()).collect();
    format!("{{{}}}", words.join(","))
}

/// Histogram of `stat` over the class members of size n.
pub fn distribution(class: PermClass, n: usize, stat: StatKind) -> Result<DistributionTable> {
    let mut counts: std::collections::BTreeMap<(usize, Vec<usize>), u64> = Default::default();
    for p in members(class, n)? {
        let key = match stat {
            StatKind::Des => (p.descent_set().len(), Vec::new()),
            StatKind::Maj => (p.maj(), Vec::new()),
            StatKind::Comaj => (p.comaj(), Vec::new()),
            StatKind::DescentSet => (0, p.descent_set()),
        };
        *counts.entry(key).or_insert(0) += 1;
    }
    let closed = closed_form_for(class, stat, n);
    let mut rows = Vec::with_capacity(counts.len());
    let mut all_match = true;
    for ((num, set), count) in counts {
        let key = match stat {
            StatKind::DescentSet => set_key(&set),
            _ => num.to_string(),
        };
        let closed_form = closed.as_ref().and_then(|(_, f)| f(&key));
        if let Some(cf) = closed_form {
            all_match &= cf == count;
        }
        rows.push(DistRow {
            key,
            count,
            closed_form,
        });
    }
    let has_closed = closed.is_some();
    Ok(DistributionTable {
        class,
        n,
        stat,
        rows,
        closed_form: closed.map(|(name, _)| name),
        matches: has_closed.then_some(all_match),
    })
}
