//! Permutations in one-line notation, pattern avoidance, descent statistics,
//! and enumeration of the permutation classes studied here.
//!
//! Positions and values are 1-indexed throughout, so `maj` is literally the
//! sum of the descent positions. The empty permutation (n = 0) is allowed and
//! has empty statistic sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest n for which the brute-force backend will walk all of S_n.
pub const BRUTE_FORCE_MAX_N: usize = 10;

/// A permutation of {1, …, n} in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` is a bijection on {1, …, n}.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..{n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Value at a 1-indexed position.
    pub fn at(&self, pos: usize) -> usize {
        self.entries[pos - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &v)| self.entries[v - 1] == i + 1)
    }

    pub fn descent_profile(&self) -> DescentProfile {
        let mut descent_set = Vec::new();
        let mut ascent_set = Vec::new();
        for i in 1..self.n() {
            if self.entries[i - 1] > self.entries[i] {
                descent_set.push(i);
            } else {
                ascent_set.push(i);
            }
        }
        let maj = descent_set.iter().sum();
        let comaj = ascent_set.iter().sum();
        DescentProfile {
            descent_set,
            ascent_set,
            maj,
            comaj,
        }
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.descent_profile().descent_set
    }

    pub fn maj(&self) -> usize {
        self.descent_profile().maj
    }

    pub fn comaj(&self) -> usize {
        self.descent_profile().comaj
    }

    /// True iff no subsequence of `self` is order-isomorphic to `pattern`.
    ///
    /// Naive O(n^m) subsequence scan with pruning; the classes here only use
    /// patterns of length 3, where this is the straightforward triple scan.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        let m = pattern.n();
        if m == 0 {
            return true;
        }
        if m > self.n() {
            return false;
        }
        let mut chosen = Vec::with_capacity(m);
        self.extend_occurrence(pattern, &mut chosen, 0)
    }

    fn extend_occurrence(
        &self,
        pattern: &Permutation,
        chosen: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        let k = chosen.len();
        if k == pattern.n() {
            return true;
        }
        // enough positions must remain to finish the embedding
        let remaining = pattern.n() - k;
        for pos in start..=self.n().saturating_sub(remaining) {
            let v = self.entries[pos];
            // the new value must relate to every chosen value as the pattern does
            let consistent = chosen.iter().enumerate().all(|(j, &p)| {
                let picked = self.entries[p];
                (picked < v) == (pattern.entries[j] < pattern.entries[k])
            });
            if consistent {
                chosen.push(pos);
                if self.extend_occurrence(pattern, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Linear-time 321-avoidance via prefix maxima and suffix minima:
    /// a 321 occurrence exists iff some middle entry has a larger entry
    /// before it and a smaller entry after it.
    pub fn avoids_321_fast(&self) -> bool {
        let n = self.n();
        if n < 3 {
            return true;
        }
        let mut suffix_min = vec![usize::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(self.entries[i]);
        }
        let mut prefix_max = 0;
        for j in 0..n {
            if prefix_max > self.entries[j] && self.entries[j] > suffix_min[j + 1] {
                return false;
            }
            prefix_max = prefix_max.max(self.entries[j]);
        }
        true
    }

    /// Positions i with π(i) < π(j) for all j < i. Position 1 is always a
    /// left-to-right minimum when n ≥ 1.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut minima = Vec::new();
        let mut best = usize::MAX;
        for (i, &v) in self.entries.iter().enumerate() {
            if v < best {
                minima.push(i + 1);
                best = v;
            }
        }
        minima
    }

    /// Decomposes `self` as a direct sum of blocks order-isomorphic to 1 or 21.
    pub fn fibonacci_blocks(&self) -> Result<Vec<FibBlock>> {
        let mut blocks = Vec::new();
        let mut i = 1;
        while i <= self.n() {
            if self.at(i) == i {
                blocks.push(FibBlock::Single);
                i += 1;
            } else if i < self.n() && self.at(i) == i + 1 && self.at(i + 1) == i {
                blocks.push(FibBlock::Double);
                i += 2;
            } else {
                return Err(Error::NotFibonacci);
            }
        }
        Ok(blocks)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts integers separated by whitespace and/or commas, e.g. "3 4 1 2"
    /// or "3,4,1,2", as well as the JSON array form "[3,4,1,2]".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .unwrap_or(s);
        let mut entries = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("non-integer token {tok:?}")))?;
            entries.push(v);
        }
        Permutation::new(entries)
    }
}

/// Descent and ascent positions of a permutation together with their sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentProfile {
    pub descent_set: Vec<usize>,
    pub ascent_set: Vec<usize>,
    pub maj: usize,
    pub comaj: usize,
}

/// One block of a Fibonacci permutation: 1 or 21.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FibBlock {
    Single,
    Double,
}

/// The permutation classes named in the module map.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PermClass {
    /// All of S_n.
    All,
    /// Involutions I_n.
    Involutions,
    /// 321-avoiding involutions I_n(321).
    I321,
    /// 123-avoiding involutions I_n(123).
    I123,
    /// Involutions avoiding both 321 and 312 (Fibonacci permutations).
    I321And312,
    /// Involutions avoiding both 321 and 213.
    I321And213,
    /// All 321-avoiding permutations S_n(321).
    S321,
}

impl PermClass {
    pub const ALL_CLASSES: [PermClass; 7] = [
        PermClass::All,
        PermClass::Involutions,
        PermClass::I321,
        PermClass::I123,
        PermClass::I321And312,
        PermClass::I321And213,
        PermClass::S321,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PermClass::All => "all",
            PermClass::Involutions => "involutions",
            PermClass::I321 => "i321",
            PermClass::I123 => "i123",
            PermClass::I321And312 => "i321-312",
            PermClass::I321And213 => "i321-213",
            PermClass::S321 => "s321",
        }
    }

    /// Decidable membership predicate.
    pub fn contains(&self, p: &Permutation) -> bool {
        let p123 = || Permutation::new(vec![1, 2, 3]).unwrap();
        let p213 = || Permutation::new(vec![2, 1, 3]).unwrap();
        let p312 = || Permutation::new(vec![3, 1, 2]).unwrap();
        match self {
            PermClass::All => true,
            PermClass::Involutions => p.is_involution(),
            PermClass::I321 => p.is_involution() && p.avoids_321_fast(),
            PermClass::I123 => p.is_involution() && p.avoids(&p123()),
            PermClass::I321And312 => p.is_involution() && p.avoids_321_fast() && p.avoids(&p312()),
            PermClass::I321And213 => p.is_involution() && p.avoids_321_fast() && p.avoids(&p213()),
            PermClass::S321 => p.avoids_321_fast(),
        }
    }
}

impl FromStr for PermClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        PermClass::ALL_CLASSES
            .iter()
            .copied()
            .find(|c| c.name() == norm)
            .ok_or(Error::Unknown {
                kind: "permutation class",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which enumeration engine realizes a class.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Walk all of S_n in lexicographic order and filter by the membership
    /// predicate. The oracle; limited to n ≤ [`BRUTE_FORCE_MAX_N`].
    Brute,
    /// Class-specific generator (inverse bijection or direct construction).
    Structural,
}

/// Lazily yields all of S_n in lexicographic order.
pub struct AllPermutations {
    current: Option<Vec<usize>>,
}

impl AllPermutations {
    pub fn new(n: usize) -> Self {
        AllPermutations {
            current: Some((1..=n).collect()),
        }
    }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let out = Permutation {
            entries: cur.clone(),
        };
        self.current = next_lex(cur);
        Some(out)
    }
}

fn next_lex(mut word: Vec<usize>) -> Option<Vec<usize>> {
    let n = word.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    Some(word)
}

/// Enumerates the members of `class` in S_n with an explicit backend choice.
///
/// Both backends yield each member exactly once and agree as sets wherever
/// both apply; the order of the stream is backend-specific. The returned
/// iterator is freshly constructed on each call, so streams are restartable.
pub fn enumerate(class: PermClass, n: usize, backend: Backend) -> Result<PermStream> {
    match backend {
        Backend::Brute => {
            if n > BRUTE_FORCE_MAX_N {
                return Err(Error::LimitExceeded(format!(
                    "brute-force enumeration is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}"
                )));
            }
            Ok(Box::new(
                AllPermutations::new(n).filter(move |p| class.contains(p)),
            ))
        }
        Backend::Structural => structural(class, n),
    }
}

/// Enumerates with the preferred backend: structural where one exists,
/// brute force otherwise.
pub fn members(class: PermClass, n: usize) -> Result<PermStream> {
    match structural(class, n) {
        Ok(it) => Ok(it),
        Err(Error::NoStructuralBackend(_)) => enumerate(class, n, Backend::Brute),
        Err(e) => Err(e),
    }
}

pub type PermStream = Box<dyn Iterator<Item = Permutation>>;

fn structural(class: PermClass, n: usize) -> Result<PermStream> {
    match class {
        PermClass::I321 => {
            let it = crate::path::enumerate_paths(crate::path::PathKind::Prefix, n)
                .map(|p| crate::path::rho_inverse(&p).expect("prefix enumeration yields prefixes"));
            Ok(Box::new(it))
        }
        PermClass::I123 => {
            let it = crate::path::enumerate_paths(crate::path::PathKind::Prefix, n).map(|p| {
                let pi = crate::path::rho_inverse(&p).expect("prefix enumeration yields prefixes");
                crate::tableau::involution_transpose(&pi).expect("rho_inverse yields involutions")
            });
            Ok(Box::new(it))
        }
        PermClass::S321 => {
            let it = crate::path::enumerate_paths(crate::path::PathKind::Dyck, n).map(|d| {
                crate::path::dyck_to_s321(&d).expect("dyck enumeration yields Dyck paths")
            });
            Ok(Box::new(it))
        }
        PermClass::I321And312 => Ok(Box::new(fibonacci_permutations(n).into_iter())),
        PermClass::Involutions => Ok(Box::new(involutions(n).into_iter())),
        PermClass::All | PermClass::I321And213 => {
            Err(Error::NoStructuralBackend(class.name().to_string()))
        }
    }
}

/// All direct sums of blocks 1 and 21, i.e. the Fibonacci permutations.
fn fibonacci_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(pos: usize, n: usize, word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if pos == n {
            out.push(Permutation {
                entries: word.clone(),
            });
            return;
        }
        word.push(pos + 1);
        rec(pos + 1, n, word, out);
        word.pop();
        if pos + 2 <= n {
            word.push(pos + 2);
            word.push(pos + 1);
            rec(pos + 2, n, word, out);
            word.pop();
            word.pop();
        }
    }
    rec(0, n, &mut word, &mut out);
    out
}

/// All involutions of {1, …, n}, built by fixing or pairing the smallest
/// unplaced point.
fn involutions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = vec![0usize; n];
    fn rec(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let free = match word.iter().position(|&v| v == 0) {
            None => {
                out.push(Permutation {
                    entries: word.clone(),
                });
                return;
            }
            Some(i) => i,
        };
        word[free] = free + 1;
        rec(word, out);
        word[free] = 0;
        for j in free + 1..word.len() {
            if word[j] == 0 {
                word[free] = j + 1;
                word[j] = free + 1;
                rec(word, out);
                word[free] = 0;
                word[j] = 0;
            }
        }
    }
    rec(&mut word, &mut out);
    out
}
