//! Lattice paths with steps N = (0,1) and E = (1,0), peak sets, the
//! parenthesis matching of steps, and the path-side bijections: ξ between
//! Dyck path prefixes and Grand Dyck paths, ρ between 321-avoiding
//! involutions and prefixes, and the extension of ρ sending all of S_n(321)
//! to Dyck paths.
//!
//! Vertices of a path of length n are labeled 0..n starting at the origin.
//! The geometric "tunnel" picture of the matching (segments of slope 1 lying
//! below the path) is equivalent to reading N as an opening and E as a
//! closing parenthesis, which is how `match_steps` computes it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{rs_correspondence, rs_inverse, StandardTableau};

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    N,
    E,
}

/// A word over {N, E} starting at the origin.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Step at a 1-indexed position.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    /// Endpoint (x, y) = (#E, #N).
    pub fn endpoint(&self) -> (usize, usize) {
        let n = self.steps.iter().filter(|&&s| s == Step::N).count();
        (self.len() - n, n)
    }

    /// Never goes below the diagonal y = x.
    pub fn is_prefix(&self) -> bool {
        let mut height = 0i64;
        for &s in &self.steps {
            height += if s == Step::N { 1 } else { -1 };
            if height < 0 {
                return false;
            }
        }
        true
    }

    /// Ends at (⌈n/2⌉, ⌊n/2⌋); odd lengths are allowed.
    pub fn is_grand(&self) -> bool {
        let n = self.len();
        self.endpoint() == (n.div_ceil(2), n / 2)
    }

    /// Ends on the diagonal without ever going below it.
    pub fn is_dyck(&self) -> bool {
        let (x, y) = self.endpoint();
        x == y && self.is_prefix()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            is_prefix: self.is_prefix(),
            is_grand: self.is_grand(),
            is_dyck: self.is_dyck(),
        }
    }

    /// Labels i such that step i is N and step i+1 is E.
    pub fn peak_set(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::N && w[1] == Step::E)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Peak vertices as (x, y) coordinates, in path order.
    pub fn peak_coordinates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (mut x, mut y) = (0, 0);
        for w in self.steps.windows(2) {
            match w[0] {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if w[0] == Step::N && w[1] == Step::E {
                out.push((x, y));
            }
        }
        out
    }

    /// Matches N and E steps that face each other, treating N as an opening
    /// and E as a closing parenthesis. Step indices are 1-based.
    pub fn match_steps(&self) -> StepMatching {
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        let mut unmatched_e = Vec::new();
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::N => stack.push(i + 1),
                Step::E => match stack.pop() {
                    Some(n_idx) => pairs.push((n_idx, i + 1)),
                    None => unmatched_e.push(i + 1),
                },
            }
        }
        pairs.sort_unstable();
        let mut unmatched = unmatched_e;
        unmatched.extend(stack);
        unmatched.sort_unstable();
        StepMatching { pairs, unmatched }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath[{self}]")
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// Accepts 'N'/'E' with 'U'/'R' as aliases, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_ascii_uppercase() {
                'N' | 'U' => steps.push(Step::N),
                'E' | 'R' => steps.push(Step::E),
                c if c.is_whitespace() => {}
                other => return Err(Error::Parse(format!("invalid step character {other:?}"))),
            }
        }
        Ok(LatticePath { steps })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_prefix: bool,
    pub is_grand: bool,
    pub is_dyck: bool,
}

/// The tunnel matching of a path: nested (N, E) pairs plus unmatched steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepMatching {
    /// (N index, E index) pairs, N strictly before E; nested or disjoint.
    pub pairs: Vec<(usize, usize)>,
    /// Indices of steps in no pair, ascending.
    pub unmatched: Vec<usize>,
}

/// ξ: turns a Dyck path prefix into a Grand Dyck path of the same length by
/// changing the first ⌈j/2⌉ of the j unmatched N steps into E steps. Peaks
/// are preserved.
pub fn xi(prefix: &LatticePath) -> Result<LatticePath> {
    if !prefix.is_prefix() {
        return Err(Error::NotPrefix);
    }
    let matching = prefix.match_steps();
    let flip = matching.unmatched.len().div_ceil(2);
    let mut steps = prefix.steps().to_vec();
    for &idx in matching.unmatched.iter().take(flip) {
        steps[idx - 1] = Step::E;
    }
    Ok(LatticePath::new(steps))
}

/// ξ⁻¹: changes all unmatched E steps of a Grand Dyck path (which precede its
/// unmatched N steps) back into N steps.
pub fn xi_inverse(grand: &LatticePath) -> Result<LatticePath> {
    if !grand.is_grand() {
        return Err(Error::NotGrand);
    }
    let matching = grand.match_steps();
    let mut steps = grand.steps().to_vec();
    for &idx in &matching.unmatched {
        if grand.step(idx) == Step::E {
            steps[idx - 1] = Step::N;
        }
    }
    Ok(LatticePath::new(steps))
}

/// Reads a two-row standard tableau as a Dyck path prefix: first-row entries
/// give the N positions, second-row entries the E positions.
fn prefix_from_tableau(t: &StandardTableau) -> LatticePath {
    let n = t.n();
    let mut steps = vec![Step::N; n];
    if t.num_rows() > 1 {
        for &v in &t.rows()[1] {
            steps[v - 1] = Step::E;
        }
    }
    LatticePath::new(steps)
}

/// Rebuilds the two-row tableau a prefix encodes.
fn tableau_from_prefix(prefix: &LatticePath) -> StandardTableau {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 1..=prefix.len() {
        match prefix.step(i) {
            Step::N => top.push(i),
            Step::E => bottom.push(i),
        }
    }
    let mut rows = vec![top];
    if !bottom.is_empty() {
        rows.push(bottom);
    }
    if rows[0].is_empty() {
        rows.clear();
    }
    StandardTableau::new(rows).expect("prefix positions form a standard tableau")
}

/// ρ: maps a 321-avoiding involution to a Dyck path prefix through its RS
/// tableau. Des(π) = Peak(ρ(π)).
pub fn rho(pi: &Permutation) -> Result<LatticePath> {
    let (p, q) = rs_correspondence(pi);
    // at most two rows iff π avoids 321; P = Q iff π is an involution
    if p.num_rows() > 2 {
        return Err(Error::ContainsPattern("321".into()));
    }
    if p != q {
        return Err(Error::NotInvolution);
    }
    Ok(prefix_from_tableau(&q))
}

/// ρ⁻¹: reads a prefix as a two-row tableau Q and returns the involution
/// corresponding to (Q, Q).
pub fn rho_inverse(prefix: &LatticePath) -> Result<Permutation> {
    if !prefix.is_prefix() {
        return Err(Error::NotPrefix);
    }
    let q = tableau_from_prefix(prefix);
    rs_inverse(&q, &q)
}

/// Reflection through the anti-diagonal: reverse the word and swap N and E.
/// This is the "reversal" used to glue the two tableau prefixes into a Dyck
/// path; it is an involution on words.
fn reflect(path: &LatticePath) -> LatticePath {
    let steps = path
        .steps()
        .iter()
        .rev()
        .map(|&s| match s {
            Step::N => Step::E,
            Step::E => Step::N,
        })
        .collect();
    LatticePath::new(steps)
}

/// Bijection S_n(321) → D_n: the prefix of the recording tableau Q followed
/// by the reflection of the prefix of the insertion tableau P.
///
/// Des(π) = Peak(D) ∩ [n-1], and maj(π) is the sum of those first-half peak
/// labels.
pub fn s321_to_dyck(pi: &Permutation) -> Result<LatticePath> {
    if !pi.avoids_321_fast() {
        return Err(Error::ContainsPattern("321".into()));
    }
    let (p, q) = rs_correspondence(pi);
    debug_assert!(p.num_rows() <= 2);
    let mut steps = prefix_from_tableau(&q).steps().to_vec();
    steps.extend(reflect(&prefix_from_tableau(&p)).steps());
    Ok(LatticePath::new(steps))
}

/// Inverse of [`s321_to_dyck`]: splits the Dyck path in half, reads the two
/// prefixes back as tableaux, and applies inverse RS.
pub fn dyck_to_s321(dyck: &LatticePath) -> Result<Permutation> {
    if !dyck.is_dyck() {
        return Err(Error::NotDyck);
    }
    let n = dyck.len() / 2;
    let first = LatticePath::new(dyck.steps()[..n].to_vec());
    let second = LatticePath::new(dyck.steps()[n..].to_vec());
    let q = tableau_from_prefix(&first);
    let p = tableau_from_prefix(&reflect(&second));
    rs_inverse(&p, &q)
}

/// Path families realized by [`enumerate_paths`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PathKind {
    /// P_n: Dyck path prefixes of length n.
    Prefix,
    /// G_n: Grand Dyck paths of length n.
    Grand,
    /// D_n: Dyck paths of length 2n (the parameter is the family index n,
    /// not the step count).
    Dyck,
}

/// Lazily enumerates P_n, G_n, or D_n, each path exactly once, in
/// lexicographic order with N before E.
pub fn enumerate_paths(kind: PathKind, n: usize) -> PathIter {
    let (len, max_n, max_e, require_prefix) = match kind {
        PathKind::Prefix => (n, n, n, true),
        PathKind::Grand => (n, n / 2, n.div_ceil(2), false),
        PathKind::Dyck => (2 * n, n, n, true),
    };
    PathIter {
        len,
        max_n,
        max_e,
        require_prefix,
        word: Vec::with_capacity(len),
        started: false,
        done: false,
    }
}

pub struct PathIter {
    len: usize,
    max_n: usize,
    max_e: usize,
    require_prefix: bool,
    word: Vec<Step>,
    started: bool,
    done: bool,
}

impl PathIter {
    fn n_allowed(&self, n_count: usize) -> bool {
        n_count < self.max_n
    }

    fn e_allowed(&self, n_count: usize, e_count: usize) -> bool {
        if e_count >= self.max_e {
            return false;
        }
        !self.require_prefix || e_count < n_count
    }

    /// Extends the current word to full length, always preferring N.
    fn fill(&mut self) {
        let mut n_count = self.word.iter().filter(|&&s| s == Step::N).count();
        let mut e_count = self.word.len() - n_count;
        while self.word.len() < self.len {
            if self.n_allowed(n_count) {
                self.word.push(Step::N);
                n_count += 1;
            } else {
                debug_assert!(self.e_allowed(n_count, e_count));
                self.word.push(Step::E);
                e_count += 1;
            }
        }
    }

    /// Backtracks to the deepest N that can become an E, switches it, and
    /// refills. Returns false when the enumeration is exhausted.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.word.pop() {
            if last == Step::E {
                continue;
            }
            let n_count = self.word.iter().filter(|&&s| s == Step::N).count();
            let e_count = self.word.len() - n_count;
            if self.e_allowed(n_count, e_count) {
                self.word.push(Step::E);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(LatticePath::new(self.word.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, AllPermutations, Backend, PermClass};

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const FIG_XI_LEFT: &str = "NNEENNENNEENNNEN";
    const FIG_XI_RIGHT: &str = "NNEEENENNEEENNEN";

    #[test]
    fn classify_examples() {
        let c = path(FIG_XI_LEFT).classify();
        assert!(c.is_prefix && !c.is_grand && !c.is_dyck);
        assert_eq!(path(FIG_XI_LEFT).endpoint(), (6, 10));

        let c = LatticePath::empty().classify();
        assert!(c.is_prefix && c.is_grand && c.is_dyck);

        let c = path("EN").classify();
        assert!(c.is_grand && !c.is_prefix && !c.is_dyck);
    }

    #[test]
    fn parse_aliases_and_errors() {
        assert_eq!(path("UURR"), path("NNEE"));
        assert!("NXE".parse::<LatticePath>().is_err());
        assert_eq!(path("ne"), path("NE"));
    }

    #[test]
    fn peak_set_examples() {
        assert_eq!(path(FIG_XI_LEFT).peak_set(), vec![2, 6, 9, 14]);
        assert_eq!(path(FIG_XI_RIGHT).peak_set(), vec![2, 6, 9, 14]);
        assert_eq!(path("EEE").peak_set(), Vec::<usize>::new());
        assert_eq!(path("NE").peak_set(), vec![1]);
    }

    #[test]
    fn match_steps_examples() {
        let m = path("NE").match_steps();
        assert_eq!(m.pairs, vec![(1, 2)]);
        assert!(m.unmatched.is_empty());

        let m = path(FIG_XI_LEFT).match_steps();
        assert_eq!(m.unmatched, vec![5, 12, 13, 16]);
        for &(a, b) in &m.pairs {
            assert!(a < b);
        }

        let m = path("EN").match_steps();
        assert_eq!(m.unmatched, vec![1, 2]);
        assert!(m.pairs.is_empty());
    }

    #[test]
    fn unmatched_steps_of_prefix_are_all_n() {
        for p in enumerate_paths(PathKind::Prefix, 9) {
            let m = p.match_steps();
            for &idx in &m.unmatched {
                assert_eq!(p.step(idx), Step::N);
            }
        }
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&path(FIG_XI_LEFT)).unwrap(), path(FIG_XI_RIGHT));
        let dyck = path("NNEE");
        assert_eq!(xi(&dyck).unwrap(), dyck);
        assert_eq!(xi(&path("N")).unwrap(), path("E"));
        assert!(xi(&path("EN")).is_err());
    }

    #[test]
    fn xi_inverse_examples() {
        assert_eq!(xi_inverse(&path(FIG_XI_RIGHT)).unwrap(), path(FIG_XI_LEFT));
        let dyck = path("NENE");
        assert_eq!(xi_inverse(&dyck).unwrap(), dyck);
        assert_eq!(xi_inverse(&path("E")).unwrap(), path("N"));
        assert!(xi_inverse(&path("NNE")).is_err());
    }

    #[test]
    fn xi_round_trip_and_peaks() {
        for n in 0..=14 {
            for p in enumerate_paths(PathKind::Prefix, n) {
                let g = xi(&p).unwrap();
                assert!(g.is_grand());
                assert_eq!(g.len(), p.len());
                assert_eq!(g.peak_set(), p.peak_set(), "{p}");
                assert_eq!(xi_inverse(&g).unwrap(), p);
            }
            for g in enumerate_paths(PathKind::Grand, n) {
                let p = xi_inverse(&g).unwrap();
                assert!(p.is_prefix());
                assert_eq!(xi(&p).unwrap(), g);
            }
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            rho(&perm("3 4 1 2 7 9 5 10 6 8 11 12")).unwrap(),
            path("NNEENNENEENN")
        );
        assert_eq!(rho(&Permutation::identity(5)).unwrap(), path("NNNNN"));
        assert_eq!(rho(&perm("2 1")).unwrap(), path("NE"));
        assert!(matches!(
            rho(&perm("3 2 1")),
            Err(Error::ContainsPattern(_))
        ));
        assert!(matches!(rho(&perm("2 3 1")), Err(Error::NotInvolution)));
    }

    #[test]
    fn rho_inverse_examples() {
        assert_eq!(
            rho_inverse(&path("NNEENNENEENN")).unwrap(),
            perm("3 4 1 2 7 9 5 10 6 8 11 12")
        );
        assert_eq!(
            rho_inverse(&path("NNNN")).unwrap(),
            Permutation::identity(4)
        );
        assert_eq!(rho_inverse(&path("NE")).unwrap(), perm("2 1"));
        assert!(rho_inverse(&path("EN")).is_err());
    }

    #[test]
    fn rho_round_trip_with_des_peak() {
        for n in 0..=12 {
            for p in enumerate_paths(PathKind::Prefix, n) {
                let pi = rho_inverse(&p).unwrap();
                assert!(pi.is_involution());
                assert!(pi.avoids_321_fast());
                assert_eq!(rho(&pi).unwrap(), p);
                assert_eq!(pi.descent_set(), p.peak_set(), "{pi}");
            }
        }
    }

    #[test]
    fn s321_examples() {
        assert_eq!(
            s321_to_dyck(&Permutation::identity(4)).unwrap(),
            path("NNNNEEEE")
        );
        assert_eq!(s321_to_dyck(&perm("2 3 1")).unwrap(), path("NNEENE"));
        assert_eq!(dyck_to_s321(&path("NNEENE")).unwrap(), perm("2 3 1"));
        assert_eq!(
            dyck_to_s321(&path("NNNEEE")).unwrap(),
            Permutation::identity(3)
        );
        assert!(dyck_to_s321(&path("NENN")).is_err());
    }

    #[test]
    fn s321_round_trip_small() {
        for pi in enumerate(PermClass::S321, 3, Backend::Brute).unwrap() {
            let d = s321_to_dyck(&pi).unwrap();
            assert!(d.is_dyck());
            assert_eq!(dyck_to_s321(&d).unwrap(), pi);
        }
        let all: std::collections::BTreeSet<_> = enumerate_paths(PathKind::Dyck, 4)
            .map(|d| dyck_to_s321(&d).unwrap())
            .collect();
        assert_eq!(all.len(), 14);
        for pi in &all {
            assert!(pi.avoids_321_fast());
        }
    }

    #[test]
    fn s321_descents_are_first_half_peaks() {
        for n in 0..=7 {
            for pi in AllPermutations::new(n).filter(|p| p.avoids_321_fast()) {
                let d = s321_to_dyck(&pi).unwrap();
                let first_half: Vec<usize> = d.peak_set().into_iter().filter(|&i| i < n).collect();
                assert_eq!(pi.descent_set(), first_half, "{pi}");
                assert_eq!(pi.maj(), first_half.iter().sum::<usize>());
            }
        }
    }

    #[test]
    fn enumerate_path_counts() {
        assert_eq!(enumerate_paths(PathKind::Prefix, 4).count(), 6);
        assert_eq!(enumerate_paths(PathKind::Grand, 4).count(), 6);
        assert_eq!(enumerate_paths(PathKind::Dyck, 3).count(), 5);
        assert_eq!(enumerate_paths(PathKind::Prefix, 0).count(), 1);
        assert_eq!(enumerate_paths(PathKind::Grand, 1).count(), 1);
        // C(n, floor(n/2)) for prefixes and grand paths
        for n in 0..=10 {
            let c = crate::poly::binomial(n as u64, (n / 2) as u64).unwrap() as usize;
            assert_eq!(enumerate_paths(PathKind::Prefix, n).count(), c);
            assert_eq!(enumerate_paths(PathKind::Grand, n).count(), c);
        }
    }

    #[test]
    fn enumerated_paths_are_valid_and_distinct() {
        use std::collections::BTreeSet;
        for n in 0..=9 {
            let prefixes: Vec<_> = enumerate_paths(PathKind::Prefix, n).collect();
            let set: BTreeSet<String> = prefixes.iter().map(|p| p.to_string()).collect();
            assert_eq!(set.len(), prefixes.len());
            assert!(prefixes.iter().all(|p| p.is_prefix() && p.len() == n));
            assert!(enumerate_paths(PathKind::Grand, n).all(|p| p.is_grand()));
            assert!(enumerate_paths(PathKind::Dyck, n).all(|p| p.is_dyck()));
        }
    }

    #[test]
    fn grand_peak_counts_follow_binomial_product() {
        for n in 0..=14usize {
            let mut histogram = std::collections::BTreeMap::new();
            for g in enumerate_paths(PathKind::Grand, n) {
                *histogram.entry(g.peak_set().len()).or_insert(0u64) += 1;
            }
            for k in 0..=n.max(1) - 1 {
                let expected = crate::poly::binomial(n.div_ceil(2) as u64, k as u64).unwrap()
                    * crate::poly::binomial((n / 2) as u64, k as u64).unwrap();
                assert_eq!(
                    histogram.get(&k).copied().unwrap_or(0),
                    expected,
                    "n={n} k={k}"
                );
            }
        }
    }
}
