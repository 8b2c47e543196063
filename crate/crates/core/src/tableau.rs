//! Standard Young tableaux, Robinson-Schensted row insertion and its inverse,
//! tableau descents, and the involution transpose map.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A standard Young tableau: strictly increasing rows and columns filled with
/// 1..n, row lengths weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n];
        for w in rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(Error::InvalidTableau(
                    "row lengths must be weakly decreasing".into(),
                ));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau("empty row".into()));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} out of range 1..{n}"
                    )));
                }
                if seen[v - 1] {
                    return Err(Error::InvalidTableau(format!("duplicate entry {v}")));
                }
                seen[v - 1] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not strictly increasing",
                        r + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// 0-indexed row containing each value; index v-1 holds the row of v.
    fn row_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                idx[v - 1] = r;
            }
        }
        idx
    }

    /// {i in [n-1] : i+1 sits in a strictly lower row than i}.
    pub fn descent_set(&self) -> Vec<usize> {
        let idx = self.row_index();
        (1..self.n()).filter(|&i| idx[i] > idx[i - 1]).collect()
    }

    /// Reflects along the main diagonal; an involution on standard tableaux.
    pub fn transpose(&self) -> StandardTableau {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            let col: Vec<usize> = self
                .rows
                .iter()
                .filter(|row| c < row.len())
                .map(|row| row[c])
                .collect();
            out.push(col);
        }
        StandardTableau { rows: out }
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by ";", entries by spaces: "1 2 5; 3 4".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau[{self}]")
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(StandardTableau::empty());
        }
        let mut rows = Vec::new();
        for row_text in s.split(';') {
            let mut row = Vec::new();
            for tok in row_text.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("non-integer token {tok:?}")))?;
                row.push(v);
            }
            rows.push(row);
        }
        StandardTableau::new(rows)
    }
}

/// Row-inserts `value` and returns the (row, col) of the cell that grew.
fn insert(rows: &mut Vec<Vec<usize>>, value: usize) -> (usize, usize) {
    let mut v = value;
    for (r, row) in rows.iter_mut().enumerate() {
        // bump the smallest entry strictly larger than v
        let pos = row.partition_point(|&y| y < v);
        if pos == row.len() {
            row.push(v);
            return (r, pos);
        }
        std::mem::swap(&mut v, &mut row[pos]);
    }
    rows.push(vec![v]);
    (rows.len() - 1, 0)
}

/// Robinson-Schensted correspondence under standard row insertion.
///
/// Returns the insertion tableau P and the recording tableau Q. They always
/// have equal shape, and P = Q exactly when the permutation is an involution.
pub fn rs_correspondence(pi: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for i in 1..=pi.n() {
        let (r, _) = insert(&mut p_rows, pi.at(i));
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(i);
    }
    (
        StandardTableau { rows: p_rows },
        StandardTableau { rows: q_rows },
    )
}

/// Inverse of the correspondence: recovers the permutation from (P, Q).
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.n();
    let q_rows = q.row_index();
    let mut rows = p.rows.clone();
    let mut word = vec![0usize; n];
    for i in (1..=n).rev() {
        let r = q_rows[i - 1];
        let mut v = rows[r].pop().expect("cell tracked by Q shape");
        if rows[r].is_empty() {
            rows.pop();
        }
        for upper in (0..r).rev() {
            // reverse bump: displace the largest entry smaller than v
            let row = &mut rows[upper];
            let pos = row.partition_point(|&y| y < v) - 1;
            std::mem::swap(&mut v, &mut row[pos]);
        }
        word[i - 1] = v;
    }
    Permutation::new(word)
}

/// Maps an involution to the involution whose RS tableau is the transpose of
/// its own. Sends I_n(123) onto I_n(321) and swaps ascent and descent sets.
pub fn involution_transpose(pi: &Permutation) -> Result<Permutation> {
    if !pi.is_involution() {
        return Err(Error::NotInvolution);
    }
    let (p, q) = rs_correspondence(pi);
    assert_eq!(
        p, q,
        "involutions must have equal insertion and recording tableaux"
    );
    let t = q.transpose();
    rs_inverse(&t, &t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::AllPermutations;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn rs_worked_example() {
        let pi = perm("3 4 1 2 7 9 5 10 6 8 11 12");
        let (p, q) = rs_correspondence(&pi);
        assert_eq!(q, tab("1 2 5 6 8 11 12; 3 4 7 9 10"));
        assert_eq!(p, q);
    }

    #[test]
    fn rs_small_cases() {
        let (p, q) = rs_correspondence(&Permutation::identity(3));
        assert_eq!(p, tab("1 2 3"));
        assert_eq!(q, tab("1 2 3"));

        let (p, q) = rs_correspondence(&perm("2 1"));
        assert_eq!(p, tab("1; 2"));
        assert_eq!(q, tab("1; 2"));
    }

    #[test]
    fn rs_inverse_examples() {
        let q = tab("1 2 5 6 8 11 12; 3 4 7 9 10");
        assert_eq!(
            rs_inverse(&q, &q).unwrap(),
            perm("3 4 1 2 7 9 5 10 6 8 11 12")
        );

        let row = tab("1 2 3");
        assert_eq!(rs_inverse(&row, &row).unwrap(), Permutation::identity(3));

        assert_eq!(
            rs_inverse(&tab("1 2; 3"), &tab("1 2 3")),
            Err(Error::ShapeMismatch)
        );
    }

    #[test]
    fn rs_round_trip_exhaustive() {
        for n in 0..=8 {
            for pi in AllPermutations::new(n) {
                let (p, q) = rs_correspondence(&pi);
                assert_eq!(p.shape(), q.shape());
                assert_eq!(rs_inverse(&p, &q).unwrap(), pi);
            }
        }
    }

    #[test]
    fn descent_set_transfers_to_recording_tableau() {
        for n in 0..=8 {
            for pi in AllPermutations::new(n) {
                let (_, q) = rs_correspondence(&pi);
                assert_eq!(pi.descent_set(), q.descent_set(), "{pi}");
            }
        }
    }

    #[test]
    fn schensted_row_and_column_bounds() {
        let p321 = perm("3 2 1");
        let p123 = perm("1 2 3");
        for n in 0..=8 {
            for pi in AllPermutations::new(n) {
                let (p, _) = rs_correspondence(&pi);
                assert_eq!(p.num_rows() <= 2, pi.avoids(&p321), "{pi}");
                let cols = p.rows().first().map_or(0, |r| r.len());
                assert_eq!(cols <= 2, pi.avoids(&p123), "{pi}");
            }
        }
    }

    #[test]
    fn tableau_descent_examples() {
        assert_eq!(
            tab("1 2 5 6 8 11 12; 3 4 7 9 10").descent_set(),
            vec![2, 6, 8]
        );
        assert_eq!(tab("1 2 3").descent_set(), Vec::<usize>::new());
        assert_eq!(tab("1; 2; 3").descent_set(), vec![1, 2]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(tab("1 2 3").transpose(), tab("1; 2; 3"));
        let t = tab("1 2 5 6 8 11 12; 3 4 7 9 10").transpose();
        assert_eq!(t.shape(), vec![2, 2, 2, 2, 2, 1, 1]);
        assert_eq!(t.transpose(), tab("1 2 5 6 8 11 12; 3 4 7 9 10"));
    }

    #[test]
    fn transpose_is_involution_small() {
        for n in 0..=6 {
            for pi in AllPermutations::new(n) {
                let (_, q) = rs_correspondence(&pi);
                assert_eq!(q.transpose().transpose(), q);
            }
        }
    }

    #[test]
    fn involution_transpose_examples() {
        assert_eq!(
            involution_transpose(&perm("8 6 12 11 5 2 10 1 9 7 4 3")).unwrap(),
            perm("3 4 1 2 7 9 5 10 6 8 11 12")
        );
        assert_eq!(involution_transpose(&perm("2 1")).unwrap(), perm("1 2"));
        assert_eq!(
            involution_transpose(&Permutation::identity(4)).unwrap(),
            perm("4 3 2 1")
        );
        assert_eq!(
            involution_transpose(&perm("2 3 1")),
            Err(Error::NotInvolution)
        );
    }

    #[test]
    fn involution_transpose_swaps_ascents_and_descents() {
        for n in 0..=7 {
            for pi in AllPermutations::new(n).filter(|p| p.is_involution()) {
                let t = involution_transpose(&pi).unwrap();
                assert!(t.is_involution());
                assert_eq!(involution_transpose(&t).unwrap(), pi);
                assert_eq!(pi.descent_profile().ascent_set, t.descent_set(), "{pi}");
            }
        }
    }

    #[test]
    fn tableau_validation() {
        assert!("1 3; 2".parse::<StandardTableau>().is_ok());
        assert!("2 1".parse::<StandardTableau>().is_err());
        assert!("1 2; 2".parse::<StandardTableau>().is_err());
        assert!("1; 2 3".parse::<StandardTableau>().is_err());
        assert!("1 4; 2".parse::<StandardTableau>().is_err());
        assert_eq!(tab("").n(), 0);
    }
}
