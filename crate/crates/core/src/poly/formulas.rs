//! Closed forms and recurrences for the descent statistics, together with
//! their enumeration-backed ground truths. Every closed form here is paired
//! with an independent enumeration route in the verification suites.

use crate::error::{Error, Result};
use crate::partition::HookDecomposition;
use crate::perm::{members, PermClass};
use crate::poly::{QPoly, SubsetPoly};

/// Exact binomial coefficient with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i at every stage
        acc = acc.checked_mul(n - k + i).ok_or(Error::Overflow)? / i;
    }
    Ok(acc)
}

/// C_m = binom(2m, m) / (m + 1).
pub fn catalan(m: u64) -> Result<u64> {
    Ok(binomial(2 * m, m)? / (m + 1))
}

/// Catalan number extended by C_neg = 0, as needed by the A_{n,m} sums.
fn catalan_or_zero(m: i64) -> Result<i64> {
    if m < 0 {
        return Ok(0);
    }
    i64::try_from(catalan(m as u64)?).map_err(|_| Error::Overflow)
}

/// The q-binomial coefficient, expanded from its defining ratio
/// (1−q^n)…(1−q^{n−j+1}) / (1−q^j)…(1−q) by exact polynomial division.
pub fn q_binomial(n: usize, j: usize) -> Result<QPoly> {
    if j > n {
        return Err(Error::Unsupported(format!(
            "q-binomial requires 0 <= j <= n, got ({n}, {j})"
        )));
    }
    let mut acc = QPoly::one();
    for i in n - j + 1..=n {
        acc = acc.mul(&one_minus_q_to(i))?;
    }
    for i in 1..=j {
        acc = acc.exact_div(&one_minus_q_to(i))?;
    }
    Ok(acc)
}

fn one_minus_q_to(e: usize) -> QPoly {
    QPoly::one()
        .sub(&QPoly::monomial(e, 1))
        .expect("small constants")
}

/// Number of 321-avoiding involutions of size n with exactly k descents:
/// binom(⌈n/2⌉, k) · binom(⌊n/2⌋, k).
pub fn des_count_formula(n: usize, k: usize) -> Result<u64> {
    let high = binomial(n.div_ceil(2) as u64, k as u64)?;
    let low = binomial((n / 2) as u64, k as u64)?;
    high.checked_mul(low).ok_or(Error::Overflow)
}

/// Joint distribution of (des, maj) on I_n(321) at des = k:
/// q^{k²} · qbin(⌈n/2⌉, k) · qbin(⌊n/2⌋, k); zero when k > ⌊n/2⌋.
pub fn joint_des_maj(n: usize, k: usize) -> Result<QPoly> {
    if k > n / 2 {
        return Ok(QPoly::zero());
    }
    let high = q_binomial(n.div_ceil(2), k)?;
    let low = q_binomial(n / 2, k)?;
    Ok(high.mul(&low)?.shift(k * k))
}

/// Σ_π q^{maj(π)} over a class, by enumeration.
pub fn maj_poly(class: PermClass, n: usize) -> Result<QPoly> {
    stat_poly(class, n, |p| p.maj())
}

/// Σ_π q^{comaj(π)} over a class, by enumeration.
pub fn comaj_poly(class: PermClass, n: usize) -> Result<QPoly> {
    stat_poly(class, n, |p| p.comaj())
}

fn stat_poly(
    class: PermClass,
    n: usize,
    stat: impl Fn(&crate::perm::Permutation) -> usize,
) -> Result<QPoly> {
    let mut coeffs = Vec::new();
    for p in members(class, n)? {
        let s = stat(&p);
        if s >= coeffs.len() {
            coeffs.resize(s + 1, 0i64);
        }
        coeffs[s] = coeffs[s].checked_add(1).ok_or(Error::Overflow)?;
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Histogram of descent counts over a class, by enumeration.
pub fn des_histogram(class: PermClass, n: usize) -> Result<Vec<u64>> {
    let mut hist = Vec::new();
    for p in members(class, n)? {
        let k = p.descent_set().len();
        if k >= hist.len() {
            hist.resize(k + 1, 0u64);
        }
        hist[k] += 1;
    }
    if hist.is_empty() {
        hist.push(0);
    }
    Ok(hist)
}

/// maj generating polynomial of I_n(321, 312) via the recurrence
/// p_n = p_{n−1} + q^{n−1} p_{n−2}, p_0 = p_1 = 1.
pub fn fibonacci_maj(n: usize) -> Result<QPoly> {
    let mut prev = QPoly::one();
    let mut cur = QPoly::one();
    for i in 2..=n {
        let next = cur.add(&prev.shift(i - 1))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Row n of the Fibonacci-polynomial triangle: the coefficient of t^k x^n in
/// 1/(1 − x − t x²), which is the descent histogram of I_n(321, 312).
pub fn fibonacci_des_counts(n: usize) -> Result<Vec<u64>> {
    // rows satisfy F_n(t) = F_{n-1}(t) + t F_{n-2}(t)
    let mut prev: Vec<u64> = vec![1];
    let mut cur: Vec<u64> = vec![1];
    for _ in 2..=n {
        let mut next = vec![0u64; (cur.len()).max(prev.len() + 1)];
        for (k, &c) in cur.iter().enumerate() {
            next[k] = next[k].checked_add(c).ok_or(Error::Overflow)?;
        }
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = next[k + 1].checked_add(c).ok_or(Error::Overflow)?;
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The closed form (1 − q^n)/(1 − q) claimed for I_n(321, 213), kept verbatim
/// for comparison; enumeration disagrees with it from n = 3 on, which the
/// verification suite reports as a registered discrepancy.
pub fn double213_claim(n: usize) -> Result<QPoly> {
    if n == 0 {
        return Ok(QPoly::one());
    }
    one_minus_q_to(n).exact_div(&one_minus_q_to(1))
}

/// Ground truth for I_n(321, 213), by enumeration.
pub fn double213_enumerated(n: usize) -> Result<QPoly> {
    maj_poly(PermClass::I321And213, n)
}

fn has_consecutive(set: &[usize]) -> bool {
    set.windows(2).any(|w| w[1] == w[0] + 1)
}

fn validate_subset(n: usize, set: &[usize]) -> Result<()> {
    if set.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Unsupported(
            "descent sets must be strictly increasing".into(),
        ));
    }
    if let Some(&j) = set.iter().find(|&&j| j == 0 || j + 1 > n) {
        return Err(Error::Unsupported(format!(
            "position {j} outside [n-1] for n = {n}"
        )));
    }
    Ok(())
}

/// |{π ∈ S_n(321) : Des(π) ⊇ S}| = C_{n−|S|} when S has no two consecutive
/// elements, 0 otherwise.
pub fn superset_count(n: usize, set: &[usize]) -> Result<u64> {
    validate_subset(n, set)?;
    if has_consecutive(set) {
        return Ok(0);
    }
    catalan((n - set.len()) as u64)
}

/// |{π ∈ S_n(321) : Des(π) = S}| by inclusion-exclusion over supersets of S
/// with no two consecutive elements.
pub fn exact_descent_count(n: usize, set: &[usize]) -> Result<u64> {
    validate_subset(n, set)?;
    if has_consecutive(set) {
        return Ok(0);
    }
    let mut total: i64 = 0;
    let mut scratch: Vec<usize> = set.to_vec();
    sum_over_supersets(n, set, 1, &mut scratch, &mut total)?;
    u64::try_from(total).map_err(|_| Error::Overflow)
}

/// Walks supersets T ⊇ S inside [n−1] with no two consecutive elements,
/// accumulating (−1)^{|T|−|S|} C_{n−|T|}.
fn sum_over_supersets(
    n: usize,
    base: &[usize],
    from: usize,
    current: &mut Vec<usize>,
    total: &mut i64,
) -> Result<()> {
    if from + 1 > n {
        let sign = if (current.len() - base.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let c = catalan_or_zero((n - current.len()) as i64)?;
        *total = total.checked_add(sign * c).ok_or(Error::Overflow)?;
        return Ok(());
    }
    // skip position `from`
    sum_over_supersets(n, base, from + 1, current, total)?;
    // or include it when it keeps T valid and not adjacent to a member
    let adjacent = current
        .iter()
        .any(|&j| j == from || j + 1 == from || j == from + 1);
    if !base.contains(&from) && !adjacent {
        current.push(from);
        current.sort_unstable();
        sum_over_supersets(n, base, from + 1, current, total)?;
        let pos = current.iter().position(|&j| j == from).unwrap();
        current.remove(pos);
    }
    Ok(())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum APolyMethod {
    /// Σ_T C_{m−|T|} Π_{j∈T} (x_j − 1) over subsets of [n−1] with no two
    /// consecutive elements.
    Direct,
    /// A_{n,m} = (x_{n−1} − 1) A_{n−2,m−1} + A_{n−1,m} with
    /// A_{0,m} = A_{1,m} = C_m and A_{n,0} = 1 for n ≥ 2.
    Recurrence,
}

/// The descent-set generating polynomial A_{n,m}(x); A_{n,n} is the
/// generating polynomial of Des over S_n(321).
pub fn a_poly(n: usize, m: usize, method: APolyMethod) -> Result<SubsetPoly> {
    let nvars = n.saturating_sub(1);
    match method {
        APolyMethod::Direct => {
            let mut acc = SubsetPoly::zero(nvars);
            let mut subset = Vec::new();
            a_poly_direct(n, m, 1, &mut subset, &mut acc)?;
            Ok(acc)
        }
        APolyMethod::Recurrence => {
            let mut table: Vec<Vec<SubsetPoly>> = Vec::with_capacity(n + 1);
            for ni in 0..=n {
                let mut row = Vec::with_capacity(m + 1);
                for mi in 0..=m {
                    let value = if ni <= 1 {
                        SubsetPoly::constant(catalan_or_zero(mi as i64)?, nvars)
                    } else if mi == 0 {
                        SubsetPoly::constant(1, nvars)
                    } else {
                        let with_last = table[ni - 2][mi - 1].mul_var_minus_one(ni - 1)?;
                        with_last.add(&table[ni - 1][mi])?
                    };
                    row.push(value);
                }
                table.push(row);
            }
            Ok(table[n][m].clone())
        }
    }
}

fn a_poly_direct(
    n: usize,
    m: usize,
    from: usize,
    subset: &mut Vec<usize>,
    acc: &mut SubsetPoly,
) -> Result<()> {
    if from + 1 > n {
        let c = catalan_or_zero(m as i64 - subset.len() as i64)?;
        if c != 0 {
            let mut term = SubsetPoly::constant(c, acc.nvars());
            for &j in subset.iter() {
                term = term.mul_var_minus_one(j)?;
            }
            *acc = acc.add(&term)?;
        }
        return Ok(());
    }
    a_poly_direct(n, m, from + 1, subset, acc)?;
    if subset.last().is_none_or(|&j| from > j + 1) {
        subset.push(from);
        a_poly_direct(n, m, from + 2, subset, acc)?;
        subset.pop();
    }
    Ok(())
}

/// Σ_π x_{Des(π)} over a class, by enumeration.
pub fn descent_set_poly(class: PermClass, n: usize) -> Result<SubsetPoly> {
    let mut acc = SubsetPoly::zero(n.saturating_sub(1));
    for p in members(class, n)? {
        acc.add_term(&p.descent_set(), 1)?;
    }
    Ok(acc)
}

/// Truncation of the limit series q^{k²} / ((1−q)(1−q²)…(1−q^k))², the
/// large-n joint (des = k, maj) generating function.
pub fn limit_joint_series(k: usize, order: usize) -> Result<QPoly> {
    if k * k > order {
        return Ok(QPoly::zero());
    }
    let mut acc = QPoly::monomial(k * k, 1);
    for i in 1..=k {
        let inv = one_minus_q_to(i).series_inverse(order)?;
        acc = acc.mul(&inv)?.truncate(order);
        acc = acc.mul(&inv)?.truncate(order);
    }
    Ok(acc)
}

/// Coefficient of x_S in the large-n multivariate descent-set limit, which
/// the hook-placement count realizes: i_1 · Π (i_j − i_{j−1} − 1).
pub fn limit_hd_coefficient(hd: &HookDecomposition) -> Result<u64> {
    crate::partition::hd_count_formula(hd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, Backend};

    #[test]
    fn binomial_and_catalan() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(catalan(0).unwrap(), 1);
        assert_eq!(catalan(3).unwrap(), 5);
        assert_eq!(catalan(4).unwrap(), 14);
        let s4_321 = enumerate(PermClass::S321, 4, Backend::Brute)
            .unwrap()
            .count() as u64;
        assert_eq!(catalan(4).unwrap(), s4_321);
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2).unwrap().coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(7, 0).unwrap(), QPoly::one());
        assert_eq!(q_binomial(5, 2).unwrap(), q_binomial(5, 3).unwrap());
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn q_binomial_properties() {
        for n in 0..=20usize {
            for j in 0..=n {
                let p = q_binomial(n, j).unwrap();
                assert_eq!(p.degree().unwrap_or(0), j * (n - j));
                assert!(p.is_palindromic());
                assert!(p.coeffs().iter().all(|&c| c >= 0));
                assert_eq!(
                    p.eval_i64(1).unwrap() as u64,
                    binomial(n as u64, j as u64).unwrap()
                );
            }
        }
    }

    #[test]
    fn q_binomial_counts_partitions_in_box() {
        use crate::partition::{count_of_size, BoxSpec};
        for n in 0..=10usize {
            let p = q_binomial(n, n / 2).unwrap();
            let spec = BoxSpec::new(n);
            let top = spec.width() * spec.height();
            for m in 0..=top {
                assert_eq!(p.coeff(m) as u64, count_of_size(&spec, m), "n={n} m={m}");
            }
            assert_eq!(p.degree().unwrap_or(0), top);
        }
    }

    #[test]
    fn des_count_examples() {
        assert_eq!(des_count_formula(4, 1).unwrap(), 4);
        assert_eq!(des_count_formula(9, 0).unwrap(), 1);
        let total: u64 = (0..5).map(|k| des_count_formula(5, k).unwrap()).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn joint_des_maj_examples() {
        assert_eq!(joint_des_maj(4, 0).unwrap(), QPoly::one());
        assert_eq!(joint_des_maj(4, 1).unwrap().coeffs(), &[0, 1, 2, 1]);
        let mut total = QPoly::zero();
        for k in 0..=2 {
            total = total.add(&joint_des_maj(4, k).unwrap()).unwrap();
        }
        assert_eq!(total, q_binomial(4, 2).unwrap());
        assert!(joint_des_maj(4, 3).unwrap().is_zero());
    }

    #[test]
    fn maj_poly_examples() {
        assert_eq!(
            maj_poly(PermClass::I321, 4).unwrap().coeffs(),
            &[1, 1, 2, 1, 1]
        );
        assert_eq!(
            comaj_poly(PermClass::I123, 4).unwrap().coeffs(),
            &[1, 1, 2, 1, 1]
        );
        assert_eq!(maj_poly(PermClass::All, 1).unwrap(), QPoly::one());
        assert_eq!(maj_poly(PermClass::All, 0).unwrap(), QPoly::one());
    }

    #[test]
    fn fibonacci_maj_examples() {
        assert_eq!(fibonacci_maj(0).unwrap(), QPoly::one());
        assert_eq!(fibonacci_maj(1).unwrap(), QPoly::one());
        assert_eq!(fibonacci_maj(3).unwrap().coeffs(), &[1, 1, 1]);
        // values at q = 1 are the Fibonacci numbers
        let fib = [1i64, 1, 2, 3, 5, 8, 13, 21];
        for (n, &f) in fib.iter().enumerate() {
            assert_eq!(fibonacci_maj(n).unwrap().eval_i64(1).unwrap(), f);
        }
    }

    #[test]
    fn fibonacci_des_examples() {
        assert_eq!(fibonacci_des_counts(0).unwrap(), vec![1]);
        assert_eq!(fibonacci_des_counts(4).unwrap(), vec![1, 3, 1]);
        for n in 0..=10usize {
            let row = fibonacci_des_counts(n).unwrap();
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(
                    c,
                    binomial((n - k) as u64, k as u64).unwrap(),
                    "n={n} k={k}"
                );
            }
            let total: u64 = row.iter().sum();
            assert_eq!(total as i64, fibonacci_maj(n).unwrap().eval_i64(1).unwrap());
        }
    }

    #[test]
    fn double213_examples() {
        assert_eq!(double213_claim(3).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(double213_enumerated(3).unwrap().coeffs(), &[1, 0, 1]);
        assert_eq!(double213_enumerated(4).unwrap().coeffs(), &[1, 0, 1, 1]);
        // the claim and the enumeration agree only for n <= 2
        for n in 0..=2 {
            assert_eq!(
                double213_claim(n).unwrap(),
                double213_enumerated(n).unwrap()
            );
        }
    }

    #[test]
    fn superset_and_exact_counts() {
        assert_eq!(superset_count(4, &[2]).unwrap(), 5);
        assert_eq!(superset_count(4, &[1, 2]).unwrap(), 0);
        assert_eq!(superset_count(3, &[1]).unwrap(), 2);
        assert_eq!(exact_descent_count(4, &[1]).unwrap(), 3);
        assert_eq!(exact_descent_count(4, &[1, 3]).unwrap(), 2);
        assert_eq!(exact_descent_count(5, &[2, 3]).unwrap(), 0);
        assert!(superset_count(3, &[4]).is_err());
    }

    #[test]
    fn a_poly_examples() {
        let direct = a_poly(3, 3, APolyMethod::Direct).unwrap();
        assert_eq!(direct.coefficient(&[]), 1);
        assert_eq!(direct.coefficient(&[1]), 2);
        assert_eq!(direct.coefficient(&[2]), 2);
        assert_eq!(direct.num_terms(), 3);
        assert_eq!(direct, a_poly(3, 3, APolyMethod::Recurrence).unwrap());

        for n in 2..=6 {
            assert_eq!(
                a_poly(n, 0, APolyMethod::Recurrence).unwrap(),
                SubsetPoly::constant(1, n - 1)
            );
        }
        for m in 0..=5usize {
            let c = catalan(m as u64).unwrap() as i64;
            assert_eq!(
                a_poly(1, m, APolyMethod::Recurrence).unwrap(),
                SubsetPoly::constant(c, 0)
            );
        }
    }

    #[test]
    fn a_poly_matches_enumeration() {
        for n in 0..=8 {
            let enumerated = descent_set_poly(PermClass::S321, n).unwrap();
            let direct = a_poly(n, n, APolyMethod::Direct).unwrap();
            let recur = a_poly(n, n, APolyMethod::Recurrence).unwrap();
            assert_eq!(direct, enumerated, "n={n}");
            assert_eq!(recur, enumerated, "n={n}");
        }
    }

    #[test]
    fn descent_set_poly_examples() {
        let p = descent_set_poly(PermClass::I321, 4).unwrap();
        assert_eq!(p.coefficient(&[]), 1);
        assert_eq!(p.coefficient(&[1]), 1);
        assert_eq!(p.coefficient(&[2]), 2);
        assert_eq!(p.coefficient(&[3]), 1);
        assert_eq!(p.coefficient(&[1, 3]), 1);
        assert_eq!(p.num_terms(), 5);
        assert_eq!(
            descent_set_poly(PermClass::All, 1).unwrap(),
            SubsetPoly::constant(1, 0)
        );
    }

    #[test]
    fn specialization_recovers_maj() {
        for n in 0..=8 {
            assert_eq!(
                descent_set_poly(PermClass::I321, n)
                    .unwrap()
                    .specialize()
                    .unwrap(),
                q_binomial(n, n / 2).unwrap(),
                "n={n}"
            );
            assert_eq!(
                descent_set_poly(PermClass::S321, n)
                    .unwrap()
                    .specialize()
                    .unwrap(),
                maj_poly(PermClass::S321, n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn limit_series_examples() {
        assert_eq!(limit_joint_series(0, 5).unwrap(), QPoly::one());
        assert_eq!(limit_joint_series(1, 3).unwrap().coeffs(), &[0, 1, 2, 3]);
        assert!(limit_joint_series(3, 5).unwrap().is_zero());
    }

    #[test]
    fn limit_hd_examples() {
        let hd = HookDecomposition::new(vec![2, 6, 8]).unwrap();
        assert_eq!(limit_hd_coefficient(&hd).unwrap(), 6);
        assert_eq!(
            limit_hd_coefficient(&hd).unwrap() as usize,
            crate::partition::partitions_with_hd(&hd).len()
        );
    }
}
