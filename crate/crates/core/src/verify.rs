//! Verification suites: each identity of the library is checked against an
//! independent enumeration at desk scale, one record per (check, parameter).
//!
//! A suite passes iff no record has status `Fail`. Checks whose stated closed
//! form is contradicted by enumeration are registered as known discrepancies
//! (currently the maj formula for involutions avoiding both 321 and 213);
//! their mismatch is reported but does not fail the suite.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{
    boundary_path, enumerate_in_box, partition_count, partition_from_boundary, partitions_with_hd,
    psi, psi_inverse, BoxSpec, HookDecomposition,
};
use crate::path::{
    dyck_to_s321, enumerate_paths, rho, rho_inverse, s321_to_dyck, xi, xi_inverse, PathKind,
};
use crate::perm::{enumerate, Backend, PermClass, Permutation};
use crate::poly::{
    a_poly, binomial, comaj_poly, des_count_formula, des_histogram, descent_set_poly,
    double213_claim, double213_enumerated, exact_descent_count, fibonacci_des_counts,
    fibonacci_maj, joint_des_maj, limit_joint_series, maj_poly, q_binomial, superset_count,
    APolyMethod,
};
use crate::tableau::{involution_transpose, rs_correspondence, rs_inverse};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    KnownDiscrepancy,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::KnownDiscrepancy => "known-discrepancy",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub check: String,
    pub parameter: String,
    pub expected: String,
    pub actual: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// A suite passes iff no record failed; known discrepancies do not fail.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            match r.status {
                CheckStatus::Pass => {
                    out.push_str(&format!(
                        "[pass] {} {} == {}\n",
                        r.check, r.parameter, r.actual
                    ));
                }
                _ => {
                    out.push_str(&format!(
                        "[{}] {} {}: expected {}; got {}\n",
                        r.status, r.check, r.parameter, r.expected, r.actual
                    ));
                }
            }
        }
        out.push_str(&format!(
            "suite {}: {} checks, {} pass, {} fail, {} known-discrepancy ({} ms)\n",
            self.suite,
            self.records.len(),
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::KnownDiscrepancy),
            self.elapsed.as_millis()
        ));
        out
    }
}

type CheckFn = Box<dyn Fn() -> Result<(String, String)> + Send + Sync>;

struct Check {
    id: &'static str,
    parameter: String,
    known_discrepancy: bool,
    run: CheckFn,
}

impl Check {
    fn new(
        id: &'static str,
        parameter: String,
        run: impl Fn() -> Result<(String, String)> + Send + Sync + 'static,
    ) -> Self {
        Check {
            id,
            parameter,
            known_discrepancy: false,
            run: Box::new(run),
        }
    }

    fn known(mut self) -> Self {
        self.known_discrepancy = true;
        self
    }

    fn execute(&self) -> CheckRecord {
        let (expected, actual, ok) = match (self.run)() {
            Ok((expected, actual)) => {
                let ok = expected == actual;
                (expected, actual, ok)
            }
            Err(e) => ("no error".to_string(), format!("error: {e}"), false),
        };
        let status = if ok {
            CheckStatus::Pass
        } else if self.known_discrepancy {
            CheckStatus::KnownDiscrepancy
        } else {
            CheckStatus::Fail
        };
        CheckRecord {
            check: self.id.to_string(),
            parameter: self.parameter.clone(),
            expected,
            actual,
            status,
        }
    }
}

fn set_text(set: &[usize]) -> String {
    let words: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", words.join(","))
}

/// Suites in criterion order; "all" runs every one of them.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "round-trips",
        "peaks-xi",
        "des-peak",
        "des-count",
        "maj",
        "main-theorem",
        "joint-des-maj",
        "transpose-123",
        "p-of-m",
        "large-n",
        "double-312",
        "double-213",
        "s321-superset",
        "s321-descent-poly",
        "limit-stabilization",
        "s321-dyck",
    ]
}

fn checks_for(suite: &str, n_max: usize) -> Result<Vec<Check>> {
    match suite {
        "round-trips" => Ok(round_trip_checks(n_max)),
        "peaks-xi" => Ok(peaks_xi_checks(n_max)),
        "des-peak" => Ok(des_peak_checks(n_max)),
        "des-count" => Ok(des_count_checks(n_max)),
        "maj" => Ok(maj_checks(n_max)),
        "main-theorem" => Ok(main_theorem_checks(n_max)),
        "joint-des-maj" => Ok(joint_checks(n_max)),
        "transpose-123" => Ok(transpose_checks(n_max)),
        "p-of-m" => Ok(p_of_m_checks(n_max)),
        "large-n" => Ok(large_n_checks(n_max)),
        "double-312" => Ok(double312_checks(n_max)),
        "double-213" => Ok(double213_checks(n_max)),
        "s321-superset" => Ok(s321_superset_checks(n_max)),
        "s321-descent-poly" => Ok(s321_poly_checks(n_max)),
        "limit-stabilization" => Ok(limit_checks(n_max)),
        "s321-dyck" => Ok(s321_dyck_checks(n_max)),
        "all" => {
            let mut all = Vec::new();
            for name in suite_names() {
                all.extend(checks_for(name, n_max)?);
            }
            Ok(all)
        }
        other => Err(Error::Unknown {
            kind: "suite",
            name: other.to_string(),
        }),
    }
}

/// Runs a suite single-threaded.
pub fn run_suite(suite: &str, n_max: usize) -> Result<VerificationReport> {
    run_suite_with_jobs(suite, n_max, 1)
}

/// Runs a suite with `jobs` parallel workers. Checks are pure, and records
/// come back in registration order, so the report does not depend on the
/// worker count.
pub fn run_suite_with_jobs(suite: &str, n_max: usize, jobs: usize) -> Result<VerificationReport> {
    let checks = checks_for(suite, n_max)?;
    let start = Instant::now();
    let records: Vec<CheckRecord> = if jobs <= 1 {
        checks.iter().map(Check::execute).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        pool.install(|| checks.par_iter().map(Check::execute).collect())
    };
    Ok(VerificationReport {
        suite: suite.to_string(),
        records,
        elapsed: start.elapsed(),
    })
}

fn i321_structural(n: usize) -> impl Iterator<Item = Permutation> {
    enumerate(PermClass::I321, n, Backend::Structural).expect("structural I321 backend")
}

/// Criterion: every bijection and its inverse compose to the identity on
/// their exhaustively enumerated domains.
fn round_trip_checks(n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=n_max.min(12) {
        checks.push(Check::new("round-trip/rho", format!("n={n}"), move || {
            let prefixes: Vec<_> = enumerate_paths(PathKind::Prefix, n).collect();
            let expected = format!("{} round trips", prefixes.len());
            for p in &prefixes {
                let perm = rho_inverse(p)?;
                if &rho(&perm)? != p {
                    return Ok((expected, format!("rho(rho_inv({p})) differs")));
                }
            }
            for perm in i321_structural(n) {
                if rho_inverse(&rho(&perm)?)? != perm {
                    return Ok((expected, format!("rho_inv(rho({perm})) differs")));
                }
            }
            Ok((expected.clone(), expected))
        }));
        checks.push(Check::new("round-trip/xi", format!("n={n}"), move || {
            let mut count = 0usize;
            for p in enumerate_paths(PathKind::Prefix, n) {
                count += 1;
                if xi_inverse(&xi(&p)?)? != p {
                    return Ok(("round trip".into(), format!("xi_inv(xi({p})) differs")));
                }
            }
            for g in enumerate_paths(PathKind::Grand, n) {
                if xi(&xi_inverse(&g)?)? != g {
                    return Ok(("round trip".into(), format!("xi(xi_inv({g})) differs")));
                }
            }
            let expected = format!("{count} round trips");
            Ok((expected.clone(), expected))
        }));
        checks.push(Check::new("round-trip/psi", format!("n={n}"), move || {
            let spec = BoxSpec::new(n);
            let mut count = 0usize;
            for lambda in enumerate_in_box(&spec) {
                count += 1;
                if psi_inverse(&psi(&lambda, &spec)?)? != lambda {
                    return Ok((
                        "round trip".into(),
                        format!("psi_inv(psi({lambda})) differs"),
                    ));
                }
            }
            for g in enumerate_paths(PathKind::Grand, n) {
                if psi(&psi_inverse(&g)?, &spec)? != g {
                    return Ok(("round trip".into(), format!("psi(psi_inv({g})) differs")));
                }
            }
            let expected = format!("{count} round trips");
            Ok((expected.clone(), expected))
        }));
        checks.push(Check::new(
            "round-trip/boundary",
            format!("n={n}"),
            move || {
                let spec = BoxSpec::new(n);
                let mut count = 0usize;
                for lambda in enumerate_in_box(&spec) {
                    count += 1;
                    let b = boundary_path(&lambda, &spec)?;
                    if partition_from_boundary(&b)? != lambda {
                        return Ok(("round trip".into(), format!("boundary({lambda}) differs")));
                    }
                }
                let expected = format!("{count} round trips");
                Ok((expected.clone(), expected))
            },
        ));
    }
    for n in 0..=n_max.min(8) {
        checks.push(Check::new("round-trip/rs", format!("n={n}"), move || {
            let mut count = 0usize;
            for perm in enumerate(PermClass::All, n, Backend::Brute)? {
                count += 1;
                let (p, q) = rs_correspondence(&perm);
                if rs_inverse(&p, &q)? != perm {
                    return Ok((
                        "round trip".into(),
                        format!("rs_inverse(rs({perm})) differs"),
                    ));
                }
            }
            let expected = format!("{count} round trips");
            Ok((expected.clone(), expected))
        }));
    }
    checks
}

/// Criterion: Peak(P) = Peak(ξ(P)) on all of P_n.
fn peaks_xi_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(14))
        .map(|n| {
            Check::new("peaks-xi", format!("n={n}"), move || {
                let mut count = 0usize;
                for p in enumerate_paths(PathKind::Prefix, n) {
                    count += 1;
                    let g = xi(&p)?;
                    if g.peak_set() != p.peak_set() {
                        return Ok((
                            set_text(&p.peak_set()),
                            format!("{} on {p}", set_text(&g.peak_set())),
                        ));
                    }
                }
                let expected = format!("peaks preserved on {count} prefixes");
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Criterion: Des(π) = Peak(ρ(π)) on I_n(321), with a brute-force membership
/// cross-check at small n.
fn des_peak_checks(n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=n_max.min(12) {
        checks.push(Check::new("des-peak", format!("n={n}"), move || {
            let mut count = 0usize;
            for perm in i321_structural(n) {
                count += 1;
                let path = rho(&perm)?;
                if perm.descent_set() != path.peak_set() {
                    return Ok((
                        set_text(&perm.descent_set()),
                        format!("{} on {perm}", set_text(&path.peak_set())),
                    ));
                }
            }
            let expected = format!("Des = Peak on {count} involutions");
            Ok((expected.clone(), expected))
        }));
    }
    for n in 0..=n_max.min(9) {
        checks.push(Check::new(
            "des-peak/membership",
            format!("n={n}"),
            move || {
                let brute: Vec<_> = enumerate(PermClass::I321, n, Backend::Brute)?.collect();
                let mut structural: Vec<_> = i321_structural(n).collect();
                structural.sort();
                let mut brute = brute;
                brute.sort();
                Ok((
                    format!("{} members (brute force)", brute.len()),
                    if brute == structural {
                        format!("{} members (brute force)", brute.len())
                    } else {
                        format!("{} members (structural)", structural.len())
                    },
                ))
            },
        ));
    }
    checks
}

/// Criterion: the descent histogram of I_n(321) follows the product of
/// binomial coefficients.
fn des_count_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(14))
        .map(|n| {
            Check::new("des-count", format!("n={n}"), move || {
                let hist = des_histogram(PermClass::I321, n)?;
                let formula: Vec<u64> = (0..hist.len())
                    .map(|k| des_count_formula(n, k))
                    .collect::<Result<_>>()?;
                // the formula must also vanish beyond the histogram
                for k in hist.len()..n.max(1) {
                    if des_count_formula(n, k)? != 0 {
                        return Ok((format!("{formula:?} then zeros"), format!("{hist:?}")));
                    }
                }
                Ok((format!("{formula:?}"), format!("{hist:?}")))
            })
        })
        .collect()
}

/// Criterion: Σ q^maj over I_n(321) is the central q-binomial coefficient.
fn maj_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(14))
        .map(|n| {
            Check::new("maj", format!("n={n}"), move || {
                let expected = q_binomial(n, n / 2)?;
                let actual = maj_poly(PermClass::I321, n)?;
                Ok((expected.to_string(), actual.to_string()))
            })
        })
        .collect()
}

/// Criterion: for every S the descent-set fibre of I_n(321) matches the
/// hook-decomposition fibre of partitions in B_n, realized element-wise by
/// ψ⁻¹ ∘ ξ ∘ ρ.
fn main_theorem_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(12))
        .map(|n| {
            Check::new("main-theorem", format!("n={n}"), move || {
                let spec = BoxSpec::new(n);
                let mut by_descents: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
                let mut images = std::collections::BTreeSet::new();
                let mut count = 0usize;
                for perm in i321_structural(n) {
                    count += 1;
                    *by_descents.entry(perm.descent_set()).or_insert(0) += 1;
                    let lambda = psi_inverse(&xi(&rho(&perm)?)?)?;
                    if lambda.hook_decomposition().hooks() != perm.descent_set() {
                        return Ok((
                            set_text(&perm.descent_set()),
                            format!("hd(image of {perm}) = {}", lambda.hook_decomposition()),
                        ));
                    }
                    if !images.insert(lambda.clone()) {
                        return Ok((
                            "injective composition".into(),
                            format!("{lambda} hit twice"),
                        ));
                    }
                }
                let mut by_hooks: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
                for lambda in enumerate_in_box(&spec) {
                    *by_hooks
                        .entry(lambda.hook_decomposition().hooks().to_vec())
                        .or_insert(0) += 1;
                }
                if by_descents != by_hooks {
                    let diff = by_descents
                        .iter()
                        .find(|(k, v)| by_hooks.get(*k) != Some(v))
                        .map(|(k, v)| (set_text(k), *v))
                        .unwrap_or_else(|| ("missing".into(), 0));
                    return Ok((
                        format!("matching fibres for all S (n={n})"),
                        format!("fibre mismatch at S={} (count {})", diff.0, diff.1),
                    ));
                }
                let expected = format!("bijection on {count} involutions, fibres equal");
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Criterion: the maj polynomial restricted to des = k is
/// q^{k²}·qbin(⌈n/2⌉,k)·qbin(⌊n/2⌋,k).
fn joint_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(12))
        .map(|n| {
            Check::new("joint-des-maj", format!("n={n}"), move || {
                for k in 0..=n / 2 + 1 {
                    let mut coeffs = Vec::new();
                    for perm in i321_structural(n) {
                        if perm.descent_set().len() != k {
                            continue;
                        }
                        let m = perm.maj();
                        if m >= coeffs.len() {
                            coeffs.resize(m + 1, 0i64);
                        }
                        coeffs[m] += 1;
                    }
                    let enumerated = crate::poly::QPoly::from_coeffs(coeffs);
                    let formula = joint_des_maj(n, k)?;
                    if enumerated != formula {
                        return Ok((format!("k={k}: {formula}"), format!("k={k}: {enumerated}")));
                    }
                }
                let expected = format!("all k match at n={n}");
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Criterion: Asc(π) = Des(π^T) on involutions, and the comaj polynomial of
/// I_n(123) is the central q-binomial coefficient.
fn transpose_checks(n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=n_max.min(9) {
        checks.push(Check::new(
            "strehl-transpose",
            format!("n={n}"),
            move || {
                let mut count = 0usize;
                for perm in enumerate(PermClass::Involutions, n, Backend::Structural)? {
                    count += 1;
                    let t = involution_transpose(&perm)?;
                    if perm.descent_profile().ascent_set != t.descent_set() {
                        return Ok((
                            set_text(&perm.descent_profile().ascent_set),
                            format!("{} on {perm}", set_text(&t.descent_set())),
                        ));
                    }
                    if involution_transpose(&t)? != perm {
                        return Ok(("transpose involutive".into(), format!("broken at {perm}")));
                    }
                }
                let expected = format!("Asc = Des∘T on {count} involutions");
                Ok((expected.clone(), expected))
            },
        ));
    }
    for n in 0..=n_max.min(12) {
        checks.push(Check::new("comaj-123", format!("n={n}"), move || {
            let expected = q_binomial(n, n / 2)?;
            let actual = comaj_poly(PermClass::I123, n)?;
            Ok((expected.to_string(), actual.to_string()))
        }));
    }
    checks
}

const PARTITION_NUMBERS: [u64; 9] = [1, 1, 2, 3, 5, 7, 11, 15, 22];

/// Criterion: at n = 2m the number of involutions in I_n(321) with maj = m is
/// p(m), checked against independent partition generation and the frozen
/// table 1,1,2,3,5,7,11,15,22.
fn p_of_m_checks(n_max: usize) -> Vec<Check> {
    (0..=8usize.min(n_max / 2))
        .map(|m| {
            Check::new("p-of-m", format!("m={m}, n={}", 2 * m), move || {
                let generated = partition_count(m);
                if generated != PARTITION_NUMBERS[m] {
                    return Ok((
                        format!("p({m}) = {}", PARTITION_NUMBERS[m]),
                        format!("p({m}) = {generated} by generation"),
                    ));
                }
                let count = i321_structural(2 * m).filter(|p| p.maj() == m).count() as u64;
                Ok((format!("p({m}) = {generated}"), format!("p({m}) = {count}")))
            })
        })
        .collect()
}

fn valid_hook_sets(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << max) {
        let set: Vec<usize> = (1..=max).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        if set.windows(2).all(|w| w[1] > w[0] + 1) {
            out.push(set);
        }
    }
    out.sort();
    out
}

/// Criterion: at n = 2(i_k − k + 1) the descent-set count of S equals
/// i_1 · Π (i_j − i_{j−1} − 1), and every hook placement fits in B_n.
fn large_n_checks(n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for set in valid_hook_sets(6) {
        let k = set.len();
        let n = 2 * (set[k - 1] - k + 1);
        if n > n_max {
            continue;
        }
        checks.push(Check::new(
            "large-n",
            format!("S={}", set_text(&set)),
            move || {
                let hd = HookDecomposition::new(set.clone())?;
                let formula = crate::partition::hd_count_formula(&hd)?;
                let by_descents = i321_structural(n)
                    .filter(|p| p.descent_set() == set)
                    .count() as u64;
                if by_descents != formula {
                    return Ok((
                        format!("{formula} involutions at n={n}"),
                        format!("{by_descents} involutions at n={n}"),
                    ));
                }
                let placements = partitions_with_hd(&hd);
                if placements.len() as u64 != formula {
                    return Ok((
                        format!("{formula} hook placements"),
                        format!("{} hook placements", placements.len()),
                    ));
                }
                let spec = BoxSpec::new(n);
                if let Some(lambda) = placements.iter().find(|l| !l.fits_in(&spec)) {
                    return Ok((
                        format!("all placements fit in B_{n}"),
                        format!("{lambda} does not fit in B_{n}"),
                    ));
                }
                let expected = format!("{formula} at n={n}, all placements fit");
                Ok((expected.clone(), expected))
            },
        ));
    }
    checks
}

/// Criterion: the Fibonacci recurrence matches enumeration on I_n(321,312),
/// and its descent histogram is the binomial triangle row.
fn double312_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(12))
        .map(|n| {
            Check::new("double-312", format!("n={n}"), move || {
                let recurrence = fibonacci_maj(n)?;
                let enumerated = maj_poly(PermClass::I321And312, n)?;
                if recurrence != enumerated {
                    return Ok((recurrence.to_string(), enumerated.to_string()));
                }
                let hist = des_histogram(PermClass::I321And312, n)?;
                let triangle = fibonacci_des_counts(n)?;
                for (k, &c) in hist.iter().enumerate() {
                    let expect = binomial((n - k) as u64, k as u64)?;
                    if c != expect || triangle.get(k).copied().unwrap_or(0) != expect {
                        return Ok((
                            format!("binom({},{k}) = {expect}", n - k),
                            format!("histogram {c}, triangle {:?}", triangle.get(k)),
                        ));
                    }
                }
                let expected = format!("{recurrence}");
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Registered known discrepancy: the claimed closed form (1−q^n)/(1−q) for
/// I_n(321,213) disagrees with enumeration from n = 3 on; enumerated values
/// are ground truth.
fn double213_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(10))
        .map(|n| {
            Check::new("double-213", format!("n={n}"), move || {
                let claim = double213_claim(n)?;
                let enumerated = double213_enumerated(n)?;
                Ok((claim.to_string(), enumerated.to_string()))
            })
            .known()
        })
        .collect()
}

/// Criterion: |{π ∈ S_n(321) : Des ⊇ S}| is a Catalan number (or zero on
/// consecutive S), for every subset S of [n−1].
fn s321_superset_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(10))
        .map(|n| {
            Check::new("s321-superset", format!("n={n}"), move || {
                let mut by_set: BTreeMap<u64, u64> = BTreeMap::new();
                for perm in enumerate(PermClass::S321, n, Backend::Structural)? {
                    *by_set
                        .entry(crate::poly::mask_of(&perm.descent_set()))
                        .or_insert(0) += 1;
                }
                let vars = n.saturating_sub(1);
                for mask in 0u64..(1 << vars) {
                    let set = crate::poly::set_of(mask);
                    let observed: u64 = by_set
                        .iter()
                        .filter(|(m, _)| *m & mask == mask)
                        .map(|(_, c)| c)
                        .sum();
                    let formula = superset_count(n, &set)?;
                    if observed != formula {
                        return Ok((
                            format!("{formula} at S={}", set_text(&set)),
                            format!("{observed} at S={}", set_text(&set)),
                        ));
                    }
                }
                let expected = format!("all {} subsets match", 1u64 << vars);
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Criterion: A_{n,n} by recurrence = by direct sum = enumeration, its
/// specialization x_j ↦ q^j is the maj polynomial of S_n(321), and the
/// coefficient extraction matches the inclusion-exclusion counts.
fn s321_poly_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(10))
        .map(|n| {
            Check::new("s321-descent-poly", format!("n={n}"), move || {
                let enumerated = descent_set_poly(PermClass::S321, n)?;
                let direct = a_poly(n, n, APolyMethod::Direct)?;
                let recurrence = a_poly(n, n, APolyMethod::Recurrence)?;
                if direct != enumerated || recurrence != enumerated {
                    return Ok((
                        format!("enumerated {enumerated}"),
                        format!("direct {direct}, recurrence {recurrence}"),
                    ));
                }
                for (mask, coeff) in enumerated.terms() {
                    let set = crate::poly::set_of(mask);
                    if exact_descent_count(n, &set)? != coeff as u64 {
                        return Ok((
                            format!("coefficient of {}", set_text(&set)),
                            "inclusion-exclusion mismatch".to_string(),
                        ));
                    }
                }
                let spec = enumerated.specialize()?;
                let maj = maj_poly(PermClass::S321, n)?;
                if spec != maj {
                    return Ok((maj.to_string(), spec.to_string()));
                }
                let expected = format!(
                    "A_{{{n},{n}}} consistent ({} terms)",
                    enumerated.num_terms()
                );
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}

/// Criterion: the q^m coefficient of the joint polynomial is constant for
/// n ≥ 2m and equals the limit series coefficient; the multivariate limit
/// coefficient is the hook-placement count. The ranges k ≤ 3, m ≤ 10 are
/// fixed by the criterion and cheap, so n_max does not cut them down.
fn limit_checks(_n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 0..=3usize {
        checks.push(Check::new("limit-joint", format!("k={k}"), move || {
            let order = 10;
            let series = limit_joint_series(k, order)?;
            for m in 0..=order {
                let limit = series.coeff(m);
                for n in 2 * m..=2 * m + 6 {
                    let coeff = joint_des_maj(n, k)?.coeff(m);
                    if coeff != limit {
                        return Ok((
                            format!("coefficient {limit} of q^{m}"),
                            format!("{coeff} at n={n}"),
                        ));
                    }
                }
            }
            let expected = format!("stable coefficients up to q^{order}");
            Ok((expected.clone(), expected))
        }));
    }
    checks.push(Check::new(
        "limit-hd",
        "S with max <= 6".to_string(),
        || {
            for set in valid_hook_sets(6) {
                let hd = HookDecomposition::new(set.clone())?;
                let formula = crate::poly::limit_hd_coefficient(&hd)?;
                let placements = partitions_with_hd(&hd).len() as u64;
                if formula != placements {
                    return Ok((
                        format!("{formula} at S={}", set_text(&set)),
                        format!("{placements} at S={}", set_text(&set)),
                    ));
                }
            }
            let expected = "limit coefficients equal placement counts".to_string();
            Ok((expected.clone(), expected))
        },
    ));
    checks
}

/// Criterion: the S_n(321) → D_n bijection sends Des to first-half peaks and
/// maj to their label sum, and round-trips exactly.
fn s321_dyck_checks(n_max: usize) -> Vec<Check> {
    (0..=n_max.min(8))
        .map(|n| {
            Check::new("s321-dyck", format!("n={n}"), move || {
                let mut count = 0usize;
                for perm in enumerate(PermClass::S321, n, Backend::Structural)? {
                    count += 1;
                    let d = s321_to_dyck(&perm)?;
                    let first_half: Vec<usize> =
                        d.peak_set().into_iter().filter(|&i| i < n).collect();
                    if perm.descent_set() != first_half {
                        return Ok((
                            set_text(&perm.descent_set()),
                            format!("{} on {perm}", set_text(&first_half)),
                        ));
                    }
                    if perm.maj() != first_half.iter().sum::<usize>() {
                        return Ok((
                            format!("maj {}", perm.maj()),
                            format!("peak sum {}", first_half.iter().sum::<usize>()),
                        ));
                    }
                    if dyck_to_s321(&d)? != perm {
                        return Ok(("round trip".into(), format!("broken at {perm}")));
                    }
                }
                let expected = format!("{count} permutations verified");
                Ok((expected.clone(), expected))
            })
        })
        .collect()
}
