//! Shared helpers for the criterion benches.

use hookline_core::perm::Permutation;

/// A deterministic member of I_n(321) with spread-out descents, built by
/// interleaving two increasing runs.
pub fn sample_involution(n: usize) -> Permutation {
    let prefix = hookline_core::path::enumerate_paths(hookline_core::path::PathKind::Prefix, n)
        .nth(n / 2)
        .expect("prefix exists");
    hookline_core::path::rho_inverse(&prefix).expect("prefix maps to an involution")
}
