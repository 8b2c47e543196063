//! Exhaustive sweeps over all of S_n at the largest brute-force sizes: one
//! pass per n checks the fast 321 predicate, the block-decomposition
//! characterization of the double-avoidance class, and the structural
//! backends against the brute-force oracle.

use std::collections::BTreeSet;

use hookline_core::perm::{enumerate, AllPermutations, Backend, PermClass, Permutation};
use hookline_core::poly::binomial;

#[test]
fn predicates_agree_on_all_of_s10() {
    let p321 = Permutation::new(vec![3, 2, 1]).unwrap();
    for n in 8..=10 {
        for p in AllPermutations::new(n) {
            assert_eq!(p.avoids(&p321), p.avoids_321_fast(), "{p}");
            let by_blocks = p.fibonacci_blocks().is_ok();
            let by_predicate = PermClass::I321And312.contains(&p);
            assert_eq!(by_blocks, by_predicate, "{p}");
        }
    }
}

#[test]
fn structural_backends_match_brute_force_at_n9() {
    for class in [
        PermClass::I321,
        PermClass::I123,
        PermClass::S321,
        PermClass::I321And312,
        PermClass::Involutions,
    ] {
        for n in 8..=9 {
            let brute: BTreeSet<Permutation> =
                enumerate(class, n, Backend::Brute).unwrap().collect();
            let structural: Vec<Permutation> =
                enumerate(class, n, Backend::Structural).unwrap().collect();
            assert_eq!(structural.len(), brute.len(), "{class} n={n}");
            assert!(
                structural.iter().all(|p| brute.contains(p)),
                "{class} n={n}"
            );
        }
    }
}

#[test]
fn transpose_is_an_involution_on_all_tableaux_of_size_8() {
    use hookline_core::tableau::rs_correspondence;
    // every standard tableau with 8 cells arises as a recording tableau
    let mut seen = BTreeSet::new();
    for p in AllPermutations::new(8) {
        let (_, q) = rs_correspondence(&p);
        if seen.insert(q.clone()) {
            let t = q.transpose();
            assert_eq!(t.shape().len(), q.rows().first().map_or(0, |r| r.len()));
            assert_eq!(t.transpose(), q);
        }
    }
    assert_eq!(seen.len(), 764); // number of involutions of 8 points
}

#[test]
fn i321_cardinality_is_central_binomial_up_to_12() {
    for n in 0..=12usize {
        let structural = enumerate(PermClass::I321, n, Backend::Structural)
            .unwrap()
            .count() as u64;
        assert_eq!(structural, binomial(n as u64, (n / 2) as u64).unwrap());
    }
}
