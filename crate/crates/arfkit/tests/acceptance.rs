//! Acceptance suite: end-to-end checks of the classification machinery on
//! golden families and exhaustive genus-bounded sweeps. Each test prints
//! one pass line with its elapsed time.
//!
//! Wall-clock budgets are asserted strictly in optimized builds and with a
//! 10x allowance when debug assertions are enabled.

mod common;

use arfkit::{
    census, conductor_ideal, enumerate_normalized_ideals, lipman_chain, maximal_ideal,
    verify_dual_descent, verify_stablechar, verify_theorem_a, verify_theorem_b,
    verify_trace_conductor, ArfMethod, CensusFormat, CheckStatus, IdealFilter,
    NumericalSemigroup, RelativeIdeal,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn sgp(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

/// Runs a criterion body, then enforces and reports its time budget.
fn timed(label: &str, budget_secs: f64, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed().as_secs_f64();
    let allowance = if cfg!(debug_assertions) {
        budget_secs * 10.0
    } else {
        budget_secs
    };
    println!("acceptance {label}: PASS ({elapsed:.2}s, budget {allowance:.0}s)");
    assert!(
        elapsed <= allowance,
        "{label} exceeded its time budget: {elapsed:.2}s > {allowance:.0}s"
    );
}

/// Generators of the golden family member `N_n` with multiplicity `e`.
fn family(e: i64, n: i64) -> NumericalSemigroup {
    let mut gens = vec![e];
    gens.extend((1..e).map(|k| n * e + k));
    sgp(&gens)
}

#[test]
fn acceptance_01_golden_blowup_family() {
    timed("01 golden blow-up family", 1.0, || {
        for e in 2..=5 {
            for n in 0..=5 {
                let s = family(e, n);
                let chain = lipman_chain(&s);
                let expected: Vec<NumericalSemigroup> =
                    (0..=n).rev().map(|i| family(e, i)).collect();
                assert_eq!(chain.members(), expected.as_slice(), "e={e} n={n}");
                for (i, member) in chain.members().iter().enumerate() {
                    assert!(member.is_arf_all(), "e={e} n={n} member {i}");
                    let expected_mult = if member.genus() == 0 { 1 } else { e };
                    assert_eq!(member.multiplicity(), expected_mult, "e={e} n={n} member {i}");
                }
                let report = verify_theorem_a(&s).unwrap();
                assert_eq!(report.status, CheckStatus::Pass, "e={e} n={n}");
                assert_eq!(
                    report.detail.reflexive_found,
                    chain.len(),
                    "reflexive ideals = chain members, e={e} n={n}"
                );
            }
        }
    });
}

#[test]
fn acceptance_02_golden_non_arf_semigroup() {
    timed("02 golden non-Arf semigroup", 1.0, || {
        let s = sgp(&[3, 5]);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.embedding_dimension(), 2);
        assert!(!s.has_minimal_multiplicity());
        assert!(!s.is_arf(ArfMethod::Definition));
        assert!(!s.is_arf(ArfMethod::Lipman));
        assert!(!s.is_arf(ArfMethod::Pattern));

        let m = maximal_ideal(&s);
        let end = m.end_semigroup();
        assert_eq!(end, sgp(&[3, 5, 7]));

        // The ambient is Gorenstein (symmetric gap set), so the maximal
        // ideal is reflexive, and its dual is the endomorphism ring
        // <3,5,7> rather than the ring itself; in particular the maximal
        // ideal is reflexive but not self-dual.
        assert_eq!(m.bidual(), m);
        assert!(m.is_reflexive());
        let dual = m.dual();
        let end_as_ideal = RelativeIdeal::from_semigroup(&s, &end).unwrap();
        assert_eq!(dual, end_as_ideal);
        assert_ne!(dual.normalize().0, RelativeIdeal::unit(&s));
        assert!(!m.is_self_dual());
    });
}

#[test]
fn acceptance_03_three_way_arf_agreement_genus_12() {
    timed("03 three-way Arf agreement (genus <= 12)", 30.0, || {
        let mut total = 0usize;
        for s in arfkit::enumerate_semigroups(12).unwrap() {
            let d = s.is_arf(ArfMethod::Definition);
            let l = s.is_arf(ArfMethod::Lipman);
            let p = s.is_arf(ArfMethod::Pattern);
            assert!(d == l && l == p, "routes disagree on <{s}>: {d}/{l}/{p}");
            total += 1;
        }
        assert_eq!(total, 1413, "semigroups of genus <= 12");
    });
}

#[test]
fn acceptance_04_05_classification_and_self_duality_genus_10() {
    timed("04+05 reflexive classification and self-duality (Arf, genus <= 10)", 60.0, || {
        let mut arf_count = 0usize;
        for s in arfkit::enumerate_semigroups(10).unwrap() {
            if !s.is_arf(ArfMethod::Pattern) {
                continue;
            }
            arf_count += 1;
            let chain = lipman_chain(&s);
            let a = verify_theorem_a(&s).unwrap();
            assert_eq!(a.status, CheckStatus::Pass, "classification over <{s}>");
            assert_eq!(
                a.detail.reflexive_found,
                chain.len(),
                "reflexive count vs chain length over <{s}>"
            );
            let b = verify_theorem_b(&s).unwrap();
            assert_eq!(b.status, CheckStatus::Pass, "self-duality over <{s}>");
            assert_eq!(
                b.detail.reflexive_found, b.detail.self_dual_found,
                "every reflexive ideal self-dual over <{s}> (and conversely here)"
            );
        }
        assert!(arf_count > 0);
        println!("  checked {arf_count} Arf semigroups");
    });
}

#[test]
fn acceptance_06_stable_radical_characterization_genus_10() {
    timed("06 stable-radical five-way agreement (genus <= 10)", 60.0, || {
        for s in arfkit::enumerate_semigroups(10).unwrap() {
            let r = verify_stablechar(&s).unwrap();
            assert_eq!(r.status, CheckStatus::Pass, "<{s}>");
        }
    });
}

#[test]
fn acceptance_07_trace_conductor_and_dual_descent_genus_8() {
    timed("07 trace/conductor and dual-descent suites (genus <= 8)", 60.0, || {
        for s in arfkit::enumerate_semigroups(8).unwrap() {
            let t = verify_trace_conductor(&s).unwrap();
            assert_ne!(t.status, CheckStatus::Fail, "trace/conductor over <{s}>");
            let d = verify_dual_descent(&s).unwrap();
            assert_ne!(d.status, CheckStatus::Fail, "dual descent over <{s}>");
        }
    });
}

#[test]
fn acceptance_08_ideal_algebra_on_random_samples() {
    timed("08 ideal algebra on random samples", 60.0, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_da2f);
        for _ in 0..50 {
            let s = common::random_semigroup(&mut rng, 15);

            // stability of the radical matches self-duality of the radical
            let j = maximal_ideal(&s);
            assert_eq!(j.is_stable(), j.is_self_dual(), "<{s}>");

            for _ in 0..500 {
                let e = common::random_ideal(&mut rng, &s);
                let b = e.bidual();
                assert!(e.is_subset_of(&b), "extensive over <{s}>");
                assert_eq!(b.bidual(), b, "idempotent over <{s}>");
                assert_eq!(e.dual().dual().dual(), e.dual(), "triple dual over <{s}>");
                assert_eq!(
                    e.translate(7).dual(),
                    e.dual().translate(-7),
                    "translation covariance over <{s}>"
                );
            }
        }
    });
}

#[test]
fn acceptance_09_tree_counts_match_brute_force_genus_7() {
    timed("09 enumeration cross-check (genus <= 7)", 30.0, || {
        let counts = arfkit::counts_by_genus(7).unwrap();
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39]);
        for g in 0..=7i64 {
            let brute = common::brute_force_gap_sets(g);
            assert_eq!(brute.len() as u64, counts[g as usize], "count at genus {g}");
            let tree: std::collections::BTreeSet<Vec<i64>> = arfkit::enumerate_semigroups(g)
                .unwrap()
                .filter(|s| s.genus() == g)
                .map(|s| s.gaps())
                .collect();
            assert_eq!(tree, brute, "gap sets at genus {g}");
        }
    });
}

#[test]
fn acceptance_10_census_determinism_genus_10() {
    timed("10 census determinism (genus 10)", 120.0, || {
        let dir = tempfile::tempdir().unwrap();
        let first = dir.path().join("first.csv");
        let second = dir.path().join("second.csv");
        let parallel = dir.path().join("parallel.csv");
        census(10, &first, CensusFormat::Csv, 1).unwrap();
        census(10, &second, CensusFormat::Csv, 1).unwrap();
        census(10, &parallel, CensusFormat::Csv, 8).unwrap();
        let a = std::fs::read(&first).unwrap();
        assert_eq!(a, std::fs::read(&second).unwrap(), "two sequential runs");
        assert_eq!(a, std::fs::read(&parallel).unwrap(), "jobs=1 vs jobs=8");
    });
}

#[test]
fn acceptance_reflexives_of_arf_semigroups_form_the_chain_explicitly() {
    // spot check on a worked example: the chain and the reflexive ideals
    // of <2,5> coincide as sets of integers
    let s = sgp(&[2, 5]);
    let reflexive = enumerate_normalized_ideals(&s, IdealFilter::Reflexive).unwrap();
    let chain = lipman_chain(&s);
    assert_eq!(reflexive.len(), 3);
    for (e, a) in reflexive.iter().zip(chain.members()) {
        let a_ideal = RelativeIdeal::from_semigroup(&s, a).unwrap();
        assert_eq!(*e, a_ideal);
    }
    // and the conductor of the full extension is where every trace of a
    // non-principal reflexive lands
    let cond = conductor_ideal(&s, &NumericalSemigroup::natural()).unwrap();
    let n_ideal = RelativeIdeal::from_semigroup(&s, &NumericalSemigroup::natural()).unwrap();
    assert_eq!(n_ideal.trace(), cond);
}
