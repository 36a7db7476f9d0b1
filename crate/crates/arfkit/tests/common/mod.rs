//! Shared helpers for the integration suites: independent oracles and
//! seeded random sampling. Everything here works on plain integer sets so
//! it cannot share bugs with the windowed arithmetic in the library.

#![allow(dead_code)]

use arfkit::{NumericalSemigroup, RelativeIdeal};
use rand::Rng;
use std::collections::BTreeSet;

/// Membership in the semigroup generated by `gens`, computed by a plain
/// fixpoint closure with no window tricks.
pub fn oracle_semigroup_members(gens: &[i64], bound: i64) -> BTreeSet<i64> {
    let mut set = BTreeSet::new();
    set.insert(0i64);
    loop {
        let snapshot: Vec<i64> = set.iter().copied().collect();
        let before = set.len();
        for x in snapshot {
            for &g in gens {
                if x + g <= bound {
                    set.insert(x + g);
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Direct reading of the Arf pattern condition on an explicit member set:
/// for members `x >= y >= z` with `x` below the conductor, `x + y - z` must
/// be a member.
pub fn oracle_is_arf(s: &NumericalSemigroup) -> bool {
    let c = s.conductor();
    let members = oracle_semigroup_members(s.minimal_generators(), 2 * c + 2);
    let contains = |n: i64| n >= 0 && (n > 2 * c || members.contains(&n));
    let small: Vec<i64> = members.iter().copied().filter(|&x| x < c).collect();
    small.iter().all(|&x| {
        small
            .iter()
            .filter(|&&y| y <= x)
            .all(|&y| small.iter().filter(|&&z| z <= y).all(|&z| contains(x + y - z)))
    })
}

/// All gap sets of numerical semigroups of the exact genus, by brute force
/// over subsets of `[1, 2g - 1]` whose complement is additively closed.
pub fn brute_force_gap_sets(genus: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    if genus == 0 {
        out.insert(Vec::new());
        return out;
    }
    let hi = 2 * genus - 1;
    let n = hi as usize;
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as i64 != genus {
            continue;
        }
        let gaps: BTreeSet<i64> = (1..=hi).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let member = |x: i64| x >= 0 && !gaps.contains(&x);
        let closed = (0..=hi)
            .filter(|&x| member(x))
            .all(|x| (0..=hi - x).filter(|&y| member(y)).all(|y| member(x + y)));
        if closed {
            out.insert(gaps.into_iter().collect());
        }
    }
    out
}

/// Random semigroup with genus at most `max_genus`: a random walk down the
/// semigroup tree for a random number of steps.
pub fn random_semigroup<R: Rng>(rng: &mut R, max_genus: i64) -> NumericalSemigroup {
    let target = rng.gen_range(0..=max_genus);
    let mut s = NumericalSemigroup::natural();
    while s.genus() < target {
        let removable: Vec<i64> = s
            .minimal_generators()
            .iter()
            .copied()
            .filter(|&g| g > s.frobenius())
            .collect();
        if removable.is_empty() {
            break; // a leaf of the semigroup tree
        }
        let g = removable[rng.gen_range(0..removable.len())];
        // members up to 2(g + 1) generate the pruned semigroup: the block
        // [g + 1, 2g + 2] is fully present and spans everything beyond
        let members: Vec<i64> = (1..=2 * (g + 1))
            .filter(|&i| i != g && s.contains(i))
            .collect();
        s = NumericalSemigroup::from_generators(&members).unwrap();
    }
    s
}

/// Random relative ideal: a handful of random elements, then a random
/// translation.
pub fn random_ideal<R: Rng>(rng: &mut R, s: &NumericalSemigroup) -> RelativeIdeal {
    let c = s.conductor().max(1);
    let count = rng.gen_range(1..=5);
    let elems: Vec<i64> = (0..count).map(|_| rng.gen_range(-c..=2 * c)).collect();
    let shift = rng.gen_range(-c..=c);
    RelativeIdeal::from_elements(s, &elems).unwrap().translate(shift)
}

/// Members of an ideal on `[lo, hi]` as an explicit set.
pub fn ideal_members(e: &RelativeIdeal, lo: i64, hi: i64) -> BTreeSet<i64> {
    (lo..=hi).filter(|&v| e.contains(v)).collect()
}
