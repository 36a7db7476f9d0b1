//! Numerical semigroups: construction, invariants, Arf tests, Arf closure.
//!
//! A numerical semigroup is a cofinite subset of the natural numbers that
//! contains 0 and is closed under addition. It is the value semigroup of a
//! one-dimensional analytically irreducible local domain `k[[t^S]]`, and all
//! ring-theoretic notions in this crate (multiplicity, embedding dimension,
//! blow-ups, Arf property) are computed on that model.
//!
//! Membership is stored as a finite table over `[0, conductor]`; every
//! integer past the Frobenius number is a member, so the table determines
//! the whole set exactly.

use crate::error::{Error, Result};
use std::fmt;

/// A cofinite additive submonoid of the natural numbers.
///
/// Values are immutable after construction and every operation is a pure
/// function, so semigroups can be shared and evaluated in parallel freely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<i64>,
    multiplicity: i64,
    frobenius: i64,
    conductor: i64,
    /// Membership on `[0, conductor]`, inclusive.
    small_elements: Vec<bool>,
    genus: i64,
}

/// The three independent routes for deciding whether a semigroup is Arf.
///
/// * `Definition` — every integrally closed monomial ideal (a truncation
///   `{s in S : s >= v}`) is stable.
/// * `Lipman` — every semigroup in the chain of iterated blow-ups of the
///   maximal ideal has minimal multiplicity.
/// * `Pattern` — classical closure test: `x + y - z` is a member for all
///   members `x >= y >= z`.
///
/// The three must agree; the census cross-checks them on every row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArfMethod {
    Definition,
    Lipman,
    Pattern,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, recomputing a minimal
    /// generating system and all cached invariants.
    ///
    /// Fails with [`Error::NotCofinite`] when `gcd(gens) != 1`: such a set
    /// generates a semigroup missing infinitely many integers, and rescaling
    /// silently would change the ring, so the input is rejected instead.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::InvalidGenerator(bad));
        }
        let mut gens: Vec<i64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(Error::NotCofinite { gens, gcd: g });
        }

        let m = gens[0] as usize;
        let max = *gens.last().unwrap() as usize;
        // Close under addition on a window; grow until a run of `m`
        // consecutive members appears, past which every integer is a member
        // (the set is closed under adding m).
        let mut bound = (m * max).max(2 * m) + 1;
        loop {
            let mut table = vec![false; bound + 1];
            table[0] = true;
            for i in 0..=bound {
                if table[i] {
                    for &g in &gens {
                        let j = i + g as usize;
                        if j <= bound {
                            table[j] = true;
                        }
                    }
                }
            }
            if has_full_run(&table, m) {
                return Ok(Self::from_membership_table(&table));
            }
            bound *= 2;
        }
    }

    /// The semigroup of all natural numbers (the regular ring).
    pub fn natural() -> Self {
        Self::from_membership_table(&[true])
    }

    /// Normalizing constructor from a membership table.
    ///
    /// `table[i]` is the membership of `i`, and every integer `>= table.len()`
    /// is implicitly a member. The caller must pass an additively closed set
    /// containing 0.
    pub(crate) fn from_membership_table(table: &[bool]) -> Self {
        assert!(
            table.first().copied().unwrap_or(true),
            "0 must be a member of a numerical semigroup"
        );
        let frobenius = table
            .iter()
            .rposition(|&b| !b)
            .map(|i| i as i64)
            .unwrap_or(-1);
        let conductor = frobenius + 1;
        let small_elements: Vec<bool> = (0..=conductor)
            .map(|i| table.get(i as usize).copied().unwrap_or(true))
            .collect();
        let genus = small_elements
            .iter()
            .take(conductor as usize)
            .filter(|&&b| !b)
            .count() as i64;
        let multiplicity = (1..=conductor)
            .find(|&i| small_elements[i as usize])
            .unwrap_or(1);
        let minimal_generators =
            minimal_generators_of(&small_elements, conductor, frobenius, multiplicity);
        let s = Self {
            minimal_generators,
            multiplicity,
            frobenius,
            conductor,
            small_elements,
            genus,
        };
        debug_assert!(s.is_additively_closed(), "membership table is not closed");
        s
    }

    /// Membership test. `n < 0` is never a member; `n >= conductor` always is.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n >= self.conductor {
            return true;
        }
        self.small_elements[n as usize]
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest integer not in the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 1`; every integer from here on is a member.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Membership table on `[0, conductor]`, inclusive.
    pub fn small_elements(&self) -> &[bool] {
        &self.small_elements
    }

    /// The nonmembers, in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor)
            .filter(|&i| !self.small_elements[i as usize])
            .collect()
    }

    /// Members in `[0, bound]`, in increasing order.
    pub fn members_up_to(&self, bound: i64) -> Vec<i64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// The Apery set with respect to a nonzero member `n`: the least member
    /// in each residue class mod `n`, indexed by residue.
    ///
    /// Its size is exactly `n` and its maximum is `frobenius + n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::ApexNotMember(n));
        }
        Ok((0..n)
            .map(|r| {
                (0..)
                    .map(|k| r + k * n)
                    .find(|&w| self.contains(w))
                    .unwrap()
            })
            .collect())
    }

    /// Whether multiplicity equals embedding dimension. For semigroup rings
    /// these agree with the Hilbert-Samuel multiplicity and the embedding
    /// dimension of the local ring.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity == self.embedding_dimension() as i64
    }

    /// Decides the Arf property along the requested route.
    pub fn is_arf(&self, method: ArfMethod) -> bool {
        match method {
            ArfMethod::Definition => self.is_arf_definition(),
            ArfMethod::Lipman => self.is_arf_lipman(),
            ArfMethod::Pattern => self.is_arf_pattern(),
        }
    }

    /// Runs all three Arf routes and insists they agree.
    pub fn is_arf_all(&self) -> bool {
        let d = self.is_arf(ArfMethod::Definition);
        let l = self.is_arf(ArfMethod::Lipman);
        let p = self.is_arf(ArfMethod::Pattern);
        assert!(
            d == l && l == p,
            "Arf routes disagree on <{self}>: definition={d} lipman={l} pattern={p}"
        );
        d
    }

    fn is_arf_definition(&self) -> bool {
        // The integrally closed monomial ideals are exactly the truncations
        // {s in S : s >= v}; truncating past the conductor only reproduces
        // translates of earlier ones.
        (0..=self.conductor).all(|v| crate::ideal::truncation_ideal(self, v).is_stable())
    }

    fn is_arf_lipman(&self) -> bool {
        crate::lipman::lipman_chain(self)
            .members()
            .iter()
            .all(|a| a.has_minimal_multiplicity())
    }

    fn is_arf_pattern(&self) -> bool {
        // Only x < conductor matters: for larger x the value x + y - z >= x
        // is a member automatically.
        let members: Vec<i64> = self.members_up_to(self.conductor - 1);
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members[..=i].iter().enumerate() {
                for &z in &members[..=j] {
                    if !self.contains(x + y - z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The smallest Arf numerical semigroup containing this one: the fixpoint
    /// of adjoining `x + y - z` for members `x >= y >= z` and re-closing
    /// additively. Each adjunction strictly decreases the genus, which bounds
    /// the iteration.
    pub fn arf_closure(&self) -> NumericalSemigroup {
        let len = (self.conductor + 1) as usize;
        let mut table = self.small_elements.clone();
        let member = |t: &[bool], n: i64| n >= 0 && (n >= t.len() as i64 || t[n as usize]);
        loop {
            additively_close(&mut table);
            let mut adjoined = false;
            'search: for x in 0..len as i64 {
                if !table[x as usize] {
                    continue;
                }
                for y in 0..=x {
                    if !member(&table, y) {
                        continue;
                    }
                    for z in 0..=y {
                        if !member(&table, z) {
                            continue;
                        }
                        let w = x + y - z;
                        if !member(&table, w) {
                            table[w as usize] = true;
                            adjoined = true;
                            break 'search;
                        }
                    }
                }
            }
            if !adjoined {
                break;
            }
        }
        Self::from_membership_table(&table)
    }

    /// Whether this semigroup contains `sub` as a subset.
    pub fn is_extension_of(&self, sub: &NumericalSemigroup) -> bool {
        self.first_missing_member(sub).is_none()
    }

    /// First member of `sub` missing from `self`, if any.
    pub(crate) fn first_missing_member(&self, sub: &NumericalSemigroup) -> Option<i64> {
        (0..self.conductor.max(sub.conductor()))
            .find(|&n| sub.contains(n) && !self.contains(n))
    }

    fn is_additively_closed(&self) -> bool {
        let bound = 2 * self.conductor;
        let members = self.members_up_to(bound);
        members.iter().all(|&x| {
            members
                .iter()
                .take_while(|&&y| x + y <= bound)
                .all(|&y| self.contains(x + y))
        })
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Prints the minimal generators as a comma-separated list, the same
    /// syntax the CLI accepts as input.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators.iter().map(i64::to_string).collect();
        write!(f, "{}", gens.join(","))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn has_full_run(table: &[bool], m: usize) -> bool {
    table.windows(m).any(|w| w.iter().all(|&b| b))
}

/// Closes `table` under addition in place (sums landing past the end of the
/// table are members already and need no marking).
fn additively_close(table: &mut [bool]) {
    let len = table.len();
    loop {
        let mut changed = false;
        for i in 0..len {
            if !table[i] {
                continue;
            }
            for j in 0..=i.min(len - 1 - i) {
                if table[j] && !table[i + j] {
                    table[i + j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Sieve for the minimal generating system: a nonzero member is a minimal
/// generator iff it is not the sum of two nonzero members. All candidates
/// lie in `[1, frobenius + multiplicity]`.
fn minimal_generators_of(
    small: &[bool],
    conductor: i64,
    frobenius: i64,
    multiplicity: i64,
) -> Vec<i64> {
    let member = |n: i64| n >= 0 && (n >= conductor || small[n as usize]);
    let upper = (frobenius + multiplicity).max(multiplicity);
    let mut gens = Vec::new();
    for cand in 1..=upper {
        if !member(cand) {
            continue;
        }
        let decomposable =
            (multiplicity..=cand - multiplicity).any(|x| member(x) && member(cand - x));
        if !decomposable {
            gens.push(cand);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn sgp(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Independent closure oracle: repeated setwise addition of generators
    /// to a fixpoint inside the window.
    fn closure_oracle(gens: &[i64], bound: i64) -> BTreeSet<i64> {
        let mut set: BTreeSet<i64> = BTreeSet::new();
        set.insert(0);
        loop {
            let snapshot: Vec<i64> = set.iter().copied().collect();
            let before = set.len();
            for &x in &snapshot {
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

    #[test]
    fn unit_generator_gives_the_naturals() {
        let n = sgp(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.multiplicity(), 1);
        assert_eq!(n.minimal_generators(), &[1]);
        assert_eq!(n, NumericalSemigroup::natural());
    }

    #[test]
    fn three_five_invariants() {
        let s = sgp(&[3, 5]);
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.genus(), 4);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.embedding_dimension(), 2);

        let oracle = closure_oracle(&[3, 5], 16);
        for n in 0..=16 {
            assert_eq!(s.contains(n), oracle.contains(&n), "membership of {n}");
        }
    }

    #[test]
    fn redundant_generators_are_sieved_out() {
        let s = sgp(&[3, 5, 6, 10]);
        assert_eq!(s.minimal_generators(), &[3, 5]);
        assert_eq!(s, sgp(&[3, 5]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(Error::NotCofinite { gcd: 2, .. })
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::InvalidGenerator(0))
        ));
    }

    #[test]
    fn membership() {
        let s = sgp(&[3, 5]);
        assert!(!s.contains(7));
        assert!(s.contains(8));
        assert!(s.contains(0));
        assert!(!s.contains(-1));
        assert!(s.contains(1_000_000));
    }

    #[test]
    fn invariants_of_three_four_five() {
        let s = sgp(&[3, 4, 5]);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.embedding_dimension(), 3);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.genus(), 2);
    }

    #[test]
    fn apery_sets() {
        let s = sgp(&[3, 5]);
        let ap3 = s.apery_set(3).unwrap();
        assert_eq!(ap3, vec![0, 10, 5]);
        assert_eq!(*ap3.iter().max().unwrap(), s.frobenius() + 3);

        let ap5 = s.apery_set(5).unwrap();
        assert_eq!(ap5, vec![0, 6, 12, 3, 9]);
        assert_eq!(ap5.len(), 5);
        assert_eq!(*ap5.iter().max().unwrap(), s.frobenius() + 5);

        assert!(matches!(s.apery_set(4), Err(Error::ApexNotMember(4))));
        assert!(matches!(s.apery_set(0), Err(Error::ApexNotMember(0))));
    }

    #[test]
    fn apery_genus_consistency() {
        // genus = sum of floor(w / m) over the Apery set of the multiplicity
        for gens in [vec![3i64, 5], vec![3, 4, 5], vec![4, 6, 7, 9], vec![2, 7]] {
            let s = sgp(&gens);
            let m = s.multiplicity();
            let total: i64 = s.apery_set(m).unwrap().iter().map(|w| w / m).sum();
            assert_eq!(total, s.genus(), "<{s}>");
        }
    }

    #[test]
    fn minimal_multiplicity() {
        assert!(sgp(&[3, 4, 5]).has_minimal_multiplicity());
        assert!(!sgp(&[3, 5]).has_minimal_multiplicity());
        assert!(NumericalSemigroup::natural().has_minimal_multiplicity());
    }

    #[test]
    fn arf_golden_cases() {
        let s = sgp(&[2, 5]);
        assert!(s.is_arf(ArfMethod::Definition));
        assert!(s.is_arf(ArfMethod::Lipman));
        assert!(s.is_arf(ArfMethod::Pattern));

        // witness: 5 + 5 - 3 = 7 is a gap
        let t = sgp(&[3, 5]);
        assert!(!t.contains(5 + 5 - 3));
        assert!(!t.is_arf(ArfMethod::Definition));
        assert!(!t.is_arf(ArfMethod::Lipman));
        assert!(!t.is_arf(ArfMethod::Pattern));

        assert!(NumericalSemigroup::natural().is_arf_all());
    }

    #[test]
    fn arf_closure_golden_cases() {
        let closed = sgp(&[3, 5]).arf_closure();
        assert_eq!(closed.minimal_generators(), &[3, 5, 7]);
        assert_eq!(closed.members_up_to(8), vec![0, 3, 5, 6, 7, 8]);

        assert_eq!(sgp(&[2, 5]).arf_closure(), sgp(&[2, 5]));
        let n = NumericalSemigroup::natural();
        assert_eq!(n.arf_closure(), n);
    }

    #[test]
    fn arf_closure_is_a_closure_operator() {
        for gens in [vec![3i64, 5], vec![3, 4], vec![4, 5, 7], vec![5, 7, 9, 11]] {
            let s = sgp(&gens);
            let c = s.arf_closure();
            assert!(c.is_extension_of(&s), "extensive on <{s}>");
            assert_eq!(c.arf_closure(), c, "idempotent on <{s}>");
            assert!(c.is_arf_all(), "closure of <{s}> is Arf");
        }
    }

    #[test]
    fn arf_routes_agree_up_to_genus_six() {
        for s in crate::census::enumerate_semigroups(6).unwrap() {
            if s.is_arf_all() {
                assert!(s.has_minimal_multiplicity(), "<{s}>");
            }
        }
    }

    #[test]
    fn arf_closure_is_monotone_along_tree_edges() {
        for s in crate::census::enumerate_semigroups(5).unwrap() {
            for &g in s.minimal_generators() {
                if g <= s.frobenius() {
                    continue;
                }
                let table: Vec<bool> = (0..=g + 1).map(|i| i != g && s.contains(i)).collect();
                let child = NumericalSemigroup::from_membership_table(&table);
                assert!(
                    s.arf_closure().is_extension_of(&child.arf_closure()),
                    "<{child}> vs <{s}>"
                );
            }
        }
    }

    #[test]
    fn extension_order() {
        let s = sgp(&[3, 5]);
        let t = sgp(&[3, 5, 7]);
        assert!(t.is_extension_of(&s));
        assert!(!s.is_extension_of(&t));
        assert!(NumericalSemigroup::natural().is_extension_of(&s));
    }

    #[test]
    fn display_round_trips() {
        for gens in [vec![1i64], vec![2, 5], vec![3, 5], vec![4, 6, 7, 9]] {
            let s = sgp(&gens);
            let printed = s.to_string();
            let parsed: Vec<i64> = printed.split(',').map(|p| p.parse().unwrap()).collect();
            assert_eq!(sgp(&parsed), s);
        }
    }
}
