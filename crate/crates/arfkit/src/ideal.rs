//! Relative ideals (rank-one monomial modules) and their calculus.
//!
//! A relative ideal of a numerical semigroup `S` is a set `E` of integers
//! with a minimum such that `E + S` is contained in `E`. It is the value set
//! of a rank-one monomial fractional ideal of `k[[t^S]]`, and all module
//! theory here happens at value level:
//!
//! * the colon `E - F = {z : z + F ⊆ E}` computes `Hom(F, E)`,
//! * the dual `S - E` computes `Hom(E, S)`,
//! * two ideals are isomorphic as modules iff they differ by a translation.
//!
//! Storage is an offset plus a membership window of width `conductor(S)`.
//! The window suffices: `offset + S ⊆ E` and `S` contains everything from
//! its conductor on, so every integer `>= offset + conductor` is a member
//! (asserted by a debug check at construction).

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use std::fmt;
use std::sync::Arc;

/// A relative ideal `E` over a fixed ambient numerical semigroup.
///
/// Immutable; all operations are pure functions returning fresh values.
#[derive(Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    ambient: Arc<NumericalSemigroup>,
    /// The minimum of the set.
    offset: i64,
    /// Membership on `[offset, offset + conductor)`; `window[0]` is true.
    window: Vec<bool>,
}

impl RelativeIdeal {
    /// The smallest relative ideal containing `elems`: the union of the
    /// translates `a + S`.
    pub fn from_elements(ambient: &NumericalSemigroup, elems: &[i64]) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::EmptyElements);
        }
        let offset = *elems.iter().min().unwrap();
        let c = ambient.conductor();
        let window: Vec<bool> = (0..c)
            .map(|i| elems.iter().any(|&a| ambient.contains(offset + i - a)))
            .collect();
        Ok(Self::from_raw(Arc::new(ambient.clone()), offset, window))
    }

    /// The ambient semigroup viewed as the unit ideal over itself.
    pub fn unit(ambient: &NumericalSemigroup) -> Self {
        let c = ambient.conductor();
        let window: Vec<bool> = (0..c).map(|i| ambient.contains(i)).collect();
        Self::from_raw(Arc::new(ambient.clone()), 0, window)
    }

    /// The principal ideal `a + S`.
    pub fn principal(ambient: &NumericalSemigroup, a: i64) -> Self {
        Self::unit(ambient).translate(a)
    }

    /// An overring `T ⊇ S`, viewed as a relative ideal over `S`.
    pub fn from_semigroup(ambient: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<Self> {
        if let Some(witness) = t.first_missing_member(ambient) {
            return Err(Error::NotAnExtension {
                sup: t.to_string(),
                sub: ambient.to_string(),
                witness,
            });
        }
        let c = ambient.conductor();
        let window: Vec<bool> = (0..c).map(|i| t.contains(i)).collect();
        Ok(Self::from_raw(Arc::new(ambient.clone()), 0, window))
    }

    pub(crate) fn from_raw(ambient: Arc<NumericalSemigroup>, offset: i64, window: Vec<bool>) -> Self {
        debug_assert_eq!(window.len() as i64, ambient.conductor());
        debug_assert!(window.first().copied().unwrap_or(true), "offset must be a member");
        let e = Self {
            ambient,
            offset,
            window,
        };
        debug_assert!(e.is_translation_closed(), "not an ideal: {e}");
        e
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub(crate) fn ambient_arc(&self) -> Arc<NumericalSemigroup> {
        Arc::clone(&self.ambient)
    }

    /// The minimum of the set.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Membership window on `[offset, offset + conductor)`.
    pub fn window(&self) -> &[bool] {
        &self.window
    }

    /// Membership test; everything from `offset + conductor` on is a member.
    pub fn contains(&self, n: i64) -> bool {
        if n < self.offset {
            return false;
        }
        let i = n - self.offset;
        if i >= self.window.len() as i64 {
            return true;
        }
        self.window[i as usize]
    }

    /// Members within the stored window, in increasing order.
    pub fn window_members(&self) -> impl Iterator<Item = i64> + '_ {
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| self.offset + i as i64)
    }

    /// Members in `[offset, bound]`, in increasing order.
    pub fn members_up_to(&self, bound: i64) -> Vec<i64> {
        (self.offset..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// Translates the whole set by `a`.
    pub fn translate(&self, a: i64) -> Self {
        Self {
            ambient: Arc::clone(&self.ambient),
            offset: self.offset + a,
            window: self.window.clone(),
        }
    }

    /// Splits the ideal as `shift + normalized`, where the normalized part
    /// has offset 0. Two ideals are isomorphic as modules iff their
    /// normalized parts coincide.
    pub fn normalize(&self) -> (Self, i64) {
        (self.translate(-self.offset), self.offset)
    }

    /// Setwise sum `E + F` (the product of the fractional ideals).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let c = self.conductor();
        let offset = self.offset + other.offset;
        let mut window = vec![false; c as usize];
        for e in self.window_members() {
            for f in other.window_members() {
                let i = e + f - offset;
                if i < c {
                    window[i as usize] = true;
                }
            }
        }
        Ok(Self::from_raw(self.ambient_arc(), offset, window))
    }

    /// Colon ideal `E - F = {z : z + F ⊆ E}`, i.e. `Hom(F, E)` at value level.
    ///
    /// Only a finite computation is needed: no `z` below `offset(E) -
    /// offset(F)` qualifies (it already fails at the minimum of `F`), every
    /// `z >= offset(E) - offset(F) + conductor` qualifies, and for a
    /// candidate in between only the window members of `F` matter since
    /// `z + f` past the window of `E` is a member automatically. The scan
    /// below starts one conductor lower than necessary as a safety margin;
    /// a debug assertion records the sharp bound.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let c = self.conductor();
        let lo = self.offset - other.offset;
        let accepted = |z: i64| -> bool {
            z >= lo && other.window_members().all(|f| self.contains(z + f))
        };
        let scan_from = lo - c;
        let accept: Vec<bool> = (scan_from..=lo + c).map(accepted).collect();
        let offset = (scan_from..=lo + c)
            .find(|&z| accept[(z - scan_from) as usize])
            .expect("z = lo + conductor is always accepted");
        debug_assert!(offset >= lo, "colon offset fell below the sharp bound");
        let window: Vec<bool> = (0..c)
            .map(|i| {
                let v = offset + i;
                v >= lo + c || accept[(v - scan_from) as usize]
            })
            .collect();
        Ok(Self::from_raw(self.ambient_arc(), offset, window))
    }

    /// The dual `S - E`, i.e. `Hom(E, S)` at value level.
    pub fn dual(&self) -> Self {
        Self::unit_over(self.ambient_arc())
            .colon(self)
            .expect("unit ideal shares the ambient")
    }

    /// The double dual `S - (S - E)`; a closure operator on relative ideals
    /// (extensive, monotone, idempotent).
    pub fn bidual(&self) -> Self {
        self.dual().dual()
    }

    /// Whether the ideal equals its double dual.
    pub fn is_reflexive(&self) -> bool {
        self.bidual() == *self
    }

    /// Whether the ideal is isomorphic (translation-equivalent) to its dual.
    pub fn is_self_dual(&self) -> bool {
        self.dual().normalize().0 == self.normalize().0
    }

    /// The trace ideal `(S - E) + E`: the sum of the images of all maps
    /// `E -> S`. Always contained in the ambient semigroup.
    pub fn trace(&self) -> Self {
        let t = self
            .dual()
            .add(self)
            .expect("dual shares the ambient");
        debug_assert!(t.is_subset_of(&Self::unit_over(self.ambient_arc())));
        t
    }

    /// Searches for a member `a` with `a + E = E + E`; such an `a` witnesses
    /// stability (the value-level form of `xI = I^2`). Candidates range over
    /// the members of `E` in `[offset, offset + conductor]`.
    pub fn stability_witness(&self) -> Option<i64> {
        let square = self.add(self).expect("same ambient");
        let c = self.conductor();
        self.window_members()
            .chain(std::iter::once(self.offset + c))
            .find(|&a| self.translate(a) == square)
    }

    pub fn is_stable(&self) -> bool {
        self.stability_witness().is_some()
    }

    /// The endomorphism semigroup `E - E`, reinterpreted as a numerical
    /// semigroup. It always contains the ambient.
    pub fn end_semigroup(&self) -> NumericalSemigroup {
        let e = self.colon(self).expect("same ambient");
        assert_eq!(e.offset, 0, "E - E always has minimum 0");
        let mut table = e.window.clone();
        table.push(true);
        NumericalSemigroup::from_membership_table(&table)
    }

    /// The blow-up `∪_n (nE - nE)`: endomorphism semigroups of the powers,
    /// iterated until they stabilize. The chain is increasing and bounded by
    /// the naturals, so it stabilizes after at most `genus` strict steps; the
    /// stopping rule requires two consecutive equal colons past that bound.
    pub fn blowup(&self) -> NumericalSemigroup {
        let genus = self.ambient.genus();
        let mut power = self.clone();
        let mut prev = self.colon(self).expect("same ambient");
        let mut n = 1;
        loop {
            n += 1;
            power = power.add(self).expect("same ambient");
            let cur = power.colon(&power).expect("same ambient");
            if cur == prev && n > genus {
                assert_eq!(cur.offset, 0);
                let mut table = cur.window.clone();
                table.push(true);
                return NumericalSemigroup::from_membership_table(&table);
            }
            assert!(n <= genus + 64, "blow-up failed to stabilize");
            prev = cur;
        }
    }

    /// Whether every member of `self` is a member of `other` (same ambient).
    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(*self.ambient, *other.ambient);
        let c = self.conductor();
        let hi = self.offset.max(other.offset) + c;
        (self.offset..hi).all(|v| !self.contains(v) || other.contains(v))
    }

    /// Set equality that tolerates different ambient semigroups (used when
    /// one ideal is reinterpreted over an overring).
    pub fn set_eq(&self, other: &Self) -> bool {
        if self.offset != other.offset {
            return false;
        }
        let hi = self.offset + self.conductor().max(other.conductor());
        (self.offset..hi).all(|v| self.contains(v) == other.contains(v))
    }

    /// Whether `E + T ⊆ E` for an overring `T ⊇ S`, i.e. whether the ideal
    /// is a module over the bigger ring.
    pub fn is_module_over(&self, t: &NumericalSemigroup) -> Result<bool> {
        let t_ideal = Self::from_semigroup(self.ambient(), t)?;
        Ok(self.add(&t_ideal)? == *self)
    }

    /// Whether an ideal contained in the ambient semigroup equals the
    /// truncation at its own offset, the integral closure in this monomial
    /// model. Errors when the ideal is not contained in the ambient.
    pub fn is_integrally_closed(&self) -> Result<bool> {
        if self.offset < 0 {
            return Err(Error::NotAnIdealOfS {
                witness: self.offset,
            });
        }
        if let Some(witness) = self.window_members().find(|&v| !self.ambient.contains(v)) {
            return Err(Error::NotAnIdealOfS { witness });
        }
        Ok(*self == truncation_ideal(&self.ambient, self.offset))
    }

    /// Reinterprets the same set of integers as an ideal over a smaller
    /// ambient `a ⊆ S`; the set is still a module over `a` since `E + a ⊆
    /// E + S ⊆ E`.
    pub fn as_ideal_over(&self, sub: &NumericalSemigroup) -> Result<Self> {
        if let Some(witness) = self.ambient.first_missing_member(sub) {
            return Err(Error::NotAnExtension {
                sup: self.ambient.to_string(),
                sub: sub.to_string(),
                witness,
            });
        }
        let c = sub.conductor();
        let window: Vec<bool> = (0..c).map(|i| self.contains(self.offset + i)).collect();
        Ok(Self::from_raw(Arc::new(sub.clone()), self.offset, window))
    }

    fn conductor(&self) -> i64 {
        self.ambient.conductor()
    }

    pub(crate) fn unit_over(ambient: Arc<NumericalSemigroup>) -> Self {
        let c = ambient.conductor();
        let window: Vec<bool> = (0..c).map(|i| ambient.contains(i)).collect();
        Self::from_raw(ambient, 0, window)
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient.to_string(),
                right: other.ambient.to_string(),
            })
        }
    }

    /// Debug invariant: adding any generator of the ambient to any window
    /// member stays in the set.
    fn is_translation_closed(&self) -> bool {
        self.window_members().all(|e| {
            self.ambient
                .minimal_generators()
                .iter()
                .all(|&g| self.contains(e + g))
        })
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self
            .members_up_to(self.offset + self.conductor())
            .iter()
            .map(i64::to_string)
            .collect();
        write!(f, "{{{}, ...}}", members.join(", "))
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over <{}>", self.ambient)
    }
}

/// The truncation `{s in S : s >= v}`: the integrally closed monomial ideal
/// with minimal value at least `v`.
pub fn truncation_ideal(s: &NumericalSemigroup, v: i64) -> RelativeIdeal {
    assert!(v >= 0, "truncation level must be nonnegative");
    let offset = (v..).find(|&n| s.contains(n)).unwrap();
    let c = s.conductor();
    let window: Vec<bool> = (0..c).map(|i| s.contains(offset + i)).collect();
    RelativeIdeal::from_raw(Arc::new(s.clone()), offset, window)
}

/// The conductor of the extension `S ⊆ T`: the colon `S - T`, the largest
/// set that is simultaneously an ideal of both rings.
pub fn conductor_ideal(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
) -> Result<RelativeIdeal> {
    let t_ideal = RelativeIdeal::from_semigroup(s, t)?;
    RelativeIdeal::unit(s).colon(&t_ideal)
}
