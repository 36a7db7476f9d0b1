//! The maximal ideal and the chain of iterated blow-ups.
//!
//! Starting from a semigroup `A_0 = S`, blowing up the maximal ideal
//! repeatedly produces a strictly increasing chain `A_0 ⊂ A_1 ⊂ ... ⊂ A_l`
//! ending at the naturals. The members of the chain model the local rings
//! infinitely near the original one: the model here is local (a single
//! branch), so each `A_i` is itself one of those rings and no semi-local
//! bookkeeping is needed.

use crate::ideal::{truncation_ideal, RelativeIdeal};
use crate::semigroup::{ArfMethod, NumericalSemigroup};

/// The chain of iterated blow-ups of maximal ideals, together with the
/// multiplicity of each member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LipmanChain {
    members: Vec<NumericalSemigroup>,
    multiplicity_sequence: Vec<i64>,
}

impl LipmanChain {
    /// The semigroups `A_0 ⊂ A_1 ⊂ ... ⊂ A_l = N`, strictly increasing.
    pub fn members(&self) -> &[NumericalSemigroup] {
        &self.members
    }

    /// Multiplicity of each member; the last entry is always 1.
    pub fn multiplicity_sequence(&self) -> &[i64] {
        &self.multiplicity_sequence
    }

    /// Number of members, `l + 1`; a chain always has at least one member.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The maximal ideal `S \ {0}`, the truncation at the multiplicity.
pub fn maximal_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    truncation_ideal(s, s.multiplicity())
}

/// Iterates `A_{i+1} = blowup(maximal_ideal(A_i))` until the naturals are
/// reached. Termination is guaranteed: each blow-up of a singular member
/// strictly decreases the genus.
///
/// The chain is always computed with the general blow-up (the union of
/// colons of powers). Whenever a member is Arf its maximal ideal is stable
/// and a single colon must already give the blow-up; that shortcut is
/// checked at every such step rather than used as a fast path, to keep the
/// Arf hypothesis out of the trusted base.
pub fn lipman_chain(s: &NumericalSemigroup) -> LipmanChain {
    let mut members = vec![s.clone()];
    loop {
        let last = members.last().unwrap();
        if last.genus() == 0 {
            break;
        }
        let j = maximal_ideal(last);
        let next = j.blowup();
        if last.is_arf(ArfMethod::Pattern) {
            assert_eq!(
                next,
                j.end_semigroup(),
                "Arf member <{last}>: blow-up must equal End of the maximal ideal"
            );
        }
        assert!(
            next.genus() < last.genus(),
            "blow-up of <{last}> did not shrink the genus"
        );
        members.push(next);
    }
    assert!(members.len() as i64 <= s.genus() + 1);
    let multiplicity_sequence = members.iter().map(|a| a.multiplicity()).collect();
    LipmanChain {
        members,
        multiplicity_sequence,
    }
}
