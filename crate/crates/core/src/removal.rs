//! Removing irreducible elements from a lattice.
//!
//! An element can be deleted from a finite lattice, leaving a lattice, exactly
//! when it is join- or meet-irreducible. Deleting join-irreducibles keeps the
//! remaining join-irreducibles irreducible, so any set of them can be removed
//! at once; mixing the two sides can fail. The builders at the bottom of this
//! module produce small lattices exhibiting the boundary cases and check their
//! own claimed properties on construction.

use crate::elemset::{ElemSet, ElementId};
use crate::error::{Bound, Error, Result, Side};
use crate::lattice::{Convention, Lattice};
use crate::order::Relabel;

/// Which reading of "irreducible" was applied to bottom and top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalReading {
    /// Classify every element, bottom and top included, by counting its
    /// existing covers. Bottom is meet-irreducible iff it has one atom; top
    /// is join-irreducible iff it has one dual atom.
    CoverCounting,
    /// Additionally count bottom as join-irreducible and top as
    /// meet-irreducible.
    Rival,
}

/// Outcome of comparing irreducibility of `x` with latticehood of `L \ {x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalCheck {
    pub element: ElementId,
    /// Join- or meet-irreducible by cover counting.
    pub irreducible: bool,
    /// Join- or meet-irreducible when bottom and top get the Rival convention.
    pub irreducible_rival: bool,
    pub removal_is_lattice: bool,
    /// Pair without a join or meet in `L \ {x}`, in the ids of `L`.
    pub witness: Option<(ElementId, ElementId, Bound)>,
}

impl RemovalCheck {
    /// Agreement under the cover-counting reading.
    pub fn agrees(&self) -> bool {
        self.irreducible == self.removal_is_lattice
    }

    pub fn agrees_under(&self, reading: ExtremalReading) -> bool {
        match reading {
            ExtremalReading::CoverCounting => self.agrees(),
            ExtremalReading::Rival => self.irreducible_rival == self.removal_is_lattice,
        }
    }

    /// The two readings of bottom and top give different answers here.
    pub fn readings_disagree(&self) -> bool {
        self.irreducible != self.irreducible_rival
    }
}

fn is_irreducible_on(l: &Lattice, x: ElementId, side: Side) -> bool {
    match side {
        Side::Join => l.is_join_irreducible(x),
        Side::Meet => l.is_meet_irreducible(x),
    }
}

/// Compare irreducibility of `x` with whether `L \ {x}` is a lattice.
pub fn removal_lattice_iff_irreducible(l: &Lattice, x: ElementId) -> Result<RemovalCheck> {
    if l.len() < 2 {
        return Err(Error::TooSmall { n: l.len(), min: 1 });
    }
    if x >= l.len() {
        return Err(Error::Range { id: x, n: l.len() });
    }
    let irreducible = l.is_join_irreducible(x) || l.is_meet_irreducible(x);
    let rival = l.profile(Convention::Rival);
    let irreducible_rival = rival.join_irr.contains(x) || rival.meet_irr.contains(x);
    let mut rest = l.elements();
    rest.remove(x);
    let (sub, relabel) = l.poset().induced_subposet(rest)?;
    let witness = sub
        .lattice_violation()
        .map(|(a, b, bound)| (relabel.new_to_old[a], relabel.new_to_old[b], bound));
    Ok(RemovalCheck {
        element: x,
        irreducible,
        irreducible_rival,
        removal_is_lattice: witness.is_none(),
        witness,
    })
}

/// First `(j1, j2, side)` where `j2` stops being irreducible after `j1` is
/// removed, or `None` when every pair survives.
pub fn irreducible_survival_violation(l: &Lattice) -> Option<(ElementId, ElementId, Side)> {
    for side in [Side::Join, Side::Meet] {
        let irr = match side {
            Side::Join => l.join_irreducibles(),
            Side::Meet => l.meet_irreducibles(),
        };
        for first in irr {
            let (sub, relabel) = l
                .induced(l.elements().difference(ElemSet::singleton(first)))
                .expect("removing an irreducible leaves a lattice");
            for second in irr {
                if second == first {
                    continue;
                }
                let id = relabel.old_to_new[second].unwrap();
                if !is_irreducible_on(&sub, id, side) {
                    return Some((first, second, side));
                }
            }
        }
    }
    None
}

/// Irreducibles stay irreducible after another irreducible on the same side
/// is removed.
pub fn irreducibles_survive_removal(l: &Lattice) -> bool {
    irreducible_survival_violation(l).is_none()
}

fn check_irreducible_set(l: &Lattice, s: ElemSet, side: Side) -> Result<()> {
    if let Some(id) = s.difference(l.elements()).first() {
        return Err(Error::Range { id, n: l.len() });
    }
    match s.iter().find(|&x| !is_irreducible_on(l, x, side)) {
        Some(x) => Err(Error::NotIrreducible(x, side)),
        None => Ok(()),
    }
}

/// Remove a set of join-irreducibles (or meet-irreducibles) at once.
///
/// Panics if the remainder is not a lattice; removing same-side
/// irreducibles never breaks latticehood.
pub fn remove_irreducible_set(l: &Lattice, s: ElemSet, side: Side) -> Result<(Lattice, Relabel)> {
    check_irreducible_set(l, s, side)?;
    let rest = l.elements().difference(s);
    let out = l
        .induced(rest)
        .unwrap_or_else(|e| panic!("removing {side}-irreducibles {s:?} broke latticehood: {e}"));
    Ok(out)
}

/// Remove irreducibles one at a time in the given order, re-checking
/// irreducibility in each intermediate lattice.
pub fn remove_sequentially(
    l: &Lattice,
    order: &[ElementId],
    side: Side,
) -> Result<(Lattice, Relabel)> {
    check_irreducible_set(l, order.iter().collect(), side)?;
    let mut cur = l.clone();
    let mut map = Relabel {
        new_to_old: (0..l.len()).collect(),
        old_to_new: (0..l.len()).map(Some).collect(),
    };
    for &x in order {
        let id = map.old_to_new[x].ok_or(Error::Range { id: x, n: l.len() })?;
        if !is_irreducible_on(&cur, id, side) {
            return Err(Error::NotIrreducible(x, side));
        }
        let (next, step) = cur.induced(cur.elements().difference(ElemSet::singleton(id)))?;
        map = map.then(&step);
        cur = next;
    }
    Ok((cur, map))
}

/// Join-irreducibles of `L \ {x}` that were join-reducible in `L`, as ids of `L`.
pub fn promoted_join_irreducibles(l: &Lattice, x: ElementId) -> Result<ElemSet> {
    if !(l.is_join_irreducible(x) || l.is_meet_irreducible(x)) {
        return Err(Error::NotIrreducible(x, Side::Join));
    }
    let (sub, relabel) = l.induced(l.elements().difference(ElemSet::singleton(x)))?;
    Ok(sub
        .join_irreducibles()
        .iter()
        .map(|y| relabel.new_to_old[y])
        .filter(|&y| l.lower_covers(y).len() > 1)
        .collect())
}

/// Every element promoted to join-irreducible by deleting `x` upper covers `x`.
pub fn new_join_irreducibles_cover_removed(l: &Lattice, x: ElementId) -> Result<bool> {
    let promoted = promoted_join_irreducibles(l, x)?;
    Ok(promoted.is_subset(l.upper_covers(x)))
}

/// A lattice with a join-irreducible, meet-reducible `j` covering a
/// meet-irreducible, join-reducible `m`; deleting both is not a lattice.
#[derive(Debug, Clone)]
pub struct MixedRemoval {
    pub lattice: Lattice,
    pub j: ElementId,
    pub m: ElementId,
    /// Pair lacking a bound in `L \ {j, m}`, in the ids of `L`.
    pub witness: (ElementId, ElementId, Bound),
}

pub fn build_mixed_removal_counterexample() -> MixedRemoval {
    let lattice = crate::fixtures::mix8();
    let (j, m) = (4, 3);
    assert!(lattice.is_join_irreducible(j) && !lattice.is_meet_irreducible(j));
    assert!(lattice.is_meet_irreducible(m) && !lattice.is_join_irreducible(m));
    assert!(lattice.is_cover(m, j));
    let rest = lattice.elements().difference([j, m].iter().collect());
    let witness = match lattice.induced(rest) {
        Err(Error::NotALattice(a, b, bound)) => (a, b, bound),
        other => panic!("MIX8 without j and m should not be a lattice, got {other:?}"),
    };
    MixedRemoval {
        lattice,
        j,
        m,
        witness,
    }
}

/// An element that becomes join-irreducible only after another
/// join-irreducible is removed.
#[derive(Debug, Clone)]
pub struct ConverseExample {
    pub lattice: Lattice,
    pub removed: ElementId,
    pub promoted: ElementId,
}

pub fn build_promotion_example() -> ConverseExample {
    let lattice = crate::fixtures::b2();
    let (removed, promoted) = (1, 3);
    assert!(lattice.is_join_irreducible(removed));
    assert_eq!(lattice.lower_covers(promoted).len(), 2);
    let (sub, relabel) = lattice
        .induced(lattice.elements().difference(ElemSet::singleton(removed)))
        .expect("B2 without an atom is a chain");
    assert!(sub.is_join_irreducible(relabel.old_to_new[promoted].unwrap()));
    ConverseExample {
        lattice,
        removed,
        promoted,
    }
}

/// Totals from checking every element of every given lattice.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RemovalSweep {
    pub lattices: usize,
    pub elements: usize,
    /// Cases where cover-counting irreducibility and latticehood differ.
    pub disagreements: Vec<(usize, ElementId)>,
    /// Cases where the Rival reading of bottom/top would give a different
    /// answer from cover counting; recorded, not an error.
    pub reading_conflicts: Vec<(usize, ElementId)>,
}

pub fn sweep_removal<'a, I>(lattices: I) -> RemovalSweep
where
    I: IntoIterator<Item = &'a Lattice>,
{
    let mut out = RemovalSweep::default();
    for (i, l) in lattices.into_iter().enumerate() {
        if l.len() < 2 {
            continue;
        }
        out.lattices += 1;
        for x in 0..l.len() {
            let check = removal_lattice_iff_irreducible(l, x).expect("size checked");
            out.elements += 1;
            if !check.agrees() {
                out.disagreements.push((i, x));
            }
            if check.readings_disagree() {
                out.reading_conflicts.push((i, x));
            }
        }
    }
    out
}
