//! Lattices with cached join/meet tables, and irreducible classification.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::elemset::{ElemSet, ElementId};
use crate::error::{Error, Result};
use crate::order::{CoverPair, Poset, Relabel};

/// A poset in which every pair has a join and a meet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u8>,
    meet: Vec<u8>,
    bottom: ElementId,
    top: ElementId,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.len())
            .field("covers", &self.covers())
            .finish()
    }
}

impl Deref for Lattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl Lattice {
    /// Validate `poset` and fill the join and meet tables.
    pub fn from_poset(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        let all = poset.elements();
        let mut join = vec![0u8; n * n];
        let mut meet = vec![0u8; n * n];
        for x in 0..n {
            for y in x..n {
                let j = poset.join_within(x, y, all).ok_or(Error::NotALattice(
                    x,
                    y,
                    crate::Bound::Join,
                ))?;
                let m = poset.meet_within(x, y, all).ok_or(Error::NotALattice(
                    x,
                    y,
                    crate::Bound::Meet,
                ))?;
                join[x * n + y] = j as u8;
                join[y * n + x] = j as u8;
                meet[x * n + y] = m as u8;
                meet[y * n + x] = m as u8;
            }
        }
        let bottom = poset.minimal_elements().first().unwrap();
        let top = poset.maximal_elements().first().unwrap();
        Ok(Lattice {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn from_covers<P>(n: usize, pairs: &[P]) -> Result<Lattice>
    where
        P: Copy + Into<CoverPair>,
    {
        Self::from_poset(Poset::from_covers(n, pairs)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x * self.len() + y] as ElementId
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x * self.len() + y] as ElementId
    }

    #[inline]
    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> ElementId {
        self.top
    }

    /// Elements other than bottom and top.
    pub fn interior(&self) -> ElemSet {
        let mut s = self.elements();
        s.remove(self.bottom);
        s.remove(self.top);
        s
    }

    pub fn atoms(&self) -> ElemSet {
        self.upper_covers(self.bottom)
    }

    pub fn dual_atoms(&self) -> ElemSet {
        self.lower_covers(self.top)
    }

    /// Exactly one lower cover.
    pub fn is_join_irreducible(&self, x: ElementId) -> bool {
        self.lower_covers(x).len() == 1
    }

    /// Exactly one upper cover.
    pub fn is_meet_irreducible(&self, x: ElementId) -> bool {
        self.upper_covers(x).len() == 1
    }

    pub fn join_irreducibles(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.is_join_irreducible(x))
            .collect()
    }

    pub fn meet_irreducibles(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.is_meet_irreducible(x))
            .collect()
    }

    pub fn doubly_irreducibles(&self) -> ElemSet {
        self.join_irreducibles()
            .intersection(self.meet_irreducibles())
    }

    pub fn profile(&self, convention: Convention) -> IrreducibleProfile {
        IrreducibleProfile::new(self, convention)
    }

    pub fn dual(&self) -> Lattice {
        Lattice {
            poset: self.poset.dual(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Induced subposet on `s`, validated as a lattice in its own order.
    pub fn induced(&self, s: ElemSet) -> Result<(Lattice, Relabel)> {
        let (p, relabel) = self.poset.induced_subposet(s)?;
        match Lattice::from_poset(p) {
            Ok(l) => Ok((l, relabel)),
            Err(Error::NotALattice(x, y, b)) => Err(Error::NotALattice(
                relabel.new_to_old[x],
                relabel.new_to_old[y],
                b,
            )),
            Err(e) => Err(e),
        }
    }

    /// The up-set of `x` as a lattice.
    pub fn up_set_lattice(&self, x: ElementId) -> (Lattice, Relabel) {
        self.induced(self.up_set(x))
            .expect("an up-set of a lattice is a lattice")
    }

    pub fn relabel(&self, perm: &[ElementId]) -> Lattice {
        Lattice::from_poset(self.poset.relabel(perm)).expect("relabeling preserves lattices")
    }
}

/// Whether bottom and top are counted as join- and meet-irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Cover counting only: bottom is never join-irreducible, top never
    /// meet-irreducible.
    #[default]
    Paper,
    /// Bottom is join-irreducible and top meet-irreducible by definition.
    Rival,
}

/// Per-element classification by lower/upper cover counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleProfile {
    pub convention: Convention,
    pub atoms: ElemSet,
    pub dual_atoms: ElemSet,
    pub join_irr: ElemSet,
    pub meet_irr: ElemSet,
    pub join_red: ElemSet,
    pub meet_red: ElemSet,
    pub doubly_irr: ElemSet,
    pub doubly_red: ElemSet,
}

impl IrreducibleProfile {
    pub fn new(l: &Lattice, convention: Convention) -> Self {
        let mut join_irr = l.join_irreducibles();
        let mut meet_irr = l.meet_irreducibles();
        let join_red: ElemSet = (0..l.len())
            .filter(|&x| l.lower_covers(x).len() > 1)
            .collect();
        let meet_red: ElemSet = (0..l.len())
            .filter(|&x| l.upper_covers(x).len() > 1)
            .collect();
        if convention == Convention::Rival {
            join_irr.insert(l.bottom());
            meet_irr.insert(l.top());
        }
        IrreducibleProfile {
            convention,
            atoms: l.atoms(),
            dual_atoms: l.dual_atoms(),
            join_irr,
            meet_irr,
            join_red,
            meet_red,
            doubly_irr: join_irr.intersection(meet_irr),
            doubly_red: join_red.intersection(meet_red),
        }
    }
}
