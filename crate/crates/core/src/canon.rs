//! Canonical labeling of finite posets.
//!
//! Elements are first split into cells by iterated invariant refinement
//! (rank, cover degrees, up/down-set sizes, then the multiset of neighbouring
//! cells). Cells are ordered by their invariants, and rank comes first, so
//! every canonical labeling is a linear extension with the bottom (if any)
//! at 0. Within that constraint we search all labelings for the one whose
//! lower-cover rows are lexicographically smallest. Elements with identical
//! upper and lower covers are interchangeable and only one of them is tried
//! per position.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elemset::{ElemSet, ElementId};
use crate::error::Result;
use crate::lattice::Lattice;
use crate::order::{CoverPair, Poset};

/// Cover list of a poset under its canonical labeling.
///
/// Two posets are isomorphic iff their certificates are equal. Certificates
/// sort by size first, then by cover list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCert {
    pub n: usize,
    pub covers: Vec<CoverPair>,
}

impl CanonicalCert {
    pub fn to_poset(&self) -> Poset {
        Poset::from_covers(self.n, &self.covers).expect("certificate covers form a poset")
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        Lattice::from_poset(self.to_poset())
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, c) in self.covers.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", c.lower, c.upper)?;
        }
        Ok(())
    }
}

/// Stable cell assignment; `cell[x]` is the index of `x`'s cell, and cells
/// are numbered in invariant order.
fn refine(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let ranks = p.ranks();
    let initial: Vec<(usize, usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            (
                ranks[x],
                p.lower_covers(x).len(),
                p.upper_covers(x).len(),
                p.up_set(x).len(),
                p.down_set(x).len(),
            )
        })
        .collect();
    let mut cell = number_by_key(&initial);
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = p.lower_covers(x).iter().map(|y| cell[y]).collect();
                let mut above: Vec<usize> = p.upper_covers(x).iter().map(|y| cell[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (cell[x], below, above)
            })
            .collect();
        let next = number_by_key(&sigs);
        let before = cell.iter().max().copied().unwrap_or(0);
        let after = next.iter().max().copied().unwrap_or(0);
        cell = next;
        if after == before {
            return cell;
        }
    }
}

fn number_by_key<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).unwrap())
        .collect()
}

struct Search<'a> {
    p: &'a Poset,
    /// Cell required at each position.
    slot_cell: Vec<usize>,
    cell: Vec<usize>,
    label: Vec<Option<ElementId>>,
    order: Vec<ElementId>,
    rows: Vec<u64>,
    best_rows: Option<Vec<u64>>,
    best_order: Vec<ElementId>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        let n = self.p.len();
        if pos == n {
            let better = match &self.best_rows {
                None => true,
                Some(best) => self.rows < *best,
            };
            if better {
                self.best_rows = Some(self.rows.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        let want = self.slot_cell[pos];
        let mut tried: Vec<(ElemSet, ElemSet)> = Vec::new();
        for e in 0..n {
            if self.cell[e] != want || self.label[e].is_some() {
                continue;
            }
            let twins = (self.p.lower_covers(e), self.p.upper_covers(e));
            if tried.contains(&twins) {
                continue;
            }
            tried.push(twins);
            let mut row = 0u64;
            for y in self.p.lower_covers(e) {
                // Lower covers sit in earlier cells, so they are labeled.
                row |= 1u64 << self.label[y].expect("lower cover labeled first");
            }
            self.rows.push(row);
            if let Some(best) = &self.best_rows {
                if self.rows[..] > best[..=pos] {
                    self.rows.pop();
                    continue;
                }
            }
            self.label[e] = Some(pos);
            self.order.push(e);
            self.run(pos + 1);
            self.order.pop();
            self.label[e] = None;
            self.rows.pop();
        }
    }
}

/// Canonical certificate and the permutation `perm[old] = new` realising it.
pub fn canonical_labeling(p: &Poset) -> (CanonicalCert, Vec<ElementId>) {
    let n = p.len();
    let cell = refine(p);
    let mut slot_cell = cell.clone();
    slot_cell.sort_unstable();
    let mut search = Search {
        p,
        slot_cell,
        cell,
        label: vec![None; n],
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        best_rows: None,
        best_order: Vec::new(),
    };
    search.run(0);
    let rows = search.best_rows.expect("at least one labeling");
    let mut perm = vec![0; n];
    for (new, &old) in search.best_order.iter().enumerate() {
        perm[old] = new;
    }
    let mut covers: Vec<CoverPair> = rows
        .iter()
        .enumerate()
        .flat_map(|(upper, &row)| {
            ElemSet(row)
                .iter()
                .map(move |lower| CoverPair::new(lower, upper))
        })
        .collect();
    covers.sort();
    (CanonicalCert { n, covers }, perm)
}

pub fn canonical_poset_form(p: &Poset) -> CanonicalCert {
    canonical_labeling(p).0
}

pub fn canonical_form(l: &Lattice) -> CanonicalCert {
    canonical_labeling(l.poset()).0
}

/// `l` relabeled into its canonical labeling.
pub fn canonical_lattice(l: &Lattice) -> Lattice {
    let (_, perm) = canonical_labeling(l.poset());
    l.relabel(&perm)
}

pub fn are_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}
