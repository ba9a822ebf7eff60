//! The lattice form of the union-closed sets conjecture: every finite lattice
//! with more than one element has a join-irreducible `j` with
//! `2 * |up(j)| <= |L|`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalCert};
use crate::elemset::ElemSet;
use crate::enumerate::{enumerate_up_to, EnumConfig};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Join-irreducibles lying below at most half of the lattice.
pub fn frankl_witnesses(l: &Lattice) -> Result<ElemSet> {
    if l.len() < 2 {
        return Err(Error::TooSmall { n: l.len(), min: 1 });
    }
    let n = l.len();
    Ok(l.join_irreducibles()
        .iter()
        .filter(|&j| 2 * l.up_set(j).len() <= n)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureStatus {
    /// One-element lattice; the statement needs more than one element.
    Vacuous,
    Holds(ElemSet),
    Counterexample,
}

pub fn conjecture_status(l: &Lattice) -> ConjectureStatus {
    match frankl_witnesses(l) {
        Err(_) => ConjectureStatus::Vacuous,
        Ok(w) if w.is_empty() => ConjectureStatus::Counterexample,
        Ok(w) => ConjectureStatus::Holds(w),
    }
}

pub fn satisfies_conjecture(l: &Lattice) -> bool {
    !matches!(conjecture_status(l), ConjectureStatus::Counterexample)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeStats {
    pub n: usize,
    pub lattices: usize,
    /// Number of witnesses -> number of lattices with that many.
    pub witness_histogram: BTreeMap<usize, usize>,
    pub counterexamples: Vec<CanonicalCert>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    pub sizes: Vec<SizeStats>,
}

impl SweepReport {
    pub fn counts(&self) -> Vec<usize> {
        self.sizes.iter().map(|s| s.lattices).collect()
    }

    pub fn total_counterexamples(&self) -> usize {
        self.sizes.iter().map(|s| s.counterexamples.len()).sum()
    }

    /// With no counterexample found, every counterexample has more than
    /// `max_n` elements.
    pub fn certified_lower_bound(&self) -> Option<usize> {
        (self.total_counterexamples() == 0).then_some(self.max_n + 1)
    }
}

pub fn size_stats(n: usize, lattices: &[Lattice], cfg: &EnumConfig) -> SizeStats {
    let check = |l: &Lattice| frankl_witnesses(l).map(|w| w.len()).unwrap_or(0);
    let counts: Vec<usize> = if cfg.jobs <= 1 {
        lattices.iter().map(check).collect()
    } else {
        cfg.run(|| lattices.par_iter().map(check).collect())
    };
    let mut witness_histogram = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (l, &c) in lattices.iter().zip(&counts) {
        *witness_histogram.entry(c).or_insert(0) += 1;
        if c == 0 && l.len() > 1 {
            counterexamples.push(canonical_form(l));
        }
    }
    SizeStats {
        n,
        lattices: lattices.len(),
        witness_histogram,
        counterexamples,
    }
}

/// Check every lattice of size `2..=max_n`.
pub fn counterexample_sweep(max_n: usize, cfg: &EnumConfig) -> Result<SweepReport> {
    if max_n < 2 {
        return Err(Error::TooSmall { n: max_n, min: 1 });
    }
    let levels = enumerate_up_to(max_n, cfg)?;
    let sizes = levels
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, ls)| size_stats(i + 1, ls, cfg))
        .collect();
    Ok(SweepReport { max_n, sizes })
}
