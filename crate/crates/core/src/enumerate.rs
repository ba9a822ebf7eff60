//! Isomorph-free generation of all lattices of a given size.
//!
//! Removing the top of an `n`-element lattice leaves a finite meet-semilattice
//! on `n - 1` elements, and adding a top to any finite meet-semilattice gives
//! a lattice back. Meet-semilattices are grown one new maximal element at a
//! time: a maximal element can always be deleted without losing meets, so
//! every semilattice of size `k` is an extension of one of size `k - 1`. Each
//! level is deduplicated by canonical certificate.
//!
//! [`oracle_enumerate`] is an independent brute-force baseline: it walks all
//! naturally labeled posets, keeps the lattices, and deduplicates them with a
//! plain backtracking isomorphism test.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_poset_form, CanonicalCert};
use crate::elemset::{ElemSet, ElementId};
use crate::error::{Error, Result};
use crate::lattice::{Convention, Lattice};
use crate::order::Poset;

/// Largest size accepted by the brute-force oracle.
pub const ORACLE_MAX: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest lattice size the enumerator accepts.
    pub max_size: usize,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_size: 9,
            jobs: 1,
        }
    }
}

impl EnumConfig {
    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Size {
                n,
                max: self.max_size,
            });
        }
        if n > self.max_size {
            return Err(Error::Resource {
                n,
                max: self.max_size,
            });
        }
        Ok(())
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.jobs <= 1 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Strict down-sets `d` of `p` for which adding a new element above exactly
/// `d` keeps every pair's meet.
fn semilattice_extensions(p: &Poset) -> Vec<ElemSet> {
    let n = p.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let d = ElemSet(mask);
        if !d.iter().all(|x| p.down_set(x).is_subset(d)) {
            continue;
        }
        let principal = (0..n).all(|x| {
            let below = d.intersection(p.down_set(x));
            below.iter().any(|z| below.is_subset(p.down_set(z)))
        });
        if principal {
            out.push(d);
        }
    }
    out
}

fn extend(p: &Poset, d: ElemSet) -> Poset {
    let n = p.len();
    let mut up: Vec<ElemSet> = (0..n).map(|x| p.up_set(x)).collect();
    for x in d {
        up[x].insert(n);
    }
    up.push(ElemSet::singleton(n));
    Poset::from_up_sets(up).expect("extension by a maximal element is a poset")
}

fn add_top(p: &Poset) -> Poset {
    extend(p, p.elements())
}

/// Meet-semilattices of every size `1..=k`, one certificate per class.
fn semilattice_levels(k: usize, cfg: &EnumConfig) -> Vec<Vec<CanonicalCert>> {
    let single = Poset::from_covers::<(usize, usize)>(1, &[]).unwrap();
    let mut levels = vec![vec![canonical_poset_form(&single)]];
    while levels.len() < k {
        let parents: Vec<Poset> = levels
            .last()
            .unwrap()
            .iter()
            .map(|c| c.to_poset())
            .collect();
        let grow = |p: &Poset| -> Vec<CanonicalCert> {
            semilattice_extensions(p)
                .into_iter()
                .map(|d| canonical_poset_form(&extend(p, d)))
                .collect()
        };
        let next: BTreeSet<CanonicalCert> = if cfg.jobs <= 1 {
            parents.iter().flat_map(grow).collect()
        } else {
            cfg.run(|| parents.par_iter().flat_map_iter(grow).collect())
        };
        levels.push(next.into_iter().collect());
    }
    levels
}

fn lattices_from_semilattices(certs: &[CanonicalCert], cfg: &EnumConfig) -> Vec<Lattice> {
    let close =
        |c: &CanonicalCert| canonical_form(&Lattice::from_poset(add_top(&c.to_poset())).unwrap());
    let mut out: Vec<CanonicalCert> = if cfg.jobs <= 1 {
        certs.iter().map(close).collect()
    } else {
        cfg.run(|| certs.par_iter().map(close).collect())
    };
    out.sort();
    out.iter()
        .map(|c| c.to_lattice().expect("lattice certificate"))
        .collect()
}

/// Canonical representatives of every lattice with `n` elements, sorted by
/// certificate.
pub fn enumerate_lattices(n: usize, cfg: &EnumConfig) -> Result<Vec<Lattice>> {
    cfg.check(n)?;
    if n == 1 {
        return Ok(vec![crate::fixtures::chain(1)]);
    }
    let levels = semilattice_levels(n - 1, cfg);
    Ok(lattices_from_semilattices(&levels[n - 2], cfg))
}

/// Lattices of every size `1..=max`, index `i` holding size `i + 1`.
pub fn enumerate_up_to(max: usize, cfg: &EnumConfig) -> Result<Vec<Vec<Lattice>>> {
    cfg.check(max)?;
    let mut out = vec![vec![crate::fixtures::chain(1)]];
    if max >= 2 {
        let levels = semilattice_levels(max - 1, cfg);
        for level in &levels {
            out.push(lattices_from_semilattices(level, cfg));
        }
    }
    Ok(out)
}

pub fn enumerate_certs(n: usize, cfg: &EnumConfig) -> Result<Vec<CanonicalCert>> {
    Ok(enumerate_lattices(n, cfg)?
        .iter()
        .map(canonical_form)
        .collect())
}

/// Histogram of doubly irreducible counts (cover-counting convention) over
/// all lattices of size `n`.
pub fn doubly_irreducible_census(n: usize, cfg: &EnumConfig) -> Result<BTreeMap<usize, usize>> {
    let mut hist = BTreeMap::new();
    for l in enumerate_lattices(n, cfg)? {
        *hist
            .entry(l.profile(Convention::Paper).doubly_irr.len())
            .or_insert(0) += 1;
    }
    Ok(hist)
}

// Brute-force baseline. Shares nothing with the generator above beyond the
// poset and lattice types.

/// Every naturally labeled poset on `n` elements: element `j` is given a
/// down-closed strict down-set inside `0..j`.
fn natural_posets(n: usize, mut visit: impl FnMut(&[ElemSet])) {
    fn go(j: usize, n: usize, down: &mut Vec<ElemSet>, visit: &mut dyn FnMut(&[ElemSet])) {
        if j == n {
            visit(down);
            return;
        }
        for mask in 0u64..(1u64 << j) {
            let d = ElemSet(mask);
            if d.iter().all(|x| down[x].is_subset(d)) {
                down.push(d);
                go(j + 1, n, down, visit);
                down.pop();
            }
        }
    }
    go(0, n, &mut Vec::with_capacity(n), &mut visit);
}

fn poset_from_strict_down(down: &[ElemSet]) -> Poset {
    let n = down.len();
    let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for (y, d) in down.iter().enumerate() {
        for x in *d {
            up[x].insert(y);
        }
    }
    Poset::from_up_sets(up).expect("naturally labeled relation is a poset")
}

fn element_signature(p: &Poset, x: ElementId) -> (usize, usize, usize, usize) {
    (
        p.up_set(x).len(),
        p.down_set(x).len(),
        p.upper_covers(x).len(),
        p.lower_covers(x).len(),
    )
}

fn poset_signature(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let mut sig: Vec<_> = (0..p.len()).map(|x| element_signature(p, x)).collect();
    sig.sort_unstable();
    sig
}

/// Backtracking search for an order isomorphism `a -> b`.
pub fn brute_force_isomorphic(a: &Poset, b: &Poset) -> bool {
    fn go(a: &Poset, b: &Poset, x: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.len();
        if x == n {
            return true;
        }
        let sig = element_signature(a, x);
        for y in 0..n {
            if used[y] || element_signature(b, y) != sig {
                continue;
            }
            let consistent =
                (0..x).all(|w| a.leq(w, x) == b.leq(map[w], y) && a.leq(x, w) == b.leq(y, map[w]));
            if !consistent {
                continue;
            }
            used[y] = true;
            map.push(y);
            if go(a, b, x + 1, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    a.len() == b.len()
        && poset_signature(a) == poset_signature(b)
        && go(a, b, 0, &mut Vec::new(), &mut vec![false; a.len()])
}

/// All lattices of size `n` up to isomorphism, by exhaustive filtering.
pub fn oracle_enumerate(n: usize) -> Result<Vec<Lattice>> {
    if n == 0 {
        return Err(Error::Size { n, max: ORACLE_MAX });
    }
    if n > ORACLE_MAX {
        return Err(Error::Resource { n, max: ORACLE_MAX });
    }
    let mut reps: Vec<Poset> = Vec::new();
    natural_posets(n, |down| {
        // A lattice has a unique minimal element, which a natural labeling
        // puts first; skip the rest cheaply.
        if down.iter().skip(1).any(|d| !d.contains(0)) {
            return;
        }
        let p = poset_from_strict_down(down);
        if !p.is_lattice() {
            return;
        }
        if !reps.iter().any(|r| brute_force_isomorphic(r, &p)) {
            reps.push(p);
        }
    });
    Ok(reps
        .into_iter()
        .map(|p| Lattice::from_poset(p).expect("filtered for latticehood"))
        .collect())
}
