//! Finite posets stored as up-set/down-set bitmasks.
//!
//! The reflexive order relation is the single source of truth: the cover
//! relation (the Hasse diagram) is always derived from it by transitive
//! reduction, never carried separately.

use serde::{Deserialize, Serialize};

use crate::elemset::{ElemSet, ElementId, MAX_ELEMENTS};
use crate::error::{Bound, Error, Result};

/// `upper` covers `lower`: `lower < upper` with nothing strictly between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverPair {
    pub lower: ElementId,
    pub upper: ElementId,
}

impl CoverPair {
    pub fn new(lower: ElementId, upper: ElementId) -> Self {
        CoverPair { lower, upper }
    }
}

impl From<(ElementId, ElementId)> for CoverPair {
    fn from((lower, upper): (ElementId, ElementId)) -> Self {
        CoverPair { lower, upper }
    }
}

/// How strictly input pairs are checked when building a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverMode {
    /// Every pair must be a cover of the resulting order; duplicates and
    /// transitively implied pairs are rejected.
    #[default]
    Strict,
    /// Pairs are arbitrary order relations; the closure is reduced.
    Relaxed,
}

/// Mapping between the ids of a poset and the ids of a derived poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    /// `new_to_old[i]` is the parent id of derived element `i`.
    pub new_to_old: Vec<ElementId>,
    /// Inverse map; `None` for parent elements that were dropped.
    pub old_to_new: Vec<Option<ElementId>>,
}

impl Relabel {
    fn from_subset(parent_n: usize, kept: ElemSet) -> Self {
        let new_to_old = kept.to_vec();
        let mut old_to_new = vec![None; parent_n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Relabel {
            new_to_old,
            old_to_new,
        }
    }

    /// Translate a set of derived ids back to parent ids.
    pub fn to_old_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.new_to_old[x]).collect()
    }

    /// Compose `self` (parent -> child) with `next` (child -> grandchild).
    pub fn then(&self, next: &Relabel) -> Relabel {
        let new_to_old = next
            .new_to_old
            .iter()
            .map(|&c| self.new_to_old[c])
            .collect();
        let old_to_new = self
            .old_to_new
            .iter()
            .map(|c| c.and_then(|c| next.old_to_new[c]))
            .collect();
        Relabel {
            new_to_old,
            old_to_new,
        }
    }
}

/// A finite partial order on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    upper_covers: Vec<ElemSet>,
    lower_covers: Vec<ElemSet>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ELEMENTS {
        return Err(Error::Size {
            n,
            max: MAX_ELEMENTS,
        });
    }
    Ok(())
}

impl Poset {
    /// Build a poset from cover pairs `(a, b)` meaning `b` upper covers `a`.
    pub fn from_covers<P>(n: usize, pairs: &[P]) -> Result<Poset>
    where
        P: Copy + Into<CoverPair>,
    {
        Self::from_pairs(n, pairs, CoverMode::Strict)
    }

    /// Build a poset from arbitrary relations `a < b`, closing and reducing.
    pub fn from_relations<P>(n: usize, pairs: &[P]) -> Result<Poset>
    where
        P: Copy + Into<CoverPair>,
    {
        Self::from_pairs(n, pairs, CoverMode::Relaxed)
    }

    pub fn from_pairs<P>(n: usize, pairs: &[P], mode: CoverMode) -> Result<Poset>
    where
        P: Copy + Into<CoverPair>,
    {
        check_size(n)?;
        let pairs: Vec<CoverPair> = pairs.iter().map(|&p| p.into()).collect();
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for p in &pairs {
            for id in [p.lower, p.upper] {
                if id >= n {
                    return Err(Error::Range { id, n });
                }
            }
            if p.lower == p.upper {
                if mode == CoverMode::Strict {
                    return Err(Error::Cycle(p.lower, p.upper));
                }
                continue;
            }
            up[p.lower].insert(p.upper);
        }
        close(&mut up);
        let poset = Self::from_closed(up)?;
        if mode == CoverMode::Strict {
            let mut seen = std::collections::HashSet::new();
            for p in &pairs {
                if !seen.insert(*p) || !poset.is_cover(p.lower, p.upper) {
                    return Err(Error::RedundantCover(p.lower, p.upper));
                }
            }
        }
        Ok(poset)
    }

    /// Build from reflexive-transitive up-sets, checking antisymmetry.
    pub fn from_up_sets(up: Vec<ElemSet>) -> Result<Poset> {
        check_size(up.len())?;
        let n = up.len();
        for (x, &u) in up.iter().enumerate() {
            if !u.contains(x) {
                return Err(Error::Cycle(x, x));
            }
            if !u.is_subset(ElemSet::full(n)) {
                let id = u.difference(ElemSet::full(n)).first().unwrap();
                return Err(Error::Range { id, n });
            }
        }
        let mut closed = up.clone();
        close(&mut closed);
        if closed != up {
            let x = (0..n).find(|&x| closed[x] != up[x]).unwrap();
            let y = closed[x].difference(up[x]).first().unwrap();
            return Err(Error::NotTransitive(x, y));
        }
        Self::from_closed(up)
    }

    fn from_closed(up: Vec<ElemSet>) -> Result<Poset> {
        let n = up.len();
        let mut down = vec![ElemSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in *row {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            let both = up[x].intersection(down[x]);
            if both.len() > 1 {
                let y = both.difference(ElemSet::singleton(x)).first().unwrap();
                return Err(Error::Cycle(x.min(y), x.max(y)));
            }
        }
        Ok(Self::from_closed_unchecked(up, down))
    }

    fn from_closed_unchecked(up: Vec<ElemSet>, down: Vec<ElemSet>) -> Poset {
        let n = up.len();
        let mut upper_covers = vec![ElemSet::EMPTY; n];
        let mut lower_covers = vec![ElemSet::EMPTY; n];
        for x in 0..n {
            let strict = up[x].difference(ElemSet::singleton(x));
            let mut above_strict = ElemSet::EMPTY;
            for y in strict {
                above_strict = above_strict.union(up[y].difference(ElemSet::singleton(y)));
            }
            let covers = strict.difference(above_strict);
            upper_covers[x] = covers;
            for y in covers {
                lower_covers[y].insert(x);
            }
        }
        Poset {
            n,
            up,
            down,
            upper_covers,
            lower_covers,
        }
    }

    /// Element count.
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; posets have at least one element.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y | x <= y}`
    #[inline]
    pub fn up_set(&self, x: ElementId) -> ElemSet {
        self.up[x]
    }

    /// `{y | y <= x}`
    #[inline]
    pub fn down_set(&self, x: ElementId) -> ElemSet {
        self.down[x]
    }

    /// Elements comparable with `x` in neither direction.
    pub fn incomparables(&self, x: ElementId) -> ElemSet {
        self.elements().difference(self.up[x].union(self.down[x]))
    }

    #[inline]
    pub fn upper_covers(&self, x: ElementId) -> ElemSet {
        self.upper_covers[x]
    }

    #[inline]
    pub fn lower_covers(&self, x: ElementId) -> ElemSet {
        self.lower_covers[x]
    }

    #[inline]
    pub fn is_cover(&self, lower: ElementId, upper: ElementId) -> bool {
        self.upper_covers[lower].contains(upper)
    }

    /// The cover relation, sorted by `(lower, upper)`.
    pub fn covers(&self) -> Vec<CoverPair> {
        (0..self.n)
            .flat_map(|x| {
                self.upper_covers[x]
                    .iter()
                    .map(move |y| CoverPair::new(x, y))
            })
            .collect()
    }

    /// The order as a dense boolean matrix, `m[x][y] == (x <= y)`.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    pub fn minimal_elements(&self) -> ElemSet {
        (0..self.n).filter(|&x| self.down[x].len() == 1).collect()
    }

    pub fn maximal_elements(&self) -> ElemSet {
        (0..self.n).filter(|&x| self.up[x].len() == 1).collect()
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<ElementId> {
        let mut order: Vec<ElementId> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    /// Longest chain through `x` from below, counted in cover steps.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.n];
        for x in self.linear_extension() {
            rank[x] = self.lower_covers[x]
                .iter()
                .map(|y| rank[y] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    /// One less than the size of a longest chain.
    pub fn length(&self) -> usize {
        self.ranks().into_iter().max().unwrap_or(0)
    }

    /// A longest chain, bottom first, choosing smallest ids on ties.
    pub fn longest_chain(&self) -> Vec<ElementId> {
        // Height above each element, then walk up from the lowest start.
        let mut height = vec![0usize; self.n];
        for x in self.linear_extension().into_iter().rev() {
            height[x] = self.upper_covers[x]
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        let best = height.iter().copied().max().unwrap_or(0);
        let mut cur = (0..self.n).find(|&x| height[x] == best).unwrap();
        let mut chain = vec![cur];
        while height[cur] > 0 {
            cur = self.upper_covers[cur]
                .iter()
                .find(|&y| height[y] + 1 == height[cur])
                .unwrap();
            chain.push(cur);
        }
        chain
    }

    /// Order restricted to `s`, with covers recomputed from the restriction.
    pub fn induced_subposet(&self, s: ElemSet) -> Result<(Poset, Relabel)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(id) = s.difference(self.elements()).first() {
            return Err(Error::Range { id, n: self.n });
        }
        let relabel = Relabel::from_subset(self.n, s);
        let squash = |set: ElemSet| -> ElemSet {
            set.intersection(s)
                .iter()
                .map(|x| relabel.old_to_new[x].unwrap())
                .collect()
        };
        let up: Vec<ElemSet> = relabel
            .new_to_old
            .iter()
            .map(|&x| squash(self.up[x]))
            .collect();
        let down: Vec<ElemSet> = relabel
            .new_to_old
            .iter()
            .map(|&x| squash(self.down[x]))
            .collect();
        Ok((Self::from_closed_unchecked(up, down), relabel))
    }

    /// Same poset with `x` relabeled to `perm[x]`.
    pub fn relabel(&self, perm: &[ElementId]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut up = vec![ElemSet::EMPTY; self.n];
        let mut down = vec![ElemSet::EMPTY; self.n];
        for x in 0..self.n {
            up[perm[x]] = self.up[x].iter().map(|y| perm[y]).collect();
            down[perm[x]] = self.down[x].iter().map(|y| perm[y]).collect();
        }
        Self::from_closed_unchecked(up, down)
    }

    /// The order-dual poset.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            upper_covers: self.lower_covers.clone(),
            lower_covers: self.upper_covers.clone(),
        }
    }

    /// Whether `s` is linearly ordered. The empty set counts as a chain only
    /// when `treat_empty_as_chain` is set; singletons always do.
    pub fn is_chain_within(&self, s: ElemSet, treat_empty_as_chain: bool) -> bool {
        if s.is_empty() {
            return treat_empty_as_chain;
        }
        s.iter()
            .all(|x| s.is_subset(self.up[x].union(self.down[x])))
    }

    pub fn is_chain(&self) -> bool {
        self.is_chain_within(self.elements(), true)
    }

    /// Connected components of the comparability graph restricted to `s`,
    /// each listed as a set, ordered by smallest member.
    pub fn comparability_components(&self, s: ElemSet) -> Vec<ElemSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(seed) = rest.first() {
            let mut comp = ElemSet::singleton(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = ElemSet::EMPTY;
                for x in frontier {
                    next = next.union(self.up[x].union(self.down[x]));
                }
                next = next.intersection(s).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// `Some(k)` when `s` splits into `k` mutually incomparable chains.
    pub fn disjoint_chain_count(&self, s: ElemSet) -> Option<usize> {
        let comps = self.comparability_components(s);
        comps
            .iter()
            .all(|&c| self.is_chain_within(c, true))
            .then_some(comps.len())
    }

    pub fn is_disjoint_union_of_chains(&self) -> Option<usize> {
        self.disjoint_chain_count(self.elements())
    }

    /// Least upper bound of `x` and `y` among `within`, if one exists.
    pub fn join_within(&self, x: ElementId, y: ElementId, within: ElemSet) -> Option<ElementId> {
        let ub = self.up[x].intersection(self.up[y]).intersection(within);
        ub.iter().find(|&z| ub.is_subset(self.up[z]))
    }

    /// Greatest lower bound of `x` and `y` among `within`, if one exists.
    pub fn meet_within(&self, x: ElementId, y: ElementId, within: ElemSet) -> Option<ElementId> {
        let lb = self.down[x].intersection(self.down[y]).intersection(within);
        lb.iter().find(|&z| lb.is_subset(self.down[z]))
    }

    /// First pair in `within` (lexicographic, `x < y`) missing a join or a
    /// meet inside `within`; joins are checked before meets.
    pub fn lattice_violation_within(
        &self,
        within: ElemSet,
    ) -> Option<(ElementId, ElementId, Bound)> {
        let elems = within.to_vec();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i + 1..] {
                if self.join_within(x, y, within).is_none() {
                    return Some((x, y, Bound::Join));
                }
                if self.meet_within(x, y, within).is_none() {
                    return Some((x, y, Bound::Meet));
                }
            }
        }
        None
    }

    pub fn lattice_violation(&self) -> Option<(ElementId, ElementId, Bound)> {
        self.lattice_violation_within(self.elements())
    }

    /// Whether every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }
}

/// Reflexive-transitive closure in place (Warshall over bit rows).
fn close(up: &mut [ElemSet]) {
    let n = up.len();
    for k in 0..n {
        let row = up[k];
        for r in up.iter_mut() {
            if r.contains(k) {
                *r = r.union(row);
            }
        }
    }
}
