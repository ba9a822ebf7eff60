//! Necessary conditions on a smallest lattice violating the conjecture.
//!
//! Each condition is a predicate on a lattice with more than two elements.
//! A lattice failing any one of them cannot be a smallest counterexample.
//! Predicates return a [`Verdict`] whose witnesses are the violating
//! instantiations of the statement's quantifiers, sorted lexicographically.
//!
//! All irreducibility notions here count covers literally: bottom is never
//! join-irreducible and top is never meet-irreducible, but bottom is
//! meet-irreducible when it has a single atom (and dually for top). Reports
//! record those two extremal facts so that results depending on them can be
//! spotted.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalCert};
use crate::elemset::{ElemSet, ElementId};
use crate::error::{Error, Result};
use crate::lattice::{Convention, Lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionId {
    /// Each join-irreducible `j` over `x` has an upper cover `y` that is below
    /// no join-irreducible, has exactly two lower covers `j` and `z`, and
    /// `x < z`.
    JoinIrrUpperCover,
    /// Bottom has at least two atoms and top at least two dual atoms.
    ExtremalReducible,
    /// No meet-irreducible lies strictly below a join-irreducible.
    NoMeetIrrBelowJoinIrr,
    /// Doubly irreducibles have `2 |up(x)| = |L| + 1`.
    DoublyIrrUpSetSize,
    /// At most one doubly irreducible element.
    AtMostOneDoublyIrr,
    /// Every join-irreducible has `|up(j)|` greater than the length.
    JoinIrrUpSetExceedsLength,
    /// `|L| >= 2 (length + 1) - |doubly irreducibles|`.
    RivalInequality,
    /// Each doubly irreducible lies below some doubly reducible.
    DoublyIrrBelowDoublyRed,
    /// Interior elements are comparable with at least four others.
    ComparableWithFour,
    /// Every nonempty set `M` of meet-irreducibles has a join-irreducible
    /// below more than half of `M`.
    MeetIrrSubsetMajority,
    /// Some join-irreducible lies below more than half of all
    /// meet-irreducibles.
    MeetIrrMajority,
    /// Any two meet-irreducibles share a join-irreducible below both.
    MeetIrrPairsShareJoinIrr,
    /// A meet-irreducible atom lies below every other meet-irreducible.
    MeetIrrAtomBelowOthers,
    /// Every meet-irreducible is above a join-irreducible `j` with
    /// `2 |up(j)| = |L| + 1`.
    MeetIrrAboveBalancedJoinIrr,
    /// The incomparables of an interior element never form a chain.
    IncomparablesNotChain,
    /// Interior elements are incomparable with at least three others.
    IncomparableWithThree,
    /// The incomparables of an interior element never split into
    /// mutually incomparable chains.
    IncomparablesNotChainUnion,
    /// Small sublattice subposets have an interior element covering, or
    /// covered by, something outside them.
    SublatticeCoversOutside,
}

impl ConditionId {
    pub const ALL: [ConditionId; 18] = [
        ConditionId::JoinIrrUpperCover,
        ConditionId::ExtremalReducible,
        ConditionId::NoMeetIrrBelowJoinIrr,
        ConditionId::DoublyIrrUpSetSize,
        ConditionId::AtMostOneDoublyIrr,
        ConditionId::JoinIrrUpSetExceedsLength,
        ConditionId::RivalInequality,
        ConditionId::DoublyIrrBelowDoublyRed,
        ConditionId::ComparableWithFour,
        ConditionId::MeetIrrSubsetMajority,
        ConditionId::MeetIrrMajority,
        ConditionId::MeetIrrPairsShareJoinIrr,
        ConditionId::MeetIrrAtomBelowOthers,
        ConditionId::MeetIrrAboveBalancedJoinIrr,
        ConditionId::IncomparablesNotChain,
        ConditionId::IncomparableWithThree,
        ConditionId::IncomparablesNotChainUnion,
        ConditionId::SublatticeCoversOutside,
    ];

    /// Stable key used in reports and on the command line.
    pub fn key(self) -> &'static str {
        match self {
            ConditionId::JoinIrrUpperCover => "T2_1",
            ConditionId::ExtremalReducible => "C2_2_C2_4",
            ConditionId::NoMeetIrrBelowJoinIrr => "T2_3",
            ConditionId::DoublyIrrUpSetSize => "L2_5",
            ConditionId::AtMostOneDoublyIrr => "T2_6",
            ConditionId::JoinIrrUpSetExceedsLength => "T2_7",
            ConditionId::RivalInequality => "RIVAL",
            ConditionId::DoublyIrrBelowDoublyRed => "C2_8",
            ConditionId::ComparableWithFour => "OBS_CMP4",
            ConditionId::MeetIrrSubsetMajority => "T2_9",
            ConditionId::MeetIrrMajority => "C2_10",
            ConditionId::MeetIrrPairsShareJoinIrr => "C2_11",
            ConditionId::MeetIrrAtomBelowOthers => "ATOM_MI",
            ConditionId::MeetIrrAboveBalancedJoinIrr => "T2_12",
            ConditionId::IncomparablesNotChain => "T2_13",
            ConditionId::IncomparableWithThree => "C2_14",
            ConditionId::IncomparablesNotChainUnion => "CHAIN_UNION",
            ConditionId::SublatticeCoversOutside => "T2_15",
        }
    }

    pub fn from_key(key: &str) -> Option<ConditionId> {
        ConditionId::ALL.into_iter().find(|c| c.key() == key)
    }

    /// Stated without proof; its verdicts are informational.
    pub fn is_remark_level(self) -> bool {
        self == ConditionId::IncomparablesNotChainUnion
    }
}

impl std::fmt::Display for ConditionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    /// Part of an exponential quantifier was not explored and nothing failed
    /// in the part that was.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    /// Violating instantiations; nonempty exactly when the status is `Fails`.
    pub witnesses: Vec<Vec<ElementId>>,
    /// Subset-size cap applied, for the capped sweeps.
    pub cap: Option<usize>,
}

impl Verdict {
    fn from_witnesses(mut witnesses: Vec<Vec<ElementId>>) -> Verdict {
        witnesses.sort();
        witnesses.dedup();
        let status = if witnesses.is_empty() {
            Status::Holds
        } else {
            Status::Fails
        };
        Verdict {
            status,
            witnesses,
            cap: None,
        }
    }

    fn capped(witnesses: Vec<Vec<ElementId>>, cap: usize, incomplete: bool) -> Verdict {
        let mut v = Verdict::from_witnesses(witnesses);
        if v.status == Status::Holds && incomplete {
            v.status = Status::Skipped;
        }
        v.cap = Some(cap);
        v
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }
}

fn guard(l: &Lattice) -> Result<()> {
    if l.len() < 3 {
        return Err(Error::TooSmall { n: l.len(), min: 2 });
    }
    Ok(())
}

fn single(x: ElementId) -> Vec<ElementId> {
    vec![x]
}

fn failing<I, F>(xs: I, ok: F) -> Vec<Vec<ElementId>>
where
    I: IntoIterator<Item = ElementId>,
    F: Fn(ElementId) -> bool,
{
    xs.into_iter().filter(|&x| !ok(x)).map(single).collect()
}

pub fn join_irr_upper_cover(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let ji = l.join_irreducibles();
    let good_cover = |j: ElementId, y: ElementId| {
        let below = l.lower_covers(y);
        if below.len() != 2 || ji.iter().any(|js| l.leq(y, js)) {
            return false;
        }
        let x = l.lower_covers(j).first().unwrap();
        let z = below.difference(ElemSet::singleton(j)).first().unwrap();
        l.lt(x, z)
    };
    Ok(Verdict::from_witnesses(failing(ji, |j| {
        l.upper_covers(j).iter().any(|y| good_cover(j, y))
    })))
}

pub fn extremal_reducible(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let mut w = Vec::new();
    if l.upper_covers(l.bottom()).len() < 2 {
        w.push(single(l.bottom()));
    }
    if l.lower_covers(l.top()).len() < 2 {
        w.push(single(l.top()));
    }
    Ok(Verdict::from_witnesses(w))
}

pub fn no_meet_irr_below_join_irr(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let ji = l.join_irreducibles();
    let w = l
        .meet_irreducibles()
        .iter()
        .flat_map(|m| {
            ji.iter()
                .filter(move |&j| l.lt(m, j))
                .map(move |j| vec![m, j])
        })
        .collect();
    Ok(Verdict::from_witnesses(w))
}

pub fn doubly_irr_up_set_size(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let n = l.len();
    Ok(Verdict::from_witnesses(failing(
        l.doubly_irreducibles(),
        |x| 2 * l.up_set(x).len() == n + 1,
    )))
}

pub fn at_most_one_doubly_irr(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let di = l.doubly_irreducibles();
    let w = if di.len() > 1 {
        vec![di.to_vec()]
    } else {
        vec![]
    };
    Ok(Verdict::from_witnesses(w))
}

pub fn join_irr_up_set_exceeds_length(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let len = l.length();
    Ok(Verdict::from_witnesses(failing(
        l.join_irreducibles(),
        |j| l.up_set(j).len() > len,
    )))
}

/// `|L| >= 2 (length + 1) - |doubly irreducibles|` under the given
/// convention. Under [`Convention::Rival`] this holds for every finite
/// lattice. A failure is witnessed by a longest chain.
pub fn rival_inequality(l: &Lattice, convention: Convention) -> Verdict {
    let irr = l.profile(convention).doubly_irr.len() as i64;
    let rhs = 2 * (l.length() as i64 + 1) - irr;
    let w = if (l.len() as i64) >= rhs {
        vec![]
    } else {
        vec![l.longest_chain()]
    };
    Verdict::from_witnesses(w)
}

pub fn doubly_irr_below_doubly_red(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let dr = l.profile(Convention::Paper).doubly_red;
    Ok(Verdict::from_witnesses(failing(
        l.doubly_irreducibles(),
        |x| dr.iter().any(|w| l.lt(x, w)),
    )))
}

pub fn comparable_with_four(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    Ok(Verdict::from_witnesses(failing(l.interior(), |x| {
        l.up_set(x).len() + l.down_set(x).len() - 2 >= 4
    })))
}

fn majority_join_irr_exists(l: &Lattice, ji: ElemSet, m: ElemSet) -> bool {
    ji.iter()
        .any(|j| 2 * l.up_set(j).intersection(m).len() > m.len())
}

/// Single-set form: some join-irreducible lies below more than half of `m`.
pub fn meet_irr_subset_majority(l: &Lattice, m: ElemSet) -> Result<Verdict> {
    guard(l)?;
    let mi = l.meet_irreducibles();
    if m.is_empty() {
        return Err(Error::BadSubset("empty".into()));
    }
    if !m.is_subset(mi) {
        let bad = m.difference(mi).to_vec();
        return Err(Error::BadSubset(format!("{bad:?} not meet-irreducible")));
    }
    let w = if majority_join_irr_exists(l, l.join_irreducibles(), m) {
        vec![]
    } else {
        vec![m.to_vec()]
    };
    Ok(Verdict::from_witnesses(w))
}

/// Above this many meet-irreducibles only the capped and full sets are tried.
pub const SUBSET_SWEEP_MAX_BITS: usize = 20;

/// Every nonempty `M` of at most `cap` meet-irreducibles, plus the full set.
pub fn meet_irr_subset_sweep(l: &Lattice, cap: usize) -> Result<Verdict> {
    guard(l)?;
    let ji = l.join_irreducibles();
    let mi = l.meet_irreducibles();
    let elems = mi.to_vec();
    let k = elems.len();
    let mut w = Vec::new();
    if !majority_join_irr_exists(l, ji, mi) {
        w.push(elems.clone());
    }
    let incomplete = if k <= SUBSET_SWEEP_MAX_BITS {
        for bits in 1u64..(1u64 << k) {
            let size = bits.count_ones() as usize;
            if size > cap || size == k {
                continue;
            }
            let m: ElemSet = ElemSet(bits).iter().map(|i| elems[i]).collect();
            if !majority_join_irr_exists(l, ji, m) {
                w.push(m.to_vec());
            }
        }
        // Everything beyond the cap but short of the full set is unexplored.
        k > cap + 1
    } else {
        true
    };
    Ok(Verdict::capped(w, cap, incomplete))
}

pub fn meet_irr_majority(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    meet_irr_subset_majority(l, l.meet_irreducibles())
}

pub fn meet_irr_pairs_share_join_irr(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let ji = l.join_irreducibles();
    let mi = l.meet_irreducibles().to_vec();
    let mut w = Vec::new();
    for (i, &a) in mi.iter().enumerate() {
        for &b in &mi[i + 1..] {
            if !ji.iter().any(|j| l.leq(j, a) && l.leq(j, b)) {
                w.push(vec![a, b]);
            }
        }
    }
    Ok(Verdict::from_witnesses(w))
}

pub fn meet_irr_atom_below_others(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let mi = l.meet_irreducibles();
    let mut w = Vec::new();
    for a in l.atoms().intersection(mi) {
        for m in mi {
            if m != a && !l.lt(a, m) {
                w.push(vec![a, m]);
            }
        }
    }
    Ok(Verdict::from_witnesses(w))
}

pub fn meet_irr_above_balanced_join_irr(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    let n = l.len();
    let ji = l.join_irreducibles();
    Ok(Verdict::from_witnesses(failing(
        l.meet_irreducibles(),
        |m| {
            ji.iter()
                .any(|j| l.leq(j, m) && 2 * l.up_set(j).len() == n + 1)
        },
    )))
}

pub fn incomparables_not_chain(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    Ok(Verdict::from_witnesses(failing(l.interior(), |x| {
        !l.is_chain_within(l.incomparables(x), true)
    })))
}

pub fn incomparable_with_three(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    Ok(Verdict::from_witnesses(failing(l.interior(), |x| {
        l.incomparables(x).len() >= 3
    })))
}

pub fn incomparables_not_chain_union(l: &Lattice) -> Result<Verdict> {
    guard(l)?;
    Ok(Verdict::from_witnesses(failing(l.interior(), |x| {
        l.disjoint_chain_count(l.incomparables(x)).is_none()
    })))
}

/// Outcome of one sublattice-subposet check, without the latticehood test.
fn sublattice_check(l: &Lattice, s: ElemSet) -> bool {
    let n = l.len();
    let size = s.len();
    let s_bottom = s.iter().find(|&x| s.is_subset(l.up_set(x))).unwrap();
    let s_top = s.iter().find(|&x| s.is_subset(l.down_set(x))).unwrap();
    let small = 3 < size && size < 8;
    let high = 2 < size && size + 2 < n && l.dual_atoms().iter().any(|d| l.leq(d, s_top));
    if !small && !high {
        return true;
    }
    let outside = l.elements().difference(s);
    let mut inner = s;
    inner.remove(s_bottom);
    inner.remove(s_top);
    inner.iter().any(|x| {
        !l.upper_covers(x)
            .union(l.lower_covers(x))
            .intersection(outside)
            .is_empty()
    })
}

/// Single-set form; `s` must induce a lattice in the order of `l`.
pub fn sublattice_covers_outside(l: &Lattice, s: ElemSet) -> Result<Verdict> {
    guard(l)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(id) = s.difference(l.elements()).first() {
        return Err(Error::Range { id, n: l.len() });
    }
    if let Some((x, y, b)) = l.lattice_violation_within(s) {
        return Err(Error::NotALattice(x, y, b));
    }
    let w = if sublattice_check(l, s) {
        vec![]
    } else {
        vec![s.to_vec()]
    };
    Ok(Verdict::from_witnesses(w))
}

/// All sublattice subposets with at most `subset_cap` elements; lattices with
/// more than `lattice_cap` elements are skipped.
pub fn sublattice_sweep(l: &Lattice, subset_cap: usize, lattice_cap: usize) -> Result<Verdict> {
    guard(l)?;
    let n = l.len();
    if n > lattice_cap || n > SUBSET_SWEEP_MAX_BITS {
        return Ok(Verdict::capped(vec![], subset_cap, true));
    }
    // Largest subset either criterion can apply to.
    let relevant = 7.max(n.saturating_sub(3)).min(n);
    let max_size = subset_cap.min(relevant);
    let mut w = Vec::new();
    for bits in 1u64..(1u64 << n) {
        let size = bits.count_ones() as usize;
        if size < 3 || size > max_size {
            continue;
        }
        let s = ElemSet(bits);
        if l.lattice_violation_within(s).is_some() {
            continue;
        }
        if !sublattice_check(l, s) {
            w.push(s.to_vec());
        }
    }
    Ok(Verdict::capped(w, subset_cap, max_size < relevant))
}

/// Caps for the exponential quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest meet-irreducible subset tried (the full set is always tried).
    pub meet_subset: usize,
    /// Largest sublattice subposet tried.
    pub sublattice_subset: usize,
    /// Largest lattice on which sublattice subposets are swept at all.
    pub sublattice_lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            meet_subset: 12,
            sublattice_subset: 7,
            sublattice_lattice: 12,
        }
    }
}

/// How bottom and top were classified, recorded in every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalInfo {
    pub bottom: ElementId,
    pub top: ElementId,
    /// Bottom has exactly one atom, so counts as meet-irreducible.
    pub bottom_meet_irreducible: bool,
    /// Top has exactly one dual atom, so counts as join-irreducible.
    pub top_join_irreducible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub cert: CanonicalCert,
    pub n: usize,
    pub caps: Caps,
    pub extremal: ExtremalInfo,
    pub verdicts: BTreeMap<ConditionId, Verdict>,
}

impl ConditionReport {
    pub fn verdict(&self, id: ConditionId) -> &Verdict {
        &self.verdicts[&id]
    }

    pub fn failing(&self) -> Vec<ConditionId> {
        self.verdicts
            .iter()
            .filter(|(_, v)| v.fails())
            .map(|(&id, _)| id)
            .collect()
    }

    /// Failing any condition rules the lattice out as a smallest
    /// counterexample.
    pub fn excludes_minimal_counterexample(&self) -> bool {
        !self.failing().is_empty()
    }
}

pub fn evaluate(l: &Lattice, id: ConditionId, caps: &Caps) -> Result<Verdict> {
    guard(l)?;
    match id {
        ConditionId::JoinIrrUpperCover => join_irr_upper_cover(l),
        ConditionId::ExtremalReducible => extremal_reducible(l),
        ConditionId::NoMeetIrrBelowJoinIrr => no_meet_irr_below_join_irr(l),
        ConditionId::DoublyIrrUpSetSize => doubly_irr_up_set_size(l),
        ConditionId::AtMostOneDoublyIrr => at_most_one_doubly_irr(l),
        ConditionId::JoinIrrUpSetExceedsLength => join_irr_up_set_exceeds_length(l),
        ConditionId::RivalInequality => Ok(rival_inequality(l, Convention::Paper)),
        ConditionId::DoublyIrrBelowDoublyRed => doubly_irr_below_doubly_red(l),
        ConditionId::ComparableWithFour => comparable_with_four(l),
        ConditionId::MeetIrrSubsetMajority => meet_irr_subset_sweep(l, caps.meet_subset),
        ConditionId::MeetIrrMajority => meet_irr_majority(l),
        ConditionId::MeetIrrPairsShareJoinIrr => meet_irr_pairs_share_join_irr(l),
        ConditionId::MeetIrrAtomBelowOthers => meet_irr_atom_below_others(l),
        ConditionId::MeetIrrAboveBalancedJoinIrr => meet_irr_above_balanced_join_irr(l),
        ConditionId::IncomparablesNotChain => incomparables_not_chain(l),
        ConditionId::IncomparableWithThree => incomparable_with_three(l),
        ConditionId::IncomparablesNotChainUnion => incomparables_not_chain_union(l),
        ConditionId::SublatticeCoversOutside => {
            sublattice_sweep(l, caps.sublattice_subset, caps.sublattice_lattice)
        }
    }
}

/// Run every condition on `l`.
pub fn evaluate_all(l: &Lattice, caps: &Caps) -> Result<ConditionReport> {
    guard(l)?;
    let verdicts = ConditionId::ALL
        .into_iter()
        .map(|id| evaluate(l, id, caps).map(|v| (id, v)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(ConditionReport {
        cert: canonical_form(l),
        n: l.len(),
        caps: *caps,
        extremal: ExtremalInfo {
            bottom: l.bottom(),
            top: l.top(),
            bottom_meet_irreducible: l.is_meet_irreducible(l.bottom()),
            top_join_irreducible: l.is_join_irreducible(l.top()),
        },
        verdicts,
    })
}

/// Interior elements with at most two incomparables where those
/// incomparables neither form a chain nor are two doubly irreducibles.
pub fn small_incomparability_violations(l: &Lattice) -> Vec<ElementId> {
    let di = l.doubly_irreducibles();
    l.interior()
        .iter()
        .filter(|&x| {
            let inc = l.incomparables(x);
            inc.len() <= 2
                && !l.is_chain_within(inc, true)
                && !(inc.len() == 2 && inc.is_subset(di))
        })
        .collect()
}
