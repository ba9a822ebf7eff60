//! Finite lattices and the lattice form of the union-closed sets conjecture.
//!
//! The crate is organised bottom-up:
//!
//! - [`order`] and [`lattice`]: posets, lattices, covers, irreducibles.
//! - [`removal`]: deleting irreducible elements and the facts that keep the
//!   result a lattice.
//! - [`frankl`]: the conjecture check and exhaustive sweeps.
//! - [`conditions`]: necessary conditions on a smallest counterexample.
//! - [`canon`] and [`enumerate`]: canonical forms and isomorph-free
//!   generation of all lattices of a given size.

pub mod canon;
pub mod conditions;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod frankl;
pub mod lattice;
pub mod order;
pub mod removal;

pub use canon::{are_isomorphic, canonical_form, CanonicalCert};
pub use conditions::{evaluate_all, Caps, ConditionId, ConditionReport, Status, Verdict};
pub use elemset::{ElemSet, ElementId, MAX_ELEMENTS};
pub use enumerate::{doubly_irreducible_census, enumerate_lattices, oracle_enumerate, EnumConfig};
pub use error::{Bound, Error, Result, Side};
pub use frankl::{counterexample_sweep, frankl_witnesses, satisfies_conjecture, SweepReport};
pub use lattice::{Convention, IrreducibleProfile, Lattice};
pub use order::{CoverMode, CoverPair, Poset, Relabel};
