use thiserror::Error;

use crate::elemset::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {id} out of range for a poset of {n} elements")]
    Range { id: usize, n: usize },

    #[error("poset must have between 1 and {max} elements, got {n}")]
    Size { n: usize, max: usize },

    #[error("order relation has a cycle through {0} and {1}")]
    Cycle(ElementId, ElementId),

    #[error("cover pair ({0}, {1}) is implied by the other pairs")]
    RedundantCover(ElementId, ElementId),

    #[error("order relation is not transitive: {0} <= {1} is implied but missing")]
    NotTransitive(ElementId, ElementId),

    #[error("not a lattice: elements {0} and {1} lack a {2}")]
    NotALattice(ElementId, ElementId, Bound),

    #[error("element set must be nonempty")]
    EmptySet,

    #[error("element {0} is not {1}-irreducible")]
    NotIrreducible(ElementId, Side),

    #[error("operation needs a lattice with more than {min} elements, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("subset is not a nonempty set of meet-irreducible elements: {0}")]
    BadSubset(String),

    #[error("size {n} exceeds the configured maximum {max}")]
    Resource { n: usize, max: usize },
}

/// Which bound a pair is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Join,
    Meet,
}

/// Join side or meet side of a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Join,
    Meet,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Bound::Join => "join",
            Bound::Meet => "meet",
        })
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Join => "join",
            Side::Meet => "meet",
        })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
