//! Shared inputs for the criterion benchmarks.

use frankl_core::enumerate::{enumerate_lattices, EnumConfig};
use frankl_core::Lattice;

/// Every lattice of size `n`, with the default configuration.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    enumerate_lattices(n, &EnumConfig::default()).expect("size within the default maximum")
}
