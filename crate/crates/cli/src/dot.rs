//! Hasse diagrams as Graphviz DOT text.

use std::fmt::Write as _;

use frankl_core::Lattice;

/// Bottom-to-top digraph with one node per element and one edge per cover,
/// edges sorted by `(lower, upper)`.
pub fn to_dot(l: &Lattice) -> String {
    let mut s = String::from("digraph hasse { rankdir=BT;\n");
    for x in 0..l.len() {
        let _ = writeln!(s, "v{x};");
    }
    for c in l.covers() {
        let _ = writeln!(s, "v{} -> v{};", c.lower, c.upper);
    }
    s.push_str("}\n");
    s
}
