//! Small named lattices used throughout the tests and the CLI.
//!
//! Element 0 is always the bottom.

use crate::lattice::Lattice;

fn build(n: usize, covers: &[(usize, usize)]) -> Lattice {
    Lattice::from_covers(n, covers).expect("fixture is a lattice")
}

/// The `n`-element chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Lattice {
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &covers)
}

/// Subsets of a `k`-set ordered by inclusion; element ids are bitmasks.
pub fn boolean(k: u32) -> Lattice {
    let n = 1usize << k;
    let mut covers = Vec::new();
    for x in 0..n {
        for b in 0..k {
            if x & (1 << b) == 0 {
                covers.push((x, x | (1 << b)));
            }
        }
    }
    build(n, &covers)
}

pub fn c2() -> Lattice {
    chain(2)
}

pub fn c3() -> Lattice {
    chain(3)
}

pub fn b2() -> Lattice {
    build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

pub fn m3() -> Lattice {
    build(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

pub fn n5() -> Lattice {
    build(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
}

pub fn b3() -> Lattice {
    boolean(3)
}

/// Double diamond: `0 < a=1, b=2 < m=3 < c=4, d=5 < t=6`.
pub fn dd() -> Lattice {
    build(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    )
}

/// `0 < x1=1, x2=2 < m=3 < j=4 < y1=5, y2=6 < t=7`.
pub fn mix8() -> Lattice {
    build(
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    )
}

/// Every named fixture with its name.
pub fn named() -> Vec<(&'static str, Lattice)> {
    vec![
        ("C2", c2()),
        ("C3", c3()),
        ("B2", b2()),
        ("M3", m3()),
        ("N5", n5()),
        ("B3", b3()),
        ("DD", dd()),
        ("MIX8", mix8()),
    ]
}

pub fn by_name(name: &str) -> Option<Lattice> {
    named()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, l)| l)
}

pub fn all() -> Vec<Lattice> {
    named().into_iter().map(|(_, l)| l).collect()
}
