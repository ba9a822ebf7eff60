//! The `LATTICE v1` text format.
//!
//! ```text
//! # comment
//! lattice 3
//! 0 1
//! 1 2
//! ```
//!
//! A block starts with `lattice <n>`; each following `<a> <b>` line says that
//! `b` upper covers `a`. A file may hold several blocks. Blocks are read in
//! strict mode: redundant or repeated pairs are rejected, and so is anything
//! that is not a lattice (which covers multiple bottoms or tops).

use std::fmt::Write as _;

use frankl_core::{Lattice, MAX_ELEMENTS};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

struct Block {
    line: usize,
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Block {
    fn finish(self) -> Result<Lattice, ParseError> {
        Lattice::from_covers(self.n, &self.pairs)
            .map_err(|e| err(self.line, format!("lattice {}: {e}", self.n)))
    }
}

fn parse_id(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let id: usize = tok
        .parse()
        .map_err(|_| err(line, format!("expected an element id, found {tok:?}")))?;
    if id >= n {
        return Err(err(
            line,
            format!("element {id} out of range for {n} elements"),
        ));
    }
    Ok(id)
}

/// Every lattice block in `text`, in file order.
pub fn parse_lattices(text: &str) -> Result<Vec<Lattice>, ParseError> {
    let mut out = Vec::new();
    let mut cur: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks[0] == "lattice" {
            if toks.len() != 2 {
                return Err(err(line, "expected `lattice <n>`"));
            }
            let n: usize = toks[1]
                .parse()
                .map_err(|_| err(line, format!("bad size {:?}", toks[1])))?;
            if n == 0 || n > MAX_ELEMENTS {
                return Err(err(
                    line,
                    format!("size must be in 1..={MAX_ELEMENTS}, got {n}"),
                ));
            }
            if let Some(b) = cur.take() {
                out.push(b.finish()?);
            }
            cur = Some(Block {
                line,
                n,
                pairs: Vec::new(),
            });
            continue;
        }
        let block = cur
            .as_mut()
            .ok_or_else(|| err(line, "cover pair before any `lattice <n>` line"))?;
        if toks.len() != 2 {
            return Err(err(line, "expected `<lower> <upper>`"));
        }
        let a = parse_id(toks[0], block.n, line)?;
        let b = parse_id(toks[1], block.n, line)?;
        block.pairs.push((a, b));
    }
    match cur {
        Some(b) => out.push(b.finish()?),
        None if out.is_empty() => return Err(err(0, "no `lattice <n>` block found")),
        None => {}
    }
    Ok(out)
}

/// One block, covers in sorted order.
pub fn write_lattice(l: &Lattice) -> String {
    let mut s = format!("lattice {}\n", l.len());
    for c in l.covers() {
        let _ = writeln!(s, "{} {}", c.lower, c.upper);
    }
    s
}

/// A whole file: a format comment, then blocks separated by blank lines.
pub fn write_lattices(ls: &[Lattice]) -> String {
    let mut s = String::from("# LATTICE v1\n");
    for l in ls {
        s.push('\n');
        s.push_str(&write_lattice(l));
    }
    s
}
