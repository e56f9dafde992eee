//! The `pcdg` text format.
//!
//! ```text
//! pcdg 1
//! n 4
//! v 1 c : 3
//! v 2 u : 1
//! v 3 u :
//! v 4 u : 2
//! ```
//!
//! Line one is the magic and version, line two the vertex count, then one
//! line per vertex giving its complement bit (`c` or `u`) and its list
//! entries. Sentinels are implicit. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored. Entries may appear in any order.
//! Serialized output is canonical: vertices and entries ascending, single
//! spaces, trailing newline.

use std::fmt::{self, Write as _};

use crate::graph::{build_pc_lists, PcDigraph};

pub const MAGIC: &str = "pcdg";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; points one past the last line for errors found at the end.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

pub fn parse(text: &str) -> Result<PcDigraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let last_line = text.lines().count() + 1;

    let Some((ln, header)) = lines.next() else {
        return err(1, "empty input, expected `pcdg 1`");
    };
    match header.split_whitespace().collect::<Vec<_>>()[..] {
        [MAGIC, version] if version == VERSION.to_string() => {}
        [MAGIC, version] => return err(ln, format!("unsupported version `{version}`")),
        _ => return err(ln, "expected header `pcdg 1`"),
    }

    let Some((ln, size)) = lines.next() else {
        return err(last_line, "missing `n <N>` line");
    };
    let n: u32 = match size.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse()
            .or_else(|_| err(ln, format!("invalid vertex count `{count}`")))?,
        _ => return err(ln, "expected `n <N>`"),
    };
    if n == 0 {
        return err(ln, "n must be ≥ 1");
    }

    let mut complemented = vec![false; n as usize];
    let mut seen = vec![false; n as usize];
    let mut entries = Vec::new();
    let mut mark = vec![0u32; n as usize + 1];
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        if tok.next() != Some("v") {
            return err(ln, "expected `v <id> <c|u> : <entries>`");
        }
        let v = parse_id(tok.next(), n, ln)?;
        if std::mem::replace(&mut seen[v as usize - 1], true) {
            return err(ln, format!("duplicate line for vertex {v}"));
        }
        complemented[v as usize - 1] = match tok.next() {
            Some("c") => true,
            Some("u") => false,
            _ => {
                return err(
                    ln,
                    format!("vertex {v}: complement flag must be `c` or `u`"),
                )
            }
        };
        if tok.next() != Some(":") {
            return err(ln, format!("vertex {v}: expected `:` before entries"));
        }
        for t in tok {
            let w = parse_id(Some(t), n, ln)?;
            if w == v {
                return err(ln, format!("vertex {v} lists itself"));
            }
            if std::mem::replace(&mut mark[w as usize], v) == v {
                return err(ln, format!("entry ({v}, {w}) appears more than once"));
            }
            entries.push((v, w));
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return err(
            last_line,
            format!("missing line for vertex {}", missing + 1),
        );
    }

    build_pc_lists(n, &entries, &complemented).or_else(|e| err(last_line, e.to_string()))
}

fn parse_id(tok: Option<&str>, n: u32, line: usize) -> Result<u32, ParseError> {
    let Some(tok) = tok else {
        return err(line, "missing vertex id");
    };
    match tok.parse::<u32>() {
        Ok(id) if (1..=n).contains(&id) => Ok(id),
        Ok(id) => err(line, format!("vertex id {id} is out of range 1..={n}")),
        Err(_) => err(line, format!("invalid vertex id `{tok}`")),
    }
}

/// Canonical text of `g`.
pub fn serialize(g: &PcDigraph) -> String {
    let mut out = format!("{MAGIC} {VERSION}\nn {}\n", g.n());
    for v in g.vertices() {
        let flag = if g.is_complemented(v) { 'c' } else { 'u' };
        write!(out, "v {v} {flag} :").unwrap();
        for w in g.entries(v) {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
    }
    out
}
