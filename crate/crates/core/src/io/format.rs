//! graph6 (short form only) and a plain edge-list format.
//!
//! graph6: one byte `n + 63`, then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian six bits per
//! byte, each byte offset by 63, final byte zero-padded.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Cap, Error, Result};
use crate::Graph;

/// Largest order the one-byte graph6 header can express.
pub const GRAPH6_SHORT_MAX: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Graph6 => to_graph6(g).map(String::into_bytes),
        Format::Edgelist => Ok(to_edgelist(g).into_bytes()),
    }
}

/// Parses a single graph6 token. One trailing LF (or CRLF) is accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = strip_newline(text);
    let Some(&first) = text.first() else {
        return Err(Error::parse(0, "empty graph6 token"));
    };
    check_char(first, 0)?;
    if first == 126 {
        return Err(Error::parse(
            0,
            "graph6 long form (n > 62) is not supported",
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::parse(0, "graph6 token encodes the null graph"));
    }
    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &text[1..];
    if body.len() < body_len {
        return Err(Error::parse(
            text.len(),
            format!("truncated: expected {body_len} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(Error::parse(1 + body_len, "trailing bytes after graph6 token"));
    }
    for (i, &c) in body.iter().enumerate() {
        check_char(c, 1 + i)?;
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[body_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(body_len, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(rows))
}

fn strip_newline(text: &[u8]) -> &[u8] {
    let text = text.strip_suffix(b"\n").unwrap_or(text);
    text.strip_suffix(b"\r").unwrap_or(text)
}

fn check_char(c: u8, offset: usize) -> Result<()> {
    if (63..=126).contains(&c) {
        Ok(())
    } else {
        Err(Error::parse(
            offset,
            format!("byte 0x{c:02x} outside the graph6 range 63..=126"),
        ))
    }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    Error::check_cap(Cap::Graph6, GRAPH6_SHORT_MAX, n)?;
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Identity string used in reports; falls back to the edge list for
/// graphs too large for the short form.
pub fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("n={};edges={:?}", g.n(), g.edges()))
}

/// `n` on the first line, then one `u v` pair per line. Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edgelist(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text)
        .map_err(|e| Error::parse(e.valid_up_to(), "edge list is not valid UTF-8"))?;
    let mut offset = 0;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut fields = body.split_whitespace();
        let parse_field = |f: Option<&str>| -> Result<usize> {
            let f = f.ok_or_else(|| Error::parse(start, "missing field"))?;
            f.parse::<usize>()
                .map_err(|_| Error::parse(start, format!("not a vertex count or index: {f:?}")))
        };
        match n {
            None => {
                let count = parse_field(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::parse(start, "header line must hold only the vertex count"));
                }
                if count == 0 || count > crate::graph::MAX_VERTICES {
                    return Err(Error::parse(start, format!("vertex count {count} outside 1..=64")));
                }
                n = Some(count);
            }
            Some(count) => {
                let u = parse_field(fields.next())?;
                let v = parse_field(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::parse(start, "trailing fields on edge line"));
                }
                if u >= count || v >= count {
                    return Err(Error::parse(
                        start,
                        format!("edge ({u}, {v}) out of range for n = {count}"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(start, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing vertex count line"))?;
    Graph::new(n, &edges)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a graph6 file: one graph per line, an optional `>>graph6<<`
/// header on the first line. Offsets in errors are file offsets.
pub fn parse_graph6_file(text: &[u8]) -> Result<Vec<Graph>> {
    Graph6Lines::new(text).collect()
}

/// Lazily yields graphs from graph6 text.
pub struct Graph6Lines<'a> {
    text: &'a [u8],
    offset: usize,
}

impl<'a> Graph6Lines<'a> {
    pub fn new(text: &'a [u8]) -> Self {
        let header = b">>graph6<<";
        let offset = if text.starts_with(header) { header.len() } else { 0 };
        Graph6Lines { text, offset }
    }
}

impl Iterator for Graph6Lines<'_> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            if self.offset >= self.text.len() {
                return None;
            }
            let rest = &self.text[self.offset..];
            let end = rest.iter().position(|&b| b == b'\n').unwrap_or(rest.len());
            let line = &rest[..end];
            let start = self.offset;
            self.offset += (end + 1).min(rest.len());
            let line = line.strip_suffix(b"\r").unwrap_or(line);
            if line.is_empty() {
                continue;
            }
            return Some(parse_graph6(line).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: start + offset,
                    message,
                },
                other => other,
            }));
        }
    }
}
