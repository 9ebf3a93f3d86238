//! graph6 and DIMACS edge-format readers and writers.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

const G6_HEADER: &str = ">>graph6<<";

/// Interchange formats understood by the readers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "dimacs" | "col" | "clq" | "edge" => Some(Format::Dimacs),
            _ => None,
        }
    }

    /// Guesses the format from content: DIMACS lines start with `c`, `p` or `e`
    /// followed by whitespace, which never happens in graph6.
    pub fn sniff(text: &str) -> Format {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        let mut chars = first.chars();
        match (chars.next(), chars.next()) {
            (Some('c' | 'p' | 'e'), Some(c)) if c.is_whitespace() => Format::Dimacs,
            (Some('c'), None) => Format::Dimacs,
            _ => Format::Graph6,
        }
    }

    pub fn parse(self, text: &str) -> Result<Vec<Graph>> {
        match self {
            Format::Graph6 => parse_graph6_lines(text),
            Format::Dimacs => parse_dimacs(text).map(|g| vec![g]),
        }
    }

    pub fn write(self, g: &Graph) -> String {
        match self {
            Format::Graph6 => {
                let mut s = to_graph6(g);
                s.push('\n');
                s
            }
            Format::Dimacs => to_dimacs(g),
        }
    }
}

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(G6_HEADER) {
        Some(rest) => (G6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(malformed(base, "empty input"));
    }
    if body[0] == b':' || body[0] == b'&' {
        return Err(malformed(base, "sparse6/digraph6 input is not graph6"));
    }
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(base + pos, format!("byte {:#04x} outside 63..=126", body[pos])));
    }
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        return Err(malformed(base + 1, "8-byte order header exceeds supported size"));
    } else {
        if body.len() < 4 {
            return Err(malformed(base + body.len(), "truncated order header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(malformed(base, "non-minimal order header"));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != pos + need {
        return Err(malformed(
            base + body.len().min(pos + need),
            format!("expected {} data bytes, found {}", need, body.len() - pos),
        ));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        pos += need - 1;
        let pad = (body[pos] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(malformed(base + pos, "nonzero padding bits"));
        }
    }
    Ok(b.build())
}

/// Parses every non-empty line as a graph6 graph.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.trim().is_empty() {
            out.push(parse_graph6(trimmed).map_err(|e| match e {
                Error::MalformedGraph6 { offset: o, reason } => {
                    Error::MalformedGraph6 { offset: offset + o, reason }
                }
                other => other,
            })?);
        }
        offset += line.len();
    }
    if out.is_empty() {
        return Err(malformed(0, "empty input"));
    }
    Ok(out)
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Reads the DIMACS edge format (`p edge n m`, `e u v` with 1-based ids).
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |reason: &str| Error::MalformedDimacs { line: line_no, reason: reason.into() };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if builder.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let _kind = parts.next().ok_or_else(|| err("missing format token"))?;
                let n: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad vertex count"))?;
                if n > MAX_VERTICES {
                    return Err(Error::TooLarge(n));
                }
                builder = Some(GraphBuilder::new(n)?);
            }
            Some("e") => {
                let b = builder.as_mut().ok_or_else(|| err("edge before problem line"))?;
                let mut endpoint = || -> Result<usize> {
                    let v: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("bad endpoint"))?;
                    if v == 0 {
                        return Err(err("vertex ids are 1-based"));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint()?, endpoint()?);
                b.try_add_edge(u, v)?;
            }
            _ => return Err(err("unrecognised line")),
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or(Error::MalformedDimacs { line: 0, reason: "missing problem line".into() })
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}
