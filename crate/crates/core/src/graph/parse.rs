use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Domain(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// graph6 if the first line starts with a byte >= 63 and has no interior
    /// whitespace, edge list otherwise.
    pub fn sniff(text: &str) -> GraphFormat {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        match line.bytes().next() {
            Some(b) if b >= 63 && !line.contains(char::is_whitespace) => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

/// Parses `text` in the given format, sniffing it when `format` is `None`.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    match format.unwrap_or_else(|| GraphFormat::sniff(text)) {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Plain edge list: one `u v` pair per line, optionally preceded by a
/// `n <count>` header. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pinned: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_content && tokens.first() == Some(&"n") {
            seen_content = true;
            let [_, count] = tokens[..] else {
                return Err(parse_err(line_no, "header must be `n <count>`"));
            };
            pinned = Some(int(count, line_no)?);
            continue;
        }
        seen_content = true;
        let [a, b] = tokens[..] else {
            return Err(parse_err(line_no, "expected two endpoints `u v`"));
        };
        let (u, v) = (int(a, line_no)?, int(b, line_no)?);
        if u == v {
            return Err(parse_err(line_no, &format!("self-loop at vertex {u}")));
        }
        if let Some(n) = pinned {
            if u >= n || v >= n {
                return Err(parse_err(
                    line_no,
                    &format!("endpoint out of range: ({u}, {v}) with n = {n}"),
                ));
            }
        }
        edges.push((u, v));
    }

    let n = match pinned {
        Some(n) => n,
        None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
            Some(max) => max + 1,
            None => return Err(parse_err(1, "empty edge list without `n` header")),
        },
    };
    Graph::from_edges(n, edges)
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn int(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, &format!("not a non-negative integer: `{tok}`")))
}

/// Decodes a single graph6 string (optionally with the `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Format(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = decode_n(s)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Length(format!(
            "{n} vertices need {need} payload bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_n(s: &[u8]) -> Result<(usize, &[u8])> {
    let short = |len: usize| Error::Length(format!("truncated vertex count ({len} bytes)"));
    match s {
        [] => Err(Error::Length("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(short(s.len()));
            }
            Ok((sextets(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(short(s.len()));
            }
            Ok((sextets(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

fn sextets(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.adjacent(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
