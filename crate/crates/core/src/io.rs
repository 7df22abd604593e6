//! Text formats: whitespace edge lists and graph6.

use std::collections::HashMap;

use crate::error::ParseError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Graph6,
    /// graph6 if the first data line is a single token of printable graph6
    /// bytes, edge list otherwise.
    Auto,
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, ParseError> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => parse_graph6(text),
        InputFormat::Auto => {
            if looks_like_graph6(text) {
                parse_graph6(text)
            } else {
                parse_edge_list(text)
            }
        }
    }
}

fn looks_like_graph6(text: &str) -> bool {
    let Some(first) = text.lines().map(str::trim_end).find(|l| !l.is_empty()) else {
        return false;
    };
    let body = first.strip_prefix(">>graph6<<").unwrap_or(first);
    !body.is_empty() && body.bytes().all(|b| (63..=126).contains(&b))
}

/// Parses a line-oriented edge list.
///
/// Each data line is `u v`; `#` starts a comment. Labels are arbitrary tokens
/// numbered in first-seen order. An optional first data line `p n m` (or
/// `p edge n m`) fixes the vertex count; labels must then be the integers
/// `1..=n` and exactly `m` edges must follow.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut first_data_line = true;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let data = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = data.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if first_data_line && tokens[0] == "p" {
            first_data_line = false;
            let nums = match tokens.as_slice() {
                ["p", n, m] | ["p", "edge", n, m] => (n.parse::<usize>(), m.parse::<usize>()),
                _ => {
                    return Err(ParseError::Malformed {
                        line,
                        reason: "header must be `p <n> <m>` or `p edge <n> <m>`".into(),
                    })
                }
            };
            let (Ok(n), Ok(m)) = nums else {
                return Err(ParseError::Malformed {
                    line,
                    reason: "header counts must be non-negative integers".into(),
                });
            };
            header = Some((n, m));
            labels = (1..=n).map(|i| i.to_string()).collect();
            continue;
        }
        first_data_line = false;
        if tokens.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected two vertex labels, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(ParseError::Loop {
                line,
                label: tokens[0].to_string(),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, token) in ends.iter_mut().zip(&tokens) {
            *slot = match header {
                Some((n, _)) => match token.parse::<usize>() {
                    Ok(x) if (1..=n).contains(&x) => x - 1,
                    _ => {
                        return Err(ParseError::Malformed {
                            line,
                            reason: format!("label {token:?} is not an integer in 1..={n}"),
                        })
                    }
                },
                None => *index.entry(token.to_string()).or_insert_with(|| {
                    labels.push(token.to_string());
                    labels.len() - 1
                }),
            };
        }
        if ends[0] == ends[1] {
            // Distinct tokens naming the same vertex, e.g. "01" and "1" under a header.
            return Err(ParseError::Loop {
                line,
                label: tokens[0].to_string(),
            });
        }
        let key = (ends[0].min(ends[1]), ends[0].max(ends[1]));
        if seen.insert(key, line).is_some() {
            return Err(ParseError::DuplicateEdge {
                line,
                u: tokens[0].to_string(),
                v: tokens[1].to_string(),
            });
        }
        edges.push(key);
    }

    if let Some((_, m)) = header {
        if edges.len() != m {
            return Err(ParseError::HeaderMismatch {
                what: "edges",
                declared: m,
                found: edges.len(),
            });
        }
    }
    Graph::with_labels(labels, edges).map_err(|e| match e {
        crate::Error::Parse(p) => p,
        other => ParseError::Malformed {
            line: 0,
            reason: other.to_string(),
        },
    })
}

/// Decodes one graph6 string. Vertices are labelled `0..n`.
pub fn parse_graph6(code: &str) -> Result<Graph, ParseError> {
    let trimmed = code.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed).as_bytes();
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(ParseError::Graph6(format!("byte {bad} outside 63..=126")));
    }
    let (n, rest) = decode_size(body)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(ParseError::Graph6(format!(
            "expected {expected} adjacency bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| ParseError::Graph6(e.to_string()))
}

fn decode_size(body: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    let short = || ParseError::Graph6("truncated vertex count".into());
    let word = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match body {
        [] => Err(short()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(short());
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(short());
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for shift in (0..groups).rev() {
            out.push((value >> (6 * shift) & 0x3f) as u8 + 63);
        }
    };
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        push_word(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_word(&mut out, n, 6);
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // Column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i.
        let k = v.0 * (v.0 - 1) / 2 + u.0;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
