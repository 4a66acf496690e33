//! Text encodings for graphs: graph6, a plain edge list, and the small
//! constructor language (`wheel:5`, `cycle:8`, `prism`, ...).

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::vertex_set::MAX_VERTICES;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let body = text[start..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                start + i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }

    let (n, header_len) = match bytes.first() {
        None => return Err(Error::parse(start, "empty graph6 string")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::parse(
                    start + 1,
                    format!("8-byte size header exceeds the {MAX_VERTICES}-vertex limit"),
                ));
            }
            if bytes.len() < 4 {
                return Err(Error::parse(start + bytes.len(), "truncated size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
            (n, 4)
        }
        Some(&b) => (usize::from(b - 63), 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            start,
            format!("{n} vertices exceeds the {MAX_VERTICES}-vertex limit"),
        ));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < need {
        return Err(Error::parse(
            start + bytes.len(),
            format!("expected {need} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(Error::parse(
            start + header_len + need,
            "trailing bytes after graph data",
        ));
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    for pad in bits..need * 6 {
        if bit(pad) {
            return Err(Error::parse(
                start + header_len + pad / 6,
                "non-zero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses lines `u v` (0-based). An optional first line `n <count>` fixes
/// the vertex count; otherwise it is one more than the largest label.
/// Blank lines and `#` comments are skipped; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut first_content = true;

    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_offsets(content, line_start);
        if tokens.is_empty() {
            continue;
        }
        if first_content && tokens[0].1 == "n" {
            first_content = false;
            if tokens.len() != 2 {
                return Err(Error::parse(line_start, "header must be `n <count>`"));
            }
            declared = Some(parse_index(tokens[1])?);
            continue;
        }
        first_content = false;
        if tokens.len() != 2 {
            return Err(Error::parse(
                tokens[0].0,
                format!("expected two vertex labels, found {}", tokens.len()),
            ));
        }
        let u = parse_index(tokens[0])?;
        let v = parse_index(tokens[1])?;
        if u == v {
            return Err(Error::parse(
                tokens[0].0,
                format!("self-loop at vertex {u}"),
            ));
        }
        edges.push((u, v, tokens[0].0));
    }

    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        )));
    }
    let mut g = Graph::empty(n)?;
    for (u, v, at) in edges {
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("vertex {} >= n = {n}", u.max(v))));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Emits the edge-list format accepted by [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn tokens_with_offsets(line: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in line.split_whitespace() {
        let at = line[pos..].find(tok).map_or(pos, |i| pos + i);
        out.push((base + at, tok));
        pos = at + tok.len();
    }
    out
}

fn parse_index((at, tok): (usize, &str)) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(at, format!("`{tok}` is not a non-negative integer")))
}

/// Evaluates a constructor expression: `cycle:K`, `path:K`, `complete:K`,
/// `wheel:K` or `prism`.
pub fn parse_constructor(expr: &str) -> Result<Graph> {
    let expr = expr.trim();
    let (name, arg) = match expr.split_once(':') {
        Some((name, arg)) => (name, Some(arg)),
        None => (expr, None),
    };
    let k = || -> Result<usize> {
        let arg =
            arg.ok_or_else(|| Error::Argument(format!("`{name}` needs a size, e.g. `{name}:5`")))?;
        arg.trim()
            .parse()
            .map_err(|_| Error::Argument(format!("bad size `{arg}` in `{expr}`")))
    };
    match name {
        "cycle" => graph::make_cycle(k()?),
        "path" => graph::make_path(k()?),
        "complete" => graph::make_complete(k()?),
        "wheel" => graph::make_wheel(k()?),
        "prism" if arg.is_none() => Ok(graph::make_prism()),
        _ => Err(Error::Argument(format!("unknown constructor `{expr}`"))),
    }
}

/// True if `expr` looks like a constructor expression rather than graph6.
pub fn is_constructor(expr: &str) -> bool {
    let name = expr.trim().split(':').next().unwrap_or("");
    matches!(name, "cycle" | "path" | "complete" | "wheel" | "prism")
}
