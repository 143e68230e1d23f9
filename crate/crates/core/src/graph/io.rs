//! Edge-list and MatrixMarket text formats.

use std::io::{BufRead, Write};

use super::{CsrGraph, Edge, EdgeList, GraphError};

fn parse_weight(token: &str, line: usize) -> Result<f64, GraphError> {
    let w: f64 = token
        .parse()
        .map_err(|_| GraphError::Parse { line, msg: format!("invalid weight `{token}`") })?;
    if !w.is_finite() {
        return Err(GraphError::NonFiniteWeight { line, token: token.to_string() });
    }
    Ok(w)
}

fn parse_index(token: &str, line: usize) -> Result<usize, GraphError> {
    token
        .parse()
        .map_err(|_| GraphError::Parse { line, msg: format!("invalid node id `{token}`") })
}

/// Reads a whitespace-separated edge list: one `u v [w]` per line, `%` or
/// `#` comments, missing weights default to 1.0.
///
/// A first data line holding exactly two integers `n m` is treated as a
/// header when exactly `m` edge lines follow and all of their ids are below
/// `n`; otherwise it is an unweighted edge.
pub fn load_edge_list<R: BufRead>(reader: R, directed: bool) -> Result<EdgeList, GraphError> {
    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        rows.push((i + 1, trimmed.split_whitespace().map(str::to_owned).collect()));
    }

    let mut parsed = Vec::with_capacity(rows.len());
    for (line, tokens) in &rows {
        let line = *line;
        if !(2..=3).contains(&tokens.len()) {
            return Err(GraphError::Parse {
                line,
                msg: format!("expected `u v [w]`, found {} fields", tokens.len()),
            });
        }
        let u = parse_index(&tokens[0], line)?;
        let v = parse_index(&tokens[1], line)?;
        let w = match tokens.get(2) {
            Some(t) => parse_weight(t, line)?,
            None => 1.0,
        };
        parsed.push((u, v, w, tokens.len() == 2));
    }

    let header = match parsed.first() {
        Some(&(n, m, _, true)) => {
            let rest = &parsed[1..];
            (rest.len() == m && rest.iter().all(|&(u, v, _, _)| u < n && v < n)).then_some(n)
        }
        _ => None,
    };
    let body = if header.is_some() { &parsed[1..] } else { &parsed[..] };

    let n = header.unwrap_or_else(|| body.iter().map(|&(u, v, _, _)| u.max(v) + 1).max().unwrap_or(0));
    let mut edges = Vec::with_capacity(if directed { body.len() } else { 2 * body.len() });
    for &(u, v, w, _) in body {
        edges.push(Edge::new(u, v, w));
        if !directed {
            edges.push(Edge::new(v, u, w));
        }
    }
    Ok(EdgeList::new(n, edges))
}

pub fn load_edge_list_str(text: &str, directed: bool) -> Result<EdgeList, GraphError> {
    load_edge_list(text.as_bytes(), directed)
}

#[derive(Clone, Copy, PartialEq)]
enum Field {
    Real,
    Pattern,
}

/// Reads a MatrixMarket `coordinate` file (`real` or `pattern`, `general`
/// or `symmetric`). Indices are converted to 0-based.
pub fn load_matrix_market<R: BufRead>(reader: R) -> Result<EdgeList, GraphError> {
    let mut lines = reader.lines().enumerate();

    let (_, banner) = lines
        .next()
        .ok_or_else(|| GraphError::Parse { line: 1, msg: "empty MatrixMarket stream".into() })?;
    let banner = banner?;
    let parts: Vec<String> = banner.split_whitespace().map(|s| s.to_ascii_lowercase()).collect();
    if parts.len() != 5 || parts[0] != "%%matrixmarket" || parts[1] != "matrix" {
        return Err(GraphError::Parse { line: 1, msg: "missing %%MatrixMarket matrix banner".into() });
    }
    if parts[2] != "coordinate" {
        return Err(GraphError::UnsupportedFormat(parts[2].clone()));
    }
    let field = match parts[3].as_str() {
        "real" => Field::Real,
        "pattern" => Field::Pattern,
        other => return Err(GraphError::UnsupportedFormat(other.to_string())),
    };
    let symmetric = match parts[4].as_str() {
        "general" => false,
        "symmetric" => true,
        other => return Err(GraphError::UnsupportedFormat(other.to_string())),
    };

    let mut size: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut entries = 0usize;
    for (i, line) in lines {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((rows, cols, _)) = size else {
            if tokens.len() != 3 {
                return Err(GraphError::Parse { line: line_no, msg: "expected `rows cols nnz`".into() });
            }
            size = Some((
                parse_index(tokens[0], line_no)?,
                parse_index(tokens[1], line_no)?,
                parse_index(tokens[2], line_no)?,
            ));
            continue;
        };
        let expected = if field == Field::Pattern { 2 } else { 3 };
        if tokens.len() != expected {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("expected {expected} fields, found {}", tokens.len()),
            });
        }
        let r = parse_index(tokens[0], line_no)?;
        let c = parse_index(tokens[1], line_no)?;
        if r == 0 || c == 0 || r > rows || c > cols {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("entry ({r}, {c}) outside declared {rows}x{cols}"),
            });
        }
        let w = match field {
            Field::Real => parse_weight(tokens[2], line_no)?,
            Field::Pattern => 1.0,
        };
        let (u, v) = (r - 1, c - 1);
        edges.push(Edge::new(u, v, w));
        if symmetric && u != v {
            edges.push(Edge::new(v, u, w));
        }
        entries += 1;
    }

    let (rows, cols, nnz) =
        size.ok_or_else(|| GraphError::Parse { line: 1, msg: "missing size line".into() })?;
    if entries != nnz {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("size line declares {nnz} entries, found {entries}"),
        });
    }
    Ok(EdgeList::new(rows.max(cols), edges))
}

pub fn load_matrix_market_str(text: &str) -> Result<EdgeList, GraphError> {
    load_matrix_market(text.as_bytes())
}

/// Writes `g` as an edge list with an `n m` header line.
pub fn write_edge_list<W: Write>(g: &CsrGraph, mut out: W) -> Result<(), GraphError> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.w)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes `g` as `coordinate real general`.
pub fn write_matrix_market<W: Write>(g: &CsrGraph, mut out: W) -> Result<(), GraphError> {
    writeln!(out, "%%MatrixMarket matrix coordinate real general")?;
    writeln!(out, "{} {} {}", g.n(), g.n(), g.m())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.w)?;
    }
    out.flush()?;
    Ok(())
}
