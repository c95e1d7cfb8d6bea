//! Text formats.
//!
//! `.h3g`: the first non-comment line is `n <N>`, every further line is an
//! edge `i j k` with `0 <= i < j < k < N`. `.part`: one line per part,
//! `part <index>: v1 v2 ...`, index 0 reserved for `V_0`. In both formats `#`
//! starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, VertexPartition};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Content lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_h3g(text: &str) -> Result<Hypergraph3> {
    let mut lines = content_lines(text);
    let (lno, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing header line `n <N>`"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", v] => v
            .parse::<usize>()
            .map_err(|_| parse_err(lno, format!("bad vertex count {v:?}")))?,
        _ => return Err(parse_err(lno, "expected header `n <N>`")),
    };
    let mut h = Hypergraph3::new(n);
    for (lno, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(lno, format!("bad edge line {line:?}")))?;
        let [i, j, k] = nums[..] else {
            return Err(parse_err(lno, "an edge line needs exactly three vertices"));
        };
        if !(i < j && j < k) {
            return Err(parse_err(lno, "edge vertices must be strictly increasing"));
        }
        if k >= n {
            return Err(parse_err(lno, format!("vertex {k} out of range for n = {n}")));
        }
        if !h.add_edge(i, j, k)? {
            return Err(parse_err(lno, format!("duplicate edge {i} {j} {k}")));
        }
    }
    Ok(h)
}

pub fn format_h3g(h: &Hypergraph3) -> String {
    let mut out = String::with_capacity(16 + 12 * h.edge_count());
    let _ = writeln!(out, "n {}", h.n());
    for e in h.edges() {
        let _ = writeln!(out, "{} {} {}", e[0], e[1], e[2]);
    }
    out
}

pub fn read_h3g(path: impl AsRef<Path>) -> Result<Hypergraph3> {
    parse_h3g(&std::fs::read_to_string(path)?)
}

pub fn write_h3g(path: impl AsRef<Path>, h: &Hypergraph3) -> Result<()> {
    std::fs::write(path, format_h3g(h))?;
    Ok(())
}

/// Parses a `.part` file for a host on `n` vertices. Missing indices
/// (including 0) denote empty parts.
pub fn parse_part(text: &str, n: usize) -> Result<VertexPartition> {
    let mut parts: Vec<Option<Vec<usize>>> = Vec::new();
    for (lno, line) in content_lines(text) {
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lno, "expected `part <index>: vertices`"))?;
        let idx = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["part", i] => i
                .parse::<usize>()
                .map_err(|_| parse_err(lno, format!("bad part index {i:?}")))?,
            _ => return Err(parse_err(lno, "expected `part <index>:`")),
        };
        let vs: Vec<usize> = body
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(lno, "bad vertex list"))?;
        if parts.len() <= idx {
            parts.resize(idx + 1, None);
        }
        if parts[idx].is_some() {
            return Err(parse_err(lno, format!("part {idx} listed twice")));
        }
        parts[idx] = Some(vs);
    }
    if parts.is_empty() {
        parts.push(None);
    }
    VertexPartition::new(n, parts.into_iter().map(Option::unwrap_or_default).collect())
}

pub fn format_part(p: &VertexPartition) -> String {
    let mut out = String::new();
    for (i, part) in p.parts().iter().enumerate() {
        let _ = write!(out, "part {i}:");
        for v in part {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn read_part(path: impl AsRef<Path>, n: usize) -> Result<VertexPartition> {
    parse_part(&std::fs::read_to_string(path)?, n)
}

pub fn write_part(path: impl AsRef<Path>, p: &VertexPartition) -> Result<()> {
    std::fs::write(path, format_part(p))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3g_round_trip() {
        let h = Hypergraph3::complete(5);
        assert_eq!(parse_h3g(&format_h3g(&h)).unwrap(), h);
    }

    #[test]
    fn h3g_comments_and_errors() {
        let h = parse_h3g("# demo\n\nn 4 # four\n0 1 2\n1 2 3\n").unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(matches!(
            parse_h3g("n 4\n0 1 2\n0 1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_h3g("n 4\n2 1 0\n").is_err());
        assert!(parse_h3g("n 3\n0 1 3\n").is_err());
        assert!(parse_h3g("0 1 2\n").is_err());
        assert!(parse_h3g("").is_err());
    }

    #[test]
    fn part_round_trip() {
        let p = VertexPartition::new(5, vec![vec![4], vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(parse_part(&format_part(&p), 5).unwrap(), p);
        let q = parse_part("part 1: 0 1\npart 2: 2\n", 3).unwrap();
        assert!(q.exceptional().is_empty());
        assert!(parse_part("part 1: 0 1\n", 3).is_err());
        assert!(parse_part("part 1: 0 1 2\npart 1: 0\n", 3).is_err());
    }
}
