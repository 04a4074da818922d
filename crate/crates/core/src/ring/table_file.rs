//! Plain-text table-ring files.
//!
//! ```text
//! 4
//! 0 1 2 3
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//!
//! 0 0 0 0
//! 0 1 2 3
//! 0 2 0 2
//! 0 3 2 1
//! ```
//!
//! Line 1 is the order, line 2 the labels, then the addition table, a blank
//! line, and the multiplication table.

use std::fmt::Write as _;
use std::path::Path;

use super::{make_table_ring, FiniteRing, RingError};

fn parse_row(line: &str, n: usize, lineno: usize) -> Result<Vec<usize>, RingError> {
    let row: Vec<usize> = line
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| RingError::Shape(format!("line {lineno}: bad index {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    if row.len() != n {
        return Err(RingError::Shape(format!(
            "line {lineno}: expected {n} entries, got {}",
            row.len()
        )));
    }
    Ok(row)
}

pub fn parse_table_ring(text: &str) -> Result<FiniteRing, RingError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut next_nonblank = |what: &str| {
        lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| RingError::Shape(format!("missing {what}")))
    };
    let (ln, first) = next_nonblank("order")?;
    let n: usize = first
        .parse()
        .map_err(|_| RingError::Shape(format!("line {ln}: bad order {first:?}")))?;
    if n == 0 || n > super::MAX_ORDER {
        return Err(RingError::Size {
            order: n,
            cap: super::MAX_ORDER,
        });
    }
    let (ln, label_line) = next_nonblank("labels")?;
    let labels: Vec<String> = label_line.split_whitespace().map(str::to_string).collect();
    if labels.len() != n {
        return Err(RingError::Shape(format!(
            "line {ln}: expected {n} labels, got {}",
            labels.len()
        )));
    }
    let mut read_table = |name: &str| -> Result<Vec<Vec<usize>>, RingError> {
        (0..n)
            .map(|_| {
                let (ln, l) = next_nonblank(name)?;
                parse_row(l, n, ln)
            })
            .collect()
    };
    let add = read_table("addition table")?;
    let mul = read_table("multiplication table")?;
    if let Some((ln, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(RingError::Shape(format!("line {ln}: trailing content")));
    }
    make_table_ring(labels, add, mul)
}

pub fn read_table_ring(path: &Path) -> Result<FiniteRing, RingError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RingError::Io(format!("{}: {e}", path.display())))?;
    let mut ring = parse_table_ring(&text)?;
    ring.set_expr(format!("table({})", path.display()));
    Ok(ring)
}

/// Renders `ring` in the table-file format. Labels containing whitespace
/// are written with it removed.
pub fn write_table_ring(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = format!("{n}\n");
    let labels: Vec<String> = ring
        .labels()
        .iter()
        .map(|l| l.split_whitespace().collect())
        .collect();
    out.push_str(&labels.join(" "));
    out.push('\n');
    for (i, op) in [FiniteRing::add, FiniteRing::mul].into_iter().enumerate() {
        if i == 1 {
            out.push('\n');
        }
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| op(ring, a, b).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}
