//! Cayley table text format: the order on the first line, then one row of
//! whitespace-separated 0-based product indices per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::GroupTable;

pub fn write_cayley(g: &GroupTable) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.order()).unwrap();
    for i in g.elements() {
        let row: Vec<String> = g.row(i).map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Parses the raw rows without validating group axioms.
pub fn parse_cayley_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty Cayley file".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("line 1: expected the order, found {:?}", header.trim())))?;
    let mut rows = Vec::with_capacity(n);
    for (lineno, line) in lines {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad entry {tok:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "line {}: {} entries, expected {n}",
                lineno + 1,
                row.len()
            )));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

pub fn read_cayley(text: &str) -> Result<GroupTable> {
    GroupTable::from_cayley_table(&parse_cayley_rows(text)?)
}
