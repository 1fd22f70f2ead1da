//! The `.ls` text format.
//!
//! ```text
//! # optional comments
//! points 6
//! lines 4
//! 0 1 2
//! 0 3 4
//! 1 3 5
//! 2 4 5
//! sides 1 2 3 2 3 1
//! ```
//!
//! Line rows list point indices in strictly ascending order; the optional
//! trailing `sides` row gives a 1-based side index per point. Comment lines
//! start with `#` and blank lines are ignored. Every violation is reported
//! with the offending (1-based) text line number.

use crate::system::{LinearSystem, SidePartition};
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses `.ls` text into a system and its optional side partition.
pub fn parse_ls(text: &str) -> Result<(LinearSystem, Option<SidePartition>)> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = rows
        .next()
        .ok_or_else(|| parse_err(0, "empty input, expected `points N`"))?;
    let num_points = parse_header(lineno, header, "points")?;

    let (lineno, header) = rows
        .next()
        .ok_or_else(|| parse_err(lineno, "expected `lines M` after the points header"))?;
    let num_lines = parse_header(lineno, header, "lines")?;

    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(num_lines);
    let mut sides: Option<(usize, Vec<u16>)> = None;
    let mut last_lineno = lineno;

    for (lineno, row) in rows {
        last_lineno = lineno;
        if sides.is_some() {
            return Err(parse_err(lineno, "content after the `sides` row"));
        }
        if let Some(rest) = row.strip_prefix("sides") {
            if lines.len() < num_lines {
                return Err(parse_err(
                    lineno,
                    format!("`sides` row before all {num_lines} line rows were read"),
                ));
            }
            let vals = parse_sides(lineno, rest, num_points)?;
            sides = Some((lineno, vals));
            continue;
        }
        if lines.len() == num_lines {
            return Err(parse_err(
                lineno,
                format!("unexpected extra row, already read {num_lines} lines"),
            ));
        }
        lines.push(parse_line_row(lineno, row, num_points)?);
    }

    if lines.len() != num_lines {
        return Err(parse_err(
            last_lineno,
            format!("expected {num_lines} line rows, found {}", lines.len()),
        ));
    }

    let sys = LinearSystem::new(num_points, lines);
    let partition = sides.map(|(_, side_of)| {
        let r = side_of.iter().copied().max().unwrap_or(0) as usize;
        SidePartition { r, side_of }
    });
    Ok((sys, partition))
}

fn parse_header(lineno: usize, row: &str, keyword: &str) -> Result<usize> {
    let mut parts = row.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == keyword => v
            .parse()
            .map_err(|_| parse_err(lineno, format!("`{keyword}` count `{v}` is not a number"))),
        _ => Err(parse_err(lineno, format!("expected `{keyword} N`, got `{row}`"))),
    }
}

fn parse_line_row(lineno: usize, row: &str, num_points: usize) -> Result<Vec<usize>> {
    let mut pts = Vec::new();
    for tok in row.split_whitespace() {
        let p: usize = tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("`{tok}` is not a point index")))?;
        if p >= num_points {
            return Err(parse_err(
                lineno,
                format!("point index {p} out of range (points {num_points})"),
            ));
        }
        if let Some(&last) = pts.last() {
            if p <= last {
                return Err(parse_err(
                    lineno,
                    format!("point indices must be strictly ascending, saw {last} then {p}"),
                ));
            }
        }
        pts.push(p);
    }
    if pts.is_empty() {
        return Err(parse_err(lineno, "empty line row"));
    }
    Ok(pts)
}

fn parse_sides(lineno: usize, rest: &str, num_points: usize) -> Result<Vec<u16>> {
    let mut vals = Vec::with_capacity(num_points);
    for tok in rest.split_whitespace() {
        let s: u16 = tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("`{tok}` is not a side index")))?;
        if s == 0 {
            return Err(parse_err(lineno, "side indices are 1-based, saw 0"));
        }
        vals.push(s);
    }
    if vals.len() != num_points {
        return Err(parse_err(
            lineno,
            format!(
                "`sides` row has {} entries, expected one per point ({num_points})",
                vals.len()
            ),
        ));
    }
    Ok(vals)
}

/// Serializes to `.ls` text. `comments` become leading `#` rows.
pub fn write_ls(
    sys: &LinearSystem,
    sides: Option<&SidePartition>,
    comments: &[String],
) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("points {}\n", sys.num_points()));
    out.push_str(&format!("lines {}\n", sys.num_lines()));
    for i in 0..sys.num_lines() {
        let pts: Vec<String> = sys.line_indices(i).iter().map(|p| p.to_string()).collect();
        out.push_str(&pts.join(" "));
        out.push('\n');
    }
    if let Some(part) = sides {
        let vals: Vec<String> = part.side_of.iter().map(|s| s.to_string()).collect();
        out.push_str("sides ");
        out.push_str(&vals.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_identity_on_canonical_output() {
        let sys = LinearSystem::new(6, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]);
        let part = SidePartition {
            r: 3,
            side_of: vec![1, 2, 3, 3, 3, 3],
        };
        let text = write_ls(&sys, Some(&part), &["triangle witness".into()]);
        let (sys2, part2) = parse_ls(&text).unwrap();
        assert_eq!(sys, sys2);
        assert_eq!(Some(part), part2);
        assert_eq!(write_ls(&sys2, part2.as_ref(), &["triangle witness".into()]), text);
    }

    #[test]
    fn rejects_out_of_range_with_line_number() {
        let err = parse_ls("points 3\nlines 1\n0 1 7\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("out of range"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_unsorted_row() {
        let err = parse_ls("points 3\nlines 1\n1 0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn rejects_wrong_line_count() {
        let err = parse_ls("points 3\nlines 2\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn rejects_short_sides_row() {
        let err = parse_ls("points 3\nlines 1\n0 1 2\nsides 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let (sys, sides) = parse_ls("# q=2\n\npoints 3\nlines 1\n\n0 1 2\n").unwrap();
        assert_eq!(sys.num_points(), 3);
        assert_eq!(sys.num_lines(), 1);
        assert!(sides.is_none());
    }
}
