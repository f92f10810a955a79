//! The PL file format.
//!
//! ```text
//! PL strands=<m>
//! x=<re>+<im>i : (t,pos);(t,pos);...
//! ```
//!
//! One strand line per strand; `t` is a rational `p/q`, `pos` a point
//! `<re>+<im>i` with rational components, and the first breakpoint of a
//! strand must sit at its `x=` label at time 0.

use std::fmt::Write as _;

use crate::error::GeoError;
use crate::pl::{PLBraid, Strand};
use crate::point::{parse_point, parse_rat, rat_string, Point, Rat};

pub fn parse_pl(text: &str) -> Result<PLBraid, GeoError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| GeoError::Parse {
        line: 1,
        message: "empty input: expected a 'PL strands=<m>' header".into(),
    })?;
    let strands: usize = header
        .strip_prefix("PL strands=")
        .and_then(|m| m.parse().ok())
        .ok_or_else(|| GeoError::Parse {
            line: 1,
            message: format!("expected 'PL strands=<m>', found '{header}'"),
        })?;

    let mut parsed: Vec<Strand> = Vec::with_capacity(strands);
    for (index, line) in lines {
        let number = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        if parsed.len() == strands {
            return Err(GeoError::Parse {
                line: number,
                message: format!("expected {strands} strands, found extra line '{line}'"),
            });
        }
        parsed.push(parse_strand(line, number)?);
    }
    if parsed.len() != strands {
        return Err(GeoError::Parse {
            line: text.lines().count(),
            message: format!("expected {strands} strands, found {}", parsed.len()),
        });
    }
    PLBraid::new(parsed)
}

fn parse_strand(line: &str, number: usize) -> Result<Strand, GeoError> {
    let fail = |message: String| GeoError::Parse {
        line: number,
        message,
    };
    let rest = line
        .strip_prefix("x=")
        .ok_or_else(|| fail("strand line must start with 'x='".into()))?;
    let (label, body) = rest
        .split_once(" : ")
        .ok_or_else(|| fail("expected ' : ' between the label and the breakpoints".into()))?;
    let label = parse_point(label).map_err(|e| fail(e.to_string()))?;

    let mut breakpoints: Vec<(Rat, Point)> = Vec::new();
    for entry in body.split(';') {
        let entry = entry.trim();
        let inner = entry
            .strip_prefix('(')
            .and_then(|e| e.strip_suffix(')'))
            .ok_or_else(|| fail(format!("breakpoint '{entry}' is not parenthesized")))?;
        let (t, pos) = inner
            .split_once(',')
            .ok_or_else(|| fail(format!("breakpoint '{entry}' needs a comma")))?;
        let t = parse_rat(t).map_err(|e| fail(e.to_string()))?;
        let pos = parse_point(pos).map_err(|e| fail(e.to_string()))?;
        breakpoints.push((t, pos));
    }

    let strand = Strand::new(breakpoints).map_err(|e| fail(e.to_string()))?;
    if strand.start() != &label {
        return Err(fail(format!(
            "strand labeled x={} begins at {}",
            format_point(&label),
            format_point(strand.start())
        )));
    }
    Ok(strand)
}

pub fn print_pl(pl: &PLBraid) -> String {
    let mut out = format!("PL strands={}\n", pl.size());
    for strand in pl.strands() {
        let _ = write!(out, "x={} : ", format_point(strand.start()));
        let entries: Vec<String> = strand
            .breakpoints()
            .iter()
            .map(|(t, p)| format!("({},{})", rat_string(t), format_point(p)))
            .collect();
        let _ = writeln!(out, "{}", entries.join(";"));
    }
    out
}

fn format_point(point: &Point) -> String {
    format!("{}+{}i", rat_string(&point.re), rat_string(&point.im))
}
