//! Line-oriented tower files.
//!
//! ```text
//! TOWER kind=<explicit|finsupp|rule:NAME> horizon=N
//! ```
//!
//! * `explicit` — one line per stored level: `m | E(comma-separated) | word`
//!   in the braid word grammar, e.g. `2 | 0,2 | B2: s0`.
//! * `finsupp` — exactly one following line: the generating braid word.
//! * `rule:winding`, `rule:identity` — no further lines.
//!
//! The printer emits exactly this shape; parse and print round-trip.

use braid_core::{BraidWord, GeneralizedBraid};

use crate::error::TowerError;
use crate::tower::{OmegaBraidTower, Rule};

/// Parses a tower file.
pub fn parse_tower(text: &str) -> Result<OmegaBraidTower, TowerError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file; expected a TOWER header"))?;
    let header = header.trim_end();
    let rest = header
        .strip_prefix("TOWER ")
        .ok_or_else(|| parse_err(1, "expected header starting with 'TOWER '"))?;
    let mut kind: Option<&str> = None;
    let mut horizon: Option<usize> = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("kind=") {
            kind = Some(v);
        } else if let Some(v) = field.strip_prefix("horizon=") {
            horizon = Some(
                v.parse()
                    .map_err(|_| parse_err(1, format!("bad horizon '{v}'")))?,
            );
        } else {
            return Err(parse_err(1, format!("unknown header field '{field}'")));
        }
    }
    let kind = kind.ok_or_else(|| parse_err(1, "missing kind= field"))?;
    let horizon = horizon.ok_or_else(|| parse_err(1, "missing horizon= field"))?;

    let body: Vec<(usize, &str)> = lines
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    match kind {
        "finsupp" => {
            let [(line_no, word_line)] = body[..] else {
                return Err(parse_err(
                    2,
                    format!(
                        "finsupp towers need exactly one word line, found {}",
                        body.len()
                    ),
                ));
            };
            let word: BraidWord = word_line
                .parse()
                .map_err(|e| parse_err(line_no, format!("{e}")))?;
            Ok(OmegaBraidTower::finitely_supported(word).with_declared_horizon(horizon))
        }
        "rule:winding" => {
            expect_no_body(&body)?;
            Ok(OmegaBraidTower::winding().with_declared_horizon(horizon))
        }
        "rule:identity" => {
            expect_no_body(&body)?;
            Ok(OmegaBraidTower::identity().with_declared_horizon(horizon))
        }
        "explicit" => {
            let mut levels = Vec::new();
            for (line_no, line) in body {
                levels.push(parse_level_line(line_no, line)?);
            }
            if levels.is_empty() {
                return Err(parse_err(2, "explicit towers need at least one level line"));
            }
            Ok(OmegaBraidTower::explicit(levels)?.with_declared_horizon(horizon))
        }
        other => Err(parse_err(1, format!("unknown tower kind '{other}'"))),
    }
}

fn expect_no_body(body: &[(usize, &str)]) -> Result<(), TowerError> {
    if let Some((line_no, line)) = body.first() {
        return Err(parse_err(
            *line_no,
            format!("rule towers take no body lines, found '{line}'"),
        ));
    }
    Ok(())
}

fn parse_level_line(line_no: usize, line: &str) -> Result<(usize, GeneralizedBraid), TowerError> {
    let mut parts = line.splitn(3, '|').map(str::trim);
    let (Some(m_str), Some(e_str), Some(word_str)) = (parts.next(), parts.next(), parts.next())
    else {
        return Err(parse_err(
            line_no,
            "expected 'm | E | word' with two '|' separators",
        ));
    };
    let m: usize = m_str
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad level number '{m_str}'")))?;
    let endpoints: Vec<usize> = e_str
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("bad endpoint '{tok}'")))
        })
        .collect::<Result<_, _>>()?;
    let word: BraidWord = word_str
        .parse()
        .map_err(|e| parse_err(line_no, format!("{e}")))?;
    let braid = GeneralizedBraid::new(word, endpoints)
        .map_err(|e| parse_err(line_no, format!("{e}")))?;
    Ok((m, braid))
}

fn parse_err(line: usize, message: impl Into<String>) -> TowerError {
    TowerError::Parse {
        line,
        message: message.into(),
    }
}

/// Prints a tower in the file format.  Derived towers (lazy compositions /
/// inverses) have no textual kind; materialize them with
/// [`explicit_snapshot`] first.
pub fn print_tower(tower: &OmegaBraidTower) -> Result<String, TowerError> {
    let mut out = format!(
        "TOWER kind={} horizon={}\n",
        tower.kind_name(),
        tower.declared_horizon()
    );
    match tower.rule() {
        Rule::FinitelySupported(f) => {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        Rule::Winding | Rule::Identity => {}
        Rule::Explicit(map) => {
            for (m, braid) in map {
                out.push_str(&format!("{m} | {} | {}\n", endpoints_csv(braid), braid.word()));
            }
        }
        Rule::Compose(..) | Rule::Inverse(_) => {
            return Err(TowerError::UnsupportedRegime(
                "derived towers have no file form; snapshot them to an explicit tower first"
                    .into(),
            ));
        }
    }
    Ok(out)
}

/// Materializes levels `1..=horizon` into an explicit tower (useful for
/// writing derived towers to disk).
pub fn explicit_snapshot(
    tower: &OmegaBraidTower,
    horizon: usize,
) -> Result<OmegaBraidTower, TowerError> {
    let mut levels = Vec::with_capacity(horizon);
    for m in 1..=horizon {
        levels.push((m, tower.level(m)?));
    }
    OmegaBraidTower::explicit(levels)
}

fn endpoints_csv(braid: &GeneralizedBraid) -> String {
    braid
        .endpoints()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
