use std::fmt::Write as _;
use std::str::FromStr;

use braid_core::Sign;
use num::{BigInt, Zero};

use crate::error::GeoError;
use crate::pl::PLBraid;
use crate::point::{decimal, Rat};
use crate::sweep::{crossing_events, CrossingEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(format!("unsupported format '{other}': expected ascii or svg")),
        }
    }
}

/// Draws a deterministic diagram of the braid: time runs downwards,
/// strands sit at their slot columns, and each crossing shows which
/// strand passes in front.  Identical input yields byte-identical
/// output.
pub fn render(pl: &PLBraid, format: RenderFormat) -> Result<String, GeoError> {
    let events = crossing_events(pl)?;
    Ok(match format {
        RenderFormat::Ascii => render_ascii(pl.size(), &events),
        RenderFormat::Svg => render_svg(pl, &events),
    })
}

/// Three rows per crossing between single rows of plain strands; the
/// middle character is the diagonal of the strand in front, so a
/// positive crossing (left strand in front) shows `\`.
fn render_ascii(size: usize, events: &[CrossingEvent]) -> String {
    let width = 4 * (size - 1) + 1;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let plain = |rows: &mut Vec<Vec<u8>>| {
        let mut row = vec![b' '; width];
        for column in 0..size {
            row[4 * column] = b'|';
        }
        rows.push(row);
    };

    plain(&mut rows);
    if events.is_empty() {
        plain(&mut rows);
    }
    for event in events {
        let p = event.position;
        let mut band = [vec![b' '; width], vec![b' '; width], vec![b' '; width]];
        for column in 0..size {
            if column != p && column != p + 1 {
                for row in &mut band {
                    row[4 * column] = b'|';
                }
            }
        }
        band[0][4 * p + 1] = b'\\';
        band[0][4 * p + 3] = b'/';
        band[1][4 * p + 2] = match event.sign {
            Sign::Positive => b'\\',
            Sign::Negative => b'/',
        };
        band[2][4 * p + 1] = b'/';
        band[2][4 * p + 3] = b'\\';
        rows.extend(band);
        plain(&mut rows);
    }

    let mut out = String::new();
    for row in rows {
        let text = String::from_utf8(row).unwrap();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

/// Fixed 100 × (40·strands) canvas, one path per strand; the strand
/// passing behind a crossing is interrupted around the crossing point.
fn render_svg(pl: &PLBraid, events: &[CrossingEvent]) -> String {
    let size = pl.size();
    let height = Rat::from_integer(BigInt::from(40 * size as i64));
    let column = |slot: usize| {
        Rat::new(BigInt::from(100 * (slot as i64 + 1)), BigInt::from(size as i64 + 1))
    };
    let band = |index: usize| {
        &height * Rat::new(BigInt::from(index as i64 + 1), BigInt::from(events.len() as i64 + 1))
    };
    let gap = &height * Rat::new(BigInt::from(1), BigInt::from(4 * (events.len() as i64 + 1)));

    let mut occupant = initial_order(pl);
    let mut slot_of = vec![0usize; size];
    for (slot, &strand) in occupant.iter().enumerate() {
        slot_of[strand] = slot;
    }
    // paths[k]: M/L commands for strand k, following its slot as the
    // crossings reorder the family.
    let mut paths: Vec<String> = (0..size)
        .map(|strand| {
            format!(
                "M {} {}",
                decimal(&column(slot_of[strand])),
                decimal(&Rat::zero())
            )
        })
        .collect();

    for (j, event) in events.iter().enumerate() {
        let p = event.position;
        let (a, b) = (occupant[p], occupant[p + 1]);
        let y = band(j);
        let (top, bottom) = (&y - &gap, &y + &gap);
        let (xa, xb) = (column(p), column(p + 1));
        for (strand, from, to) in [(a, &xa, &xb), (b, &xb, &xa)] {
            let path = &mut paths[strand];
            let _ = write!(path, " L {} {}", decimal(from), decimal(&top));
            if strand == event.under {
                // Interrupt the rear strand: stop at 7/20 of the
                // diagonal and resume at 13/20.
                let near = interpolate(from, &top, to, &bottom, 7, 20);
                let far = interpolate(from, &top, to, &bottom, 13, 20);
                let _ = write!(path, " L {} {}", decimal(&near.0), decimal(&near.1));
                let _ = write!(path, " M {} {}", decimal(&far.0), decimal(&far.1));
            }
            let _ = write!(path, " L {} {}", decimal(to), decimal(&bottom));
        }
        occupant.swap(p, p + 1);
        slot_of[a] = p + 1;
        slot_of[b] = p;
    }

    for (strand, path) in paths.iter_mut().enumerate() {
        let x = column(slot_of[strand]);
        let _ = write!(path, " L {} {}", decimal(&x), decimal(&height));
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"100\" height=\"{}\" viewBox=\"0 0 100 {}\">",
        decimal(&height),
        decimal(&height)
    );
    let _ = writeln!(out, "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1\">");
    for path in &paths {
        let _ = writeln!(out, "    <path d=\"{path}\"/>");
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// Strand indices by the lexicographic order of their start points: the
/// slot assignment at time 0, matching the sweep's numbering.
fn initial_order(pl: &PLBraid) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pl.size()).collect();
    order.sort_by_key(|&k| pl.strands()[k].start().clone());
    order
}

fn interpolate(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat, numer: i64, denom: i64) -> (Rat, Rat) {
    let lambda = Rat::new(BigInt::from(numer), BigInt::from(denom));
    (x0 + (x1 - x0) * &lambda, y0 + (y1 - y0) * &lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::pl::Strand;
    use crate::sweep::word_to_pl;
    use braid_core::GeneralizedBraid;

    fn word(text: &str) -> GeneralizedBraid {
        GeneralizedBraid::from_word(text.parse().unwrap())
    }

    #[test]
    fn the_identity_renders_as_parallel_lines() {
        let pl = PLBraid::new(vec![
            Strand::vertical(Point::real(0)),
            Strand::vertical(Point::real(1)),
        ])
        .unwrap();
        assert_eq!(render(&pl, RenderFormat::Ascii).unwrap(), "|   |\n|   |\n");
    }

    #[test]
    fn a_positive_crossing_shows_the_left_strand_in_front() {
        let pl = word_to_pl(&word("B2: s0")).unwrap();
        let expected = "\
|   |
 \\ /
  \\
 / \\
|   |
";
        assert_eq!(render(&pl, RenderFormat::Ascii).unwrap(), expected);

        let negative = word_to_pl(&word("B2: s0^-1")).unwrap();
        assert!(render(&negative, RenderFormat::Ascii)
            .unwrap()
            .contains("  /\n"));
    }

    #[test]
    fn spectator_strands_stay_vertical_in_the_band() {
        let pl = word_to_pl(&word("B3: s1")).unwrap();
        let text = render(&pl, RenderFormat::Ascii).unwrap();
        let expected = "\
|   |   |
|    \\ /
|     \\
|    / \\
|   |   |
";
        assert_eq!(text, expected);
    }

    #[test]
    fn svg_output_is_stable_and_interrupts_the_rear_strand() {
        let pl = word_to_pl(&word("B2: s0")).unwrap();
        let first = render(&pl, RenderFormat::Svg).unwrap();
        let second = render(&pl, RenderFormat::Svg).unwrap();
        assert_eq!(first, second);
        assert!(first.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(first.contains("height=\"80\""));
        assert_eq!(first.matches("<path").count(), 2);
        // The rear strand's path has an extra move command for the gap.
        let moves = first.matches("M ").count();
        assert_eq!(moves, 3);
        assert!(first.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn formats_parse_and_reject() {
        assert_eq!("ascii".parse::<RenderFormat>().unwrap(), RenderFormat::Ascii);
        assert_eq!("svg".parse::<RenderFormat>().unwrap(), RenderFormat::Svg);
        assert!("png".parse::<RenderFormat>().is_err());
    }
}
