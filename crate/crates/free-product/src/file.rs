//! Line-oriented dagger files.
//!
//! ```text
//! DAGGER m=<m> E=<comma-separated endpoints>
//! 0 -> <free word>
//! 1 -> <free word>
//! ...
//! ```
//!
//! One image line per domain generator, in ascending order, in the free
//! word grammar (`d0 d1^-1`); an identity image is an empty right-hand
//! side.  The printer emits exactly this shape; parse and print
//! round-trip.

use crate::dagger::DaggerAutomorphism;
use crate::error::AutError;
use crate::freeword::FreeWord;

/// Parses a dagger file.
pub fn parse_dagger(text: &str) -> Result<DaggerAutomorphism, AutError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file; expected a DAGGER header"))?;
    let rest = header
        .trim_end()
        .strip_prefix("DAGGER ")
        .ok_or_else(|| parse_err(1, "expected header starting with 'DAGGER '"))?;
    let mut m: Option<usize> = None;
    let mut endpoints: Option<Vec<usize>> = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("m=") {
            m = Some(
                v.parse()
                    .map_err(|_| parse_err(1, format!("bad domain size '{v}'")))?,
            );
        } else if let Some(v) = field.strip_prefix("E=") {
            let parsed = v
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| parse_err(1, format!("bad endpoint '{tok}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            endpoints = Some(parsed);
        } else {
            return Err(parse_err(1, format!("unknown header field '{field}'")));
        }
    }
    let m = m.ok_or_else(|| parse_err(1, "missing m= field"))?;
    let endpoints = endpoints.ok_or_else(|| parse_err(1, "missing E= field"))?;
    if endpoints.len() != m {
        return Err(parse_err(
            1,
            format!("m={m} but E lists {} endpoints", endpoints.len()),
        ));
    }

    let body: Vec<(usize, &str)> = lines
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if body.len() != m {
        return Err(parse_err(
            body.last().map_or(2, |(n, _)| *n),
            format!("expected {m} image lines, found {}", body.len()),
        ));
    }

    let mut images = Vec::with_capacity(m);
    for (slot, &(line_no, line)) in body.iter().enumerate() {
        let (index_part, word_part) = line.split_once("->").ok_or_else(|| {
            parse_err(line_no, "expected an image line like '0 -> d1 d0^-1'")
        })?;
        let index: usize = index_part.trim().parse().map_err(|_| {
            parse_err(line_no, format!("bad generator index '{}'", index_part.trim()))
        })?;
        if index != slot {
            return Err(parse_err(
                line_no,
                format!("image lines must be ascending; expected {slot}, found {index}"),
            ));
        }
        let word: FreeWord = word_part.trim().parse().map_err(|e| match e {
            AutError::Syntax { message, .. } => parse_err(line_no, message),
            other => other,
        })?;
        images.push(word);
    }

    DaggerAutomorphism::new(endpoints, images).map_err(|e| match e {
        AutError::Precondition(message) | AutError::IndexOutOfRange { context: message, .. } => {
            parse_err(1, message)
        }
        other => other,
    })
}

/// Prints a dagger file; inverse of [`parse_dagger`].
pub fn print_dagger(map: &DaggerAutomorphism) -> String {
    format!("{map}\n")
}

fn parse_err(line: usize, message: impl Into<String>) -> AutError {
    AutError::Parse {
        line,
        message: message.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dagger::induced_level_map;
    use braid_core::{BraidWord, GeneralizedBraid};

    #[test]
    fn print_then_parse_round_trips() {
        for (word, endpoints) in [
            ("B2: s0", vec![0, 1]),
            ("B3: s0 s1^-1 s0", vec![0, 1, 2]),
            ("B2: s0 s0", vec![1, 4]),
            ("B1:", vec![3]),
        ] {
            let braid: BraidWord = word.parse().unwrap();
            let map =
                induced_level_map(&GeneralizedBraid::new(braid, endpoints).unwrap()).unwrap();
            let text = print_dagger(&map);
            assert_eq!(parse_dagger(&text).unwrap(), map, "round trip failed:\n{text}");
        }
    }

    #[test]
    fn the_worked_example_parses() {
        let map = parse_dagger("DAGGER m=2 E=0,1\n0 -> d0 d1 d0^-1\n1 -> d0\n").unwrap();
        assert_eq!(map.sigma().unwrap(), vec![1, 0]);
        let braid: BraidWord = "B2: s0".parse().unwrap();
        assert_eq!(
            map,
            induced_level_map(&GeneralizedBraid::from_word(braid)).unwrap()
        );
    }

    #[test]
    fn identity_images_print_and_parse_as_empty_right_hand_sides() {
        let map = DaggerAutomorphism::identity(2);
        let text = print_dagger(&map);
        assert_eq!(text, "DAGGER m=2 E=0,1\n0 -> d0\n1 -> d1\n");
        // A genuinely empty image is not dagger-shaped but still a valid
        // file.
        let parsed = parse_dagger("DAGGER m=1 E=0\n0 ->\n").unwrap();
        assert!(parsed.image(0).is_empty());
    }

    #[test]
    fn errors_name_the_offending_line() {
        let cases = [
            ("", 1, "empty file"),
            ("TOWER kind=finsupp horizon=4", 1, "DAGGER"),
            ("DAGGER m=2 E=0", 1, "E lists 1"),
            ("DAGGER m=1 E=0\n0 -> d0\n1 -> d0", 3, "expected 1 image"),
            ("DAGGER m=1 E=0\nd0", 2, "image line"),
            ("DAGGER m=2 E=0,1\n1 -> d0\n0 -> d1", 2, "ascending"),
            ("DAGGER m=1 E=0\n0 -> q3", 2, "letter"),
            ("DAGGER m=1 E=0\n0 -> d4", 1, "outside the endpoint set"),
        ];
        for (text, line, needle) in cases {
            match parse_dagger(text) {
                Err(AutError::Parse { line: got, message }) => {
                    assert_eq!(got, line, "wrong line for {text:?}: {message}");
                    assert!(
                        message.contains(needle),
                        "message {message:?} missing {needle:?}"
                    );
                }
                other => panic!("expected a parse error for {text:?}, got {other:?}"),
            }
        }
    }
}
