//! `braid` — batch queries against braid words, ω-braid towers, induced
//! free-group automorphisms, and exact PL geometry.
//!
//! Exit codes: 0 for success or a positive answer, 1 for a negative
//! mathematical answer (not equivalent, nothing found within the bound,
//! a failed validation report), 2 for usage and input errors, 3 for
//! internal errors.  Every bounded computation states its bound in its
//! output.

use std::fs;
use std::path::{Path, PathBuf};

use braid_core::random::random_word;
use braid_core::{equivalent, normal_form, BraidError, BraidWord, GeneralizedBraid};
use braid_geometry::{parse_pl, pl_to_word, render, word_to_pl, GeoError, RenderFormat};
use clap::{Parser, Subcommand};
use free_product::{
    artin_action, check_dagger, check_diagram, parse_dagger, reconstruct_braid, AutError, FreeWord,
};
use omega_tower::{
    abelianization_push, parse_tower, towers_first_difference, validate_coherence,
    validate_surjectivity, OmegaBraidTower, TowerError,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "braid", about = "Braid words, ω-braid towers, induced automorphisms, and exact PL geometry", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Garside left-greedy normal form of a braid word.
    Nf { word: String },
    /// Decide whether two braid words represent the same braid.
    Eq { left: String, right: String },
    /// Underlying permutation of a braid word, in cycle notation.
    Perm { word: String },
    /// Exponent sum of a braid word (its abelianization).
    Expsum { word: String },
    /// Delete the strand that starts at the given position.
    Delete { word: String, strand: usize },
    /// Validate a tower file: deletion coherence up to the horizon,
    /// plus the endpoint labels seen so far as surjectivity evidence.
    TowerCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
    /// Compare two tower files level by level up to the horizon.
    TowerEq {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
    /// Apply a braid word to a free-group word (d0, d1^-1, ...).
    Act { braid: String, word: String },
    /// Check the conjugacy, bijection, product, and invertibility
    /// conditions of a DAGGER file.
    DaggerCheck { file: PathBuf },
    /// Check that the smaller DAGGER map commutes with the larger one
    /// through the projection connecting their endpoint sets.
    DiagramCheck { big: PathBuf, small: PathBuf },
    /// Search for a braid word inducing the DAGGER map, shortest first.
    Reconstruct {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
    /// Realize a braid word geometrically and read it back; without a
    /// word, a seeded random word over 4 strands is used.
    Roundtrip {
        word: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
    /// Draw a braid word or a PL file as an ascii or svg diagram.
    Render {
        input: String,
        #[arg(long, default_value = "ascii")]
        format: RenderFormat,
    },
    /// Canonical abelianization representative of a pure braid word,
    /// supported on the last two strands.
    Push { word: String },
}

enum Outcome {
    Pass(String),
    Fail(String),
}

enum CliError {
    Usage(String),
    Internal(String),
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(Outcome::Pass(text)) => {
            emit(&text);
            0
        }
        Ok(Outcome::Fail(text)) => {
            emit(&text);
            1
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(CliError::Internal(message)) => {
            eprintln!("internal error: {message}");
            3
        }
    };
    std::process::exit(code);
}

fn emit(text: &str) {
    if text.ends_with('\n') {
        print!("{text}");
    } else {
        println!("{text}");
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Nf { word } => {
            let word = parse_word(&word)?;
            Ok(Outcome::Pass(normal_form(&word).to_string()))
        }
        Command::Eq { left, right } => {
            let left = parse_word(&left)?;
            let right = parse_word(&right)?;
            if equivalent(&left, &right).map_err(braid_err)? {
                Ok(Outcome::Pass("equivalent".into()))
            } else {
                Ok(Outcome::Fail("not equivalent".into()))
            }
        }
        Command::Perm { word } => {
            let word = parse_word(&word)?;
            Ok(Outcome::Pass(word.underlying_permutation().to_string()))
        }
        Command::Expsum { word } => {
            let word = parse_word(&word)?;
            Ok(Outcome::Pass(word.exponent_sum().to_string()))
        }
        Command::Delete { word, strand } => {
            let braid = GeneralizedBraid::from_word(parse_word(&word)?);
            let deleted = braid.delete_strand(strand).map_err(braid_err)?;
            Ok(Outcome::Pass(deleted.to_string()))
        }
        Command::TowerCheck { file, horizon } => {
            let tower = load_tower(&file)?;
            let report = validate_coherence(&tower, horizon);
            if !report.is_coherent() {
                return Ok(Outcome::Fail(report.to_string()));
            }
            let seen = validate_surjectivity(&tower, horizon).map_err(tower_err)?;
            let missing: Vec<String> = (0..horizon)
                .filter(|label| !seen.contains(label))
                .map(|label| label.to_string())
                .collect();
            let coverage = if missing.is_empty() {
                format!("endpoint labels 0..{horizon} all appear")
            } else {
                // Missing labels may still appear at higher levels, so
                // this is evidence, not a verdict.
                format!(
                    "endpoint labels {} not seen yet below level {horizon}",
                    missing.join(", ")
                )
            };
            Ok(Outcome::Pass(format!(
                "coherent up to level {horizon}; {coverage}"
            )))
        }
        Command::TowerEq {
            left,
            right,
            horizon,
        } => {
            let left = load_tower(&left)?;
            let right = load_tower(&right)?;
            match towers_first_difference(&left, &right, horizon).map_err(tower_err)? {
                None => Ok(Outcome::Pass(format!("equivalent up to level {horizon}"))),
                Some(level) => Ok(Outcome::Fail(format!(
                    "towers differ at level {level} (checked up to level {horizon})"
                ))),
            }
        }
        Command::Act { braid, word } => {
            let braid = parse_word(&braid)?;
            let word: FreeWord = word.parse().map_err(aut_err)?;
            let image = artin_action(&braid, &word).map_err(aut_err)?;
            Ok(Outcome::Pass(image.to_string()))
        }
        Command::DaggerCheck { file } => {
            let map = parse_dagger(&read(&file)?).map_err(aut_err)?;
            let report = check_dagger(&map);
            if report.is_pass() {
                Ok(Outcome::Pass(
                    "dagger automorphism: all conditions hold".into(),
                ))
            } else {
                Ok(Outcome::Fail(report.to_string()))
            }
        }
        Command::DiagramCheck { big, small } => {
            let big = parse_dagger(&read(&big)?).map_err(aut_err)?;
            let small = parse_dagger(&read(&small)?).map_err(aut_err)?;
            let report = check_diagram(&big, &small).map_err(aut_err)?;
            if report.is_pass() {
                Ok(Outcome::Pass("diagram commutes".into()))
            } else {
                Ok(Outcome::Fail(report.to_string()))
            }
        }
        Command::Reconstruct { file, max_length } => {
            let map = parse_dagger(&read(&file)?).map_err(aut_err)?;
            match reconstruct_braid(&map, max_length).map_err(aut_err)? {
                Some(word) => Ok(Outcome::Pass(word.to_string())),
                None => Ok(Outcome::Fail(format!(
                    "no braid word of length at most {max_length} induces this map"
                ))),
            }
        }
        Command::Roundtrip {
            word,
            seed,
            max_length,
        } => {
            let word = match word {
                Some(text) => parse_word(&text)?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    random_word(&mut rng, 4, max_length)
                }
            };
            let pl = word_to_pl(&GeneralizedBraid::from_word(word.clone())).map_err(geo_err)?;
            let back = pl_to_word(&pl).map_err(geo_err)?;
            if equivalent(&word, back.word()).map_err(braid_err)? {
                Ok(Outcome::Pass(format!("round trip preserved {word}")))
            } else {
                Ok(Outcome::Fail(format!(
                    "round trip changed {word} into {}",
                    back.word()
                )))
            }
        }
        Command::Render { input, format } => {
            let pl = match input.parse::<BraidWord>() {
                Ok(word) => word_to_pl(&GeneralizedBraid::from_word(word)).map_err(geo_err)?,
                Err(word_error) => {
                    if Path::new(&input).exists() {
                        parse_pl(&read(Path::new(&input))?).map_err(geo_err)?
                    } else {
                        return Err(CliError::Usage(format!(
                            "'{input}' is not a braid word ({word_error}) and no such file exists"
                        )));
                    }
                }
            };
            Ok(Outcome::Pass(render(&pl, format).map_err(geo_err)?))
        }
        Command::Push { word } => {
            let word = parse_word(&word)?;
            let pushed = abelianization_push(&word).map_err(braid_err)?;
            Ok(Outcome::Pass(pushed.to_string()))
        }
    }
}

fn parse_word(text: &str) -> Result<BraidWord, CliError> {
    text.parse().map_err(braid_err)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_tower(path: &Path) -> Result<OmegaBraidTower, CliError> {
    parse_tower(&read(path)?).map_err(tower_err)
}

fn braid_err(e: BraidError) -> CliError {
    match e {
        BraidError::Internal(_) | BraidError::BudgetExceeded { .. } => {
            CliError::Internal(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    }
}

fn tower_err(e: TowerError) -> CliError {
    match e {
        TowerError::Braid(inner) => braid_err(inner),
        _ => CliError::Usage(e.to_string()),
    }
}

fn aut_err(e: AutError) -> CliError {
    match e {
        AutError::Extraction(_) => CliError::Internal(e.to_string()),
        AutError::Braid(inner) => braid_err(inner),
        AutError::Tower(inner) => tower_err(inner),
        _ => CliError::Usage(e.to_string()),
    }
}

fn geo_err(e: GeoError) -> CliError {
    match e {
        GeoError::Internal(_) => CliError::Internal(e.to_string()),
        GeoError::Braid(inner) => braid_err(inner),
        _ => CliError::Usage(e.to_string()),
    }
}
