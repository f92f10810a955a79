//! Exact piecewise-linear braid geometry in ℂ × [0,1].
//!
//! A braid is realized as a family of pairwise-disjoint piecewise-linear
//! strands, each a path of rational breakpoints `(time, position)` with
//! positions in ℚ + ℚi.  Everything is exact: disjointness is certified
//! by sign-of-determinant predicates on rational coordinates, with no
//! floating point and no tolerances anywhere.
//!
//! The bridge to the algebraic side runs in both directions:
//!
//! - [`word_to_pl`] realizes a braid word geometrically, one crossing
//!   gadget per letter;
//! - [`pl_to_word`] sweeps any disjoint family and reads off a braid
//!   word, resolving simultaneous and degenerate configurations by a
//!   lexicographic tie-break;
//! - [`dogleg_connect`] joins any two equinumerous point sets by
//!   two-segment strands, witnessing that the braid groupoid over finite
//!   rational point sets is connected;
//! - [`relabel_isomorphism`] transports braids over one base point set
//!   to braids over another through a pair of mirrored connections, an
//!   isomorphism of the corresponding groups;
//! - [`render`] draws ascii or SVG diagrams, and [`parse_pl`] /
//!   [`print_pl`] read and write the PL file format.

mod dogleg;
mod error;
mod file;
mod pl;
mod point;
mod relabel;
mod render;
mod sweep;

pub use dogleg::dogleg_connect;
pub use error::GeoError;
pub use file::{parse_pl, print_pl};
pub use pl::{touch_time, PLBraid, Strand};
pub use point::{decimal, half, parse_point, parse_rat, rat, rat_string, Point, Rat};
pub use relabel::relabel_isomorphism;
pub use render::{render, RenderFormat};
pub use sweep::{crossing_events, pl_to_word, word_to_pl, CrossingEvent};
