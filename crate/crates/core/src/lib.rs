//! Exact construction and verification of `{1, d}`-graphs: finite point sets in
//! the plane joined whenever two points are at distance 1 or `d`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: exact numbers in towers of real quadratic extensions,
//!   plus outward-rounded interval arithmetic;
//! * [`geometry`]: planar points, the `[a, b, c, d]` lattice, rotations;
//! * [`graphs`]: edge classification, the named catalog, JSON and DOT;
//! * [`coloring`]: exact k-colorability, chromatic numbers, forced pairs;
//! * [`spindle`]: the rotate-and-bridge construction and edge substitution;
//! * [`embeddings`]: two-distance embeddings of `K4` and the wheel `W6`;
//! * [`verify`]: named verification cases used by the `twodist` binary.
//!
//! ```
//! use twodist::graphs::{catalog, CatalogId};
//! use twodist::coloring::chromatic_number;
//!
//! let g = catalog(CatalogId::MoserSpindle).unwrap();
//! assert_eq!(g.unit_edges().len(), 11);
//! assert_eq!(chromatic_number(&g.abstract_graph()), 4);
//! ```

pub mod coloring;
pub mod embeddings;
mod error;
pub mod exactnum;
pub mod geometry;
pub mod graphs;
pub mod spindle;
pub mod verify;

pub use error::{Error, Result};
