//! Which small rigid templates admit planar `{1, d}` realizations.

mod k4;
pub mod poly;
mod uniqueness;
mod w6;

pub use k4::{k4_spectrum, K4Solution, K4Spectrum, K4_EDGES};
pub use poly::{Poly, RealRoot};
pub use uniqueness::{verify_w6_uniqueness, UniquenessReport};
pub use w6::{
    w6_embeddings, w6_embeddings_with_tol, w6_spectrum, ConventionCounts, W6Report, W6Root,
    W6Solution,
};

/// Length label of a template edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Unit,
    D,
}

impl Label {
    pub fn symbol(self) -> char {
        match self {
            Label::Unit => '1',
            Label::D => 'd',
        }
    }
}
