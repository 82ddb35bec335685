//! The named graphs, rebuilt from their published coordinates.

use std::fmt;
use std::str::FromStr;

use super::TwoDistGraph;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Tower};
use crate::geometry::{LatticeCoord, Point};
use crate::spindle::{compose_by_edge_substitution, spindle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    MoserSpindle,
    K5Golden,
    Root3K5e,
    Root3Spindled9,
    Root6K5e,
    Root6Spindled9,
    Root2_13,
    Exotic13,
    ExoticSpindled25,
    Smart1_9,
    Smart2_33,
    Two26,
    TwoRoot3_103,
    Composed100,
}

/// Counts a catalog entry is known to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub vertices: usize,
    pub unit_edges: usize,
    pub d_edges: usize,
    /// `None` where the chromatic number is not computed directly.
    pub chromatic: Option<usize>,
}

const fn exp(vertices: usize, unit_edges: usize, d_edges: usize, chi: usize) -> Expected {
    Expected {
        vertices,
        unit_edges,
        d_edges,
        chromatic: if chi == 0 { None } else { Some(chi) },
    }
}

impl CatalogId {
    pub const ALL: [CatalogId; 14] = [
        CatalogId::MoserSpindle,
        CatalogId::K5Golden,
        CatalogId::Root3K5e,
        CatalogId::Root3Spindled9,
        CatalogId::Root6K5e,
        CatalogId::Root6Spindled9,
        CatalogId::Root2_13,
        CatalogId::Exotic13,
        CatalogId::ExoticSpindled25,
        CatalogId::Smart1_9,
        CatalogId::Smart2_33,
        CatalogId::Two26,
        CatalogId::TwoRoot3_103,
        CatalogId::Composed100,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::MoserSpindle => "moser_spindle",
            CatalogId::K5Golden => "k5_golden",
            CatalogId::Root3K5e => "root3_k5e",
            CatalogId::Root3Spindled9 => "root3_spindled9",
            CatalogId::Root6K5e => "root6_k5e",
            CatalogId::Root6Spindled9 => "root6_spindled9",
            CatalogId::Root2_13 => "root2_13",
            CatalogId::Exotic13 => "exotic_13",
            CatalogId::ExoticSpindled25 => "exotic_spindled25",
            CatalogId::Smart1_9 => "smart1_9",
            CatalogId::Smart2_33 => "smart2_33",
            CatalogId::Two26 => "two26",
            CatalogId::TwoRoot3_103 => "tworoot3_103",
            CatalogId::Composed100 => "composed100",
        }
    }

    pub fn expected(self) -> Expected {
        match self {
            CatalogId::MoserSpindle => exp(7, 11, 0, 4),
            CatalogId::K5Golden => exp(5, 5, 5, 5),
            CatalogId::Root3K5e => exp(5, 6, 3, 4),
            CatalogId::Root3Spindled9 => exp(9, 13, 6, 5),
            CatalogId::Root6K5e => exp(5, 5, 4, 4),
            CatalogId::Root6Spindled9 => exp(9, 11, 8, 5),
            CatalogId::Root2_13 => exp(13, 20, 14, 5),
            CatalogId::Exotic13 => exp(13, 19, 14, 4),
            CatalogId::ExoticSpindled25 => exp(25, 39, 28, 5),
            CatalogId::Smart1_9 => exp(9, 12, 7, 4),
            CatalogId::Smart2_33 => exp(33, 70, 31, 4),
            CatalogId::Two26 => exp(26, 75, 10, 5),
            CatalogId::TwoRoot3_103 => exp(103, 312, 177, 5),
            // 9 + 13 * 7 = 100 points are placed; 16 of them coincide exactly
            CatalogId::Composed100 => exp(84, 212, 119, 0),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CatalogId> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Builds the named graph from scratch.
pub fn catalog(id: CatalogId) -> Result<TwoDistGraph> {
    match id {
        CatalogId::MoserSpindle => lattice(&MOSER, "4"),
        CatalogId::K5Golden => exact(
            &[("s5", "5"), ("r", "10 + 2*s5")],
            "(3 + s5)/2",
            &[
                ("0", "0"),
                ("1", "0"),
                ("1 + (s5 - 1)/4", "r/4"),
                ("1/2", "(r + 4*s5/r)/4"),
                ("-(s5 - 1)/4", "r/4"),
            ],
        ),
        CatalogId::Root3K5e => exact(
            &[("s3", "3"), ("s5", "5")],
            "3",
            &[
                ("0", "0"),
                ("2", "0"),
                ("1/2", "-s3/2"),
                ("1", "0"),
                ("1/2", "s3/2"),
            ],
        ),
        CatalogId::Root3Spindled9 => Ok(spindle_of(CatalogId::Root3K5e)?),
        CatalogId::Root6K5e => exact(
            &[("s2", "2"), ("s3", "3"), ("s7", "7")],
            "2 + s3",
            &[
                ("0", "0"),
                ("s2*s3/2", "-s2/2"),
                ("-s2/2", "-s2/2"),
                ("(-s2 + s2*s3)/4", "(-s2 - s2*s3)/4"),
                ("(-s2 + s2*s3)/4", "(s2 + s2*s3)/4"),
            ],
        ),
        CatalogId::Root6Spindled9 => Ok(spindle_of(CatalogId::Root6K5e)?),
        CatalogId::Root2_13 => exact(
            &[("s7", "7")],
            "2",
            &[
                ("1/2", "1/2"),
                ("0", "0"),
                ("1", "0"),
                ("1", "1"),
                ("0", "1"),
                ("1/4 - s7/4", "3/4 - s7/4"),
                ("3/4 + s7/4", "1/4 + s7/4"),
                ("1/2", "s7/2"),
                ("1/4 - s7/4", "1/4 + s7/4"),
                ("-s7/2", "1/2"),
                ("1 + s7/2", "1/2"),
                ("3/4 + s7/4", "3/4 - s7/4"),
                ("1/2", "1 - s7/2"),
            ],
        ),
        CatalogId::Exotic13 => exact(
            &[("s3", "3"), ("q3", "s3"), ("s2", "2")],
            "(2*q3*s2 + 2*s3 + 2)/4",
            &[
                ("(q3*s2 - s3 + 1)/4", "(s3*q3*s2 + s3 + 1)/4"),
                ("(-q3*s2 + s3 - 1)/4", "(s3*q3*s2 + s3 + 1)/4"),
                ("(q3*s2 + s3 + 1)/4", "(s3*q3*s2 + s3 - 1)/4"),
                ("(-q3*s2 - s3 - 1)/4", "(s3*q3*s2 + s3 - 1)/4"),
                ("(q3*s2 + s3 + 1)/4", "(s3*q3*s2 + s3 + 3)/4"),
                ("(-q3*s2 - s3 - 1)/4", "(s3*q3*s2 + s3 + 3)/4"),
                ("(s3*q3*s2 - q3*s2)/4", "(s3*q3*s2 - q3*s2 + 2*s3 - 2)/4"),
                ("(-s3*q3*s2 + q3*s2)/4", "(s3*q3*s2 - q3*s2 + 2*s3 - 2)/4"),
                ("1", "0"),
                ("-1", "0"),
                ("1/2", "s3/2"),
                ("-1/2", "s3/2"),
                ("0", "0"),
            ],
        ),
        CatalogId::ExoticSpindled25 => Ok(spindle_of(CatalogId::Exotic13)?),
        CatalogId::Smart1_9 => lattice(&SMART1, "3/2 + s3*s11/6"),
        CatalogId::Smart2_33 => lattice(&SMART2, "5/3"),
        CatalogId::Two26 => lattice(&TWO26, "4"),
        CatalogId::TwoRoot3_103 => lattice(&TWOROOT3_103, "4/3"),
        CatalogId::Composed100 => composed100(),
    }
}

fn spindle_of(seed: CatalogId) -> Result<TwoDistGraph> {
    let g = catalog(seed)?;
    let one = FieldElement::one(g.tower());
    Ok(spindle(&g, 0, 1, &one)?.graph)
}

fn exact(decls: &[(&str, &str)], d2: &str, pts: &[(&str, &str)]) -> Result<TwoDistGraph> {
    let t = Tower::from_decls(decls)?;
    let points = pts
        .iter()
        .map(|(x, y)| Point::parse(&t, x, y))
        .collect::<Result<Vec<_>>>()?;
    TwoDistGraph::build(points, FieldElement::parse(&t, d2)?)
}

fn lattice(coords: &[[i64; 4]], d2: &str) -> Result<TwoDistGraph> {
    let d2 = FieldElement::parse(&Tower::lattice(), d2)?;
    TwoDistGraph::from_lattice(coords.iter().copied().map(LatticeCoord::from).collect(), d2)
}

/// The 9-vertex spindle shrunk by `sqrt(3)`, with a copy of the 7-vertex block
/// of `smart1_9` hung on each of its edges of length `1/sqrt(3)`.
fn composed100() -> Result<TwoDistGraph> {
    let t = Tower::from_decls(&[("s3", "3"), ("s5", "5"), ("s11", "11")])?;
    let base = catalog(CatalogId::Root3Spindled9)?;
    let shrink = FieldElement::parse(&t, "s3/3")?;
    let points = base
        .points()
        .iter()
        .map(|p| Ok(p.embed(&t)?.scale(&shrink)))
        .collect::<Result<Vec<_>>>()?;
    let gadget = catalog(CatalogId::Smart1_9)?;
    let carrier = FieldElement::from_ratio(&t, 1, 3);
    compose_by_edge_substitution(&points, &carrier, &gadget, (0, 1), false)
}

const MOSER: [[i64; 4]; 7] = [
    [0, 0, 0, 0],
    [0, 0, 12, 0],
    [6, 0, 6, 0],
    [6, 0, 18, 0],
    [0, 2, 10, 0],
    [5, 1, 5, -1],
    [5, 3, 15, -1],
];

/// `A`, `B`, then vertices 1 to 7.
const SMART1: [[i64; 4]; 9] = [
    [0, 0, 0, 0],
    [4, 0, 0, 0],
    [1, 3, 3, -1],
    [0, 0, 12, 0],
    [-1, -3, 9, 1],
    [-1, 3, 3, 1],
    [-2, 0, 6, 0],
    [0, 0, 6, 2],
    [5, 3, 9, 1],
];

/// `A`, `B`, then vertices 1 to 31.
const SMART2: [[i64; 4]; 33] = [
    [0, 0, 0, 0], [4, 0, 0, 0], [2, 0, 0, 2], [-2, 0, 0, 2], [1, 3, -3, 1], [1, -3, 3, 1],
    [-1, 3, -3, -1], [-1, -3, 3, -1], [0, 0, -12, 0], [-1, 3, 3, 1], [-1, -3, -3, 1],
    [6, 0, 6, 0], [6, 0, -6, 0], [5, 1, 5, -1], [5, -1, -5, -1], [1, 3, 3, -1], [1, -3, -3, -1],
    [5, 3, -3, 1], [5, -3, 3, 1], [10, 0, 0, -2], [3, -3, 3, -1], [3, 3, 3, 1], [3, -3, -3, 1],
    [7, 3, -9, 1], [1, 3, 9, 1], [1, -3, -9, 1], [5, 3, 3, -1], [5, -3, -3, -1], [7, 3, 9, -1],
    [7, -3, -9, -1], [-2, 0, 6, 0], [-2, 0, -6, 0], [1, 3, -9, -1],
];

const TWO26: [[i64; 4]; 26] = [
    [-2, 0, 0, 2], [2, 0, 0, 2], [0, 0, 0, 0], [0, 0, 0, 4], [0, 0, -6, 2], [0, 0, 6, 2],
    [-1, -3, 3, 3], [1, 3, 3, 3], [-3, -3, 3, 1], [3, 3, 3, 1], [-1, -3, -3, 1], [1, 3, -3, 1],
    [-4, 0, 0, 0], [4, 0, 0, 0], [3, -3, -3, 1], [-3, 3, -3, 1], [1, -3, -3, 3], [-1, 3, -3, 3],
    [1, -3, 3, 1], [-1, 3, 3, 1], [-2, 0, 6, 0], [2, 0, 6, 0], [-2, 0, -6, 0], [2, 0, -6, 0],
    [0, -6, 0, 2], [0, 6, 0, 2],
];

const TWOROOT3_103: [[i64; 4]; 103] = [
    [0, 0, 0, 0], [6, 0, 6, 0], [0, 0, 12, 0], [-6, 0, 6, 0], [-6, 0, -6, 0], [0, 0, -12, 0],
    [6, 0, -6, 0], [0, -2, -10, 0], [0, 2, -10, 0], [0, -2, 10, 0], [0, 2, 10, 0],
    [-2, 0, 0, -2], [2, 0, 0, -2], [-2, 0, 0, 2], [2, 0, 0, 2], [-5, 1, -5, -1],
    [5, -1, -5, -1], [-5, -1, -5, 1], [5, 1, -5, 1], [-1, 3, -3, -1], [1, -3, -3, -1],
    [-1, -3, -3, 1], [1, 3, -3, 1], [-1, -3, 3, -1], [1, 3, 3, -1], [-1, 3, 3, 1],
    [1, -3, 3, 1], [-5, -1, 5, -1], [5, 1, 5, -1], [-5, 1, 5, 1], [5, -1, 5, 1], [0, -6, -6, 0],
    [0, 6, -6, 0], [0, -6, 6, 0], [0, 6, 6, 0], [-3, 3, -3, -3], [3, -3, -3, -3],
    [-3, -3, -3, 3], [3, 3, -3, 3], [-3, -3, 3, -3], [3, 3, 3, -3], [-3, 3, 3, 3],
    [3, -3, 3, 3], [-4, 0, 0, 0], [4, 0, 0, 0], [-2, 0, -6, 0], [2, 0, -6, 0], [-2, 0, 6, 0],
    [2, 0, 6, 0], [0, -2, -2, 0], [0, 2, -2, 0], [0, -2, 2, 0], [0, 2, 2, 0], [1, -1, -1, -1],
    [-1, 1, -1, -1], [-1, -1, -1, 1], [1, 1, -1, 1], [-1, -1, 1, -1], [1, 1, 1, -1],
    [1, -1, 1, 1], [-1, 1, 1, 1], [8, 0, 0, 0], [4, 0, 12, 0], [-4, 0, 12, 0], [-8, 0, 0, 0],
    [-4, 0, -12, 0], [4, 0, -12, 0], [0, -4, -4, 0], [0, 4, -4, 0], [0, -4, 4, 0], [0, 4, 4, 0],
    [-2, 2, -2, -2], [2, -2, -2, -2], [-2, -2, -2, 2], [2, 2, -2, 2], [-2, -2, 2, -2],
    [2, 2, 2, -2], [-2, 2, 2, 2], [2, -2, 2, 2], [-4, 2, -2, 0], [4, -2, -2, 0], [-4, 2, 2, 0],
    [4, -2, 2, 0], [1, -1, -7, 1], [-1, 1, -7, 1], [-3, 1, -5, 1], [3, -1, -5, 1],
    [-3, 1, 5, -1], [3, -1, 5, -1], [1, -1, 7, -1], [-1, 1, 7, -1], [-4, -2, -2, 0],
    [4, 2, -2, 0], [-4, -2, 2, 0], [4, 2, 2, 0], [-1, -1, -7, -1], [1, 1, -7, -1],
    [-3, -1, -5, -1], [3, 1, -5, -1], [-3, -1, 5, 1], [3, 1, 5, 1], [-1, -1, 7, 1],
    [1, 1, 7, 1],
];
