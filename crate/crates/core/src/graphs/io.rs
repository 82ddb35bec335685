//! Graph files (JSON) and Graphviz export.
//!
//! Edges are never written: loading a file always re-derives them from the
//! coordinates.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::TwoDistGraph;
use crate::error::{Error, Result};
use crate::exactnum::interval::decimal;
use crate::exactnum::{FieldElement, Tower};
use crate::geometry::{lattice_to_point, LatticeCoord, Point};

#[derive(Serialize, Deserialize)]
struct GraphFile {
    tower: Vec<GeneratorDecl>,
    d2: String,
    vertices: Vec<Vertex>,
    #[serde(default)]
    lattice: bool,
}

#[derive(Serialize, Deserialize)]
struct GeneratorDecl {
    name: String,
    square: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Vertex {
    Lattice([i64; 4]),
    Exact([String; 2]),
}

/// Serializes the tower, `d2` and coordinates. Lattice-built graphs keep
/// their `[a, b, c, d]` form when every coordinate fits in an `i64`.
pub fn to_json(g: &TwoDistGraph) -> String {
    let tower = g
        .tower()
        .decls()
        .into_iter()
        .map(|(name, square)| GeneratorDecl { name, square })
        .collect();
    let lattice_form = g.lattice_coords().and_then(|cs| {
        cs.iter()
            .map(|c| {
                Some([
                    i64::try_from(&c.a).ok()?,
                    i64::try_from(&c.b).ok()?,
                    i64::try_from(&c.c).ok()?,
                    i64::try_from(&c.d).ok()?,
                ])
            })
            .collect::<Option<Vec<_>>>()
    });
    let lattice = lattice_form.is_some();
    let vertices = match lattice_form {
        Some(cs) => cs.into_iter().map(Vertex::Lattice).collect(),
        None => g
            .points()
            .iter()
            .map(|p| Vertex::Exact([p.x.to_string(), p.y.to_string()]))
            .collect(),
    };
    let file = GraphFile {
        tower,
        d2: g.d2().to_string(),
        vertices,
        lattice,
    };
    serde_json::to_string_pretty(&file).expect("graph files always serialize")
}

/// Parses a graph file and classifies its edges.
pub fn from_json(text: &str) -> Result<TwoDistGraph> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph file: {e}")))?;
    let decls: Vec<(&str, &str)> = file
        .tower
        .iter()
        .map(|g| (g.name.as_str(), g.square.as_str()))
        .collect();
    let tower = Tower::from_decls(&decls)?;
    let d2 = FieldElement::parse(&tower, &file.d2)?;
    if file.vertices.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let all_lattice = file.vertices.iter().all(|v| matches!(v, Vertex::Lattice(_)));
    if file.lattice && all_lattice && tower.same_as(&Tower::lattice()) {
        let coords = file
            .vertices
            .iter()
            .map(|v| match v {
                Vertex::Lattice(c) => LatticeCoord::from(*c),
                Vertex::Exact(_) => unreachable!(),
            })
            .collect();
        return TwoDistGraph::from_lattice(coords, d2);
    }
    let points = file
        .vertices
        .iter()
        .map(|v| match v {
            Vertex::Lattice(c) => lattice_to_point(&LatticeCoord::from(*c)).embed(&tower),
            Vertex::Exact([x, y]) => Point::parse(&tower, x, y),
        })
        .collect::<Result<Vec<_>>>()?;
    TwoDistGraph::build(points, d2)
}

/// Graphviz text: unit edges red, d-edges blue, positions to six decimals.
pub fn to_dot(g: &TwoDistGraph) -> String {
    let width = BigRational::new(1.into(), 1_000_000.into());
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (i, p) in g.points().iter().enumerate() {
        let (xl, xh) = p.x.to_interval(&width);
        let (yl, yh) = p.y.to_interval(&width);
        let two = BigRational::from_integer(2.into());
        let x = decimal(&((xl + xh) / &two), 6);
        let y = decimal(&((yl + yh) / &two), 6);
        writeln!(out, "  {i} [pos=\"{x},{y}!\"];").unwrap();
    }
    for &(u, v) in g.unit_edges() {
        writeln!(out, "  {u} -- {v} [color=red];").unwrap();
    }
    for &(u, v) in g.d_edges() {
        writeln!(out, "  {u} -- {v} [color=blue];").unwrap();
    }
    out.push_str("}\n");
    out
}
