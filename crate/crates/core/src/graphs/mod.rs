//! `{1, d}`-graphs: exact point sets whose edges join points at distance 1 or `d`.

mod abstract_graph;
mod catalog;
mod io;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Tower};
use crate::geometry::{dist2, lattice_dist2, lattice_to_point, LatticeCoord, Point, Qrt33};

pub use abstract_graph::AbstractGraph;
pub use catalog::{catalog, CatalogId, Expected};
pub use io::{from_json, to_dot, to_json};

/// A point set together with its exactly classified unit edges and d-edges.
#[derive(Clone, Debug)]
pub struct TwoDistGraph {
    d2: FieldElement,
    points: Vec<Point>,
    lattice: Option<Vec<LatticeCoord>>,
    unit_edges: Vec<(usize, usize)>,
    d_edges: Vec<(usize, usize)>,
    graph: AbstractGraph,
}

impl TwoDistGraph {
    /// Classifies every pair of `points`; `d2` is the squared second distance.
    pub fn build(points: Vec<Point>, d2: FieldElement) -> Result<TwoDistGraph> {
        let tower = d2.tower().clone();
        check_d2(&d2)?;
        let points = points
            .into_iter()
            .map(|p| p.embed(&tower))
            .collect::<Result<Vec<_>>>()?;
        let one = FieldElement::one(&tower);
        let (unit, d) = classify(points.len(), |i, j| {
            let s = dist2(&points[i], &points[j])?;
            Ok(if s.is_zero() {
                Dist::Zero
            } else if s == one {
                Dist::Unit
            } else if s == d2 {
                Dist::D
            } else {
                Dist::Other
            })
        })?;
        Ok(Self::assemble(d2, points, None, unit, d))
    }

    /// Builds from lattice coordinates using integer arithmetic for the
    /// classification. `d2` must lie in the lattice tower.
    pub fn from_lattice(coords: Vec<LatticeCoord>, d2: FieldElement) -> Result<TwoDistGraph> {
        let lattice = Tower::lattice();
        let d2 = d2.embed(&lattice)?;
        check_d2(&d2)?;
        let target = Qrt33::from_element(&d2).ok_or_else(|| {
            Error::Tower("d2 must have the form p + q*s3*s11 for a lattice graph".into())
        })?;
        let zero = Qrt33::rational(num_traits::Zero::zero());
        let unit = Qrt33::rational(num_traits::One::one());
        let (u, d) = classify(coords.len(), |i, j| {
            let s = lattice_dist2(&coords[i], &coords[j]);
            Ok(if s == zero {
                Dist::Zero
            } else if s == unit {
                Dist::Unit
            } else if s == target {
                Dist::D
            } else {
                Dist::Other
            })
        })?;
        let points = coords.iter().map(lattice_to_point).collect();
        Ok(Self::assemble(d2, points, Some(coords), u, d))
    }

    fn assemble(
        d2: FieldElement,
        points: Vec<Point>,
        lattice: Option<Vec<LatticeCoord>>,
        unit_edges: Vec<(usize, usize)>,
        d_edges: Vec<(usize, usize)>,
    ) -> TwoDistGraph {
        let graph = AbstractGraph::new(
            points.len(),
            unit_edges.iter().chain(d_edges.iter()).copied(),
        );
        TwoDistGraph {
            d2,
            points,
            lattice,
            unit_edges,
            d_edges,
            graph,
        }
    }

    pub fn tower(&self) -> &Arc<Tower> {
        self.d2.tower()
    }

    pub fn d2(&self) -> &FieldElement {
        &self.d2
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The lattice coordinates, when the graph was built from them.
    pub fn lattice_coords(&self) -> Option<&[LatticeCoord]> {
        self.lattice.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Pairs `(i, j)` with `i < j` at distance 1, in lexicographic order.
    pub fn unit_edges(&self) -> &[(usize, usize)] {
        &self.unit_edges
    }

    /// Pairs `(i, j)` with `i < j` at distance `d`, in lexicographic order.
    pub fn d_edges(&self) -> &[(usize, usize)] {
        &self.d_edges
    }

    pub fn edge_count(&self) -> usize {
        self.unit_edges.len() + self.d_edges.len()
    }

    /// The underlying combinatorial graph (both edge kinds).
    pub fn abstract_graph(&self) -> &AbstractGraph {
        &self.graph
    }
}

impl AsRef<AbstractGraph> for TwoDistGraph {
    fn as_ref(&self) -> &AbstractGraph {
        &self.graph
    }
}

fn check_d2(d2: &FieldElement) -> Result<()> {
    let one = FieldElement::one(d2.tower());
    if (d2 - &one).signum() <= 0 {
        return Err(Error::DNotGreaterThanOne);
    }
    Ok(())
}

enum Dist {
    Zero,
    Unit,
    D,
    Other,
}

type EdgeSets = (Vec<(usize, usize)>, Vec<(usize, usize)>);

fn classify(n: usize, mut f: impl FnMut(usize, usize) -> Result<Dist>) -> Result<EdgeSets> {
    let mut unit = Vec::new();
    let mut d = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match f(i, j)? {
                Dist::Zero => return Err(Error::DuplicatePoint(i, j)),
                Dist::Unit => unit.push((i, j)),
                Dist::D => d.push((i, j)),
                Dist::Other => {}
            }
        }
    }
    Ok((unit, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_minus_edge_at_root3() {
        let t = Tower::from_decls(&[("s3", "3")]).unwrap();
        let pts = [
            ("0", "0"),
            ("2", "0"),
            ("1/2", "-s3/2"),
            ("1", "0"),
            ("1/2", "s3/2"),
        ]
        .iter()
        .map(|(x, y)| Point::parse(&t, x, y).unwrap())
        .collect();
        let g = TwoDistGraph::build(pts, FieldElement::from_int(&t, 3)).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(!g.abstract_graph().has_edge(0, 1));
    }

    #[test]
    fn far_points_have_no_edges() {
        let t = Tower::rationals();
        let pts = vec![
            Point::parse(&t, "0", "0").unwrap(),
            Point::parse(&t, "3", "4").unwrap(),
        ];
        let g = TwoDistGraph::build(pts, FieldElement::from_int(&t, 4)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_duplicates_and_small_d() {
        let t = Tower::rationals();
        let p = Point::parse(&t, "1", "2").unwrap();
        assert_eq!(
            TwoDistGraph::build(vec![p.clone(), p.clone()], FieldElement::from_int(&t, 2))
                .unwrap_err(),
            Error::DuplicatePoint(0, 1)
        );
        assert_eq!(
            TwoDistGraph::build(vec![p], FieldElement::one(&t)).unwrap_err(),
            Error::DNotGreaterThanOne
        );
    }

    #[test]
    fn lattice_fast_path_matches_generic_build() {
        let coords: Vec<LatticeCoord> = [
            [0, 0, 0, 0],
            [0, 0, 12, 0],
            [6, 0, 6, 0],
            [6, 0, 18, 0],
            [0, 2, 10, 0],
            [5, 1, 5, -1],
            [5, 3, 15, -1],
        ]
        .into_iter()
        .map(LatticeCoord::from)
        .collect();
        let t = Tower::lattice();
        let d2 = FieldElement::from_int(&t, 3);
        let fast = TwoDistGraph::from_lattice(coords.clone(), d2.clone()).unwrap();
        let slow =
            TwoDistGraph::build(coords.iter().map(lattice_to_point).collect(), d2).unwrap();
        assert_eq!(fast.unit_edges(), slow.unit_edges());
        assert_eq!(fast.d_edges(), slow.d_edges());
    }
}
