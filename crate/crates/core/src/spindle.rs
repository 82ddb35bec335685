//! Rotate-and-bridge spindles, and gadget substitution along edges.

use crate::error::{Error, Result};
use crate::exactnum::FieldElement;
use crate::geometry::{dist2, rotate_about, sine_for, spindle_cos, Point};
use crate::graphs::TwoDistGraph;

#[derive(Clone, Debug)]
pub struct SpindleResult {
    pub graph: TwoDistGraph,
    pub pivot: usize,
    /// `(moved, image of moved)`, joined by the bridge edge.
    pub bridged: (usize, usize),
    pub cos: FieldElement,
    pub sin: FieldElement,
    /// Index in `graph` of the image of each vertex of the seed.
    pub image_of: Vec<usize>,
}

/// Unites `g` with its rotation about `pivot` by the angle that carries `moved`
/// to a point at squared distance `bridge2` from itself.
///
/// The rotation is counterclockwise. The tower grows by one generator when the
/// sine is not already available. The original vertices keep their indices;
/// images that are new points follow in order.
pub fn spindle(
    g: &TwoDistGraph,
    pivot: usize,
    moved: usize,
    bridge2: &FieldElement,
) -> Result<SpindleResult> {
    let n = g.len();
    for v in [pivot, moved] {
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let bridge2 = bridge2.embed(g.tower())?;
    if bridge2.is_zero() || pivot == moved {
        return Err(Error::DegenerateRotation);
    }
    if !bridge2.is_one() && &bridge2 != g.d2() {
        return Err(Error::BridgeNotForbidden);
    }
    let pts = g.points();
    let r2 = dist2(&pts[pivot], &pts[moved])?;
    let cos = spindle_cos(&r2, &bridge2)?;
    let (tower, sin) = sine_for(&cos)?;
    let cos = cos.embed(&tower)?;
    let originals = pts
        .iter()
        .map(|p| p.embed(&tower))
        .collect::<Result<Vec<_>>>()?;
    let centre = originals[pivot].clone();

    let mut points = originals.clone();
    let mut image_of = Vec::with_capacity(n);
    for p in &originals {
        let q = rotate_about(&centre, &cos, &sin, p)?;
        match points.iter().position(|x| *x == q) {
            Some(i) => image_of.push(i),
            None => {
                image_of.push(points.len());
                points.push(q);
            }
        }
    }
    let bridged = (moved, image_of[moved]);
    let graph = TwoDistGraph::build(points, g.d2().embed(&tower)?)?;
    debug_assert_eq!(
        dist2(&graph.points()[bridged.0], &graph.points()[bridged.1]).ok(),
        bridge2.embed(&tower).ok()
    );
    Ok(SpindleResult {
        graph,
        pivot,
        bridged,
        cos,
        sin,
        image_of,
    })
}

/// Attaches a copy of `gadget` to every pair of `base` points at squared
/// distance `carrier_len2`, placing anchor `A` on the lower-indexed point and
/// `B` on the other with an orientation-preserving motion (orientation-reversing
/// when `mirrored`). Coincident points are merged, and edges are classified
/// with the gadget's `d2`.
///
/// The base is given as bare points because it generally lives at a scale where
/// it is not itself a `{1, d}`-graph. All points must share one tower that also
/// contains the gadget's generators.
pub fn compose_by_edge_substitution(
    base: &[Point],
    carrier_len2: &FieldElement,
    gadget: &TwoDistGraph,
    anchors: (usize, usize),
    mirrored: bool,
) -> Result<TwoDistGraph> {
    let tower = carrier_len2.tower().clone();
    let (ia, ib) = anchors;
    for v in [ia, ib] {
        if v >= gadget.len() {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let gpts = gadget
        .points()
        .iter()
        .map(|p| p.embed(&tower))
        .collect::<Result<Vec<_>>>()?;
    let (a, b) = (&gpts[ia], &gpts[ib]);
    if &dist2(a, b)? != carrier_len2 {
        return Err(Error::AnchorDistanceMismatch);
    }
    let ab = b.sub(a);
    let local: Vec<Point> = gpts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ia && i != ib)
        .map(|(_, p)| {
            let v = p.sub(a);
            if mirrored {
                reflect_across(&v, &ab)
            } else {
                v
            }
        })
        .collect();

    let mut points: Vec<Point> = base.to_vec();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            if dist2(&base[i], &base[j])? != *carrier_len2 {
                continue;
            }
            let pq = base[j].sub(&base[i]);
            // rotation taking the direction of AB to that of PQ (equal lengths)
            let cos = (&ab.x * &pq.x + &ab.y * &pq.y).checked_div(carrier_len2)?;
            let sin = (&ab.x * &pq.y - &ab.y * &pq.x).checked_div(carrier_len2)?;
            let origin = Point::origin(&tower);
            for v in &local {
                let q = rotate_about(&origin, &cos, &sin, v)?.add(&base[i]);
                if !points.contains(&q) {
                    points.push(q);
                }
            }
        }
    }
    TwoDistGraph::build(points, gadget.d2().embed(&tower)?)
}

/// Reflection of `v` in the line through the origin along `axis`.
fn reflect_across(v: &Point, axis: &Point) -> Point {
    let n2 = &axis.x * &axis.x + &axis.y * &axis.y;
    let dot = &v.x * &axis.x + &v.y * &axis.y;
    let k = (&dot + &dot).checked_div(&n2).expect("axis is non-zero");
    axis.scale(&k).sub(v)
}
