//! Vertices that every 4-coloring paints alike, at the exotic distance.

use twodist::coloring::forced_pair;
use twodist::geometry::dist2;
use twodist::graphs::{catalog, CatalogId};

fn main() -> twodist::Result<()> {
    let g = catalog(CatalogId::Exotic13)?;
    let ag = g.abstract_graph();
    let mut pairs = Vec::new();
    for u in 0..g.len() {
        for v in u + 1..g.len() {
            if !ag.has_edge(u, v) && forced_pair(ag, 4, u, v)? {
                pairs.push((u, v));
            }
        }
    }
    println!("forced pairs (0-based): {pairs:?}");
    let gap = dist2(&g.points()[0], &g.points()[1])?;
    println!("|01|^2 = {gap}, about {}", gap.interval(64));
    Ok(())
}
