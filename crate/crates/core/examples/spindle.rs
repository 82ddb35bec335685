//! The spindle construction on K5 minus an edge at d = sqrt(3).

use twodist::coloring::{chromatic_number, forced_pair};
use twodist::exactnum::FieldElement;
use twodist::graphs::{catalog, CatalogId};
use twodist::spindle::spindle;

fn main() -> twodist::Result<()> {
    let seed = catalog(CatalogId::Root3K5e)?;
    println!("seed: {} vertices, chromatic number {}", seed.len(), chromatic_number(seed.abstract_graph()));
    println!("vertices 0 and 1 forced alike in 4 colors: {}", forced_pair(seed.abstract_graph(), 4, 0, 1)?);

    let s = spindle(&seed, 0, 1, &FieldElement::one(seed.tower()))?;
    println!("rotation: cos = {}, sin = {}", s.cos, s.sin);
    for (v, &i) in s.image_of.iter().enumerate().skip(1) {
        let p = &s.graph.points()[i];
        println!("image of {v} -> vertex {i} at ({}, {})", p.x, p.y);
    }
    println!(
        "spindle: {} vertices, {} edges, chromatic number {}",
        s.graph.len(),
        s.graph.edge_count(),
        chromatic_number(s.graph.abstract_graph())
    );
    Ok(())
}
