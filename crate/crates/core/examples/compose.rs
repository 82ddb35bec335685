//! Hanging a gadget on every edge of a base configuration.

use twodist::exactnum::{FieldElement, Tower};
use twodist::graphs::{catalog, CatalogId};
use twodist::spindle::compose_by_edge_substitution;

fn main() -> twodist::Result<()> {
    let t = Tower::from_decls(&[("s3", "3"), ("s5", "5"), ("s11", "11")])?;
    let base = catalog(CatalogId::Root3Spindled9)?;
    let shrink = FieldElement::parse(&t, "s3/3")?;
    let points = base
        .points()
        .iter()
        .map(|p| Ok(p.embed(&t)?.scale(&shrink)))
        .collect::<twodist::Result<Vec<_>>>()?;
    let gadget = catalog(CatalogId::Smart1_9)?;
    let carrier = FieldElement::from_ratio(&t, 1, 3);
    for mirrored in [false, true] {
        let g = compose_by_edge_substitution(&points, &carrier, &gadget, (0, 1), mirrored)?;
        println!(
            "mirrored = {mirrored}: {} placements, {} distinct vertices, {} unit edges, {} d-edges",
            9 + base.unit_edges().len() * 7,
            g.len(),
            g.unit_edges().len(),
            g.d_edges().len()
        );
    }
    Ok(())
}
