//! Rebuilds every catalog graph and prints its vertex and edge counts.

use twodist::graphs::{catalog, CatalogId};

fn main() -> Result<(), twodist::Error> {
    for id in CatalogId::ALL {
        let start = std::time::Instant::now();
        let g = catalog(id)?;
        let e = id.expected();
        let ok = g.len() == e.vertices
            && g.unit_edges().len() == e.unit_edges
            && g.d_edges().len() == e.d_edges;
        println!(
            "{:<18} {:>4} vertices {:>4} unit {:>4} d  tower {:<24} {} ({:.1?})",
            id.name(),
            g.len(),
            g.unit_edges().len(),
            g.d_edges().len(),
            g.tower().to_string(),
            if ok { "as expected" } else { "MISMATCH" },
            start.elapsed()
        );
    }
    Ok(())
}
