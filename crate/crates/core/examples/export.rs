//! Writing a catalog graph as JSON and DOT, and reading the JSON back.

use twodist::graphs::{catalog, from_json, to_dot, to_json, CatalogId};

fn main() -> twodist::Result<()> {
    let g = catalog(CatalogId::Root3K5e)?;
    let text = to_json(&g);
    println!("{text}");
    let back = from_json(&text)?;
    println!("round trip keeps edges: {}", back.unit_edges() == g.unit_edges() && back.d_edges() == g.d_edges());
    print!("{}", to_dot(&g));
    Ok(())
}
