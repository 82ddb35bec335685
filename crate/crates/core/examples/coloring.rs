//! Chromatic numbers, pre-colorings and solver reports.

use twodist::coloring::{chromatic_number, parse_precolor, solve, SolveOptions};
use twodist::graphs::{catalog, CatalogId};

fn main() -> twodist::Result<()> {
    for id in [CatalogId::Root2_13, CatalogId::Two26, CatalogId::TwoRoot3_103] {
        let g = catalog(id)?;
        println!("{id}: chromatic number {}", chromatic_number(g.abstract_graph()));
    }

    let g = catalog(CatalogId::Smart1_9)?;
    let opts = SolveOptions {
        precolor: parse_precolor("0:blue,1:blue")?,
        budget: Some(1_000_000),
    };
    let report = solve(g.abstract_graph(), 4, &opts)?;
    println!("smart1_9 with A, B blue, 4 colors: {}", report.to_json());

    let free = solve(g.abstract_graph(), 4, &SolveOptions::default())?;
    if let Some(c) = free.coloring() {
        println!("without the pre-coloring: {c:?} (A and B get {} and {})", c[0], c[1]);
    }
    Ok(())
}
