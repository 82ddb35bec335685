//! Embeddings of the wheel W6 at a given distance, and a scan for distances.

use twodist::embeddings::{w6_embeddings, w6_spectrum};
use twodist::exactnum::{ratio, FieldElement, Tower};

fn main() -> twodist::Result<()> {
    let t = Tower::paper();
    for e in ["(2*q3*s2 + 2*s3 + 2)/4", "2 + s2"] {
        let r = w6_embeddings(&FieldElement::parse(&t, e)?)?;
        println!("d^2 = {e}: {:?}", r.counts);
        for c in r.classes.iter().take(5) {
            println!("    {}", c.label());
        }
    }
    let roots = w6_spectrum(&ratio(2, 1), &ratio(5, 2), &ratio(1, 500))?;
    for r in roots {
        println!("closure at d^2 ~ {:.12} ({} labelings)", r.midpoint(), r.labelings.len());
    }
    Ok(())
}
