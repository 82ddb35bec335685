//! Search of all graphs on six vertices for K4-free ones that need four colors.

use twodist::embeddings::verify_w6_uniqueness;

fn main() {
    let r = verify_w6_uniqueness();
    println!(
        "{} labeled graphs, {} are K4-free with chromatic number 4, {} up to isomorphism",
        r.labeled_graphs,
        r.labeled_matches,
        r.class_count()
    );
    println!("witness edges: {:?}", r.classes[0]);
    println!("wheel: {}", r.is_wheel);
}
