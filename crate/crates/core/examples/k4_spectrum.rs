//! Every d > 1 for which K4 has a planar embedding with edge lengths 1 and d.

use twodist::embeddings::k4_spectrum;

fn main() {
    let s = k4_spectrum();
    for v in &s.values {
        println!("d^2 = {}  (root of {})", v.closed_form().unwrap_or_default(), v.poly);
        for sol in s.solutions_at(v) {
            println!("    labeling {}", sol.labeling());
        }
    }
    println!("{} roots rejected by the triangle check", s.rejected);
}
