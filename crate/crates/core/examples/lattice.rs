//! Points `[a, b, c, d]` of the lattice ((a*sqrt 3 + b*sqrt 11)/12, (c + d*sqrt 33)/12).

use twodist::geometry::{dist2, lattice_dist2, lattice_to_point, LatticeCoord};

fn main() -> twodist::Result<()> {
    let u = LatticeCoord::new(0, 0, 0, 0);
    let v = LatticeCoord::new(5, 3, 15, -1);
    let w = LatticeCoord::new(1, 3, 3, -1);
    for (p, q) in [(&u, &v), (&u, &w), (&v, &w)] {
        let fast = lattice_dist2(p, q);
        let exact = dist2(&lattice_to_point(p), &lattice_to_point(q))?;
        println!("|{p} {q}|^2 = {exact}  (integer path: {} + {}*sqrt(33))", fast.p, fast.q);
    }
    Ok(())
}
