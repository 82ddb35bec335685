//! Planar `{1, d}` realizations of `K4` via Cayley–Menger determinants.

use num_rational::BigRational;
use num_traits::One;

use super::poly::{Poly, RealRoot};
use super::Label;
use crate::exactnum::Interval;

/// Edge order of the template: 01, 02, 03, 12, 13, 23.
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Debug)]
pub struct K4Solution {
    pub labels: [Label; 6],
    /// `t = d^2`, isolated to width at most `10^-12`.
    pub t: RealRoot,
}

impl K4Solution {
    pub fn labeling(&self) -> String {
        self.labels.iter().map(|l| l.symbol()).collect()
    }

    /// Coordinates as intervals: vertex 0 at the origin, vertex 1 on the
    /// positive x-axis, vertex 2 above it.
    pub fn placement(&self, prec: u32) -> [(Interval, Interval); 4] {
        let t = Interval::from_bounds(&self.t.lo, &self.t.hi, prec);
        let one = Interval::from_int(1, prec);
        let sq = |i: usize, j: usize| -> Interval {
            let e = K4_EDGES.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
            match self.labels[e] {
                Label::Unit => one.clone(),
                Label::D => t.clone(),
            }
        };
        let zero = Interval::from_int(0, prec);
        let a = sq(0, 1).sqrt();
        let locate = |k: usize| -> (Interval, Interval) {
            // x from the law of cosines against vertices 0 and 1
            let x = sq(0, 1)
                .add(&sq(0, k))
                .sub(&sq(1, k))
                .div(&a.scale(2))
                .expect("distinct vertices");
            let y = sq(0, k).sub(&x.mul(&x)).sqrt();
            (x, y)
        };
        let (x2, y2) = locate(2);
        let (x3, y3) = locate(3);
        // choose the side for vertex 3 matching its distance to vertex 2
        let gap = |y: &Interval| {
            let dx = x3.sub(&x2);
            let dy = y.sub(&y2);
            dx.mul(&dx).add(&dy.mul(&dy)).sub(&sq(2, 3))
        };
        let up = gap(&y3);
        let y3 = if up.contains_zero() { y3 } else { y3.neg() };
        [
            (zero.clone(), zero),
            (a, Interval::from_int(0, prec)),
            (x2, y2),
            (x3, y3),
        ]
    }
}

/// Result of the full labeling sweep.
#[derive(Clone, Debug)]
pub struct K4Spectrum {
    /// Every labeling and root `t > 1` that passes the triangle check.
    pub solutions: Vec<K4Solution>,
    /// The distinct values of `t = d^2`, in increasing order.
    pub values: Vec<RealRoot>,
    /// Labeling roots rejected because some triangle is not realizable.
    pub rejected: usize,
}

fn cayley_menger(d: &[Vec<Poly>]) -> Poly {
    let n = d.len();
    let entry = |i: usize, j: usize| -> Poly {
        match (i, j) {
            _ if i == j => Poly::zero(),
            (0, _) | (_, 0) => Poly::from_ints(&[1]),
            _ => d[i - 1][j - 1].clone(),
        }
    };
    let size = n + 1;
    let m: Vec<Vec<Poly>> = (0..size).map(|i| (0..size).map(|j| entry(i, j)).collect()).collect();
    det(&m)
}

/// Determinant by Laplace expansion along the first row.
fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Poly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &det(&minor);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// `16 * area^2` of a triangle with the given squared side lengths.
fn heron(x: &Poly, y: &Poly, z: &Poly) -> Poly {
    let two = Poly::from_ints(&[2]);
    let pair = &(&(x * y) + &(y * z)) + &(z * x);
    let squares = &(&(x * x) + &(y * y)) + &(z * z);
    &(&two * &pair) - &squares
}

/// Sweeps all 64 labelings of `K4` with lengths 1 and `d` and returns the
/// values `d > 1` for which the labeled distances are planar.
pub fn k4_spectrum() -> K4Spectrum {
    let width = BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12));
    let one = BigRational::one();
    let mut solutions = Vec::new();
    let mut rejected = 0;
    for mask in 0u32..64 {
        let labels: [Label; 6] =
            std::array::from_fn(|e| if mask >> (5 - e) & 1 == 1 { Label::D } else { Label::Unit });
        let len = |l: Label| match l {
            Label::Unit => Poly::from_ints(&[1]),
            Label::D => Poly::t(),
        };
        let mut d = vec![vec![Poly::zero(); 4]; 4];
        for (e, &(i, j)) in K4_EDGES.iter().enumerate() {
            d[i][j] = len(labels[e]);
            d[j][i] = len(labels[e]);
        }
        let cm = cayley_menger(&d);
        if cm.is_zero() || cm.degree() == Some(0) {
            continue;
        }
        let bound = cm.root_bound();
        for mut root in cm.isolate(&one, &bound) {
            let triangles_ok = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].iter().all(|tri| {
                let q = heron(&d[tri[0]][tri[1]], &d[tri[0]][tri[2]], &d[tri[1]][tri[2]]);
                root.sign_of(&q) >= 0
            });
            if !triangles_ok {
                rejected += 1;
                continue;
            }
            root.refine(&width);
            solutions.push(K4Solution { labels, t: root });
        }
    }
    let mut values: Vec<RealRoot> = Vec::new();
    for s in &solutions {
        if !values.iter().any(|v| v.same_as(&s.t)) {
            values.push(s.t.clone());
        }
    }
    values.sort_by(|a, b| a.lo.cmp(&b.lo));
    K4Spectrum {
        solutions,
        values,
        rejected,
    }
}

impl K4Spectrum {
    /// Whether `t` (an exact value) is in the spectrum.
    pub fn contains(&self, t: &crate::exactnum::FieldElement) -> bool {
        self.values.iter().any(|v| v.equals(t))
    }

    pub fn solutions_at<'a>(&'a self, value: &'a RealRoot) -> impl Iterator<Item = &'a K4Solution> {
        self.solutions.iter().filter(move |s| s.t.same_as(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{FieldElement, Tower};

    #[test]
    fn spectrum_is_the_four_known_values() {
        let s = k4_spectrum();
        let t = Tower::from_decls(&[("s3", "3"), ("s5", "5")]).unwrap();
        let expect = ["(3 + s5)/2", "3", "2 + s3", "2"];
        assert_eq!(s.values.len(), 4);
        for e in expect {
            assert!(s.contains(&FieldElement::parse(&t, e).unwrap()), "{e}");
        }
    }

    #[test]
    fn all_unit_labeling_has_no_solution() {
        let s = k4_spectrum();
        assert!(s.solutions.iter().all(|x| x.labels.contains(&Label::D)));
    }

    #[test]
    fn root3_placement_realizes_its_labels() {
        let s = k4_spectrum();
        let v = s.values.iter().find(|v| v.closed_form().as_deref() == Some("3")).unwrap();
        let mut multisets = Vec::new();
        for sol in s.solutions_at(v) {
            let p = sol.placement(128);
            let mut seen = Vec::new();
            for (e, &(i, j)) in K4_EDGES.iter().enumerate() {
                let dx = p[i].0.sub(&p[j].0);
                let dy = p[i].1.sub(&p[j].1);
                let d = dx.mul(&dx).add(&dy.mul(&dy));
                let want = if sol.labels[e] == Label::D { 3 } else { 1 };
                assert!(d.sub(&Interval::from_int(want, 128)).contains_zero());
                seen.push(want);
            }
            seen.sort();
            multisets.push(seen);
        }
        // two equilateral triangles sharing a side, and a triangle of side
        // sqrt(3) around its centre
        let rhombus = vec![1, 1, 1, 1, 1, 3];
        let centred = vec![1, 1, 1, 3, 3, 3];
        assert!(multisets.iter().all(|m| *m == rhombus || *m == centred));
        assert!(multisets.contains(&rhombus) && multisets.contains(&centred));
    }
}
