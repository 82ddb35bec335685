//! Exact planar points, the `[a, b, c, d]` lattice and rotations.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<Point> {
        if !x.tower().same_as(y.tower()) {
            return Err(Error::TowerMismatch);
        }
        Ok(Point { x, y })
    }

    pub fn origin(tower: &Arc<Tower>) -> Point {
        Point {
            x: FieldElement::zero(tower),
            y: FieldElement::zero(tower),
        }
    }

    /// Parses both coordinates as expressions over `tower`.
    pub fn parse(tower: &Arc<Tower>, x: &str, y: &str) -> Result<Point> {
        Ok(Point {
            x: FieldElement::parse(tower, x)?,
            y: FieldElement::parse(tower, y)?,
        })
    }

    pub fn tower(&self) -> &Arc<Tower> {
        self.x.tower()
    }

    pub fn embed(&self, tower: &Arc<Tower>) -> Result<Point> {
        Ok(Point {
            x: self.x.embed(tower)?,
            y: self.y.embed(tower)?,
        })
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn scale(&self, k: &FieldElement) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Reflection in the x-axis.
    pub fn mirror(&self) -> Point {
        Point {
            x: self.x.clone(),
            y: -&self.y,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exact squared distance.
pub fn dist2(p: &Point, q: &Point) -> Result<FieldElement> {
    let dx = p.x.checked_sub(&q.x)?;
    let dy = p.y.checked_sub(&q.y)?;
    Ok(dx.square() + dy.square())
}

/// Lattice point `[a, b, c, d] = ((a√3 + b√11)/12, (c + d√33)/12)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeCoord {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl LatticeCoord {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        LatticeCoord {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }
}

impl From<[BigInt; 4]> for LatticeCoord {
    fn from([a, b, c, d]: [BigInt; 4]) -> Self {
        LatticeCoord { a, b, c, d }
    }
}

impl From<LatticeCoord> for [BigInt; 4] {
    fn from(v: LatticeCoord) -> Self {
        [v.a, v.b, v.c, v.d]
    }
}

impl From<[i64; 4]> for LatticeCoord {
    fn from([a, b, c, d]: [i64; 4]) -> Self {
        LatticeCoord::new(a, b, c, d)
    }
}

impl fmt::Display for LatticeCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.a, self.b, self.c, self.d)
    }
}

/// The point of `Q(√3, √11)` named by a lattice coordinate.
pub fn lattice_to_point(v: &LatticeCoord) -> Point {
    let t = Tower::lattice();
    let twelfth = |n: &BigInt| BigRational::new(n.clone(), 12.into());
    let s3 = t.generator("s3").unwrap();
    let s11 = t.generator("s11").unwrap();
    let s33 = &s3 * &s11;
    Point {
        x: s3.scale(&twelfth(&v.a)) + s11.scale(&twelfth(&v.b)),
        y: FieldElement::from_rational(&t, twelfth(&v.c)) + s33.scale(&twelfth(&v.d)),
    }
}

/// `p + q√33` with rational `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Qrt33 {
    pub p: BigRational,
    pub q: BigRational,
}

impl Qrt33 {
    pub fn rational(p: BigRational) -> Self {
        Qrt33 {
            p,
            q: BigRational::from_integer(0.into()),
        }
    }

    /// Reads an element of the lattice tower (or any tower where `s3*s11` is the
    /// only irrational monomial); `None` if it has other irrational parts.
    pub fn from_element(x: &FieldElement) -> Option<Qrt33> {
        let t = x.tower();
        let i3 = t.index_of("s3")?;
        let i11 = t.index_of("s11")?;
        let m33 = (1 << i3) | (1 << i11);
        let lattice_ok = t.generators()[i3].square.iter().skip(1).all(num_traits::Zero::is_zero)
            && t.generators()[i11].square.iter().skip(1).all(num_traits::Zero::is_zero);
        if !lattice_ok {
            return None;
        }
        for (m, c) in x.coeffs().iter().enumerate() {
            if m != 0 && m != m33 && !num_traits::Zero::is_zero(c) {
                return None;
            }
        }
        Some(Qrt33 {
            p: x.coeffs()[0].clone(),
            q: x.coeffs()[m33].clone(),
        })
    }
}

impl fmt::Display for Qrt33 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt33", self.p, self.q)
    }
}

/// Squared distance between lattice points without leaving the integers:
/// `(3Δa² + 11Δb² + Δc² + 33Δd²)/144 + ((2ΔaΔb + 2ΔcΔd)/144)√33`.
pub fn lattice_dist2(u: &LatticeCoord, v: &LatticeCoord) -> Qrt33 {
    let da = &u.a - &v.a;
    let db = &u.b - &v.b;
    let dc = &u.c - &v.c;
    let dd = &u.d - &v.d;
    let rat = BigInt::from(3) * &da * &da
        + BigInt::from(11) * &db * &db
        + &dc * &dc
        + BigInt::from(33) * &dd * &dd;
    let irr = BigInt::from(2) * (&da * &db + &dc * &dd);
    Qrt33 {
        p: BigRational::new(rat, 144.into()),
        q: BigRational::new(irr, 144.into()),
    }
}

/// Rotation of `p` about `pivot` by the angle with the given cosine and sine.
pub fn rotate_about(
    pivot: &Point,
    cos: &FieldElement,
    sin: &FieldElement,
    p: &Point,
) -> Result<Point> {
    let unit = cos.checked_mul(cos)?.checked_add(&sin.square())?;
    if !unit.is_one() {
        return Err(Error::NotARotation);
    }
    let v = p.sub(pivot);
    let rx = cos.checked_mul(&v.x)? - sin.checked_mul(&v.y)?;
    let ry = sin.checked_mul(&v.x)? + cos.checked_mul(&v.y)?;
    Ok(Point { x: rx, y: ry }.add(pivot))
}

/// Cosine of the rotation that moves a point at squared radius `r2` along a
/// chord of squared length `bridge2`: `cos θ = 1 - bridge2 / (2 r2)`.
pub fn spindle_cos(r2: &FieldElement, bridge2: &FieldElement) -> Result<FieldElement> {
    if r2.signum() <= 0 {
        return Err(Error::ZeroRadius);
    }
    let four_r2 = r2.scale_ratio(4, 1);
    if four_r2.checked_sub(bridge2)?.signum() < 0 {
        return Err(Error::ChordTooLong);
    }
    let one = FieldElement::one(r2.tower());
    Ok(one - bridge2.checked_div(&r2.scale_ratio(2, 1))?)
}

/// The non-negative sine for `cos`, extending the tower by one generator when
/// `sqrt(1 - cos^2)` is not already in the field. Returns the (possibly new)
/// tower together with the sine over it.
pub fn sine_for(cos: &FieldElement) -> Result<(Arc<Tower>, FieldElement)> {
    let tower = cos.tower().clone();
    let radicand = FieldElement::one(&tower) - cos.square();
    if radicand.signum() < 0 {
        return Err(Error::NotARotation);
    }
    if let Some(s) = radicand.sqrt_in_field()? {
        return Ok((tower, s));
    }
    let (name, square) = match radicand.as_rational() {
        Some(q) => {
            // adjoin the square-free part of num*den instead of the raw radicand
            let n = squarefree_part(&(q.numer() * q.denom()));
            (format!("s{n}"), FieldElement::from_rational(&tower, BigRational::from_integer(n)))
        }
        None => ("r".to_string(), radicand.clone()),
    };
    let name = tower.fresh_name(&name);
    let extended = tower.extend(&name, &square)?;
    let lifted = radicand.embed(&extended)?;
    let s = lifted
        .sqrt_in_field()?
        .expect("radicand has a root after extension");
    Ok((extended, s))
}

fn squarefree_part(n: &BigInt) -> BigInt {
    let mut n = n.clone();
    let mut out = BigInt::from(1);
    let mut p = BigInt::from(2);
    while &p * &p <= n && p < BigInt::from(1_000_000) {
        let pp = &p * &p;
        while (&n % &pp) == BigInt::from(0) {
            n /= &pp;
        }
        if (&n % &p) == BigInt::from(0) {
            n /= &p;
            out *= &p;
        }
        p += 1;
    }
    out * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn pt(t: &Arc<Tower>, x: &str, y: &str) -> Point {
        Point::parse(t, x, y).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let t = Tower::lattice();
        assert_eq!(lattice_to_point(&[0, 0, 0, 0].into()), Point::origin(&t));
        assert_eq!(lattice_to_point(&[4, 0, 0, 0].into()), pt(&t, "s3/3", "0"));
        assert_eq!(lattice_to_point(&[0, 0, 12, 0].into()), pt(&t, "0", "1"));
    }

    #[test]
    fn lattice_dist2_examples() {
        let o = LatticeCoord::new(0, 0, 0, 0);
        assert_eq!(
            lattice_dist2(&o, &[0, 0, 12, 0].into()),
            Qrt33::rational(ratio(1, 1))
        );
        assert_eq!(
            lattice_dist2(&o, &[4, 0, 0, 0].into()),
            Qrt33::rational(ratio(1, 3))
        );
        assert_eq!(lattice_dist2(&o, &o), Qrt33::rational(ratio(0, 1)));
        // (44 + 100) / 144
        assert_eq!(
            lattice_dist2(&o, &[0, 2, 10, 0].into()),
            Qrt33::rational(ratio(1, 1))
        );
    }

    #[test]
    fn dist2_examples() {
        let t = Tower::rationals();
        let d = dist2(&pt(&t, "0", "0"), &pt(&t, "1", "0")).unwrap();
        assert!(d.is_one());
        let d = dist2(
            &lattice_to_point(&[0, 0, 0, 0].into()),
            &lattice_to_point(&[0, 2, 10, 0].into()),
        )
        .unwrap();
        assert!(d.is_one());
        let other = Tower::from_decls(&[("s2", "2")]).unwrap();
        assert_eq!(
            dist2(&pt(&t, "0", "0"), &pt(&other, "0", "0")),
            Err(Error::TowerMismatch)
        );
    }

    #[test]
    fn exotic_pair_distances() {
        let t = Tower::from_decls(&[("s3", "3"), ("q3", "s3"), ("s2", "2")]).unwrap();
        let v1 = pt(&t, "(q3*s2 - s3 + 1)/4", "(s3*q3*s2 + s3 + 1)/4");
        let v2 = pt(&t, "(-q3*s2 + s3 - 1)/4", "(s3*q3*s2 + s3 + 1)/4");
        let v4 = pt(&t, "(-q3*s2 - s3 - 1)/4", "(s3*q3*s2 + s3 - 1)/4");
        let d12 = FieldElement::parse(&t, "((q3*s2 - s3 + 1)/2)^2").unwrap();
        assert_eq!(dist2(&v1, &v2).unwrap(), d12);
        let d2 = FieldElement::parse(&t, "(q3*2*s2 + 2*s3 + 2)/4").unwrap();
        assert_eq!(dist2(&v1, &v4).unwrap(), d2);
    }

    #[test]
    fn rotation_examples() {
        let t = Tower::from_decls(&[("s3", "3"), ("s5", "5")]).unwrap();
        let o = Point::origin(&t);
        let p = pt(&t, "2", "0");
        let one = FieldElement::one(&t);
        let zero = FieldElement::zero(&t);
        assert_eq!(rotate_about(&o, &one, &zero, &p).unwrap(), p);
        let c = FieldElement::parse(&t, "7/8").unwrap();
        let s = FieldElement::parse(&t, "s3*s5/8").unwrap();
        assert_eq!(
            rotate_about(&o, &c, &s, &p).unwrap(),
            pt(&t, "7/4", "s3*s5/4")
        );
        assert_eq!(
            rotate_about(&o, &c, &c, &p),
            Err(Error::NotARotation)
        );

        let t = Tower::from_decls(&[("s2", "2"), ("s3", "3"), ("s7", "7")]).unwrap();
        let o = Point::origin(&t);
        let p = pt(&t, "s2*s3/2", "-s2/2");
        let c = FieldElement::parse(&t, "3/4").unwrap();
        let s = FieldElement::parse(&t, "s7/4").unwrap();
        assert_eq!(
            rotate_about(&o, &c, &s, &p).unwrap(),
            pt(&t, "(3*s2*s3 + s2*s7)/8", "(-3*s2 + s2*s3*s7)/8")
        );
    }

    #[test]
    fn spindle_cos_examples() {
        let t = Tower::rationals();
        let f = |n| FieldElement::from_int(&t, n);
        assert_eq!(spindle_cos(&f(4), &f(1)).unwrap(), FieldElement::from_ratio(&t, 7, 8));
        assert_eq!(spindle_cos(&f(2), &f(1)).unwrap(), FieldElement::from_ratio(&t, 3, 4));
        assert!(spindle_cos(&f(1), &f(0)).unwrap().is_one());
        assert_eq!(spindle_cos(&f(0), &f(1)), Err(Error::ZeroRadius));
        assert_eq!(spindle_cos(&f(1), &f(5)), Err(Error::ChordTooLong));
    }

    #[test]
    fn sine_extension_for_rational_radicand() {
        let t = Tower::from_decls(&[("s3", "3")]).unwrap();
        let (ext, s) = sine_for(&FieldElement::from_ratio(&t, 7, 8)).unwrap();
        assert_eq!(ext.depth(), 2);
        assert_eq!(s.square(), FieldElement::from_ratio(&ext, 15, 64));
        assert_eq!(squarefree_part(&BigInt::from(960)), BigInt::from(15));
    }
}
