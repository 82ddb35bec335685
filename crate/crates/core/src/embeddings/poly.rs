//! Univariate polynomials over the rationals with Sturm-sequence root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactnum::FieldElement;

type Q = BigRational;

/// Coefficients from the constant term up; never has a zero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(c: Q) -> Poly {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Poly {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Q {
        self.0.last().expect("non-zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_field(&self, x: &FieldElement) -> FieldElement {
        let t = x.tower();
        self.0.iter().rev().fold(FieldElement::zero(t), |acc, c| {
            acc * x + FieldElement::from_rational(t, c.clone())
        })
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Q::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / d.lead();
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        chain
    }

    fn variations(chain: &[Poly], x: &Q) -> usize {
        let signs: Vec<i32> = chain
            .iter()
            .map(|p| p.eval(x).signum().to_integer().try_into().unwrap_or(0))
            .filter(|&s: &i32| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: &Q, b: &Q) -> usize {
        if self.degree().unwrap_or(0) == 0 || a >= b {
            return 0;
        }
        let p = self.squarefree();
        let chain = p.sturm_chain();
        Self::variations(&chain, a) - Self::variations(&chain, b)
    }

    /// Every real root lies in `[-bound, bound]`.
    pub fn root_bound(&self) -> Q {
        let l = self.lead().abs();
        Q::one() + self.0.iter().map(|c| c.abs() / &l).fold(Q::zero(), |m, x| m.max(x))
    }

    /// Disjoint intervals `[lo, hi]`, each containing exactly one root in `(a, b]`.
    pub fn isolate(&self, a: &Q, b: &Q) -> Vec<RealRoot> {
        let p = self.squarefree();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let bound = p.root_bound();
        let a = a.clone().max(-&bound - Q::one());
        let b = b.clone().min(bound);
        let mut out = Vec::new();
        let mut stack = vec![(a, b)];
        while let Some((lo, hi)) = stack.pop() {
            match p.count_roots(&lo, &hi) {
                0 => {}
                1 => out.push(RealRoot::new(p.clone(), lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / Q::from_integer(2.into());
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// Rational roots, by the rational root test on the integer-scaled polynomial.
    pub fn rational_roots(&self) -> Vec<Q> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let denom = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Q::from_integer(denom.clone())).to_integer()).collect();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        let mut roots = if low > 0 { vec![Q::zero()] } else { Vec::new() };
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let n = n.abs();
            let mut d = Vec::new();
            let mut i = BigInt::one();
            while &i * &i <= n {
                if (&n % &i).is_zero() {
                    d.push(i.clone());
                    d.push(&n / &i);
                }
                i += 1;
            }
            d
        };
        for num in divisors(&ints[low]) {
            for den in divisors(ints.last().unwrap()) {
                for s in [1, -1] {
                    let r = Q::new(&num * s, den.clone());
                    if self.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Q::zero)
                        + o.0.get(i).cloned().unwrap_or_else(Q::zero)
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o.clone())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// A real algebraic number: the only root of `poly` (square-free) in `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub poly: Poly,
    pub lo: Q,
    pub hi: Q,
}

impl RealRoot {
    fn new(poly: Poly, lo: Q, hi: Q) -> RealRoot {
        let mut r = RealRoot { poly, lo, hi };
        // the root lies in (lo, hi]; shrink until [lo, hi] holds no other root
        let two = Q::from_integer(2.into());
        if r.poly.eval(&r.hi).is_zero() {
            r.lo = r.hi.clone();
        }
        while r.lo < r.hi && r.poly.eval(&r.lo).is_zero() {
            let mid = (&r.lo + &r.hi) / &two;
            if r.poly.eval(&mid).is_zero() {
                r.lo = mid.clone();
                r.hi = mid;
            } else if r.poly.count_roots(&mid, &r.hi) == 1 {
                r.lo = mid;
            } else {
                r.hi = mid;
            }
        }
        r
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    /// Bisects until the interval is at most `w` wide.
    pub fn refine(&mut self, w: &Q) {
        let two = Q::from_integer(2.into());
        while &self.width() > w {
            let mid = (&self.lo + &self.hi) / &two;
            if self.poly.eval(&mid).is_zero() {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if self.poly.count_roots(&self.lo, &mid) == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// Exact equality of two algebraic numbers.
    pub fn same_as(&self, other: &RealRoot) -> bool {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        if lo > hi {
            return false;
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        g.eval(&lo).is_zero() || g.count_roots(&lo, &hi) > 0
    }

    /// Sign of `q` at this root, refining as needed.
    pub fn sign_of(&self, q: &Poly) -> i32 {
        let g = self.poly.gcd(q);
        if g.degree().unwrap_or(0) > 0
            && (g.eval(&self.lo).is_zero() || g.count_roots(&self.lo, &self.hi) > 0)
        {
            return 0;
        }
        let mut r = self.clone();
        loop {
            if r.lo == r.hi {
                return sign(&q.eval(&r.lo));
            }
            let no_root = !q.eval(&r.lo).is_zero() && q.count_roots(&r.lo, &r.hi) == 0;
            if no_root {
                return sign(&q.eval(&r.lo));
            }
            let w = r.width() / Q::from_integer(4.into());
            r.refine(&w);
        }
    }

    /// True if `x` is this root, decided exactly.
    pub fn equals(&self, x: &FieldElement) -> bool {
        if !self.poly.eval_field(x).is_zero() {
            return false;
        }
        let t = x.tower();
        let lo = FieldElement::from_rational(t, self.lo.clone());
        let hi = FieldElement::from_rational(t, self.hi.clone());
        (x - &lo).signum() >= 0 && (&hi - x).signum() >= 0
    }

    /// `p + q*sqrt(D)` when the root has degree at most two.
    pub fn closed_form(&self) -> Option<String> {
        let mut p = self.poly.clone();
        for r in p.rational_roots() {
            if r >= self.lo && r <= self.hi {
                return Some(r.to_string());
            }
            p = p.div_rem(&Poly::new(vec![-r, Q::one()])).0;
        }
        if p.degree() != Some(2) {
            return None;
        }
        let p = p.monic();
        let (c, b) = (&p.0[0], &p.0[1]);
        // roots -b/2 +- sqrt(b^2/4 - c)
        let centre = -b / Q::from_integer(2.into());
        let disc = b * b / Q::from_integer(4.into()) - c;
        let mut r = self.clone();
        while r.lo <= centre && centre <= r.hi {
            let w = r.width() / Q::from_integer(2.into());
            r.refine(&w);
        }
        let (m, k) = split_square(&disc);
        let sign = if r.lo > centre { "+" } else { "-" };
        let k = if k.is_one() { String::new() } else { format!("{k}*") };
        Some(if centre.is_zero() {
            format!("{}{k}sqrt({m})", if sign == "-" { "-" } else { "" })
        } else {
            format!("{centre} {sign} {k}sqrt({m})")
        })
    }
}

fn sign(q: &Q) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Writes a positive rational as `k^2 * m` with square-free integer `m`;
/// returns `(m, k)`.
fn split_square(q: &Q) -> (BigInt, Q) {
    let n = q.numer() * q.denom();
    let mut m = BigInt::one();
    let mut k = BigInt::one();
    let mut rest = n;
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        while (&rest % (&p * &p)).is_zero() {
            rest /= &p * &p;
            k *= &p;
        }
        p += 1;
    }
    m *= rest;
    (m, Q::new(k, q.denom().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ratio, Tower};

    #[test]
    fn arithmetic_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = Poly::from_ints(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        let sq = &a * &a;
        assert_eq!(sq.squarefree(), a);
        assert_eq!(a.to_string(), "t^2 - 1");
    }

    #[test]
    fn sturm_counts() {
        // (t - 1)(t - 2)(t - 3)
        let p = Poly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(p.count_roots(&ratio(0, 1), &ratio(10, 1)), 3);
        assert_eq!(p.count_roots(&ratio(1, 1), &ratio(2, 1)), 1);
        assert_eq!(p.count_roots(&ratio(3, 2), &ratio(5, 2)), 1);
        let roots = p.isolate(&ratio(1, 1), &ratio(100, 1));
        assert_eq!(roots.len(), 2);
        assert_eq!(p.rational_roots(), vec![ratio(1, 1), ratio(2, 1), ratio(3, 1)]);
    }

    #[test]
    fn isolated_root_of_t2_minus_4t_plus_1() {
        let p = Poly::from_ints(&[1, -4, 1]);
        let roots = p.isolate(&ratio(1, 1), &ratio(10, 1));
        assert_eq!(roots.len(), 1);
        let mut r = roots[0].clone();
        r.refine(&ratio(1, 1_000_000));
        assert!(r.lo <= ratio(3732051, 1_000_000) && ratio(3732050, 1_000_000) <= r.hi);
        let t = Tower::from_decls(&[("s3", "3")]).unwrap();
        assert!(r.equals(&FieldElement::parse(&t, "2 + s3").unwrap()));
        assert!(!r.equals(&FieldElement::parse(&t, "2 - s3").unwrap()));
        assert_eq!(r.closed_form().unwrap(), "2 + sqrt(3)");
        assert_eq!(r.sign_of(&Poly::from_ints(&[-4, 1])), -1);
        assert_eq!(r.sign_of(&p), 0);
    }
}
