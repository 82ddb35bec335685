use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::tower::{remap, Tower};
use crate::error::{Error, Result};

/// Exact element of a quadratic tower: one rational coefficient per monomial.
#[derive(Clone, Debug)]
pub struct FieldElement {
    tower: Arc<Tower>,
    coeffs: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact `a op b` over a shared tower.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    pub(crate) fn from_parts(tower: Arc<Tower>, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), tower.dim());
        FieldElement { tower, coeffs }
    }

    pub fn zero(tower: &Arc<Tower>) -> Self {
        FieldElement::from_parts(tower.clone(), vec![BigRational::zero(); tower.dim()])
    }

    pub fn one(tower: &Arc<Tower>) -> Self {
        FieldElement::from_int(tower, 1)
    }

    pub fn from_int(tower: &Arc<Tower>, n: i64) -> Self {
        FieldElement::from_rational(tower, BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(tower: &Arc<Tower>, n: i64, d: i64) -> Self {
        FieldElement::from_rational(tower, BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(tower: &Arc<Tower>, q: BigRational) -> Self {
        let mut e = FieldElement::zero(tower);
        e.coeffs[0] = q;
        e
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    /// Coefficients indexed by monomial bitmask.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        raw::is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && raw::is_zero(&self.coeffs[1..])
    }

    /// The rational value, if the element has no irrational part.
    pub fn as_rational(&self) -> Option<&BigRational> {
        raw::is_zero(&self.coeffs[1..]).then(|| &self.coeffs[0])
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.tower.same_as(&other.tower) {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    fn with(&self, coeffs: Vec<BigRational>) -> FieldElement {
        FieldElement::from_parts(self.tower.clone(), coeffs)
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(raw::add(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(raw::sub(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(raw::mul(&self.tower, &self.coeffs, &other.coeffs)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let inv = other.inverse()?;
        Ok(self.with(raw::mul(&self.tower, &self.coeffs, &inv.coeffs)))
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        raw::inverse(&self.tower, &self.coeffs)
            .map(|c| self.with(c))
            .ok_or(Error::DivisionByZero)
    }

    pub fn square(&self) -> FieldElement {
        self.with(raw::mul(&self.tower, &self.coeffs, &self.coeffs))
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.tower);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> FieldElement {
        self.with(raw::scale(&self.coeffs, q))
    }

    pub fn scale_ratio(&self, n: i64, d: i64) -> FieldElement {
        self.scale(&BigRational::new(n.into(), d.into()))
    }

    /// Exact sign in `{-1, 0, 1}`.
    ///
    /// Zero is read off the coefficients; otherwise the element is enclosed with
    /// interval arithmetic at doubling precision until the enclosure excludes zero.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let mut prec = 64;
        loop {
            let i = self.interval(prec);
            if i.is_positive() {
                return 1;
            }
            if i.is_negative() {
                return -1;
            }
            prec *= 2;
        }
    }

    /// Exact comparison of two elements over the same tower.
    pub fn cmp_exact(&self, other: &FieldElement) -> Result<Ordering> {
        Ok(match self.checked_sub(other)?.signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    /// Outward-rounded enclosure at `prec` fractional bits.
    pub fn interval(&self, prec: u32) -> Interval {
        let gens = raw::generator_intervals(&self.tower, prec);
        raw::eval(&self.coeffs, &gens, prec)
    }

    /// Rational bounds `lo <= self <= hi` with `hi - lo <= width`.
    pub fn to_interval(&self, width: &BigRational) -> (BigRational, BigRational) {
        assert!(width.is_positive(), "width must be positive");
        if let Some(q) = self.as_rational() {
            return (q.clone(), q.clone());
        }
        let mut prec = 64;
        loop {
            let i = self.interval(prec);
            if &i.width() <= width {
                return (i.lo(), i.hi());
            }
            prec *= 2;
        }
    }

    /// The non-negative square root, when it lies in the tower.
    pub fn sqrt_in_field(&self) -> Result<Option<FieldElement>> {
        if self.signum() < 0 {
            return Err(Error::NegativeInput);
        }
        Ok(raw::sqrt(&self.tower, &self.coeffs).map(|c| {
            let y = self.with(c);
            if y.signum() < 0 {
                -y
            } else {
                y
            }
        }))
    }

    /// The same number over a tower that contains this one's generators by name.
    pub fn embed(&self, target: &Arc<Tower>) -> Result<FieldElement> {
        if self.tower.same_as(target) {
            return Ok(self.with(self.coeffs.clone()).retower(target.clone()));
        }
        let map = self.tower.name_map(target)?;
        let mut coeffs = vec![BigRational::zero(); target.dim()];
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[remap(m, &map)] = c.clone();
            }
        }
        Ok(FieldElement::from_parts(target.clone(), coeffs))
    }

    fn retower(mut self, tower: Arc<Tower>) -> FieldElement {
        self.tower = tower;
        self
    }

    pub fn parse(tower: &Arc<Tower>, s: &str) -> Result<FieldElement> {
        super::parse::parse_element(tower, s)
    }

    pub(crate) fn monomial_name(tower: &Tower, m: usize) -> String {
        if m == 0 {
            return "1".to_string();
        }
        tower
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, g)| g.name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.tower.same_as(&other.tower) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

/// Canonical form: `(c0)*1 + (c1)*s2 + (c3)*s2*s3 ...`, zero terms omitted,
/// monomials in bitmask order; the zero element is `(0)*1`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c, FieldElement::monomial_name(&self.tower, m))?;
        }
        if first {
            write!(f, "(0)*1")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live over different towers.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect(concat!("FieldElement ", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(raw::neg(&self.coeffs))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Coefficient-slice kernels. A slice of length `2^L` is an element of the
/// field generated by the first `L` generators; its upper half is the
/// coefficient of generator `L - 1`.
pub(crate) mod raw {
    use super::*;

    type Q = BigRational;

    pub fn is_zero(a: &[Q]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn top_level(len: usize) -> usize {
        len.trailing_zeros() as usize - 1
    }

    pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(a: &[Q]) -> Vec<Q> {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(a: &[Q], q: &Q) -> Vec<Q> {
        if q.is_zero() {
            return vec![Q::zero(); a.len()];
        }
        a.iter()
            .map(|x| if x.is_zero() { Q::zero() } else { x * q })
            .collect()
    }

    fn concat(mut lo: Vec<Q>, hi: Vec<Q>) -> Vec<Q> {
        lo.extend(hi);
        lo
    }

    /// Product via `(a0 + a1 g)(b0 + b1 g) = (a0 b0 + g^2 a1 b1) + (a0 b1 + a1 b0) g`.
    pub fn mul(t: &Tower, a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = a.len();
        if n == 1 {
            return vec![&a[0] * &b[0]];
        }
        if is_zero(&a[1..]) {
            return scale(b, &a[0]);
        }
        if is_zero(&b[1..]) {
            return scale(a, &b[0]);
        }
        let h = n / 2;
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let a1z = is_zero(a1);
        let b1z = is_zero(b1);
        let mut r0 = mul(t, a0, b0);
        if !a1z && !b1z {
            let prod = mul(t, a1, b1);
            let sq = t.square_of(top_level(n));
            let term = mul(t, &prod, sq);
            r0 = add(&r0, &term);
        }
        let mut r1 = vec![Q::zero(); h];
        if !b1z {
            r1 = add(&r1, &mul(t, a0, b1));
        }
        if !a1z {
            r1 = add(&r1, &mul(t, a1, b0));
        }
        concat(r0, r1)
    }

    /// Inverse by conjugation: `1 / (a + b g) = (a - b g) / (a^2 - g^2 b^2)`.
    pub fn inverse(t: &Tower, x: &[Q]) -> Option<Vec<Q>> {
        let n = x.len();
        if n == 1 {
            return (!x[0].is_zero()).then(|| vec![x[0].recip()]);
        }
        let h = n / 2;
        let (a, b) = x.split_at(h);
        if is_zero(b) {
            return inverse(t, a).map(|ia| concat(ia, vec![Q::zero(); h]));
        }
        let sq = t.square_of(top_level(n));
        let norm = sub(&mul(t, a, a), &mul(t, sq, &mul(t, b, b)));
        let inv = inverse(t, &norm)?;
        Some(concat(mul(t, a, &inv), neg(&mul(t, b, &inv))))
    }

    fn rational_sqrt(q: &Q) -> Option<Q> {
        if q.is_negative() {
            return None;
        }
        let n = q.numer().sqrt();
        let d = q.denom().sqrt();
        (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Q::new(n, d))
    }

    /// Some square root of `x` in the field (sign unspecified), if one exists.
    ///
    /// With `x = a + b g` and `y = c + d g`: if `b = 0` then `y = sqrt(a)` or
    /// `y = sqrt(a / g^2) g`; otherwise `c^2 = (a ± sqrt(a^2 - b^2 g^2)) / 2`
    /// and `d = b / 2c`.
    pub fn sqrt(t: &Tower, x: &[Q]) -> Option<Vec<Q>> {
        let n = x.len();
        if n == 1 {
            return rational_sqrt(&x[0]).map(|r| vec![r]);
        }
        let h = n / 2;
        let (a, b) = x.split_at(h);
        let sq = t.square_of(top_level(n));
        if is_zero(b) {
            if let Some(c) = sqrt(t, a) {
                return Some(concat(c, vec![Q::zero(); h]));
            }
            let ratio = mul(t, a, &inverse(t, sq)?);
            return sqrt(t, &ratio).map(|d| concat(vec![Q::zero(); h], d));
        }
        let norm = sub(&mul(t, a, a), &mul(t, sq, &mul(t, b, b)));
        let r = sqrt(t, &norm)?;
        let half = Q::new(BigInt::one(), BigInt::from(2));
        for cand in [scale(&add(a, &r), &half), scale(&sub(a, &r), &half)] {
            if is_zero(&cand) {
                continue;
            }
            if let Some(c) = sqrt(t, &cand) {
                let two_c = scale(&c, &Q::from_integer(2.into()));
                let d = mul(t, b, &inverse(t, &two_c)?);
                return Some(concat(c, d));
            }
        }
        None
    }

    /// Enclosures of every generator at `prec` bits.
    pub fn generator_intervals(t: &Tower, prec: u32) -> Vec<Interval> {
        let mut gens: Vec<Interval> = Vec::with_capacity(t.depth());
        for level in 0..t.depth() {
            let sq = eval(t.square_of(level), &gens, prec);
            gens.push(sq.sqrt());
        }
        gens
    }

    /// Horner-style enclosure of `a` given generator enclosures.
    pub fn eval(a: &[Q], gens: &[Interval], prec: u32) -> Interval {
        let n = a.len();
        if n == 1 {
            return Interval::from_rational(&a[0], prec);
        }
        let h = n / 2;
        let (lo, hi) = a.split_at(h);
        let base = eval(lo, gens, prec);
        if is_zero(hi) {
            return base;
        }
        base.add(&eval(hi, gens, prec).mul(&gens[top_level(n)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval::Interval;

    fn tower() -> Arc<Tower> {
        Tower::from_decls(&[("s3", "3"), ("q3", "s3"), ("s2", "2"), ("s5", "5")]).unwrap()
    }

    fn el(s: &str) -> FieldElement {
        FieldElement::parse(&tower(), s).unwrap()
    }

    #[test]
    fn generator_squares() {
        assert_eq!(el("s2") * el("s2"), el("2"));
        let q = el("q3");
        assert_eq!(&q * &q * &q * &q, el("3"));
        assert_eq!(el("(s2*s3 + s2)/2").square(), el("2 + s3"));
    }

    #[test]
    fn division_and_inverse() {
        let x = el("1 + q3 + s2*s5 - 3*q3*s3");
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(el("0").inverse(), Err(Error::DivisionByZero));
        assert_eq!(arith(&el("1"), &el("0"), ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn tower_mismatch_is_reported() {
        let other = Tower::from_decls(&[("s7", "7")]).unwrap();
        let a = FieldElement::one(&other);
        assert_eq!(arith(&a, &el("1"), ArithOp::Add), Err(Error::TowerMismatch));
    }

    #[test]
    fn sqrt_examples() {
        let t = Tower::from_decls(&[("s3", "3"), ("s5", "5")]).unwrap();
        let x = FieldElement::parse(&t, "15/64").unwrap();
        let y = x.sqrt_in_field().unwrap().unwrap();
        assert_eq!(y, FieldElement::parse(&t, "s3*s5/8").unwrap());
        assert_eq!(y.square(), x);

        let four = FieldElement::from_int(&t, 4);
        assert_eq!(four.sqrt_in_field().unwrap().unwrap(), FieldElement::from_int(&t, 2));

        let only3 = Tower::from_decls(&[("s3", "3")]).unwrap();
        assert_eq!(FieldElement::from_int(&only3, 2).sqrt_in_field(), Ok(None));
        assert_eq!(
            FieldElement::from_int(&only3, -2).sqrt_in_field(),
            Err(Error::NegativeInput)
        );
    }

    #[test]
    fn sqrt_of_nested_radicals() {
        // (sqrt6 + sqrt2)/2 squared is 2 + sqrt3
        let y = el("2 + s3").sqrt_in_field().unwrap().unwrap();
        assert_eq!(y, el("(s2*s3 + s2)/2"));
        // 3^{1/4} sqrt2 - sqrt3 + 1 is positive; its square has a root in field
        let z = el("q3*s2 - s3 + 1");
        assert_eq!(z.square().sqrt_in_field().unwrap().unwrap(), z);
        // and the negative of something squared returns the positive root
        let w = el("s3 - 2");
        assert_eq!(w.square().sqrt_in_field().unwrap().unwrap(), -w);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(el("(q3*s2 - s3 + 1)/2 - 1/2").signum(), 1);
        assert_eq!(el("0").signum(), 0);
        assert_eq!(el("2 + s3 - ((s2*s3 + s2)/2)^2").signum(), 0);
        assert_eq!(el("s2 - 141421356/100000000").signum(), 1);
        assert_eq!(el("s2 - 141421357/100000000").signum(), -1);
    }

    /// Independent oracle: integer square root of `n * 10^(2k)`.
    fn isqrt_digits(n: u64, k: u32) -> (BigRational, BigRational) {
        let scale = num_traits::pow(BigInt::from(10), k as usize);
        let big = BigInt::from(n) * &scale * &scale;
        let r = num_integer::Roots::sqrt(&big);
        (
            BigRational::new(r.clone(), scale.clone()),
            BigRational::new(r + 1, scale),
        )
    }

    #[test]
    fn to_interval_examples() {
        let w = BigRational::new(1.into(), 1_000_000.into());
        let (lo, hi) = el("s3").to_interval(&w);
        assert!(&hi - &lo <= w);
        let (olo, ohi) = isqrt_digits(3, 7);
        assert!(lo <= ohi && olo <= hi);

        let third = el("1/3");
        let (lo, hi) = third.to_interval(&w);
        assert_eq!(lo, BigRational::new(1.into(), 3.into()));
        assert_eq!(lo, hi);

        let w9 = BigRational::new(1.into(), 1_000_000_000.into());
        let (lo, hi) = el("(s5 + 1)/2").to_interval(&w9);
        // phi = (isqrt(5) + 1)/2 at 12 digits
        let (slo, shi) = isqrt_digits(5, 12);
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        let (plo, phi) = ((slo + &one) / &two, (shi + &one) / &two);
        assert!(lo <= phi && plo <= hi);
        assert!(&hi - &lo <= w9);
    }

    #[test]
    fn interval_agrees_with_sign() {
        let x = el("q3 - 13/10");
        let i: Interval = x.interval(128);
        assert!(i.is_positive());
        assert_eq!(x.signum(), 1);
    }

    #[test]
    fn embedding_preserves_value() {
        let small = Tower::from_decls(&[("s2", "2"), ("s5", "5")]).unwrap();
        let x = FieldElement::parse(&small, "1 + s2*s5").unwrap();
        let y = x.embed(&tower()).unwrap();
        assert_eq!(y, el("1 + s2*s5"));
        assert!(x.embed(&Tower::lattice()).is_err());
    }
}
