//! Outward-rounded dyadic interval arithmetic.
//!
//! An [`Interval`] is a pair of integers `lo, hi` together with a precision `p`
//! and denotes the closed set `[lo / 2^p, hi / 2^p]`. Every operation rounds the
//! lower endpoint down and the upper endpoint up, so results always enclose the
//! exact value. Transcendental functions (`atan`, `acos`, `pi`) are evaluated
//! with the same primitive operations plus an explicit series remainder bound.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    -((-n).div_floor(d))
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

impl Interval {
    pub fn new(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi, prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec;
        Interval::new(v.clone(), v, prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        Interval::new(
            floor_div(&scaled, q.denom()),
            ceil_div(&scaled, q.denom()),
            prec,
        )
    }

    /// Encloses `[lo, hi]` for rational endpoints.
    pub fn from_bounds(lo: &BigRational, hi: &BigRational, prec: u32) -> Self {
        let l = Interval::from_rational(lo, prec);
        let h = Interval::from_rational(hi, prec);
        Interval::new(l.lo, h.hi, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), pow2(self.prec))
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), pow2(self.prec))
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, pow2(self.prec))
    }

    pub fn midpoint(&self) -> BigRational {
        BigRational::new(&self.hi + &self.lo, pow2(self.prec + 1))
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Whether the exact rational `q` lies in the interval.
    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo() <= q && q <= &self.hi()
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    /// Re-expresses the interval at a different precision, rounding outward.
    pub fn with_prec(&self, prec: u32) -> Interval {
        if prec >= self.prec {
            let s = prec - self.prec;
            Interval::new(&self.lo << s, &self.hi << s, prec)
        } else {
            let d = pow2(self.prec - prec);
            Interval::new(floor_div(&self.lo, &d), ceil_div(&self.hi, &d), prec)
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.prec,
        )
    }

    pub fn add(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi, self.prec)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo, self.prec)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo, self.prec)
    }

    pub fn scale(&self, k: i64) -> Interval {
        let k = BigInt::from(k);
        let a = &self.lo * &k;
        let b = &self.hi * &k;
        if k.is_negative() {
            Interval::new(b, a, self.prec)
        } else {
            Interval::new(a, b, self.prec)
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        let d = pow2(self.prec);
        Interval::new(floor_div(min, &d), ceil_div(max, &d), self.prec)
    }

    /// Division by an integer `k != 0`.
    pub fn div_int(&self, k: i64) -> Interval {
        assert!(k != 0);
        let kb = BigInt::from(k.abs());
        let r = Interval::new(floor_div(&self.lo, &kb), ceil_div(&self.hi, &kb), self.prec);
        if k < 0 {
            r.neg()
        } else {
            r
        }
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, other: &Interval) -> Option<Interval> {
        debug_assert_eq!(self.prec, other.prec);
        if other.contains_zero() {
            return None;
        }
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            let scaled = a << self.prec;
            for b in [&other.lo, &other.hi] {
                let (f, c) = if b.is_negative() {
                    let (nb, ns) = (-b, -&scaled);
                    (floor_div(&ns, &nb), ceil_div(&ns, &nb))
                } else {
                    (floor_div(&scaled, b), ceil_div(&scaled, b))
                };
                lo = Some(match lo {
                    Some(l) if l <= f => l,
                    _ => f,
                });
                hi = Some(match hi {
                    Some(h) if h >= c => h,
                    _ => c,
                });
            }
        }
        Some(Interval::new(lo.unwrap(), hi.unwrap(), self.prec))
    }

    /// Square root; negative parts of the interval are clamped to zero, so the
    /// caller must know the exact value is non-negative.
    pub fn sqrt(&self) -> Interval {
        let lo = if self.lo.is_negative() {
            BigInt::zero()
        } else {
            self.lo.clone()
        };
        let hi = if self.hi.is_negative() {
            BigInt::zero()
        } else {
            self.hi.clone()
        };
        Interval::new(
            (lo << self.prec).sqrt(),
            ceil_sqrt(&(hi << self.prec)),
            self.prec,
        )
    }

    /// Clamps to `[a, b]` (integers); valid when the exact value is known to lie there.
    pub fn clamp(&self, a: i64, b: i64) -> Interval {
        let a = BigInt::from(a) << self.prec;
        let b = BigInt::from(b) << self.prec;
        let lo = self.lo.clone().max(a.clone()).min(b.clone());
        let hi = self.hi.clone().min(b).max(a);
        Interval::new(lo, hi, self.prec)
    }

    fn lower_point(&self) -> Interval {
        Interval::new(self.lo.clone(), self.lo.clone(), self.prec)
    }

    fn upper_point(&self) -> Interval {
        Interval::new(self.hi.clone(), self.hi.clone(), self.prec)
    }

    /// Enclosure of pi at the given precision.
    pub fn pi(prec: u32) -> Interval {
        let work = prec + 32;
        let fifth = Interval::from_rational(&BigRational::new(1.into(), 5.into()), work);
        let inv239 = Interval::from_rational(&BigRational::new(1.into(), 239.into()), work);
        let pi = atan_small(&fifth)
            .scale(16)
            .sub(&atan_small(&inv239).scale(4));
        pi.with_prec(prec)
    }

    /// Arctangent; monotone, so endpoints are evaluated separately.
    pub fn atan(&self) -> Interval {
        let lo = atan_point(&self.lower_point());
        let hi = atan_point(&self.upper_point());
        Interval::new(lo.lo, hi.hi, self.prec)
    }

    /// Arccosine of a value known to lie in `[-1, 1]`.
    pub fn acos(&self) -> Interval {
        let c = self.clamp(-1, 1);
        let hi = acos_point(&c.lower_point());
        let lo = acos_point(&c.upper_point());
        Interval::new(lo.lo, hi.hi, self.prec)
    }
}

/// atan for a non-negative interval using argument halving and a Taylor series.
fn atan_nonneg(x: &Interval) -> Interval {
    let prec = x.prec;
    let mut y = x.clamp(0, i64::MAX);
    let one = Interval::from_int(1, prec);
    // Halve the angle until the argument is at most 1/16.
    let limit = BigInt::one() << (prec.saturating_sub(4));
    let mut doublings = 0u32;
    while y.hi > limit {
        let denom = one.add(&one.add(&y.mul(&y)).sqrt());
        y = y.div(&denom).expect("denominator is at least 1");
        doublings += 1;
    }
    let s = atan_small(&y);
    Interval::new(s.lo << doublings, s.hi << doublings, prec)
}

/// Taylor series of atan for arguments in `[0, 1/2]` with an explicit remainder bound.
fn atan_small(y: &Interval) -> Interval {
    let prec = y.prec;
    let y2 = y.mul(y);
    let mut pow = y.clone();
    let mut sum = Interval::from_int(0, prec);
    let mut n: i64 = 0;
    loop {
        let term = pow.div_int(2 * n + 1);
        sum = if n % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        pow = pow.mul(&y2);
        n += 1;
        if pow.hi <= BigInt::one() {
            break;
        }
    }
    // Alternating series with decreasing terms: remainder bounded by the next term.
    let r = pow.hi.clone().max(BigInt::one());
    Interval::new(sum.lo - &r, sum.hi + r, prec)
}

fn atan_point(x: &Interval) -> Interval {
    if x.hi.is_negative() {
        atan_nonneg(&x.neg()).neg()
    } else {
        atan_nonneg(x)
    }
}

fn acos_point(c: &Interval) -> Interval {
    let prec = c.prec;
    let one = Interval::from_int(1, prec);
    if c.lo.is_negative() {
        // acos(c) = pi - acos(-c)
        return Interval::pi(prec).sub(&acos_point(&c.neg()));
    }
    // acos(c) = 2 atan(sqrt((1 - c) / (1 + c))) for c in [0, 1]
    let num = one.sub(c).clamp(0, 1);
    let den = one.add(c);
    let ratio = num.div(&den).expect("1 + c >= 1");
    atan_nonneg(&ratio.sqrt()).scale(2)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", decimal(&self.lo(), 15), decimal(&self.hi(), 15))
    }
}

/// Decimal rendering of a rational, truncated toward zero to `digits` places.
pub fn decimal(q: &BigRational, digits: usize) -> String {
    let neg = q.is_negative();
    let a = q.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (a.numer() * &scale) / a.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut s = String::new();
    if neg && !scaled.is_zero() {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac_part.to_string(), width = digits));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pi_is_enclosed() {
        let pi = Interval::pi(200);
        // 3.14159265358979323846264338327950288419716939937510...
        let lo = BigRational::new(
            "314159265358979323846264338327950288419716939937510".parse().unwrap(),
            num_traits::pow(BigInt::from(10), 50),
        );
        let hi = &lo + BigRational::new(1.into(), num_traits::pow(BigInt::from(10), 50));
        assert!(pi.lo() < hi && lo < pi.hi());
        assert!(pi.width() < q(1, 1 << 30) * q(1, 1 << 30) * q(1, 1 << 30));
    }

    #[test]
    fn sqrt_two_matches_integer_square_root() {
        let i = Interval::from_int(2, 128).sqrt();
        let scaled: BigInt = num_integer::Roots::sqrt(&(BigInt::from(2) << 256));
        assert!(i.contains(&BigRational::new(scaled.clone(), pow2(128))) || i.lo == scaled);
        assert!(i.width() <= q(1, 1) * BigRational::new(1.into(), pow2(127)));
    }

    #[test]
    fn acos_of_known_values() {
        let prec = 160;
        let pi = Interval::pi(prec);
        let half = Interval::from_rational(&q(1, 2), prec).acos();
        let third = pi.div_int(3);
        assert!(half.overlaps(&third));
        assert!(half.width() < q(1, 1 << 40));

        let minus_one = Interval::from_int(-1, prec).acos();
        assert!(minus_one.overlaps(&pi));
        let one = Interval::from_int(1, prec).acos();
        assert!(one.contains(&q(0, 1)));
        let zero = Interval::from_int(0, prec).acos();
        assert!(zero.overlaps(&pi.div_int(2)));
    }

    #[test]
    fn atan_of_one_is_quarter_pi() {
        let prec = 128;
        let a = Interval::from_int(1, prec).atan();
        assert!(a.overlaps(&Interval::pi(prec).div_int(4)));
        let big = Interval::from_int(1_000_000, prec).atan();
        assert!(big.hi() < Interval::pi(prec).div_int(2).hi());
    }

    #[test]
    fn division_sign_cases() {
        let a = Interval::from_rational(&q(3, 1), 32);
        let b = Interval::from_rational(&q(-2, 1), 32);
        let r = a.div(&b).unwrap();
        assert!(r.contains(&q(-3, 2)));
        assert!(Interval::from_int(1, 32)
            .div(&Interval::new((-1).into(), 1.into(), 32))
            .is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal(&q(-1, 3), 4), "-0.3333");
        assert_eq!(decimal(&q(7, 4), 2), "1.75");
    }
}
