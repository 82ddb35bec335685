//! Exact arithmetic in towers of real quadratic extensions of the rationals.

mod element;
pub mod interval;
mod parse;
mod tower;

pub use element::{arith, ArithOp, FieldElement};
pub use interval::Interval;
pub use tower::{Generator, Tower};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// `n / d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
