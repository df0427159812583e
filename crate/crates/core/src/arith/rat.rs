//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact integer square root, if `n` is a perfect square.
pub fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Nonnegative rational square root, if `q` is the square of a rational.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_zero() {
        return Some(Rat::zero());
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(Rat::new(n, d))
}

pub fn is_rat_square(q: &Rat) -> bool {
    rat_sqrt(q).is_some()
}

/// `n` or `n/d`, the form used inside expression strings.
pub fn rat_to_expr(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Always `n/d`, the form used for standalone rational fields in reports.
pub fn rat_to_fraction(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Bit size of numerator plus denominator.
pub fn rat_bits(q: &Rat) -> u64 {
    q.numer().bits() + q.denom().bits()
}
