//! Reduced rational functions and substitution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::factor::poly_gcd;
use super::poly::UPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// A quotient of polynomials in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.constant_term())
    }

    /// `deg num - deg den`, the negated valuation at infinity. Zero maps to 0.
    pub fn degree_difference(&self) -> i64 {
        self.num.degree_or_zero() as i64 - self.den.degree_or_zero() as i64
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, n: u32) -> Self {
        RatFunc {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Maximum of numerator and denominator degree.
    pub fn height_degree(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    pub fn to_expr_string(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.to_expr_string(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_expr_string(var),
                self.den.to_expr_string(var)
            )
        }
    }
}

/// Composition `f(s)`: the image of `f` under the field endomorphism
/// sending the variable to `s`.
pub fn substitute(f: &RatFunc, s: &RatFunc) -> Result<RatFunc> {
    if s.is_constant() {
        return Err(Error::ConstantSubstitution);
    }
    let dn = f.num.degree_or_zero();
    let dd = f.den.degree_or_zero();
    let n = homogeneous_eval(&f.num, s.num(), s.den(), dn);
    let d = homogeneous_eval(&f.den, s.num(), s.den(), dd);
    // f(p/q) = n / q^dn  divided by  d / q^dd
    let (n, d) = if dn >= dd {
        (n, &d * &s.den.pow((dn - dd) as u32))
    } else {
        (&n * &s.den.pow((dd - dn) as u32), d)
    };
    RatFunc::new(n, d)
}

/// `sum a_i p^i q^(n-i)` for `a` of degree at most `n`.
fn homogeneous_eval(a: &UPoly, p: &UPoly, q: &UPoly, n: usize) -> UPoly {
    let mut p_pows = Vec::with_capacity(n + 1);
    let mut q_pows = Vec::with_capacity(n + 1);
    p_pows.push(UPoly::one());
    q_pows.push(UPoly::one());
    for i in 1..=n {
        p_pows.push(&p_pows[i - 1] * p);
        q_pows.push(&q_pows[i - 1] * q);
    }
    let mut acc = UPoly::zero();
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&p_pows[i] * &q_pows[n - i]).scale(c);
    }
    acc
}

impl From<UPoly> for RatFunc {
    fn from(p: UPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string("x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
