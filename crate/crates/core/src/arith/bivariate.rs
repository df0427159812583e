//! Polynomials in `z` with coefficients in Q[x], and polynomials in an
//! auxiliary variable `y` over those. Just enough structure for eliminating
//! `y` by resultants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{join_terms, var_power, Term, UPoly};
use super::rat::Rat;

/// A polynomial in `z` whose coefficients are polynomials in `x`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<UPoly>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(UPoly::one())
    }

    /// A polynomial constant in `z`.
    pub fn constant(c: UPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn z() -> Self {
        Self::from_coeffs(vec![UPoly::zero(), UPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> UPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Multiplies by a polynomial in `x`.
    pub fn scale(&self, c: &UPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rat::from_integer(BigInt::from(i))))
                .collect(),
        )
    }

    /// Specializes `x` to a rational value, giving a polynomial in `z`.
    pub fn eval_x(&self, x: &Rat) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Largest degree in `x` among the coefficients.
    pub fn x_degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.degree_or_zero())
            .max()
            .unwrap_or(0)
    }

    /// Quotient when `d` divides `self` exactly in Q[x][z].
    pub fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() <= dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![UPoly::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lc)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.iter()
            .all(UPoly::is_zero)
            .then(|| Self::from_coeffs(quot))
    }

    /// `self(z - y)` as a polynomial in `y`.
    pub fn shift_by_y(&self) -> YPoly {
        let n = self.coeffs.len();
        let mut out = vec![vec![UPoly::zero(); n]; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut binom = BigInt::one();
            for j in 0..=i {
                // c * C(i, j) * (-y)^j * z^(i-j)
                let mut k = Rat::from_integer(binom.clone());
                if j % 2 == 1 {
                    k = -k;
                }
                out[j][i - j] = &out[j][i - j] + &c.scale(&k);
                binom = binom * BigInt::from(i - j) / BigInt::from(j + 1);
            }
        }
        YPoly::from_coeffs(out.into_iter().map(ZPoly::from_coeffs).collect())
    }

    /// Canonical text with `x` and `z`: descending powers of `z`, multi-term
    /// coefficients parenthesized, the `z^0` coefficient written out inline.
    pub fn to_expr_string(&self) -> String {
        let mut terms: Vec<Term> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                terms.extend(c.terms("x"));
            } else if c.term_count() == 1 {
                let d = c.degree_or_zero();
                let zpart = var_power("z", k).expect("k > 0");
                let var = match var_power("x", d) {
                    Some(xp) => format!("{xp}*{zpart}"),
                    None => zpart,
                };
                terms.push(Term::monomial(&c.coeffs()[d], Some(var)));
            } else {
                terms.push(Term {
                    negative: false,
                    body: format!(
                        "({})*{}",
                        c.to_expr_string("x"),
                        var_power("z", k).expect("k > 0")
                    ),
                });
            }
        }
        join_terms(&terms)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ZPoly::from_coeffs(out)
    }
}

/// A polynomial in `y` with [`ZPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YPoly {
    coeffs: Vec<ZPoly>,
}

impl YPoly {
    pub fn from_coeffs(mut coeffs: Vec<ZPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    /// `y^2 - f` for a polynomial `f` in `x`.
    pub fn square_minus(f: &UPoly) -> Self {
        Self::from_coeffs(vec![ZPoly::constant(-f), ZPoly::zero(), ZPoly::one()])
    }

    /// `y`.
    pub fn y() -> Self {
        Self::from_coeffs(vec![ZPoly::zero(), ZPoly::one()])
    }

    pub fn coeffs(&self) -> &[ZPoly] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64s(c)
    }

    #[test]
    fn prints_like_the_literature() {
        // z^4 + (-4x^2 + 6x) z^2 + x^2
        let m = ZPoly::from_coeffs(vec![
            p(&[0, 0, 1]),
            UPoly::zero(),
            p(&[0, 6, -4]),
            UPoly::zero(),
            p(&[1]),
        ]);
        assert_eq!(m.to_string(), "z^4 + (-4*x^2 + 6*x)*z^2 + x^2");
        let m = ZPoly::from_coeffs(vec![p(&[1, 1]), p(&[0, -1]), p(&[2])]);
        assert_eq!(m.to_string(), "2*z^2 - x*z + x + 1");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }

    #[test]
    fn shift_expands_binomials() {
        // (z - y)^2 = z^2 - 2 z y + y^2
        let sq = ZPoly::z().pow(2).shift_by_y();
        assert_eq!(sq.coeffs()[0], ZPoly::z().pow(2));
        assert_eq!(sq.coeffs()[1], ZPoly::z().scale(&UPoly::constant(int(-2))));
        assert_eq!(sq.coeffs()[2], ZPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = &ZPoly::from_coeffs(vec![p(&[0, 1]), p(&[1])])
            * &ZPoly::from_coeffs(vec![p(&[1, 1]), p(&[0, 2])]);
        let d = ZPoly::from_coeffs(vec![p(&[0, 1]), p(&[1])]);
        assert_eq!(
            a.exact_div(&d),
            Some(ZPoly::from_coeffs(vec![p(&[1, 1]), p(&[0, 2])]))
        );
        assert_eq!(ZPoly::z().exact_div(&ZPoly::constant(p(&[0, 1]))), None);
    }
}
