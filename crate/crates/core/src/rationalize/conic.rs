//! Rational parametrizations of `z^2 = ax + b` and `z^2 = ax^2 + bx + c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Substitution;
use crate::arith::rat::rat_sqrt;
use crate::arith::{is_square, square_class, substitute, Rat, RatFunc, SquareTest, UPoly};
use crate::error::{Error, Result};

/// Height bound for the rational point search on conics without an
/// obvious point.
pub const POINT_SEARCH_HEIGHT: i64 = 100;

/// The rational representative `unit * odd` of the square class of `f`,
/// so that `f / rep` is a square in Q(x).
fn rational_class_rep(f: &RatFunc) -> Result<UPoly> {
    let (unit, odd) = square_class(f)?;
    Ok(odd.scale(&unit))
}

fn image(num: UPoly, den: UPoly) -> Substitution {
    Substitution::new(RatFunc::new(num, den).expect("nonzero denominator"))
        .expect("parametrization is nonconstant")
}

/// For a radicand of class degree 1 with representative `ax + b`, the
/// substitution `x -> (t^2 - b)/a`, under which the representative
/// becomes `t^2`.
pub fn rationalize_linear(f: &RatFunc) -> Result<Substitution> {
    let rep = rational_class_rep(f)?;
    if rep.degree() != Some(1) {
        return Err(Error::WrongDegree {
            expected: 1,
            found: rep.degree_or_zero(),
        });
    }
    let a = rep.coeff(1);
    let b = rep.coeff(0);
    let inv = a.recip();
    Ok(image(
        UPoly::from_coeffs(vec![-b * &inv, Rat::zero(), inv]),
        UPoly::one(),
    ))
}

/// For a radicand of class degree 2 with representative `ax^2 + bx + c`, a
/// substitution making the representative a square over Q.
///
/// Tries, in order: lines through a point at infinity when `a` is a square,
/// lines through a rational root, and lines through a rational point of
/// height at most [`POINT_SEARCH_HEIGHT`].
pub fn rationalize_conic(f: &RatFunc) -> Result<Substitution> {
    let rep = rational_class_rep(f)?;
    if rep.degree() != Some(2) {
        return Err(Error::WrongDegree {
            expected: 2,
            found: rep.degree_or_zero(),
        });
    }
    let s = conic_parametrization(&rep)?;
    debug_assert!(matches!(
        is_square(&substitute(&RatFunc::from_poly(rep), &s.image)?),
        SquareTest::SquareOverQ(_)
    ));
    Ok(s)
}

fn conic_parametrization(rep: &UPoly) -> Result<Substitution> {
    let a = rep.coeff(2);
    let b = rep.coeff(1);
    let c = rep.coeff(0);
    let two = Rat::from_integer(BigInt::from(2));

    // z = s x + t meets the conic once more at x = (t^2 - c)/(b - 2 s t)
    if let Some(s) = rat_sqrt(&a) {
        return Ok(image(
            UPoly::from_coeffs(vec![-c, Rat::zero(), Rat::one()]),
            UPoly::from_coeffs(vec![b, -(&two * s)]),
        ));
    }

    // z = t (x - r) through the root r; the other root is r' = -b/a - r,
    // and x = (a r' - t^2 r)/(a - t^2)
    let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * &a * &c;
    if let Some(d) = rat_sqrt(&disc) {
        let r = (-&b + d) / (&two * &a);
        let r2 = -&b / &a - &r;
        return Ok(image(
            UPoly::from_coeffs(vec![&a * r2, Rat::zero(), -r]),
            UPoly::from_coeffs(vec![a, Rat::zero(), -Rat::one()]),
        ));
    }

    // z = z0 + t (x - x0) through a rational point (x0, z0)
    let (x0, z0) = find_rational_point(rep).ok_or(Error::NoRationalPointFound)?;
    // x = x0 + (2 z0 t - 2 a x0 - b)/(a - t^2)
    let lin = &two * &a * &x0 + &b;
    let den = UPoly::from_coeffs(vec![a.clone(), Rat::zero(), -Rat::one()]);
    let num = &den.scale(&x0) + &UPoly::from_coeffs(vec![-lin, &two * z0]);
    Ok(image(num, den))
}

/// Smallest-height rational `x0` (height `max(|p|, q)` for `x0 = p/q`) at
/// which `rep(x0)` is a rational square.
pub(crate) fn find_rational_point(rep: &UPoly) -> Option<(Rat, Rat)> {
    for h in 1..=POINT_SEARCH_HEIGHT {
        for (p, q) in fractions_of_height(h) {
            let x0 = Rat::new(BigInt::from(p), BigInt::from(q));
            let v = rep.eval(&x0);
            if v.is_negative() {
                continue;
            }
            if let Some(z0) = rat_sqrt(&v) {
                return Some((x0, z0));
            }
        }
    }
    None
}

/// Reduced fractions `p/q`, `q > 0`, with `max(|p|, q) = h`.
fn fractions_of_height(h: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=h)
        .flat_map(move |q| (-h..=h).map(move |p| (p, q)))
        .filter(move |&(p, q)| p.abs().max(q) == h && p.gcd(&q) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_i64s(c))
    }

    fn square_after(f: &RatFunc, s: &Substitution) -> SquareTest {
        is_square(&substitute(f, &s.image).unwrap())
    }

    #[test]
    fn linear_examples() {
        assert_eq!(
            rationalize_linear(&rf(&[-1, 1])).unwrap().image,
            rf(&[1, 0, 1])
        );
        assert_eq!(
            rationalize_linear(&rf(&[0, 1])).unwrap().image,
            rf(&[0, 0, 1])
        );
        let s = rationalize_linear(&rf(&[3, 2])).unwrap();
        assert_eq!(
            s.image,
            RatFunc::from_poly(UPoly::from_coeffs(vec![
                Rat::new((-3).into(), 2.into()),
                int(0),
                Rat::new(1.into(), 2.into())
            ]))
        );
        assert!(matches!(
            rationalize_linear(&rf(&[0, -1, 1])),
            Err(Error::WrongDegree {
                expected: 1,
                found: 2
            })
        ));
        // 3 (x - 1) x^2: representative 3x - 3
        let f = rf(&[0, 0, -3, 3]);
        let s = rationalize_linear(&f).unwrap();
        assert!(matches!(square_after(&f, &s), SquareTest::SquareOverQ(_)));
    }

    #[test]
    fn conic_square_leading_coefficient() {
        let f = rf(&[0, -1, 1]);
        let s = rationalize_conic(&f).unwrap();
        assert!(matches!(square_after(&f, &s), SquareTest::SquareOverQ(_)));
    }

    #[test]
    fn conic_through_root() {
        let f = rf(&[1, 0, -1]);
        let s = rationalize_conic(&f).unwrap();
        assert!(matches!(square_after(&f, &s), SquareTest::SquareOverQ(_)));
    }

    #[test]
    fn conic_point_search() {
        // -x^2 + 2: no square leading coefficient, no rational root, but the
        // point (1, 1)
        let f = rf(&[2, 0, -1]);
        let s = rationalize_conic(&f).unwrap();
        assert!(matches!(square_after(&f, &s), SquareTest::SquareOverQ(_)));
        // 3 - x^2 has no rational points at all
        match rationalize_conic(&rf(&[3, 0, -1])) {
            Err(Error::NoRationalPointFound) => {}
            Ok(s) => assert!(matches!(
                square_after(&rf(&[3, 0, -1]), &s),
                SquareTest::SquareOverQ(_)
            )),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn conic_rejects_wrong_degree() {
        assert!(matches!(
            rationalize_conic(&rf(&[0, 1])),
            Err(Error::WrongDegree {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn heights_enumerate_all_fractions() {
        let mut seen = std::collections::HashSet::new();
        for h in 1..=6 {
            for (p, q) in fractions_of_height(h) {
                assert!(seen.insert((p, q)), "duplicate {p}/{q}");
            }
        }
        let expect = (1..=6i64)
            .flat_map(|q| (-6..=6i64).map(move |p| (p, q)))
            .filter(|(p, q)| p.gcd(q) == 1)
            .count();
        assert_eq!(seen.len(), expect);
        assert!(seen.contains(&(0, 1)));
    }
}
