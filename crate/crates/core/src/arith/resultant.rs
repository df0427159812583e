//! Sylvester resultants over Q[x][z] and denominator clearing for monic
//! polynomials over Q(x).

use super::bivariate::{YPoly, ZPoly};
use super::factor::coprime_basis;
use super::factor::valuation;
use super::poly::UPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// `Res_y(a, b)` as the determinant of the Sylvester matrix, computed with
/// fraction-free Bareiss elimination.
pub fn resultant(a: &YPoly, b: &YPoly) -> Result<ZPoly> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroInput);
    };
    if da == 0 {
        return Ok(a.coeffs()[0].pow(db as u32));
    }
    if db == 0 {
        return Ok(b.coeffs()[0].pow(da as u32));
    }
    Ok(bareiss_det(sylvester(a, b)))
}

/// Rows `0..db` hold shifts of `a`, rows `db..` shifts of `b`, leading
/// coefficient first.
fn sylvester(a: &YPoly, b: &YPoly) -> Vec<Vec<ZPoly>> {
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    let n = da + db;
    let mut m = vec![vec![ZPoly::zero(); n]; n];
    for i in 0..db {
        for k in 0..=da {
            m[i][i + k] = a.coeffs()[da - k].clone();
        }
    }
    for i in 0..da {
        for k in 0..=db {
            m[db + i][i + k] = b.coeffs()[db - k].clone();
        }
    }
    m
}

fn bareiss_det(mut m: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = ZPoly::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return ZPoly::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev.is_one() {
                    t
                } else {
                    t.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            m[i][k] = ZPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Result of clearing denominators in a monic polynomial over Q(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedMonic {
    /// Monic in `z` with polynomial coefficients; its roots are `scale`
    /// times the roots of the input.
    pub poly: ZPoly,
    /// The minimal monic `u` with `c_i * u^(n-i)` polynomial for every `i`.
    pub scale: UPoly,
}

/// Given monic `q(z) = sum c_i z^i` over Q(x) (coefficients lowest first),
/// returns `u^n q(z/u)`, whose coefficients are `c_i u^(n-i)`.
pub fn clear_denominators_monic(q: &[RatFunc]) -> Result<ClearedMonic> {
    let n = q
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroInput)?;
    if !q[n].is_one() {
        return Err(Error::InvalidParams("polynomial is not monic in z".into()));
    }
    let dens: Vec<UPoly> = q[..n]
        .iter()
        .filter(|c| !c.is_zero() && !c.den().is_one())
        .map(|c| c.den().clone())
        .collect();
    let mut scale = UPoly::one();
    if !dens.is_empty() {
        let cb = coprime_basis(&dens)?;
        for p in &cb.basis {
            // smallest k with v_p(den c_i) <= k (n - i) for all i
            let k = q[..n]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let v = (-valuation(c, p)).max(0) as usize;
                    v.div_ceil(n - i)
                })
                .max()
                .unwrap_or(0);
            scale = &scale * &p.pow(k as u32);
        }
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    let u = RatFunc::from_poly(scale.clone());
    for (i, c) in q[..=n].iter().enumerate() {
        let t = c * &u.pow((n - i) as u32);
        debug_assert!(t.is_polynomial());
        coeffs.push(t.num().clone());
    }
    Ok(ClearedMonic {
        poly: ZPoly::from_coeffs(coeffs),
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64s(c)
    }

    fn zc(c: &[&[i64]]) -> ZPoly {
        ZPoly::from_coeffs(c.iter().map(|k| p(k)).collect())
    }

    #[test]
    fn sqrt_x_minimal_polynomial() {
        // Res_y(z - y, y^2 - x) = z^2 - x
        let a = ZPoly::z().shift_by_y();
        let b = YPoly::square_minus(&UPoly::x());
        assert_eq!(resultant(&a, &b).unwrap(), zc(&[&[0, -1], &[], &[1]]));
    }

    #[test]
    fn sum_of_two_roots() {
        // Res_y((z - y)^2 - x, y^2 - (1 - x)) = z^4 - 2 z^2 + (2x - 1)^2
        let a = (&ZPoly::z().pow(2) - &ZPoly::constant(UPoly::x())).shift_by_y();
        let b = YPoly::square_minus(&p(&[1, -1]));
        let expect = zc(&[&[1, -4, 4], &[], &[-2], &[], &[1]]);
        assert_eq!(resultant(&a, &b).unwrap(), expect);
    }

    #[test]
    fn degenerate_cases() {
        assert!(resultant(&YPoly::y(), &YPoly::y()).unwrap().is_zero());
        assert_eq!(
            resultant(&YPoly::default(), &YPoly::y()),
            Err(Error::ZeroInput)
        );
        let c = YPoly::from_coeffs(vec![ZPoly::constant(p(&[2]))]);
        assert_eq!(
            resultant(&c, &YPoly::square_minus(&UPoly::x())).unwrap(),
            zc(&[&[4]])
        );
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn clears_denominators() {
        let q = [rf(&[0, -1], &[1]), RatFunc::zero(), RatFunc::one()];
        let c = clear_denominators_monic(&q).unwrap();
        assert_eq!(c.poly, zc(&[&[0, -1], &[], &[1]]));
        assert!(c.scale.is_one());

        let q = [rf(&[-1], &[0, 1]), RatFunc::zero(), RatFunc::one()];
        let c = clear_denominators_monic(&q).unwrap();
        assert_eq!(c.poly, zc(&[&[0, -1], &[], &[1]]));
        assert_eq!(c.scale, UPoly::x());

        let q = [rf(&[-1, -1], &[0, 0, 1]), RatFunc::zero(), RatFunc::one()];
        let c = clear_denominators_monic(&q).unwrap();
        assert_eq!(c.poly, zc(&[&[-1, -1], &[], &[1]]));
        assert_eq!(c.scale, UPoly::x());

        let q = [RatFunc::one(), RatFunc::constant(int(2))];
        assert!(matches!(
            clear_denominators_monic(&q),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn cleared_roots_scale() {
        // q = z^2 - 1/x  has root a = 1/sqrt(x); p(u a) = 0 with u = x:
        // x^2 * (1/x) - x = 0.  Check via p(z) = u^2 q(z/u) coefficientwise.
        let q = [rf(&[-1], &[0, 1]), rf(&[1], &[0, 1]), RatFunc::one()];
        let c = clear_denominators_monic(&q).unwrap();
        // c1 = 1/x * x = 1, c0 = -1/x * x^2 = -x
        assert_eq!(c.poly, zc(&[&[0, -1], &[1], &[1]]));
    }
}
