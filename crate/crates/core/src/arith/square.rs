use super::factor::{squarefree_decompose, SqfDecomp};
use super::poly::UPoly;
use super::rat::{is_rat_square, rat_sqrt, Rat};
use super::ratfunc::RatFunc;

/// Outcome of testing a rational function for being a perfect square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareTest {
    /// `f = root^2` over the rationals.
    SquareOverQ(RatFunc),
    /// `f = defect * root^2` with `defect` a rational non-square: a square
    /// only after extending the constants.
    SquareOverC {
        defect: Rat,
        root: RatFunc,
    },
    NotSquare,
}

impl SquareTest {
    pub fn is_square_over_c(&self) -> bool {
        !matches!(self, SquareTest::NotSquare)
    }
}

pub fn is_square(f: &RatFunc) -> SquareTest {
    if f.is_zero() {
        return SquareTest::SquareOverQ(RatFunc::zero());
    }
    // num and den are coprime, so f is a square iff both are squares up to
    // the leading constant of the numerator (the denominator is monic).
    let num = squarefree_decompose(f.num()).expect("nonzero numerator");
    let den = squarefree_decompose(f.den()).expect("nonzero denominator");
    let (Some(rn), Some(rd)) = (even_root(&num), even_root(&den)) else {
        return SquareTest::NotSquare;
    };
    let unit = &num.unit / &den.unit;
    let root_shape = RatFunc::new(rn, rd).expect("nonzero denominator");
    match rat_sqrt(&unit) {
        Some(s) => SquareTest::SquareOverQ(root_shape.scale(&s)),
        None => {
            debug_assert!(!is_rat_square(&unit));
            SquareTest::SquareOverC {
                defect: unit,
                root: root_shape,
            }
        }
    }
}

/// Monic square root of the monic part, when all multiplicities are even.
fn even_root(d: &SqfDecomp) -> Option<UPoly> {
    d.parts.iter().try_fold(UPoly::one(), |acc, (f, m)| {
        (m % 2 == 0).then(|| &acc * &f.pow(m / 2))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        let x2 = RatFunc::from_poly(p(&[0, 0, 1]));
        assert_eq!(is_square(&x2), SquareTest::SquareOverQ(RatFunc::x()));
        assert_eq!(
            is_square(&x2.scale(&int(2))),
            SquareTest::SquareOverC {
                defect: int(2),
                root: RatFunc::x()
            }
        );
        assert_eq!(
            is_square(&RatFunc::from_poly(p(&[0, 0, 0, 1]))),
            SquareTest::NotSquare
        );
        assert_eq!(
            is_square(&RatFunc::zero()),
            SquareTest::SquareOverQ(RatFunc::zero())
        );
    }

    #[test]
    fn rational_squares() {
        // 9 (x+1)^2 / (x-2)^4
        let f = RatFunc::new(p(&[1, 1]).pow(2).scale(&int(9)), p(&[-2, 1]).pow(4)).unwrap();
        match is_square(&f) {
            SquareTest::SquareOverQ(h) => assert_eq!(&h * &h, f),
            other => panic!("{other:?}"),
        }
        let g = RatFunc::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(is_square(&g), SquareTest::NotSquare);
    }
}
