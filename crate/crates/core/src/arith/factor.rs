//! Gcds, squarefree decomposition and gcd-free (coprime) bases.

use super::poly::UPoly;
use super::rat::Rat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut a = a.monic();
    let mut b = b.monic();
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

/// `f = unit * prod factor^multiplicity` with monic, squarefree, pairwise
/// coprime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqfDecomp {
    pub unit: Rat,
    pub parts: Vec<(UPoly, u32)>,
}

impl SqfDecomp {
    pub fn reconstruct(&self) -> UPoly {
        self.parts
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    /// Product of the factors with odd multiplicity.
    pub fn odd_part(&self) -> UPoly {
        self.parts
            .iter()
            .filter(|(_, m)| m % 2 == 1)
            .fold(UPoly::one(), |acc, (f, _)| &acc * f)
    }
}

/// Yun's algorithm; parts come out in increasing multiplicity.
pub fn squarefree_decompose(f: &UPoly) -> Result<SqfDecomp> {
    let unit = f.leading_coeff().ok_or(Error::ZeroInput)?.clone();
    let f = f.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SqfDecomp { unit, parts });
    }
    let fp = f.derivative();
    let g = poly_gcd(&f, &fp);
    let mut c = f.exact_div(&g).expect("gcd divides f");
    let mut d = &fp.exact_div(&g).expect("gcd divides f'") - &c.derivative();
    let mut mult = 1u32;
    while !c.is_constant() {
        let a = poly_gcd(&c, &d);
        if !a.is_constant() {
            c = c.exact_div(&a).expect("Yun step divides");
            d = &d.exact_div(&a).expect("Yun step divides") - &c.derivative();
            parts.push((a, mult));
        } else {
            d = &d - &c.derivative();
        }
        mult += 1;
    }
    Ok(SqfDecomp { unit, parts })
}

/// Splits a nonzero rational function as `unit * odd * h^2`, returning
/// `(unit, odd)` with `odd` monic and squarefree.
///
/// Over the complex numbers the class of `f` modulo squares is just `odd`;
/// over the rationals `unit * odd` represents it.
pub fn square_class(f: &RatFunc) -> Result<(Rat, UPoly)> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sqf = squarefree_decompose(&(f.num() * f.den()))?;
    Ok((sqf.unit.clone(), sqf.odd_part()))
}

/// Monic squarefree polynomial representing the square class of `f`
/// (nonzero constants count as squares).
pub fn squarefree_part(f: &RatFunc) -> Result<UPoly> {
    square_class(f).map(|(_, odd)| odd)
}

/// A gcd-free basis of a family of polynomials together with the exponent
/// matrix expressing each input in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeBasis {
    /// Monic, squarefree, pairwise coprime, nonconstant; sorted by degree
    /// then coefficients.
    pub basis: Vec<UPoly>,
    /// `exponents[i][j]` is the multiplicity of `basis[j]` in input `i`.
    pub exponents: Vec<Vec<u32>>,
    /// `inputs[i] = units[i] * prod basis[j]^exponents[i][j]`.
    pub units: Vec<Rat>,
}

pub fn coprime_basis(fs: &[UPoly]) -> Result<CoprimeBasis> {
    let mut basis: Vec<UPoly> = Vec::new();
    for f in fs {
        for (part, _) in squarefree_decompose(f)?.parts {
            refine_into(&mut basis, part);
        }
    }
    basis.sort_by(|a, b| a.cmp_canonical(b));

    let mut exponents = Vec::with_capacity(fs.len());
    let mut units = Vec::with_capacity(fs.len());
    for f in fs {
        let mut rest = f.clone();
        let mut row = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut e = 0u32;
            while let Some(q) = rest.exact_div(b) {
                rest = q;
                e += 1;
            }
            row.push(e);
        }
        assert!(
            rest.is_constant() && !rest.is_zero(),
            "coprime basis does not reconstruct {f}"
        );
        units.push(rest.constant_term());
        exponents.push(row);
    }
    Ok(CoprimeBasis {
        basis,
        exponents,
        units,
    })
}

/// Adds the squarefree polynomial `q` to a pairwise coprime set, splitting
/// elements along common factors until coprimality is restored.
fn refine_into(basis: &mut Vec<UPoly>, q: UPoly) {
    let mut work = vec![q];
    'next: while let Some(a) = work.pop() {
        if a.is_constant() {
            continue;
        }
        for i in 0..basis.len() {
            let g = poly_gcd(&a, &basis[i]);
            if g.is_constant() {
                continue;
            }
            let b = basis.swap_remove(i);
            work.push(b.exact_div(&g).expect("gcd divides"));
            work.push(a.exact_div(&g).expect("gcd divides"));
            work.push(g);
            continue 'next;
        }
        basis.push(a);
    }
}

/// Valuation of `f` at the squarefree polynomial `p` (multiplicity of `p`
/// in the numerator minus that in the denominator). Only meaningful when
/// `p` is coprime to the other factors of `f`, as in a coprime basis.
pub fn valuation(f: &RatFunc, p: &UPoly) -> i64 {
    fn count(mut a: UPoly, p: &UPoly) -> i64 {
        let mut e = 0;
        while let Some(q) = a.exact_div(p) {
            a = q;
            e += 1;
        }
        e
    }
    count(f.num().clone(), p) - count(f.den().clone(), p)
}
