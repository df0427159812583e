//! Minimal polynomial of `sqrt f_1 + ... + sqrt f_m` by iterated resultants.

use num_bigint::BigInt;

use crate::arith::{
    clear_denominators_monic, poly_gcd, resultant, Rat, RatFunc, UPoly, YPoly, ZPoly,
};
use crate::error::{Error, Result};
use crate::lattice::{build_branch_table, dependency, lattice_rank};

/// Monic minimal polynomial in `z` with polynomial coefficients in `x`.
///
/// Its roots are `scale * (±sqrt f_1 ± ... ± sqrt f_m)`; `scale` is 1 when
/// every generator is a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPoly {
    pub poly: ZPoly,
    pub generators: Vec<RatFunc>,
    pub scale: UPoly,
}

/// `P_1 = z^2 - f_1`, `P_(k+1) = Res_y(P_k(z - y), y^2 - f_(k+1))`.
pub fn minpoly_multiquadratic(generators: &[RatFunc]) -> Result<MinPoly> {
    let table = build_branch_table(generators)?;
    if lattice_rank(&table) < generators.len() {
        return Err(Error::DependentGenerators {
            relation: dependency(&table).expect("rank deficit has a relation"),
        });
    }
    // sqrt(n/d) * D = sqrt(n * D^2 / d) with D the lcm of the denominators
    let lcm = generators.iter().fold(UPoly::one(), |acc, g| {
        let gcd = poly_gcd(&acc, g.den());
        &acc.exact_div(&gcd).expect("gcd divides") * g.den()
    });
    let polys: Vec<UPoly> = generators
        .iter()
        .map(|g| {
            let cof = lcm.pow(2).exact_div(g.den()).expect("den divides lcm");
            g.num() * &cof
        })
        .collect();
    let mut p = &ZPoly::z().pow(2) - &ZPoly::constant(polys[0].clone());
    for g in &polys[1..] {
        p = resultant(&p.shift_by_y(), &YPoly::square_minus(g))?;
    }
    let (poly, scale) = if lcm.is_one() {
        (p, UPoly::one())
    } else {
        // q(z) = D^(-N) p(D z) has roots sum ± sqrt f_i
        let n = p.degree().expect("nonzero");
        let d = RatFunc::from_poly(lcm);
        let q: Vec<RatFunc> = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let shift = d.pow((n - i) as u32).recip().expect("nonzero");
                &RatFunc::from_poly(c.clone()) * &shift
            })
            .collect();
        let cleared = clear_denominators_monic(&q)?;
        (cleared.poly, cleared.scale)
    };
    if !squarefree_in_z(&poly) {
        return Err(Error::DegenerateSum);
    }
    Ok(MinPoly {
        poly,
        generators: generators.to_vec(),
        scale,
    })
}

/// A monic `P` in `z` is squarefree over Q(x) iff its discriminant, a
/// polynomial in `x` of degree at most `(2N - 2) * deg_x P`, is nonzero;
/// evaluating at more points than that degree decides it.
fn squarefree_in_z(p: &ZPoly) -> bool {
    let n = p.degree().unwrap_or(0);
    if n <= 1 {
        return true;
    }
    let tries = (2 * n - 1) * p.x_degree() + 1;
    (0..tries as i64).any(|k| {
        let x0 = if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 };
        let s = p.eval_x(&Rat::from_integer(BigInt::from(x0)));
        poly_gcd(&s, &s.derivative()).is_constant()
    })
}
