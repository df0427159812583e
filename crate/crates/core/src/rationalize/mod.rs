//! Explicit rationalizing substitutions and primitive-element minimal
//! polynomials.

mod conic;
mod minpoly;

pub use conic::{rationalize_conic, rationalize_linear, POINT_SEARCH_HEIGHT};
pub use minpoly::{minpoly_multiquadratic, MinPoly};

use num_traits::{One, Zero};

use crate::arith::rat::is_rat_square;
use crate::arith::{is_square, squarefree_part, substitute, Rat, RatFunc, SquareTest};
use crate::error::{Error, Result};
use crate::lattice::{build_branch_table, reduced_generators};

/// The image of `x` under a field endomorphism `x -> R(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub image: RatFunc,
}

impl Substitution {
    pub fn new(image: RatFunc) -> Result<Self> {
        if image.is_constant() {
            return Err(Error::ConstantSubstitution);
        }
        Ok(Substitution { image })
    }

    pub fn identity() -> Self {
        Substitution {
            image: RatFunc::x(),
        }
    }

    /// `self` followed by `inner`: `x -> self(inner(t))`.
    pub fn then(&self, inner: &Substitution) -> Substitution {
        Substitution {
            image: substitute(&self.image, &inner.image).expect("inner is nonconstant"),
        }
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        substitute(f, &self.image).expect("image is nonconstant")
    }
}

/// A common substitution together with a square root of every pulled-back
/// radicand: `f_i(phi) = d_i * h_i^2`, with `d_i = 1` unless a defect is
/// recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub phi: Substitution,
    pub roots: Vec<RatFunc>,
    /// Non-square rational constants `d_i`; `None` where `d_i = 1`.
    pub defects: Vec<Option<Rat>>,
}

impl Witness {
    /// True when every radicand becomes a square over the rationals.
    pub fn is_exact(&self) -> bool {
        self.defects.iter().all(Option::is_none)
    }
}

/// Outcome of [`verify_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    /// Every radicand is `h_i^2` or a constant non-square multiple of it.
    pub accepted: bool,
    /// Constant defects per radicand; a witness with any defect is only
    /// valid after extending the constants.
    pub defects: Vec<Option<Rat>>,
    /// Radicands for which the claimed root fails.
    pub failures: Vec<usize>,
}

impl WitnessCheck {
    pub fn exact(&self) -> bool {
        self.accepted && self.defects.iter().all(Option::is_none)
    }
}

/// Checks `f_i(phi) = h_i^2` for every radicand, allowing a non-square
/// rational constant factor, which is recorded as a defect.
pub fn verify_witness(radicands: &[RatFunc], w: &Witness) -> WitnessCheck {
    let mut defects = Vec::with_capacity(radicands.len());
    let mut failures = Vec::new();
    if w.roots.len() != radicands.len() {
        failures.extend(w.roots.len().min(radicands.len())..radicands.len().max(w.roots.len()));
    }
    for (i, (f, h)) in radicands.iter().zip(&w.roots).enumerate() {
        let image = w.phi.apply(f);
        let ratio = if h.is_zero() {
            None
        } else {
            image
                .checked_div(&h.pow(2))
                .ok()
                .and_then(|r| r.as_constant())
        };
        match ratio {
            Some(c) if c.is_one() => defects.push(None),
            Some(c) if !c.is_zero() && !is_rat_square(&c) => defects.push(Some(c)),
            _ if h.is_zero() && image.is_zero() => defects.push(None),
            _ => {
                defects.push(None);
                failures.push(i);
            }
        }
    }
    WitnessCheck {
        accepted: failures.is_empty(),
        defects,
        failures,
    }
}

/// Rationalizes one radicand at a time: pick a radicand whose current
/// square class has degree 1 or 2 (smallest degree first, then lowest
/// index), parametrize it, substitute into the rest and repeat.
///
/// When the radicands themselves admit no such chain, the same is tried on
/// the reduced generators of their square-class lattice. Returns `None`
/// when neither succeeds or a conic has no rational point within the search
/// bound.
pub fn greedy_rationalize(radicands: &[RatFunc]) -> Result<Option<Witness>> {
    let table = build_branch_table(radicands)?;
    let mut phi = greedy_chain(radicands)?;
    if phi.is_none() {
        let gens: Vec<RatFunc> = reduced_generators(&table)
            .into_iter()
            .map(|g| RatFunc::from_poly(g.primitive_integer().1))
            .collect();
        if !gens.is_empty() {
            phi = greedy_chain(&gens)?;
        }
    }
    let Some(phi) = phi else {
        return Ok(None);
    };
    let mut roots = Vec::with_capacity(radicands.len());
    let mut defects = Vec::with_capacity(radicands.len());
    for f in radicands {
        match is_square(&phi.apply(f)) {
            SquareTest::SquareOverQ(h) => {
                roots.push(h);
                defects.push(None);
            }
            SquareTest::SquareOverC { defect, root } => {
                roots.push(root);
                defects.push(Some(defect));
            }
            SquareTest::NotSquare => return Ok(None),
        }
    }
    let w = Witness {
        phi,
        roots,
        defects,
    };
    let check = verify_witness(radicands, &w);
    assert!(check.accepted, "greedy produced an invalid witness");
    assert_eq!(check.defects, w.defects);
    Ok(Some(w))
}

fn greedy_chain(radicands: &[RatFunc]) -> Result<Option<Substitution>> {
    let mut phi = Substitution::identity();
    let mut current: Vec<RatFunc> = radicands.to_vec();
    let mut done = vec![false; radicands.len()];
    loop {
        let mut pick: Option<(usize, usize)> = None;
        let mut blocked = false;
        for (i, f) in current.iter().enumerate() {
            if done[i] {
                continue;
            }
            let d = squarefree_part(f)?.degree_or_zero();
            if d == 0 {
                done[i] = true;
            } else if d <= 2 {
                if pick.is_none_or(|(pd, _)| d < pd) {
                    pick = Some((d, i));
                }
            } else {
                blocked = true;
            }
        }
        let Some((d, i)) = pick else {
            return Ok((!blocked).then_some(phi));
        };
        let step = match d {
            1 => rationalize_linear(&current[i])?,
            _ => match rationalize_conic(&current[i]) {
                Ok(s) => s,
                Err(Error::NoRationalPointFound) => return Ok(None),
                Err(e) => return Err(e),
            },
        };
        for f in current.iter_mut() {
            *f = step.apply(f);
        }
        phi = phi.then(&step);
        done[i] = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;
    use crate::arith::UPoly;

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_i64s(c))
    }

    fn ratf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(UPoly::from_i64s(n), UPoly::from_i64s(d)).unwrap()
    }

    #[test]
    fn known_witnesses_verify() {
        // x -> (2t/(1+t^2))^2 for {x, 1 - x}
        let h1 = ratf(&[0, 2], &[1, 0, 1]);
        let h2 = ratf(&[1, 0, -1], &[1, 0, 1]);
        let w = Witness {
            phi: Substitution::new(h1.pow(2)).unwrap(),
            roots: vec![h1, h2],
            defects: vec![None, None],
        };
        let check = verify_witness(&[rf(&[0, 1]), rf(&[1, -1])], &w);
        assert!(check.exact(), "{check:?}");

        let w = Witness {
            phi: Substitution::new(rf(&[1, 0, 1])).unwrap(),
            roots: vec![rf(&[0, 1])],
            defects: vec![None],
        };
        assert!(verify_witness(&[rf(&[-1, 1])], &w).exact());

        let w = Witness {
            phi: Substitution::identity(),
            roots: vec![rf(&[0, 1])],
            defects: vec![None],
        };
        let check = verify_witness(&[rf(&[0, 1])], &w);
        assert!(!check.accepted);
        assert_eq!(check.failures, vec![0]);
    }

    #[test]
    fn defects_are_recorded() {
        let w = Witness {
            phi: Substitution::new(rf(&[0, 0, 1])).unwrap(),
            roots: vec![rf(&[0, 1]), rf(&[0, 1])],
            defects: vec![None, Some(int(2))],
        };
        let check = verify_witness(&[rf(&[0, 1]), rf(&[0, 2])], &w);
        assert!(check.accepted && !check.exact());
        assert_eq!(check.defects, vec![None, Some(int(2))]);
        // a square constant ratio means the claimed root is wrong
        let w = Witness {
            phi: Substitution::new(rf(&[0, 0, 1])).unwrap(),
            roots: vec![rf(&[0, 2])],
            defects: vec![None],
        };
        assert!(!verify_witness(&[rf(&[0, 1])], &w).accepted);
    }

    #[test]
    fn greedy_examples() {
        for fam in [
            vec![rf(&[-1, 1]), rf(&[-2, 1])],
            vec![rf(&[0, 1]), rf(&[1, -1])],
            vec![rf(&[0, -1, 1]), rf(&[0, -2, 1]), rf(&[2, -3, 1])],
            vec![ratf(&[-1, 1], &[0, 0, 1])],
        ] {
            let w = greedy_rationalize(&fam).unwrap().expect("witness");
            assert!(verify_witness(&fam, &w).exact(), "{fam:?}");
        }
        let fam = [rf(&[0, 1]), rf(&[-1, 1]), rf(&[-2, 1])];
        assert_eq!(greedy_rationalize(&fam).unwrap(), None);
        let fam = [rf(&[0, 1]), rf(&[0, 2])];
        let w = greedy_rationalize(&fam).unwrap().unwrap();
        assert_eq!(w.defects, vec![None, Some(int(2))]);
        let fam = [rf(&[3, 0, -1]), rf(&[1])];
        if let Some(w) = greedy_rationalize(&fam).unwrap() {
            assert!(verify_witness(&fam, &w).accepted);
        }
    }

    #[test]
    fn greedy_rejects_bad_input() {
        assert_eq!(greedy_rationalize(&[]), Err(Error::EmptyFamily));
        assert_eq!(
            greedy_rationalize(&[rf(&[1]), RatFunc::zero()]),
            Err(Error::ZeroRadicand { index: 1 })
        );
    }
}
