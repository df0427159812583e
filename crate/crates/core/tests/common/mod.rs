#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ratroot::arith::{squarefree_part, Rat, RatFunc, UPoly, ZPoly};

pub fn poly(c: &[i64]) -> UPoly {
    UPoly::from_i64s(c)
}

pub fn rf(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(UPoly::from_i64s(c))
}

pub fn ratf(n: &[i64], d: &[i64]) -> RatFunc {
    RatFunc::new(UPoly::from_i64s(n), UPoly::from_i64s(d)).unwrap()
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `prod (x - a_i)`.
pub fn from_roots(roots: &[Rat]) -> UPoly {
    roots
        .iter()
        .fold(UPoly::one(), |acc, r| &acc * &UPoly::linear_root(r.clone()))
}

/// Random nonzero polynomial of degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> UPoly {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
        let p = UPoly::from_i64s(&c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfunc(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> RatFunc {
    let n = random_poly(rng, max_deg, bound);
    let d = random_poly(rng, max_deg / 2, bound);
    RatFunc::new(n, d).unwrap()
}

/// `n` distinct rationals with small numerators and denominators.
pub fn distinct_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < n {
        let r = q(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

/// Genus of the compositum of square roots as the sum of the genera of the
/// hyperelliptic quotients, one per nontrivial class among the subset
/// products.
pub fn genus_by_characters(radicands: &[RatFunc]) -> u64 {
    let m = radicands.len();
    assert!(m <= 12, "oracle enumerates 2^m subsets");
    let mut classes = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let prod = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .fold(RatFunc::one(), |acc, i| &acc * &radicands[i]);
        let c = squarefree_part(&prod).unwrap();
        if !c.is_constant() {
            classes.insert(c.coeffs().to_vec());
        }
    }
    classes
        .iter()
        .map(|c| (c.len() as u64 - 1).saturating_sub(1) / 2)
        .sum()
}

/// Element of `Q[x][s_1, ..., s_m] / (s_i^2 - f_i)`, indexed by the subset
/// of square roots in each monomial.
#[derive(Clone)]
struct Alg(Vec<UPoly>);

impl Alg {
    fn zero(m: usize) -> Self {
        Alg(vec![UPoly::zero(); 1 << m])
    }

    fn mul(&self, other: &Alg, f: &[UPoly]) -> Alg {
        let mut out = Alg::zero(f.len());
        for (a, ca) in self.0.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.0.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let common = (0..f.len())
                    .filter(|i| (a & b) >> i & 1 == 1)
                    .fold(UPoly::one(), |acc, i| &acc * &f[i]);
                out.0[a ^ b] = &out.0[a ^ b] + &(&(ca * cb) * &common);
            }
        }
        out
    }

    fn add(&self, other: &Alg) -> Alg {
        Alg(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// `prod over sign vectors of (z - sum e_i sqrt f_i)`, expanded in the
/// multiquadratic algebra; every non-rational component must cancel.
pub fn norm_minpoly(f: &[UPoly]) -> ZPoly {
    let m = f.len();
    let mut p: Vec<Alg> = vec![{
        let mut one = Alg::zero(m);
        one.0[0] = UPoly::one();
        one
    }];
    for signs in 0u32..(1 << m) {
        let mut c0 = Alg::zero(m);
        for i in 0..m {
            let e = if signs >> i & 1 == 1 { 1 } else { -1 };
            c0.0[1 << i] = poly(&[e]);
        }
        let mut one = Alg::zero(m);
        one.0[0] = UPoly::one();
        let mut next = vec![Alg::zero(m); p.len() + 1];
        for (k, a) in p.iter().enumerate() {
            next[k] = next[k].add(&a.mul(&c0, f));
            next[k + 1] = next[k + 1].add(&a.mul(&one, f));
        }
        p = next;
    }
    let coeffs = p
        .into_iter()
        .map(|a| {
            assert!(
                a.0[1..].iter().all(UPoly::is_zero),
                "irrational part survives"
            );
            a.0[0].clone()
        })
        .collect();
    ZPoly::from_coeffs(coeffs)
}

/// `z^4 - 2 (f + g) z^2 + (f - g)^2`.
pub fn pair_minpoly(f: &UPoly, g: &UPoly) -> ZPoly {
    let d = f - g;
    ZPoly::from_coeffs(vec![
        &d * &d,
        UPoly::zero(),
        (f + g).scale(&q(-2, 1)),
        UPoly::zero(),
        UPoly::one(),
    ])
}
