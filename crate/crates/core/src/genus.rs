//! Geometric genus of covers of the projective line from ramification data
//! (Riemann–Hurwitz), for multiquadratic, hyperelliptic and cyclic covers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{squarefree_part, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::lattice::{branch_count, build_branch_table, BranchTable, LatticeSummary};

/// Genus together with the lattice data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub genus: u64,
    pub summary: LatticeSummary,
}

/// Genus of the curve whose function field is `Q(x)(sqrt f_1, ..., sqrt f_m)`.
///
/// For a `(Z/2)^r` cover branched over `B` points each branch point has
/// `2^(r-1)` preimages of index 2, so `2g - 2 = -2^(r+1) + B 2^(r-1)`.
pub fn multiquadratic_genus(radicands: &[RatFunc]) -> Result<u64> {
    multiquadratic_genus_report(radicands).map(|r| r.genus)
}

pub fn multiquadratic_genus_report(radicands: &[RatFunc]) -> Result<GenusReport> {
    let table = build_branch_table(radicands)?;
    genus_of_table(&table)
}

pub fn genus_of_table(table: &BranchTable) -> Result<GenusReport> {
    let summary = branch_count(table);
    let genus = genus_from_rank_and_branches(summary.rank, summary.branch_count)?;
    Ok(GenusReport { genus, summary })
}

pub fn genus_from_rank_and_branches(rank: usize, branches: usize) -> Result<u64> {
    if rank == 0 {
        return Ok(0);
    }
    let one = BigInt::from(1);
    let two_g =
        BigInt::from(2) - (&one << (rank + 1)) + BigInt::from(branches) * (&one << (rank - 1));
    assert!(
        two_g >= BigInt::from(0) && two_g.is_even(),
        "Riemann-Hurwitz gave 2g = {two_g} for r = {rank}, B = {branches}"
    );
    (two_g / BigInt::from(2)).to_u64().ok_or(Error::Overflow)
}

/// `floor((d - 1) / 2)` with `d` the degree of the squarefree class of `f`.
pub fn hyperelliptic_genus(f: &RatFunc) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroRadicand { index: 0 });
    }
    let d = squarefree_part(f)?.degree_or_zero() as u64;
    Ok(d.saturating_sub(1) / 2)
}

/// The curve `z^e = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    pub radicand: RatFunc,
    pub order: u32,
}

impl CoverSpec {
    pub fn new(radicand: RatFunc, order: u32) -> Result<Self> {
        if radicand.is_zero() {
            return Err(Error::ZeroRadicand { index: 0 });
        }
        if order < 2 {
            return Err(Error::InvalidRootOrder(order));
        }
        Ok(CoverSpec { radicand, order })
    }
}

/// Genus of the cyclic cover `z^e = f`:
/// `2g - 2 = -2e + sum_P (e - gcd(e, v_P(f)))` over all places, infinity
/// included. Fails when `f` is an `e'`-th power for some `e' > 1`
/// dividing `e`, since the curve is then reducible.
pub fn cyclic_cover_genus(c: &CoverSpec) -> Result<u64> {
    let e = i64::from(c.order);
    let table = build_branch_table(std::slice::from_ref(&c.radicand))?;
    let vals = &table.exponents[0];
    let v_inf = -table.infinity_degree[0];
    let common = vals.iter().fold(e.gcd(&v_inf), |g, v| g.gcd(v));
    if common > 1 {
        return Err(Error::ReduciblePower {
            order: c.order,
            power: common as u32,
        });
    }
    let mut ramification = BigInt::from(e - e.gcd(&v_inf));
    for (b, v) in table.basis.iter().zip(vals) {
        let deg = b.degree_or_zero() as i64;
        ramification += BigInt::from(deg) * BigInt::from(e - e.gcd(v));
    }
    let two_g = ramification - BigInt::from(2 * e) + BigInt::from(2);
    assert!(two_g.is_even(), "Riemann-Hurwitz parity");
    (two_g / BigInt::from(2)).to_u64().ok_or(Error::Overflow)
}

/// The closed form `(e-1)(s-2)/2` for `z^e = x^l_0 prod (x - a_i)^l_i`,
/// `i = 1..m`, with `s = m` when `m = 0 mod e` and `s = m + 1` otherwise.
///
/// Requires `sum l_i = 0 mod e`, every `l_i` nonzero mod `e`, and `m >= 1`.
/// The value is returned exactly as a rational; it is not always an
/// integer, and it does not always agree with [`cyclic_cover_genus`].
pub fn superelliptic_genus_paper(exponents: &[u32], e: u32) -> Result<Rat> {
    if e < 2 {
        return Err(Error::InvalidRootOrder(e));
    }
    if exponents.len() < 2 {
        return Err(Error::NormalFormViolation(
            "need exponents l_0, ..., l_m with m >= 1".into(),
        ));
    }
    if let Some(i) = exponents.iter().position(|l| l % e == 0) {
        return Err(Error::NormalFormViolation(format!(
            "exponent l_{i} = {} is divisible by e = {e}",
            exponents[i]
        )));
    }
    let sum: u64 = exponents.iter().map(|&l| u64::from(l)).sum();
    if !sum.is_multiple_of(u64::from(e)) {
        return Err(Error::NormalFormViolation(format!(
            "exponent sum {sum} is not divisible by e = {e}"
        )));
    }
    let m = (exponents.len() - 1) as i64;
    let e = i64::from(e);
    let s = if m % e == 0 { m } else { m + 1 };
    Ok(Rat::new(BigInt::from((e - 1) * (s - 2)), BigInt::from(2)))
}
