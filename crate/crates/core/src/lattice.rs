//! Square-class data of a family of radicands.
//!
//! The classes of `f_1, ..., f_m` modulo squares (over an algebraically
//! closed constant field) are vectors over GF(2): one coordinate per element
//! of a coprime basis of the numerators and denominators, plus one for the
//! point at infinity. Every complex root of a basis element carries the same
//! valuation vector, so branch points can be counted by degree without
//! factoring.

use serde::Serialize;

use crate::arith::factor::valuation;
use crate::arith::{coprime_basis, RatFunc, UPoly};
use crate::error::{Error, Result};

/// A row of bits over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        if bit {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Coprime basis, exponent matrix and GF(2) parity matrix of a family.
#[derive(Clone, Debug)]
pub struct BranchTable {
    pub radicands: Vec<RatFunc>,
    /// Monic, squarefree, pairwise coprime; sorted by degree then
    /// coefficients from the leading term down.
    pub basis: Vec<UPoly>,
    /// `exponents[i][j]` is the valuation of radicand `i` along `basis[j]`.
    pub exponents: Vec<Vec<i64>>,
    /// `deg num - deg den` of each radicand.
    pub infinity_degree: Vec<i64>,
    /// `m` rows of `k + 1` bits; the last column is the infinity place.
    pub parity: Vec<BitRow>,
}

impl BranchTable {
    /// Number of basis elements (finite parity columns).
    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn infinity_column(&self) -> usize {
        self.basis.len()
    }

    /// Parity matrix as 0/1 rows, for display and serialization.
    pub fn parity_matrix(&self) -> Vec<Vec<u8>> {
        self.parity
            .iter()
            .map(|r| (0..r.len()).map(|j| r.get(j) as u8).collect())
            .collect()
    }

    /// XOR of the parity rows selected by `subset`.
    pub fn combine(&self, subset: &[usize]) -> BitRow {
        let mut acc = BitRow::zeros(self.basis.len() + 1);
        for &i in subset {
            acc.xor_assign(&self.parity[i]);
        }
        acc
    }

    /// Degree of the monic squarefree polynomial representing a class
    /// vector (the number of finite branch points of its square root).
    pub fn class_degree(&self, row: &BitRow) -> usize {
        row.ones()
            .filter(|&j| j < self.basis.len())
            .map(|j| self.basis[j].degree_or_zero())
            .sum()
    }

    /// Product of the basis elements selected by a class vector.
    pub fn class_poly(&self, row: &BitRow) -> UPoly {
        row.ones()
            .filter(|&j| j < self.basis.len())
            .fold(UPoly::one(), |acc, j| &acc * &self.basis[j])
    }
}

pub fn build_branch_table(radicands: &[RatFunc]) -> Result<BranchTable> {
    if radicands.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(index) = radicands.iter().position(RatFunc::is_zero) {
        return Err(Error::ZeroRadicand { index });
    }
    let parts: Vec<UPoly> = radicands
        .iter()
        .flat_map(|f| [f.num().clone(), f.den().clone()])
        .filter(|p| !p.is_constant())
        .collect();
    let basis = coprime_basis(&parts)?.basis;
    let k = basis.len();
    let mut exponents = Vec::with_capacity(radicands.len());
    let mut infinity_degree = Vec::with_capacity(radicands.len());
    let mut parity = Vec::with_capacity(radicands.len());
    for f in radicands {
        let row: Vec<i64> = basis.iter().map(|b| valuation(f, b)).collect();
        let inf = f.degree_difference();
        let mut bits = BitRow::zeros(k + 1);
        for (j, e) in row.iter().enumerate() {
            bits.set(j, e.rem_euclid(2) == 1);
        }
        bits.set(k, inf.rem_euclid(2) == 1);
        exponents.push(row);
        infinity_degree.push(inf);
        parity.push(bits);
    }
    Ok(BranchTable {
        radicands: radicands.to_vec(),
        basis,
        exponents,
        infinity_degree,
        parity,
    })
}

/// Row-reduced echelon form of the parity rows, processed in input order.
/// Each returned entry is `(reduced row, combination of inputs)`; the
/// second component lists inputs whose rows were XORed to produce it.
struct Echelon {
    rows: Vec<(BitRow, BitRow)>,
    /// First input whose row reduced to zero, with the combination proving it.
    first_dependency: Option<BitRow>,
}

fn echelon(t: &BranchTable) -> Echelon {
    let m = t.parity.len();
    let mut rows: Vec<(BitRow, BitRow)> = Vec::new();
    let mut first_dependency = None;
    for (i, r) in t.parity.iter().enumerate() {
        let mut v = r.clone();
        let mut comb = BitRow::zeros(m);
        comb.set(i, true);
        for (w, wc) in &rows {
            let p = w.first_one().expect("stored rows are nonzero");
            if v.get(p) {
                v.xor_assign(w);
                comb.xor_assign(wc);
            }
        }
        let Some(p) = v.first_one() else {
            first_dependency.get_or_insert(comb);
            continue;
        };
        for (w, wc) in rows.iter_mut() {
            if w.get(p) {
                w.xor_assign(&v);
                wc.xor_assign(&comb);
            }
        }
        rows.push((v, comb));
    }
    Echelon {
        rows,
        first_dependency,
    }
}

/// Dimension of the subgroup generated by the square classes.
pub fn lattice_rank(t: &BranchTable) -> usize {
    echelon(t).rows.len()
}

/// Indices of a nonempty subset of radicands whose product is a square
/// (over the complex numbers), if the classes are dependent.
pub fn dependency(t: &BranchTable) -> Option<Vec<usize>> {
    echelon(t).first_dependency.map(|c| c.ones().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSummary {
    pub rank: usize,
    pub branch_count: usize,
    pub ramified_basis_indices: Vec<usize>,
    pub infinity_ramified: bool,
}

/// Branch points of the compositum cover: the complex roots of every basis
/// element whose parity column is nonzero, plus infinity when its column
/// is nonzero.
pub fn branch_count(t: &BranchTable) -> LatticeSummary {
    let column_nonzero = |j: usize| t.parity.iter().any(|r| r.get(j));
    let ramified_basis_indices: Vec<usize> =
        (0..t.basis.len()).filter(|&j| column_nonzero(j)).collect();
    let infinity_ramified = column_nonzero(t.infinity_column());
    let branch_count = ramified_basis_indices
        .iter()
        .map(|&j| t.basis[j].degree_or_zero())
        .sum::<usize>()
        + infinity_ramified as usize;
    let rank = lattice_rank(t);
    assert!(
        rank != 1 || branch_count.is_multiple_of(2),
        "a double cover of the line has an even number of branch points"
    );
    LatticeSummary {
        rank,
        branch_count,
        ramified_basis_indices,
        infinity_ramified,
    }
}

/// Polynomials whose square classes form a basis of the lattice, one per
/// row of the reduced echelon form (monic, constants dropped).
pub fn reduced_generators(t: &BranchTable) -> Vec<UPoly> {
    echelon(t)
        .rows
        .iter()
        .map(|(row, _)| t.class_poly(row))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_i64s(c))
    }

    fn example_4_6() -> Vec<RatFunc> {
        vec![rf(&[0, 1]), rf(&[1, 4]), rf(&[0, -4, 1])]
    }

    fn jacobian_set(lambda: i64) -> Vec<RatFunc> {
        vec![
            rf(&[0, -1, 1]),
            rf(&[0, -lambda, 1]),
            rf(&[lambda, -1 - lambda, 1]),
        ]
    }

    #[test]
    fn bit_rows() {
        let mut r = BitRow::zeros(130);
        assert!(r.is_zero());
        r.set(129, true);
        r.set(3, true);
        assert_eq!(r.first_one(), Some(3));
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![3, 129]);
        let s = r.clone();
        r.xor_assign(&s);
        assert!(r.is_zero());
    }

    #[test]
    fn example_4_6_table() {
        let t = build_branch_table(&example_4_6()).unwrap();
        // basis sorted: x - 4, x, x + 1/4
        assert_eq!(
            t.basis,
            vec![
                UPoly::from_i64s(&[-4, 1]),
                UPoly::from_i64s(&[0, 1]),
                UPoly::from_coeffs(vec![rat(1, 4), int(1)]),
            ]
        );
        assert_eq!(
            t.parity_matrix(),
            vec![vec![0, 1, 0, 1], vec![0, 0, 1, 1], vec![1, 1, 0, 0]]
        );
        assert_eq!(lattice_rank(&t), 3);
        let s = branch_count(&t);
        assert_eq!(s.branch_count, 4);
        assert!(s.infinity_ramified);
    }

    #[test]
    fn jacobian_table() {
        let t = build_branch_table(&jacobian_set(2)).unwrap();
        assert_eq!(
            t.basis,
            vec![
                UPoly::from_i64s(&[-2, 1]),
                UPoly::from_i64s(&[-1, 1]),
                UPoly::from_i64s(&[0, 1])
            ]
        );
        assert_eq!(
            t.parity_matrix(),
            vec![vec![0, 1, 1, 0], vec![1, 0, 1, 0], vec![1, 1, 0, 0]]
        );
        assert_eq!(lattice_rank(&t), 2);
        let s = branch_count(&t);
        assert_eq!(s.branch_count, 3);
        assert!(!s.infinity_ramified);
        assert_eq!(dependency(&t), Some(vec![0, 1, 2]));
    }

    #[test]
    fn constants_are_trivial() {
        let t = build_branch_table(&[RatFunc::constant(int(9))]).unwrap();
        assert!(t.basis.is_empty());
        assert_eq!(t.parity_matrix(), vec![vec![0]]);
        assert_eq!(lattice_rank(&t), 0);
        assert_eq!(branch_count(&t).branch_count, 0);
        assert!(reduced_generators(&t).is_empty());
    }

    #[test]
    fn single_linear() {
        let t = build_branch_table(&[rf(&[-1, 1])]).unwrap();
        let s = branch_count(&t);
        assert_eq!((s.rank, s.branch_count), (1, 2));
    }

    #[test]
    fn errors() {
        assert!(matches!(build_branch_table(&[]), Err(Error::EmptyFamily)));
        assert!(matches!(
            build_branch_table(&[rf(&[1]), RatFunc::zero()]),
            Err(Error::ZeroRadicand { index: 1 })
        ));
    }

    #[test]
    fn reduced_generator_examples() {
        let t = build_branch_table(&example_4_6()).unwrap();
        assert_eq!(
            reduced_generators(&t),
            vec![
                UPoly::from_i64s(&[0, 1]),
                UPoly::from_coeffs(vec![rat(1, 4), int(1)]),
                UPoly::from_i64s(&[-4, 1]),
            ]
        );

        let t = build_branch_table(&[rf(&[0, -1, 1])]).unwrap();
        assert_eq!(reduced_generators(&t), vec![UPoly::from_i64s(&[0, -1, 1])]);

        // x and x (x-1)^2 share a class
        let t = build_branch_table(&[rf(&[0, 1]), rf(&[0, 1, -2, 1])]).unwrap();
        assert_eq!(reduced_generators(&t), vec![UPoly::from_i64s(&[0, 1])]);
        assert_eq!(dependency(&t), Some(vec![0, 1]));

        let t = build_branch_table(&jacobian_set(2)).unwrap();
        assert_eq!(
            reduced_generators(&t),
            vec![UPoly::from_i64s(&[0, -1, 1]), UPoly::from_i64s(&[0, -2, 1])]
        );
    }

    #[test]
    fn rational_radicands() {
        // (x - 1)/x^3 has odd valuations at 1 and 0, even at infinity
        let f = RatFunc::new(UPoly::from_i64s(&[-1, 1]), UPoly::from_i64s(&[0, 0, 0, 1])).unwrap();
        let t = build_branch_table(&[f]).unwrap();
        assert_eq!(t.exponents, vec![vec![1, -3]]);
        assert_eq!(t.infinity_degree, vec![-2]);
        assert_eq!(branch_count(&t).branch_count, 2);
    }
}
