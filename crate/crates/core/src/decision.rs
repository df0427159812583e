//! Rationalizability verdicts, the subset-product criterion, and a seeded
//! search for families where the two disagree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{RatFunc, UPoly};
use crate::error::{Error, Result};
use crate::genus::{cyclic_cover_genus, genus_of_table, hyperelliptic_genus, CoverSpec};
use crate::lattice::{build_branch_table, BranchTable};
use crate::rationalize::{greedy_rationalize, Witness};

/// Subset enumeration visits `2^m - 1` products.
pub const MAX_SUBSET_FAMILY: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Rationalizable,
    NotRationalizable,
    Unknown,
}

impl Status {
    fn from_genus(g: u64) -> Self {
        if g == 0 {
            Status::Rationalizable
        } else {
            Status::NotRationalizable
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub genus: Option<u64>,
    pub rank: Option<usize>,
    pub branch_count: Option<usize>,
    pub failing_subset: Option<Vec<usize>>,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_table(t: &BranchTable) -> Result<Self> {
        let rep = genus_of_table(t)?;
        Ok(Verdict {
            status: Status::from_genus(rep.genus),
            genus: Some(rep.genus),
            rank: Some(rep.summary.rank),
            branch_count: Some(rep.summary.branch_count),
            failing_subset: None,
            witness: None,
        })
    }
}

/// `sqrt f` is rationalizable iff `z^2 = f` has genus 0, that is, the
/// square class of `f` has degree at most 2.
pub fn decide_single_sqrt(f: &RatFunc) -> Result<Verdict> {
    let v = Verdict::from_table(&build_branch_table(std::slice::from_ref(f))?)?;
    debug_assert_eq!(v.genus, Some(hyperelliptic_genus(f)?));
    Ok(v)
}

/// `f^(1/e)` is rationalizable iff `z^e = f` has genus 0.
pub fn decide_single_root(f: &RatFunc, e: u32) -> Result<Verdict> {
    let g = cyclic_cover_genus(&CoverSpec::new(f.clone(), e)?)?;
    Ok(Verdict {
        status: Status::from_genus(g),
        genus: Some(g),
        rank: None,
        branch_count: None,
        failing_subset: None,
        witness: None,
    })
}

/// A family of square roots is rationalizable iff the compositum curve has
/// genus 0. On a positive verdict a witness is attached when the greedy
/// construction finds one.
pub fn decide_set(radicands: &[RatFunc]) -> Result<Verdict> {
    let mut v = decide_set_genus(radicands)?;
    if v.status == Status::Rationalizable {
        v.witness = greedy_rationalize(radicands)?;
    }
    Ok(v)
}

/// [`decide_set`] without the witness search.
pub fn decide_set_genus(radicands: &[RatFunc]) -> Result<Verdict> {
    Verdict::from_table(&build_branch_table(radicands)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetCriterion {
    pub pass: bool,
    /// First subset, by size then lexicographically, whose product has a
    /// square class of degree above 2.
    pub failing_subset: Option<Vec<usize>>,
}

/// Checks that every nonempty subset product has square-class degree at
/// most 2.
pub fn subset_criterion(radicands: &[RatFunc]) -> Result<SubsetCriterion> {
    if radicands.len() > MAX_SUBSET_FAMILY {
        return Err(Error::FamilyTooLarge {
            size: radicands.len(),
            max: MAX_SUBSET_FAMILY,
        });
    }
    let t = build_branch_table(radicands)?;
    Ok(subset_criterion_of_table(&t))
}

fn subset_criterion_of_table(t: &BranchTable) -> SubsetCriterion {
    let m = t.parity.len();
    for k in 1..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if t.class_degree(&t.combine(&idx)) > 2 {
                return SubsetCriterion {
                    pass: false,
                    failing_subset: Some(idx),
                };
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    SubsetCriterion {
        pass: true,
        failing_subset: None,
    }
}

/// Advances to the next `k`-subset of `0..m` in lexicographic order.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Bounds for random families in [`conjecture_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanParams {
    pub max_m: usize,
    pub max_factors: usize,
    pub coeff_bound: i64,
}

impl Default for ScanParams {
    fn default() -> Self {
        ScanParams {
            max_m: 3,
            max_factors: 3,
            coeff_bound: 5,
        }
    }
}

impl ScanParams {
    fn validate(&self) -> Result<()> {
        if self.max_m < 2 || self.max_m > MAX_SUBSET_FAMILY {
            return Err(Error::InvalidParams(format!(
                "max_m must lie in 2..={MAX_SUBSET_FAMILY}, got {}",
                self.max_m
            )));
        }
        if self.max_factors < 1 {
            return Err(Error::InvalidParams(
                "max_factors must be at least 1".into(),
            ));
        }
        if self.coeff_bound < 0 {
            return Err(Error::InvalidParams(
                "coeff_bound must be nonnegative".into(),
            ));
        }
        Ok(())
    }
}

/// A family on which the subset criterion and the genus disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub trial: usize,
    pub radicands: Vec<String>,
    pub subset_pass: bool,
    pub failing_subset: Option<Vec<usize>>,
    pub genus: u64,
    pub genus_rationalizable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub seed: u64,
    pub trials: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    /// Disagreements where the family is rationalizable yet some subset
    /// product fails; these contradict a proven implication.
    pub necessity_violations: usize,
    pub params: ScanParams,
}

/// Draws a random family: `m` in `2..=max_m`, each radicand a product of
/// `1..=max_factors` monic linear or quadratic factors with coefficients in
/// `[-coeff_bound, coeff_bound]`.
pub fn random_family(rng: &mut ChaCha8Rng, p: &ScanParams) -> Vec<RatFunc> {
    let m = rng.gen_range(2..=p.max_m);
    (0..m)
        .map(|_| {
            let factors = rng.gen_range(1..=p.max_factors);
            let f = (0..factors).fold(UPoly::one(), |acc, _| {
                let deg = rng.gen_range(1..=2usize);
                let mut c: Vec<i64> = (0..deg)
                    .map(|_| rng.gen_range(-p.coeff_bound..=p.coeff_bound))
                    .collect();
                c.push(1);
                &acc * &UPoly::from_i64s(&c)
            });
            RatFunc::from_poly(f)
        })
        .collect()
}

/// Compares the subset criterion against the genus verdict on `trials`
/// random families. Deterministic for a fixed seed: trial `i` draws from
/// its own stream of a generator seeded by `seed`.
pub fn conjecture_scan(seed: u64, trials: usize, params: ScanParams) -> Result<ScanReport> {
    conjecture_scan_with(seed, trials, params, random_family)
}

/// [`conjecture_scan`] with a custom family generator.
pub fn conjecture_scan_with<G>(
    seed: u64,
    trials: usize,
    params: ScanParams,
    generate: G,
) -> Result<ScanReport>
where
    G: Fn(&mut ChaCha8Rng, &ScanParams) -> Vec<RatFunc> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    params.validate()?;
    let outcomes: Vec<Option<Disagreement>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let family = generate(&mut rng, &params);
            run_trial(i, &family)
        })
        .collect::<Result<_>>()?;
    let disagreements: Vec<Disagreement> = outcomes.into_iter().flatten().collect();
    let necessity_violations = disagreements
        .iter()
        .filter(|d| d.genus_rationalizable && !d.subset_pass)
        .count();
    Ok(ScanReport {
        seed,
        trials,
        agreements: trials - disagreements.len(),
        disagreements,
        necessity_violations,
        params,
    })
}

fn run_trial(trial: usize, family: &[RatFunc]) -> Result<Option<Disagreement>> {
    if family.len() > MAX_SUBSET_FAMILY {
        return Err(Error::FamilyTooLarge {
            size: family.len(),
            max: MAX_SUBSET_FAMILY,
        });
    }
    let t = build_branch_table(family)?;
    let subset = subset_criterion_of_table(&t);
    let genus = genus_of_table(&t)?.genus;
    let genus_rationalizable = genus == 0;
    if subset.pass == genus_rationalizable {
        return Ok(None);
    }
    Ok(Some(Disagreement {
        trial,
        radicands: family.iter().map(|f| f.to_expr_string("x")).collect(),
        subset_pass: subset.pass,
        failing_subset: subset.failing_subset,
        genus,
        genus_rationalizable,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_i64s(c))
    }

    #[test]
    fn single_roots() {
        let v = decide_single_sqrt(&rf(&[-1, 1])).unwrap();
        assert_eq!((v.status, v.genus), (Status::Rationalizable, Some(0)));
        let v = decide_single_sqrt(&rf(&[-6, 11, -6, 1])).unwrap();
        assert_eq!((v.status, v.genus), (Status::NotRationalizable, Some(1)));
        let v = decide_single_root(&rf(&[0, -1, 1]), 2).unwrap();
        assert_eq!(v.status, Status::Rationalizable);
        let v = decide_single_root(&rf(&[0, 2, -3, 1]), 3).unwrap();
        assert_eq!((v.status, v.genus), (Status::NotRationalizable, Some(1)));
        let v = decide_single_root(&rf(&[-5, 1]), 7).unwrap();
        assert_eq!(v.status, Status::Rationalizable);
    }

    #[test]
    fn families() {
        let v = decide_set(&[rf(&[-1, 1]), rf(&[-2, 1])]).unwrap();
        assert_eq!(v.status, Status::Rationalizable);
        assert!(v.witness.is_some());
        let v = decide_set(&[rf(&[0, 1]), rf(&[1, 4]), rf(&[0, -4, 1])]).unwrap();
        assert_eq!((v.status, v.genus), (Status::NotRationalizable, Some(1)));
        assert!(v.witness.is_none());
        let v = decide_set(&[rf(&[0, -1, 1]), rf(&[0, -2, 1]), rf(&[2, -3, 1])]).unwrap();
        assert_eq!(
            (v.status, v.genus, v.rank, v.branch_count),
            (Status::Rationalizable, Some(0), Some(2), Some(3))
        );
        assert_eq!(decide_set(&[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn subsets() {
        let s = subset_criterion(&[rf(&[0, 1]), rf(&[1, 4]), rf(&[0, -4, 1])]).unwrap();
        assert_eq!(s.failing_subset, Some(vec![1, 2]));
        let s = subset_criterion(&[rf(&[0, -1, 1]), rf(&[0, -2, 1]), rf(&[2, -3, 1])]).unwrap();
        assert!(s.pass);
        assert!(subset_criterion(&[rf(&[-1, 1])]).unwrap().pass);
        let big = vec![rf(&[0, 1]); 21];
        assert_eq!(
            subset_criterion(&big),
            Err(Error::FamilyTooLarge { size: 21, max: 20 })
        );
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn scan_is_deterministic() {
        let a = conjecture_scan(7, 20, ScanParams::default()).unwrap();
        let b = conjecture_scan(7, 20, ScanParams::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.agreements + a.disagreements.len(), 20);
        assert!(matches!(
            conjecture_scan(7, 0, ScanParams::default()),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn forced_scans() {
        let r = conjecture_scan_with(0, 1, ScanParams::default(), |_, _| {
            vec![rf(&[-1, 1]), rf(&[-2, 1])]
        })
        .unwrap();
        assert_eq!(r.agreements, 1);
        let r = conjecture_scan_with(0, 1, ScanParams::default(), |_, _| {
            vec![rf(&[0, 1]), rf(&[-1, 1]), rf(&[-2, 1])]
        })
        .unwrap();
        assert_eq!(r.agreements, 1);
    }
}
