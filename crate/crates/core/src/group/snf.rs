//! Smith normal form over the integers, abelianization invariants, and the
//! relation-count threshold report for group presentations.

use crate::scalar::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::presentation::GroupPresentation;

/// Diagonal of the Smith normal form: nonnegative entries forming a
/// divisibility chain, zeros trailing. Length is min(rows, cols).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
}

impl SmithNormalForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .cloned()
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form of an integer matrix by exact elimination
/// with pivots chosen of minimal absolute value; `ncols` disambiguates the
/// width of a matrix with no rows.
pub fn smith_normal_form(mat: &[Vec<BigInt>], ncols: usize) -> SmithNormalForm {
    let rows = mat.len();
    let cols = ncols;
    debug_assert!(mat.iter().all(|r| r.len() == cols));
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let size = rows.min(cols);

    for k in 0..size {
        loop {
            // minimal-|.|\ nonzero pivot in the trailing submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if a[pi][pj].abs() <= a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(a, rows, cols, size);
            };
            a.swap(k, pi);
            for row in &mut a {
                row.swap(k, pj);
            }
            if a[k][k].is_negative() {
                for j in k..cols {
                    a[k][j] = -&a[k][j];
                }
            }

            // clear column and row k with floor division; a surviving
            // remainder is strictly smaller than the pivot, so the loop
            // re-picks and terminates
            let mut clean = true;
            for i in k + 1..rows {
                if !a[i][k].is_zero() {
                    let q = a[i][k].div_floor(&a[k][k]);
                    for j in k..cols {
                        let s = &q * &a[k][j];
                        a[i][j] = &a[i][j] - s;
                    }
                    if !a[i][k].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !a[k][j].is_zero() {
                    let q = a[k][j].div_floor(&a[k][k]);
                    for i in k..rows {
                        let s = &q * &a[i][k];
                        a[i][j] = &a[i][j] - s;
                    }
                    if !a[k][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }

            // enforce the divisibility chain: fold a non-multiple into row k
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        for jj in k..cols {
                            let add = a[i][jj].clone();
                            a[k][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
    finish(a, rows, cols, size)
}

fn finish(a: Vec<Vec<BigInt>>, rows: usize, cols: usize, size: usize) -> SmithNormalForm {
    let diagonal = (0..size).map(|k| a[k][k].abs()).collect();
    SmithNormalForm {
        rows,
        cols,
        diagonal,
    }
}

/// Structure of the presented group's abelianization, from the Smith normal
/// form of the exponent-sum matrix.
#[derive(Clone, Debug)]
pub struct AbelianizationReport {
    pub snf: SmithNormalForm,
    /// Nonzero invariant factors d_1 | d_2 | ...
    pub invariant_factors: Vec<BigInt>,
    /// Minimal number of generators of the abelianization:
    /// |X| minus the number of unit factors.
    pub d_ab: usize,
    /// True iff the abelianization is finite (full rank, no free part).
    pub is_finite: bool,
}

pub fn abelianization_rank(pres: &GroupPresentation) -> AbelianizationReport {
    let gens = pres.generators.len();
    let mat: Vec<Vec<BigInt>> = pres
        .exponent_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let snf = smith_normal_form(&mat, gens);
    let invariant_factors = snf.invariant_factors();
    let units = invariant_factors.iter().filter(|d| d.is_one()).count();
    let d_ab = gens - units;
    let is_finite = invariant_factors.len() == gens;
    AbelianizationReport {
        snf,
        invariant_factors,
        d_ab,
        is_finite,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PGroupVerdict {
    /// |R| > |X|^2 / 4: the count is consistent with a finite nontrivial
    /// group on a minimal generating set.
    AboveThreshold,
    /// |X| = d(G^ab) and |R| <= |X|^2 / 4: the presented group is trivial
    /// or infinite.
    TrivialOrInfinite,
    /// |X| > d(G^ab): the generating set is not minimal, so the threshold
    /// says nothing.
    NotMinimal,
}

/// The relation-count threshold for presentations on a minimal generating
/// set, decided by pure arithmetic on |X|, |R|, and d(G^ab).
#[derive(Clone, Debug)]
pub struct PGroupReport {
    pub gen_count: usize,
    pub rel_count: usize,
    pub d_ab: usize,
    /// |X|^2 / 4 as an exact rational.
    pub threshold: Rat,
    pub verdict: PGroupVerdict,
}

pub fn gs_pgroup_report(pres: &GroupPresentation) -> PGroupReport {
    let ab = abelianization_rank(pres);
    let gen_count = pres.generators.len();
    let rel_count = pres.relators.len();
    let threshold = Rat::new(
        BigInt::from((gen_count * gen_count) as i64),
        BigInt::from(4),
    );
    let verdict = if gen_count != ab.d_ab {
        PGroupVerdict::NotMinimal
    } else if Rat::from_integer(BigInt::from(rel_count as i64)) > threshold {
        PGroupVerdict::AboveThreshold
    } else {
        PGroupVerdict::TrivialOrInfinite
    };
    PGroupReport {
        gen_count,
        rel_count,
        d_ab: ab.d_ab,
        threshold,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn diag(snf: &SmithNormalForm) -> Vec<i64> {
        snf.diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn klein_exponent_matrix() {
        let m = mat(&[&[2, 0], &[0, 2], &[2, 2]]);
        let snf = smith_normal_form(&m, 2);
        assert_eq!(diag(&snf), vec![2, 2]);
    }

    #[test]
    fn divisibility_chain_enforced() {
        let m = mat(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&m, 2);
        assert_eq!(diag(&snf), vec![1, 6]);

        // gcds of k-minors: 2, 4, 240, so the factors are 2, 2, 60
        let m = mat(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        let snf = smith_normal_form(&m, 3);
        assert_eq!(diag(&snf), vec![2, 2, 60]);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let snf = smith_normal_form(&mat(&[&[0, 0]]), 2);
        assert_eq!(diag(&snf), vec![0]);
        assert_eq!(snf.rank(), 0);

        let snf = smith_normal_form(&[], 3);
        assert!(snf.diagonal.is_empty());
    }

    #[test]
    fn known_4x4_form() {
        let m = mat(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let snf = smith_normal_form(&m, 4);
        assert_eq!(diag(&snf), vec![1, 3, 21, 0]);
    }

    #[test]
    fn abelianization_of_free_rank_one() {
        let p = GroupPresentation::parse("gen x").unwrap();
        let ab = abelianization_rank(&p);
        assert!(ab.invariant_factors.is_empty());
        assert_eq!(ab.d_ab, 1);
        assert!(!ab.is_finite);
    }

    #[test]
    fn abelianization_of_klein_presentation() {
        let p = GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel y^2\nrel x*y*x*y").unwrap();
        let ab = abelianization_rank(&p);
        assert_eq!(
            ab.invariant_factors,
            vec![BigInt::from(2), BigInt::from(2)]
        );
        assert_eq!(ab.d_ab, 2);
        assert!(ab.is_finite);
    }

    #[test]
    fn abelianization_of_the_free_abelian_presentation() {
        let p = GroupPresentation::parse("gen x\ngen y\nrel x*y*x^-1*y^-1").unwrap();
        let ab = abelianization_rank(&p);
        // the commutator has zero exponent sums
        assert!(ab.invariant_factors.is_empty());
        assert_eq!(ab.d_ab, 2);
        assert!(!ab.is_finite);
    }

    #[test]
    fn threshold_reports() {
        let klein =
            GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel y^2\nrel x*y*x*y").unwrap();
        let rep = gs_pgroup_report(&klein);
        assert_eq!(rep.verdict, PGroupVerdict::AboveThreshold);
        assert_eq!(rep.threshold, Rat::from_integer(BigInt::from(1)));

        let z2 = GroupPresentation::parse("gen x\ngen y\nrel x*y*x^-1*y^-1").unwrap();
        assert_eq!(gs_pgroup_report(&z2).verdict, PGroupVerdict::TrivialOrInfinite);

        let z = GroupPresentation::parse("gen x").unwrap();
        assert_eq!(gs_pgroup_report(&z).verdict, PGroupVerdict::TrivialOrInfinite);

        let not_minimal = GroupPresentation::parse("gen x\ngen y\nrel y").unwrap();
        assert_eq!(gs_pgroup_report(&not_minimal).verdict, PGroupVerdict::NotMinimal);
    }
}
