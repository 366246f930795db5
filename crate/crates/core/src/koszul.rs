//! Degree slices of the presentation's two boundary maps and the exactness,
//! counting, and inequality checks they support.
//!
//! In degree n the maps are
//!
//!   (+)_r B_{n-deg r}  --M2-->  (+)_x B_{n-deg x}  --M1-->  B_n
//!
//! where M2 sends b (x) r to sum_x b*(dr/dx) (x) x using right partial
//! derivatives, and M1 sends b (x) x to the class of b*x. The composite is
//! zero, the middle homology vanishes, and M1 hits all of B_n except the
//! scalars in degree 0. Counting dimensions degreewise yields the
//! generator/relation inequality and the Euler identity; both are recomputed
//! here from ranks as consistency checks, so a failure always means an
//! implementation bug rather than a counterexample.

use crate::dims::GradedAlgebra;
use crate::error::Error;
use crate::linalg::{kernel_basis, rank_of, SparseVec};
use crate::poly::FreePoly;

/// One direct summand of a map's source or target, tagged by the generator
/// or relation index that induces it.
#[derive(Clone, Debug)]
pub struct Block {
    /// Index of the generator (for M1's source) or relation (for M2's).
    pub index: usize,
    /// Degree of that generator or relation.
    pub shift: u32,
    /// Dimension of B_{n - shift}; zero when n < shift.
    pub dim: usize,
    /// Offset of this block's coordinates in the stacked space.
    pub offset: usize,
}

/// The degree-n slice: both matrices in standard-monomial coordinates,
/// their ranks, and the block layout.
#[derive(Clone, Debug)]
pub struct KoszulDegree {
    pub degree: u32,
    pub b_n: u64,
    pub gen_blocks: Vec<Block>,
    pub rel_blocks: Vec<Block>,
    /// Columns of M1, indexed by (generator block, standard monomial);
    /// coordinates over the standard monomials of B_n.
    pub m1_cols: Vec<SparseVec>,
    /// Columns of M2, indexed by (relation block, standard monomial);
    /// coordinates over the stacked generator blocks.
    pub m2_cols: Vec<SparseVec>,
    pub rank_m1: usize,
    pub rank_m2: usize,
    /// M1 * M2 == 0, verified entrywise.
    pub composite_is_zero: bool,
}

impl KoszulDegree {
    /// Total dimension of the relation-indexed source.
    pub fn source_dim(&self) -> usize {
        self.m2_cols.len()
    }

    /// Total dimension of the generator-indexed middle term.
    pub fn target_dim(&self) -> usize {
        self.m1_cols.len()
    }

    pub fn nullity_m1(&self) -> usize {
        self.target_dim() - self.rank_m1
    }

    pub fn nullity_m2(&self) -> usize {
        self.source_dim() - self.rank_m2
    }
}

/// Builds the degree-n matrices. Every standard monomial b of a source
/// component is lifted to its word in the free algebra, multiplied, and
/// reduced against the cached relation span of the target degree.
pub fn koszul_degree(alg: &GradedAlgebra, n: u32) -> KoszulDegree {
    let pres = alg.presentation();
    let field = pres.field;
    let basis_n = alg.basis(n);

    let mut gen_blocks = Vec::with_capacity(pres.generators.len());
    let mut m1_cols = Vec::new();
    let mut offset = 0usize;
    for (gx, g) in pres.generators.iter().enumerate() {
        let dim = if n >= g.degree {
            let src = alg.basis(n - g.degree);
            for w in src.standard_monomials() {
                let col = basis_n.reduce_word_to_standard(&w.append_letter(gx as u32, &pres.generators), field);
                m1_cols.push(col);
            }
            src.dim()
        } else {
            0
        };
        gen_blocks.push(Block {
            index: gx,
            shift: g.degree,
            dim,
            offset,
        });
        offset += dim;
    }

    let mut rel_blocks = Vec::with_capacity(pres.relations.len());
    let mut m2_cols = Vec::new();
    let mut offset = 0usize;
    for (ri, rel) in pres.relations.iter().enumerate() {
        let partials: Vec<FreePoly> = (0..pres.generators.len())
            .map(|gx| {
                rel.poly
                    .right_partial(gx as u32, &pres.generators)
                    .expect("relations have zero constant term")
            })
            .collect();
        let dim = if n >= rel.degree {
            let src = alg.basis(n - rel.degree);
            for b in src.standard_monomials() {
                let lift = FreePoly::from_word(field, b.clone());
                let mut entries: Vec<(u32, crate::scalar::Scalar)> = Vec::new();
                for (gx, part) in partials.iter().enumerate() {
                    if part.is_zero() {
                        continue;
                    }
                    let product = lift.mul(part).expect("same field");
                    if product.is_zero() {
                        continue;
                    }
                    let tgt = alg.basis(n - pres.generators[gx].degree);
                    let reduced = tgt.reduce_to_standard(&product);
                    let block_offset = gen_blocks[gx].offset as u32;
                    entries.extend(reduced.iter().map(|(c, v)| (block_offset + c, v.clone())));
                }
                m2_cols.push(SparseVec::from_entries(entries));
            }
            src.dim()
        } else {
            0
        };
        rel_blocks.push(Block {
            index: ri,
            shift: rel.degree,
            dim,
            offset,
        });
        offset += dim;
    }

    let rank_m1 = rank_of(m1_cols.iter().cloned());
    let rank_m2 = rank_of(m2_cols.iter().cloned());

    let composite_is_zero = m2_cols.iter().all(|col| {
        let mut acc = SparseVec::new();
        for (coord, c) in col.iter() {
            acc = acc.axpy_sub(&c.neg(), &m1_cols[*coord as usize]);
        }
        acc.is_zero()
    });

    KoszulDegree {
        degree: n,
        b_n: basis_n.dim() as u64,
        gen_blocks,
        rel_blocks,
        m1_cols,
        m2_cols,
        rank_m1,
        rank_m2,
        composite_is_zero,
    }
}

/// A basis of Ker M2, materialized on demand; coordinates follow the
/// relation-block layout.
pub fn koszul_kernel_basis(alg: &GradedAlgebra, data: &KoszulDegree) -> Vec<SparseVec> {
    kernel_basis(
        alg.presentation().field,
        &data.m2_cols,
        data.target_dim(),
    )
}

/// The generator/relation inequality at one degree:
/// sum_x b_{n-deg x} <= sum_r b_{n-deg r} + b_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsRow {
    pub degree: u32,
    pub lhs: u128,
    pub rhs: u128,
    pub slack: i128,
    pub holds: bool,
}

pub fn check_gs_inequality(alg: &GradedAlgebra, n: u32) -> GsRow {
    let pres = alg.presentation();
    let lhs: u128 = pres
        .generators
        .iter()
        .map(|g| alg.dimension(n as i64 - g.degree as i64) as u128)
        .sum();
    let rel_sum: u128 = pres
        .relations
        .iter()
        .map(|r| alg.dimension(n as i64 - r.degree as i64) as u128)
        .sum();
    let rhs = rel_sum + alg.dimension(n as i64) as u128;
    GsRow {
        degree: n,
        lhs,
        rhs,
        slack: rhs as i128 - lhs as i128,
        holds: lhs <= rhs,
    }
}

/// Exactness of the degree-n slice: the composite vanishes, the middle
/// homology is zero (rank M2 = nullity M1), and M1 reaches everything but
/// the scalars in degree 0.
#[derive(Clone, Copy, Debug)]
pub struct ExactnessReport {
    pub degree: u32,
    pub composite_is_zero: bool,
    pub rank_m2: usize,
    pub nullity_m1: usize,
    pub rank_m1: usize,
    pub expected_rank_m1: u64,
    pub holds: bool,
}

pub fn check_exactness(data: &KoszulDegree) -> ExactnessReport {
    let expected_rank_m1 = data.b_n - u64::from(data.degree == 0);
    let holds = data.composite_is_zero
        && data.rank_m2 == data.nullity_m1()
        && data.rank_m1 as u64 == expected_rank_m1;
    ExactnessReport {
        degree: data.degree,
        composite_is_zero: data.composite_is_zero,
        rank_m2: data.rank_m2,
        nullity_m1: data.nullity_m1(),
        rank_m1: data.rank_m1,
        expected_rank_m1,
        holds,
    }
}

impl ExactnessReport {
    pub fn ensure(&self) -> Result<(), Error> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "exactness failed in degree {}: composite_zero={} rank(M2)={} nullity(M1)={} rank(M1)={} expected {}",
                self.degree,
                self.composite_is_zero,
                self.rank_m2,
                self.nullity_m1,
                self.rank_m1,
                self.expected_rank_m1
            )))
        }
    }
}

/// The alternating count b_n - sum_x b_{n-deg x} + sum_r b_{n-deg r}
/// - nullity(M2), which must equal 1 in degree 0 and 0 elsewhere.
#[derive(Clone, Copy, Debug)]
pub struct EulerReport {
    pub degree: u32,
    pub value: i128,
    pub expected: i128,
    pub holds: bool,
}

pub fn euler_identity(alg: &GradedAlgebra, data: &KoszulDegree) -> EulerReport {
    let pres = alg.presentation();
    let n = data.degree;
    let gen_sum: i128 = pres
        .generators
        .iter()
        .map(|g| alg.dimension(n as i64 - g.degree as i64) as i128)
        .sum();
    let rel_sum: i128 = pres
        .relations
        .iter()
        .map(|r| alg.dimension(n as i64 - r.degree as i64) as i128)
        .sum();
    let value = data.b_n as i128 - gen_sum + rel_sum - data.nullity_m2() as i128;
    let expected = i128::from(n == 0);
    EulerReport {
        degree: n,
        value,
        expected,
        holds: value == expected,
    }
}

impl EulerReport {
    pub fn ensure(&self) -> Result<(), Error> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "Euler identity failed in degree {}: value {} expected {}",
                self.degree, self.value, self.expected
            )))
        }
    }
}

/// Slices for degrees 0..=max, fanned out per degree. Dimensions are
/// populated first so the per-degree work shares the caches.
pub fn koszul_up_to(alg: &GradedAlgebra, max: u32) -> Vec<KoszulDegree> {
    alg.dims_up_to(max);
    crate::par::map_range(max as usize + 1, |n| koszul_degree(alg, n as u32))
}
