//! Graded component dimensions by degreewise exact linear algebra.
//!
//! For each degree n the words of that degree form a basis of the free
//! algebra's component; the relation ideal meets the component in the span
//! of the products u*r*v with matching degrees. The component dimension of
//! the quotient is the monomial count minus the rank of that span.
//!
//! Columns are eliminated in descending deglex order, so pivots land on the
//! deglex-greatest monomials and the surviving standard monomials are the
//! least representatives (for commutation relations these are the sorted
//! words, the usual commutative normal forms).

use crate::linalg::{RowSpace, SparseVec};
use crate::poly::FreePoly;
use crate::presentation::Presentation;
use crate::scalar::rat_int;
use crate::series::TruncatedSeries;
use crate::word::{Generator, Word};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// All words of total degree `n`, in deglex order, no duplicates.
/// Negative `n` yields the empty list; `n = 0` yields the empty word.
pub fn monomials_of_degree(gens: &[Generator], n: i64) -> Vec<Word> {
    if n < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(gens: &[Generator], remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_letters(current.clone(), gens));
            return;
        }
        for (i, g) in gens.iter().enumerate() {
            if g.degree <= remaining {
                current.push(i as u32);
                rec(gens, remaining - g.degree, current, out);
                current.pop();
            }
        }
    }
    rec(gens, n as u32, &mut current, &mut out);
    out
}

/// The degree-n slice of a presentation: the monomial basis, the reduced
/// row echelon form of the relation span, and the standard monomials that
/// descend to a basis of the quotient component.
#[derive(Debug)]
pub struct DegreeBasis {
    pub degree: u32,
    /// Ascending deglex.
    pub monomials: Vec<Word>,
    mono_index: HashMap<Word, usize>,
    /// Coordinates are reversed (descending deglex) so pivots are greatest.
    space: RowSpace,
    /// Indices into `monomials` of the non-pivot columns, ascending.
    pub standard: Vec<usize>,
    standard_pos: HashMap<usize, usize>,
}

impl DegreeBasis {
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    /// Dimension of the quotient component in this degree.
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn standard_monomials(&self) -> impl Iterator<Item = &Word> {
        self.standard.iter().map(|&i| &self.monomials[i])
    }

    fn rev(&self, idx: usize) -> u32 {
        (self.monomials.len() - 1 - idx) as u32
    }

    fn unrev(&self, coord: u32) -> usize {
        self.monomials.len() - 1 - coord as usize
    }

    /// Image of a homogeneous element in quotient coordinates: entries over
    /// positions in `standard`.
    pub fn reduce_to_standard(&self, f: &FreePoly) -> SparseVec {
        let entries = f.terms().map(|(w, c)| {
            let idx = *self
                .mono_index
                .get(w)
                .unwrap_or_else(|| panic!("word of degree {} reduced in degree {}", w.degree(), self.degree));
            (self.rev(idx), c.clone())
        });
        let residue = self.space.reduce(SparseVec::from_entries(entries));
        SparseVec::from_entries(residue.iter().map(|(coord, c)| {
            let idx = self.unrev(*coord);
            (self.standard_pos[&idx] as u32, c.clone())
        }))
    }

    /// Quotient coordinates of a single word of this degree.
    pub fn reduce_word_to_standard(&self, w: &Word, field: crate::scalar::Field) -> SparseVec {
        self.reduce_to_standard(&FreePoly::from_word(field, w.clone()))
    }
}

/// A table of component dimensions b_0..b_N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub max_degree: u32,
    pub dims: Vec<u64>,
}

impl DimensionTable {
    pub fn dim(&self, n: i64) -> u64 {
        if n < 0 || n as usize >= self.dims.len() {
            0
        } else {
            self.dims[n as usize]
        }
    }
}

/// A presentation together with per-degree caches of monomial bases and
/// relation spans. Dimensions for distinct degrees are independent and may
/// be computed concurrently; the caches admit concurrent insertion and the
/// results do not depend on execution order.
pub struct GradedAlgebra {
    pres: Presentation,
    monomials: RwLock<HashMap<u32, Arc<Vec<Word>>>>,
    bases: RwLock<HashMap<u32, Arc<DegreeBasis>>>,
}

impl GradedAlgebra {
    pub fn new(pres: Presentation) -> GradedAlgebra {
        GradedAlgebra {
            pres,
            monomials: RwLock::new(HashMap::new()),
            bases: RwLock::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// Cached monomial list for a degree.
    pub fn monomials(&self, n: u32) -> Arc<Vec<Word>> {
        if let Some(m) = self.monomials.read().unwrap().get(&n) {
            return m.clone();
        }
        let computed = Arc::new(monomials_of_degree(&self.pres.generators, n as i64));
        let mut w = self.monomials.write().unwrap();
        w.entry(n).or_insert(computed).clone()
    }

    /// Cached degree slice (relation span, standard monomials).
    pub fn basis(&self, n: u32) -> Arc<DegreeBasis> {
        if let Some(b) = self.bases.read().unwrap().get(&n) {
            return b.clone();
        }
        let computed = Arc::new(self.compute_basis(n));
        let mut w = self.bases.write().unwrap();
        w.entry(n).or_insert(computed).clone()
    }

    /// Caches are evictable; recomputation is deterministic.
    pub fn clear_cache(&self) {
        self.monomials.write().unwrap().clear();
        self.bases.write().unwrap().clear();
    }

    fn compute_basis(&self, n: u32) -> DegreeBasis {
        let monomials: Vec<Word> = self.monomials(n).as_ref().clone();
        let mono_index: HashMap<Word, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let m = monomials.len();
        let mut space = RowSpace::new();

        'relations: for rel in &self.pres.relations {
            if rel.poly.is_zero() || rel.degree > n {
                continue;
            }
            let free = n - rel.degree;
            for du in 0..=free {
                let dv = free - du;
                let us = self.monomials(du);
                let vs = self.monomials(dv);
                for u in us.iter() {
                    for v in vs.iter() {
                        if space.rank() == m {
                            // the component is already annihilated
                            break 'relations;
                        }
                        let entries = rel.poly.terms().map(|(w, c)| {
                            let word = u.concat(w).concat(v);
                            let idx = mono_index[&word];
                            ((m - 1 - idx) as u32, c.clone())
                        });
                        space.insert(SparseVec::from_entries(entries));
                    }
                }
            }
        }

        let standard: Vec<usize> = (0..m)
            .filter(|&idx| !space.is_pivot((m - 1 - idx) as u32))
            .collect();
        let standard_pos = standard.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        DegreeBasis {
            degree: n,
            monomials,
            mono_index,
            space,
            standard,
            standard_pos,
        }
    }

    /// Component dimension b_n; zero for negative degrees, one in degree 0.
    pub fn dimension(&self, n: i64) -> u64 {
        if n < 0 {
            return 0;
        }
        self.basis(n as u32).dim() as u64
    }

    /// b_0..b_max, fanned out per degree.
    pub fn dims_up_to(&self, max: u32) -> Vec<u64> {
        crate::par::map_range(max as usize + 1, |n| self.dimension(n as i64))
    }

    /// Sequential twin of [`dims_up_to`](Self::dims_up_to).
    pub fn dims_up_to_seq(&self, max: u32) -> Vec<u64> {
        crate::par::map_range_seq(max as usize + 1, |n| self.dimension(n as i64))
    }

    pub fn dimension_table(&self, max: u32) -> DimensionTable {
        DimensionTable {
            max_degree: max,
            dims: self.dims_up_to(max),
        }
    }

    /// Hilbert series of the quotient, truncated at degree `max`.
    pub fn hilbert(&self, max: u32) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.dims_up_to(max)
                .into_iter()
                .map(|b| rat_int(b as i64))
                .collect(),
        )
    }

    /// Generating function of generator counts, h(X).
    pub fn generator_series(&self, max: u32) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            (0..=max)
                .map(|n| rat_int(self.pres.gen_count(n) as i64))
                .collect(),
        )
    }

    /// Generating function of relation counts, h(R).
    pub fn relation_series(&self, max: u32) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            (0..=max)
                .map(|n| rat_int(self.pres.rel_count(n) as i64))
                .collect(),
        )
    }
}
