//! Exact sparse Gaussian elimination.
//!
//! `RowSpace` maintains the reduced row echelon form of a growing row space:
//! every stored row has coefficient 1 at its pivot column, pivot columns are
//! zero in all other rows, and non-pivot entries in a row touch only
//! non-pivot columns. This makes both membership reduction and rank queries
//! a single pass.

use crate::scalar::Scalar;
use std::collections::HashMap;

/// Sparse vector: entries sorted by column, coefficients nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseVec {
    entries: Vec<(u32, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    /// Builds from arbitrary (column, coefficient) pairs, merging duplicates.
    pub fn from_entries(pairs: impl IntoIterator<Item = (u32, Scalar)>) -> SparseVec {
        let mut entries: Vec<(u32, Scalar)> = pairs.into_iter().collect();
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(u32, Scalar)> = Vec::with_capacity(entries.len());
        for (col, c) in entries {
            match merged.last_mut() {
                Some((last_col, acc)) if *last_col == col => *acc = acc.add(&c),
                _ => merged.push((col, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(u32, Scalar)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(u32, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, col: u32) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(j, a)| (*j, a.mul(c))).collect(),
        }
    }

    /// `self - c * other`, merging sorted entry lists.
    pub fn axpy_sub(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ca, _)), Some((cb, _))) if ca == cb => {
                    let (col, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let v = va.sub(&c.mul(vb));
                    if !v.is_zero() {
                        out.push((*col, v));
                    }
                }
                (Some((ca, _)), Some((cb, _))) if ca < cb => {
                    let (col, va) = a.next().unwrap();
                    out.push((*col, va.clone()));
                }
                (Some(_), Some(_)) => {
                    let (col, vb) = b.next().unwrap();
                    let v = c.mul(vb).neg();
                    if !v.is_zero() {
                        out.push((*col, v));
                    }
                }
                (Some(_), None) => {
                    let (col, va) = a.next().unwrap();
                    out.push((*col, va.clone()));
                }
                (None, Some(_)) => {
                    let (col, vb) = b.next().unwrap();
                    let v = c.mul(vb).neg();
                    if !v.is_zero() {
                        out.push((*col, v));
                    }
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }
}

/// Incremental reduced row echelon form of a row space.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<u32, usize>,
}

impl RowSpace {
    pub fn new() -> RowSpace {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.pivot_row.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    /// Rows sorted by pivot column; each row starts at its pivot with
    /// coefficient 1.
    pub fn rows_by_pivot(&self) -> Vec<&SparseVec> {
        let mut rows: Vec<&SparseVec> = self.rows.iter().collect();
        rows.sort_by_key(|r| r.leading().map(|e| e.0).unwrap_or(u32::MAX));
        rows
    }

    /// Canonical residue of `v` modulo the row space: the unique
    /// representative supported on non-pivot columns.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        let mut v = v;
        // One pass suffices: eliminating a pivot column only introduces
        // non-pivot columns, because stored rows are fully reduced.
        loop {
            let hit = v.iter().find_map(|(col, c)| {
                self.pivot_row.get(col).map(|&ri| (ri, c.clone()))
            });
            match hit {
                Some((ri, c)) => v = v.axpy_sub(&c, &self.rows[ri]),
                None => return v,
            }
        }
    }

    /// Inserts a row; returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let residue = self.reduce(v);
        if residue.is_zero() {
            return false;
        }
        let (pivot, lead) = residue.leading().cloned().unwrap();
        let row = residue.scale(&lead.inv());
        // keep the form reduced: clear the new pivot column everywhere
        for other in &mut self.rows {
            if let Some(c) = other.get(pivot).cloned() {
                *other = other.axpy_sub(&c, &row);
            }
        }
        self.rows.push(row);
        self.pivot_row.insert(pivot, self.rows.len() - 1);
        true
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = SparseVec>) {
        for r in rows {
            self.insert(r);
        }
    }
}

/// Rank of the span of the given vectors.
pub fn rank_of(vecs: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut space = RowSpace::new();
    space.extend(vecs);
    space.rank()
}

/// Kernel of the linear map whose columns are `cols` (each a vector of
/// `target_dim` coordinates over `field`). Returns one basis vector per
/// kernel dimension, as coordinates over the column indices.
///
/// Works by reducing the augmented rows `[column | unit]`: row operations
/// preserve the invariant that the tail records the combination producing
/// the column part, so rows whose column part collapses to zero carry a
/// vanishing combination in the tail.
pub fn kernel_basis(
    field: crate::scalar::Field,
    cols: &[SparseVec],
    target_dim: usize,
) -> Vec<SparseVec> {
    let shift = target_dim as u32;
    let mut space = RowSpace::new();
    for (j, col) in cols.iter().enumerate() {
        let mut entries: Vec<(u32, Scalar)> = col.iter().cloned().collect();
        entries.push((shift + j as u32, field.one()));
        space.insert(SparseVec::from_entries(entries));
    }
    let mut kernel = Vec::new();
    for row in space.rows_by_pivot() {
        if let Some((lead, _)) = row.leading() {
            if *lead >= shift {
                let entries: Vec<(u32, Scalar)> =
                    row.iter().map(|(c, v)| (c - shift, v.clone())).collect();
                kernel.push(SparseVec { entries });
            }
        }
    }
    kernel
}
