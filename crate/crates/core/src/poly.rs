//! Elements of the free associative algebra: finitely supported scalar
//! combinations of words, stored canonically (no zero coefficients, terms
//! keyed in deglex order).

use crate::error::Error;
use crate::scalar::{Field, Scalar};
use crate::word::{Generator, Word};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreePoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero(field: Field) -> FreePoly {
        FreePoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> FreePoly {
        FreePoly::from_word(field, Word::empty())
    }

    /// The word `w` with coefficient 1.
    pub fn from_word(field: Field, w: Word) -> FreePoly {
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        FreePoly { field, terms }
    }

    /// Collects terms, merging duplicate words and dropping zeros.
    /// All scalars must belong to `field`.
    pub fn from_terms(
        field: Field,
        iter: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<FreePoly, Error> {
        let mut terms: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in iter {
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            let entry = terms.entry(w).or_insert_with(|| field.zero());
            *entry = entry.add(&c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(FreePoly { field, terms })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    /// Degree shared by every word, `None` if the support mixes degrees.
    /// The zero polynomial reports `Some(0)` vacuously.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(w) => w.degree(),
            None => return Some(0),
        };
        it.all(|w| w.degree() == first).then_some(first)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    fn check_field(&self, other: &FreePoly) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &FreePoly) -> Result<FreePoly, Error> {
        self.check_field(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(|| self.field.zero());
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(FreePoly {
            field: self.field,
            terms,
        })
    }

    pub fn sub(&self, other: &FreePoly) -> Result<FreePoly, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<FreePoly, Error> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        if c.is_zero() {
            return Ok(FreePoly::zero(self.field));
        }
        Ok(FreePoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        })
    }

    /// Bilinear extension of word concatenation; degrees add.
    pub fn mul(&self, other: &FreePoly) -> Result<FreePoly, Error> {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with words above `cap` discarded. Used by truncated
    /// power-series expansions in the free algebra.
    pub fn mul_truncated(&self, other: &FreePoly, cap: u32) -> Result<FreePoly, Error> {
        self.check_field(other)?;
        let mut terms: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (u, a) in &self.terms {
            if u.degree() > cap {
                continue;
            }
            for (v, b) in &other.terms {
                if u.degree() + v.degree() > cap {
                    continue;
                }
                let w = u.concat(v);
                let c = a.mul(b);
                let entry = terms.entry(w).or_insert_with(|| self.field.zero());
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(FreePoly {
            field: self.field,
            terms,
        })
    }

    /// Drops all words of degree greater than `cap`.
    pub fn truncate(&self, cap: u32) -> FreePoly {
        FreePoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() <= cap)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `n`.
    pub fn component(&self, n: u32) -> FreePoly {
        FreePoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The right partial derivative with respect to generator `x`: the unique
    /// coefficients in the decomposition of `self` as a left combination of
    /// the generators. Requires a zero constant term.
    ///
    /// Every term `c * w.x` contributes `c * w`; terms ending in another
    /// generator contribute nothing.
    pub fn right_partial(&self, x: u32, gens: &[Generator]) -> Result<FreePoly, Error> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTerm);
        }
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let (prefix, last) = w.split_last(gens).expect("constant term is zero");
            if last == x {
                terms.insert(prefix, c.clone());
            }
        }
        Ok(FreePoly {
            field: self.field,
            terms,
        })
    }

    /// Renders terms in deglex order with signs folded, e.g. `x*y - y*x`.
    pub fn format(&self, gens: &[Generator]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let (sign, mag) = display_parts(c);
            if out.is_empty() {
                if sign {
                    out.push_str("- ");
                }
            } else if sign {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let word = w.format(gens);
            if mag == "1" && !w.is_empty() {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&mag);
            } else {
                out.push_str(&mag);
                out.push(' ');
                out.push_str(&word);
            }
        }
        out
    }
}

/// Splits a scalar into (is_negative, magnitude rendering). GF(p) values are
/// canonical in [0, p) and never negative.
fn display_parts(c: &Scalar) -> (bool, String) {
    match c {
        Scalar::Rat(r) => {
            use num_traits::Signed;
            if r.is_negative() {
                (true, crate::scalar::format_rat(&-r))
            } else {
                (false, crate::scalar::format_rat(r))
            }
        }
        Scalar::Fp { .. } => (false, c.to_string()),
    }
}
