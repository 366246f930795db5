//! Free group words, group-algebra elements, and the filtration machinery
//! for group algebras.

pub mod fox;
pub mod presentation;
pub mod snf;
pub mod table;

use crate::error::Error;
use crate::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A freely reduced word in a free group: letters are (generator index,
/// sign) with no adjacent cancelling pair.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupWord {
    letters: Vec<(u32, i8)>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    /// Builds from (generator, exponent) syllables, expanding powers and
    /// freely reducing.
    pub fn from_syllables(syllables: &[(u32, i64)]) -> GroupWord {
        let mut letters: Vec<(u32, i8)> = Vec::new();
        for &(g, e) in syllables {
            let sign: i8 = if e >= 0 { 1 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                match letters.last() {
                    Some(&(h, s)) if h == g && s == -sign => {
                        letters.pop();
                    }
                    _ => letters.push((g, sign)),
                }
            }
        }
        GroupWord { letters }
    }

    pub fn letters(&self) -> &[(u32, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        for &(g, s) in &other.letters {
            match letters.last() {
                Some(&(h, t)) if h == g && t == -s => {
                    letters.pop();
                }
                _ => letters.push((g, s)),
            }
        }
        GroupWord { letters }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    /// Sum of exponents of generator `g` (image in the free abelianization).
    pub fn exponent_sum(&self, g: u32) -> i64 {
        self.letters
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, s)| s as i64)
            .sum()
    }

    /// Renders as `x*y^-1*x^2`; the identity renders as `1`.
    pub fn format(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let (g, s) = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == (g, s) {
                run += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            let exp = run as i64 * s as i64;
            if exp == 1 {
                out.push_str(&names[g as usize]);
            } else {
                let _ = write!(out, "{}^{}", names[g as usize], exp);
            }
            i += run;
        }
        out
    }
}

impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        // shortlex, inverses after plain letters
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| {
                for (&(g, s), &(h, t)) in self.letters.iter().zip(&other.letters) {
                    let c = g.cmp(&h).then(t.cmp(&s));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finitely supported scalar combination of reduced group words: an
/// element of the free group's group algebra. Canonical: no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    field: Field,
    terms: BTreeMap<GroupWord, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(field: Field) -> GroupAlgebraElement {
        GroupAlgebraElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> GroupAlgebraElement {
        GroupAlgebraElement::from_word(field, GroupWord::identity())
    }

    pub fn from_word(field: Field, w: GroupWord) -> GroupAlgebraElement {
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        GroupAlgebraElement { field, terms }
    }

    /// w - 1, the augmentation-kernel image of a group element.
    pub fn word_minus_one(field: Field, w: GroupWord) -> GroupAlgebraElement {
        GroupAlgebraElement::from_word(field, w)
            .sub(&GroupAlgebraElement::one(field))
            .expect("same field")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_field(&self, other: &GroupAlgebraElement) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement, Error> {
        self.check_field(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(|| self.field.zero());
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement {
            field: self.field,
            terms,
        })
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> GroupAlgebraElement {
        if c.is_zero() {
            return GroupAlgebraElement::zero(self.field);
        }
        GroupAlgebraElement {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement, Error> {
        self.check_field(other)?;
        let mut terms: BTreeMap<GroupWord, Scalar> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w = u.mul(v);
                let c = a.mul(b);
                let entry = terms.entry(w).or_insert_with(|| self.field.zero());
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement {
            field: self.field,
            terms,
        })
    }

    /// Sum of coefficients: the augmentation map.
    pub fn augmentation(&self) -> Scalar {
        self.terms
            .values()
            .fold(self.field.zero(), |acc, c| acc.add(c))
    }

    /// Terms in shortlex order with signs folded.
    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let (neg, mag) = match c {
                Scalar::Rat(r) => {
                    use num_traits::Signed;
                    if r.is_negative() {
                        (true, crate::scalar::format_rat(&-r))
                    } else {
                        (false, crate::scalar::format_rat(r))
                    }
                }
                Scalar::Fp { .. } => (false, c.to_string()),
            };
            if out.is_empty() {
                if neg {
                    out.push_str("- ");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let word = w.format(names);
            if mag == "1" && !w.is_empty() {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&mag);
            } else {
                let _ = write!(out, "{mag} {word}");
            }
        }
        out
    }
}
