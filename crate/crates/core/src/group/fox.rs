//! Fox derivatives and the power-series (Magnus) degree of group-algebra
//! elements.
//!
//! The derivative with respect to a generator x is the left coefficient of
//! (x - 1) in the unique decomposition of w - 1 over the augmentation
//! ideal. It obeys the twisted product rule
//!   d(uv) = d(u) + u d(v),
//! which letter by letter gives d(x) = 1 and d(x^-1) = -x^-1.

use crate::error::Error;
use crate::poly::FreePoly;
use crate::scalar::Field;
use crate::word::Generator;

use super::{GroupAlgebraElement, GroupWord};

/// The Fox derivative of `w - 1` with respect to generator `x`, as an
/// element of the free group algebra over `field`.
pub fn fox_derivative(field: Field, w: &GroupWord, x: u32) -> GroupAlgebraElement {
    let mut derivative = GroupAlgebraElement::zero(field);
    let mut prefix = GroupWord::identity();
    for &(g, s) in w.letters() {
        if g == x {
            let contribution = if s > 0 {
                // d(x) = 1
                GroupAlgebraElement::from_word(field, prefix.clone())
            } else {
                // d(x^-1) = -x^-1
                let letter_inv = GroupWord::from_syllables(&[(g, -1)]);
                GroupAlgebraElement::from_word(field, prefix.mul(&letter_inv)).neg()
            };
            derivative = derivative.add(&contribution).expect("same field");
        }
        prefix = prefix.mul(&GroupWord::from_syllables(&[(g, s as i64)]));
    }
    derivative
}

/// Checks the decomposition sum_x d(w)/d(x) * (x - 1) = w - 1 exactly.
pub fn fox_reconstructs(field: Field, w: &GroupWord, num_gens: usize) -> bool {
    let mut acc = GroupAlgebraElement::zero(field);
    for x in 0..num_gens as u32 {
        let d = fox_derivative(field, w, x);
        let x_minus_one =
            GroupAlgebraElement::word_minus_one(field, GroupWord::from_syllables(&[(x, 1)]));
        acc = acc
            .add(&d.mul(&x_minus_one).expect("same field"))
            .expect("same field");
    }
    acc == GroupAlgebraElement::word_minus_one(field, w.clone())
}

/// Result of a truncated degree computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MagnusDegree {
    Degree(u32),
    /// Every homogeneous component up to the cap vanished.
    AboveCap,
}

/// The power-series valuation of a nonzero group-algebra element, computed
/// by substituting x -> 1 + X and x^-1 -> 1 - X + X^2 - ... into each word
/// and expanding in the free associative algebra truncated at `cap`.
///
/// Over GF(p) the characteristic matters: (1 + X)^p - 1 = X^p mod p.
pub fn magnus_degree(
    f: &GroupAlgebraElement,
    num_gens: usize,
    cap: u32,
) -> Result<MagnusDegree, Error> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if cap < 1 {
        return Err(Error::ParamOutOfRange("cap must be >= 1".into()));
    }
    let image = magnus_expand(f, num_gens, cap)?;
    for n in 0..=cap {
        if !image.component(n).is_zero() {
            return Ok(MagnusDegree::Degree(n));
        }
    }
    Ok(MagnusDegree::AboveCap)
}

/// The truncated power-series image of a group-algebra element; the
/// substitution variables are degree-1 generators X0..X{k-1}.
pub fn magnus_expand(
    f: &GroupAlgebraElement,
    num_gens: usize,
    cap: u32,
) -> Result<FreePoly, Error> {
    let field = f.field();
    let gens: Vec<Generator> = (0..num_gens)
        .map(|i| Generator::new(format!("X{i}"), 1))
        .collect();

    // per-letter factors: 1 + X and the truncated geometric series
    let mut positive = Vec::with_capacity(num_gens);
    let mut negative = Vec::with_capacity(num_gens);
    for i in 0..num_gens as u32 {
        let xi = FreePoly::from_word(field, crate::word::Word::single(i, &gens));
        positive.push(FreePoly::one(field).add(&xi)?);
        let mut inv = FreePoly::one(field);
        let mut power = FreePoly::one(field);
        for k in 1..=cap {
            power = power.mul_truncated(&xi, cap)?;
            let signed = if k % 2 == 1 { power.neg() } else { power.clone() };
            inv = inv.add(&signed)?;
        }
        negative.push(inv);
    }

    let mut image = FreePoly::zero(field);
    for (w, c) in f.terms() {
        let mut expanded = FreePoly::one(field);
        for &(g, s) in w.letters() {
            let factor = if s > 0 {
                &positive[g as usize]
            } else {
                &negative[g as usize]
            };
            expanded = expanded.mul_truncated(factor, cap)?;
        }
        image = image.add(&expanded.scale(c)?)?;
    }
    Ok(image)
}
