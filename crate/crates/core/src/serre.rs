//! Unboundedness witnesses for the recurrence a_{n+2} >= d1 a_{n+1} - d2 a_n + 1.
//!
//! With lambda, mu the roots of z^2 - d1 z + d2 (real by the precondition
//! d1^2 >= 4 d2), the auxiliary sequence b_n = a_{n+1} - lambda a_n
//! satisfies b_{n+1} - mu b_n >= 1 and hence b_n >= n. All comparisons are
//! carried out exactly on numbers of the form p + q*sqrt(D) with rational
//! p, q and D = d1^2 - 4 d2; no floating point.

use crate::error::Error;
use crate::scalar::{format_rat, rat_sqrt, Rat};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An element p + q*sqrt(disc) of a real quadratic extension, disc >= 0
/// fixed per instance. Supports exact arithmetic and sign analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadRat {
    pub rational: Rat,
    pub radical: Rat,
    pub disc: Rat,
}

impl QuadRat {
    pub fn new(rational: Rat, radical: Rat, disc: Rat) -> QuadRat {
        assert!(!disc.is_negative(), "discriminant must be nonnegative");
        QuadRat {
            rational,
            radical,
            disc,
        }
    }

    pub fn from_rat(r: Rat, disc: Rat) -> QuadRat {
        QuadRat::new(r, Rat::zero(), disc)
    }

    pub fn sqrt_disc(disc: Rat) -> QuadRat {
        QuadRat::new(Rat::zero(), Rat::from_integer(1.into()), disc)
    }

    fn assert_same_disc(&self, other: &QuadRat) {
        assert_eq!(self.disc, other.disc, "mixed discriminants");
    }

    pub fn add(&self, other: &QuadRat) -> QuadRat {
        self.assert_same_disc(other);
        QuadRat::new(
            &self.rational + &other.rational,
            &self.radical + &other.radical,
            self.disc.clone(),
        )
    }

    pub fn sub(&self, other: &QuadRat) -> QuadRat {
        self.assert_same_disc(other);
        QuadRat::new(
            &self.rational - &other.rational,
            &self.radical - &other.radical,
            self.disc.clone(),
        )
    }

    pub fn mul(&self, other: &QuadRat) -> QuadRat {
        self.assert_same_disc(other);
        QuadRat::new(
            &self.rational * &other.rational + &self.radical * &other.radical * &self.disc,
            &self.rational * &other.radical + &self.radical * &other.rational,
            self.disc.clone(),
        )
    }

    pub fn scale(&self, c: &Rat) -> QuadRat {
        QuadRat::new(&self.rational * c, &self.radical * c, self.disc.clone())
    }

    /// Exact sign of p + q*sqrt(D): resolved by comparing p^2 with q^2 D
    /// when p and q disagree in sign.
    pub fn sign(&self) -> Ordering {
        let p = &self.rational;
        let q = &self.radical;
        if q.is_zero() || self.disc.is_zero() {
            return p.cmp(&Rat::zero());
        }
        if p.is_zero() {
            return q.cmp(&Rat::zero());
        }
        match (p.is_positive(), q.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            (p_pos, _) => {
                // opposite signs: |p| vs |q| sqrt(D)
                let p2 = p * p;
                let q2d = q * q * &self.disc;
                match p2.cmp(&q2d) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => {
                        if p_pos {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        }
                    }
                    Ordering::Less => {
                        if p_pos {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        }
                    }
                }
            }
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sign() != Ordering::Less
    }

    pub fn ge_rat(&self, r: &Rat) -> bool {
        self.sub(&QuadRat::from_rat(r.clone(), self.disc.clone()))
            .is_nonnegative()
    }

    /// The exact rational value, when the radical part collapses.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.radical.is_zero() || self.disc.is_zero() {
            return Some(self.rational.clone());
        }
        rat_sqrt(&self.disc).map(|s| &self.rational + &self.radical * s)
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rat() {
            return write!(f, "{}", format_rat(&r));
        }
        if self.rational.is_zero() {
            return write!(f, "{} sqrt({})", format_rat(&self.radical), format_rat(&self.disc));
        }
        if self.radical.is_negative() {
            write!(
                f,
                "{} - {} sqrt({})",
                format_rat(&self.rational),
                format_rat(&(-&self.radical)),
                format_rat(&self.disc)
            )
        } else {
            write!(
                f,
                "{} + {} sqrt({})",
                format_rat(&self.rational),
                format_rat(&self.radical),
                format_rat(&self.disc)
            )
        }
    }
}

/// Both preconditions, evaluated exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preconditions {
    /// d1 >= min(2, d2 + 1)
    pub lower_bound: bool,
    /// d1^2 >= 4 d2 (kept square-root-free)
    pub real_roots: bool,
}

impl Preconditions {
    pub fn holds(&self) -> bool {
        self.lower_bound && self.real_roots
    }
}

pub fn check_preconditions(d1: &Rat, d2: &Rat) -> Preconditions {
    let two = Rat::from_integer(2.into());
    let min = if &two <= &(d2 + Rat::from_integer(1.into())) {
        two.clone()
    } else {
        d2 + Rat::from_integer(1.into())
    };
    Preconditions {
        lower_bound: d1 >= &min,
        real_roots: d1 * d1 >= d2 * &Rat::from_integer(4.into()),
    }
}

/// A validated recurrence instance.
#[derive(Clone, Debug)]
pub struct SerreInstance {
    pub d1: Rat,
    pub d2: Rat,
    pub a1: Rat,
    pub steps: usize,
}

impl SerreInstance {
    pub fn new(d1: Rat, d2: Rat, a1: Rat, steps: usize) -> Result<SerreInstance, Error> {
        let pre = check_preconditions(&d1, &d2);
        if !pre.holds() {
            return Err(Error::ParamOutOfRange(format!(
                "preconditions fail: d1 >= min(2, d2+1) is {}, d1^2 >= 4 d2 is {}",
                pre.lower_bound, pre.real_roots
            )));
        }
        if a1.is_negative() {
            return Err(Error::ParamOutOfRange("a1 must be >= 0".into()));
        }
        Ok(SerreInstance { d1, d2, a1, steps })
    }

    pub fn discriminant(&self) -> Rat {
        &self.d1 * &self.d1 - &self.d2 * Rat::from_integer(4.into())
    }

    /// (d1 -+ sqrt(d1^2 - 4 d2)) / 2: the smaller root first.
    pub fn roots(&self) -> (QuadRat, QuadRat) {
        let disc = self.discriminant();
        let half = Rat::new(1.into(), 2.into());
        let d1_half = &self.d1 * &half;
        let lambda = QuadRat::new(d1_half.clone(), -&half, disc.clone());
        let mu = QuadRat::new(d1_half, half, disc);
        (lambda, mu)
    }

    /// The extremal admissible sequence: a_0 = 0, a_1 given, and equality
    /// a_{n+2} = d1 a_{n+1} - d2 a_n + 1 at each later step.
    pub fn minimal_sequence(&self) -> Vec<Rat> {
        let mut a = Vec::with_capacity(self.steps + 1);
        a.push(Rat::zero());
        if self.steps >= 1 {
            a.push(self.a1.clone());
        }
        for n in 2..=self.steps {
            let next = &self.d1 * &a[n - 1] - &self.d2 * &a[n - 2] + Rat::from_integer(1.into());
            a.push(next);
        }
        a
    }

    /// Verifies the growth chain on the minimal sequence.
    pub fn growth_witness(&self) -> GrowthReport {
        self.growth_witness_for(&self.minimal_sequence())
    }

    /// Verifies the growth chain on any admissible sequence:
    /// b_0 >= 0, b_{n+1} - mu b_n >= 1, b_n >= n, and mu >= 1.
    pub fn growth_witness_for(&self, seq: &[Rat]) -> GrowthReport {
        let (lambda, mu) = self.roots();
        let disc = self.discriminant();

        // sqrt(D) >= 2 - d1, hence mu >= 1
        let two_minus_d1 = Rat::from_integer(2.into()) - &self.d1;
        let root_bound = if !two_minus_d1.is_positive() {
            true
        } else {
            disc >= &two_minus_d1 * &two_minus_d1
        };
        let mu_ge_one = mu.ge_rat(&Rat::from_integer(1.into()));

        let b: Vec<QuadRat> = seq
            .windows(2)
            .map(|w| {
                QuadRat::from_rat(w[1].clone(), disc.clone())
                    .sub(&lambda.mul(&QuadRat::from_rat(w[0].clone(), disc.clone())))
            })
            .collect();

        let mut rows = Vec::with_capacity(b.len());
        for (n, bn) in b.iter().enumerate() {
            let lower_bound_ok = bn.ge_rat(&Rat::from_integer((n as i64).into()));
            let step_ge_one = if n + 1 < b.len() {
                Some(
                    b[n + 1]
                        .sub(&mu.mul(bn))
                        .ge_rat(&Rat::from_integer(1.into())),
                )
            } else {
                None
            };
            rows.push(GrowthRow {
                n,
                a_n: seq[n].clone(),
                b_n: bn.clone(),
                lower_bound_ok,
                step_ge_one,
            });
        }
        let b0_nonnegative = b.first().map(|b0| b0.is_nonnegative()).unwrap_or(true);
        let all_hold = root_bound
            && mu_ge_one
            && b0_nonnegative
            && rows
                .iter()
                .all(|r| r.lower_bound_ok && r.step_ge_one.unwrap_or(true));
        GrowthReport {
            lambda,
            mu,
            root_bound,
            mu_ge_one,
            b0_nonnegative,
            rows,
            all_hold,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub n: usize,
    pub a_n: Rat,
    /// b_n = a_{n+1} - lambda a_n.
    pub b_n: QuadRat,
    /// n <= b_n, i.e. n <= a_{n+1} - lambda a_n.
    pub lower_bound_ok: bool,
    /// b_{n+1} - mu b_n >= 1 (absent for the last computed index).
    pub step_ge_one: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub lambda: QuadRat,
    pub mu: QuadRat,
    /// sqrt(d1^2 - 4 d2) >= 2 - d1, checked square-root-free.
    pub root_bound: bool,
    pub mu_ge_one: bool,
    pub b0_nonnegative: bool,
    pub rows: Vec<GrowthRow>,
    pub all_hold: bool,
}
