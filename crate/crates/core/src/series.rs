//! Truncated formal power series over exact rationals, the coefficientwise
//! positivity order, and the infinite-dimensionality certificates built
//! from them.

use crate::dims::GradedAlgebra;
use crate::error::Error;
use crate::presentation::Presentation;
use crate::scalar::{rat_int, Rat};
use num_traits::{One, Signed, Zero};

/// Coefficients a_0..a_N of a power series modulo t^(N+1). Arithmetic is
/// exact; operations on series of different truncation orders truncate to
/// the smaller one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a truncated series has order >= 0");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(rat_int(1), 0, order)
    }

    /// c * t^k truncated at `order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let end = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=end].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product modulo t^(N+1).
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse modulo t^(N+1), by the convolution recursion.
    /// Requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let a0_inv = Rat::one() / &self.coeffs[0];
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[0] = a0_inv.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &coeffs[k - j];
                }
            }
            coeffs[k] = -(acc * &a0_inv);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// The positivity order: true iff every coefficient of `self - other`
    /// up to the common truncation order is nonnegative.
    pub fn succeq(&self, other: &TruncatedSeries) -> bool {
        let n = self.order().min(other.order());
        (0..=n).all(|i| self.coeffs[i] >= other.coeffs[i])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Space-separated coefficients, each as `p` or `p/q`.
    pub fn format_coeffs(&self) -> String {
        self.coeffs
            .iter()
            .map(crate::scalar::format_rat)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// What a verification run established.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// All checks passed at every order up to the truncation.
    CertifiedToOrder(usize),
    /// A hypothesis failed; nothing is claimed.
    Inconclusive,
    /// A proved inequality failed: an implementation bug upstream.
    Violated,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertificateKind {
    GsInequality,
    KeyLemma,
    GolodCorollary,
}

/// Outcome of a series-level check, with the series it examined.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub order: usize,
    pub verdict: Verdict,
    /// The series whose nonnegativity was at stake (product or inverse).
    pub witness: TruncatedSeries,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        matches!(self.verdict, Verdict::CertifiedToOrder(_))
    }
}

/// Checks (1 - h(X) + h(R)) * H(B) >= 1 coefficientwise up to order `n`.
/// The slack coefficients are returned in the certificate witness
/// (witness = product - 1).
pub fn gs_series_check(alg: &GradedAlgebra, n: u32) -> Certificate {
    let order = n as usize;
    let hx = alg.generator_series(n);
    let hr = alg.relation_series(n);
    let hb = alg.hilbert(n);
    let lhs = TruncatedSeries::one(order).sub(&hx).add(&hr).mul(&hb);
    let slack = lhs.sub(&TruncatedSeries::one(order));
    let verdict = if slack.is_nonnegative() {
        Verdict::CertifiedToOrder(order)
    } else {
        Verdict::Violated
    };
    Certificate {
        kind: CertificateKind::GsInequality,
        order,
        verdict,
        witness: slack,
    }
}

/// The relation-count bound eps^2 (k - 2 eps)^(n-2) for degree n >= 2,
/// with k generators in degree one.
pub fn golod_bound(k: u64, eps: &Rat, n: u32) -> Result<Rat, Error> {
    if k < 1 {
        return Err(Error::ParamOutOfRange("need at least one generator".into()));
    }
    if eps.is_negative() || eps > &Rat::new(k.into(), 2.into()) {
        return Err(Error::ParamOutOfRange(format!(
            "eps must lie in [0, {k}/2]"
        )));
    }
    if n < 2 {
        return Err(Error::ParamOutOfRange("bound applies to degrees >= 2".into()));
    }
    let base = rat_int(k as i64) - eps * rat_int(2);
    let mut pow = Rat::one();
    for _ in 0..(n - 2) {
        pow *= &base;
    }
    Ok(eps * eps * pow)
}

/// Data behind the geometric relation-count certificate: with
/// gamma = eps^2 t^2 / (1 - (k - 2 eps) t), alpha = 1 - (k - eps) t and
/// beta = eps t, the identities
///   1 - k t + gamma = alpha^2 / (alpha + beta)
///   (1 - k t + gamma)^(-1) = 1/alpha + beta/alpha^2
/// hold exactly, and the inverse is coefficientwise nonnegative.
#[derive(Clone, Debug)]
pub struct GolodCertificate {
    pub gens: u64,
    pub eps: Rat,
    pub gamma: TruncatedSeries,
    /// 1 - k t + gamma.
    pub one_minus: TruncatedSeries,
    /// (1 - k t + gamma)^(-1), the lower bound for H(B).
    pub inverse: TruncatedSeries,
    pub product_identity: bool,
    pub inverse_identity: bool,
    pub inverse_nonnegative: bool,
    pub tail_nonzero: bool,
    pub certificate: Certificate,
}

pub fn golod_certificate(k: u64, eps: &Rat, order: usize) -> Result<GolodCertificate, Error> {
    if k < 1 {
        return Err(Error::ParamOutOfRange("need at least one generator".into()));
    }
    if eps.is_negative() || eps > &Rat::new(k.into(), 2.into()) {
        return Err(Error::ParamOutOfRange(format!(
            "eps must lie in [0, {k}/2]"
        )));
    }

    let kt = TruncatedSeries::monomial(rat_int(k as i64), 1, order);
    let one = TruncatedSeries::one(order);

    // gamma = eps^2 t^2 * (1 - (k - 2 eps) t)^(-1)
    let base = rat_int(k as i64) - eps * rat_int(2);
    let geom = one
        .sub(&TruncatedSeries::monomial(base, 1, order))
        .inverse()?;
    let gamma = TruncatedSeries::monomial(eps * eps, 2, order).mul(&geom);

    let alpha = one.sub(&TruncatedSeries::monomial(
        rat_int(k as i64) - eps,
        1,
        order,
    ));
    let beta = TruncatedSeries::monomial(eps.clone(), 1, order);

    let one_minus = one.sub(&kt).add(&gamma);

    // 1 - k t + gamma = alpha^2 / (alpha + beta), checked multiplied out
    let product_identity = one_minus.mul(&alpha.add(&beta)) == alpha.mul(&alpha);

    let alpha_inv = alpha.inverse()?;
    let expected_inverse = alpha_inv.add(&beta.mul(&alpha_inv).mul(&alpha_inv));
    let inverse = one_minus.inverse()?;
    let inverse_identity = inverse == expected_inverse;

    let inverse_nonnegative = inverse.is_nonnegative();
    let tail_nonzero = !inverse.coeff(order).is_zero();

    let all = product_identity && inverse_identity && inverse_nonnegative && tail_nonzero;
    let certificate = Certificate {
        kind: CertificateKind::GolodCorollary,
        order,
        verdict: if all {
            Verdict::CertifiedToOrder(order)
        } else {
            Verdict::Inconclusive
        },
        witness: inverse.clone(),
    };
    Ok(GolodCertificate {
        gens: k,
        eps: eps.clone(),
        gamma,
        one_minus,
        inverse,
        product_identity,
        inverse_identity,
        inverse_nonnegative,
        tail_nonzero,
        certificate,
    })
}

/// Outcome of the dominating-series test: if gamma dominates the relation
/// counts and (1 - h(X) + gamma)^(-1) is coefficientwise nonnegative with a
/// nonzero tail, then H(B) dominates that inverse at every computed order.
#[derive(Clone, Debug)]
pub struct KeyLemmaReport {
    pub dominates_relations: bool,
    pub inverse_nonnegative: bool,
    /// Some coefficient in the top quarter of computed orders is nonzero.
    /// This is a truncation heuristic standing in for "not a polynomial";
    /// it can never certify the untruncated statement.
    pub tail_nonzero: bool,
    pub inverse: TruncatedSeries,
    pub certificate: Certificate,
}

pub fn key_lemma_check(
    pres: &Presentation,
    gamma: &TruncatedSeries,
    order: usize,
) -> Result<KeyLemmaReport, Error> {
    if !gamma.coeff(0).is_zero() {
        return Err(Error::ConstantTerm);
    }
    let gamma = gamma.truncate(order);
    let hx = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|i| rat_int(pres.gen_count(i as u32) as i64))
            .collect(),
    );
    let hr = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|i| rat_int(pres.rel_count(i as u32) as i64))
            .collect(),
    );
    let dominates_relations = gamma.succeq(&hr);
    let inverse = TruncatedSeries::one(order).sub(&hx).add(&gamma).inverse()?;
    let inverse_nonnegative = inverse.is_nonnegative();
    let tail_start = order - order / 4;
    let tail_nonzero = (tail_start..=order).any(|i| !inverse.coeff(i).is_zero());

    let all = dominates_relations && inverse_nonnegative && tail_nonzero;
    let certificate = Certificate {
        kind: CertificateKind::KeyLemma,
        order,
        verdict: if all {
            Verdict::CertifiedToOrder(order)
        } else {
            Verdict::Inconclusive
        },
        witness: inverse.clone(),
    };
    Ok(KeyLemmaReport {
        dominates_relations,
        inverse_nonnegative,
        tail_nonzero,
        inverse,
        certificate,
    })
}
