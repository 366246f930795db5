//! Group presentations from `.grp` files and the filtered-algebra
//! inequality check against a concrete finite group.
//!
//! The `.grp` format: `gen <name>` lines, then `rel [<degree>] <word>`
//! lines. Words use `*`-separated factors with integer exponents, e.g.
//! `x*y^-1*x^2`; the literal `1` is the identity word, which needs an
//! explicit degree. `#` starts a comment.

use crate::error::Error;
use crate::scalar::{Field, Rat};
use crate::series::TruncatedSeries;
use num_traits::{One, Signed, Zero};

use super::fox::{magnus_degree, MagnusDegree};
use super::table::{filtration_dims, FiniteGroupTable};
use super::{GroupAlgebraElement, GroupWord};

#[derive(Clone, Debug)]
pub struct Relator {
    pub word: GroupWord,
    /// Required when the relator reduces to the identity; otherwise the
    /// degree is computed from the power-series valuation of `word - 1`.
    pub assigned_degree: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

impl GroupPresentation {
    pub fn parse(text: &str) -> Result<GroupPresentation, Error> {
        let mut generators: Vec<String> = Vec::new();
        let mut relators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            match toks.next().unwrap() {
                "gen" => {
                    let name = toks
                        .next()
                        .ok_or_else(|| Error::parse(lineno, 1, "expected a generator name"))?;
                    if toks.next().is_some() {
                        return Err(Error::parse(lineno, 1, "trailing tokens after generator"));
                    }
                    if generators.iter().any(|g| g == name) {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("duplicate generator name `{name}`"),
                        ));
                    }
                    generators.push(name.to_string());
                }
                "rel" => {
                    let rest: Vec<&str> = toks.collect();
                    let (assigned_degree, word_text) = match rest.as_slice() {
                        [] => return Err(Error::parse(lineno, 1, "expected a relator word")),
                        [single] => (None, *single),
                        [deg, word] => {
                            let d: u32 = deg.parse().ok().filter(|&d| d >= 1).ok_or_else(|| {
                                Error::parse(lineno, 1, "expected a positive degree")
                            })?;
                            (Some(d), *word)
                        }
                        _ => {
                            return Err(Error::parse(
                                lineno,
                                1,
                                "expected `rel [<degree>] <word>`",
                            ))
                        }
                    };
                    let word = parse_group_word(word_text, &generators, lineno)?;
                    relators.push(Relator {
                        word,
                        assigned_degree,
                    });
                }
                other => {
                    return Err(Error::parse(
                        lineno,
                        1,
                        format!("unknown directive `{other}`"),
                    ))
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// The |R| x |X| matrix of exponent sums: the relators' image in the
    /// free abelianization.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                (0..self.generators.len() as u32)
                    .map(|g| r.word.exponent_sum(g))
                    .collect()
            })
            .collect()
    }

    /// Degrees deg(r - 1) per relator over GF(p): assigned where given,
    /// otherwise computed by truncated power-series valuation up to `cap`.
    /// `None` marks a valuation above the cap (irrelevant below it).
    /// A relator equal to the identity without an assigned degree is an
    /// error: its degree is a free choice that must be made explicit.
    pub fn relator_degrees(&self, p: u64, cap: u32) -> Result<Vec<Option<u32>>, Error> {
        let field = Field::prime(p)?;
        self.relators
            .iter()
            .map(|r| {
                if let Some(d) = r.assigned_degree {
                    return Ok(Some(d));
                }
                if r.word.is_empty() {
                    return Err(Error::DegreeUnavailable(
                        "identity relator needs an assigned degree".into(),
                    ));
                }
                let f = GroupAlgebraElement::word_minus_one(field, r.word.clone());
                match magnus_degree(&f, self.generators.len(), cap)? {
                    MagnusDegree::Degree(d) => Ok(Some(d)),
                    MagnusDegree::AboveCap => Ok(None),
                }
            })
            .collect()
    }
}

/// `x*y^-1*x^2` and the identity literal `1`.
fn parse_group_word(
    text: &str,
    generators: &[String],
    lineno: usize,
) -> Result<GroupWord, Error> {
    if text == "1" {
        return Ok(GroupWord::identity());
    }
    let mut syllables = Vec::new();
    for factor in text.split('*') {
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let e: i64 = exp.parse().map_err(|_| {
                    Error::parse(lineno, 1, format!("bad exponent `{exp}`"))
                })?;
                if e == 0 {
                    return Err(Error::parse(lineno, 1, "zero exponent"));
                }
                (name, e)
            }
            None => (factor, 1),
        };
        let idx = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        syllables.push((idx as u32, exp));
    }
    Ok(GroupWord::from_syllables(&syllables))
}

/// One degree of the filtered inequality
/// |X| a_{n-1} <= sum_r a_{n - deg(r-1)} + (a_n - 1).
#[derive(Clone, Copy, Debug)]
pub struct VinbergRow {
    pub n: usize,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct VinbergReport {
    /// deg(r - 1) per relator; `None` when above the truncation cap.
    pub degrees: Vec<Option<u32>>,
    /// a_0..a_max_n.
    pub filtration: Vec<u64>,
    pub rows: Vec<VinbergRow>,
    /// (1 - h(X) + h(R)) H(B) (1-t)^{-1} >= (1-t)^{-1} coefficientwise,
    /// with b_n = a_n - a_{n-1}.
    pub series_holds: bool,
    pub all_hold: bool,
}

pub fn vinberg_check(
    pres: &GroupPresentation,
    group: &FiniteGroupTable,
    p: u64,
    max_n: usize,
) -> Result<VinbergReport, Error> {
    let degrees = pres.relator_degrees(p, max_n as u32 + 1)?;
    let filtration = filtration_dims(group, p, max_n)?;
    let a = |n: i64| -> u128 {
        if n < 0 {
            0
        } else if n as usize >= filtration.len() {
            *filtration.last().unwrap() as u128
        } else {
            filtration[n as usize] as u128
        }
    };

    let x_count = pres.generators.len() as u128;
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let lhs = x_count * a(n as i64 - 1);
        let rel_sum: u128 = degrees
            .iter()
            .map(|d| match d {
                Some(d) => a(n as i64 - *d as i64),
                None => 0,
            })
            .sum();
        let rhs = rel_sum + (a(n as i64) - 1);
        rows.push(VinbergRow {
            n,
            lhs,
            rhs,
            holds: lhs <= rhs,
        });
    }

    // series form over exact rationals
    let order = max_n;
    let int = |v: u128| Rat::from_integer((v as i64).into());
    let hb = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|n| int(a(n as i64) - a(n as i64 - 1)))
            .collect(),
    );
    let hx = TruncatedSeries::monomial(int(x_count), 1, order);
    let hr = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|n| {
                int(degrees
                    .iter()
                    .filter(|d| **d == Some(n as u32))
                    .count() as u128)
            })
            .collect(),
    );
    let geom = TruncatedSeries::one(order)
        .sub(&TruncatedSeries::monomial(Rat::one(), 1, order))
        .inverse()
        .expect("1 - t is invertible");
    let lhs_series = TruncatedSeries::one(order)
        .sub(&hx)
        .add(&hr)
        .mul(&hb)
        .mul(&geom);
    let series_holds = lhs_series.succeq(&geom);

    let all_hold = series_holds && rows.iter().all(|r| r.holds);
    Ok(VinbergReport {
        degrees,
        filtration,
        rows,
        series_holds,
        all_hold,
    })
}

/// Evaluates 1 - hX(e) + hR(e) exactly at each grid point in (0,1) and
/// returns the first point where the value is negative, if any. A negative
/// value rules out a polynomial Hilbert series.
pub fn negative_value_test(
    hx: &TruncatedSeries,
    hr: &TruncatedSeries,
    grid: &[Rat],
) -> Result<Option<Rat>, Error> {
    for eps in grid {
        if !eps.is_positive() || eps >= &Rat::one() {
            return Err(Error::GridPoint(crate::scalar::format_rat(eps)));
        }
    }
    let eval = |s: &TruncatedSeries, at: &Rat| -> Rat {
        // Horner over the coefficient slice
        s.coeffs()
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c)
    };
    for eps in grid {
        let value = Rat::one() - eval(hx, eps) + eval(hr, eps);
        if value.is_negative() {
            return Ok(Some(eps.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::table::{cyclic_table, klein_four_table};
    use crate::scalar::{rat, rat_int};

    #[test]
    fn parses_presentations() {
        let p = GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel 2 x*y^-1*x^2\nrel 3 1\n")
            .unwrap();
        assert_eq!(p.generators, vec!["x", "y"]);
        assert_eq!(p.relators.len(), 3);
        assert_eq!(p.relators[0].assigned_degree, None);
        assert_eq!(p.relators[1].assigned_degree, Some(2));
        assert_eq!(p.relators[1].word.format(&p.generators), "x*y^-1*x^2");
        assert!(p.relators[2].word.is_empty());
        assert_eq!(p.relators[2].assigned_degree, Some(3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(GroupPresentation::parse("gen x\nrel x*q").is_err());
        assert!(GroupPresentation::parse("gen x\nrel x^0").is_err());
        assert!(GroupPresentation::parse("frob x").is_err());
        assert!(GroupPresentation::parse("gen x\ngen x").is_err());
    }

    #[test]
    fn exponent_matrix_of_klein_presentation() {
        let p = GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel y^2\nrel x*y*x*y").unwrap();
        assert_eq!(
            p.exponent_matrix(),
            vec![vec![2, 0], vec![0, 2], vec![2, 2]]
        );
    }

    #[test]
    fn relator_degrees_via_valuation() {
        let p = GroupPresentation::parse("gen x\nrel x^3").unwrap();
        assert_eq!(p.relator_degrees(3, 6).unwrap(), vec![Some(3)]);
        // over GF(2) the valuation of x^3 - 1 is 1
        assert_eq!(p.relator_degrees(2, 6).unwrap(), vec![Some(1)]);

        let trivial = GroupPresentation::parse("gen x\nrel 1").unwrap();
        assert!(matches!(
            trivial.relator_degrees(2, 6),
            Err(Error::DegreeUnavailable(_))
        ));
        let annotated = GroupPresentation::parse("gen x\nrel 4 1").unwrap();
        assert_eq!(annotated.relator_degrees(2, 6).unwrap(), vec![Some(4)]);
    }

    #[test]
    fn vinberg_for_z3() {
        let p = GroupPresentation::parse("gen x\nrel x^3").unwrap();
        let g = cyclic_table(3, "x");
        let rep = vinberg_check(&p, &g, 3, 6).unwrap();
        assert_eq!(rep.degrees, vec![Some(3)]);
        assert_eq!(rep.filtration, vec![1, 2, 3, 3, 3, 3, 3]);
        // at n = 3: 1 * a_2 = 3 <= a_0 + (a_3 - 1) = 1 + 2
        let row = rep.rows[3];
        assert_eq!((row.lhs, row.rhs), (3, 3));
        assert!(rep.all_hold);
    }

    #[test]
    fn vinberg_for_klein_four() {
        let p = GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel y^2\nrel x*y*x*y").unwrap();
        let g = klein_four_table();
        let rep = vinberg_check(&p, &g, 2, 6).unwrap();
        assert_eq!(rep.degrees, vec![Some(2), Some(2), Some(2)]);
        assert!(rep.all_hold);
        assert!(rep.series_holds);
    }

    #[test]
    fn negative_value_scan() {
        // hX = 4t, hR = 5t^2 at 1/2: 1 - 2 + 5/4 = 1/4, no witness
        let hx = TruncatedSeries::monomial(rat_int(4), 1, 4);
        let hr5 = TruncatedSeries::monomial(rat_int(5), 2, 4);
        assert_eq!(
            negative_value_test(&hx, &hr5, &[rat(1, 2)]).unwrap(),
            None
        );
        // hR = 3t^2 at 1/2: 1 - 2 + 3/4 = -1/4, witness
        let hr3 = TruncatedSeries::monomial(rat_int(3), 2, 4);
        assert_eq!(
            negative_value_test(&hx, &hr3, &[rat(1, 2)]).unwrap(),
            Some(rat(1, 2))
        );
        // hX = 0: always positive
        let zero = TruncatedSeries::zero(4);
        assert_eq!(
            negative_value_test(&zero, &hr3, &[rat(1, 2), rat(3, 4)]).unwrap(),
            None
        );
        // grid points must lie strictly inside (0,1)
        assert!(negative_value_test(&hx, &hr3, &[rat_int(1)]).is_err());
        assert!(negative_value_test(&hx, &hr3, &[rat_int(0)]).is_err());
    }
}
