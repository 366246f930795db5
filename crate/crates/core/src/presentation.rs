//! Graded presentations and the `.alg` text format.
//!
//! The format is line oriented; `#` starts a comment. The first significant
//! line selects the field (`field q` or `field gf <p>`), followed by
//! `gen <name> <degree>` lines and `rel <degree> <expr>` lines. A relation
//! expression is a signed sum of terms, each an optional integer (or `p/q`)
//! coefficient followed by a monomial of generator names joined by `*`, with
//! `^<k>` for positive powers. The literal `0` denotes the zero relation,
//! which carries only its assigned degree.

use crate::error::Error;
use crate::poly::FreePoly;
use crate::scalar::{Field, Rat, Scalar};
use crate::word::{Generator, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// A homogeneous relation together with its assigned degree. The zero
/// polynomial is admitted with an arbitrary positive degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub poly: FreePoly,
    pub degree: u32,
}

/// A finitely presented graded algebra: a field, graded generators, and a
/// list of homogeneous relations (repetitions allowed and significant).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    pub field: Field,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Validates the structural invariants: unique generator names, positive
    /// degrees, homogeneous relations with zero constant term.
    pub fn new(
        field: Field,
        generators: Vec<Generator>,
        relations: Vec<Relation>,
    ) -> Result<Presentation, Error> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree < 1 {
                return Err(Error::ParamOutOfRange(format!(
                    "generator {} has degree 0",
                    g.name
                )));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::ParamOutOfRange(format!(
                    "duplicate generator name {}",
                    g.name
                )));
            }
        }
        for r in &relations {
            if r.degree < 1 {
                return Err(Error::ParamOutOfRange(
                    "relation degree must be positive".into(),
                ));
            }
            if r.poly.field() != field {
                return Err(Error::FieldMismatch(field, r.poly.field()));
            }
            if !r.poly.constant_term().is_zero() {
                return Err(Error::ConstantTerm);
            }
            if !r.poly.is_zero() {
                match r.poly.homogeneous_degree() {
                    Some(d) if d == r.degree => {}
                    Some(d) => {
                        return Err(Error::NonHomogeneous {
                            assigned: r.degree,
                            found: d,
                        })
                    }
                    None => {
                        let found = r.poly.max_degree();
                        return Err(Error::NonHomogeneous {
                            assigned: r.degree,
                            found,
                        });
                    }
                }
            }
        }
        Ok(Presentation {
            field,
            generators,
            relations,
        })
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as u32)
    }

    /// Number of generators of degree `n`.
    pub fn gen_count(&self, n: u32) -> u64 {
        self.generators.iter().filter(|g| g.degree == n).count() as u64
    }

    /// Number of relations of assigned degree `n`.
    pub fn rel_count(&self, n: u32) -> u64 {
        self.relations.iter().filter(|r| r.degree == n).count() as u64
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    pub fn max_rel_degree(&self) -> u32 {
        self.relations.iter().map(|r| r.degree).max().unwrap_or(0)
    }

    /// Parses the `.alg` format.
    pub fn parse(text: &str) -> Result<Presentation, Error> {
        let mut field: Option<Field> = None;
        let mut generators: Vec<Generator> = Vec::new();
        let mut relations: Vec<(u32, RawExpr, usize)> = Vec::new();

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
            let mut words = trimmed.split_whitespace();
            let keyword = words.next().unwrap();
            match keyword {
                "field" => {
                    if field.is_some() {
                        return Err(Error::parse(lineno, 1, "duplicate field line"));
                    }
                    let kind = words
                        .next()
                        .ok_or_else(|| Error::parse(lineno, 1, "expected `q` or `gf <p>`"))?;
                    field = Some(match kind {
                        "q" => Field::Rational,
                        "gf" => {
                            let p: u64 = words
                                .next()
                                .and_then(|s| s.parse().ok())
                                .ok_or_else(|| Error::parse(lineno, 1, "expected a modulus"))?;
                            Field::prime(p)?
                        }
                        other => {
                            return Err(Error::parse(
                                lineno,
                                1,
                                format!("unknown field `{other}`"),
                            ))
                        }
                    });
                    if words.next().is_some() {
                        return Err(Error::parse(lineno, 1, "trailing tokens after field"));
                    }
                }
                "gen" => {
                    if field.is_none() {
                        return Err(Error::parse(lineno, 1, "field line must come first"));
                    }
                    let name = words
                        .next()
                        .ok_or_else(|| Error::parse(lineno, 1, "expected generator name"))?;
                    let degree: u32 = words
                        .next()
                        .and_then(|s| s.parse().ok())
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| Error::parse(lineno, 1, "expected a positive degree"))?;
                    if words.next().is_some() {
                        return Err(Error::parse(lineno, 1, "trailing tokens after generator"));
                    }
                    if !is_identifier(name) {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("invalid generator name `{name}`"),
                        ));
                    }
                    if generators.iter().any(|g| g.name == name) {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("duplicate generator name `{name}`"),
                        ));
                    }
                    generators.push(Generator::new(name, degree));
                }
                "rel" => {
                    if field.is_none() {
                        return Err(Error::parse(lineno, 1, "field line must come first"));
                    }
                    let degree_tok = words
                        .next()
                        .ok_or_else(|| Error::parse(lineno, 1, "expected a relation degree"))?;
                    let degree: u32 = degree_tok
                        .parse()
                        .ok()
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| Error::parse(lineno, 1, "expected a positive degree"))?;
                    let rest_offset = trimmed
                        .find(degree_tok)
                        .map(|i| i + degree_tok.len())
                        .unwrap_or(0);
                    let expr_text = trimmed[rest_offset..].trim();
                    if expr_text.is_empty() {
                        return Err(Error::parse(lineno, 1, "expected a relation expression"));
                    }
                    let expr = parse_expr(expr_text, lineno)?;
                    relations.push((degree, expr, lineno));
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

        let field = field.ok_or_else(|| Error::parse(1, 1, "missing field line"))?;

        let mut built = Vec::with_capacity(relations.len());
        for (degree, expr, lineno) in relations {
            let poly = expr.into_poly(field, &generators, lineno)?;
            if !poly.constant_term().is_zero() {
                return Err(Error::ConstantTerm);
            }
            built.push(Relation { poly, degree });
        }
        Presentation::new(field, generators, built)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        for g in &self.generators {
            writeln!(f, "gen {} {}", g.name, g.degree)?;
        }
        for r in &self.relations {
            writeln!(f, "rel {} {}", r.degree, r.poly.format(&self.generators))?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

// ---- relation expressions ----

#[derive(Debug)]
struct RawTerm {
    coeff: Rat,
    /// (name, power) factors in order; empty means a bare constant.
    factors: Vec<(String, u32)>,
}

#[derive(Debug)]
struct RawExpr {
    terms: Vec<RawTerm>,
}

impl RawExpr {
    fn into_poly(
        self,
        field: Field,
        gens: &[Generator],
        _lineno: usize,
    ) -> Result<FreePoly, Error> {
        let mut terms: Vec<(Word, Scalar)> = Vec::new();
        for t in self.terms {
            if t.factors.is_empty() {
                if t.coeff.is_zero() {
                    continue;
                }
                // a nonzero bare constant cannot appear in a relation
                return Err(Error::ConstantTerm);
            }
            let mut letters = Vec::new();
            for (name, power) in &t.factors {
                let idx = gens
                    .iter()
                    .position(|g| &g.name == name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                for _ in 0..*power {
                    letters.push(idx as u32);
                }
            }
            let word = Word::from_letters(letters, gens);
            let coeff = field.from_rat(&t.coeff)?;
            terms.push((word, coeff));
        }
        FreePoly::from_terms(field, terms)
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Star,
    Caret,
    Slash,
    Plus,
    Minus,
}

fn tokenize_expr(s: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, Error> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(text.parse().unwrap()), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                toks.push((Tok::Name(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(Error::parse(
                    lineno,
                    col,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    Ok(toks)
}

fn parse_expr(s: &str, lineno: usize) -> Result<RawExpr, Error> {
    let toks = tokenize_expr(s, lineno)?;
    let mut terms = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        // sign separating (or leading) the term
        let negative = match &toks[i].0 {
            Tok::Plus => {
                i += 1;
                false
            }
            Tok::Minus => {
                i += 1;
                true
            }
            _ if first => false,
            _ => {
                return Err(Error::parse(
                    lineno,
                    toks[i].1,
                    "expected `+` or `-` between terms",
                ))
            }
        };
        first = false;
        let col = toks.get(i).map(|t| t.1).unwrap_or(s.len());
        let mut coeff = Rat::from_integer(BigInt::from(1));
        let mut saw_coeff = false;
        if let Some((Tok::Int(n), _)) = toks.get(i) {
            let mut c = Rat::from_integer(n.clone());
            i += 1;
            if let Some((Tok::Slash, slash_col)) = toks.get(i) {
                let slash_col = *slash_col;
                i += 1;
                match toks.get(i) {
                    Some((Tok::Int(d), _)) if !d.is_zero() => {
                        c /= Rat::from_integer(d.clone());
                        i += 1;
                    }
                    _ => {
                        return Err(Error::parse(
                            lineno,
                            slash_col,
                            "expected a nonzero denominator",
                        ))
                    }
                }
            }
            coeff = c;
            saw_coeff = true;
            // optional `*` joining coefficient and monomial
            if let (Some((Tok::Star, _)), Some((Tok::Name(_), _))) =
                (toks.get(i), toks.get(i + 1))
            {
                i += 1;
            }
        }
        let mut factors = Vec::new();
        while let Some((Tok::Name(name), _)) = toks.get(i) {
            let name = name.clone();
            i += 1;
            let mut power = 1u32;
            if let Some((Tok::Caret, caret_col)) = toks.get(i) {
                let caret_col = *caret_col;
                i += 1;
                match toks.get(i) {
                    Some((Tok::Int(k), _)) => {
                        use num_traits::ToPrimitive;
                        power = k
                            .to_u32()
                            .filter(|&k| k >= 1)
                            .ok_or_else(|| {
                                Error::parse(lineno, caret_col, "expected a positive power")
                            })?;
                        i += 1;
                    }
                    _ => {
                        return Err(Error::parse(
                            lineno,
                            caret_col,
                            "expected a positive power",
                        ))
                    }
                }
            }
            factors.push((name, power));
            match toks.get(i) {
                Some((Tok::Star, _)) => {
                    i += 1;
                    if !matches!(toks.get(i), Some((Tok::Name(_), _))) {
                        return Err(Error::parse(
                            lineno,
                            toks.get(i).map(|t| t.1).unwrap_or(s.len()),
                            "expected a generator name after `*`",
                        ));
                    }
                }
                _ => break,
            }
        }
        if factors.is_empty() && !saw_coeff {
            return Err(Error::parse(lineno, col, "expected a term"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(RawTerm { coeff, factors });
    }
    if terms.is_empty() {
        return Err(Error::parse(lineno, 1, "empty expression"));
    }
    Ok(RawExpr { terms })
}
