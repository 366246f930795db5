//! Group-algebra suite: derivative identities on random words, valuation
//! cross-checks against direct span membership, filtration values for small
//! p-groups, the filtered inequality, and Smith-form oracles.

mod common;

use common::rank_dense_q;
use gs_forge_core::group::fox::{fox_derivative, fox_reconstructs, magnus_degree, MagnusDegree};
use gs_forge_core::group::presentation::{vinberg_check, GroupPresentation};
use gs_forge_core::group::snf::{abelianization_rank, smith_normal_form};
use gs_forge_core::group::table::{cyclic_table, filtration_dims};
use gs_forge_core::group::{GroupAlgebraElement, GroupWord};
use gs_forge_core::scalar::{Field, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn random_reduced_word(rng: &mut ChaCha8Rng, gens: u32, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let syllables: Vec<(u32, i64)> = (0..len)
        .map(|_| (rng.gen_range(0..gens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    GroupWord::from_syllables(&syllables)
}

#[test]
fn fox_reconstruction_on_two_hundred_random_words() {
    for field in [Field::prime(2).unwrap(), Field::Rational] {
        let mut rng = ChaCha8Rng::seed_from_u64(0xf0c5);
        for i in 0..200 {
            let gens = rng.gen_range(1..=3u32);
            let w = random_reduced_word(&mut rng, gens, 8);
            assert!(
                fox_reconstructs(field, &w, gens as usize),
                "word {i} over {field}: {w:?}"
            );
        }
    }
}

#[test]
fn fox_cocycle_rule_on_random_pairs() {
    let q = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0c);
    for _ in 0..60 {
        let u = random_reduced_word(&mut rng, 3, 6);
        let v = random_reduced_word(&mut rng, 3, 6);
        for x in 0..3u32 {
            let lhs = fox_derivative(q, &u.mul(&v), x);
            let rhs = fox_derivative(q, &u, x)
                .add(
                    &GroupAlgebraElement::from_word(q, u.clone())
                        .mul(&fox_derivative(q, &v, x))
                        .unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs, "u = {u:?}, v = {v:?}, x = {x}");
        }
    }
}

#[test]
fn commutator_derivative_exact_value() {
    let q = Field::Rational;
    let comm = GroupWord::from_syllables(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
    let d = fox_derivative(q, &comm, 0);
    let expect = GroupAlgebraElement::one(q)
        .sub(&GroupAlgebraElement::from_word(
            q,
            GroupWord::from_syllables(&[(0, 1), (1, 1), (0, -1)]),
        ))
        .unwrap();
    assert_eq!(d, expect);
}

#[test]
fn magnus_degree_of_generators_is_one() {
    let q = Field::Rational;
    for g in 0..3u32 {
        let f = GroupAlgebraElement::word_minus_one(q, GroupWord::from_syllables(&[(g, 1)]));
        assert_eq!(magnus_degree(&f, 3, 4).unwrap(), MagnusDegree::Degree(1));
    }
}

#[test]
fn magnus_degree_superadditive_on_products() {
    let q = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(0x50fe);
    let mut checked = 0;
    while checked < 30 {
        let u = random_reduced_word(&mut rng, 2, 4);
        let v = random_reduced_word(&mut rng, 2, 4);
        if u.is_empty() || v.is_empty() {
            continue;
        }
        let fu = GroupAlgebraElement::word_minus_one(q, u.clone());
        let fv = GroupAlgebraElement::word_minus_one(q, v.clone());
        let prod = fu.mul(&fv).unwrap();
        let cap = 8;
        let (MagnusDegree::Degree(du), MagnusDegree::Degree(dv)) = (
            magnus_degree(&fu, 2, cap).unwrap(),
            magnus_degree(&fv, 2, cap).unwrap(),
        ) else {
            continue;
        };
        match magnus_degree(&prod, 2, cap).unwrap() {
            MagnusDegree::Degree(d) => assert!(d >= du + dv, "{u:?} {v:?}"),
            MagnusDegree::AboveCap => assert!(cap + 1 >= du + dv),
        }
        checked += 1;
    }
}

/// All reduced words of length <= max_len over `gens` generators.
fn reduced_words_up_to(gens: u32, max_len: usize) -> Vec<GroupWord> {
    let mut by_len: Vec<Vec<GroupWord>> = vec![vec![GroupWord::identity()]];
    for l in 1..=max_len {
        let mut next = Vec::new();
        for w in &by_len[l - 1] {
            for g in 0..gens {
                for s in [1i64, -1] {
                    let cand = w.mul(&GroupWord::from_syllables(&[(g, s)]));
                    if cand.len() == l {
                        next.push(cand);
                    }
                }
            }
        }
        next.sort();
        next.dedup();
        by_len.push(next);
    }
    by_len.into_iter().flatten().collect()
}

/// Cross-check of the truncated valuation against direct membership in the
/// span of d-fold products of augmentation-ideal elements, restricted to
/// short supports. Membership in the span certifies valuation >= d; the
/// nonzero degree-d component of the expansion certifies <= d.
#[test]
fn magnus_degree_matches_span_membership_at_small_degrees() {
    let q = Field::Rational;
    let support_cap = 4usize;
    let basis = reduced_words_up_to(2, support_cap);
    let index: BTreeMap<GroupWord, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();

    let to_row = |e: &GroupAlgebraElement| -> Option<Vec<Rat>> {
        let mut row = vec![Rat::zero(); basis.len()];
        for (w, c) in e.terms() {
            let i = index.get(w)?;
            row[*i] = c.as_rat().unwrap().clone();
        }
        Some(row)
    };

    // spanning products (u_1 - 1) ... (u_d - 1) with total letter count
    // within the support cap
    let span_rows = |d: usize| -> Vec<Vec<Rat>> {
        let pieces: Vec<GroupWord> = reduced_words_up_to(2, support_cap)
            .into_iter()
            .filter(|w| !w.is_empty())
            .collect();
        let mut rows = Vec::new();
        let mut stack: Vec<(GroupAlgebraElement, usize, usize)> =
            vec![(GroupAlgebraElement::one(q), 0, 0)];
        while let Some((acc, used, depth)) = stack.pop() {
            if depth == d {
                if let Some(row) = to_row(&acc) {
                    rows.push(row);
                }
                continue;
            }
            for u in &pieces {
                if used + u.len() + (d - depth - 1) > support_cap {
                    continue;
                }
                let factor = GroupAlgebraElement::word_minus_one(q, u.clone());
                stack.push((acc.mul(&factor).unwrap(), used + u.len(), depth + 1));
            }
        }
        rows
    };

    for w in reduced_words_up_to(2, 3)
        .into_iter()
        .filter(|w| !w.is_empty())
        .chain([GroupWord::from_syllables(&[(0, 1), (1, 1), (0, -1), (1, -1)])])
    {
        let f = GroupAlgebraElement::word_minus_one(q, w.clone());
        let MagnusDegree::Degree(d) = magnus_degree(&f, 2, 6).unwrap() else {
            panic!("unexpected cap for {w:?}");
        };
        let mut rows = span_rows(d as usize);
        let base_rank = rank_dense_q(rows.clone());
        rows.push(to_row(&f).expect("short support"));
        let with_f = rank_dense_q(rows);
        assert_eq!(
            base_rank, with_f,
            "valuation {d} not certified by span membership for {w:?}"
        );
    }
}

#[test]
fn cyclic_filtrations_match_the_closed_form() {
    for p in [2u64, 3, 5] {
        let g = cyclic_table(p as usize, "x");
        let max_n = 2 * p as usize;
        let a = filtration_dims(&g, p, max_n).unwrap();
        for (n, &v) in a.iter().enumerate() {
            assert_eq!(v, (n as u64 + 1).min(p), "p={p} n={n}");
        }
    }
}

#[test]
fn power_relator_valuation_is_the_characteristic() {
    for p in [2u64, 3, 5] {
        let field = Field::prime(p).unwrap();
        let f = GroupAlgebraElement::word_minus_one(
            field,
            GroupWord::from_syllables(&[(0, p as i64)]),
        );
        assert_eq!(
            magnus_degree(&f, 1, 2 * p as u32).unwrap(),
            MagnusDegree::Degree(p as u32),
            "p={p}"
        );
    }
}

#[test]
fn vinberg_holds_for_cyclic_power_presentations() {
    for p in [2u64, 3, 5] {
        let pres = GroupPresentation::parse(&format!("gen x\nrel x^{p}")).unwrap();
        let table = cyclic_table(p as usize, "x");
        let rep = vinberg_check(&pres, &table, p, 2 * p as usize).unwrap();
        assert_eq!(rep.degrees, vec![Some(p as u32)], "p={p}");
        assert!(rep.all_hold, "p={p}");
        assert!(rep.series_holds, "p={p}");
    }
}

// ---- Smith normal form oracles ----

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i128;
    for (j, head) in m[0].iter().enumerate() {
        if *head == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * head * det(&minor);
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors by the gcd-of-minors formula: the product of the
/// first k factors is the gcd of all k-by-k minors.
fn minor_gcd_invariant_factors(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut factors = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for ri in combinations(rows, k) {
            for ci in combinations(cols, k) {
                let sub: Vec<Vec<i128>> = ri
                    .iter()
                    .map(|&r| ci.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        factors.push(g / prev);
        prev = g;
    }
    factors
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn snf_agrees_with_minor_gcds_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5afe);
    for case in 0..100 {
        let rows = rng.gen_range(1..=4usize);
        let cols = rng.gen_range(1..=4usize);
        let m: Vec<Vec<i128>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-5i128..=5)).collect())
            .collect();
        let big: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let snf = smith_normal_form(&big, cols);
        let got: Vec<i128> = snf
            .invariant_factors()
            .iter()
            .map(|d| i128::try_from(d).unwrap())
            .collect();
        let expect = minor_gcd_invariant_factors(&m, cols);
        assert_eq!(got, expect, "case {case}: {m:?}");
    }
}

#[test]
fn snf_invariant_under_random_elementary_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe1e0);
    for case in 0..100 {
        let rows = rng.gen_range(1..=4usize);
        let cols = rng.gen_range(1..=4usize);
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
                    .collect()
            })
            .collect();
        let reference = smith_normal_form(&m, cols);
        for _ in 0..12 {
            match rng.gen_range(0..6) {
                0 if rows > 1 => {
                    let (i, j) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
                    m.swap(i, j);
                }
                1 if cols > 1 => {
                    let (i, j) = (rng.gen_range(0..cols), rng.gen_range(0..cols));
                    for row in &mut m {
                        row.swap(i, j);
                    }
                }
                2 => {
                    let i = rng.gen_range(0..rows);
                    for v in &mut m[i] {
                        *v = -&*v;
                    }
                }
                3 if rows > 1 => {
                    let i = rng.gen_range(0..rows);
                    let mut j = rng.gen_range(0..rows);
                    if i == j {
                        j = (j + 1) % rows;
                    }
                    let c = BigInt::from(rng.gen_range(-3i64..=3));
                    for k in 0..cols {
                        let add = &c * &m[j][k];
                        m[i][k] += add;
                    }
                }
                4 if cols > 1 => {
                    let i = rng.gen_range(0..cols);
                    let mut j = rng.gen_range(0..cols);
                    if i == j {
                        j = (j + 1) % cols;
                    }
                    let c = BigInt::from(rng.gen_range(-3i64..=3));
                    for row in &mut m {
                        let add = &c * &row[j];
                        row[i] += add;
                    }
                }
                _ => {
                    let i = rng.gen_range(0..cols);
                    for row in &mut m {
                        row[i] = -&row[i];
                    }
                }
            }
        }
        let transformed = smith_normal_form(&m, cols);
        assert_eq!(
            reference.diagonal, transformed.diagonal,
            "case {case} drifted under unimodular operations"
        );
    }
}

#[test]
fn abelianization_examples() {
    let klein =
        GroupPresentation::parse("gen x\ngen y\nrel x^2\nrel y^2\nrel x*y*x*y").unwrap();
    let ab = abelianization_rank(&klein);
    assert_eq!(ab.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
    assert_eq!(ab.d_ab, 2);
    assert!(ab.is_finite);
}
