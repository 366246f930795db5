//! Test-only oracles, written independently of the library's linear
//! algebra: dense elimination, direct word enumeration, counting formulas.
#![allow(dead_code)] // each test binary uses a different subset

use gs_forge_core::presentation::Presentation;
use gs_forge_core::scalar::{Field, Rat, Scalar};
use num_traits::Zero;
use std::collections::HashMap;

/// All words over generator indices with the given letter degrees summing
/// to `target`, as plain index vectors.
pub fn all_words_of_degree(degrees: &[u32], target: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0u32)];
    while let Some((word, total)) = stack.pop() {
        if total == target {
            out.push(word);
            continue;
        }
        for (i, &d) in degrees.iter().enumerate() {
            if total + d <= target {
                let mut next = word.clone();
                next.push(i);
                stack.push((next, total + d));
            }
        }
    }
    out.sort();
    out
}

/// Rank by dense Gauss elimination over the rationals.
pub fn rank_dense_q(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][c].clone().recip();
        for j in c..cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..cols {
                    let s = &f * &m[rank][j];
                    m[r][j] = &m[r][j] - s;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid, intentionally different from the library's powmod
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(p as i128) as u64
}

/// Rank by dense Gauss elimination over GF(p).
pub fn rank_dense_fp(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][c] % p != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = inv_mod(m[rank][c], p);
        for j in c..cols {
            m[rank][j] = mulp(m[rank][j], inv);
        }
        for r in 0..rows {
            if r != rank && m[r][c] % p != 0 {
                let f = m[r][c];
                for j in c..cols {
                    m[r][j] = (m[r][j] + p - mulp(f, m[rank][j]) % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Brute-force graded dimension: enumerate the degree-n words, span all
/// u*r*v products densely, and subtract the rank.
pub fn naive_dimension(pres: &Presentation, n: u32) -> u64 {
    let degrees: Vec<u32> = pres.generators.iter().map(|g| g.degree).collect();
    let words = all_words_of_degree(&degrees, n);
    let index: HashMap<Vec<usize>, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();

    let mut rows_q: Vec<Vec<Rat>> = Vec::new();
    let mut rows_fp: Vec<Vec<u64>> = Vec::new();
    for rel in &pres.relations {
        if rel.poly.is_zero() || rel.degree > n {
            continue;
        }
        for du in 0..=(n - rel.degree) {
            let dv = n - rel.degree - du;
            for u in all_words_of_degree(&degrees, du) {
                for v in all_words_of_degree(&degrees, dv) {
                    match pres.field {
                        Field::Rational => {
                            let mut row = vec![Rat::zero(); words.len()];
                            for (w, c) in rel.poly.terms() {
                                let mut full = u.clone();
                                full.extend(w.letters().iter().map(|&l| l as usize));
                                full.extend(v.iter().copied());
                                let Scalar::Rat(r) = c else { unreachable!() };
                                row[index[&full]] = &row[index[&full]] + r;
                            }
                            rows_q.push(row);
                        }
                        Field::Prime(p) => {
                            let mut row = vec![0u64; words.len()];
                            for (w, c) in rel.poly.terms() {
                                let mut full = u.clone();
                                full.extend(w.letters().iter().map(|&l| l as usize));
                                full.extend(v.iter().copied());
                                let Scalar::Fp { val, .. } = c else { unreachable!() };
                                row[index[&full]] = (row[index[&full]] + val) % p;
                            }
                            rows_fp.push(row);
                        }
                    }
                }
            }
        }
    }
    let rank = match pres.field {
        Field::Rational => rank_dense_q(rows_q),
        Field::Prime(p) => rank_dense_fp(rows_fp, p),
    };
    (words.len() - rank) as u64
}

/// Binomial coefficient as u64; panics on overflow at test scales.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits u64")
}

/// Number of commutative monomials of total degree n in k variables,
/// counted by direct enumeration rather than a closed form.
pub fn count_multisets(k: usize, n: u32) -> u64 {
    fn rec(k: usize, n: u32) -> u64 {
        if k == 1 {
            return 1;
        }
        (0..=n).map(|first| rec(k - 1, n - first)).sum()
    }
    if k == 0 {
        return u64::from(n == 0);
    }
    rec(k, n)
}
