//! Graded dimensions against independent brute-force and counting oracles.

mod common;

use common::{binomial, count_multisets, naive_dimension};
use gs_forge_core::corpus::{corpus_fields, random_presentation, random_relation, CorpusParams};
use gs_forge_core::dims::GradedAlgebra;
use gs_forge_core::presentation::Presentation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Presentation of the polynomial ring on k degree-one variables.
fn commutative_presentation(k: usize) -> Presentation {
    let mut text = String::from("field q\n");
    for i in 0..k {
        text.push_str(&format!("gen x{i} 1\n"));
    }
    for i in 0..k {
        for j in (i + 1)..k {
            text.push_str(&format!("rel 2 x{i}*x{j} - x{j}*x{i}\n"));
        }
    }
    Presentation::parse(&text).unwrap()
}

#[test]
fn commutative_oracle_two_and_three_variables() {
    for k in [2usize, 3] {
        let alg = GradedAlgebra::new(commutative_presentation(k));
        let dims = alg.dims_up_to(8);
        for (n, &b) in dims.iter().enumerate() {
            let expect = binomial((n + k - 1) as u64, (k - 1) as u64);
            assert_eq!(b, expect, "k={k} n={n}");
            assert_eq!(b, count_multisets(k, n as u32), "enumeration k={k} n={n}");
        }
    }
}

#[test]
fn free_algebra_closed_form() {
    for k in 1..=3u32 {
        let mut text = String::from("field gf 7\n");
        for i in 0..k {
            text.push_str(&format!("gen x{i} 1\n"));
        }
        let alg = GradedAlgebra::new(Presentation::parse(&text).unwrap());
        for n in 0..=6u32 {
            assert_eq!(alg.dimension(n as i64), (k as u64).pow(n));
        }
    }
}

#[test]
fn squares_over_gf2_brute_force() {
    let pres =
        Presentation::parse("field gf 2\ngen x 1\ngen y 1\nrel 2 x^2\nrel 2 y^2").unwrap();
    let alg = GradedAlgebra::new(pres.clone());
    for n in 0..=6u32 {
        assert_eq!(alg.dimension(n as i64), naive_dimension(&pres, n), "n={n}");
    }
    // frozen: only the two alternating words survive in degree 5
    assert_eq!(alg.dimension(5), 2);
}

#[test]
fn random_presentations_match_the_dense_oracle() {
    let params = CorpusParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1a5);
    for i in 0..24 {
        let field = corpus_fields()[i % 3];
        let pres = random_presentation(&mut rng, field, &params);
        let alg = GradedAlgebra::new(pres.clone());
        for n in 0..=5u32 {
            assert_eq!(
                alg.dimension(n as i64),
                naive_dimension(&pres, n),
                "case {i}, degree {n}, presentation:\n{pres}"
            );
        }
    }
}

#[test]
fn adding_a_relation_never_increases_dimensions() {
    let params = CorpusParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xadd);
    for i in 0..20 {
        let field = corpus_fields()[i % 3];
        let base = random_presentation(&mut rng, field, &params);
        let extra = random_relation(&mut rng, field, &base.generators, &params);
        let mut relations = base.relations.clone();
        relations.push(extra);
        let larger = Presentation::new(field, base.generators.clone(), relations).unwrap();
        let before = GradedAlgebra::new(base.clone()).dims_up_to(6);
        let after = GradedAlgebra::new(larger).dims_up_to(6);
        for n in 0..=6 {
            assert!(
                after[n] <= before[n],
                "degree {n} grew: {} -> {} for\n{base}",
                before[n],
                after[n]
            );
        }
    }
}

#[test]
fn mixed_generator_degrees_match_the_oracle() {
    let pres = Presentation::parse(
        "field q\ngen x 1\ngen y 2\nrel 3 x*y - y*x\nrel 4 x^4 - y^2",
    )
    .unwrap();
    let alg = GradedAlgebra::new(pres.clone());
    for n in 0..=7u32 {
        assert_eq!(alg.dimension(n as i64), naive_dimension(&pres, n), "n={n}");
    }
}

#[test]
fn dimensions_are_independent_of_field_for_commutators() {
    // the commutator span has the same rank over every field
    for field in ["q", "gf 2", "gf 7"] {
        let text = format!("field {field}\ngen x 1\ngen y 1\nrel 2 x*y - y*x");
        let alg = GradedAlgebra::new(Presentation::parse(&text).unwrap());
        assert_eq!(alg.dims_up_to(6), vec![1, 2, 3, 4, 5, 6, 7]);
    }
}
