//! Randomized verification of the boundary-map slices: the composite
//! vanishes, the middle homology is zero, the map onto the top component is
//! surjective away from degree 0, the Euler identity holds, and the
//! generator/relation inequality never fails.

use gs_forge_core::corpus::{corpus_fields, random_presentation, CorpusParams};
use gs_forge_core::dims::GradedAlgebra;
use gs_forge_core::koszul::{
    check_exactness, check_gs_inequality, euler_identity, koszul_up_to,
};
use gs_forge_core::par;
use gs_forge_core::series::gs_series_check;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MAX_DEGREE: u32 = 8;

#[test]
fn randomized_suite_of_fifty_presentations() {
    let params = CorpusParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6051);
    let presentations: Vec<_> = (0..51)
        .map(|i| random_presentation(&mut rng, corpus_fields()[i % 3], &params))
        .collect();

    let failures: Vec<String> = par::map_range(presentations.len(), |i| {
        let pres = &presentations[i];
        let alg = GradedAlgebra::new(pres.clone());
        let mut problems = Vec::new();
        for data in koszul_up_to(&alg, MAX_DEGREE) {
            let n = data.degree;
            if !data.composite_is_zero {
                problems.push(format!("M1*M2 != 0 at degree {n}"));
            }
            let ex = check_exactness(&data);
            if !ex.holds {
                problems.push(format!(
                    "exactness at degree {n}: rank(M2)={} nullity(M1)={} rank(M1)={} b_n={}",
                    ex.rank_m2, ex.nullity_m1, ex.rank_m1, data.b_n
                ));
            }
            let eu = euler_identity(&alg, &data);
            if !eu.holds {
                problems.push(format!(
                    "euler at degree {n}: value {} expected {}",
                    eu.value, eu.expected
                ));
            }
            let gs = check_gs_inequality(&alg, n);
            if !gs.holds {
                problems.push(format!(
                    "inequality at degree {n}: lhs {} > rhs {}",
                    gs.lhs, gs.rhs
                ));
            }
        }
        if problems.is_empty() {
            String::new()
        } else {
            format!("presentation {i}:\n{pres}\n  {}", problems.join("\n  "))
        }
    })
    .into_iter()
    .filter(|s| !s.is_empty())
    .collect();

    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn series_slack_equals_kernel_dimensions() {
    // coefficient n of (1 - h(X) + h(R)) H(B) - 1 is the degree-n nullity
    // of the second boundary map
    let params = CorpusParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1e);
    for i in 0..9 {
        let pres = random_presentation(&mut rng, corpus_fields()[i % 3], &params);
        let alg = GradedAlgebra::new(pres.clone());
        let max = 6u32;
        let cert = gs_series_check(&alg, max);
        assert!(cert.certified(), "series inequality violated for\n{pres}");
        let slices = koszul_up_to(&alg, max);
        for n in 0..=max as usize {
            let expected = gs_forge_core::scalar::rat_int(slices[n].nullity_m2() as i64);
            assert_eq!(
                cert.witness.coeff(n),
                expected,
                "slack coefficient {n} for\n{pres}"
            );
        }
    }
}
