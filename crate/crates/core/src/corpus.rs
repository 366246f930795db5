//! Seeded random presentations for the randomized verification suites.
//!
//! Everything is driven by a caller-supplied ChaCha stream, so corpora are
//! reproducible across runs and platforms.

use crate::poly::FreePoly;
use crate::presentation::{Presentation, Relation};
use crate::scalar::Field;
use crate::word::Generator;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Bounds for random homogeneous presentations.
#[derive(Clone, Copy, Debug)]
pub struct CorpusParams {
    pub max_generators: usize,
    pub max_generator_degree: u32,
    pub max_relations: usize,
    pub max_relation_degree: u32,
    /// Coefficients are drawn from [-coeff_bound, coeff_bound] \ {0}.
    pub coeff_bound: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_generators: 3,
            max_generator_degree: 2,
            max_relations: 4,
            max_relation_degree: 4,
            coeff_bound: 2,
        }
    }
}

/// The three coefficient fields the suites cycle through.
pub fn corpus_fields() -> [Field; 3] {
    [
        Field::prime(2).expect("2 is prime"),
        Field::prime(7).expect("7 is prime"),
        Field::Rational,
    ]
}

/// Draws a random homogeneous presentation within the given bounds.
/// Occasionally emits zero relations (with an assigned degree) to keep that
/// path exercised.
pub fn random_presentation(
    rng: &mut ChaCha8Rng,
    field: Field,
    params: &CorpusParams,
) -> Presentation {
    let gen_count = rng.gen_range(1..=params.max_generators);
    let generators: Vec<Generator> = (0..gen_count)
        .map(|i| {
            let name = ((b'a' + i as u8) as char).to_string();
            Generator::new(name, rng.gen_range(1..=params.max_generator_degree))
        })
        .collect();

    let rel_count = rng.gen_range(0..=params.max_relations);
    let relations = (0..rel_count)
        .map(|_| random_relation(rng, field, &generators, params))
        .collect();

    Presentation::new(field, generators, relations).expect("construction is valid by design")
}

/// Draws one random homogeneous relation over the given generators.
/// Occasionally emits the zero relation (with an assigned degree) to keep
/// that path exercised.
pub fn random_relation(
    rng: &mut ChaCha8Rng,
    field: Field,
    generators: &[Generator],
    params: &CorpusParams,
) -> Relation {
    let degree = rng.gen_range(1..=params.max_relation_degree);
    let pool = crate::dims::monomials_of_degree(generators, degree as i64);
    // empty pool (degree unreachable) or a small chance: zero relation
    let poly = if pool.is_empty() || rng.gen_range(0..10) == 0 {
        FreePoly::zero(field)
    } else {
        let term_count = rng.gen_range(1..=pool.len().min(4));
        let terms = (0..term_count).map(|_| {
            let word = pool[rng.gen_range(0..pool.len())].clone();
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-params.coeff_bound..=params.coeff_bound);
            }
            (word, field.from_i64(c))
        });
        FreePoly::from_terms(field, terms).expect("coefficients share the field")
    };
    Relation { poly, degree }
}
