//! Words in noncommuting generators, ordered by degree then left-to-right
//! lexicographically (deglex, generator order = declaration order).

use std::cmp::Ordering;
use std::fmt::Write as _;

/// A named generator with a positive degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Generator {
        assert!(degree >= 1, "generator degree must be positive");
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// A word in the free monoid on the generators. Letters are generator
/// indices; the total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<u32>,
    degree: u32,
}

impl Word {
    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
            degree: 0,
        }
    }

    pub fn from_letters(letters: Vec<u32>, gens: &[Generator]) -> Word {
        let degree = letters.iter().map(|&i| gens[i as usize].degree).sum();
        Word { letters, degree }
    }

    pub fn single(i: u32, gens: &[Generator]) -> Word {
        Word {
            letters: vec![i],
            degree: gens[i as usize].degree,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            degree: self.degree + other.degree,
        }
    }

    pub fn append_letter(&self, i: u32, gens: &[Generator]) -> Word {
        let mut letters = self.letters.clone();
        letters.push(i);
        Word {
            letters,
            degree: self.degree + gens[i as usize].degree,
        }
    }

    /// Splits off the last letter: `(prefix, last)`. `None` for the empty word.
    pub fn split_last(&self, gens: &[Generator]) -> Option<(Word, u32)> {
        let (&last, prefix) = self.letters.split_last()?;
        Some((
            Word {
                letters: prefix.to_vec(),
                degree: self.degree - gens[last as usize].degree,
            },
            last,
        ))
    }

    /// Renders as in the presentation grammar: letters joined by `*`,
    /// consecutive repeats contracted to powers. The empty word prints as `1`.
    pub fn format(&self, gens: &[Generator]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == g {
                run += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if run == 1 {
                out.push_str(&gens[g as usize].name);
            } else {
                let _ = write!(out, "{}^{}", gens[g as usize].name, run);
            }
            i += run;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
