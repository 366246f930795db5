//! Finite groups given by multiplication tables, and the dimension
//! filtration of their group algebras by powers of the augmentation ideal.
//!
//! The `.gtab` format: `order m`, then m rows of m element indices
//! (row g, column h holds g*h), then `id <index>`, then `gen <name> <index>`
//! lines. `#` starts a comment.

use crate::error::Error;
use crate::linalg::{RowSpace, SparseVec};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    pub order: usize,
    table: Vec<Vec<usize>>,
    pub identity: usize,
    /// Designated generators: (name, element index).
    pub generators: Vec<(String, usize)>,
}

impl FiniteGroupTable {
    pub fn new(
        table: Vec<Vec<usize>>,
        identity: usize,
        generators: Vec<(String, usize)>,
    ) -> Result<FiniteGroupTable, Error> {
        let m = table.len();
        if m == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidTable(format!("row {g} has length {}", row.len())));
            }
            if row.iter().any(|&e| e >= m) {
                return Err(Error::InvalidTable(format!("row {g} has an out-of-range entry")));
            }
        }
        if identity >= m {
            return Err(Error::InvalidTable("identity index out of range".into()));
        }
        for g in 0..m {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(Error::InvalidTable(format!("index {identity} is not an identity")));
            }
        }
        // rows and columns must be permutations; every element needs a
        // two-sided inverse
        for g in 0..m {
            let mut seen_row = vec![false; m];
            let mut seen_col = vec![false; m];
            for h in 0..m {
                seen_row[table[g][h]] = true;
                seen_col[table[h][g]] = true;
            }
            if seen_row.iter().any(|&s| !s) || seen_col.iter().any(|&s| !s) {
                return Err(Error::InvalidTable(format!(
                    "element {g} does not act by permutations"
                )));
            }
            let right = (0..m).find(|&h| table[g][h] == identity).unwrap();
            if table[right][g] != identity {
                return Err(Error::InvalidTable(format!("element {g} has no two-sided inverse")));
            }
        }
        // associativity: exhaustive up to order 64, deterministic sample above
        if m <= 64 {
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % m as u64) as usize
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        for (i, (name, idx)) in generators.iter().enumerate() {
            if *idx >= m {
                return Err(Error::InvalidTable(format!(
                    "generator {name} index {idx} out of range"
                )));
            }
            if generators[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::InvalidTable(format!("duplicate generator name {name}")));
            }
        }
        Ok(FiniteGroupTable {
            order: m,
            table,
            identity,
            generators,
        })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn parse(text: &str) -> Result<FiniteGroupTable, Error> {
        let mut lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                lines.push((lineno + 1, trimmed.to_string()));
            }
        }
        let mut it = lines.into_iter();

        let (lineno, first) = it
            .next()
            .ok_or_else(|| Error::parse(1, 1, "empty group table file"))?;
        let order: usize = first
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::parse(lineno, 1, "expected `order <m>`"))?;

        let mut table = Vec::with_capacity(order);
        for _ in 0..order {
            let (lineno, line) = it
                .next()
                .ok_or_else(|| Error::parse(lineno, 1, "missing table rows"))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::parse(lineno, 1, "expected element indices"))?;
            if row.len() != order {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("expected {order} entries, found {}", row.len()),
                ));
            }
            table.push(row);
        }

        let mut identity = None;
        let mut generators = Vec::new();
        for (lineno, line) in it {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("id") => {
                    let idx: usize = toks
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::parse(lineno, 1, "expected `id <index>`"))?;
                    identity = Some(idx);
                }
                Some("gen") => {
                    let name = toks
                        .next()
                        .ok_or_else(|| Error::parse(lineno, 1, "expected a generator name"))?;
                    let idx: usize = toks
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::parse(lineno, 1, "expected an element index"))?;
                    generators.push((name.to_string(), idx));
                }
                Some(other) => {
                    return Err(Error::parse(
                        lineno,
                        1,
                        format!("unknown directive `{other}`"),
                    ))
                }
                None => {}
            }
        }
        let identity =
            identity.ok_or_else(|| Error::parse(1, 1, "missing `id <index>` line"))?;
        FiniteGroupTable::new(table, identity, generators)
    }
}

/// Dimensions a_n of the group algebra over GF(p) modulo successive powers
/// of the augmentation ideal: a_n = |G| - dim b^(n+1), for n = 0..=max_n.
///
/// The ideal is spanned by all g - 1; each next power is spanned by the
/// products of a basis with those spanning vectors. Powers are decreasing,
/// so the iteration stops early once the dimension stabilizes.
pub fn filtration_dims(
    group: &FiniteGroupTable,
    p: u64,
    max_n: usize,
) -> Result<Vec<u64>, Error> {
    let field = Field::prime(p)?;
    let m = group.order;
    let one = field.one();

    // b^1 = span{ g - 1 : g != e }
    let mut power = RowSpace::new();
    for g in 0..m {
        if g == group.identity {
            continue;
        }
        power.insert(SparseVec::from_entries([
            (g as u32, one.clone()),
            (group.identity as u32, one.neg()),
        ]));
    }

    let mut dims = Vec::with_capacity(max_n + 1);
    dims.push((m - power.rank()) as u64);

    for _ in 1..=max_n {
        let prev_rank = power.rank();
        if prev_rank == 0 {
            dims.push(m as u64);
            continue;
        }
        let mut next = RowSpace::new();
        for row in power.rows_by_pivot() {
            for g in 0..m {
                if g == group.identity {
                    continue;
                }
                // row * (g - 1): shift coordinates through the table
                let entries = row
                    .iter()
                    .flat_map(|(h, c)| {
                        [
                            (group.mul(*h as usize, g) as u32, c.clone()),
                            (*h, c.neg()),
                        ]
                    })
                    .collect::<Vec<_>>();
                if next.rank() == prev_rank {
                    break;
                }
                next.insert(SparseVec::from_entries(entries));
            }
            if next.rank() == prev_rank {
                break;
            }
        }
        power = next;
        dims.push((m - power.rank()) as u64);
    }
    Ok(dims)
}

/// Builds the cyclic group Z/m as a table.
pub fn cyclic_table(m: usize, gen_name: &str) -> FiniteGroupTable {
    let table = (0..m)
        .map(|a| (0..m).map(|b| (a + b) % m).collect())
        .collect();
    let generators = if m > 1 {
        vec![(gen_name.to_string(), 1)]
    } else {
        Vec::new()
    };
    FiniteGroupTable::new(table, 0, generators).expect("cyclic tables are groups")
}

/// Z/2 x Z/2 with elements 0 = e, 1 = a, 2 = b, 3 = ab.
pub fn klein_four_table() -> FiniteGroupTable {
    let table = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    FiniteGroupTable::new(table, 0, vec![("a".into(), 1), ("b".into(), 2)])
        .expect("the Klein table is a group")
}

/// Dihedral group of order 8: elements r^i s^j with index i + 4j.
pub fn dihedral8_table() -> FiniteGroupTable {
    let idx = |i: usize, j: usize| i % 4 + 4 * (j % 2);
    let mut table = vec![vec![0; 8]; 8];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..4 {
                for l in 0..2 {
                    // s r^k = r^(-k) s twists the rotation exponent
                    let exp = if j == 0 { i + k } else { (i + 4) - k };
                    table[idx(i, j)][idx(k, l)] = idx(exp % 4, j + l);
                }
            }
        }
    }
    FiniteGroupTable::new(table, 0, vec![("r".into(), 1), ("s".into(), 4)])
        .expect("the dihedral table is a group")
}
