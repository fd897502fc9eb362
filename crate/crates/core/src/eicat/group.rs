use std::path::Path;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroupTable {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    label: String,
}

impl FiniteGroupTable {
    /// The cyclic group `C_n` with `g·h = g + h mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::GroupTable("cyclic group order must be positive".into()));
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let mut g = Self::from_table(n, table)?;
        g.label = format!("C_{n}");
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("C_1 is a group")
    }

    /// Validates the group axioms exhaustively (associativity is O(n^3)).
    pub fn from_table(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::GroupTable("order must be positive".into()));
        }
        if table.len() != n * n {
            return Err(Error::GroupTable(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::GroupTable(format!("entry {bad} out of range 0..{n}")));
        }
        let at = |g: usize, h: usize| table[g * n + h];
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::GroupTable(format!("index 0 is not an identity (fails at {g})")));
            }
        }
        for g in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for h in 0..n {
                row_seen[at(g, h)] = true;
                col_seen[at(h, g)] = true;
            }
            if row_seen.contains(&false) {
                return Err(Error::GroupTable(format!("row {g} is not a permutation")));
            }
            if col_seen.contains(&false) {
                return Err(Error::GroupTable(format!("column {g} is not a permutation")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::GroupTable(format!(
                            "not associative: ({a}·{b})·{c} != {a}·({b}·{c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| at(g, h) == 0).expect("latin square has inverses"))
            .collect();
        Ok(FiniteGroupTable {
            order: n,
            table,
            inverse,
            label: format!("table({n})"),
        })
    }

    /// Parses the table file format: first line `n`, then `n` lines of `n`
    /// space-separated 0-based indices with entry `(g, h)` the index of `g·h`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty group table".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected the group order, found {first:?}"),
        })?;
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (line, row) = lines.next().ok_or(Error::Parse {
                line: line + 1,
                message: format!("expected {n} table rows"),
            })?;
            let entries: Vec<usize> = row
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line,
                    message: format!("non-integer entry in {row:?}"),
                })?;
            if entries.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} entries, found {}", entries.len()),
                });
            }
            table.extend(entries);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "trailing content after table".into(),
            });
        }
        Self::from_table(n, table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut g = Self::parse(&std::fs::read_to_string(path)?)?;
        g.label = format!("table:{}", path.display());
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Greedy generating set: each element that is not already in the
    /// subgroup generated by the earlier picks.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[0] = true;
        for g in 1..self.order {
            if reached[g] {
                continue;
            }
            gens.push(g);
            let mut frontier: Vec<usize> = (0..self.order).filter(|&x| reached[x]).collect();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    let y = self.mul(s, x);
                    if !reached[y] {
                        reached[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }
}
