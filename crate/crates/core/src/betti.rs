//! Graded Betti tables with the derived invariants: total Betti numbers,
//! regularity and projective dimension.

use std::collections::BTreeMap;
use std::fmt;

/// Whether a table describes a minimal free resolution of the ideal itself
/// or of the quotient ring by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Ideal,
    Quotient,
}

/// Finitely many nonzero graded Betti numbers β_{i,j}, keyed by
/// (homological degree, internal degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    kind: ModuleKind,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(kind: ModuleKind) -> Self {
        BettiTable {
            kind,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        kind: ModuleKind,
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Self {
        let mut t = BettiTable::new(kind);
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// β_i = Σ_j β_{i,j}, indexed 0..=pd.
    pub fn total_betti(&self) -> Vec<u64> {
        let pd = self.projective_dimension();
        let mut totals = vec![0u64; pd + 1];
        for (&(i, _), &v) in &self.entries {
            totals[i] += v;
        }
        totals
    }

    /// max { j − i : β_{i,j} ≠ 0 }.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    /// max { i : β_{i,j} ≠ 0 for some j }.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Reindex a quotient table to the ideal it resolves:
    /// β_{i,j}(I) = β_{i+1,j}(S/I), dropping the rank-one degree-zero head.
    pub fn quotient_to_ideal(&self) -> BettiTable {
        assert_eq!(self.kind, ModuleKind::Quotient);
        let entries = self
            .entries
            .iter()
            .filter(|(&(i, _), _)| i >= 1)
            .map(|(&(i, j), &v)| ((i - 1, j), v));
        BettiTable::from_entries(ModuleKind::Ideal, entries)
    }

    /// All generators in one degree and the resolution stays within the
    /// linear strand: reg equals the common generator degree.
    pub fn has_linear_resolution(&self) -> bool {
        assert_eq!(self.kind, ModuleKind::Ideal);
        let gen_degrees: Vec<usize> = self
            .entries
            .keys()
            .filter(|&&(i, _)| i == 0)
            .map(|&(_, j)| j)
            .collect();
        match gen_degrees.as_slice() {
            [d] => self.regularity() == *d as i64,
            _ => false,
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModuleKind::Ideal => writeln!(f, "betti (ideal)")?,
            ModuleKind::Quotient => writeln!(f, "betti (quotient)")?,
        }
        for (i, j, v) in self.entries() {
            writeln!(f, "  b[{i},{j}] = {v}")?;
        }
        write!(
            f,
            "  reg = {}, pd = {}",
            self.regularity(),
            self.projective_dimension()
        )
    }
}
