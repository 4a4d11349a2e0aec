//! Multiplicity vectors for the expansion functor and the naming scheme
//! of the expanded vertex set.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("multiplicity vector has a zero entry at position {0}")]
    ZeroEntry(usize),
    #[error("multiplicity vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("expanded vertex set would have {0} vertices, more than the supported {max}", max = crate::face::MAX_VERTICES)]
    TooManyVertices(usize),
}

/// One positive multiplicity per vertex of the target object.
///
/// Entry `i` says how many copies vertex `i` is replaced by. Zero entries are
/// rejected at construction: the expansion is undefined for them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionVector(Vec<u32>);

impl ExpansionVector {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self, ExpansionError> {
        if let Some(i) = multiplicities.iter().position(|&s| s == 0) {
            return Err(ExpansionError::ZeroEntry(i));
        }
        let total: usize = multiplicities.iter().map(|&s| s as usize).sum();
        if total > crate::face::MAX_VERTICES {
            return Err(ExpansionError::TooManyVertices(total));
        }
        Ok(ExpansionVector(multiplicities))
    }

    /// The identity expansion (every multiplicity 1).
    pub fn ones(n: usize) -> Self {
        ExpansionVector(vec![1; n])
    }

    /// All ones except a 2 at `bump`.
    pub fn ones_plus_delta(n: usize, bump: usize) -> Self {
        let mut v = vec![1; n];
        v[bump] = 2;
        ExpansionVector(v)
    }

    /// This vector with entry `bump` incremented.
    pub fn plus_delta(&self, bump: usize) -> Result<Self, ExpansionError> {
        let mut v = self.0.clone();
        v[bump] += 1;
        ExpansionVector::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }

    /// Size of the expanded vertex set.
    pub fn expanded_len(&self) -> usize {
        self.0.iter().map(|&s| s as usize).sum()
    }

    /// Start index of each vertex's copy block in the expanded table
    /// (base-major, copy-minor layout), with the total appended.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.0.len() + 1);
        let mut acc = 0usize;
        for &s in &self.0 {
            offs.push(acc);
            acc += s as usize;
        }
        offs.push(acc);
        offs
    }

    /// Expanded index of copy `copy` (1-based) of base vertex `base`.
    pub fn expanded_index(&self, base: usize, copy: u32) -> usize {
        debug_assert!(copy >= 1 && copy <= self.0[base]);
        self.0[..base].iter().map(|&s| s as usize).sum::<usize>() + copy as usize - 1
    }

    /// Names of the expanded vertex set: copy `j` of `x` is `x_j`.
    pub fn expanded_names(&self, base_names: &[String]) -> Vec<String> {
        debug_assert_eq!(base_names.len(), self.0.len());
        let mut names = Vec::with_capacity(self.expanded_len());
        for (name, &s) in base_names.iter().zip(&self.0) {
            for j in 1..=s {
                names.push(format!("{name}_{j}"));
            }
        }
        names
    }

    pub fn check_len(&self, expected: usize) -> Result<(), ExpansionError> {
        if self.0.len() == expected {
            Ok(())
        } else {
            Err(ExpansionError::LengthMismatch {
                expected,
                got: self.0.len(),
            })
        }
    }
}

/// Map an expanded vertex index back to (base vertex, 1-based copy).
pub fn base_of(offsets: &[usize], expanded: usize) -> (usize, u32) {
    // offsets is ascending with the total appended; find the block
    let base = match offsets.binary_search(&expanded) {
        Ok(mut i) => {
            // lands on a block start; empty blocks cannot occur (entries >= 1)
            while offsets[i + 1] == offsets[i] {
                i += 1;
            }
            i
        }
        Err(i) => i - 1,
    };
    (base, (expanded - offsets[base] + 1) as u32)
}
