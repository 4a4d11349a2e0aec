//! Vertex subsets as bitmasks, plus the set-family combinatorics
//! (antichain pruning, minimal transversals) everything else is built on.

use std::cmp::Ordering;
use std::fmt;

/// A finite set of vertex indices, stored as a 64-bit mask.
///
/// A `Face` is only meaningful relative to a vertex table; all constructors
/// that take user input validate indices against the table length. The empty
/// face is a legal value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Face(u64);

/// Hard limit imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < MAX_VERTICES);
        Face(1 << v)
    }

    /// Full vertex set {0, …, n-1}.
    pub fn full(n: usize) -> Face {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Face {
        debug_assert!(v < MAX_VERTICES);
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement relative to the n-vertex ambient set.
    pub fn complement_in(self, n: usize) -> Face {
        Face::full(n).minus(self)
    }

    /// Members in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// The unique member of a singleton, if this is one.
    pub fn sole_member(self) -> Option<usize> {
        if self.0 != 0 && self.0 & (self.0 - 1) == 0 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn min_member(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_member(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// All subsets, the empty face and `self` included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face(cur);
            if cur == full {
                done = true;
            } else {
                // enumerate submasks in increasing numeric order
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }

    /// Lexicographic comparison of the sorted member lists.
    fn lex_cmp(self, other: Face) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        while a != 0 && b != 0 {
            let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
            match x.cmp(&y) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        // a proper prefix compares smaller
        (a != 0).cmp(&(b != 0))
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Face {
        let mut f = Face::EMPTY;
        for v in iter {
            f = f.with(v);
        }
        f
    }
}

/// Canonical order: by size, then lexicographically by member indices.
/// Sorting any `Vec<Face>` with this order yields the canonical listing
/// used for structural equality throughout the crate.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Inclusion-maximal members, deduplicated and canonically sorted.
pub fn maximal_antichain(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    faces
        .iter()
        .filter(|&&f| !faces.iter().any(|&g| f != g && f.is_subset_of(g)))
        .copied()
        .collect()
}

/// Inclusion-minimal members, deduplicated and canonically sorted.
pub fn minimal_antichain(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    faces
        .iter()
        .filter(|&&f| !faces.iter().any(|&g| f != g && g.is_subset_of(f)))
        .copied()
        .collect()
}

/// All inclusion-minimal sets meeting every member of `family`.
///
/// The transversal set of the empty family is `{∅}`. Members of `family`
/// equal to the empty set admit no transversal, so the result is empty in
/// that case. Two exact strategies, chosen by input shape: a scan over all
/// subsets of the ground set when that is cheap (dense families on few
/// vertices), and otherwise the incremental crossing of one family member at
/// a time (wide ground sets with few members).
pub fn minimal_transversals(family: &[Face]) -> Vec<Face> {
    if family.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    // supersets in the family are redundant
    let family = minimal_antichain(family.to_vec());
    if family.is_empty() {
        return vec![Face::EMPTY];
    }
    let ground: Face = family.iter().fold(Face::EMPTY, |a, s| a.union(*s));
    let g = ground.len();
    if g <= 24 && (1u64 << g) * family.len() as u64 <= 32_000_000 {
        transversals_by_subset_scan(&family, ground)
    } else {
        transversals_incremental(&family)
    }
}

fn transversals_by_subset_scan(family: &[Face], ground: Face) -> Vec<Face> {
    // spread a compact counter over the ground positions
    let positions: Vec<usize> = ground.iter().collect();
    let g = positions.len();
    let mut out = Vec::new();
    'mask: for bits in 0..(1u64 << g) {
        let t: Face = positions
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        // transversal, and every member has a private set witnessing
        // minimality (a family member meeting t in that member alone)
        let mut private = Face::EMPTY;
        for s in family {
            let hit = s.intersection(t);
            if hit.is_empty() {
                continue 'mask;
            }
            if let Some(v) = hit.sole_member() {
                private = private.with(v);
            }
        }
        if private == t {
            out.push(t);
        }
    }
    out.sort_unstable();
    out
}

fn transversals_incremental(family: &[Face]) -> Vec<Face> {
    let mut transversals = vec![Face::EMPTY];
    for set in family {
        let mut next = Vec::with_capacity(transversals.len());
        for t in &transversals {
            if !t.intersection(*set).is_empty() {
                next.push(*t);
            } else {
                for v in set.iter() {
                    next.push(t.with(v));
                }
            }
        }
        transversals = minimal_antichain(next);
    }
    transversals
}
