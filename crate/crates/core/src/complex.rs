//! Simplicial complexes as immutable values: construction from generating
//! faces, the expansion functor, complement, Alexander dual, links, deletions,
//! restrictions and pure skeletons.

use std::collections::HashSet;

use thiserror::Error;

use crate::expansion::{base_of, ExpansionError, ExpansionVector};
use crate::face::{maximal_antichain, minimal_transversals, Face, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertexName(String),
    #[error("vertex table has {0} entries, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("face member {vertex} is out of range for a table of {table} vertices")]
    FaceOutOfRange { vertex: usize, table: usize },
    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Face),
    #[error("skeleton dimension {got} outside -1..={max}")]
    SkeletonOutOfRange { got: i32, max: i32 },
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("face enumeration needs at most {limit} used vertices, complex has {got}")]
    TooLargeToEnumerate { got: usize, limit: usize },
}

/// A simplicial complex, stored as its vertex name table and the canonical
/// antichain of facets.
///
/// Three degenerate shapes are distinguished: the void complex (no facets at
/// all), the irrelevant complex (the single facet ∅, of dimension −1), and
/// complexes with isolated vertices (names present in the table but absent
/// from every facet). The facet list is sorted by size then lexicographically,
/// so structural equality is plain `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_names: Vec<String>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`: non-maximal generators are pruned
    /// and the facet list is canonically ordered. An empty generator list
    /// yields the void complex.
    pub fn from_facets<S: Into<String>>(
        names: Vec<S>,
        faces: &[Face],
    ) -> Result<Self, ComplexError> {
        let vertex_names: Vec<String> = names.into_iter().map(Into::into).collect();
        if vertex_names.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(vertex_names.len()));
        }
        let mut seen = HashSet::new();
        for n in &vertex_names {
            if !seen.insert(n.as_str()) {
                return Err(ComplexError::DuplicateVertexName(n.clone()));
            }
        }
        let table = vertex_names.len();
        for f in faces {
            if let Some(v) = f.max_member() {
                if v >= table {
                    return Err(ComplexError::FaceOutOfRange { vertex: v, table });
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_names,
            facets: maximal_antichain(faces.to_vec()),
        })
    }

    /// The void complex on the given vertex table.
    pub fn void<S: Into<String>>(names: Vec<S>) -> Result<Self, ComplexError> {
        Self::from_facets(names, &[])
    }

    /// Same facet structure over a fresh vertex table (used internally when
    /// an operation keeps the face indices but changes the names).
    fn with_facets_unchecked(vertex_names: Vec<String>, facets: Vec<Face>) -> Self {
        SimplicialComplex {
            vertex_names,
            facets: maximal_antichain(facets),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    /// A complex with exactly one facet (the irrelevant complex included).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == Face::full(self.vertex_count())
    }

    /// `None` for the void complex, `Some(-1)` for the irrelevant complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    /// Union of all facets; isolated vertices are exactly those outside it.
    pub fn used_vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => {
                let d = self.facets.last().map(|f| f.len()).unwrap_or(0);
                f0.len() == d
            }
        }
    }

    /// Face membership: some facet contains `face`.
    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Every face of the complex, the empty face included (for nonvoid
    /// complexes). Guarded against blowup on wide complexes.
    pub fn all_faces(&self) -> Result<Vec<Face>, ComplexError> {
        let used = self.used_vertices().len();
        const LIMIT: usize = 24;
        if used > LIMIT {
            return Err(ComplexError::TooLargeToEnumerate {
                got: used,
                limit: LIMIT,
            });
        }
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        Ok(faces)
    }

    /// Facet lists coincide, vertex names ignored.
    pub fn same_facets(&self, other: &SimplicialComplex) -> bool {
        self.facets == other.facets
    }

    /// The expansion: every facet is replaced by all mixed-copy selections
    /// over the expanded vertex set. The void and irrelevant complexes map to
    /// themselves (over the expanded table).
    pub fn expand(&self, alpha: &ExpansionVector) -> Result<SimplicialComplex, ComplexError> {
        alpha.check_len(self.vertex_count())?;
        let names = alpha.expanded_names(&self.vertex_names);
        let mut out: Vec<Face> = Vec::new();
        for facet in &self.facets {
            let members: Vec<usize> = facet.iter().collect();
            // odometer over the copy choice for each member
            let mut copies: Vec<u32> = vec![1; members.len()];
            'emit: loop {
                let face: Face = members
                    .iter()
                    .zip(&copies)
                    .map(|(&v, &c)| alpha.expanded_index(v, c))
                    .collect();
                out.push(face);
                for pos in (0..members.len()).rev() {
                    if copies[pos] < alpha.get(members[pos]) {
                        copies[pos] += 1;
                        for c in copies[pos + 1..].iter_mut() {
                            *c = 1;
                        }
                        continue 'emit;
                    }
                }
                break;
            }
        }
        Ok(SimplicialComplex::with_facets_unchecked(names, out))
    }

    /// The complex generated by the facet complements, taken relative to the
    /// full vertex table.
    pub fn complement(&self) -> Result<SimplicialComplex, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let n = self.vertex_count();
        let comps: Vec<Face> = self.facets.iter().map(|f| f.complement_in(n)).collect();
        Ok(SimplicialComplex::with_facets_unchecked(
            self.vertex_names.clone(),
            comps,
        ))
    }

    /// The Alexander dual: the complex whose faces are the complements of the
    /// non-faces. Facets are the complements of the minimal non-faces. The
    /// full simplex dualizes to the void complex and vice versa.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let n = self.vertex_count();
        let duals: Vec<Face> = self
            .minimal_non_faces()
            .iter()
            .map(|f| f.complement_in(n))
            .collect();
        SimplicialComplex::with_facets_unchecked(self.vertex_names.clone(), duals)
    }

    /// Inclusion-minimal subsets that are not faces. For the void complex
    /// this is `{∅}`; for the full simplex it is empty.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let n = self.vertex_count();
        // W is a non-face iff it meets the complement of every facet
        let comps: Vec<Face> = self.facets.iter().map(|f| f.complement_in(n)).collect();
        minimal_transversals(&comps)
    }

    /// link(Δ, F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }, on the same vertex table.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains_face(face) {
            return Err(ComplexError::NotAFace(face));
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.minus(face))
            .collect();
        Ok(SimplicialComplex::with_facets_unchecked(
            self.vertex_names.clone(),
            facets,
        ))
    }

    /// Faces avoiding vertex `v`, on the same vertex table.
    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex, ComplexError> {
        if v >= self.vertex_count() {
            return Err(ComplexError::FaceOutOfRange {
                vertex: v,
                table: self.vertex_count(),
            });
        }
        let facets: Vec<Face> = self.facets.iter().map(|f| f.without(v)).collect();
        Ok(SimplicialComplex::with_facets_unchecked(
            self.vertex_names.clone(),
            facets,
        ))
    }

    /// Δ|_W: faces contained in `within`, on the same vertex table.
    pub fn restriction(&self, within: Face) -> Result<SimplicialComplex, ComplexError> {
        if let Some(v) = within.max_member() {
            if v >= self.vertex_count() {
                return Err(ComplexError::FaceOutOfRange {
                    vertex: v,
                    table: self.vertex_count(),
                });
            }
        }
        let facets: Vec<Face> = self.facets.iter().map(|f| f.intersection(within)).collect();
        Ok(SimplicialComplex::with_facets_unchecked(
            self.vertex_names.clone(),
            facets,
        ))
    }

    /// The complex generated by all i-dimensional faces.
    pub fn pure_skeleton(&self, i: i32) -> Result<SimplicialComplex, ComplexError> {
        let max = self.dim().ok_or(ComplexError::VoidComplex)?;
        if i < -1 || i > max {
            return Err(ComplexError::SkeletonOutOfRange { got: i, max });
        }
        let size = (i + 1) as usize;
        let mut faces: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if f.len() >= size {
                subsets_of_size(*f, size, &mut faces);
            }
        }
        Ok(SimplicialComplex::with_facets_unchecked(
            self.vertex_names.clone(),
            faces.into_iter().collect(),
        ))
    }

    /// Checks that bumping one multiplicity commutes with expanding: the
    /// double expansion `(Δ^β)^(1+δ)` (second round duplicating the last copy
    /// of vertex `bump`) relabels facet-bijectively onto `Δ^(β+δ_bump)`.
    pub fn expansion_increment_agrees(
        &self,
        beta: &ExpansionVector,
        bump: usize,
    ) -> Result<bool, ComplexError> {
        beta.check_len(self.vertex_count())?;
        if bump >= self.vertex_count() {
            return Err(ComplexError::FaceOutOfRange {
                vertex: bump,
                table: self.vertex_count(),
            });
        }
        let inner = self.expand(beta)?;
        let k = beta.get(bump);
        let dup_pos = beta.expanded_index(bump, k);
        let gamma = ExpansionVector::ones_plus_delta(inner.vertex_count(), dup_pos);
        let double = inner.expand(&gamma)?;

        let alpha = beta.plus_delta(bump)?;
        let direct = self.expand(&alpha)?;

        // relabel: copy 1 of inner vertex (r, s) goes to (r, s); the second
        // copy of the duplicated vertex goes to (bump, k+1)
        let beta_offs = beta.offsets();
        let gamma_offs = gamma.offsets();
        let alpha_offs = alpha.offsets();
        let relabel: Vec<usize> = (0..double.vertex_count())
            .map(|e| {
                let (inner_v, t) = base_of(&gamma_offs, e);
                let (r, s) = base_of(&beta_offs, inner_v);
                if t == 1 {
                    alpha_offs[r] + s as usize - 1
                } else {
                    alpha_offs[bump] + k as usize
                }
            })
            .collect();

        let mut mapped: Vec<Face> = double
            .facets
            .iter()
            .map(|f| f.iter().map(|v| relabel[v]).collect())
            .collect();
        mapped.sort_unstable();
        mapped.dedup();
        Ok(mapped.len() == double.facets.len() && mapped == direct.facets)
    }

    /// Render a face by vertex names.
    pub fn face_names(&self, face: Face) -> Vec<String> {
        face.iter().map(|v| self.vertex_names[v].clone()).collect()
    }
}

/// Collect all subsets of `face` with exactly `size` members.
fn subsets_of_size(face: Face, size: usize, out: &mut HashSet<Face>) {
    let members: Vec<usize> = face.iter().collect();
    let mut stack: Vec<(usize, Face, usize)> = vec![(0, Face::EMPTY, 0)];
    while let Some((idx, cur, picked)) = stack.pop() {
        if picked == size {
            out.insert(cur);
            continue;
        }
        if idx >= members.len() || members.len() - idx < size - picked {
            continue;
        }
        stack.push((idx + 1, cur, picked));
        stack.push((idx + 1, cur.with(members[idx]), picked + 1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f(vs: &[usize]) -> Face {
        vs.iter().copied().collect()
    }

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn complex(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let faces: Vec<Face> = faces.iter().map(|m| f(m)).collect();
        SimplicialComplex::from_facets(names(n), &faces).unwrap()
    }

    #[test]
    fn construction_prunes_to_antichain() {
        let c = complex(2, &[&[0, 1], &[0]]);
        assert_eq!(c.facets(), &[f(&[0, 1])]);
    }

    #[test]
    fn degenerate_complexes() {
        let void = complex(1, &[]);
        assert!(void.is_void());
        assert_eq!(void.dim(), None);

        let irrelevant = complex(1, &[&[]]);
        assert!(irrelevant.is_irrelevant());
        assert_eq!(irrelevant.dim(), Some(-1));
    }

    #[test]
    fn construction_errors() {
        let err = SimplicialComplex::from_facets(vec!["x1", "x1"], &[]);
        assert_eq!(err, Err(ComplexError::DuplicateVertexName("x1".into())));
        let err = SimplicialComplex::from_facets(vec!["x1"], &[f(&[1])]);
        assert_eq!(
            err,
            Err(ComplexError::FaceOutOfRange {
                vertex: 1,
                table: 1
            })
        );
    }

    #[test]
    fn expansion_of_path() {
        // ⟨{x1,x2},{x2,x3}⟩ with multiplicities (2,1,1)
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let alpha = ExpansionVector::new(vec![2, 1, 1]).unwrap();
        let e = c.expand(&alpha).unwrap();
        assert_eq!(e.vertex_names(), &["x1_1", "x1_2", "x2_1", "x3_1"]);
        // facets {x1_1,x2_1},{x1_2,x2_1},{x2_1,x3_1}
        assert_eq!(e.facets(), &[f(&[0, 2]), f(&[1, 2]), f(&[2, 3])]);
    }

    #[test]
    fn identity_expansion_renames_only() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let e = c.expand(&ExpansionVector::ones(3)).unwrap();
        assert!(e.same_facets(&c));
        assert_eq!(e.vertex_names(), &["x1_1", "x2_1", "x3_1"]);
    }

    #[test]
    fn expansion_of_single_vertex() {
        let c = complex(1, &[&[0]]);
        let alpha = ExpansionVector::new(vec![3]).unwrap();
        let e = c.expand(&alpha).unwrap();
        assert_eq!(e.facets(), &[f(&[0]), f(&[1]), f(&[2])]);
    }

    #[test]
    fn expansion_facet_count_is_product_sum() {
        let c = complex(4, &[&[0, 1, 2], &[2, 3]]);
        let alpha = ExpansionVector::new(vec![2, 3, 1, 2]).unwrap();
        let e = c.expand(&alpha).unwrap();
        // 2*3*1 + 1*2 = 8
        assert_eq!(e.facet_count(), 8);
    }

    #[test]
    fn expansion_of_degenerates() {
        let void = complex(2, &[]);
        let alpha = ExpansionVector::new(vec![2, 2]).unwrap();
        assert!(void.expand(&alpha).unwrap().is_void());
        let irr = complex(2, &[&[]]);
        assert!(irr.expand(&alpha).unwrap().is_irrelevant());
    }

    #[test]
    fn complement_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let comp = c.complement().unwrap();
        assert_eq!(comp.facets(), &[f(&[0]), f(&[2])]);

        let full = complex(3, &[&[0, 1, 2]]);
        assert!(full.complement().unwrap().is_irrelevant());

        let pts = complex(2, &[&[0], &[1]]);
        assert_eq!(pts.complement().unwrap().facets(), &[f(&[0]), f(&[1])]);

        assert_eq!(complex(2, &[]).complement(), Err(ComplexError::VoidComplex));
    }

    #[test]
    fn complement_involution_on_supported_complexes() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(c.complement().unwrap().complement().unwrap(), c);
    }

    #[test]
    fn alexander_dual_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        // non-faces are {x1,x3} and {x1,x2,x3}; minimal one is {x1,x3}
        assert_eq!(c.minimal_non_faces(), vec![f(&[0, 2])]);
        let dual = c.alexander_dual();
        assert_eq!(dual.facets(), &[f(&[1])]);

        assert!(complex(3, &[&[0, 1, 2]]).alexander_dual().is_void());
    }

    #[test]
    fn alexander_dual_is_involutive() {
        for c in [
            complex(3, &[&[0, 1], &[1, 2]]),
            complex(4, &[&[0, 1, 2], &[2, 3]]),
            complex(3, &[&[0], &[1], &[2]]),
            complex(3, &[&[0, 1, 2]]),
            complex(2, &[]),
            complex(2, &[&[]]),
        ] {
            assert_eq!(c.alexander_dual().alexander_dual(), c);
        }
    }

    #[test]
    fn link_deletion_restriction() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let link = c.link(f(&[1])).unwrap();
        assert_eq!(link.facets(), &[f(&[0]), f(&[2])]);
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
        assert_eq!(c.link(f(&[0, 2])), Err(ComplexError::NotAFace(f(&[0, 2]))));

        let del = c.deletion(1).unwrap();
        assert_eq!(del.facets(), &[f(&[0]), f(&[2])]);

        let res = c.restriction(f(&[0, 2])).unwrap();
        assert_eq!(res.facets(), &[f(&[0]), f(&[2])]);
    }

    #[test]
    fn pure_skeletons() {
        let c = complex(3, &[&[0, 1], &[2]]);
        assert_eq!(
            c.pure_skeleton(0).unwrap().facets(),
            &[f(&[0]), f(&[1]), f(&[2])]
        );
        assert_eq!(c.pure_skeleton(1).unwrap().facets(), &[f(&[0, 1])]);
        assert_eq!(c.pure_skeleton(-1).unwrap().facets(), &[Face::EMPTY]);
        assert!(c.pure_skeleton(2).is_err());

        let pure = complex(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(pure.pure_skeleton(1).unwrap(), pure);
    }

    #[test]
    fn expansion_increment_relabels_facets() {
        let edge = complex(2, &[&[0, 1]]);
        assert!(edge
            .expansion_increment_agrees(&ExpansionVector::ones(2), 0)
            .unwrap());

        let point = complex(1, &[&[0]]);
        assert!(point
            .expansion_increment_agrees(&ExpansionVector::new(vec![2]).unwrap(), 0)
            .unwrap());

        let path = complex(3, &[&[0, 1], &[1, 2]]);
        for bump in 0..3 {
            for beta in [
                ExpansionVector::ones(3),
                ExpansionVector::new(vec![2, 1, 2]).unwrap(),
                ExpansionVector::new(vec![2, 2, 2]).unwrap(),
            ] {
                assert!(path.expansion_increment_agrees(&beta, bump).unwrap());
            }
        }
    }

    #[test]
    fn all_faces_includes_empty_face() {
        let c = complex(2, &[&[0, 1]]);
        assert_eq!(
            c.all_faces().unwrap(),
            vec![Face::EMPTY, f(&[0]), f(&[1]), f(&[0, 1])]
        );
    }
}
