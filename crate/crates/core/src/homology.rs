//! The exact-arithmetic engine: reduced simplicial homology over ℚ and
//! GF(p), Betti tables of squarefree ideals by summing restriction
//! homology over all vertex subsets, the all-links Cohen–Macaulay
//! criterion, sequential Cohen–Macaulayness by pure skeletons, nonpure
//! shellability and vertex decomposability.
//!
//! Shellability and vertex decomposability follow the nonpure definitions
//! throughout (facet orders with pure codimension-one attachments, shedding
//! vertices on arbitrary complexes).

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::betti::{BettiTable, ModuleKind};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::face::{maximal_antichain, Face};
use crate::ideal::{IdealError, MonomialIdeal};
use crate::linalg::{is_prime, rank_mod_p, rank_rational, SparseCol};

/// Ambient bound for the restriction-sum Betti computation.
pub const HOCHSTER_VARIABLE_CAP: usize = 16;

/// Default facet cap of the shellability search.
pub const DEFAULT_SHELLING_CAP: usize = 10;

/// Default number of distinct subcomplexes the vertex-decomposability
/// recursion may visit before reporting `Undecided`.
pub const DEFAULT_VD_BUDGET: usize = 50_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("reduced homology is undefined for the void complex")]
    VoidComplex,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(
        "restriction-sum Betti tables support at most {HOCHSTER_VARIABLE_CAP} variables, got {0}"
    )]
    AmbientTooLarge(usize),
    #[error("the zero ideal is a free module; no table to compute")]
    ZeroIdeal,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Coefficient field for the exact kernels: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<Self, HomologyError> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Dimensions of the reduced homology groups, keyed by degree.
/// Degrees with dimension zero are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: std::collections::BTreeMap<i32, u64>,
}

impl HomologyProfile {
    pub fn dim_at(&self, k: i32) -> u64 {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.is_empty()
    }

    /// Σ_k (−1)^k dim H̃_k.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&k, &d)| {
                if k.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

/// Reduced homology of a nonvoid complex, computed from exact ranks of the
/// boundary matrices of the reduced chain complex (the empty face sits in
/// degree −1).
pub fn reduced_homology(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<HomologyProfile, HomologyError> {
    if delta.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    homology_of_facets(delta.facets(), field)
}

/// Reduced homology from a raw facet antichain (vertex table irrelevant).
pub(crate) fn homology_of_facets(
    facets: &[Face],
    field: FieldSpec,
) -> Result<HomologyProfile, HomologyError> {
    debug_assert!(!facets.is_empty());
    // a cone is contractible: every reduced group vanishes
    let apex = facets
        .iter()
        .copied()
        .reduce(|a, b| a.intersection(b))
        .unwrap_or(Face::EMPTY);
    if !apex.is_empty() {
        return Ok(HomologyProfile::default());
    }

    let used: Face = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    const LIMIT: usize = 24;
    if used.len() > LIMIT {
        return Err(HomologyError::Complex(ComplexError::TooLargeToEnumerate {
            got: used.len(),
            limit: LIMIT,
        }));
    }

    // faces bucketed by dimension, canonically sorted
    let top = facets.iter().map(|f| f.len()).max().unwrap();
    let mut buckets: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in facets {
            for s in f.subsets() {
                if seen.insert(s) {
                    buckets[s.len()].push(s);
                }
            }
        }
    }
    for b in &mut buckets {
        b.sort_unstable();
    }

    let dim = top as i32 - 1;
    // ranks[k] = rank of the boundary map from k-faces, k = 0..=dim
    let mut ranks = vec![0usize; (dim + 2) as usize];
    for k in 0..=dim {
        let rows: HashMap<Face, usize> = buckets[k as usize]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let cols: Vec<SparseCol> = buckets[(k + 1) as usize]
            .iter()
            .map(|f| {
                let mut col: SparseCol = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (rows[&f.without(v)], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        ranks[k as usize] = match field {
            FieldSpec::Rationals => rank_rational(&cols),
            FieldSpec::PrimeField(p) => rank_mod_p(&cols, p),
        };
    }

    let mut profile = HomologyProfile::default();
    for k in -1..=dim {
        let faces_k = buckets[(k + 1) as usize].len() as i64;
        let rank_k = if k == -1 { 0 } else { ranks[k as usize] as i64 };
        let rank_k1 = if k == dim {
            0
        } else {
            ranks[(k + 1) as usize] as i64
        };
        let h = faces_k - rank_k - rank_k1;
        debug_assert!(h >= 0);
        if h > 0 {
            profile.dims.insert(k, h as u64);
        }
    }
    Ok(profile)
}

/// Canonical key of a facet antichain with unused vertices compacted away.
fn compact_key(facets: &[Face]) -> Vec<u64> {
    let used: Face = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    let remap: HashMap<usize, usize> = used.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut key: Vec<u64> = facets
        .iter()
        .map(|f| f.iter().map(|v| remap[&v]).collect::<Face>().bits())
        .collect();
    key.sort_unstable();
    key
}

/// Graded Betti table of a squarefree ideal, by summing the reduced homology
/// of all induced restrictions of its Stanley–Reisner complex:
/// β_{i,j}(S/I) = Σ_{|W|=j} dim H̃_{j−i−1}(Δ|_W), with the table of the
/// ideal itself obtained by the degree shift β_{i,j}(I) = β_{i+1,j}(S/I).
pub fn hochster_betti(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    kind: ModuleKind,
) -> Result<BettiTable, HomologyError> {
    if ideal.is_zero() {
        return Err(HomologyError::ZeroIdeal);
    }
    let n = ideal.variable_count();
    if n > HOCHSTER_VARIABLE_CAP {
        return Err(HomologyError::AmbientTooLarge(n));
    }
    let delta = ideal.complex_of_ideal();
    let facets = delta.facets().to_vec();

    let mut quotient = BettiTable::new(ModuleKind::Quotient);
    quotient.add(0, 0, 1);
    let mut memo: HashMap<Vec<u64>, HomologyProfile> = HashMap::new();

    for bits in 1u64..(1u64 << n) {
        let w = Face::from_bits(bits);
        let j = w.len();
        let restricted = maximal_antichain(facets.iter().map(|f| f.intersection(w)).collect());
        if restricted == [Face::EMPTY] {
            // bare empty face: one-dimensional homology in degree −1
            quotient.add(j, j, 1);
            continue;
        }
        let apex = restricted
            .iter()
            .copied()
            .reduce(|a, b| a.intersection(b))
            .unwrap();
        if !apex.is_empty() {
            continue; // cone, contractible
        }
        let key = compact_key(&restricted);
        let profile = match memo.get(&key) {
            Some(p) => p.clone(),
            None => {
                let p = homology_of_facets(&restricted, field)?;
                memo.insert(key, p.clone());
                p
            }
        };
        for (k, d) in profile.nonzero() {
            let i = j as i64 - k as i64 - 1;
            debug_assert!(i >= 1);
            quotient.add(i as usize, j, d);
        }
    }

    Ok(match kind {
        ModuleKind::Quotient => quotient,
        ModuleKind::Ideal => quotient.quotient_to_ideal(),
    })
}

/// The all-links vanishing criterion: true iff every face F (the empty face
/// included) has H̃_i(link F) = 0 for all i below the link's own dimension.
///
/// Evaluated recursively — the link of any face is an iterated vertex link,
/// so it suffices to check the complex's own homology and recurse into the
/// vertex links — with memoization on the compacted facet encoding.
pub fn is_cohen_macaulay(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<bool, HomologyError> {
    if delta.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    cm_search(delta.facets(), field, &mut memo)
}

fn cm_search(
    facets: &[Face],
    field: FieldSpec,
    memo: &mut HashMap<Vec<u64>, bool>,
) -> Result<bool, HomologyError> {
    let dim = facets.iter().map(|f| f.len() as i32 - 1).max().unwrap();
    if facets.len() == 1 || dim <= 0 {
        // a simplex, points, or the bare empty face: nothing below the
        // dimension can be nonzero here or in any link
        return Ok(true);
    }
    if facets.iter().any(|f| f.len() as i32 - 1 != dim) {
        return Ok(false); // Cohen-Macaulay complexes are pure
    }
    let key = compact_key(facets);
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let profile = homology_of_facets(facets, field)?;
    let mut ok = profile.nonzero().all(|(k, _)| k >= dim);
    if ok {
        let used: Face = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
        for v in used.iter() {
            let link: Vec<Face> = facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.without(v))
                .collect();
            if !cm_search(&link, field, memo)? {
                ok = false;
                break;
            }
        }
    }
    memo.insert(key, ok);
    Ok(ok)
}

/// Sequential Cohen–Macaulayness via pure skeletons: every complex generated
/// by the faces of one fixed dimension must itself pass the all-links
/// criterion.
pub fn is_sequentially_cohen_macaulay(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<bool, HomologyError> {
    let dim = delta.dim().ok_or(HomologyError::VoidComplex)?;
    for i in -1..=dim {
        if !is_cohen_macaulay(&delta.pure_skeleton(i)?, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the shellability search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shelling {
    /// A witness order of facet indices.
    Shellable(Vec<usize>),
    NotShellable,
    /// Facet count above the search cap.
    Undecided,
}

impl Shelling {
    pub fn is_shellable(&self) -> Option<bool> {
        match self {
            Shelling::Shellable(_) => Some(true),
            Shelling::NotShellable => Some(false),
            Shelling::Undecided => None,
        }
    }
}

/// Nonpure shellability by backtracking over facet orders: each added facet
/// must meet the union of its predecessors in a nonempty pure complex of
/// dimension one less than its own.
pub fn is_shellable(delta: &SimplicialComplex) -> Result<Shelling, HomologyError> {
    is_shellable_capped(delta, DEFAULT_SHELLING_CAP)
}

pub fn is_shellable_capped(
    delta: &SimplicialComplex,
    cap: usize,
) -> Result<Shelling, HomologyError> {
    if delta.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    let facets = delta.facets();
    if facets.len() > cap.min(62) {
        return Ok(Shelling::Undecided);
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut failed: HashSet<u64> = HashSet::new();
    if shelling_search(facets, 0, &mut order, &mut failed) {
        Ok(Shelling::Shellable(order))
    } else {
        Ok(Shelling::NotShellable)
    }
}

fn shelling_extendable(facets: &[Face], placed: u64, cand: usize) -> bool {
    let f = facets[cand];
    let want = f.len() - 1;
    let intersections: Vec<Face> = (0..facets.len())
        .filter(|k| placed & (1 << k) != 0)
        .map(|k| f.intersection(facets[k]))
        .collect();
    maximal_antichain(intersections)
        .iter()
        .all(|m| m.len() == want)
}

fn shelling_search(
    facets: &[Face],
    placed: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if failed.contains(&placed) {
        return false;
    }
    for cand in 0..facets.len() {
        if placed & (1 << cand) != 0 {
            continue;
        }
        if order.is_empty() || shelling_extendable(facets, placed, cand) {
            order.push(cand);
            if shelling_search(facets, placed | (1 << cand), order, failed) {
                return true;
            }
            order.pop();
        }
    }
    failed.insert(placed);
    false
}

/// Three-valued answer of a budgeted search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn known(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }
}

/// Vertex decomposability (nonpure): a simplex, or some vertex whose link
/// shares no facet with its deletion and whose link and deletion are both
/// vertex decomposable. Memoized on the compacted facet encoding; gives up
/// after visiting `DEFAULT_VD_BUDGET` distinct subcomplexes.
///
/// The void complex is outside the recursion (links and deletions of nonvoid
/// complexes stay nonvoid) and reports `No`.
pub fn is_vertex_decomposable(delta: &SimplicialComplex) -> Decision {
    is_vertex_decomposable_budgeted(delta, DEFAULT_VD_BUDGET)
}

pub fn is_vertex_decomposable_budgeted(delta: &SimplicialComplex, budget: usize) -> Decision {
    if delta.is_void() {
        return Decision::No;
    }
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    let mut budget = budget;
    match vd_search(delta.facets(), &mut memo, &mut budget) {
        Some(true) => Decision::Yes,
        Some(false) => Decision::No,
        None => Decision::Undecided,
    }
}

fn vd_search(
    facets: &[Face],
    memo: &mut HashMap<Vec<u64>, bool>,
    budget: &mut usize,
) -> Option<bool> {
    if facets.len() == 1 {
        return Some(true);
    }
    let key = compact_key(facets);
    if let Some(&v) = memo.get(&key) {
        return Some(v);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;

    let used: Face = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    for v in used.iter() {
        let link: Vec<Face> = facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        let deletion = maximal_antichain(facets.iter().map(|f| f.without(v)).collect());
        // shedding: no facet of the link survives as a facet of the deletion
        if link.iter().any(|l| deletion.binary_search(l).is_ok()) {
            continue;
        }
        match vd_search(&link, memo, budget) {
            None => return None,
            Some(false) => continue,
            Some(true) => match vd_search(&deletion, memo, budget) {
                None => return None,
                Some(false) => continue,
                Some(true) => {
                    memo.insert(key, true);
                    return Some(true);
                }
            },
        }
    }
    memo.insert(key, false);
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::ExpansionVector;

    fn f(vs: &[usize]) -> Face {
        vs.iter().copied().collect()
    }

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn complex(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let faces: Vec<Face> = faces.iter().map(|m| f(m)).collect();
        SimplicialComplex::from_facets(names(n), &faces).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let gens: Vec<Face> = gens.iter().map(|m| f(m)).collect();
        MonomialIdeal::new(names(n), &gens).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        complex(
            6,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[0, 2, 4],
                &[0, 3, 5],
                &[0, 4, 5],
                &[1, 2, 5],
                &[1, 3, 4],
                &[1, 4, 5],
                &[2, 3, 4],
                &[2, 3, 5],
            ],
        )
    }

    #[test]
    fn homology_of_circle_and_points() {
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = reduced_homology(&circle, FieldSpec::Rationals).unwrap();
        assert_eq!(h.dim_at(0), 0);
        assert_eq!(h.dim_at(1), 1);

        let two_points = complex(2, &[&[0], &[1]]);
        let h = reduced_homology(&two_points, FieldSpec::Rationals).unwrap();
        assert_eq!(h.dim_at(0), 1);

        let simplex = complex(4, &[&[0, 1, 2, 3]]);
        assert!(reduced_homology(&simplex, FieldSpec::Rationals)
            .unwrap()
            .is_trivial());

        let irrelevant = complex(2, &[&[]]);
        let h = reduced_homology(&irrelevant, FieldSpec::Rationals).unwrap();
        assert_eq!(h.dim_at(-1), 1);

        assert_eq!(
            reduced_homology(&complex(2, &[]), FieldSpec::Rationals),
            Err(HomologyError::VoidComplex)
        );
    }

    #[test]
    fn sphere_homology_any_field() {
        let sphere = complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        for field in [
            FieldSpec::Rationals,
            FieldSpec::PrimeField(2),
            FieldSpec::PrimeField(5),
        ] {
            let h = reduced_homology(&sphere, field).unwrap();
            assert_eq!(h.dim_at(1), 0);
            assert_eq!(h.dim_at(2), 1);
        }
    }

    #[test]
    fn projective_plane_homology_depends_on_characteristic() {
        let p = rp2();
        let over_q = reduced_homology(&p, FieldSpec::Rationals).unwrap();
        assert!(over_q.is_trivial());
        let over_f2 = reduced_homology(&p, FieldSpec::PrimeField(2)).unwrap();
        assert_eq!(over_f2.dim_at(1), 1);
        assert_eq!(over_f2.dim_at(2), 1);
    }

    #[test]
    fn torus_homology_any_field() {
        // seven-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
        let faces: Vec<Face> = (0..7usize)
            .flat_map(|i| {
                [
                    f(&[i, (i + 1) % 7, (i + 3) % 7]),
                    f(&[i, (i + 2) % 7, (i + 3) % 7]),
                ]
            })
            .collect();
        let torus = SimplicialComplex::from_facets(names(7), &faces).unwrap();
        assert_eq!(torus.facet_count(), 14);
        for field in [
            FieldSpec::Rationals,
            FieldSpec::PrimeField(2),
            FieldSpec::PrimeField(3),
        ] {
            let h = reduced_homology(&torus, field).unwrap();
            assert_eq!(h.dim_at(0), 0, "{field}");
            assert_eq!(h.dim_at(1), 2, "{field}");
            assert_eq!(h.dim_at(2), 1, "{field}");
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts() {
        for c in [
            complex(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            complex(4, &[&[0, 1, 2], &[2, 3]]),
            rp2(),
            complex(4, &[&[0, 1], &[2, 3]]),
        ] {
            let faces = c.all_faces().unwrap();
            let from_faces: i64 = faces
                .iter()
                .map(|f| {
                    let k = f.len() as i64 - 1;
                    if k.rem_euclid(2) == 0 {
                        1i64
                    } else {
                        -1i64
                    }
                })
                .sum();
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let h = reduced_homology(&c, field).unwrap();
                assert_eq!(h.euler_characteristic(), from_faces, "{c:?} over {field}");
            }
        }
    }

    #[test]
    fn betti_tables_of_small_ideals() {
        // principal ideal: a free module
        let t = hochster_betti(
            &ideal(2, &[&[0, 1]]),
            FieldSpec::Rationals,
            ModuleKind::Ideal,
        )
        .unwrap();
        assert_eq!(t.get(0, 2), 1);
        assert_eq!(t.entries().count(), 1);

        // two variables
        let t = hochster_betti(
            &ideal(2, &[&[0], &[1]]),
            FieldSpec::Rationals,
            ModuleKind::Ideal,
        )
        .unwrap();
        assert_eq!(t.get(0, 1), 2);
        assert_eq!(t.get(1, 2), 1);

        // path edge ideal
        let t = hochster_betti(
            &ideal(3, &[&[0, 1], &[1, 2]]),
            FieldSpec::Rationals,
            ModuleKind::Ideal,
        )
        .unwrap();
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.regularity(), 2);
        assert_eq!(t.projective_dimension(), 1);

        // one variable: pd of the quotient is 1
        let t = hochster_betti(
            &ideal(1, &[&[0]]),
            FieldSpec::Rationals,
            ModuleKind::Quotient,
        )
        .unwrap();
        assert_eq!(t.projective_dimension(), 1);
    }

    #[test]
    fn quotient_table_of_dual_of_path() {
        // J of the path complex: (x2, x1x3), a regular sequence
        let j = ideal(3, &[&[1], &[0, 2]]);
        let t = hochster_betti(&j, FieldSpec::Rationals, ModuleKind::Quotient).unwrap();
        assert_eq!(t.total_betti(), vec![1, 2, 1]);
        assert_eq!(t.projective_dimension(), 2);
        let ti = hochster_betti(&j, FieldSpec::Rationals, ModuleKind::Ideal).unwrap();
        assert_eq!(ti.regularity(), 2);
    }

    #[test]
    fn koszul_tables_from_restriction_sums() {
        fn choose(n: usize, k: usize) -> u64 {
            if k > n {
                return 0;
            }
            (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
        }
        for n in 1..=4usize {
            let gens: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
            let gens: Vec<&[usize]> = gens.iter().map(|g| g.as_slice()).collect();
            let i = ideal(n, &gens);
            let t = hochster_betti(&i, FieldSpec::Rationals, ModuleKind::Ideal).unwrap();
            for k in 0..n {
                assert_eq!(t.get(k, k + 1), choose(n, k + 1), "n={n} i={k}");
            }
        }
    }

    #[test]
    fn cohen_macaulay_examples() {
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(is_cohen_macaulay(&circle, FieldSpec::Rationals).unwrap());
        assert!(is_cohen_macaulay(&circle, FieldSpec::PrimeField(2)).unwrap());

        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        assert!(!is_cohen_macaulay(&two_edges, FieldSpec::Rationals).unwrap());

        assert!(is_cohen_macaulay(&rp2(), FieldSpec::Rationals).unwrap());
        assert!(!is_cohen_macaulay(&rp2(), FieldSpec::PrimeField(2)).unwrap());

        let irrelevant = complex(2, &[&[]]);
        assert!(is_cohen_macaulay(&irrelevant, FieldSpec::Rationals).unwrap());
    }

    #[test]
    fn sequentially_cm_examples() {
        let mixed = complex(3, &[&[0, 1], &[2]]);
        assert!(is_sequentially_cohen_macaulay(&mixed, FieldSpec::Rationals).unwrap());

        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        assert!(!is_sequentially_cohen_macaulay(&two_edges, FieldSpec::Rationals).unwrap());
    }

    #[test]
    fn shellability_examples() {
        let path = complex(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            is_shellable(&path).unwrap(),
            Shelling::Shellable(vec![0, 1])
        );

        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(is_shellable(&two_edges).unwrap(), Shelling::NotShellable);

        let simplex = complex(3, &[&[0, 1, 2]]);
        assert_eq!(
            is_shellable(&simplex).unwrap(),
            Shelling::Shellable(vec![0])
        );

        assert_eq!(
            is_shellable_capped(&two_edges, 1).unwrap(),
            Shelling::Undecided
        );
    }

    #[test]
    fn vertex_decomposability_examples() {
        let simplex = complex(3, &[&[0, 1, 2]]);
        assert_eq!(is_vertex_decomposable(&simplex), Decision::Yes);

        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(is_vertex_decomposable(&circle), Decision::Yes);

        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(is_vertex_decomposable(&two_edges), Decision::No);

        let irrelevant = complex(2, &[&[]]);
        assert_eq!(is_vertex_decomposable(&irrelevant), Decision::Yes);
    }

    #[test]
    fn decomposable_implies_shellable_implies_scm() {
        // the implication chain on a hand-picked spread of small complexes
        let cases = [
            complex(3, &[&[0, 1], &[1, 2]]),
            complex(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            complex(4, &[&[0, 1], &[2, 3]]),
            complex(4, &[&[0, 1, 2], &[2, 3]]),
            complex(3, &[&[0, 1], &[2]]),
            complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
        ];
        for c in cases {
            let vd = is_vertex_decomposable(&c).known();
            let sh = is_shellable(&c).unwrap().is_shellable();
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let scm = is_sequentially_cohen_macaulay(&c, field).unwrap();
                if vd == Some(true) {
                    assert_eq!(sh, Some(true), "{c:?}");
                }
                if sh == Some(true) {
                    assert!(scm, "{c:?} over {field}");
                }
            }
        }
    }

    #[test]
    fn hochster_rejects_wide_ambients_and_zero_ideals() {
        let wide = MonomialIdeal::new(
            (0..17).map(|i| format!("y{i}")).collect::<Vec<_>>(),
            &[f(&[0])],
        )
        .unwrap();
        assert_eq!(
            hochster_betti(&wide, FieldSpec::Rationals, ModuleKind::Ideal),
            Err(HomologyError::AmbientTooLarge(17))
        );
        assert_eq!(
            hochster_betti(
                &MonomialIdeal::zero(names(2)),
                FieldSpec::Rationals,
                ModuleKind::Ideal
            ),
            Err(HomologyError::ZeroIdeal)
        );
    }

    #[test]
    fn quotient_pd_matches_codimension_on_cm_instances() {
        // for Cohen-Macaulay complexes, pd(S/I_Delta) = n - dim - 1
        for c in [
            complex(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
            complex(2, &[&[0], &[1]]),
        ] {
            assert!(is_cohen_macaulay(&c, FieldSpec::Rationals).unwrap());
            let i = MonomialIdeal::stanley_reisner_ideal(&c).unwrap();
            if i.is_zero() {
                continue;
            }
            let t = hochster_betti(&i, FieldSpec::Rationals, ModuleKind::Quotient).unwrap();
            let n = c.vertex_count() as i32;
            assert_eq!(
                t.projective_dimension() as i32,
                n - c.dim().unwrap() - 1,
                "{c:?}"
            );
        }
    }

    #[test]
    fn expansion_preserves_dual_quotient_totals_on_fixed_instance() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let alpha = ExpansionVector::new(vec![2, 1, 1]).unwrap();
        let j = MonomialIdeal::facet_ideal_dual(&c).unwrap();
        let je = MonomialIdeal::facet_ideal_dual(&c.expand(&alpha).unwrap()).unwrap();
        let t = hochster_betti(&j, FieldSpec::Rationals, ModuleKind::Quotient).unwrap();
        let te = hochster_betti(&je, FieldSpec::Rationals, ModuleKind::Quotient).unwrap();
        assert_eq!(t.total_betti(), vec![1, 2, 1]);
        assert_eq!(t.total_betti(), te.total_betti());
    }
}
