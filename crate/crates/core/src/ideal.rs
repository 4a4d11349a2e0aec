//! Squarefree monomial ideals: facet and Stanley–Reisner ideals, Alexander
//! duality, generator expansion, linear-quotients search with verified
//! certificates, and the resulting closed-form Betti tables.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::betti::{BettiTable, ModuleKind};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::expansion::{base_of, ExpansionError, ExpansionVector};
use crate::face::{minimal_antichain, minimal_transversals, Face};

/// Generator count beyond which the linear-quotients search reports
/// `Undecided` instead of searching.
pub const DEFAULT_LQ_CAP: usize = 12;

/// Ambient size beyond which Stanley–Reisner subset enumeration refuses.
const SR_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("the zero ideal has no generators to operate on")]
    ZeroIdeal,
    #[error("the unit monomial (empty support) is not a legal generator")]
    UnitMonomial,
    #[error("variable index {vertex} out of range for {table} variables")]
    VariableOutOfRange { vertex: usize, table: usize },
    #[error("facet ideal is undefined for the void or irrelevant complex")]
    DegenerateComplex,
    #[error("Stanley-Reisner ideal of the void complex is the unit ideal, not representable")]
    VoidComplex,
    #[error("subset enumeration supports at most {SR_ENUMERATION_CAP} variables, got {0}")]
    TooManyVariables(usize),
    #[error("the given order is not an order of linear quotients (fails at position {position})")]
    NotLinearQuotients { position: usize },
    #[error("certificate does not match the ideal: {0}")]
    CertificateMismatch(&'static str),
    #[error("expansion-order sets disagree with the colon computation at position {position}")]
    ExpansionSetMismatch { position: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

/// A squarefree monomial ideal given by its minimal generating set.
///
/// Generators are vertex subsets (squarefree supports); the stored list is an
/// antichain under divisibility, canonically ordered. The empty generator
/// list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Face>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `supports`, minimalizing to the unique
    /// minimal generating set. Empty supports (the unit monomial) are
    /// rejected.
    pub fn new<S: Into<String>>(variables: Vec<S>, supports: &[Face]) -> Result<Self, IdealError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let table = variables.len();
        for s in supports {
            if s.is_empty() {
                return Err(IdealError::UnitMonomial);
            }
            if let Some(v) = s.max_member() {
                if v >= table {
                    return Err(IdealError::VariableOutOfRange { vertex: v, table });
                }
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators: minimal_antichain(supports.to_vec()),
        })
    }

    /// The zero ideal in the given ambient ring.
    pub fn zero<S: Into<String>>(variables: Vec<S>) -> Self {
        MonomialIdeal {
            variables: variables.into_iter().map(Into::into).collect(),
            generators: Vec::new(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership of a squarefree monomial: some generator divides it.
    pub fn contains_support(&self, support: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(support))
    }

    /// The facet ideal I(Δ) = (x^F : F a facet).
    pub fn facet_ideal(delta: &SimplicialComplex) -> Result<Self, IdealError> {
        if delta.is_void() || delta.facets().iter().any(|f| f.is_empty()) {
            return Err(IdealError::DegenerateComplex);
        }
        MonomialIdeal::new(delta.vertex_names().to_vec(), delta.facets())
    }

    /// The Stanley–Reisner ideal, generated by the minimal non-faces,
    /// found by direct subset enumeration (inclusion-minimal subsets that
    /// are not faces). The full simplex yields the zero ideal.
    pub fn stanley_reisner_ideal(delta: &SimplicialComplex) -> Result<Self, IdealError> {
        if delta.is_void() {
            return Err(IdealError::VoidComplex);
        }
        let n = delta.vertex_count();
        if n > SR_ENUMERATION_CAP {
            return Err(IdealError::TooManyVariables(n));
        }
        let mut gens = Vec::new();
        for bits in 1u64..(1u64 << n) {
            let m = Face::from_bits(bits);
            if delta.contains_face(m) {
                continue;
            }
            // minimal: every proper maximal subset is a face
            if m.iter().all(|v| delta.contains_face(m.without(v))) {
                gens.push(m);
            }
        }
        MonomialIdeal::new(delta.vertex_names().to_vec(), &gens)
    }

    /// The unique complex Δ with I_Δ equal to this ideal: faces are the
    /// subsets containing no generator support.
    pub fn complex_of_ideal(&self) -> SimplicialComplex {
        let n = self.variable_count();
        let facets: Vec<Face> = minimal_transversals(&self.generators)
            .iter()
            .map(|t| t.complement_in(n))
            .collect();
        SimplicialComplex::from_facets(self.variables.clone(), &facets)
            .expect("dual facets are within the ambient table")
    }

    /// The Alexander dual ideal: the intersection of the variable primes of
    /// the generators, i.e. the ideal of minimal transversals.
    pub fn alexander_dual_ideal(&self) -> Result<Self, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let transversals = minimal_transversals(&self.generators);
        MonomialIdeal::new(self.variables.clone(), &transversals)
    }

    /// J_Δ, the Alexander dual of the facet ideal; equals the intersection of
    /// the facet primes P_F and the Stanley–Reisner ideal of the complement.
    pub fn facet_ideal_dual(delta: &SimplicialComplex) -> Result<Self, IdealError> {
        Self::facet_ideal(delta)?.alexander_dual_ideal()
    }

    /// Substitutes every variable by the full product of its copies, carrying
    /// the generators onto the expanded ambient ring. Minimality of the
    /// generating set is preserved by the substitution.
    pub fn expand_generators(&self, alpha: &ExpansionVector) -> Result<Self, IdealError> {
        alpha.check_len(self.variable_count())?;
        let names = alpha.expanded_names(&self.variables);
        let gens: Vec<Face> = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .flat_map(|v| (1..=alpha.get(v)).map(move |c| (v, c)))
                    .map(|(v, c)| alpha.expanded_index(v, c))
                    .collect()
            })
            .collect();
        MonomialIdeal::new(names, &gens)
    }

    /// Searches for an order of linear quotients with the default generator
    /// cap.
    pub fn linear_quotients_order(&self) -> Result<LinearQuotients, IdealError> {
        self.linear_quotients_order_capped(DEFAULT_LQ_CAP)
    }

    /// Backtracking search for an order of linear quotients, trying
    /// generators in canonical order, with memoization on failed prefixes
    /// (extendability depends only on the placed set). Ideals with more than
    /// `cap` generators report `Undecided`.
    pub fn linear_quotients_order_capped(&self, cap: usize) -> Result<LinearQuotients, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let m = self.generator_count();
        if m > cap.min(62) {
            return Ok(LinearQuotients::Undecided);
        }
        // diffs[k][t] = supp(f_k) \ supp(f_t)
        let diffs: Vec<Vec<Face>> = self
            .generators
            .iter()
            .map(|g| self.generators.iter().map(|h| g.minus(*h)).collect())
            .collect();
        let mut failed: HashSet<u64> = HashSet::new();
        let mut order = Vec::with_capacity(m);
        if search_lq(m, &diffs, 0, &mut order, &mut failed) {
            let cert = LinearQuotientsCertificate::from_order(self, order)?;
            Ok(LinearQuotients::Found(cert))
        } else {
            Ok(LinearQuotients::NotFound)
        }
    }
}

fn extendable(m: usize, diffs: &[Vec<Face>], placed: u64, cand: usize) -> bool {
    (0..m).filter(|k| placed & (1 << k) != 0).all(|k| {
        (0..m).filter(|k2| placed & (1 << k2) != 0).any(|k2| {
            let d = diffs[k2][cand];
            d.len() == 1 && d.is_subset_of(diffs[k][cand])
        })
    })
}

fn search_lq(
    m: usize,
    diffs: &[Vec<Face>],
    placed: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    if order.len() == m {
        return true;
    }
    if failed.contains(&placed) {
        return false;
    }
    for cand in 0..m {
        if placed & (1 << cand) != 0 {
            continue;
        }
        if order.is_empty() || extendable(m, diffs, placed, cand) {
            order.push(cand);
            if search_lq(m, diffs, placed | (1 << cand), order, failed) {
                return true;
            }
            order.pop();
        }
    }
    failed.insert(placed);
    false
}

/// Outcome of the linear-quotients search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearQuotients {
    Found(LinearQuotientsCertificate),
    NotFound,
    /// Generator count above the search cap.
    Undecided,
}

impl LinearQuotients {
    pub fn found(&self) -> Option<&LinearQuotientsCertificate> {
        match self {
            LinearQuotients::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// A verified order of linear quotients together with the colon variable
/// sets of every position.
///
/// Position t of `order` names a generator index; `sets[t]` is the set of
/// variables generating the colon ideal of that generator with respect to
/// its predecessors. Construction recomputes the sets from scratch and fails
/// unless every colon ideal is variable-generated, so a value of this type
/// is always a valid certificate for the ideal it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    order: Vec<usize>,
    sets: Vec<Face>,
}

impl LinearQuotientsCertificate {
    /// Validates `order` against `ideal` by computing each colon ideal
    /// combinatorially (squarefree membership: a generator divides x·f_t iff
    /// its support drops into supp(f_t) ∪ {x}).
    pub fn from_order(ideal: &MonomialIdeal, order: Vec<usize>) -> Result<Self, IdealError> {
        let m = ideal.generator_count();
        if order.len() != m || {
            let mut seen = vec![false; m];
            order.iter().any(|&g| {
                if g >= m || seen[g] {
                    true
                } else {
                    seen[g] = true;
                    false
                }
            })
        } {
            return Err(IdealError::CertificateMismatch(
                "order is not a permutation of the generator indices",
            ));
        }
        let gens = ideal.generators();
        let mut sets = Vec::with_capacity(m);
        for (t, &gt) in order.iter().enumerate() {
            let mut set = Face::EMPTY;
            for &gk in &order[..t] {
                let d = gens[gk].minus(gens[gt]);
                if let Some(x) = d.sole_member() {
                    set = set.with(x);
                }
            }
            // the colon ideal is contained in (set) iff every difference
            // meets it; otherwise it has a non-variable minimal generator
            for &gk in &order[..t] {
                let d = gens[gk].minus(gens[gt]);
                if d.intersection(set).is_empty() {
                    return Err(IdealError::NotLinearQuotients { position: t });
                }
            }
            sets.push(set);
        }
        Ok(LinearQuotientsCertificate { order, sets })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn sets(&self) -> &[Face] {
        &self.sets
    }

    /// The projective dimension of the ideal this certifies.
    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }
}

/// Graded Betti numbers of an ideal with linear quotients, from the colon
/// set sizes alone: β_{i,j}(I) = Σ_{deg f_t = j−i} C(|sets[t]|, i).
pub fn betti_from_linear_quotients(
    cert: &LinearQuotientsCertificate,
    ideal: &MonomialIdeal,
) -> Result<BettiTable, IdealError> {
    if cert.order.len() != ideal.generator_count() {
        return Err(IdealError::CertificateMismatch(
            "certificate length differs from the generator count",
        ));
    }
    let mut table = BettiTable::new(ModuleKind::Ideal);
    for (t, &g) in cert.order.iter().enumerate() {
        let deg = ideal.generators()[g].len();
        let s = cert.sets[t].len();
        for i in 0..=s {
            table.add(i, deg + i, binomial(s, i));
        }
    }
    Ok(table)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Carries an order of linear quotients of the facet ideal of `delta` to the
/// facet ideal of the expanded complex: generators over the same base facet
/// are ordered lexicographically by their copy-index tuples, and distinct
/// base facets keep the base order. The colon sets of the result are
/// computed in closed form from the base sets and the copy indices, and are
/// cross-checked against the direct colon computation.
pub fn expansion_order(
    delta: &SimplicialComplex,
    cert: &LinearQuotientsCertificate,
    alpha: &ExpansionVector,
) -> Result<LinearQuotientsCertificate, IdealError> {
    let base_ideal = MonomialIdeal::facet_ideal(delta)?;
    if cert.order.len() != base_ideal.generator_count() {
        return Err(IdealError::CertificateMismatch(
            "certificate does not fit the facet ideal of the complex",
        ));
    }
    alpha.check_len(delta.vertex_count())?;
    let expanded = delta.expand(alpha)?;
    let expanded_ideal = MonomialIdeal::facet_ideal(&expanded)?;
    let offsets = alpha.offsets();

    // base facet mask -> (position in cert order, colon set of the base)
    let base_index: HashMap<Face, usize> = base_ideal
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();
    let mut base_pos = vec![0usize; cert.order.len()];
    for (pos, &g) in cert.order.iter().enumerate() {
        base_pos[g] = pos;
    }

    struct Decomposed {
        gen: usize,
        base_position: usize,
        copies: Vec<u32>,
        base_set: Face,
        support: Face,
    }
    let mut decomposed: Vec<Decomposed> = expanded_ideal
        .generators()
        .iter()
        .enumerate()
        .map(|(gen, &supp)| {
            let mut base = Face::EMPTY;
            let mut copies = Vec::with_capacity(supp.len());
            for e in supp.iter() {
                let (r, c) = base_of(&offsets, e);
                base = base.with(r);
                copies.push(c);
            }
            let b = base_index[&base];
            Decomposed {
                gen,
                base_position: base_pos[b],
                copies,
                base_set: cert.sets[base_pos[b]],
                support: supp,
            }
        })
        .collect();
    decomposed.sort_by(|a, b| {
        a.base_position
            .cmp(&b.base_position)
            .then_with(|| a.copies.cmp(&b.copies))
    });

    let order: Vec<usize> = decomposed.iter().map(|d| d.gen).collect();
    let result = LinearQuotientsCertificate::from_order(&expanded_ideal, order)?;

    // closed-form sets: copies of base colon variables, plus earlier copies
    // of the support's own members
    for (t, d) in decomposed.iter().enumerate() {
        let mut predicted = Face::EMPTY;
        for i in d.base_set.iter() {
            for c in 1..=alpha.get(i) {
                predicted = predicted.with(alpha.expanded_index(i, c));
            }
        }
        for e in d.support.iter() {
            let (i, r) = base_of(&offsets, e);
            for c in 1..r {
                predicted = predicted.with(alpha.expanded_index(i, c));
            }
        }
        if predicted != result.sets[t] {
            return Err(IdealError::ExpansionSetMismatch { position: t });
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn minimal_generating_set_is_kept() {
        let i = ideal(2, &[&[0], &[0, 1]]);
        assert_eq!(i.generators(), &[f(&[0])]);
        assert_eq!(
            MonomialIdeal::new(names(1), &[Face::EMPTY]),
            Err(IdealError::UnitMonomial)
        );
    }

    #[test]
    fn facet_ideal_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let i = MonomialIdeal::facet_ideal(&c).unwrap();
        assert_eq!(i.generators(), &[f(&[0, 1]), f(&[1, 2])]);

        let pt = complex(1, &[&[0]]);
        assert_eq!(
            MonomialIdeal::facet_ideal(&pt).unwrap().generators(),
            &[f(&[0])]
        );

        assert_eq!(
            MonomialIdeal::facet_ideal(&complex(1, &[])),
            Err(IdealError::DegenerateComplex)
        );
        assert_eq!(
            MonomialIdeal::facet_ideal(&complex(1, &[&[]])),
            Err(IdealError::DegenerateComplex)
        );
    }

    #[test]
    fn facet_ideal_of_expansion_counts_generators() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let alpha = ExpansionVector::new(vec![2, 2, 1]).unwrap();
        let e = c.expand(&alpha).unwrap();
        let i = MonomialIdeal::facet_ideal(&e).unwrap();
        // 2*2 + 2*1
        assert_eq!(i.generator_count(), 6);
    }

    #[test]
    fn stanley_reisner_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let i = MonomialIdeal::stanley_reisner_ideal(&c).unwrap();
        assert_eq!(i.generators(), &[f(&[0, 2])]);

        let full = complex(3, &[&[0, 1, 2]]);
        assert!(MonomialIdeal::stanley_reisner_ideal(&full)
            .unwrap()
            .is_zero());

        let pts = complex(3, &[&[0], &[1], &[2]]);
        let i = MonomialIdeal::stanley_reisner_ideal(&pts).unwrap();
        assert_eq!(i.generators(), &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]);
    }

    #[test]
    fn complex_of_ideal_roundtrips() {
        let i = ideal(3, &[&[0, 2]]);
        let c = i.complex_of_ideal();
        assert_eq!(c.facets(), &[f(&[0, 1]), f(&[1, 2])]);
        assert_eq!(MonomialIdeal::stanley_reisner_ideal(&c).unwrap(), i);

        assert!(MonomialIdeal::zero(names(3))
            .complex_of_ideal()
            .is_full_simplex());

        let maximal = ideal(3, &[&[0], &[1], &[2]]);
        assert!(maximal.complex_of_ideal().is_irrelevant());
    }

    #[test]
    fn alexander_dual_examples() {
        let i = ideal(3, &[&[0, 1], &[1, 2]]);
        let d = i.alexander_dual_ideal().unwrap();
        assert_eq!(d.generators(), &[f(&[1]), f(&[0, 2])]);
        assert_eq!(d.alexander_dual_ideal().unwrap(), i);

        let single = ideal(2, &[&[0, 1]]);
        assert_eq!(
            single.alexander_dual_ideal().unwrap().generators(),
            &[f(&[0]), f(&[1])]
        );

        let vars = ideal(2, &[&[0], &[1]]);
        assert_eq!(
            vars.alexander_dual_ideal().unwrap().generators(),
            &[f(&[0, 1])]
        );

        assert_eq!(
            MonomialIdeal::zero(names(2)).alexander_dual_ideal(),
            Err(IdealError::ZeroIdeal)
        );
    }

    #[test]
    fn dual_against_brute_force_on_three_variables() {
        // I^dual = monomials whose support meets every generator support,
        // minimalized; checked by brute force over all squarefree monomials
        let i = ideal(3, &[&[0, 1], &[1, 2]]);
        let mut brute: Vec<Face> = (1u64..8)
            .map(Face::from_bits)
            .filter(|m| {
                i.generators()
                    .iter()
                    .all(|g| !g.intersection(*m).is_empty())
            })
            .collect();
        brute = minimal_antichain(brute);
        assert_eq!(i.alexander_dual_ideal().unwrap().generators(), &brute[..]);
    }

    #[test]
    fn facet_dual_is_intersection_of_facet_primes() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let j = MonomialIdeal::facet_ideal_dual(&c).unwrap();
        assert_eq!(j.generators(), &[f(&[1]), f(&[0, 2])]);

        let simplex = complex(4, &[&[0, 1, 2, 3]]);
        let j = MonomialIdeal::facet_ideal_dual(&simplex).unwrap();
        assert_eq!(j.generators(), &[f(&[0]), f(&[1]), f(&[2]), f(&[3])]);

        // dual of the dual recovers the facet ideal
        let c = complex(4, &[&[0, 1, 2], &[2, 3]]);
        let j = MonomialIdeal::facet_ideal_dual(&c).unwrap();
        assert_eq!(
            j.alexander_dual_ideal().unwrap(),
            MonomialIdeal::facet_ideal(&c).unwrap()
        );
    }

    #[test]
    fn dual_equals_stanley_reisner_of_complement() {
        for c in [
            complex(3, &[&[0, 1], &[1, 2]]),
            complex(4, &[&[0, 1, 2], &[2, 3]]),
            complex(3, &[&[0], &[1], &[2]]),
            complex(5, &[&[0, 1], &[1, 2], &[2, 3, 4]]),
        ] {
            let j = MonomialIdeal::facet_ideal_dual(&c).unwrap();
            let sr = MonomialIdeal::stanley_reisner_ideal(&c.complement().unwrap()).unwrap();
            assert_eq!(j, sr);
        }
    }

    #[test]
    fn generator_expansion_substitutes_full_blocks() {
        // J = (x1, x2) on the edge, multiplicities (2,1)
        let j = ideal(2, &[&[0], &[1]]);
        let alpha = ExpansionVector::new(vec![2, 1]).unwrap();
        let e = j.expand_generators(&alpha).unwrap();
        assert_eq!(e.variables(), &["x1_1", "x1_2", "x2_1"]);
        assert_eq!(e.generators(), &[f(&[2]), f(&[0, 1])]);

        // (x2, x1x3) with multiplicities (2,1,1)
        let j = ideal(3, &[&[1], &[0, 2]]);
        let alpha = ExpansionVector::new(vec![2, 1, 1]).unwrap();
        let e = j.expand_generators(&alpha).unwrap();
        assert_eq!(e.generators(), &[f(&[2]), f(&[0, 1, 3])]);

        // identity multiplicities only rename
        let e = j.expand_generators(&ExpansionVector::ones(3)).unwrap();
        assert_eq!(e.generators(), j.generators());
    }

    #[test]
    fn expanded_dual_generators_match_substitution() {
        for (c, alpha) in [
            (complex(3, &[&[0, 1], &[1, 2]]), vec![2, 1, 1]),
            (complex(2, &[&[0, 1]]), vec![2, 2]),
            (complex(4, &[&[0, 1, 2], &[2, 3]]), vec![2, 1, 2, 1]),
        ] {
            let alpha = ExpansionVector::new(alpha).unwrap();
            let lhs = MonomialIdeal::facet_ideal_dual(&c)
                .unwrap()
                .expand_generators(&alpha)
                .unwrap();
            let rhs = MonomialIdeal::facet_ideal_dual(&c.expand(&alpha).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linear_quotients_on_path_ideal() {
        let i = ideal(3, &[&[0, 1], &[1, 2]]);
        let cert = i.linear_quotients_order().unwrap().found().unwrap().clone();
        assert_eq!(cert.order(), &[0, 1]);
        assert_eq!(cert.sets(), &[Face::EMPTY, f(&[0])]);
        assert_eq!(cert.max_set_size(), 1);
    }

    #[test]
    fn disjoint_supports_have_no_linear_quotients() {
        let i = ideal(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(
            i.linear_quotients_order().unwrap(),
            LinearQuotients::NotFound
        );
    }

    #[test]
    fn single_generator_is_trivially_linear_quotients() {
        let i = ideal(3, &[&[0, 1, 2]]);
        let cert = i.linear_quotients_order().unwrap().found().unwrap().clone();
        assert_eq!(cert.order(), &[0]);
        assert_eq!(cert.sets(), &[Face::EMPTY]);
    }

    #[test]
    fn cap_reports_undecided() {
        let i = ideal(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            i.linear_quotients_order_capped(1).unwrap(),
            LinearQuotients::Undecided
        );
    }

    #[test]
    fn invalid_orders_are_rejected() {
        let i = ideal(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(
            LinearQuotientsCertificate::from_order(&i, vec![0, 1]),
            Err(IdealError::NotLinearQuotients { position: 1 })
        );
        assert!(matches!(
            LinearQuotientsCertificate::from_order(&i, vec![0, 0]),
            Err(IdealError::CertificateMismatch(_))
        ));
    }

    #[test]
    fn closed_form_betti_tables() {
        // path edge ideal: Taylor complex is minimal
        let i = ideal(3, &[&[0, 1], &[1, 2]]);
        let cert = i.linear_quotients_order().unwrap().found().unwrap().clone();
        let t = betti_from_linear_quotients(&cert, &i).unwrap();
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.entries().count(), 2);

        // Koszul on three variables
        let i = ideal(3, &[&[0], &[1], &[2]]);
        let cert = i.linear_quotients_order().unwrap().found().unwrap().clone();
        let t = betti_from_linear_quotients(&cert, &i).unwrap();
        assert_eq!(t.get(0, 1), 3);
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 1);

        // single generator of degree d
        let i = ideal(4, &[&[0, 1, 2, 3]]);
        let cert = i.linear_quotients_order().unwrap().found().unwrap().clone();
        let t = betti_from_linear_quotients(&cert, &i).unwrap();
        assert_eq!(t.get(0, 4), 1);
        assert_eq!(t.entries().count(), 1);
    }

    #[test]
    fn expansion_order_on_doubled_edge() {
        let c = complex(2, &[&[0, 1]]);
        let base = MonomialIdeal::facet_ideal(&c).unwrap();
        let cert = base
            .linear_quotients_order()
            .unwrap()
            .found()
            .unwrap()
            .clone();
        let alpha = ExpansionVector::new(vec![2, 2]).unwrap();
        let e = expansion_order(&c, &cert, &alpha).unwrap();
        // expanded generators in canonical order: x1_1x2_1, x1_1x2_2, x1_2x2_1, x1_2x2_2
        // lex on copy tuples keeps exactly that order
        assert_eq!(e.order(), &[0, 1, 2, 3]);
        let sizes: Vec<usize> = e.sets().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 2]);
    }

    #[test]
    fn expansion_order_identity_multiplicities() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let base = MonomialIdeal::facet_ideal(&c).unwrap();
        let cert = base
            .linear_quotients_order()
            .unwrap()
            .found()
            .unwrap()
            .clone();
        let e = expansion_order(&c, &cert, &ExpansionVector::ones(3)).unwrap();
        assert_eq!(e.order(), cert.order());
        assert_eq!(e.sets(), cert.sets());
    }

    #[test]
    fn expansion_order_max_set_size_on_path() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let base = MonomialIdeal::facet_ideal(&c).unwrap();
        let cert = base
            .linear_quotients_order()
            .unwrap()
            .found()
            .unwrap()
            .clone();
        let alpha = ExpansionVector::new(vec![2, 2, 2]).unwrap();
        let e = expansion_order(&c, &cert, &alpha).unwrap();
        // pd(I)·s + (d+1)(s−1) = 1·2 + 2·1 = 4
        assert_eq!(e.max_set_size(), 4);
    }

    #[test]
    fn linear_quotients_survive_expansion_both_ways() {
        // seeded small sweep of the equivalence: the facet ideal has linear
        // quotients iff the facet ideal of the expansion does
        let cases = [
            (complex(3, &[&[0, 1], &[1, 2]]), vec![2, 1, 2]),
            (complex(4, &[&[0, 1], &[2, 3]]), vec![2, 2, 1, 1]),
            (complex(4, &[&[0, 1, 2], &[2, 3]]), vec![1, 2, 1, 2]),
            (complex(3, &[&[0], &[1], &[2]]), vec![2, 2, 2]),
        ];
        for (c, alpha) in cases {
            let alpha = ExpansionVector::new(alpha).unwrap();
            let base = MonomialIdeal::facet_ideal(&c).unwrap();
            let expanded = MonomialIdeal::facet_ideal(&c.expand(&alpha).unwrap()).unwrap();
            let base_lq = matches!(
                base.linear_quotients_order_capped(16).unwrap(),
                LinearQuotients::Found(_)
            );
            let exp_lq = matches!(
                expanded.linear_quotients_order_capped(16).unwrap(),
                LinearQuotients::Found(_)
            );
            assert_eq!(base_lq, exp_lq);
        }
    }
}
