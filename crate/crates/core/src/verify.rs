//! Seeded randomized verification suites.
//!
//! Every suite draws instances from a pinned generator (ChaCha8, one stream
//! per trial, trial t seeded with `seed + t`; all sampling is plain
//! `next_u64() % bound`), evaluates both sides of one equality or
//! equivalence through disjoint code paths, and aggregates a deterministic
//! report: identical (suite, seed, trials, caps) always produce identical
//! reports. Trials that hit a search cap are counted as skipped; a failure
//! records the full instance as loadable JSON.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::betti::ModuleKind;
use crate::complex::SimplicialComplex;
use crate::expansion::ExpansionVector;
use crate::face::Face;
use crate::graph::Graph;
use crate::homology::{
    hochster_betti, is_cohen_macaulay, is_sequentially_cohen_macaulay, is_shellable_capped,
    is_vertex_decomposable_budgeted, FieldSpec, Shelling, HOCHSTER_VARIABLE_CAP,
};
use crate::ideal::{betti_from_linear_quotients, expansion_order, LinearQuotients, MonomialIdeal};
use crate::io;

/// The available suite names, exactly as accepted on the command line.
pub const SUITE_NAMES: &[&str] = &[
    "dual-betti",
    "dual-cm",
    "regularity",
    "linear-resolution",
    "lemma-J",
    "lemma-epsilon",
    "betti-lq",
    "pd-linear",
    "graph-cochordal",
    "graph-coshellable",
    "graph-cocm",
    "graph-dual-vd",
    "vertex-duplication",
    "twin-removal",
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite `{name}` (expected one of {})", SUITE_NAMES.join(", "))]
    UnknownSuite { name: String },
}

/// Instance-size caps for the generators and searches.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Vertices of a random complex.
    pub max_vertices: usize,
    /// Generating faces drawn per random complex (facets after pruning).
    pub max_facets: usize,
    /// Largest multiplicity entry.
    pub max_mult: u32,
    /// Vertices of a random graph.
    pub max_graph_vertices: usize,
    /// Generator cap of the linear-quotients search.
    pub lq_cap: usize,
    /// Facet cap of the shellability search.
    pub shelling_cap: usize,
    /// Subcomplex budget of the vertex-decomposability search.
    pub vd_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 6,
            max_facets: 8,
            max_mult: 3,
            max_graph_vertices: 7,
            lq_cap: 12,
            shelling_cap: 10,
            vd_budget: 50_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteFailure {
    pub seed: u64,
    pub instance: serde_json::Value,
}

/// Aggregated result of one suite run; `passes + failures + skipped` always
/// equals `trials`.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: u64,
    pub passes: u64,
    pub skipped: u64,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "suite {:<18} trials {:>5}  passes {:>5}  skipped {:>5}  failures {:>3}  -> {}",
            self.suite,
            self.trials,
            self.passes,
            self.skipped,
            self.failures.len(),
            if self.passed() { "ok" } else { "FAILED" }
        )?;
        for fail in &self.failures {
            write!(
                f,
                "\n  counterexample (seed {}): {}",
                fail.seed, fail.instance
            )?;
        }
        Ok(())
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(serde_json::Value),
}

/// Runs `trials` independent trials of the named suite.
pub fn run_suite(
    name: &str,
    trials: u64,
    seed: u64,
    caps: &Caps,
) -> Result<SuiteReport, VerifyError> {
    let trial: fn(&mut TrialRng, &Caps) -> Outcome = match name {
        "dual-betti" => trial_dual_betti,
        "dual-cm" => trial_dual_cm,
        "regularity" => trial_regularity,
        "linear-resolution" => trial_linear_resolution,
        "lemma-J" => trial_generator_substitution,
        "lemma-epsilon" => trial_expansion_increment,
        "betti-lq" => trial_betti_closed_form,
        "pd-linear" => trial_pd_under_expansion,
        "graph-cochordal" => trial_graph_cochordal,
        "graph-coshellable" => trial_graph_coshellable,
        "graph-cocm" => trial_graph_cocm,
        "graph-dual-vd" => trial_graph_dual_vd,
        "vertex-duplication" => trial_vertex_duplication,
        "twin-removal" => trial_twin_removal,
        other => {
            return Err(VerifyError::UnknownSuite {
                name: other.to_string(),
            })
        }
    };
    let mut report = SuiteReport {
        suite: name.to_string(),
        trials,
        passes: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let mut rng = TrialRng::new(trial_seed);
        match trial(&mut rng, caps) {
            Outcome::Pass => report.passes += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail(instance) => report.failures.push(SuiteFailure {
                seed: trial_seed,
                instance,
            }),
        }
    }
    report.failures.sort_by_key(|f| f.seed);
    Ok(report)
}

pub struct TrialRng(ChaCha8Rng);

impl TrialRng {
    pub fn new(seed: u64) -> Self {
        TrialRng(ChaCha8Rng::seed_from_u64(seed))
    }

    fn next(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-enough value in 0..n (plain modulo; n is tiny here).
    fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next() % n
    }

    fn range1(&mut self, max: u64) -> u64 {
        1 + self.below(max)
    }

    fn nonempty_subset(&mut self, n: usize) -> Face {
        Face::from_bits(self.range1((1u64 << n) - 1))
    }

    fn subset_of_size(&mut self, n: usize, k: usize) -> Face {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut out = Face::EMPTY;
        for _ in 0..k {
            let pick = self.below(pool.len() as u64) as usize;
            out = out.with(pool.swap_remove(pick));
        }
        out
    }
}

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// A random complex with every vertex table entry present and one to
/// `max_facets` generating faces, pruned to the facet antichain.
fn random_complex(rng: &mut TrialRng, caps: &Caps) -> SimplicialComplex {
    let n = rng.range1(caps.max_vertices as u64) as usize;
    let k = rng.range1(caps.max_facets as u64) as usize;
    let faces: Vec<Face> = (0..k).map(|_| rng.nonempty_subset(n)).collect();
    SimplicialComplex::from_facets(vertex_names(n), &faces).expect("generated in range")
}

/// A random multiplicity vector; when `ambient_cap` is given and the first
/// draw would exceed it the entries are redrawn with multiplicities at most
/// two (our vertex caps make that always fit).
fn random_alpha(
    rng: &mut TrialRng,
    n: usize,
    max_mult: u32,
    ambient_cap: Option<usize>,
) -> ExpansionVector {
    let entries: Vec<u32> = (0..n).map(|_| rng.range1(max_mult as u64) as u32).collect();
    let total: usize = entries.iter().map(|&e| e as usize).sum();
    if let Some(cap) = ambient_cap {
        if total > cap {
            let entries: Vec<u32> = (0..n)
                .map(|_| rng.range1(max_mult.min(2) as u64) as u32)
                .collect();
            let total: usize = entries.iter().map(|&e| e as usize).sum();
            if total > cap {
                return ExpansionVector::ones(n);
            }
            return ExpansionVector::new(entries).expect("entries are positive");
        }
    }
    ExpansionVector::new(entries).expect("entries are positive")
}

/// Erdős–Rényi graph with edge probability drawn from {0.3, 0.5, 0.7}.
fn random_graph(rng: &mut TrialRng, caps: &Caps) -> Graph {
    let n = rng.range1(caps.max_graph_vertices as u64) as usize;
    let p = [3u64, 5, 7][rng.below(3) as usize];
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.below(10) < p {
                edges.push((a, b));
            }
        }
    }
    Graph::new(vertex_names(n), &edges).expect("generated in range")
}

fn complex_json(c: &SimplicialComplex) -> serde_json::Value {
    serde_json::to_value(io::complex_to_file(c)).expect("serializable")
}

fn graph_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(io::graph_to_file(g)).expect("serializable")
}

fn ideal_json(i: &MonomialIdeal) -> serde_json::Value {
    serde_json::to_value(io::ideal_to_file(i)).expect("serializable")
}

// --- the individual suites -------------------------------------------------

/// Total Betti numbers of the quotient by the dual of the facet ideal are
/// unchanged by expansion; both sides run through the homology oracle.
fn trial_dual_betti(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let alpha = random_alpha(
        rng,
        delta.vertex_count(),
        caps.max_mult,
        Some(HOCHSTER_VARIABLE_CAP),
    );
    let j = MonomialIdeal::facet_ideal_dual(&delta).expect("nonvoid with nonempty facets");
    let je = MonomialIdeal::facet_ideal_dual(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");
    let left = hochster_betti(&j, FieldSpec::Rationals, ModuleKind::Quotient)
        .expect("within ambient cap")
        .total_betti();
    let right = hochster_betti(&je, FieldSpec::Rationals, ModuleKind::Quotient)
        .expect("within ambient cap")
        .total_betti();
    if left == right {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "alpha": alpha.entries(),
            "left_totals": left,
            "right_totals": right,
        }))
    }
}

/// Cohen–Macaulayness of the quotient by the dual ideal is an invariant of
/// expansion, over the rationals and over GF(2).
fn trial_dual_cm(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let alpha = random_alpha(
        rng,
        delta.vertex_count(),
        caps.max_mult,
        Some(HOCHSTER_VARIABLE_CAP),
    );
    let j = MonomialIdeal::facet_ideal_dual(&delta).expect("nonvoid with nonempty facets");
    let je = MonomialIdeal::facet_ideal_dual(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");
    let (cl, cr) = (j.complex_of_ideal(), je.complex_of_ideal());
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
        let left = is_cohen_macaulay(&cl, field).expect("nonvoid");
        let right = is_cohen_macaulay(&cr, field).expect("nonvoid");
        if left != right {
            return Outcome::Fail(json!({
                "complex": complex_json(&delta),
                "alpha": alpha.entries(),
                "field": field.to_string(),
                "left_cm": left,
                "right_cm": right,
            }));
        }
    }
    Outcome::Pass
}

/// Regularity of the facet ideal is unchanged by expansion (homology oracle
/// on both sides).
fn trial_regularity(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let alpha = random_alpha(
        rng,
        delta.vertex_count(),
        caps.max_mult,
        Some(HOCHSTER_VARIABLE_CAP),
    );
    let i = MonomialIdeal::facet_ideal(&delta).expect("nonvoid with nonempty facets");
    let ie = MonomialIdeal::facet_ideal(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");
    let left = hochster_betti(&i, FieldSpec::Rationals, ModuleKind::Ideal)
        .expect("within ambient cap")
        .regularity();
    let right = hochster_betti(&ie, FieldSpec::Rationals, ModuleKind::Ideal)
        .expect("within ambient cap")
        .regularity();
    if left == right {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "alpha": alpha.entries(),
            "left_reg": left,
            "right_reg": right,
        }))
    }
}

/// Having a linear resolution is an invariant of expansion, over the
/// rationals and over GF(2).
fn trial_linear_resolution(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let alpha = random_alpha(
        rng,
        delta.vertex_count(),
        caps.max_mult,
        Some(HOCHSTER_VARIABLE_CAP),
    );
    let i = MonomialIdeal::facet_ideal(&delta).expect("nonvoid with nonempty facets");
    let ie = MonomialIdeal::facet_ideal(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
        let left = hochster_betti(&i, field, ModuleKind::Ideal)
            .expect("within ambient cap")
            .has_linear_resolution();
        let right = hochster_betti(&ie, field, ModuleKind::Ideal)
            .expect("within ambient cap")
            .has_linear_resolution();
        if left != right {
            return Outcome::Fail(json!({
                "complex": complex_json(&delta),
                "alpha": alpha.entries(),
                "field": field.to_string(),
                "left_linear": left,
                "right_linear": right,
            }));
        }
    }
    Outcome::Pass
}

/// The minimal generators of the dual ideal of the expanded complex are the
/// block substitutions of the dual ideal's generators.
fn trial_generator_substitution(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let alpha = random_alpha(rng, delta.vertex_count(), caps.max_mult, None);
    let substituted = MonomialIdeal::facet_ideal_dual(&delta)
        .expect("nonvoid with nonempty facets")
        .expand_generators(&alpha)
        .expect("lengths match");
    let direct = MonomialIdeal::facet_ideal_dual(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");
    if substituted == direct {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "alpha": alpha.entries(),
            "substituted": ideal_json(&substituted),
            "direct": ideal_json(&direct),
        }))
    }
}

/// Bumping one multiplicity is the same as duplicating the corresponding
/// copy in a second expansion round, up to the canonical relabeling.
fn trial_expansion_increment(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let delta = random_complex(rng, caps);
    let n = delta.vertex_count();
    let beta = random_alpha(rng, n, caps.max_mult.min(2), None);
    let bump = rng.below(n as u64) as usize;
    match delta.expansion_increment_agrees(&beta, bump) {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "beta": beta.entries(),
            "bump": bump,
        })),
        Err(e) => Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "beta": beta.entries(),
            "bump": bump,
            "error": e.to_string(),
        })),
    }
}

/// Where the linear-quotients search succeeds, the closed-form Betti table
/// from the colon sets equals the homology oracle's table entrywise.
fn trial_betti_closed_form(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let n = rng.range1(caps.max_vertices as u64) as usize;
    let k = rng.range1(10) as usize;
    let supports: Vec<Face> = (0..k).map(|_| rng.nonempty_subset(n)).collect();
    let ideal = MonomialIdeal::new(vertex_names(n), &supports).expect("generated in range");
    let cert = match ideal
        .linear_quotients_order_capped(caps.lq_cap)
        .expect("ideal has generators")
    {
        LinearQuotients::Found(cert) => cert,
        _ => return Outcome::Skip,
    };
    let closed = betti_from_linear_quotients(&cert, &ideal).expect("certificate fits");
    let oracle = hochster_betti(&ideal, FieldSpec::Rationals, ModuleKind::Ideal)
        .expect("within ambient cap");
    if closed == oracle {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "ideal": ideal_json(&ideal),
            "closed_form": closed.to_string(),
            "oracle": oracle.to_string(),
        }))
    }
}

/// Projective dimension under uniform expansion: equality with
/// pd·s + (d+1)(s−1) for pure complexes, and at most that for the rest;
/// the carried certificate must agree with the oracle either way.
fn trial_pd_under_expansion(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let s = rng.range1(2) as u32 + 1; // 2 or 3
    let max_n = caps.max_vertices.min(HOCHSTER_VARIABLE_CAP / s as usize);
    let n = rng.range1(max_n as u64) as usize;
    let delta = if rng.below(2) == 0 {
        // pure: facets drawn from one size
        let size = rng.range1(n as u64) as usize;
        let k = rng.range1(caps.max_facets as u64) as usize;
        let faces: Vec<Face> = (0..k).map(|_| rng.subset_of_size(n, size)).collect();
        SimplicialComplex::from_facets(vertex_names(n), &faces).expect("generated in range")
    } else {
        let local = Caps {
            max_vertices: n,
            ..caps.clone()
        };
        random_complex(rng, &local)
    };
    let ideal = MonomialIdeal::facet_ideal(&delta).expect("nonvoid with nonempty facets");
    let cert = match ideal.linear_quotients_order_capped(caps.lq_cap) {
        Ok(LinearQuotients::Found(cert)) => cert,
        _ => return Outcome::Skip,
    };
    let alpha = ExpansionVector::new(vec![s; delta.vertex_count()]).expect("positive entries");
    let expanded_ideal = MonomialIdeal::facet_ideal(&delta.expand(&alpha).expect("lengths match"))
        .expect("expansion keeps facets nonempty");

    let pd_base = hochster_betti(&ideal, FieldSpec::Rationals, ModuleKind::Ideal)
        .expect("within ambient cap")
        .projective_dimension();
    let pd_expanded = hochster_betti(&expanded_ideal, FieldSpec::Rationals, ModuleKind::Ideal)
        .expect("within ambient cap")
        .projective_dimension();
    let d = delta.dim().expect("nonvoid") as usize;
    let bound = pd_base * s as usize + (d + 1) * (s as usize - 1);

    let carried = match expansion_order(&delta, &cert, &alpha) {
        Ok(c) => c,
        Err(e) => {
            return Outcome::Fail(json!({
                "complex": complex_json(&delta),
                "s": s,
                "error": e.to_string(),
            }))
        }
    };

    let structural_ok = if delta.is_pure() {
        pd_expanded == bound
    } else {
        pd_expanded <= bound
    };
    if structural_ok && carried.max_set_size() == pd_expanded {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "complex": complex_json(&delta),
            "s": s,
            "pure": delta.is_pure(),
            "pd_base": pd_base,
            "pd_expanded": pd_expanded,
            "bound": bound,
            "carried_max_set": carried.max_set_size(),
        }))
    }
}

/// Co-chordality is an invariant of graph expansion; cross-checked against
/// the degree-two-regularity reading of the edge ideal on the base graph.
fn trial_graph_cochordal(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let alpha = random_alpha(rng, g.vertex_count(), caps.max_mult, None);
    let left = g.is_co_chordal();
    let right = g.expand(&alpha).expect("lengths match").is_co_chordal();
    if left != right {
        return Outcome::Fail(json!({
            "graph": graph_json(&g),
            "alpha": alpha.entries(),
            "left_cochordal": left,
            "right_cochordal": right,
        }));
    }
    if g.edge_count() > 0 {
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
            let reg = hochster_betti(
                &g.edge_ideal().expect("has edges"),
                field,
                ModuleKind::Ideal,
            )
            .expect("within ambient cap")
            .regularity();
            if (reg == 2) != left {
                return Outcome::Fail(json!({
                    "graph": graph_json(&g),
                    "field": field.to_string(),
                    "cochordal": left,
                    "edge_ideal_reg": reg,
                }));
            }
        }
    }
    Outcome::Pass
}

/// Shellability of the complement's independence complex is an invariant of
/// graph expansion, on instances the search can decide.
fn trial_graph_coshellable(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let alpha = random_alpha(rng, g.vertex_count(), caps.max_mult, None);
    let left = is_shellable_capped(&g.complement().independence_complex(), caps.shelling_cap)
        .expect("nonvoid");
    let expanded = g.expand(&alpha).expect("lengths match");
    let right = is_shellable_capped(
        &expanded.complement().independence_complex(),
        caps.shelling_cap,
    )
    .expect("nonvoid");
    match (left.is_shellable(), right.is_shellable()) {
        (Some(l), Some(r)) if l == r => Outcome::Pass,
        (Some(l), Some(r)) => Outcome::Fail(json!({
            "graph": graph_json(&g),
            "alpha": alpha.entries(),
            "left_shellable": l,
            "right_shellable": r,
        })),
        _ => Outcome::Skip,
    }
}

/// Cohen–Macaulayness of the complement's independence complex is an
/// invariant of graph expansion, over the rationals and GF(2).
fn trial_graph_cocm(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let alpha = random_alpha(
        rng,
        g.vertex_count(),
        caps.max_mult,
        Some(HOCHSTER_VARIABLE_CAP),
    );
    let left_complex = g.complement().independence_complex();
    let right_complex = g
        .expand(&alpha)
        .expect("lengths match")
        .complement()
        .independence_complex();
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
        let left = is_cohen_macaulay(&left_complex, field).expect("nonvoid");
        let right = is_cohen_macaulay(&right_complex, field).expect("nonvoid");
        if left != right {
            return Outcome::Fail(json!({
                "graph": graph_json(&g),
                "alpha": alpha.entries(),
                "field": field.to_string(),
                "left_cm": left,
                "right_cm": right,
            }));
        }
    }
    Outcome::Pass
}

/// Vertex decomposability of the dual of the independence complex is an
/// invariant of graph expansion, on instances the search can decide.
fn trial_graph_dual_vd(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let alpha = random_alpha(rng, g.vertex_count(), caps.max_mult, None);
    let left =
        is_vertex_decomposable_budgeted(&g.independence_complex().alexander_dual(), caps.vd_budget);
    let right = is_vertex_decomposable_budgeted(
        &g.expand(&alpha)
            .expect("lengths match")
            .independence_complex()
            .alexander_dual(),
        caps.vd_budget,
    );
    match (left.known(), right.known()) {
        (Some(l), Some(r)) if l == r => Outcome::Pass,
        (Some(l), Some(r)) => Outcome::Fail(json!({
            "graph": graph_json(&g),
            "alpha": alpha.entries(),
            "left_vd": l,
            "right_vd": r,
        })),
        _ => Outcome::Skip,
    }
}

enum Implication {
    Holds,
    Violated(&'static str),
    Unknown,
}

/// Checks that each property in {CM over Q, CM over GF(2), SCM over both,
/// shellable} carried by `before` is still carried by `after`.
fn preservation_implications(
    before: &SimplicialComplex,
    after: &SimplicialComplex,
    caps: &Caps,
) -> Implication {
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
        let cm_before = is_cohen_macaulay(before, field).expect("nonvoid");
        if cm_before && !is_cohen_macaulay(after, field).expect("nonvoid") {
            return Implication::Violated("cohen-macaulay");
        }
        let scm_before = is_sequentially_cohen_macaulay(before, field).expect("nonvoid");
        if scm_before && !is_sequentially_cohen_macaulay(after, field).expect("nonvoid") {
            return Implication::Violated("sequentially-cohen-macaulay");
        }
    }
    let sh_before = is_shellable_capped(before, caps.shelling_cap).expect("nonvoid");
    if let Shelling::Shellable(_) = sh_before {
        match is_shellable_capped(after, caps.shelling_cap).expect("nonvoid") {
            Shelling::Shellable(_) => {}
            Shelling::NotShellable => return Implication::Violated("shellable"),
            Shelling::Undecided => return Implication::Unknown,
        }
    }
    Implication::Holds
}

/// Duplicating a vertex (joining the copy to the closed neighborhood)
/// preserves CM, sequential CM and shellability of the independence
/// complex; the duplicated graph is also checked to be the one-bump
/// expansion under the explicit copy layout.
fn trial_vertex_duplication(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let v = rng.below(g.vertex_count() as u64) as usize;
    let dup = g.duplicate_vertex(v).expect("vertex in range");

    let alpha = ExpansionVector::ones_plus_delta(g.vertex_count(), v);
    let hat = g.expand_hat(&alpha).expect("lengths match");
    let offsets = alpha.offsets();
    let mut map: Vec<usize> = (0..g.vertex_count()).map(|u| offsets[u]).collect();
    map.push(offsets[v] + 1);
    if !dup.isomorphic_by(&hat, &map) {
        return Outcome::Fail(json!({
            "graph": graph_json(&g),
            "vertex": v,
            "reason": "duplication is not the one-bump expansion",
        }));
    }

    match preservation_implications(&g.independence_complex(), &dup.independence_complex(), caps) {
        Implication::Holds => Outcome::Pass,
        Implication::Unknown => Outcome::Skip,
        Implication::Violated(what) => Outcome::Fail(json!({
            "graph": graph_json(&g),
            "vertex": v,
            "violated": what,
        })),
    }
}

/// Removing one vertex of a closed-twin pair preserves CM, sequential CM
/// and shellability of the independence complex.
fn trial_twin_removal(rng: &mut TrialRng, caps: &Caps) -> Outcome {
    let g = random_graph(rng, caps);
    let twins = g.closed_twins();
    if twins.is_empty() {
        return Outcome::Skip;
    }
    let (x, _) = twins[rng.below(twins.len() as u64) as usize];
    let removed = g.remove_vertex(x).expect("vertex in range");
    if removed.vertex_count() == 0 {
        return Outcome::Skip;
    }
    match preservation_implications(
        &g.independence_complex(),
        &removed.independence_complex(),
        caps,
    ) {
        Implication::Holds => Outcome::Pass,
        Implication::Unknown => Outcome::Skip,
        Implication::Violated(what) => Outcome::Fail(json!({
            "graph": graph_json(&g),
            "removed": x,
            "violated": what,
        })),
    }
}
