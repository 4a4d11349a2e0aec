//! Simple undirected graphs: independence complexes, the two expansion
//! flavors (copies of a vertex adjacent or not), chordality by maximum
//! cardinality search with an explicit elimination-order check, closed
//! twins, vertex duplication and removal, and edge ideals.

use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::expansion::{ExpansionError, ExpansionVector};
use crate::face::{Face, MAX_VERTICES};
use crate::ideal::{IdealError, MonomialIdeal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertexName(String),
    #[error("vertex table has {0} entries, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex index {vertex} out of range for {table} vertices")]
    VertexOutOfRange { vertex: usize, table: usize },
    #[error("loops are not allowed (edge at vertex {0})")]
    Loop(usize),
    #[error("the edge ideal of an edgeless graph is the zero ideal")]
    EdgelessGraph,
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A simple graph with named vertices, stored as open-neighborhood masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_names: Vec<String>,
    adjacency: Vec<Face>,
}

impl Graph {
    pub fn new<S: Into<String>>(
        names: Vec<S>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let vertex_names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = vertex_names.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &vertex_names {
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateVertexName(name.clone()));
            }
        }
        let mut adjacency = vec![Face::EMPTY; n];
        for &(a, b) in edges {
            let hi = a.max(b);
            if hi >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: hi,
                    table: n,
                });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adjacency[a] = adjacency[a].with(b);
            adjacency[b] = adjacency[b].with(a);
        }
        Ok(Graph {
            vertex_names,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    /// Edges with the smaller endpoint first, in canonical order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for b in self.adjacency[a].iter() {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|m| m.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> Face {
        self.adjacency[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> Face {
        self.adjacency[v].with(v)
    }

    /// The independence complex: its facets are the maximal independent
    /// sets, found by branch-and-bound over the vertices.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let n = self.vertex_count();
        let mut maximal: Vec<Face> = Vec::new();
        // maximal independent sets = maximal cliques of the complement
        let comp_adj: Vec<Face> = (0..n)
            .map(|v| Face::full(n).minus(self.adjacency[v]).without(v))
            .collect();
        bron_kerbosch(
            &comp_adj,
            Face::EMPTY,
            Face::full(n),
            Face::EMPTY,
            &mut maximal,
        );
        if n == 0 {
            maximal.push(Face::EMPTY);
        }
        SimplicialComplex::from_facets(self.vertex_names.clone(), &maximal)
            .expect("independent sets fit the vertex table")
    }

    /// The expansion with copies of the same vertex non-adjacent: copies of
    /// `a` and `b` are joined exactly when {a, b} is an edge.
    pub fn expand(&self, alpha: &ExpansionVector) -> Result<Graph, GraphError> {
        alpha.check_len(self.vertex_count())?;
        let names = alpha.expanded_names(&self.vertex_names);
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            for ca in 1..=alpha.get(a) {
                for cb in 1..=alpha.get(b) {
                    edges.push((alpha.expanded_index(a, ca), alpha.expanded_index(b, cb)));
                }
            }
        }
        Graph::new(names, &edges)
    }

    /// The expansion with copies of the same vertex pairwise adjacent. Its
    /// independence complex is the expansion of the independence complex.
    pub fn expand_hat(&self, alpha: &ExpansionVector) -> Result<Graph, GraphError> {
        let mut g = self.expand(alpha)?;
        for v in 0..self.vertex_count() {
            for ca in 1..=alpha.get(v) {
                for cb in ca + 1..=alpha.get(v) {
                    let ia = alpha.expanded_index(v, ca);
                    let ib = alpha.expanded_index(v, cb);
                    g.adjacency[ia] = g.adjacency[ia].with(ib);
                    g.adjacency[ib] = g.adjacency[ib].with(ia);
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adjacency = (0..n)
            .map(|v| Face::full(n).minus(self.adjacency[v]).without(v))
            .collect();
        Graph {
            vertex_names: self.vertex_names.clone(),
            adjacency,
        }
    }

    /// Chordality in two phases: maximum cardinality search produces a
    /// candidate elimination order, which is then checked explicitly, so a
    /// defective ordering heuristic cannot produce a false positive.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        // maximum cardinality search; ties broken by lowest index
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut mcs = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| (weight[v], usize::MAX - v))
                .unwrap();
            visited[v] = true;
            mcs.push(v);
            for u in self.adjacency[v].iter() {
                if !visited[u] {
                    weight[u] += 1;
                }
            }
        }
        // the reverse of the MCS sequence is an elimination order iff chordal
        let order: Vec<usize> = mcs.into_iter().rev().collect();
        let mut position = vec![0usize; n];
        for (pos, &v) in order.iter().enumerate() {
            position[v] = pos;
        }
        // perfect elimination: later neighbors of v minus the earliest one
        // must all be adjacent to that earliest one
        for (pos, &v) in order.iter().enumerate() {
            let later: Vec<usize> = self.adjacency[v]
                .iter()
                .filter(|&u| position[u] > pos)
                .collect();
            if let Some(&w) = later.iter().min_by_key(|&&u| position[u]) {
                for &u in &later {
                    if u != w && !self.adjacency[w].contains(u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_co_chordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// Adds a fresh vertex adjacent to `v` and all of its neighbors.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                table: n,
            });
        }
        let mut names = self.vertex_names.clone();
        names.push(format!("{}'", self.vertex_names[v]));
        let mut edges = self.edges();
        for u in self.closed_neighborhood(v).iter() {
            edges.push((u, n));
        }
        Graph::new(names, &edges)
    }

    /// All unordered pairs with equal closed neighborhoods.
    pub fn closed_twins(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.closed_neighborhood(a) == self.closed_neighborhood(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Deletes `v` and its incident edges, reindexing the remaining vertices.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                table: n,
            });
        }
        let names: Vec<String> = self
            .vertex_names
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, s)| s.clone())
            .collect();
        let reindex = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (reindex(a), reindex(b)))
            .collect();
        Graph::new(names, &edges)
    }

    /// The edge ideal: one degree-two generator per edge.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal, GraphError> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(GraphError::EdgelessGraph);
        }
        let gens: Vec<Face> = edges
            .iter()
            .map(|&(a, b)| Face::EMPTY.with(a).with(b))
            .collect();
        Ok(MonomialIdeal::new(self.vertex_names.clone(), &gens)?)
    }

    /// Structural equality under an explicit vertex bijection
    /// (`map[i]` = image of vertex i in `other`). Not an isomorphism search.
    pub fn isomorphic_by(&self, other: &Graph, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.has_edge(a, b) != other.has_edge(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Maximal cliques of the graph given by `adj`, with pivoting.
fn bron_kerbosch(adj: &[Face], r: Face, mut p: Face, mut x: Face, out: &mut Vec<Face>) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r);
        }
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| adj[u].intersection(p).len())
        .unwrap();
    for v in p.minus(adj[pivot]).iter() {
        bron_kerbosch(
            adj,
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}
