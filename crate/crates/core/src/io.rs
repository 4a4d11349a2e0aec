//! The JSON file formats: complexes, ideals, graphs, Betti tables and
//! homology profiles. Faces, generators and edges are written by vertex
//! name; a void complex carries `"facets": null`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{BettiTable, ModuleKind};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::face::Face;
use crate::graph::{Graph, GraphError};
use crate::homology::HomologyProfile;
use crate::ideal::{IdealError, MonomialIdeal};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    /// `None` encodes the void complex.
    pub facets: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
pub struct BettiFile {
    pub kind: String,
    pub entries: Vec<(usize, usize, u64)>,
}

#[derive(Serialize, Deserialize)]
pub struct ProfileFile {
    pub dims: Vec<(i32, u64)>,
}

fn resolve(names: &[String], wanted: &str) -> Result<usize, IoError> {
    names
        .iter()
        .position(|n| n == wanted)
        .ok_or_else(|| IoError::UnknownVertex(wanted.to_string()))
}

pub fn complex_from_file(file: &ComplexFile) -> Result<SimplicialComplex, IoError> {
    match &file.facets {
        None => Ok(SimplicialComplex::void(file.vertices.clone())?),
        Some(facets) => {
            let mut faces = Vec::with_capacity(facets.len());
            for facet in facets {
                let mut face = Face::EMPTY;
                for name in facet {
                    face = face.with(resolve(&file.vertices, name)?);
                }
                faces.push(face);
            }
            Ok(SimplicialComplex::from_facets(
                file.vertices.clone(),
                &faces,
            )?)
        }
    }
}

pub fn complex_to_file(c: &SimplicialComplex) -> ComplexFile {
    ComplexFile {
        vertices: c.vertex_names().to_vec(),
        facets: if c.is_void() {
            None
        } else {
            Some(c.facets().iter().map(|&f| c.face_names(f)).collect())
        },
    }
}

pub fn ideal_from_file(file: &IdealFile) -> Result<MonomialIdeal, IoError> {
    let mut gens = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        let mut supp = Face::EMPTY;
        for name in g {
            supp = supp.with(resolve(&file.variables, name)?);
        }
        gens.push(supp);
    }
    Ok(MonomialIdeal::new(file.variables.clone(), &gens)?)
}

pub fn ideal_to_file(i: &MonomialIdeal) -> IdealFile {
    IdealFile {
        variables: i.variables().to_vec(),
        generators: i
            .generators()
            .iter()
            .map(|g| g.iter().map(|v| i.variables()[v].clone()).collect())
            .collect(),
    }
}

pub fn graph_from_file(file: &GraphFile) -> Result<Graph, IoError> {
    let mut edges = Vec::with_capacity(file.edges.len());
    for (a, b) in &file.edges {
        edges.push((resolve(&file.vertices, a)?, resolve(&file.vertices, b)?));
    }
    Ok(Graph::new(file.vertices.clone(), &edges)?)
}

pub fn graph_to_file(g: &Graph) -> GraphFile {
    GraphFile {
        vertices: g.vertex_names().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|&(a, b)| (g.vertex_names()[a].clone(), g.vertex_names()[b].clone()))
            .collect(),
    }
}

pub fn betti_to_file(t: &BettiTable) -> BettiFile {
    BettiFile {
        kind: match t.kind() {
            ModuleKind::Ideal => "ideal".to_string(),
            ModuleKind::Quotient => "quotient".to_string(),
        },
        entries: t.entries().collect(),
    }
}

pub fn profile_to_file(p: &HomologyProfile) -> ProfileFile {
    ProfileFile {
        dims: p.nonzero().collect(),
    }
}

/// Best-effort detection of which object a JSON document encodes, by its
/// top-level keys.
pub enum AnyInput {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
    Graph(Graph),
}

pub fn parse_any(text: &str) -> Result<AnyInput, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value.as_object();
    if obj.is_some_and(|o| o.contains_key("facets")) {
        let file: ComplexFile = serde_json::from_value(value)?;
        Ok(AnyInput::Complex(complex_from_file(&file)?))
    } else if obj.is_some_and(|o| o.contains_key("generators")) {
        let file: IdealFile = serde_json::from_value(value)?;
        Ok(AnyInput::Ideal(ideal_from_file(&file)?))
    } else if obj.is_some_and(|o| o.contains_key("edges")) {
        let file: GraphFile = serde_json::from_value(value)?;
        Ok(AnyInput::Graph(graph_from_file(&file)?))
    } else {
        Err(IoError::Json(serde::de::Error::custom(
            "expected one of the keys `facets`, `generators`, `edges`",
        )))
    }
}
