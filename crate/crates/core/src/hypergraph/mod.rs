//! Finite directed hypergraphs whose hyperedges carry ordered source and range
//! sequences. The order of each sequence fixes the indexing `s(h)_i`, `r(h)_j`
//! used by the generators `h[i,j]` and `h*[i,j]`.

mod convert;
mod format;
mod hom;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexer::is_valid_name;

pub use convert::{EdgeGroup, GraphEdge, SeparatedGraph, WeightedGraph};
pub use hom::{check_homomorphism, HomCheck, HypergraphHom};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    pub name: String,
    pub source: Vec<VertexId>,
    pub range: Vec<VertexId>,
}

/// Name-level description of a hyperedge, used when building a [`Hypergraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSpec {
    pub name: String,
    pub source: Vec<String>,
    pub range: Vec<String>,
}

impl EdgeSpec {
    pub fn new(name: &str, source: &[&str], range: &[&str]) -> Self {
        EdgeSpec {
            name: name.to_string(),
            source: source.iter().map(|s| s.to_string()).collect(),
            range: range.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: Vec<Hyperedge>,
    vertex_lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<String, EdgeId>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Validates names, declared vertices and nonempty sequences.
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeSpec>) -> Result<Hypergraph> {
        let mut seen = HashSet::new();
        let mut vertex_lookup = HashMap::new();
        for (idx, v) in vertices.iter().enumerate() {
            if !is_valid_name(v) {
                return Err(Error::InvalidName(v.clone()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateName(v.clone()));
            }
            vertex_lookup.insert(v.clone(), VertexId(idx));
        }
        let mut edge_lookup = HashMap::new();
        let mut built = Vec::with_capacity(edges.len());
        for (idx, spec) in edges.into_iter().enumerate() {
            if !is_valid_name(&spec.name) {
                return Err(Error::InvalidName(spec.name));
            }
            if !seen.insert(spec.name.clone()) {
                return Err(Error::DuplicateName(spec.name));
            }
            if spec.source.is_empty() {
                return Err(Error::EmptySource(spec.name));
            }
            if spec.range.is_empty() {
                return Err(Error::EmptyRange(spec.name));
            }
            let resolve = |names: &[String]| -> Result<Vec<VertexId>> {
                names
                    .iter()
                    .map(|n| {
                        vertex_lookup.get(n).copied().ok_or_else(|| Error::UndeclaredVertex {
                            vertex: n.clone(),
                            user: spec.name.clone(),
                        })
                    })
                    .collect()
            };
            let source = resolve(&spec.source)?;
            let range = resolve(&spec.range)?;
            edge_lookup.insert(spec.name.clone(), EdgeId(idx));
            built.push(Hyperedge {
                name: spec.name,
                source,
                range,
            });
        }
        Ok(Hypergraph {
            vertices,
            edges: built,
            vertex_lookup,
            edge_lookup,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &[&str], &[&str])]) -> Result<Hypergraph> {
        Hypergraph::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges.iter().map(|(n, s, r)| EdgeSpec::new(n, s, r)).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Hyperedge {
        &self.edges[e.0]
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_lookup.get(name).copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge_specs(&self) -> Vec<EdgeSpec> {
        self.edges
            .iter()
            .map(|e| EdgeSpec {
                name: e.name.clone(),
                source: e.source.iter().map(|v| self.vertices[v.0].clone()).collect(),
                range: e.range.iter().map(|v| self.vertices[v.0].clone()).collect(),
            })
            .collect()
    }

    /// Restriction to a vertex and hyperedge subset; orderings are inherited.
    pub fn subhypergraph(&self, vertices: &[&str], edges: &[&str]) -> Result<Hypergraph> {
        let mut keep_v = HashSet::new();
        for v in vertices {
            if self.vertex_id(v).is_none() {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            keep_v.insert(*v);
        }
        let mut keep_e = HashSet::new();
        for e in edges {
            let id = self.edge_id(e).ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
            let edge = self.edge(id);
            for v in edge.source.iter().chain(&edge.range) {
                let name = self.vertex_name(*v);
                if !keep_v.contains(name) {
                    return Err(Error::SubhypergraphClosure {
                        edge: e.to_string(),
                        vertex: name.to_string(),
                    });
                }
            }
            keep_e.insert(*e);
        }
        let vs = self
            .vertices
            .iter()
            .filter(|v| keep_v.contains(v.as_str()))
            .cloned()
            .collect();
        let es = self
            .edge_specs()
            .into_iter()
            .filter(|e| keep_e.contains(e.name.as_str()))
            .collect();
        Hypergraph::new(vs, es)
    }

    /// Equality ignoring the order inside source/range sequences and the order of hyperedges.
    pub fn same_up_to_ordering(&self, other: &Hypergraph) -> bool {
        type Sides = (Vec<String>, Vec<String>);
        fn canonical(h: &Hypergraph) -> (Vec<String>, BTreeMap<String, Sides>) {
            let mut vs = h.vertices.clone();
            vs.sort();
            let es = h
                .edge_specs()
                .into_iter()
                .map(|mut e| {
                    e.source.sort();
                    e.range.sort();
                    (e.name, (e.source, e.range))
                })
                .collect();
            (vs, es)
        }
        canonical(self) == canonical(other)
    }

    /// Parses the `.hg` format.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        format::parse_hg(text)
    }

    /// Serializes to the `.hg` format; `parse(serialize(h)) == h`.
    pub fn serialize(&self) -> String {
        format::write_hg(self)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Hypergraphs used throughout the tests and documentation.
pub mod samples {
    use super::Hypergraph;

    /// Four vertices and one hyperedge `h: v1 v2 -> w1 w2`.
    pub fn two_by_two() -> Hypergraph {
        Hypergraph::from_parts(&["v1", "v2", "w1", "w2"], &[("h", &["v1", "v2"], &["w1", "w2"])]).unwrap()
    }

    /// One vertex with one loop; its algebra is the Laurent polynomial ring.
    pub fn laurent() -> Hypergraph {
        Hypergraph::from_parts(&["u"], &[("l", &["u"], &["u"])]).unwrap()
    }

    /// One vertex, `f: u -> u u`; the Leavitt algebra of type (1,2).
    pub fn leavitt_1_2() -> Hypergraph {
        Hypergraph::from_parts(&["u"], &[("f", &["u"], &["u", "u"])]).unwrap()
    }

    /// One vertex, `g: u u -> u u u`; the Leavitt algebra of type (2,3).
    pub fn leavitt_2_3() -> Hypergraph {
        Hypergraph::from_parts(&["u"], &[("g", &["u", "u"], &["u", "u", "u"])]).unwrap()
    }

    /// A single vertex and no hyperedges.
    pub fn point() -> Hypergraph {
        Hypergraph::from_parts(&["u"], &[]).unwrap()
    }

    /// Two vertices and two opposite edges forming a cycle.
    pub fn two_cycle() -> Hypergraph {
        Hypergraph::from_parts(&["u1", "u2"], &[("l1", &["u1"], &["u2"]), ("l2", &["u2"], &["u1"])]).unwrap()
    }
}
