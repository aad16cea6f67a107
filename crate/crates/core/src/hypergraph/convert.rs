//! Separated graphs and vertex-weighted graphs, and their hypergraph encodings.

use std::collections::{HashMap, HashSet};

use super::{EdgeSpec, Hypergraph};
use crate::error::{Error, Result};
use crate::lexer::{content_lines, is_valid_name, tokenize, LineCursor, Tok};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub name: String,
    pub source: String,
    pub range: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGroup {
    pub name: String,
    /// Indices into the graph's edge list, in declared order.
    pub edges: Vec<usize>,
}

/// A directed graph whose edges are partitioned into groups sharing a source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatedGraph {
    vertices: Vec<String>,
    edges: Vec<GraphEdge>,
    groups: Vec<EdgeGroup>,
}

fn check_vertices(vertices: &[String]) -> Result<HashSet<&str>> {
    let mut seen = HashSet::new();
    for v in vertices {
        if !is_valid_name(v) {
            return Err(Error::InvalidName(v.clone()));
        }
        if !seen.insert(v.as_str()) {
            return Err(Error::DuplicateName(v.clone()));
        }
    }
    Ok(seen)
}

fn check_edges(vertices: &HashSet<&str>, edges: &[GraphEdge]) -> Result<()> {
    for e in edges {
        for v in [&e.source, &e.range] {
            if !vertices.contains(v.as_str()) {
                return Err(Error::UndeclaredVertex {
                    vertex: v.clone(),
                    user: e.name.clone(),
                });
            }
        }
    }
    Ok(())
}

impl SeparatedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<GraphEdge>, groups: Vec<EdgeGroup>) -> Result<Self> {
        let declared = check_vertices(&vertices)?;
        check_edges(&declared, &edges)?;
        let mut owner = vec![None; edges.len()];
        for g in &groups {
            if g.edges.is_empty() {
                return Err(Error::InvalidPresentation(format!("group `{}` is empty", g.name)));
            }
            for &e in &g.edges {
                let slot = owner
                    .get_mut(e)
                    .ok_or_else(|| Error::UnknownEdge(format!("#{e} in group `{}`", g.name)))?;
                if slot.is_some() {
                    return Err(Error::DuplicateName(edges[e].name.clone()));
                }
                *slot = Some(());
            }
            let first = &edges[g.edges[0]].source;
            if g.edges.iter().any(|&e| &edges[e].source != first) {
                return Err(Error::InconsistentGroupSource { group: g.name.clone() });
            }
        }
        if let Some(idx) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPresentation(format!(
                "edge `{}` belongs to no group",
                edges[idx].name
            )));
        }
        Ok(SeparatedGraph {
            vertices,
            edges,
            groups,
        })
    }

    /// Parses `vertices: ...` followed by `group <name> at <vertex>: <range>+` lines.
    /// The edges of group `X` are named `X_1`, `X_2`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut groups = Vec::new();
        for (line, content) in content_lines(text) {
            let tokens = tokenize(content, line)?;
            let mut cur = LineCursor::new(&tokens, line, content.chars().count());
            match cur.peek() {
                Some(Tok::Ident(k)) if k == "vertices" => {
                    cur.keyword("vertices")?;
                    cur.expect(Tok::Colon, "`:`")?;
                    vertices.extend(cur.ident_list("vertex name")?);
                    cur.finish()?;
                }
                Some(Tok::Ident(k)) if k == "group" => {
                    cur.keyword("group")?;
                    let name = cur.ident("group name")?;
                    cur.keyword("at")?;
                    let source = cur.ident("source vertex")?;
                    cur.expect(Tok::Colon, "`:`")?;
                    let ranges = cur.ident_list("range vertex")?;
                    cur.finish()?;
                    let mut members = Vec::new();
                    for (k, r) in ranges.into_iter().enumerate() {
                        members.push(edges.len());
                        edges.push(GraphEdge {
                            name: format!("{name}_{}", k + 1),
                            source: source.clone(),
                            range: r,
                        });
                    }
                    groups.push(EdgeGroup { name, edges: members });
                }
                _ => return Err(cur.error("expected `vertices:` or `group`")),
            }
        }
        SeparatedGraph::new(vertices, edges, groups)
    }

    /// One hyperedge `h<X>` per group: source is the common source, range lists the
    /// ranges of the group's edges in declared order.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let specs = self
            .groups
            .iter()
            .map(|g| EdgeSpec {
                name: format!("h{}", g.name),
                source: vec![self.edges[g.edges[0]].source.clone()],
                range: g.edges.iter().map(|&e| self.edges[e].range.clone()).collect(),
            })
            .collect();
        Hypergraph::new(self.vertices.clone(), specs)
    }

    pub fn groups(&self) -> &[EdgeGroup] {
        &self.groups
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }
}

/// A row-finite graph with one positive weight per vertex that emits edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertices: Vec<String>,
    edges: Vec<GraphEdge>,
    weights: HashMap<String, u64>,
}

impl WeightedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<GraphEdge>, weights: HashMap<String, u64>) -> Result<Self> {
        let declared = check_vertices(&vertices)?;
        check_edges(&declared, &edges)?;
        let emitting: HashSet<&str> = edges.iter().map(|e| e.source.as_str()).collect();
        for (v, w) in &weights {
            if !declared.contains(v.as_str()) {
                return Err(Error::UnknownVertex(v.clone()));
            }
            if *w == 0 {
                return Err(Error::InvalidWeightedGraph(format!("weight of `{v}` must be positive")));
            }
            if !emitting.contains(v.as_str()) {
                return Err(Error::InvalidWeightedGraph(format!(
                    "`{v}` emits no edges but has a weight"
                )));
            }
        }
        for v in &emitting {
            if !weights.contains_key(*v) {
                return Err(Error::InvalidWeightedGraph(format!(
                    "`{v}` emits edges but has no weight"
                )));
            }
        }
        Ok(WeightedGraph {
            vertices,
            edges,
            weights,
        })
    }

    /// Parses `vertices: ...` followed by `emits <vertex> weight <n>: <range>+` lines.
    /// The edges emitted by `v` are named `v_1`, `v_2`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut weights = HashMap::new();
        for (line, content) in content_lines(text) {
            let tokens = tokenize(content, line)?;
            let mut cur = LineCursor::new(&tokens, line, content.chars().count());
            match cur.peek() {
                Some(Tok::Ident(k)) if k == "vertices" => {
                    cur.keyword("vertices")?;
                    cur.expect(Tok::Colon, "`:`")?;
                    vertices.extend(cur.ident_list("vertex name")?);
                    cur.finish()?;
                }
                Some(Tok::Ident(k)) if k == "emits" => {
                    cur.keyword("emits")?;
                    let source = cur.ident("vertex")?;
                    cur.keyword("weight")?;
                    let w = cur.integer("weight")?;
                    cur.expect(Tok::Colon, "`:`")?;
                    let ranges = cur.ident_list("range vertex")?;
                    cur.finish()?;
                    if weights.insert(source.clone(), w).is_some() {
                        return Err(cur.error(format!("second `emits` line for `{source}`")));
                    }
                    for (k, r) in ranges.into_iter().enumerate() {
                        edges.push(GraphEdge {
                            name: format!("{source}_{}", k + 1),
                            source: source.clone(),
                            range: r,
                        });
                    }
                }
                _ => return Err(cur.error("expected `vertices:` or `emits`")),
            }
        }
        WeightedGraph::new(vertices, edges, weights)
    }

    /// One hyperedge `h<v>` per emitting vertex: source is `v` repeated `weight(v)`
    /// times, range lists the ranges of `v`'s edges in declared order.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let mut specs = Vec::new();
        for v in &self.vertices {
            let Some(&w) = self.weights.get(v) else { continue };
            specs.push(EdgeSpec {
                name: format!("h{v}"),
                source: vec![v.clone(); w as usize],
                range: self
                    .edges
                    .iter()
                    .filter(|e| &e.source == v)
                    .map(|e| e.range.clone())
                    .collect(),
            });
        }
        Hypergraph::new(self.vertices.clone(), specs)
    }

    pub fn weight(&self, v: &str) -> Option<u64> {
        self.weights.get(v).copied()
    }
}
