//! Graded V-monoid presentations and covering hypergraphs over a finite box of
//! degrees.
//!
//! For an admissible weight map `w` and a degree `γ`, the hyperedge `h` contributes
//! the relation
//!
//! ```text
//! Σ_i (s_i)_{w(h[i,1]) - w(h[1,1]) + γ}  =  Σ_j (r_j)_{γ - w(h[1,j])}
//! ```
//!
//! and the covering hypergraph has the hyperedge `h_γ` with exactly those sides.
//! Only relations and hyperedges whose shifted degrees all lie in the box are kept.

use serde::Serialize;

use super::{v_monoid_presentation, MonoidPresentation};
use crate::algebra::grading::{add_degrees, sub_degrees, Degree, WeightMap};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSpec, Hypergraph};

/// The box `[-B, B]^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub rank: usize,
    pub bound: i64,
}

impl DegreeWindow {
    pub fn new(rank: usize, bound: i64) -> Result<Self> {
        if bound < 0 {
            return Err(Error::InvalidPresentation(format!("window bound {bound} is negative")));
        }
        Ok(DegreeWindow { rank, bound })
    }

    pub fn contains(&self, d: &[i64]) -> bool {
        d.len() == self.rank && d.iter().all(|x| x.abs() <= self.bound)
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> Vec<Degree> {
        let mut out = vec![vec![]];
        for _ in 0..self.rank {
            let mut next = Vec::new();
            for p in &out {
                for x in -self.bound..=self.bound {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }
}

/// `v` at degree `(-1, 2)` is named `v_gm1_2`.
pub fn graded_name(base: &str, d: &[i64]) -> String {
    let coords: Vec<String> = d
        .iter()
        .map(|x| if *x < 0 { format!("m{}", -x) } else { x.to_string() })
        .collect();
    format!("{base}_g{}", coords.join("_"))
}

fn check(h: &Hypergraph, w: &WeightMap, window: &DegreeWindow) -> Result<()> {
    w.check_admissible(h)?;
    if w.rank() != window.rank {
        return Err(Error::RankMismatch {
            weights: w.rank(),
            window: window.rank,
        });
    }
    Ok(())
}

/// Degrees of the source and range positions of `h_γ`.
pub(crate) fn shifted(h: &Hypergraph, w: &WeightMap, e: usize, gamma: &[i64]) -> (Vec<Degree>, Vec<Degree>) {
    let id = crate::hypergraph::EdgeId(e);
    let edge = h.edge(id);
    let base = w.weight(id, 1, 1);
    let src = (1..=edge.source.len())
        .map(|i| add_degrees(&sub_degrees(w.weight(id, i, 1), base), gamma))
        .collect();
    let rng = (1..=edge.range.len())
        .map(|j| sub_degrees(gamma, w.weight(id, 1, j)))
        .collect();
    (src, rng)
}

pub fn covering_hypergraph(h: &Hypergraph, w: &WeightMap, window: &DegreeWindow) -> Result<Hypergraph> {
    check(h, w, window)?;
    let points = window.points();
    let mut vertices = Vec::new();
    for v in h.vertex_names() {
        for g in &points {
            vertices.push(graded_name(v, g));
        }
    }
    let mut specs = Vec::new();
    for (e, edge) in h.edges().iter().enumerate() {
        for g in &points {
            let (src, rng) = shifted(h, w, e, g);
            if !src.iter().chain(&rng).all(|d| window.contains(d)) {
                continue;
            }
            specs.push(EdgeSpec {
                name: graded_name(&edge.name, g),
                source: edge
                    .source
                    .iter()
                    .zip(&src)
                    .map(|(v, d)| graded_name(h.vertex_name(*v), d))
                    .collect(),
                range: edge
                    .range
                    .iter()
                    .zip(&rng)
                    .map(|(v, d)| graded_name(h.vertex_name(*v), d))
                    .collect(),
            });
        }
    }
    Hypergraph::new(vertices, specs)
}

/// Generators `v_γ` for `γ` in the window, one relation per `(h, γ)` that stays inside.
pub fn graded_monoid_presentation(h: &Hypergraph, w: &WeightMap, window: &DegreeWindow) -> Result<MonoidPresentation> {
    check(h, w, window)?;
    let points = window.points();
    let index = |v: usize, d: &[i64]| -> usize {
        let mut k = 0usize;
        for x in d {
            k = k * (2 * window.bound as usize + 1) + (x + window.bound) as usize;
        }
        v * points.len() + k
    };
    let mut generators = Vec::new();
    for v in h.vertex_names() {
        for g in &points {
            generators.push(graded_name(v, g));
        }
    }
    let n = generators.len();
    let mut relations = Vec::new();
    for (e, edge) in h.edges().iter().enumerate() {
        for g in &points {
            let (src, rng) = shifted(h, w, e, g);
            if !src.iter().chain(&rng).all(|d| window.contains(d)) {
                continue;
            }
            let mut lhs = vec![0; n];
            let mut rhs = vec![0; n];
            for (v, d) in edge.source.iter().zip(&src) {
                lhs[index(v.0, d)] += 1;
            }
            for (v, d) in edge.range.iter().zip(&rng) {
                rhs[index(v.0, d)] += 1;
            }
            relations.push(super::Relation {
                name: graded_name(&edge.name, g),
                lhs,
                rhs,
            });
        }
    }
    Ok(MonoidPresentation { generators, relations })
}

/// The V-monoid presentation of the cover, for comparison with the graded one.
pub fn cover_presentation(h: &Hypergraph, w: &WeightMap, window: &DegreeWindow) -> Result<MonoidPresentation> {
    Ok(v_monoid_presentation(&covering_hypergraph(h, w, window)?))
}
