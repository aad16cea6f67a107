#![allow(dead_code)]

use std::sync::Arc;

use hlpa_core::algebra::{Generator, RawWord};
use hlpa_core::hypergraph::samples;
use hlpa_core::{Element, Field, Hypergraph, Kind, LeavittAlgebra, Letter, Scalar, VertexId};
use rand::Rng;

pub fn named_samples() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("two_by_two", samples::two_by_two()),
        ("laurent", samples::laurent()),
        ("leavitt_1_2", samples::leavitt_1_2()),
        ("leavitt_2_3", samples::leavitt_2_3()),
        ("point", samples::point()),
        ("two_cycle", samples::two_cycle()),
        ("mixed", mixed()),
    ]
}

/// Several hyperedges of different shapes sharing vertices.
pub fn mixed() -> Hypergraph {
    Hypergraph::from_parts(
        &["a", "b", "c"],
        &[
            ("x", &["a", "b"], &["b", "c"]),
            ("y", &["c"], &["a", "a"]),
            ("z", &["b"], &["b"]),
        ],
    )
    .unwrap()
}

pub fn generators(h: &Hypergraph) -> Vec<Generator> {
    let mut out: Vec<Generator> = h.vertex_ids().map(Generator::Vertex).collect();
    for e in h.edge_ids() {
        let edge = h.edge(e);
        for i in 1..=edge.source.len() {
            for j in 1..=edge.range.len() {
                out.push(Generator::Letter(Letter::direct(e, i, j)));
                out.push(Generator::Letter(Letter::star(e, i, j)));
            }
        }
    }
    out
}

pub fn letters(h: &Hypergraph) -> Vec<Letter> {
    generators(h)
        .into_iter()
        .filter_map(|g| match g {
            Generator::Letter(l) => Some(l),
            Generator::Vertex(_) => None,
        })
        .collect()
}

/// Up to `max_terms` arbitrary generator strings of length `1..=max_len` with small
/// integer coefficients.
pub fn random_raw<R: Rng>(
    h: &Hypergraph,
    field: Field,
    rng: &mut R,
    max_terms: usize,
    max_len: usize,
) -> Vec<(RawWord, Scalar)> {
    let gens = generators(h);
    let terms = rng.gen_range(1..=max_terms);
    (0..terms)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let word = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
            (word, field.from_i64(rng.gen_range(-3..=3)))
        })
        .collect()
}

pub fn random_element<R: Rng>(alg: &Arc<LeavittAlgebra>, rng: &mut R, max_terms: usize, max_len: usize) -> Element {
    let raw = random_raw(alg.graph(), alg.field(), rng, max_terms, max_len);
    alg.normal_form(&raw).unwrap()
}

/// Nod-path test written against the definitions only: consecutive letters meet at a
/// vertex and no factor is `h[i,1] h*[j,1]` or `h*[1,i] h[1,j]`.
pub fn brute_is_nod(h: &Hypergraph, word: &[Letter]) -> bool {
    word.windows(2).all(|w| {
        let (x, y) = (w[0], w[1]);
        let forbidden = x.edge == y.edge
            && match (x.kind, y.kind) {
                (Kind::Direct, Kind::Star) => x.j == 1 && y.j == 1,
                (Kind::Star, Kind::Direct) => x.i == 1 && y.i == 1,
                _ => false,
            };
        x.range_vertex(h) == y.source_vertex(h) && !forbidden
    })
}

/// Nod-path counts per length by exhaustive search over letter strings.
pub fn brute_counts(h: &Hypergraph, max_len: usize) -> Vec<u128> {
    let ls = letters(h);
    let mut out = vec![h.vertex_count() as u128];
    let mut level: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for w in &level {
            for l in &ls {
                let mut v = w.clone();
                v.push(*l);
                if brute_is_nod(h, &v) {
                    next.push(v);
                }
            }
        }
        out.push(next.len() as u128);
        level = next;
    }
    out
}

pub fn vertex(h: &Hypergraph, name: &str) -> VertexId {
    h.vertex_id(name).unwrap()
}

pub fn q() -> Field {
    Field::Rationals
}
