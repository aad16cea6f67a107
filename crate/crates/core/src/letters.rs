//! Generator letters `h[i,j]`, `h*[i,j]` and the adjacency relation whose walks are
//! exactly the nod-paths of positive length.

use std::collections::HashMap;

use serde::Serialize;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Direct,
    Star,
}

/// `h[i,j]` (direct) or `h*[i,j]` (star), 1-based indices into `s(h)` and `r(h)`.
///
/// The derived order (edge, kind, i, j) is the canonical generator order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: EdgeId,
    pub kind: Kind,
    pub i: usize,
    pub j: usize,
}

impl Letter {
    pub fn direct(edge: EdgeId, i: usize, j: usize) -> Letter {
        Letter {
            edge,
            kind: Kind::Direct,
            i,
            j,
        }
    }

    pub fn star(edge: EdgeId, i: usize, j: usize) -> Letter {
        Letter {
            edge,
            kind: Kind::Star,
            i,
            j,
        }
    }

    pub fn starred(self) -> Letter {
        Letter {
            kind: match self.kind {
                Kind::Direct => Kind::Star,
                Kind::Star => Kind::Direct,
            },
            ..self
        }
    }

    pub fn source_vertex(&self, h: &Hypergraph) -> VertexId {
        let e = h.edge(self.edge);
        match self.kind {
            Kind::Direct => e.source[self.i - 1],
            Kind::Star => e.range[self.j - 1],
        }
    }

    pub fn range_vertex(&self, h: &Hypergraph) -> VertexId {
        let e = h.edge(self.edge);
        match self.kind {
            Kind::Direct => e.range[self.j - 1],
            Kind::Star => e.source[self.i - 1],
        }
    }

    pub fn token(&self, h: &Hypergraph) -> String {
        let name = &h.edge(self.edge).name;
        match self.kind {
            Kind::Direct => format!("{name}[{},{}]", self.i, self.j),
            Kind::Star => format!("{name}*[{},{}]", self.i, self.j),
        }
    }
}

/// True for the two-letter words `h[i,1] h*[j,1]` and `h*[1,i] h[1,j]`.
pub fn is_forbidden(x: &Letter, y: &Letter) -> bool {
    if x.edge != y.edge {
        return false;
    }
    match (x.kind, y.kind) {
        (Kind::Direct, Kind::Star) => x.j == 1 && y.j == 1,
        (Kind::Star, Kind::Direct) => x.i == 1 && y.i == 1,
        _ => false,
    }
}

/// All letters of a hypergraph with the allowed-successor relation.
#[derive(Debug, Clone)]
pub struct LetterGraph {
    letters: Vec<Letter>,
    index: HashMap<Letter, usize>,
    source: Vec<VertexId>,
    range: Vec<VertexId>,
    successors: Vec<Vec<usize>>,
    allowed: Vec<Vec<bool>>,
}

impl LetterGraph {
    pub fn build(h: &Hypergraph) -> LetterGraph {
        let mut letters = Vec::new();
        for e in h.edge_ids() {
            let edge = h.edge(e);
            for kind in [Kind::Direct, Kind::Star] {
                for i in 1..=edge.source.len() {
                    for j in 1..=edge.range.len() {
                        letters.push(Letter { edge: e, kind, i, j });
                    }
                }
            }
        }
        let index = letters.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        let source: Vec<VertexId> = letters.iter().map(|l| l.source_vertex(h)).collect();
        let range: Vec<VertexId> = letters.iter().map(|l| l.range_vertex(h)).collect();
        let n = letters.len();
        let mut allowed = vec![vec![false; n]; n];
        let mut successors = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if range[a] == source[b] && !is_forbidden(&letters[a], &letters[b]) {
                    allowed[a][b] = true;
                    successors[a].push(b);
                }
            }
        }
        LetterGraph {
            letters,
            index,
            source,
            range,
            successors,
            allowed,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, idx: usize) -> Letter {
        self.letters[idx]
    }

    pub fn index_of(&self, letter: &Letter) -> Option<usize> {
        self.index.get(letter).copied()
    }

    pub fn source_vertex(&self, idx: usize) -> VertexId {
        self.source[idx]
    }

    pub fn range_vertex(&self, idx: usize) -> VertexId {
        self.range[idx]
    }

    /// Allowed successors of a letter, in canonical order.
    pub fn successors(&self, idx: usize) -> &[usize] {
        &self.successors[idx]
    }

    pub fn allowed(&self, a: usize, b: usize) -> bool {
        self.allowed[a][b]
    }

    pub fn allowed_letters(&self, x: &Letter, y: &Letter) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(a), Some(b)) => self.allowed(a, b),
            _ => false,
        }
    }

    /// Letter indices of a letter sequence; `None` if some letter is not in the graph.
    pub fn indices(&self, word: &[Letter]) -> Option<Vec<usize>> {
        word.iter().map(|l| self.index_of(l)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::samples;

    #[test]
    fn two_by_two_forbidden_pairs() {
        let h = samples::two_by_two();
        let g = LetterGraph::build(&h);
        let e = EdgeId(0);
        assert_eq!(g.len(), 8);
        assert!(!g.allowed_letters(&Letter::direct(e, 1, 1), &Letter::star(e, 2, 1)));
        assert!(g.allowed_letters(&Letter::direct(e, 1, 2), &Letter::star(e, 2, 2)));
        // h[1,1] ends at w1 while h*[2,2] starts at w2.
        assert!(!g.allowed_letters(&Letter::direct(e, 1, 1), &Letter::star(e, 2, 2)));
    }

    #[test]
    fn edgeless_has_no_letters() {
        assert!(LetterGraph::build(&samples::point()).is_empty());
    }

    /// Hand enumeration of all 16 pairs over `f: u -> u u`.
    #[test]
    fn leavitt_1_2_pairs() {
        let h = samples::leavitt_1_2();
        let g = LetterGraph::build(&h);
        let e = EdgeId(0);
        let f11 = Letter::direct(e, 1, 1);
        let f12 = Letter::direct(e, 1, 2);
        let s11 = Letter::star(e, 1, 1);
        let s12 = Letter::star(e, 1, 2);
        let expected = [
            (f11, f11, true),
            (f11, f12, true),
            (f11, s11, false),
            (f11, s12, true),
            (f12, f11, true),
            (f12, f12, true),
            (f12, s11, true),
            (f12, s12, true),
            (s11, f11, false),
            (s11, f12, false),
            (s11, s11, true),
            (s11, s12, true),
            (s12, f11, false),
            (s12, f12, false),
            (s12, s11, true),
            (s12, s12, true),
        ];
        for (x, y, ok) in expected {
            assert_eq!(g.allowed_letters(&x, &y), ok, "{} {}", x.token(&h), y.token(&h));
        }
    }

    #[test]
    fn allowed_implies_matching_vertices() {
        for h in [samples::two_by_two(), samples::leavitt_2_3(), samples::two_cycle()] {
            let g = LetterGraph::build(&h);
            for a in 0..g.len() {
                for &b in g.successors(a) {
                    assert_eq!(g.range_vertex(a), g.source_vertex(b));
                }
            }
        }
    }
}
