//! Nod-paths: enumeration in canonical order and growth counts.

use serde::Serialize;

use crate::algebra::Word;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::letters::LetterGraph;

/// True for a vertex, or a letter sequence whose consecutive pairs are allowed.
pub fn is_nod_path(word: &Word, lg: &LetterGraph) -> bool {
    match word {
        Word::Vertex(_) => true,
        Word::Path(p) => match lg.indices(p) {
            Some(idx) => idx.windows(2).all(|w| lg.allowed(w[0], w[1])),
            None => false,
        },
    }
}

/// Lazy stream of all nod-paths of length `<= max_len`, breadth-first, each level in
/// canonical order. Only the current level is held in memory.
pub struct NodPaths<'a> {
    lg: &'a LetterGraph,
    vertices: std::ops::Range<usize>,
    max_len: usize,
    len: usize,
    level: Vec<Vec<usize>>,
    pos: usize,
}

pub fn enumerate_nod_paths<'a>(h: &Hypergraph, lg: &'a LetterGraph, max_len: usize) -> NodPaths<'a> {
    NodPaths {
        lg,
        vertices: 0..h.vertex_count(),
        max_len,
        len: 0,
        level: Vec::new(),
        pos: 0,
    }
}

impl Iterator for NodPaths<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if let Some(v) = self.vertices.next() {
            return Some(Word::Vertex(VertexId(v)));
        }
        loop {
            if let Some(p) = self.level.get(self.pos) {
                self.pos += 1;
                return Some(Word::Path(p.iter().map(|&k| self.lg.letter(k)).collect()));
            }
            if self.len >= self.max_len {
                return None;
            }
            // Successor lists are sorted, so extending a sorted level stays sorted.
            self.level = if self.len == 0 {
                (0..self.lg.len()).map(|k| vec![k]).collect()
            } else {
                let mut next = Vec::new();
                for p in &self.level {
                    let last = *p.last().expect("nonempty");
                    for &s in self.lg.successors(last) {
                        let mut q = p.clone();
                        q.push(s);
                        next.push(q);
                    }
                }
                next
            };
            self.len += 1;
            self.pos = 0;
            if self.level.is_empty() {
                return None;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthTable {
    /// Entry `n`: nod-paths of length exactly `n`.
    pub per_length: Vec<u128>,
    /// Entry `n`: nod-paths of length at most `n`.
    pub cumulative: Vec<u128>,
}

/// Counts by dynamic programming over the letter graph.
pub fn growth_table(h: &Hypergraph, lg: &LetterGraph, max_len: usize) -> Result<GrowthTable> {
    let mut per_length = vec![h.vertex_count() as u128];
    // ending[k]: nod-paths of the current length ending in letter k
    let mut ending = vec![1u128; lg.len()];
    for n in 1..=max_len {
        if n > 1 {
            let mut next = vec![0u128; lg.len()];
            for (a, &c) in ending.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &b in lg.successors(a) {
                    next[b] = next[b].checked_add(c).ok_or(Error::CountOverflow(n))?;
                }
            }
            ending = next;
        }
        let total = ending
            .iter()
            .try_fold(0u128, |acc, &c| acc.checked_add(c))
            .ok_or(Error::CountOverflow(n))?;
        per_length.push(total);
    }
    let mut cumulative = Vec::with_capacity(per_length.len());
    let mut acc = 0u128;
    for (n, &c) in per_length.iter().enumerate() {
        acc = acc.checked_add(c).ok_or(Error::CountOverflow(n))?;
        cumulative.push(acc);
    }
    Ok(GrowthTable { per_length, cumulative })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{samples, EdgeId};
    use crate::letters::Letter;

    #[test]
    fn nod_examples() {
        let h = samples::two_by_two();
        let lg = LetterGraph::build(&h);
        let e = EdgeId(0);
        assert!(is_nod_path(&Word::Vertex(VertexId(0)), &lg));
        assert!(!is_nod_path(
            &Word::Path(vec![Letter::direct(e, 1, 1), Letter::star(e, 2, 1)]),
            &lg
        ));
        let p = Word::Path(vec![
            Letter::direct(e, 2, 2),
            Letter::star(e, 2, 2),
            Letter::direct(e, 2, 2),
        ]);
        assert!(is_nod_path(&p, &lg));
    }

    #[test]
    fn laurent_enumeration() {
        let h = samples::laurent();
        let lg = LetterGraph::build(&h);
        let words: Vec<String> = enumerate_nod_paths(&h, &lg, 2).map(|w| w.render(&h)).collect();
        assert_eq!(words, ["u", "l[1,1]", "l*[1,1]", "l[1,1] l[1,1]", "l*[1,1] l*[1,1]"]);
    }

    #[test]
    fn small_cases() {
        let p = samples::point();
        let lg = LetterGraph::build(&p);
        assert_eq!(enumerate_nod_paths(&p, &lg, 5).count(), 1);
        assert_eq!(growth_table(&p, &lg, 4).unwrap().cumulative, vec![1; 5]);
        let h = samples::two_by_two();
        let lg = LetterGraph::build(&h);
        assert_eq!(enumerate_nod_paths(&h, &lg, 1).count(), 12);
    }

    #[test]
    fn enumeration_is_sorted_and_matches_counts() {
        for h in [samples::two_by_two(), samples::leavitt_1_2(), samples::leavitt_2_3()] {
            let lg = LetterGraph::build(&h);
            let words: Vec<Word> = enumerate_nod_paths(&h, &lg, 4).collect();
            assert!(words.windows(2).all(|w| w[0] < w[1]));
            assert!(words.iter().all(|w| is_nod_path(w, &lg)));
            let t = growth_table(&h, &lg, 4).unwrap();
            assert_eq!(t.cumulative[4], words.len() as u128);
        }
    }

    #[test]
    fn laurent_growth() {
        let h = samples::laurent();
        let lg = LetterGraph::build(&h);
        let t = growth_table(&h, &lg, 12).unwrap();
        for n in 0..=12 {
            assert_eq!(t.cumulative[n], 2 * n as u128 + 1);
        }
    }

    #[test]
    fn overflow_is_reported() {
        let h = samples::leavitt_2_3();
        let lg = LetterGraph::build(&h);
        assert!(matches!(growth_table(&h, &lg, 200), Err(Error::CountOverflow(_))));
    }
}
