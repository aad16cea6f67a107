//! The rewriting system on raw words.
//!
//! Rules, applied to a factor `xy` of two generators:
//!
//! * `v v' -> δ v`
//! * a vertex next to a letter is absorbed when it matches the letter's endpoint,
//!   otherwise the word vanishes
//! * two letters whose endpoints do not meet give 0
//! * `h[i,1] h*[j,1] -> δ_ij s_i - Σ_{k≥2} h[i,k] h*[j,k]`
//! * `h*[1,i] h[1,j] -> δ_ij r_i - Σ_{k≥2} h*[k,i] h[k,j]`
//!
//! The system is confluent, so the strategy only changes the path taken.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Generator, LeavittAlgebra, RawWord, Word};
use crate::error::Result;
use crate::letters::{is_forbidden, Kind, Letter};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Always rewrite the leftmost redex.
    #[default]
    Leftmost,
    /// Always rewrite the rightmost redex.
    Rightmost,
}

/// Replacement for a two-generator factor: a signed sum of generator strings.
/// Empty means the factor is zero.
type Replacement = Vec<(Vec<Generator>, i64)>;

pub(super) struct Reducer<'a> {
    algebra: &'a Arc<LeavittAlgebra>,
    strategy: Strategy,
    steps: u64,
}

impl<'a> Reducer<'a> {
    pub(super) fn new(algebra: &'a Arc<LeavittAlgebra>, strategy: Strategy) -> Self {
        Reducer {
            algebra,
            strategy,
            steps: 0,
        }
    }

    pub(super) fn normalize(mut self, raw: &[(RawWord, Scalar)]) -> Result<BTreeMap<Word, Scalar>> {
        let field = self.algebra.field();
        let mut pending: BTreeMap<RawWord, Scalar> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<RawWord, Scalar>, w: RawWord, c: Scalar| {
            let slot = pending.entry(w).or_insert_with(|| field.zero());
            *slot = slot.add(&c);
        };
        for (w, c) in raw {
            if w.is_empty() {
                // The empty product is the identity.
                for v in self.algebra.graph().vertex_ids() {
                    push(&mut pending, vec![Generator::Vertex(v)], c.clone());
                }
            } else {
                push(&mut pending, w.clone(), c.clone());
            }
        }
        let mut done: BTreeMap<Word, Scalar> = BTreeMap::new();
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => {
                    let word = to_word(&w);
                    let slot = done.entry(word).or_insert_with(|| field.zero());
                    *slot = slot.add(&c);
                }
                Some((pos, replacement)) => {
                    self.steps += 1;
                    self.algebra.budget().check(self.steps)?;
                    for (middle, sign) in replacement {
                        let mut nw = Vec::with_capacity(w.len() + middle.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend(middle);
                        nw.extend_from_slice(&w[pos + 2..]);
                        push(&mut pending, nw, c.mul(&field.from_i64(sign)));
                    }
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        Ok(done)
    }

    fn find_redex(&self, w: &[Generator]) -> Option<(usize, Replacement)> {
        if w.len() < 2 {
            return None;
        }
        let n = w.len() - 1;
        match self.strategy {
            Strategy::Leftmost => (0..n).find_map(|p| self.rewrite_pair(w[p], w[p + 1]).map(|r| (p, r))),
            Strategy::Rightmost => (0..n)
                .rev()
                .find_map(|p| self.rewrite_pair(w[p], w[p + 1]).map(|r| (p, r))),
        }
    }

    fn rewrite_pair(&self, a: Generator, b: Generator) -> Option<Replacement> {
        let h = self.algebra.graph();
        use Generator::{Letter as L, Vertex as V};
        match (a, b) {
            (V(x), V(y)) => Some(if x == y { vec![(vec![V(x)], 1)] } else { vec![] }),
            (V(x), L(l)) => Some(if l.source_vertex(h) == x {
                vec![(vec![L(l)], 1)]
            } else {
                vec![]
            }),
            (L(l), V(x)) => Some(if l.range_vertex(h) == x {
                vec![(vec![L(l)], 1)]
            } else {
                vec![]
            }),
            (L(x), L(y)) => {
                if x.range_vertex(h) != y.source_vertex(h) {
                    Some(vec![])
                } else if is_forbidden(&x, &y) {
                    Some(self.expand_forbidden(x, y))
                } else {
                    None
                }
            }
        }
    }

    fn expand_forbidden(&self, x: Letter, y: Letter) -> Replacement {
        let edge = self.algebra.graph().edge(x.edge);
        let mut out = Vec::new();
        match x.kind {
            Kind::Direct => {
                // h[i,1] h*[j,1]
                let (i, j) = (x.i, y.i);
                if i == j {
                    out.push((vec![Generator::Vertex(edge.source[i - 1])], 1));
                }
                for k in 2..=edge.range.len() {
                    out.push((
                        vec![
                            Generator::Letter(Letter::direct(x.edge, i, k)),
                            Generator::Letter(Letter::star(x.edge, j, k)),
                        ],
                        -1,
                    ));
                }
            }
            Kind::Star => {
                // h*[1,i] h[1,j]
                let (i, j) = (x.j, y.j);
                if i == j {
                    out.push((vec![Generator::Vertex(edge.range[i - 1])], 1));
                }
                for k in 2..=edge.source.len() {
                    out.push((
                        vec![
                            Generator::Letter(Letter::star(x.edge, k, i)),
                            Generator::Letter(Letter::direct(x.edge, k, j)),
                        ],
                        -1,
                    ));
                }
            }
        }
        out
    }
}

fn to_word(w: &[Generator]) -> Word {
    match w {
        [Generator::Vertex(v)] => Word::Vertex(*v),
        _ => Word::Path(
            w.iter()
                .map(|g| match g {
                    Generator::Letter(l) => *l,
                    Generator::Vertex(_) => unreachable!("vertex inside an irreducible word of length > 1"),
                })
                .collect(),
        ),
    }
}
