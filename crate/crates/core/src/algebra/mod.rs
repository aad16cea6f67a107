//! Exact arithmetic in the Leavitt path algebra of a finite hypergraph.
//!
//! Elements are always stored in normal form: a finite map from nod-paths to
//! nonzero scalars. Every operation builds a raw linear combination of words and
//! hands it to the reducer in [`reduce`], which rewrites until no forbidden factor,
//! vertex collision or endpoint mismatch remains.

mod expr;
pub mod grading;
mod hom;
pub mod reduce;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result, StepBudget};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::letters::{Letter, LetterGraph};
use crate::scalar::{Field, Scalar};

pub use hom::apply_homomorphism;
pub use reduce::Strategy;

/// A letter or a vertex, as it may appear in an unreduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Vertex(VertexId),
    Letter(Letter),
}

pub type RawWord = Vec<Generator>;

/// A d-path: a single vertex (length 0) or a nonempty letter sequence.
///
/// Ordered by length first, then lexicographically in generator order; this is
/// the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Vertex(VertexId),
    Path(Vec<Letter>),
}

impl Word {
    pub fn len(&self) -> usize {
        match self {
            Word::Vertex(_) => 0,
            Word::Path(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            Word::Vertex(_) => &[],
            Word::Path(p) => p,
        }
    }

    pub fn source(&self, h: &Hypergraph) -> VertexId {
        match self {
            Word::Vertex(v) => *v,
            Word::Path(p) => p[0].source_vertex(h),
        }
    }

    pub fn range(&self, h: &Hypergraph) -> VertexId {
        match self {
            Word::Vertex(v) => *v,
            Word::Path(p) => p[p.len() - 1].range_vertex(h),
        }
    }

    /// Reverses the word and stars every letter.
    pub fn star(&self) -> Word {
        match self {
            Word::Vertex(v) => Word::Vertex(*v),
            Word::Path(p) => Word::Path(p.iter().rev().map(|l| l.starred()).collect()),
        }
    }

    pub fn to_raw(&self) -> RawWord {
        match self {
            Word::Vertex(v) => vec![Generator::Vertex(*v)],
            Word::Path(p) => p.iter().map(|l| Generator::Letter(*l)).collect(),
        }
    }

    /// Space-separated generator tokens.
    pub fn render(&self, h: &Hypergraph) -> String {
        match self {
            Word::Vertex(v) => h.vertex_name(*v).to_string(),
            Word::Path(p) => p.iter().map(|l| l.token(h)).collect::<Vec<_>>().join(" "),
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self, other) {
            (Word::Vertex(a), Word::Vertex(b)) => a.cmp(b),
            (Word::Path(a), Word::Path(b)) => a.cmp(b),
            // unreachable: equal lengths imply equal variants
            (Word::Vertex(_), Word::Path(_)) => Ordering::Less,
            (Word::Path(_), Word::Vertex(_)) => Ordering::Greater,
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `L_K(H)` for a fixed finite hypergraph and coefficient field.
#[derive(Debug)]
pub struct LeavittAlgebra {
    graph: Hypergraph,
    letters: LetterGraph,
    field: Field,
    budget: StepBudget,
}

impl PartialEq for LeavittAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.graph == other.graph
    }
}

impl LeavittAlgebra {
    pub fn new(graph: Hypergraph, field: Field) -> Arc<LeavittAlgebra> {
        LeavittAlgebra::with_budget(graph, field, StepBudget::UNLIMITED)
    }

    /// Caps the number of rewrite steps spent on any single normalization.
    pub fn with_budget(graph: Hypergraph, field: Field, budget: StepBudget) -> Arc<LeavittAlgebra> {
        let letters = LetterGraph::build(&graph);
        Arc::new(LeavittAlgebra {
            graph,
            letters,
            field,
            budget,
        })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn letter_graph(&self) -> &LetterGraph {
        &self.letters
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn budget(&self) -> StepBudget {
        self.budget
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element {
            algebra: Arc::clone(self),
            terms: BTreeMap::new(),
        }
    }

    /// `Σ_v v`, the identity of the (unital, since finite) algebra.
    pub fn one(self: &Arc<Self>) -> Element {
        let terms = self
            .graph
            .vertex_ids()
            .map(|v| (Word::Vertex(v), self.field.one()))
            .collect();
        Element {
            algebra: Arc::clone(self),
            terms,
        }
    }

    pub fn vertex(self: &Arc<Self>, name: &str) -> Result<Element> {
        let v = self
            .graph
            .vertex_id(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        Ok(self.from_word(Word::Vertex(v)))
    }

    /// The basis element for a nod-path. Non-nod input is normalized.
    pub fn word(self: &Arc<Self>, word: &Word) -> Result<Element> {
        self.normal_form(&[(word.to_raw(), self.field.one())])
    }

    pub fn letter(self: &Arc<Self>, letter: Letter) -> Element {
        self.from_word(Word::Path(vec![letter]))
    }

    fn from_word(self: &Arc<Self>, word: Word) -> Element {
        let mut terms = BTreeMap::new();
        terms.insert(word, self.field.one());
        Element {
            algebra: Arc::clone(self),
            terms,
        }
    }

    /// Normal form of a raw linear combination (leftmost-first reduction).
    pub fn normal_form(self: &Arc<Self>, raw: &[(RawWord, Scalar)]) -> Result<Element> {
        self.normal_form_with(raw, Strategy::Leftmost)
    }

    pub fn normal_form_with(self: &Arc<Self>, raw: &[(RawWord, Scalar)], strategy: Strategy) -> Result<Element> {
        for (_, c) in raw {
            if c.field() != self.field {
                return Err(Error::AlgebraMismatch);
            }
        }
        let terms = reduce::Reducer::new(self, strategy).normalize(raw)?;
        Ok(Element {
            algebra: Arc::clone(self),
            terms,
        })
    }

    /// Parses an expression such as `2/3 * h[1,2] - h*[1,2] * (v1 + w2)`.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Element> {
        expr::parse_expression(self, text)
    }

    /// Sum of all vertices at either end of some word of some element; acts as a
    /// two-sided identity on every element of `set`.
    pub fn local_unit_for(self: &Arc<Self>, set: &[Element]) -> Result<Element> {
        let mut vs = BTreeSet::new();
        for x in set {
            x.same_algebra(self)?;
            for w in x.terms.keys() {
                vs.insert(w.source(&self.graph));
                vs.insert(w.range(&self.graph));
            }
        }
        let terms = vs.into_iter().map(|v| (Word::Vertex(v), self.field.one())).collect();
        Ok(Element {
            algebra: Arc::clone(self),
            terms,
        })
    }
}

/// An algebra element in normal form.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: Arc<LeavittAlgebra>,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.algebra == *other.algebra
    }
}

impl Eq for Element {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerializedTerm {
    pub coefficient: String,
    pub word: String,
}

impl Element {
    /// Wraps terms that are already nod-paths with nonzero coefficients.
    pub(crate) fn from_terms(algebra: &Arc<LeavittAlgebra>, terms: BTreeMap<Word, Scalar>) -> Element {
        Element {
            algebra: Arc::clone(algebra),
            terms,
        }
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &Word) -> Option<&Scalar> {
        self.terms.get(word)
    }

    fn same_algebra(&self, alg: &Arc<LeavittAlgebra>) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, alg) || *self.algebra == **alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn check_compatible(&self, other: &Element) -> Result<()> {
        other.same_algebra(&self.algebra)
    }

    pub fn to_raw(&self) -> Vec<(RawWord, Scalar)> {
        self.terms.iter().map(|(w, c)| (w.to_raw(), c.clone())).collect()
    }

    /// Normal form of the product.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.to_raw();
                w.extend(b.to_raw());
                raw.push((w, ca.mul(cb)));
            }
        }
        self.algebra.normal_form(&raw)
    }

    /// `c1 * a + c2 * b`; the sum of two normal forms is already normal.
    pub fn combine(c1: &Scalar, a: &Element, c2: &Scalar, b: &Element) -> Result<Element> {
        a.check_compatible(b)?;
        let field = a.algebra.field;
        if c1.field() != field || c2.field() != field {
            return Err(Error::AlgebraMismatch);
        }
        let mut terms = BTreeMap::new();
        for (src, c) in [(a, c1), (b, c2)] {
            for (w, k) in &src.terms {
                let add = k.mul(c);
                let entry = terms.entry(w.clone()).or_insert_with(|| field.zero());
                *entry = (*entry).add(&add);
            }
        }
        terms.retain(|_, c: &mut Scalar| !c.is_zero());
        Ok(Element {
            algebra: Arc::clone(&a.algebra),
            terms,
        })
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let one = self.algebra.field.one();
        Element::combine(&one, self, &one, other)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        let one = self.algebra.field.one();
        Element::combine(&one, self, &one.neg(), other)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Element> {
        let zero = self.algebra.zero();
        Element::combine(c, self, c, &zero)
    }

    /// Image under the involution `h[i,j] <-> h*[i,j]`, fixing vertices and scalars.
    pub fn involute(&self) -> Element {
        let raw: Vec<_> = self.terms.iter().map(|(w, c)| (w.star().to_raw(), c.clone())).collect();
        // Starring maps nod-paths to nod-paths, so no rewriting happens here.
        self.algebra
            .normal_form(&raw)
            .expect("starred normal form needs no rewriting")
    }

    /// Maximum word length in the support; `None` stands for `-∞` (the zero element).
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The canonical `(coefficient, word)` list.
    pub fn serialize_terms(&self) -> Vec<SerializedTerm> {
        let h = &self.algebra.graph;
        self.terms
            .iter()
            .map(|(w, c)| SerializedTerm {
                coefficient: c.to_string(),
                word: w.render(h),
            })
            .collect()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let h = &self.algebra.graph;
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let (negative, magnitude) = if c.is_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{}", w.render(h))?;
        }
        Ok(())
    }
}
