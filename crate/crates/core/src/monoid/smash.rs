//! The smash product `L_K(H) # Z^d` and the map from the Leavitt path algebra of
//! the covering hypergraph into it.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::graded::{covering_hypergraph, shifted, DegreeWindow};
use crate::algebra::grading::{add_degrees, format_degree, homogeneous_components, sub_degrees, Degree, WeightMap};
use crate::algebra::{Element, Generator, LeavittAlgebra, RawWord};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::letters::{Kind, Letter};
use crate::scalar::Field;

/// A finite sum `Σ r_γ p_γ`; zero components are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct SmashElement {
    algebra: Arc<LeavittAlgebra>,
    components: BTreeMap<Degree, Element>,
}

impl SmashElement {
    pub fn zero(algebra: &Arc<LeavittAlgebra>) -> Self {
        SmashElement {
            algebra: Arc::clone(algebra),
            components: BTreeMap::new(),
        }
    }

    /// `r p_γ`
    pub fn single(gamma: Degree, r: Element) -> Self {
        let algebra = Arc::clone(r.algebra());
        let mut components = BTreeMap::new();
        if !r.is_zero() {
            components.insert(gamma, r);
        }
        SmashElement { algebra, components }
    }

    pub fn components(&self) -> &BTreeMap<Degree, Element> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &SmashElement) -> Result<SmashElement> {
        let mut components = self.components.clone();
        for (g, r) in &other.components {
            let sum = match components.get(g) {
                Some(x) => x.add(r)?,
                None => r.clone(),
            };
            if sum.is_zero() {
                components.remove(g);
            } else {
                components.insert(g.clone(), sum);
            }
        }
        Ok(SmashElement {
            algebra: Arc::clone(&self.algebra),
            components,
        })
    }

    pub fn scale(&self, c: &crate::scalar::Scalar) -> Result<SmashElement> {
        let mut components = BTreeMap::new();
        for (g, r) in &self.components {
            let x = r.scale(c)?;
            if !x.is_zero() {
                components.insert(g.clone(), x);
            }
        }
        Ok(SmashElement {
            algebra: Arc::clone(&self.algebra),
            components,
        })
    }
}

impl std::fmt::Display for SmashElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(g, r)| format!("({r}) p{}", format_degree(g)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bilinear extension of `(r p_α)(s p_β) = r s_{α-β} p_β`, where `s_δ` is the
/// degree-`δ` component of `s`.
pub fn smash_multiply(x: &SmashElement, y: &SmashElement, w: &WeightMap) -> Result<SmashElement> {
    if *x.algebra != *y.algebra {
        return Err(Error::AlgebraMismatch);
    }
    w.check_admissible(x.algebra.graph())?;
    let mut out = SmashElement::zero(&x.algebra);
    for (beta, s) in &y.components {
        let parts = homogeneous_components(s, w)?;
        for (alpha, r) in &x.components {
            let Some(piece) = parts.get(&sub_degrees(alpha, beta)) else {
                continue;
            };
            let prod = r.multiply(piece)?;
            out = out.add(&SmashElement::single(beta.clone(), prod))?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub cover_vertices: usize,
    pub cover_edges: usize,
    pub relation_checks: usize,
    pub trials: usize,
    pub violations: Vec<String>,
}

struct CoverMap {
    base: Arc<LeavittAlgebra>,
    cover: Arc<LeavittAlgebra>,
    weights: WeightMap,
    /// cover vertex -> (vertex of H, degree)
    vertices: Vec<(VertexId, Degree)>,
    /// cover edge -> (edge of H, γ)
    edges: Vec<(EdgeId, Degree)>,
}

impl CoverMap {
    /// `v_γ ↦ v p_γ`, `(h_γ)[i,j] ↦ h[i,j] p_{γ - w(h[1,j])}`,
    /// `(h_γ)*[i,j] ↦ h*[i,j] p_{w(h[i,1]) - w(h[1,1]) + γ}`.
    fn generator(&self, g: &Generator) -> Result<SmashElement> {
        Ok(match g {
            Generator::Vertex(v) => {
                let (base, d) = &self.vertices[v.0];
                SmashElement::single(d.clone(), self.base.word(&crate::algebra::Word::Vertex(*base))?)
            }
            Generator::Letter(l) => {
                let (e, gamma) = &self.edges[l.edge.0];
                let w = &self.weights;
                let letter = Letter { edge: *e, ..*l };
                let d = match l.kind {
                    Kind::Direct => sub_degrees(gamma, w.weight(*e, 1, l.j)),
                    Kind::Star => add_degrees(&sub_degrees(w.weight(*e, l.i, 1), w.weight(*e, 1, 1)), gamma),
                };
                SmashElement::single(d, self.base.letter(letter))
            }
        })
    }

    fn word(&self, w: &[Generator]) -> Result<SmashElement> {
        let mut acc = self.generator(&w[0])?;
        for g in &w[1..] {
            acc = smash_multiply(&acc, &self.generator(g)?, &self.weights)?;
        }
        Ok(acc)
    }

    fn element(&self, a: &Element) -> Result<SmashElement> {
        let mut acc = SmashElement::zero(&self.base);
        for (w, c) in a.terms() {
            acc = acc.add(&self.word(&w.to_raw())?.scale(c)?)?;
        }
        Ok(acc)
    }

    fn product(&self, a: &[Generator], b: &[Generator]) -> Result<SmashElement> {
        smash_multiply(&self.word(a)?, &self.word(b)?, &self.weights)
    }
}

/// Checks that the generator assignment from the covering hypergraph's algebra into
/// the smash product respects every defining relation of the cover, and that it is
/// multiplicative on `trials` random pairs of words (seeded, deterministic).
pub fn verify_cover_isomorphism(
    h: &Hypergraph,
    w: &WeightMap,
    window: &DegreeWindow,
    field: Field,
    trials: usize,
    seed: u64,
) -> Result<CoverReport> {
    let cover_graph = covering_hypergraph(h, w, window)?;
    let points = window.points();
    let mut vertices = Vec::new();
    for v in h.vertex_ids() {
        for g in &points {
            vertices.push((v, g.clone()));
        }
    }
    let mut edges = Vec::new();
    for e in h.edge_ids() {
        for g in &points {
            let (src, rng) = shifted(h, w, e.0, g);
            if src.iter().chain(&rng).all(|d| window.contains(d)) {
                edges.push((e, g.clone()));
            }
        }
    }
    debug_assert_eq!(edges.len(), cover_graph.edge_count());
    let map = CoverMap {
        base: LeavittAlgebra::new(h.clone(), field),
        cover: LeavittAlgebra::new(cover_graph, field),
        weights: w.clone(),
        vertices,
        edges,
    };
    let cg = map.cover.graph().clone();
    let mut violations = Vec::new();
    let mut checks = 0usize;
    let zero = SmashElement::zero(&map.base);
    let mut expect = |what: String, got: SmashElement, want: SmashElement| {
        checks += 1;
        if got != want {
            violations.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    let vx = |v: VertexId| vec![Generator::Vertex(v)];
    let lt = |l: Letter| vec![Generator::Letter(l)];

    // v w = δ v
    for a in cg.vertex_ids() {
        for b in cg.vertex_ids() {
            let want = if a == b { map.word(&vx(a))? } else { zero.clone() };
            expect(
                format!("{} {}", cg.vertex_name(a), cg.vertex_name(b)),
                map.product(&vx(a), &vx(b))?,
                want,
            );
        }
    }
    for e in cg.edge_ids() {
        let edge = cg.edge(e).clone();
        let (m, n) = (edge.source.len(), edge.range.len());
        for i in 1..=m {
            for j in 1..=n {
                let d = Letter::direct(e, i, j);
                let s = Letter::star(e, i, j);
                let (si, rj) = (edge.source[i - 1], edge.range[j - 1]);
                let name = |l: &Letter| l.token(&cg);
                expect(
                    format!("s_i {}", name(&d)),
                    map.product(&vx(si), &lt(d))?,
                    map.word(&lt(d))?,
                );
                expect(
                    format!("{} r_j", name(&d)),
                    map.product(&lt(d), &vx(rj))?,
                    map.word(&lt(d))?,
                );
                expect(
                    format!("r_j {}", name(&s)),
                    map.product(&vx(rj), &lt(s))?,
                    map.word(&lt(s))?,
                );
                expect(
                    format!("{} s_i", name(&s)),
                    map.product(&lt(s), &vx(si))?,
                    map.word(&lt(s))?,
                );
            }
        }
        for i in 1..=m {
            for j in 1..=m {
                // Σ_k h[i,k] h*[j,k] = δ_ij s_i
                let mut sum = zero.clone();
                for k in 1..=n {
                    sum = sum.add(&map.product(&lt(Letter::direct(e, i, k)), &lt(Letter::star(e, j, k)))?)?;
                }
                let want = if i == j {
                    map.word(&vx(edge.source[i - 1]))?
                } else {
                    zero.clone()
                };
                expect(format!("row relation {}[{i},{j}]", edge.name), sum, want);
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                // Σ_k h*[k,i] h[k,j] = δ_ij r_i
                let mut sum = zero.clone();
                for k in 1..=m {
                    sum = sum.add(&map.product(&lt(Letter::star(e, k, i)), &lt(Letter::direct(e, k, j)))?)?;
                }
                let want = if i == j {
                    map.word(&vx(edge.range[i - 1]))?
                } else {
                    zero.clone()
                };
                expect(format!("column relation {}[{i},{j}]", edge.name), sum, want);
            }
        }
    }

    // Random products of short walks in the cover.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = map.cover.letter_graph().letters().to_vec();
    let random_word = |rng: &mut ChaCha8Rng, start: Option<VertexId>| -> RawWord {
        let pool: Vec<Letter> = match start {
            Some(v) => letters.iter().filter(|l| l.source_vertex(&cg) == v).copied().collect(),
            None => letters.clone(),
        };
        let Some(&first) = pool.choose(rng) else {
            let v = start.unwrap_or(VertexId(rng.gen_range(0..cg.vertex_count())));
            return vec![Generator::Vertex(v)];
        };
        let mut word = vec![Generator::Letter(first)];
        let mut last = first;
        for _ in 1..rng.gen_range(1..=3) {
            let here = last.range_vertex(&cg);
            let next: Vec<Letter> = letters
                .iter()
                .filter(|l| l.source_vertex(&cg) == here)
                .copied()
                .collect();
            match next.choose(rng) {
                Some(&l) => {
                    word.push(Generator::Letter(l));
                    last = l;
                }
                None => break,
            }
        }
        word
    };
    let one = field.one();
    let end_of = |w: &RawWord| -> VertexId {
        match w.last().expect("nonempty") {
            Generator::Vertex(v) => *v,
            Generator::Letter(l) => l.range_vertex(&cg),
        }
    };
    for t in 0..trials {
        let a_raw = random_word(&mut rng, None);
        let start = if rng.gen_bool(0.75) { Some(end_of(&a_raw)) } else { None };
        let b_raw = random_word(&mut rng, start);
        let a = map.cover.normal_form(&[(a_raw, one.clone())])?;
        let b = map.cover.normal_form(&[(b_raw, one.clone())])?;
        let ab = a.multiply(&b)?;
        let lhs = map.element(&ab)?;
        let rhs = smash_multiply(&map.element(&a)?, &map.element(&b)?, w)?;
        checks += 1;
        if lhs != rhs {
            violations.push(format!("trial {t}: φ(({a})({b})) = {lhs} but φ({a}) φ({b}) = {rhs}"));
        }
    }
    Ok(CoverReport {
        cover_vertices: cg.vertex_count(),
        cover_edges: cg.edge_count(),
        relation_checks: checks - trials,
        trials,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::samples;

    fn laurent() -> (Arc<LeavittAlgebra>, WeightMap) {
        let alg = LeavittAlgebra::new(samples::laurent(), Field::Rationals);
        let w = WeightMap::standard(alg.graph());
        (alg, w)
    }

    #[test]
    fn laurent_products() {
        let (alg, w) = laurent();
        let l = alg.parse("l[1,1]").unwrap();
        let x = SmashElement::single(vec![0], l.clone());
        let y = SmashElement::single(vec![-1], l.clone());
        let xy = smash_multiply(&x, &y, &w).unwrap();
        assert_eq!(xy, SmashElement::single(vec![-1], l.multiply(&l).unwrap()));
        assert!(smash_multiply(&x, &x, &w).unwrap().is_zero());
        let u = SmashElement::single(vec![3], alg.vertex("u").unwrap());
        assert_eq!(smash_multiply(&u, &u, &w).unwrap(), u);
    }

    #[test]
    fn laurent_cover_checks() {
        let h = samples::laurent();
        let w = WeightMap::standard(&h);
        let r = verify_cover_isomorphism(&h, &w, &DegreeWindow::new(1, 2).unwrap(), Field::Rationals, 20, 7).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.cover_edges, 4);
    }

    #[test]
    fn corrupted_weights_rejected() {
        let h = samples::two_by_two();
        let bad = WeightMap::from_table(1, vec![vec![vec![vec![0], vec![0]], vec![vec![0], vec![1]]]]);
        assert!(matches!(
            verify_cover_isomorphism(&h, &bad, &DegreeWindow::new(1, 1).unwrap(), Field::Rationals, 5, 1),
            Err(Error::InadmissibleWeight(_))
        ));
    }
}
