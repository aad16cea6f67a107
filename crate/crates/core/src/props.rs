//! Size conditions on hyperedges, connectivity, the length valuation and the
//! derived ring-theoretic property report.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Element;
use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionsProfile {
    /// Every hyperedge has `|s|, |r| >= 2`.
    pub lv: bool,
    /// Some hyperedge has `|s|, |r| >= 2`.
    pub a: bool,
    /// Some hyperedge has `|s|, |r| >= 2` and either a repeated vertex in `s` or `r`,
    /// or `s` and `r` are sets with a common vertex.
    pub a_prime: bool,
    /// Every hyperedge has `|s|, |r| >= 2` or `|s| = |r| = 1`.
    pub b: bool,
    /// First counterexample to `lv`.
    pub lv_witness: Option<String>,
    /// First hyperedge satisfying the size condition of `a`.
    pub a_witness: Option<String>,
    pub a_prime_witness: Option<String>,
    /// First counterexample to `b`.
    pub b_witness: Option<String>,
}

fn big(e: &Hyperedge) -> bool {
    e.source.len() >= 2 && e.range.len() >= 2
}

fn is_set(vs: &[VertexId]) -> bool {
    let s: BTreeSet<_> = vs.iter().collect();
    s.len() == vs.len()
}

fn a_prime_edge(e: &Hyperedge) -> bool {
    if !big(e) {
        return false;
    }
    let (s_set, r_set) = (is_set(&e.source), is_set(&e.range));
    if !s_set || !r_set {
        return true;
    }
    e.source.iter().any(|v| e.range.contains(v))
}

pub fn check_conditions(h: &Hypergraph) -> ConditionsProfile {
    let edges = h.edges();
    let name = |e: &Hyperedge| e.name.clone();
    let lv_witness = edges.iter().find(|e| !big(e)).map(name);
    let a_witness = edges.iter().find(|e| big(e)).map(name);
    let a_prime_witness = edges.iter().find(|e| a_prime_edge(e)).map(name);
    let b_witness = edges
        .iter()
        .find(|e| !(big(e) || (e.source.len() == 1 && e.range.len() == 1)))
        .map(name);
    ConditionsProfile {
        lv: lv_witness.is_none(),
        a: a_witness.is_some(),
        a_prime: a_prime_witness.is_some(),
        b: b_witness.is_none(),
        lv_witness,
        a_witness,
        a_prime_witness,
        b_witness,
    }
}

/// Weak connectivity: vertices linked by sharing a hyperedge (as source or range).
pub fn is_connected(h: &Hypergraph) -> bool {
    let n = h.vertex_count();
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in h.edges() {
        let first = e.source[0].0;
        for v in e.source.iter().chain(&e.range) {
            let (a, b) = (find(&mut parent, first), find(&mut parent, v.0));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

/// Maximum word length in the normal form; `None` is `-∞` (the zero element).
pub fn local_valuation(a: &Element) -> Option<usize> {
    a.valuation()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness")]
pub enum Verdict {
    Yes(String),
    No(String),
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "Yes",
            Verdict::No(_) => "No",
            Verdict::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyEntry {
    pub property: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub entries: Vec<PropertyEntry>,
}

pub const PROPERTIES: [&str; 11] = [
    "domain",
    "prime",
    "nonsingular",
    "semiprimitive",
    "vonNeumannRegular",
    "simple",
    "finiteDimensional",
    "leftArtinian",
    "rightArtinian",
    "leftNoetherian",
    "rightNoetherian",
];

impl PropertyReport {
    pub fn get(&self, property: &str) -> Option<&PropertyEntry> {
        self.entries.iter().find(|e| e.property == property)
    }

    pub fn verdict(&self, property: &str) -> Option<&Verdict> {
        self.get(property).map(|e| &e.verdict)
    }
}

const CITE_LV_NONSINGULAR: &str =
    "every hyperedge has |s|,|r| >= 2, so the length valuation is a local valuation; such algebras are nonsingular";
const CITE_LV_PRIME: &str =
    "every hyperedge has |s|,|r| >= 2 and the hypergraph is connected; the local valuation makes the algebra prime";
const CITE_LV_SEMIPRIMITIVE: &str =
    "every hyperedge has |s|,|r| >= 2 and the hypergraph is connected; prime with a local valuation implies semiprimitive";
const CITE_LV_VNR: &str =
    "every hyperedge has |s|,|r| >= 2 and a hyperedge exists; a local valuation with nonzero values rules out von Neumann regularity";
const CITE_A: &str =
    "some hyperedge has |s|,|r| >= 2: the algebra has infinitely many ideals, infinite dimension, is not Artinian and not von Neumann regular";
const CITE_A_PRIME: &str =
    "some hyperedge has |s|,|r| >= 2 and a repeated vertex or a source/range overlap: the algebra is neither left nor right Noetherian";
const CITE_DOMAIN: &str =
    "the algebra is a domain iff there is one vertex and every hyperedge has |s|,|r| >= 2 or |s| = |r| = 1";
const CITE_NONE: &str = "no criterion applies";

pub fn property_report(h: &Hypergraph) -> PropertyReport {
    let c = check_conditions(h);
    let connected = is_connected(h);
    let has_edges = h.edge_count() > 0;
    let mut entries = Vec::new();
    let unknown = || (Verdict::Unknown, CITE_NONE.to_string());
    let lv_note = || "all hyperedges have |s|,|r| >= 2".to_string();
    let a_note = || format!("hyperedge `{}`", c.a_witness.clone().unwrap_or_default());
    let ap_note = || format!("hyperedge `{}`", c.a_prime_witness.clone().unwrap_or_default());
    for property in PROPERTIES {
        let (verdict, citation) = match property {
            "domain" => {
                let n = h.vertex_count();
                if n == 1 && c.b {
                    (
                        Verdict::Yes("|H0| = 1 and condition B holds".to_string()),
                        CITE_DOMAIN.into(),
                    )
                } else if n != 1 {
                    (Verdict::No(format!("|H0| = {n}")), CITE_DOMAIN.into())
                } else {
                    (
                        Verdict::No(format!(
                            "condition B fails at hyperedge `{}`",
                            c.b_witness.clone().unwrap_or_default()
                        )),
                        CITE_DOMAIN.into(),
                    )
                }
            }
            "nonsingular" if c.lv => (Verdict::Yes(lv_note()), CITE_LV_NONSINGULAR.into()),
            "prime" if c.lv && connected => (Verdict::Yes(lv_note() + "; connected"), CITE_LV_PRIME.into()),
            "semiprimitive" if c.lv && connected => {
                (Verdict::Yes(lv_note() + "; connected"), CITE_LV_SEMIPRIMITIVE.into())
            }
            "vonNeumannRegular" if c.lv && has_edges => (Verdict::No(lv_note()), CITE_LV_VNR.into()),
            "vonNeumannRegular" | "simple" | "finiteDimensional" | "leftArtinian" | "rightArtinian" if c.a => {
                (Verdict::No(a_note()), CITE_A.into())
            }
            "leftNoetherian" | "rightNoetherian" if c.a_prime => (Verdict::No(ap_note()), CITE_A_PRIME.into()),
            _ => unknown(),
        };
        entries.push(PropertyEntry {
            property,
            verdict,
            citation,
        });
    }
    PropertyReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LeavittAlgebra;
    use crate::hypergraph::samples;
    use crate::scalar::Field;

    #[test]
    fn conditions_examples() {
        let c = check_conditions(&samples::two_by_two());
        assert_eq!((c.lv, c.a, c.a_prime, c.b), (true, true, false, true));
        assert!(check_conditions(&samples::leavitt_2_3()).a_prime);
        let l = check_conditions(&samples::laurent());
        assert_eq!((l.lv, l.b), (false, true));
        assert_eq!(l.lv_witness.as_deref(), Some("l"));
    }

    #[test]
    fn a_prime_on_sets_with_overlap() {
        let h = Hypergraph::from_parts(&["x", "y", "z"], &[("e", &["x", "y"], &["y", "z"])]).unwrap();
        assert!(check_conditions(&h).a_prime);
        let k = Hypergraph::from_parts(&["x", "y", "z", "w"], &[("e", &["x", "y"], &["z", "w"])]).unwrap();
        assert!(!check_conditions(&k).a_prime);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&samples::two_by_two()));
        assert!(is_connected(&samples::point()));
        let two = Hypergraph::from_parts(&["a", "b"], &[]).unwrap();
        assert!(!is_connected(&two));
    }

    #[test]
    fn valuation_examples() {
        let alg = LeavittAlgebra::new(samples::two_by_two(), Field::Rationals);
        assert_eq!(local_valuation(&alg.zero()), None);
        assert_eq!(local_valuation(&alg.parse("v1").unwrap()), Some(0));
        assert_eq!(local_valuation(&alg.parse("h[1,1] * h*[1,1]").unwrap()), Some(2));
        assert_eq!(local_valuation(&alg.parse("h[1,2]").unwrap()), Some(1));
    }

    #[test]
    fn reports() {
        let r = property_report(&samples::two_by_two());
        let label = |p: &str| r.verdict(p).unwrap().label();
        assert_eq!(label("prime"), "Yes");
        assert_eq!(label("nonsingular"), "Yes");
        assert_eq!(label("semiprimitive"), "Yes");
        assert_eq!(label("vonNeumannRegular"), "No");
        assert_eq!(label("simple"), "No");
        assert_eq!(label("domain"), "No");
        assert_eq!(label("leftNoetherian"), "Unknown");
        let l = property_report(&samples::laurent());
        assert_eq!(l.verdict("domain").unwrap().label(), "Yes");
        let g = property_report(&samples::leavitt_2_3());
        assert_eq!(g.verdict("leftNoetherian").unwrap().label(), "No");
        assert_eq!(g.verdict("rightNoetherian").unwrap().label(), "No");
        assert_eq!(g.verdict("domain").unwrap().label(), "Yes");
        for e in r.entries.iter().chain(&g.entries) {
            assert!(!e.citation.is_empty());
        }
    }
}
