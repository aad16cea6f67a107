use std::collections::BTreeMap;

use serde::Serialize;

use super::{EdgeId, Hypergraph, VertexId};
use crate::error::{Error, Result};

/// A pair of maps `vertices(H) -> vertices(I)` and `hyperedges(H) -> hyperedges(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphHom {
    /// Indexed by the domain's vertex ids.
    pub vertex_map: Vec<VertexId>,
    /// Indexed by the domain's edge ids.
    pub edge_map: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCheck {
    pub is_homomorphism: bool,
    pub first_violation: Option<String>,
}

impl HypergraphHom {
    pub fn identity(h: &Hypergraph) -> Self {
        HypergraphHom {
            vertex_map: h.vertex_ids().collect(),
            edge_map: h.edge_ids().collect(),
        }
    }

    /// Builds the maps from name pairs; both maps must be total on `domain`.
    pub fn from_names(
        domain: &Hypergraph,
        target: &Hypergraph,
        vertices: &[(&str, &str)],
        edges: &[(&str, &str)],
    ) -> Result<Self> {
        let mut vertex_map = vec![None; domain.vertex_count()];
        for (a, b) in vertices {
            let from = domain.vertex_id(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let to = target.vertex_id(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            vertex_map[from.0] = Some(to);
        }
        let mut edge_map = vec![None; domain.edge_count()];
        for (a, b) in edges {
            let from = domain.edge_id(a).ok_or_else(|| Error::UnknownEdge(a.to_string()))?;
            let to = target.edge_id(b).ok_or_else(|| Error::UnknownEdge(b.to_string()))?;
            edge_map[from.0] = Some(to);
        }
        let vertex_map = vertex_map
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::InvalidHomomorphism(format!("vertex `{}` unmapped", domain.vertex_names()[i])))
            })
            .collect::<Result<_>>()?;
        let edge_map = edge_map
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| Error::InvalidHomomorphism(format!("edge `{}` unmapped", domain.edges()[i].name)))
            })
            .collect::<Result<_>>()?;
        Ok(HypergraphHom { vertex_map, edge_map })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HypergraphHom) -> HypergraphHom {
        HypergraphHom {
            vertex_map: self.vertex_map.iter().map(|v| other.vertex_map[v.0]).collect(),
            edge_map: self.edge_map.iter().map(|e| other.edge_map[e.0]).collect(),
        }
    }

    /// For each source (resp. range) position of `h`, the position in `φ(h)` it is sent
    /// to. Positions holding the same vertex are matched in order. `None` when the
    /// multisets differ.
    pub(crate) fn index_matching(
        &self,
        domain: &Hypergraph,
        target: &Hypergraph,
        edge: EdgeId,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let h = domain.edge(edge);
        let image = target.edge(self.edge_map[edge.0]);
        let matching = |from: &[VertexId], to: &[VertexId]| -> Option<Vec<usize>> {
            if from.len() != to.len() {
                return None;
            }
            let mut used = vec![false; to.len()];
            from.iter()
                .map(|v| {
                    let want = self.vertex_map[v.0];
                    let pos = (0..to.len()).find(|&k| !used[k] && to[k] == want)?;
                    used[pos] = true;
                    Some(pos)
                })
                .collect()
        };
        Some((matching(&h.source, &image.source)?, matching(&h.range, &image.range)?))
    }
}

fn multiset<'a>(vs: impl Iterator<Item = &'a VertexId>) -> BTreeMap<VertexId, usize> {
    let mut m = BTreeMap::new();
    for v in vs {
        *m.entry(*v).or_insert(0) += 1;
    }
    m
}

/// Checks `s(φ(h)) = φ(s(h))` and `r(φ(h)) = φ(r(h))` as multisets for every hyperedge.
pub fn check_homomorphism(phi: &HypergraphHom, domain: &Hypergraph, target: &Hypergraph) -> HomCheck {
    let fail = |msg: String| HomCheck {
        is_homomorphism: false,
        first_violation: Some(msg),
    };
    if phi.vertex_map.len() != domain.vertex_count() || phi.edge_map.len() != domain.edge_count() {
        return fail("maps are not total on the domain".into());
    }
    if phi.vertex_map.iter().any(|v| v.0 >= target.vertex_count())
        || phi.edge_map.iter().any(|e| e.0 >= target.edge_count())
    {
        return fail("map leaves the target".into());
    }
    for (idx, h) in domain.edges().iter().enumerate() {
        let image = target.edge(phi.edge_map[idx]);
        let names = |m: &BTreeMap<VertexId, usize>| -> String {
            let parts: Vec<String> = m
                .iter()
                .map(|(v, k)| format!("{}^{}", target.vertex_name(*v), k))
                .collect();
            format!("{{{}}}", parts.join(", "))
        };
        for (label, ours, theirs) in [("s", &h.source, &image.source), ("r", &h.range, &image.range)] {
            let mapped = multiset(ours.iter().map(|v| &phi.vertex_map[v.0]));
            let expected = multiset(theirs.iter());
            if mapped != expected {
                return fail(format!(
                    "{label}({}) = {} but φ({label}({})) = {}",
                    image.name,
                    names(&expected),
                    h.name,
                    names(&mapped)
                ));
            }
        }
    }
    HomCheck {
        is_homomorphism: true,
        first_violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::samples;
    use super::*;

    #[test]
    fn identity_is_valid() {
        let h = samples::two_by_two();
        assert!(check_homomorphism(&HypergraphHom::identity(&h), &h, &h).is_homomorphism);
    }

    #[test]
    fn two_cycle_folds_onto_laurent() {
        let c = samples::two_cycle();
        let l = samples::laurent();
        let phi = HypergraphHom::from_names(&c, &l, &[("u1", "u"), ("u2", "u")], &[("l1", "l"), ("l2", "l")]).unwrap();
        assert!(check_homomorphism(&phi, &c, &l).is_homomorphism);
    }

    #[test]
    fn laurent_to_leavitt_fails_on_range() {
        let l = samples::laurent();
        let f = samples::leavitt_1_2();
        let phi = HypergraphHom::from_names(&l, &f, &[("u", "u")], &[("l", "f")]).unwrap();
        let check = check_homomorphism(&phi, &l, &f);
        assert!(!check.is_homomorphism);
        assert!(check.first_violation.unwrap().starts_with("r(f)"));
    }

    #[test]
    fn composition_of_valid_maps_is_valid() {
        let c = samples::two_cycle();
        let l = samples::laurent();
        let fold = HypergraphHom::from_names(&c, &l, &[("u1", "u"), ("u2", "u")], &[("l1", "l"), ("l2", "l")]).unwrap();
        let id = HypergraphHom::identity(&l);
        assert!(check_homomorphism(&fold.then(&id), &c, &l).is_homomorphism);
    }

    #[test]
    fn matching_follows_multiset_positions() {
        let a = Hypergraph::from_parts(&["x", "y"], &[("e", &["x", "y"], &["y"])]).unwrap();
        let b = Hypergraph::from_parts(&["x", "y"], &[("e", &["y", "x"], &["y"])]).unwrap();
        let phi = HypergraphHom::from_names(&a, &b, &[("x", "x"), ("y", "y")], &[("e", "e")]).unwrap();
        assert!(check_homomorphism(&phi, &a, &b).is_homomorphism);
        assert_eq!(phi.index_matching(&a, &b, EdgeId(0)), Some((vec![1, 0], vec![0])));
    }
}
