use std::sync::Arc;

use super::{Element, Generator, LeavittAlgebra};
use crate::error::{Error, Result};
use crate::hypergraph::{check_homomorphism, HypergraphHom};
use crate::letters::Letter;

/// The algebra map induced by a hypergraph homomorphism.
///
/// Vertices go to their images and `h[i,j]` to the letter of `φ(h)` at the matched
/// positions. When `φ` preserves positions this is `h[i,j] ↦ φ(h)[i,j]`; otherwise
/// positions holding equal vertices are matched in order.
pub fn apply_homomorphism(phi: &HypergraphHom, target: &Arc<LeavittAlgebra>, a: &Element) -> Result<Element> {
    let domain = a.algebra().graph();
    if a.algebra().field() != target.field() {
        return Err(Error::AlgebraMismatch);
    }
    let check = check_homomorphism(phi, domain, target.graph());
    if !check.is_homomorphism {
        return Err(Error::InvalidHomomorphism(check.first_violation.unwrap_or_default()));
    }
    let matchings: Vec<(Vec<usize>, Vec<usize>)> = domain
        .edge_ids()
        .map(|e| {
            phi.index_matching(domain, target.graph(), e)
                .expect("homomorphism check guarantees equal multisets")
        })
        .collect();
    let map = |g: &Generator| -> Generator {
        match g {
            Generator::Vertex(v) => Generator::Vertex(phi.vertex_map[v.0]),
            Generator::Letter(l) => {
                let (si, rj) = &matchings[l.edge.0];
                Generator::Letter(Letter {
                    edge: phi.edge_map[l.edge.0],
                    kind: l.kind,
                    i: si[l.i - 1] + 1,
                    j: rj[l.j - 1] + 1,
                })
            }
        }
    };
    let raw: Vec<_> = a
        .terms()
        .iter()
        .map(|(w, c)| (w.to_raw().iter().map(map).collect(), c.clone()))
        .collect();
    target.normal_form(&raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{samples, Hypergraph};
    use crate::scalar::Field;

    #[test]
    fn identity_fixes_elements() {
        let alg = LeavittAlgebra::new(samples::two_by_two(), Field::Rationals);
        let a = alg.parse("v1 + 2 * h[1,2] * h*[2,2] - h*[1,1]").unwrap();
        let id = HypergraphHom::identity(alg.graph());
        assert_eq!(apply_homomorphism(&id, &alg, &a).unwrap(), a);
    }

    #[test]
    fn fold_two_cycle() {
        let c = LeavittAlgebra::new(samples::two_cycle(), Field::Rationals);
        let l = LeavittAlgebra::new(samples::laurent(), Field::Rationals);
        let phi = HypergraphHom::from_names(
            c.graph(),
            l.graph(),
            &[("u1", "u"), ("u2", "u")],
            &[("l1", "l"), ("l2", "l")],
        )
        .unwrap();
        let x = c.parse("l1[1,1]").unwrap();
        assert_eq!(apply_homomorphism(&phi, &l, &x).unwrap(), l.parse("l[1,1]").unwrap());
        let y = c.parse("l1[1,1] * l2[1,1] + u1").unwrap();
        assert_eq!(
            apply_homomorphism(&phi, &l, &y).unwrap().to_string(),
            "u + l[1,1] l[1,1]"
        );
    }

    #[test]
    fn edgeless_inclusion() {
        let h = samples::two_by_two();
        let sub = h.subhypergraph(&["v1", "w2"], &[]).unwrap();
        let s = LeavittAlgebra::new(sub.clone(), Field::Rationals);
        let big = LeavittAlgebra::new(h.clone(), Field::Rationals);
        let phi = HypergraphHom {
            vertex_map: vec![h.vertex_id("v1").unwrap(), h.vertex_id("w2").unwrap()],
            edge_map: vec![],
        };
        let x = s.parse("3 * v1 - w2").unwrap();
        assert_eq!(apply_homomorphism(&phi, &big, &x).unwrap().to_string(), "3 v1 - w2");
    }

    #[test]
    fn invalid_map_rejected() {
        let l = LeavittAlgebra::new(samples::laurent(), Field::Rationals);
        let f: Hypergraph = samples::leavitt_1_2();
        let fa = LeavittAlgebra::new(f.clone(), Field::Rationals);
        let phi = HypergraphHom::from_names(l.graph(), &f, &[("u", "u")], &[("l", "f")]).unwrap();
        let x = l.parse("u").unwrap();
        assert!(matches!(
            apply_homomorphism(&phi, &fa, &x),
            Err(Error::InvalidHomomorphism(_))
        ));
    }
}
