//! Commutative monoid presentations: the V-monoid of a hypergraph, its group
//! completion, a bounded word-problem search, and the graded (covering) versions.

mod graded;
mod smash;
pub mod snf;

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result, StepBudget};
use crate::hypergraph::{EdgeSpec, Hypergraph, VertexId};
use crate::lexer::is_valid_name;

pub use graded::{cover_presentation, covering_hypergraph, graded_monoid_presentation, graded_name, DegreeWindow};
pub use smash::{smash_multiply, verify_cover_isomorphism, CoverReport, SmashElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// Name of the hyperedge the relation comes from.
    pub name: String,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

fn multiplicities(vs: &[VertexId], n: usize) -> Vec<u64> {
    let mut m = vec![0; n];
    for v in vs {
        m[v.0] += 1;
    }
    m
}

fn render_side(gens: &[String], side: &[u64]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .zip(side)
        .filter(|(_, &k)| k > 0)
        .map(|(g, &k)| if k == 1 { g.clone() } else { format!("{k}{g}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl MonoidPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        for r in &relations {
            for side in [&r.lhs, &r.rhs] {
                if side.len() != generators.len() {
                    return Err(Error::DimensionMismatch {
                        expected: generators.len(),
                        got: side.len(),
                    });
                }
            }
        }
        Ok(MonoidPresentation { generators, relations })
    }

    /// `v1 + v2 = w1 + w2`
    pub fn render_relation(&self, r: &Relation) -> String {
        format!(
            "{} = {}",
            render_side(&self.generators, &r.lhs),
            render_side(&self.generators, &r.rhs)
        )
    }

    /// `v1 + 2w2`; the zero vector renders as `0`.
    pub fn render_vector(&self, v: &[u64]) -> String {
        render_side(&self.generators, v)
    }

    /// Equal generator sets and equal relation multisets, ignoring order and names.
    pub fn same_up_to_ordering(&self, other: &MonoidPresentation) -> bool {
        if self.generators.len() != other.generators.len() {
            return false;
        }
        let pos: HashMap<&str, usize> = other
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        let mut perm = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            match pos.get(g.as_str()) {
                Some(&i) => perm.push(i),
                None => return false,
            }
        }
        let key = |lhs: Vec<u64>, rhs: Vec<u64>| (lhs, rhs);
        let mut ours: Vec<_> = self
            .relations
            .iter()
            .map(|r| {
                let mut l = vec![0; perm.len()];
                let mut s = vec![0; perm.len()];
                for (k, &p) in perm.iter().enumerate() {
                    l[p] = r.lhs[k];
                    s[p] = r.rhs[k];
                }
                key(l, s)
            })
            .collect();
        let mut theirs: Vec<_> = other
            .relations
            .iter()
            .map(|r| key(r.lhs.clone(), r.rhs.clone()))
            .collect();
        ours.sort();
        theirs.sort();
        ours == theirs
    }

    /// Parses a vector like `v1 + 2 w2` or `0` over the generators.
    pub fn parse_vector(&self, text: &str) -> Result<Vec<u64>> {
        let mut v = vec![0; self.generators.len()];
        let text = text.trim();
        if text == "0" {
            return Ok(v);
        }
        for part in text.split('+') {
            let tokens: Vec<&str> = part.split_whitespace().collect();
            let (k, name) = match tokens.as_slice() {
                [name] => {
                    let split = name.find(|c: char| !c.is_ascii_digit()).unwrap_or(name.len());
                    if split == 0 {
                        (1, *name)
                    } else {
                        let k: u64 = name[..split]
                            .parse()
                            .map_err(|_| Error::InvalidPresentation(format!("bad term `{part}`")))?;
                        (k, &name[split..])
                    }
                }
                [k, name] => (
                    k.parse()
                        .map_err(|_| Error::InvalidPresentation(format!("bad coefficient in `{part}`")))?,
                    *name,
                ),
                _ => return Err(Error::InvalidPresentation(format!("bad term `{}`", part.trim()))),
            };
            let idx = self
                .generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            v[idx] += k;
        }
        Ok(v)
    }
}

/// Generators `H^0`, one relation `Σ s(h) = Σ r(h)` per hyperedge.
pub fn v_monoid_presentation(h: &Hypergraph) -> MonoidPresentation {
    let n = h.vertex_count();
    MonoidPresentation {
        generators: h.vertex_names().to_vec(),
        relations: h
            .edges()
            .iter()
            .map(|e| Relation {
                name: e.name.clone(),
                lhs: multiplicities(&e.source, n),
                rhs: multiplicities(&e.range, n),
            })
            .collect(),
    }
}

/// One vertex per generator and one hyperedge per relation, with the relation sides
/// as source and range multisets (listed in generator order).
pub fn monoid_to_hypergraph(p: &MonoidPresentation) -> Result<Hypergraph> {
    let mut specs = Vec::new();
    let mut used: Vec<String> = Vec::new();
    for (k, r) in p.relations.iter().enumerate() {
        let expand = |side: &[u64]| -> Vec<String> {
            p.generators
                .iter()
                .zip(side)
                .flat_map(|(g, &m)| std::iter::repeat_n(g.clone(), m as usize))
                .collect()
        };
        let source = expand(&r.lhs);
        let range = expand(&r.rhs);
        if source.is_empty() || range.is_empty() {
            return Err(Error::InvalidPresentation(format!(
                "relation `{}` has a zero side",
                p.render_relation(r)
            )));
        }
        let name = if is_valid_name(&r.name) && !used.contains(&r.name) && !p.generators.contains(&r.name) {
            r.name.clone()
        } else {
            format!("h{}", k + 1)
        };
        used.push(name.clone());
        specs.push(EdgeSpec { name, source, range });
    }
    Hypergraph::new(p.generators.clone(), specs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub relation: usize,
    pub direction: Direction,
    pub result: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "trace", rename_all = "lowercase")]
pub enum BoundedEquality {
    Equal(Vec<TraceStep>),
    Unknown,
}

/// Breadth-first search for a chain of relation applications `x + lhs <-> x + rhs`
/// from `a` to `b` through vectors with all coordinates `<= bound`.
///
/// `Equal` carries a shortest trace; `Unknown` means no chain inside the bound.
pub fn monoid_equal_bounded(
    p: &MonoidPresentation,
    a: &[u64],
    b: &[u64],
    bound: u64,
    budget: StepBudget,
) -> Result<BoundedEquality> {
    let n = p.generators.len();
    for v in [a, b] {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    if a == b {
        return Ok(BoundedEquality::Equal(vec![]));
    }
    // vector -> (predecessor, relation, direction); None for the start
    type Parent = Option<(Vec<u64>, usize, Direction)>;
    let mut parent: HashMap<Vec<u64>, Parent> = HashMap::new();
    parent.insert(a.to_vec(), None);
    let mut queue = VecDeque::from([a.to_vec()]);
    let mut steps = 0u64;
    while let Some(x) = queue.pop_front() {
        steps += 1;
        budget.check(steps)?;
        for (k, r) in p.relations.iter().enumerate() {
            for (dir, from, to) in [
                (Direction::Forward, &r.lhs, &r.rhs),
                (Direction::Backward, &r.rhs, &r.lhs),
            ] {
                if x.iter().zip(from).any(|(xi, fi)| xi < fi) {
                    continue;
                }
                let y: Vec<u64> = (0..n).map(|i| x[i] - from[i] + to[i]).collect();
                if y.iter().any(|&c| c > bound) || parent.contains_key(&y) {
                    continue;
                }
                parent.insert(y.clone(), Some((x.clone(), k, dir)));
                if y == b {
                    let mut trace = Vec::new();
                    let mut cur = y;
                    while let Some(Some((prev, rel, d))) = parent.get(&cur).cloned() {
                        trace.push(TraceStep {
                            relation: rel,
                            direction: d,
                            result: cur,
                        });
                        cur = prev;
                    }
                    trace.reverse();
                    return Ok(BoundedEquality::Equal(trace));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(BoundedEquality::Unknown)
}

/// Applies a trace to `a`; `None` if some step does not apply.
pub fn replay_trace(p: &MonoidPresentation, a: &[u64], trace: &[TraceStep]) -> Option<Vec<u64>> {
    let mut x = a.to_vec();
    for step in trace {
        let r = p.relations.get(step.relation)?;
        let (from, to) = match step.direction {
            Direction::Forward => (&r.lhs, &r.rhs),
            Direction::Backward => (&r.rhs, &r.lhs),
        };
        if x.iter().zip(from).any(|(xi, fi)| xi < fi) {
            return None;
        }
        x = x.iter().zip(from).zip(to).map(|((xi, f), t)| xi - f + t).collect();
        if x != step.result {
            return None;
        }
    }
    Some(x)
}

fn bigints_as_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// The group completion `Z^n / <lhs - rhs>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInvariant {
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    #[serde(serialize_with = "bigints_as_strings")]
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for GroupInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn group_completion(p: &MonoidPresentation) -> GroupInvariant {
    let rows: Vec<Vec<BigInt>> = p
        .relations
        .iter()
        .map(|r| {
            r.lhs
                .iter()
                .zip(&r.rhs)
                .map(|(&l, &s)| BigInt::from(l) - BigInt::from(s))
                .collect()
        })
        .collect();
    let (free_rank, torsion) = snf::cokernel(&rows, p.generators.len());
    GroupInvariant { free_rank, torsion }
}

/// Presentation relations rendered as `lhs = rhs`, keyed by relation name.
pub fn relation_table(p: &MonoidPresentation) -> BTreeMap<String, String> {
    p.relations
        .iter()
        .map(|r| (r.name.clone(), p.render_relation(r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::samples;

    #[test]
    fn presentations() {
        let p = v_monoid_presentation(&samples::two_by_two());
        assert_eq!(p.generators, ["v1", "v2", "w1", "w2"]);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.render_relation(&p.relations[0]), "v1 + v2 = w1 + w2");
        let g = v_monoid_presentation(&samples::leavitt_2_3());
        assert_eq!(g.render_relation(&g.relations[0]), "2u = 3u");
        assert!(v_monoid_presentation(&samples::point()).relations.is_empty());
    }

    #[test]
    fn to_hypergraph() {
        let p = MonoidPresentation::new(
            vec!["x".into(), "y".into()],
            vec![Relation {
                name: "r".into(),
                lhs: vec![1, 1],
                rhs: vec![0, 2],
            }],
        )
        .unwrap();
        let h = monoid_to_hypergraph(&p).unwrap();
        assert_eq!(h.serialize(), "vertices: x y\nedge r: x y -> y y\n");
        for hg in [samples::two_by_two(), samples::leavitt_2_3()] {
            assert_eq!(monoid_to_hypergraph(&v_monoid_presentation(&hg)).unwrap(), hg);
        }
        let bad = MonoidPresentation::new(
            vec!["x".into()],
            vec![Relation {
                name: "r".into(),
                lhs: vec![1],
                rhs: vec![0],
            }],
        )
        .unwrap();
        assert!(matches!(monoid_to_hypergraph(&bad), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn bounded_equality() {
        let p = v_monoid_presentation(&samples::two_by_two());
        match monoid_equal_bounded(&p, &[1, 1, 0, 0], &[0, 0, 1, 1], 5, StepBudget::UNLIMITED).unwrap() {
            BoundedEquality::Equal(t) => assert_eq!(t.len(), 1),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            monoid_equal_bounded(&p, &[1, 0, 0, 0], &[1, 0, 0, 0], 0, StepBudget::UNLIMITED).unwrap(),
            BoundedEquality::Equal(vec![])
        );
        assert_eq!(
            monoid_equal_bounded(&p, &[1, 0, 0, 0], &[0, 0, 1, 0], 5, StepBudget::UNLIMITED).unwrap(),
            BoundedEquality::Unknown
        );
        let g = v_monoid_presentation(&samples::leavitt_2_3());
        match monoid_equal_bounded(&g, &[2], &[5], 10, StepBudget::UNLIMITED).unwrap() {
            BoundedEquality::Equal(t) => {
                assert_eq!(t.len(), 3);
                assert_eq!(replay_trace(&g, &[2], &t), Some(vec![5]));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            monoid_equal_bounded(&g, &[2, 1], &[5], 10, StepBudget::UNLIMITED),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn completions() {
        let p = v_monoid_presentation(&samples::two_by_two());
        let k = group_completion(&p);
        assert_eq!((k.free_rank, k.torsion.len()), (3, 0));
        assert_eq!(k.to_string(), "Z^3");
        let g = group_completion(&v_monoid_presentation(&samples::leavitt_2_3()));
        assert_eq!((g.free_rank, g.torsion.len()), (0, 0));
        let f = group_completion(&v_monoid_presentation(&samples::leavitt_1_2()));
        assert_eq!(f.to_string(), "0");
        let free = group_completion(&v_monoid_presentation(
            &Hypergraph::from_parts(&["a", "b"], &[]).unwrap(),
        ));
        assert_eq!(free.free_rank, 2);
        // L(1,3): u = 3u gives Z/2.
        let l13 = Hypergraph::from_parts(&["u"], &[("f", &["u"], &["u", "u", "u"])]).unwrap();
        assert_eq!(group_completion(&v_monoid_presentation(&l13)).to_string(), "Z/2");
    }

    #[test]
    fn vector_parsing() {
        let p = v_monoid_presentation(&samples::two_by_two());
        assert_eq!(p.parse_vector("v1 + 2 w2").unwrap(), vec![1, 0, 0, 2]);
        assert_eq!(p.parse_vector("3v2").unwrap(), vec![0, 3, 0, 0]);
        assert_eq!(p.parse_vector("0").unwrap(), vec![0; 4]);
        assert!(p.parse_vector("x").is_err());
    }
}
